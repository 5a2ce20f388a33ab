//! Oracle-versus-fast-path agreement on random functions and hand cases.

use dlct::field::FieldCtx;
use dlct::spectra::{autocorrelation_table, ddt, dlct_direct, walsh_table, Spectrum};
use dlct::vbf::dot;
use dlct::Vbf;
use dlct_oracle::{naive_autocorrelation, naive_dlct, naive_walsh};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vbf(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Vbf {
    let lut = (0..1u32 << n).map(|_| rng.gen::<u32>() & ((1 << m) - 1)).collect();
    Vbf::from_lut(n, m, lut).unwrap()
}

#[test]
fn walsh_tables_match_the_oracle_on_random_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..20 {
        let f = random_vbf(6, 6, &mut rng);
        let table = walsh_table(&f).unwrap();
        for u in 0..64u32 {
            for v in 0..64u32 {
                assert_eq!(table.get(u, v), naive_walsh(&f, u, v).unwrap());
            }
        }
    }
}

#[test]
fn dlct_matches_the_oracle_on_random_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10 {
        let n = rng.gen_range(2..=7);
        let m = rng.gen_range(1..=7);
        let f = random_vbf(n, m, &mut rng);
        let table = dlct_direct(&f).unwrap();
        for u in 0..1u32 << n {
            for v in 0..1u32 << m {
                assert_eq!(table.get(u, v), naive_dlct(&f, u, v).unwrap());
            }
        }
    }
}

#[test]
fn linear_component_orthogonality() {
    // For linear F and v.L + u a nonzero form, the Walsh sum vanishes.
    let rotate = |x: u32| ((x << 1) & 15) | (x >> 3);
    let f = Vbf::from_lut(4, 4, (0..16).map(rotate).collect()).unwrap();
    for u in 0..16u32 {
        for v in 0..16u32 {
            let w = naive_walsh(&f, u, v).unwrap();
            assert!(w == 0 || w == 16, "linear maps only produce 0 or full correlation");
        }
    }
}

#[test]
fn bent_product_has_flat_zero_dlct_off_the_borders() {
    let f4 = FieldCtx::new(2, None).unwrap();
    let lut = (0..16u32).map(|x| f4.mul(x & 3, x >> 2)).collect();
    let f = Vbf::from_lut(4, 2, lut).unwrap();
    for u in 1..16u32 {
        for v in 1..4u32 {
            assert_eq!(naive_dlct(&f, u, v).unwrap(), 0);
        }
    }
}

#[test]
fn autocorrelation_against_the_ddt_fourier_form() {
    // Delta(u, v) = sum over omega of (-1)^(omega . v) DDT(u, omega).
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let f = random_vbf(6, 4, &mut rng);
    let ddt_table = ddt(&f).unwrap();
    for u in 0..64u32 {
        for v in 0..16u32 {
            let fourier: i64 = (0..16u32)
                .map(|w| {
                    let sign = if dot(w, v) == 0 { 1 } else { -1 };
                    sign * ddt_table.get(u, w)
                })
                .sum();
            assert_eq!(naive_autocorrelation(&f, u, v).unwrap(), fourier);
        }
    }
}

#[test]
fn autocorrelation_oracle_matches_fast_table_and_doubles_dlct() {
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    for _ in 0..5 {
        let f = random_vbf(6, 4, &mut rng);
        let table = autocorrelation_table(&f).unwrap();
        for u in 0..64u32 {
            for v in 0..16u32 {
                let direct = naive_autocorrelation(&f, u, v).unwrap();
                assert_eq!(table.get(u, v), direct);
                assert_eq!(direct, 2 * naive_dlct(&f, u, v).unwrap());
            }
        }
        for v in 0..16u32 {
            assert_eq!(naive_autocorrelation(&f, 0, v).unwrap(), 64);
        }
    }
}

#[test]
fn oracle_spectra_reproduce_the_published_monomial_sets() {
    let f6 = FieldCtx::new(6, None).unwrap();
    let f = Vbf::from_univariate(&f6, &[(1, 13)]).unwrap();
    let mut values = Vec::new();
    for u in 1..64u32 {
        for v in 1..64u32 {
            values.push(naive_dlct(&f, u, v).unwrap());
        }
    }
    let spectrum = Spectrum::from_values(values);
    assert_eq!(spectrum.distinct_values(), vec![-16, -8, 0, 8, 16]);
    assert_eq!(spectrum.max_abs(), 16);
}
