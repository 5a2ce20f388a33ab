//! Scalar indicators, classification flags, DLU bounds, dual-function
//! identities and the monomial single-row shortcut.

use crate::catalog;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::spectra::{
    self, ddt, dlct_column, dlct_from_ddt, dlct_row, spectrum_of, walsh_table, Spectrum,
};
use crate::vbf::{BoolFun, Vbf};

/// Classification flags derived from the spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Flags {
    pub is_permutation: bool,
    pub is_apn: bool,
    pub is_bent: bool,
    pub is_plateaued: bool,
    pub is_ab: bool,
}

/// Everything `analyze` measures about one function. All values exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    /// Differential-linear uniformity: max |DLCT(u, v)| over nonzero u, v.
    pub dlu: i64,
    /// Max DDT entry over u != 0 (all v).
    pub diff_uniformity: i64,
    /// 2^(n-1) - max |W(u, v)| / 2 over v != 0.
    pub nonlinearity: i64,
    /// Max |autocorrelation| over nonzero u, v; always 2 * dlu.
    pub absolute_indicator: i64,
    /// Sum of squared autocorrelation over all (u, v).
    pub sum_of_squares: i64,
    pub flags: Flags,
    /// Per-component Walsh amplitude 2^(r_v), indexed by v - 1, when every
    /// component is plateaued.
    pub amplitudes: Option<Vec<i64>>,
}

/// Distinct nonzero |W| values of one Walsh column; `None` marks more than
/// one amplitude (not plateaued).
fn column_amplitude(walsh: &spectra::SpectralTable, v: u32) -> Option<i64> {
    let mut amp: Option<i64> = None;
    for u in 0..walsh.rows() as u32 {
        let w = walsh.get(u, v).abs();
        if w == 0 {
            continue;
        }
        match amp {
            None => amp = Some(w),
            Some(a) if a == w => {}
            Some(_) => return None,
        }
    }
    // Parseval guarantees at least one nonzero value.
    debug_assert!(amp.is_some());
    amp
}

/// Computes all indicators and classification flags of one function.
pub fn analyze(f: &Vbf) -> Result<AnalysisReport> {
    let n = f.n();
    let m = f.m();
    let walsh = walsh_table(f)?;
    let ddt_table = ddt(f)?;
    let dlct = spectra::ddt_to_dlct(&ddt_table);

    let dlu = dlct.max_abs_over_nonzero();

    let mut diff_uniformity = 0i64;
    for u in 1..ddt_table.rows() as u32 {
        for v in 0..ddt_table.cols() as u32 {
            diff_uniformity = diff_uniformity.max(ddt_table.get(u, v));
        }
    }

    let mut walsh_max = 0i64;
    for v in 1..walsh.cols() as u32 {
        for u in 0..walsh.rows() as u32 {
            walsh_max = walsh_max.max(walsh.get(u, v).abs());
        }
    }
    let nonlinearity = (1i64 << (n - 1)) - walsh_max / 2;

    let sum_of_squares: i64 = dlct.data().iter().map(|&c| (2 * c) * (2 * c)).sum();

    let mut amplitudes = Vec::with_capacity((1 << m) - 1);
    let mut plateaued = true;
    for v in 1..walsh.cols() as u32 {
        match column_amplitude(&walsh, v) {
            Some(a) => amplitudes.push(a),
            None => {
                plateaued = false;
                break;
            }
        }
    }

    // Bent needs every nonzero component flat at |W| = 2^(n/2): the single
    // shared amplitude plus no zero anywhere in the column.
    let bent_amp = 1i64 << (n / 2);
    let is_bent = n % 2 == 0
        && (1..walsh.cols() as u32)
            .all(|v| (0..walsh.rows() as u32).all(|u| walsh.get(u, v).abs() == bent_amp));
    let ab_amp = if n % 2 == 1 { 1i64 << ((n + 1) / 2) } else { 0 };
    let is_ab = n % 2 == 1 && n == m && plateaued && amplitudes.iter().all(|&a| a == ab_amp);

    let flags = Flags {
        is_permutation: f.is_permutation(),
        is_apn: diff_uniformity == 2,
        is_bent,
        is_plateaued: plateaued,
        is_ab,
    };

    Ok(AnalysisReport {
        n,
        m,
        dlu,
        diff_uniformity,
        nonlinearity,
        absolute_indicator: 2 * dlu,
        sum_of_squares,
        flags,
        amplitudes: if plateaued { Some(amplitudes) } else { None },
    })
}

/// The generic DLU lower bound sqrt((2^(m+n+1) - 2^(2n)) / (4 (2^m - 1))),
/// kept in squared integer form so comparisons stay exact, plus the sharper
/// even-dimension bound for functions on GF(2^n) with n even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DluLowerBound {
    /// 2^(m+n+1) - 2^(2n).
    pub squared_numerator: i128,
    /// 4 (2^m - 1).
    pub squared_denominator: i128,
    /// For n = m even: the smallest even integer exceeding 2^(n/2 - 1).
    pub even_dim_bound: Option<i64>,
}

impl DluLowerBound {
    /// Exact check that `dlu` satisfies the bound: squared cross-multiplied
    /// comparison, plus the integer bound when present.
    pub fn holds_for(&self, dlu: i64) -> bool {
        let squared_ok =
            (dlu as i128) * (dlu as i128) * self.squared_denominator >= self.squared_numerator;
        let even_ok = self.even_dim_bound.map_or(true, |b| dlu >= b);
        squared_ok && even_ok
    }

    /// Floating-point view of the square-root bound, for display only.
    pub fn approx(&self) -> f64 {
        (self.squared_numerator as f64 / self.squared_denominator as f64).sqrt()
    }
}

/// Lower bound on the DLU of any (n, m)-function with m >= n - 1.
pub fn dlu_lower_bound(n: usize, m: usize) -> Result<DluLowerBound> {
    if n == 0 || m == 0 || m + 1 < n {
        return Err(Error::DomainError { n, m });
    }
    let squared_numerator = (1i128 << (m + n + 1)) - (1i128 << (2 * n));
    let squared_denominator = 4 * ((1i128 << m) - 1);
    let even_dim_bound = if n == m && n % 2 == 0 {
        // DLCT entries are even; the first even value beyond 2^(n/2 - 1).
        Some(if n >= 4 { (1i64 << (n / 2 - 1)) + 2 } else { 2 })
    } else {
        None
    };
    Ok(DluLowerBound { squared_numerator, squared_denominator, even_dim_bound })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// DLCT spectrum of a monomial x^d from the single row u = 1, at cost 2^n
/// instead of 4^n. Every DLCT value of a monomial already appears in that
/// row; when gcd(d, 2^n - 1) = 1 the column v = 1 carries the same value set
/// and is cross-checked here.
pub fn monomial_spectrum(f: &Vbf) -> Result<Spectrum> {
    let d = f.monomial_exponent().ok_or(Error::NotMonomial)?;
    let row = dlct_row(f, 1)?;
    let spectrum = Spectrum::from_values(row[1..].iter().copied());
    let order = (1u64 << f.n()) - 1;
    if gcd(d % order, order) == 1 {
        let col = dlct_column(f, 1)?;
        let col_set = Spectrum::from_values(col[1..].iter().copied()).distinct_values();
        assert_eq!(
            spectrum.distinct_values(),
            col_set,
            "row and column reductions of a monomial permutation must agree"
        );
    }
    Ok(spectrum)
}

/// For an APN function on GF(2^n): every derivative is 2-to-1, its image D_u
/// has 2^(n-1) elements, and the DLCT row at u is -1/2 times the Walsh
/// transform of the indicator of D_u, at every v != 0. (At v = 0 both sides
/// are fixed constants 2^(n-1) and 0 and the identity cannot hold.)
pub fn apn_dual_check(f: &Vbf) -> Result<bool> {
    if f.n() != f.m() {
        return Err(Error::BadParameters(format!(
            "APN dual identity needs n = m, got ({}, {})",
            f.n(),
            f.m()
        )));
    }
    let ddt_table = ddt(f)?;
    let mut uniformity = 0;
    for u in 1..ddt_table.rows() as u32 {
        for v in 0..ddt_table.cols() as u32 {
            uniformity = uniformity.max(ddt_table.get(u, v));
        }
    }
    if uniformity != 2 {
        return Err(Error::NotApn(uniformity));
    }
    let dlct = spectra::ddt_to_dlct(&ddt_table);
    let size = 1usize << f.n();
    for u in 1..size as u32 {
        // The derivative image is the support of the DDT row.
        let truth: Vec<u8> = (0..size as u32)
            .map(|w| (ddt_table.get(u, w) != 0) as u8)
            .collect();
        let image_size: u32 = truth.iter().map(|&b| b as u32).sum();
        assert_eq!(image_size as usize, size / 2, "2-to-1 derivatives cover half the space");
        let dual = BoolFun::from_truth(f.n(), truth)?;
        let walsh = spectra::walsh_spectrum(&dual);
        for v in 1..size as u32 {
            if 2 * dlct.get(u, v) != -walsh[v as usize] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For a plateaued function: each component's DLCT column is a scaled Walsh
/// transform of the dual of that component,
/// DLCT(u, v) = -2^(2 r_v - n - 2) * W(dual of f_v)(u) for u != 0,
/// compared here in cross-multiplied form so fractional scale factors stay
/// exact. AB functions additionally satisfy the plain -1/2 scaling, which is
/// asserted literally for them.
pub fn plateaued_dual_check(f: &Vbf) -> Result<bool> {
    let n = f.n();
    let walsh = walsh_table(f)?;
    let dlct = dlct_from_ddt(f)?;
    let rows = 1usize << n;
    let is_ab_candidate = n % 2 == 1 && n == f.m();
    for v in 1..walsh.cols() as u32 {
        let amp = column_amplitude(&walsh, v).ok_or(Error::NotPlateaued { v })?;
        assert!(amp.count_ones() == 1, "plateaued amplitudes are powers of two");
        let r = amp.trailing_zeros() as usize;
        let truth: Vec<u8> = (0..rows as u32).map(|u| (walsh.get(u, v) != 0) as u8).collect();
        let dual = BoolFun::from_truth(n, truth)?;
        let dual_walsh = spectra::walsh_spectrum(&dual);
        let ab_here = is_ab_candidate && r == (n + 1) / 2;
        for u in 1..rows as u32 {
            let lhs = (dlct.get(u, v) as i128) << (n + 2);
            let rhs = -(1i128 << (2 * r)) * dual_walsh[u as usize] as i128;
            if lhs != rhs {
                return Ok(false);
            }
            if ab_here && 2 * dlct.get(u, v) != -dual_walsh[u as usize] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Builds the Kasami–Welch monomial for (n, k) with n odd, gcd(n, 3) = 1 and
/// 3k = 1 (mod n), and checks that its DLCT value set is {0, +-2^((n-1)/2)}
/// with DLU 2^((n-1)/2) — the optimal value for odd n. Returns the row
/// spectrum.
pub fn kasami_optimality_check(n: usize, k: usize) -> Result<Spectrum> {
    let f = catalog::make_kasami(n, k)?;
    let spectrum = monomial_spectrum(&f)?;
    let h = 1i64 << ((n - 1) / 2);
    assert_eq!(
        spectrum.distinct_values(),
        vec![-h, 0, h],
        "Kasami-Welch DLCT value set for n={n}, k={k}"
    );
    assert_eq!(spectrum.max_abs(), h);
    Ok(spectrum)
}

/// Closed-form DLCT value of the inverse function at (1, v) in terms of the
/// Kloosterman sum: (K(v) - 1)/2 + (-1)^trace(v).
pub fn inverse_dlct_closed_form(ctx: &FieldCtx, kloosterman_v: i64, v: u32) -> i64 {
    let sign = 1 - 2 * ctx.trace(v) as i64;
    (kloosterman_v - 1) / 2 + sign
}

/// Full DLCT spectrum of a table-backed function plus its DLU, a convenience
/// used by checks that pair a spectrum with its maximum.
pub fn dlct_spectrum_and_dlu(f: &Vbf) -> Result<(Spectrum, i64)> {
    let table = dlct_from_ddt(f)?;
    let spectrum = spectrum_of(&table);
    let dlu = spectrum.max_abs();
    Ok((spectrum, dlu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::FieldCtx;

    fn cube(n: usize) -> Vbf {
        let ctx = FieldCtx::new(n, None).unwrap();
        Vbf::from_univariate(&ctx, &[(1, 3)]).unwrap()
    }

    fn inverse(n: usize) -> Vbf {
        let ctx = FieldCtx::new(n, None).unwrap();
        Vbf::from_univariate(&ctx, &[(1, (1u64 << n) - 2)]).unwrap()
    }

    #[test]
    fn optimal_sbox_reports() {
        for i in 0..16 {
            let f = catalog::optimal_sbox(i).unwrap();
            let report = analyze(&f).unwrap();
            assert_eq!(report.diff_uniformity, 4, "F{i}");
            assert_eq!(report.nonlinearity, 4, "F{i}");
            assert!(report.flags.is_permutation);
            assert!(!report.flags.is_apn);
        }
    }

    #[test]
    fn cube_over_gf32_is_apn_and_ab() {
        let report = analyze(&cube(5)).unwrap();
        assert!(report.flags.is_apn);
        assert!(report.flags.is_ab);
        assert!(report.flags.is_plateaued);
        assert!(!report.flags.is_bent);
        assert_eq!(report.amplitudes.as_deref(), Some(&[8i64; 31][..]));
        // Gold quadratic: the DLU saturates at 2^(n-1).
        assert_eq!(report.dlu, 16);
        assert_eq!(report.absolute_indicator, 32);
        // AB nonlinearity 2^(n-1) - 2^((n-1)/2).
        assert_eq!(report.nonlinearity, 16 - 4);
    }

    #[test]
    fn bent_product_function_has_zero_dlu() {
        let f = catalog::make_bent_product(2).unwrap();
        let report = analyze(&f).unwrap();
        assert!(report.flags.is_bent);
        assert!(report.flags.is_plateaued);
        assert!(!report.flags.is_ab);
        assert_eq!(report.dlu, 0);
        assert_eq!(report.absolute_indicator, 0);
        assert_eq!(report.amplitudes.as_deref(), Some(&[4i64, 4, 4][..]));
        // nu_F = 2^(2n) * (2^n + 2^m - 1) exactly when all off-border
        // autocorrelation vanishes.
        assert_eq!(report.sum_of_squares, 256 * (16 + 4 - 1));
    }

    #[test]
    fn dlu_zero_iff_bent_on_small_products() {
        for k in [2usize, 3] {
            let f = catalog::make_bent_product(k).unwrap();
            let report = analyze(&f).unwrap();
            assert!(report.flags.is_bent);
            assert_eq!(report.dlu, 0);
        }
        // A non-bent (4,2) function has nonzero DLU.
        let f = Vbf::from_lut(4, 2, (0..16).map(|x| x & 3).collect()).unwrap();
        let report = analyze(&f).unwrap();
        assert!(!report.flags.is_bent);
        assert!(report.dlu > 0);
    }

    #[test]
    fn lower_bound_edge_cases() {
        // m = n - 1 collapses to zero.
        let b = dlu_lower_bound(5, 4).unwrap();
        assert_eq!(b.squared_numerator, 0);
        assert!(b.holds_for(0));

        // Square case: strictly above 2^(n/2 - 1).
        let b = dlu_lower_bound(4, 4).unwrap();
        assert_eq!(b.even_dim_bound, Some(4));
        assert!(!b.holds_for(2));
        assert!(b.holds_for(4));
        assert!(b.approx() > 2.0 && b.approx() < 4.0);

        assert!(matches!(dlu_lower_bound(6, 4), Err(Error::DomainError { .. })));
    }

    #[test]
    fn inverse_over_gf16_attains_the_even_bound() {
        let report = analyze(&inverse(4)).unwrap();
        let bound = dlu_lower_bound(4, 4).unwrap();
        assert_eq!(report.dlu, 4);
        assert!(bound.holds_for(report.dlu));
        assert_eq!(bound.even_dim_bound, Some(report.dlu));
    }

    #[test]
    fn analyzed_catalog_respects_the_lower_bound() {
        for f in [cube(4), cube(5), cube(6), inverse(5), inverse(6), inverse(7)] {
            let report = analyze(&f).unwrap();
            let bound = dlu_lower_bound(f.n(), f.m()).unwrap();
            assert!(bound.holds_for(report.dlu), "n={}", f.n());
        }
    }

    #[test]
    fn monomial_row_reduction_matches_full_table() {
        let f6 = FieldCtx::new(6, None).unwrap();
        for d in [3u64, 5, 13, 34, 62] {
            let f = Vbf::from_univariate(&f6, &[(1, d)]).unwrap();
            let fast = monomial_spectrum(&f).unwrap();
            let (full, _) = dlct_spectrum_and_dlu(&f).unwrap();
            assert_eq!(fast.distinct_values(), full.distinct_values(), "d={d}");
        }
        // gcd(d, 2^n - 1) > 1: no column reduction, row set still exact.
        let f4 = FieldCtx::new(4, None).unwrap();
        let f = Vbf::from_univariate(&f4, &[(1, 3)]).unwrap();
        let fast = monomial_spectrum(&f).unwrap();
        let (full, _) = dlct_spectrum_and_dlu(&f).unwrap();
        assert_eq!(fast.distinct_values(), full.distinct_values());
    }

    #[test]
    fn monomial_spectrum_rejects_non_monomials() {
        let f6 = FieldCtx::new(6, None).unwrap();
        let two_terms = Vbf::from_univariate(&f6, &[(1, 3), (1, 1)]).unwrap();
        assert_eq!(monomial_spectrum(&two_terms), Err(Error::NotMonomial));
        let plain = Vbf::from_lut(3, 3, (0..8).collect()).unwrap();
        assert_eq!(monomial_spectrum(&plain), Err(Error::NotMonomial));
    }

    #[test]
    fn inverse_row_matches_kloosterman_closed_form() {
        for n in [6usize, 7] {
            let ctx = FieldCtx::new(n, None).unwrap();
            let f = inverse(n);
            let row = dlct_row(&f, 1).unwrap();
            let kloosterman = ctx.kloosterman_all();
            for v in 1..(1u32 << n) {
                // The closed form addresses components by trace form; the
                // table column index is the dual mask of v.
                let expect = inverse_dlct_closed_form(&ctx, kloosterman[v as usize], v);
                assert_eq!(row[ctx.trace_mask(v) as usize], expect, "n={n} v={v}");
                assert_eq!(expect.rem_euclid(4), 0, "values divisible by 4 for n >= 3");
            }
        }
    }

    #[test]
    fn apn_dual_identity() {
        assert!(apn_dual_check(&cube(5)).unwrap());
        assert!(apn_dual_check(&cube(7)).unwrap());
        // x^3 stays APN over even dimensions (gcd(1, n) = 1) even though it
        // stops being a permutation, so it exercises the true branch too.
        assert!(apn_dual_check(&cube(4)).unwrap());
        // The inverse function over an even dimension has uniformity 4.
        assert_eq!(apn_dual_check(&inverse(6)), Err(Error::NotApn(4)));
    }

    #[test]
    fn plateaued_dual_identity() {
        assert!(plateaued_dual_check(&cube(5)).unwrap());
        // x^5 = x^(2^2 + 1) over GF(2^6): plateaued with amplitude 16.
        let f6 = FieldCtx::new(6, None).unwrap();
        let gold = Vbf::from_univariate(&f6, &[(1, 5)]).unwrap();
        assert!(plateaued_dual_check(&gold).unwrap());
        assert_eq!(
            plateaued_dual_check(&inverse(6)),
            Err(Error::NotPlateaued { v: 1 })
        );
    }

    #[test]
    fn kasami_check_instances() {
        let s = kasami_optimality_check(5, 2).unwrap();
        assert_eq!(s.distinct_values(), vec![-4, 0, 4]);
        let s = kasami_optimality_check(7, 5).unwrap();
        assert_eq!(s.distinct_values(), vec![-8, 0, 8]);
        assert!(matches!(kasami_optimality_check(6, 2), Err(Error::BadParameters(_))));
        assert!(matches!(kasami_optimality_check(9, 2), Err(Error::BadParameters(_))));
        assert!(matches!(kasami_optimality_check(5, 1), Err(Error::BadParameters(_))));
    }

    #[test]
    fn kasami_row_reduction_agrees_with_full_table_at_n7() {
        let f = catalog::make_kasami(7, 5).unwrap();
        let fast = monomial_spectrum(&f).unwrap().distinct_values();
        let (full, dlu) = dlct_spectrum_and_dlu(&f).unwrap();
        assert_eq!(fast, full.distinct_values());
        assert_eq!(dlu, 8);
    }

    #[test]
    fn squared_sum_meets_the_apn_floor_exactly_for_apn() {
        // Sum over nonzero (u, v) of DLCT^2 against
        // 2^(2n+m-1) + 2^(2n-2) - 2^(3n-2) - 2^(n+m-1): equality iff APN.
        for (f, apn) in [
            (cube(5), true),
            (cube(7), true),
            (catalog::optimal_sbox(0).unwrap(), false),
            (inverse(6), false),
        ] {
            let (n, m) = (f.n(), f.m());
            let table = dlct_from_ddt(&f).unwrap();
            let mut sum = 0i64;
            for u in 1..table.rows() as u32 {
                for v in 1..table.cols() as u32 {
                    sum += table.get(u, v) * table.get(u, v);
                }
            }
            let floor = (1i64 << (2 * n + m - 1)) + (1i64 << (2 * n - 2))
                - (1i64 << (3 * n - 2))
                - (1i64 << (n + m - 1));
            assert!(sum >= floor);
            assert_eq!(sum == floor, apn, "n={n}");
        }
    }

    #[test]
    fn kasami_dlu_meets_the_cubic_floor() {
        // trace(x^d) is cubic non-bent for Kasami d, so DLU >= 2^((n-1)/2).
        for (n, k) in [(5usize, 2usize), (7, 5)] {
            let f = catalog::make_kasami(n, k).unwrap();
            let s = monomial_spectrum(&f).unwrap();
            assert!(s.max_abs() >= 1 << ((n - 1) / 2));
        }
    }
}
