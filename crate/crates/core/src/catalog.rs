//! Constructors for the named function families — inverse, Gold, quadratic,
//! Bracken–Leander, Kasami–Welch, the classified optimal 4-bit S-boxes — and
//! the spectra each family is predicted to have, for cross-validation.

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::vbf::Vbf;

/// Whether a prediction pins the exact value set or only a superset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    ExactSet,
    ContainmentOnly,
}

/// A family's predicted DLCT value set and DLU.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedSpectrum {
    pub family: &'static str,
    /// Sorted distinct values: the exact set, or the containing superset.
    pub values: Vec<i64>,
    /// Predicted DLU; `None` when the family leaves it unconstrained.
    pub dlu: Option<i64>,
    pub exactness: Exactness,
}

impl PredictedSpectrum {
    /// Checks a measured distinct-value set and DLU against the prediction.
    pub fn matches(&self, observed_values: &[i64], observed_dlu: i64) -> bool {
        let values_ok = match self.exactness {
            Exactness::ExactSet => observed_values == self.values.as_slice(),
            Exactness::ContainmentOnly => {
                observed_values.iter().all(|v| self.values.contains(v))
            }
        };
        values_ok && self.dlu.map_or(true, |d| d == observed_dlu)
    }
}

/// The inverse function x^(2^n - 2), with 0 mapped to 0.
pub fn make_inverse(ctx: &FieldCtx) -> Result<Vbf> {
    // Over GF(2) the inverse function is the identity; the generic exponent
    // 2^n - 2 degenerates to the constant-one term there.
    let exponent = if ctx.n() == 1 { 1 } else { (1u64 << ctx.n()) - 2 };
    Vbf::from_univariate(ctx, &[(1, exponent)])
}

/// Exact DLCT value set of the inverse function from the Kloosterman sums:
/// { (K(v) - 1)/2 + (-1)^trace(v) : v != 0 }. For even n = 2k the DLU is
/// 2^k; every value is divisible by 4 once n >= 3.
pub fn predict_inverse(ctx: &FieldCtx) -> PredictedSpectrum {
    let kloosterman = ctx.kloosterman_all();
    let mut values: Vec<i64> = (1..ctx.order() as u32)
        .map(|v| {
            let sign = 1 - 2 * ctx.trace(v) as i64;
            (kloosterman[v as usize] - 1) / 2 + sign
        })
        .collect();
    values.sort_unstable();
    values.dedup();
    let dlu = values.iter().map(|v| v.abs()).max().unwrap_or(0);
    if ctx.n() % 2 == 0 && ctx.n() >= 2 {
        debug_assert_eq!(dlu, 1 << (ctx.n() / 2));
    }
    PredictedSpectrum {
        family: "inverse",
        values,
        dlu: Some(dlu),
        exactness: Exactness::ExactSet,
    }
}

/// The Gold function x^(2^i + 1).
pub fn make_gold(ctx: &FieldCtx, i: usize) -> Result<Vbf> {
    if i == 0 || i >= ctx.n() {
        return Err(Error::BadParameters(format!(
            "Gold exponent index must satisfy 1 <= i < n, got i={i}, n={}",
            ctx.n()
        )));
    }
    Vbf::from_univariate(ctx, &[(1, (1u64 << i) + 1)])
}

/// Exact Gold value set from the case split on d = gcd(i, n) and n' = n/d:
/// {0, 2^(n-1)} for n' even, {-2^(n-1), 0} for n' odd with d = 1, and all
/// three values otherwise. DLU is 2^(n-1) in every case.
pub fn predict_gold(ctx: &FieldCtx, i: usize) -> Result<PredictedSpectrum> {
    if i == 0 || i >= ctx.n() {
        return Err(Error::BadParameters(format!(
            "Gold exponent index must satisfy 1 <= i < n, got i={i}, n={}",
            ctx.n()
        )));
    }
    let n = ctx.n();
    let d = gcd(i as u64, n as u64) as usize;
    let n_prime = n / d;
    let h = 1i64 << (n - 1);
    let values = if n_prime % 2 == 0 {
        vec![0, h]
    } else if d == 1 {
        vec![-h, 0]
    } else {
        vec![-h, 0, h]
    };
    Ok(PredictedSpectrum {
        family: "gold",
        values,
        dlu: Some(h),
        exactness: Exactness::ExactSet,
    })
}

/// A quadratic function: the sum of a_ij * x^(2^i + 2^j) over pairs i < j.
/// Coefficients for a repeated pair accumulate by XOR; at least one must
/// survive nonzero.
pub fn make_quadratic(ctx: &FieldCtx, coefficients: &[(usize, usize, u32)]) -> Result<Vbf> {
    let n = ctx.n();
    let mut terms: Vec<(u32, u64)> = Vec::new();
    for &(i, j, c) in coefficients {
        if i >= j || j >= n {
            return Err(Error::BadParameters(format!(
                "quadratic exponent pair needs 0 <= i < j < n, got ({i}, {j}) with n={n}"
            )));
        }
        if c > ctx.mask() {
            return Err(Error::BadParameters(format!("coefficient {c} is not a field element")));
        }
        let e = (1u64 << i) + (1u64 << j);
        match terms.iter_mut().find(|(_, e0)| *e0 == e) {
            Some(slot) => slot.0 ^= c,
            None => terms.push((c, e)),
        }
    }
    terms.retain(|&(c, _)| c != 0);
    if terms.is_empty() {
        return Err(Error::AllZeroCoefficients);
    }
    Vbf::from_univariate(ctx, &terms)
}

/// Every nonzero quadratic has values inside {-2^(n-1), 0, 2^(n-1)} and DLU
/// exactly 2^(n-1); the set containment can be proper, so this is
/// containment-only.
pub fn predict_quadratic(n: usize) -> PredictedSpectrum {
    let h = 1i64 << (n - 1);
    PredictedSpectrum {
        family: "quadratic",
        values: vec![-h, 0, h],
        dlu: Some(h),
        exactness: Exactness::ContainmentOnly,
    }
}

/// The Bracken–Leander function x^(q^2 + q + 1) over GF(q^4) with q = 2^k.
pub fn make_bracken_leander(k: usize) -> Result<Vbf> {
    if k == 0 || 4 * k > crate::field::MAX_FIELD_DIM {
        return Err(Error::BadParameters(format!(
            "Bracken-Leander needs 1 <= k <= 6 so that GF(2^(4k)) is supported, got k={k}"
        )));
    }
    let ctx = FieldCtx::new(4 * k, None)?;
    let q = 1u64 << k;
    Vbf::from_univariate(&ctx, &[(1, q * q + q + 1)])
}

/// Bracken–Leander prediction: autocorrelation values lie in {-q^3, 0, q^3}
/// with absolute indicator q^3, so DLCT values lie in {-q^3/2, 0, q^3/2}
/// and the DLU is q^3/2 = 2^(3k-1).
pub fn predict_bracken_leander(k: usize) -> Result<PredictedSpectrum> {
    if k == 0 || 4 * k > crate::field::MAX_FIELD_DIM {
        return Err(Error::BadParameters(format!(
            "Bracken-Leander needs 1 <= k <= 6 so that GF(2^(4k)) is supported, got k={k}"
        )));
    }
    let half = 1i64 << (3 * k - 1);
    Ok(PredictedSpectrum {
        family: "bracken-leander",
        values: vec![-half, 0, half],
        dlu: Some(half),
        exactness: Exactness::ContainmentOnly,
    })
}

/// The Kasami–Welch function x^(2^(2k) - 2^k + 1) for odd n coprime to 3
/// with 3k = 1 (mod n).
pub fn make_kasami(n: usize, k: usize) -> Result<Vbf> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadParameters(format!("Kasami check needs odd n >= 3, got n={n}")));
    }
    if n % 3 == 0 {
        return Err(Error::BadParameters(format!("Kasami check needs gcd(n, 3) = 1, got n={n}")));
    }
    if k == 0 || (3 * k) % n != 1 {
        return Err(Error::BadParameters(format!(
            "Kasami check needs 3k = 1 (mod n), got k={k}, n={n}"
        )));
    }
    let ctx = FieldCtx::new(n, None)?;
    let d = (1u64 << (2 * k)) - (1u64 << k) + 1;
    Vbf::from_univariate(&ctx, &[(1, d)])
}

const OPTIMAL_SBOXES: [[u32; 16]; 16] = [
    // Representatives of the 16 affine-equivalence classes of optimal 4-bit
    // S-boxes (Leander–Poschmann, FSE 2007), in their published order.
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 12, 9, 3, 14, 10, 5],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 14, 3, 5, 9, 10, 12],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 14, 3, 10, 12, 5, 9],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 5, 3, 10, 14, 11, 9],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 9, 11, 10, 14, 5, 3],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 11, 9, 10, 14, 3, 5],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 11, 9, 10, 14, 5, 3],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 12, 14, 11, 10, 9, 3, 5],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 9, 5, 10, 11, 3, 12],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 3, 5, 9, 10, 12],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 5, 10, 9, 3, 12],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 10, 5, 9, 12, 3],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 11, 10, 9, 3, 12, 5],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 9, 5, 11, 10, 3],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 11, 3, 9, 5, 10],
    [0, 1, 2, 13, 4, 7, 15, 6, 8, 14, 12, 11, 9, 3, 10, 5],
];

pub const OPTIMAL_SBOX_COUNT: usize = 16;

/// The i-th optimal 4-bit S-box class representative, 0 <= i <= 15.
pub fn optimal_sbox(i: usize) -> Result<Vbf> {
    let lut = OPTIMAL_SBOXES.get(i).ok_or(Error::IndexOutOfRange(i))?;
    Vbf::from_lut(4, 4, lut.to_vec())
}

/// Known spectra of the optimal S-box classes: half the classes sit at
/// DLU 4 with DLCT values {-4, 0, 4}, the other half at DLU 8 with
/// {-8, -4, 0, 4, 8}; autocorrelation values are twice those.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptimalSboxExpectation {
    pub dlct_values: &'static [i64],
    pub autocorrelation_values: &'static [i64],
    pub dlu: i64,
}

pub fn optimal_sbox_expected(i: usize) -> Result<OptimalSboxExpectation> {
    if i >= OPTIMAL_SBOX_COUNT {
        return Err(Error::IndexOutOfRange(i));
    }
    const LOW: OptimalSboxExpectation = OptimalSboxExpectation {
        dlct_values: &[-4, 0, 4],
        autocorrelation_values: &[-8, 0, 8],
        dlu: 4,
    };
    const HIGH: OptimalSboxExpectation = OptimalSboxExpectation {
        dlct_values: &[-8, -4, 0, 4, 8],
        autocorrelation_values: &[-16, -8, 0, 8, 16],
        dlu: 8,
    };
    Ok(if matches!(i, 3..=7 | 11..=13) { LOW } else { HIGH })
}

/// A (2k, k) bent function: the multiplication map (a, b) -> a * b of
/// GF(2^k), whose nonzero components are all bent bilinear forms. Gives the
/// DLU = 0 boundary case.
pub fn make_bent_product(k: usize) -> Result<Vbf> {
    if k == 0 || 2 * k > crate::vbf::MAX_VBF_DIM {
        return Err(Error::BadParameters(format!(
            "bent product needs 1 <= k <= 8, got k={k}"
        )));
    }
    let subfield = FieldCtx::new(k, None)?;
    let mask = subfield.mask();
    let lut = (0..1u32 << (2 * k))
        .map(|x| subfield.mul(x & mask, x >> k))
        .collect();
    Vbf::from_lut(2 * k, k, lut)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
