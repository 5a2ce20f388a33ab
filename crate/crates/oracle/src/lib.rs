//! Deliberately naive, independently coded reference implementations of the
//! spectral definitions, used by tests to validate the fast paths.
//!
//! Everything here evaluates the defining sum or count verbatim, one entry
//! at a time, with no transform kernel and no shared code with the
//! production tables. Single-threaded on purpose. These routines are a test
//! surface, not a production API: full tables cost O(4^n) and worse.

use dlct::Vbf;
use std::fmt;

/// Dimension cap: one entry is an O(2^n) sum, a full table O(2^(2n + m)).
pub const MAX_ORACLE_DIM: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    TooLarge { n: usize, m: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TooLarge { n, m } => {
                write!(f, "oracle cap exceeded: n={n}, m={m}, cap={MAX_ORACLE_DIM}")
            }
        }
    }
}

impl std::error::Error for OracleError {}

pub type Result<T> = std::result::Result<T, OracleError>;

fn check(f: &Vbf) -> Result<()> {
    if f.n() > MAX_ORACLE_DIM || f.m() > MAX_ORACLE_DIM {
        return Err(OracleError::TooLarge { n: f.n(), m: f.m() });
    }
    Ok(())
}

fn parity(x: u32) -> u32 {
    x.count_ones() & 1
}

/// W_F(u, v) as the definitional 2^n-term sign sum.
pub fn naive_walsh(f: &Vbf, u: u32, v: u32) -> Result<i64> {
    check(f)?;
    let mut sum = 0i64;
    for x in 0..1u32 << f.n() {
        let exponent = parity(u & x) ^ parity(v & f.get(x));
        sum += if exponent == 0 { 1 } else { -1 };
    }
    Ok(sum)
}

/// DLCT entry (u, v): the count of x with v.F(x) = v.F(x+u), minus 2^(n-1).
pub fn naive_dlct(f: &Vbf, u: u32, v: u32) -> Result<i64> {
    check(f)?;
    let mut matches = 0i64;
    for x in 0..1u32 << f.n() {
        if parity(v & f.get(x)) == parity(v & f.get(x ^ u)) {
            matches += 1;
        }
    }
    Ok(matches - (1i64 << (f.n() - 1)))
}

/// Additive autocorrelation entry (u, v): the definitional sign sum over x of
/// (-1)^(v . (F(x) + F(x+u))).
pub fn naive_autocorrelation(f: &Vbf, u: u32, v: u32) -> Result<i64> {
    check(f)?;
    let mut sum = 0i64;
    for x in 0..1u32 << f.n() {
        let exponent = parity(v & (f.get(x) ^ f.get(x ^ u)));
        sum += if exponent == 0 { 1 } else { -1 };
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walsh_at_the_origin_counts_everything() {
        let f = Vbf::from_lut(4, 4, (0..16).collect()).unwrap();
        assert_eq!(naive_walsh(&f, 0, 0).unwrap(), 16);
    }

    #[test]
    fn walsh_of_a_linear_map_is_supported_on_matching_masks() {
        // For F = identity, W(u, v) = 2^n iff u = v and 0 otherwise.
        let f = Vbf::from_lut(5, 5, (0..32).collect()).unwrap();
        for u in 0..32u32 {
            for v in 0..32u32 {
                let expect = if u == v { 32 } else { 0 };
                assert_eq!(naive_walsh(&f, u, v).unwrap(), expect);
            }
        }
    }

    #[test]
    fn dlct_row_zero_is_half_the_order() {
        let f = Vbf::from_lut(4, 3, (0..16).map(|x| x & 7).collect()).unwrap();
        for v in 0..8u32 {
            assert_eq!(naive_dlct(&f, 0, v).unwrap(), 8);
        }
    }

    #[test]
    fn oversized_inputs_are_refused() {
        let f = Vbf::from_lut(13, 4, vec![0; 1 << 13]).unwrap();
        assert_eq!(
            naive_walsh(&f, 0, 0),
            Err(OracleError::TooLarge { n: 13, m: 4 })
        );
        assert!(naive_dlct(&f, 0, 0).is_err());
        assert!(naive_autocorrelation(&f, 0, 0).is_err());
    }

    #[test]
    fn autocorrelation_is_twice_dlct_pointwise() {
        let f = Vbf::from_lut(4, 4, vec![3, 1, 4, 1, 5, 9, 2, 6, 8, 7, 3, 2, 0, 11, 13, 15])
            .unwrap();
        for u in 0..16u32 {
            for v in 0..16u32 {
                assert_eq!(
                    naive_autocorrelation(&f, u, v).unwrap(),
                    2 * naive_dlct(&f, u, v).unwrap()
                );
            }
        }
    }
}
