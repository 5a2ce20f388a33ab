//! Vectorial Boolean functions as dense lookup tables, with component
//! functions, derivatives and univariate-polynomial construction.

use crate::error::{Error, Result};
use crate::field::FieldCtx;

/// Hard cap on n and m for function construction. 2^16 entries stay
/// trivially dense; the spectra layer imposes tighter caps of its own.
pub const MAX_VBF_DIM: usize = 16;

/// XOR-parity inner product of two bit vectors.
#[inline]
pub fn dot(a: u32, b: u32) -> u32 {
    (a & b).count_ones() & 1
}

/// An (n, m)-function from n-bit words to m-bit words, stored as a full
/// table of 2^n output words. Immutable after construction.
///
/// Functions built from a univariate polynomial keep their field context and
/// term list, which later enables the single-row monomial shortcut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vbf {
    n: usize,
    m: usize,
    lut: Vec<u32>,
    field: Option<FieldCtx>,
    terms: Option<Vec<(u32, u64)>>,
}

/// A single Boolean function on n bits as a truth table of 0/1 bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolFun {
    n: usize,
    truth: Vec<u8>,
}

impl BoolFun {
    pub fn from_truth(n: usize, truth: Vec<u8>) -> Result<Self> {
        if n == 0 || n > MAX_VBF_DIM {
            return Err(Error::DimensionOutOfRange(n));
        }
        if truth.len() != 1 << n {
            return Err(Error::LengthMismatch { expected: 1 << n, got: truth.len() });
        }
        debug_assert!(truth.iter().all(|&b| b <= 1));
        Ok(BoolFun { n, truth })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn truth(&self) -> &[u8] {
        &self.truth
    }

    #[inline]
    pub fn get(&self, x: u32) -> u8 {
        self.truth[x as usize]
    }
}

impl Vbf {
    /// Wraps a raw lookup table as an (n, m)-function.
    pub fn from_lut(n: usize, m: usize, lut: Vec<u32>) -> Result<Self> {
        if n == 0 || n > MAX_VBF_DIM {
            return Err(Error::DimensionOutOfRange(n));
        }
        if m == 0 || m > MAX_VBF_DIM {
            return Err(Error::DimensionOutOfRange(m));
        }
        if lut.len() != 1 << n {
            return Err(Error::LengthMismatch { expected: 1 << n, got: lut.len() });
        }
        let bound = 1u32 << m;
        for (index, &entry) in lut.iter().enumerate() {
            if entry >= bound {
                return Err(Error::EntryOutOfRange { index, entry, bound });
            }
        }
        Ok(Vbf { n, m, lut, field: None, terms: None })
    }

    /// Evaluates the univariate polynomial `sum of c_i * x^(e_i)` over the
    /// field and attaches both the context and the term list. Exponents are
    /// reduced mod 2^n - 1 on nonzero inputs, with `x^0 = 1` everywhere
    /// (so constants reach x = 0) and `0^e = 0` for e > 0.
    pub fn from_univariate(ctx: &FieldCtx, terms: &[(u32, u64)]) -> Result<Self> {
        let n = ctx.n();
        if n > MAX_VBF_DIM {
            return Err(Error::DimensionOutOfRange(n));
        }
        let mut kept: Vec<(u32, u64)> = Vec::new();
        for &(c, e) in terms {
            if c > ctx.mask() {
                return Err(Error::EntryOutOfRange {
                    index: kept.len(),
                    entry: c,
                    bound: 1 << n,
                });
            }
            if c == 0 {
                continue;
            }
            match kept.iter_mut().find(|(_, e0)| *e0 == e) {
                Some(slot) => slot.0 ^= c,
                None => kept.push((c, e)),
            }
        }
        kept.retain(|&(c, _)| c != 0);
        kept.sort_by_key(|&(_, e)| e);

        let size = 1usize << n;
        let mut lut = vec![0u32; size];
        for (x, out) in lut.iter_mut().enumerate() {
            let x = x as u32;
            let mut acc = 0u32;
            for &(c, e) in &kept {
                let p = ctx.pow(x, e);
                acc ^= ctx.mul(c, p);
            }
            *out = acc;
        }
        Ok(Vbf { n, m: n, lut, field: Some(*ctx), terms: Some(kept) })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lut(&self) -> &[u32] {
        &self.lut
    }

    pub fn field_ctx(&self) -> Option<&FieldCtx> {
        self.field.as_ref()
    }

    /// Term list when the function was built from a univariate polynomial.
    pub fn terms(&self) -> Option<&[(u32, u64)]> {
        self.terms.as_deref()
    }

    /// The exponent d when this function is exactly x^d over a field context.
    pub fn monomial_exponent(&self) -> Option<u64> {
        match (self.field.as_ref(), self.terms.as_deref()) {
            (Some(_), Some([(1, e)])) if *e >= 1 => Some(*e),
            _ => None,
        }
    }

    #[inline]
    pub fn get(&self, x: u32) -> u32 {
        self.lut[x as usize]
    }

    /// Component Boolean function x -> dot(v, F(x)) for a nonzero mask v.
    pub fn component(&self, v: u32) -> Result<BoolFun> {
        if v == 0 {
            return Err(Error::ZeroMask);
        }
        debug_assert!(v < (1u32 << self.m));
        let truth = self.lut.iter().map(|&y| dot(v, y) as u8).collect();
        Ok(BoolFun { n: self.n, truth })
    }

    /// Derivative in direction u: x -> F(x) xor F(x xor u).
    pub fn derivative(&self, u: u32) -> Result<Vbf> {
        if u == 0 {
            return Err(Error::ZeroDirection);
        }
        debug_assert!(u < (1u32 << self.n));
        let lut = (0..self.lut.len() as u32)
            .map(|x| self.lut[x as usize] ^ self.lut[(x ^ u) as usize])
            .collect();
        Ok(Vbf { n: self.n, m: self.m, lut, field: self.field, terms: None })
    }

    /// True iff n = m and the table is a bijection.
    pub fn is_permutation(&self) -> bool {
        if self.n != self.m {
            return false;
        }
        let mut seen = vec![false; self.lut.len()];
        for &y in &self.lut {
            if seen[y as usize] {
                return false;
            }
            seen[y as usize] = true;
        }
        true
    }

    /// Parses the S-box text format: whitespace- or comma-separated decimal
    /// or 0x-hex entries, with an optional leading header line `n=<n> m=<m>`.
    /// Without a header the length must be a power of two and n = m = log2(len).
    pub fn from_sbox_text(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut body_start = 0;
        for (offset, line) in text.lines().enumerate() {
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            if trimmed.starts_with("n=") {
                header = Some(parse_header(trimmed)?);
                body_start = offset + 1;
            }
            break;
        }
        let body: String = text
            .lines()
            .skip(body_start)
            .collect::<Vec<_>>()
            .join(" ");
        let mut entries = Vec::new();
        for token in body.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            entries.push(parse_entry(token)?);
        }
        if entries.is_empty() {
            return Err(Error::ParseError("no entries found".into()));
        }
        let (n, m) = match header {
            Some(dims) => dims,
            None => {
                if !entries.len().is_power_of_two() {
                    return Err(Error::ParseError(format!(
                        "length {} is not a power of two and no n=/m= header is present",
                        entries.len()
                    )));
                }
                let n = entries.len().trailing_zeros() as usize;
                (n, n)
            }
        };
        Vbf::from_lut(n, m, entries)
    }
}

fn parse_header(line: &str) -> Result<(usize, usize)> {
    let mut n = None;
    let mut m = None;
    for token in line.split_whitespace() {
        if let Some(v) = token.strip_prefix("n=") {
            n = Some(v.parse::<usize>().map_err(|_| bad_header(line))?);
        } else if let Some(v) = token.strip_prefix("m=") {
            m = Some(v.parse::<usize>().map_err(|_| bad_header(line))?);
        } else {
            return Err(bad_header(line));
        }
    }
    match (n, m) {
        (Some(n), Some(m)) => Ok((n, m)),
        _ => Err(bad_header(line)),
    }
}

fn bad_header(line: &str) -> Error {
    Error::ParseError(format!("malformed header line {line:?}, expected `n=<n> m=<m>`"))
}

fn parse_entry(token: &str) -> Result<u32> {
    let parsed = if let Some(hex) = token.strip_prefix("0x").or_else(|| token.strip_prefix("0X")) {
        u32::from_str_radix(hex, 16)
    } else {
        token.parse::<u32>()
    };
    parsed.map_err(|_| Error::ParseError(format!("invalid entry {token:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_lut_validates_shape() {
        let f0 = vec![0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 12, 9, 3, 14, 10, 5];
        let f = Vbf::from_lut(4, 4, f0.clone()).unwrap();
        assert_eq!(f.lut(), &f0[..]);
        assert!(f.is_permutation());

        assert_eq!(
            Vbf::from_lut(2, 2, vec![0, 1, 2, 4]),
            Err(Error::EntryOutOfRange { index: 3, entry: 4, bound: 4 })
        );
        assert_eq!(
            Vbf::from_lut(3, 3, vec![0, 1]),
            Err(Error::LengthMismatch { expected: 8, got: 2 })
        );

        let id1 = Vbf::from_lut(1, 1, vec![0, 1]).unwrap();
        assert_eq!(id1.lut(), &[0, 1]);
        assert!(id1.is_permutation());
    }

    #[test]
    fn univariate_monomials() {
        let f3 = FieldCtx::new(3, None).unwrap();
        let cube = Vbf::from_univariate(&f3, &[(1, 3)]).unwrap();
        // gcd(3, 7) = 1 so x^3 permutes GF(8).
        assert!(cube.is_permutation());
        assert_eq!(cube.monomial_exponent(), Some(3));

        let ident = Vbf::from_univariate(&f3, &[(1, 1)]).unwrap();
        assert_eq!(ident.lut(), &[0, 1, 2, 3, 4, 5, 6, 7]);

        // x^(2^n - 2) is the inverse function with 0 -> 0: check pointwise.
        let f4 = FieldCtx::new(4, None).unwrap();
        let inv = Vbf::from_univariate(&f4, &[(1, 14)]).unwrap();
        assert_eq!(inv.get(0), 0);
        for x in 1..16 {
            assert_eq!(inv.get(x), f4.inv(x).unwrap());
        }
    }

    #[test]
    fn univariate_merges_terms_and_handles_constants() {
        let f4 = FieldCtx::new(4, None).unwrap();
        // c*x^e + c*x^e cancels.
        let zero = Vbf::from_univariate(&f4, &[(5, 3), (5, 3)]).unwrap();
        assert!(zero.lut().iter().all(|&y| y == 0));
        assert_eq!(zero.monomial_exponent(), None);
        // The constant term reaches x = 0 (0^0 = 1).
        let affine = Vbf::from_univariate(&f4, &[(1, 1), (9, 0)]).unwrap();
        assert_eq!(affine.get(0), 9);
        assert_eq!(affine.get(2), 2 ^ 9);
        // Coefficients must be field elements.
        assert!(matches!(
            Vbf::from_univariate(&f4, &[(16, 1)]),
            Err(Error::EntryOutOfRange { .. })
        ));
    }

    #[test]
    fn exponents_reduce_mod_field_order() {
        let f3 = FieldCtx::new(3, None).unwrap();
        // x^7 = 1 for nonzero x, and 0^7 = 0.
        let f = Vbf::from_univariate(&f3, &[(1, 7)]).unwrap();
        assert_eq!(f.get(0), 0);
        for x in 1..8 {
            assert_eq!(f.get(x), 1);
        }
        // x^9 = x^2 on nonzero x and at 0 as well.
        let f9 = Vbf::from_univariate(&f3, &[(1, 9)]).unwrap();
        let f2 = Vbf::from_univariate(&f3, &[(1, 2)]).unwrap();
        assert_eq!(f9.lut(), f2.lut());
    }

    #[test]
    fn components_of_identity_are_linear_forms() {
        let id = Vbf::from_lut(3, 3, (0..8).collect()).unwrap();
        for v in 1..8 {
            let comp = id.component(v).unwrap();
            for x in 0..8u32 {
                assert_eq!(comp.get(x) as u32, dot(v, x));
            }
        }
        assert_eq!(id.component(0), Err(Error::ZeroMask));
    }

    #[test]
    fn single_bit_component_is_the_coordinate() {
        let f0 = Vbf::from_lut(4, 4, vec![0, 1, 2, 13, 4, 7, 15, 6, 8, 11, 12, 9, 3, 14, 10, 5])
            .unwrap();
        for bit in 0..4 {
            let comp = f0.component(1 << bit).unwrap();
            for x in 0..16u32 {
                assert_eq!(comp.get(x) as u32, (f0.get(x) >> bit) & 1);
            }
        }
    }

    #[test]
    fn component_against_trace_oracle_through_the_dual_mask() {
        // For field-built functions the trace form trace(v * F(x)) is the
        // component at the dual mask of v.
        let f5 = FieldCtx::new(5, None).unwrap();
        let cube = Vbf::from_univariate(&f5, &[(1, 3)]).unwrap();
        for v in 1..32 {
            let comp = cube.component(f5.trace_mask(v)).unwrap();
            for x in 0..32u32 {
                assert_eq!(comp.get(x) as u32, f5.trace(f5.mul(v, cube.get(x))));
            }
        }
    }

    #[test]
    fn component_is_bilinear_in_the_mask() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rng.gen_range(1..=8);
            let m = rng.gen_range(1..=8);
            let lut = (0..1u32 << n).map(|_| rng.gen::<u32>() & ((1 << m) - 1)).collect();
            let f = Vbf::from_lut(n, m, lut).unwrap();
            for _ in 0..20 {
                let v = rng.gen::<u32>() & ((1 << m) - 1);
                let w = rng.gen::<u32>() & ((1 << m) - 1);
                if v == 0 || w == 0 || v == w {
                    continue;
                }
                let cv = f.component(v).unwrap();
                let cw = f.component(w).unwrap();
                let cvw = f.component(v ^ w).unwrap();
                for x in 0..1u32 << n {
                    assert_eq!(cvw.get(x), cv.get(x) ^ cw.get(x));
                }
            }
        }
    }

    #[test]
    fn derivative_of_linear_map_is_constant() {
        let id = Vbf::from_lut(4, 4, (0..16).collect()).unwrap();
        for u in 1..16u32 {
            let d = id.derivative(u).unwrap();
            assert!(d.lut().iter().all(|&y| y == u));
        }
        assert_eq!(id.derivative(0), Err(Error::ZeroDirection));
    }

    #[test]
    fn derivative_is_symmetric_under_shift_by_u() {
        let f5 = FieldCtx::new(5, None).unwrap();
        let cube = Vbf::from_univariate(&f5, &[(1, 3)]).unwrap();
        for u in 1..32u32 {
            let d = cube.derivative(u).unwrap();
            for x in 0..32u32 {
                assert_eq!(d.get(x), d.get(x ^ u));
            }
        }
    }

    #[test]
    fn cube_derivative_is_two_to_one_in_gf8() {
        // x^3 over GF(2^3) is APN: each derivative hits values 0 or 2 times.
        let f3 = FieldCtx::new(3, None).unwrap();
        let cube = Vbf::from_univariate(&f3, &[(1, 3)]).unwrap();
        let d = cube.derivative(1).unwrap();
        let mut counts = [0u32; 8];
        for x in 0..8u32 {
            counts[d.get(x) as usize] += 1;
        }
        assert!(counts.iter().all(|&c| c == 0 || c == 2));
    }

    #[test]
    fn permutation_detection() {
        assert!(Vbf::from_lut(2, 2, vec![0, 1, 2, 3]).unwrap().is_permutation());
        assert!(!Vbf::from_lut(2, 2, vec![0, 0, 0, 0]).unwrap().is_permutation());
        // gcd(3, 15) = 3: x^3 does not permute GF(16).
        let f4 = FieldCtx::new(4, None).unwrap();
        assert!(!Vbf::from_univariate(&f4, &[(1, 3)]).unwrap().is_permutation());
        // Monomials with gcd(d, 2^n - 1) = 1 always permute.
        for n in 4..=6usize {
            let f = FieldCtx::new(n, None).unwrap();
            let order = (1u64 << n) - 1;
            for d in 1..order {
                let expected = gcd(d, order) == 1;
                let vbf = Vbf::from_univariate(&f, &[(1, d)]).unwrap();
                assert_eq!(vbf.is_permutation(), expected, "n={n} d={d}");
            }
        }
    }

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    #[test]
    fn sbox_text_roundtrip() {
        let f = Vbf::from_sbox_text("0 1 2 3").unwrap();
        assert_eq!((f.n(), f.m()), (2, 2));

        let f = Vbf::from_sbox_text("0x0, 0x1, 0x2, 0x3").unwrap();
        assert_eq!(f.lut(), &[0, 1, 2, 3]);

        let f = Vbf::from_sbox_text("n=3 m=2\n0 1 2 3 3 2 1 0").unwrap();
        assert_eq!((f.n(), f.m()), (3, 2));

        // Non-power-of-two without a header is rejected.
        assert!(matches!(Vbf::from_sbox_text("0 1 2"), Err(Error::ParseError(_))));
        // Header dims must match the body.
        assert!(matches!(
            Vbf::from_sbox_text("n=2 m=2\n0 1 2"),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(Vbf::from_sbox_text("0 1 2 bogus"), Err(Error::ParseError(_))));
    }
}
