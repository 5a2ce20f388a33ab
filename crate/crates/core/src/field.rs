//! Exact arithmetic in GF(2^n) for 1 <= n <= 24: carry-less multiplication,
//! inversion, trace and Kloosterman sums.
//!
//! Elements are integers in `[0, 2^n)` read as coefficient vectors in the
//! polynomial basis (bit `i` is the coefficient of `x^i`), so field addition
//! is bitwise XOR and the vector-space and field views of an element coincide.

use crate::error::{Error, Result};

/// Largest supported field dimension. Kloosterman evaluation is O(2^n) per
/// point and full tables elsewhere cap far lower, so 24 bits is plenty.
pub const MAX_FIELD_DIM: usize = 24;

/// Default reduction modulus per dimension: the lexicographically smallest
/// irreducible polynomial of degree n (smallest integer encoding with bit n
/// set). Keeps outputs reproducible without external data. Entry `i` holds
/// the modulus for n = i + 1; the degree-8 entry is the familiar
/// x^8 + x^4 + x^3 + x + 1.
const DEFAULT_MODULI: [u32; MAX_FIELD_DIM] = [
    0x2,       // x
    0x7,       // x^2 + x + 1
    0xB,       // x^3 + x + 1
    0x13,      // x^4 + x + 1
    0x25,      // x^5 + x^2 + 1
    0x43,      // x^6 + x + 1
    0x83,      // x^7 + x + 1
    0x11B,     // x^8 + x^4 + x^3 + x + 1
    0x203,     // x^9 + x + 1
    0x409,     // x^10 + x^3 + 1
    0x805,     // x^11 + x^2 + 1
    0x1009,    // x^12 + x^3 + 1
    0x201B,    // x^13 + x^4 + x^3 + x + 1
    0x4021,    // x^14 + x^5 + 1
    0x8003,    // x^15 + x + 1
    0x1002B,   // x^16 + x^5 + x^3 + x + 1
    0x20009,   // x^17 + x^3 + 1
    0x40009,   // x^18 + x^3 + 1
    0x80027,   // x^19 + x^5 + x^2 + x + 1
    0x100009,  // x^20 + x^3 + 1
    0x200005,  // x^21 + x^2 + 1
    0x400003,  // x^22 + x + 1
    0x800021,  // x^23 + x^5 + 1
    0x100001B, // x^24 + x^4 + x^3 + x + 1
];

/// A binary field GF(2^n): the dimension plus a degree-n irreducible
/// reduction modulus. Immutable after construction; all operations are pure,
/// so a context can be shared freely across threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldCtx {
    n: usize,
    modulus: u32,
}

impl FieldCtx {
    /// Builds GF(2^n). When `modulus` is `None` the default modulus for `n`
    /// is used; an explicit modulus must have degree exactly `n` and be
    /// irreducible over GF(2) (verified by trial division, instant for
    /// n <= 24).
    pub fn new(n: usize, modulus: Option<u32>) -> Result<Self> {
        if n == 0 || n > MAX_FIELD_DIM {
            return Err(Error::DimensionOutOfRange(n));
        }
        let modulus = match modulus {
            None => DEFAULT_MODULI[n - 1],
            Some(m) => {
                if poly_degree(m) != n as i32 {
                    return Err(Error::WrongModulusDegree { modulus: m, n });
                }
                if !is_irreducible(m) {
                    return Err(Error::ReducibleModulus { modulus: m });
                }
                m
            }
        };
        Ok(FieldCtx { n, modulus })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of field elements, 2^n.
    pub fn order(&self) -> u64 {
        1u64 << self.n
    }

    /// Mask of valid element bits, 2^n - 1.
    pub fn mask(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    /// Field addition (and subtraction): bitwise XOR.
    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    /// Carry-less polynomial product of `a` and `b`, reduced by the modulus.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a <= self.mask() && b <= self.mask());
        let top = 1u32 << self.n;
        let mut a = a;
        let mut b = b;
        let mut acc = 0u32;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }

    /// Field squaring.
    pub fn square(&self, a: u32) -> u32 {
        self.mul(a, a)
    }

    /// `a^e` by square-and-multiply, with `0^0 = 1` and `0^e = 0` for e > 0.
    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        // Nonzero elements have multiplicative order dividing 2^n - 1.
        let e = e % (self.order() - 1);
        let mut result = 1u32;
        let mut base = a;
        let mut e = e;
        while e != 0 {
            if e & 1 != 0 {
                result = self.mul(result, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse of a nonzero element, via a^(2^n - 2).
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.order() - 2))
    }

    /// Absolute trace: the XOR of the n Frobenius conjugates
    /// a + a^2 + a^4 + ... + a^(2^(n-1)), always 0 or 1.
    pub fn trace(&self, a: u32) -> u32 {
        let mut sum = 0u32;
        let mut conj = a;
        for _ in 0..self.n {
            sum ^= conj;
            conj = self.square(conj);
        }
        debug_assert!(sum <= 1);
        sum
    }

    /// The bit mask `w` with `dot(w, y) = trace(v * y)` for every `y`: the
    /// dual-basis image of `v`. `v -> trace_mask(v)` is a linear bijection,
    /// which is what lets bit-parity component masks stand in for trace
    /// forms in every spectrum.
    pub fn trace_mask(&self, v: u32) -> u32 {
        let mut mask = 0u32;
        for i in 0..self.n {
            if self.trace(self.mul(v, 1 << i)) != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Kloosterman sum K(a) = sum over nonzero x of (-1)^trace(1/x + a*x).
    /// Exact signed integer; costs O(2^n) field operations.
    pub fn kloosterman(&self, a: u32) -> i64 {
        let size = self.order() as u32;
        let mut sum = 0i64;
        for x in 1..size {
            let inv_x = self.pow(x, self.order() - 2);
            let t = self.trace(inv_x ^ self.mul(a, x));
            sum += 1 - 2 * t as i64;
        }
        sum
    }

    /// All Kloosterman sums at once, indexed by `a`. Shares the inverse and
    /// trace tables across points, which matters when sweeping a whole field.
    pub fn kloosterman_all(&self) -> Vec<i64> {
        let size = self.order() as usize;
        let mut inv_table = vec![0u32; size];
        for x in 1..size {
            inv_table[x] = self.pow(x as u32, self.order() - 2);
        }
        let mut trace_bit = vec![0u8; size];
        for (x, bit) in trace_bit.iter_mut().enumerate() {
            *bit = self.trace(x as u32) as u8;
        }
        let mut out = vec![0i64; size];
        for (a, slot) in out.iter_mut().enumerate() {
            let mut sum = 0i64;
            for x in 1..size {
                let t = trace_bit[(inv_table[x] ^ self.mul(a as u32, x as u32)) as usize];
                sum += 1 - 2 * t as i64;
            }
            *slot = sum;
        }
        out
    }
}

/// Degree of `p` in GF(2)[x]; -1 for the zero polynomial.
fn poly_degree(p: u32) -> i32 {
    31 - p.leading_zeros() as i32
}

/// Remainder of `a` divided by `m` in GF(2)[x].
fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = 63 - m.leading_zeros() as i32;
    loop {
        let da = if a == 0 { -1 } else { 63 - a.leading_zeros() as i32 };
        if da < dm {
            return a;
        }
        a ^= m << (da - dm);
    }
}

/// Irreducibility over GF(2) by trial division against every polynomial of
/// degree 1..=n/2. Any factorization of a degree-n polynomial has a factor in
/// that range.
fn is_irreducible(p: u32) -> bool {
    let n = poly_degree(p);
    if n <= 0 {
        return false;
    }
    for d in 1..=(n / 2) {
        for q in (1u64 << d)..(1u64 << (d + 1)) {
            if poly_rem(p as u64, q) == 0 {
                return false;
            }
        }
    }
    true
}
