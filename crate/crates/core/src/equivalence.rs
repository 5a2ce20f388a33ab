//! Affine maps over GF(2), extended-affine transforms and compositional
//! inverses, for exercising the equivalence invariances of the spectra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::vbf::{dot, Vbf};

/// An affine map x -> M x + c over GF(2). Rows of the bit matrix are stored
/// as machine words (row i is the mask combined with x by parity), which
/// keeps matrix-vector products a handful of AND/popcount steps for the
/// dimensions used here (<= 16).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    dim_in: usize,
    dim_out: usize,
    rows: Vec<u32>,
    constant: u32,
}

impl AffineMap {
    pub fn new(dim_in: usize, dim_out: usize, rows: Vec<u32>, constant: u32) -> Result<Self> {
        if dim_in == 0 || dim_in > 16 || dim_out == 0 || dim_out > 16 {
            return Err(Error::DimensionOutOfRange(dim_in.max(dim_out)));
        }
        if rows.len() != dim_out {
            return Err(Error::LengthMismatch { expected: dim_out, got: rows.len() });
        }
        let in_mask = (1u32 << dim_in) - 1;
        if rows.iter().any(|&r| r & !in_mask != 0) || constant & !((1u32 << dim_out) - 1) != 0 {
            return Err(Error::BadParameters("matrix row or constant exceeds the dimension".into()));
        }
        Ok(AffineMap { dim_in, dim_out, rows, constant })
    }

    /// The identity map on `dim` bits.
    pub fn identity(dim: usize) -> Self {
        AffineMap {
            dim_in: dim,
            dim_out: dim,
            rows: (0..dim).map(|i| 1 << i).collect(),
            constant: 0,
        }
    }

    /// The zero map from `dim_in` to `dim_out` bits.
    pub fn zero(dim_in: usize, dim_out: usize) -> Self {
        AffineMap { dim_in, dim_out, rows: vec![0; dim_out], constant: 0 }
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn constant(&self) -> u32 {
        self.constant
    }

    /// Applies the map: bit i of the output is dot(row_i, x), XOR constant.
    pub fn apply(&self, x: u32) -> u32 {
        debug_assert!(x < (1u32 << self.dim_in));
        let mut out = 0u32;
        for (i, &row) in self.rows.iter().enumerate() {
            out |= dot(row, x) << i;
        }
        out ^ self.constant
    }

    /// The linear part (constant dropped).
    pub fn linear_part(&self) -> AffineMap {
        AffineMap { constant: 0, ..self.clone() }
    }

    /// Transpose of the linear part: an affine map with matrix M^T and no
    /// constant. Satisfies dot(v, M u) = dot(M^T v, u).
    pub fn transpose_linear(&self) -> AffineMap {
        let mut rows = vec![0u32; self.dim_in];
        for (i, &row) in self.rows.iter().enumerate() {
            for (j, slot) in rows.iter_mut().enumerate() {
                *slot |= ((row >> j) & 1) << i;
            }
        }
        AffineMap { dim_in: self.dim_out, dim_out: self.dim_in, rows, constant: 0 }
    }

    /// Rank of the linear part over GF(2).
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.dim_in {
            let bit = 1u32 << col;
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
                continue;
            };
            rows.swap(rank, pivot);
            for r in 0..rows.len() {
                if r != rank && rows[r] & bit != 0 {
                    rows[r] ^= rows[rank];
                }
            }
            rank += 1;
        }
        rank
    }

    /// True when the map is a permutation of its space (square, full rank).
    pub fn is_invertible(&self) -> bool {
        self.dim_in == self.dim_out && self.rank() == self.dim_in
    }

    /// Inverse map by Gauss–Jordan elimination; `None` when singular. For
    /// y = M x + c the inverse sends y to M^-1 y + M^-1 c.
    pub fn inverse(&self) -> Option<AffineMap> {
        if self.dim_in != self.dim_out {
            return None;
        }
        let dim = self.dim_in;
        let mut mat = self.rows.clone();
        let mut inv: Vec<u32> = (0..dim).map(|i| 1u32 << i).collect();
        for col in 0..dim {
            let bit = 1u32 << col;
            let pivot = (col..dim).find(|&r| mat[r] & bit != 0)?;
            mat.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..dim {
                if r != col && mat[r] & bit != 0 {
                    mat[r] ^= mat[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        let inverse_linear = AffineMap { dim_in: dim, dim_out: dim, rows: inv, constant: 0 };
        let constant = inverse_linear.apply(self.constant);
        Some(AffineMap { constant, ..inverse_linear })
    }
}

/// Uniformly samples an invertible affine map on `dim` bits by rejection on
/// the rank, with a random constant. Deterministic per seed.
pub fn random_invertible(dim: usize, seed: u64) -> AffineMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = (1u32 << dim) - 1;
    loop {
        let rows: Vec<u32> = (0..dim).map(|_| rng.gen::<u32>() & mask).collect();
        let constant = rng.gen::<u32>() & mask;
        let map = AffineMap { dim_in: dim, dim_out: dim, rows, constant };
        if map.is_invertible() {
            return map;
        }
    }
}

/// Extended-affine transform A1 o F o A2 + A, with A1 and A2 invertible on
/// the output and input spaces and A an arbitrary affine (n -> m) map.
pub fn ea_transform(f: &Vbf, a1: &AffineMap, a2: &AffineMap, a: &AffineMap) -> Result<Vbf> {
    let n = f.n();
    let m = f.m();
    if a1.dim_in != m || !a1.is_invertible() || a2.dim_in != n || !a2.is_invertible() {
        return Err(Error::NotInvertible);
    }
    if a.dim_in != n || a.dim_out != m {
        return Err(Error::BadParameters(format!(
            "additive part must map {n} -> {m} bits, got {} -> {}",
            a.dim_in, a.dim_out
        )));
    }
    let lut = (0..1u32 << n)
        .map(|x| a1.apply(f.get(a2.apply(x))) ^ a.apply(x))
        .collect();
    Vbf::from_lut(n, m, lut)
}

/// Affine transform A1 o F o A2 (the EA transform with zero additive part).
pub fn affine_transform(f: &Vbf, a1: &AffineMap, a2: &AffineMap) -> Result<Vbf> {
    ea_transform(f, a1, a2, &AffineMap::zero(f.n(), f.m()))
}

/// Compositional inverse of a permutation: the table with lut'[F(x)] = x.
pub fn compositional_inverse(f: &Vbf) -> Result<Vbf> {
    if !f.is_permutation() {
        return Err(Error::NotPermutation);
    }
    let mut lut = vec![0u32; 1 << f.n()];
    for x in 0..1u32 << f.n() {
        lut[f.get(x) as usize] = x;
    }
    Vbf::from_lut(f.n(), f.m(), lut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::dlct_spectrum_and_dlu;
    use crate::field::FieldCtx;
    use crate::spectra::{dlct_from_ddt, spectrum_of};

    #[test]
    fn identity_and_constant_maps() {
        let id = AffineMap::identity(4);
        for x in 0..16 {
            assert_eq!(id.apply(x), x);
        }
        let constant = AffineMap::new(4, 4, vec![0; 4], 0b1010).unwrap();
        for x in 0..16 {
            assert_eq!(constant.apply(x), 0b1010);
        }
    }

    #[test]
    fn inverse_of_random_map_round_trips() {
        for seed in 0..50 {
            let map = random_invertible(4, seed);
            let inverse = map.inverse().expect("sampled maps are invertible");
            for x in 0..16 {
                assert_eq!(inverse.apply(map.apply(x)), x);
                assert_eq!(map.apply(inverse.apply(x)), x);
            }
        }
        assert!(AffineMap::zero(3, 3).inverse().is_none());
    }

    #[test]
    fn sampling_is_deterministic_and_always_full_rank() {
        let mut distinct = std::collections::HashSet::new();
        for seed in 0..1000 {
            let map = random_invertible(4, seed);
            assert_eq!(map.rank(), 4);
            distinct.insert(map.rows().to_vec());
        }
        assert!(distinct.len() >= 2);
        assert_eq!(random_invertible(4, 7), random_invertible(4, 7));
    }

    #[test]
    fn transpose_moves_the_mask_across_the_pairing() {
        let map = random_invertible(6, 99);
        let transpose = map.transpose_linear();
        for v in 0..64u32 {
            for u in 0..64u32 {
                assert_eq!(dot(v, map.linear_part().apply(u)), dot(transpose.apply(v), u));
            }
        }
    }

    #[test]
    fn ea_transform_with_identities_is_the_function_itself() {
        let f5 = FieldCtx::new(5, None).unwrap();
        let f = Vbf::from_univariate(&f5, &[(1, 3)]).unwrap();
        let same = ea_transform(
            &f,
            &AffineMap::identity(5),
            &AffineMap::identity(5),
            &AffineMap::zero(5, 5),
        )
        .unwrap();
        assert_eq!(same.lut(), f.lut());
    }

    #[test]
    fn adding_the_identity_to_the_inverse_extends_the_spectrum() {
        let f7 = FieldCtx::new(7, None).unwrap();
        let inv = Vbf::from_univariate(&f7, &[(1, 126)]).unwrap();
        let shifted = ea_transform(
            &inv,
            &AffineMap::identity(7),
            &AffineMap::identity(7),
            &AffineMap::identity(7),
        )
        .unwrap();
        let (s0, d0) = dlct_spectrum_and_dlu(&inv).unwrap();
        let (s1, d1) = dlct_spectrum_and_dlu(&shifted).unwrap();
        assert_eq!(s0.distinct_values(), vec![-12, -8, -4, 0, 4, 8]);
        assert_eq!(s1.distinct_values(), vec![-12, -8, -4, 0, 4, 8, 12]);
        assert_eq!((d0, d1), (12, 12), "DLU is EA-invariant");
    }

    #[test]
    fn affine_equivalence_preserves_the_spectrum_multiset() {
        let mut seeds = 0..;
        let f5 = FieldCtx::new(5, None).unwrap();
        let f = Vbf::from_univariate(&f5, &[(1, 3)]).unwrap();
        for _ in 0..20 {
            let a1 = random_invertible(5, seeds.next().unwrap());
            let a2 = random_invertible(5, seeds.next().unwrap());
            let g = affine_transform(&f, &a1, &a2).unwrap();
            let (s0, _) = dlct_spectrum_and_dlu(&f).unwrap();
            let (s1, _) = dlct_spectrum_and_dlu(&g).unwrap();
            assert_eq!(s0, s1, "full multiset equality");
        }
    }

    #[test]
    fn sign_relation_under_linear_equivalence() {
        // Delta'(u, v) = (-1)^dot(v, L(u)) * Delta(L2(u), L1^T(v)) for
        // F' = L1 o F o L2 + L with all parts linear.
        let f6 = FieldCtx::new(6, None).unwrap();
        let f = Vbf::from_univariate(&f6, &[(1, 5)]).unwrap();
        for seed in [3u64, 17, 40] {
            let l1 = random_invertible(6, seed).linear_part();
            let l2 = random_invertible(6, seed + 1000).linear_part();
            let l = random_invertible(6, seed + 2000).linear_part();
            let g = ea_transform(&f, &l1, &l2, &l).unwrap();
            let t_f = dlct_from_ddt(&f).unwrap();
            let t_g = dlct_from_ddt(&g).unwrap();
            let l1t = l1.transpose_linear();
            for u in 1..64u32 {
                for v in 1..64u32 {
                    let sign = 1 - 2 * dot(v, l.apply(u)) as i64;
                    assert_eq!(
                        2 * t_g.get(u, v),
                        sign * 2 * t_f.get(l2.apply(u), l1t.apply(v)),
                        "seed={seed} u={u} v={v}"
                    );
                }
            }
        }
    }

    #[test]
    fn compositional_inverse_of_x13_is_x34() {
        let f6 = FieldCtx::new(6, None).unwrap();
        let f = Vbf::from_univariate(&f6, &[(1, 13)]).unwrap();
        let finv = compositional_inverse(&f).unwrap();
        let x34 = Vbf::from_univariate(&f6, &[(1, 34)]).unwrap();
        assert_eq!(finv.lut(), x34.lut());

        let id = Vbf::from_lut(3, 3, (0..8).collect()).unwrap();
        assert_eq!(compositional_inverse(&id).unwrap().lut(), id.lut());

        let constant = Vbf::from_lut(3, 3, vec![1; 8]).unwrap();
        assert_eq!(compositional_inverse(&constant), Err(Error::NotPermutation));
    }

    #[test]
    fn double_compositional_inverse_is_identity_on_random_permutations() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for n in 1..=8usize {
            let mut lut: Vec<u32> = (0..1u32 << n).collect();
            lut.shuffle(&mut rng);
            let f = Vbf::from_lut(n, n, lut).unwrap();
            let back = compositional_inverse(&compositional_inverse(&f).unwrap()).unwrap();
            assert_eq!(back.lut(), f.lut());
        }
    }

    #[test]
    fn ccz_witness_pair_has_distinct_dlu() {
        // x^13 and its compositional inverse are CCZ equivalent yet have
        // DLU 16 and 32: neither DLU nor the spectrum is CCZ-invariant.
        let f6 = FieldCtx::new(6, None).unwrap();
        let f = Vbf::from_univariate(&f6, &[(1, 13)]).unwrap();
        let g = compositional_inverse(&f).unwrap();
        let (sf, df) = dlct_spectrum_and_dlu(&f).unwrap();
        let (sg, dg) = dlct_spectrum_and_dlu(&g).unwrap();
        assert_eq!((df, dg), (16, 32));
        assert_eq!(sf.distinct_values(), vec![-16, -8, 0, 8, 16]);
        assert_eq!(sg.distinct_values(), vec![-32, 0, 32]);
    }

    #[test]
    fn ea_transform_rejects_singular_parts() {
        let f = Vbf::from_lut(3, 3, (0..8).collect()).unwrap();
        let singular = AffineMap::zero(3, 3);
        assert_eq!(
            ea_transform(&f, &singular, &AffineMap::identity(3), &AffineMap::zero(3, 3)),
            Err(Error::NotInvertible)
        );
    }

    #[test]
    fn spectrum_multiset_preserved_under_random_affine_pairs_on_random_function() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        let lut: Vec<u32> = (0..32).map(|_| rng.gen::<u32>() & 31).collect();
        let f = Vbf::from_lut(5, 5, lut).unwrap();
        let base = spectrum_of(&dlct_from_ddt(&f).unwrap());
        for seed in 0..10u64 {
            let a1 = random_invertible(5, seed);
            let a2 = random_invertible(5, seed + 500);
            let g = affine_transform(&f, &a1, &a2).unwrap();
            assert_eq!(spectrum_of(&dlct_from_ddt(&g).unwrap()), base);
        }
    }
}
