//! The four spectral tables of an (n, m)-function — Walsh, DDT, DLCT and
//! additive autocorrelation — with a fast Walsh–Hadamard kernel and three
//! mutually checking DLCT construction paths.
//!
//! Entry conventions, for u in GF(2)^n and v (or omega) in GF(2)^m:
//!
//! * `WALSH`:  W(u, v) = sum over x of (-1)^(dot(u,x) + dot(v,F(x)))
//! * `DDT`:    DDT(u, omega) = #{x : F(x) + F(x+u) = omega}
//! * `DLCT`:   DLCT(u, v) = #{x : dot(v,F(x)) = dot(v,F(x+u))} - 2^(n-1)
//! * `AUTOCORRELATION`: Delta(u, v) = sum over x of (-1)^(dot(v, F(x)+F(x+u))),
//!   which is exactly twice the DLCT entry.
//!
//! All arithmetic is exact in signed 64-bit integers; within the dimension
//! caps the largest intermediate magnitude is 2^(2n) <= 2^48. Row and column
//! fills are data-independent, so tables are built by partitioning rows
//! across a worker pool; results do not depend on the partition.

use rayon::prelude::*;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::vbf::{dot, BoolFun, Vbf};

/// Cap for full 2^n x 2^m tables (half a GiB of i64 at the limit).
pub const MAX_TABLE_DIM: usize = 13;
/// Cap for single-row / single-column streaming queries.
pub const MAX_ROW_DIM: usize = 16;

/// Which spectrum a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Ddt,
    Walsh,
    Dlct,
    Autocorrelation,
}

impl TableKind {
    pub fn name(&self) -> &'static str {
        match self {
            TableKind::Ddt => "ddt",
            TableKind::Walsh => "walsh",
            TableKind::Dlct => "dlct",
            TableKind::Autocorrelation => "autocorrelation",
        }
    }
}

/// A dense 2^n x 2^m signed-integer table, row index u, column index v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralTable {
    kind: TableKind,
    n: usize,
    m: usize,
    data: Vec<i64>,
}

impl SpectralTable {
    /// Reassembles a table from raw parts (used when deserializing).
    pub fn from_parts(kind: TableKind, n: usize, m: usize, data: Vec<i64>) -> Result<Self> {
        if n == 0 || n > MAX_TABLE_DIM || m == 0 || m > MAX_TABLE_DIM {
            return Err(Error::TooLarge { n, m, cap: MAX_TABLE_DIM });
        }
        let expected = (1usize << n) * (1usize << m);
        if data.len() != expected {
            return Err(Error::LengthMismatch { expected, got: data.len() });
        }
        Ok(SpectralTable { kind, n, m, data })
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> usize {
        1 << self.n
    }

    pub fn cols(&self) -> usize {
        1 << self.m
    }

    #[inline]
    pub fn get(&self, u: u32, v: u32) -> i64 {
        self.data[(u as usize) * self.cols() + v as usize]
    }

    pub fn row(&self, u: u32) -> &[i64] {
        let c = self.cols();
        &self.data[(u as usize) * c..(u as usize + 1) * c]
    }

    pub fn data(&self) -> &[i64] {
        &self.data
    }

    /// Maximum |entry| over nonzero row and column indices.
    pub fn max_abs_over_nonzero(&self) -> i64 {
        let mut best = 0;
        for u in 1..self.rows() {
            for v in 1..self.cols() {
                best = best.max(self.data[u * self.cols() + v].abs());
            }
        }
        best
    }
}

/// The multiset of table values over nonzero (u, v), sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    entries: Vec<(i64, u64)>,
}

impl Spectrum {
    pub fn from_values(values: impl IntoIterator<Item = i64>) -> Self {
        let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
        for v in values {
            *counts.entry(v).or_insert(0) += 1;
        }
        Spectrum { entries: counts.into_iter().collect() }
    }

    /// Sorted (value, multiplicity) pairs.
    pub fn entries(&self) -> &[(i64, u64)] {
        &self.entries
    }

    /// Sorted distinct values.
    pub fn distinct_values(&self) -> Vec<i64> {
        self.entries.iter().map(|&(v, _)| v).collect()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|&(_, c)| c).sum()
    }

    /// Largest absolute value present; 0 for an empty spectrum.
    pub fn max_abs(&self) -> i64 {
        self.entries.iter().map(|&(v, _)| v.abs()).max().unwrap_or(0)
    }

    /// True when every value present lies in `allowed`.
    pub fn within(&self, allowed: &[i64]) -> bool {
        self.entries.iter().all(|&(v, _)| allowed.contains(&v))
    }
}

/// In-place Walsh–Hadamard transform of a power-of-two-length array.
/// Applying it twice multiplies by the length.
pub fn wht_inplace(values: &mut [i64]) -> Result<()> {
    if !values.len().is_power_of_two() {
        return Err(Error::LengthNotPowerOfTwo(values.len()));
    }
    wht_unchecked(values);
    Ok(())
}

/// Iterative radix-2 butterfly; `values.len()` must be a power of two.
fn wht_unchecked(values: &mut [i64]) {
    let len = values.len();
    let mut half = 1;
    while half < len {
        for block in (0..len).step_by(half * 2) {
            for i in block..block + half {
                let a = values[i];
                let b = values[i + half];
                values[i] = a + b;
                values[i + half] = a - b;
            }
        }
        half *= 2;
    }
}

/// Walsh transform of a single Boolean function at every point.
pub fn walsh_spectrum(f: &BoolFun) -> Vec<i64> {
    let mut signs: Vec<i64> = f.truth().iter().map(|&b| 1 - 2 * b as i64).collect();
    wht_unchecked(&mut signs);
    signs
}

fn check_table_caps(f: &Vbf) -> Result<(usize, usize)> {
    if f.n() > MAX_TABLE_DIM || f.m() > MAX_TABLE_DIM {
        return Err(Error::TooLarge { n: f.n(), m: f.m(), cap: MAX_TABLE_DIM });
    }
    Ok((f.n(), f.m()))
}

fn check_row_caps(f: &Vbf) -> Result<(usize, usize)> {
    if f.n() > MAX_ROW_DIM || f.m() > MAX_ROW_DIM {
        return Err(Error::TooLarge { n: f.n(), m: f.m(), cap: MAX_ROW_DIM });
    }
    Ok((f.n(), f.m()))
}

/// Fills a rows x cols table in parallel; each worker owns disjoint rows.
fn fill_rows(rows: usize, cols: usize, fill: impl Fn(usize, &mut [i64]) + Sync) -> Vec<i64> {
    let mut data = vec![0i64; rows * cols];
    data.par_chunks_mut(cols)
        .enumerate()
        .for_each(|(r, chunk)| fill(r, chunk));
    data
}

fn transpose(data: &[i64], rows: usize, cols: usize) -> Vec<i64> {
    let mut out = vec![0i64; data.len()];
    for r in 0..rows {
        for c in 0..cols {
            out[c * rows + r] = data[r * cols + c];
        }
    }
    out
}

/// Sign vector of the component dot(v, F(x)), as i64 entries +-1.
fn component_signs(f: &Vbf, v: u32) -> Vec<i64> {
    f.lut().iter().map(|&y| 1 - 2 * dot(v, y) as i64).collect()
}

/// Full Walsh table: W(u, v) for every u and v, including the v = 0 column
/// (which is 2^n at u = 0 and zero elsewhere). Column v is the transform of
/// the component sign vector of v.
pub fn walsh_table(f: &Vbf) -> Result<SpectralTable> {
    let (n, m) = check_table_caps(f)?;
    let (rows, cols) = (1usize << n, 1usize << m);
    // Build v-major (one contiguous row per component), then transpose.
    let by_v = fill_rows(cols, rows, |v, out| {
        for (x, slot) in out.iter_mut().enumerate() {
            *slot = 1 - 2 * dot(v as u32, f.get(x as u32)) as i64;
        }
        wht_unchecked(out);
    });
    Ok(SpectralTable { kind: TableKind::Walsh, n, m, data: transpose(&by_v, cols, rows) })
}

/// Differential distribution table: DDT(u, omega) counts solutions of
/// F(x) + F(x + u) = omega.
pub fn ddt(f: &Vbf) -> Result<SpectralTable> {
    let (n, m) = check_table_caps(f)?;
    let (rows, cols) = (1usize << n, 1usize << m);
    let data = fill_rows(rows, cols, |u, out| {
        for x in 0..rows as u32 {
            out[(f.get(x) ^ f.get(x ^ u as u32)) as usize] += 1;
        }
    });
    Ok(SpectralTable { kind: TableKind::Ddt, n, m, data })
}

/// DLCT by definitional counting: for each (u, v), count the x with
/// dot(v, F(x)) = dot(v, F(x + u)) and subtract 2^(n-1).
pub fn dlct_direct(f: &Vbf) -> Result<SpectralTable> {
    let (n, m) = check_table_caps(f)?;
    let (rows, cols) = (1usize << n, 1usize << m);
    let half = 1i64 << (n - 1);
    let data = fill_rows(rows, cols, |u, out| {
        let derived: Vec<u32> = (0..rows as u32).map(|x| f.get(x) ^ f.get(x ^ u as u32)).collect();
        for (v, slot) in out.iter_mut().enumerate() {
            let mut matches = 0i64;
            for &d in &derived {
                matches += (1 - dot(v as u32, d)) as i64;
            }
            *slot = matches - half;
        }
    });
    Ok(SpectralTable { kind: TableKind::Dlct, n, m, data })
}

/// DLCT as half the row-wise Walsh–Hadamard transform of the DDT:
/// DLCT(u, v) = 1/2 * sum over omega of (-1)^dot(omega, v) * DDT(u, omega).
pub fn dlct_from_ddt(f: &Vbf) -> Result<SpectralTable> {
    let table = ddt(f)?;
    Ok(ddt_to_dlct(&table))
}

/// The DDT-to-DLCT conversion on an existing table.
pub fn ddt_to_dlct(ddt: &SpectralTable) -> SpectralTable {
    debug_assert_eq!(ddt.kind(), TableKind::Ddt);
    let (rows, cols) = (ddt.rows(), ddt.cols());
    let data = fill_rows(rows, cols, |u, out| {
        out.copy_from_slice(ddt.row(u as u32));
        wht_unchecked(out);
        for slot in out.iter_mut() {
            debug_assert!(*slot % 2 == 0, "autocorrelation values are even");
            *slot /= 2;
        }
    });
    SpectralTable { kind: TableKind::Dlct, n: ddt.n(), m: ddt.m(), data }
}

/// DLCT from the Walsh side: for each v, the column over u is the inverse
/// transform of the squared Walsh column,
/// DLCT(u, v) = 2^-(n+1) * sum over omega of (-1)^dot(u, omega) * W(omega, v)^2.
pub fn dlct_from_walsh(f: &Vbf) -> Result<SpectralTable> {
    let (n, m) = check_table_caps(f)?;
    let (rows, cols) = (1usize << n, 1usize << m);
    let scale = 1i64 << (n + 1);
    // v-major: each worker computes one full column of the result.
    let by_v = fill_rows(cols, rows, |v, out| {
        for (x, slot) in out.iter_mut().enumerate() {
            *slot = 1 - 2 * dot(v as u32, f.get(x as u32)) as i64;
        }
        wht_unchecked(out);
        for slot in out.iter_mut() {
            *slot *= *slot;
        }
        wht_unchecked(out);
        for slot in out.iter_mut() {
            debug_assert!(*slot % scale == 0, "squared-Walsh transform divisible by 2^(n+1)");
            *slot /= scale;
        }
    });
    Ok(SpectralTable { kind: TableKind::Dlct, n, m, data: transpose(&by_v, cols, rows) })
}

/// Additive autocorrelation table: entrywise twice the DLCT, so
/// Delta(u, 0) = Delta(0, v) = 2^n and Delta = 0 off (0,0) exactly for bent
/// functions.
pub fn autocorrelation_table(f: &Vbf) -> Result<SpectralTable> {
    let mut table = dlct_from_ddt(f)?;
    for slot in table.data.iter_mut() {
        *slot *= 2;
    }
    table.kind = TableKind::Autocorrelation;
    Ok(table)
}

/// One DLCT row (all v for a fixed u), usable beyond the full-table cap.
/// Costs O(2^n + m * 2^m).
pub fn dlct_row(f: &Vbf, u: u32) -> Result<Vec<i64>> {
    let (n, m) = check_row_caps(f)?;
    let rows = 1usize << n;
    let mut counts = vec![0i64; 1 << m];
    for x in 0..rows as u32 {
        counts[(f.get(x) ^ f.get(x ^ u)) as usize] += 1;
    }
    wht_unchecked(&mut counts);
    for slot in counts.iter_mut() {
        debug_assert!(*slot % 2 == 0);
        *slot /= 2;
    }
    Ok(counts)
}

/// One DLCT column (all u for a fixed v), via the squared Walsh transform of
/// the single component. Costs O(n * 2^n).
pub fn dlct_column(f: &Vbf, v: u32) -> Result<Vec<i64>> {
    let (n, _) = check_row_caps(f)?;
    let scale = 1i64 << (n + 1);
    let mut col = component_signs(f, v);
    wht_unchecked(&mut col);
    for slot in col.iter_mut() {
        *slot *= *slot;
    }
    wht_unchecked(&mut col);
    for slot in col.iter_mut() {
        debug_assert!(*slot % scale == 0);
        *slot /= scale;
    }
    Ok(col)
}

/// The spectrum of a table: the multiset of entries over u != 0, v != 0.
pub fn spectrum_of(table: &SpectralTable) -> Spectrum {
    let mut values = Vec::with_capacity((table.rows() - 1) * (table.cols() - 1));
    for u in 1..table.rows() as u32 {
        for v in 1..table.cols() as u32 {
            values.push(table.get(u, v));
        }
    }
    Spectrum::from_values(values)
}
