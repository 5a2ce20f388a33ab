//! Small-scale searches for functions with low differential-linear
//! uniformity: an exhaustive monomial-exponent scan and seeded random
//! sampling over permutations.

use dlct::analysis::monomial_spectrum;
use dlct::spectra::{dlct_from_ddt, spectrum_of};
use dlct::{FieldCtx, Vbf};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::output::SCHEMA_VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SearchMode {
    /// Exhaust the exponents d of x^d, 1 <= d <= 2^n - 2.
    Monomial,
    /// Sample random permutations of GF(2)^n under a budget.
    Random,
}

#[derive(Debug, Serialize)]
pub struct SearchHit {
    /// Monomial exponent when mode = monomial.
    pub monomial: Option<u64>,
    /// Full lookup table when mode = random, so hits can be re-verified.
    pub lut: Option<Vec<u32>>,
    pub dlu: i64,
    pub values: Vec<i64>,
}

#[derive(Debug, Serialize)]
pub struct SearchReport {
    pub schema: u32,
    pub mode: String,
    pub n: usize,
    pub max_dlu: i64,
    pub seed: u64,
    pub budget: Option<u64>,
    pub total_candidates: Option<u64>,
    pub examined: u64,
    pub budget_exhausted: bool,
    pub hits: Vec<SearchHit>,
}

impl SearchReport {
    pub fn pretty(&self) -> String {
        let mut out = format!(
            "search mode={} n={} max_dlu={} seed={}: examined {}{}{}\n",
            self.mode,
            self.n,
            self.max_dlu,
            self.seed,
            self.examined,
            match self.total_candidates {
                Some(total) => format!(" of {total} candidates"),
                None => String::new(),
            },
            if self.budget_exhausted { " (budget exhausted)" } else { "" },
        );
        for hit in &self.hits {
            match (&hit.monomial, &hit.lut) {
                (Some(d), _) => out.push_str(&format!(
                    "  x^{d}: dlu {} values {:?}\n",
                    hit.dlu, hit.values
                )),
                (None, Some(lut)) => out.push_str(&format!(
                    "  lut {:?}: dlu {} values {:?}\n",
                    lut, hit.dlu, hit.values
                )),
                (None, None) => {}
            }
        }
        out.push_str(&format!("{} hit(s)\n", self.hits.len()));
        out
    }
}

pub fn run(
    mode: SearchMode,
    n: usize,
    max_dlu: i64,
    budget: Option<u64>,
    seed: u64,
) -> Result<SearchReport, String> {
    match mode {
        SearchMode::Monomial => monomial_scan(n, max_dlu, budget, seed),
        SearchMode::Random => random_scan(n, max_dlu, budget, seed),
    }
}

fn monomial_scan(
    n: usize,
    max_dlu: i64,
    budget: Option<u64>,
    seed: u64,
) -> Result<SearchReport, String> {
    if !(2..=16).contains(&n) {
        return Err(format!("monomial search supports 2 <= n <= 16, got {n}"));
    }
    let ctx = FieldCtx::new(n, None).map_err(|e| e.to_string())?;
    let total = (1u64 << n) - 2;
    let cap = budget.unwrap_or(total).min(total);
    let mut hits = Vec::new();
    for d in 1..=cap {
        let f = Vbf::from_univariate(&ctx, &[(1, d)]).map_err(|e| e.to_string())?;
        let spectrum = monomial_spectrum(&f).map_err(|e| e.to_string())?;
        let dlu = spectrum.max_abs();
        if dlu <= max_dlu {
            hits.push(SearchHit {
                monomial: Some(d),
                lut: None,
                dlu,
                values: spectrum.distinct_values(),
            });
        }
    }
    Ok(SearchReport {
        schema: SCHEMA_VERSION,
        mode: "monomial".into(),
        n,
        max_dlu,
        seed,
        budget,
        total_candidates: Some(total),
        examined: cap,
        budget_exhausted: cap < total,
        hits,
    })
}

fn random_scan(
    n: usize,
    max_dlu: i64,
    budget: Option<u64>,
    seed: u64,
) -> Result<SearchReport, String> {
    if !(2..=10).contains(&n) {
        return Err(format!("random search supports 2 <= n <= 10, got {n}"));
    }
    let budget = budget.ok_or("--mode random requires --budget")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = Vec::new();
    for _ in 0..budget {
        let mut lut: Vec<u32> = (0..1u32 << n).collect();
        lut.shuffle(&mut rng);
        let f = Vbf::from_lut(n, n, lut).map_err(|e| e.to_string())?;
        let spectrum = spectrum_of(&dlct_from_ddt(&f).map_err(|e| e.to_string())?);
        let dlu = spectrum.max_abs();
        if dlu <= max_dlu {
            hits.push(SearchHit {
                monomial: None,
                lut: Some(f.lut().to_vec()),
                dlu,
                values: spectrum.distinct_values(),
            });
        }
    }
    Ok(SearchReport {
        schema: SCHEMA_VERSION,
        mode: "random".into(),
        n,
        max_dlu,
        seed,
        budget: Some(budget),
        total_candidates: None,
        examined: budget,
        budget_exhausted: false,
        hits,
    })
}
