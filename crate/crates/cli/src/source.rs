//! Resolving the function source of an invocation: an S-box table file, an
//! inline polynomial, or a named catalog family.

use std::path::PathBuf;

use clap::Args;
use dlct::{catalog, FieldCtx, Vbf};

#[derive(Debug, Args)]
pub struct SourceArgs {
    /// S-box table file: decimal or 0x-hex entries separated by whitespace
    /// or commas, optional first line `n=<n> m=<m>`
    #[arg(long, value_name = "PATH", conflicts_with_all = ["poly", "catalog"])]
    pub lut_file: Option<PathBuf>,

    /// Univariate polynomial over GF(2^n): `c*x^e` terms joined by `+`,
    /// coefficients decimal or 0x-hex (requires --n)
    #[arg(long, value_name = "EXPR", conflicts_with = "catalog")]
    pub poly: Option<String>,

    /// Catalog family: inverse | gold | kasami | bracken-leander | table1 |
    /// bent-product
    #[arg(long, value_name = "NAME")]
    pub catalog: Option<String>,

    /// Field dimension n (for --poly and most catalog families)
    #[arg(long)]
    pub n: Option<usize>,

    /// Reduction modulus override, decimal or 0x-hex (default: smallest
    /// irreducible polynomial of degree n)
    #[arg(long)]
    pub modulus: Option<String>,

    /// Class index for --catalog table1 (0..=15)
    #[arg(long)]
    pub index: Option<usize>,

    /// Exponent index i for --catalog gold (function x^(2^i + 1))
    #[arg(long)]
    pub i: Option<usize>,

    /// Parameter k for kasami / bracken-leander / bent-product
    #[arg(long)]
    pub k: Option<usize>,
}

/// A resolved function plus a printable description of where it came from.
pub struct ResolvedSource {
    pub vbf: Vbf,
    pub description: String,
}

impl SourceArgs {
    pub fn resolve(&self) -> Result<ResolvedSource, String> {
        match (&self.lut_file, &self.poly, &self.catalog) {
            (Some(path), None, None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                let vbf = Vbf::from_sbox_text(&text).map_err(|e| e.to_string())?;
                Ok(ResolvedSource {
                    description: format!("{} ({},{})-table", path.display(), vbf.n(), vbf.m()),
                    vbf,
                })
            }
            (None, Some(expr), None) => {
                let n = self.n.ok_or("--poly requires --n")?;
                let ctx = self.field(n)?;
                let terms = parse_poly(expr)?;
                let vbf = Vbf::from_univariate(&ctx, &terms).map_err(|e| e.to_string())?;
                Ok(ResolvedSource {
                    description: format!("{} over GF(2^{n}), modulus {:#x}", expr, ctx.modulus()),
                    vbf,
                })
            }
            (None, None, Some(name)) => self.resolve_catalog(name),
            (None, None, None) => Err("one of --lut-file, --poly, --catalog is required".into()),
            _ => Err("give exactly one of --lut-file, --poly, --catalog".into()),
        }
    }

    fn field(&self, n: usize) -> Result<FieldCtx, String> {
        let modulus = match &self.modulus {
            None => None,
            Some(text) => Some(parse_int(text)? as u32),
        };
        FieldCtx::new(n, modulus).map_err(|e| e.to_string())
    }

    fn resolve_catalog(&self, name: &str) -> Result<ResolvedSource, String> {
        let need_n = || self.n.ok_or(format!("--catalog {name} requires --n"));
        let need_k = || self.k.ok_or(format!("--catalog {name} requires --k"));
        match name {
            "inverse" => {
                let ctx = self.field(need_n()?)?;
                let vbf = catalog::make_inverse(&ctx).map_err(|e| e.to_string())?;
                Ok(ResolvedSource {
                    description: format!("inverse function over GF(2^{})", ctx.n()),
                    vbf,
                })
            }
            "gold" => {
                let i = self.i.ok_or("--catalog gold requires --i")?;
                let ctx = self.field(need_n()?)?;
                let vbf = catalog::make_gold(&ctx, i).map_err(|e| e.to_string())?;
                Ok(ResolvedSource {
                    description: format!("Gold x^(2^{i}+1) over GF(2^{})", ctx.n()),
                    vbf,
                })
            }
            "kasami" => {
                let n = need_n()?;
                let k = match self.k {
                    Some(k) => k,
                    None => default_kasami_k(n)
                        .ok_or(format!("no k with 3k = 1 (mod {n}); pick --k explicitly"))?,
                };
                let vbf = catalog::make_kasami(n, k).map_err(|e| e.to_string())?;
                Ok(ResolvedSource {
                    description: format!("Kasami-Welch (n={n}, k={k})"),
                    vbf,
                })
            }
            "bracken-leander" => {
                let k = need_k()?;
                let vbf = catalog::make_bracken_leander(k).map_err(|e| e.to_string())?;
                Ok(ResolvedSource {
                    description: format!("Bracken-Leander (k={k}, GF(2^{}))", 4 * k),
                    vbf,
                })
            }
            "table1" => {
                let index = self.index.ok_or("--catalog table1 requires --index")?;
                let vbf = catalog::optimal_sbox(index).map_err(|e| e.to_string())?;
                Ok(ResolvedSource {
                    description: format!("optimal 4-bit S-box class F{index}"),
                    vbf,
                })
            }
            "bent-product" => {
                let k = need_k()?;
                let vbf = catalog::make_bent_product(k).map_err(|e| e.to_string())?;
                Ok(ResolvedSource {
                    description: format!("GF(2^{k}) product map ({},{})", 2 * k, k),
                    vbf,
                })
            }
            other => Err(format!(
                "unknown catalog family {other:?} (expected inverse, gold, kasami, \
                 bracken-leander, table1, bent-product)"
            )),
        }
    }
}

/// Smallest k >= 1 with 3k = 1 (mod n).
pub fn default_kasami_k(n: usize) -> Option<usize> {
    (1..n.max(2)).find(|k| (3 * k) % n == 1)
}

/// Parses `c*x^e` terms joined by `+`.
pub fn parse_poly(expr: &str) -> Result<Vec<(u32, u64)>, String> {
    let mut terms = Vec::new();
    for raw in expr.split('+') {
        let term = raw.trim();
        if term.is_empty() {
            return Err(format!("empty term in polynomial {expr:?}"));
        }
        let (coeff_text, exp_text) = term
            .split_once("*x^")
            .ok_or(format!("term {term:?} is not of the form c*x^e"))?;
        let coeff = parse_int(coeff_text.trim())?;
        let exponent: u64 = exp_text
            .trim()
            .parse()
            .map_err(|_| format!("invalid exponent in term {term:?}"))?;
        terms.push((coeff as u32, exponent));
    }
    Ok(terms)
}

pub fn parse_int(text: &str) -> Result<u64, String> {
    let parsed = if let Some(hex) = text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
        u64::from_str_radix(hex, 16)
    } else {
        text.parse()
    };
    parsed.map_err(|_| format!("invalid integer {text:?}"))
}
