//! Output formats and serialized shapes. All JSON payloads carry
//! `"schema": 1`; CSV is reserved for tabular payloads.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use dlct::spectra::{SpectralTable, Spectrum, TableKind};
use dlct::AnalysisReport;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,

    /// Write output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Worker threads for row partitioning; 0 picks the machine default.
    /// Results are identical for every thread count.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

impl OutputArgs {
    pub fn emit(&self, payload: &str) -> Result<(), String> {
        match &self.out {
            None => {
                print!("{payload}");
                if !payload.ends_with('\n') {
                    println!();
                }
                Ok(())
            }
            Some(path) => write_file(path, payload),
        }
    }
}

fn write_file(path: &Path, payload: &str) -> Result<(), String> {
    let mut file =
        std::fs::File::create(path).map_err(|e| format!("cannot create {}: {e}", path.display()))?;
    file.write_all(payload.as_bytes())
        .and_then(|_| if payload.ends_with('\n') { Ok(()) } else { writeln!(file) })
        .map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Wire shape of a full spectral table.
#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableJson {
    pub schema: u32,
    pub kind: String,
    pub n: usize,
    pub m: usize,
    pub modulus: Option<u32>,
    pub rows: Vec<Vec<i64>>,
}

impl TableJson {
    pub fn new(table: &SpectralTable, modulus: Option<u32>) -> Self {
        let rows = (0..table.rows() as u32)
            .map(|u| table.row(u).to_vec())
            .collect();
        TableJson {
            schema: SCHEMA_VERSION,
            kind: table.kind().name().to_string(),
            n: table.n(),
            m: table.m(),
            modulus,
            rows,
        }
    }

    /// Re-ingests the wire shape into a table, so serialized output
    /// round-trips to the in-memory value.
    pub fn into_table(self) -> Result<SpectralTable, String> {
        let kind = match self.kind.as_str() {
            "ddt" => TableKind::Ddt,
            "walsh" => TableKind::Walsh,
            "dlct" => TableKind::Dlct,
            "autocorrelation" => TableKind::Autocorrelation,
            other => return Err(format!("unknown table kind {other:?}")),
        };
        let data: Vec<i64> = self.rows.into_iter().flatten().collect();
        SpectralTable::from_parts(kind, self.n, self.m, data).map_err(|e| e.to_string())
    }
}

pub fn table_csv(table: &SpectralTable) -> String {
    let mut out = String::from("u,v,value\n");
    for u in 0..table.rows() as u32 {
        for (v, value) in table.row(u).iter().enumerate() {
            out.push_str(&format!("{u},{v},{value}\n"));
        }
    }
    out
}

pub fn table_pretty(table: &SpectralTable, description: &str) -> String {
    let mut widths = 1;
    for &value in table.data() {
        widths = widths.max(value.to_string().len());
    }
    let mut out = format!(
        "{} table of {description}: {} x {} (rows u, columns v)\n",
        table.kind().name(),
        table.rows(),
        table.cols()
    );
    for u in 0..table.rows() as u32 {
        let row: Vec<String> = table.row(u).iter().map(|v| format!("{v:>widths$}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize)]
pub struct SpectrumEntryJson {
    pub value: i64,
    pub multiplicity: u64,
}

#[derive(Debug, Serialize)]
pub struct FlagsJson {
    pub is_permutation: bool,
    pub is_apn: bool,
    pub is_bent: bool,
    pub is_plateaued: bool,
    pub is_ab: bool,
}

/// Wire shape of an analysis report plus the DLCT spectrum.
#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub schema: u32,
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub dlu: i64,
    pub diff_uniformity: i64,
    pub nonlinearity: i64,
    pub absolute_indicator: i64,
    pub sum_of_squares: i64,
    pub flags: FlagsJson,
    pub amplitudes: Option<Vec<i64>>,
    pub dlct_spectrum: Vec<SpectrumEntryJson>,
}

impl ReportJson {
    pub fn new(source: &str, report: &AnalysisReport, spectrum: &Spectrum) -> Self {
        ReportJson {
            schema: SCHEMA_VERSION,
            source: source.to_string(),
            n: report.n,
            m: report.m,
            dlu: report.dlu,
            diff_uniformity: report.diff_uniformity,
            nonlinearity: report.nonlinearity,
            absolute_indicator: report.absolute_indicator,
            sum_of_squares: report.sum_of_squares,
            flags: FlagsJson {
                is_permutation: report.flags.is_permutation,
                is_apn: report.flags.is_apn,
                is_bent: report.flags.is_bent,
                is_plateaued: report.flags.is_plateaued,
                is_ab: report.flags.is_ab,
            },
            amplitudes: report.amplitudes.clone(),
            dlct_spectrum: spectrum
                .entries()
                .iter()
                .map(|&(value, multiplicity)| SpectrumEntryJson { value, multiplicity })
                .collect(),
        }
    }

    pub fn pretty(&self) -> String {
        let spectrum: Vec<String> = self
            .dlct_spectrum
            .iter()
            .map(|e| format!("{}x{}", e.value, e.multiplicity))
            .collect();
        let mut out = format!(
            "analysis of {}\n\
             n = {}, m = {}\n\
             dlu                 = {}\n\
             diff uniformity     = {}\n\
             nonlinearity        = {}\n\
             absolute indicator  = {}\n\
             sum of squares      = {}\n\
             permutation = {}, apn = {}, bent = {}, plateaued = {}, ab = {}\n\
             dlct spectrum (value x multiplicity): {}\n",
            self.source,
            self.n,
            self.m,
            self.dlu,
            self.diff_uniformity,
            self.nonlinearity,
            self.absolute_indicator,
            self.sum_of_squares,
            self.flags.is_permutation,
            self.flags.is_apn,
            self.flags.is_bent,
            self.flags.is_plateaued,
            self.flags.is_ab,
            spectrum.join(" ")
        );
        if let Some(amplitudes) = &self.amplitudes {
            let mut distinct = amplitudes.clone();
            distinct.sort_unstable();
            distinct.dedup();
            out.push_str(&format!("component amplitudes (distinct): {distinct:?}\n"));
        }
        out
    }
}

/// One pass/fail line of a `verify` or `reproduce` run.
#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub check: String,
    pub instance: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

impl CheckRecord {
    pub fn new(
        check: impl Into<String>,
        instance: impl Into<String>,
        pass: bool,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        CheckRecord {
            check: check.into(),
            instance: instance.into(),
            pass,
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CheckReportJson {
    pub schema: u32,
    pub check: String,
    pub pass: bool,
    pub results: Vec<CheckRecord>,
}

pub fn render_records(
    format: Format,
    check_name: &str,
    records: Vec<CheckRecord>,
) -> Result<(String, bool), String> {
    let pass = records.iter().all(|r| r.pass);
    let payload = match format {
        Format::Json => {
            let report = CheckReportJson {
                schema: SCHEMA_VERSION,
                check: check_name.to_string(),
                pass,
                results: records,
            };
            serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
        }
        Format::Csv => {
            let mut out = String::from("check,instance,pass,lhs,rhs\n");
            for r in &records {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.check,
                    r.instance,
                    r.pass,
                    csv_quote(&r.lhs),
                    csv_quote(&r.rhs)
                ));
            }
            out
        }
        Format::Pretty => {
            let mut out = String::new();
            for r in &records {
                out.push_str(&format!(
                    "[{}] {} / {}: {} vs {}\n",
                    if r.pass { "pass" } else { "FAIL" },
                    r.check,
                    r.instance,
                    r.lhs,
                    r.rhs
                ));
            }
            out.push_str(&format!(
                "{}: {} ({}/{} checks passed)\n",
                check_name,
                if pass { "PASS" } else { "FAIL" },
                records.iter().filter(|r| r.pass).count(),
                records.len()
            ));
            out
        }
    };
    Ok((payload, pass))
}

fn csv_quote(text: &str) -> String {
    if text.contains(',') || text.contains('"') {
        format!("\"{}\"", text.replace('"', "\"\""))
    } else {
        text.to_string()
    }
}
