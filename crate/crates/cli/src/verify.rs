//! Named verification checks: the Walsh/DDT identities, the DLU bounds, the
//! dual-function propositions, equivalence invariance and the Kloosterman
//! congruence. Each check yields pass/fail records; any failure makes the
//! command exit nonzero.

use dlct::analysis::{self, dlu_lower_bound};
use dlct::equivalence::{self, random_invertible, AffineMap};
use dlct::spectra::{
    autocorrelation_table, ddt, dlct_direct, dlct_from_ddt, dlct_from_walsh, spectrum_of,
    walsh_table,
};
use dlct::vbf::dot;
use dlct::{FieldCtx, Vbf};

use crate::output::CheckRecord;

/// Identity suite against the definitional DLCT path: the direct table is
/// the reference, the Walsh and DDT routes supply the other side of each
/// identity.
pub fn identities(f: &Vbf) -> Result<Vec<CheckRecord>, String> {
    let name = "identities";
    let n = f.n();
    let m = f.m();
    let walsh = walsh_table(f).map_err(|e| e.to_string())?;
    let ddt_table = ddt(f).map_err(|e| e.to_string())?;
    let dlct = dlct_direct(f).map_err(|e| e.to_string())?;
    let mut records = Vec::new();

    // Parseval per component.
    let mut bad = None;
    for v in 0..1u32 << m {
        let sum: i64 = (0..1u32 << n).map(|u| walsh.get(u, v).pow(2)).sum();
        if sum != 1i64 << (2 * n) {
            bad = Some((v, sum));
            break;
        }
    }
    records.push(match bad {
        None => CheckRecord::new(
            name,
            "parseval",
            true,
            format!("all {} columns sum to {}", 1 << m, 1i64 << (2 * n)),
            format!("{}", 1i64 << (2 * n)),
        ),
        Some((v, sum)) => {
            CheckRecord::new(name, "parseval", false, format!("v={v}: {sum}"), format!("{}", 1i64 << (2 * n)))
        }
    });

    // Autocorrelation = 2 * DLCT, and its DDT Fourier form.
    let ac = autocorrelation_table(f).map_err(|e| e.to_string())?;
    let mut bad = None;
    'outer: for u in 0..1u32 << n {
        for v in 0..1u32 << m {
            let fourier: i64 = (0..1u32 << m)
                .map(|w| (1 - 2 * dot(w, v) as i64) * ddt_table.get(u, w))
                .sum();
            if ac.get(u, v) != 2 * dlct.get(u, v) || fourier != ac.get(u, v) {
                bad = Some((u, v, ac.get(u, v), 2 * dlct.get(u, v), fourier));
                break 'outer;
            }
        }
    }
    records.push(match bad {
        None => CheckRecord::new(
            name,
            "autocorrelation-vs-dlct",
            true,
            "Delta = 2*DLCT = DDT Fourier form everywhere".to_string(),
            "equal".to_string(),
        ),
        Some((u, v, a, d2, fr)) => CheckRecord::new(
            name,
            "autocorrelation-vs-dlct",
            false,
            format!("(u,v)=({u},{v}): Delta={a}, 2*DLCT={d2}, fourier={fr}"),
            "equal".to_string(),
        ),
    });

    // Column sums: sum over u of DLCT(u, v) = W(0, v)^2 / 2.
    push_sweep(&mut records, name, "row-sum-by-column", (0..1u32 << m).map(|v| {
        let lhs: i64 = (0..1u32 << n).map(|u| dlct.get(u, v)).sum();
        let rhs = walsh.get(0, v).pow(2) / 2;
        (format!("v={v}"), 2 * lhs, 2 * rhs)
    }));

    // Fourth moment: sum over u of DLCT(u, v)^2 scaled against sum of W^4.
    push_sweep(&mut records, name, "fourth-moment", (0..1u32 << m).map(|v| {
        let lhs: i64 = (0..1u32 << n).map(|u| dlct.get(u, v).pow(2)).sum();
        let rhs: i64 = (0..1u32 << n).map(|w| walsh.get(w, v).pow(4)).sum();
        (format!("v={v}"), lhs << (n + 2), rhs)
    }));

    // Row sums: sum over v of DLCT(u, v) = 2^(m-1) * DDT(u, 0).
    push_sweep(&mut records, name, "column-sum-by-row", (0..1u32 << n).map(|u| {
        let lhs: i64 = (0..1u32 << m).map(|v| dlct.get(u, v)).sum();
        let rhs = (1i64 << (m - 1)) * ddt_table.get(u, 0);
        (format!("u={u}"), lhs, rhs)
    }));

    // Second moments per row against the DDT.
    push_sweep(&mut records, name, "second-moment", (0..1u32 << n).map(|u| {
        let lhs: i64 = (0..1u32 << m).map(|v| dlct.get(u, v).pow(2)).sum();
        let rhs: i64 = (0..1u32 << m).map(|w| ddt_table.get(u, w).pow(2)).sum();
        (format!("u={u}"), lhs << 2, rhs << m)
    }));

    // Permutations: zero row sums off u = 0 and the global 2^(m+n-1).
    if f.is_permutation() {
        let mut bad = None;
        for u in 1..1u32 << n {
            let sum: i64 = (0..1u32 << m).map(|v| dlct.get(u, v)).sum();
            if sum != 0 {
                bad = Some((u, sum));
                break;
            }
        }
        let total: i64 = dlct.data().iter().sum();
        let expected = 1i64 << (m + n - 1);
        records.push(match bad {
            None if total == expected => CheckRecord::new(
                name,
                "permutation-sums",
                true,
                format!("rows vanish, total {total}"),
                format!("total {expected}"),
            ),
            Some((u, sum)) => CheckRecord::new(
                name,
                "permutation-sums",
                false,
                format!("u={u}: {sum}"),
                "0".to_string(),
            ),
            None => CheckRecord::new(
                name,
                "permutation-sums",
                false,
                format!("total {total}"),
                format!("total {expected}"),
            ),
        });
    }

    Ok(records)
}

fn push_sweep(
    records: &mut Vec<CheckRecord>,
    check: &str,
    instance: &str,
    pairs: impl Iterator<Item = (String, i64, i64)>,
) {
    let mut count = 0usize;
    for (at, lhs, rhs) in pairs {
        count += 1;
        if lhs != rhs {
            records.push(CheckRecord::new(
                check,
                instance,
                false,
                format!("{at}: {lhs}"),
                format!("{rhs}"),
            ));
            return;
        }
    }
    records.push(CheckRecord::new(
        check,
        instance,
        true,
        format!("{count} index sweeps equal"),
        "equal".to_string(),
    ));
}

/// The three DLCT construction routes agree bitwise.
pub fn cross_path(f: &Vbf) -> Result<Vec<CheckRecord>, String> {
    let direct = dlct_direct(f).map_err(|e| e.to_string())?;
    let via_ddt = dlct_from_ddt(f).map_err(|e| e.to_string())?;
    let via_walsh = dlct_from_walsh(f).map_err(|e| e.to_string())?;
    let mut records = Vec::new();
    for (label, other) in [("direct-vs-ddt", &via_ddt), ("direct-vs-walsh", &via_walsh)] {
        let diff = direct
            .data()
            .iter()
            .zip(other.data())
            .position(|(a, b)| a != b);
        records.push(match diff {
            None => CheckRecord::new(
                "cross-path",
                label,
                true,
                format!("{} entries identical", direct.data().len()),
                "identical".to_string(),
            ),
            Some(pos) => {
                let cols = direct.cols();
                CheckRecord::new(
                    "cross-path",
                    label,
                    false,
                    format!("(u,v)=({},{}): {}", pos / cols, pos % cols, direct.data()[pos]),
                    format!("{}", other.data()[pos]),
                )
            }
        });
    }
    Ok(records)
}

/// Lower bounds: the generic square-root bound, the sharper even-n bound,
/// and the squared-sum floor with equality exactly for APN functions.
pub fn bounds(f: &Vbf) -> Result<Vec<CheckRecord>, String> {
    let name = "bounds";
    let report = analysis::analyze(f).map_err(|e| e.to_string())?;
    let (n, m) = (f.n(), f.m());
    let mut records = Vec::new();

    match dlu_lower_bound(n, m) {
        Err(e) => records.push(CheckRecord::new(
            name,
            "generic-bound",
            true,
            format!("not applicable: {e}"),
            "skipped".to_string(),
        )),
        Ok(bound) => {
            records.push(CheckRecord::new(
                name,
                "generic-bound",
                bound.holds_for(report.dlu),
                format!("dlu = {}", report.dlu),
                format!(">= {:.4}", bound.approx()),
            ));
            if let Some(even_bound) = bound.even_dim_bound {
                records.push(CheckRecord::new(
                    name,
                    "even-dimension-bound",
                    report.dlu >= even_bound,
                    format!("dlu = {}", report.dlu),
                    format!(">= {even_bound}"),
                ));
            }
        }
    }

    let table = dlct_from_ddt(f).map_err(|e| e.to_string())?;
    let mut sum = 0i64;
    for u in 1..table.rows() as u32 {
        for v in 1..table.cols() as u32 {
            sum += table.get(u, v).pow(2);
        }
    }
    let floor = (1i64 << (2 * n + m - 1)) + (1i64 << (2 * n - 2))
        - (1i64 << (3 * n - 2))
        - (1i64 << (n + m - 1));
    records.push(CheckRecord::new(
        name,
        "squared-sum-floor",
        sum >= floor,
        format!("sum = {sum}"),
        format!(">= {floor}"),
    ));
    records.push(CheckRecord::new(
        name,
        "squared-sum-equality-iff-apn",
        (sum == floor) == report.flags.is_apn,
        format!("equality = {}", sum == floor),
        format!("apn = {}", report.flags.is_apn),
    ));
    Ok(records)
}

pub fn dual_apn(f: &Vbf) -> Result<Vec<CheckRecord>, String> {
    let pass = analysis::apn_dual_check(f).map_err(|e| e.to_string())?;
    Ok(vec![CheckRecord::new(
        "dual-apn",
        "derivative-image-walsh",
        pass,
        "DLCT(u, .) vs -W(indicator of D_u)/2 for v != 0".to_string(),
        if pass { "equal" } else { "mismatch" }.to_string(),
    )])
}

pub fn dual_plateaued(f: &Vbf) -> Result<Vec<CheckRecord>, String> {
    let pass = analysis::plateaued_dual_check(f).map_err(|e| e.to_string())?;
    Ok(vec![CheckRecord::new(
        "dual-plateaued",
        "walsh-support-dual",
        pass,
        "DLCT(., v) vs -2^(2r-n-2) W(dual of f_v) for u != 0".to_string(),
        if pass { "equal" } else { "mismatch" }.to_string(),
    )])
}

/// Affine invariance of the full spectrum multiset and EA invariance of the
/// DLU, over seeded random transforms.
pub fn ea_invariance(f: &Vbf, seed: u64, trials: usize) -> Result<Vec<CheckRecord>, String> {
    let name = "ea-invariance";
    let (n, m) = (f.n(), f.m());
    let base = spectrum_of(&dlct_from_ddt(f).map_err(|e| e.to_string())?);
    let base_dlu = base.max_abs();
    let mut records = Vec::new();
    for trial in 0..trials as u64 {
        let a1 = random_invertible(m, seed.wrapping_add(3 * trial));
        let a2 = random_invertible(n, seed.wrapping_add(3 * trial + 1));

        let affine = equivalence::affine_transform(f, &a1, &a2).map_err(|e| e.to_string())?;
        let affine_spectrum = spectrum_of(&dlct_from_ddt(&affine).map_err(|e| e.to_string())?);
        records.push(CheckRecord::new(
            name,
            format!("affine-spectrum-{trial}"),
            affine_spectrum == base,
            format!("{:?}", affine_spectrum.distinct_values()),
            format!("{:?}", base.distinct_values()),
        ));

        // Nonzero additive part: only the DLU must survive.
        let additive = random_affine(n, m, seed.wrapping_add(3 * trial + 2));
        let ea = equivalence::ea_transform(f, &a1, &a2, &additive).map_err(|e| e.to_string())?;
        let ea_dlu = spectrum_of(&dlct_from_ddt(&ea).map_err(|e| e.to_string())?).max_abs();
        records.push(CheckRecord::new(
            name,
            format!("ea-dlu-{trial}"),
            ea_dlu == base_dlu,
            format!("{ea_dlu}"),
            format!("{base_dlu}"),
        ));
    }
    Ok(records)
}

/// An arbitrary (not necessarily invertible) affine map built from a seeded
/// square sample, masked down to the requested shape.
fn random_affine(dim_in: usize, dim_out: usize, seed: u64) -> AffineMap {
    let square = random_invertible(dim_in.max(dim_out), seed);
    let in_mask = (1u32 << dim_in) - 1;
    let rows: Vec<u32> = (0..dim_out).map(|r| square.rows()[r] & in_mask).collect();
    let constant = square.constant() & ((1u32 << dim_out) - 1);
    AffineMap::new(dim_in, dim_out, rows, constant).expect("masked rows fit the dimensions")
}

/// The mod-8 Kloosterman congruence over a whole field.
pub fn kloosterman_mod8(n: usize) -> Result<Vec<CheckRecord>, String> {
    if !(3..=dlct::field::MAX_FIELD_DIM).contains(&n) {
        return Err(format!("kloosterman-mod8 needs 3 <= n <= 24, got {n}"));
    }
    let ctx = FieldCtx::new(n, None).map_err(|e| e.to_string())?;
    let sums = ctx.kloosterman_all();
    let mut checked = 0usize;
    let mut first_bad = None;
    for (a, &k) in sums.iter().enumerate() {
        let expected = if ctx.trace(a as u32) == 0 { 7 } else { 3 };
        checked += 1;
        if k.rem_euclid(8) != expected && first_bad.is_none() {
            first_bad = Some((a, k));
        }
    }
    Ok(vec![match first_bad {
        None => CheckRecord::new(
            "kloosterman-mod8",
            format!("n={n}"),
            true,
            format!("{checked}/{checked} values congruent"),
            "K = -1 (mod 8) for trace 0, 3 (mod 8) for trace 1".to_string(),
        ),
        Some((a, k)) => CheckRecord::new(
            "kloosterman-mod8",
            format!("n={n}"),
            false,
            format!("a={a}: K={k}"),
            "K = -1 (mod 8) for trace 0, 3 (mod 8) for trace 1".to_string(),
        ),
    }])
}
