//! Report types and their JSON, text and CSV renderings.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;
use stickel_core::stickelberger::RelationReport;

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    /// Unix time of the run; the only field that differs between identical runs.
    pub generated: u64,
    pub tool: String,
    pub r_max: u32,
    pub digits: u32,
    pub checks: Vec<String>,
    pub orientations: Option<OrientationReport>,
    pub curves: Vec<CurveReport>,
    pub special: Vec<SpecialTable>,
    pub hard_failures: usize,
    pub advisory_warnings: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrientationReport {
    pub bad_prime: String,
    pub dividing: String,
    pub functional_equation: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveReport {
    pub label: String,
    pub key: String,
    pub conductor: u64,
    pub rank_hint: Option<u32>,
    pub fricke: i64,
    pub normalization: String,
    pub moduli: Vec<ModulusReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModulusReport {
    pub modulus: u64,
    pub group: Vec<u64>,
    pub theta: String,
    pub split_primes: Vec<u64>,
    pub orders: Vec<OrderEntry>,
    pub relations: Vec<RelationEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderEntry {
    pub ring: String,
    pub ord: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RelationEntry {
    pub name: String,
    pub modulus: u64,
    pub verdict: String,
    pub orientation: Option<String>,
    pub hard: bool,
    pub passed: bool,
    pub left: String,
    pub right: String,
    pub detail: String,
}

impl From<&RelationReport> for RelationEntry {
    fn from(r: &RelationReport) -> Self {
        Self {
            name: r.name.clone(),
            modulus: r.modulus,
            verdict: r.verdict.name().into(),
            orientation: r.orientation.map(|o| o.name().into()),
            hard: r.hard,
            passed: r.passed(),
            left: r.left.clone(),
            right: r.right.clone(),
            detail: r.detail.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecialTable {
    pub label: String,
    pub moduli: Vec<u64>,
    pub pairing: String,
    pub c: [f64; 2],
    pub max_rel: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub rows: Vec<SpecialRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpecialRow {
    pub modulus: u64,
    pub char_id: String,
    pub a_chi: [f64; 2],
    pub b_chi: [f64; 2],
    pub rel: f64,
}

pub fn pair(z: Complex64) -> [f64; 2] {
    [clean(z.re), clean(z.im)]
}

/// Rounds away float noise below `1e-12` so that `-0` and `1e-17` print as `0`.
fn clean(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        0.0
    } else {
        x
    }
}

pub fn complex(z: [f64; 2]) -> String {
    format!("{:.10}{:+.10}i", z[0], z[1])
}

pub fn render_json(report: &RunReport) -> serde_json::Result<String> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}

/// `M; char_id; A_chi; B_chi; rel` rows for every special-values table.
pub fn render_csv(report: &RunReport) -> String {
    let mut out = String::from("label; M; char_id; A_chi; B_chi; rel\n");
    for t in &report.special {
        for r in &t.rows {
            let _ = writeln!(
                out,
                "{}; {}; {}; {}; {}; {:.3e}",
                t.label,
                r.modulus,
                r.char_id,
                complex(r.a_chi),
                complex(r.b_chi),
                r.rel
            );
        }
    }
    out
}

fn status(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn render_text(report: &RunReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {} generated {}", report.tool, report.generated);
    let _ = writeln!(out, "checks: {}  r_max={} digits={}", report.checks.join(","), report.r_max, report.digits);
    if let Some(o) = &report.orientations {
        let _ = writeln!(
            out,
            "orientations: bad-prime {}, tower {}, functional-equation {}",
            o.bad_prime, o.dividing, o.functional_equation
        );
    }
    for c in &report.curves {
        let rank = c.rank_hint.map_or("?".to_string(), |r| r.to_string());
        let _ = writeln!(out, "[{}] N={} rank={} eps_N={}", c.label, c.conductor, rank, c.fricke);
        for m in &c.moduli {
            let _ = writeln!(out, "  M={} G={:?} S_M={:?}", m.modulus, m.group, m.split_primes);
            let _ = writeln!(out, "    theta {}", m.theta);
            for o in &m.orders {
                let _ = writeln!(out, "    ord_{} = {}", o.ring, o.ord);
            }
            for r in &m.relations {
                let tag = if r.hard { "" } else { " (advisory)" };
                let orient = r.orientation.as_deref().map(|o| format!(" e={o}")).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "    {}: {} [{}{}]{} {}",
                    r.name,
                    status(r.passed),
                    r.verdict,
                    orient,
                    tag,
                    r.detail
                );
            }
        }
    }
    for t in &report.special {
        let _ = writeln!(
            out,
            "special [{}] M={:?} pairing={} c={} max_rel={:.3e}: {}",
            t.label,
            t.moduli,
            t.pairing,
            complex(t.c),
            t.max_rel,
            status(t.passed)
        );
    }
    let _ = writeln!(
        out,
        "summary: {} hard failure(s), {} advisory warning(s)",
        report.hard_failures, report.advisory_warnings
    );
    out
}
