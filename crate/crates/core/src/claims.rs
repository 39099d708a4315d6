//! Registry of recorded numeric claims, each re-derived from scratch.
//!
//! Every entry names a canned instance, the value on record for it, and
//! the engine that recomputes that value. Verification compares the
//! two exactly; there are no tolerances. The registry order is fixed,
//! so two runs produce identical reports apart from timing.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::circulate::{
    count_circulations, cycle_2pendant_edge8_orientation, cycle_2pendant_orientation,
    cycle_pendant_orientation, diff_restricted, f1_closed_form, g_closed_form,
    indegree_feasibility, lemma_orientation, weakly_eulerian_diff, WeaklyEulerianMode,
};
use crate::error::Error;
use crate::graph::{Graph, TokenFn};
use crate::named::named_graph;
use crate::paint::{is_d1_paintable, paint};
use crate::Result;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    CirculationCount,
    AtVerdict,
    PaintVerdict,
    Structural,
    FormulaIdentity,
}

impl ClaimKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimKind::CirculationCount => "circulation-count",
            ClaimKind::AtVerdict => "at-verdict",
            ClaimKind::PaintVerdict => "paint-verdict",
            ClaimKind::Structural => "structural",
            ClaimKind::FormulaIdentity => "formula-identity",
        }
    }
}

/// One verified claim. `pass` holds exactly when `observed == expected`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub id: String,
    pub kind: ClaimKind,
    pub citation: String,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub certificates: Vec<Certificate>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Also run the two large game solves that the orientation
    /// certificates already cover.
    pub extended: bool,
    /// Test hook: corrupt the observed value of this one id so the
    /// failure path is itself exercised.
    pub tamper: Option<String>,
}

enum Task {
    /// Recount circulations of a canned orientation.
    Census { orientation: &'static str },
    /// Alternating-deletion difference over the listed vertices, plus
    /// the out-degree check of the orientation against its budgets.
    Restricted { orientation: &'static str, w: &'static [usize] },
    /// Solve the game with degree-derived budgets (`low` marks the
    /// vertices keeping full degree).
    PaintMarked { graph: &'static str, low: u64 },
    /// Solve the game with the same number of tokens everywhere.
    PaintUniform { graph: &'static str, tokens: u32 },
    /// Pointwise identity between a counted value and a closed form,
    /// checked on the default range.
    Formula { lo: usize, hi: usize },
    /// Invariant bundle of a named graph.
    Invariants,
}

struct Entry {
    id: &'static str,
    kind: ClaimKind,
    citation: &'static str,
    expected: &'static str,
    extended_only: bool,
    task: Task,
}

fn registry() -> Vec<Entry> {
    use ClaimKind::*;
    use Task::*;
    vec![
        Entry {
            id: "fig9a_k4e",
            kind: CirculationCount,
            citation: "caption census for the fig9a_k4e orientation",
            expected: "ee=2 eo=1",
            extended_only: false,
            task: Census { orientation: "fig9a_k4e" },
        },
        Entry {
            id: "fig9b_k3ve2",
            kind: CirculationCount,
            citation: "caption census for the fig9b_k3ve2 orientation",
            expected: "ee=4 eo=3",
            extended_only: false,
            task: Census { orientation: "fig9b_k3ve2" },
        },
        Entry {
            id: "fig9c_k4ve2",
            kind: CirculationCount,
            citation: "caption census for the fig9c_k4ve2 orientation",
            expected: "ee=16 eo=17",
            extended_only: false,
            task: Census { orientation: "fig9c_k4ve2" },
        },
        Entry {
            id: "fig9d_k2vc4",
            kind: CirculationCount,
            citation: "caption census for the fig9d_k2vc4 orientation",
            expected: "ee=30 eo=28",
            extended_only: false,
            task: Census { orientation: "fig9d_k2vc4" },
        },
        Entry {
            id: "fig9e_k3vp4",
            kind: CirculationCount,
            citation: "caption census for the fig9e_k3vp4 orientation",
            expected: "ee=108 eo=107",
            extended_only: false,
            task: Census { orientation: "fig9e_k3vp4" },
        },
        Entry {
            id: "fig9f_k3vk1p3",
            kind: CirculationCount,
            citation: "caption census for the fig9f_k3vk1p3 orientation",
            expected: "ee=88 eo=87",
            extended_only: false,
            task: Census { orientation: "fig9f_k3vk1p3" },
        },
        Entry {
            id: "fig10a_k4v2e2a",
            kind: CirculationCount,
            citation: "caption census for the fig10a_k4v2e2a orientation",
            expected: "ee=512 eo=515",
            extended_only: false,
            task: Census { orientation: "fig10a_k4v2e2a" },
        },
        Entry {
            id: "fig10b_k4v2e2b",
            kind: CirculationCount,
            citation: "caption census for the fig10b_k4v2e2b orientation",
            expected: "ee=751 eo=750",
            extended_only: false,
            task: Census { orientation: "fig10b_k4v2e2b" },
        },
        Entry {
            id: "fig10c_k4v2e2c",
            kind: CirculationCount,
            citation: "caption census for the fig10c_k4v2e2c orientation",
            expected: "ee=1097 eo=1096",
            extended_only: false,
            task: Census { orientation: "fig10c_k4v2e2c" },
        },
        Entry {
            id: "fig10d_k6ve3",
            kind: CirculationCount,
            citation: "caption census for the fig10d_k6ve3 orientation",
            expected: "ee=4394 eo=4393",
            extended_only: false,
            task: Census { orientation: "fig10d_k6ve3" },
        },
        Entry {
            id: "fig10e_c6",
            kind: CirculationCount,
            citation: "caption census for the fig10e_c6 orientation",
            expected: "ee=22 eo=16",
            extended_only: false,
            task: Census { orientation: "fig10e_c6" },
        },
        Entry {
            id: "lemma_farlinked",
            kind: AtVerdict,
            citation: "recorded alternating-deletion difference over the two pendant tips",
            expected: "absdiff=2 feasible=true",
            extended_only: false,
            task: Restricted { orientation: "farlinked", w: &[5, 6] },
        },
        Entry {
            id: "lemma_threeunlinked",
            kind: AtVerdict,
            citation: "recorded alternating-deletion difference over the three pendant tips",
            expected: "absdiff=1 feasible=true",
            extended_only: false,
            task: Restricted { orientation: "threeunlinked", w: &[5, 6, 7] },
        },
        Entry {
            id: "lemma_b1b2",
            kind: AtVerdict,
            citation: "one more odd than even circulation after tip deletions",
            expected: "absdiff=1 feasible=true",
            extended_only: false,
            task: Restricted { orientation: "b1b2", w: &[5, 6] },
        },
        Entry {
            id: "f1_closed_form",
            kind: FormulaIdentity,
            citation: "unit-imbalance census vs the -1,0,1 pattern in n mod 3",
            expected: "equal on n in [2,20]",
            extended_only: false,
            task: Formula { lo: 2, hi: 20 },
        },
        Entry {
            id: "f2_identity",
            kind: FormulaIdentity,
            citation: "double-imbalance census vs the negated unit census two shorter",
            expected: "equal on n in [4,18]",
            extended_only: false,
            task: Formula { lo: 4, hi: 18 },
        },
        Entry {
            id: "g_closed_form",
            kind: FormulaIdentity,
            citation: "offset-imbalance census vs the 0,-1,1 pattern in n mod 3",
            expected: "equal on n in [4,18]",
            extended_only: false,
            task: Formula { lo: 4, hi: 18 },
        },
        Entry {
            id: "cycle_pendant_diff",
            kind: FormulaIdentity,
            citation: "tip-restricted census of the pendant cycle square vs -1+f1(n-1)-2*f1(n-2), zero iff n = 2 mod 3",
            expected: "equal on n in [5,13]",
            extended_only: false,
            task: Formula { lo: 5, hi: 13 },
        },
        Entry {
            id: "cycle_2pendant_diff",
            kind: FormulaIdentity,
            citation: "tip-restricted census of the two-pendant cycle square vs 1-2*(f1(n-4)+f1(n-6)), -1 at n=7",
            expected: "equal on n in [7,13]",
            extended_only: false,
            task: Formula { lo: 7, hi: 13 },
        },
        Entry {
            id: "cycle_2pendant_edge8",
            kind: FormulaIdentity,
            citation: "tip-to-tip edge changes nothing at n=8: half odd, half even among subsets using it",
            expected: "equal at n=8",
            extended_only: false,
            task: Formula { lo: 8, hi: 8 },
        },
        Entry {
            id: "lemma_k4e_paint",
            kind: PaintVerdict,
            citation: "game on the diamond, degree budgets with three low vertices",
            expected: "painter_wins=true",
            extended_only: false,
            task: PaintMarked { graph: "k4_minus_e", low: 0b1110 },
        },
        Entry {
            id: "lemma_k3ve2_paint",
            kind: PaintVerdict,
            citation: "game on the triangle joined to a stable pair, one low vertex in each part",
            expected: "painter_wins=true",
            extended_only: false,
            task: PaintMarked { graph: "k3_join_e2", low: 0b01001 },
        },
        Entry {
            id: "lemma_k4ve2_paint",
            kind: PaintVerdict,
            citation: "game on the 4-clique joined to a stable pair, one low clique vertex",
            expected: "painter_wins=true",
            extended_only: false,
            task: PaintMarked { graph: "k4_join_e2", low: 0b000001 },
        },
        Entry {
            id: "lemma_k2vc4_paint",
            kind: PaintVerdict,
            citation: "game on the edge joined to a 4-cycle, all vertices high",
            expected: "painter_wins=true",
            extended_only: false,
            task: PaintMarked { graph: "k2_join_c4", low: 0 },
        },
        Entry {
            id: "lemma_k3vp4_paint",
            kind: PaintVerdict,
            citation: "game on the triangle joined to a 4-path, all vertices high",
            expected: "painter_wins=true",
            extended_only: false,
            task: PaintMarked { graph: "k3_join_p4", low: 0 },
        },
        Entry {
            id: "lemma_k3vk1p3_paint",
            kind: PaintVerdict,
            citation: "game on the triangle joined to a point plus 3-path, all vertices high",
            expected: "painter_wins=true",
            extended_only: false,
            task: PaintMarked { graph: "k3_join_k1p3", low: 0 },
        },
        Entry {
            id: "lemma_c6_paint",
            kind: PaintVerdict,
            citation: "game on the squared 6-cycle, all vertices high (three tokens each)",
            expected: "painter_wins=true",
            extended_only: false,
            task: PaintMarked { graph: "c6_square", low: 0 },
        },
        Entry {
            id: "k4_tokens2_lister",
            kind: PaintVerdict,
            citation: "two tokens cannot color a 4-clique",
            expected: "painter_wins=false",
            extended_only: false,
            task: PaintUniform { graph: "complete 4", tokens: 2 },
        },
        Entry {
            id: "k3_tokens2_lister",
            kind: PaintVerdict,
            citation: "two tokens cannot color a triangle",
            expected: "painter_wins=false",
            extended_only: false,
            task: PaintUniform { graph: "complete 3", tokens: 2 },
        },
        Entry {
            id: "lemma_k4v2e2_paint",
            kind: PaintVerdict,
            citation: "game on the 4-clique joined to four stable vertices; fig10a_k4v2e2a certifies the same claim",
            expected: "painter_wins=true",
            extended_only: true,
            task: PaintMarked { graph: "k4_join_2e2", low: 0 },
        },
        Entry {
            id: "lemma_k6ve3_paint",
            kind: PaintVerdict,
            citation: "game on the 6-clique joined to three stable vertices; fig10d_k6ve3 certifies the same claim",
            expected: "painter_wins=true",
            extended_only: true,
            task: PaintMarked { graph: "k6_join_e3", low: 0 },
        },
        Entry {
            id: "elspas4_square",
            kind: Structural,
            citation: "recorded invariants of the transcribed 4-regular graph",
            expected: "regular=4 square=K15",
            extended_only: false,
            task: Invariants,
        },
        Entry {
            id: "elspas5_square",
            kind: Structural,
            citation: "recorded invariants of the transcribed 5-regular graph",
            expected: "regular=5 square=K24",
            extended_only: false,
            task: Invariants,
        },
        Entry {
            id: "petersen_moore",
            kind: Structural,
            citation: "the classic 3-regular graph whose square is complete",
            expected: "moore=true square=K10",
            extended_only: false,
            task: Invariants,
        },
        Entry {
            id: "bk15_chromatic",
            kind: Structural,
            citation: "recorded degree, clique number, and chromatic number of the 15-vertex example",
            expected: "regular=8 clique=6 chromatic=8",
            extended_only: false,
            task: Invariants,
        },
    ]
}

fn fmt_regular(g: &Graph) -> String {
    match g.regular_degree() {
        Some(d) => d.to_string(),
        None => "no".to_string(),
    }
}

fn fmt_complete(g: &Graph) -> String {
    if g.is_complete() {
        format!("K{}", g.n())
    } else {
        format!("not complete on {} vertices", g.n())
    }
}

fn census_observed(orientation: &str) -> Result<String> {
    let (d, _) = lemma_orientation(orientation)?;
    let c = count_circulations(&d)?;
    Ok(format!("ee={} eo={}", c.ee, c.eo))
}

fn restricted_observed(orientation: &str, w: &[usize]) -> Result<String> {
    let (d, f) = lemma_orientation(orientation)?;
    let a = diff_restricted(&d, w)?.unsigned_abs();
    let feasible = indegree_feasibility(&d, &f)?;
    Ok(format!("absdiff={a} feasible={feasible}"))
}

fn paint_observed(graph: &str, low: u64) -> Result<String> {
    let g = named_graph(graph)?;
    let out = is_d1_paintable(&g, low)?;
    Ok(format!("painter_wins={}", out.painter_wins))
}

fn paint_uniform_observed(graph: &str, tokens: u32) -> Result<String> {
    let g = named_graph(graph)?;
    let out = paint(&g, &TokenFn::uniform(g.n(), tokens))?;
    Ok(format!("painter_wins={}", out.painter_wins))
}

fn check_each(
    lo: usize,
    hi: usize,
    mut sides: impl FnMut(usize) -> Result<(i64, i64)>,
) -> Result<String> {
    for n in lo..=hi {
        let (computed, stated) = sides(n)?;
        if computed != stated {
            return Ok(format!("mismatch at n={n}: computed {computed}, stated {stated}"));
        }
    }
    Ok(format!("equal on n in [{lo},{hi}]"))
}

fn formula_observed(id: &str, lo: usize, hi: usize) -> Result<String> {
    if lo > hi {
        return Err(Error::OverBudget {
            op: "verify_formula",
            detail: format!("empty range [{lo},{hi}]"),
        });
    }
    match id {
        "f1_closed_form" => check_each(lo, hi, |n| {
            Ok((weakly_eulerian_diff(n, WeaklyEulerianMode::F1)?, f1_closed_form(n)))
        }),
        "f2_identity" => check_each(lo, hi, |n| {
            Ok((
                weakly_eulerian_diff(n, WeaklyEulerianMode::F2)?,
                -weakly_eulerian_diff(n - 2, WeaklyEulerianMode::F1)?,
            ))
        }),
        "g_closed_form" => check_each(lo, hi, |n| {
            Ok((weakly_eulerian_diff(n, WeaklyEulerianMode::G)?, g_closed_form(n)))
        }),
        "cycle_pendant_diff" => {
            for n in lo..=hi {
                let d = cycle_pendant_orientation(n)?;
                let computed = diff_restricted(&d, &[n])?;
                let stated = -1 + f1_closed_form(n - 1) - 2 * f1_closed_form(n - 2);
                if computed != stated {
                    return Ok(format!("mismatch at n={n}: computed {computed}, stated {stated}"));
                }
                let vanishes = n % 3 == 2;
                if (computed == 0) != vanishes {
                    return Ok(format!(
                        "zero-pattern break at n={n}: difference {computed} vs n mod 3 = {}",
                        n % 3
                    ));
                }
            }
            Ok(format!("equal on n in [{lo},{hi}]"))
        }
        "cycle_2pendant_diff" => check_each(lo, hi, |n| {
            let d = cycle_2pendant_orientation(n)?;
            let computed = diff_restricted(&d, &[n, n + 1])?;
            let stated = if n == 7 {
                -1
            } else {
                1 - 2 * (f1_closed_form(n - 4) + f1_closed_form(n - 6))
            };
            Ok((computed, stated))
        }),
        "cycle_2pendant_edge8" => {
            if (lo, hi) != (8, 8) {
                return Err(Error::OverBudget {
                    op: "verify_formula",
                    detail: "the tip-to-tip edge variant exists only at n=8".into(),
                });
            }
            let with_edge = diff_restricted(&cycle_2pendant_edge8_orientation(), &[8, 9])?;
            let without = diff_restricted(&cycle_2pendant_orientation(8)?, &[8, 9])?;
            if with_edge == without {
                Ok("equal at n=8".to_string())
            } else {
                Ok(format!("mismatch at n=8: with edge {with_edge}, without {without}"))
            }
        }
        other => Err(Error::UnknownClaim(other.to_string())),
    }
}

fn structural_observed(id: &str) -> Result<String> {
    match id {
        "elspas4_square" => {
            let g = named_graph("elspas4")?;
            Ok(format!("regular={} square={}", fmt_regular(&g), fmt_complete(&g.square())))
        }
        "elspas5_square" => {
            let g = named_graph("elspas5")?;
            Ok(format!("regular={} square={}", fmt_regular(&g), fmt_complete(&g.square())))
        }
        "petersen_moore" => {
            let g = named_graph("petersen")?;
            Ok(format!("moore={} square={}", g.is_moore(), fmt_complete(&g.square())))
        }
        "bk15_chromatic" => {
            let g = named_graph("bk15")?;
            Ok(format!(
                "regular={} clique={} chromatic={}",
                fmt_regular(&g),
                g.clique_number(),
                g.chromatic_number()?
            ))
        }
        other => Err(Error::UnknownClaim(other.to_string())),
    }
}

fn run_entry(e: &Entry) -> Certificate {
    let start = Instant::now();
    let observed = match &e.task {
        Task::Census { orientation } => census_observed(orientation),
        Task::Restricted { orientation, w } => restricted_observed(orientation, w),
        Task::PaintMarked { graph, low } => paint_observed(graph, *low),
        Task::PaintUniform { graph, tokens } => paint_uniform_observed(graph, *tokens),
        Task::Formula { lo, hi } => formula_observed(e.id, *lo, *hi),
        Task::Invariants => structural_observed(e.id),
    };
    let observed = match observed {
        Ok(s) => s,
        Err(err) => format!("error: {err}"),
    };
    let runtime = start.elapsed().as_millis() as u64;
    Certificate {
        id: e.id.to_string(),
        kind: e.kind,
        citation: e.citation.to_string(),
        expected: e.expected.to_string(),
        pass: observed == e.expected,
        observed,
        runtime_ms: Some(runtime),
    }
}

fn find_entry(id: &str) -> Result<Entry> {
    registry()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Verifies one lemma or figure claim (census, deletion difference, or
/// game verdict).
pub fn verify_lemma(id: &str) -> Result<Certificate> {
    let e = find_entry(id)?;
    match e.kind {
        ClaimKind::CirculationCount | ClaimKind::AtVerdict | ClaimKind::PaintVerdict => {
            Ok(run_entry(&e))
        }
        _ => Err(Error::UnknownClaim(id.to_string())),
    }
}

/// Verifies one structural claim about a named graph.
pub fn verify_structural(id: &str) -> Result<Certificate> {
    let e = find_entry(id)?;
    match e.kind {
        ClaimKind::Structural => Ok(run_entry(&e)),
        _ => Err(Error::UnknownClaim(id.to_string())),
    }
}

/// Verifies one formula identity on a caller-chosen range.
pub fn verify_formula(id: &str, range: (usize, usize)) -> Result<Certificate> {
    let e = find_entry(id)?;
    if e.kind != ClaimKind::FormulaIdentity {
        return Err(Error::UnknownClaim(id.to_string()));
    }
    let (lo, hi) = range;
    let start = Instant::now();
    let observed = match formula_observed(id, lo, hi) {
        Ok(s) => s,
        Err(err) => return Err(err),
    };
    let expected = if lo == hi && id == "cycle_2pendant_edge8" {
        "equal at n=8".to_string()
    } else {
        format!("equal on n in [{lo},{hi}]")
    };
    Ok(Certificate {
        id: e.id.to_string(),
        kind: e.kind,
        citation: e.citation.to_string(),
        pass: observed == expected,
        expected,
        observed,
        runtime_ms: Some(start.elapsed().as_millis() as u64),
    })
}

/// Verifies any registered claim by id with its default settings.
pub fn verify_claim(id: &str) -> Result<Certificate> {
    Ok(run_entry(&find_entry(id)?))
}

/// Runs the whole registry in its fixed order.
pub fn verify_all(opts: &VerifyOptions) -> Report {
    let mut certificates = Vec::new();
    for e in registry() {
        if e.extended_only && !opts.extended {
            continue;
        }
        let mut cert = run_entry(&e);
        if opts.tamper.as_deref() == Some(e.id) {
            cert.observed = format!("{} (tampered)", cert.observed);
            cert.pass = false;
        }
        certificates.push(cert);
    }
    let total = certificates.len();
    let passed = certificates.iter().filter(|c| c.pass).count();
    Report { failed: total - passed, total, passed, certificates }
}

/// Ids in registry order. Extended-only entries are included exactly
/// when `extended` is set.
pub fn known_claim_ids(extended: bool) -> Vec<&'static str> {
    registry()
        .iter()
        .filter(|e| extended || !e.extended_only)
        .map(|e| e.id)
        .collect()
}

/// One JSON object per certificate, one per line, registry order.
pub fn render_json_lines(report: &Report, include_runtime: bool) -> String {
    let mut out = String::new();
    for cert in &report.certificates {
        let mut c = cert.clone();
        if !include_runtime {
            c.runtime_ms = None;
        }
        out.push_str(&serde_json::to_string(&c).expect("certificate serializes"));
        out.push('\n');
    }
    out
}

/// Fixed-width human-readable table.
pub fn render_table(report: &Report, include_runtime: bool) -> String {
    let mut out = String::new();
    let id_w = report
        .certificates
        .iter()
        .map(|c| c.id.len())
        .max()
        .unwrap_or(2)
        .max("id".len());
    let kind_w = report
        .certificates
        .iter()
        .map(|c| c.kind.as_str().len())
        .max()
        .unwrap_or(4)
        .max("kind".len());
    let exp_w = report
        .certificates
        .iter()
        .map(|c| c.expected.len())
        .max()
        .unwrap_or(8)
        .max("expected".len());
    out.push_str(&format!(
        "{:4}  {:id_w$}  {:kind_w$}  {:exp_w$}  observed\n",
        "", "id", "kind", "expected"
    ));
    for c in &report.certificates {
        let mark = if c.pass { "PASS" } else { "FAIL" };
        let mut line = format!(
            "{:4}  {:id_w$}  {:kind_w$}  {:exp_w$}  {}",
            mark,
            c.id,
            c.kind.as_str(),
            c.expected,
            c.observed
        );
        if include_runtime {
            if let Some(ms) = c.runtime_ms {
                line.push_str(&format!("  [{ms} ms]"));
            }
        }
        out.push_str(&line);
        out.push('\n');
    }
    out.push_str(&format!(
        "{} of {} certificates pass ({} fail)\n",
        report.passed, report.total, report.failed
    ));
    out
}
