//! Full pipeline for one polynomial, its JSON report, and record verification.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::dataset::TableRecord;
use crate::different::{
    build_d, build_dhat, diff_on_e, diff_over_wps, exceptional_hint, format_rational,
    BoundaryDivisor, ExceptionalHint, StdBoundary, EXCEPTIONAL_HINT_CAVEAT,
};
use crate::error::Result;
use crate::parser::{parse_polynomial, render, render_compact};
use crate::poly::{Polynomial, VarList};
use crate::weights::{discrepancy, infer_weights, DiscrepancyTag, WeightAssignment};
use crate::wellform::{is_well_formed, linear_cone_reduce, well_form, ConeReduction, WellFormProfile};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub input: Polynomial,
    pub weights: WeightAssignment,
    pub tilde: Polynomial,
    pub profile: WellFormProfile,
    pub diff_e: BoundaryDivisor,
    pub diff_over_wps: BoundaryDivisor,
    pub d: BoundaryDivisor,
    pub dhat: StdBoundary,
    pub cone: Option<ConeReduction>,
    pub discrepancy: i64,
    pub discrepancy_tag: DiscrepancyTag,
    pub hint: Option<ExceptionalHint>,
}

/// Runs weights, well-forming, cone detection and the differents with zero
/// boundary. `weights` overrides inference.
pub fn analyze(poly: &Polynomial, weights: Option<&[u64]>) -> Result<AnalysisReport> {
    let w = match weights {
        Some(p) => WeightAssignment::for_polynomial(poly, p.to_vec())?,
        None => infer_weights(poly)?,
    };
    let (tilde, profile) = well_form(poly, &w)?;
    let zero = StdBoundary::zero(profile.n);
    let diff_e = diff_on_e(&profile, &zero)?;
    let diff_wps = diff_over_wps(&profile, &zero)?;
    let cone = linear_cone_reduce(&tilde, &profile)?;
    let (a, tag) = discrepancy(&w);
    // The singularity has dimension n - 1.
    let hint = exceptional_hint(&profile, profile.n - 1);
    Ok(AnalysisReport {
        input: poly.clone(),
        weights: w,
        d: build_d(&profile),
        dhat: build_dhat(&profile),
        tilde,
        profile,
        diff_e,
        diff_over_wps: diff_wps,
        cone,
        discrepancy: a,
        discrepancy_tag: tag,
        hint,
    })
}

pub fn analyze_text(text: &str, vars: &VarList, weights: Option<&[u64]>) -> Result<AnalysisReport> {
    analyze(&parse_polynomial(text, vars)?, weights)
}

impl AnalysisReport {
    pub fn vars(&self) -> &VarList {
        self.input.vars()
    }

    pub fn is_well_formed(&self) -> bool {
        is_well_formed(&self.profile)
    }

    /// `Diff_E(B)` for a nonzero standard boundary.
    pub fn diff_e_with(&self, b: &StdBoundary) -> Result<BoundaryDivisor> {
        diff_on_e(&self.profile, b)
    }

    /// `Diff_{E/P}(B)` for a nonzero standard boundary.
    pub fn diff_over_wps_with(&self, b: &StdBoundary) -> Result<BoundaryDivisor> {
        diff_over_wps(&self.profile, b)
    }

    pub fn to_json(&self) -> ReportJson {
        let vars = self.vars();
        let name = |i: usize| vars.name(i).to_string();
        let terms = |d: &BoundaryDivisor| -> Vec<TermJson> {
            d.iter()
                .map(|(s, c)| TermJson {
                    stratum: s.canonical_name(),
                    label: s.display_name(vars),
                    coeff: format_rational(c),
                })
                .collect()
        };
        ReportJson {
            input: render_compact(&self.input),
            vars: vars.names().to_vec(),
            weights: WeightsJson {
                p: self.weights.p.clone(),
                d: self.weights.d,
            },
            q: self.profile.q.clone(),
            q_product: self.profile.q_product,
            tilde: TildeJson {
                poly: render_compact(&self.tilde),
                weights: self.profile.p_tilde.clone(),
                degree: self.profile.d_tilde,
            },
            well_formed: self.is_well_formed(),
            failing_pairs: self
                .profile
                .failing_pairs
                .iter()
                .map(|fp| PairJson {
                    i: name(fp.i),
                    j: name(fp.j),
                    q: fp.q,
                })
                .collect(),
            diff_e: terms(&self.diff_e),
            diff_over_wps: terms(&self.diff_over_wps),
            d: terms(&self.d),
            dhat: self
                .dhat
                .coefficients()
                .iter()
                .enumerate()
                .map(|(i, c)| TermJson {
                    stratum: format!("{}=0", vars.name(i)),
                    label: format!("{{{}=0}}", vars.name(i)),
                    coeff: format_rational(c),
                })
                .collect(),
            cone: self.cone.as_ref().map(|c| ConeJson {
                k: name(c.k),
                weights: c.weights.clone(),
                also_linear: c.also_linear.iter().map(|&i| name(i)).collect(),
            }),
            discrepancy: DiscrepancyJson {
                a: self.discrepancy,
                tag: self.discrepancy_tag,
            },
            exceptional_hint: self.hint.as_ref().map(|h| HintJson {
                var: name(h.var),
                coefficient: format_rational(&h.coefficient),
                threshold: format_rational(&h.threshold),
                caveat: EXCEPTIONAL_HINT_CAVEAT.to_string(),
            }),
            fixpoint_iterations: self.profile.iterations,
        }
    }

    pub fn render_text(&self) -> String {
        let vars = self.vars();
        let tuple = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let divisor = |d: &BoundaryDivisor| {
            if d.is_zero() {
                "0".to_string()
            } else {
                d.display(vars)
            }
        };
        let mut out = String::new();
        let _ = writeln!(out, "f = {}", render(&self.input));
        let _ = writeln!(out, "weights: p=({}), d={}", tuple(&self.weights.p), self.weights.d);
        let _ = writeln!(
            out,
            "q = ({}), Q = {}, passes = {}",
            tuple(&self.profile.q),
            self.profile.q_product,
            self.profile.iterations
        );
        let _ = writeln!(
            out,
            "E: {} ⊂ P({}), degree {}",
            render_compact(&self.tilde),
            tuple(&self.profile.p_tilde),
            self.profile.d_tilde
        );
        if self.is_well_formed() {
            let _ = writeln!(out, "well-formed: yes");
        } else {
            let pairs: Vec<String> = self
                .profile
                .failing_pairs
                .iter()
                .map(|fp| format!("{{{},{}}} q={}", vars.name(fp.i), vars.name(fp.j), fp.q))
                .collect();
            let _ = writeln!(out, "well-formed: no, failing pairs {}", pairs.join(", "));
        }
        match &self.cone {
            Some(c) => {
                let _ = write!(
                    out,
                    "linear cone: eliminate {}, E ≅ P({})",
                    vars.name(c.k),
                    tuple(&c.weights)
                );
                if !c.also_linear.is_empty() {
                    let others: Vec<&str> = c.also_linear.iter().map(|&i| vars.name(i)).collect();
                    let _ = write!(out, " (also linear: {})", others.join(", "));
                }
                out.push('\n');
            }
            None => {
                let _ = writeln!(out, "linear cone: no");
            }
        }
        let _ = writeln!(out, "Diff_E(0) = {}", divisor(&self.diff_e));
        let _ = writeln!(out, "Diff_E/P(0) = {}", divisor(&self.diff_over_wps));
        let _ = writeln!(out, "D = {}", divisor(&self.d));
        let dhat: Vec<String> = self
            .dhat
            .coefficients()
            .iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(i, c)| format!("{} {{{}=0}}", format_rational(c), vars.name(i)))
            .collect();
        let _ = writeln!(
            out,
            "D^ = {}",
            if dhat.is_empty() { "0".to_string() } else { dhat.join(" + ") }
        );
        let _ = writeln!(
            out,
            "discrepancy a = {} ({})",
            self.discrepancy,
            self.discrepancy_tag.as_str()
        );
        if let Some(h) = &self.hint {
            let _ = writeln!(
                out,
                "exceptional hint: 1 - 1/q_{} = {} >= {} ({})",
                vars.name(h.var),
                format_rational(&h.coefficient),
                format_rational(&h.threshold),
                EXCEPTIONAL_HINT_CAVEAT
            );
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportJson {
    pub input: String,
    pub vars: Vec<String>,
    pub weights: WeightsJson,
    pub q: Vec<u64>,
    #[serde(rename = "Q")]
    pub q_product: u64,
    pub tilde: TildeJson,
    pub well_formed: bool,
    pub failing_pairs: Vec<PairJson>,
    pub diff_e: Vec<TermJson>,
    pub diff_over_wps: Vec<TermJson>,
    #[serde(rename = "D")]
    pub d: Vec<TermJson>,
    #[serde(rename = "Dhat")]
    pub dhat: Vec<TermJson>,
    pub cone: Option<ConeJson>,
    pub discrepancy: DiscrepancyJson,
    pub exceptional_hint: Option<HintJson>,
    pub fixpoint_iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightsJson {
    pub p: Vec<u64>,
    pub d: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TildeJson {
    pub poly: String,
    pub weights: Vec<u64>,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub i: String,
    pub j: String,
    pub q: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub stratum: String,
    pub label: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConeJson {
    pub k: String,
    pub weights: Vec<u64>,
    pub also_linear: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyJson {
    pub a: i64,
    pub tag: DiscrepancyTag,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HintJson {
    pub var: String,
    pub coefficient: String,
    pub threshold: String,
    pub caveat: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDiff {
    pub field: String,
    pub expected: String,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub id: String,
    pub status: VerifyStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub diffs: Vec<FieldDiff>,
    pub micros: u64,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        self.status == VerifyStatus::Pass
    }
}

/// Recomputes a record and compares every expected field exactly.
pub fn verify_record(rec: &TableRecord) -> VerifyOutcome {
    let start = Instant::now();
    let mut outcome = VerifyOutcome {
        id: rec.id.clone(),
        status: VerifyStatus::Pass,
        reason: None,
        diffs: Vec::new(),
        micros: 0,
    };
    if let Some(reason) = &rec.skip {
        outcome.status = VerifyStatus::Skip;
        outcome.reason = Some(reason.clone());
        return outcome;
    }
    match analyze(&rec.poly, rec.weights.as_deref()) {
        Err(e) => outcome.diffs.push(FieldDiff {
            field: "analysis".into(),
            expected: "success".into(),
            computed: e.to_string(),
        }),
        Ok(report) => compare(rec, &report, &mut outcome.diffs),
    }
    if !outcome.diffs.is_empty() {
        outcome.status = VerifyStatus::Fail;
    }
    outcome.micros = start.elapsed().as_micros() as u64;
    outcome
}

fn compare(rec: &TableRecord, report: &AnalysisReport, diffs: &mut Vec<FieldDiff>) {
    let tuple = |v: &[u64]| format!("({})", v.iter().map(u64::to_string).collect::<Vec<_>>().join(","));
    let mut check = |field: &str, expected: String, computed: String| {
        if expected != computed {
            diffs.push(FieldDiff {
                field: field.to_string(),
                expected,
                computed,
            });
        }
    };
    if let Some(p) = &rec.weights {
        check("weights", tuple(p), tuple(&report.weights.p));
    }
    if let Some(t) = &rec.expect_tilde_poly {
        // Only the support is tabulated; coefficients are normalized away.
        let support = |p: &Polynomial| {
            let mut ms: Vec<String> = p.support().map(|m| m.display(p.vars(), "")).collect();
            ms.sort();
            ms.join("+")
        };
        check("tilde_poly", support(t), support(&report.tilde));
    }
    check(
        "tilde_weights",
        tuple(&rec.expect_tilde_weights),
        tuple(&report.profile.p_tilde),
    );
    let cone = |c: Option<&Vec<u64>>| c.map_or("none".to_string(), |w| tuple(w));
    check(
        "cone",
        cone(rec.expect_cone.as_ref()),
        cone(report.cone.as_ref().map(|c| &c.weights)),
    );
    divisor_diffs("diff", &rec.expect_diff, &report.diff_e, diffs);
    if let Some(d) = &rec.expect_diff_wps {
        divisor_diffs("diff_wps", d, &report.diff_over_wps, diffs);
    }
    if let Some(d) = &rec.expect_d {
        divisor_diffs("D", d, &report.d, diffs);
    }
}

/// One entry per stratum whose coefficient disagrees.
fn divisor_diffs(field: &str, expected: &BoundaryDivisor, computed: &BoundaryDivisor, diffs: &mut Vec<FieldDiff>) {
    let mut strata: Vec<_> = expected.iter().map(|(s, _)| *s).collect();
    strata.extend(computed.iter().map(|(s, _)| *s));
    strata.sort();
    strata.dedup();
    for s in strata {
        let (e, c) = (expected.get(&s), computed.get(&s));
        if e != c {
            diffs.push(FieldDiff {
                field: format!("{field}[{}]", s.canonical_name()),
                expected: format_rational(&e),
                computed: format_rational(&c),
            });
        }
    }
}
