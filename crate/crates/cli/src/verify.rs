//! The `verify` suite: every theorem-level check as one row per property
//! and order.

use serde::Serialize;
use theta_rich::characterize::{
    check_letter_alternation, cross_check_characterizations, episturmian_profile,
    episturmian_richness_criterion, prop51_structure_check,
};
use theta_rich::complexity::{closure_from_index, profile_from_index, sweep_from_index, Status};
use theta_rich::generators::builtin_corpus;
use theta_rich::palindromic::richness_report;
use theta_rich::rauzy::cor33_check;
use theta_rich::FactorIndex;

use crate::source::Source;
use crate::CliError;

/// Property ids with a one-line description, in output order.
pub const PROPERTIES: &[(&str, &str)] = &[
    ("closure", "language of the window is closed under theta"),
    ("inequality", "P(n) + P(n+1) <= dC(n) + 2"),
    ("equality-richness", "equality for all n >= 1 iff the window is rich"),
    ("graph-criterion", "super reduced graph shape predicts equality at n"),
    ("no-special-constant", "P(n) + P(n+1) = 2 once no special factor remains"),
    ("count-bound", "palindromic factor count <= |w| + 1 - #gamma(w)"),
    ("unioccurrence", "unioccurrent longest palindromic suffixes iff rich"),
    ("v-theta-v", "palindromic factors from v to theta(v) iff rich"),
    ("sufficient", "sufficient premises imply rich"),
    ("letter-alternation", "rich implies a and theta(a) alternate"),
    ("episturmian-criterion", "P(1) + P(2) = dC(1) + 2 iff rich (episturmian words)"),
    ("return-structure", "shape of complete returns to bispecials (episturmian words)"),
    ("expected", "richness and episturmianity match the corpus annotation"),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub word: String,
    pub property: &'static str,
    /// `None` for global properties.
    pub n: Option<usize>,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub n_range: (usize, usize),
    pub rows: Vec<VerifyRow>,
    pub passed: usize,
    pub failed: usize,
}

struct Rows<'a> {
    word: &'a str,
    out: Vec<VerifyRow>,
}

impl Rows<'_> {
    fn push(&mut self, property: &'static str, n: Option<usize>, pass: bool, detail: impl Into<String>) {
        self.out.push(VerifyRow {
            word: self.word.to_string(),
            property,
            n,
            pass,
            detail: detail.into(),
        });
    }
}

/// Expected flags for corpus words, as `(rich, episturmian)`.
pub type Expected = Option<(bool, bool)>;

/// Factor length used when classifying a word as episturmian.
const EPISTURMIAN_DEPTH: usize = 31;

pub fn verify_source(
    name: &str,
    source: &Source,
    (lo, hi): (usize, usize),
    expected: Expected,
) -> Result<Vec<VerifyRow>, CliError> {
    let theta = &source.theta;
    let w = &source.word;
    if hi + 2 > w.len() {
        return Err(CliError::Usage(format!(
            "{name}: n up to {hi} needs a window of at least {}, got {}",
            hi + 2,
            w.len()
        )));
    }
    let mut rows = Rows { word: name, out: Vec::new() };
    let idx = FactorIndex::new(w.clone(), hi + 2);
    let mode = source.mode(hi + 2);

    let closure = closure_from_index(theta, &idx, hi + 1, mode);
    rows.push(
        "closure",
        None,
        closure.is_closed(),
        format!(
            "{}{}",
            closure.verdict.as_str(),
            closure
                .counterexample
                .as_deref()
                .map(|c| format!(", image of {c} missing"))
                .unwrap_or_default()
        ),
    );

    let report = richness_report(theta, w);
    let rich = report.is_rich;
    rows.push(
        "count-bound",
        None,
        report.pal_count <= report.bound,
        format!("{} <= {}", report.pal_count, report.bound),
    );

    if closure.is_closed() {
        let profile = profile_from_index(theta, &idx, hi)?;
        for row in profile.rows.iter().filter(|r| r.n >= lo) {
            rows.push(
                "inequality",
                Some(row.n),
                row.status != Status::Violated,
                format!("{} vs {}", row.lhs, row.rhs),
            );
        }
        for n in lo.max(1)..=hi {
            let v = cor33_check(theta, &idx, n, &profile)?;
            rows.push(
                "graph-criterion",
                Some(n),
                v.consistent(),
                format!(
                    "predicted={} observed={}{}",
                    v.equality_predicted,
                    v.equality_observed,
                    if v.reliable { "" } else { " (provisional paths)" }
                ),
            );
        }
        for row in sweep_from_index(theta, &idx, lo..=hi)? {
            if let Some(holds) = row.lemma_holds {
                rows.push("no-special-constant", Some(row.n), holds, format!("lhs={}", row.lhs));
            }
        }
    }

    let x = cross_check_characterizations(theta, w, hi, mode)?;
    if let Some(eq) = x.equality_rich {
        rows.push("equality-richness", None, eq == rich, format!("equality={eq} rich={rich}"));
    }
    rows.push("unioccurrence", None, x.ups == rich, format!("holds={} rich={rich}", x.ups));
    rows.push("v-theta-v", None, x.v_theta_factor == rich, format!("holds={} rich={rich}", x.v_theta_factor));
    rows.push(
        "sufficient",
        None,
        !x.sufficient_premises || rich,
        format!("premises={} rich={rich}", x.sufficient_premises),
    );
    let letters = check_letter_alternation(theta, &idx).holds;
    rows.push("letter-alternation", None, !rich || letters, format!("alternate={letters} rich={rich}"));

    let epi_idx = FactorIndex::new(w.clone(), (hi + 2).max(EPISTURMIAN_DEPTH));
    let profile = episturmian_profile(theta, &epi_idx);
    if closure.is_closed() && profile.is_theta_episturmian_on_window {
        let e = episturmian_richness_criterion(theta, &epi_idx)?;
        rows.push(
            "episturmian-criterion",
            None,
            e.rich == rich,
            format!(
                "P(1)+P(2)={} dC(1)+2={} dC(1)+1={} rich={rich}",
                e.lhs, e.rhs_plus_two, e.rhs_plus_one
            ),
        );
        let s = prop51_structure_check(theta, &epi_idx, None)?;
        let failed = s.checks.iter().filter(|c| !c.holds).count();
        rows.push(
            "return-structure",
            None,
            s.holds,
            format!("{} clauses checked, {failed} failed", s.checks.len()),
        );
    }

    if let Some((exp_rich, exp_epi)) = expected {
        let epi = profile.is_theta_episturmian_on_window && profile.bispecials.len() > 3;
        rows.push(
            "expected",
            None,
            exp_rich == rich && exp_epi == epi,
            format!("rich={rich} episturmian={epi}"),
        );
    }
    Ok(rows.out)
}

pub fn verify_corpus(range: Option<(usize, usize)>) -> Result<Vec<VerifyRow>, CliError> {
    let mut rows = Vec::new();
    for c in builtin_corpus() {
        let source = Source::from_generator(c.spec(), c.theta.clone(), c.generator.clone(), c.window)?;
        let range = range.unwrap_or((0, 30));
        rows.extend(verify_source(c.name, &source, range, Some((c.rich, c.episturmian)))?);
    }
    Ok(rows)
}

pub fn report(rows: Vec<VerifyRow>, n_range: (usize, usize)) -> VerifyReport {
    let failed = rows.iter().filter(|r| !r.pass).count();
    VerifyReport {
        schema_version: crate::report::SCHEMA_VERSION,
        n_range,
        passed: rows.len() - failed,
        failed,
        rows,
    }
}

pub fn rows_csv(rows: &[VerifyRow]) -> Result<String, CliError> {
    let mut out = csv::Writer::from_writer(Vec::new());
    out.write_record(["word", "property", "n", "result", "detail"])?;
    for r in rows {
        out.write_record([
            r.word.clone(),
            r.property.to_string(),
            r.n.map_or_else(|| "global".to_string(), |n| n.to_string()),
            if r.pass { "pass" } else { "fail" }.to_string(),
            r.detail.clone(),
        ])?;
    }
    crate::report::finish(out)
}

pub fn rows_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    for r in &report.rows {
        out.push_str(&format!(
            "{:<18} {:<22} {:>6}  {}  {}\n",
            r.word,
            r.property,
            r.n.map_or_else(|| "global".to_string(), |n| n.to_string()),
            if r.pass { "PASS" } else { "FAIL" },
            r.detail
        ));
    }
    out.push_str(&format!("{} passed, {} failed\n", report.passed, report.failed));
    out
}
