//! Output documents for `analyze`, `generate` and `corpus`.
//!
//! JSON documents carry `schema_version`; fields are only ever added.
//! CSV column orders are fixed:
//!
//! | document  | columns                                              |
//! |-----------|------------------------------------------------------|
//! | profile   | `n,C,dC,P,lhs,rhs,status`                            |
//! | verify    | `word,property,n,result,detail`                      |
//! | corpus    | `name,theta,window,rich,episturmian,description`     |

use serde::Serialize;
use theta_rich::complexity::{closure_from_index, profile_from_index, ClosureStatus, ProfileRow, WindowMode};
use theta_rich::generators::builtin_corpus;
use theta_rich::palindromic::{richness_report, RichnessReport};
use theta_rich::FactorIndex;

use crate::source::Source;
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Serialize)]
pub struct ClosureSummary {
    pub mode: WindowMode,
    #[serde(flatten)]
    pub status: ClosureStatus,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeReport {
    pub schema_version: u32,
    pub source: String,
    pub theta: String,
    pub window_length: usize,
    pub n_range: Option<(usize, usize)>,
    pub richness: RichnessReport,
    pub closure: Option<ClosureSummary>,
    pub complexity: Option<Vec<ProfileRow>>,
}

impl AnalyzeReport {
    /// A profile row breaks the inequality although the language was shown
    /// to be closed under Θ.
    pub fn has_violation(&self) -> bool {
        let closed = self.closure.as_ref().is_some_and(|c| c.status.is_closed());
        closed
            && self
                .complexity
                .iter()
                .flatten()
                .any(|r| r.status == theta_rich::complexity::Status::Violated)
    }
}

/// Default `n` range: `0..=min(30, |w| - 2)`, absent for words shorter than 2.
pub fn default_range(window: usize) -> Option<(usize, usize)> {
    (window >= 2).then(|| (0, 30.min(window - 2)))
}

pub fn analyze(source: &Source, n_range: Option<(usize, usize)>) -> Result<AnalyzeReport, CliError> {
    let w = &source.word;
    let n_range = match n_range {
        Some((a, b)) if b + 1 > w.len() => {
            return Err(CliError::Usage(format!(
                "n range {a}..{b} needs a window of at least {}, got {}",
                b + 1,
                w.len()
            )))
        }
        Some(r) => Some(r),
        None => default_range(w.len()),
    };
    let richness = richness_report(&source.theta, w);
    let (closure, complexity) = match n_range {
        Some((a, b)) => {
            let idx = FactorIndex::new(w.clone(), b + 1);
            let mode = source.mode(b + 1);
            let status = closure_from_index(&source.theta, &idx, b + 1, mode);
            let profile = profile_from_index(&source.theta, &idx, b)?;
            let rows = profile.rows.into_iter().filter(|r| r.n >= a).collect();
            (Some(ClosureSummary { mode, status }), Some(rows))
        }
        None => (None, None),
    };
    Ok(AnalyzeReport {
        schema_version: SCHEMA_VERSION,
        source: source.label.clone(),
        theta: source.theta.spec(),
        window_length: w.len(),
        n_range,
        richness,
        closure,
        complexity,
    })
}

pub fn profile_csv(rows: &[ProfileRow]) -> Result<String, CliError> {
    let mut out = csv::Writer::from_writer(Vec::new());
    out.write_record(["n", "C", "dC", "P", "lhs", "rhs", "status"])?;
    for r in rows {
        out.write_record([
            r.n.to_string(),
            r.c.to_string(),
            r.delta_c.to_string(),
            r.p.to_string(),
            r.lhs.to_string(),
            r.rhs.to_string(),
            r.status.as_str().to_string(),
        ])?;
    }
    finish(out)
}

pub fn finish(out: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = out
        .into_inner()
        .map_err(|e| CliError::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn analyze_text(r: &AnalyzeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("source: {}\ntheta: {}\nwindow: {}\n", r.source, r.theta, r.window_length));
    let rich = &r.richness;
    out.push_str(&format!(
        "palindromic factors: {} of bound {} (defect {})\nrich: {}\n",
        rich.pal_count, rich.bound, rich.defect, rich.is_rich
    ));
    if let Some(w) = &rich.witness {
        out.push_str(&format!(
            "witness: prefix of length {} ends with {:?}, which occurs {} times\n",
            w.prefix_length, w.suffix, w.suffix_occurrences
        ));
    }
    if let Some(c) = &r.closure {
        out.push_str(&format!("closure: {}", c.status.verdict.as_str()));
        if let Some(x) = &c.status.counterexample {
            out.push_str(&format!(" (image of {x:?} missing)"));
        }
        out.push('\n');
    }
    if let Some(rows) = &r.complexity {
        out.push_str(&format!("{:>4} {:>6} {:>4} {:>4} {:>4} {:>4}  status\n", "n", "C", "dC", "P", "lhs", "rhs"));
        for row in rows {
            out.push_str(&format!(
                "{:>4} {:>6} {:>4} {:>4} {:>4} {:>4}  {}\n",
                row.n, row.c, row.delta_c, row.p, row.lhs, row.rhs, row.status.as_str()
            ));
        }
    }
    out
}

#[derive(Debug, Serialize)]
pub struct GenerateReport {
    pub schema_version: u32,
    pub source: String,
    pub theta: String,
    pub length: usize,
    pub word: String,
}

#[derive(Debug, Serialize)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub spec: String,
    pub theta: String,
    pub window: usize,
    pub rich: bool,
    pub episturmian: bool,
    pub description: &'static str,
}

pub fn corpus_entries() -> Vec<CorpusEntry> {
    builtin_corpus()
        .into_iter()
        .map(|c| CorpusEntry {
            name: c.name,
            spec: c.spec(),
            theta: c.theta.spec(),
            window: c.window,
            rich: c.rich,
            episturmian: c.episturmian,
            description: c.description,
        })
        .collect()
}

pub fn corpus_csv(entries: &[CorpusEntry]) -> Result<String, CliError> {
    let mut out = csv::Writer::from_writer(Vec::new());
    out.write_record(["name", "theta", "window", "rich", "episturmian", "description"])?;
    for e in entries {
        out.write_record([
            e.name.to_string(),
            e.theta.clone(),
            e.window.to_string(),
            e.rich.to_string(),
            e.episturmian.to_string(),
            e.description.to_string(),
        ])?;
    }
    finish(out)
}

pub fn corpus_text(entries: &[CorpusEntry]) -> String {
    entries
        .iter()
        .map(|e| {
            format!(
                "{:<18} theta={:<10} window={:<5} rich={:<5} episturmian={:<5} {}\n",
                e.name, e.theta, e.window, e.rich, e.episturmian, e.description
            )
        })
        .collect()
}
