//! Factor complexity C(n), its first difference, Θ-palindromic complexity
//! P(n), and the inequality `P(n) + P(n+1) <= ΔC(n) + 2` for languages
//! closed under Θ.
//!
//! All quantities are computed on a finite window: a length-`n` factor is
//! counted when it starts at a position `<= |w| - n`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::alphabet::Letter;
use crate::antimorphism::Antimorphism;
use crate::error::{Error, Result};
use crate::factor::FactorIndex;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equal,
    Strict,
    Violated,
}

impl Status {
    pub fn classify(lhs: usize, rhs: usize) -> Self {
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Equal => Status::Equal,
            std::cmp::Ordering::Less => Status::Strict,
            std::cmp::Ordering::Greater => Status::Violated,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Equal => "equal",
            Status::Strict => "strict",
            Status::Violated => "violated",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub n: usize,
    pub c: usize,
    /// ΔC(n) = C(n+1) − C(n); C is non-decreasing on recurrent windows, so
    /// a negative difference is reported as a window artifact.
    pub delta_c: i64,
    pub p: usize,
    pub p_next: usize,
    pub lhs: usize,
    pub rhs: i64,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityProfile {
    pub window_length: usize,
    pub rows: Vec<ProfileRow>,
}

impl ComplexityProfile {
    pub fn row(&self, n: usize) -> Option<&ProfileRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    pub fn max_n(&self) -> Option<usize> {
        self.rows.last().map(|r| r.n)
    }

    /// Whether `P(n) + P(n+1) = ΔC(n) + 2` for every row with `n >= from`.
    pub fn equality_from(&self, from: usize) -> bool {
        self.rows
            .iter()
            .filter(|r| r.n >= from)
            .all(|r| r.status == Status::Equal)
    }
}

/// P(n) on the window: Θ-palindromic factors of length `n`.
pub fn palindromic_complexity(theta: &Antimorphism, idx: &FactorIndex, n: usize) -> usize {
    idx.factors(n)
        .filter(|f| theta.is_palindrome_unchecked(f))
        .count()
}

/// Profile rows for `n = 0..=max_n` over an existing index.
pub fn profile_from_index(
    theta: &Antimorphism,
    idx: &FactorIndex,
    max_n: usize,
) -> Result<ComplexityProfile> {
    if max_n + 1 > idx.max_len() {
        return Err(Error::WindowTooShort {
            needed: max_n + 1,
            got: idx.max_len(),
        });
    }
    let c: Vec<usize> = (0..=max_n + 1).map(|n| idx.count(n)).collect();
    let p: Vec<usize> = (0..=max_n + 1)
        .map(|n| palindromic_complexity(theta, idx, n))
        .collect();
    let rows = (0..=max_n)
        .map(|n| {
            let delta_c = c[n + 1] as i64 - c[n] as i64;
            let lhs = p[n] + p[n + 1];
            let rhs = delta_c + 2;
            let status = if rhs < 0 {
                Status::Violated
            } else {
                Status::classify(lhs, rhs as usize)
            };
            ProfileRow {
                n,
                c: c[n],
                delta_c,
                p: p[n],
                p_next: p[n + 1],
                lhs,
                rhs,
                status,
            }
        })
        .collect();
    Ok(ComplexityProfile {
        window_length: idx.window_len(),
        rows,
    })
}

/// Complexity profile of `w` for `n = 0..=max_n`; needs `max_n + 1 <= |w|`.
pub fn complexity_profile(
    theta: &Antimorphism,
    w: &[Letter],
    max_n: usize,
) -> Result<ComplexityProfile> {
    theta.alphabet().check(w)?;
    if max_n + 1 > w.len() {
        return Err(Error::WindowTooShort {
            needed: max_n + 1,
            got: w.len(),
        });
    }
    let idx = FactorIndex::new(Word::from(w), max_n + 1);
    profile_from_index(theta, &idx, max_n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureVerdict {
    ClosedOnWindow,
    NotClosed,
    Inconclusive,
}

impl ClosureVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ClosureVerdict::ClosedOnWindow => "closed-on-window",
            ClosureVerdict::NotClosed => "not-closed",
            ClosureVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// How to read a factor whose Θ-image is missing from the window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WindowMode {
    /// The window is a prefix of a longer word; absence proves nothing.
    Window,
    /// The window contains the whole language up to the checked length
    /// (finite words, periodic words with a full period of margin).
    Complete,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureLength {
    pub n: usize,
    pub factors: usize,
    pub missing_images: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureStatus {
    pub verdict: ClosureVerdict,
    pub per_length: Vec<ClosureLength>,
    /// Shortest factor (lexicographically first) whose image is absent.
    pub counterexample: Option<String>,
}

impl ClosureStatus {
    pub fn is_closed(&self) -> bool {
        self.verdict == ClosureVerdict::ClosedOnWindow
    }
}

pub fn closure_from_index(
    theta: &Antimorphism,
    idx: &FactorIndex,
    max_n: usize,
    mode: WindowMode,
) -> ClosureStatus {
    let max_n = max_n.min(idx.max_len());
    let mut per_length = Vec::with_capacity(max_n + 1);
    let mut counterexample = None;
    for n in 0..=max_n {
        let mut factors = 0;
        let mut missing = 0;
        for f in idx.factors(n) {
            factors += 1;
            if !idx.contains(&theta.apply_unchecked(f)) {
                missing += 1;
                if counterexample.is_none() {
                    counterexample = Some(theta.render(f));
                }
            }
        }
        per_length.push(ClosureLength {
            n,
            factors,
            missing_images: missing,
        });
    }
    let verdict = match (&counterexample, mode) {
        (None, _) => ClosureVerdict::ClosedOnWindow,
        (Some(_), WindowMode::Complete) => ClosureVerdict::NotClosed,
        (Some(_), WindowMode::Window) => ClosureVerdict::Inconclusive,
    };
    ClosureStatus {
        verdict,
        per_length,
        counterexample,
    }
}

/// Checks Θ(f) ∈ L for every factor `f` with `|f| <= max_n`.
pub fn closure_under_theta(
    theta: &Antimorphism,
    w: &[Letter],
    max_n: usize,
    mode: WindowMode,
) -> Result<ClosureStatus> {
    theta.alphabet().check(w)?;
    let idx = FactorIndex::new(Word::from(w), max_n);
    Ok(closure_from_index(theta, &idx, max_n, mode))
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpecialFactors {
    pub left: BTreeSet<Word>,
    pub right: BTreeSet<Word>,
    pub bispecial: BTreeSet<Word>,
}

impl SpecialFactors {
    /// Left or right special factors.
    pub fn any(&self) -> BTreeSet<Word> {
        self.left.union(&self.right).cloned().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }
}

/// Left, right and bispecial factors of length `n` observed on the window.
pub fn special_factors(idx: &FactorIndex, n: usize) -> Result<SpecialFactors> {
    if n > idx.max_len() {
        return Err(Error::OrderTooLarge {
            n,
            max: idx.max_len(),
        });
    }
    let mut out = SpecialFactors::default();
    for f in idx.factors(n) {
        let (left, right) = (idx.is_left_special(f), idx.is_right_special(f));
        if left {
            out.left.insert(Word::from(f));
        }
        if right {
            out.right.insert(Word::from(f));
        }
        if left && right {
            out.bispecial.insert(Word::from(f));
        }
    }
    Ok(out)
}

/// `Σ (deg₊(w) − 1)` over right special factors of length `n`.
pub fn delta_c_from_right_specials(idx: &FactorIndex, n: usize) -> usize {
    idx.factors(n)
        .map(|f| idx.right_extensions(f).len())
        .filter(|d| *d >= 2)
        .map(|d| d - 1)
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub lhs: usize,
    pub rhs: i64,
    pub status: Status,
    /// Whether no special factor of length `n` was observed.
    pub no_special_factors: bool,
    /// For `n` at or past the first length without special factors:
    /// whether `P(n) + P(n+1) = 2`.
    pub lemma_holds: Option<bool>,
}

/// Inequality status per `n` in `range`, plus the constant-two check for
/// lengths where the window has stopped showing special factors.
pub fn verify_thm11_sweep(
    theta: &Antimorphism,
    w: &[Letter],
    range: std::ops::RangeInclusive<usize>,
) -> Result<Vec<SweepRow>> {
    let max_n = *range.end();
    theta.alphabet().check(w)?;
    if max_n + 1 > w.len() {
        return Err(Error::WindowTooShort {
            needed: max_n + 1,
            got: w.len(),
        });
    }
    let idx = FactorIndex::new(Word::from(w), max_n + 1);
    sweep_from_index(theta, &idx, range)
}

pub fn sweep_from_index(
    theta: &Antimorphism,
    idx: &FactorIndex,
    range: std::ops::RangeInclusive<usize>,
) -> Result<Vec<SweepRow>> {
    let profile = profile_from_index(theta, idx, *range.end())?;
    let mut periodic_from: Option<usize> = None;
    for n in 0..=*range.end() {
        if special_factors(idx, n)?.is_empty() {
            periodic_from = Some(n);
            break;
        }
    }
    Ok(range
        .map(|n| {
            let row = profile.rows[n];
            let no_special = idx.factors(n).all(|f| !idx.is_special(f));
            SweepRow {
                n,
                lhs: row.lhs,
                rhs: row.rhs,
                status: row.status,
                no_special_factors: no_special,
                lemma_holds: periodic_from
                    .filter(|start| n >= *start)
                    .map(|_| row.lhs == 2),
            }
        })
        .collect())
}
