//! Executable forms of the richness characterizations and of the structure
//! of Θ-episturmian words (bispecial factors, their complete return words,
//! and the indices `k_a`).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::alphabet::Letter;
use crate::antimorphism::Antimorphism;
use crate::complexity::{
    closure_from_index, profile_from_index, sweep_from_index, ClosureVerdict, SweepRow,
    WindowMode,
};
use crate::error::{Error, Result};
use crate::factor::{complete_return_words, FactorIndex};
use crate::palindromic::prefix_statuses;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum PropertyId {
    /// Unioccurrent longest Θ-palindromic suffixes.
    #[serde(rename = "ups")]
    Ups,
    /// Occurrences of `f` and Θ(f) alternate.
    #[serde(rename = "alternation")]
    Alternation,
    /// Factors from `v` to Θ(v) are Θ-palindromes, letters alternate.
    #[serde(rename = "vTheta_factor")]
    VThetaFactor,
    /// The three sufficient premises jointly.
    #[serde(rename = "sufficient")]
    Sufficient,
    #[serde(rename = "letter_alternation")]
    LetterAlternation,
    /// Complete return words to Θ-palindromes are Θ-palindromes.
    #[serde(rename = "crw_palindrome")]
    CrwPalindrome,
}

impl PropertyId {
    pub fn as_str(self) -> &'static str {
        match self {
            PropertyId::Ups => "ups",
            PropertyId::Alternation => "alternation",
            PropertyId::VThetaFactor => "vTheta_factor",
            PropertyId::Sufficient => "sufficient",
            PropertyId::LetterAlternation => "letter_alternation",
            PropertyId::CrwPalindrome => "crw_palindrome",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Factors involved, rendered.
    pub factors: Vec<String>,
    /// Start positions in the window.
    pub positions: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterizationResult {
    pub property_id: PropertyId,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl CharacterizationResult {
    fn pass(property_id: PropertyId) -> Self {
        Self {
            property_id,
            holds: true,
            counterexample: None,
        }
    }

    fn fail(property_id: PropertyId, counterexample: Counterexample) -> Self {
        Self {
            property_id,
            holds: false,
            counterexample: Some(counterexample),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Longest factor examined; clamped to the index limit.
    pub max_factor_len: usize,
    /// Ignore return words touching the first or last `|f|` positions.
    pub trim: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            max_factor_len: usize::MAX,
            trim: true,
        }
    }
}

impl CheckOptions {
    /// No trimming: the window is read as a finite word in its own right.
    pub fn finite() -> Self {
        Self {
            trim: false,
            ..Self::default()
        }
    }
}

pub fn check_return_words_palindromic(
    theta: &Antimorphism,
    idx: &FactorIndex,
) -> CharacterizationResult {
    check_return_words_palindromic_with(theta, idx, CheckOptions::default())
}

pub fn check_return_words_palindromic_with(
    theta: &Antimorphism,
    idx: &FactorIndex,
    opts: CheckOptions,
) -> CharacterizationResult {
    let source = idx.source();
    let max = opts.max_factor_len.min(idx.max_len());
    for n in 1..=max {
        for f in idx.factors(n).filter(|f| theta.is_palindrome_unchecked(f)) {
            let occ = idx.occurrences(f);
            for pair in occ.windows(2) {
                let (i, j) = (pair[0], pair[1]);
                if opts.trim && (i < n || j + 2 * n > source.len()) {
                    continue;
                }
                let r = &source[i..j + n];
                if !theta.is_palindrome_unchecked(r) {
                    return CharacterizationResult::fail(
                        PropertyId::CrwPalindrome,
                        Counterexample {
                            factors: vec![theta.render(f), theta.render(r)],
                            positions: vec![i, j],
                            detail: "complete return word is not a Θ-palindrome".into(),
                        },
                    );
                }
            }
        }
    }
    CharacterizationResult::pass(PropertyId::CrwPalindrome)
}

/// Occurrences of `f` (label `false`) and Θ(f) (label `true`) merged by
/// position.
fn merged_occurrences(idx: &FactorIndex, f: &[Letter], image: &[Letter]) -> Vec<(usize, bool)> {
    let a = idx.occurrences(f);
    let b = idx.occurrences(image);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push((a[i], false));
            i += 1;
        } else {
            out.push((b[j], true));
            j += 1;
        }
    }
    out
}

pub fn check_alternation(
    theta: &Antimorphism,
    idx: &FactorIndex,
    f: &[Letter],
) -> Result<CharacterizationResult> {
    let image = theta.apply(f)?;
    if image.as_slice() == f {
        return Err(Error::SelfImageFactor);
    }
    Ok(alternation(theta, idx, f, &image, PropertyId::Alternation))
}

fn alternation(
    theta: &Antimorphism,
    idx: &FactorIndex,
    f: &[Letter],
    image: &[Letter],
    id: PropertyId,
) -> CharacterizationResult {
    let merged = merged_occurrences(idx, f, image);
    for pair in merged.windows(2) {
        if pair[0].1 == pair[1].1 {
            let repeated = if pair[0].1 { image } else { f };
            return CharacterizationResult::fail(
                id,
                Counterexample {
                    factors: vec![theta.render(f), theta.render(image)],
                    positions: vec![pair[0].0, pair[1].0],
                    detail: format!(
                        "{} occurs twice with no {} between",
                        theta.render(repeated),
                        theta.render(if pair[0].1 { f } else { image })
                    ),
                },
            );
        }
    }
    CharacterizationResult::pass(id)
}

/// Alternation of `a` and Θ(a) for every letter not fixed by Θ.
pub fn check_letter_alternation(theta: &Antimorphism, idx: &FactorIndex) -> CharacterizationResult {
    for a in theta.alphabet().letters() {
        let image = theta.image(a);
        if image <= a {
            continue;
        }
        let r = alternation(theta, idx, &[a], &[image], PropertyId::LetterAlternation);
        if !r.holds {
            return r;
        }
    }
    CharacterizationResult::pass(PropertyId::LetterAlternation)
}

/// First factor beginning with `v`, ending with Θ(v), with no other
/// occurrence of either inside, that is not a Θ-palindrome; `v` ranges over
/// factors with length in `lengths`.
fn first_v_theta_v_violation(
    theta: &Antimorphism,
    idx: &FactorIndex,
    lengths: std::ops::RangeInclusive<usize>,
) -> Option<Counterexample> {
    let source = idx.source();
    for n in lengths {
        for v in idx.factors(n) {
            let image = theta.apply_unchecked(v);
            let merged = if image.as_slice() == v {
                idx.occurrences(v).iter().map(|i| (*i, true)).collect()
            } else {
                merged_occurrences(idx, v, &image)
            };
            let self_image = image.as_slice() == v;
            for pair in merged.windows(2) {
                let ((i, from_image), (j, to_image)) = (pair[0], pair[1]);
                if !(self_image || (!from_image && to_image)) {
                    continue;
                }
                let r = &source[i..j + n];
                if !theta.is_palindrome_unchecked(r) {
                    return Some(Counterexample {
                        factors: vec![theta.render(v), theta.render(r)],
                        positions: vec![i, j],
                        detail: "factor from v to Θ(v) is not a Θ-palindrome".into(),
                    });
                }
            }
        }
    }
    None
}

pub fn check_v_theta_v_factors(theta: &Antimorphism, idx: &FactorIndex) -> CharacterizationResult {
    check_v_theta_v_factors_with(theta, idx, CheckOptions::default())
}

pub fn check_v_theta_v_factors_with(
    theta: &Antimorphism,
    idx: &FactorIndex,
    opts: CheckOptions,
) -> CharacterizationResult {
    let max = opts.max_factor_len.min(idx.max_len());
    if let Some(c) = first_v_theta_v_violation(theta, idx, 1..=max) {
        return CharacterizationResult::fail(PropertyId::VThetaFactor, c);
    }
    let letters = check_letter_alternation(theta, idx);
    match letters.counterexample {
        Some(c) => CharacterizationResult::fail(PropertyId::VThetaFactor, c),
        None => CharacterizationResult::pass(PropertyId::VThetaFactor),
    }
}

/// The sufficient premises: palindromic complete returns to Θ-palindromes,
/// letter alternation, and Θ-palindromic factors from `a` to Θ(a).
pub fn check_sufficient_premises(
    theta: &Antimorphism,
    idx: &FactorIndex,
    opts: CheckOptions,
) -> CharacterizationResult {
    let crw = check_return_words_palindromic_with(theta, idx, opts);
    if let Some(c) = crw.counterexample {
        return CharacterizationResult::fail(PropertyId::Sufficient, c);
    }
    let letters = check_letter_alternation(theta, idx);
    if let Some(c) = letters.counterexample {
        return CharacterizationResult::fail(PropertyId::Sufficient, c);
    }
    if idx.max_len() >= 1 {
        if let Some(c) = first_v_theta_v_violation(theta, idx, 1..=1) {
            return CharacterizationResult::fail(PropertyId::Sufficient, c);
        }
    }
    CharacterizationResult::pass(PropertyId::Sufficient)
}

/// Unioccurrence of longest Θ-palindromic suffixes over all prefixes of the
/// window, with the γ exemption.
pub fn check_unioccurrence(theta: &Antimorphism, w: &[Letter]) -> CharacterizationResult {
    match prefix_statuses(theta, w).into_iter().find(|s| !s.is_ok()) {
        None => CharacterizationResult::pass(PropertyId::Ups),
        Some(s) => {
            let prefix = &w[..s.length];
            let suffix = &prefix[s.length - s.longest_suffix..];
            CharacterizationResult::fail(
                PropertyId::Ups,
                Counterexample {
                    factors: vec![theta.render(prefix), theta.render(suffix)],
                    positions: crate::word::occurrences(prefix, suffix),
                    detail: "longest Θ-palindromic suffix of the prefix occurs more than once"
                        .into(),
                },
            )
        }
    }
}

/// All richness characterizations evaluated on one window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub window_length: usize,
    pub max_n: usize,
    pub closure: ClosureVerdict,
    /// Prefix count equals the γ-corrected bound.
    pub count_rich: bool,
    pub ups: bool,
    /// `P(n) + P(n+1) = ΔC(n) + 2` for `1 <= n <= max_n`; absent when
    /// closure under Θ was not established.
    pub equality_rich: Option<bool>,
    pub v_theta_factor: bool,
    pub sufficient_premises: bool,
    pub results: Vec<CharacterizationResult>,
    /// Results apply to the window only, without closure.
    pub partial: bool,
    /// No implication between the characterizations is violated.
    pub consistent: bool,
}

/// Evaluates every characterization on `w` and checks the implications
/// between them. Factors are examined up to length `max(max_n + 1, 60)`.
pub fn cross_check_characterizations(
    theta: &Antimorphism,
    w: &[Letter],
    max_n: usize,
    mode: WindowMode,
) -> Result<CrossCheck> {
    theta.alphabet().check(w)?;
    if max_n + 1 > w.len() {
        return Err(Error::WindowTooShort {
            needed: max_n + 1,
            got: w.len(),
        });
    }
    let idx = FactorIndex::new(Word::from(w), (max_n + 1).max(60));
    let opts = CheckOptions::finite();

    let report = crate::palindromic::richness_report(theta, w);
    let ups = check_unioccurrence(theta, w);
    let v_theta = check_v_theta_v_factors_with(theta, &idx, opts);
    let sufficient = check_sufficient_premises(theta, &idx, opts);
    let crw = check_return_words_palindromic_with(theta, &idx, opts);
    let letters = check_letter_alternation(theta, &idx);

    let closure = closure_from_index(theta, &idx, max_n + 1, mode);
    let equality_rich = if closure.is_closed() {
        let profile = profile_from_index(theta, &idx, max_n)?;
        Some(profile.equality_from(1))
    } else {
        None
    };

    let rich = report.is_rich;
    let consistent = v_theta.holds == rich
        && ups.holds == rich
        && (!sufficient.holds || rich)
        && equality_rich.map_or(true, |e| e == rich);

    Ok(CrossCheck {
        window_length: w.len(),
        max_n,
        closure: closure.verdict,
        count_rich: rich,
        ups: ups.holds,
        equality_rich,
        v_theta_factor: v_theta.holds,
        sufficient_premises: sufficient.holds,
        partial: !closure.is_closed(),
        consistent,
        results: vec![ups, v_theta, sufficient, crw, letters],
    })
}

/// Observed value of `k_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "k", rename_all = "kebab-case")]
pub enum KaValue {
    /// A later bispecial with enough occurrences shows the condition failing.
    Determined(usize),
    /// Every observed bispecial up to this index satisfies the condition.
    AtLeast(usize),
    /// The letter or its image never occurs.
    Unobserved,
}

impl KaValue {
    pub fn value(self) -> Option<usize> {
        match self {
            KaValue::Determined(k) | KaValue::AtLeast(k) => Some(k),
            KaValue::Unobserved => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReturnWord {
    pub letter: String,
    pub word: String,
    pub palindromic: bool,
    /// More than one distinct return starting with `w_k·a` was observed.
    pub anomalous: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bispecial {
    pub k: usize,
    pub word: String,
    pub length: usize,
    pub occurrences: usize,
    /// The letter `z_k` with `w_k·z_k` a prefix of `w_{k+1}`.
    pub z: Option<String>,
    /// ΔC(|w_k|).
    pub delta_c: i64,
    pub returns: Vec<ReturnWord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LetterKa {
    pub letter: String,
    pub image: String,
    pub k_a: KaValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EpisturmianProfile {
    pub window_length: usize,
    /// Largest length for which left special factors were counted.
    pub max_n: usize,
    pub closed: bool,
    /// Lengths with two or more left special factors, and those factors.
    pub left_special_violations: Vec<(usize, Vec<String>)>,
    pub is_theta_episturmian_on_window: bool,
    pub bispecials: Vec<Bispecial>,
    pub k_a: Vec<LetterKa>,
}

/// Occurrences a bispecial needs before a failing condition at it is
/// trusted to fix `k_a`.
pub const KA_STABILIZATION_OCCURRENCES: usize = 8;

struct BispecialData {
    word: Word,
    occurrences: usize,
    /// First observed return word per letter following `w_k`, and whether
    /// other distinct returns with the same letter were seen.
    returns: BTreeMap<Letter, (Word, bool)>,
}

fn bispecial_data(idx: &FactorIndex, max_n: usize) -> Vec<BispecialData> {
    let mut out: Vec<BispecialData> = Vec::new();
    for n in 0..=max_n {
        for f in idx.factors(n).filter(|f| idx.is_bispecial(f)) {
            let mut returns: BTreeMap<Letter, (Word, bool)> = BTreeMap::new();
            for r in complete_return_words(idx, f) {
                let a = r[n];
                match returns.get_mut(&a) {
                    Some(entry) => {
                        if entry.0 != r {
                            entry.1 = true;
                        }
                    }
                    None => {
                        returns.insert(a, (r, false));
                    }
                }
            }
            out.push(BispecialData {
                word: Word::from(f),
                occurrences: idx.occurrences(f).len(),
                returns,
            });
        }
    }
    out
}

fn ka_condition(theta: &Antimorphism, b: &BispecialData, a: Letter) -> bool {
    let non_pal = |l: Letter| {
        b.returns
            .get(&l)
            .is_some_and(|(r, _)| !theta.is_palindrome_unchecked(r))
    };
    non_pal(a) && non_pal(theta.image(a))
}

fn observed_ka(theta: &Antimorphism, data: &[BispecialData], a: Letter) -> KaValue {
    let Some(last) = data.iter().rposition(|b| ka_condition(theta, b, a)) else {
        return KaValue::Unobserved;
    };
    let settled = data[last + 1..]
        .iter()
        .any(|b| b.occurrences >= KA_STABILIZATION_OCCURRENCES);
    if settled {
        KaValue::Determined(last)
    } else {
        KaValue::AtLeast(last)
    }
}

pub fn episturmian_profile(theta: &Antimorphism, idx: &FactorIndex) -> EpisturmianProfile {
    let max_n = idx.max_len().saturating_sub(1);
    let closed = closure_from_index(theta, idx, max_n, WindowMode::Window).is_closed();
    let mut violations = Vec::new();
    for n in 0..=max_n {
        let left: Vec<&[Letter]> = idx.factors(n).filter(|f| idx.is_left_special(f)).collect();
        if left.len() >= 2 {
            violations.push((n, left.iter().map(|f| theta.render(f)).collect()));
        }
    }
    let data = bispecial_data(idx, max_n);
    let bispecials = data
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let n = b.word.len();
            let z = data
                .get(k + 1)
                .filter(|next| b.word.is_prefix_of(&next.word))
                .map(|next| theta.alphabet().name(next.word[n]).to_string());
            let delta_c = idx.count(n + 1) as i64 - idx.count(n) as i64;
            Bispecial {
                k,
                word: theta.render(&b.word),
                length: n,
                occurrences: b.occurrences,
                z,
                delta_c,
                returns: b
                    .returns
                    .iter()
                    .map(|(a, (r, anomalous))| ReturnWord {
                        letter: theta.alphabet().name(*a).to_string(),
                        word: theta.render(r),
                        palindromic: theta.is_palindrome_unchecked(r),
                        anomalous: *anomalous,
                    })
                    .collect(),
            }
        })
        .collect();
    let k_a = theta
        .alphabet()
        .letters()
        .filter(|a| theta.image(*a) != *a)
        .map(|a| LetterKa {
            letter: theta.alphabet().name(a).to_string(),
            image: theta.alphabet().name(theta.image(a)).to_string(),
            k_a: observed_ka(theta, &data, a),
        })
        .collect();
    EpisturmianProfile {
        window_length: idx.window_len(),
        max_n,
        closed,
        is_theta_episturmian_on_window: closed && violations.is_empty(),
        left_special_violations: violations,
        bispecials,
        k_a,
    }
}

/// Both evaluations of the episturmian richness criterion. `rich` uses the
/// constant that agrees with `P(n) + P(n+1) = ΔC(n) + 2`; `literal_plus_one`
/// evaluates `P(1) + P(2) = ΔC(1) + 1` as printed in the source statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionEvidence {
    pub p1: usize,
    pub p2: usize,
    pub delta_c1: i64,
    pub lhs: usize,
    pub rhs_plus_two: i64,
    pub rhs_plus_one: i64,
    pub rich: bool,
    pub literal_plus_one: bool,
    /// Whether equality holds for every `n` in the sweep from 1.
    pub sweep_agrees: bool,
    pub sweep: Vec<SweepRow>,
}

pub fn episturmian_richness_criterion(
    theta: &Antimorphism,
    idx: &FactorIndex,
) -> Result<CriterionEvidence> {
    if !episturmian_profile(theta, idx).is_theta_episturmian_on_window {
        return Err(Error::NotEpisturmian);
    }
    let max_n = idx.max_len().saturating_sub(1);
    if max_n < 2 {
        return Err(Error::WindowTooShort {
            needed: 3,
            got: idx.max_len(),
        });
    }
    let sweep = sweep_from_index(theta, idx, 1..=max_n)?;
    let profile = profile_from_index(theta, idx, 1)?;
    let row = profile.rows[1];
    let lhs = row.lhs;
    let rich = lhs as i64 == row.delta_c + 2;
    Ok(CriterionEvidence {
        p1: row.p,
        p2: row.p_next,
        delta_c1: row.delta_c,
        lhs,
        rhs_plus_two: row.delta_c + 2,
        rhs_plus_one: row.delta_c + 1,
        rich,
        literal_plus_one: lhs as i64 == row.delta_c + 1,
        sweep_agrees: sweep.iter().all(|r| r.lhs as i64 == r.rhs) == rich,
        sweep,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Clause {
    /// Returns after Θ-fixed letters are Θ-palindromes.
    #[serde(rename = "fixed-letter")]
    FixedLetter,
    /// `r_{k,a} = w_k a w_k` and `a` appears nowhere else, for `k <= k_a`.
    #[serde(rename = "below-ka")]
    BelowKa,
    /// At most one of `r_{k,a}`, `r_{k,Θ(a)}` for `k > k_a`.
    #[serde(rename = "above-ka")]
    AboveKa,
    /// Palindromic returns stay palindromic past `k_a`.
    #[serde(rename = "persistence")]
    Persistence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseCheck {
    pub clause: Clause,
    pub k: usize,
    pub letter: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub checks: Vec<ClauseCheck>,
    pub holds: bool,
}

/// Checks the structure of returns to bispecials for `k <= max_k`.
pub fn prop51_structure_check(
    theta: &Antimorphism,
    idx: &FactorIndex,
    max_k: Option<usize>,
) -> Result<StructureReport> {
    if !episturmian_profile(theta, idx).is_theta_episturmian_on_window {
        return Err(Error::NotEpisturmian);
    }
    let max_n = idx.max_len().saturating_sub(1);
    let data = bispecial_data(idx, max_n);
    let last = max_k.map_or(data.len(), |m| (m + 1).min(data.len()));
    let name = |l: Letter| theta.alphabet().name(l).to_string();
    let mut checks = Vec::new();

    for (k, b) in data.iter().enumerate().take(last) {
        for a in theta.alphabet().letters() {
            let image = theta.image(a);
            let r_a = b.returns.get(&a).map(|(r, _)| r);
            if a == image {
                if let Some(r) = r_a {
                    checks.push(ClauseCheck {
                        clause: Clause::FixedLetter,
                        k,
                        letter: name(a),
                        holds: theta.is_palindrome_unchecked(r),
                        detail: theta.render(r),
                    });
                }
                continue;
            }
            let Some(k_a) = observed_ka(theta, &data, a).value() else {
                continue;
            };
            if k <= k_a {
                let expected = b.word.concat(&[a]).concat(&b.word);
                let shape = r_a == Some(&expected);
                let absent_in_w = !b.word.contains(&a);
                let absent_elsewhere = b
                    .returns
                    .iter()
                    .filter(|(l, _)| **l != a)
                    .all(|(_, (r, _))| !r.contains(&a));
                checks.push(ClauseCheck {
                    clause: Clause::BelowKa,
                    k,
                    letter: name(a),
                    holds: shape && absent_in_w && absent_elsewhere,
                    detail: match r_a {
                        Some(r) => theta.render(r),
                        None => "missing".into(),
                    },
                });
            } else {
                let both = r_a.is_some() && b.returns.contains_key(&image);
                checks.push(ClauseCheck {
                    clause: Clause::AboveKa,
                    k,
                    letter: name(a),
                    holds: !both,
                    detail: if both { "both returns observed" } else { "" }.into(),
                });
                if let (Some(r), Some(next)) = (r_a, data.get(k + 1)) {
                    if theta.is_palindrome_unchecked(r) {
                        let next_r = next.returns.get(&a).map(|(r, _)| r);
                        checks.push(ClauseCheck {
                            clause: Clause::Persistence,
                            k,
                            letter: name(a),
                            holds: next_r.map_or(true, |r| theta.is_palindrome_unchecked(r)),
                            detail: next_r.map(|r| theta.render(r)).unwrap_or_default(),
                        });
                    }
                }
            }
        }
    }
    Ok(StructureReport {
        holds: checks.iter().all(|c| c.holds),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::corpus_word;

    fn corpus_index(name: &str, len: usize, max_len: usize) -> (Antimorphism, FactorIndex) {
        let c = corpus_word(name).unwrap();
        let w = c.generator.prefix(len).unwrap();
        (c.theta, FactorIndex::new(w, max_len))
    }

    #[test]
    fn return_words_examples() {
        let (theta, idx) = corpus_index("ex5.5", 200, 20);
        assert!(check_return_words_palindromic(&theta, &idx).holds);
        let (theta, idx) = corpus_index("ex5.4", 200, 20);
        let r = check_return_words_palindromic(&theta, &idx);
        assert!(!r.holds);
        let c = r.counterexample.unwrap();
        assert_eq!(c.factors[0], "c");
        assert!(c.factors[1] == "cac" || c.factors[1] == "ca'c");

        let fixed = Antimorphism::parse("c").unwrap();
        let idx = FactorIndex::new(fixed.parse_word("c").unwrap(), 1);
        assert!(check_return_words_palindromic(&fixed, &idx).holds);
    }

    #[test]
    fn alternation_examples() {
        let (theta, idx) = corpus_index("ex5.1", 3000, 10);
        let a = theta.parse_word("a").unwrap();
        assert!(check_alternation(&theta, &idx, &a).unwrap().holds);
        let c = theta.parse_word("c").unwrap();
        assert_eq!(check_alternation(&theta, &idx, &c), Err(Error::SelfImageFactor));

        let swap = Antimorphism::parse("a<->b").unwrap();
        let idx = FactorIndex::new(swap.parse_word("aab").unwrap(), 3);
        let r = check_alternation(&swap, &idx, &swap.parse_word("a").unwrap()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.counterexample.unwrap().positions, vec![0, 1]);
    }

    #[test]
    fn v_theta_v_examples() {
        let (theta, idx) = corpus_index("ex5.5", 200, 30);
        assert!(check_v_theta_v_factors(&theta, &idx).holds);
        let (theta, idx) = corpus_index("ex5.2", 3000, 30);
        let r = check_v_theta_v_factors(&theta, &idx);
        assert!(!r.holds);
        let c = r.counterexample.unwrap();
        let v = theta.parse_word(&c.factors[0]).unwrap();
        let factor = theta.parse_word(&c.factors[1]).unwrap();
        assert!(factor.starts_with(&v));
        assert!(factor.ends_with(&theta.apply(&v).unwrap()));
        assert!(!theta.is_palindrome(&factor).unwrap());
    }

    #[test]
    fn cross_check_periodic() {
        let c = corpus_word("ex5.5").unwrap();
        let w = c.generator.prefix(200).unwrap();
        let x = cross_check_characterizations(&c.theta, &w, 30, WindowMode::Complete).unwrap();
        assert!(x.consistent && x.count_rich && x.ups && x.v_theta_factor);
        assert_eq!(x.equality_rich, Some(true));

        let c = corpus_word("ex5.4").unwrap();
        let w = c.generator.prefix(200).unwrap();
        let x = cross_check_characterizations(&c.theta, &w, 30, WindowMode::Complete).unwrap();
        assert!(x.consistent);
        assert!(!x.count_rich && !x.ups && !x.v_theta_factor && !x.sufficient_premises);
        assert_eq!(x.equality_rich, Some(false));
    }

    #[test]
    fn episturmian_examples() {
        let (theta, idx) = corpus_index("ex5.1", 3000, 31);
        let p = episturmian_profile(&theta, &idx);
        assert!(p.is_theta_episturmian_on_window);
        assert_eq!(p.bispecials[0].length, 0);
        assert!(p.bispecials.windows(2).all(|b| b[0].length < b[1].length));
        assert!(matches!(p.k_a[0].k_a, KaValue::Determined(_)));

        let (theta, idx) = corpus_index("ex5.3", 2000, 21);
        let p = episturmian_profile(&theta, &idx);
        assert!(!p.is_theta_episturmian_on_window);
        assert!(!p.left_special_violations.is_empty());

        let (theta, idx) = corpus_index("ex5.5", 200, 31);
        let p = episturmian_profile(&theta, &idx);
        assert!(p.bispecials.len() < 5);
    }

    #[test]
    fn criterion_constants() {
        let (theta, idx) = corpus_index("ex5.1", 3000, 31);
        let e = episturmian_richness_criterion(&theta, &idx).unwrap();
        assert_eq!((e.p1, e.p2, e.delta_c1), (1, 2, 1));
        assert!(e.rich && !e.literal_plus_one && e.sweep_agrees);

        let (theta, idx) = corpus_index("ex5.2", 3000, 31);
        let e = episturmian_richness_criterion(&theta, &idx).unwrap();
        assert!(!e.rich);

        let (theta, idx) = corpus_index("ex5.3", 2000, 21);
        assert_eq!(
            episturmian_richness_criterion(&theta, &idx),
            Err(Error::NotEpisturmian)
        );
    }

    #[test]
    fn structure_on_examples() {
        for name in ["ex5.1", "ex5.2"] {
            let (theta, idx) = corpus_index(name, 3000, 31);
            let report = prop51_structure_check(&theta, &idx, None).unwrap();
            assert!(report.holds, "{name}: {:?}", report.checks);
            assert!(report.checks.iter().any(|c| c.clause == Clause::BelowKa));
        }
    }

    #[test]
    fn complexity_growth_drops_below_alphabet() {
        let (theta, idx) = corpus_index("ex5.1", 3000, 31);
        let p = episturmian_profile(&theta, &idx);
        let bound = theta.alphabet().len() as i64 - 1;
        assert!(p.bispecials.iter().any(|b| b.delta_c < bound));
    }
}
