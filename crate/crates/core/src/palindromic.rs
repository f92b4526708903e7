//! Θ-palindromic factors, the γ-corrected richness bound, and Θ-palindromic
//! closure of finite words.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::alphabet::Letter;
use crate::antimorphism::Antimorphism;
use crate::paltree::ThetaPalTree;
use crate::word::{self, Word};

/// γ(w): unordered pairs `{a, Θ(a)}`, `a ≠ Θ(a)`, with `a` or `Θ(a)` in `w`.
/// Pairs are stored as `(min, max)` by letter order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GammaSet {
    pairs: BTreeSet<(Letter, Letter)>,
}

impl GammaSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: Letter, b: Letter) -> bool {
        self.pairs.contains(&(a.min(b), a.max(b)))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        self.pairs.iter().copied()
    }

    /// Adds the pair of `letter` if it is not Θ-fixed; returns whether the
    /// set grew.
    pub fn insert_letter(&mut self, theta: &Antimorphism, letter: Letter) -> bool {
        let image = theta.image(letter);
        image != letter && self.pairs.insert((letter.min(image), letter.max(image)))
    }
}

pub fn gamma(theta: &Antimorphism, w: &[Letter]) -> GammaSet {
    let mut set = GammaSet::default();
    for l in w {
        set.insert_letter(theta, *l);
    }
    set
}

/// All distinct Θ-palindromic factors of `w`, ε included.
pub fn theta_palindromic_factors(theta: &Antimorphism, w: &[Letter]) -> BTreeSet<Word> {
    let (tree, _) = ThetaPalTree::build(theta, w);
    let mut set: BTreeSet<Word> = tree
        .palindromes()
        .map(|(start, len)| Word::from(&w[start..start + len]))
        .collect();
    set.insert(Word::empty());
    set
}

/// Number of distinct Θ-palindromic factors of `w`, ε included.
pub fn theta_palindromic_count(theta: &Antimorphism, w: &[Letter]) -> usize {
    ThetaPalTree::build(theta, w).0.distinct_count()
}

/// Longest suffix `s` of `w` with `s = Θ(s)`; possibly ε.
///
/// The last `k` letters of `w` form a Θ-palindrome exactly when they equal
/// the first `k` letters of Θ(w), so this is the longest border of
/// `Θ(w) # w`, found with the prefix function in linear time.
pub fn longest_theta_palindromic_suffix(theta: &Antimorphism, w: &[Letter]) -> Word {
    let len = longest_theta_palindromic_suffix_len(theta, w);
    Word::from(&w[w.len() - len..])
}

pub fn longest_theta_palindromic_suffix_len(theta: &Antimorphism, w: &[Letter]) -> usize {
    if w.is_empty() {
        return 0;
    }
    let separator = None;
    let text: Vec<Option<Letter>> = theta
        .apply_unchecked(w)
        .iter()
        .map(|l| Some(*l))
        .chain(std::iter::once(separator))
        .chain(w.iter().map(|l| Some(*l)))
        .collect();
    let mut border = vec![0usize; text.len()];
    for i in 1..text.len() {
        let mut k = border[i - 1];
        while k > 0 && text[i] != text[k] {
            k = border[k - 1];
        }
        if text[i] == text[k] {
            k += 1;
        }
        border[i] = k;
    }
    border[text.len() - 1]
}

/// Shortest non-rich prefix together with its longest Θ-palindromic
/// suffix, which occurs more than once in it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RichnessWitness {
    pub prefix: String,
    pub prefix_length: usize,
    pub suffix: String,
    pub suffix_occurrences: usize,
}

/// Θ-palindromic saturation of a finite word.
///
/// `defect` is `bound - pal_count`, a convenience measure of how far the
/// word is from the γ-corrected maximum; it is not the classic palindromic
/// defect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RichnessReport {
    pub word: String,
    pub pal_count: usize,
    pub bound: usize,
    pub defect: usize,
    pub is_rich: bool,
    pub witness: Option<RichnessWitness>,
}

/// Per-prefix view used by the unioccurrence characterization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrefixStatus {
    /// Length of the prefix `px`.
    pub length: usize,
    pub longest_suffix: usize,
    pub unioccurrent: bool,
    /// Whether γ(px) ≠ γ(p).
    pub gamma_grew: bool,
    pub pal_count: usize,
    pub bound: usize,
}

impl PrefixStatus {
    /// The prefix is exempt or has a unioccurrent longest Θ-palindromic suffix.
    pub fn is_ok(&self) -> bool {
        self.unioccurrent || self.gamma_grew
    }
}

/// Status of every non-empty prefix of `w`, in order of length.
pub fn prefix_statuses(theta: &Antimorphism, w: &[Letter]) -> Vec<PrefixStatus> {
    let mut tree = ThetaPalTree::new(theta);
    let mut gamma = GammaSet::default();
    w.iter()
        .enumerate()
        .map(|(i, l)| {
            let gamma_grew = gamma.insert_letter(theta, *l);
            let step = tree.push(*l);
            PrefixStatus {
                length: i + 1,
                longest_suffix: step.longest_suffix,
                unioccurrent: step.is_new,
                gamma_grew,
                pal_count: tree.distinct_count(),
                bound: i + 2 - gamma.len(),
            }
        })
        .collect()
}

pub fn richness_report(theta: &Antimorphism, w: &[Letter]) -> RichnessReport {
    let statuses = prefix_statuses(theta, w);
    let (pal_count, bound) = statuses
        .last()
        .map(|s| (s.pal_count, s.bound))
        .unwrap_or((1, 1));
    let witness = statuses.iter().find(|s| !s.is_ok()).map(|s| {
        let prefix = &w[..s.length];
        let suffix = &prefix[s.length - s.longest_suffix..];
        RichnessWitness {
            prefix: theta.render(prefix),
            prefix_length: s.length,
            suffix: theta.render(suffix),
            suffix_occurrences: word::count_occurrences(prefix, suffix),
        }
    });
    RichnessReport {
        word: theta.render(w),
        pal_count,
        bound,
        defect: bound - pal_count,
        is_rich: pal_count == bound,
        witness,
    }
}

/// Lengths `L` such that the prefix of length `L` is Θ-rich, as a boolean
/// per prefix length `0..=|w|`.
pub fn rich_prefixes(theta: &Antimorphism, w: &[Letter]) -> Vec<bool> {
    std::iter::once(true)
        .chain(prefix_statuses(theta, w).iter().map(|s| s.pal_count == s.bound))
        .collect()
}

/// Right Θ-palindromic closure `w⊕ = p·s·Θ(p)` where `s` is the longest
/// Θ-palindromic suffix of `w = p·s`: the shortest Θ-palindrome with prefix `w`.
pub fn theta_palindromic_closure(theta: &Antimorphism, w: &[Letter]) -> Word {
    let s = longest_theta_palindromic_suffix_len(theta, w);
    let p = &w[..w.len() - s];
    let mut out = Word::from(w);
    out.extend_from_slice(&theta.apply_unchecked(p));
    out
}
