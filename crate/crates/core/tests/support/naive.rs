//! Brute-force reference implementations, quadratic or worse, sharing no
//! code with the library beyond letter images.

#![allow(dead_code)]

use std::collections::BTreeSet;

use theta_rich::{Antimorphism, Letter};

pub fn all_words(k: u16, len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |l| {
                    let mut v = w.clone();
                    v.push(Letter(l));
                    v
                })
            })
            .collect();
    }
    out
}

pub fn image(theta: &Antimorphism, w: &[Letter]) -> Vec<Letter> {
    w.iter().rev().map(|l| theta.image(*l)).collect()
}

pub fn is_pal(theta: &Antimorphism, w: &[Letter]) -> bool {
    image(theta, w) == w
}

pub fn naive_pal_factors(theta: &Antimorphism, w: &[Letter]) -> BTreeSet<Vec<Letter>> {
    let mut out = BTreeSet::from([vec![]]);
    for i in 0..w.len() {
        for j in i + 1..=w.len() {
            if is_pal(theta, &w[i..j]) {
                out.insert(w[i..j].to_vec());
            }
        }
    }
    out
}

pub fn naive_count(h: &[Letter], f: &[Letter]) -> usize {
    (0..=h.len().saturating_sub(f.len()))
        .filter(|i| h.len() >= f.len() && &h[*i..*i + f.len()] == f)
        .count()
}

pub fn naive_returns(w: &[Letter], f: &[Letter]) -> BTreeSet<Vec<Letter>> {
    let mut out = BTreeSet::new();
    for i in 0..w.len() {
        for j in i + f.len() + 1..=w.len() {
            let r = &w[i..j];
            if r.starts_with(f) && r.ends_with(f) && naive_count(r, f) == 2 {
                out.insert(r.to_vec());
            }
        }
    }
    out
}

pub fn naive_bound(theta: &Antimorphism, w: &[Letter]) -> usize {
    let pairs: BTreeSet<(Letter, Letter)> = w
        .iter()
        .filter(|l| theta.image(**l) != **l)
        .map(|l| {
            let m = theta.image(*l);
            (*l.min(&m), *l.max(&m))
        })
        .collect();
    w.len() + 1 - pairs.len()
}

pub fn naive_longest_suffix<'w>(theta: &Antimorphism, w: &'w [Letter]) -> &'w [Letter] {
    (0..=w.len())
        .rev()
        .map(|k| &w[w.len() - k..])
        .find(|s| is_pal(theta, s))
        .expect("the empty suffix is a palindrome")
}

/// Length of the shortest Θ-palindrome with prefix `w`, found by completing
/// `w` to every length `L < 2|w|` (where the completion is forced) and
/// testing it.
pub fn shortest_palindrome_forced(theta: &Antimorphism, w: &[Letter]) -> usize {
    for l in w.len()..2 * w.len() {
        let mut x = w.to_vec();
        for i in w.len()..l {
            x.push(theta.image(x[l - 1 - i]));
        }
        if is_pal(theta, &x) {
            return l;
        }
    }
    2 * w.len()
}

/// Length of the shortest Θ-palindrome with prefix `w` by enumerating every
/// word over a `k`-letter alphabet of each length.
pub fn shortest_palindrome_enumerated(theta: &Antimorphism, w: &[Letter], k: u16) -> usize {
    for l in w.len().. {
        let free = all_words(k, l - w.len());
        if free.into_iter().any(|tail| {
            let mut x = w.to_vec();
            x.extend(tail);
            is_pal(theta, &x)
        }) {
            return l;
        }
    }
    unreachable!()
}

/// First disagreement between the library and the oracles on `w`:
/// palindromic factors, longest palindromic suffix, complete return words
/// to every factor, and the richness report.
pub fn mismatch(theta: &Antimorphism, w: &[Letter]) -> Option<String> {
    use theta_rich::palindromic::{
        longest_theta_palindromic_suffix, richness_report, theta_palindromic_count,
        theta_palindromic_factors,
    };
    use theta_rich::{complete_return_words, FactorIndex, Word};

    let text = theta.render(w);
    let naive = naive_pal_factors(theta, w);
    let fast: BTreeSet<Vec<Letter>> = theta_palindromic_factors(theta, w)
        .into_iter()
        .map(Word::into_vec)
        .collect();
    if fast != naive || theta_palindromic_count(theta, w) != naive.len() {
        return Some(format!("{text}: palindromic factors"));
    }
    if longest_theta_palindromic_suffix(theta, w).as_slice() != naive_longest_suffix(theta, w) {
        return Some(format!("{text}: longest palindromic suffix"));
    }

    let bound = naive_bound(theta, w);
    let report = richness_report(theta, w);
    if report.pal_count != naive.len() || report.bound != bound || report.is_rich != (naive.len() == bound) {
        return Some(format!("{text}: richness counts"));
    }
    let first_poor = (1..=w.len())
        .find(|l| naive_pal_factors(theta, &w[..*l]).len() != naive_bound(theta, &w[..*l]));
    match (&report.witness, first_poor) {
        (None, None) => {}
        (Some(witness), Some(len)) => {
            let prefix = &w[..len];
            let s = naive_longest_suffix(theta, prefix);
            if witness.prefix_length != len
                || witness.suffix != theta.render(s)
                || witness.suffix_occurrences != naive_count(prefix, s)
                || witness.suffix_occurrences < 2
            {
                return Some(format!("{text}: witness"));
            }
        }
        _ => return Some(format!("{text}: witness presence")),
    }

    let idx = FactorIndex::new(Word::from(w), w.len());
    for i in 0..w.len() {
        for j in i + 1..=w.len() {
            let f = &w[i..j];
            let fast: BTreeSet<Vec<Letter>> = complete_return_words(&idx, f)
                .into_iter()
                .map(Word::into_vec)
                .collect();
            if fast != naive_returns(w, f) {
                return Some(format!("{text}: complete returns to {}", theta.render(f)));
            }
        }
    }
    None
}
