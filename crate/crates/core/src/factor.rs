//! Factor index over a finite word (or a prefix window of an infinite one).
//!
//! Factors of length `n` are identified level by level: the factor starting
//! at `i` of length `n` is keyed by the id of its length `n - 1` prefix and
//! its last letter, so building all levels up to `max_len` costs
//! `O(|w| * max_len)` hash lookups. Only occurrences starting at positions
//! `<= |w| - n` exist, which is exactly the window semantics used everywhere
//! else in the crate.
//!
//! Special flags are *observed* properties: a factor is right special when
//! the window shows two distinct letters following it, even if the infinite
//! word it was cut from would show more.

use std::borrow::Cow;
use std::collections::HashMap;

use crate::alphabet::Letter;
use crate::word::{self, Word};

#[derive(Debug, Clone, Default)]
struct Level {
    /// First occurrence of each factor id; the factor is `source[start..start + n]`.
    starts: Vec<usize>,
    occurrences: Vec<Vec<usize>>,
    left: Vec<Vec<Letter>>,
    right: Vec<Vec<Letter>>,
    /// `(id at level n - 1, last letter) -> id at level n`.
    lookup: HashMap<(u32, Letter), u32>,
    /// Ids in lexicographic order of the factors.
    sorted: Vec<u32>,
}

/// Queryable factor structure of a word up to a maximum factor length.
#[derive(Debug, Clone)]
pub struct FactorIndex {
    source: Word,
    max_len: usize,
    levels: Vec<Level>,
}

impl FactorIndex {
    /// Indexes all factors of `source` of length at most `max_len`
    /// (clamped to `|source|`).
    pub fn new(source: Word, max_len: usize) -> Self {
        let len = source.len();
        let max_len = max_len.min(len);
        let mut levels = Vec::with_capacity(max_len + 1);

        let mut ids: Vec<u32> = vec![0; len + 1];
        levels.push(Level {
            starts: vec![0],
            occurrences: vec![(0..=len).collect()],
            lookup: HashMap::new(),
            sorted: vec![0],
            ..Level::default()
        });

        for n in 1..=max_len {
            let mut level = Level::default();
            let mut next_ids = Vec::with_capacity(len + 1 - n);
            for i in 0..=len - n {
                let key = (ids[i], source[i + n - 1]);
                let next = level.starts.len() as u32;
                let id = *level.lookup.entry(key).or_insert(next);
                if id == next {
                    level.starts.push(i);
                    level.occurrences.push(Vec::new());
                }
                level.occurrences[id as usize].push(i);
                next_ids.push(id);
            }
            ids = next_ids;
            levels.push(level);
        }

        for (n, level) in levels.iter_mut().enumerate() {
            let mut sorted: Vec<u32> = (0..level.starts.len() as u32).collect();
            sorted.sort_by(|a, b| {
                let fa = &source[level.starts[*a as usize]..][..n];
                let fb = &source[level.starts[*b as usize]..][..n];
                fa.cmp(fb)
            });
            level.sorted = sorted;
            level.left = level
                .occurrences
                .iter()
                .map(|occ| {
                    let mut v: Vec<Letter> =
                        occ.iter().filter(|&&s| s > 0).map(|&s| source[s - 1]).collect();
                    v.sort();
                    v.dedup();
                    v
                })
                .collect();
            level.right = level
                .occurrences
                .iter()
                .map(|occ| {
                    let mut v: Vec<Letter> = occ
                        .iter()
                        .filter(|&&s| s + n < len)
                        .map(|&s| source[s + n])
                        .collect();
                    v.sort();
                    v.dedup();
                    v
                })
                .collect();
        }

        Self {
            source,
            max_len,
            levels,
        }
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Length of the indexed window.
    pub fn window_len(&self) -> usize {
        self.source.len()
    }

    fn level(&self, n: usize) -> &Level {
        &self.levels[n]
    }

    fn id_of(&self, f: &[Letter]) -> Option<u32> {
        if f.len() > self.max_len {
            return None;
        }
        let mut id = 0u32;
        for (k, letter) in f.iter().enumerate() {
            id = *self.levels[k + 1].lookup.get(&(id, *letter))?;
        }
        Some(id)
    }

    /// Number of distinct factors of length `n`, i.e. C(n) on the window.
    pub fn count(&self, n: usize) -> usize {
        assert!(n <= self.max_len, "length {n} beyond index limit");
        self.level(n).starts.len()
    }

    /// Factors of length `n` in lexicographic (alphabet) order.
    pub fn factors(&self, n: usize) -> impl Iterator<Item = &[Letter]> + '_ {
        assert!(n <= self.max_len, "length {n} beyond index limit");
        let level = self.level(n);
        level
            .sorted
            .iter()
            .map(move |id| &self.source[level.starts[*id as usize]..][..n])
    }

    pub fn contains(&self, f: &[Letter]) -> bool {
        if f.len() <= self.max_len {
            self.id_of(f).is_some()
        } else {
            word::contains_factor(&self.source, f)
        }
    }

    /// Start positions of `f`, strictly increasing. Factors longer than the
    /// index limit are located by scanning the source.
    pub fn occurrences(&self, f: &[Letter]) -> Cow<'_, [usize]> {
        if f.len() <= self.max_len {
            match self.id_of(f) {
                Some(id) => Cow::Borrowed(&self.level(f.len()).occurrences[id as usize]),
                None => Cow::Owned(Vec::new()),
            }
        } else {
            Cow::Owned(word::occurrences(&self.source, f))
        }
    }

    fn extensions(&self, f: &[Letter], left: bool) -> Cow<'_, [Letter]> {
        let n = f.len();
        if n <= self.max_len {
            return match self.id_of(f) {
                Some(id) => {
                    let level = self.level(n);
                    Cow::Borrowed(if left {
                        &level.left[id as usize]
                    } else {
                        &level.right[id as usize]
                    })
                }
                None => Cow::Owned(Vec::new()),
            };
        }
        let len = self.source.len();
        let mut v: Vec<Letter> = word::occurrences(&self.source, f)
            .into_iter()
            .filter_map(|s| {
                if left {
                    (s > 0).then(|| self.source[s - 1])
                } else {
                    (s + n < len).then(|| self.source[s + n])
                }
            })
            .collect();
        v.sort();
        v.dedup();
        Cow::Owned(v)
    }

    /// Letters `x` with `x·f` observed in the window.
    pub fn left_extensions(&self, f: &[Letter]) -> Cow<'_, [Letter]> {
        self.extensions(f, true)
    }

    /// Letters `x` with `f·x` observed in the window.
    pub fn right_extensions(&self, f: &[Letter]) -> Cow<'_, [Letter]> {
        self.extensions(f, false)
    }

    pub fn is_left_special(&self, f: &[Letter]) -> bool {
        self.left_extensions(f).len() >= 2
    }

    pub fn is_right_special(&self, f: &[Letter]) -> bool {
        self.right_extensions(f).len() >= 2
    }

    pub fn is_special(&self, f: &[Letter]) -> bool {
        self.is_left_special(f) || self.is_right_special(f)
    }

    pub fn is_bispecial(&self, f: &[Letter]) -> bool {
        self.is_left_special(f) && self.is_right_special(f)
    }
}

/// Complete return words to `f`: for each pair of consecutive occurrences
/// `i < j`, the factor `source[i .. j + |f|]`, ordered by `i`. Fewer than two
/// occurrences give an empty list.
pub fn complete_return_words(idx: &FactorIndex, f: &[Letter]) -> Vec<Word> {
    let occ = idx.occurrences(f);
    occ.windows(2)
        .map(|p| Word::from(&idx.source()[p[0]..p[1] + f.len()]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Antimorphism;
    use std::collections::{BTreeMap, BTreeSet};

    fn theta() -> Antimorphism {
        Antimorphism::parse("a<->a' c").unwrap()
    }

    /// Quadratic scan of all factors with occurrence lists.
    fn naive(w: &[Letter], n: usize) -> BTreeMap<Vec<Letter>, Vec<usize>> {
        let mut map: BTreeMap<Vec<Letter>, Vec<usize>> = BTreeMap::new();
        if n <= w.len() {
            for i in 0..=w.len() - n {
                map.entry(w[i..i + n].to_vec()).or_default().push(i);
            }
        }
        map
    }

    fn check_against_naive(w: &[Letter], max_len: usize) {
        let idx = FactorIndex::new(Word::from(w), max_len);
        for n in 0..=idx.max_len() {
            let expected = naive(w, n);
            let got: Vec<&[Letter]> = idx.factors(n).collect();
            let keys: Vec<&[Letter]> = expected.keys().map(Vec::as_slice).collect();
            assert_eq!(got, keys, "factors of length {n} in {w:?}");
            for (f, occ) in &expected {
                assert_eq!(idx.occurrences(f).as_ref(), occ.as_slice());
                let right: BTreeSet<Letter> = occ
                    .iter()
                    .filter(|&&s| s + n < w.len())
                    .map(|&s| w[s + n])
                    .collect();
                let left: BTreeSet<Letter> =
                    occ.iter().filter(|&&s| s > 0).map(|&s| w[s - 1]).collect();
                assert_eq!(
                    idx.right_extensions(f).iter().copied().collect::<BTreeSet<_>>(),
                    right
                );
                assert_eq!(
                    idx.left_extensions(f).iter().copied().collect::<BTreeSet<_>>(),
                    left
                );
            }
        }
    }

    fn all_words(k: u16, max_len: usize) -> Vec<Vec<Letter>> {
        let mut out = vec![Vec::new()];
        let mut frontier = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for l in 0..k {
                    let mut v: Vec<Letter> = w.clone();
                    v.push(Letter(l));
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn exhaustive_binary_up_to_12() {
        for w in all_words(2, 12) {
            check_against_naive(&w, w.len());
        }
    }

    #[test]
    fn exhaustive_ternary_up_to_9() {
        for w in all_words(3, 9) {
            check_against_naive(&w, w.len());
        }
    }

    #[test]
    fn worked_examples() {
        let t = theta();
        let w = t.parse_word("ccaa'").unwrap();
        let idx = FactorIndex::new(w, 2);
        let f2: Vec<String> = idx.factors(2).map(|f| t.render(f)).collect();
        assert_eq!(f2, ["aa'", "ca", "cc"]);
        assert_eq!(idx.occurrences(&t.parse_word("cc").unwrap()).as_ref(), &[0]);
        assert_eq!(idx.occurrences(&t.parse_word("ca").unwrap()).as_ref(), &[1]);
        assert_eq!(idx.occurrences(&t.parse_word("aa'").unwrap()).as_ref(), &[2]);

        let idx = FactorIndex::new(t.parse_word("a").unwrap(), 1);
        assert_eq!(idx.count(1), 1);
        assert_eq!(idx.occurrences(&t.parse_word("a").unwrap()).as_ref(), &[0]);

        let idx = FactorIndex::new(t.parse_word("cacac").unwrap(), 2);
        assert_eq!(idx.occurrences(&t.parse_word("ca").unwrap()).as_ref(), &[0, 2]);
    }

    #[test]
    fn max_len_is_clamped() {
        let idx = FactorIndex::new(theta().parse_word("ca").unwrap(), 10);
        assert_eq!(idx.max_len(), 2);
    }

    #[test]
    fn long_factors_fall_back_to_scanning() {
        let t = theta();
        let idx = FactorIndex::new(t.parse_word("cacacac").unwrap(), 2);
        let f = t.parse_word("cac").unwrap();
        assert!(idx.contains(&f));
        assert_eq!(idx.occurrences(&f).as_ref(), &[0, 2, 4]);
        assert_eq!(idx.right_extensions(&f).as_ref(), &[Letter(0)]);
    }

    #[test]
    fn return_words() {
        let t = theta();
        let idx = FactorIndex::new(t.parse_word("cacac").unwrap(), 5);
        let r: Vec<String> = complete_return_words(&idx, &t.parse_word("c").unwrap())
            .iter()
            .map(|w| t.render(w))
            .collect();
        assert_eq!(r, ["cac", "cac"]);

        let idx = FactorIndex::new(t.parse_word("aa'aa'").unwrap(), 4);
        let r: Vec<String> = complete_return_words(&idx, &t.parse_word("aa'").unwrap())
            .iter()
            .map(|w| t.render(w))
            .collect();
        assert_eq!(r, ["aa'aa'"]);

        let rev = Antimorphism::parse("a b c").unwrap();
        let idx = FactorIndex::new(rev.parse_word("abc").unwrap(), 3);
        assert!(complete_return_words(&idx, &rev.parse_word("a").unwrap()).is_empty());
    }

    #[test]
    fn return_words_have_two_occurrences() {
        for w in all_words(2, 9) {
            let idx = FactorIndex::new(Word::from(w.clone()), w.len());
            for n in 1..=idx.max_len() {
                let factors: Vec<Vec<Letter>> = idx.factors(n).map(<[Letter]>::to_vec).collect();
                for f in factors {
                    for r in complete_return_words(&idx, &f) {
                        assert_eq!(word::count_occurrences(&r, &f), 2);
                        assert!(r.starts_with(&f) && r.ends_with(&f));
                    }
                }
            }
        }
    }
}
