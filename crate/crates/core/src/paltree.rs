//! Incremental tree of distinct Θ-palindromic factors (an eertree where the
//! mirror condition is `w[i] = Θ(w[j])` instead of `w[i] = w[j]`).
//!
//! Each appended letter adds at most one node, and the added node is the
//! longest Θ-palindromic suffix of the new prefix. Odd-length Θ-palindromes
//! exist only around letters fixed by Θ, so unlike the classic structure the
//! walk down the suffix links can fail; the longest Θ-palindromic suffix is
//! then the empty word.

use std::collections::HashMap;

use crate::alphabet::Letter;
use crate::antimorphism::Antimorphism;

const ROOT: usize = 0;
const EMPTY: usize = 1;

#[derive(Debug, Clone)]
struct Node {
    len: isize,
    link: usize,
    /// End position (inclusive) of the first occurrence.
    first_end: Option<usize>,
}

/// What appending one letter did to the tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    /// Length of the longest Θ-palindromic suffix of the new prefix.
    pub longest_suffix: usize,
    /// Whether that suffix is unioccurrent in the new prefix.
    pub is_new: bool,
}

#[derive(Debug, Clone)]
pub struct ThetaPalTree<'t> {
    theta: &'t Antimorphism,
    text: Vec<Letter>,
    nodes: Vec<Node>,
    edges: HashMap<(usize, Letter), usize>,
    last: usize,
}

impl<'t> ThetaPalTree<'t> {
    pub fn new(theta: &'t Antimorphism) -> Self {
        Self {
            theta,
            text: Vec::new(),
            nodes: vec![
                Node {
                    len: -1,
                    link: ROOT,
                    first_end: None,
                },
                Node {
                    len: 0,
                    link: ROOT,
                    first_end: None,
                },
            ],
            edges: HashMap::new(),
            last: EMPTY,
        }
    }

    pub fn build(theta: &'t Antimorphism, w: &[Letter]) -> (Self, Vec<Step>) {
        let mut tree = Self::new(theta);
        let steps = w.iter().map(|l| tree.push(*l)).collect();
        (tree, steps)
    }

    /// Whether the Θ-palindrome at node `v` (a suffix of the text before
    /// position `i`) extends to a Θ-palindromic suffix ending at `i`.
    fn extends(&self, v: usize, i: usize, image: Letter) -> bool {
        let j = i as isize - 1 - self.nodes[v].len;
        j >= 0 && self.text[j as usize] == image
    }

    /// Walks suffix links from `v` to the first node that extends, if any.
    fn find(&self, mut v: usize, i: usize, image: Letter) -> Option<usize> {
        loop {
            if self.extends(v, i, image) {
                return Some(v);
            }
            if v == ROOT {
                return None;
            }
            v = self.nodes[v].link;
        }
    }

    pub fn push(&mut self, letter: Letter) -> Step {
        let i = self.text.len();
        self.text.push(letter);
        let image = self.theta.image(letter);

        let Some(parent) = self.find(self.last, i, image) else {
            self.last = EMPTY;
            return Step {
                longest_suffix: 0,
                is_new: false,
            };
        };
        if let Some(&child) = self.edges.get(&(parent, letter)) {
            self.last = child;
            return Step {
                longest_suffix: self.nodes[child].len as usize,
                is_new: false,
            };
        }

        let len = self.nodes[parent].len + 2;
        let link = if parent == ROOT {
            EMPTY
        } else {
            match self.find(self.nodes[parent].link, i, image) {
                Some(v) => *self
                    .edges
                    .get(&(v, letter))
                    .expect("proper Θ-palindromic suffixes occur earlier"),
                None => EMPTY,
            }
        };
        let id = self.nodes.len();
        self.nodes.push(Node {
            len,
            link,
            first_end: Some(i),
        });
        self.edges.insert((parent, letter), id);
        self.last = id;
        Step {
            longest_suffix: len as usize,
            is_new: true,
        }
    }

    /// Number of distinct Θ-palindromic factors seen so far, ε included.
    pub fn distinct_count(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Length of the longest Θ-palindromic suffix of the current text.
    pub fn longest_suffix_len(&self) -> usize {
        self.nodes[self.last].len.max(0) as usize
    }

    /// All distinct non-empty Θ-palindromic factors as `(start, len)` of
    /// their first occurrence.
    pub fn palindromes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nodes.iter().filter_map(|n| {
            n.first_end
                .map(|end| (end + 1 - n.len as usize, n.len as usize))
        })
    }

    pub fn text(&self) -> &[Letter] {
        &self.text
    }
}
