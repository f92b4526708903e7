//! Rauzy graphs of a window: the full graph Γ_n, the reduced graph Γ′_n
//! whose edges are n-simple paths, and the super reduced graph Γ″_n, the
//! quotient of Γ′_n by w ↦ Θ(w).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::antimorphism::Antimorphism;
use crate::complexity::{ComplexityProfile, Status};
use crate::error::{Error, Result};
use crate::factor::FactorIndex;
use crate::word::Word;

/// Γ_n: vertices are factors of length `n`, edges factors of length `n + 1`
/// from their length-`n` prefix to their length-`n` suffix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RauzyGraph {
    pub n: usize,
    pub vertices: Vec<Word>,
    /// `(edge word, source vertex index, target vertex index)`.
    pub edges: Vec<(Word, usize, usize)>,
}

impl RauzyGraph {
    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == v).count()
    }

    pub fn is_strongly_connected(&self) -> bool {
        let count = self.vertices.len();
        if count == 0 {
            return true;
        }
        let reach = |forward: bool| {
            let mut seen = vec![false; count];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for (_, a, b) in &self.edges {
                    let (from, to) = if forward { (*a, *b) } else { (*b, *a) };
                    if from == v && !seen[to] {
                        seen[to] = true;
                        stack.push(to);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(true) && reach(false)
    }

    /// Whether the graph is a single directed cycle through every vertex.
    pub fn is_cycle(&self) -> bool {
        self.edges.len() == self.vertices.len()
            && (0..self.vertices.len()).all(|v| self.out_degree(v) == 1)
            && self.is_strongly_connected()
    }
}

pub fn rauzy_graph(idx: &FactorIndex, n: usize) -> Result<RauzyGraph> {
    if n + 1 > idx.max_len() {
        return Err(Error::OrderTooLarge {
            n,
            max: idx.max_len().saturating_sub(1),
        });
    }
    let vertices: Vec<Word> = idx.factors(n).map(Word::from).collect();
    let position: BTreeMap<&[_], usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_slice(), i))
        .collect();
    let edges = idx
        .factors(n + 1)
        .map(|e| {
            let from = position[&e[..n]];
            let to = position[&e[1..]];
            (Word::from(e), from, to)
        })
        .collect();
    Ok(RauzyGraph { n, vertices, edges })
}

/// A factor whose length-`n` prefix and suffix are special (left or right)
/// and with no special interior factor of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimplePath {
    pub word: Word,
    /// Set when the walk ran into the window boundary or the path word does
    /// not occur in the window; such paths are not trusted.
    pub provisional: bool,
}

impl SimplePath {
    pub fn start(&self, n: usize) -> &[crate::Letter] {
        &self.word[..n]
    }

    pub fn end(&self, n: usize) -> &[crate::Letter] {
        &self.word[self.word.len() - n..]
    }
}

/// Γ′_n: special factors of length `n` joined by n-simple paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGraph {
    pub n: usize,
    pub vertices: Vec<Word>,
    pub paths: Vec<SimplePath>,
    /// No special factor of length `n` was observed: the graph is empty.
    pub periodic_regime: bool,
}

impl ReducedGraph {
    pub fn trusted_paths(&self) -> impl Iterator<Item = &SimplePath> {
        self.paths.iter().filter(|p| !p.provisional)
    }

    pub fn provisional_count(&self) -> usize {
        self.paths.iter().filter(|p| p.provisional).count()
    }
}

/// Extracts all n-simple paths by walking from every out-edge of every
/// special vertex through non-special vertices.
pub fn n_simple_paths(idx: &FactorIndex, n: usize) -> Result<ReducedGraph> {
    if n + 1 > idx.max_len() {
        return Err(Error::OrderTooLarge {
            n,
            max: idx.max_len().saturating_sub(1),
        });
    }
    let vertices: Vec<Word> = idx
        .factors(n)
        .filter(|f| idx.is_special(f))
        .map(Word::from)
        .collect();
    let limit = idx.window_len();
    let mut paths = Vec::new();
    for start in &vertices {
        for x in idx.right_extensions(start).iter() {
            let mut word = start.concat(&[*x]);
            let mut provisional = false;
            loop {
                let tail = &word[word.len() - n..];
                if idx.is_special(tail) {
                    break;
                }
                let ext = idx.right_extensions(tail);
                match ext.first() {
                    Some(next) if word.len() < limit => {
                        let next = *next;
                        word.push(next);
                    }
                    _ => {
                        provisional = true;
                        break;
                    }
                }
            }
            if !provisional && !idx.contains(&word) {
                provisional = true;
            }
            paths.push(SimplePath { word, provisional });
        }
    }
    paths.sort();
    Ok(ReducedGraph {
        n,
        periodic_regime: vertices.is_empty(),
        vertices,
        paths,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperVertex {
    /// Lexicographically smaller of `{w, Θ(w)}`.
    pub representative: Word,
    pub image: Word,
    pub palindromic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperEdge {
    /// Lexicographically smaller of `{e, Θ(e)}`.
    pub path: Word,
    pub image: Word,
    pub from: usize,
    pub to: usize,
    pub theta_fixed: bool,
}

impl SuperEdge {
    pub fn is_loop(&self) -> bool {
        self.from == self.to
    }
}

/// Γ″_n: undirected multigraph on classes `{w, Θ(w)}` of special factors,
/// one edge per class `{e, Θ(e)}` of trusted n-simple paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperReducedGraph {
    pub n: usize,
    pub vertices: Vec<SuperVertex>,
    pub edges: Vec<SuperEdge>,
    /// Provisional n-simple paths left out of the quotient.
    pub excluded_paths: usize,
}

impl SuperReducedGraph {
    pub fn loops(&self) -> impl Iterator<Item = &SuperEdge> {
        self.edges.iter().filter(|e| e.is_loop())
    }

    pub fn non_loop_edges(&self) -> impl Iterator<Item = &SuperEdge> {
        self.edges.iter().filter(|e| !e.is_loop())
    }

    /// Connected and `#non-loop edges = #vertices − 1`. The empty graph and
    /// a single vertex count as trees.
    pub fn is_tree_after_loop_removal(&self) -> bool {
        let count = self.vertices.len();
        if count == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..count).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        let mut edges = 0;
        for e in self.non_loop_edges() {
            edges += 1;
            let (a, b) = (find(&mut parent, e.from), find(&mut parent, e.to));
            parent[a] = b;
        }
        let root = find(&mut parent, 0);
        let connected = (0..count).all(|v| find(&mut parent, v) == root);
        connected && edges == count - 1
    }

    pub fn all_loops_theta_fixed(&self) -> bool {
        self.loops().all(|e| e.theta_fixed)
    }
}

pub fn super_reduced_graph(
    theta: &Antimorphism,
    idx: &FactorIndex,
    n: usize,
) -> Result<SuperReducedGraph> {
    let reduced = n_simple_paths(idx, n)?;
    Ok(super_reduced_from(theta, &reduced))
}

pub fn super_reduced_from(theta: &Antimorphism, reduced: &ReducedGraph) -> SuperReducedGraph {
    let n = reduced.n;
    let canonical = |w: &[crate::Letter]| {
        let image = theta.apply_unchecked(w);
        if image.as_slice() < w {
            (image, Word::from(w))
        } else {
            (Word::from(w), image)
        }
    };

    let mut classes: BTreeMap<Word, Word> = BTreeMap::new();
    for v in &reduced.vertices {
        let (rep, image) = canonical(v);
        classes.insert(rep, image);
    }
    let vertices: Vec<SuperVertex> = classes
        .into_iter()
        .map(|(representative, image)| SuperVertex {
            palindromic: representative == image,
            representative,
            image,
        })
        .collect();
    let class_of = |w: &[crate::Letter]| {
        let rep = canonical(w).0;
        vertices
            .iter()
            .position(|v| v.representative == rep)
            .expect("path endpoints are special")
    };

    let mut edges: BTreeMap<Word, SuperEdge> = BTreeMap::new();
    for path in reduced.trusted_paths() {
        let (rep, image) = canonical(&path.word);
        edges.entry(rep.clone()).or_insert_with(|| {
            let (from, to) = (class_of(&rep[..n]), class_of(&rep[rep.len() - n..]));
            SuperEdge {
                theta_fixed: rep == image,
                path: rep,
                image,
                from: from.min(to),
                to: from.max(to),
            }
        });
    }

    SuperReducedGraph {
        n,
        vertices,
        edges: edges.into_values().collect(),
        excluded_paths: reduced.provisional_count(),
    }
}

/// Graph-side prediction of `P(n) + P(n+1) = ΔC(n) + 2` compared with the
/// observed counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cor33Verdict {
    pub n: usize,
    pub tree_after_loop_removal: bool,
    pub all_loops_theta_palindromic: bool,
    pub equality_predicted: bool,
    pub equality_observed: bool,
    /// False when provisional paths were excluded from the graph.
    pub reliable: bool,
}

impl Cor33Verdict {
    pub fn consistent(&self) -> bool {
        self.equality_predicted == self.equality_observed
    }
}

pub fn cor33_check(
    theta: &Antimorphism,
    idx: &FactorIndex,
    n: usize,
    profile: &ComplexityProfile,
) -> Result<Cor33Verdict> {
    let row = profile.row(n).ok_or(Error::OrderTooLarge {
        n,
        max: profile.max_n().unwrap_or(0),
    })?;
    let graph = super_reduced_graph(theta, idx, n)?;
    let tree = graph.is_tree_after_loop_removal();
    let loops = graph.all_loops_theta_fixed();
    Ok(Cor33Verdict {
        n,
        tree_after_loop_removal: tree,
        all_loops_theta_palindromic: loops,
        equality_predicted: tree && loops,
        equality_observed: row.status == Status::Equal,
        reliable: graph.excluded_paths == 0,
    })
}

fn quote(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 2);
    out.push('"');
    for c in label.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn label(theta: &Antimorphism, w: &[crate::Letter]) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        theta.render(w)
    }
}

/// DOT for Γ_n; vertices and edges in lexicographic order of their factors.
pub fn rauzy_dot(theta: &Antimorphism, graph: &RauzyGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(&format!("rauzy_{}", graph.n)));
    let _ = writeln!(out, "  node [shape=box];");
    for v in &graph.vertices {
        let _ = writeln!(out, "  {};", quote(&label(theta, v)));
    }
    for (e, from, to) in &graph.edges {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(&label(theta, &graph.vertices[*from])),
            quote(&label(theta, &graph.vertices[*to])),
            quote(&label(theta, e))
        );
    }
    out.push_str("}\n");
    out
}

/// DOT for Γ′_n; provisional paths are drawn dotted.
pub fn reduced_dot(theta: &Antimorphism, graph: &ReducedGraph) -> String {
    let n = graph.n;
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(&format!("reduced_{n}")));
    let _ = writeln!(out, "  node [shape=box];");
    for v in &graph.vertices {
        let _ = writeln!(out, "  {};", quote(&label(theta, v)));
    }
    for p in &graph.paths {
        let style = if p.provisional { ", style=dotted" } else { "" };
        let _ = writeln!(
            out,
            "  {} -> {} [label={}{}];",
            quote(&label(theta, p.start(n))),
            quote(&label(theta, p.end(n))),
            quote(&label(theta, &p.word)),
            style
        );
    }
    out.push_str("}\n");
    out
}

/// DOT for Γ″_n. Loops are dashed, θ-fixed edges are annotated `θ-fixed`.
pub fn super_reduced_dot(theta: &Antimorphism, graph: &SuperReducedGraph) -> String {
    let vertex_label = |v: &SuperVertex| {
        if v.palindromic {
            format!("{{{}}}", label(theta, &v.representative))
        } else {
            format!(
                "{{{}, {}}}",
                label(theta, &v.representative),
                label(theta, &v.image)
            )
        }
    };
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(&format!("super_reduced_{}", graph.n)));
    let _ = writeln!(out, "  node [shape=ellipse];");
    for v in &graph.vertices {
        let _ = writeln!(out, "  {};", quote(&vertex_label(v)));
    }
    for e in &graph.edges {
        let mut text = label(theta, &e.path);
        if !e.theta_fixed {
            text = format!("{text} / {}", label(theta, &e.image));
        }
        let mut attrs = vec![format!("label={}", quote(&text))];
        if e.theta_fixed {
            attrs.push("theta_fixed=true".into());
            attrs.push("color=blue".into());
        }
        if e.is_loop() {
            attrs.push("style=dashed".into());
        }
        let _ = writeln!(
            out,
            "  {} -- {} [{}];",
            quote(&vertex_label(&graph.vertices[e.from])),
            quote(&vertex_label(&graph.vertices[e.to])),
            attrs.join(", ")
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexity::profile_from_index;
    use crate::generators::corpus_word;

    fn window(name: &str, len: usize) -> (Antimorphism, FactorIndex) {
        let c = corpus_word(name).unwrap();
        let w = c.generator.prefix(len).unwrap();
        (c.theta, FactorIndex::new(w, 40))
    }

    #[test]
    fn periodic_graph_is_a_cycle() {
        let (_, idx) = window("ex5.5", 200);
        let g = rauzy_graph(&idx, 2).unwrap();
        assert_eq!((g.vertices.len(), g.edges.len()), (4, 4));
        assert!(g.is_cycle());
        let reduced = n_simple_paths(&idx, 2).unwrap();
        assert!(reduced.periodic_regime);
        assert!(reduced.paths.is_empty());
    }

    #[test]
    fn fibonacci_order_one() {
        let (_, idx) = window("fibonacci", 1000);
        let g = rauzy_graph(&idx, 1).unwrap();
        assert_eq!((g.vertices.len(), g.edges.len()), (2, 3));
        assert!(g.is_strongly_connected());
    }

    #[test]
    fn two_letter_word() {
        let rev = Antimorphism::parse("a b").unwrap();
        let idx = FactorIndex::new(rev.parse_word("ab").unwrap(), 2);
        let g = rauzy_graph(&idx, 1).unwrap();
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges, vec![(rev.parse_word("ab").unwrap(), 0, 1)]);
        assert!(rauzy_graph(&idx, 2).is_err());
    }

    #[test]
    fn paths_cover_every_edge_once() {
        for name in ["fibonacci", "ex5.1", "ex5.2", "ex5.3", "ex5.4"] {
            let (_, idx) = window(name, 2000);
            for n in 1..20 {
                let g = rauzy_graph(&idx, n).unwrap();
                let reduced = n_simple_paths(&idx, n).unwrap();
                assert_eq!(reduced.provisional_count(), 0, "{name} n={n}");
                let mut covered: BTreeMap<Word, usize> = BTreeMap::new();
                for p in &reduced.paths {
                    assert!(idx.is_special(p.start(n)) && idx.is_special(p.end(n)));
                    for k in 1..p.word.len() - n {
                        assert!(!idx.is_special(&p.word[k..k + n]));
                    }
                    for e in p.word.windows(n + 1) {
                        *covered.entry(Word::from(e)).or_default() += 1;
                    }
                }
                if !reduced.periodic_regime {
                    assert_eq!(covered.len(), g.edges.len(), "{name} n={n}");
                    assert!(covered.values().all(|c| *c == 1), "{name} n={n}");
                }
            }
        }
    }

    #[test]
    fn episturmian_super_graph_has_one_vertex() {
        let (theta, idx) = window("ex5.1", 3000);
        for n in 1..30 {
            let g = super_reduced_graph(&theta, &idx, n).unwrap();
            assert!(g.vertices.len() <= 1, "n={n}");
        }
        let (theta, idx) = window("ex5.5", 200);
        let g = super_reduced_graph(&theta, &idx, 3).unwrap();
        assert!(g.vertices.is_empty() && g.edges.is_empty());
    }

    #[test]
    fn swapped_pair_collapses() {
        // Specials of length 1 in (caca')^ω: only c. Paths cac, ca'c form one
        // non-θ-fixed loop.
        let (theta, idx) = window("ex5.4", 200);
        let g = super_reduced_graph(&theta, &idx, 1).unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert_eq!(g.edges.len(), 1);
        assert!(g.edges[0].is_loop() && !g.edges[0].theta_fixed);
        let profile = profile_from_index(&theta, &idx, 5).unwrap();
        let verdict = cor33_check(&theta, &idx, 1, &profile).unwrap();
        assert!(!verdict.equality_predicted && !verdict.equality_observed);
    }

    #[test]
    fn alpha_beta_vertex_count() {
        for name in ["ex5.1", "ex5.2", "ex5.3", "fibonacci", "tribonacci"] {
            let c = corpus_word(name).unwrap();
            let idx = FactorIndex::new(c.generator.prefix(2000).unwrap(), 25);
            for n in 0..24 {
                let specials: Vec<Word> = idx
                    .factors(n)
                    .filter(|f| idx.is_special(f))
                    .map(Word::from)
                    .collect();
                let alpha = specials
                    .iter()
                    .filter(|s| c.theta.is_palindrome_unchecked(s))
                    .count();
                let two_beta = specials.len() - alpha;
                assert_eq!(two_beta % 2, 0);
                let g = super_reduced_graph(&c.theta, &idx, n).unwrap();
                assert_eq!(g.vertices.len(), alpha + two_beta / 2, "{name} n={n}");
                let reduced = n_simple_paths(&idx, n).unwrap();
                let non_fixed = reduced
                    .trusted_paths()
                    .filter(|p| !c.theta.is_palindrome_unchecked(&p.word))
                    .count();
                if g.is_tree_after_loop_removal() || !g.vertices.is_empty() {
                    assert!(non_fixed + 2 >= 2 * (alpha + two_beta / 2), "{name} n={n}");
                }
            }
        }
    }

    #[test]
    fn dot_is_deterministic_and_escaped() {
        let (theta, idx) = window("ex5.1", 500);
        let g = rauzy_graph(&idx, 2).unwrap();
        let a = rauzy_dot(&theta, &g);
        assert_eq!(a, rauzy_dot(&theta, &rauzy_graph(&idx, 2).unwrap()));
        assert!(a.starts_with("digraph \"rauzy_2\" {"));
        let sg = super_reduced_graph(&theta, &idx, 3).unwrap();
        let dot = super_reduced_dot(&theta, &sg);
        assert!(dot.contains("style=dashed"));
        assert!(dot.contains("theta_fixed=true"));
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }

    #[test]
    fn tree_conventions() {
        let empty = SuperReducedGraph {
            n: 0,
            vertices: vec![],
            edges: vec![],
            excluded_paths: 0,
        };
        assert!(empty.is_tree_after_loop_removal());
    }
}
