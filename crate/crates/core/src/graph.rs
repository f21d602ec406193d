//! Occurrence graphs and the small-graph utilities used to study them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::occurrence::{occurrences, IndexInjection, IndexSet};
use crate::perm::Permutation;

/// Undirected simple graph on vertices 0..n with bit-row adjacency.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(u))
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn words_per_row(&self) -> usize {
        self.words
    }

    /// Subgraph induced on `verts` (vertices renumbered in the given order).
    pub fn induced(&self, verts: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(verts.len());
        for (a, &u) in verts.iter().enumerate() {
            for (b, &v) in verts.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|u| self.degree(u)).collect();
        degs.sort_unstable();
        degs
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Self::new(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect();
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, edges)
    }
}

pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        Self {
            words,
            word_idx: 0,
            current: if words.is_empty() { 0 } else { words[0] },
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * 64 + bit)
    }
}

/// The occurrence graph G_p(pi): one vertex per index set of an occurrence
/// of `p` in `pi`, edges between index sets that differ in exactly one
/// element. Vertices are stored in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OccurrenceGraph {
    pattern: Permutation,
    host: Permutation,
    vertices: Vec<IndexSet>,
    graph: SimpleGraph,
}

#[derive(Serialize)]
struct GraphJson {
    pattern: String,
    permutation: String,
    vertices: Vec<Vec<u8>>,
    edges: Vec<(usize, usize)>,
}

impl OccurrenceGraph {
    pub fn build(p: &Permutation, pi: &Permutation) -> Self {
        let vertices = occurrences(p, pi);
        let graph = graph_from_vertices(&vertices);
        Self {
            pattern: p.clone(),
            host: pi.clone(),
            vertices,
            graph,
        }
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    pub fn host(&self) -> &Permutation {
        &self.host
    }

    pub fn vertices(&self) -> &[IndexSet] {
        &self.vertices
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// Position of `v` in the lexicographic vertex order.
    pub fn vertex_position(&self, v: &IndexSet) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Edges as position pairs (a, b) with a < b, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.vertices.len())
            .flat_map(|u| {
                self.graph
                    .neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// The subgraph induced on `subset`, which must consist of vertices of
    /// this graph. The result keeps the pattern/host labels.
    pub fn induced(&self, subset: &[IndexSet]) -> Result<OccurrenceGraph> {
        let mut positions = Vec::with_capacity(subset.len());
        for v in subset {
            match self.vertex_position(v) {
                Some(p) => positions.push(p),
                None => {
                    return Err(Error::InvalidInput(format!(
                        "vertex {v} is not in the occurrence graph"
                    )))
                }
            }
        }
        positions.sort_unstable();
        positions.dedup();
        let vertices: Vec<IndexSet> = positions
            .iter()
            .map(|&p| self.vertices[p].clone())
            .collect();
        let graph = self.graph.induced(&positions);
        Ok(OccurrenceGraph {
            pattern: self.pattern.clone(),
            host: self.host.clone(),
            vertices,
            graph,
        })
    }

    /// DOT text: vertices in lexicographic order, then edges; byte-stable.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "graph \"G_{}_{}\" {{", self.pattern, self.host).unwrap();
        for v in &self.vertices {
            writeln!(out, "  \"{v}\";").unwrap();
        }
        for (a, b) in self.edges() {
            writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                self.vertices[a], self.vertices[b]
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// JSON text with vertex index sets and edges as vertex positions.
    pub fn to_json(&self) -> String {
        let dto = GraphJson {
            pattern: self.pattern.to_string(),
            permutation: self.host.to_string(),
            vertices: self.vertices.iter().map(|v| v.indices().to_vec()).collect(),
            edges: self.edges(),
        };
        serde_json::to_string(&dto).expect("graph serialization cannot fail")
    }
}

pub(crate) fn graph_from_vertices(vertices: &[IndexSet]) -> SimpleGraph {
    let mut graph = SimpleGraph::new(vertices.len());
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if vertices[i].differs_by_one(&vertices[j]) {
                graph.add_edge(i, j);
            }
        }
    }
    graph
}

/// The injection V_p(pi) -> V_p(sigma) induced by an occurrence of `pi` in
/// `sigma` with index injection `inj`: {i_1,...,i_l} maps to
/// {inj(i_1),...,inj(i_l)}. Returns (vertex, image) pairs in the
/// lexicographic order of V_p(pi).
///
/// Fails unless `inj` really is an occurrence of `pi` in `sigma`.
pub fn phi_embedding(
    p: &Permutation,
    pi: &Permutation,
    sigma: &Permutation,
    inj: &IndexInjection,
) -> Result<Vec<(IndexSet, IndexSet)>> {
    if inj.len() != pi.len() {
        return Err(Error::InvalidInput(format!(
            "index injection has length {}, the inner permutation {}",
            inj.len(),
            pi.len()
        )));
    }
    if !inj.is_empty() && inj.apply(inj.len()) > sigma.len() {
        return Err(Error::InvalidInput(
            "index injection exceeds the host length".into(),
        ));
    }
    let selected: Vec<u8> = (1..=inj.len())
        .map(|j| sigma.values()[inj.apply(j) - 1])
        .collect();
    if Permutation::standardize_values(&selected) != pi.values() {
        return Err(Error::InvalidInput(
            "index injection is not an occurrence of the permutation in the host".into(),
        ));
    }
    let pairs = occurrences(p, pi)
        .into_iter()
        .map(|v| {
            let image: Vec<u8> = v
                .indices()
                .iter()
                .map(|&i| inj.apply(i as usize) as u8)
                .collect();
            let image = IndexSet::from_sorted_unchecked(image);
            (v, image)
        })
        .collect();
    Ok(pairs)
}

/// Default vertex cap for [`are_isomorphic`].
pub const ISOMORPHISM_CAP: usize = 12;

/// Exact isomorphism test by backtracking with degree pruning, capped at
/// [`ISOMORPHISM_CAP`] vertices.
pub fn are_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    are_isomorphic_with_cap(g, h, ISOMORPHISM_CAP)
}

/// Same as [`are_isomorphic`] with a caller-chosen vertex cap.
pub fn are_isomorphic_with_cap(g: &SimpleGraph, h: &SimpleGraph, cap: usize) -> Result<bool> {
    let n = g.vertex_count();
    if n > cap || h.vertex_count() > cap {
        return Err(Error::ResourceLimit(format!(
            "isomorphism test limited to {cap} vertices (got {} and {})",
            n,
            h.vertex_count()
        )));
    }
    if n != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || g.degree_sequence() != h.degree_sequence()
    {
        return Ok(false);
    }

    // Assign high-degree vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&u| std::cmp::Reverse(g.degree(u)));

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn assign(
        g: &SimpleGraph,
        h: &SimpleGraph,
        order: &[usize],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        t: usize,
    ) -> bool {
        if t == order.len() {
            return true;
        }
        let gu = order[t];
        for hv in 0..h.vertex_count() {
            if used[hv] || g.degree(gu) != h.degree(hv) {
                continue;
            }
            let consistent = order[..t]
                .iter()
                .all(|&gw| g.has_edge(gu, gw) == h.has_edge(hv, image[gw]));
            if consistent {
                image[gu] = hv;
                used[hv] = true;
                if assign(g, h, order, image, used, t + 1) {
                    return true;
                }
                used[hv] = false;
                image[gu] = usize::MAX;
            }
        }
        false
    }

    Ok(assign(g, h, &order, &mut image, &mut used, 0))
}
