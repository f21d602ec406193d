//! Graph property predicates and counting statistics for small graphs.
//!
//! Degenerate conventions, fixed once for the whole crate: the zero-vertex
//! graph is connected, bipartite, a forest, chordal and a clique, but not a
//! tree; the one-vertex graph additionally is a tree.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// The graph properties studied on occurrence graphs.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum GraphProperty {
    Connected,
    Bipartite,
    Forest,
    Tree,
    Chordal,
    Clique,
}

impl GraphProperty {
    pub const ALL: [GraphProperty; 6] = [
        GraphProperty::Connected,
        GraphProperty::Bipartite,
        GraphProperty::Forest,
        GraphProperty::Tree,
        GraphProperty::Chordal,
        GraphProperty::Clique,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphProperty::Connected => "connected",
            GraphProperty::Bipartite => "bipartite",
            GraphProperty::Forest => "forest",
            GraphProperty::Tree => "tree",
            GraphProperty::Chordal => "chordal",
            GraphProperty::Clique => "clique",
        }
    }

    /// Whether the property is preserved by subgraphs (and isomorphism).
    /// For chordal and clique this refers to the induced/embedding subgraphs
    /// arising from occurrence graphs, where it holds empirically.
    pub fn is_hereditary(self) -> bool {
        match self {
            GraphProperty::Bipartite
            | GraphProperty::Forest
            | GraphProperty::Chordal
            | GraphProperty::Clique => true,
            GraphProperty::Connected | GraphProperty::Tree => false,
        }
    }

    pub fn holds(self, g: &SimpleGraph) -> bool {
        match self {
            GraphProperty::Connected => is_connected(g),
            GraphProperty::Bipartite => is_bipartite(g),
            GraphProperty::Forest => is_forest(g),
            GraphProperty::Tree => is_tree(g),
            GraphProperty::Chordal => is_chordal(g),
            GraphProperty::Clique => is_clique(g),
        }
    }
}

impl fmt::Display for GraphProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphProperty {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphProperty::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = GraphProperty::ALL.iter().map(|p| p.name()).collect();
                Error::InvalidInput(format!(
                    "unknown property `{s}`; valid names: {}",
                    names.join(", ")
                ))
            })
    }
}

/// Every vertex reachable from every other; graphs on 0 or 1 vertices count
/// as connected.
pub fn is_connected(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1usize;
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                stack.push(v);
            }
        }
    }
    reached == n
}

fn component_count(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = 0usize;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    components
}

/// No odd cycle, i.e. 2-colorable. The empty graph is bipartite.
pub fn is_bipartite(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    stack.push(v);
                } else if color[v] == color[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// Acyclic. The empty graph is a forest.
pub fn is_forest(g: &SimpleGraph) -> bool {
    g.edge_count() + component_count(g) == g.vertex_count()
}

/// Connected, acyclic and nonempty.
pub fn is_tree(g: &SimpleGraph) -> bool {
    g.vertex_count() >= 1 && is_connected(g) && is_forest(g)
}

/// Every pair of distinct vertices adjacent; holds for 0 and 1 vertices.
pub fn is_clique(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    (0..n).all(|u| g.degree(u) == n - 1)
}

/// Every cycle of length >= 4 has a chord. Decided by maximum cardinality
/// search followed by a perfect-elimination-ordering check.
pub fn is_chordal(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    // Maximum cardinality search; ties break towards the smallest vertex.
    let mut weight = vec![0usize; n];
    let mut pos = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex exists");
        visited[v] = true;
        pos[v] = step;
        for u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    // Reverse visit order is a perfect elimination ordering iff chordal:
    // for each vertex, its earlier-visited neighbors minus the latest such
    // neighbor must all be adjacent to that latest neighbor.
    for x in 0..n {
        let earlier: Vec<usize> = g.neighbors(x).filter(|&u| pos[u] < pos[x]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&u| pos[u]) {
            for &u in &earlier {
                if u != parent && !g.has_edge(parent, u) {
                    return false;
                }
            }
        }
    }
    true
}

/// Length of a shortest cycle, or `None` for acyclic graphs.
pub fn girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for u in 0..n {
        for v in g.neighbors(u) {
            if v <= u {
                continue;
            }
            // Shortest u-v path avoiding the edge uv closes a shortest
            // cycle through that edge.
            if let Some(d) = bfs_distance_avoiding_edge(g, u, v) {
                let cycle = d + 1;
                if best.is_none_or(|b| cycle < b) {
                    best = Some(cycle);
                    if cycle == 3 {
                        return best;
                    }
                }
            }
        }
    }
    best
}

fn bfs_distance_avoiding_edge(g: &SimpleGraph, from: usize, to: usize) -> Option<usize> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    dist[from] = 0;
    queue.push_back(from);
    while let Some(a) = queue.pop_front() {
        for b in g.neighbors(a) {
            if (a == from && b == to) || (a == to && b == from) {
                continue;
            }
            if dist[b] == usize::MAX {
                dist[b] = dist[a] + 1;
                if b == to {
                    return Some(dist[b]);
                }
                queue.push_back(b);
            }
        }
    }
    None
}

/// Shortest-cycle classification used when reporting cycle structure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GirthClass {
    Acyclic,
    Girth3,
    Girth4,
    GirthOver4,
}

impl fmt::Display for GirthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GirthClass::Acyclic => "acyclic",
            GirthClass::Girth3 => "girth3",
            GirthClass::Girth4 => "girth4",
            GirthClass::GirthOver4 => ">4",
        })
    }
}

/// Classifies the girth as acyclic, 3, 4 or greater than 4.
pub fn girth_class(g: &SimpleGraph) -> GirthClass {
    match girth(g) {
        None => GirthClass::Acyclic,
        Some(3) => GirthClass::Girth3,
        Some(4) => GirthClass::Girth4,
        Some(_) => GirthClass::GirthOver4,
    }
}

/// Number of triangles (cliques of size 3).
pub fn count_triangles(g: &SimpleGraph) -> u64 {
    count_cliques_of_size(g, 3)
}

/// Number of vertex subsets of size `k` inducing a complete subgraph.
/// Enumerates by intersecting adjacency bit rows along an ordered recursion.
pub fn count_cliques_of_size(g: &SimpleGraph, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    let n = g.vertex_count();
    if k > n {
        return 0;
    }
    let words = g.words_per_row();
    let mut all = vec![u64::MAX; words];
    if !n.is_multiple_of(64) {
        all[words - 1] = (1u64 << (n % 64)) - 1;
    }
    fn popcount(ws: &[u64]) -> u64 {
        ws.iter().map(|w| w.count_ones() as u64).sum()
    }
    fn rec(g: &SimpleGraph, cand: &mut [u64], left: usize, scratch: &mut Vec<Vec<u64>>) -> u64 {
        if left == 1 {
            return popcount(cand);
        }
        let mut total = 0;
        let mut next = scratch.pop().unwrap_or_else(|| vec![0; cand.len()]);
        while let Some(v) = crate::graph::BitIter::new(cand).next() {
            cand[v / 64] &= !(1u64 << (v % 64));
            if popcount(cand) + 1 < left as u64 {
                break;
            }
            let row = g.row(v);
            for (i, slot) in next.iter_mut().enumerate() {
                *slot = cand[i] & row[i];
            }
            total += rec(g, &mut next, left - 1, scratch);
        }
        scratch.push(next);
        total
    }
    let mut scratch = Vec::new();
    rec(g, &mut all, k, &mut scratch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::OccurrenceGraph;
    use crate::perm::{iterate_permutations, Permutation};
    use itertools::Itertools;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn g12(s: &str) -> SimpleGraph {
        OccurrenceGraph::build(&p("12"), &p(s)).graph().clone()
    }

    /// All simple cycle lengths, by DFS from a canonical least vertex.
    /// Independent of the predicates under test.
    fn cycle_lengths_brute(g: &SimpleGraph) -> Vec<usize> {
        let n = g.vertex_count();
        let mut lengths = Vec::new();
        let mut path: Vec<usize> = Vec::new();
        let mut on_path = vec![false; n];

        fn dfs(
            g: &SimpleGraph,
            start: usize,
            path: &mut Vec<usize>,
            on_path: &mut Vec<bool>,
            lengths: &mut Vec<usize>,
        ) {
            let last = *path.last().unwrap();
            for v in g.neighbors(last) {
                if v == start && path.len() >= 3 {
                    // Count each cycle once: orient by second < last vertex.
                    if path[1] < *path.last().unwrap() {
                        lengths.push(path.len());
                    }
                } else if v > start && !on_path[v] {
                    path.push(v);
                    on_path[v] = true;
                    dfs(g, start, path, on_path, lengths);
                    on_path[v] = false;
                    path.pop();
                }
            }
        }

        for start in 0..n {
            path.push(start);
            on_path[start] = true;
            dfs(g, start, &mut path, &mut on_path, &mut lengths);
            on_path[start] = false;
            path.pop();
        }
        lengths
    }

    fn chordless_cycle_exists(g: &SimpleGraph) -> bool {
        // Brute force: does some vertex subset of size >= 4 induce a cycle?
        let n = g.vertex_count();
        for size in 4..=n {
            for subset in (0..n).combinations(size) {
                let induced = g.induced(&subset);
                if induced.vertex_count() == induced.edge_count()
                    && (0..size).all(|u| induced.degree(u) == 2)
                    && is_connected(&induced)
                {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn empty_graph_conventions() {
        let e = SimpleGraph::new(0);
        assert!(is_connected(&e));
        assert!(is_bipartite(&e));
        assert!(is_forest(&e));
        assert!(!is_tree(&e));
        assert!(is_chordal(&e));
        assert!(is_clique(&e));
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected(&g12("321")));
        assert!(!is_connected(&g12("3412")));
        assert!(is_connected(&g12("123")));
        assert!(is_connected(&g12("12")));
    }

    #[test]
    fn bipartite_examples() {
        assert!(!is_bipartite(&g12("123")));
        assert!(is_bipartite(&g12("2143")));
        assert!(is_bipartite(&SimpleGraph::new(0)));
        assert!(is_bipartite(&SimpleGraph::cycle(6)));
        assert!(!is_bipartite(&SimpleGraph::cycle(5)));
    }

    #[test]
    fn forest_and_tree_examples() {
        assert!(is_forest(&SimpleGraph::new(0)));
        assert!(!is_tree(&SimpleGraph::new(0)));
        assert!(is_tree(&g12("12")));
        assert!(!is_forest(&g12("2143")));
        assert!(is_forest(&SimpleGraph::path(5)));
        let two_paths = {
            let mut g = SimpleGraph::new(4);
            g.add_edge(0, 1);
            g.add_edge(2, 3);
            g
        };
        assert!(is_forest(&two_paths) && !is_tree(&two_paths));
    }

    #[test]
    fn chordal_examples() {
        assert!(!is_chordal(&g12("2143")));
        assert!(is_chordal(&g12("123")));
        assert!(!is_chordal(&g12("1234")));
        assert!(is_chordal(&SimpleGraph::complete(6)));
        assert!(is_chordal(&SimpleGraph::path(6)));
        assert!(!is_chordal(&SimpleGraph::cycle(5)));
    }

    #[test]
    fn clique_examples() {
        assert!(is_clique(&g12("21")));
        assert!(is_clique(&g12("123")));
        assert!(!is_clique(&g12("1234")));
        assert!(is_clique(&SimpleGraph::complete(5)));
        assert!(!is_clique(&SimpleGraph::path(3)));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth_class(&g12("123")), GirthClass::Girth3);
        assert_eq!(girth_class(&g12("2143")), GirthClass::Girth4);
        assert_eq!(girth_class(&g12("4321")), GirthClass::Acyclic);
        assert_eq!(girth_class(&SimpleGraph::cycle(7)), GirthClass::GirthOver4);
        assert_eq!(girth(&SimpleGraph::cycle(7)), Some(7));
    }

    #[test]
    fn clique_counting_examples() {
        let g = g12("12345");
        assert_eq!(count_triangles(&g), 30);
        assert_eq!(count_cliques_of_size(&g, 4), 5);
        assert_eq!(count_cliques_of_size(&SimpleGraph::path(4), 3), 0);
        assert_eq!(count_cliques_of_size(&SimpleGraph::complete(6), 1), 6);
        assert_eq!(count_cliques_of_size(&SimpleGraph::complete(6), 2), 15);
        assert_eq!(count_cliques_of_size(&SimpleGraph::complete(6), 6), 1);
        assert_eq!(count_cliques_of_size(&SimpleGraph::complete(6), 7), 0);
    }

    #[test]
    fn clique_counts_match_subset_scan() {
        let graphs: Vec<SimpleGraph> = iterate_permutations(5)
            .map(|pi| OccurrenceGraph::build(&p("12"), &pi).graph().clone())
            .chain([SimpleGraph::complete(7), SimpleGraph::cycle(6)])
            .collect();
        for g in &graphs {
            let n = g.vertex_count();
            for k in 1..=4usize {
                let brute = (0..n)
                    .combinations(k)
                    .filter(|vs| {
                        vs.iter()
                            .tuple_combinations()
                            .all(|(&u, &v)| g.has_edge(u, v))
                    })
                    .count() as u64;
                assert_eq!(count_cliques_of_size(g, k), brute);
            }
        }
    }

    #[test]
    fn cycle_predicates_match_brute_force() {
        // Occurrence graphs with at most 12 vertices plus a few fixed graphs.
        let mut graphs: Vec<SimpleGraph> = Vec::new();
        for n in 0..=5 {
            for pi in iterate_permutations(n) {
                graphs.push(g12(&pi.to_string()));
            }
        }
        graphs.extend([
            SimpleGraph::cycle(5),
            SimpleGraph::cycle(6),
            SimpleGraph::path(6),
            SimpleGraph::complete(5),
            SimpleGraph::new(0),
        ]);
        for g in &graphs {
            assert!(g.vertex_count() <= 12);
            let lengths = cycle_lengths_brute(g);
            assert_eq!(is_forest(g), lengths.is_empty(), "{g:?}");
            assert_eq!(is_bipartite(g), lengths.iter().all(|l| l % 2 == 0), "{g:?}");
            assert_eq!(girth(g), lengths.iter().min().copied(), "{g:?}");
            assert_eq!(
                is_chordal(g),
                !chordless_cycle_exists(g),
                "chordal mismatch on {g:?}"
            );
        }
    }

    #[test]
    fn property_names_parse() {
        assert_eq!(
            "bipartite".parse::<GraphProperty>().unwrap(),
            GraphProperty::Bipartite
        );
        let err = "planar".parse::<GraphProperty>().unwrap_err();
        assert!(err.to_string().contains("connected, bipartite"));
        for prop in GraphProperty::ALL {
            assert_eq!(prop.name().parse::<GraphProperty>().unwrap(), prop);
        }
    }

    #[test]
    fn hereditary_flags() {
        use GraphProperty::*;
        assert!(Bipartite.is_hereditary());
        assert!(Forest.is_hereditary());
        assert!(Chordal.is_hereditary());
        assert!(Clique.is_hereditary());
        assert!(!Connected.is_hereditary());
        assert!(!Tree.is_hereditary());
    }
}
