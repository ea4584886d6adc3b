//! Brute-force ground truth for small graphs.
//!
//! Interval recognition uses the consecutive-clique characterization: a
//! graph is an interval graph iff its maximal cliques can be ordered so that
//! the cliques containing any vertex are consecutive. Boxicity is the least
//! `d` such that the non-edges can be covered by `d` sets, each of whose
//! removal from the complete graph leaves an interval graph.
//!
//! Everything here runs on `u64` neighbourhood masks and refuses inputs
//! beyond the configured [`OracleGuard`].

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, ResourceError, Result};
use crate::graph::{VertexId, ZdGraph};

/// Hard ceiling from the mask representation.
pub const MASK_VERTICES: usize = 64;
/// Hard ceiling on the non-edge cover search (one table entry per subset).
pub const MASK_NONEDGES: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleGuard {
    pub max_vertices: usize,
    /// Limits the non-edge cover search used for `d >= 2`.
    pub max_nonedges: usize,
    pub max_dim: usize,
}

impl Default for OracleGuard {
    fn default() -> Self {
        OracleGuard { max_vertices: 16, max_nonedges: 16, max_dim: 3 }
    }
}

impl OracleGuard {
    /// Guards raised as far as the implementation allows. Searches may take
    /// a very long time.
    pub fn lifted() -> Self {
        OracleGuard { max_vertices: MASK_VERTICES, max_nonedges: 26, max_dim: 16 }
    }
}

/// Maximal cliques as sorted vertex lists, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueList {
    pub cliques: Vec<Vec<VertexId>>,
}

fn exceeded(guard: &'static str, limit: usize, actual: usize) -> Error {
    Error::Resource(ResourceError { guard, limit, actual, lower: None, upper: None })
}

fn masks(g: &ZdGraph, guard: &OracleGuard) -> Result<Vec<u64>> {
    let n = g.order();
    let limit = guard.max_vertices.min(MASK_VERTICES);
    if n > limit {
        return Err(exceeded("max_vertices", limit, n));
    }
    Ok((0..n).map(|u| g.neighbors(u).fold(0u64, |m, v| m | 1 << v)).collect())
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(b)
    })
}

fn all_vertices(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Bron–Kerbosch with pivoting on vertex masks.
fn clique_masks(adj: &[u64]) -> Vec<u64> {
    fn expand(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = bits(p | x).max_by_key(|&u| (adj[u] & p).count_ones()).expect("p is nonempty");
        for v in bits(p & !adj[pivot]) {
            expand(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    if !adj.is_empty() {
        expand(adj, 0, all_vertices(adj.len()), 0, &mut out);
    }
    out
}

pub fn maximal_cliques(g: &ZdGraph, guard: &OracleGuard) -> Result<CliqueList> {
    let adj = masks(g, guard)?;
    let mut cliques: Vec<Vec<VertexId>> = clique_masks(&adj).into_iter().map(|m| bits(m).collect()).collect();
    cliques.sort();
    Ok(CliqueList { cliques })
}

/// Chordality through maximum cardinality search and a perfect elimination
/// ordering check.
fn is_chordal(adj: &[u64]) -> bool {
    let n = adj.len();
    let mut weight = vec![0usize; n];
    let mut visited = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| visited >> v & 1 == 0)
            .max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        for u in bits(adj[v] & !visited) {
            weight[u] += 1;
        }
        visited |= 1 << v;
        order.push(v);
    }
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut earlier = 0u64;
    for &v in &order {
        let before = adj[v] & earlier;
        if let Some(parent) = bits(before).max_by_key(|&u| position[u]) {
            let parent_before = adj[parent] & earlier;
            if before & !(1 << parent) & !parent_before != 0 {
                return false;
            }
        }
        earlier |= 1 << v;
    }
    true
}

/// Searches for an ordering of `cliques` in which every vertex occurs in a
/// contiguous run. States are (placed set, last clique); the vertices that
/// may no longer appear are determined by them, so failed states are
/// memoized.
fn consecutive_arrangement(cliques: &[u64]) -> bool {
    let m = cliques.len();
    if m <= 1 {
        return true;
    }
    fn extend(cliques: &[u64], placed: u64, last: usize, covered: u64, dead: &mut BTreeSet<(u64, usize)>) -> bool {
        if placed.count_ones() as usize == cliques.len() {
            return true;
        }
        if dead.contains(&(placed, last)) {
            return false;
        }
        let closed = covered & !cliques[last];
        for c in 0..cliques.len() {
            if placed >> c & 1 == 0
                && cliques[c] & closed == 0
                && extend(cliques, placed | 1 << c, c, covered | cliques[c], dead)
            {
                return true;
            }
        }
        dead.insert((placed, last));
        false
    }
    let mut dead = BTreeSet::new();
    (0..m).any(|c| extend(cliques, 1 << c, c, cliques[c], &mut dead))
}

fn interval_masks(adj: &[u64]) -> bool {
    // Interval graphs are chordal, and chordal graphs have at most n maximal
    // cliques, which keeps the arrangement search within 64-bit clique sets.
    if !is_chordal(adj) {
        return false;
    }
    let cliques = clique_masks(adj);
    debug_assert!(cliques.len() <= adj.len().max(1));
    consecutive_arrangement(&cliques)
}

pub fn is_interval(g: &ZdGraph, guard: &OracleGuard) -> Result<bool> {
    Ok(interval_masks(&masks(g, guard)?))
}

fn boxicity_at_most_masks(adj: &[u64], d: usize, guard: &OracleGuard) -> Result<bool> {
    let n = adj.len();
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| bits(!adj[u] & all_vertices(n) & !((1u64 << u) | ((1u64 << u) - 1))).map(move |v| (u, v)))
        .collect();
    if d > guard.max_dim {
        return Err(exceeded("max_dim", guard.max_dim, d));
    }
    if non_edges.is_empty() {
        return Ok(true);
    }
    if d == 0 {
        return Ok(false);
    }
    if interval_masks(adj) {
        return Ok(true);
    }
    if d == 1 {
        return Ok(false);
    }
    let m = non_edges.len();
    let limit = guard.max_nonedges.min(MASK_NONEDGES);
    if m > limit {
        return Err(exceeded("max_nonedges", limit, m));
    }
    let full = (1u32 << m) - 1;
    let complete: Vec<u64> = (0..n).map(|u| all_vertices(n) & !(1 << u)).collect();

    // valid[s]: removing the non-edges in `s` from K_n leaves an interval
    // graph. Each distinct supergraph is tested exactly once.
    let mut valid = vec![false; 1 << m];
    let mut h = complete.clone();
    for s in 0..=full {
        h.copy_from_slice(&complete);
        for (i, &(u, v)) in non_edges.iter().enumerate() {
            if s >> i & 1 == 1 {
                h[u] &= !(1 << v);
                h[v] &= !(1 << u);
            }
        }
        valid[s as usize] = interval_masks(&h);
    }
    if valid[full as usize] {
        return Ok(true);
    }
    // up[s]: some valid set contains s.
    let mut up = valid.clone();
    for i in 0..m {
        for s in (0..=full).rev() {
            if s >> i & 1 == 0 && up[(s | 1 << i) as usize] {
                up[s as usize] = true;
            }
        }
    }
    let valid_sets: Vec<u32> = (1..=full).filter(|&s| valid[s as usize]).collect();

    fn cover(uncovered: u32, depth: usize, up: &[bool], valid_sets: &[u32], dead: &mut BTreeSet<(u32, usize)>) -> bool {
        if uncovered == 0 {
            return true;
        }
        if depth == 0 {
            return false;
        }
        if depth == 1 {
            return up[uncovered as usize];
        }
        if dead.contains(&(uncovered, depth)) {
            return false;
        }
        let low = uncovered & uncovered.wrapping_neg();
        for &s in valid_sets {
            if s & low != 0 && cover(uncovered & !s, depth - 1, up, valid_sets, dead) {
                return true;
            }
        }
        dead.insert((uncovered, depth));
        false
    }
    let mut dead = BTreeSet::new();
    Ok(cover(full, d, &up, &valid_sets, &mut dead))
}

/// Whether `box(G) <= d`.
pub fn boxicity_at_most(g: &ZdGraph, d: usize, guard: &OracleGuard) -> Result<bool> {
    let adj = masks(g, guard)?;
    boxicity_at_most_masks(&adj, d, guard)
}

/// Least `d` with `box(G) <= d`.
pub fn brute_force_boxicity(g: &ZdGraph, guard: &OracleGuard) -> Result<usize> {
    let adj = masks(g, guard)?;
    let roberts_upper = g.order() / 2;
    for d in 0..=guard.max_dim {
        match boxicity_at_most_masks(&adj, d, guard) {
            Ok(true) => return Ok(d),
            Ok(false) => {}
            Err(Error::Resource(mut r)) => {
                r.lower = Some(d);
                r.upper = Some(roberts_upper.max(d));
                return Err(Error::Resource(r));
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::Resource(ResourceError {
        guard: "max_dim",
        limit: guard.max_dim,
        actual: guard.max_dim + 1,
        lower: Some(guard.max_dim + 1),
        upper: Some(roberts_upper.max(guard.max_dim + 1)),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_zn_graph, induced_subgraph, Label};
    use alloc::vec;

    fn graph(n: usize, edges: &[(usize, usize)]) -> ZdGraph {
        ZdGraph::from_edges(n, edges).unwrap()
    }

    fn cycle(n: usize) -> ZdGraph {
        graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    fn path(n: usize) -> ZdGraph {
        graph(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
    }

    fn complete(n: usize) -> ZdGraph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        graph(n, &e)
    }

    /// Complement of a perfect matching on `2t` vertices.
    fn roberts(t: usize) -> ZdGraph {
        let mut e = Vec::new();
        for u in 0..2 * t {
            for v in u + 1..2 * t {
                if u / 2 != v / 2 {
                    e.push((u, v));
                }
            }
        }
        graph(2 * t, &e)
    }

    /// Interval iff chordal and free of asteroidal triples; checked with
    /// plain searches, independent of the clique arrangement code.
    fn interval_by_at_free(g: &ZdGraph) -> bool {
        let n = g.order();
        // chordal: repeatedly delete a simplicial vertex
        let mut alive: Vec<bool> = vec![true; n];
        for _ in 0..n {
            let simplicial = (0..n).find(|&v| {
                alive[v] && {
                    let nb: Vec<usize> = (0..n).filter(|&u| alive[u] && g.adjacent(u, v)).collect();
                    nb.iter().all(|&a| nb.iter().all(|&b| a == b || g.adjacent(a, b)))
                }
            });
            match simplicial {
                Some(v) => alive[v] = false,
                None => return false,
            }
        }
        let connected_avoiding = |s: usize, t: usize, z: usize| {
            let blocked = |w: usize| w == z || g.adjacent(w, z);
            if blocked(s) || blocked(t) {
                return false;
            }
            let mut seen = vec![false; n];
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(x) = stack.pop() {
                if x == t {
                    return true;
                }
                for y in g.neighbors(x).collect::<Vec<_>>() {
                    if !seen[y] && !blocked(y) {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            false
        };
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    if g.adjacent(x, y) || g.adjacent(y, z) || g.adjacent(x, z) {
                        continue;
                    }
                    if connected_avoiding(x, y, z) && connected_avoiding(y, z, x) && connected_avoiding(x, z, y) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn cliques_examples() {
        let g = OracleGuard::default();
        assert_eq!(maximal_cliques(&cycle(4), &g).unwrap().cliques.len(), 4);
        assert_eq!(maximal_cliques(&complete(4), &g).unwrap().cliques, vec![vec![0, 1, 2, 3]]);
        let z12 = build_zn_graph(12).unwrap();
        let cl = maximal_cliques(&z12, &g).unwrap();
        let labelled: Vec<Vec<u64>> =
            cl.cliques.iter().map(|c| c.iter().map(|&v| z12.label(v).residue().unwrap()).collect()).collect();
        let mut expected =
            vec![vec![3, 4], vec![3, 8], vec![2, 6], vec![6, 10], vec![4, 6], vec![6, 8], vec![4, 9], vec![8, 9]];
        let mut got = labelled.clone();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        let isolated = graph(3, &[(0, 1)]);
        assert_eq!(maximal_cliques(&isolated, &g).unwrap().cliques, vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn interval_examples() {
        let g = OracleGuard::default();
        assert!(is_interval(&path(4), &g).unwrap());
        assert!(!is_interval(&cycle(4), &g).unwrap());
        assert!(is_interval(&build_zn_graph(18).unwrap(), &g).unwrap());
        assert!(is_interval(&graph(0, &[]), &g).unwrap());
        // the 3-sun is chordal but not interval
        let sun = graph(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)]);
        assert!(!is_interval(&sun, &g).unwrap());
        assert!(!interval_by_at_free(&sun));
        // subdivided claw: chordal, has an asteroidal triple
        let claw = graph(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        assert!(!is_interval(&claw, &g).unwrap());
    }

    #[test]
    fn interval_agrees_with_at_free_exhaustively() {
        // every graph on 6 vertices (2^15)
        let pairs: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        let guard = OracleGuard::default();
        for s in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| s >> i & 1 == 1).map(|(_, e)| *e).collect();
            let g = graph(6, &edges);
            assert_eq!(is_interval(&g, &guard).unwrap(), interval_by_at_free(&g), "{edges:?}");
        }
    }

    #[test]
    fn boxicity_examples() {
        let g = OracleGuard::default();
        assert!(!boxicity_at_most(&cycle(4), 1, &g).unwrap());
        assert!(boxicity_at_most(&cycle(4), 2, &g).unwrap());
        assert!(!boxicity_at_most(&roberts(3), 2, &g).unwrap());
        assert!(boxicity_at_most(&roberts(3), 3, &g).unwrap());
        assert!(boxicity_at_most(&complete(4), 0, &g).unwrap());
        assert_eq!(brute_force_boxicity(&cycle(4), &g).unwrap(), 2);
        assert_eq!(brute_force_boxicity(&path(4), &g).unwrap(), 1);
        assert_eq!(brute_force_boxicity(&complete(4), &g).unwrap(), 0);
        assert_eq!(brute_force_boxicity(&roberts(2), &g).unwrap(), 2);
        assert_eq!(brute_force_boxicity(&roberts(3), &g).unwrap(), 3);
        let z12 = build_zn_graph(12).unwrap();
        let labels: Vec<Label> = [3u64, 6, 4, 8].into_iter().map(Label::Residue).collect();
        assert_eq!(brute_force_boxicity(&induced_subgraph(&z12, &labels).unwrap(), &g).unwrap(), 2);
    }

    #[test]
    fn guards() {
        let g = OracleGuard::default();
        let big = path(20);
        match is_interval(&big, &g) {
            Err(Error::Resource(r)) => assert_eq!((r.guard, r.limit, r.actual), ("max_vertices", 16, 20)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(boxicity_at_most(&cycle(4), 4, &g), Err(Error::Resource(_))));
        // two 4-cycles plus isolated vertices: not interval, 58 non-edges
        let c4s = graph(12, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]);
        match brute_force_boxicity(&c4s, &g) {
            Err(Error::Resource(r)) => {
                assert_eq!(r.guard, "max_nonedges");
                assert_eq!(r.lower, Some(2));
            }
            other => panic!("{other:?}"),
        }
        match brute_force_boxicity(&roberts(4), &OracleGuard { max_dim: 3, ..g }) {
            Err(Error::Resource(r)) => assert_eq!((r.guard, r.lower), ("max_dim", Some(4))),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn monotone_in_dimension() {
        let g = OracleGuard::default();
        for n in [6u64, 8, 10, 12, 14, 15, 18, 25] {
            let z = build_zn_graph(n).unwrap();
            let mut prev = false;
            for d in 0..=3 {
                let now = boxicity_at_most(&z, d, &g).unwrap();
                assert!(!prev || now, "N={n} d={d}");
                prev = now;
            }
        }
    }
}
