//! Perfect matchings (Edmonds' blossom algorithm) and 2-factors of cubic
//! multigraphs.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{EdgeId, MultiGraph};
use crate::recognition::bridges_of_connected;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("graph has a bridge")]
    NotBridgeless,
    #[error("graph is not 2-edge-connected")]
    NotTwoEdgeConnected,
    #[error("edge {0} is not in the graph")]
    EdgeAbsent(EdgeId),
    #[error("no perfect matching found where one must exist")]
    NoMatching,
}

/// A set of edge copies, no two sharing a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<EdgeId>,
    pub perfect: bool,
}

/// One cycle of a 2-factor: `edges[j]` joins `vertices[j]` and
/// `vertices[(j + 1) % len]`. Length 2 cycles use two parallel copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeId>,
}

/// A spanning 2-regular subgraph and the complementary perfect matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    pub cycles: Vec<FactorCycle>,
    pub matching: Vec<EdgeId>,
}

impl TwoFactor {
    pub fn contains(&self, e: EdgeId) -> bool {
        self.cycles.iter().any(|c| c.edges.contains(&e))
    }

    pub fn factor_edges(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self.cycles.iter().flat_map(|c| c.edges.clone()).collect();
        out.sort_unstable();
        out
    }
}

/// Maximum matching on the simple graph underlying `g` (one candidate per
/// vertex pair); matched pairs are attributed to their lowest edge copy.
pub fn maximum_matching(g: &MultiGraph) -> Matching {
    let mate = blossom(g);
    let mut edges: Vec<EdgeId> = (0..g.order())
        .filter(|&v| mate[v].is_some_and(|m| v < m))
        .map(|v| g.edge_ids_between(v, mate[v].unwrap()).start)
        .collect();
    edges.sort_unstable();
    let perfect = mate.iter().all(Option::is_some);
    Matching { edges, perfect }
}

pub fn perfect_matching(g: &MultiGraph) -> Option<Matching> {
    if g.order() % 2 == 1 {
        return None;
    }
    let m = maximum_matching(g);
    m.perfect.then_some(m)
}

/// Edmonds' blossom algorithm; `mate[v]` is the partner of `v`.
fn blossom(g: &MultiGraph) -> Vec<Option<usize>> {
    let n = g.order();
    let mut mate: Vec<Option<usize>> = vec![None; n];
    // Greedy start.
    for v in 0..n {
        if mate[v].is_none() {
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| mate[w].is_none()) {
                mate[v] = Some(w);
                mate[w] = Some(v);
            }
        }
    }
    for root in 0..n {
        if mate[root].is_none() {
            if let Some(end) = find_augmenting_path(g, &mate, root) {
                augment(&mut mate, end.0, &end.1);
            }
        }
    }
    mate
}

/// Flips the alternating path ending at `v`, walking back via `parent`.
fn augment(mate: &mut [Option<usize>], mut v: usize, parent: &[Option<usize>]) {
    loop {
        let pv = parent[v].expect("augmenting path is rooted");
        let next = mate[pv];
        mate[v] = Some(pv);
        mate[pv] = Some(v);
        match next {
            Some(nv) => v = nv,
            None => break,
        }
    }
}

/// BFS over alternating trees with blossom contraction. Returns the free
/// endpoint reached and the parent pointers to walk back along.
fn find_augmenting_path(
    g: &MultiGraph,
    mate: &[Option<usize>],
    root: usize,
) -> Option<(usize, Vec<Option<usize>>)> {
    let n = g.order();
    let mut used = vec![false; n];
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    used[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &to in g.neighbors(v) {
            if base[v] == base[to] || mate[v] == Some(to) {
                continue;
            }
            let to_is_outer = to == root || mate[to].is_some_and(|m| parent[m].is_some());
            if to_is_outer {
                let cur_base = lca(mate, &base, &parent, v, to);
                let mut in_blossom = vec![false; n];
                mark_path(mate, &base, &mut parent, &mut in_blossom, v, cur_base, to);
                mark_path(mate, &base, &mut parent, &mut in_blossom, to, cur_base, v);
                for i in 0..n {
                    if in_blossom[base[i]] {
                        base[i] = cur_base;
                        if !used[i] {
                            used[i] = true;
                            queue.push_back(i);
                        }
                    }
                }
            } else if parent[to].is_none() {
                parent[to] = Some(v);
                match mate[to] {
                    None => return Some((to, parent)),
                    Some(m) => {
                        used[m] = true;
                        queue.push_back(m);
                    }
                }
            }
        }
    }
    None
}

fn lca(
    mate: &[Option<usize>],
    base: &[usize],
    parent: &[Option<usize>],
    a: usize,
    b: usize,
) -> usize {
    let mut seen = vec![false; mate.len()];
    let mut a = a;
    loop {
        a = base[a];
        seen[a] = true;
        match mate[a] {
            None => break,
            Some(m) => a = parent[m].expect("outer vertex has a tree parent"),
        }
    }
    let mut b = b;
    loop {
        b = base[b];
        if seen[b] {
            return b;
        }
        b = parent[mate[b].expect("non-root outer vertex is matched")]
            .expect("outer vertex has a tree parent");
    }
}

fn mark_path(
    mate: &[Option<usize>],
    base: &[usize],
    parent: &mut [Option<usize>],
    in_blossom: &mut [bool],
    mut v: usize,
    b: usize,
    mut child: usize,
) {
    while base[v] != b {
        let m = mate[v].expect("blossom path vertex is matched");
        in_blossom[base[v]] = true;
        in_blossom[base[m]] = true;
        parent[v] = Some(child);
        child = m;
        v = parent[m].expect("blossom path vertex has a tree parent");
    }
}

fn check_cubic(g: &MultiGraph) -> Result<(), FactorError> {
    match (0..g.order()).find(|&v| g.degree(v) != 3) {
        Some(v) => Err(FactorError::NotCubic {
            vertex: v,
            degree: g.degree(v),
        }),
        None => Ok(()),
    }
}

/// A 2-factor of a bridgeless cubic multigraph: the complement of a
/// perfect matching.
pub fn two_factor(g: &MultiGraph) -> Result<TwoFactor, FactorError> {
    check_cubic(g)?;
    if !bridges_of_connected(g).is_empty() {
        return Err(FactorError::NotBridgeless);
    }
    complement_factor(g, &[])
}

/// A 2-factor containing edge `e`. The perfect matching is taken in
/// `g - {e, f}` with `f` the smallest edge id other than `e`; such a
/// matching exists in every 2-edge-connected cubic multigraph.
pub fn two_factor_through(g: &MultiGraph, e: EdgeId) -> Result<TwoFactor, FactorError> {
    if e >= g.size() {
        return Err(FactorError::EdgeAbsent(e));
    }
    check_two_edge_connected_cubic(g)?;
    let f = if e == 0 { 1 } else { 0 };
    complement_factor(g, &[e, f])
}

/// A 2-factor whose complementary matching contains edge `e`. The matching
/// is taken in `g` minus the other two edge copies at the smaller endpoint
/// of `e`, which forces `e` into it.
pub fn two_factor_avoiding(g: &MultiGraph, e: EdgeId) -> Result<TwoFactor, FactorError> {
    if e >= g.size() {
        return Err(FactorError::EdgeAbsent(e));
    }
    check_two_edge_connected_cubic(g)?;
    let (u, _) = g.edge(e);
    let others: Vec<EdgeId> = g.incident(u).iter().copied().filter(|&x| x != e).collect();
    let tf = complement_factor(g, &others)?;
    debug_assert!(tf.matching.contains(&e));
    Ok(tf)
}

fn check_two_edge_connected_cubic(g: &MultiGraph) -> Result<(), FactorError> {
    check_cubic(g)?;
    if !g.is_connected() || !bridges_of_connected(g).is_empty() {
        return Err(FactorError::NotTwoEdgeConnected);
    }
    Ok(())
}

/// Perfect matching of `g - removed`, mapped back to edge ids of `g`,
/// and its complement split into cycles.
fn complement_factor(g: &MultiGraph, removed: &[EdgeId]) -> Result<TwoFactor, FactorError> {
    let reduced = g.without_edges(removed);
    let m = perfect_matching(&reduced).ok_or(FactorError::NoMatching)?;
    let mut in_matching = vec![false; g.size()];
    for &re in &m.edges {
        let (u, v) = reduced.edge(re);
        let id = g
            .edge_ids_between(u, v)
            .find(|id| !removed.contains(id) && !in_matching[*id])
            .expect("reduced edge has a surviving copy");
        in_matching[id] = true;
    }
    let matching: Vec<EdgeId> = (0..g.size()).filter(|&id| in_matching[id]).collect();
    let cycles = split_cycles(g, &in_matching)?;
    Ok(TwoFactor { cycles, matching })
}

/// Walks the cycles of the edges not flagged in `excluded`. Each cycle
/// starts at its smallest vertex and leaves along the neighbor with the
/// smaller id (smaller edge id for parallel copies).
fn split_cycles(g: &MultiGraph, excluded: &[bool]) -> Result<Vec<FactorCycle>, FactorError> {
    let n = g.order();
    let factor_at: Vec<Vec<EdgeId>> = (0..n)
        .map(|v| {
            g.incident(v)
                .iter()
                .copied()
                .filter(|&e| !excluded[e])
                .collect()
        })
        .collect();
    if factor_at.iter().any(|f| f.len() != 2) {
        return Err(FactorError::NoMatching);
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let first = *factor_at[start]
            .iter()
            .min_by_key(|&&e| (g.other_end(e, start), e))
            .unwrap();
        let mut vertices = vec![start];
        let mut edges = vec![first];
        seen[start] = true;
        let mut cur = g.other_end(first, start);
        let mut via = first;
        while cur != start {
            seen[cur] = true;
            vertices.push(cur);
            let next = *factor_at[cur].iter().find(|&&e| e != via).unwrap();
            edges.push(next);
            via = next;
            cur = g.other_end(next, cur);
        }
        cycles.push(FactorCycle { vertices, edges });
    }
    Ok(cycles)
}
