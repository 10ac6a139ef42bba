//! Test-input construction: triangle and diamond-string expansions of
//! cubic multigraphs, rings of diamonds, random cubic multigraphs and
//! bridged assemblies.

mod fixtures;

pub use fixtures::{fig2_reference_coloring, fixture, fixtures, Fixture};

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::MultiGraph;
use crate::recognition::{check_claw_free_cubic, find_claw, is_two_edge_connected};
use crate::rng::SplitMix64;

/// Attempts before a rejection sampler gives up.
pub const RETRY_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("underlying multigraph is not cubic (vertex {vertex} has degree {degree})")]
    NotCubicH { vertex: usize, degree: usize },
    #[error("underlying multigraph is not 2-edge-connected")]
    NotTwoEdgeConnectedH,
    #[error("expansion spec lists {given} string lengths for {edges} edges")]
    SpecMismatch { given: usize, edges: usize },
    #[error("a ring needs at least 2 diamonds, got {0}")]
    KTooSmall(usize),
    #[error("cubic multigraphs need an even order, got {0}")]
    OddOrder(usize),
    #[error("order {0} is too small")]
    TooSmall(usize),
    #[error("no valid sample after {0} attempts")]
    RetryLimit(usize),
    #[error("infeasible tree spec: {0}")]
    InfeasibleSpec(String),
}

/// String lengths per edge of `H` (indexed by edge id) and the seed that
/// decides which triangle vertex serves which edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionSpec {
    pub string_lengths: Vec<usize>,
    pub seed: u64,
}

impl ExpansionSpec {
    pub fn plain(edges: usize, seed: u64) -> Self {
        ExpansionSpec {
            string_lengths: vec![0; edges],
            seed,
        }
    }

    /// Independent lengths in `0..=max_len` for every edge of `h`.
    pub fn random(h: &MultiGraph, max_len: usize, rng: &mut impl Rng) -> Self {
        ExpansionSpec {
            string_lengths: (0..h.size()).map(|_| rng.gen_range(0..=max_len)).collect(),
            seed: rng.gen(),
        }
    }
}

/// Replaces every vertex of `h` by a triangle and every edge by a string
/// of diamonds of the given length. H-vertex `v` becomes `3v..3v+3`;
/// diamonds follow in edge-id order as `entry, interior, interior, exit`.
pub fn expand_to_clawfree(h: &MultiGraph, spec: &ExpansionSpec) -> Result<MultiGraph, GenError> {
    if let Some(v) = (0..h.order()).find(|&v| h.degree(v) != 3) {
        return Err(GenError::NotCubicH {
            vertex: v,
            degree: h.degree(v),
        });
    }
    if !is_two_edge_connected(h) {
        return Err(GenError::NotTwoEdgeConnectedH);
    }
    if spec.string_lengths.len() != h.size() {
        return Err(GenError::SpecMismatch {
            given: spec.string_lengths.len(),
            edges: h.size(),
        });
    }
    let mut rng = SplitMix64::new(spec.seed);
    let mut port_of_slot = vec![(usize::MAX, usize::MAX); h.size()];
    let mut edges = Vec::new();
    for v in 0..h.order() {
        let t = 3 * v;
        edges.extend([(t, t + 1), (t + 1, t + 2), (t, t + 2)]);
        let mut corners = [t, t + 1, t + 2];
        corners.shuffle(&mut rng);
        for (&id, &c) in h.incident(v).iter().zip(&corners) {
            let slot = &mut port_of_slot[id];
            if h.edge(id).0 == v {
                slot.0 = c;
            } else {
                slot.1 = c;
            }
        }
    }
    let mut next = 3 * h.order();
    for (id, &(p, q)) in port_of_slot.iter().enumerate() {
        let mut prev = p;
        for _ in 0..spec.string_lengths[id] {
            let (a, b, c, d) = (next, next + 1, next + 2, next + 3);
            next += 4;
            edges.extend([(prev, a), (a, b), (a, c), (b, c), (b, d), (c, d)]);
            prev = d;
        }
        edges.push((prev, q));
    }
    Ok(MultiGraph::new(next, &edges).expect("expansion edges are in range and loop-free"))
}

/// `k` diamonds closed into a ring; diamond `i` is `4i..4i+4` with entry
/// `4i` and exit `4i+3`.
pub fn gen_ring_of_diamonds(k: usize) -> Result<MultiGraph, GenError> {
    if k < 2 {
        return Err(GenError::KTooSmall(k));
    }
    let mut edges = Vec::with_capacity(6 * k);
    for i in 0..k {
        let (a, b, c, d) = (4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3);
        edges.extend([
            (a, b),
            (a, c),
            (b, c),
            (b, d),
            (c, d),
            (d, 4 * ((i + 1) % k)),
        ]);
    }
    Ok(MultiGraph::new(4 * k, &edges).expect("ring edges are valid"))
}

/// A random loop-free 2-edge-connected cubic multigraph: a random cycle
/// cover (cycles of length at least 2) plus a random perfect matching,
/// resampled until 2-edge-connected.
pub fn gen_cubic_multigraph(n: usize, rng: &mut impl Rng) -> Result<MultiGraph, GenError> {
    if n % 2 == 1 {
        return Err(GenError::OddOrder(n));
    }
    if n < 2 {
        return Err(GenError::TooSmall(n));
    }
    for _ in 0..RETRY_LIMIT {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut edges = Vec::with_capacity(3 * n / 2);
        let mut start = 0;
        while start < n {
            let left = n - start;
            let mut len = rng.gen_range(2..=left);
            if left - len == 1 {
                len = left;
            }
            let cycle = &order[start..start + len];
            for i in 0..len {
                edges.push((cycle[i], cycle[(i + 1) % len]));
            }
            start += len;
        }
        order.shuffle(rng);
        edges.extend(order.chunks(2).map(|p| (p[0], p[1])));
        let g = MultiGraph::new(n, &edges).expect("no loops by construction");
        if is_two_edge_connected(&g) {
            return Ok(g);
        }
    }
    Err(GenError::RetryLimit(RETRY_LIMIT))
}

/// A node of a bridge-tree spec.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockSpec {
    Triangle,
    Diamond,
    /// A 2-edge-connected component with this many attachment vertices.
    TypeIII(usize),
}

impl BlockSpec {
    pub fn attachments(self) -> usize {
        match self {
            BlockSpec::Triangle => 3,
            BlockSpec::Diamond => 2,
            BlockSpec::TypeIII(r) => r,
        }
    }
}

/// A block with its free attachment vertices.
struct Block {
    graph: MultiGraph,
    attach: Vec<usize>,
}

/// A connected claw-free cubic graph whose components after removing the
/// bridges are the given blocks. The tree is drawn uniformly among trees
/// with the implied degree sequence.
pub fn gen_bridged(spec: &[BlockSpec], seed: u64) -> Result<MultiGraph, GenError> {
    let k = spec.len();
    if k == 0 {
        return Err(GenError::InfeasibleSpec("no blocks".into()));
    }
    let degrees: Vec<usize> = spec.iter().map(|b| b.attachments()).collect();
    if k == 1 {
        if degrees[0] != 0 {
            return Err(GenError::InfeasibleSpec(
                "a single block cannot carry bridges".into(),
            ));
        }
    } else {
        if let Some(i) = degrees.iter().position(|&d| d == 0) {
            return Err(GenError::InfeasibleSpec(format!(
                "block {i} has no attachment"
            )));
        }
        let sum: usize = degrees.iter().sum();
        if sum != 2 * (k - 1) {
            return Err(GenError::InfeasibleSpec(format!(
                "attachment counts sum to {sum}, a tree on {k} blocks needs {}",
                2 * (k - 1)
            )));
        }
    }

    let mut rng = SplitMix64::new(seed);
    for _ in 0..RETRY_LIMIT {
        let tree = random_tree(&degrees, &mut rng);
        let mut blocks = Vec::with_capacity(k);
        for &b in spec {
            blocks.push(gen_block(b, &mut rng)?);
        }
        for b in &mut blocks {
            b.attach.shuffle(&mut rng);
        }
        let mut offset = Vec::with_capacity(k);
        let mut n = 0;
        let mut edges = Vec::new();
        for b in &blocks {
            offset.push(n);
            edges.extend(b.graph.edges().iter().map(|&(u, v)| (u + n, v + n)));
            n += b.graph.order();
        }
        for (i, j) in tree {
            let a = blocks[i].attach.pop().expect("degree sequence respected") + offset[i];
            let b = blocks[j].attach.pop().expect("degree sequence respected") + offset[j];
            edges.push((a, b));
        }
        let g = MultiGraph::new(n, &edges).expect("valid assembly");
        if check_claw_free_cubic(&g).is_ok() {
            return Ok(g);
        }
    }
    Err(GenError::RetryLimit(RETRY_LIMIT))
}

/// Decodes a random Prüfer sequence in which node `i` appears
/// `degrees[i] - 1` times.
fn random_tree(degrees: &[usize], rng: &mut impl Rng) -> Vec<(usize, usize)> {
    let k = degrees.len();
    if k == 1 {
        return Vec::new();
    }
    let mut seq: Vec<usize> = (0..k)
        .flat_map(|i| std::iter::repeat_n(i, degrees[i] - 1))
        .collect();
    seq.shuffle(rng);
    let mut remaining = degrees.to_vec();
    let mut edges = Vec::with_capacity(k - 1);
    for &s in &seq {
        let leaf = (0..k)
            .find(|&i| remaining[i] == 1)
            .expect("a leaf always exists");
        edges.push((leaf, s));
        remaining[leaf] = 0;
        remaining[s] -= 1;
    }
    let last: Vec<usize> = (0..k).filter(|&i| remaining[i] == 1).collect();
    edges.push((last[0], last[1]));
    edges
}

fn gen_block(b: BlockSpec, rng: &mut impl Rng) -> Result<Block, GenError> {
    match b {
        BlockSpec::Triangle => Ok(Block {
            graph: MultiGraph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
            attach: vec![0, 1, 2],
        }),
        BlockSpec::Diamond => Ok(Block {
            graph: MultiGraph::new(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap(),
            attach: vec![0, 3],
        }),
        BlockSpec::TypeIII(r) => gen_type_three(r, rng),
    }
}

/// A 2-edge-connected block with `r` pairwise nonadjacent degree-2 vertices,
/// each with adjacent neighbors. Starts from a random claw-free cubic graph;
/// for odd `r` one edge is subdivided by a pendant triangle, then `r / 2`
/// edges off the triangles and diamonds are deleted.
fn gen_type_three(r: usize, rng: &mut impl Rng) -> Result<Block, GenError> {
    let deletions = r / 2;
    for _ in 0..RETRY_LIMIT {
        let base = random_base(deletions, rng)?;
        let mut edges: Vec<(usize, usize)> = base.edges().to_vec();
        let mut n = base.order();
        let mut attach = Vec::with_capacity(r);
        if r % 2 == 1 {
            let i = rng.gen_range(0..edges.len());
            let (p, q) = edges.swap_remove(i);
            let (u, w, x) = (n, n + 1, n + 2);
            n += 3;
            edges.extend([(p, u), (q, w), (u, w), (u, x), (w, x)]);
            attach.push(x);
        }
        let g = MultiGraph::new(n, &edges).unwrap();
        let mut links: Vec<usize> = (0..edges.len())
            .filter(|&id| {
                let (u, v) = g.edge(id);
                !g.neighbors(u).iter().any(|&t| g.has_edge(t, v))
            })
            .collect();
        if links.len() < deletions {
            continue;
        }
        links.shuffle(rng);
        let removed = &links[..deletions];
        for &id in removed {
            let (u, v) = g.edge(id);
            attach.extend([u, v]);
        }
        let block = g.without_edges(removed);
        if block_is_valid(&block, &attach) {
            attach.sort_unstable();
            return Ok(Block {
                graph: block,
                attach,
            });
        }
    }
    Err(GenError::RetryLimit(RETRY_LIMIT))
}

/// K4, a ring of diamonds or an expansion, with room for `deletions`
/// deleted edges.
fn random_base(deletions: usize, rng: &mut impl Rng) -> Result<MultiGraph, GenError> {
    match rng.gen_range(0..4) {
        0 if deletions == 0 => {
            Ok(MultiGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap())
        }
        1 => gen_ring_of_diamonds(rng.gen_range(2..=2 + 2 * deletions)),
        _ => {
            let hn = 2 * rng.gen_range(1..=1 + deletions);
            let h = gen_cubic_multigraph(hn, rng)?;
            let spec = ExpansionSpec::random(&h, 1, rng);
            expand_to_clawfree(&h, &spec)
        }
    }
}

fn block_is_valid(g: &MultiGraph, attach: &[usize]) -> bool {
    let n = g.order();
    if n < 5 || !is_two_edge_connected(g) || find_claw(g).is_some() {
        return false;
    }
    let twos: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 2).collect();
    let mut sorted = attach.to_vec();
    sorted.sort_unstable();
    if twos != sorted || (0..n).any(|v| g.degree(v) < 2 || g.degree(v) > 3) {
        return false;
    }
    let independent = twos
        .iter()
        .all(|&a| twos.iter().all(|&b| !g.has_edge(a, b)));
    let closed = twos.iter().all(|&x| {
        let nb = g.neighbors(x);
        nb.len() == 2 && g.has_edge(nb[0], nb[1])
    });
    independent && closed
}

/// Where a corpus graph came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    Bridgeless,
    Ring,
    Bridged,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusGraph {
    pub kind: CorpusKind,
    pub seed: u64,
    pub graph: MultiGraph,
}

/// `count` claw-free cubic graphs of order at most `max_order`, cycling
/// through expansions of random multigraphs, rings and bridged assemblies.
pub fn corpus(count: usize, max_order: usize, seed: u64) -> Vec<CorpusGraph> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count);
    let mut turn = 0usize;
    while out.len() < count {
        let s: u64 = rng.gen();
        let mut local = SplitMix64::new(s);
        let (kind, graph) = match turn % 4 {
            0 | 1 => (
                CorpusKind::Bridgeless,
                random_expansion(max_order, &mut local),
            ),
            2 if max_order >= 8 && turn % 16 == 2 => {
                let k = local.gen_range(2..=(max_order / 4).max(2));
                (CorpusKind::Ring, gen_ring_of_diamonds(k).ok())
            }
            _ => (CorpusKind::Bridged, random_bridged(&mut local)),
        };
        turn += 1;
        if let Some(graph) = graph.filter(|g| g.order() <= max_order) {
            out.push(CorpusGraph {
                kind,
                seed: s,
                graph,
            });
        }
    }
    out
}

fn random_expansion(max_order: usize, rng: &mut SplitMix64) -> Option<MultiGraph> {
    let max_h = (max_order / 3).max(2) & !1;
    let hn = 2 * rng.gen_range(1..=max_h / 2);
    let h = gen_cubic_multigraph(hn, rng).ok()?;
    let budget = max_order.saturating_sub(3 * hn) / 4;
    let mut lengths = vec![0; h.size()];
    for _ in 0..rng.gen_range(0..=budget) {
        let i = rng.gen_range(0..lengths.len());
        lengths[i] += 1;
    }
    let spec = ExpansionSpec {
        string_lengths: lengths,
        seed: rng.gen(),
    };
    expand_to_clawfree(&h, &spec).ok()
}

fn random_bridged(rng: &mut SplitMix64) -> Option<MultiGraph> {
    use BlockSpec::*;
    const SHAPES: [&[BlockSpec]; 8] = [
        &[TypeIII(1), TypeIII(1)],
        &[TypeIII(1), Triangle, TypeIII(1), TypeIII(1)],
        &[TypeIII(1), Diamond, TypeIII(1)],
        &[TypeIII(1), TypeIII(2), TypeIII(1)],
        &[TypeIII(1), Diamond, Diamond, TypeIII(1)],
        &[TypeIII(3), TypeIII(1), TypeIII(1), TypeIII(1)],
        &[TypeIII(1), TypeIII(2), Triangle, TypeIII(1), TypeIII(1)],
        &[TypeIII(4), TypeIII(1), TypeIII(1), TypeIII(1), TypeIII(1)],
    ];
    if rng.gen_bool(0.5) {
        let shape = SHAPES[rng.gen_range(0..SHAPES.len())];
        gen_bridged(shape, rng.gen()).ok()
    } else {
        let spec = random_tree_spec(rng.gen_range(2..=5), rng);
        gen_bridged(&spec, rng.gen()).ok()
    }
}

/// Blocks for a random tree on `k` nodes: leaves are Type III with one
/// attachment; a node of degree 2 or 3 is a diamond or triangle half of the
/// time and Type III otherwise.
pub fn random_tree_spec(k: usize, rng: &mut impl Rng) -> Vec<BlockSpec> {
    if k <= 1 {
        return vec![BlockSpec::TypeIII(0)];
    }
    let mut degree = vec![1; k];
    for _ in 0..k - 2 {
        degree[rng.gen_range(0..k)] += 1;
    }
    degree
        .into_iter()
        .map(|d| match d {
            2 if rng.gen_bool(0.5) => BlockSpec::Diamond,
            3 if rng.gen_bool(0.5) => BlockSpec::Triangle,
            d => BlockSpec::TypeIII(d),
        })
        .collect()
}
