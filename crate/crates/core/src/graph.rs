//! Loop-free undirected multigraphs on dense vertex ids.
//!
//! Every parallel copy of an edge gets its own [`EdgeId`]: the copies are
//! laid out in canonical order (sorted by `(min, max)` endpoint pair, copies
//! of one pair consecutive), which is what the factorization and
//! decomposition code index into.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Index of one edge copy in [`MultiGraph::edges`].
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {0} out of range for a graph on {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("malformed input at line {line}: {reason}")]
    MalformedInput { line: usize, reason: String },
    #[error("graph6 cannot encode parallel edges")]
    Graph6Multiedge,
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<EdgeId>>,
    neighbors: Vec<Vec<usize>>,
}

impl MultiGraph {
    /// Builds a multigraph from an edge list; repeated pairs add multiplicity.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        let mut incidence = vec![Vec::new(); n];
        let mut neighbors = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            incidence[u].push(id);
            incidence[v].push(id);
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
            list.dedup();
        }
        Ok(MultiGraph {
            n,
            edges,
            incidence,
            neighbors,
        })
    }

    pub fn empty(n: usize) -> Self {
        MultiGraph::new(n, &[]).expect("no edges")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges counted with multiplicity.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// All edge copies in canonical order; the position is the [`EdgeId`].
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (usize, usize) {
        self.edges[id]
    }

    /// Distinct vertex pairs with their multiplicity, in canonical order.
    pub fn simple_edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out: Vec<(usize, usize, usize)> = Vec::new();
        for &(u, v) in &self.edges {
            match out.last_mut() {
                Some(last) if last.0 == u && last.1 == v => last.2 += 1,
                _ => out.push((u, v, 1)),
            }
        }
        out
    }

    /// Edge copies incident to `v`, in increasing id order.
    pub fn incident(&self, v: usize) -> &[EdgeId] {
        &self.incidence[v]
    }

    /// Distinct neighbors of `v`, sorted.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let key = (u.min(v), u.max(v));
        let lo = self.edges.partition_point(|e| *e < key);
        let hi = self.edges.partition_point(|e| *e <= key);
        hi - lo
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Ids of all copies of the pair `{u, v}`.
    pub fn edge_ids_between(&self, u: usize, v: usize) -> std::ops::Range<EdgeId> {
        let key = (u.min(v), u.max(v));
        let lo = self.edges.partition_point(|e| *e < key);
        let hi = self.edges.partition_point(|e| *e <= key);
        lo..hi
    }

    /// The endpoint of edge `id` that is not `v`.
    pub fn other_end(&self, id: EdgeId, v: usize) -> usize {
        let (a, b) = self.edges[id];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_simple(&self) -> bool {
        self.edges.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(|d| d.is_some())
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let mut d = vec![DistanceMatrix::INFINITE; self.n * self.n];
        for s in 0..self.n {
            for (t, dist) in self.bfs(s).into_iter().enumerate() {
                if let Some(dist) = dist {
                    d[s * self.n + t] = dist;
                }
            }
        }
        DistanceMatrix { n: self.n, d }
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.neighbors[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`; local id `i` corresponds to `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> MultiGraph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
            .map(|&(u, v)| (local[u], local[v]))
            .collect();
        MultiGraph::new(vertices.len(), &edges).expect("induced edges are valid")
    }

    /// Copy of the graph with `extra` edges appended.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<MultiGraph, GraphError> {
        let mut all = self.edges.clone();
        all.extend_from_slice(extra);
        MultiGraph::new(self.n, &all)
    }

    /// Copy of the graph with the given edge copies removed.
    pub fn without_edges(&self, removed: &[EdgeId]) -> MultiGraph {
        let mut drop = vec![false; self.edges.len()];
        for &id in removed {
            drop[id] = true;
        }
        let kept: Vec<(usize, usize)> = self
            .edges
            .iter()
            .zip(&drop)
            .filter(|(_, &d)| !d)
            .map(|(e, _)| *e)
            .collect();
        MultiGraph::new(self.n, &kept).expect("subset of valid edges")
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> MultiGraph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        MultiGraph::new(self.n, &edges).expect("permutation keeps edges valid")
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        seq
    }
}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Hop distances between all pairs of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    const INFINITE: u32 = u32::MAX;

    /// `None` when `u` and `v` lie in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.d[u * self.n + v] {
            Self::INFINITE => None,
            d => Some(d),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.d
            .iter()
            .copied()
            .filter(|&d| d != Self::INFINITE)
            .max()
            .unwrap_or(0)
    }
}

/// Decides isomorphism of two multigraphs (edge multiplicities must match).
///
/// Plain backtracking with degree and multiplicity pruning; fine for the
/// graphs of a few dozen vertices this crate works with.
pub fn is_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    let n = a.order();
    // Visit `a` in BFS order so each new vertex is adjacent to mapped ones.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        order.push(s);
        let mut i = order.len() - 1;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in a.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    iso_extend(a, b, &order, 0, &mut map, &mut used)
}

fn iso_extend(
    a: &MultiGraph,
    b: &MultiGraph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for cand in 0..b.order() {
        if used[cand] || a.degree(u) != b.degree(cand) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&p| a.multiplicity(u, p) == b.multiplicity(cand, map[p]));
        if !consistent {
            continue;
        }
        map[u] = cand;
        used[cand] = true;
        if iso_extend(a, b, order, depth + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[u] = usize::MAX;
    }
    false
}

/// Text formats understood by [`parse_graph`] and [`emit_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    /// First line `n`, then one `u v` line per edge copy.
    EdgeList,
    /// nauty graph6, simple graphs only.
    Graph6,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<MultiGraph, GraphError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| malformed(1, "empty input"))?;
            parse_graph6(line)
        }
    }
}

pub fn emit_graph(g: &MultiGraph, format: GraphFormat) -> Result<String, GraphError> {
    match format {
        GraphFormat::EdgeList => Ok(emit_edge_list(g)),
        GraphFormat::Graph6 => emit_graph6(g),
    }
}

fn malformed(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::MalformedInput {
        line,
        reason: reason.into(),
    }
}

/// Blank lines and `#` comments are skipped.
fn parse_edge_list(text: &str) -> Result<MultiGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first_no, first) = lines.next().ok_or_else(|| malformed(1, "empty input"))?;
    let n: usize = first
        .parse()
        .map_err(|_| malformed(first_no, format!("expected vertex count, got `{first}`")))?;
    let mut edges = Vec::new();
    for (no, line) in lines {
        let mut parts = line.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(malformed(no, format!("expected `u v`, got `{line}`")));
        };
        let u: usize = a
            .parse()
            .map_err(|_| malformed(no, format!("bad vertex `{a}`")))?;
        let v: usize = b
            .parse()
            .map_err(|_| malformed(no, format!("bad vertex `{b}`")))?;
        edges.push((u, v));
    }
    MultiGraph::new(n, &edges)
}

fn emit_edge_list(g: &MultiGraph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn parse_graph6(line: &str) -> Result<MultiGraph, GraphError> {
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes: Vec<u8> = line.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(malformed(1, "graph6 byte outside 63..=126"));
    }
    let (n, rest) = match bytes.as_slice() {
        [] => return Err(malformed(1, "empty graph6 string")),
        [126, 126, r @ ..] => {
            if r.len() < 6 {
                return Err(malformed(1, "truncated graph6 size"));
            }
            let n = r[..6]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &r[6..])
        }
        [126, r @ ..] => {
            if r.len() < 3 {
                return Err(malformed(1, "truncated graph6 size"));
            }
            let n = r[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &r[3..])
        }
        [b, r @ ..] => ((b - 63) as usize, r),
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    if rest.len() != bits_needed.div_ceil(6) {
        return Err(malformed(
            1,
            format!(
                "graph6 body has {} bytes, expected {}",
                rest.len(),
                bits_needed.div_ceil(6)
            ),
        ));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    MultiGraph::new(n, &edges)
}

fn emit_graph6(g: &MultiGraph) -> Result<String, GraphError> {
    if !g.is_simple() {
        return Err(GraphError::Graph6Multiedge);
    }
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}
