use std::collections::HashMap;

use crate::graph::{EdgeId, MultiGraph};

use super::diamonds::{diamond_index, find_diamonds, outer_neighbor, ring_order, DiamondScan};
use super::{
    bridges_of_connected, check_claw_free_cubic, Diamond, OrientedDiamond, RecognitionError,
};

/// Structure of a 2-edge-connected claw-free cubic graph: `K4`, a ring of
/// diamonds, or triangles and diamond strings built over a cubic multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OumDecomposition {
    K4,
    /// Diamonds in cyclic order; each exit is adjacent to the next entry.
    RingOfDiamonds(Vec<OrientedDiamond>),
    Built(BuiltDecomposition),
}

/// One edge of the underlying multigraph and its realization in `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HEdge {
    /// H-vertices with `ends.0 < ends.1`.
    pub ends: (usize, usize),
    /// The triangle vertices of `G` where the realization attaches:
    /// `ports.0` lies in triangle `ends.0`, `ports.1` in triangle `ends.1`.
    pub ports: (usize, usize),
    /// Diamonds met walking from `ports.0` to `ports.1`; empty when the
    /// ports are adjacent.
    pub string: Vec<OrientedDiamond>,
}

impl HEdge {
    /// The port of this edge at H-vertex `h`.
    pub fn port_at(&self, h: usize) -> usize {
        if self.ends.0 == h {
            self.ports.0
        } else {
            debug_assert_eq!(self.ends.1, h);
            self.ports.1
        }
    }

    /// String diamonds oriented away from `port`.
    pub fn string_from(&self, port: usize) -> Vec<OrientedDiamond> {
        if port == self.ports.0 {
            self.string.clone()
        } else {
            self.string
                .iter()
                .rev()
                .map(OrientedDiamond::reversed)
                .collect()
        }
    }

    /// G-edges along the realization, from `ports.0` to `ports.1`.
    pub fn links(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.string.len() + 1);
        let mut prev = self.ports.0;
        for d in &self.string {
            out.push((prev, d.entry));
            prev = d.exit;
        }
        out.push((prev, self.ports.1));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltDecomposition {
    /// The underlying 2-edge-connected cubic multigraph.
    pub h: MultiGraph,
    /// `triangles[h]`: the sorted G-vertices replacing H-vertex `h`.
    pub triangles: Vec<[usize; 3]>,
    /// Realization of every edge copy of `h`, indexed by its [`EdgeId`].
    pub edges: Vec<HEdge>,
    h_edge_of: HashMap<(usize, usize), EdgeId>,
}

impl BuiltDecomposition {
    /// The H-edge realized through G-edge `{u, v}`; `None` for triangle and
    /// diamond-internal edges.
    pub fn h_edge_of(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.h_edge_of.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn string_lengths(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.string.len()).collect()
    }
}

/// Decomposes a 2-edge-connected claw-free cubic graph.
pub fn oum_decompose(g: &MultiGraph) -> Result<OumDecomposition, RecognitionError> {
    check_claw_free_cubic(g)?;
    if let Some(&b) = bridges_of_connected(g).first() {
        let (u, v) = g.edge(b);
        return Err(RecognitionError::NotTwoEdgeConnected(u, v));
    }
    let diamonds = match find_diamonds(g) {
        DiamondScan::K4 => return Ok(OumDecomposition::K4),
        DiamondScan::Diamonds(d) => d,
    };
    let n = g.order();
    let diamond_of = diamond_index(n, &diamonds);
    if diamond_of.iter().all(Option::is_some) {
        return ring_order(g)
            .map(OumDecomposition::RingOfDiamonds)
            .ok_or_else(|| violation("every vertex is on a diamond but no ring order exists"));
    }

    let triangles = find_triangles(g, &diamond_of)?;
    let mut triangle_of = vec![usize::MAX; n];
    for (t, tri) in triangles.iter().enumerate() {
        for &v in tri {
            triangle_of[v] = t;
        }
    }
    for v in 0..n {
        if diamond_of[v].is_none() && triangle_of[v] == usize::MAX {
            return Err(violation(format!(
                "vertex {v} is on neither a diamond nor a triangle"
            )));
        }
    }

    let mut edges = Vec::with_capacity(triangles.len() * 3 / 2);
    let mut port_done = vec![false; n];
    for tri in &triangles {
        for &p in tri {
            if port_done[p] {
                continue;
            }
            let out = outside_neighbor(g, p, tri)?;
            let (string, end) = walk_string(g, p, out, &diamonds, &diamond_of)?;
            if triangle_of[end] == usize::MAX {
                return Err(violation(format!(
                    "string from {p} ends at non-triangle vertex {end}"
                )));
            }
            port_done[p] = true;
            port_done[end] = true;
            let (hp, he) = (triangle_of[p], triangle_of[end]);
            if hp == he {
                return Err(violation(format!(
                    "loop at triangle {hp} through {p} and {end}"
                )));
            }
            let edge = HEdge {
                ends: (hp, he),
                ports: (p, end),
                string,
            };
            edges.push(if hp < he { edge } else { flip(edge) });
        }
    }
    // Edge copies of `h` are numbered in sorted endpoint order.
    edges.sort_by_key(|e| (e.ends, e.ports));

    let used_in_strings: usize = edges.iter().map(|e| e.string.len()).sum();
    if used_in_strings != diamonds.len() {
        return Err(violation(format!(
            "{} diamonds found, {} on strings between triangles",
            diamonds.len(),
            used_in_strings
        )));
    }

    let pairs: Vec<(usize, usize)> = edges.iter().map(|e| e.ends).collect();
    let h = MultiGraph::new(triangles.len(), &pairs)
        .map_err(|e| violation(format!("underlying multigraph: {e}")))?;
    if !h.is_cubic() {
        return Err(violation("underlying multigraph is not cubic"));
    }
    if !h.is_connected() || !bridges_of_connected(&h).is_empty() {
        return Err(violation("underlying multigraph is not 2-edge-connected"));
    }

    let mut h_edge_of = HashMap::new();
    for (id, e) in edges.iter().enumerate() {
        for (a, b) in e.links() {
            h_edge_of.insert((a.min(b), a.max(b)), id);
        }
    }
    Ok(OumDecomposition::Built(BuiltDecomposition {
        h,
        triangles,
        edges,
        h_edge_of,
    }))
}

fn violation(msg: impl Into<String>) -> RecognitionError {
    RecognitionError::StructureViolation(msg.into())
}

fn flip(e: HEdge) -> HEdge {
    HEdge {
        ends: (e.ends.1, e.ends.0),
        ports: (e.ports.1, e.ports.0),
        string: e
            .string
            .iter()
            .rev()
            .map(OrientedDiamond::reversed)
            .collect(),
    }
}

/// Each vertex off the diamonds lies in exactly one triangle, whose other
/// two vertices are also off the diamonds.
fn find_triangles(
    g: &MultiGraph,
    diamond_of: &[Option<usize>],
) -> Result<Vec<[usize; 3]>, RecognitionError> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for v in 0..g.order() {
        if diamond_of[v].is_some() || seen[v] {
            continue;
        }
        let nb = g.neighbors(v);
        let mut found = Vec::new();
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    found.push((nb[i], nb[j]));
                }
            }
        }
        let [(a, b)] = found[..] else {
            return Err(violation(format!(
                "vertex {v} lies on {} triangles",
                found.len()
            )));
        };
        if diamond_of[a].is_some() || diamond_of[b].is_some() || seen[a] || seen[b] {
            return Err(violation(format!(
                "triangle {v},{a},{b} overlaps another structure"
            )));
        }
        let mut tri = [v, a, b];
        tri.sort_unstable();
        for &t in &tri {
            seen[t] = true;
        }
        out.push(tri);
    }
    Ok(out)
}

fn outside_neighbor(g: &MultiGraph, p: usize, tri: &[usize; 3]) -> Result<usize, RecognitionError> {
    let outs: Vec<usize> = g
        .neighbors(p)
        .iter()
        .copied()
        .filter(|w| !tri.contains(w))
        .collect();
    match outs[..] {
        [w] => Ok(w),
        _ => Err(violation(format!(
            "triangle vertex {p} has {} outside neighbors",
            outs.len()
        ))),
    }
}

/// Follows the diamond string (possibly empty) that starts with the edge
/// `from`-`first`; returns its diamonds and the vertex reached after it.
fn walk_string(
    g: &MultiGraph,
    from: usize,
    first: usize,
    diamonds: &[Diamond],
    diamond_of: &[Option<usize>],
) -> Result<(Vec<OrientedDiamond>, usize), RecognitionError> {
    let mut string = Vec::new();
    let mut cur = first;
    while let Some(i) = diamond_of[cur] {
        let d = &diamonds[i];
        if !d.exterior.contains(&cur) {
            return Err(violation(format!(
                "string from {from} enters diamond {i} at interior vertex {cur}"
            )));
        }
        let od = d.oriented_from(cur);
        string.push(od);
        if string.len() > diamonds.len() {
            return Err(violation("diamond string does not terminate"));
        }
        cur = outer_neighbor(g, &od)
            .ok_or_else(|| violation(format!("diamond exit {} has no outer neighbor", od.exit)))?;
    }
    Ok((string, cur))
}
