//! Structural recognition for claw-free cubic graphs: claws, bridges, the
//! bridge tree, diamonds and the triangle/diamond-string decomposition.

mod bridge_tree;
mod diamonds;
mod oum;

pub use bridge_tree::{
    build_bridge_tree, Attachment, Bridge, BridgeTree, Component, ComponentKind,
};
pub use diamonds::{
    diamond_index, find_diamonds, is_ring_of_diamonds, ring_order, Diamond, DiamondScan,
    OrientedDiamond,
};
pub use oum::{oum_decompose, BuiltDecomposition, HEdge, OumDecomposition};

use thiserror::Error;

use crate::graph::{EdgeId, MultiGraph};

/// An induced `K_{1,3}`: a center and three pairwise nonadjacent neighbors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl Claw {
    pub fn vertices(&self) -> [usize; 4] {
        [self.center, self.leaves[0], self.leaves[1], self.leaves[2]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("not claw-free: center {} with leaves {:?}", .0.center, .0.leaves)]
    NotClawFree(Claw),
    #[error("parallel edges between {0} and {1}; a simple graph is required")]
    NotSimple(usize, usize),
    #[error("edge {0}-{1} is a bridge; graph is not 2-edge-connected")]
    NotTwoEdgeConnected(usize, usize),
    #[error("component of G - B(G) is the single vertex {0}")]
    TypeIComponent(usize),
    #[error("component of G - B(G) is a cycle of length {0}, not a triangle")]
    NonK3Cycle(usize),
    #[error("structure violation: {0}")]
    StructureViolation(String),
}

/// Finds an induced claw, scanning centers in increasing order.
pub fn find_claw(g: &MultiGraph) -> Option<Claw> {
    for center in 0..g.order() {
        let nb = g.neighbors(center);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    continue;
                }
                for k in j + 1..nb.len() {
                    if !g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]) {
                        return Some(Claw {
                            center,
                            leaves: [nb[i], nb[j], nb[k]],
                        });
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &MultiGraph) -> bool {
    find_claw(g).is_none()
}

/// Cut edges by one low-link DFS. A pair joined by two or more copies is
/// never a bridge: the parallel copy is a back edge.
pub fn find_bridges(g: &MultiGraph) -> Result<Vec<EdgeId>, RecognitionError> {
    if !g.is_connected() {
        return Err(RecognitionError::Disconnected);
    }
    Ok(bridges_of_connected(g))
}

/// Bridges of a possibly disconnected graph.
pub(crate) fn bridges_of_connected(g: &MultiGraph) -> Vec<EdgeId> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut clock = 0;
    let mut bridges = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        // (vertex, edge used to enter it, next incidence position)
        let mut stack: Vec<(usize, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        while let Some(&mut (v, parent_edge, ref mut pos)) = stack.last_mut() {
            if let Some(&e) = g.incident(v).get(*pos) {
                *pos += 1;
                if Some(e) == parent_edge {
                    continue;
                }
                let w = g.other_end(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some(&(p, _, _))) = (parent_edge, stack.last()) {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        bridges.push(e);
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

pub fn is_two_edge_connected(g: &MultiGraph) -> bool {
    g.is_connected() && bridges_of_connected(g).is_empty()
}

/// Common preconditions of the coloring pipeline: simple, connected, cubic
/// and claw-free, checked in that order.
pub fn check_claw_free_cubic(g: &MultiGraph) -> Result<(), RecognitionError> {
    if let Some(w) = g.edges().windows(2).find(|w| w[0] == w[1]) {
        return Err(RecognitionError::NotSimple(w[0].0, w[0].1));
    }
    if !g.is_connected() {
        return Err(RecognitionError::Disconnected);
    }
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) != 3) {
        return Err(RecognitionError::NotCubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if let Some(claw) = find_claw(g) {
        return Err(RecognitionError::NotClawFree(claw));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> MultiGraph {
        MultiGraph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn k4() -> MultiGraph {
        MultiGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn claw_witness() {
        assert!(is_claw_free(&k4()));
        let claw = find_claw(&star()).unwrap();
        assert_eq!(claw.vertices(), [0, 1, 2, 3]);
    }

    #[test]
    fn bridges_of_two_triangles() {
        let g =
            MultiGraph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        let b = find_bridges(&g).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(g.edge(b[0]), (2, 3));
        assert!(find_bridges(&k4()).unwrap().is_empty());
    }

    #[test]
    fn parallel_copies_are_not_bridges() {
        let g = MultiGraph::new(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        let b = find_bridges(&g).unwrap();
        assert_eq!(
            b.iter().map(|&e| g.edge(e)).collect::<Vec<_>>(),
            vec![(1, 2)]
        );
    }

    #[test]
    fn disconnected_rejected() {
        let g = MultiGraph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(find_bridges(&g), Err(RecognitionError::Disconnected));
    }

    #[test]
    fn precondition_order() {
        let multi = MultiGraph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(
            check_claw_free_cubic(&multi),
            Err(RecognitionError::NotSimple(0, 1))
        );
        assert!(matches!(
            check_claw_free_cubic(&star()),
            Err(RecognitionError::NotCubic { .. })
        ));
        assert_eq!(check_claw_free_cubic(&k4()), Ok(()));
    }
}
