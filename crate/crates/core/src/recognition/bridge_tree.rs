use std::collections::VecDeque;

use crate::graph::MultiGraph;

use super::{bridges_of_connected, check_claw_free_cubic, find_diamonds, RecognitionError};

/// Shape of a component of `G - B(G)` in a claw-free cubic graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    /// A triangle, all three vertices carrying a bridge.
    Triangle,
    /// A diamond, bridges at both exterior vertices.
    Diamond,
    /// 2-edge-connected, maximum degree 3, at least five vertices.
    TypeIII,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Sorted vertices of `G`.
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bridge {
    /// Endpoints in `G`; `ends.0` lies in component `components.0`.
    pub ends: (usize, usize),
    pub components: (usize, usize),
}

/// How a non-root component hangs from its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Attachment {
    pub parent: usize,
    /// The unique vertex of the component with a neighbor in the parent.
    pub vertex: usize,
    /// That neighbor.
    pub up_neighbor: usize,
}

/// The tree `T_G` of the components of `G - B(G)`, rooted at a leaf of a
/// longest path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeTree {
    pub components: Vec<Component>,
    pub bridges: Vec<Bridge>,
    /// Sorted neighbor components of each component.
    pub adjacency: Vec<Vec<usize>>,
    pub root: usize,
    pub depth: Vec<usize>,
    /// `None` exactly for the root.
    pub attachment: Vec<Option<Attachment>>,
    /// Components in breadth-first order from the root, children ascending.
    pub bfs_order: Vec<usize>,
    /// Component index of every vertex of `G`.
    pub component_of: Vec<usize>,
}

impl BridgeTree {
    pub fn children(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[c]
            .iter()
            .copied()
            .filter(move |&d| self.attachment[d].is_some_and(|a| a.parent == c))
    }

    /// `K_1`, `K_2`, path, star notation where it applies.
    pub fn shape(&self) -> String {
        let k = self.components.len();
        let degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        let max = degrees.iter().copied().max().unwrap_or(0);
        if k <= 2 {
            format!("K_{k}")
        } else if max == k - 1 {
            format!("K_{{1,{}}}", k - 1)
        } else if max == 2 {
            format!("P_{k}")
        } else {
            format!("tree on {k} nodes")
        }
    }
}

pub fn build_bridge_tree(g: &MultiGraph) -> Result<BridgeTree, RecognitionError> {
    check_claw_free_cubic(g)?;
    let n = g.order();
    let bridge_ids = bridges_of_connected(g);
    let bridged = g.without_edges(&bridge_ids);
    let comps = bridged.components();
    let mut component_of = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            component_of[v] = i;
        }
    }

    let mut components = Vec::with_capacity(comps.len());
    for vertices in comps {
        // A bridgeless graph is a single Type III component, K4 included.
        let kind = if bridge_ids.is_empty() {
            ComponentKind::TypeIII
        } else {
            classify(&g.induced_subgraph(&vertices), &vertices)?
        };
        components.push(Component { vertices, kind });
    }

    let mut adjacency = vec![Vec::new(); components.len()];
    let mut bridges = Vec::with_capacity(bridge_ids.len());
    for &id in &bridge_ids {
        let (u, v) = g.edge(id);
        let (cu, cv) = (component_of[u], component_of[v]);
        adjacency[cu].push(cv);
        adjacency[cv].push(cu);
        bridges.push(Bridge {
            ends: (u, v),
            components: (cu, cv),
        });
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    if bridges.len() + 1 != components.len() {
        return Err(RecognitionError::StructureViolation(format!(
            "{} bridges but {} components",
            bridges.len(),
            components.len()
        )));
    }

    let root = if components.len() == 1 {
        0
    } else {
        let (far, _) = farthest(&adjacency, 0);
        far
    };
    let (_, depth) = farthest(&adjacency, root);
    let mut attachment = vec![None; components.len()];
    let mut bfs_order = Vec::with_capacity(components.len());
    let mut queue = VecDeque::from([root]);
    let mut visited = vec![false; components.len()];
    visited[root] = true;
    while let Some(c) = queue.pop_front() {
        bfs_order.push(c);
        for &d in &adjacency[c] {
            if visited[d] {
                continue;
            }
            visited[d] = true;
            let b = bridges
                .iter()
                .find(|b| b.components == (c, d) || b.components == (d, c))
                .expect("adjacent components share a bridge");
            let (vertex, up_neighbor) = if b.components.1 == d {
                (b.ends.1, b.ends.0)
            } else {
                (b.ends.0, b.ends.1)
            };
            attachment[d] = Some(Attachment {
                parent: c,
                vertex,
                up_neighbor,
            });
            queue.push_back(d);
        }
    }

    Ok(BridgeTree {
        components,
        bridges,
        adjacency,
        root,
        depth,
        attachment,
        bfs_order,
        component_of,
    })
}

/// BFS in the component tree; the farthest node (smallest index on ties)
/// and all depths.
fn farthest(adjacency: &[Vec<usize>], from: usize) -> (usize, Vec<usize>) {
    let mut depth = vec![usize::MAX; adjacency.len()];
    depth[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(c) = queue.pop_front() {
        for &d in &adjacency[c] {
            if depth[d] == usize::MAX {
                depth[d] = depth[c] + 1;
                queue.push_back(d);
            }
        }
    }
    let max = *depth.iter().max().unwrap();
    let far = depth.iter().position(|&d| d == max).unwrap();
    (far, depth)
}

fn classify(sub: &MultiGraph, vertices: &[usize]) -> Result<ComponentKind, RecognitionError> {
    let k = sub.order();
    if k == 1 {
        return Err(RecognitionError::TypeIComponent(vertices[0]));
    }
    if (0..k).all(|v| sub.degree(v) == 2) {
        return if k == 3 {
            Ok(ComponentKind::Triangle)
        } else {
            Err(RecognitionError::NonK3Cycle(k))
        };
    }
    if k == 4 && sub.size() == 5 && find_diamonds(sub).diamonds().len() == 1 {
        return Ok(ComponentKind::Diamond);
    }
    if k < 5 || (0..k).any(|v| sub.degree(v) < 2) {
        return Err(RecognitionError::StructureViolation(format!(
            "component containing {} is neither a triangle, a diamond, nor large enough",
            vertices[0]
        )));
    }
    Ok(ComponentKind::TypeIII)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> MultiGraph {
        MultiGraph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Triangle apex `off` over a diamond; `off` is the only degree-2 vertex.
    fn leaf_block(off: usize) -> Vec<(usize, usize)> {
        vec![
            (off, off + 1),
            (off, off + 2),
            (off + 1, off + 2),
            (off + 1, off + 3),
            (off + 2, off + 4),
            (off + 3, off + 5),
            (off + 3, off + 6),
            (off + 4, off + 5),
            (off + 4, off + 6),
            (off + 5, off + 6),
        ]
    }

    #[test]
    fn bridgeless_is_single_node() {
        let t = build_bridge_tree(&k4()).unwrap();
        assert_eq!(t.components.len(), 1);
        assert_eq!(t.root, 0);
        assert_eq!(t.attachment, vec![None]);
        assert_eq!(t.shape(), "K_1");
    }

    #[test]
    fn two_blocks_give_k2() {
        let mut e = leaf_block(0);
        e.extend(leaf_block(7));
        e.push((0, 7));
        let g = MultiGraph::new(14, &e).unwrap();
        let t = build_bridge_tree(&g).unwrap();
        assert_eq!(t.components.len(), 2);
        assert_eq!(t.bridges.len(), 1);
        assert_eq!(t.shape(), "K_2");
        assert!(t
            .components
            .iter()
            .all(|c| c.kind == ComponentKind::TypeIII));
        let child = 1 - t.root;
        let a = t.attachment[child].unwrap();
        assert_eq!(a.parent, t.root);
        assert_eq!(
            (a.vertex.min(a.up_neighbor), a.vertex.max(a.up_neighbor)),
            (0, 7)
        );
    }
}
