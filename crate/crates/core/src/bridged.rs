//! (1,1,2,2)-colorings of claw-free cubic graphs with bridges.
//!
//! The components of `G - B(G)` are colored one at a time in breadth-first
//! order down the bridge tree. Each component is entered through a single
//! vertex `x_1` that receives a radius-2 class missing from the closed
//! neighborhood of its up-neighbor. Components of order at least five are
//! completed to 2-edge-connected claw-free cubic graphs and colored
//! canonically, with one chosen edge forced onto a 2-factor cycle or onto
//! the matching.

use crate::canonical::{
    color_two_edge_connected, color_with_special_edge, ColoringError, EdgePlacement,
};
use crate::coloring::{transpose, Color22, PackingColoring, SPackingSpec, Transposition};
use crate::graph::MultiGraph;
use crate::oracle::{verify, violations_near, VerifyError};
use crate::recognition::{build_bridge_tree, check_claw_free_cubic, find_diamonds, ComponentKind};

/// A component of order at least five completed to a cubic graph. All ids
/// are local to the component graph it was built from, except `graph`,
/// whose vertex `t` is component vertex `kept[t]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildeConstruction {
    /// Degree-2 vertices, the attachment vertex first, the rest ascending.
    pub degree_two: Vec<usize>,
    pub odd: bool,
    /// `[x_1, u, w]` when the number of degree-2 vertices is odd.
    pub removed: Vec<usize>,
    /// `(s, y)`: the outer neighbors of `u` and `w` (odd case).
    pub outer: Option<(usize, usize)>,
    /// Edges added to the component, including `(s, y)` in the odd case.
    pub added: Vec<(usize, usize)>,
    pub graph: MultiGraph,
    pub kept: Vec<usize>,
}

impl TildeConstruction {
    pub fn tilde_id(&self, v: usize) -> Option<usize> {
        self.kept.iter().position(|&k| k == v)
    }
}

fn precondition(msg: impl Into<String>) -> ColoringError {
    ColoringError::PreconditionViolated(msg.into())
}

fn internal(msg: impl Into<String>) -> ColoringError {
    ColoringError::InternalInvariant(msg.into())
}

/// Builds the cubic completion of a Type III component entered at `x1`.
///
/// Even case: the degree-2 vertices are paired `x_1 x_2`, `x_3 x_4`, ...
/// Odd case: `x_1` and its neighbors `u`, `w` are removed, `s y` is added and
/// the rest are paired `x_2 x_3`, `x_4 x_5`, ...
pub fn tilde_construction(
    comp: &MultiGraph,
    x1: usize,
) -> Result<TildeConstruction, ColoringError> {
    let n = comp.order();
    if let Some(v) = (0..n).find(|&v| !(2..=3).contains(&comp.degree(v))) {
        return Err(precondition(format!(
            "vertex {v} has degree {}",
            comp.degree(v)
        )));
    }
    if comp.degree(x1) != 2 {
        return Err(precondition(format!(
            "attachment {x1} does not have degree 2"
        )));
    }
    let mut degree_two = vec![x1];
    degree_two.extend((0..n).filter(|&v| v != x1 && comp.degree(v) == 2));
    for (i, &a) in degree_two.iter().enumerate() {
        for &b in &degree_two[i + 1..] {
            if comp.has_edge(a, b) {
                return Err(precondition(format!(
                    "degree-2 vertices {a} and {b} are adjacent"
                )));
            }
        }
    }
    let odd = degree_two.len() % 2 == 1;

    if !odd {
        let added: Vec<(usize, usize)> = degree_two.chunks(2).map(|p| (p[0], p[1])).collect();
        let graph = comp.with_edges(&added).expect("pairs of distinct vertices");
        return Ok(TildeConstruction {
            degree_two,
            odd,
            removed: Vec::new(),
            outer: None,
            added,
            graph,
            kept: (0..n).collect(),
        });
    }

    let [u, w] = comp.neighbors(x1)[..] else {
        return Err(precondition(format!(
            "attachment {x1} needs two distinct neighbors"
        )));
    };
    if !comp.has_edge(u, w) {
        return Err(precondition(format!(
            "neighbors {u}, {w} of {x1} are not adjacent (claw at {x1})"
        )));
    }
    let third = |a: usize, b: usize| -> Result<usize, ColoringError> {
        let rest: Vec<usize> = comp
            .neighbors(a)
            .iter()
            .copied()
            .filter(|&t| t != x1 && t != b)
            .collect();
        match rest[..] {
            [t] => Ok(t),
            _ => Err(precondition(format!(
                "vertex {a} should have one neighbor besides {x1}, {b}"
            ))),
        }
    };
    let s = third(u, w)?;
    let y = third(w, u)?;
    if s == y {
        return Err(precondition(format!(
            "{u} and {w} share the outer neighbor {s}"
        )));
    }
    if comp.has_edge(s, y) {
        return Err(precondition(format!(
            "outer neighbors {s} and {y} are adjacent"
        )));
    }
    let removed = vec![x1, u, w];
    let kept: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    let mut added = vec![(s, y)];
    added.extend(degree_two[1..].chunks(2).map(|p| (p[0], p[1])));
    let local = |v: usize| kept.iter().position(|&k| k == v).expect("kept vertex");
    let mapped: Vec<(usize, usize)> = added.iter().map(|&(a, b)| (local(a), local(b))).collect();
    let graph = comp
        .induced_subgraph(&kept)
        .with_edges(&mapped)
        .expect("pairs of distinct vertices");
    Ok(TildeConstruction {
        degree_two,
        odd,
        removed,
        outer: Some((s, y)),
        added,
        graph,
        kept,
    })
}

/// A radius-2 class absent from the closed neighborhood of `q` in the
/// already colored parent component; `2a` when both are free.
pub fn free_two_color(
    parent: &MultiGraph,
    colors: &[Color22],
    q: usize,
) -> Result<Color22, ColoringError> {
    let used: Vec<Color22> = std::iter::once(q)
        .chain(parent.neighbors(q).iter().copied())
        .map(|v| colors[v])
        .collect();
    [Color22::TwoA, Color22::TwoB]
        .into_iter()
        .find(|c| !used.contains(c))
        .ok_or(ColoringError::ClaimViolated { vertex: q })
}

/// Colors the root component, a Type III leaf whose only degree-2 vertex
/// is `v`, with `v` in class `2a`.
pub fn color_root_component(g0: &MultiGraph, v: usize) -> Result<PackingColoring, ColoringError> {
    let twos: Vec<usize> = (0..g0.order()).filter(|&x| g0.degree(x) == 2).collect();
    if twos != [v] {
        return Err(precondition(format!(
            "root needs exactly one degree-2 vertex, found {twos:?}"
        )));
    }
    let (colors, _) = color_type_three(g0, v, Color22::TwoA, true)?;
    local_verify(g0, &colors)
}

/// Colors a non-root component entered at `x1` so that `x1` gets `forced`.
pub fn extend_component(
    gi: &MultiGraph,
    x1: usize,
    forced: Color22,
) -> Result<PackingColoring, ColoringError> {
    let (colors, _) = color_component(gi, x1, forced)?;
    local_verify(gi, &colors)
}

fn local_verify(g: &MultiGraph, colors: &[Color22]) -> Result<PackingColoring, ColoringError> {
    let c = PackingColoring::from_colors(colors);
    match verify(g, &c) {
        Ok(()) => Ok(c),
        Err(VerifyError::Violations(v)) => Err(ColoringError::VerificationFailed(v[0])),
        Err(VerifyError::Oracle(e)) => Err(internal(e.to_string())),
    }
}

fn color_component(
    gi: &MultiGraph,
    x1: usize,
    forced: Color22,
) -> Result<(Vec<Color22>, Option<TildeConstruction>), ColoringError> {
    if !forced.is_two() {
        return Err(precondition(format!(
            "forced class {forced} is not a radius-2 class"
        )));
    }
    let n = gi.order();
    if n == 3 && gi.size() == 3 && gi.is_simple() {
        let mut colors = vec![forced; 3];
        let others: Vec<usize> = (0..3).filter(|&v| v != x1).collect();
        colors[others[0]] = Color22::OneA;
        colors[others[1]] = Color22::OneB;
        return Ok((colors, None));
    }
    if n == 4 {
        let ds = find_diamonds(gi);
        let [d] = ds.diamonds() else {
            return Err(precondition("four-vertex component is not a diamond"));
        };
        if !d.exterior.contains(&x1) {
            return Err(precondition(format!(
                "{x1} is not an exterior vertex of the diamond"
            )));
        }
        let mut colors = vec![forced; 4];
        colors[d.interior[0]] = Color22::OneA;
        colors[d.interior[1]] = Color22::OneB;
        let x2 = if d.exterior[0] == x1 {
            d.exterior[1]
        } else {
            d.exterior[0]
        };
        colors[x2] = forced.partner();
        return Ok((colors, None));
    }
    if n < 5 {
        return Err(precondition(format!(
            "component of order {n} is not a triangle or diamond"
        )));
    }
    let (colors, tilde) = color_type_three(gi, x1, forced, false)?;
    Ok((colors, Some(tilde)))
}

fn color_type_three(
    gi: &MultiGraph,
    x1: usize,
    forced: Color22,
    root: bool,
) -> Result<(Vec<Color22>, TildeConstruction), ColoringError> {
    let t = tilde_construction(gi, x1)?;
    let mut colors = vec![Color22::OneA; gi.order()];

    if !t.odd {
        let special = (
            t.tilde_id(t.degree_two[0]).unwrap(),
            t.tilde_id(t.degree_two[1]).unwrap(),
        );
        let tc = color_with_special_edge(&t.graph, special, EdgePlacement::Matching)?
            .colors22()
            .unwrap();
        for (tid, &c) in tc.iter().enumerate() {
            colors[t.kept[tid]] = c;
        }
        if colors[x1] != forced {
            transpose(&mut colors, Transposition::Twos);
        }
        return Ok((colors, t));
    }

    let (u, w) = (t.removed[1], t.removed[2]);
    let (s, y) = t.outer.unwrap();
    if t.graph.order() == 4 {
        // The completion is K4 on {s, y, a, z}.
        let others: Vec<usize> = t
            .kept
            .iter()
            .copied()
            .filter(|&k| k != s && k != y)
            .collect();
        let (a, z) = (others[0], others[1]);
        let assign: [(usize, Color22); 7] = if root {
            [
                (s, Color22::OneB),
                (w, Color22::OneB),
                (u, Color22::OneA),
                (y, Color22::OneA),
                (x1, Color22::TwoA),
                (a, Color22::TwoA),
                (z, Color22::TwoB),
            ]
        } else {
            [
                (x1, Color22::TwoA),
                (a, Color22::TwoA),
                (z, Color22::TwoB),
                (u, Color22::OneB),
                (y, Color22::OneB),
                (w, Color22::OneA),
                (s, Color22::OneA),
            ]
        };
        for (v, c) in assign {
            colors[v] = c;
        }
    } else {
        let special = (t.tilde_id(s).unwrap(), t.tilde_id(y).unwrap());
        let tc = color_with_special_edge(&t.graph, special, EdgePlacement::Cycle)?
            .colors22()
            .unwrap();
        for (tid, &c) in tc.iter().enumerate() {
            colors[t.kept[tid]] = c;
        }
        if colors[s] != Color22::OneA {
            transpose(&mut colors, Transposition::Ones);
        }
        colors[u] = Color22::OneB;
        colors[w] = Color22::OneA;
        colors[x1] = Color22::TwoA;
    }
    if forced != Color22::TwoA {
        transpose(&mut colors, Transposition::Twos);
    }
    Ok((colors, t))
}

/// Colors a connected claw-free cubic graph; the result is verified.
pub fn color_claw_free_cubic(g: &MultiGraph) -> Result<PackingColoring, ColoringError> {
    check_claw_free_cubic(g)?;
    let tree = build_bridge_tree(g)?;
    if tree.components.len() == 1 {
        return color_two_edge_connected(g);
    }

    let spec = SPackingSpec::s1122();
    let mut classes: Vec<Option<usize>> = vec![None; g.order()];
    let mut tildes: Vec<Option<TildeConstruction>> = vec![None; tree.components.len()];
    let mut local_index = vec![usize::MAX; g.order()];

    for &c in &tree.bfs_order {
        let comp = &tree.components[c];
        for (i, &v) in comp.vertices.iter().enumerate() {
            local_index[v] = i;
        }
        let sub = g.induced_subgraph(&comp.vertices);

        let colors = match tree.attachment[c] {
            None => {
                if comp.kind != ComponentKind::TypeIII {
                    return Err(internal(format!("root component {c} is not of Type III")));
                }
                let v = (0..sub.order())
                    .find(|&x| sub.degree(x) == 2)
                    .ok_or_else(|| internal("root component has no degree-2 vertex"))?;
                let colored = color_root_component(&sub, v)?;
                tildes[c] = Some(tilde_construction(&sub, v)?);
                colored.colors22().unwrap()
            }
            Some(att) => {
                let parent = &tree.components[att.parent];
                let parent_sub = g.induced_subgraph(&parent.vertices);
                let q = parent
                    .vertices
                    .binary_search(&att.up_neighbor)
                    .expect("up-neighbor lies in the parent");
                if let Some(pt) = &tildes[att.parent] {
                    check_up_neighbor_off_diamonds(pt, q, att.up_neighbor)?;
                }
                let parent_colors: Vec<Color22> = parent
                    .vertices
                    .iter()
                    .map(|&v| Color22::from_index(classes[v].expect("parent colored first")))
                    .collect();
                let forced = free_two_color(&parent_sub, &parent_colors, q)?;
                let (colors, tilde) = color_component(&sub, local_index[att.vertex], forced)?;
                local_verify(&sub, &colors)?;
                tildes[c] = tilde;
                colors
            }
        };

        for (i, &v) in comp.vertices.iter().enumerate() {
            classes[v] = Some(colors[i].index());
        }
        let near = violations_near(g, &spec, &classes, &comp.vertices);
        if let Some(v) = near.first() {
            return Err(ColoringError::VerificationFailed(*v));
        }
    }

    let coloring = PackingColoring::new(spec, classes.into_iter().map(Option::unwrap).collect());
    match verify(g, &coloring) {
        Ok(()) => Ok(coloring),
        Err(VerifyError::Violations(v)) => Err(ColoringError::VerificationFailed(v[0])),
        Err(VerifyError::Oracle(e)) => Err(internal(e.to_string())),
    }
}

/// The up-neighbor of a child's attachment vertex never lies on a diamond
/// of the parent's completion.
fn check_up_neighbor_off_diamonds(
    parent: &TildeConstruction,
    q_local: usize,
    q_global: usize,
) -> Result<(), ColoringError> {
    let Some(tid) = parent.tilde_id(q_local) else {
        return Ok(());
    };
    if find_diamonds(&parent.graph)
        .diamonds()
        .iter()
        .any(|d| d.contains(tid))
    {
        return Err(internal(format!(
            "up-neighbor {q_global} lies on a diamond of the parent's cubic completion"
        )));
    }
    Ok(())
}
