//! (1,1,2,2)-colorings of 2-edge-connected claw-free cubic graphs.
//!
//! `K4` and rings of diamonds get direct colorings. Every other such graph
//! is built from a cubic multigraph `H`; a 2-factor of `H` fixes which
//! triangle vertices sit on cycles (colored `1a`/`1b`) and which are matched
//! (colored `2a`/`2b`), and diamond strings follow the cycle or matching
//! edge they replace.

use thiserror::Error;

use crate::coloring::{Color22, PackingColoring};
use crate::factor::{two_factor, two_factor_avoiding, two_factor_through, FactorError, TwoFactor};
use crate::graph::MultiGraph;
use crate::oracle::{verify, VerifyError, Violation};
use crate::recognition::{
    find_diamonds, oum_decompose, ring_order, BuiltDecomposition, OrientedDiamond,
    OumDecomposition, RecognitionError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error("graph is not K4")]
    NotK4,
    #[error("graph is not a ring of diamonds")]
    NotRingOfDiamonds,
    #[error("edge {0}-{1} lies inside a triangle or diamond and has no H-edge")]
    EdgeNotLiftable(usize, usize),
    #[error("constructed coloring fails verification: class {} at {} and {} (distance {})",
        .0.class, .0.u, .0.v, .0.distance)]
    VerificationFailed(Violation),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no free 2-class at vertex {vertex}: closed neighborhood uses both")]
    ClaimViolated { vertex: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

/// Roles of the triangle vertices along one cycle of the 2-factor of `H`:
/// for the `j`-th H-vertex, `entries[j]` is `x_j`, `matched[j]` is `h_j`
/// and `exits[j]` is `y_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleGadget {
    pub h_vertices: Vec<usize>,
    pub entries: Vec<usize>,
    pub matched: Vec<usize>,
    pub exits: Vec<usize>,
}

/// Where a designated edge of `G` must land in the 2-factor of `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgePlacement {
    /// On a cycle: the endpoints receive `1a` and `1b`.
    Cycle,
    /// On a matching edge: the endpoints receive `2a` and `2b`.
    Matching,
}

fn is_k4(g: &MultiGraph) -> bool {
    g.order() == 4 && g.size() == 6 && g.is_simple()
}

pub fn color_k4(g: &MultiGraph) -> Result<PackingColoring, ColoringError> {
    if !is_k4(g) {
        return Err(ColoringError::NotK4);
    }
    Ok(PackingColoring::from_colors(&Color22::ALL))
}

pub fn color_ring_of_diamonds(g: &MultiGraph) -> Result<PackingColoring, ColoringError> {
    let ring = ring_order(g).ok_or(ColoringError::NotRingOfDiamonds)?;
    finish(g, ring_colors(g.order(), &ring))
}

/// Interiors `2a`, `2b`; every link between diamonds joins an exit (`1b`)
/// to an entry (`1a`).
fn ring_colors(n: usize, ring: &[OrientedDiamond]) -> Vec<Option<Color22>> {
    let mut colors = vec![None; n];
    for d in ring {
        colors[d.entry] = Some(Color22::OneA);
        colors[d.interior[0]] = Some(Color22::TwoA);
        colors[d.interior[1]] = Some(Color22::TwoB);
        colors[d.exit] = Some(Color22::OneB);
    }
    colors
}

/// Colors any 2-edge-connected claw-free cubic graph.
pub fn color_two_edge_connected(g: &MultiGraph) -> Result<PackingColoring, ColoringError> {
    match oum_decompose(g)? {
        OumDecomposition::K4 => color_k4(g),
        OumDecomposition::RingOfDiamonds(ring) => finish(g, ring_colors(g.order(), &ring)),
        OumDecomposition::Built(dec) => {
            let factor = two_factor(&dec.h)?;
            canonical_color(g, &dec, &factor)
        }
    }
}

pub fn cycle_gadgets(
    dec: &BuiltDecomposition,
    factor: &TwoFactor,
) -> Result<Vec<CycleGadget>, ColoringError> {
    let mut out = Vec::with_capacity(factor.cycles.len());
    for cycle in &factor.cycles {
        let m = cycle.vertices.len();
        let mut gadget = CycleGadget {
            h_vertices: cycle.vertices.clone(),
            entries: Vec::with_capacity(m),
            matched: Vec::with_capacity(m),
            exits: Vec::with_capacity(m),
        };
        for j in 0..m {
            let h = cycle.vertices[j];
            let x = dec.edges[cycle.edges[(j + m - 1) % m]].port_at(h);
            let y = dec.edges[cycle.edges[j]].port_at(h);
            let tri = dec.triangles[h];
            let rest: Vec<usize> = tri.iter().copied().filter(|&t| t != x && t != y).collect();
            let [mid] = rest[..] else {
                return Err(ColoringError::InternalInvariant(format!(
                    "cycle edges at H-vertex {h} share the port {x}"
                )));
            };
            gadget.entries.push(x);
            gadget.matched.push(mid);
            gadget.exits.push(y);
        }
        out.push(gadget);
    }
    Ok(out)
}

/// The coloring determined by a 2-factor of the underlying multigraph.
/// Matched H-edges are oriented from their smaller H-vertex (`2a`) to the
/// larger (`2b`). The result is verified before it is returned.
pub fn canonical_color(
    g: &MultiGraph,
    dec: &BuiltDecomposition,
    factor: &TwoFactor,
) -> Result<PackingColoring, ColoringError> {
    let mut colors: Vec<Option<Color22>> = vec![None; g.order()];
    let mut set = |v: usize, c: Color22| -> Result<(), ColoringError> {
        match colors[v] {
            None => {
                colors[v] = Some(c);
                Ok(())
            }
            Some(prev) => Err(ColoringError::InternalInvariant(format!(
                "vertex {v} colored twice ({prev} then {c})"
            ))),
        }
    };

    for (gadget, cycle) in cycle_gadgets(dec, factor)?.iter().zip(&factor.cycles) {
        for j in 0..gadget.h_vertices.len() {
            set(gadget.entries[j], Color22::OneA)?;
            set(gadget.exits[j], Color22::OneB)?;
            // Cycle edge from y_j to x_{j+1}.
            for d in dec.edges[cycle.edges[j]].string_from(gadget.exits[j]) {
                set(d.entry, Color22::OneA)?;
                set(d.interior[0], Color22::TwoA)?;
                set(d.interior[1], Color22::TwoB)?;
                set(d.exit, Color22::OneB)?;
            }
        }
    }
    for &e in &factor.matching {
        let edge = &dec.edges[e];
        set(edge.ports.0, Color22::TwoA)?;
        set(edge.ports.1, Color22::TwoB)?;
        for d in &edge.string {
            set(d.entry, Color22::TwoB)?;
            set(d.interior[0], Color22::OneA)?;
            set(d.interior[1], Color22::OneB)?;
            set(d.exit, Color22::TwoA)?;
        }
    }
    finish(g, colors)
}

/// Canonical coloring through a 2-factor that contains the H-edge of
/// `special`, so its endpoints get `1a` and `1b`.
pub fn canonical_color_with_edge(
    g: &MultiGraph,
    dec: &BuiltDecomposition,
    special: (usize, usize),
) -> Result<PackingColoring, ColoringError> {
    color_placed(g, dec, special, EdgePlacement::Cycle)
}

/// Canonical coloring through a 2-factor whose matching contains the H-edge
/// of `special`, so its endpoints get `2a` and `2b`.
pub fn canonical_color_with_matched_edge(
    g: &MultiGraph,
    dec: &BuiltDecomposition,
    special: (usize, usize),
) -> Result<PackingColoring, ColoringError> {
    color_placed(g, dec, special, EdgePlacement::Matching)
}

fn color_placed(
    g: &MultiGraph,
    dec: &BuiltDecomposition,
    (u, v): (usize, usize),
    placement: EdgePlacement,
) -> Result<PackingColoring, ColoringError> {
    let e = dec
        .h_edge_of(u, v)
        .ok_or(ColoringError::EdgeNotLiftable(u, v))?;
    let factor = match placement {
        EdgePlacement::Cycle => two_factor_through(&dec.h, e)?,
        EdgePlacement::Matching => two_factor_avoiding(&dec.h, e)?,
    };
    let coloring = canonical_color(g, dec, &factor)?;
    check_placement(&coloring, (u, v), placement)?;
    Ok(coloring)
}

fn check_placement(
    coloring: &PackingColoring,
    (u, v): (usize, usize),
    placement: EdgePlacement,
) -> Result<(), ColoringError> {
    let colors = coloring.colors22().expect("(1,1,2,2) coloring");
    let (cu, cv) = (colors[u], colors[v]);
    let ok = cu == cv.partner()
        && match placement {
            EdgePlacement::Cycle => cu.is_one(),
            EdgePlacement::Matching => cu.is_two(),
        };
    if ok {
        Ok(())
    } else {
        Err(ColoringError::InternalInvariant(format!(
            "edge {u}-{v} expected on a {placement:?} edge, colored {cu}/{cv}"
        )))
    }
}

/// Colors a 2-edge-connected claw-free cubic graph so that the endpoints
/// of the edge `special` get the two classes of one radius, as chosen by
/// `placement`. Handles rings of diamonds (cycle placement only); `K4` is
/// not supported since every `K4` edge lies on a triangle.
pub fn color_with_special_edge(
    g: &MultiGraph,
    special: (usize, usize),
    placement: EdgePlacement,
) -> Result<PackingColoring, ColoringError> {
    match oum_decompose(g)? {
        OumDecomposition::K4 => Err(ColoringError::EdgeNotLiftable(special.0, special.1)),
        OumDecomposition::RingOfDiamonds(ring) => {
            let coloring = finish(g, ring_colors(g.order(), &ring))?;
            check_placement(&coloring, special, placement)?;
            Ok(coloring)
        }
        OumDecomposition::Built(dec) => color_placed(g, &dec, special, placement),
    }
}

fn finish(g: &MultiGraph, colors: Vec<Option<Color22>>) -> Result<PackingColoring, ColoringError> {
    let colors: Vec<Color22> = colors
        .into_iter()
        .enumerate()
        .map(|(v, c)| {
            c.ok_or_else(|| ColoringError::InternalInvariant(format!("vertex {v} left uncolored")))
        })
        .collect::<Result<_, _>>()?;
    let coloring = PackingColoring::from_colors(&colors);
    match verify(g, &coloring) {
        Ok(()) => Ok(coloring),
        Err(VerifyError::Violations(v)) => Err(ColoringError::VerificationFailed(v[0])),
        Err(VerifyError::Oracle(e)) => Err(ColoringError::InternalInvariant(e.to_string())),
    }
}

/// Vertices breaking the rule that a `1a` vertex has two `1b` neighbors or
/// lies on a diamond (and the same with `1a`, `1b` exchanged).
pub fn one_class_exceptions(g: &MultiGraph, colors: &[Color22]) -> Vec<usize> {
    let on_diamond = {
        let mut on = vec![false; g.order()];
        for d in find_diamonds(g).diamonds() {
            for v in d.vertices() {
                on[v] = true;
            }
        }
        on
    };
    (0..g.order())
        .filter(|&v| {
            let c = colors[v];
            if c.is_two() || on_diamond[v] {
                return false;
            }
            let partners = g
                .neighbors(v)
                .iter()
                .filter(|&&w| colors[w] == c.partner())
                .count();
            partners < 2
        })
        .collect()
}
