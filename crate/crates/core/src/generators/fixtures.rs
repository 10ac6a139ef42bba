//! Named graphs: K4, Petersen, the prism, and hand-encoded figure graphs.
//!
//! Figure vertices are renumbered from zero in the order the figure
//! declares them.

use crate::coloring::{Color22, PackingColoring};
use crate::graph::MultiGraph;
use crate::recognition::{check_claw_free_cubic, is_two_edge_connected};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: MultiGraph,
}

const NAMES: [&str; 8] = [
    "k4", "petersen", "prism", "fig1_h", "fig2_h", "fig2_g", "fig3_g", "theta",
];

/// All fixtures in a fixed order.
pub fn fixtures() -> Vec<Fixture> {
    NAMES
        .iter()
        .map(|n| fixture(n).expect("known name"))
        .collect()
}

/// Case-insensitive lookup.
pub fn fixture(name: &str) -> Option<Fixture> {
    let lower = name.to_ascii_lowercase();
    let name = *NAMES.iter().find(|&&n| n == lower)?;
    let graph = match name {
        "k4" => build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        "petersen" => petersen(),
        "prism" => build(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        ),
        "theta" => build(2, &[(0, 1), (0, 1), (0, 1)]),
        "fig1_h" => tikz(1, 10, FIG1_H),
        "fig2_h" => tikz(1, 6, FIG2_H),
        "fig2_g" => tikz(11, 34, FIG2_G),
        "fig3_g" => fig3(),
        _ => unreachable!(),
    };
    validate(name, &graph);
    Some(Fixture { name, graph })
}

fn validate(name: &str, g: &MultiGraph) {
    match name {
        "petersen" => assert!(g.is_cubic() && g.is_simple() && g.order() == 10),
        "fig1_h" | "fig2_h" | "theta" => assert!(g.is_cubic() && is_two_edge_connected(g)),
        _ => assert_eq!(check_claw_free_cubic(g), Ok(()), "fixture {name}"),
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> MultiGraph {
    MultiGraph::new(n, edges).expect("fixture edges are valid")
}

fn tikz(first: usize, n: usize, edges: &[(usize, usize)]) -> MultiGraph {
    let shifted: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - first, v - first)).collect();
    build(n, &shifted)
}

fn petersen() -> MultiGraph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((i, i + 5));
        e.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &e)
}

/// Nodes `h^1_3, h^1_4, h^1_1, h^1_2, h^2_1, h^2_2, h^3_1, h^3_2, h^3_3, h^3_4`.
const FIG1_H: &[(usize, usize)] = &[
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 1),
    (5, 6),
    (5, 6),
    (7, 8),
    (8, 9),
    (9, 10),
    (7, 10),
    (2, 4),
    (3, 5),
    (6, 7),
    (1, 9),
    (8, 10),
];

const FIG2_H: &[(usize, usize)] = &[
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 1),
    (1, 6),
    (5, 6),
    (5, 6),
    (2, 4),
    (3, 5),
];

/// Nodes 11..44 of the figure.
const FIG2_G: &[(usize, usize)] = &[
    (11, 12),
    (12, 13),
    (13, 14),
    (14, 15),
    (15, 16),
    (16, 17),
    (17, 18),
    (18, 19),
    (19, 20),
    (20, 21),
    (21, 22),
    (22, 11),
    (22, 12),
    (13, 15),
    (16, 18),
    (19, 21),
    (11, 23),
    (23, 24),
    (23, 25),
    (24, 25),
    (24, 26),
    (25, 26),
    (26, 27),
    (27, 28),
    (27, 29),
    (28, 29),
    (28, 30),
    (29, 30),
    (30, 31),
    (31, 32),
    (32, 33),
    (33, 34),
    (34, 35),
    (35, 36),
    (36, 37),
    (37, 38),
    (38, 39),
    (39, 40),
    (40, 41),
    (41, 42),
    (42, 43),
    (43, 44),
    (44, 31),
    (32, 44),
    (33, 35),
    (36, 38),
    (37, 39),
    (40, 42),
    (41, 43),
    (14, 20),
    (17, 34),
];

/// The coloring printed in the figure for nodes 11..44.
const FIG2_COLORS: &str = "2a 1b 1a 2a 1b 1a 2a 1b 1a 2b 1b 1a 2b 1a 1b 2a 2b \
                           1a 1b 2a 2b 1b 1a 2b 1b 1a 2b 2a 1b 1a 2a 2b 1b 1a";

/// The reference (1,1,2,2)-coloring of `fig2_g`.
pub fn fig2_reference_coloring() -> PackingColoring {
    let colors: Vec<Color22> = FIG2_COLORS
        .split_whitespace()
        .map(|s| s.parse().expect("valid label"))
        .collect();
    PackingColoring::from_colors(&colors)
}

/// Nodes `1..12` become `0..11`, then `a, b, c, d, r, s, f, g, t, u, p, q`.
/// The figure also draws `c d` and `r s`, which would give those four
/// vertices degree 4; they are left out so that all three leaves match the
/// `a, b, p, q` leaf and the graph is cubic as the caption states.
fn fig3() -> MultiGraph {
    const LETTERS: &str = "abcdrsfgtupq";
    let id = |s: &str| -> usize {
        match s.parse::<usize>() {
            Ok(k) => k - 1,
            Err(_) => 12 + LETTERS.find(s).expect("known letter"),
        }
    };
    let text = "1-2 2-3 1-3 3-4 4-5 4-6 5-6 a-p a-q p-q 6-b 5-a b-p b-q \
                1-7 7-8 7-9 8-d 8-9 9-c c-g c-f f-g d-f d-g \
                2-10 10-11 10-12 11-r 11-12 12-s s-t s-u r-t r-u t-u";
    let edges: Vec<(usize, usize)> = text
        .split_whitespace()
        .map(|e| {
            let (a, b) = e.split_once('-').unwrap();
            (id(a), id(b))
        })
        .collect();
    build(24, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::verify;
    use crate::recognition::{find_bridges, find_claw};

    #[test]
    fn all_load() {
        let f = fixtures();
        assert_eq!(f.len(), NAMES.len());
        assert!(fixture("Petersen").is_some());
        assert!(fixture("nope").is_none());
    }

    #[test]
    fn petersen_facts() {
        let g = fixture("petersen").unwrap().graph;
        assert_eq!(g.all_pairs_distances().diameter(), 2);
        assert!(find_claw(&g).is_some());
    }

    #[test]
    fn figure_sizes() {
        let g2 = fixture("fig2_g").unwrap().graph;
        assert_eq!((g2.order(), g2.size()), (34, 51));
        assert_eq!(find_bridges(&g2).unwrap(), vec![]);
        let g3 = fixture("fig3_g").unwrap().graph;
        assert_eq!(g3.order(), 24);
        assert_eq!(find_bridges(&g3).unwrap().len(), 3);
    }

    #[test]
    fn reference_coloring_verifies() {
        let g = fixture("fig2_g").unwrap().graph;
        assert_eq!(verify(&g, &fig2_reference_coloring()), Ok(()));
    }
}
