use crate::graph::MultiGraph;

use super::is_claw_free;

/// An induced `K4 - e`. `interior` are the two degree-3 vertices of the
/// diamond, `exterior` the two nonadjacent ones. Both pairs are sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Diamond {
    pub exterior: [usize; 2],
    pub interior: [usize; 2],
}

impl Diamond {
    pub fn vertices(&self) -> [usize; 4] {
        [
            self.exterior[0],
            self.interior[0],
            self.interior[1],
            self.exterior[1],
        ]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices().contains(&v)
    }

    /// Orients the diamond so that it is entered at `entry`.
    pub fn oriented_from(&self, entry: usize) -> OrientedDiamond {
        let exit = if self.exterior[0] == entry {
            self.exterior[1]
        } else {
            debug_assert_eq!(self.exterior[1], entry);
            self.exterior[0]
        };
        OrientedDiamond {
            entry,
            interior: self.interior,
            exit,
        }
    }
}

/// A diamond with a direction of travel along its string: `entry` (role `a`),
/// interiors (`b`, `c`), `exit` (role `d`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrientedDiamond {
    pub entry: usize,
    pub interior: [usize; 2],
    pub exit: usize,
}

impl OrientedDiamond {
    pub fn reversed(&self) -> OrientedDiamond {
        OrientedDiamond {
            entry: self.exit,
            interior: self.interior,
            exit: self.entry,
        }
    }

    pub fn vertices(&self) -> [usize; 4] {
        [self.entry, self.interior[0], self.interior[1], self.exit]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiamondScan {
    /// The graph is `K4`: every edge deletion gives a (non-induced) diamond,
    /// so the diamonds overlap and are reported only as this flag.
    K4,
    Diamonds(Vec<Diamond>),
}

impl DiamondScan {
    pub fn diamonds(&self) -> &[Diamond] {
        match self {
            DiamondScan::K4 => &[],
            DiamondScan::Diamonds(d) => d,
        }
    }
}

fn is_k4(g: &MultiGraph) -> bool {
    g.order() == 4 && g.size() == 6 && g.is_simple()
}

/// All induced diamonds, ordered by smallest vertex.
pub fn find_diamonds(g: &MultiGraph) -> DiamondScan {
    if is_k4(g) {
        return DiamondScan::K4;
    }
    let mut out = Vec::new();
    for (b, c, _) in g.simple_edges() {
        let common: Vec<usize> = g
            .neighbors(b)
            .iter()
            .copied()
            .filter(|&w| w != c && g.has_edge(c, w))
            .collect();
        if common.len() != 2 || g.has_edge(common[0], common[1]) {
            continue;
        }
        out.push(Diamond {
            exterior: [common[0], common[1]],
            interior: [b, c],
        });
    }
    out.sort_by_key(|d| d.vertices().into_iter().min());
    DiamondScan::Diamonds(out)
}

/// `Some(i)` at every vertex of diamond `i`.
pub fn diamond_index(n: usize, diamonds: &[Diamond]) -> Vec<Option<usize>> {
    let mut idx = vec![None; n];
    for (i, d) in diamonds.iter().enumerate() {
        for v in d.vertices() {
            idx[v] = Some(i);
        }
    }
    idx
}

/// Connected, claw-free, cubic, not `K4`, and every vertex on a diamond.
pub fn is_ring_of_diamonds(g: &MultiGraph) -> bool {
    if !g.is_simple() || !g.is_connected() || !g.is_cubic() || !is_claw_free(g) {
        return false;
    }
    match find_diamonds(g) {
        DiamondScan::K4 => false,
        DiamondScan::Diamonds(ds) => diamond_index(g.order(), &ds).iter().all(Option::is_some),
    }
}

/// The diamonds of a ring in cyclic order, each oriented so that its exit
/// is adjacent to the next diamond's entry. `None` unless `g` is a ring.
pub fn ring_order(g: &MultiGraph) -> Option<Vec<OrientedDiamond>> {
    if !is_ring_of_diamonds(g) {
        return None;
    }
    let ds = find_diamonds(g).diamonds().to_vec();
    let idx = diamond_index(g.order(), &ds);
    let mut order = Vec::with_capacity(ds.len());
    let start = ds[0].oriented_from(ds[0].exterior[0]);
    let mut current = start;
    loop {
        order.push(current);
        let next_entry = outer_neighbor(g, &current)?;
        if next_entry == start.entry {
            break;
        }
        if order.len() >= ds.len() {
            return None;
        }
        let next = &ds[idx[next_entry]?];
        if !next.exterior.contains(&next_entry) {
            return None;
        }
        current = next.oriented_from(next_entry);
    }
    (order.len() == ds.len()).then_some(order)
}

/// The neighbor of the exit vertex outside the diamond.
pub(crate) fn outer_neighbor(g: &MultiGraph, d: &OrientedDiamond) -> Option<usize> {
    g.neighbors(d.exit)
        .iter()
        .copied()
        .find(|&w| !d.interior.contains(&w) && w != d.entry)
}
