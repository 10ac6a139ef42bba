//! Ground truth for packing colorings: an exhaustive verifier, an exact
//! backtracking decision procedure, and edge subdivision.

use std::collections::VecDeque;

use thiserror::Error;

use crate::coloring::{PackingColoring, SPackingSpec};
use crate::graph::MultiGraph;

/// Default vertex cap for [`solve_spacking`].
pub const DEFAULT_CAP: usize = 40;
/// Vertex cap used for the (1,2,3,4,5) check on subdivisions.
pub const SUBDIVISION_CAP: usize = 90;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("coloring covers {colored} of {n} vertices")]
    PartialColoring { colored: usize, n: usize },
    #[error("graph has {n} vertices, over the solver cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
}

/// Two vertices of one class that are too close.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub class: usize,
    pub u: usize,
    pub v: usize,
    pub distance: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{} violating pair(s)", .0.len())]
    Violations(Vec<Violation>),
}

/// Checks every same-class pair against its class radius.
pub fn verify(g: &MultiGraph, c: &PackingColoring) -> Result<(), VerifyError> {
    if c.len() != g.order() {
        return Err(OracleError::PartialColoring {
            colored: c.len().min(g.order()),
            n: g.order(),
        }
        .into());
    }
    let spec = c.spec();
    let d = g.all_pairs_distances();
    let mut out = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let class = c.class_of(u);
            if class != c.class_of(v) {
                continue;
            }
            if let Some(dist) = d.get(u, v) {
                if dist <= spec.radius(class) {
                    out.push(Violation {
                        class,
                        u,
                        v,
                        distance: dist,
                    });
                }
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(VerifyError::Violations(out))
    }
}

/// Verifies a possibly partial assignment, only looking at pairs that
/// involve one of `around`. Uncolored vertices are ignored.
pub fn violations_near(
    g: &MultiGraph,
    spec: &SPackingSpec,
    classes: &[Option<usize>],
    around: &[usize],
) -> Vec<Violation> {
    let reach = spec.radii().iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    let mut dist = vec![u32::MAX; g.order()];
    let mut touched = Vec::new();
    for &s in around {
        let Some(class) = classes[s] else { continue };
        let radius = spec.radius(class);
        let mut queue = VecDeque::from([s]);
        dist[s] = 0;
        touched.push(s);
        while let Some(u) = queue.pop_front() {
            if dist[u] >= reach.min(radius) {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    touched.push(w);
                    queue.push_back(w);
                    if classes[w] == Some(class) {
                        let (a, b) = (s.min(w), s.max(w));
                        let v = Violation {
                            class,
                            u: a,
                            v: b,
                            distance: dist[w],
                        };
                        if !out.contains(&v) {
                            out.push(v);
                        }
                    }
                }
            }
        }
        for &t in &touched {
            dist[t] = u32::MAX;
        }
        touched.clear();
    }
    out
}

/// Replaces every edge copy by a path of length two. Edge id `k` becomes
/// the new vertex `n + k`.
pub fn subdivide(g: &MultiGraph) -> MultiGraph {
    let n = g.order();
    let mut edges = Vec::with_capacity(2 * g.size());
    for (k, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + k));
        edges.push((n + k, v));
    }
    MultiGraph::new(n + g.size(), &edges).expect("subdivision edges are valid")
}

/// Exact decision procedure: a coloring for `spec` or `None` when none
/// exists.
///
/// Branches on the vertex with the most blocked classes (ties by smallest
/// id) and tries classes in order. Among classes of equal radius that are
/// still unused, only the first is tried, since unused classes of one radius
/// are interchangeable.
pub fn solve_spacking(
    g: &MultiGraph,
    spec: &SPackingSpec,
    cap: usize,
) -> Result<Option<PackingColoring>, OracleError> {
    let n = g.order();
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let mut solver = Solver::new(g, spec);
    Ok(solver
        .search()
        .then(|| PackingColoring::new(spec.clone(), solver.assignment())))
}

struct Solver {
    n: usize,
    radii: Vec<u32>,
    /// `balls[v]`: vertices within the largest radius of `v`, with distances.
    balls: Vec<Vec<(usize, u32)>>,
    /// First class of the equal-radius run containing each class.
    group_start: Vec<usize>,
    assigned: Vec<Option<usize>>,
    blocked: Vec<Vec<u32>>,
    usage: Vec<usize>,
}

impl Solver {
    fn new(g: &MultiGraph, spec: &SPackingSpec) -> Self {
        let n = g.order();
        let radii = spec.radii().to_vec();
        let reach = *radii.last().unwrap();
        let balls = (0..n)
            .map(|v| {
                g.bfs(v)
                    .into_iter()
                    .enumerate()
                    .filter_map(|(u, d)| match d {
                        Some(d) if u != v && d <= reach => Some((u, d)),
                        _ => None,
                    })
                    .collect()
            })
            .collect();
        let group_start = (0..radii.len())
            .map(|k| {
                let mut s = k;
                while s > 0 && radii[s - 1] == radii[k] {
                    s -= 1;
                }
                s
            })
            .collect();
        Solver {
            n,
            balls,
            group_start,
            assigned: vec![None; n],
            blocked: vec![vec![0; radii.len()]; n],
            usage: vec![0; radii.len()],
            radii,
        }
    }

    fn assignment(&self) -> Vec<usize> {
        self.assigned.iter().map(|c| c.unwrap()).collect()
    }

    fn saturation(&self, v: usize) -> usize {
        self.blocked[v].iter().filter(|&&b| b > 0).count()
    }

    fn pick_vertex(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..self.n {
            if self.assigned[v].is_some() {
                continue;
            }
            let s = self.saturation(v);
            if best.is_none_or(|(_, bs)| s > bs) {
                best = Some((v, s));
            }
        }
        best.map(|(v, _)| v)
    }

    fn allowed(&self, v: usize, class: usize) -> bool {
        if self.blocked[v][class] > 0 {
            return false;
        }
        let start = self.group_start[class];
        class == start || self.usage[class - 1] > 0 || self.usage[class] > 0
    }

    fn place(&mut self, v: usize, class: usize) -> bool {
        self.assigned[v] = Some(class);
        self.usage[class] += 1;
        let radius = self.radii[class];
        let mut ok = true;
        for i in 0..self.balls[v].len() {
            let (u, d) = self.balls[v][i];
            if d <= radius {
                self.blocked[u][class] += 1;
                if self.assigned[u].is_none() && self.blocked[u].iter().all(|&b| b > 0) {
                    ok = false;
                }
            }
        }
        ok
    }

    fn unplace(&mut self, v: usize, class: usize) {
        self.assigned[v] = None;
        self.usage[class] -= 1;
        let radius = self.radii[class];
        for i in 0..self.balls[v].len() {
            let (u, d) = self.balls[v][i];
            if d <= radius {
                self.blocked[u][class] -= 1;
            }
        }
    }

    fn search(&mut self) -> bool {
        let Some(v) = self.pick_vertex() else {
            return true;
        };
        for class in 0..self.radii.len() {
            if !self.allowed(v, class) {
                continue;
            }
            let ok = self.place(v, class);
            if ok && self.search() {
                return true;
            }
            self.unplace(v, class);
        }
        false
    }
}
