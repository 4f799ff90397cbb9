//! Contractible decision graph for the one-sided-shortcuts variant.
//!
//! Every vertex is a position with two out-edges: `jump_b` (the B-frog
//! advances; from the last column it leads to the goal) and `jump_a` (the
//! A-frog advances; null from the last row). The greedy decision follows
//! `jump_b` from valid vertices and `jump_a` from invalid ones.
//!
//! Contracting to a view drops every vertex whose distance is fixed for
//! the view, rerouting edges through the greedy path the dropped vertices
//! would have produced. Start and goal always survive.

use alloc::vec;
use alloc::vec::Vec;

use crate::curves::DistanceMatrix;
use crate::decisions::{Decision, Position};
use crate::error::{Error, Result};
use crate::ranges::DistanceRange;
use crate::salg::{ContractibleDecider, FixedClass, ViewBounds};

const NULL: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq)]
struct Vertex {
    i: u32,
    j: u32,
    dist: f64,
    jump_b: u32,
    jump_a: u32,
}

/// Vertices are kept in row-major order, so every edge except the goal's
/// self-loop points to a later vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct ShortcutGraph {
    layout: Layout,
    start: u32,
    goal: u32,
    bounds: Option<ViewBounds>,
}

#[derive(Debug, Clone, PartialEq)]
enum Layout {
    /// The initial graph: every position, with the edges implied by the grid.
    Grid {
        cols: usize,
        dist: Vec<f64>,
    },
    Sparse(Vec<Vertex>),
}

impl Vertex {
    fn pos(&self) -> Position {
        Position::new(self.i as usize, self.j as usize)
    }
}

impl Layout {
    fn len(&self) -> usize {
        match self {
            Layout::Grid { dist, .. } => dist.len(),
            Layout::Sparse(verts) => verts.len(),
        }
    }

    fn grid_vertex(cols: usize, dist: &[f64], idx: usize) -> Vertex {
        let (i, j) = (idx / cols, idx % cols);
        let last = dist.len() - 1;
        Vertex {
            i: i as u32,
            j: j as u32,
            dist: dist[idx],
            jump_b: if j + 1 < cols {
                idx as u32 + 1
            } else {
                last as u32
            },
            jump_a: if idx + cols <= last {
                (idx + cols) as u32
            } else {
                NULL
            },
        }
    }

    fn vertex(&self, idx: usize) -> Vertex {
        match self {
            Layout::Grid { cols, dist } => Layout::grid_vertex(*cols, dist, idx),
            Layout::Sparse(verts) => verts[idx],
        }
    }

    fn find(&self, pos: Position) -> Option<usize> {
        match self {
            Layout::Grid { cols, dist } => {
                let idx = pos.i * cols + pos.j;
                (pos.j < *cols && idx < dist.len()).then_some(idx)
            }
            Layout::Sparse(verts) => verts
                .binary_search_by_key(&(pos.i, pos.j), |v| (v.i as usize, v.j as usize))
                .ok(),
        }
    }
}

impl ShortcutGraph {
    /// The full grid graph over all positions.
    pub fn build(d: &DistanceMatrix) -> Self {
        let layout = Layout::Grid {
            cols: d.cols(),
            dist: d.values().to_vec(),
        };
        let goal = (layout.len() - 1) as u32;
        ShortcutGraph {
            layout,
            start: 0,
            goal,
            bounds: None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.layout.len()
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        (0..self.layout.len()).map(|v| self.layout.vertex(v).pos())
    }

    pub fn bounds(&self) -> Option<&ViewBounds> {
        self.bounds.as_ref()
    }

    fn target(&self, idx: u32) -> Option<Position> {
        (idx != NULL).then(|| self.layout.vertex(idx as usize).pos())
    }

    /// `jump_b` of the vertex at `pos`; `None` if absent or null.
    pub fn jump_b(&self, pos: Position) -> Option<Position> {
        self.layout
            .find(pos)
            .and_then(|v| self.target(self.layout.vertex(v).jump_b))
    }

    pub fn jump_a(&self, pos: Position) -> Option<Position> {
        self.layout
            .find(pos)
            .and_then(|v| self.target(self.layout.vertex(v).jump_a))
    }

    pub fn contains(&self, pos: Position) -> bool {
        self.layout.find(pos).is_some()
    }

    /// Contraction over the vertices given last to first.
    fn contract_from<I: Iterator<Item = Vertex>>(
        &self,
        reversed: impl Fn() -> I,
        bounds: &ViewBounds,
    ) -> Self {
        let n = self.layout.len();
        let (start, goal) = (self.start as usize, self.goal as usize);
        let keep =
            |v: usize, class: FixedClass| class == FixedClass::NonFixed || v == start || v == goal;
        let count = (0..n)
            .rev()
            .zip(reversed())
            .filter(|(v, x)| keep(*v, bounds.classify(x.dist)))
            .count();
        // For a kept vertex, slot[v] is its index in the contracted graph; for a
        // dropped one it is the index of the first kept vertex its greedy path
        // reaches, or null.
        let mut slot = vec![NULL; n];
        let blank = Vertex {
            i: 0,
            j: 0,
            dist: 0.0,
            jump_b: NULL,
            jump_a: NULL,
        };
        let mut kept = vec![blank; count];
        let mut next = count;
        let resolve = |w: u32, slot: &[u32]| if w == NULL { NULL } else { slot[w as usize] };
        for (v, vert) in (0..n).rev().zip(reversed()) {
            let class = bounds.classify(vert.dist);
            if keep(v, class) {
                next -= 1;
                slot[v] = next as u32;
                let jump_b = resolve(vert.jump_b, &slot);
                let jump_a = resolve(vert.jump_a, &slot);
                kept[next] = Vertex {
                    jump_b,
                    jump_a,
                    ..vert
                };
            } else {
                let via = if class == FixedClass::FixedValid {
                    vert.jump_b
                } else {
                    vert.jump_a
                };
                slot[v] = resolve(via, &slot);
            }
        }
        ShortcutGraph {
            layout: Layout::Sparse(kept),
            start: slot[start],
            goal: slot[goal],
            bounds: Some(*bounds),
        }
    }

    fn check(&self, r: &DistanceRange) -> Result<()> {
        match &self.bounds {
            Some(b) if !b.admits(r) => Err(Error::ContractViolation),
            _ => Ok(()),
        }
    }

    fn walk(&self, r: &DistanceRange, mut visit: impl FnMut(Position)) -> bool {
        let goal = self.layout.vertex(self.goal as usize);
        let mut v = self.start;
        if !r.contains(self.layout.vertex(v as usize).dist) || !r.contains(goal.dist) {
            return false;
        }
        loop {
            let vert = self.layout.vertex(v as usize);
            visit(vert.pos());
            if v == self.goal {
                return true;
            }
            v = if r.contains(vert.dist) {
                vert.jump_b
            } else {
                vert.jump_a
            };
            if v == NULL {
                return false;
            }
        }
    }
}

impl ContractibleDecider for ShortcutGraph {
    fn feasible(&self, range: &DistanceRange) -> Result<bool> {
        self.check(range)?;
        Ok(self.walk(range, |_| {}))
    }

    fn decide(&self, range: &DistanceRange) -> Result<Decision> {
        self.check(range)?;
        let mut steps = Vec::new();
        Ok(if self.walk(range, |p| steps.push(p)) {
            Decision::yes(steps)
        } else {
            Decision::no()
        })
    }

    fn contract(&self, bounds: &ViewBounds) -> Self {
        match &self.layout {
            Layout::Grid { cols, dist } => {
                let (cols, dist) = (*cols, dist.as_slice());
                self.contract_from(
                    || {
                        (0..dist.len())
                            .rev()
                            .map(|v| Layout::grid_vertex(cols, dist, v))
                    },
                    bounds,
                )
            }
            Layout::Sparse(verts) => self.contract_from(|| verts.iter().rev().copied(), bounds),
        }
    }

    fn size(&self) -> usize {
        self.layout.len()
    }
}
