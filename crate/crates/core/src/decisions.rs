//! The three decision procedures: is `[s, t]` a feasible range?
//!
//! Each returns a [`Decision`] with a witness [`Walk`] when the answer is
//! yes. Positions are 0-based `(i, j)` pairs: `i` indexes A, `j` indexes B.

use alloc::vec;
use alloc::vec::Vec;

use crate::curves::DistanceMatrix;
use crate::ranges::DistanceRange;
use crate::Variant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Position {
    pub i: usize,
    pub j: usize,
}

impl Position {
    pub const fn new(i: usize, j: usize) -> Self {
        Position { i, j }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Walk {
    pub steps: Vec<Position>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub feasible: bool,
    pub witness: Option<Walk>,
}

impl Decision {
    pub fn yes(steps: Vec<Position>) -> Self {
        Decision {
            feasible: true,
            witness: Some(Walk { steps }),
        }
    }

    pub fn no() -> Self {
        Decision {
            feasible: false,
            witness: None,
        }
    }
}

pub fn decide(variant: Variant, d: &DistanceMatrix, r: &DistanceRange) -> Decision {
    match variant {
        Variant::Strong => strong_decide(d, r),
        Variant::Shortcut => shortcut_decide(d, r),
        Variant::Weak => weak_decide(d, r),
    }
}

/// Forward reachability with moves `(+1,0)`, `(0,+1)` and `(+1,+1)` through
/// positions whose distance lies in `r`.
pub fn strong_decide(d: &DistanceMatrix, r: &DistanceRange) -> Decision {
    let (rows, cols) = (d.rows(), d.cols());
    let mut reach = vec![false; rows * cols];
    for i in 0..rows {
        for j in 0..cols {
            if !r.contains(d.get(i, j)) {
                continue;
            }
            reach[i * cols + j] = (i == 0 && j == 0)
                || (i > 0 && reach[(i - 1) * cols + j])
                || (j > 0 && reach[i * cols + j - 1])
                || (i > 0 && j > 0 && reach[(i - 1) * cols + j - 1]);
        }
    }
    if !reach[rows * cols - 1] {
        return Decision::no();
    }
    let mut steps = vec![Position::new(rows - 1, cols - 1)];
    let (mut i, mut j) = (rows - 1, cols - 1);
    while (i, j) != (0, 0) {
        (i, j) = if i > 0 && j > 0 && reach[(i - 1) * cols + j - 1] {
            (i - 1, j - 1)
        } else if i > 0 && reach[(i - 1) * cols + j] {
            (i - 1, j)
        } else {
            (i, j - 1)
        };
        steps.push(Position::new(i, j));
    }
    steps.reverse();
    Decision::yes(steps)
}

/// Greedy one-sided-shortcuts decision: the B-frog advances while the
/// current position is valid, otherwise the A-frog skips ahead.
///
/// The witness lists every visited position, skipped (invalid) ones included.
pub fn shortcut_decide(d: &DistanceMatrix, r: &DistanceRange) -> Decision {
    let (last_i, last_j) = (d.rows() - 1, d.cols() - 1);
    if !r.contains(d.get(0, 0)) || !r.contains(d.get(last_i, last_j)) {
        return Decision::no();
    }
    let (mut i, mut j) = (0, 0);
    let mut steps = Vec::with_capacity(last_i + last_j + 1);
    loop {
        steps.push(Position::new(i, j));
        if r.contains(d.get(i, j)) {
            if j < last_j {
                j += 1;
            } else {
                // The A-frog jumps straight to its last point.
                if i != last_i {
                    steps.push(Position::new(last_i, last_j));
                }
                return Decision::yes(steps);
            }
        } else if i < last_i {
            i += 1;
        } else {
            return Decision::no();
        }
    }
}

/// Maze directions in clockwise order, so a right turn is `+1 mod 4`.
///
/// North increases the A index `i`, east increases the B index `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Dir {
    East = 0,
    South = 1,
    West = 2,
    North = 3,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::East, Dir::South, Dir::West, Dir::North];

    #[inline]
    pub fn right(self) -> Dir {
        Dir::ALL[(self as usize + 1) % 4]
    }

    #[inline]
    pub fn left(self) -> Dir {
        Dir::ALL[(self as usize + 3) % 4]
    }

    #[inline]
    pub fn reverse(self) -> Dir {
        Dir::ALL[(self as usize + 2) % 4]
    }

    /// The neighbouring grid position, if it exists.
    #[inline]
    pub fn step(self, p: Position, rows: usize, cols: usize) -> Option<Position> {
        match self {
            Dir::East if p.j + 1 < cols => Some(Position::new(p.i, p.j + 1)),
            Dir::South if p.i > 0 => Some(Position::new(p.i - 1, p.j)),
            Dir::West if p.j > 0 => Some(Position::new(p.i, p.j - 1)),
            Dir::North if p.i + 1 < rows => Some(Position::new(p.i + 1, p.j)),
            _ => None,
        }
    }
}

/// Weak reachability (axis-aligned moves in both directions) decided by the
/// right-hand wall follower.
///
/// The walker starts in room `(0, 0)` facing east with its hand on the
/// southern wall. A door is open when the room behind it is valid. The walk
/// answers no once it is back in its initial `(room, direction)` state.
pub fn weak_decide(d: &DistanceMatrix, r: &DistanceRange) -> Decision {
    let (rows, cols) = (d.rows(), d.cols());
    let start = Position::new(0, 0);
    let goal = Position::new(rows - 1, cols - 1);
    if !r.contains(d.get(0, 0)) || !r.contains(d.get(goal.i, goal.j)) {
        return Decision::no();
    }
    let mut steps = vec![start];
    if start == goal {
        return Decision::yes(steps);
    }
    let (mut room, mut dir) = (start, Dir::East);
    let budget = 4 * rows * cols + 1;
    for _ in 0..budget {
        match dir.step(room, rows, cols) {
            Some(next) if r.contains(d.get(next.i, next.j)) => {
                room = next;
                steps.push(room);
                if room == goal {
                    return Decision::yes(steps);
                }
                dir = dir.right();
            }
            _ => dir = dir.left(),
        }
        if room == start && dir == Dir::East {
            return Decision::no();
        }
    }
    Decision::no()
}
