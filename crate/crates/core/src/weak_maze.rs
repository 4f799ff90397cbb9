//! Contractible maze for the weak variant, decided by the right-hand rule.
//!
//! Rooms are positions. The walker stands in a room facing one of its four
//! doors. If the room behind the door is valid it walks through and turns
//! right, otherwise it turns left. It starts in room `(0, 0)` facing east
//! and answers no when it is back in that state.
//!
//! The walker's behaviour is encoded as a small automaton so that it can be
//! contracted:
//!
//! * `rooms[u].doors[d]` is what happens when the walker in `u` faces `d`;
//! * a [`Step::Probe`] asks whether one particular room is valid: if so the
//!   walker enters it (arriving in a recorded direction), if not it carries
//!   on with the probe's `otherwise` step;
//! * a wall is simply `Face(u, d.left())`.
//!
//! In the full grid each door is a single probe of the adjacent room whose
//! `otherwise` is the left turn. Contracting to a view removes the rooms
//! whose distance is fixed for the view. Walking through a fixed-valid
//! region never depends on the range except at doors into surviving rooms,
//! so each such door becomes a probe whose `otherwise` continues the walk
//! along the region's wall to the next such door. Probes into fixed-invalid
//! rooms are skipped. The contracted walker therefore visits the surviving
//! rooms in exactly the order the full walker does.

use alloc::vec;
use alloc::vec::Vec;

use crate::curves::DistanceMatrix;
use crate::decisions::{Decision, Dir, Position};
use crate::error::{Error, Result};
use crate::ranges::DistanceRange;
use crate::salg::{ContractibleDecider, FixedClass, ViewBounds};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// The walker in room `.0` faces direction `.1`.
    Face(u32, Dir),
    Probe(u32),
    /// The walk circles forever without reaching a surviving room.
    Stuck,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Room {
    pos: Position,
    dist: f64,
    doors: [Step; 4],
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Probe {
    room: u32,
    arrival: Dir,
    otherwise: Step,
}

/// What a door leads to, as seen from outside the automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoorTarget {
    Wall,
    /// The first room probed through the door, and the direction the
    /// walker faces when it steps in.
    Room {
        pos: Position,
        arrival: Dir,
    },
    Stuck,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeakMaze {
    rooms: Vec<Room>,
    probes: Vec<Probe>,
    start: u32,
    goal: u32,
    bounds: Option<ViewBounds>,
}

impl WeakMaze {
    /// The full grid maze: every interior door probes its neighbour.
    pub fn build(d: &DistanceMatrix) -> Self {
        let (rows, cols) = (d.rows(), d.cols());
        let mut probes = Vec::with_capacity(4 * rows * cols);
        let mut rooms = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let pos = Position::new(i, j);
                let id = (i * cols + j) as u32;
                let doors = Dir::ALL.map(|dir| match dir.step(pos, rows, cols) {
                    Some(n) => {
                        probes.push(Probe {
                            room: (n.i * cols + n.j) as u32,
                            arrival: dir,
                            otherwise: Step::Face(id, dir.left()),
                        });
                        Step::Probe(probes.len() as u32 - 1)
                    }
                    None => Step::Face(id, dir.left()),
                });
                rooms.push(Room {
                    pos,
                    dist: d.get(i, j),
                    doors,
                });
            }
        }
        WeakMaze {
            rooms,
            probes,
            start: 0,
            goal: (rows * cols - 1) as u32,
            bounds: None,
        }
    }

    pub fn room_count(&self) -> usize {
        self.rooms.len()
    }

    pub fn probe_count(&self) -> usize {
        self.probes.len()
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        self.rooms.iter().map(|r| r.pos)
    }

    fn find(&self, pos: Position) -> Option<usize> {
        // Rooms stay in row-major order through contraction.
        self.rooms
            .binary_search_by_key(&(pos.i, pos.j), |r| (r.pos.i, r.pos.j))
            .ok()
    }

    pub fn contains(&self, pos: Position) -> bool {
        self.find(pos).is_some()
    }

    /// The first thing behind door `dir` of the room at `pos`.
    pub fn door(&self, pos: Position, dir: Dir) -> Option<DoorTarget> {
        let room = self.find(pos)?;
        Some(match self.rooms[room].doors[dir as usize] {
            Step::Face(..) => DoorTarget::Wall,
            Step::Stuck => DoorTarget::Stuck,
            Step::Probe(p) => {
                let pr = &self.probes[p as usize];
                DoorTarget::Room {
                    pos: self.rooms[pr.room as usize].pos,
                    arrival: pr.arrival,
                }
            }
        })
    }

    /// Number of automaton states: four facings per room plus the probes.
    pub fn node_count(&self) -> usize {
        4 * self.rooms.len() + self.probes.len()
    }

    fn check(&self, r: &DistanceRange) -> Result<()> {
        match &self.bounds {
            Some(b) if !b.admits(r) => Err(Error::ContractViolation),
            _ => Ok(()),
        }
    }

    /// Runs the wall follower, reporting each room it steps into.
    fn walk(&self, r: &DistanceRange, mut visit: impl FnMut(Position)) -> bool {
        let valid = |room: u32| r.contains(self.rooms[room as usize].dist);
        if !valid(self.start) || !valid(self.goal) {
            return false;
        }
        visit(self.rooms[self.start as usize].pos);
        if self.start == self.goal {
            return true;
        }
        let initial = Step::Face(self.start, Dir::East);
        let mut state = initial;
        for n in 0..=self.node_count() {
            state = match state {
                Step::Face(..) if n > 0 && state == initial => return false,
                Step::Face(room, dir) => self.rooms[room as usize].doors[dir as usize],
                Step::Probe(p) => {
                    let pr = self.probes[p as usize];
                    if valid(pr.room) {
                        visit(self.rooms[pr.room as usize].pos);
                        if pr.room == self.goal {
                            return true;
                        }
                        Step::Face(pr.room, pr.arrival.right())
                    } else {
                        pr.otherwise
                    }
                }
                Step::Stuck => return false,
            };
        }
        false
    }

    /// Contracts and reports how many parent states were resolved.
    pub fn contract_counted(&self, bounds: &ViewBounds) -> (Self, usize) {
        Contraction::new(self, bounds).run()
    }
}

#[derive(Clone, Copy)]
enum Memo {
    Open,
    Busy,
    Done(Step),
}

struct Contraction<'a> {
    parent: &'a WeakMaze,
    bounds: ViewBounds,
    class: Vec<FixedClass>,
    /// Child id of each surviving room.
    remap: Vec<u32>,
    face_memo: Vec<Memo>,
    probe_memo: Vec<Memo>,
    probes: Vec<Probe>,
    /// Child probes whose `otherwise` still refers to the parent.
    pending: Vec<(u32, Step)>,
    work: usize,
}

#[derive(Clone, Copy)]
enum Node {
    Face(u32, Dir),
    Probe(u32),
}

impl<'a> Contraction<'a> {
    fn new(parent: &'a WeakMaze, bounds: &ViewBounds) -> Self {
        let class: Vec<FixedClass> = parent
            .rooms
            .iter()
            .map(|r| bounds.classify(r.dist))
            .collect();
        let mut remap = vec![u32::MAX; parent.rooms.len()];
        let mut next = 0;
        for (u, c) in class.iter().enumerate() {
            if *c == FixedClass::NonFixed || u as u32 == parent.start || u as u32 == parent.goal {
                remap[u] = next;
                next += 1;
            }
        }
        Contraction {
            parent,
            bounds: *bounds,
            class,
            remap,
            face_memo: vec![Memo::Open; 4 * parent.rooms.len()],
            probe_memo: vec![Memo::Open; parent.probes.len()],
            probes: Vec::new(),
            pending: Vec::new(),
            work: 0,
        }
    }

    fn survives(&self, room: u32) -> bool {
        self.remap[room as usize] != u32::MAX
    }

    fn memo(&mut self, node: Node) -> &mut Memo {
        match node {
            Node::Face(u, d) => &mut self.face_memo[4 * u as usize + d as usize],
            Node::Probe(p) => &mut self.probe_memo[p as usize],
        }
    }

    /// Follows the parent automaton from `step` until the walk's fate no
    /// longer depends only on fixed rooms.
    fn resolve(&mut self, mut step: Step) -> Step {
        let mut path: Vec<Node> = Vec::new();
        let result = loop {
            self.work += 1;
            let node = match step {
                Step::Stuck => break Step::Stuck,
                Step::Face(u, d) if self.survives(u) => {
                    break Step::Face(self.remap[u as usize], d)
                }
                Step::Face(u, d) => Node::Face(u, d),
                Step::Probe(p) => Node::Probe(p),
            };
            match *self.memo(node) {
                Memo::Done(s) => break s,
                // A loop through fixed rooms only: the walker never gets out.
                Memo::Busy => break Step::Stuck,
                Memo::Open => {}
            }
            step = match node {
                Node::Face(u, d) => {
                    *self.memo(node) = Memo::Busy;
                    path.push(node);
                    self.parent.rooms[u as usize].doors[d as usize]
                }
                Node::Probe(p) => {
                    let pr = self.parent.probes[p as usize];
                    if self.survives(pr.room) {
                        let id = self.probes.len() as u32;
                        self.probes.push(Probe {
                            room: self.remap[pr.room as usize],
                            arrival: pr.arrival,
                            otherwise: Step::Stuck,
                        });
                        self.pending.push((id, pr.otherwise));
                        *self.memo(node) = Memo::Done(Step::Probe(id));
                        break Step::Probe(id);
                    }
                    *self.memo(node) = Memo::Busy;
                    path.push(node);
                    match self.class[pr.room as usize] {
                        FixedClass::FixedValid => Step::Face(pr.room, pr.arrival.right()),
                        _ => pr.otherwise,
                    }
                }
            };
        };
        for node in path {
            *self.memo(node) = Memo::Done(result);
        }
        result
    }

    fn run(mut self) -> (WeakMaze, usize) {
        let parent = self.parent;
        let mut rooms = Vec::new();
        for (u, room) in parent.rooms.iter().enumerate() {
            if !self.survives(u as u32) {
                continue;
            }
            let doors = room.doors.map(|s| self.resolve(s));
            rooms.push(Room { doors, ..*room });
        }
        while let Some((id, otherwise)) = self.pending.pop() {
            let resolved = self.resolve(otherwise);
            self.probes[id as usize].otherwise = resolved;
        }
        let maze = WeakMaze {
            rooms,
            probes: self.probes,
            start: self.remap[parent.start as usize],
            goal: self.remap[parent.goal as usize],
            bounds: Some(self.bounds),
        };
        (maze, self.work)
    }
}

impl ContractibleDecider for WeakMaze {
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
        self.contract_counted(bounds).0
    }

    fn size(&self) -> usize {
        self.rooms.len() + self.probes.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decisions::weak_decide;
    use crate::fixtures::{matrix, random_matrix, rng};
    use crate::ladder::DistanceLadder;
    use crate::salg::RangeMatrixView;
    use crate::Variant;
    use rand::Rng;

    fn p(i: usize, j: usize) -> Position {
        Position::new(i, j)
    }

    fn range(s: f64, t: f64) -> DistanceRange {
        DistanceRange::new(s, t).unwrap()
    }

    #[test]
    fn initial_structure() {
        let d = DistanceMatrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        let mz = WeakMaze::build(&d);
        assert_eq!(mz.room_count(), 4);
        let (mut doors, mut walls) = (0, 0);
        for pos in mz.positions().collect::<Vec<_>>() {
            for dir in Dir::ALL {
                match mz.door(pos, dir).unwrap() {
                    DoorTarget::Wall => walls += 1,
                    DoorTarget::Room { .. } => doors += 1,
                    DoorTarget::Stuck => unreachable!(),
                }
            }
        }
        assert_eq!((doors, walls), (8, 8));
        assert_eq!(mz.door(p(0, 0), Dir::South), Some(DoorTarget::Wall));
        assert_eq!(mz.door(p(0, 0), Dir::West), Some(DoorTarget::Wall));
        assert_eq!(mz.door(p(1, 1), Dir::North), Some(DoorTarget::Wall));
        assert_eq!(mz.door(p(1, 1), Dir::East), Some(DoorTarget::Wall));
        assert_eq!(
            mz.door(p(0, 0), Dir::North),
            Some(DoorTarget::Room {
                pos: p(1, 0),
                arrival: Dir::North
            })
        );
    }

    #[test]
    fn initial_maze_agrees_with_wall_follower() {
        let mut r = rng(8);
        for _ in 0..300 {
            let d = random_matrix(&mut r, 8);
            let mz = WeakMaze::build(&d);
            let values = crate::ladder::sorted_distinct(&d);
            let a = values[r.gen_range(0..values.len())];
            let b = values[r.gen_range(0..values.len())];
            let rg = range(a.min(b), a.max(b));
            assert_eq!(mz.decide(&rg).unwrap(), weak_decide(&d, &rg));
        }
    }

    #[test]
    fn collinear_pair() {
        let line = [[0.0, 0.0], [1.0, 0.0]];
        let d = matrix(&line, &line);
        let l = DistanceLadder::build(&d, Variant::Weak).unwrap();
        let root = WeakMaze::build(&d).contract(&RangeMatrixView::full(&l).bounds(&l));
        assert!(root.feasible(&range(0.0, 1.0)).unwrap());
        assert!(
            WeakMaze::build(&d).decide(&range(0.0, 0.0)).unwrap()
                == weak_decide(&d, &range(0.0, 0.0))
        );
        assert!(!WeakMaze::build(&d).feasible(&range(0.0, 0.0)).unwrap());
    }

    #[test]
    fn identity_contraction() {
        let d = random_matrix(&mut rng(12), 6);
        let mz = WeakMaze::build(&d);
        let all = ViewBounds {
            s_lo: 0.0,
            s_hi: 100.0,
            t_lo: 0.0,
            t_hi: 100.0,
        };
        assert_eq!(mz.contract(&all).rooms, mz.rooms);
        assert_eq!(mz.contract(&all).probes, mz.probes);
    }

    #[test]
    fn single_valid_room_passes_through() {
        // u = (0,0), v = (0,1) fixed valid, w = (0,2).
        let d = DistanceMatrix::from_rows(&[[1.0, 5.0, 2.0]]).unwrap();
        let bounds = ViewBounds {
            s_lo: 0.5,
            s_hi: 1.0,
            t_lo: 6.0,
            t_hi: 7.0,
        };
        let c = WeakMaze::build(&d).contract(&bounds);
        assert_eq!(c.room_count(), 2);
        assert_eq!(
            c.door(p(0, 0), Dir::East),
            Some(DoorTarget::Room {
                pos: p(0, 2),
                arrival: Dir::East
            })
        );
    }

    #[test]
    fn fixed_invalid_doors_become_walls() {
        let d = DistanceMatrix::from_rows(&[[1.0, 9.0], [2.0, 1.5]]).unwrap();
        // 9 lies above every upper limit of the view.
        let bounds = ViewBounds {
            s_lo: 1.0,
            s_hi: 1.0,
            t_lo: 1.5,
            t_hi: 2.0,
        };
        let c = WeakMaze::build(&d).contract(&bounds);
        assert_eq!(c.door(p(0, 0), Dir::East), Some(DoorTarget::Wall));
        assert!(!c.contains(p(0, 1)));
    }

    #[test]
    fn contraction_work_is_linear() {
        let mut r = rng(13);
        for _ in 0..100 {
            let d = random_matrix(&mut r, 10);
            let mz = WeakMaze::build(&d);
            let l = DistanceLadder::build(&d, Variant::Weak).unwrap();
            let (c, work) = mz.contract_counted(&RangeMatrixView::full(&l).bounds(&l));
            // Each parent state is resolved once, plus one lookup per child door and probe.
            assert!(
                work <= mz.node_count() + 4 * c.room_count() + c.probe_count() + mz.probe_count()
            );
            assert!(c.probe_count() <= 4 * c.room_count());
        }
    }
}
