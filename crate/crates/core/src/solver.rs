//! Exhaustive Hamiltonian cycle search with forced-move propagation.
//!
//! The search extends a path from vertex 1 depth-first, exploring
//! successors in ascending id order. Before branching it runs a
//! propagation loop to a fixpoint:
//!
//! - a vertex still needing a successor whose admissible successors
//!   shrink to one is committed to that arc (taken immediately when the
//!   vertex is the path head, recorded as a constraint otherwise);
//! - symmetrically for predecessors, counting the head as a potential
//!   predecessor of any unvisited vertex and treating vertex 1 as needing
//!   a predecessor until the cycle closes;
//! - a vertex with no admissible successor or predecessor kills the
//!   branch.
//!
//! Committed arcs constrain admissibility (`x -> v` committed excludes
//! every other arc into `v` and out of `x`), so commitments cascade. All
//! deductions are consequences of "any completion of this path must use
//! that arc", so the search stays exhaustive: `NonHamiltonian` is only
//! reported once the whole tree is exhausted within budget.

use thiserror::Error;

use crate::graph::{DiGraph, VertexId};

/// Default node-expansion budget.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

const START: VertexId = 1;
const NONE: u32 = 0;

/// A candidate Hamiltonian cycle as a vertex sequence; the wrap arc from
/// the last vertex back to the first is implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    order: Vec<VertexId>,
}

impl Cycle {
    pub fn new(order: Vec<VertexId>) -> Cycle {
        Cycle { order }
    }

    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Canonical rotation starting at flat id 1; `None` if 1 is absent.
    pub fn rotated_to_start(mut self) -> Option<Cycle> {
        let pos = self.order.iter().position(|&v| v == START)?;
        self.order.rotate_left(pos);
        Some(self)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Vertices pushed onto the path, including forced ones.
    pub expansions: u64,
    pub forced_moves: u64,
    pub pruned_branches: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Hamiltonian {
        cycle: Cycle,
        stats: SolveStats,
    },
    NonHamiltonian {
        stats: SolveStats,
    },
    /// The node budget ran out before the search finished.
    Indeterminate {
        stats: SolveStats,
    },
}

impl SolveOutcome {
    pub fn is_hamiltonian(&self) -> bool {
        matches!(self, SolveOutcome::Hamiltonian { .. })
    }

    pub fn cycle(&self) -> Option<&Cycle> {
        match self {
            SolveOutcome::Hamiltonian { cycle, .. } => Some(cycle),
            _ => None,
        }
    }

    pub fn stats(&self) -> &SolveStats {
        match self {
            SolveOutcome::Hamiltonian { stats, .. }
            | SolveOutcome::NonHamiltonian { stats }
            | SolveOutcome::Indeterminate { stats } => stats,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveConfig {
    pub budget: u64,
    /// Disables the propagation rules, leaving plain backtracking; the
    /// decision is unchanged, only the statistics differ.
    pub pruning: bool,
}

impl Default for SolveConfig {
    fn default() -> SolveConfig {
        SolveConfig {
            budget: DEFAULT_NODE_BUDGET,
            pruning: true,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("cannot solve an empty graph")]
    EmptyGraph,
}

/// True iff `cycle` is a permutation of all vertices and every
/// consecutive pair, wrap included, is an arc of `g`.
pub fn verify_cycle(g: &DiGraph, cycle: &Cycle) -> bool {
    let n = g.vertex_count() as usize;
    let order = cycle.order();
    if n == 0 || order.len() != n {
        return false;
    }
    let mut seen = vec![false; n + 1];
    for &v in order {
        if v < 1 || v as usize > n || seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    order.windows(2).all(|w| g.has_arc(w[0], w[1])) && g.has_arc(order[n - 1], order[0])
}

pub fn find_hamiltonian_cycle(
    g: &DiGraph,
    config: &SolveConfig,
) -> Result<SolveOutcome, SolveError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(SolveError::EmptyGraph);
    }
    let mut search = Search {
        g,
        n,
        budget: config.budget,
        pruning: config.pruning,
        visited: vec![false; n as usize + 1],
        path: Vec::with_capacity(n as usize),
        stats: SolveStats::default(),
        scratch: Vec::new(),
    };
    if search.budget == 0 {
        return Ok(SolveOutcome::Indeterminate {
            stats: search.stats,
        });
    }
    search.visited[START as usize] = true;
    search.path.push(START);
    search.stats.expansions = 1;
    let flow = search.extend(0);
    let stats = search.stats;
    Ok(match flow {
        Flow::Found => {
            let cycle = Cycle::new(search.path);
            debug_assert!(verify_cycle(g, &cycle));
            SolveOutcome::Hamiltonian { cycle, stats }
        }
        Flow::Dead => SolveOutcome::NonHamiltonian { stats },
        Flow::Budget => SolveOutcome::Indeterminate { stats },
    })
}

enum Flow {
    Found,
    Dead,
    Budget,
}

enum Next {
    Pruned,
    Forced(VertexId),
    Open,
}

struct Scratch {
    forced_succ: Vec<u32>,
    forced_pred: Vec<u32>,
    cycle_mark: Vec<u32>,
    choices: Vec<VertexId>,
}

struct Search<'g> {
    g: &'g DiGraph,
    n: u32,
    budget: u64,
    pruning: bool,
    visited: Vec<bool>,
    path: Vec<VertexId>,
    stats: SolveStats,
    scratch: Vec<Scratch>,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> Flow {
        let head = *self.path.last().expect("path never empty");
        if self.path.len() == self.n as usize {
            return if self.g.has_arc(head, START) {
                Flow::Found
            } else {
                Flow::Dead
            };
        }
        if !self.pruning {
            let degree = self.g.out_neighbors(head).len();
            for idx in 0..degree {
                let w = self.g.out_neighbors(head)[idx];
                if self.visited[w as usize] {
                    continue;
                }
                match self.advance(w, depth) {
                    Flow::Dead => continue,
                    flow => return flow,
                }
            }
            return Flow::Dead;
        }
        self.ensure_scratch(depth);
        match self.propagate(depth, head) {
            Next::Pruned => {
                self.stats.pruned_branches += 1;
                Flow::Dead
            }
            Next::Forced(w) => {
                self.stats.forced_moves += 1;
                self.advance(w, depth)
            }
            Next::Open => {
                let count = self.scratch[depth].choices.len();
                for idx in 0..count {
                    let w = self.scratch[depth].choices[idx];
                    match self.advance(w, depth) {
                        Flow::Dead => continue,
                        flow => return flow,
                    }
                }
                Flow::Dead
            }
        }
    }

    fn advance(&mut self, w: VertexId, depth: usize) -> Flow {
        if self.stats.expansions >= self.budget {
            return Flow::Budget;
        }
        self.stats.expansions += 1;
        self.visited[w as usize] = true;
        self.path.push(w);
        let flow = self.extend(depth + 1);
        if matches!(flow, Flow::Dead) {
            self.path.pop();
            self.visited[w as usize] = false;
        }
        flow
    }

    fn ensure_scratch(&mut self, depth: usize) {
        while self.scratch.len() <= depth {
            self.scratch.push(Scratch {
                forced_succ: vec![NONE; self.n as usize + 1],
                forced_pred: vec![NONE; self.n as usize + 1],
                cycle_mark: vec![0; self.n as usize + 1],
                choices: Vec::new(),
            });
        }
    }

    fn propagate(&mut self, depth: usize, head: VertexId) -> Next {
        let g = self.g;
        let n = self.n;
        let visited = &self.visited;
        let Scratch {
            forced_succ: fs,
            forced_pred: fp,
            cycle_mark,
            choices,
        } = &mut self.scratch[depth];
        fs.fill(NONE);
        fp.fill(NONE);

        loop {
            let mut changed = false;
            // Successor candidates: the head moves next, every unvisited
            // vertex moves later and may also be the one closing into the
            // start vertex.
            for v in 1..=n {
                let is_head = v == head;
                if !is_head && visited[v as usize] {
                    continue;
                }
                if fs[v as usize] != NONE {
                    continue;
                }
                let mut count = 0u32;
                let mut only = NONE;
                for &w in g.out_neighbors(v) {
                    let admissible = if is_head {
                        !visited[w as usize] && (fp[w as usize] == NONE || fp[w as usize] == head)
                    } else if w == START {
                        fp[START as usize] == NONE || fp[START as usize] == v
                    } else {
                        !visited[w as usize] && (fp[w as usize] == NONE || fp[w as usize] == v)
                    };
                    if admissible {
                        count += 1;
                        only = w;
                        if count > 1 {
                            break;
                        }
                    }
                }
                if count == 0 {
                    return Next::Pruned;
                }
                if count == 1 {
                    fs[v as usize] = only;
                    if fp[only as usize] == NONE {
                        fp[only as usize] = v;
                    }
                    changed = true;
                }
            }
            // Predecessor candidates: every unvisited vertex needs one, and
            // so does the start vertex (the arc closing the cycle).
            for v in 1..=n {
                if visited[v as usize] && v != START {
                    continue;
                }
                if fp[v as usize] != NONE {
                    continue;
                }
                let mut count = 0u32;
                let mut only = NONE;
                for &x in g.in_neighbors(v) {
                    // The head feeds its next move, never the closing arc:
                    // with the path still short of n the head's move goes
                    // to a fresh vertex.
                    let x_ok = if x == head {
                        v != START
                    } else {
                        !visited[x as usize]
                    };
                    if !x_ok {
                        continue;
                    }
                    if fs[x as usize] != NONE && fs[x as usize] != v {
                        continue;
                    }
                    count += 1;
                    only = x;
                    if count > 1 {
                        break;
                    }
                }
                if count == 0 {
                    return Next::Pruned;
                }
                if count == 1 {
                    fp[v as usize] = only;
                    if fs[only as usize] == NONE {
                        fs[only as usize] = v;
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        // Every committed arc must lie on the final cycle, so a closed
        // loop of committed arcs among unvisited vertices would be a
        // proper subcycle: the branch is dead.
        cycle_mark.fill(0);
        let mut walk = 0u32;
        for v0 in 1..=n {
            if visited[v0 as usize] || fs[v0 as usize] == NONE || cycle_mark[v0 as usize] != 0 {
                continue;
            }
            walk += 1;
            let mut v = v0;
            loop {
                if visited[v as usize] {
                    break; // chain ends at the start vertex
                }
                if cycle_mark[v as usize] == walk {
                    return Next::Pruned;
                }
                if cycle_mark[v as usize] != 0 {
                    break; // merged into a chain already known safe
                }
                cycle_mark[v as usize] = walk;
                match fs[v as usize] {
                    NONE => break,
                    w => v = w,
                }
            }
        }

        if fs[head as usize] != NONE {
            return Next::Forced(fs[head as usize]);
        }
        choices.clear();
        for &w in g.out_neighbors(head) {
            if !visited[w as usize] && (fp[w as usize] == NONE || fp[w as usize] == head) {
                choices.push(w);
            }
        }
        match choices.len() {
            0 => Next::Pruned,
            1 => Next::Forced(choices[0]),
            _ => Next::Open,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(g: &DiGraph) -> SolveOutcome {
        find_hamiltonian_cycle(g, &SolveConfig::default()).unwrap()
    }

    #[test]
    fn directed_triangle() {
        let g = DiGraph::from_arcs(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        match solve(&g) {
            SolveOutcome::Hamiltonian { cycle, .. } => {
                assert_eq!(cycle.order(), &[1, 2, 3]);
                assert!(verify_cycle(&g, &cycle));
            }
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn single_arc_pair_is_not_hamiltonian() {
        let g = DiGraph::from_arcs(2, &[(1, 2)]).unwrap();
        assert!(matches!(solve(&g), SolveOutcome::NonHamiltonian { .. }));
    }

    #[test]
    fn single_vertex_has_no_cycle() {
        let g = DiGraph::from_arcs(1, &[]).unwrap();
        assert!(matches!(solve(&g), SolveOutcome::NonHamiltonian { .. }));
    }

    #[test]
    fn empty_graph_rejected() {
        let g = DiGraph::from_arcs(0, &[]).unwrap();
        assert_eq!(
            find_hamiltonian_cycle(&g, &SolveConfig::default()),
            Err(SolveError::EmptyGraph)
        );
    }

    #[test]
    fn budget_exhaustion_is_indeterminate() {
        // Complete digraph on 6 vertices with a tiny budget.
        let mut arcs = Vec::new();
        for a in 1..=6u32 {
            for b in 1..=6u32 {
                if a != b {
                    arcs.push((a, b));
                }
            }
        }
        let g = DiGraph::from_arcs(6, &arcs).unwrap();
        let outcome = find_hamiltonian_cycle(
            &g,
            &SolveConfig {
                budget: 3,
                pruning: true,
            },
        )
        .unwrap();
        assert!(matches!(outcome, SolveOutcome::Indeterminate { .. }));
    }

    #[test]
    fn deterministic_outcomes() {
        let g = DiGraph::from_arcs(
            5,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 1),
                (1, 3),
                (3, 5),
                (2, 4),
            ],
        )
        .unwrap();
        let a = solve(&g);
        let b = solve(&g);
        assert_eq!(a, b);
    }

    #[test]
    fn reversed_cycle_fails_verification_without_reverse_arcs() {
        let g = DiGraph::from_arcs(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let cycle = Cycle::new(vec![1, 3, 2]);
        assert!(!verify_cycle(&g, &cycle));
    }

    #[test]
    fn malformed_cycles_fail_verification() {
        let g = DiGraph::from_arcs(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(!verify_cycle(&g, &Cycle::new(vec![1, 2, 2])));
        assert!(!verify_cycle(&g, &Cycle::new(vec![1, 2])));
        assert!(!verify_cycle(&g, &Cycle::new(vec![1, 2, 4])));
        assert!(!verify_cycle(&g, &Cycle::new(vec![])));
    }

    #[test]
    fn rotation_helper() {
        let c = Cycle::new(vec![3, 1, 2]).rotated_to_start().unwrap();
        assert_eq!(c.order(), &[1, 2, 3]);
        assert!(Cycle::new(vec![2, 3]).rotated_to_start().is_none());
    }
}
