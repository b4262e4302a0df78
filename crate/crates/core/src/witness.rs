//! Translation between partitions and Hamiltonian cycles of a converted
//! graph.
//!
//! A cycle of the converted graph has two phases. Phase one walks the
//! element blocks in order: visiting slot 3 then slot 2 puts the element
//! on side one and sweeps the shifted (side-two) triples of every subset
//! containing it; the reverse order puts it on side two and sweeps the
//! unshifted triples. Phase two, after the first connector, walks each
//! subset block through the surviving own-side triples, threading the
//! middle triple at the first adjacent pair of entries on opposite sides.
//! A subset whose entries all share one side leaves the middle triple
//! unreachable, which is exactly when the partition is not a solution.
//!
//! Reading a partition back out of a cycle is positional: an element is on
//! side one iff its slot 2 is visited after its slot 3, traversing from
//! the canonical start vertex.

use std::fmt;

use crate::reduction::{ReductionArtifact, VertexLabel};
use crate::solver::{verify_cycle, Cycle};
use crate::ssp::{Partition, Side};

/// What broke the trace of a candidate partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceDetail {
    /// All entries of the subset share one side, so no detour can consume
    /// the middle triple.
    MissingFlip,
    /// The middle triple was already consumed when the detour reached it;
    /// indicates a corrupted artifact.
    UnreachableMiddleTriple,
    /// The trace revisited a vertex; indicates a corrupted artifact.
    Internal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceFailure {
    /// 1-based subset index within the artifact's simple form.
    pub subset_index: u32,
    pub detail: TraceDetail,
}

impl fmt::Display for TraceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.detail {
            TraceDetail::MissingFlip => write!(
                f,
                "subset {} is not split: its entries all lie on one side",
                self.subset_index
            ),
            TraceDetail::UnreachableMiddleTriple => write!(
                f,
                "middle triple of subset {} cannot be visited",
                self.subset_index
            ),
            TraceDetail::Internal => {
                write!(f, "internal trace error near subset {}", self.subset_index)
            }
        }
    }
}

impl std::error::Error for TraceFailure {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtractError {
    /// The cycle does not verify against the artifact's graph.
    InvalidCycle,
}

impl fmt::Display for ExtractError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtractError::InvalidCycle => write!(f, "cycle is not Hamiltonian for this graph"),
        }
    }
}

impl std::error::Error for ExtractError {}

/// Deterministically traces the Hamiltonian cycle a solution partition
/// induces. `p` must be total over the artifact's (simple form) universe.
/// Fails with `MissingFlip` on the first subset the partition leaves
/// unsplit.
pub fn cycle_from_partition(art: &ReductionArtifact, p: &Partition) -> Result<Cycle, TraceFailure> {
    let inst = art.source().instance();
    assert_eq!(
        p.universe_size(),
        inst.universe_size(),
        "partition must be total over the artifact universe"
    );
    let n = art.graph().vertex_count() as usize;
    let u = inst.universe_size();
    let s = inst.subset_count() as u32;
    let occ = art.occurrences();
    let layout = art.layout();

    struct Trace {
        seen: Vec<bool>,
        order: Vec<u32>,
    }
    impl Trace {
        fn visit(&mut self, id: u32, subset_ctx: u32) -> Result<(), TraceFailure> {
            if self.seen[id as usize] {
                return Err(TraceFailure {
                    subset_index: subset_ctx,
                    detail: TraceDetail::Internal,
                });
            }
            self.seen[id as usize] = true;
            self.order.push(id);
            Ok(())
        }
    }
    let mut trace = Trace {
        seen: vec![false; n + 1],
        order: Vec::with_capacity(n),
    };
    let uv = |i: u32, j: u32| {
        layout
            .flat_id(VertexLabel::U {
                element: i,
                slot: j,
            })
            .expect("element slot in range")
    };
    let sv = |i: u32, j: u32| {
        layout
            .flat_id(VertexLabel::S { subset: i, slot: j })
            .expect("subset slot in range")
    };

    // Phase one: pick a side per element, sweeping the opposite-side
    // triples of every subset containing it.
    for e in 1..=u {
        trace.visit(uv(e, 1), 1)?;
        let side = p.side_of(e);
        match side {
            Side::One => {
                trace.visit(uv(e, 3), 1)?;
                trace.visit(uv(e, 2), 1)?;
            }
            Side::Two => {
                trace.visit(uv(e, 2), 1)?;
                trace.visit(uv(e, 3), 1)?;
            }
        }
        let blocks = occ.subsets_containing(e);
        let poss = occ.positions(e);
        for (t, &block) in blocks.iter().enumerate() {
            let k = layout.subset_size(block);
            let shift = match side {
                Side::One => 3 * k, // consume the side-two copy
                Side::Two => 0,     // consume the side-one copy
            };
            let a = 3 + 3 * poss[t] + shift;
            trace.visit(sv(block, a + 2), block)?;
            trace.visit(sv(block, a + 1), block)?;
            trace.visit(sv(block, a), block)?;
        }
        trace.visit(uv(e, 4), 1)?;
    }
    trace.visit(layout.flat_id(VertexLabel::C { slot: 1 }).unwrap(), 1)?;

    // Phase two: walk each subset block through its surviving triples,
    // detouring through the middle triple at the first side flip.
    for b in 1..=s {
        trace.visit(sv(b, 1), b)?;
        let entries = &inst.subsets()[(b - 1) as usize];
        let k = entries.len() as u32;
        let flip =
            (0..entries.len() - 1).find(|&j| p.side_of(entries[j]) != p.side_of(entries[j + 1]));
        let Some(flip) = flip else {
            return Err(TraceFailure {
                subset_index: b,
                detail: TraceDetail::MissingFlip,
            });
        };
        for (j, &entry) in entries.iter().enumerate() {
            let own_shift = match p.side_of(entry) {
                Side::One => 0,
                Side::Two => 3 * k,
            };
            let a = 3 + 3 * (j as u32 + 1) + own_shift;
            trace.visit(sv(b, a), b)?;
            trace.visit(sv(b, a + 1), b)?;
            trace.visit(sv(b, a + 2), b)?;
            if j == flip {
                let middle = [sv(b, 3), sv(b, 4), sv(b, 5)];
                if middle.iter().any(|&m| trace.seen[m as usize]) {
                    return Err(TraceFailure {
                        subset_index: b,
                        detail: TraceDetail::UnreachableMiddleTriple,
                    });
                }
                if own_shift == 0 {
                    trace.visit(sv(b, 3), b)?;
                    trace.visit(sv(b, 4), b)?;
                    trace.visit(sv(b, 5), b)?;
                } else {
                    trace.visit(sv(b, 5), b)?;
                    trace.visit(sv(b, 4), b)?;
                    trace.visit(sv(b, 3), b)?;
                }
            }
        }
        trace.visit(sv(b, 2), b)?;
    }
    trace.visit(layout.flat_id(VertexLabel::C { slot: 2 }).unwrap(), s)?;

    if trace.order.len() != n {
        return Err(TraceFailure {
            subset_index: s,
            detail: TraceDetail::Internal,
        });
    }
    Ok(Cycle::new(trace.order))
}

/// Reads the partition a Hamiltonian cycle encodes, over the simple-form
/// universe: element `i` is on side one iff slot 2 of its block is visited
/// after slot 3, traversing from the canonical start.
pub fn extract_partition(
    art: &ReductionArtifact,
    cycle: &Cycle,
) -> Result<Partition, ExtractError> {
    if !verify_cycle(art.graph(), cycle) {
        return Err(ExtractError::InvalidCycle);
    }
    let order = cycle.order();
    let n = order.len();
    let start = order
        .iter()
        .position(|&v| v == 1)
        .expect("verified cycle contains vertex 1");
    let mut pos = vec![0u32; n + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = ((i + n - start) % n) as u32;
    }
    let layout = art.layout();
    let u = art.source().instance().universe_size();
    let sides = (1..=u)
        .map(|e| {
            let p2 = pos[layout
                .flat_id(VertexLabel::U {
                    element: e,
                    slot: 2,
                })
                .unwrap() as usize];
            let p3 = pos[layout
                .flat_id(VertexLabel::U {
                    element: e,
                    slot: 3,
                })
                .unwrap() as usize];
            if p2 > p3 {
                Side::One
            } else {
                Side::Two
            }
        })
        .collect();
    Ok(Partition::from_sides(sides))
}

/// Like `extract_partition`, but reported in the original element ids of
/// the artifact's source instance; elements the simplifier dropped default
/// to side two.
pub fn extract_partition_original(
    art: &ReductionArtifact,
    cycle: &Cycle,
) -> Result<Partition, ExtractError> {
    let reduced = extract_partition(art, cycle)?;
    Ok(art
        .source()
        .lift_partition(&reduced)
        .expect("extracted partition matches the reduced universe"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::build_graph;
    use crate::ssp::{check_partition, simplify, SimplificationResult, SspInstance};

    fn artifact(u: u32, subsets: &[&[u32]]) -> ReductionArtifact {
        let inst = SspInstance::new(u, subsets.iter().map(|s| s.to_vec()).collect()).unwrap();
        match simplify(&inst) {
            SimplificationResult::Reduced(sf) => build_graph(&sf).unwrap(),
            other => panic!("expected a reducible instance, got {other:?}"),
        }
    }

    fn partition(sides: &[Side]) -> Partition {
        Partition::from_sides(sides.to_vec())
    }

    #[test]
    fn example_1_solution_traces_to_a_cycle() {
        use Side::*;
        let art = artifact(4, &[&[1, 2, 3], &[2, 4]]);
        let p = partition(&[One, Two, Two, One]);
        let cycle = cycle_from_partition(&art, &p).unwrap();
        assert!(verify_cycle(art.graph(), &cycle));
        assert_eq!(cycle.order()[0], 1);
        assert_eq!(extract_partition(&art, &cycle).unwrap(), p);
    }

    #[test]
    fn example_1_bad_partition_fails_on_subset_2() {
        use Side::*;
        let art = artifact(4, &[&[1, 2, 3], &[2, 4]]);
        let p = partition(&[One, Two, One, Two]);
        assert_eq!(
            cycle_from_partition(&art, &p),
            Err(TraceFailure {
                subset_index: 2,
                detail: TraceDetail::MissingFlip
            })
        );
    }

    #[test]
    fn example_2_unsplit_third_subset_fails() {
        use Side::*;
        let art = artifact(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let p = partition(&[One, Two, Two]);
        assert_eq!(
            cycle_from_partition(&art, &p),
            Err(TraceFailure {
                subset_index: 3,
                detail: TraceDetail::MissingFlip
            })
        );
    }

    #[test]
    fn trace_succeeds_exactly_on_solutions_small_exhaustive() {
        use Side::*;
        let art = artifact(4, &[&[1, 2, 3], &[2, 4]]);
        let inst = art.source().instance().clone();
        for mask in 0u32..16 {
            let sides: Vec<Side> = (0..4)
                .map(|b| if mask >> b & 1 == 1 { Two } else { One })
                .collect();
            let p = partition(&sides);
            let report = check_partition(&inst, &p).unwrap();
            match cycle_from_partition(&art, &p) {
                Ok(cycle) => {
                    assert!(report.is_solution, "trace succeeded on a non-solution");
                    assert!(verify_cycle(art.graph(), &cycle));
                    assert_eq!(extract_partition(&art, &cycle).unwrap(), p);
                }
                Err(failure) => {
                    assert!(!report.is_solution);
                    assert_eq!(failure.detail, TraceDetail::MissingFlip);
                    // A side being empty is a special case of some subset
                    // staying whole, except when the family has subsets
                    // but a side is empty with all subsets split, which
                    // cannot happen: an unsplit subset always exists.
                    assert!(report.unsplit.contains(&failure.subset_index));
                }
            }
        }
    }

    #[test]
    fn extraction_reports_original_ids() {
        use Side::*;
        // Element 3 is uncovered and dropped; subset 2 is a superset.
        let inst = SspInstance::new(4, vec![vec![1, 2], vec![1, 2, 4], vec![2, 4]]).unwrap();
        let sf = match simplify(&inst) {
            SimplificationResult::Reduced(sf) => sf,
            other => panic!("expected Reduced, got {other:?}"),
        };
        assert_eq!(sf.instance().universe_size(), 3);
        let art = build_graph(&sf).unwrap();
        let p_reduced = partition(&[One, Two, One]); // over {1, 2, 4} relabeled
        let cycle = cycle_from_partition(&art, &p_reduced).unwrap();
        let original = extract_partition_original(&art, &cycle).unwrap();
        assert_eq!(original.universe_size(), 4);
        assert_eq!(original.side_of(1), One);
        assert_eq!(original.side_of(2), Two);
        assert_eq!(original.side_of(3), Two); // dropped element defaults
        assert_eq!(original.side_of(4), One);
        assert!(check_partition(&inst, &original).unwrap().is_solution);
    }

    #[test]
    fn extract_rejects_invalid_cycles() {
        let art = artifact(4, &[&[1, 2, 3], &[2, 4]]);
        let bogus = Cycle::new((1..=58).collect());
        assert_eq!(
            extract_partition(&art, &bogus),
            Err(ExtractError::InvalidCycle)
        );
    }
}
