//! Set Splitting Problem instances, partitions, and the split check.

use std::fmt;

use thiserror::Error;

/// 1-based universe element identifier.
pub type ElementId = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("universe size must be at least 1")]
    EmptyUniverse,
    #[error("subset {subset} is empty")]
    EmptySubset { subset: u32 },
    #[error("element {element} in subset {subset} out of range 1..={u}")]
    ElementOutOfRange {
        element: ElementId,
        subset: u32,
        u: u32,
    },
    #[error("duplicate element {element} in subset {subset}")]
    DuplicateElement { element: ElementId, subset: u32 },
}

/// An SSP instance: a universe `{1, ..., u}` and a family of subsets of it.
/// Subsets are kept in the order given, each stored strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SspInstance {
    u: u32,
    subsets: Vec<Vec<ElementId>>,
}

impl SspInstance {
    /// Builds an instance, sorting each subset ascending. Rejects empty
    /// subsets, out-of-range elements, and duplicates within a subset.
    pub fn new(u: u32, subsets: Vec<Vec<ElementId>>) -> Result<Self, InstanceError> {
        if u == 0 {
            return Err(InstanceError::EmptyUniverse);
        }
        let mut normalized = Vec::with_capacity(subsets.len());
        for (idx, mut subset) in subsets.into_iter().enumerate() {
            let subset_no = idx as u32 + 1;
            if subset.is_empty() {
                return Err(InstanceError::EmptySubset { subset: subset_no });
            }
            subset.sort_unstable();
            for pair in subset.windows(2) {
                if pair[0] == pair[1] {
                    return Err(InstanceError::DuplicateElement {
                        element: pair[0],
                        subset: subset_no,
                    });
                }
            }
            for &e in &subset {
                if e < 1 || e > u {
                    return Err(InstanceError::ElementOutOfRange {
                        element: e,
                        subset: subset_no,
                        u,
                    });
                }
            }
            normalized.push(subset);
        }
        Ok(SspInstance {
            u,
            subsets: normalized,
        })
    }

    pub fn universe_size(&self) -> u32 {
        self.u
    }

    /// Number of subsets (the `s` of the construction).
    pub fn subset_count(&self) -> usize {
        self.subsets.len()
    }

    /// Total entry count over all subsets (the `c` of the construction).
    pub fn total_entries(&self) -> u64 {
        self.subsets.iter().map(|s| s.len() as u64).sum()
    }

    pub fn subsets(&self) -> &[Vec<ElementId>] {
        &self.subsets
    }
}

/// The side of a two-way partition an element is assigned to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    One,
    Two,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::One => Side::Two,
            Side::Two => Side::One,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::One => write!(f, "1"),
            Side::Two => write!(f, "2"),
        }
    }
}

/// A total assignment of every universe element to one of two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    sides: Vec<Side>,
}

impl Partition {
    /// Element `i` (1-based) is assigned `sides[i - 1]`.
    pub fn from_sides(sides: Vec<Side>) -> Self {
        Partition { sides }
    }

    pub fn universe_size(&self) -> u32 {
        self.sides.len() as u32
    }

    /// Panics if `element` is outside the partition's universe.
    pub fn side_of(&self, element: ElementId) -> Side {
        self.sides[(element - 1) as usize]
    }

    pub fn elements_on(&self, side: Side) -> impl Iterator<Item = ElementId> + '_ {
        self.sides
            .iter()
            .enumerate()
            .filter(move |(_, &s)| s == side)
            .map(|(i, _)| i as u32 + 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElementId, Side)> + '_ {
        self.sides
            .iter()
            .enumerate()
            .map(|(i, &s)| (i as u32 + 1, s))
    }

    pub fn swapped(&self) -> Partition {
        Partition {
            sides: self.sides.iter().map(|s| s.other()).collect(),
        }
    }
}

/// Outcome of checking a partition against an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReport {
    /// True exactly when `unsplit` is empty and neither side is empty.
    pub is_solution: bool,
    /// 1-based indices of subsets lying wholly inside one side.
    pub unsplit: Vec<u32>,
    /// Set when one side of the partition received no elements.
    pub side_empty: Option<Side>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("partition covers 1..={got} but the instance universe is 1..={expected}")]
pub struct PartitionMismatch {
    pub expected: u32,
    pub got: u32,
}

/// Reports which subsets the partition fails to split and whether a side is
/// empty. A partition solves the instance iff neither defect is present.
pub fn check_partition(
    inst: &SspInstance,
    p: &Partition,
) -> Result<SplitReport, PartitionMismatch> {
    if p.universe_size() != inst.universe_size() {
        return Err(PartitionMismatch {
            expected: inst.universe_size(),
            got: p.universe_size(),
        });
    }
    let mut unsplit = Vec::new();
    for (idx, subset) in inst.subsets().iter().enumerate() {
        let any_one = subset.iter().any(|&e| p.side_of(e) == Side::One);
        let any_two = subset.iter().any(|&e| p.side_of(e) == Side::Two);
        if !(any_one && any_two) {
            unsplit.push(idx as u32 + 1);
        }
    }
    let ones = p.elements_on(Side::One).count();
    let side_empty = if ones == 0 {
        Some(Side::One)
    } else if ones == p.universe_size() as usize {
        Some(Side::Two)
    } else {
        None
    };
    Ok(SplitReport {
        is_solution: unsplit.is_empty() && side_empty.is_none(),
        unsplit,
        side_empty,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_1() -> SspInstance {
        SspInstance::new(4, vec![vec![1, 2, 3], vec![2, 4]]).unwrap()
    }

    fn partition(sides: &[Side]) -> Partition {
        Partition::from_sides(sides.to_vec())
    }

    #[test]
    fn instance_sorts_subsets() {
        let inst = SspInstance::new(3, vec![vec![3, 1, 2]]).unwrap();
        assert_eq!(inst.subsets(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn instance_rejects_bad_input() {
        assert_eq!(
            SspInstance::new(0, vec![]),
            Err(InstanceError::EmptyUniverse)
        );
        assert_eq!(
            SspInstance::new(3, vec![vec![]]),
            Err(InstanceError::EmptySubset { subset: 1 })
        );
        assert_eq!(
            SspInstance::new(3, vec![vec![1, 4]]),
            Err(InstanceError::ElementOutOfRange {
                element: 4,
                subset: 1,
                u: 3
            })
        );
        assert_eq!(
            SspInstance::new(3, vec![vec![1, 2], vec![2, 2]]),
            Err(InstanceError::DuplicateElement {
                element: 2,
                subset: 2
            })
        );
    }

    #[test]
    fn split_check_accepts_solution() {
        use Side::*;
        // Elements 1 and 4 on side one, 2 and 3 on side two.
        let report = check_partition(&example_1(), &partition(&[One, Two, Two, One])).unwrap();
        assert!(report.is_solution);
        assert!(report.unsplit.is_empty());
        assert_eq!(report.side_empty, None);
    }

    #[test]
    fn split_check_reports_unsplit_subset() {
        use Side::*;
        // {1,3} | {2,4} leaves the second subset whole.
        let report = check_partition(&example_1(), &partition(&[One, Two, One, Two])).unwrap();
        assert!(!report.is_solution);
        assert_eq!(report.unsplit, vec![2]);
        assert_eq!(report.side_empty, None);
    }

    #[test]
    fn split_check_reports_empty_side() {
        use Side::*;
        let report = check_partition(&example_1(), &partition(&[One, One, One, One])).unwrap();
        assert!(!report.is_solution);
        assert_eq!(report.unsplit, vec![1, 2]);
        assert_eq!(report.side_empty, Some(Side::Two));
    }

    #[test]
    fn split_check_rejects_domain_mismatch() {
        use Side::*;
        assert!(check_partition(&example_1(), &partition(&[One, Two])).is_err());
    }

    #[test]
    fn is_solution_invariant_under_side_swap() {
        use Side::*;
        for sides in [
            vec![One, Two, Two, One],
            vec![One, Two, One, Two],
            vec![One, One, One, One],
            vec![Two, One, Two, One],
        ] {
            let p = partition(&sides);
            let a = check_partition(&example_1(), &p).unwrap();
            let b = check_partition(&example_1(), &p.swapped()).unwrap();
            assert_eq!(a.is_solution, b.is_solution);
            assert_eq!(a.unsplit, b.unsplit);
        }
    }
}
