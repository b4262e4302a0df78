//! Instance simplification to simple form.
//!
//! Four rules shrink an instance without changing its decision:
//!
//! 1. a single-entry subset can never be split: the decision is NO;
//! 2. an element contained in no subset may be removed from the universe;
//! 3. a subset equal to the whole universe is split by every valid
//!    partition and may be dropped;
//! 4. a superset of another subset is split whenever the smaller one is
//!    and may be dropped (equal subsets keep the earlier-indexed copy).
//!
//! Rule 3 compares against the universe of the instance as given. Re-firing
//! it against the shrunken universe after rule 2 removals would be unsound:
//! for u=3, S={{2,3},{1,2,3}} it would empty the family even though a
//! partition placing 2 and 3 on one side fails to split {2,3}.
//!
//! The rules run in the order 1, 3, 4, 2 and repeat until none fires. Two
//! terminal shortcuts apply afterwards: an empty family is a YES whenever
//! the universe can fill two sides, and a family whose subsets exactly
//! cover the remaining universe (c = u) is a YES witnessed by picking the
//! first entry of every subset.

use std::collections::BTreeMap;

use thiserror::Error;

use super::instance::{ElementId, Partition, Side, SspInstance};

/// Why a simplified instance is a NO.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoReason {
    /// Rule 1: the given subset (1-based) has a single entry.
    SingletonSubset { subset: u32 },
    /// No subsets remain and the universe cannot fill two non-empty sides.
    UniverseTooSmall,
}

/// Why a simplified instance is a YES without conversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum YesReason {
    /// Every subset was discarded by rules 3 and 4.
    EmptyFamily,
    /// The remaining subsets partition the remaining universe (c = u).
    ExactCover,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimplificationResult {
    DecidedNo {
        reason: NoReason,
    },
    /// The witness is a solution of the instance passed to `simplify`.
    DecidedYes {
        witness: Partition,
        reason: YesReason,
    },
    Reduced(SimpleForm),
}

/// An instance certified to survive all four rules, together with the
/// relabeling that produced it. Element ids in `instance` are contiguous
/// and order-preserving with respect to the original ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleForm {
    instance: SspInstance,
    element_map: BTreeMap<ElementId, ElementId>,
    kept_subsets: Vec<u32>,
    dropped_subsets: Vec<u32>,
    original_u: u32,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NotSimpleForm {
    #[error("subset {subset} has a single entry")]
    SingletonSubset { subset: u32 },
    #[error("element {element} occurs in no subset")]
    UncoveredElement { element: ElementId },
    #[error("subset {subset} equals the whole universe")]
    UniverseSubset { subset: u32 },
    #[error("subset {superset} contains subset {subset}")]
    SupersetSubset { superset: u32, subset: u32 },
    #[error("the family is empty")]
    EmptyFamily,
}

impl SimpleForm {
    /// Certifies an externally supplied instance. Fails if any of the four
    /// rules could still fire on it.
    pub fn try_from_instance(instance: SspInstance) -> Result<SimpleForm, NotSimpleForm> {
        let u = instance.universe_size();
        let subsets = instance.subsets();
        if subsets.is_empty() {
            return Err(NotSimpleForm::EmptyFamily);
        }
        for (i, subset) in subsets.iter().enumerate() {
            if subset.len() < 2 {
                return Err(NotSimpleForm::SingletonSubset {
                    subset: i as u32 + 1,
                });
            }
            if subset.len() as u32 == u {
                return Err(NotSimpleForm::UniverseSubset {
                    subset: i as u32 + 1,
                });
            }
        }
        let mut covered = vec![false; u as usize];
        for subset in subsets {
            for &e in subset {
                covered[(e - 1) as usize] = true;
            }
        }
        if let Some(e) = covered.iter().position(|&c| !c) {
            return Err(NotSimpleForm::UncoveredElement {
                element: e as u32 + 1,
            });
        }
        for j in 0..subsets.len() {
            for i in 0..subsets.len() {
                if i == j {
                    continue;
                }
                let equal = subsets[i].len() == subsets[j].len();
                if is_subset_of(&subsets[i], &subsets[j]) && (!equal || i < j) {
                    return Err(NotSimpleForm::SupersetSubset {
                        superset: j as u32 + 1,
                        subset: i as u32 + 1,
                    });
                }
            }
        }
        let s = subsets.len() as u32;
        Ok(SimpleForm {
            element_map: (1..=u).map(|e| (e, e)).collect(),
            kept_subsets: (1..=s).collect(),
            dropped_subsets: Vec::new(),
            original_u: u,
            instance,
        })
    }

    #[cfg(test)]
    pub(crate) fn from_parts(
        instance: SspInstance,
        element_map: BTreeMap<ElementId, ElementId>,
        kept_subsets: Vec<u32>,
        dropped_subsets: Vec<u32>,
        original_u: u32,
    ) -> SimpleForm {
        SimpleForm {
            instance,
            element_map,
            kept_subsets,
            dropped_subsets,
            original_u,
        }
    }

    pub fn instance(&self) -> &SspInstance {
        &self.instance
    }

    /// Original element id -> contiguous id in `instance`.
    pub fn element_map(&self) -> &BTreeMap<ElementId, ElementId> {
        &self.element_map
    }

    /// 1-based original indices of subsets that survived, in order.
    pub fn kept_subsets(&self) -> &[u32] {
        &self.kept_subsets
    }

    /// 1-based original indices of subsets removed by rules 3 and 4.
    pub fn dropped_subsets(&self) -> &[u32] {
        &self.dropped_subsets
    }

    pub fn original_universe_size(&self) -> u32 {
        self.original_u
    }

    pub fn is_identity(&self) -> bool {
        self.dropped_subsets.is_empty()
            && self.original_u == self.instance.universe_size()
            && self.element_map.iter().all(|(&a, &b)| a == b)
    }

    pub fn to_reduced_element(&self, original: ElementId) -> Option<ElementId> {
        self.element_map.get(&original).copied()
    }

    /// Panics if `reduced` is not a valid id of the reduced universe.
    pub fn to_original_element(&self, reduced: ElementId) -> ElementId {
        self.element_map
            .iter()
            .find(|(_, &new)| new == reduced)
            .map(|(&orig, _)| orig)
            .expect("reduced element id within range")
    }

    /// Original 1-based index of the `reduced_idx`-th kept subset (1-based).
    pub fn original_subset_index(&self, reduced_idx: u32) -> u32 {
        self.kept_subsets[(reduced_idx - 1) as usize]
    }

    /// Restricts a partition of the original universe to the reduced one.
    pub fn project_partition(&self, p: &Partition) -> Result<Partition, super::PartitionMismatch> {
        if p.universe_size() != self.original_u {
            return Err(super::PartitionMismatch {
                expected: self.original_u,
                got: p.universe_size(),
            });
        }
        let mut sides = vec![Side::Two; self.instance.universe_size() as usize];
        for (&orig, &new) in &self.element_map {
            sides[(new - 1) as usize] = p.side_of(orig);
        }
        Ok(Partition::from_sides(sides))
    }

    /// Extends a partition of the reduced universe to the original one.
    /// Elements removed by rule 2 default to side two; either side splits
    /// the same subsets.
    pub fn lift_partition(&self, p: &Partition) -> Result<Partition, super::PartitionMismatch> {
        if p.universe_size() != self.instance.universe_size() {
            return Err(super::PartitionMismatch {
                expected: self.instance.universe_size(),
                got: p.universe_size(),
            });
        }
        let mut sides = vec![Side::Two; self.original_u as usize];
        for (&orig, &new) in &self.element_map {
            sides[(orig - 1) as usize] = p.side_of(new);
        }
        Ok(Partition::from_sides(sides))
    }
}

fn is_subset_of(a: &[ElementId], b: &[ElementId]) -> bool {
    // both ascending
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

pub fn simplify(inst: &SspInstance) -> SimplificationResult {
    let u = inst.universe_size();
    let subsets = inst.subsets();
    let s = subsets.len();

    // Rule 1. Subsets never shrink, so a single check suffices.
    if let Some(i) = subsets.iter().position(|subset| subset.len() == 1) {
        return SimplificationResult::DecidedNo {
            reason: NoReason::SingletonSubset {
                subset: i as u32 + 1,
            },
        };
    }

    let mut kept = vec![true; s];
    let mut element_kept = vec![true; u as usize];
    loop {
        let mut fired = false;
        // Rule 3.
        for (i, subset) in subsets.iter().enumerate() {
            if kept[i] && subset.len() as u32 == u {
                kept[i] = false;
                fired = true;
            }
        }
        // Rule 4. Justifiers are the subsets still kept when the rule
        // starts; transitivity makes the outcome order-independent.
        let snapshot = kept.clone();
        for j in 0..s {
            if !kept[j] {
                continue;
            }
            for i in 0..s {
                if i == j || !snapshot[i] {
                    continue;
                }
                let equal = subsets[i].len() == subsets[j].len();
                if is_subset_of(&subsets[i], &subsets[j]) && (!equal || i < j) {
                    kept[j] = false;
                    fired = true;
                    break;
                }
            }
        }
        // Rule 2.
        let mut covered = vec![false; u as usize];
        for (i, subset) in subsets.iter().enumerate() {
            if kept[i] {
                for &e in subset {
                    covered[(e - 1) as usize] = true;
                }
            }
        }
        for e in 0..u as usize {
            if element_kept[e] && !covered[e] {
                element_kept[e] = false;
                fired = true;
            }
        }
        if !fired {
            break;
        }
    }

    let kept_idx: Vec<usize> = (0..s).filter(|&i| kept[i]).collect();
    if kept_idx.is_empty() {
        // Everything was discarded as trivially split; any two-sided
        // partition of the original universe works.
        if u >= 2 {
            let mut sides = vec![Side::Two; u as usize];
            sides[0] = Side::One;
            return SimplificationResult::DecidedYes {
                witness: Partition::from_sides(sides),
                reason: YesReason::EmptyFamily,
            };
        }
        return SimplificationResult::DecidedNo {
            reason: NoReason::UniverseTooSmall,
        };
    }

    let kept_elements: Vec<ElementId> = (1..=u)
        .filter(|&e| element_kept[(e - 1) as usize])
        .collect();
    let c_prime: usize = kept_idx.iter().map(|&i| subsets[i].len()).sum();
    if c_prime == kept_elements.len() {
        // The kept subsets are disjoint and cover the kept elements
        // exactly; splitting each one off its first entry works.
        let mut sides = vec![Side::Two; u as usize];
        for &i in &kept_idx {
            sides[(subsets[i][0] - 1) as usize] = Side::One;
        }
        return SimplificationResult::DecidedYes {
            witness: Partition::from_sides(sides),
            reason: YesReason::ExactCover,
        };
    }

    let element_map: BTreeMap<ElementId, ElementId> = kept_elements
        .iter()
        .enumerate()
        .map(|(new0, &orig)| (orig, new0 as u32 + 1))
        .collect();
    let new_subsets: Vec<Vec<ElementId>> = kept_idx
        .iter()
        .map(|&i| subsets[i].iter().map(|e| element_map[e]).collect())
        .collect();
    let reduced = SspInstance::new(kept_elements.len() as u32, new_subsets)
        .expect("relabeled instance is valid");
    SimplificationResult::Reduced(SimpleForm {
        instance: reduced,
        element_map,
        kept_subsets: kept_idx.iter().map(|&i| i as u32 + 1).collect(),
        dropped_subsets: (0..s).filter(|&i| !kept[i]).map(|i| i as u32 + 1).collect(),
        original_u: u,
    })
}
