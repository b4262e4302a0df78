//! Structured vertex identities and their flat 1-based numbering.
//!
//! The converted graph has three vertex families: four vertices per
//! universe element, `5 + 6k` vertices per subset of size `k`, and two
//! connector vertices. Flat ids lay these out as the element blocks in
//! element order, then the subset blocks in subset order, then the two
//! connectors.

use std::fmt;

use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    /// Slot `slot` in 1..=4 of the block for universe element `element`.
    U { element: u32, slot: u32 },
    /// Slot `slot` in 1..=5+6k of the block for subset `subset` (1-based).
    S { subset: u32, slot: u32 },
    /// Connector vertex 1 or 2.
    C { slot: u32 },
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::U { element, slot } => write!(f, "U {element} {slot}"),
            VertexLabel::S { subset, slot } => write!(f, "S {subset} {slot}"),
            VertexLabel::C { slot } => write!(f, "C {slot}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelError {
    #[error("label {0:?} out of range for this layout")]
    LabelOutOfRange(VertexLabel),
    #[error("flat id {0} out of range 1..={1}")]
    IdOutOfRange(VertexId, u32),
}

/// The flat-id layout of a converted graph: a bijection between structured
/// labels and ids `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    u: u32,
    subset_sizes: Vec<u32>,
    /// Slots preceding each subset block, relative to the end of the
    /// element blocks; one trailing entry holds the total.
    block_offsets: Vec<u32>,
    n: u32,
}

impl Layout {
    pub fn new(u: u32, subset_sizes: Vec<u32>) -> Layout {
        let mut block_offsets = Vec::with_capacity(subset_sizes.len() + 1);
        let mut acc = 0u32;
        for &k in &subset_sizes {
            block_offsets.push(acc);
            acc += 5 + 6 * k;
        }
        block_offsets.push(acc);
        let n = 4 * u + acc + 2;
        Layout {
            u,
            subset_sizes,
            block_offsets,
            n,
        }
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn universe_size(&self) -> u32 {
        self.u
    }

    pub fn subset_count(&self) -> u32 {
        self.subset_sizes.len() as u32
    }

    /// Size of the 1-based `subset`. Panics if out of range.
    pub fn subset_size(&self, subset: u32) -> u32 {
        self.subset_sizes[(subset - 1) as usize]
    }

    /// Slots in the block of the 1-based `subset` (5 + 6k).
    pub fn block_len(&self, subset: u32) -> u32 {
        5 + 6 * self.subset_size(subset)
    }

    pub fn flat_id(&self, label: VertexLabel) -> Result<VertexId, LabelError> {
        match label {
            VertexLabel::U { element, slot } => {
                if element < 1 || element > self.u || !(1..=4).contains(&slot) {
                    return Err(LabelError::LabelOutOfRange(label));
                }
                Ok(4 * (element - 1) + slot)
            }
            VertexLabel::S { subset, slot } => {
                if subset < 1 || subset > self.subset_count() {
                    return Err(LabelError::LabelOutOfRange(label));
                }
                if slot < 1 || slot > self.block_len(subset) {
                    return Err(LabelError::LabelOutOfRange(label));
                }
                Ok(4 * self.u + self.block_offsets[(subset - 1) as usize] + slot)
            }
            VertexLabel::C { slot } => {
                if !(1..=2).contains(&slot) {
                    return Err(LabelError::LabelOutOfRange(label));
                }
                Ok(self.n - 2 + slot)
            }
        }
    }

    pub fn label_of(&self, id: VertexId) -> Result<VertexLabel, LabelError> {
        if id < 1 || id > self.n {
            return Err(LabelError::IdOutOfRange(id, self.n));
        }
        let zero = id - 1;
        if zero < 4 * self.u {
            return Ok(VertexLabel::U {
                element: zero / 4 + 1,
                slot: zero % 4 + 1,
            });
        }
        let rel = zero - 4 * self.u;
        let total = *self.block_offsets.last().unwrap();
        if rel < total {
            // Last block whose offset is <= rel.
            let block = self
                .block_offsets
                .partition_point(|&off| off <= rel)
                .saturating_sub(1);
            return Ok(VertexLabel::S {
                subset: block as u32 + 1,
                slot: rel - self.block_offsets[block] + 1,
            });
        }
        Ok(VertexLabel::C {
            slot: rel - total + 1,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_1_layout() -> Layout {
        // u = 4 with subset sizes 3 and 2.
        Layout::new(4, vec![3, 2])
    }

    #[test]
    fn first_slot_is_flat_one() {
        let l = example_1_layout();
        assert_eq!(
            l.flat_id(VertexLabel::U {
                element: 1,
                slot: 1
            }),
            Ok(1)
        );
    }

    #[test]
    fn example_1_offsets() {
        let l = example_1_layout();
        assert_eq!(l.vertex_count(), 58);
        assert_eq!(l.flat_id(VertexLabel::S { subset: 1, slot: 1 }), Ok(17));
        assert_eq!(l.flat_id(VertexLabel::S { subset: 2, slot: 1 }), Ok(40));
        assert_eq!(l.flat_id(VertexLabel::C { slot: 1 }), Ok(57));
        assert_eq!(l.flat_id(VertexLabel::C { slot: 2 }), Ok(58));
    }

    #[test]
    fn label_id_bijection() {
        let l = Layout::new(3, vec![2, 4, 3]);
        for id in 1..=l.vertex_count() {
            let label = l.label_of(id).unwrap();
            assert_eq!(l.flat_id(label), Ok(id));
        }
    }

    #[test]
    fn out_of_range_rejected() {
        let l = example_1_layout();
        assert!(l
            .flat_id(VertexLabel::U {
                element: 5,
                slot: 1
            })
            .is_err());
        assert!(l
            .flat_id(VertexLabel::U {
                element: 1,
                slot: 5
            })
            .is_err());
        assert!(l
            .flat_id(VertexLabel::S {
                subset: 1,
                slot: 24
            })
            .is_err());
        assert!(l.flat_id(VertexLabel::S { subset: 3, slot: 1 }).is_err());
        assert!(l.flat_id(VertexLabel::C { slot: 3 }).is_err());
        assert!(l.label_of(0).is_err());
        assert!(l.label_of(59).is_err());
    }
}
