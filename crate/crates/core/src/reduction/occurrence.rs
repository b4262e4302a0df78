//! Per-element occurrence tables over the subset family.
//!
//! For element `e`, `subsets_containing(e)` lists the 1-based indices of
//! the subsets containing it, ascending, and `positions(e)` the aligned
//! 1-based position of `e` within each of those subsets.

use crate::ssp::SimpleForm;

use super::build::ConstructionError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceTables {
    subsets_of: Vec<Vec<u32>>,
    positions_of: Vec<Vec<u32>>,
}

impl OccurrenceTables {
    /// The table F for `element` (1-based subset indices, ascending).
    pub fn subsets_containing(&self, element: u32) -> &[u32] {
        &self.subsets_of[(element - 1) as usize]
    }

    /// The table R for `element`, aligned with `subsets_containing`.
    pub fn positions(&self, element: u32) -> &[u32] {
        &self.positions_of[(element - 1) as usize]
    }

    /// Occurrence count f of `element`.
    pub fn occurrence_count(&self, element: u32) -> usize {
        self.subsets_of[(element - 1) as usize].len()
    }
}

pub fn occurrence_tables(simple: &SimpleForm) -> Result<OccurrenceTables, ConstructionError> {
    let inst = simple.instance();
    let u = inst.universe_size() as usize;
    let mut subsets_of = vec![Vec::new(); u];
    let mut positions_of = vec![Vec::new(); u];
    for (i, subset) in inst.subsets().iter().enumerate() {
        for (j, &e) in subset.iter().enumerate() {
            subsets_of[(e - 1) as usize].push(i as u32 + 1);
            positions_of[(e - 1) as usize].push(j as u32 + 1);
        }
    }
    if let Some(e) = subsets_of.iter().position(|f| f.is_empty()) {
        return Err(ConstructionError::UncoveredElement(e as u32 + 1));
    }
    Ok(OccurrenceTables {
        subsets_of,
        positions_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ssp::{SimpleForm, SspInstance};
    use std::collections::BTreeMap;

    fn simple(u: u32, subsets: &[&[u32]]) -> SimpleForm {
        let inst = SspInstance::new(u, subsets.iter().map(|s| s.to_vec()).collect()).unwrap();
        let s = inst.subset_count() as u32;
        SimpleForm::from_parts(
            inst,
            (1..=u).map(|e| (e, e)).collect::<BTreeMap<_, _>>(),
            (1..=s).collect(),
            Vec::new(),
            u,
        )
    }

    #[test]
    fn worked_example_tables() {
        let sf = simple(6, &[&[1, 3, 6], &[2, 3, 4], &[2, 4, 6], &[1, 2, 5]]);
        let occ = occurrence_tables(&sf).unwrap();
        assert_eq!(occ.subsets_containing(1), &[1, 4]);
        assert_eq!(occ.positions(1), &[1, 1]);
        assert_eq!(occ.subsets_containing(2), &[2, 3, 4]);
        assert_eq!(occ.positions(2), &[1, 1, 2]);
        assert_eq!(occ.occurrence_count(6), 2);
    }

    #[test]
    fn single_subset_tables() {
        let sf = simple(2, &[&[1, 2]]);
        let occ = occurrence_tables(&sf).unwrap();
        assert_eq!(occ.subsets_containing(1), &[1]);
        assert_eq!(occ.positions(1), &[1]);
        assert_eq!(occ.subsets_containing(2), &[1]);
        assert_eq!(occ.positions(2), &[2]);
    }

    #[test]
    fn uncovered_element_is_an_error() {
        let sf = simple(3, &[&[1, 2]]);
        assert_eq!(
            occurrence_tables(&sf),
            Err(ConstructionError::UncoveredElement(3))
        );
    }
}
