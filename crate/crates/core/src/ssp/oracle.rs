//! Brute-force SSP decision by enumerating all two-sided assignments.

use thiserror::Error;

use super::instance::{Partition, Side, SspInstance};

/// Largest universe the enumeration accepts (2^u assignments).
pub const BRUTE_FORCE_MAX_UNIVERSE: u32 = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("universe size {0} exceeds the enumeration budget (max {BRUTE_FORCE_MAX_UNIVERSE})")]
    UniverseTooLarge(u32),
}

/// Exhaustively searches for a solution, fixing element 1 to side one to
/// break the swap symmetry. Returns the lexicographically first solution
/// over the side sequence (side(1), ..., side(u)) with One < Two, or `None`
/// when the instance has no solution.
pub fn brute_force_ssp(inst: &SspInstance) -> Result<Option<Partition>, OracleError> {
    let u = inst.universe_size();
    if u > BRUTE_FORCE_MAX_UNIVERSE {
        return Err(OracleError::UniverseTooLarge(u));
    }
    if u < 2 {
        return Ok(None);
    }
    // Bit (u - e) of the mask carries the side of element e (set = Two);
    // element 1 rides bit u-1, which stays clear for masks below 2^(u-1).
    // Ascending masks enumerate assignments in lexicographic order.
    for mask in 1u32..(1u32 << (u - 1)) {
        let splits_all = inst.subsets().iter().all(|subset| {
            let mut any_one = false;
            let mut any_two = false;
            for &e in subset {
                if mask >> (u - e) & 1 == 1 {
                    any_two = true;
                } else {
                    any_one = true;
                }
            }
            any_one && any_two
        });
        if splits_all {
            let sides = (1..=u)
                .map(|e| {
                    if mask >> (u - e) & 1 == 1 {
                        Side::Two
                    } else {
                        Side::One
                    }
                })
                .collect();
            return Ok(Some(Partition::from_sides(sides)));
        }
    }
    Ok(None)
}
