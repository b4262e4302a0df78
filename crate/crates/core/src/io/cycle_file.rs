//! Cycle file format: one line of space-separated flat vertex ids, stored
//! in the canonical rotation starting at vertex 1.

use thiserror::Error;

use crate::solver::Cycle;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleFileError {
    #[error("empty cycle file")]
    Empty,
    #[error("invalid vertex token {token:?}")]
    BadInteger { token: String },
    #[error("cycle does not contain vertex 1")]
    MissingStartVertex,
}

pub fn write_cycle(cycle: &Cycle) -> String {
    let ids: Vec<String> = cycle.order().iter().map(|v| v.to_string()).collect();
    let mut out = ids.join(" ");
    out.push('\n');
    out
}

pub fn read_cycle(text: &str) -> Result<Cycle, CycleFileError> {
    let order: Vec<u32> = text
        .split_whitespace()
        .map(|tok| {
            tok.parse().map_err(|_| CycleFileError::BadInteger {
                token: tok.to_string(),
            })
        })
        .collect::<Result<_, _>>()?;
    if order.is_empty() {
        return Err(CycleFileError::Empty);
    }
    Cycle::new(order)
        .rotated_to_start()
        .ok_or(CycleFileError::MissingStartVertex)
}
