//! Partition file format: one line `<element-id> 1|2` per element, sorted
//! by element id on output.

use thiserror::Error;

use crate::ssp::{Partition, Side};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionFileError {
    #[error("line {line}: expected \"<element> 1|2\"")]
    MalformedLine { line: usize },
    #[error("line {line}: side must be 1 or 2")]
    BadSide { line: usize },
    #[error("element {element} assigned more than once")]
    DuplicateElement { element: u32 },
    #[error("element {element} out of range 1..={u}")]
    OutOfRange { element: u32, u: u32 },
    #[error("element {element} has no assignment")]
    MissingElement { element: u32 },
}

pub fn write_partition(p: &Partition) -> String {
    let mut out = String::new();
    for (element, side) in p.iter() {
        out.push_str(&format!("{element} {side}\n"));
    }
    out
}

/// Reads a total partition over `1..=universe`.
pub fn read_partition(text: &str, universe: u32) -> Result<Partition, PartitionFileError> {
    let mut sides: Vec<Option<Side>> = vec![None; universe as usize];
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_whitespace();
        let element: u32 = tok
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or(PartitionFileError::MalformedLine { line: line_no })?;
        let side = match tok.next() {
            Some("1") => Side::One,
            Some("2") => Side::Two,
            Some(_) => return Err(PartitionFileError::BadSide { line: line_no }),
            None => return Err(PartitionFileError::MalformedLine { line: line_no }),
        };
        if tok.next().is_some() {
            return Err(PartitionFileError::MalformedLine { line: line_no });
        }
        if element < 1 || element > universe {
            return Err(PartitionFileError::OutOfRange {
                element,
                u: universe,
            });
        }
        let slot = &mut sides[(element - 1) as usize];
        if slot.is_some() {
            return Err(PartitionFileError::DuplicateElement { element });
        }
        *slot = Some(side);
    }
    let mut resolved = Vec::with_capacity(universe as usize);
    for (i, side) in sides.into_iter().enumerate() {
        match side {
            Some(s) => resolved.push(s),
            None => {
                return Err(PartitionFileError::MissingElement {
                    element: i as u32 + 1,
                })
            }
        }
    }
    Ok(Partition::from_sides(resolved))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        use Side::*;
        let p = Partition::from_sides(vec![One, Two, Two, One]);
        let text = write_partition(&p);
        assert_eq!(text, "1 1\n2 2\n3 2\n4 1\n");
        assert_eq!(read_partition(&text, 4).unwrap(), p);
    }

    #[test]
    fn accepts_any_line_order() {
        let p = read_partition("2 2\n1 1\n", 2).unwrap();
        assert_eq!(p.side_of(1), Side::One);
        assert_eq!(p.side_of(2), Side::Two);
    }

    #[test]
    fn rejects_malformed_files() {
        assert_eq!(
            read_partition("1\n", 1),
            Err(PartitionFileError::MalformedLine { line: 1 })
        );
        assert_eq!(
            read_partition("1 3\n", 1),
            Err(PartitionFileError::BadSide { line: 1 })
        );
        assert_eq!(
            read_partition("1 1\n1 2\n", 1),
            Err(PartitionFileError::DuplicateElement { element: 1 })
        );
        assert_eq!(
            read_partition("2 1\n", 1),
            Err(PartitionFileError::OutOfRange { element: 2, u: 1 })
        );
        assert_eq!(
            read_partition("1 1\n", 2),
            Err(PartitionFileError::MissingElement { element: 2 })
        );
    }
}
