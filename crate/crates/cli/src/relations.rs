//! Line-based text format for relation systems.
//!
//! ```text
//! arcs 3 circles 0
//! X over 0 under 1 2
//! X over 2 under 0 1
//! X over 1 under 2 0
//! ```
//!
//! The header gives the arc count and the number of free circles; each
//! following line is one crossing. Blank lines are ignored when parsing.

use std::fmt::Write as _;

use paradromic_core::{Crossing, RelationSystem};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing header line `arcs N circles C`")]
    MissingHeader,
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error(transparent)]
    Invalid(#[from] paradromic_core::Error),
}

pub fn to_text(sys: &RelationSystem) -> String {
    let mut out = String::new();
    writeln!(out, "arcs {} circles {}", sys.arc_count(), sys.free_circles()).unwrap();
    for c in sys.crossings() {
        writeln!(out, "X over {} under {} {}", c.over, c.under_a, c.under_b).unwrap();
    }
    out
}

pub fn from_text(text: &str) -> Result<RelationSystem, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let h: Vec<&str> = header.split_whitespace().collect();
    let (arcs, circles) = match h.as_slice() {
        ["arcs", a, "circles", c] => (number(hline, a)?, number(hline, c)?),
        _ => return Err(ParseError::MissingHeader),
    };
    let mut crossings = Vec::new();
    for (line, l) in lines {
        let t: Vec<&str> = l.split_whitespace().collect();
        match t.as_slice() {
            ["X", "over", o, "under", a, b] => {
                crossings.push(Crossing::new(number(line, o)?, number(line, a)?, number(line, b)?));
            }
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    reason: format!("expected `X over a under b c`, got `{}`", l),
                })
            }
        }
    }
    Ok(RelationSystem::new(arcs, crossings, circles)?)
}

fn number(line: usize, s: &str) -> Result<usize, ParseError> {
    s.parse().map_err(|_| ParseError::Malformed { line, reason: format!("`{}` is not a count", s) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use paradromic_core::linkrel::paradrome_relations;

    #[test]
    fn round_trips_generated_systems() {
        for m in 0..6 {
            for n in 1..6 {
                let sys = paradrome_relations(m, n).unwrap();
                assert_eq!(from_text(&to_text(&sys)).unwrap(), sys);
            }
        }
    }

    #[test]
    fn lone_circle() {
        assert_eq!(to_text(&RelationSystem::circles(1)), "arcs 0 circles 1\n");
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(from_text(""), Err(ParseError::MissingHeader));
        assert_eq!(from_text("arcs x circles 0").unwrap_err().to_string(), "line 1: `x` is not a count");
        assert!(matches!(
            from_text("arcs 1 circles 0\nX over 0 under 0"),
            Err(ParseError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            from_text("arcs 1 circles 0\nX over 0 under 0 1"),
            Err(ParseError::Invalid(_))
        ));
    }
}
