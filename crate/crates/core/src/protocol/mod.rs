//! Construction protocols: the ordered construction steps of a conjecture
//! plus the goal to prove, and the line-oriented text format they are
//! written in.

mod ast;
mod parser;

pub use ast::*;
pub use parser::parse_protocol;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProtocolError {
    #[error("line {line}, column {col}: expected {expected}")]
    Syntax { line: usize, col: usize, expected: String },
    #[error("line {line}: undefined point '{label}'")]
    UndefinedLabel { label: String, line: usize },
    #[error("line {line}: point '{label}' is already declared")]
    DuplicateLabel { label: String, line: usize },
    #[error("line {line}: missing 'prove' statement")]
    MissingGoal { line: usize },
    #[error("a protocol needs at least one free point")]
    NoFreePoint,
}

/// Non-fatal findings about a parsed protocol.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Warning {
    /// A point that no later step and not the goal refers to.
    UnusedPoint(Label),
}

impl std::fmt::Display for Warning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Warning::UnusedPoint(l) => write!(f, "point {l} is never used"),
        }
    }
}

pub fn validate(p: &ConstructionProtocol) -> Vec<Warning> {
    let mut used: HashSet<&Label> = HashSet::new();
    for s in &p.steps {
        used.extend(s.kind.references());
    }
    used.extend(p.goal.references());
    p.steps
        .iter()
        .filter(|s| !used.contains(&s.label))
        .map(|s| Warning::UnusedPoint(s.label.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        let mid = "point A free\npoint B free\npoint C free\npoint B1 midpoint A C\n\
                   point C1 midpoint A B\nprove parallel (line B1 C1) (line B C)\n";
        assert!(validate(&parse_protocol(mid).unwrap()).is_empty());

        let unused = "point A free\npoint B free\npoint C free\npoint D free\n\
                      point M midpoint A B\nprove collinear A M C\n";
        assert_eq!(
            validate(&parse_protocol(unused).unwrap()),
            vec![Warning::UnusedPoint("D".into())]
        );

        let ortho = "point A free\npoint B free\npoint C free\n\
                     point H intersect (perp A (line B C)) (perp B (line A C))\n\
                     prove perpendicular (line C H) (line A B)\n";
        assert!(validate(&parse_protocol(ortho).unwrap()).is_empty());
    }
}
