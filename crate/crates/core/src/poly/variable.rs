use std::fmt;

use serde::{Deserialize, Serialize};

/// Variable classes, in increasing order. Every free variable sorts below
/// every dependent one; auxiliary variables (Rabinowitsch / saturation
/// unknowns) sort above both.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VarClass {
    Free,
    Dependent,
    Aux,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Variable {
    pub class: VarClass,
    pub index: u32,
}

impl Variable {
    pub const fn free(index: u32) -> Self {
        Variable { class: VarClass::Free, index }
    }

    pub const fn dep(index: u32) -> Self {
        Variable { class: VarClass::Dependent, index }
    }

    pub const fn aux(index: u32) -> Self {
        Variable { class: VarClass::Aux, index }
    }

    pub fn is_free(&self) -> bool {
        self.class == VarClass::Free
    }

    pub fn is_dependent(&self) -> bool {
        self.class == VarClass::Dependent
    }

    fn prefix(&self) -> char {
        match self.class {
            VarClass::Free => 'u',
            VarClass::Dependent => 'x',
            VarClass::Aux => 'z',
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.prefix(), self.index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_below_dependent_below_aux() {
        assert!(Variable::free(100) < Variable::dep(0));
        assert!(Variable::dep(100) < Variable::aux(0));
        assert!(Variable::free(1) < Variable::free(2));
        assert!(Variable::dep(1) < Variable::dep(2));
    }

    #[test]
    fn display() {
        assert_eq!(Variable::free(3).to_string(), "u3");
        assert_eq!(Variable::dep(12).to_string(), "x12");
        assert_eq!(Variable::aux(0).to_string(), "z0");
    }
}
