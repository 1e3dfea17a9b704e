//! The three truth values and the connective tables shared by both logics.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A three-valued truth value. The derived order is the truth order
/// `False < Unknown < True`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TruthValue {
    False,
    Unknown,
    True,
}

use TruthValue::*;

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [True, Unknown, False];

    pub fn is_true(self) -> bool {
        self == True
    }

    /// Strong negation `∼`: swaps true and false, keeps unknown.
    pub fn strong_neg(self) -> Self {
        match self {
            True => False,
            Unknown => Unknown,
            False => True,
        }
    }

    /// Weak (default) negation `¬`: true unless the argument is true.
    pub fn weak_neg(self) -> Self {
        match self {
            True => False,
            Unknown | False => True,
        }
    }

    pub fn and(self, other: Self) -> Self {
        self.min(other)
    }

    pub fn or(self, other: Self) -> Self {
        self.max(other)
    }

    /// Material implication `head ←CL body`: the head's value when the body
    /// is true, otherwise true.
    pub fn classical_implied_by(self, body: Self) -> Self {
        if body == True {
            self
        } else {
            True
        }
    }

    /// Łukasiewicz implication `head ←Ł body`, i.e. `min(1, 1 - body + head)`
    /// on the values `{0, ½, 1}`.
    pub fn lukasiewicz_implied_by(self, body: Self) -> Self {
        match (self.rank() + 2).saturating_sub(body.rank()) {
            0 => False,
            1 => Unknown,
            _ => True,
        }
    }

    fn rank(self) -> u8 {
        match self {
            False => 0,
            Unknown => 1,
            True => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            True => "true",
            Unknown => "unknown",
            False => "false",
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Rows are the head, columns the body, both in the order ⊤, U, ⊥.
    const CLASSICAL: [[TruthValue; 3]; 3] = [
        [True, True, True],
        [Unknown, True, True],
        [False, True, True],
    ];
    const LUKASIEWICZ: [[TruthValue; 3]; 3] = [
        [True, True, True],
        [Unknown, True, True],
        [False, Unknown, True],
    ];
    const AND: [[TruthValue; 3]; 3] = [
        [True, Unknown, False],
        [Unknown, Unknown, False],
        [False, False, False],
    ];
    const OR: [[TruthValue; 3]; 3] = [
        [True, True, True],
        [True, Unknown, Unknown],
        [True, Unknown, False],
    ];

    #[test]
    fn binary_tables() {
        for (r, head) in TruthValue::ALL.into_iter().enumerate() {
            for (c, body) in TruthValue::ALL.into_iter().enumerate() {
                assert_eq!(head.classical_implied_by(body), CLASSICAL[r][c]);
                assert_eq!(head.lukasiewicz_implied_by(body), LUKASIEWICZ[r][c]);
                assert_eq!(head.and(body), AND[r][c]);
                assert_eq!(head.or(body), OR[r][c]);
            }
        }
    }

    #[test]
    fn unary_tables() {
        assert_eq!(
            TruthValue::ALL.map(TruthValue::weak_neg),
            [False, True, True]
        );
        assert_eq!(
            TruthValue::ALL.map(TruthValue::strong_neg),
            [False, Unknown, True]
        );
    }

    #[test]
    fn biconditional_tables() {
        let cl = [
            [True, Unknown, False],
            [Unknown, True, True],
            [False, True, True],
        ];
        let luk = [
            [True, Unknown, False],
            [Unknown, True, Unknown],
            [False, Unknown, True],
        ];
        for (r, x) in TruthValue::ALL.into_iter().enumerate() {
            for (c, y) in TruthValue::ALL.into_iter().enumerate() {
                let both_cl = x.classical_implied_by(y).and(y.classical_implied_by(x));
                let both_l = x.lukasiewicz_implied_by(y).and(y.lukasiewicz_implied_by(x));
                assert_eq!(both_cl, cl[r][c], "{x} <->CL {y}");
                assert_eq!(both_l, luk[r][c], "{x} <->L {y}");
            }
        }
    }
}
