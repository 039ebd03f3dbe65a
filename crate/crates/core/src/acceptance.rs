//! Emerson-Lei acceptance formulas over transition colors.

use alloc::boxed::Box;
use core::fmt;

use crate::bitset::BitSet;
use crate::Color;

/// `tt | ff | Fin(x) | Inf(x) | a & b | a | b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Acceptance {
    True,
    False,
    Fin(Color),
    Inf(Color),
    And(Box<Acceptance>, Box<Acceptance>),
    Or(Box<Acceptance>, Box<Acceptance>),
}

impl Acceptance {
    pub fn and(self, rhs: Acceptance) -> Acceptance {
        Acceptance::And(Box::new(self), Box::new(rhs))
    }

    pub fn or(self, rhs: Acceptance) -> Acceptance {
        Acceptance::Or(Box::new(self), Box::new(rhs))
    }

    /// Left-nested disjunction; `ff` for an empty iterator.
    pub fn any<I: IntoIterator<Item = Acceptance>>(parts: I) -> Acceptance {
        parts
            .into_iter()
            .reduce(Acceptance::or)
            .unwrap_or(Acceptance::False)
    }

    /// Left-nested conjunction; `tt` for an empty iterator.
    pub fn all<I: IntoIterator<Item = Acceptance>>(parts: I) -> Acceptance {
        parts
            .into_iter()
            .reduce(Acceptance::and)
            .unwrap_or(Acceptance::True)
    }

    /// Does the set of colors seen infinitely often satisfy the formula?
    pub fn eval(&self, inf: &BitSet) -> bool {
        match self {
            Acceptance::True => true,
            Acceptance::False => false,
            Acceptance::Fin(x) => !inf.contains(*x),
            Acceptance::Inf(x) => inf.contains(*x),
            Acceptance::And(l, r) => l.eval(inf) && r.eval(inf),
            Acceptance::Or(l, r) => l.eval(inf) || r.eval(inf),
        }
    }

    /// The dual formula: swaps tt/ff, Fin/Inf and &/|. Its value on any color
    /// set is the negation of the original's.
    pub fn dual(&self) -> Acceptance {
        match self {
            Acceptance::True => Acceptance::False,
            Acceptance::False => Acceptance::True,
            Acceptance::Fin(x) => Acceptance::Inf(*x),
            Acceptance::Inf(x) => Acceptance::Fin(*x),
            Acceptance::And(l, r) => l.dual().or(r.dual()),
            Acceptance::Or(l, r) => l.dual().and(r.dual()),
        }
    }

    pub fn max_color(&self) -> Option<Color> {
        match self {
            Acceptance::True | Acceptance::False => None,
            Acceptance::Fin(x) | Acceptance::Inf(x) => Some(*x),
            Acceptance::And(l, r) | Acceptance::Or(l, r) => l.max_color().max(r.max_color()),
        }
    }

    /// Flattens nested disjunctions into `out`, left to right.
    pub fn disjuncts<'a>(&'a self, out: &mut alloc::vec::Vec<&'a Acceptance>) {
        match self {
            Acceptance::Or(l, r) => {
                l.disjuncts(out);
                r.disjuncts(out);
            }
            other => out.push(other),
        }
    }

    /// Flattens nested conjunctions into `out`, left to right.
    pub fn conjuncts<'a>(&'a self, out: &mut alloc::vec::Vec<&'a Acceptance>) {
        match self {
            Acceptance::And(l, r) => {
                l.conjuncts(out);
                r.conjuncts(out);
            }
            other => out.push(other),
        }
    }
}

/// HOA syntax. Disjunctions nested under a conjunction and conjunctions nested
/// under a disjunction are parenthesized; same-operator chains are not.
impl fmt::Display for Acceptance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Acceptance::True => f.write_str("t"),
            Acceptance::False => f.write_str("f"),
            Acceptance::Fin(x) => write!(f, "Fin({x})"),
            Acceptance::Inf(x) => write!(f, "Inf({x})"),
            Acceptance::And(l, r) => {
                write_operand(f, l, matches!(**l, Acceptance::Or(..)))?;
                f.write_str(" & ")?;
                write_operand(
                    f,
                    r,
                    !matches!(
                        **r,
                        Acceptance::True
                            | Acceptance::False
                            | Acceptance::Fin(_)
                            | Acceptance::Inf(_)
                    ),
                )
            }
            Acceptance::Or(l, r) => {
                write_operand(f, l, matches!(**l, Acceptance::And(..)))?;
                f.write_str(" | ")?;
                write_operand(
                    f,
                    r,
                    !matches!(
                        **r,
                        Acceptance::True
                            | Acceptance::False
                            | Acceptance::Fin(_)
                            | Acceptance::Inf(_)
                    ),
                )
            }
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, a: &Acceptance, paren: bool) -> fmt::Result {
    if paren {
        write!(f, "({a})")
    } else {
        write!(f, "{a}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn set(xs: &[u32]) -> BitSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn satisfaction_table() {
        assert!(Acceptance::Fin(1).eval(&set(&[2])));
        assert!(!Acceptance::Inf(0)
            .and(Acceptance::Fin(1))
            .eval(&set(&[0, 1])));
        assert!(Acceptance::True.eval(&BitSet::new()));
        assert!(!Acceptance::False.eval(&BitSet::new()));
        assert!(Acceptance::Inf(0)
            .or(Acceptance::Fin(0))
            .eval(&BitSet::new()));
    }

    #[test]
    fn display_parenthesizes_mixed_operators() {
        let a = Acceptance::Fin(1)
            .or(Acceptance::Fin(3).and(Acceptance::Inf(4)))
            .or(Acceptance::Fin(3)
                .and(Acceptance::Fin(5))
                .and(Acceptance::Inf(6)));
        assert_eq!(
            a.to_string(),
            "Fin(1) | (Fin(3) & Inf(4)) | (Fin(3) & Fin(5) & Inf(6))"
        );
        let b = Acceptance::Inf(0).and(Acceptance::Fin(1).or(Acceptance::Inf(2)));
        assert_eq!(b.to_string(), "Inf(0) & (Fin(1) | Inf(2))");
    }

    fn arb_formula() -> impl Strategy<Value = Acceptance> {
        let leaf = prop_oneof![
            Just(Acceptance::True),
            Just(Acceptance::False),
            (0u32..6).prop_map(Acceptance::Fin),
            (0u32..6).prop_map(Acceptance::Inf),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| l.and(r)),
                (inner.clone(), inner).prop_map(|(l, r)| l.or(r)),
            ]
        })
    }

    // Independent reference: evaluate via the set of satisfying color subsets
    // represented as a bitmask over colors 0..6.
    fn reference(a: &Acceptance, mask: u32) -> bool {
        match a {
            Acceptance::True => true,
            Acceptance::False => false,
            Acceptance::Fin(x) => mask & (1 << x) == 0,
            Acceptance::Inf(x) => mask & (1 << x) != 0,
            Acceptance::And(l, r) => reference(l, mask) && reference(r, mask),
            Acceptance::Or(l, r) => reference(l, mask) || reference(r, mask),
        }
    }

    proptest! {
        #[test]
        fn eval_agrees_with_reference(a in arb_formula(), mask in 0u32..64) {
            let m: BitSet = (0..6).filter(|x| mask & (1 << x) != 0).collect();
            prop_assert_eq!(a.eval(&m), reference(&a, mask));
        }

        #[test]
        fn dual_negates(a in arb_formula(), mask in 0u32..64) {
            let m: BitSet = (0..6).filter(|x| mask & (1 << x) != 0).collect();
            prop_assert_eq!(a.dual().eval(&m), !a.eval(&m));
        }
    }
}
