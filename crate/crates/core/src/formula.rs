//! Unpolarized formulas: construction, classical linear negation and the
//! positive/negative polarity classification.

use std::fmt;

/// A formula of LG/CNL. Negation lives on atoms only; compound formulas
/// are negated by [`negate`], which pushes duality through the connectives.
///
/// The direction-sensitive connectives store their operands in surface
/// order: `LDiv(b, a)` is the formula `b \ a` and `CoLDiv(b, a)` is
/// `b \> a` (left coimplication).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    PosAtom(String),
    NegAtom(String),
    /// `A * B` — multiplicative conjunction (tensor)
    Tensor(Box<Formula>, Box<Formula>),
    /// `A + B` — multiplicative disjunction (par)
    Par(Box<Formula>, Box<Formula>),
    /// `A / B` — right implication
    RDiv(Box<Formula>, Box<Formula>),
    /// `B \ A` — left implication, stored `(B, A)`
    LDiv(Box<Formula>, Box<Formula>),
    /// `A </ B` — right coimplication (subtraction)
    CoRDiv(Box<Formula>, Box<Formula>),
    /// `B \> A` — left coimplication, stored `(B, A)`
    CoLDiv(Box<Formula>, Box<Formula>),
    /// `A & B` — additive conjunction
    And(Box<Formula>, Box<Formula>),
    /// `A | B` — additive disjunction
    Or(Box<Formula>, Box<Formula>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Positive => Polarity::Negative,
            Polarity::Negative => Polarity::Positive,
        }
    }
}

impl Formula {
    pub fn pos_atom(name: &str) -> Formula {
        Formula::PosAtom(name.to_string())
    }

    pub fn neg_atom(name: &str) -> Formula {
        Formula::NegAtom(name.to_string())
    }

    /// Number of connective nodes (atoms count zero). Negation preserves
    /// this, and every logical rule of the sequent calculus strictly
    /// decreases the total count over a presentation, which is what bounds
    /// backward search.
    pub fn connective_count(&self) -> usize {
        match self {
            Formula::PosAtom(_) | Formula::NegAtom(_) => 0,
            Formula::Tensor(l, r)
            | Formula::Par(l, r)
            | Formula::RDiv(l, r)
            | Formula::LDiv(l, r)
            | Formula::CoRDiv(l, r)
            | Formula::CoLDiv(l, r)
            | Formula::And(l, r)
            | Formula::Or(l, r) => 1 + l.connective_count() + r.connective_count(),
        }
    }

    /// True when the formula lies in the tensor/par/additive fragment
    /// accepted by the compact CNL calculus.
    pub fn is_compact_vocabulary(&self) -> bool {
        match self {
            Formula::PosAtom(_) | Formula::NegAtom(_) => true,
            Formula::Tensor(l, r) | Formula::Par(l, r) | Formula::And(l, r) | Formula::Or(l, r) => {
                l.is_compact_vocabulary() && r.is_compact_vocabulary()
            }
            _ => false,
        }
    }
}

/// Classical linear negation. Every binary case swaps the argument order.
pub fn negate(a: &Formula) -> Formula {
    use Formula::*;
    match a {
        PosAtom(p) => NegAtom(p.clone()),
        NegAtom(p) => PosAtom(p.clone()),
        // (A*B)^ = B^ + A^
        Tensor(l, r) => Par(Box::new(negate(r)), Box::new(negate(l))),
        // (A+B)^ = B^ * A^
        Par(l, r) => Tensor(Box::new(negate(r)), Box::new(negate(l))),
        // (A/B)^ = B^ \> A^
        RDiv(a, b) => CoLDiv(Box::new(negate(b)), Box::new(negate(a))),
        // (B\>A)^ = A^ / B^
        CoLDiv(b, a) => RDiv(Box::new(negate(a)), Box::new(negate(b))),
        // (B\A)^ = A^ </ B^
        LDiv(b, a) => CoRDiv(Box::new(negate(a)), Box::new(negate(b))),
        // (A</B)^ = B^ \ A^
        CoRDiv(a, b) => LDiv(Box::new(negate(b)), Box::new(negate(a))),
        // (A&B)^ = B^ | A^
        And(l, r) => Or(Box::new(negate(r)), Box::new(negate(l))),
        // (A|B)^ = B^ & A^
        Or(l, r) => And(Box::new(negate(r)), Box::new(negate(l))),
    }
}

/// Polarity classification: atoms `p`, tensor, both coimplications and
/// additive disjunction are positive; their duals are negative. The
/// positive connectives are exactly those whose logical rule is invertible.
pub fn polarity(a: &Formula) -> Polarity {
    use Formula::*;
    match a {
        PosAtom(_) | Tensor(..) | CoRDiv(..) | CoLDiv(..) | Or(..) => Polarity::Positive,
        NegAtom(_) | Par(..) | RDiv(..) | LDiv(..) | And(..) => Polarity::Negative,
    }
}

impl Formula {
    fn op_symbol(&self) -> Option<&'static str> {
        use Formula::*;
        match self {
            Tensor(..) => Some("*"),
            Par(..) => Some("+"),
            RDiv(..) => Some("/"),
            LDiv(..) => Some("\\"),
            CoRDiv(..) => Some("</"),
            CoLDiv(..) => Some("\\>"),
            And(..) => Some("&"),
            Or(..) => Some("|"),
            _ => None,
        }
    }

    fn children(&self) -> Option<(&Formula, &Formula)> {
        use Formula::*;
        match self {
            Tensor(l, r) | Par(l, r) | RDiv(l, r) | LDiv(l, r) | CoRDiv(l, r) | CoLDiv(l, r)
            | And(l, r) | Or(l, r) => Some((l, r)),
            _ => None,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
        match self {
            Formula::PosAtom(p) => write!(f, "{p}"),
            Formula::NegAtom(p) => write!(f, "~{p}"),
            _ => {
                let (l, r) = self.children().expect("compound");
                let op = self.op_symbol().expect("compound");
                if top {
                    l.fmt_at(f, false)?;
                    write!(f, " {op} ")?;
                    r.fmt_at(f, false)
                } else {
                    write!(f, "(")?;
                    l.fmt_at(f, false)?;
                    write!(f, " {op} ")?;
                    r.fmt_at(f, false)?;
                    write!(f, ")")
                }
            }
        }
    }
}

/// Canonical ASCII form: nested subformulas fully parenthesized, the
/// top-level connective bare.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, true)
    }
}

pub fn print_formula(a: &Formula) -> String {
    a.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::random_formula;
    use crate::parse::parse_formula;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn negate_atoms() {
        assert_eq!(negate(&t("p")), t("~p"));
        assert_eq!(negate(&t("~p")), t("p"));
    }

    #[test]
    fn negate_table() {
        // (p*q)^ = ~q + ~p
        assert_eq!(negate(&t("p * q")), t("~q + ~p"));
        // (p/q)^ = ~q \> ~p
        assert_eq!(negate(&t("p / q")), t("~q \\> ~p"));
        // (p\q)^ = ~q </ ~p   (p\q has B=p, A=q: dual is A^ </ B^)
        assert_eq!(negate(&t("p \\ q")), t("~q </ ~p"));
        // (p&q)^ = ~q | ~p
        assert_eq!(negate(&t("p & q")), t("~q | ~p"));
        // (p</q)^ = ~q \ ~p
        assert_eq!(negate(&t("p </ q")), t("~q \\ ~p"));
    }

    #[test]
    fn polarity_examples() {
        assert_eq!(polarity(&t("p")), Polarity::Positive);
        assert_eq!(polarity(&t("p + q")), Polarity::Negative);
        assert_eq!(polarity(&t("p </ q")), Polarity::Positive);
        assert_eq!(polarity(&t("p & q")), Polarity::Negative);
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            "[a-d]".prop_map(Formula::PosAtom),
            "[a-d]".prop_map(Formula::NegAtom),
        ];
        leaf.prop_recursive(5, 64, 2, |inner| {
            (0usize..8, inner.clone(), inner).prop_map(|(k, l, r)| {
                let l = Box::new(l);
                let r = Box::new(r);
                match k {
                    0 => Formula::Tensor(l, r),
                    1 => Formula::Par(l, r),
                    2 => Formula::RDiv(l, r),
                    3 => Formula::LDiv(l, r),
                    4 => Formula::CoRDiv(l, r),
                    5 => Formula::CoLDiv(l, r),
                    6 => Formula::And(l, r),
                    _ => Formula::Or(l, r),
                }
            })
        })
    }

    proptest! {
        #[test]
        fn negation_is_involutive(a in arb_formula()) {
            prop_assert_eq!(negate(&negate(&a)), a);
        }

        #[test]
        fn negation_flips_polarity(a in arb_formula()) {
            prop_assert_eq!(polarity(&negate(&a)), polarity(&a).flip());
        }

        #[test]
        fn print_parse_roundtrip(a in arb_formula()) {
            let printed = a.to_string();
            prop_assert_eq!(parse_formula(&printed).unwrap(), a);
        }
    }

    #[test]
    fn seeded_roundtrip_matches_connective_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let a = random_formula(&mut rng, 6, &["p", "q", "r", "s"]);
            let b = parse_formula(&a.to_string()).unwrap();
            assert_eq!(a, b);
            assert_eq!(negate(&a).connective_count(), a.connective_count());
        }
    }
}
