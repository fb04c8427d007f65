//! Polarized formulas with shift connectives, the shift-decoration
//! translation, the forgetful maps, and a checker for the polarized
//! sequent calculus (with cut).
//!
//! Formulas come in two sorts. The shifts mediate: `_N` (down) is
//! positive, `^P` (up) is negative. Decoration translates an unpolarized
//! formula by inserting the minimal shifts forced by the sort discipline,
//! so no `_^P` or `^_N` ever appears.

use crate::formula::{polarity, Formula, Polarity};
use crate::structure::{Presentation, Structure};
use std::fmt;

/// Positive-sorted formulas.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosFormula {
    Atom(String),
    /// `P * Q`
    Tensor(Box<PosFormula>, Box<PosFormula>),
    /// `P </ N`
    CoRDiv(Box<PosFormula>, Box<NegFormula>),
    /// `N \> P`
    CoLDiv(Box<NegFormula>, Box<PosFormula>),
    /// `P | Q`
    Or(Box<PosFormula>, Box<PosFormula>),
    /// `_N`
    Down(Box<NegFormula>),
}

/// Negative-sorted formulas.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NegFormula {
    /// `~p`
    Atom(String),
    /// `M + N`
    Par(Box<NegFormula>, Box<NegFormula>),
    /// `Q \ M`
    LDiv(Box<PosFormula>, Box<NegFormula>),
    /// `M / Q`
    RDiv(Box<NegFormula>, Box<PosFormula>),
    /// `M & N`
    And(Box<NegFormula>, Box<NegFormula>),
    /// `^P`
    Up(Box<PosFormula>),
}

/// A polarized formula of either sort.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolFormula {
    Pos(PosFormula),
    Neg(NegFormula),
}

/// Sort-flipping involution on polarized formulas.
pub fn pol_negate(x: &PolFormula) -> PolFormula {
    match x {
        PolFormula::Pos(p) => PolFormula::Neg(negate_pos(p)),
        PolFormula::Neg(n) => PolFormula::Pos(negate_neg(n)),
    }
}

pub fn negate_pos(p: &PosFormula) -> NegFormula {
    use PosFormula::*;
    match p {
        Atom(a) => NegFormula::Atom(a.clone()),
        // (P*Q)^ = Q^ + P^
        Tensor(l, r) => NegFormula::Par(Box::new(negate_pos(r)), Box::new(negate_pos(l))),
        // (P</N)^ = N^ \ P^
        CoRDiv(p, n) => NegFormula::LDiv(Box::new(negate_neg(n)), Box::new(negate_pos(p))),
        // (N\>P)^ = P^ / N^
        CoLDiv(n, p) => NegFormula::RDiv(Box::new(negate_pos(p)), Box::new(negate_neg(n))),
        // (P|Q)^ = Q^ & P^
        Or(l, r) => NegFormula::And(Box::new(negate_pos(r)), Box::new(negate_pos(l))),
        // (_N)^ = ^(N^)
        Down(n) => NegFormula::Up(Box::new(negate_neg(n))),
    }
}

pub fn negate_neg(n: &NegFormula) -> PosFormula {
    use NegFormula::*;
    match n {
        Atom(a) => PosFormula::Atom(a.clone()),
        // (M+N)^ = N^ * M^
        Par(l, r) => PosFormula::Tensor(Box::new(negate_neg(r)), Box::new(negate_neg(l))),
        // (Q\M)^ = M^ </ Q^
        LDiv(q, m) => PosFormula::CoRDiv(Box::new(negate_neg(m)), Box::new(negate_pos(q))),
        // (M/Q)^ = Q^ \> M^
        RDiv(m, q) => PosFormula::CoLDiv(Box::new(negate_pos(q)), Box::new(negate_neg(m))),
        // (M&N)^ = N^ | M^
        And(l, r) => PosFormula::Or(Box::new(negate_neg(r)), Box::new(negate_neg(l))),
        // (^P)^ = _(P^)
        Up(p) => PosFormula::Down(Box::new(negate_pos(p))),
    }
}

fn coerce_pos(x: PolFormula) -> PosFormula {
    match x {
        PolFormula::Pos(p) => p,
        PolFormula::Neg(n) => PosFormula::Down(Box::new(n)),
    }
}

fn coerce_neg(x: PolFormula) -> NegFormula {
    match x {
        PolFormula::Neg(n) => n,
        PolFormula::Pos(p) => NegFormula::Up(Box::new(p)),
    }
}

/// Shift decoration: translate an unpolarized formula, inserting a shift
/// exactly where a child's polarity disagrees with the connective's sort
/// discipline. The result's sort equals the input's polarity, and no
/// vacuous `_^`/`^_` pair is ever produced.
pub fn decorate(a: &Formula) -> PolFormula {
    use Formula::*;
    match a {
        PosAtom(p) => PolFormula::Pos(PosFormula::Atom(p.clone())),
        NegAtom(p) => PolFormula::Neg(NegFormula::Atom(p.clone())),
        Tensor(l, r) => PolFormula::Pos(PosFormula::Tensor(
            Box::new(coerce_pos(decorate(l))),
            Box::new(coerce_pos(decorate(r))),
        )),
        CoRDiv(l, r) => PolFormula::Pos(PosFormula::CoRDiv(
            Box::new(coerce_pos(decorate(l))),
            Box::new(coerce_neg(decorate(r))),
        )),
        CoLDiv(l, r) => PolFormula::Pos(PosFormula::CoLDiv(
            Box::new(coerce_neg(decorate(l))),
            Box::new(coerce_pos(decorate(r))),
        )),
        Or(l, r) => PolFormula::Pos(PosFormula::Or(
            Box::new(coerce_pos(decorate(l))),
            Box::new(coerce_pos(decorate(r))),
        )),
        Par(l, r) => PolFormula::Neg(NegFormula::Par(
            Box::new(coerce_neg(decorate(l))),
            Box::new(coerce_neg(decorate(r))),
        )),
        LDiv(l, r) => PolFormula::Neg(NegFormula::LDiv(
            Box::new(coerce_pos(decorate(l))),
            Box::new(coerce_neg(decorate(r))),
        )),
        RDiv(l, r) => PolFormula::Neg(NegFormula::RDiv(
            Box::new(coerce_neg(decorate(l))),
            Box::new(coerce_pos(decorate(r))),
        )),
        And(l, r) => PolFormula::Neg(NegFormula::And(
            Box::new(coerce_neg(decorate(l))),
            Box::new(coerce_neg(decorate(r))),
        )),
    }
}

/// Forgetful map: erase shifts, keep connectives.
pub fn forget(x: &PolFormula) -> Formula {
    match x {
        PolFormula::Pos(p) => forget_pos(p),
        PolFormula::Neg(n) => forget_neg(n),
    }
}

pub fn forget_pos(p: &PosFormula) -> Formula {
    use PosFormula::*;
    match p {
        Atom(a) => Formula::PosAtom(a.clone()),
        Tensor(l, r) => Formula::Tensor(Box::new(forget_pos(l)), Box::new(forget_pos(r))),
        CoRDiv(l, r) => Formula::CoRDiv(Box::new(forget_pos(l)), Box::new(forget_neg(r))),
        CoLDiv(l, r) => Formula::CoLDiv(Box::new(forget_neg(l)), Box::new(forget_pos(r))),
        Or(l, r) => Formula::Or(Box::new(forget_pos(l)), Box::new(forget_pos(r))),
        Down(n) => forget_neg(n),
    }
}

pub fn forget_neg(n: &NegFormula) -> Formula {
    use NegFormula::*;
    match n {
        Atom(a) => Formula::NegAtom(a.clone()),
        Par(l, r) => Formula::Par(Box::new(forget_neg(l)), Box::new(forget_neg(r))),
        LDiv(l, r) => Formula::LDiv(Box::new(forget_pos(l)), Box::new(forget_neg(r))),
        RDiv(l, r) => Formula::RDiv(Box::new(forget_neg(l)), Box::new(forget_pos(r))),
        And(l, r) => Formula::And(Box::new(forget_neg(l)), Box::new(forget_neg(r))),
        Up(p) => forget_pos(p),
    }
}

impl PolFormula {
    /// True when some subformula is `_^P` or `^_N`.
    pub fn has_vacuous_shift(&self) -> bool {
        match self {
            PolFormula::Pos(p) => pos_has_vacuous(p),
            PolFormula::Neg(n) => neg_has_vacuous(n),
        }
    }
}

fn pos_has_vacuous(p: &PosFormula) -> bool {
    use PosFormula::*;
    match p {
        Atom(_) => false,
        Tensor(l, r) | Or(l, r) => pos_has_vacuous(l) || pos_has_vacuous(r),
        CoRDiv(l, r) => pos_has_vacuous(l) || neg_has_vacuous(r),
        CoLDiv(l, r) => neg_has_vacuous(l) || pos_has_vacuous(r),
        Down(n) => matches!(**n, NegFormula::Up(_)) || neg_has_vacuous(n),
    }
}

fn neg_has_vacuous(n: &NegFormula) -> bool {
    use NegFormula::*;
    match n {
        Atom(_) => false,
        Par(l, r) | And(l, r) => neg_has_vacuous(l) || neg_has_vacuous(r),
        LDiv(l, r) => pos_has_vacuous(l) || neg_has_vacuous(r),
        RDiv(l, r) => neg_has_vacuous(l) || pos_has_vacuous(r),
        Up(p) => matches!(**p, PosFormula::Down(_)) || pos_has_vacuous(p),
    }
}

// --- polarized structures and judgments ---------------------------------

/// Structures over positive formulas; antecedent negatives occur as `_N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolStructure {
    Leaf(PosFormula),
    Times(Box<PolStructure>, Box<PolStructure>),
    Oslash(Box<PolStructure>, Box<PolStructure>),
    Obslash(Box<PolStructure>, Box<PolStructure>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolPresentation {
    pub left: PolStructure,
    pub right: PolStructure,
}

/// The stoup judgment `Γ |- P`: the focused right-hand slot holds a
/// single positive formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StoupJudgment {
    pub ctx: PolStructure,
    pub stoup: PosFormula,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolJudgment {
    Pres(PolPresentation),
    Stoup(StoupJudgment),
}

/// Decorate a structure: positive leaves stay, negative leaves pick up a
/// down shift, structural connectives are untouched.
pub fn decorate_structure(g: &Structure) -> PolStructure {
    match g {
        Structure::Leaf(a) => {
            let d = decorate(a);
            debug_assert!(matches!(
                (&d, polarity(a)),
                (PolFormula::Pos(_), Polarity::Positive) | (PolFormula::Neg(_), Polarity::Negative)
            ));
            PolStructure::Leaf(coerce_pos(d))
        }
        Structure::Times(l, r) => PolStructure::Times(
            Box::new(decorate_structure(l)),
            Box::new(decorate_structure(r)),
        ),
        Structure::Oslash(l, r) => PolStructure::Oslash(
            Box::new(decorate_structure(l)),
            Box::new(decorate_structure(r)),
        ),
        Structure::Obslash(l, r) => PolStructure::Obslash(
            Box::new(decorate_structure(l)),
            Box::new(decorate_structure(r)),
        ),
    }
}

pub fn decorate_presentation(w: &Presentation) -> PolPresentation {
    PolPresentation {
        left: decorate_structure(&w.left),
        right: decorate_structure(&w.right),
    }
}

pub fn forget_structure(g: &PolStructure) -> Structure {
    match g {
        PolStructure::Leaf(p) => Structure::Leaf(forget_pos(p)),
        PolStructure::Times(l, r) => {
            Structure::times(forget_structure(l), forget_structure(r))
        }
        PolStructure::Oslash(l, r) => {
            Structure::oslash(forget_structure(l), forget_structure(r))
        }
        PolStructure::Obslash(l, r) => {
            Structure::obslash(forget_structure(l), forget_structure(r))
        }
    }
}

/// `Γ+` for polarized structures.
pub fn pol_interp_plus(g: &PolStructure) -> PosFormula {
    match g {
        PolStructure::Leaf(p) => p.clone(),
        PolStructure::Times(l, r) => {
            PosFormula::Tensor(Box::new(pol_interp_plus(l)), Box::new(pol_interp_plus(r)))
        }
        PolStructure::Obslash(d, g2) => {
            PosFormula::CoLDiv(Box::new(pol_interp_minus(d)), Box::new(pol_interp_plus(g2)))
        }
        PolStructure::Oslash(g2, d) => {
            PosFormula::CoRDiv(Box::new(pol_interp_plus(g2)), Box::new(pol_interp_minus(d)))
        }
    }
}

/// `Γ-` for polarized structures.
pub fn pol_interp_minus(g: &PolStructure) -> NegFormula {
    match g {
        PolStructure::Leaf(p) => negate_pos(p),
        PolStructure::Times(l, r) => {
            NegFormula::Par(Box::new(pol_interp_minus(r)), Box::new(pol_interp_minus(l)))
        }
        PolStructure::Obslash(d, g2) => {
            NegFormula::RDiv(Box::new(pol_interp_minus(g2)), Box::new(pol_interp_plus(d)))
        }
        PolStructure::Oslash(g2, d) => {
            NegFormula::LDiv(Box::new(pol_interp_plus(d)), Box::new(pol_interp_minus(g2)))
        }
    }
}

// --- checker for the polarized calculus ----------------------------------

use crate::unfocused::LogicVariant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolRule {
    /// `I`: axiom in the stoup
    Id,
    /// `T`: cut
    Cut,
    DownL,
    DownR,
    TensorL,
    TensorR,
    ObslashL,
    ObslashR,
    OslashL,
    OslashR,
    OrL,
    OrRl,
    OrRr,
    DpSwap,
    /// `⟨Γ.Δ ; Θ⟩ ~ ⟨Γ ; Δ\>Θ⟩`, either direction
    DpAssoc1,
    /// `⟨Γ</Δ ; Θ⟩ ~ ⟨Γ ; Δ.Θ⟩`, either direction
    DpAssoc2,
    Grishin1,
    Grishin2,
    GrishinMixed,
    /// CNL collapse `</` against `.`, either direction
    CnlOslash,
    /// CNL collapse `\>` against `.`, either direction
    CnlObslash,
}

impl PolRule {
    pub fn name(self) -> &'static str {
        match self {
            PolRule::Id => "id",
            PolRule::Cut => "cut",
            PolRule::DownL => "down-l",
            PolRule::DownR => "down-r",
            PolRule::TensorL => "otimes-l",
            PolRule::TensorR => "otimes-r",
            PolRule::ObslashL => "obslash-l",
            PolRule::ObslashR => "obslash-r",
            PolRule::OslashL => "oslash-l",
            PolRule::OslashR => "oslash-r",
            PolRule::OrL => "or-l",
            PolRule::OrRl => "or-r1",
            PolRule::OrRr => "or-r2",
            PolRule::DpSwap => "dp-swap",
            PolRule::DpAssoc1 => "dp-assoc1",
            PolRule::DpAssoc2 => "dp-assoc2",
            PolRule::Grishin1 => "grishin-1",
            PolRule::Grishin2 => "grishin-2",
            PolRule::GrishinMixed => "grishin-mixed",
            PolRule::CnlOslash => "cnl-oslash",
            PolRule::CnlObslash => "cnl-obslash",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolProofNode {
    pub rule: PolRule,
    pub conclusion: PolJudgment,
    pub premises: Vec<PolProofNode>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("polarized proof check failed at node {path:?}: {reason}")]
pub struct PolCheckError {
    /// child indices from the root to the failing node
    pub path: Vec<usize>,
    pub reason: String,
}

fn pol_dp_neighbors(w: &PolPresentation) -> Vec<PolPresentation> {
    let mut out = vec![PolPresentation { left: w.right.clone(), right: w.left.clone() }];
    if let PolStructure::Times(g, d) = &w.left {
        out.push(PolPresentation {
            left: (**g).clone(),
            right: PolStructure::Obslash(d.clone(), Box::new(w.right.clone())),
        });
    }
    if let PolStructure::Obslash(d, t) = &w.right {
        out.push(PolPresentation {
            left: PolStructure::Times(Box::new(w.left.clone()), d.clone()),
            right: (**t).clone(),
        });
    }
    if let PolStructure::Oslash(g, d) = &w.left {
        out.push(PolPresentation {
            left: (**g).clone(),
            right: PolStructure::Times(d.clone(), Box::new(w.right.clone())),
        });
    }
    if let PolStructure::Times(d, t) = &w.right {
        out.push(PolPresentation {
            left: PolStructure::Oslash(Box::new(w.left.clone()), d.clone()),
            right: (**t).clone(),
        });
    }
    out
}

/// Display class of a polarized presentation.
pub fn pol_display_class(w: &PolPresentation) -> std::collections::BTreeSet<PolPresentation> {
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(cur) = queue.pop_front() {
        for next in pol_dp_neighbors(&cur) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

fn same_class(a: &PolPresentation, b: &PolPresentation) -> bool {
    pol_display_class(a).contains(b)
}

fn pol_collapse(g: &PolStructure) -> PolStructure {
    match g {
        PolStructure::Leaf(p) => PolStructure::Leaf(p.clone()),
        PolStructure::Times(l, r) | PolStructure::Oslash(l, r) | PolStructure::Obslash(l, r) => {
            PolStructure::Times(Box::new(pol_collapse(l)), Box::new(pol_collapse(r)))
        }
    }
}

/// Display equivalence with the structural connectives identified, for
/// the reversible CNL collapse rules. Leaves keep their polarized
/// identity; only the structural skeleton is collapsed.
fn same_class_collapsed(a: &PolPresentation, b: &PolPresentation) -> bool {
    let norm = |w: &PolPresentation| PolPresentation {
        left: pol_collapse(&w.left),
        right: pol_collapse(&w.right),
    };
    let target = norm(b);
    let start = norm(a);
    let mut seen = std::collections::BTreeSet::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        if cur == target {
            return true;
        }
        for next in pol_dp_neighbors(&cur) {
            let next = norm(&next);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

struct PolChecker {
    variant: LogicVariant,
}

impl PolChecker {
    fn fail(&self, path: &[usize], reason: impl Into<String>) -> PolCheckError {
        PolCheckError { path: path.to_vec(), reason: reason.into() }
    }

    fn check_node(&self, node: &PolProofNode, path: &mut Vec<usize>) -> Result<(), PolCheckError> {
        self.check_local(node, path)?;
        for (i, prem) in node.premises.iter().enumerate() {
            path.push(i);
            self.check_node(prem, path)?;
            path.pop();
        }
        Ok(())
    }

    fn pres<'a>(
        &self,
        node: &'a PolProofNode,
        path: &[usize],
    ) -> Result<&'a PolPresentation, PolCheckError> {
        match &node.conclusion {
            PolJudgment::Pres(w) => Ok(w),
            PolJudgment::Stoup(_) => {
                Err(self.fail(path, format!("rule {} wants a presentation", node.rule.name())))
            }
        }
    }

    fn stoup<'a>(
        &self,
        node: &'a PolProofNode,
        path: &[usize],
    ) -> Result<&'a StoupJudgment, PolCheckError> {
        match &node.conclusion {
            PolJudgment::Stoup(j) => Ok(j),
            PolJudgment::Pres(_) => {
                Err(self.fail(path, format!("rule {} wants a stoup judgment", node.rule.name())))
            }
        }
    }

    fn arity(&self, node: &PolProofNode, n: usize, path: &[usize]) -> Result<(), PolCheckError> {
        if node.premises.len() == n {
            Ok(())
        } else {
            Err(self.fail(
                path,
                format!("rule {} wants {} premises, got {}", node.rule.name(), n, node.premises.len()),
            ))
        }
    }

    fn premise_pres<'a>(
        &self,
        node: &'a PolProofNode,
        i: usize,
        path: &[usize],
    ) -> Result<&'a PolPresentation, PolCheckError> {
        match &node.premises[i].conclusion {
            PolJudgment::Pres(w) => Ok(w),
            PolJudgment::Stoup(_) => Err(self.fail(path, "premise must be a presentation")),
        }
    }

    fn premise_stoup<'a>(
        &self,
        node: &'a PolProofNode,
        i: usize,
        path: &[usize],
    ) -> Result<&'a StoupJudgment, PolCheckError> {
        match &node.premises[i].conclusion {
            PolJudgment::Stoup(j) => Ok(j),
            PolJudgment::Pres(_) => Err(self.fail(path, "premise must be a stoup judgment")),
        }
    }

    /// Try every display-class member of the conclusion whose right
    /// component is a single formula leaf; `f` decides whether the rule
    /// instantiates at that member.
    fn left_rule<F>(&self, w: &PolPresentation, f: F) -> bool
    where
        F: Fn(&PolStructure, &PosFormula) -> bool,
    {
        pol_display_class(w).iter().any(|m| match &m.right {
            PolStructure::Leaf(p) => f(&m.left, p),
            _ => false,
        })
    }

    fn check_local(&self, node: &PolProofNode, path: &[usize]) -> Result<(), PolCheckError> {
        use PolRule::*;
        let ok = |cond: bool, why: &str| -> Result<(), PolCheckError> {
            if cond {
                Ok(())
            } else {
                Err(self.fail(path, format!("{} rule mismatch: {why}", node.rule.name())))
            }
        };
        match node.rule {
            Id => {
                self.arity(node, 0, path)?;
                let j = self.stoup(node, path)?;
                ok(j.ctx == PolStructure::Leaf(j.stoup.clone()), "I wants P |- P")
            }
            Cut => {
                self.arity(node, 2, path)?;
                let w = self.pres(node, path)?;
                let d = self.premise_stoup(node, 0, path)?;
                let g = self.premise_pres(node, 1, path)?;
                let found = pol_display_class(w).iter().any(|m| {
                    m.right == d.ctx
                        && same_class(
                            g,
                            &PolPresentation {
                                left: m.left.clone(),
                                right: PolStructure::Leaf(d.stoup.clone()),
                            },
                        )
                });
                ok(found, "no display of the conclusion matches the cut premises")
            }
            DownL => {
                self.arity(node, 1, path)?;
                let w = self.pres(node, path)?;
                let j = self.premise_stoup(node, 0, path)?;
                let found = self.left_rule(w, |gamma, p| match p {
                    PosFormula::Down(n) => {
                        *gamma == j.ctx && j.stoup == negate_neg(n)
                    }
                    _ => false,
                });
                ok(found, "down-l wants ⟨Γ ; _N⟩ from Γ |- N^")
            }
            DownR => {
                self.arity(node, 1, path)?;
                let j = self.stoup(node, path)?;
                let w = self.premise_pres(node, 0, path)?;
                match &j.stoup {
                    PosFormula::Down(n) => {
                        let want = PolPresentation {
                            left: j.ctx.clone(),
                            right: PolStructure::Leaf(negate_neg(n)),
                        };
                        ok(same_class(w, &want), "down-r premise is ⟨Γ ; N^⟩")
                    }
                    _ => ok(false, "down-r stoup must be _N"),
                }
            }
            TensorL => {
                self.arity(node, 1, path)?;
                let w = self.pres(node, path)?;
                let prem = self.premise_pres(node, 0, path)?;
                let found = self.left_rule(w, |gamma, p| match p {
                    PosFormula::Tensor(a, b) => same_class(
                        prem,
                        &PolPresentation {
                            left: gamma.clone(),
                            right: PolStructure::Times(
                                Box::new(PolStructure::Leaf((**a).clone())),
                                Box::new(PolStructure::Leaf((**b).clone())),
                            ),
                        },
                    ),
                    _ => false,
                });
                ok(found, "otimes-l wants ⟨Γ ; P*Q⟩ from ⟨Γ ; P.Q⟩")
            }
            ObslashL => {
                self.arity(node, 1, path)?;
                let w = self.pres(node, path)?;
                let prem = self.premise_pres(node, 0, path)?;
                let found = self.left_rule(w, |gamma, p| match p {
                    PosFormula::CoLDiv(n, q) => same_class(
                        prem,
                        &PolPresentation {
                            left: gamma.clone(),
                            right: PolStructure::Obslash(
                                Box::new(PolStructure::Leaf(negate_neg(n))),
                                Box::new(PolStructure::Leaf((**q).clone())),
                            ),
                        },
                    ),
                    _ => false,
                });
                ok(found, "obslash-l wants ⟨Γ ; N\\>P⟩ from ⟨Γ ; N^\\>P⟩")
            }
            OslashL => {
                self.arity(node, 1, path)?;
                let w = self.pres(node, path)?;
                let prem = self.premise_pres(node, 0, path)?;
                let found = self.left_rule(w, |gamma, p| match p {
                    PosFormula::CoRDiv(q, n) => same_class(
                        prem,
                        &PolPresentation {
                            left: gamma.clone(),
                            right: PolStructure::Oslash(
                                Box::new(PolStructure::Leaf((**q).clone())),
                                Box::new(PolStructure::Leaf(negate_neg(n))),
                            ),
                        },
                    ),
                    _ => false,
                });
                ok(found, "oslash-l wants ⟨Γ ; P</N⟩ from ⟨Γ ; P</N^⟩")
            }
            OrL => {
                self.arity(node, 2, path)?;
                let w = self.pres(node, path)?;
                let p1 = self.premise_pres(node, 0, path)?;
                let p2 = self.premise_pres(node, 1, path)?;
                let found = self.left_rule(w, |gamma, p| match p {
                    PosFormula::Or(a, b) => {
                        same_class(
                            p1,
                            &PolPresentation {
                                left: gamma.clone(),
                                right: PolStructure::Leaf((**a).clone()),
                            },
                        ) && same_class(
                            p2,
                            &PolPresentation {
                                left: gamma.clone(),
                                right: PolStructure::Leaf((**b).clone()),
                            },
                        )
                    }
                    _ => false,
                });
                ok(found, "or-l wants both disjunct premises in order")
            }
            TensorR => {
                self.arity(node, 2, path)?;
                let j = self.stoup(node, path)?;
                let a = self.premise_stoup(node, 0, path)?;
                let b = self.premise_stoup(node, 1, path)?;
                match (&j.ctx, &j.stoup) {
                    (PolStructure::Times(g, d), PosFormula::Tensor(p, q)) => ok(
                        a.ctx == **g && a.stoup == **p && b.ctx == **d && b.stoup == **q,
                        "otimes-r wants Γ|-P and Δ|-Q",
                    ),
                    _ => ok(false, "otimes-r wants Γ.Δ |- P*Q"),
                }
            }
            ObslashR => {
                self.arity(node, 2, path)?;
                let j = self.stoup(node, path)?;
                let a = self.premise_stoup(node, 0, path)?;
                let b = self.premise_stoup(node, 1, path)?;
                match (&j.ctx, &j.stoup) {
                    (PolStructure::Obslash(d, g), PosFormula::CoLDiv(n, p)) => ok(
                        a.ctx == **d
                            && a.stoup == negate_neg(n)
                            && b.ctx == **g
                            && b.stoup == **p,
                        "obslash-r wants Δ|-N^ and Γ|-P",
                    ),
                    _ => ok(false, "obslash-r wants Δ\\>Γ |- N\\>P"),
                }
            }
            OslashR => {
                self.arity(node, 2, path)?;
                let j = self.stoup(node, path)?;
                let a = self.premise_stoup(node, 0, path)?;
                let b = self.premise_stoup(node, 1, path)?;
                match (&j.ctx, &j.stoup) {
                    (PolStructure::Oslash(g, d), PosFormula::CoRDiv(p, n)) => ok(
                        a.ctx == **d
                            && a.stoup == negate_neg(n)
                            && b.ctx == **g
                            && b.stoup == **p,
                        "oslash-r wants Δ|-N^ and Γ|-P",
                    ),
                    _ => ok(false, "oslash-r wants Γ</Δ |- P</N"),
                }
            }
            OrRl => {
                self.arity(node, 1, path)?;
                let j = self.stoup(node, path)?;
                let a = self.premise_stoup(node, 0, path)?;
                match &j.stoup {
                    PosFormula::Or(p, _) => {
                        ok(a.ctx == j.ctx && a.stoup == **p, "or-r1 keeps the left disjunct")
                    }
                    _ => ok(false, "or-r1 wants Γ |- P|Q"),
                }
            }
            OrRr => {
                self.arity(node, 1, path)?;
                let j = self.stoup(node, path)?;
                let a = self.premise_stoup(node, 0, path)?;
                match &j.stoup {
                    PosFormula::Or(_, q) => {
                        ok(a.ctx == j.ctx && a.stoup == **q, "or-r2 keeps the right disjunct")
                    }
                    _ => ok(false, "or-r2 wants Γ |- P|Q"),
                }
            }
            DpSwap | DpAssoc1 | DpAssoc2 => {
                self.arity(node, 1, path)?;
                let w = self.pres(node, path)?;
                let prem = self.premise_pres(node, 0, path)?;
                // all dp rules are subsumed by class equality
                ok(same_class(w, prem), "dp premise must be display-equivalent")
            }
            Grishin1 | Grishin2 | GrishinMixed => {
                if self.variant != LogicVariant::Lgi {
                    return ok(false, "linear distributivity needs variant lgi");
                }
                self.arity(node, 1, path)?;
                let w = self.pres(node, path)?;
                let prem = self.premise_pres(node, 0, path)?;
                let found = pol_display_class(w).iter().any(|m| {
                    let (g1, g2) = match &m.left {
                        PolStructure::Times(a, b) => (a.clone(), b.clone()),
                        _ => return false,
                    };
                    let (d2, d1) = match &m.right {
                        PolStructure::Times(a, b) => (a.clone(), b.clone()),
                        _ => return false,
                    };
                    let want = match node.rule {
                        Grishin1 => PolPresentation {
                            left: PolStructure::Oslash(g2.clone(), d2.clone()),
                            right: PolStructure::Oslash(d1.clone(), g1.clone()),
                        },
                        Grishin2 => PolPresentation {
                            left: PolStructure::Obslash(d1.clone(), g1.clone()),
                            right: PolStructure::Obslash(g2.clone(), d2.clone()),
                        },
                        _ => PolPresentation {
                            left: PolStructure::Oslash(d2.clone(), g1.clone()),
                            right: PolStructure::Obslash(d1.clone(), g2.clone()),
                        },
                    };
                    same_class(prem, &want)
                });
                ok(found, "no display of the conclusion matches the distributivity premise")
            }
            CnlOslash | CnlObslash => {
                if !matches!(self.variant, LogicVariant::Cnl | LogicVariant::CnlCompact) {
                    return ok(false, "collapse rules need a CNL variant");
                }
                self.arity(node, 1, path)?;
                let w = self.pres(node, path)?;
                let prem = self.premise_pres(node, 0, path)?;
                ok(
                    same_class_collapsed(w, prem),
                    "collapse premise must match modulo the identified connectives",
                )
            }
        }
    }
}

/// Validate every node of a polarized derivation against the rules of the
/// given variant. Cut is allowed; dp steps may be explicit nodes or left
/// implicit (conclusions are compared modulo display equivalence).
pub fn check_pol(p: &PolProofNode, v: LogicVariant) -> Result<(), PolCheckError> {
    let checker = PolChecker { variant: v };
    checker.check_node(p, &mut Vec::new())
}

// --- printing -------------------------------------------------------------

impl PosFormula {
    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
        use PosFormula::*;
        match self {
            Atom(a) => write!(f, "{a}"),
            Down(n) => {
                write!(f, "_")?;
                n.fmt_unit(f)
            }
            _ => {
                let (l, r, op): (&dyn fmt::Display, &dyn fmt::Display, &str) = match self {
                    Tensor(l, r) => (&UnitP(l), &UnitP(r), "*"),
                    CoRDiv(l, r) => (&UnitP(l), &UnitN(r), "</"),
                    CoLDiv(l, r) => (&UnitN(l), &UnitP(r), "\\>"),
                    Or(l, r) => (&UnitP(l), &UnitP(r), "|"),
                    Atom(_) | Down(_) => unreachable!(),
                };
                if top {
                    write!(f, "{l} {op} {r}")
                } else {
                    write!(f, "({l} {op} {r})")
                }
            }
        }
    }

    fn fmt_unit(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, false)
    }
}

impl NegFormula {
    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
        use NegFormula::*;
        match self {
            Atom(a) => write!(f, "~{a}"),
            Up(p) => {
                write!(f, "^")?;
                p.fmt_unit(f)
            }
            _ => {
                let (l, r, op): (&dyn fmt::Display, &dyn fmt::Display, &str) = match self {
                    Par(l, r) => (&UnitN(l), &UnitN(r), "+"),
                    LDiv(l, r) => (&UnitP(l), &UnitN(r), "\\"),
                    RDiv(l, r) => (&UnitN(l), &UnitP(r), "/"),
                    And(l, r) => (&UnitN(l), &UnitN(r), "&"),
                    Atom(_) | Up(_) => unreachable!(),
                };
                if top {
                    write!(f, "{l} {op} {r}")
                } else {
                    write!(f, "({l} {op} {r})")
                }
            }
        }
    }

    fn fmt_unit(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, false)
    }
}

struct UnitP<'a>(&'a PosFormula);
struct UnitN<'a>(&'a NegFormula);

impl fmt::Display for UnitP<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_unit(f)
    }
}

impl fmt::Display for UnitN<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_unit(f)
    }
}

impl fmt::Display for PosFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, true)
    }
}

impl fmt::Display for NegFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, true)
    }
}

impl fmt::Display for PolFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolFormula::Pos(p) => p.fmt(f),
            PolFormula::Neg(n) => n.fmt(f),
        }
    }
}

impl PolStructure {
    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
        match self {
            PolStructure::Leaf(p) => match p {
                PosFormula::Atom(_) | PosFormula::Down(_) => write!(f, "{p}"),
                _ => write!(f, "({p})"),
            },
            PolStructure::Times(l, r) | PolStructure::Oslash(l, r)
            | PolStructure::Obslash(l, r) => {
                let op = match self {
                    PolStructure::Times(..) => ".",
                    PolStructure::Oslash(..) => "</",
                    PolStructure::Obslash(..) => "\\>",
                    PolStructure::Leaf(_) => unreachable!(),
                };
                if !top {
                    write!(f, "(")?;
                }
                l.fmt_at(f, false)?;
                write!(f, " {op} ")?;
                r.fmt_at(f, false)?;
                if !top {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for PolStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, true)
    }
}

impl fmt::Display for PolPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.left, self.right)
    }
}

impl fmt::Display for StoupJudgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.ctx, self.stoup)
    }
}

impl fmt::Display for PolJudgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolJudgment::Pres(w) => w.fmt(f),
            PolJudgment::Stoup(j) => j.fmt(f),
        }
    }
}
