//! Strongly focalized proof search and exhaustive proof enumeration.
//!
//! Search operates over structures whose leaves are positive atoms or
//! negative formulas (the down shift left implicit), drawn from the
//! closure universe of the goal's negative interpretations. A presentation
//! goal is consumed by a Decision: pick a negative leaf, displace the rest
//! of the presentation around it, and race the chosen `invp` decomposition
//! of its dual against the displaced structure in a focus judgment. Focus
//! judgments split congruently (with variant structural rewrites of the
//! left side), close on identical atoms, and React back into presentation
//! goals when the pattern reaches a negative formula.

use crate::polar::{
    decorate_presentation, negate_neg, negate_pos, pol_interp_minus, pol_interp_plus,
    NegFormula, PolFormula, PolStructure, PosFormula,
};
use crate::structure::{Presentation, Side, Step};
use crate::unfocused::LogicVariant;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

/// Structure with implicit-shift leaves: a positive atom or a negative
/// formula standing for its down shift.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FStructure {
    Atom(String),
    Neg(NegFormula),
    Times(Box<FStructure>, Box<FStructure>),
    Oslash(Box<FStructure>, Box<FStructure>),
    Obslash(Box<FStructure>, Box<FStructure>),
}

impl FStructure {
    pub fn times(l: FStructure, r: FStructure) -> FStructure {
        FStructure::Times(Box::new(l), Box::new(r))
    }

    pub fn oslash(l: FStructure, r: FStructure) -> FStructure {
        FStructure::Oslash(Box::new(l), Box::new(r))
    }

    pub fn obslash(l: FStructure, r: FStructure) -> FStructure {
        FStructure::Obslash(Box::new(l), Box::new(r))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, FStructure::Atom(_) | FStructure::Neg(_))
    }

    fn children(&self) -> Option<(&FStructure, &FStructure)> {
        match self {
            FStructure::Times(l, r) | FStructure::Oslash(l, r) | FStructure::Obslash(l, r) => {
                Some((l, r))
            }
            _ => None,
        }
    }

    /// CNL canonical form: all structural connectives become tensors.
    pub fn collapse_to_times(&self) -> FStructure {
        match self {
            FStructure::Atom(_) | FStructure::Neg(_) => self.clone(),
            FStructure::Times(l, r) | FStructure::Oslash(l, r) | FStructure::Obslash(l, r) => {
                FStructure::times(l.collapse_to_times(), r.collapse_to_times())
            }
        }
    }

    /// Leaves in pre-order.
    pub fn leaves(&self) -> Vec<&FStructure> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect<'a>(&'a self, out: &mut Vec<&'a FStructure>) {
        match self.children() {
            None => out.push(self),
            Some((l, r)) => {
                l.collect(out);
                r.collect(out);
            }
        }
    }
}

// --- subformula universe ---------------------------------------------------

/// `σ(N)`: the subformulas of a negative formula relevant for focused
/// search. Note `σ(^P) = {P^} ∪ τ(P)`: it is the dual of `P` that recurs
/// at the shift.
pub fn sigma(n: &NegFormula) -> BTreeSet<PolFormula> {
    let mut out = BTreeSet::new();
    sigma_into(n, &mut out);
    out
}

/// `τ(P)`: dually for positive formulas.
pub fn tau(p: &PosFormula) -> BTreeSet<PolFormula> {
    let mut out = BTreeSet::new();
    tau_into(p, &mut out);
    out
}

fn sigma_into(n: &NegFormula, out: &mut BTreeSet<PolFormula>) {
    use NegFormula::*;
    match n {
        Up(p) => {
            out.insert(PolFormula::Neg(negate_pos(p)));
            tau_into(p, out);
        }
        // the atom case records the dual atom: this is what makes
        // σ(N) = τ(N^) an identity all the way down, and it keeps the
        // positive atoms of a goal inside the universe
        Atom(a) => {
            out.insert(PolFormula::Pos(PosFormula::Atom(a.clone())));
        }
        And(m, n2) | Par(m, n2) => {
            sigma_into(m, out);
            sigma_into(n2, out);
        }
        RDiv(m, q) => {
            sigma_into(m, out);
            tau_into(q, out);
        }
        LDiv(q, m) => {
            sigma_into(m, out);
            tau_into(q, out);
        }
    }
}

fn tau_into(p: &PosFormula, out: &mut BTreeSet<PolFormula>) {
    use PosFormula::*;
    match p {
        Down(n) => {
            out.insert(PolFormula::Neg((**n).clone()));
            sigma_into(n, out);
        }
        Atom(a) => {
            out.insert(PolFormula::Pos(Atom(a.clone())));
        }
        Or(q, r) | Tensor(q, r) => {
            tau_into(q, out);
            tau_into(r, out);
        }
        CoLDiv(n, q) => {
            tau_into(q, out);
            sigma_into(n, out);
        }
        CoRDiv(q, n) => {
            tau_into(q, out);
            sigma_into(n, out);
        }
    }
}

/// The closure `X^τ` of a set of negative formulas: the universe of
/// decision formulas and atoms available during focused search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    pub base: BTreeSet<NegFormula>,
    pub closure: BTreeSet<PolFormula>,
}

pub fn build_universe(base: impl IntoIterator<Item = NegFormula>) -> Universe {
    let base: BTreeSet<NegFormula> = base.into_iter().collect();
    let mut closure = BTreeSet::new();
    for n in &base {
        tau_into(&PosFormula::Down(Box::new(n.clone())), &mut closure);
    }
    Universe { base, closure }
}

impl Universe {
    pub fn contains_neg(&self, n: &NegFormula) -> bool {
        self.closure.contains(&PolFormula::Neg(n.clone()))
    }

    pub fn contains_atom(&self, a: &str) -> bool {
        self.closure.contains(&PolFormula::Pos(PosFormula::Atom(a.to_string())))
    }

    /// The closure invariant: `N ∈ X^τ` implies `τ(_N) ⊆ X^τ`.
    pub fn closure_invariant_holds(&self) -> bool {
        self.closure.iter().all(|f| match f {
            PolFormula::Neg(n) => {
                tau(&PosFormula::Down(Box::new(n.clone()))).is_subset(&self.closure)
            }
            PolFormula::Pos(_) => true,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FocusError {
    #[error("structure leaf `{0}` is outside the goal universe")]
    OutsideUniverse(String),
}

/// `invp(P)`: the ordered set of structural decompositions of a positive
/// formula down to its first polarity switches. Branching comes from the
/// additive disjunction only; products iterate the structure's left
/// operand in the outer loop.
pub fn invp(p: &PosFormula) -> Vec<FStructure> {
    use PosFormula::*;
    let mut out: Vec<FStructure> = Vec::new();
    let push = |s: FStructure, out: &mut Vec<FStructure>| {
        if !out.contains(&s) {
            out.push(s);
        }
    };
    match p {
        Atom(a) => out.push(FStructure::Atom(a.clone())),
        Down(n) => out.push(FStructure::Neg((**n).clone())),
        Or(a, b) => {
            for s in invp(a) {
                push(s, &mut out);
            }
            for s in invp(b) {
                push(s, &mut out);
            }
        }
        Tensor(a, b) => {
            let rs = invp(b);
            for l in invp(a) {
                for r in &rs {
                    push(FStructure::times(l.clone(), r.clone()), &mut out);
                }
            }
        }
        CoRDiv(a, n) => {
            let rs = invp(&negate_neg(n));
            for l in invp(a) {
                for r in &rs {
                    push(FStructure::oslash(l.clone(), r.clone()), &mut out);
                }
            }
        }
        CoLDiv(n, a) => {
            let rs = invp(a);
            for l in invp(&negate_neg(n)) {
                for r in &rs {
                    push(FStructure::obslash(l.clone(), r.clone()), &mut out);
                }
            }
        }
    }
    out
}

// --- contexts and displacement ---------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Ctor {
    Times,
    Oslash,
    Obslash,
}

/// One-hole context over structure constructors, stored as the path of
/// frames from the root down to the hole.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FContext {
    frames: Vec<Frame>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Frame {
    ctor: Ctor,
    hole_on_left: bool,
    other: FStructure,
}

impl FContext {
    /// Split `s` at `path`: the context around that node and the node.
    pub fn at<'a>(s: &'a FStructure, path: &[Step]) -> Option<(FContext, &'a FStructure)> {
        let mut frames = Vec::with_capacity(path.len());
        let mut cur = s;
        for step in path {
            let ctor = match cur {
                FStructure::Times(..) => Ctor::Times,
                FStructure::Oslash(..) => Ctor::Oslash,
                FStructure::Obslash(..) => Ctor::Obslash,
                _ => return None,
            };
            let (l, r) = cur.children().unwrap();
            match step {
                Step::L => {
                    frames.push(Frame { ctor, hole_on_left: true, other: r.clone() });
                    cur = l;
                }
                Step::R => {
                    frames.push(Frame { ctor, hole_on_left: false, other: l.clone() });
                    cur = r;
                }
            }
        }
        Some((FContext { frames }, cur))
    }

    /// Re-plug a structure into the hole.
    pub fn plug(&self, inner: FStructure) -> FStructure {
        let mut cur = inner;
        for frame in self.frames.iter().rev() {
            let (l, r) = if frame.hole_on_left {
                (cur, frame.other.clone())
            } else {
                (frame.other.clone(), cur)
            };
            cur = match frame.ctor {
                Ctor::Times => FStructure::times(l, r),
                Ctor::Oslash => FStructure::oslash(l, r),
                Ctor::Obslash => FStructure::obslash(l, r),
            };
        }
        cur
    }
}

/// The displacement map `÷`: turn a one-hole context and the opposing
/// structure into the structure that displays the hole's content, thereby
/// compiling away the display postulates:
/// `⟨Π[Σ] ; Υ⟩` is derivable iff `⟨Π[] ÷ Υ ; Σ⟩` is.
///
/// The recursion follows the six context constructors; the two rows where
/// the hole sits in the second operand of `</`/`\>` are fixed up from the
/// printed table by chasing the display postulates (the display-class
/// oracle in the tests pins them down).
pub fn displace(ctx: &FContext, opposing: &FStructure) -> FStructure {
    let mut upsilon = opposing.clone();
    for frame in &ctx.frames {
        let other = frame.other.clone();
        upsilon = match (frame.ctor, frame.hole_on_left) {
            // (⟨Π[].Σ⟩ ÷ Υ) = Π[] ÷ ⟨Σ\>Υ⟩
            (Ctor::Times, true) => FStructure::obslash(other, upsilon),
            // (⟨Π.Σ[]⟩ ÷ Υ) = Σ[] ÷ ⟨Υ</Π⟩
            (Ctor::Times, false) => FStructure::oslash(upsilon, other),
            // (⟨Π[]</Σ⟩ ÷ Υ) = Π[] ÷ ⟨Σ.Υ⟩
            (Ctor::Oslash, true) => FStructure::times(other, upsilon),
            // (⟨Π</Σ[]⟩ ÷ Υ) = Σ[] ÷ ⟨Υ\>Π⟩
            (Ctor::Oslash, false) => FStructure::obslash(upsilon, other),
            // (⟨Σ[]\>Π⟩ ÷ Υ) = Σ[] ÷ ⟨Π</Υ⟩
            (Ctor::Obslash, true) => FStructure::oslash(other, upsilon),
            // (⟨Σ\>Π[]⟩ ÷ Υ) = Π[] ÷ ⟨Υ.Σ⟩
            (Ctor::Obslash, false) => FStructure::times(upsilon, other),
        };
    }
    upsilon
}

// --- judgments, proofs -------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FJudgment {
    /// presentation goal `⟨Π ; Σ⟩`
    Pres(FStructure, FStructure),
    /// focus judgment: left structure against an `invp` pattern
    Focus(FStructure, FStructure),
}

impl FJudgment {
    fn normalize(self, v: LogicVariant) -> FJudgment {
        if !v.collapses() {
            return self;
        }
        match self {
            FJudgment::Pres(l, r) => {
                FJudgment::Pres(l.collapse_to_times(), r.collapse_to_times())
            }
            FJudgment::Focus(l, p) => {
                FJudgment::Focus(l.collapse_to_times(), p.collapse_to_times())
            }
        }
    }
}

/// Occurrence of a negative leaf within a presentation goal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FocusChoice {
    pub side: Side,
    pub path: Vec<Step>,
    pub invp_index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FRule {
    Decide,
    React,
    Id,
    SplitTimes,
    SplitOslash,
    SplitObslash,
    Grishin1A,
    Grishin1B,
    Grishin2A,
    Grishin2B,
    GrishinMixedA,
    GrishinMixedB,
    GrishinMixedC,
    GrishinMixedD,
}

impl FRule {
    pub fn name(self) -> &'static str {
        match self {
            FRule::Decide => "decide",
            FRule::React => "react",
            FRule::Id => "id",
            FRule::SplitTimes => "split-otimes",
            FRule::SplitOslash => "split-oslash",
            FRule::SplitObslash => "split-obslash",
            FRule::Grishin1A => "grishin-1a",
            FRule::Grishin1B => "grishin-1b",
            FRule::Grishin2A => "grishin-2a",
            FRule::Grishin2B => "grishin-2b",
            FRule::GrishinMixedA => "grishin-ma",
            FRule::GrishinMixedB => "grishin-mb",
            FRule::GrishinMixedC => "grishin-mc",
            FRule::GrishinMixedD => "grishin-md",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FProofNode {
    pub rule: FRule,
    pub conclusion: FJudgment,
    /// set on Decide nodes
    pub focus: Option<FocusChoice>,
    pub premises: Vec<FProofNode>,
}

impl FProofNode {
    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(|p| p.node_count()).sum::<usize>()
    }
}

// --- structural rewrites during context splitting ---------------------------

const GRISHIN_REWRITES: [FRule; 8] = [
    FRule::Grishin1A,
    FRule::Grishin1B,
    FRule::Grishin2A,
    FRule::Grishin2B,
    FRule::GrishinMixedA,
    FRule::GrishinMixedB,
    FRule::GrishinMixedC,
    FRule::GrishinMixedD,
];

/// Apply one linear-distributivity rewrite at the root of `s`, reading the
/// printed rules conclusion-to-premise (the backward search direction).
fn rewrite_root(rule: FRule, s: &FStructure) -> Option<FStructure> {
    use FStructure::*;
    match rule {
        // ⟨(Δ1.Δ2) </ Δ3⟩ -> ⟨Δ1 . (Δ2 </ Δ3)⟩
        FRule::Grishin1A => match s {
            Oslash(l, d3) => match &**l {
                Times(d1, d2) => Some(FStructure::times(
                    (**d1).clone(),
                    FStructure::oslash((**d2).clone(), (**d3).clone()),
                )),
                _ => None,
            },
            _ => None,
        },
        // ⟨Δ1 \> (Δ2.Δ3)⟩ -> ⟨(Δ1 </ Δ2) \> Δ3⟩
        FRule::Grishin1B => match s {
            Obslash(d1, r) => match &**r {
                Times(d2, d3) => Some(FStructure::obslash(
                    FStructure::oslash((**d1).clone(), (**d2).clone()),
                    (**d3).clone(),
                )),
                _ => None,
            },
            _ => None,
        },
        // ⟨Δ1 \> (Δ2.Δ3)⟩ -> ⟨(Δ1 \> Δ2) . Δ3⟩
        FRule::Grishin2A => match s {
            Obslash(d1, r) => match &**r {
                Times(d2, d3) => Some(FStructure::times(
                    FStructure::obslash((**d1).clone(), (**d2).clone()),
                    (**d3).clone(),
                )),
                _ => None,
            },
            _ => None,
        },
        // ⟨(Δ1.Δ2) </ Δ3⟩ -> ⟨Δ1 </ (Δ2 \> Δ3)⟩
        FRule::Grishin2B => match s {
            Oslash(l, d3) => match &**l {
                Times(d1, d2) => Some(FStructure::oslash(
                    (**d1).clone(),
                    FStructure::obslash((**d2).clone(), (**d3).clone()),
                )),
                _ => None,
            },
            _ => None,
        },
        // ⟨Δ2 \> (Δ1.Δ3)⟩ -> ⟨Δ1 . (Δ2 \> Δ3)⟩
        FRule::GrishinMixedA => match s {
            Obslash(d2, r) => match &**r {
                Times(d1, d3) => Some(FStructure::times(
                    (**d1).clone(),
                    FStructure::obslash((**d2).clone(), (**d3).clone()),
                )),
                _ => None,
            },
            _ => None,
        },
        // ⟨Δ2 \> (Δ3.Δ1)⟩ -> ⟨(Δ1 \> Δ2) \> Δ3⟩
        FRule::GrishinMixedB => match s {
            Obslash(d2, r) => match &**r {
                Times(d3, d1) => Some(FStructure::obslash(
                    FStructure::obslash((**d1).clone(), (**d2).clone()),
                    (**d3).clone(),
                )),
                _ => None,
            },
            _ => None,
        },
        // ⟨(Δ1.Δ3) </ Δ2⟩ -> ⟨(Δ1 </ Δ2) . Δ3⟩
        FRule::GrishinMixedC => match s {
            Oslash(l, d2) => match &**l {
                Times(d1, d3) => Some(FStructure::times(
                    FStructure::oslash((**d1).clone(), (**d2).clone()),
                    (**d3).clone(),
                )),
                _ => None,
            },
            _ => None,
        },
        // ⟨(Δ3.Δ1) </ Δ2⟩ -> ⟨Δ1 </ (Δ2 </ Δ3)⟩
        FRule::GrishinMixedD => match s {
            Oslash(l, d2) => match &**l {
                Times(d3, d1) => Some(FStructure::oslash(
                    (**d1).clone(),
                    FStructure::oslash((**d2).clone(), (**d3).clone()),
                )),
                _ => None,
            },
            _ => None,
        },
        _ => None,
    }
}

/// All one-step linear-distributivity rewrites of `s`, applied at any
/// position, in (rule, pre-order position) order.
fn grishin_rewrites(s: &FStructure) -> Vec<(FRule, FStructure)> {
    fn positions(s: &FStructure, out: &mut Vec<Vec<Step>>, path: &mut Vec<Step>) {
        out.push(path.clone());
        if let Some((l, r)) = s.children() {
            path.push(Step::L);
            positions(l, out, path);
            path.pop();
            path.push(Step::R);
            positions(r, out, path);
            path.pop();
        }
    }
    let mut pos = Vec::new();
    positions(s, &mut pos, &mut Vec::new());
    let mut out = Vec::new();
    for rule in GRISHIN_REWRITES {
        for p in &pos {
            let (ctx, node) = FContext::at(s, p).expect("position enumerated from s");
            if let Some(new_node) = rewrite_root(rule, node) {
                out.push((rule, ctx.plug(new_node)));
            }
        }
    }
    out
}

// --- the engine --------------------------------------------------------------

/// Negative-leaf occurrences of a presentation goal, left side in
/// pre-order first, then the right side.
fn neg_occurrences(left: &FStructure, right: &FStructure) -> Vec<(Side, Vec<Step>, NegFormula)> {
    fn walk(s: &FStructure, side: Side, path: &mut Vec<Step>, out: &mut Vec<(Side, Vec<Step>, NegFormula)>) {
        match s {
            FStructure::Neg(n) => out.push((side, path.clone(), n.clone())),
            FStructure::Atom(_) => {}
            _ => {
                let (l, r) = s.children().unwrap();
                path.push(Step::L);
                walk(l, side, path, out);
                path.pop();
                path.push(Step::R);
                walk(r, side, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(left, Side::Left, &mut Vec::new(), &mut out);
    walk(right, Side::Right, &mut Vec::new(), &mut out);
    out
}

struct FMove {
    rule: FRule,
    focus: Option<FocusChoice>,
    premises: Vec<FJudgment>,
}

pub struct FocusedEngine<'a> {
    universe: &'a Universe,
    variant: LogicVariant,
    proved: HashMap<FJudgment, FProofNode>,
    refuted: HashSet<FJudgment>,
    path: HashSet<FJudgment>,
}

impl<'a> FocusedEngine<'a> {
    pub fn new(universe: &'a Universe, variant: LogicVariant) -> Self {
        FocusedEngine {
            universe,
            variant,
            proved: HashMap::new(),
            refuted: HashSet::new(),
            path: HashSet::new(),
        }
    }

    fn moves(&self, state: &FJudgment) -> Vec<FMove> {
        let v = self.variant;
        let mut out = Vec::new();
        match state {
            FJudgment::Pres(left, right) => {
                for (side, path, n) in neg_occurrences(left, right) {
                    debug_assert!(self.universe.contains_neg(&n), "decision formula in universe");
                    let (ctx, _) = match side {
                        Side::Left => FContext::at(left, &path).unwrap(),
                        Side::Right => FContext::at(right, &path).unwrap(),
                    };
                    let opposing = match side {
                        Side::Left => right,
                        Side::Right => left,
                    };
                    let rest = displace(&ctx, opposing);
                    for (k, pattern) in invp(&negate_neg(&n)).into_iter().enumerate() {
                        out.push(FMove {
                            rule: FRule::Decide,
                            focus: Some(FocusChoice { side, path: path.clone(), invp_index: k }),
                            premises: vec![
                                FJudgment::Focus(rest.clone(), pattern).normalize(v)
                            ],
                        });
                    }
                }
            }
            FJudgment::Focus(left, pattern) => {
                match pattern {
                    FStructure::Atom(a) => {
                        if matches!(left, FStructure::Atom(b) if b == a) {
                            out.push(FMove { rule: FRule::Id, focus: None, premises: Vec::new() });
                        }
                        // structural rewrites cannot reach a single atom:
                        // they preserve the leaf count
                        return out;
                    }
                    FStructure::Neg(n) => {
                        let premises = invp(&negate_neg(n))
                            .into_iter()
                            .map(|s| FJudgment::Pres(left.clone(), s).normalize(v))
                            .collect();
                        out.push(FMove { rule: FRule::React, focus: None, premises });
                    }
                    FStructure::Times(pl, pr) => {
                        if let FStructure::Times(l, r) = left {
                            out.push(FMove {
                                rule: FRule::SplitTimes,
                                focus: None,
                                premises: vec![
                                    FJudgment::Focus((**l).clone(), (**pl).clone()),
                                    FJudgment::Focus((**r).clone(), (**pr).clone()),
                                ],
                            });
                        }
                    }
                    FStructure::Obslash(ps, pp) => {
                        if let FStructure::Obslash(s, p) = left {
                            out.push(FMove {
                                rule: FRule::SplitObslash,
                                focus: None,
                                premises: vec![
                                    FJudgment::Focus((**s).clone(), (**ps).clone()),
                                    FJudgment::Focus((**p).clone(), (**pp).clone()),
                                ],
                            });
                        }
                    }
                    FStructure::Oslash(pp, ps) => {
                        if let FStructure::Oslash(p, s) = left {
                            out.push(FMove {
                                rule: FRule::SplitOslash,
                                focus: None,
                                premises: vec![
                                    FJudgment::Focus((**s).clone(), (**ps).clone()),
                                    FJudgment::Focus((**p).clone(), (**pp).clone()),
                                ],
                            });
                        }
                    }
                }
                if v == LogicVariant::Lgi {
                    for (rule, rewritten) in grishin_rewrites(left) {
                        out.push(FMove {
                            rule,
                            focus: None,
                            premises: vec![FJudgment::Focus(rewritten, pattern.clone())],
                        });
                    }
                }
            }
        }
        out
    }

    // Ok(proof) | Err(depended_on_path): a failure that was pruned by the
    // per-branch visited set must not be cached as a refutation.
    fn solve(&mut self, state: &FJudgment) -> Result<FProofNode, bool> {
        if let Some(p) = self.proved.get(state) {
            return Ok(p.clone());
        }
        if self.refuted.contains(state) {
            return Err(false);
        }
        if self.path.contains(state) {
            // a proof that revisits a judgment along a branch has a
            // shorter witness, so the cut loses nothing
            return Err(true);
        }
        self.path.insert(state.clone());
        let mut depended = false;
        let mut found = None;
        'moves: for mv in self.moves(state) {
            let mut children = Vec::with_capacity(mv.premises.len());
            for prem in &mv.premises {
                match self.solve(prem) {
                    Ok(p) => children.push(p),
                    Err(dep) => {
                        depended |= dep;
                        continue 'moves;
                    }
                }
            }
            found = Some(FProofNode {
                rule: mv.rule,
                conclusion: state.clone(),
                focus: mv.focus,
                premises: children,
            });
            break;
        }
        self.path.remove(state);
        match found {
            Some(node) => {
                self.proved.insert(state.clone(), node.clone());
                Ok(node)
            }
            None => {
                if !depended {
                    self.refuted.insert(state.clone());
                }
                Err(depended)
            }
        }
    }

    /// Decide a single focused goal.
    pub fn prove_goal(&mut self, left: &FStructure, right: &FStructure) -> Option<FProofNode> {
        let state = FJudgment::Pres(left.clone(), right.clone()).normalize(self.variant);
        self.solve(&state).ok()
    }

    fn enumerate_state(
        &self,
        state: &FJudgment,
        path: &mut HashSet<FJudgment>,
        cap: usize,
        truncated: &mut bool,
    ) -> Vec<FProofNode> {
        let mut proofs = Vec::new();
        if path.contains(state) {
            return proofs;
        }
        path.insert(state.clone());
        'moves: for mv in self.moves(state) {
            // proof lists per premise; their cartesian product enumerates
            // premise choices lexicographically
            let mut premise_proofs: Vec<Vec<FProofNode>> = Vec::with_capacity(mv.premises.len());
            for prem in &mv.premises {
                let sub = self.enumerate_state(prem, path, cap, truncated);
                if sub.is_empty() {
                    continue 'moves;
                }
                premise_proofs.push(sub);
            }
            let mut combos: Vec<Vec<FProofNode>> = vec![Vec::new()];
            for sub in &premise_proofs {
                let mut next = Vec::with_capacity(combos.len() * sub.len());
                for combo in &combos {
                    for p in sub {
                        let mut c = combo.clone();
                        c.push(p.clone());
                        next.push(c);
                    }
                }
                combos = next;
            }
            for children in combos {
                proofs.push(FProofNode {
                    rule: mv.rule,
                    conclusion: state.clone(),
                    focus: mv.focus.clone(),
                    premises: children,
                });
                if proofs.len() >= cap {
                    *truncated = true;
                    path.remove(state);
                    return proofs;
                }
            }
        }
        path.remove(state);
        proofs
    }
}

/// Outcome of the exhaustive enumeration: all focused proofs of the goal
/// in the deterministic decision order, truncated at `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub proofs: Vec<FProofNode>,
    pub truncated: bool,
}

/// Decide a focused presentation goal.
pub fn focused_prove(
    left: &FStructure,
    right: &FStructure,
    u: &Universe,
    v: LogicVariant,
) -> Result<Option<FProofNode>, FocusError> {
    check_leaves(left, right, u)?;
    let mut engine = FocusedEngine::new(u, v);
    Ok(engine.prove_goal(left, right))
}

/// Enumerate all focused proofs of a presentation goal, duplicate-free,
/// in deterministic order (decision occurrences left pre-order first,
/// then `invp` construction order).
pub fn focused_enumerate(
    left: &FStructure,
    right: &FStructure,
    u: &Universe,
    v: LogicVariant,
    cap: usize,
) -> Result<Enumeration, FocusError> {
    check_leaves(left, right, u)?;
    let engine = FocusedEngine::new(u, v);
    let state = FJudgment::Pres(left.clone(), right.clone()).normalize(v);
    let mut truncated = false;
    let proofs = engine.enumerate_state(&state, &mut HashSet::new(), cap.max(1), &mut truncated);
    Ok(Enumeration { proofs, truncated })
}

fn check_leaves(left: &FStructure, right: &FStructure, u: &Universe) -> Result<(), FocusError> {
    for s in [left, right] {
        for leaf in s.leaves() {
            let ok = match leaf {
                FStructure::Atom(a) => u.contains_atom(a),
                FStructure::Neg(n) => u.contains_neg(n),
                _ => true,
            };
            if !ok {
                return Err(FocusError::OutsideUniverse(format!("{leaf}")));
            }
        }
    }
    Ok(())
}

// --- the top-level bridge ----------------------------------------------------

/// Translate a polarized structure into a focused one: every leaf is
/// either a positive atom or `_N` with the shift dropped.
pub fn fstructure_of(g: &PolStructure) -> FStructure {
    match g {
        PolStructure::Leaf(p) => match p {
            PosFormula::Atom(a) => FStructure::Atom(a.clone()),
            PosFormula::Down(n) => FStructure::Neg((**n).clone()),
            other => panic!("structure leaf must be an atom or a down shift, got {other}"),
        },
        PolStructure::Times(l, r) => FStructure::times(fstructure_of(l), fstructure_of(r)),
        PolStructure::Oslash(l, r) => FStructure::oslash(fstructure_of(l), fstructure_of(r)),
        PolStructure::Obslash(l, r) => FStructure::obslash(fstructure_of(l), fstructure_of(r)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresOutcome {
    /// one focused proof per initial goal
    Provable(Vec<FProofNode>),
    Unprovable,
}

impl PresOutcome {
    pub fn is_provable(&self) -> bool {
        matches!(self, PresOutcome::Provable(_))
    }
}

/// The goals, universe and engine settings for a decorated presentation:
/// `X = {Γ-, Δ-}` and one goal per pair from `invp(Γ+) × invp(Δ+)`.
pub struct PresProblem {
    pub universe: Universe,
    pub goals: Vec<(FStructure, FStructure)>,
}

pub fn presentation_problem(w: &Presentation) -> PresProblem {
    let dw = decorate_presentation(w);
    let gamma_minus = pol_interp_minus(&dw.left);
    let delta_minus = pol_interp_minus(&dw.right);
    let universe = build_universe([gamma_minus, delta_minus]);
    let lefts = invp(&pol_interp_plus(&dw.left));
    let rights = invp(&pol_interp_plus(&dw.right));
    let mut goals = Vec::new();
    for l in &lefts {
        for r in &rights {
            goals.push((l.clone(), r.clone()));
        }
    }
    PresProblem { universe, goals }
}

/// Decide an unpolarized presentation with the focused engine: decorate,
/// fix the universe from the goal, and require every initial goal
/// provable.
pub fn prove_presentation(w: &Presentation, v: LogicVariant) -> PresOutcome {
    let problem = presentation_problem(w);
    let mut engine = FocusedEngine::new(&problem.universe, v);
    let mut proofs = Vec::with_capacity(problem.goals.len());
    for (l, r) in &problem.goals {
        match engine.prove_goal(l, r) {
            Some(p) => proofs.push(p),
            None => return PresOutcome::Unprovable,
        }
    }
    PresOutcome::Provable(proofs)
}

// --- checker ------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("focused proof check failed at node {path:?}: {reason}")]
pub struct FCheckError {
    pub path: Vec<usize>,
    pub reason: String,
}

/// Validate a focused derivation: every node must instantiate its rule
/// relative to the universe and variant.
pub fn check_fproof(
    p: &FProofNode,
    u: &Universe,
    v: LogicVariant,
) -> Result<(), FCheckError> {
    check_fnode(p, u, v, &mut Vec::new())
}

fn check_fnode(
    node: &FProofNode,
    u: &Universe,
    v: LogicVariant,
    path: &mut Vec<usize>,
) -> Result<(), FCheckError> {
    let fail = |reason: String, path: &[usize]| FCheckError { path: path.to_vec(), reason };
    let premise_concls: Vec<&FJudgment> = node.premises.iter().map(|p| &p.conclusion).collect();
    match (&node.rule, &node.conclusion) {
        (FRule::Decide, FJudgment::Pres(l, r)) => {
            let choice = node
                .focus
                .as_ref()
                .ok_or_else(|| fail("decide without focus metadata".into(), path))?;
            let host = match choice.side {
                Side::Left => l,
                Side::Right => r,
            };
            let (ctx, leaf) = FContext::at(host, &choice.path)
                .ok_or_else(|| fail("focus path invalid".into(), path))?;
            let n = match leaf {
                FStructure::Neg(n) => n.clone(),
                _ => return Err(fail("focus must address a negative leaf".into(), path)),
            };
            if !u.contains_neg(&n) {
                return Err(fail(format!("decision formula {n} outside universe"), path));
            }
            let opposing = match choice.side {
                Side::Left => r,
                Side::Right => l,
            };
            let pats = invp(&negate_neg(&n));
            let pat = pats
                .get(choice.invp_index)
                .ok_or_else(|| fail("invp index out of range".into(), path))?;
            let want =
                FJudgment::Focus(displace(&ctx, opposing), pat.clone()).normalize(v);
            if premise_concls.len() != 1 || *premise_concls[0] != want {
                return Err(fail(format!("decide premise must be {want}"), path));
            }
        }
        (FRule::React, FJudgment::Focus(l, pat)) => {
            let n = match pat {
                FStructure::Neg(n) => n,
                _ => return Err(fail("react needs a negative pattern".into(), path)),
            };
            let want: Vec<FJudgment> = invp(&negate_neg(n))
                .into_iter()
                .map(|s| FJudgment::Pres(l.clone(), s).normalize(v))
                .collect();
            if premise_concls.len() != want.len()
                || premise_concls.iter().zip(&want).any(|(a, b)| **a != *b)
            {
                return Err(fail("react premises must list invp(N^) in order".into(), path));
            }
        }
        (FRule::Id, FJudgment::Focus(l, pat)) => {
            if !node.premises.is_empty() {
                return Err(fail("id with premises".into(), path));
            }
            match (l, pat) {
                (FStructure::Atom(a), FStructure::Atom(b)) if a == b => {}
                _ => return Err(fail("id wants matching atoms".into(), path)),
            }
        }
        (FRule::SplitTimes, FJudgment::Focus(l, pat)) => {
            match (l, pat) {
                (FStructure::Times(a, b), FStructure::Times(pa, pb)) => {
                    let want = [
                        FJudgment::Focus((**a).clone(), (**pa).clone()),
                        FJudgment::Focus((**b).clone(), (**pb).clone()),
                    ];
                    if premise_concls.len() != 2
                        || *premise_concls[0] != want[0]
                        || *premise_concls[1] != want[1]
                    {
                        return Err(fail("tensor split premises mismatch".into(), path));
                    }
                }
                _ => return Err(fail("tensor split wants tensor on both sides".into(), path)),
            }
        }
        (FRule::SplitObslash, FJudgment::Focus(l, pat)) => match (l, pat) {
            (FStructure::Obslash(s, p2), FStructure::Obslash(ps, pp)) => {
                let want = [
                    FJudgment::Focus((**s).clone(), (**ps).clone()),
                    FJudgment::Focus((**p2).clone(), (**pp).clone()),
                ];
                if premise_concls.len() != 2
                    || *premise_concls[0] != want[0]
                    || *premise_concls[1] != want[1]
                {
                    return Err(fail("obslash split premises mismatch".into(), path));
                }
            }
            _ => return Err(fail("obslash split wants \\> on both sides".into(), path)),
        },
        (FRule::SplitOslash, FJudgment::Focus(l, pat)) => match (l, pat) {
            (FStructure::Oslash(p2, s), FStructure::Oslash(pp, ps)) => {
                let want = [
                    FJudgment::Focus((**s).clone(), (**ps).clone()),
                    FJudgment::Focus((**p2).clone(), (**pp).clone()),
                ];
                if premise_concls.len() != 2
                    || *premise_concls[0] != want[0]
                    || *premise_concls[1] != want[1]
                {
                    return Err(fail("oslash split premises mismatch".into(), path));
                }
            }
            _ => return Err(fail("oslash split wants </ on both sides".into(), path)),
        },
        (rule, FJudgment::Focus(l, pat)) if GRISHIN_REWRITES.contains(rule) => {
            if v != LogicVariant::Lgi {
                return Err(fail("distributivity rewrite outside lgi".into(), path));
            }
            let ok = grishin_rewrites(l).into_iter().any(|(r2, s2)| {
                r2 == *rule
                    && premise_concls.len() == 1
                    && *premise_concls[0] == FJudgment::Focus(s2, pat.clone())
            });
            if !ok {
                return Err(fail("rewrite premise does not follow from conclusion".into(), path));
            }
        }
        _ => return Err(fail(format!("rule {} on wrong judgment", node.rule.name()), path)),
    }
    for (i, prem) in node.premises.iter().enumerate() {
        path.push(i);
        check_fnode(prem, u, v, path)?;
        path.pop();
    }
    Ok(())
}

// --- display ------------------------------------------------------------------

impl fmt::Display for FStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, true)
    }
}

impl FStructure {
    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
        match self {
            FStructure::Atom(a) => write!(f, "{a}"),
            FStructure::Neg(n) => match n {
                NegFormula::Atom(_) => write!(f, "{n}"),
                _ => write!(f, "({n})"),
            },
            _ => {
                let (l, r) = self.children().unwrap();
                let op = match self {
                    FStructure::Times(..) => ".",
                    FStructure::Oslash(..) => "</",
                    FStructure::Obslash(..) => "\\>",
                    _ => unreachable!(),
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

impl fmt::Display for FJudgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FJudgment::Pres(l, r) => write!(f, "{l} ; {r}"),
            FJudgment::Focus(l, p) => write!(f, "{l} |- {p}"),
        }
    }
}
