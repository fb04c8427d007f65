//! Structures, presentations, the `+`/`-` formula interpretations,
//! occurrences, and closure under the display postulates.
//!
//! A presentation `⟨Γ ; Δ⟩` is an ordered pair of structures. The three
//! display postulates
//!
//! ```text
//! ⟨Γ ; Δ⟩       ~ ⟨Δ ; Γ⟩
//! ⟨Γ.Δ ; Θ⟩     ~ ⟨Γ ; Δ\>Θ⟩
//! ⟨Γ</Δ ; Θ⟩    ~ ⟨Γ ; Δ.Θ⟩
//! ```
//!
//! generate a finite equivalence class for every presentation, inside
//! which any substructure occurrence can be isolated ("displayed") as the
//! whole right-hand component.

use crate::formula::{negate, Formula};
use std::collections::BTreeSet;
use std::collections::VecDeque;
use std::fmt;

/// A binary tree over the structural connectives with formula leaves.
/// `Obslash(l, r)` stores its operands in display order `⟨l \> r⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Structure {
    Leaf(Formula),
    /// `⟨Γ . Δ⟩`
    Times(Box<Structure>, Box<Structure>),
    /// `⟨Γ </ Δ⟩`
    Oslash(Box<Structure>, Box<Structure>),
    /// `⟨Δ \> Γ⟩`
    Obslash(Box<Structure>, Box<Structure>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Presentation {
    pub left: Structure,
    pub right: Structure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    L,
    R,
}

/// Address of a substructure within a presentation: which component, then
/// the child steps from that component's root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence {
    pub side: Side,
    pub path: Vec<Step>,
}

impl Occurrence {
    pub fn new(side: Side, path: Vec<Step>) -> Self {
        Occurrence { side, path }
    }
}

impl Structure {
    pub fn leaf(f: Formula) -> Structure {
        Structure::Leaf(f)
    }

    pub fn times(l: Structure, r: Structure) -> Structure {
        Structure::Times(Box::new(l), Box::new(r))
    }

    pub fn oslash(l: Structure, r: Structure) -> Structure {
        Structure::Oslash(Box::new(l), Box::new(r))
    }

    pub fn obslash(l: Structure, r: Structure) -> Structure {
        Structure::Obslash(Box::new(l), Box::new(r))
    }

    pub fn children(&self) -> Option<(&Structure, &Structure)> {
        match self {
            Structure::Leaf(_) => None,
            Structure::Times(l, r) | Structure::Oslash(l, r) | Structure::Obslash(l, r) => {
                Some((l, r))
            }
        }
    }

    /// Node of this structure addressed by `path`, if the path exists.
    pub fn descend(&self, path: &[Step]) -> Option<&Structure> {
        let mut cur = self;
        for s in path {
            let (l, r) = cur.children()?;
            cur = match s {
                Step::L => l,
                Step::R => r,
            };
        }
        Some(cur)
    }

    /// Total node count (internal nodes and leaves).
    pub fn node_count(&self) -> usize {
        match self.children() {
            None => 1,
            Some((l, r)) => 1 + l.node_count() + r.node_count(),
        }
    }

    pub fn leaves(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Formula>) {
        match self {
            Structure::Leaf(f) => out.push(f),
            Structure::Times(l, r) | Structure::Oslash(l, r) | Structure::Obslash(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }

    pub fn connective_count(&self) -> usize {
        self.leaves().iter().map(|f| f.connective_count()).sum()
    }

    /// Replace every structural connective by `Times`. This implements the
    /// reversible CNL collapse rules as a canonical form.
    pub fn collapse_to_times(&self) -> Structure {
        match self {
            Structure::Leaf(f) => Structure::Leaf(f.clone()),
            Structure::Times(l, r) | Structure::Oslash(l, r) | Structure::Obslash(l, r) => {
                Structure::times(l.collapse_to_times(), r.collapse_to_times())
            }
        }
    }
}

impl Presentation {
    pub fn new(left: Structure, right: Structure) -> Presentation {
        Presentation { left, right }
    }

    pub fn swapped(&self) -> Presentation {
        Presentation { left: self.right.clone(), right: self.left.clone() }
    }

    pub fn component(&self, side: Side) -> &Structure {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn node_count(&self) -> usize {
        self.left.node_count() + self.right.node_count()
    }

    pub fn connective_count(&self) -> usize {
        self.left.connective_count() + self.right.connective_count()
    }

    pub fn leaves(&self) -> Vec<&Formula> {
        let mut out = self.left.leaves();
        out.extend(self.right.leaves());
        out
    }

    pub fn collapse_to_times(&self) -> Presentation {
        Presentation {
            left: self.left.collapse_to_times(),
            right: self.right.collapse_to_times(),
        }
    }

    /// All substructure occurrences, left component in pre-order first.
    pub fn occurrences(&self) -> Vec<(Occurrence, &Structure)> {
        let mut out = Vec::new();
        for (side, s) in [(Side::Left, &self.left), (Side::Right, &self.right)] {
            let mut stack = vec![(Vec::new(), s)];
            while let Some((path, node)) = stack.pop() {
                out.push((Occurrence::new(side, path.clone()), node));
                if let Some((l, r)) = node.children() {
                    let mut pr = path.clone();
                    pr.push(Step::R);
                    stack.push((pr, r));
                    let mut pl = path;
                    pl.push(Step::L);
                    stack.push((pl, l));
                }
            }
        }
        out
    }
}

/// Plus interpretation `Γ+`.
pub fn interp_plus(g: &Structure) -> Formula {
    match g {
        Structure::Leaf(a) => a.clone(),
        Structure::Times(l, r) => {
            Formula::Tensor(Box::new(interp_plus(l)), Box::new(interp_plus(r)))
        }
        // (⟨Δ \> Γ⟩)+ = Δ- \> Γ+
        Structure::Obslash(d, g2) => {
            Formula::CoLDiv(Box::new(interp_minus(d)), Box::new(interp_plus(g2)))
        }
        // (⟨Γ </ Δ⟩)+ = Γ+ </ Δ-
        Structure::Oslash(g2, d) => {
            Formula::CoRDiv(Box::new(interp_plus(g2)), Box::new(interp_minus(d)))
        }
    }
}

/// Minus interpretation `Γ-`; always the linear negation of `Γ+`.
pub fn interp_minus(g: &Structure) -> Formula {
    match g {
        Structure::Leaf(a) => negate(a),
        // (⟨Γ . Δ⟩)- = Δ- + Γ-
        Structure::Times(l, r) => {
            Formula::Par(Box::new(interp_minus(r)), Box::new(interp_minus(l)))
        }
        // (⟨Δ \> Γ⟩)- = Γ- / Δ+
        Structure::Obslash(d, g2) => {
            Formula::RDiv(Box::new(interp_minus(g2)), Box::new(interp_plus(d)))
        }
        // (⟨Γ </ Δ⟩)- = Δ+ \ Γ-
        Structure::Oslash(g2, d) => {
            Formula::LDiv(Box::new(interp_plus(d)), Box::new(interp_minus(g2)))
        }
    }
}

fn dp_neighbors(w: &Presentation, collapse: bool) -> Vec<Presentation> {
    let mut out = vec![w.swapped()];
    // ⟨Γ.Δ ; Θ⟩ -> ⟨Γ ; Δ\>Θ⟩
    if let Structure::Times(g, d) = &w.left {
        out.push(Presentation::new(
            (**g).clone(),
            Structure::obslash((**d).clone(), w.right.clone()),
        ));
    }
    // ⟨Γ ; Δ\>Θ⟩ -> ⟨Γ.Δ ; Θ⟩
    if let Structure::Obslash(d, t) = &w.right {
        out.push(Presentation::new(
            Structure::times(w.left.clone(), (**d).clone()),
            (**t).clone(),
        ));
    }
    // ⟨Γ</Δ ; Θ⟩ -> ⟨Γ ; Δ.Θ⟩
    if let Structure::Oslash(g, d) = &w.left {
        out.push(Presentation::new(
            (**g).clone(),
            Structure::times((**d).clone(), w.right.clone()),
        ));
    }
    // ⟨Γ ; Δ.Θ⟩ -> ⟨Γ</Δ ; Θ⟩
    if let Structure::Times(d, t) = &w.right {
        out.push(Presentation::new(
            Structure::oslash(w.left.clone(), (**d).clone()),
            (**t).clone(),
        ));
    }
    if collapse {
        out = out.into_iter().map(|p| p.collapse_to_times()).collect();
    }
    out
}

fn class_closure(w: &Presentation, collapse: bool) -> BTreeSet<Presentation> {
    let start = if collapse { w.collapse_to_times() } else { w.clone() };
    let mut seen: BTreeSet<Presentation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        for next in dp_neighbors(&cur, collapse) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Closure of `w` under the display postulates. Finite for every input.
pub fn display_class(w: &Presentation) -> BTreeSet<Presentation> {
    class_closure(w, false)
}

/// Display closure with the three structural connectives identified, as
/// in CNL. The collapse rules are reversible, so treating them as a
/// canonical form computes the closure without loops.
pub fn display_class_collapsed(w: &Presentation) -> BTreeSet<Presentation> {
    class_closure(w, true)
}

/// Least member of the display class: the memoization key used by the
/// provers.
pub fn canonical_representative(w: &Presentation, collapse: bool) -> Presentation {
    class_closure(w, collapse)
        .into_iter()
        .next()
        .expect("class contains w")
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DisplayError {
    #[error("occurrence path does not address a node of the presentation")]
    InvalidOccurrence,
}

/// Rewrite `w` through the display postulates so that the substructure at
/// `occ` becomes the entire right component. The result is the unique
/// member of `display_class(w)` displaying that occurrence.
pub fn display(w: &Presentation, occ: &Occurrence) -> Result<Presentation, DisplayError> {
    if w.component(occ.side).descend(&occ.path).is_none() {
        return Err(DisplayError::InvalidOccurrence);
    }
    let (mut gamma, mut target) = match occ.side {
        Side::Right => (w.left.clone(), w.right.clone()),
        Side::Left => (w.right.clone(), w.left.clone()),
    };
    // Invariant: the addressed node sits in `target` at `path`, and the
    // presentation ⟨gamma ; target⟩ is display-equivalent to w.
    for step in &occ.path {
        match (target, step) {
            (Structure::Times(d, t), Step::R) => {
                // ⟨Γ ; Δ.Θ⟩ ~ ⟨Γ</Δ ; Θ⟩
                gamma = Structure::oslash(gamma, *d);
                target = *t;
            }
            (Structure::Times(d, t), Step::L) => {
                // ⟨Γ ; Δ.Θ⟩ ~ ⟨Θ\>Γ ; Δ⟩
                gamma = Structure::obslash(*t, gamma);
                target = *d;
            }
            (Structure::Obslash(d, t), Step::R) => {
                // ⟨Γ ; Δ\>Θ⟩ ~ ⟨Γ.Δ ; Θ⟩
                gamma = Structure::times(gamma, *d);
                target = *t;
            }
            (Structure::Obslash(d, t), Step::L) => {
                // ⟨Γ ; Δ\>Θ⟩ ~ ⟨Θ</Γ ; Δ⟩
                gamma = Structure::oslash(*t, gamma);
                target = *d;
            }
            (Structure::Oslash(g2, d), Step::L) => {
                // ⟨Γ ; Γ'</Δ'⟩ ~ ⟨Δ'.Γ ; Γ'⟩
                gamma = Structure::times(*d, gamma);
                target = *g2;
            }
            (Structure::Oslash(g2, d), Step::R) => {
                // ⟨Γ ; Γ'</Δ'⟩ ~ ⟨Γ'\>Γ... via ⟨Γ' ; Δ'.Γ⟩ ~ ⟨Γ'.Δ'... ⟩: two hops
                // ⟨Γ ; Γ'</Δ'⟩ ~ ⟨Γ' ; Δ'.Γ⟩ ~ ⟨Γ'</Δ' ...⟩; directly: display Δ'
                // from ⟨Γ' ; Δ'.Γ⟩ by the Times/L case: ⟨Γ\>Γ' ; Δ'⟩.
                gamma = Structure::obslash(gamma, *g2);
                target = *d;
            }
            (Structure::Leaf(_), _) => return Err(DisplayError::InvalidOccurrence),
        }
    }
    Ok(Presentation::new(gamma, target))
}

impl Structure {
    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, top: bool) -> fmt::Result {
        match self {
            Structure::Leaf(a) => match a {
                Formula::PosAtom(_) | Formula::NegAtom(_) => write!(f, "{a}"),
                _ => write!(f, "({a})"),
            },
            _ => {
                let (l, r) = self.children().expect("compound");
                let op = match self {
                    Structure::Times(..) => ".",
                    Structure::Oslash(..) => "</",
                    Structure::Obslash(..) => "\\>",
                    Structure::Leaf(_) => unreachable!(),
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

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, true)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.left, self.right)
    }
}
