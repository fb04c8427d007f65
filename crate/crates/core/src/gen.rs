//! Seeded random generators for formulas, structures and presentations;
//! used by the test suites and nowhere else in the library.

use crate::formula::Formula;
use crate::polar::{NegFormula, PolFormula, PosFormula};
use crate::structure::{Presentation, Structure};
use rand::Rng;

/// Random formula of depth at most `depth` over the given atoms.
pub fn random_formula(rng: &mut impl Rng, depth: usize, atoms: &[&str]) -> Formula {
    if depth == 0 || rng.gen_bool(0.3) {
        let name = atoms[rng.gen_range(0..atoms.len())].to_string();
        if rng.gen_bool(0.5) {
            Formula::PosAtom(name)
        } else {
            Formula::NegAtom(name)
        }
    } else {
        let l = Box::new(random_formula(rng, depth - 1, atoms));
        let r = Box::new(random_formula(rng, depth - 1, atoms));
        match rng.gen_range(0..8) {
            0 => Formula::Tensor(l, r),
            1 => Formula::Par(l, r),
            2 => Formula::RDiv(l, r),
            3 => Formula::LDiv(l, r),
            4 => Formula::CoRDiv(l, r),
            5 => Formula::CoLDiv(l, r),
            6 => Formula::And(l, r),
            _ => Formula::Or(l, r),
        }
    }
}

/// Random formula in the compact CNL vocabulary.
pub fn random_compact_formula(rng: &mut impl Rng, depth: usize, atoms: &[&str]) -> Formula {
    if depth == 0 || rng.gen_bool(0.35) {
        let name = atoms[rng.gen_range(0..atoms.len())].to_string();
        if rng.gen_bool(0.5) {
            Formula::PosAtom(name)
        } else {
            Formula::NegAtom(name)
        }
    } else {
        let l = Box::new(random_compact_formula(rng, depth - 1, atoms));
        let r = Box::new(random_compact_formula(rng, depth - 1, atoms));
        match rng.gen_range(0..4) {
            0 => Formula::Tensor(l, r),
            1 => Formula::Par(l, r),
            2 => Formula::And(l, r),
            _ => Formula::Or(l, r),
        }
    }
}

/// Random positive polarized formula.
pub fn random_pos_formula(rng: &mut impl Rng, depth: usize, atoms: &[&str]) -> PosFormula {
    if depth == 0 || rng.gen_bool(0.3) {
        if rng.gen_bool(0.7) {
            PosFormula::Atom(atoms[rng.gen_range(0..atoms.len())].to_string())
        } else {
            PosFormula::Down(Box::new(NegFormula::Atom(
                atoms[rng.gen_range(0..atoms.len())].to_string(),
            )))
        }
    } else {
        match rng.gen_range(0..6) {
            0 => PosFormula::Tensor(
                Box::new(random_pos_formula(rng, depth - 1, atoms)),
                Box::new(random_pos_formula(rng, depth - 1, atoms)),
            ),
            1 => PosFormula::CoRDiv(
                Box::new(random_pos_formula(rng, depth - 1, atoms)),
                Box::new(random_neg_formula(rng, depth - 1, atoms)),
            ),
            2 => PosFormula::CoLDiv(
                Box::new(random_neg_formula(rng, depth - 1, atoms)),
                Box::new(random_pos_formula(rng, depth - 1, atoms)),
            ),
            3 => PosFormula::Or(
                Box::new(random_pos_formula(rng, depth - 1, atoms)),
                Box::new(random_pos_formula(rng, depth - 1, atoms)),
            ),
            _ => PosFormula::Down(Box::new(random_neg_formula(rng, depth - 1, atoms))),
        }
    }
}

/// Random negative polarized formula.
pub fn random_neg_formula(rng: &mut impl Rng, depth: usize, atoms: &[&str]) -> NegFormula {
    if depth == 0 || rng.gen_bool(0.3) {
        if rng.gen_bool(0.7) {
            NegFormula::Atom(atoms[rng.gen_range(0..atoms.len())].to_string())
        } else {
            NegFormula::Up(Box::new(PosFormula::Atom(
                atoms[rng.gen_range(0..atoms.len())].to_string(),
            )))
        }
    } else {
        match rng.gen_range(0..6) {
            0 => NegFormula::Par(
                Box::new(random_neg_formula(rng, depth - 1, atoms)),
                Box::new(random_neg_formula(rng, depth - 1, atoms)),
            ),
            1 => NegFormula::LDiv(
                Box::new(random_pos_formula(rng, depth - 1, atoms)),
                Box::new(random_neg_formula(rng, depth - 1, atoms)),
            ),
            2 => NegFormula::RDiv(
                Box::new(random_neg_formula(rng, depth - 1, atoms)),
                Box::new(random_pos_formula(rng, depth - 1, atoms)),
            ),
            3 => NegFormula::And(
                Box::new(random_neg_formula(rng, depth - 1, atoms)),
                Box::new(random_neg_formula(rng, depth - 1, atoms)),
            ),
            _ => NegFormula::Up(Box::new(random_pos_formula(rng, depth - 1, atoms))),
        }
    }
}

pub fn random_pol_formula(rng: &mut impl Rng, depth: usize, atoms: &[&str]) -> PolFormula {
    if rng.gen_bool(0.5) {
        PolFormula::Pos(random_pos_formula(rng, depth, atoms))
    } else {
        PolFormula::Neg(random_neg_formula(rng, depth, atoms))
    }
}

fn random_structure_budgeted(
    rng: &mut impl Rng,
    leaf_budget: usize,
    formula_depth: usize,
    atoms: &[&str],
    compact: bool,
) -> Structure {
    if leaf_budget <= 1 {
        let f = if compact {
            random_compact_formula(rng, formula_depth, atoms)
        } else {
            random_formula(rng, formula_depth, atoms)
        };
        return Structure::Leaf(f);
    }
    let left_budget = rng.gen_range(1..leaf_budget);
    let l = random_structure_budgeted(rng, left_budget, formula_depth, atoms, compact);
    let r = random_structure_budgeted(rng, leaf_budget - left_budget, formula_depth, atoms, compact);
    if compact {
        Structure::times(l, r)
    } else {
        match rng.gen_range(0..3) {
            0 => Structure::times(l, r),
            1 => Structure::oslash(l, r),
            _ => Structure::obslash(l, r),
        }
    }
}

/// Random presentation with a bounded total connective count. `compact`
/// restricts leaves to the compact CNL vocabulary and structures to
/// tensors.
pub fn random_presentation(
    rng: &mut impl Rng,
    max_connectives: usize,
    atoms: &[&str],
    compact: bool,
) -> Presentation {
    loop {
        let left_leaves = rng.gen_range(1..=2);
        let right_leaves = rng.gen_range(1..=2);
        let depth = rng.gen_range(1..=3);
        let w = Presentation::new(
            random_structure_budgeted(rng, left_leaves, depth, atoms, compact),
            random_structure_budgeted(rng, right_leaves, depth, atoms, compact),
        );
        if w.connective_count() <= max_connectives {
            return w;
        }
    }
}

/// Structure that derives the goal formula by nested applications: the
/// goal `A` expands to `(A/x) . x` or `x . (x\A)` at random. The returned
/// presentation pairs it against the negated goal, so it is provable in
/// every variant.
pub fn random_application_presentation(
    rng: &mut impl Rng,
    depth: usize,
    atoms: &[&str],
) -> Presentation {
    fn expand(rng: &mut impl Rng, goal: Formula, depth: usize, atoms: &[&str]) -> Structure {
        if depth == 0 || rng.gen_bool(0.4) {
            return Structure::Leaf(goal);
        }
        let x = Formula::PosAtom(atoms[rng.gen_range(0..atoms.len())].to_string());
        if rng.gen_bool(0.5) {
            let functor = Formula::RDiv(Box::new(goal), Box::new(x.clone()));
            Structure::times(
                expand(rng, functor, depth - 1, atoms),
                expand(rng, x, depth - 1, atoms),
            )
        } else {
            let functor = Formula::LDiv(Box::new(x.clone()), Box::new(goal));
            Structure::times(
                expand(rng, x, depth - 1, atoms),
                expand(rng, functor, depth - 1, atoms),
            )
        }
    }
    let goal = Formula::PosAtom(atoms[rng.gen_range(0..atoms.len())].to_string());
    let left = expand(rng, goal.clone(), depth, atoms);
    Presentation::new(left, Structure::Leaf(crate::formula::negate(&goal)))
}
