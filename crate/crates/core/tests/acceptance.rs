//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! The criteria pin the library's contract: algebraic laws of negation
//! and decoration, the golden derivation counts of the worked examples,
//! the structural-variant differentials, exact agreement between the
//! unfocused and focused engines, and phase-semantic soundness with
//! countermodel certification.

use grishin_core::focused::{
    build_universe, focused_enumerate, presentation_problem, prove_presentation, sigma, tau,
    FocusedEngine, FStructure,
};
use grishin_core::formula::{negate, polarity, Formula};
use grishin_core::gen::{
    random_formula, random_pol_formula, random_presentation,
};
use grishin_core::parse::{parse_formula, parse_sequent};
use grishin_core::phase::{countermodel_search, valid_spaces, Model};
use grishin_core::polar::{
    decorate, decorate_presentation, forget, negate_neg, pol_interp_minus, pol_negate,
    NegFormula, PolFormula, PolStructure, PosFormula,
};
use grishin_core::structure::{Presentation, Structure};
use grishin_core::unfocused::{prove, LogicVariant, ProveOutcome, SearchLimits};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

const ATOMS: [&str; 4] = ["p", "q", "r", "s"];

fn seq(s: &str) -> Presentation {
    parse_sequent(s).unwrap()
}

fn unfocused_provable(w: &Presentation, v: LogicVariant) -> bool {
    match prove(w, v, SearchLimits::default()).unwrap() {
        ProveOutcome::Provable(_) => true,
        ProveOutcome::Unprovable => false,
        ProveOutcome::Indeterminate => panic!("visited limit hit on {w}"),
    }
}

fn pass(n: u32, what: &str) {
    println!("criterion {n}: PASS - {what}");
}

#[test]
fn criterion_01_involution_polarity_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for _ in 0..500 {
        let a = random_formula(&mut rng, 6, &ATOMS);
        assert_eq!(negate(&negate(&a)), a, "double negation on {a}");
        assert_ne!(polarity(&negate(&a)), polarity(&a), "polarity flip on {a}");
        assert_eq!(parse_formula(&a.to_string()).unwrap(), a, "round trip on {a}");
    }
    pass(1, "involution, polarity flip and parse/print round trip on 500 formulas");
}

#[test]
fn criterion_02_decoration_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    for _ in 0..500 {
        let a = random_formula(&mut rng, 6, &ATOMS);
        let d = decorate(&a);
        assert_eq!(decorate(&negate(&a)), pol_negate(&d), "commutation on {a}");
        assert!(!d.has_vacuous_shift(), "vacuous shift in decoration of {a}");
        assert_eq!(forget(&d), a, "forget . decorate on {a}");
    }
    pass(2, "decoration commutes with negation, no vacuous shifts, forget inverts");
}

#[test]
fn criterion_03_sigma_tau_duality_and_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    for _ in 0..200 {
        match random_pol_formula(&mut rng, 5, &ATOMS) {
            PolFormula::Neg(n) => {
                assert_eq!(sigma(&n), tau(&negate_neg(&n)), "sigma/tau duality on {n}");
                let u = build_universe([n]);
                assert!(u.closure_invariant_holds(), "closure invariant");
            }
            PolFormula::Pos(p) => {
                let n = grishin_core::polar::negate_pos(&p);
                assert_eq!(tau(&p), sigma(&n), "tau/sigma duality on {p}");
            }
        }
    }
    pass(3, "sigma(N) = tau(N^) as sets and the universe closure invariant");
}

const GOLDEN_1: &str = "((p / q) . q) . (p \\ r) ; ~r";
const GOLDEN_2: &str = "(p / (q \\ p)) . ((p / (q \\ p)) \\ p) ; ~p";

#[test]
fn criterion_04_golden_proofs_both_engines() {
    for s in [GOLDEN_1, GOLDEN_2] {
        let w = seq(s);
        assert!(unfocused_provable(&w, LogicVariant::Lg0), "unfocused on {s}");
        assert!(prove_presentation(&w, LogicVariant::Lg0).is_provable(), "focused on {s}");
    }
    pass(4, "both worked-example sequents provable under lg0 by both engines");
}

#[test]
fn criterion_05_golden_focused_counts() {
    for (s, expected) in [(GOLDEN_1, 1usize), (GOLDEN_2, 2usize)] {
        let start = Instant::now();
        let problem = presentation_problem(&seq(s));
        assert_eq!(problem.goals.len(), 1);
        let (l, r) = &problem.goals[0];
        let e = focused_enumerate(l, r, &problem.universe, LogicVariant::Lg0, 1000).unwrap();
        assert!(!e.truncated);
        assert_eq!(e.proofs.len(), expected, "focused count for {s}");
        let elapsed = start.elapsed();
        assert!(elapsed.as_secs_f64() < 5.0, "enumeration under 5s, took {elapsed:?}");
    }
    pass(5, "focused enumeration yields exactly 1 and 2 proofs for the worked examples");
}

/// The compact-calculus image of a formula: implications and
/// coimplications rewritten through the classical identifications.
fn compact_image(f: &Formula) -> Formula {
    use Formula::*;
    let b = |f: Formula| Box::new(f);
    match f {
        PosAtom(_) | NegAtom(_) => f.clone(),
        Tensor(l, r) => Tensor(b(compact_image(l)), b(compact_image(r))),
        Par(l, r) => Par(b(compact_image(l)), b(compact_image(r))),
        And(l, r) => And(b(compact_image(l)), b(compact_image(r))),
        Or(l, r) => Or(b(compact_image(l)), b(compact_image(r))),
        // A/B = A + B^
        RDiv(a, bb) => Par(b(compact_image(a)), b(compact_image(&negate(bb)))),
        // B\A = B^ + A
        LDiv(bb, a) => Par(b(compact_image(&negate(bb))), b(compact_image(a))),
        // A</B = A * B^
        CoRDiv(a, bb) => Tensor(b(compact_image(a)), b(compact_image(&negate(bb)))),
        // B\>A = B^ * A
        CoLDiv(bb, a) => Tensor(b(compact_image(&negate(bb))), b(compact_image(a))),
    }
}

fn compact_presentation(w: &Presentation) -> Presentation {
    fn go(s: &Structure) -> Structure {
        match s {
            Structure::Leaf(f) => Structure::Leaf(compact_image(f)),
            Structure::Times(l, r) => Structure::times(go(l), go(r)),
            Structure::Oslash(l, r) => Structure::oslash(go(l), go(r)),
            Structure::Obslash(l, r) => Structure::obslash(go(l), go(r)),
        }
    }
    Presentation::new(go(&w.left), go(&w.right))
}

#[test]
fn criterion_06_cnl_lemma() {
    // ⟨B\A ; A^*B⟩ and friends at A=p, B=q, coimplication formulas in
    // their structural phrasing
    let sequents = [
        "(q \\ p) ; ~p * q",
        "(q + ~p) ; p </ ~q",
        "(p / q) ; q * ~p",
        "(~p + q) ; ~q \\> p",
    ];
    for s in sequents {
        let w = seq(s);
        assert!(unfocused_provable(&w, LogicVariant::Cnl), "{s} cnl unfocused");
        assert!(prove_presentation(&w, LogicVariant::Cnl).is_provable(), "{s} cnl focused");
        let compact = compact_presentation(&w);
        assert!(
            unfocused_provable(&compact, LogicVariant::CnlCompact),
            "{s} compact image"
        );
    }
    // the first is underivable without the collapse, per the focused
    // decision procedure
    let first = seq(sequents[0]);
    assert!(!prove_presentation(&first, LogicVariant::Lg0).is_provable());
    pass(6, "the four collapse sequents hold in cnl/cnl-compact, first fails in lg0");
}

#[test]
fn criterion_07_grishin_differential() {
    let sequents = [
        "a * (b + c) => (a * b) + c",
        "(a + b) * c => a + (b * c)",
        "a * (b + c) => b + (a * c)",
        "(a + b) * c => (a * c) + b",
    ];
    for s in sequents {
        let w = seq(s);
        assert!(unfocused_provable(&w, LogicVariant::Lgi), "{s} lgi unfocused");
        assert!(prove_presentation(&w, LogicVariant::Lgi).is_provable(), "{s} lgi focused");
        assert!(!unfocused_provable(&w, LogicVariant::Lg0), "{s} lg0 unfocused");
        assert!(!prove_presentation(&w, LogicVariant::Lg0).is_provable(), "{s} lg0 focused");
    }
    pass(7, "the four distributivity inequalities separate lgi from lg0");
}

#[test]
fn criterion_08_engine_equivalence() {
    let variants = [
        LogicVariant::Lg0,
        LogicVariant::Lgi,
        LogicVariant::Cnl,
        LogicVariant::CnlCompact,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    for v in variants {
        let compact = v == LogicVariant::CnlCompact;
        let mut sample: Vec<Presentation> = (0..140)
            .map(|_| random_presentation(&mut rng, 10, &["p", "q", "r"], compact))
            .collect();
        // provable-biased shapes so agreement is tested on real proofs,
        // not just exhausted searches: identity expansions and, outside
        // the compact vocabulary, application trees
        for _ in 0..30 {
            let a = if compact {
                grishin_core::gen::random_compact_formula(&mut rng, 3, &["p", "q"])
            } else {
                random_formula(&mut rng, 3, &["p", "q"])
            };
            sample.push(Presentation::new(
                Structure::Leaf(a.clone()),
                Structure::Leaf(negate(&a)),
            ));
        }
        for _ in 0..30 {
            if compact {
                let a = grishin_core::gen::random_compact_formula(&mut rng, 2, &["p", "q"]);
                let b = grishin_core::gen::random_compact_formula(&mut rng, 2, &["p", "q"]);
                let t = Formula::Tensor(Box::new(a.clone()), Box::new(b.clone()));
                sample.push(Presentation::new(
                    Structure::times(Structure::Leaf(a), Structure::Leaf(b)),
                    Structure::Leaf(negate(&t)),
                ));
            } else {
                sample.push(grishin_core::gen::random_application_presentation(
                    &mut rng,
                    3,
                    &["p", "q", "r"],
                ));
            }
        }
        let mut provable = 0;
        for (i, w) in sample.iter().enumerate() {
            let a = unfocused_provable(w, v);
            let b = prove_presentation(w, v).is_provable();
            assert_eq!(a, b, "engines disagree on {w} under {} (sample {i})", v.name());
            provable += a as usize;
        }
        println!("  {}: {} samples, {provable} provable", v.name(), sample.len());
    }
    pass(8, "unfocused and focused engines agree on 200 presentations per variant");
}

/// The provable corpus: golden sequents paired with the variant they are
/// provable under, plus seeded random provable presentations.
fn provable_corpus() -> Vec<(Presentation, LogicVariant)> {
    let mut corpus: Vec<(Presentation, LogicVariant)> = vec![
        (seq(GOLDEN_1), LogicVariant::Lg0),
        (seq(GOLDEN_2), LogicVariant::Lg0),
        (seq("(q \\ p) ; ~p * q"), LogicVariant::Cnl),
        (seq("(q + ~p) ; p </ ~q"), LogicVariant::Cnl),
        (seq("(p / q) ; q * ~p"), LogicVariant::Cnl),
        (seq("(~p + q) ; ~q \\> p"), LogicVariant::Cnl),
        (seq("a * (b + c) => (a * b) + c"), LogicVariant::Lgi),
        (seq("(a + b) * c => a + (b * c)"), LogicVariant::Lgi),
        (seq("a * (b + c) => b + (a * c)"), LogicVariant::Lgi),
        (seq("(a + b) * c => (a * c) + b"), LogicVariant::Lgi),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(109);
    for v in [LogicVariant::Lg0, LogicVariant::Lgi, LogicVariant::Cnl] {
        // axiom expansions and application trees are always provable;
        // random presentations add shape variety when they happen to be
        for _ in 0..8 {
            let a = random_formula(&mut rng, 3, &["p", "q"]);
            let w = Presentation::new(Structure::Leaf(a.clone()), Structure::Leaf(negate(&a)));
            corpus.push((w, v));
            corpus.push((
                grishin_core::gen::random_application_presentation(&mut rng, 2, &["p", "q"]),
                v,
            ));
        }
        for _ in 0..40 {
            let w = random_presentation(&mut rng, 6, &["p", "q"], false);
            if prove_presentation(&w, v).is_provable() {
                corpus.push((w, v));
            }
        }
    }
    corpus
}

#[test]
fn criterion_09_phase_soundness() {
    let corpus = provable_corpus();
    let mut models_per_variant: Vec<(LogicVariant, Vec<Model>)> = Vec::new();
    for v in [
        LogicVariant::Lg0,
        LogicVariant::Lgi,
        LogicVariant::Cnl,
        LogicVariant::CnlCompact,
    ] {
        let spaces = valid_spaces(v, 50, 3, 209);
        assert_eq!(spaces.len(), 50);
        let mut models = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(309);
        for space in spaces {
            let facts = space.facts();
            let valuation = ["p", "q", "r", "a", "b", "c", "s"]
                .iter()
                .map(|name| (name.to_string(), facts[rng.gen_range(0..facts.len())]))
                .collect();
            let model = Model { space, valuation };
            model.validate().unwrap();
            models.push(model);
        }
        models_per_variant.push((v, models));
    }
    let mut checks = 0usize;
    for (w, v) in &corpus {
        let dw = decorate_presentation(w);
        let models = &models_per_variant.iter().find(|(mv, _)| *mv == *v).unwrap().1;
        for model in models {
            // soundness_check also asserts the four-way equivalence
            assert!(
                model.soundness_check(&dw).unwrap(),
                "provable {w} (variant {}) fails in a model",
                v.name()
            );
            checks += 1;
        }
    }
    assert!(checks >= 50 * corpus.len());
    pass(9, "every provable corpus presentation holds in 50 valid models per variant");
}

#[test]
fn criterion_10_countermodel_certification() {
    let w = seq("p ; q");
    let m = countermodel_search(&w, LogicVariant::Lg0, 2, 210).expect("countermodel at n<=2");
    m.validate().unwrap();
    assert!(!m.soundness_check(&decorate_presentation(&w)).unwrap());

    // no countermodel may ever be produced for a provable presentation
    for (w, v) in provable_corpus() {
        assert!(
            countermodel_search(&w, v, 2, 210).is_none(),
            "countermodel claimed for provable {w} under {}",
            v.name()
        );
    }

    // the distributivity sequent under lg0: a countermodel is expected
    // but finite search is not complete, so record either outcome
    let grishin = seq("a * (b + c) => (a * b) + c");
    match countermodel_search(&grishin, LogicVariant::Lg0, 3, 210) {
        Some(m) => {
            m.validate().unwrap();
            assert!(!m.soundness_check(&decorate_presentation(&grishin)).unwrap());
            println!("  distributivity sequent refuted at carrier size {}", m.space.n);
        }
        None => println!("  no finite countermodel <=3 for the distributivity sequent"),
    }
    pass(10, "countermodel found for p;q at n<=2, none for any provable presentation");
}

fn to_polstructure(s: &FStructure) -> PolStructure {
    match s {
        FStructure::Atom(a) => PolStructure::Leaf(PosFormula::Atom(a.clone())),
        FStructure::Neg(n) => PolStructure::Leaf(PosFormula::Down(Box::new(n.clone()))),
        FStructure::Times(l, r) => {
            PolStructure::Times(Box::new(to_polstructure(l)), Box::new(to_polstructure(r)))
        }
        FStructure::Oslash(l, r) => {
            PolStructure::Oslash(Box::new(to_polstructure(l)), Box::new(to_polstructure(r)))
        }
        FStructure::Obslash(l, r) => {
            PolStructure::Obslash(Box::new(to_polstructure(l)), Box::new(to_polstructure(r)))
        }
    }
}

fn fminus(s: &FStructure) -> NegFormula {
    pol_interp_minus(&to_polstructure(s))
}

fn random_fstructure(rng: &mut ChaCha8Rng, pool: &[FStructure], size: usize) -> FStructure {
    if size <= 1 {
        pool[rng.gen_range(0..pool.len())].clone()
    } else {
        let ls = rng.gen_range(1..size);
        let l = random_fstructure(rng, pool, ls);
        let r = random_fstructure(rng, pool, size - ls);
        match rng.gen_range(0..3) {
            0 => FStructure::times(l, r),
            1 => FStructure::oslash(l, r),
            _ => FStructure::obslash(l, r),
        }
    }
}

#[test]
fn criterion_11_closure_lemmas() {
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    let base: Vec<NegFormula> = ["~p", "~q", "^p", "^q"]
        .iter()
        .map(|s| match grishin_core::parse::parse_pol_formula(s).unwrap() {
            PolFormula::Neg(n) => n,
            _ => unreachable!(),
        })
        .collect();
    let pool = [
        FStructure::Atom("p".into()),
        FStructure::Atom("q".into()),
        FStructure::Neg(base[0].clone()),
        FStructure::Neg(base[1].clone()),
        FStructure::Neg(base[2].clone()),
        FStructure::Neg(base[3].clone()),
    ];

    // display closure: swap, and the two association implications
    let mut nonvacuous = 0;
    for i in 0..100 {
        let pi_size = rng.gen_range(1..=2);
        let pi = random_fstructure(&mut rng, &pool, pi_size);
        let sigma_size = rng.gen_range(1..=2);
        let sigma_s = random_fstructure(&mut rng, &pool, sigma_size);
        let upsilon = random_fstructure(&mut rng, &pool, 1);
        // a universe covering the pool plus the dual needed for the
        // identity seeds below
        let mut x = base.clone();
        x.push(fminus(&FStructure::times(pi.clone(), sigma_s.clone())));
        x.push(fminus(&upsilon));
        let u = build_universe(x);
        let mut engine = FocusedEngine::new(&u, LogicVariant::Lg0);
        // seed every 4th sample with a guaranteed-provable premise: the
        // identity expansion of the tensor pairing
        let (a, b) = if i % 4 == 0 {
            let dual = FStructure::Neg(fminus(&FStructure::times(pi.clone(), sigma_s.clone())));
            (FStructure::times(pi.clone(), sigma_s.clone()), dual)
        } else {
            (FStructure::times(pi.clone(), sigma_s.clone()), upsilon.clone())
        };
        // (a) swap
        if engine.prove_goal(&a, &b).is_some() {
            nonvacuous += 1;
            assert!(engine.prove_goal(&b, &a).is_some(), "swap closure");
            // (b) ⟨Π.Σ ; Υ⟩ => ⟨Π ; Σ\>Υ⟩
            if let FStructure::Times(l, r) = &a {
                assert!(
                    engine
                        .prove_goal(l, &FStructure::obslash((**r).clone(), b.clone()))
                        .is_some(),
                    "closure (b)"
                );
            }
        }
        // (c) ⟨Π ; Σ.Υ⟩ => ⟨Π</Σ ; Υ⟩
        if let FStructure::Times(s2, u2) = &b {
            if engine.prove_goal(&a, &b).is_some() {
                assert!(
                    engine
                        .prove_goal(&FStructure::oslash(a.clone(), (**s2).clone()), u2)
                        .is_some(),
                    "closure (c)"
                );
            }
        }
    }
    assert!(nonvacuous >= 10, "display closure exercised ({nonvacuous} non-vacuous)");

    // Grishin admissibility under lgi: premise shapes from the three
    // interaction groups imply the tensor/tensor conclusion
    let mut grishin_nonvacuous = 0;
    for i in 0..100 {
        let g1;
        let g2;
        let d1;
        let d2;
        if i % 2 == 0 {
            // seeded: premise ⟨Γ2</Δ2 ; Δ1</Γ1⟩ provable by identity
            // expansion: pick Γ2 := dual of ⟨Δ2 . (Δ1</Γ1)⟩ displaced...
            // use the simpler guaranteed instance with the dual leaf
            g2 = random_fstructure(&mut rng, &pool, 1);
            d2 = random_fstructure(&mut rng, &pool, 1);
            d1 = random_fstructure(&mut rng, &pool, 1);
            // the premise ⟨Γ2</Δ2 ; Δ1</Γ1⟩ displaces Γ1 against
            // ⟨(Γ2</Δ2) \> Δ1⟩, so its dual leaf makes an identity instance
            g1 = FStructure::Neg(fminus(&FStructure::obslash(
                FStructure::oslash(g2.clone(), d2.clone()),
                d1.clone(),
            )));
        } else {
            g1 = random_fstructure(&mut rng, &pool, 1);
            g2 = random_fstructure(&mut rng, &pool, 1);
            d1 = random_fstructure(&mut rng, &pool, 1);
            d2 = random_fstructure(&mut rng, &pool, 1);
        }
        let mut x = base.clone();
        for s in [&g1, &g2, &d1, &d2] {
            if let FStructure::Neg(n) = s {
                x.push(n.clone());
            }
        }
        let u = build_universe(x);
        let mut engine = FocusedEngine::new(&u, LogicVariant::Lgi);
        let conclusion = (
            FStructure::times(g1.clone(), g2.clone()),
            FStructure::times(d2.clone(), d1.clone()),
        );
        // group 1: ⟨Γ2</Δ2 ; Δ1</Γ1⟩
        let p1 = (
            FStructure::oslash(g2.clone(), d2.clone()),
            FStructure::oslash(d1.clone(), g1.clone()),
        );
        // group 2: ⟨Δ1\>Γ1 ; Γ2\>Δ2⟩
        let p2 = (
            FStructure::obslash(d1.clone(), g1.clone()),
            FStructure::obslash(g2.clone(), d2.clone()),
        );
        // mixed group: ⟨Δ2</Γ1 ; Δ1\>Γ2⟩
        let p3 = (
            FStructure::oslash(d2.clone(), g1.clone()),
            FStructure::obslash(d1.clone(), g2.clone()),
        );
        for (name, prem) in [("g1", p1), ("g2", p2), ("gm", p3)] {
            if engine.prove_goal(&prem.0, &prem.1).is_some() {
                grishin_nonvacuous += 1;
                assert!(
                    engine.prove_goal(&conclusion.0, &conclusion.1).is_some(),
                    "grishin admissibility {name}"
                );
            }
        }
    }
    assert!(
        grishin_nonvacuous >= 5,
        "grishin admissibility exercised ({grishin_nonvacuous} non-vacuous)"
    );
    pass(11, "display-closure and distributivity admissibility hold as implications");
}
