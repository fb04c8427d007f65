//! Proof search for the Lambek-Grishin calculus (LG) and the classical
//! non-associative Lambek calculus (CNL).
//!
//! The library is organized around three provers over one-sided sequents
//! ("presentations" `⟨Γ ; Δ⟩`, written `Γ ; Δ` in ASCII):
//!
//! * [`unfocused`] — cut-free backward search in the display-style sequent
//!   calculus, with the Grishin linear-distributivity rules (variant `LGI`)
//!   and the structural collapse giving CNL, plus a compact tensor/par-only
//!   CNL calculus used as a cross-check.
//! * [`polar`] — polarized formulas with shift connectives, the
//!   shift-decoration translation, the forgetful maps, and a proof checker
//!   for the polarized calculus (with cut).
//! * [`focused`] — strongly focalized search: a decision procedure built
//!   from synthetic decision/reaction/splitting rules over the subformula
//!   universe of the goal, including exhaustive proof enumeration.
//!
//! [`phase`] implements finite phase spaces: formula valuation, soundness
//! checking of provable sequents, and countermodel search producing
//! unprovability certificates.

pub mod focused;
pub mod formula;
pub mod gen;
pub mod parse;
pub mod phase;
pub mod polar;
pub mod render;
pub mod structure;
pub mod unfocused;

pub use formula::{negate, polarity, Formula, Polarity};
pub use parse::{parse_formula, parse_presentation, parse_sequent, ParseError};
pub use structure::{display, display_class, Occurrence, Presentation, Side, Structure};
pub use unfocused::{LogicVariant, ProofNode, ProveOutcome, SearchLimits};
