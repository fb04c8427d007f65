//! Proof output: ASCII trees, LaTeX (`\infer` macros) and JSON.

use crate::focused::{FJudgment, FProofNode};
use crate::formula::Formula;
use crate::structure::{Occurrence, Presentation, Side, Step, Structure};
use crate::unfocused::ProofNode;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Latex,
    Json,
}

fn occurrence_json(occ: &Occurrence) -> Value {
    json!({
        "side": match occ.side { Side::Left => "left", Side::Right => "right" },
        "path": occ.path.iter().map(|s| match s { Step::L => "l", Step::R => "r" }).collect::<String>(),
    })
}

// --- unfocused proofs -------------------------------------------------------

pub fn proof_ascii(p: &ProofNode) -> String {
    let mut out = String::new();
    ascii_node(p, "", true, true, &mut out);
    out
}

fn ascii_node(p: &ProofNode, prefix: &str, last: bool, root: bool, out: &mut String) {
    if root {
        out.push_str(&format!("[{}] {}\n", p.rule.name(), p.conclusion));
    } else {
        out.push_str(prefix);
        out.push_str(if last { "`-- " } else { "|-- " });
        out.push_str(&format!("[{}] {}\n", p.rule.name(), p.conclusion));
    }
    let child_prefix = if root {
        String::new()
    } else {
        format!("{}{}", prefix, if last { "    " } else { "|   " })
    };
    for (i, prem) in p.premises.iter().enumerate() {
        ascii_node(prem, &child_prefix, i + 1 == p.premises.len(), false, out);
    }
}

pub fn proof_json(p: &ProofNode) -> Value {
    json!({
        "rule": p.rule.name(),
        "conclusion": p.conclusion.to_string(),
        "main": p.main.as_ref().map(occurrence_json).unwrap_or(Value::Null),
        "premises": p.premises.iter().map(proof_json).collect::<Vec<_>>(),
    })
}

fn latex_escape(s: &str) -> String {
    s.replace('\\', "\\backslash ").replace('&', "\\&").replace('_', "\\_")
}

fn formula_latex(f: &Formula) -> String {
    use Formula::*;
    match f {
        PosAtom(a) => latex_escape(a),
        NegAtom(a) => format!("\\overline{{{}}}", latex_escape(a)),
        Tensor(l, r) => format!("({} \\varotimes {})", formula_latex(l), formula_latex(r)),
        Par(l, r) => format!("({} \\varoplus {})", formula_latex(l), formula_latex(r)),
        RDiv(l, r) => format!("({} / {})", formula_latex(l), formula_latex(r)),
        LDiv(l, r) => format!("({} \\backslash {})", formula_latex(l), formula_latex(r)),
        CoRDiv(l, r) => format!("({} \\varoslash {})", formula_latex(l), formula_latex(r)),
        CoLDiv(l, r) => format!("({} \\varobslash {})", formula_latex(l), formula_latex(r)),
        And(l, r) => format!("({} \\land {})", formula_latex(l), formula_latex(r)),
        Or(l, r) => format!("({} \\lor {})", formula_latex(l), formula_latex(r)),
    }
}

fn structure_latex(s: &Structure) -> String {
    match s {
        Structure::Leaf(f) => formula_latex(f),
        Structure::Times(l, r) => {
            format!("\\langle {} \\cdot {} \\rangle", structure_latex(l), structure_latex(r))
        }
        Structure::Oslash(l, r) => {
            format!("\\langle {} \\varoslash {} \\rangle", structure_latex(l), structure_latex(r))
        }
        Structure::Obslash(l, r) => {
            format!("\\langle {} \\varobslash {} \\rangle", structure_latex(l), structure_latex(r))
        }
    }
}

fn presentation_latex(w: &Presentation) -> String {
    format!("{} \\ ; \\ {} \\vdash", structure_latex(&w.left), structure_latex(&w.right))
}

pub fn proof_latex(p: &ProofNode) -> String {
    fn node(p: &ProofNode) -> String {
        let premises: Vec<String> = p.premises.iter().map(node).collect();
        format!(
            "\\infer[{}]{{{}}}{{{}}}",
            latex_escape(p.rule.name()),
            presentation_latex(&p.conclusion),
            premises.join(" & ")
        )
    }
    format!("$${}$$", node(p))
}

pub fn render_proof(p: &ProofNode, format: Format) -> String {
    match format {
        Format::Ascii => proof_ascii(p),
        Format::Latex => proof_latex(p),
        Format::Json => serde_json::to_string_pretty(&proof_json(p)).expect("json"),
    }
}

// --- focused proofs -----------------------------------------------------------

pub fn fproof_ascii(p: &FProofNode) -> String {
    let mut out = String::new();
    fascii_node(p, "", true, true, &mut out);
    out
}

fn fascii_node(p: &FProofNode, prefix: &str, last: bool, root: bool, out: &mut String) {
    if root {
        out.push_str(&format!("[{}] {}\n", p.rule.name(), p.conclusion));
    } else {
        out.push_str(prefix);
        out.push_str(if last { "`-- " } else { "|-- " });
        out.push_str(&format!("[{}] {}\n", p.rule.name(), p.conclusion));
    }
    let child_prefix = if root {
        String::new()
    } else {
        format!("{}{}", prefix, if last { "    " } else { "|   " })
    };
    for (i, prem) in p.premises.iter().enumerate() {
        fascii_node(prem, &child_prefix, i + 1 == p.premises.len(), false, out);
    }
}

pub fn fproof_json(p: &FProofNode) -> Value {
    let focus = p.focus.as_ref().map(|c| {
        json!({
            "side": match c.side { Side::Left => "left", Side::Right => "right" },
            "path": c.path.iter().map(|s| match s { Step::L => "l", Step::R => "r" }).collect::<String>(),
            "invp_index": c.invp_index,
        })
    });
    json!({
        "rule": p.rule.name(),
        "judgment": match p.conclusion { FJudgment::Pres(..) => "presentation", FJudgment::Focus(..) => "focus" },
        "conclusion": p.conclusion.to_string(),
        "focus": focus.unwrap_or(Value::Null),
        "premises": p.premises.iter().map(fproof_json).collect::<Vec<_>>(),
    })
}

pub fn fproof_latex(p: &FProofNode) -> String {
    fn node(p: &FProofNode) -> String {
        let premises: Vec<String> = p.premises.iter().map(node).collect();
        let concl = latex_escape(&p.conclusion.to_string());
        format!("\\infer[{}]{{{}}}{{{}}}", latex_escape(p.rule.name()), concl, premises.join(" & "))
    }
    format!("$${}$$", node(p))
}

pub fn render_fproof(p: &FProofNode, format: Format) -> String {
    match format {
        Format::Ascii => fproof_ascii(p),
        Format::Latex => fproof_latex(p),
        Format::Json => serde_json::to_string_pretty(&fproof_json(p)).expect("json"),
    }
}

// --- polarized proofs ----------------------------------------------------------

use crate::polar::{PolJudgment, PolProofNode};

pub fn pol_proof_json(p: &PolProofNode) -> Value {
    json!({
        "rule": p.rule.name(),
        "judgment": match p.conclusion { PolJudgment::Pres(_) => "presentation", PolJudgment::Stoup(_) => "stoup" },
        "conclusion": p.conclusion.to_string(),
        "premises": p.premises.iter().map(pol_proof_json).collect::<Vec<_>>(),
    })
}
