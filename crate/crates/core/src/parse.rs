//! ASCII parsers for formulas, structures, presentations and polarized
//! formulas.
//!
//! Formula operators: `*` tensor, `+` par, `/` and `\` implications,
//! `</` and `\>` coimplications, `&` and `|` additives, `~p` negative atom.
//! Structural connectives: `.` (tensor), `</`, `\>`. A presentation is
//! `S ; S`; the sequent form `A => B` abbreviates the presentation
//! `A ; B^` (right side negated).
//!
//! There is no operator precedence: operators at the same parenthesis
//! level chain to the left, so `p / q * q` reads `(p / q) * q`. In
//! structure context `</` and `\>` always denote the structural
//! connectives; a formula such as `a </ b` can still occur as a structure
//! leaf via the equivalent `a </ ~b` structural form or the `=>` input.

use crate::formula::{negate, Formula};
use crate::polar::{NegFormula, PolFormula, PosFormula};
use crate::structure::{Presentation, Structure};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: found {found}, expected {}", expected.join(" | "))]
pub struct ParseError {
    pub offset: usize,
    pub found: String,
    pub expected: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Ident(&'a str),
    Tilde,
    LParen,
    RParen,
    Star,
    Plus,
    Slash,     // /
    Backslash, // \
    CoR,       // </
    CoL,       // \>
    Amp,
    Pipe,
    Dot,
    Semi,
    Arrow, // =>
    Up,    // ^
    Down,  // _
}

impl<'a> Tok<'a> {
    fn show(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Tilde => "`~`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Backslash => "`\\`".into(),
            Tok::CoR => "`</`".into(),
            Tok::CoL => "`\\>`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Arrow => "`=>`".into(),
            Tok::Up => "`^`".into(),
            Tok::Down => "`_`".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok<'a>)>,
}

fn lex(src: &str) -> Result<Lexer<'_>, ParseError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len() && matches!(bytes[i], b'a'..=b'z' | b'0'..=b'9' | b'_') {
                    i += 1;
                }
                toks.push((start, Tok::Ident(&src[start..i])));
            }
            b'~' => {
                toks.push((i, Tok::Tilde));
                i += 1;
            }
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b'*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            b'+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            b'/' => {
                toks.push((i, Tok::Slash));
                i += 1;
            }
            b'<' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'/' {
                    toks.push((i, Tok::CoR));
                    i += 2;
                } else {
                    return Err(ParseError {
                        offset: i,
                        found: "`<`".into(),
                        expected: vec!["`</`".into()],
                    });
                }
            }
            b'\\' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'>' {
                    toks.push((i, Tok::CoL));
                    i += 2;
                } else {
                    toks.push((i, Tok::Backslash));
                    i += 1;
                }
            }
            b'&' => {
                toks.push((i, Tok::Amp));
                i += 1;
            }
            b'|' => {
                toks.push((i, Tok::Pipe));
                i += 1;
            }
            b'.' => {
                toks.push((i, Tok::Dot));
                i += 1;
            }
            b';' => {
                toks.push((i, Tok::Semi));
                i += 1;
            }
            b'=' => {
                if i + 1 < bytes.len() && bytes[i + 1] == b'>' {
                    toks.push((i, Tok::Arrow));
                    i += 2;
                } else {
                    return Err(ParseError {
                        offset: i,
                        found: "`=`".into(),
                        expected: vec!["`=>`".into()],
                    });
                }
            }
            b'^' => {
                toks.push((i, Tok::Up));
                i += 1;
            }
            b'_' => {
                toks.push((i, Tok::Down));
                i += 1;
            }
            _ => {
                return Err(ParseError {
                    offset: i,
                    found: format!("`{}`", &src[i..i + 1]),
                    expected: vec!["token".into()],
                })
            }
        }
    }
    Ok(Lexer { src, toks })
}

struct P<'a> {
    lx: Lexer<'a>,
    pos: usize,
}

impl<'a> P<'a> {
    fn peek(&self) -> Option<Tok<'a>> {
        self.lx.toks.get(self.pos).map(|&(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.lx
            .toks
            .get(self.pos)
            .map(|&(o, _)| o)
            .unwrap_or(self.lx.src.len())
    }

    fn bump(&mut self) -> Option<Tok<'a>> {
        let t = self.peek();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, expected: &[&str]) -> ParseError {
        ParseError {
            offset: self.offset(),
            found: self
                .peek()
                .map(|t| t.show())
                .unwrap_or_else(|| "end of input".into()),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, t: Tok<'a>, what: &str) -> Result<(), ParseError> {
        if self.peek() == Some(t) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&[what]))
        }
    }

    fn at_end(&self) -> Result<(), ParseError> {
        if self.peek().is_none() {
            Ok(())
        } else {
            Err(self.err(&["end of input"]))
        }
    }
}

fn formula_op(t: Tok<'_>) -> Option<fn(Box<Formula>, Box<Formula>) -> Formula> {
    match t {
        Tok::Star => Some(Formula::Tensor),
        Tok::Plus => Some(Formula::Par),
        Tok::Slash => Some(Formula::RDiv),
        Tok::Backslash => Some(Formula::LDiv),
        Tok::CoR => Some(Formula::CoRDiv),
        Tok::CoL => Some(Formula::CoLDiv),
        Tok::Amp => Some(Formula::And),
        Tok::Pipe => Some(Formula::Or),
        _ => None,
    }
}

const FORMULA_UNIT: &[&str] = &["atom", "`~`", "`(`"];

fn p_formula_unit(p: &mut P<'_>) -> Result<Formula, ParseError> {
    match p.peek() {
        Some(Tok::Ident(s)) => {
            p.bump();
            Ok(Formula::PosAtom(s.to_string()))
        }
        Some(Tok::Tilde) => {
            p.bump();
            match p.peek() {
                Some(Tok::Ident(s)) => {
                    p.bump();
                    Ok(Formula::NegAtom(s.to_string()))
                }
                _ => Err(p.err(&["atom"])),
            }
        }
        Some(Tok::LParen) => {
            p.bump();
            let f = p_formula_chain(p)?;
            p.expect(Tok::RParen, "`)`")?;
            Ok(f)
        }
        _ => Err(p.err(FORMULA_UNIT)),
    }
}

fn p_formula_chain(p: &mut P<'_>) -> Result<Formula, ParseError> {
    let mut acc = p_formula_unit(p)?;
    while let Some(t) = p.peek() {
        if let Some(ctor) = formula_op(t) {
            p.bump();
            let rhs = p_formula_unit(p)?;
            acc = ctor(Box::new(acc), Box::new(rhs));
        } else {
            break;
        }
    }
    Ok(acc)
}

/// Parse a standalone formula.
pub fn parse_formula(src: &str) -> Result<Formula, ParseError> {
    let mut p = P { lx: lex(src)?, pos: 0 };
    let f = p_formula_chain(&mut p)?;
    p.at_end()?;
    Ok(f)
}

// Structures: formula leaves mixed with the structural operators `.`,
// `</`, `\>`. Inside a level, either kind of operator may start the
// chain, but once the accumulator is structural a formula operator is an
// error.

enum Mixed {
    F(Formula),
    S(Structure),
}

impl Mixed {
    fn into_structure(self) -> Structure {
        match self {
            Mixed::F(f) => Structure::Leaf(f),
            Mixed::S(s) => s,
        }
    }
}

fn p_mixed_unit(p: &mut P<'_>) -> Result<Mixed, ParseError> {
    match p.peek() {
        Some(Tok::Ident(_)) | Some(Tok::Tilde) => Ok(Mixed::F(p_formula_unit(p)?)),
        Some(Tok::LParen) => {
            p.bump();
            let m = p_mixed_chain(p)?;
            p.expect(Tok::RParen, "`)`")?;
            Ok(m)
        }
        _ => Err(p.err(FORMULA_UNIT)),
    }
}

fn p_mixed_chain(p: &mut P<'_>) -> Result<Mixed, ParseError> {
    let mut acc = p_mixed_unit(p)?;
    loop {
        match p.peek() {
            Some(Tok::Dot) => {
                p.bump();
                let rhs = p_mixed_unit(p)?.into_structure();
                acc = Mixed::S(Structure::Times(
                    Box::new(acc.into_structure()),
                    Box::new(rhs),
                ));
            }
            Some(Tok::CoR) => {
                p.bump();
                let rhs = p_mixed_unit(p)?.into_structure();
                acc = Mixed::S(Structure::Oslash(
                    Box::new(acc.into_structure()),
                    Box::new(rhs),
                ));
            }
            Some(Tok::CoL) => {
                p.bump();
                let rhs = p_mixed_unit(p)?.into_structure();
                acc = Mixed::S(Structure::Obslash(
                    Box::new(acc.into_structure()),
                    Box::new(rhs),
                ));
            }
            Some(t) if formula_op(t).is_some() => match acc {
                Mixed::F(f) => {
                    let ctor = formula_op(t).unwrap();
                    p.bump();
                    let rhs = match p_mixed_unit(p)? {
                        Mixed::F(rf) => rf,
                        Mixed::S(_) => return Err(p.err(&["formula operand"])),
                    };
                    acc = Mixed::F(ctor(Box::new(f), Box::new(rhs)));
                }
                Mixed::S(_) => {
                    return Err(p.err(&["`.`", "`</`", "`\\>`", "`;`", "`)`", "end of input"]))
                }
            },
            _ => break,
        }
    }
    Ok(acc)
}

/// Parse a structure (a formula is the single-leaf case).
pub fn parse_structure(src: &str) -> Result<Structure, ParseError> {
    let mut p = P { lx: lex(src)?, pos: 0 };
    let s = p_mixed_chain(&mut p)?.into_structure();
    p.at_end()?;
    Ok(s)
}

/// Parse `S ; S` into a presentation.
pub fn parse_presentation(src: &str) -> Result<Presentation, ParseError> {
    let mut p = P { lx: lex(src)?, pos: 0 };
    let left = p_mixed_chain(&mut p)?.into_structure();
    p.expect(Tok::Semi, "`;`")?;
    let right = p_mixed_chain(&mut p)?.into_structure();
    p.at_end()?;
    Ok(Presentation { left, right })
}

/// Parse either a presentation `S ; S` or a sequent `A => B`; the latter
/// denotes the presentation `A ; B^`.
pub fn parse_sequent(src: &str) -> Result<Presentation, ParseError> {
    let mut p = P { lx: lex(src)?, pos: 0 };
    let left = p_mixed_chain(&mut p)?;
    match p.peek() {
        Some(Tok::Semi) => {
            p.bump();
            let right = p_mixed_chain(&mut p)?.into_structure();
            p.at_end()?;
            Ok(Presentation { left: left.into_structure(), right })
        }
        Some(Tok::Arrow) => {
            p.bump();
            let lhs = match left {
                Mixed::F(f) => f,
                Mixed::S(_) => {
                    return Err(ParseError {
                        offset: p.offset(),
                        found: "structure".into(),
                        expected: vec!["formula left of `=>`".into()],
                    })
                }
            };
            let rhs = p_formula_chain(&mut p)?;
            p.at_end()?;
            Ok(Presentation {
                left: Structure::Leaf(lhs),
                right: Structure::Leaf(negate(&rhs)),
            })
        }
        _ => Err(p.err(&["`;`", "`=>`"])),
    }
}

// Polarized formulas: the formula grammar extended with the shift
// prefixes `^` and `_`. Parsing is untyped first and then sorted, so the
// sort errors carry offsets too.

fn p_pol_unit(p: &mut P<'_>) -> Result<(usize, PolFormula), ParseError> {
    let off = p.offset();
    match p.peek() {
        Some(Tok::Up) => {
            p.bump();
            let (o, inner) = p_pol_unit(p)?;
            match inner {
                PolFormula::Pos(q) => Ok((off, PolFormula::Neg(NegFormula::Up(Box::new(q))))),
                PolFormula::Neg(_) => Err(ParseError {
                    offset: o,
                    found: "negative formula".into(),
                    expected: vec!["positive formula under `^`".into()],
                }),
            }
        }
        Some(Tok::Down) => {
            p.bump();
            let (o, inner) = p_pol_unit(p)?;
            match inner {
                PolFormula::Neg(n) => Ok((off, PolFormula::Pos(PosFormula::Down(Box::new(n))))),
                PolFormula::Pos(_) => Err(ParseError {
                    offset: o,
                    found: "positive formula".into(),
                    expected: vec!["negative formula under `_`".into()],
                }),
            }
        }
        Some(Tok::Ident(s)) => {
            p.bump();
            Ok((off, PolFormula::Pos(PosFormula::Atom(s.to_string()))))
        }
        Some(Tok::Tilde) => {
            p.bump();
            match p.peek() {
                Some(Tok::Ident(s)) => {
                    p.bump();
                    Ok((off, PolFormula::Neg(NegFormula::Atom(s.to_string()))))
                }
                _ => Err(p.err(&["atom"])),
            }
        }
        Some(Tok::LParen) => {
            p.bump();
            let f = p_pol_chain(p)?;
            p.expect(Tok::RParen, "`)`")?;
            Ok((off, f))
        }
        _ => Err(p.err(&["atom", "`~`", "`^`", "`_`", "`(`"])),
    }
}

fn pol_combine(
    off: usize,
    op: Tok<'_>,
    l: PolFormula,
    r: PolFormula,
) -> Result<PolFormula, ParseError> {
    use PolFormula::{Neg, Pos};
    let sorts = |e: &str| ParseError {
        offset: off,
        found: "ill-sorted operands".into(),
        expected: vec![e.to_string()],
    };
    Ok(match (op, l, r) {
        (Tok::Star, Pos(a), Pos(b)) => Pos(PosFormula::Tensor(Box::new(a), Box::new(b))),
        (Tok::Star, ..) => return Err(sorts("positive * positive")),
        (Tok::Plus, Neg(a), Neg(b)) => Neg(NegFormula::Par(Box::new(a), Box::new(b))),
        (Tok::Plus, ..) => return Err(sorts("negative + negative")),
        (Tok::Slash, Neg(a), Pos(b)) => Neg(NegFormula::RDiv(Box::new(a), Box::new(b))),
        (Tok::Slash, ..) => return Err(sorts("negative / positive")),
        (Tok::Backslash, Pos(a), Neg(b)) => Neg(NegFormula::LDiv(Box::new(a), Box::new(b))),
        (Tok::Backslash, ..) => return Err(sorts("positive \\ negative")),
        (Tok::CoR, Pos(a), Neg(b)) => Pos(PosFormula::CoRDiv(Box::new(a), Box::new(b))),
        (Tok::CoR, ..) => return Err(sorts("positive </ negative")),
        (Tok::CoL, Neg(a), Pos(b)) => Pos(PosFormula::CoLDiv(Box::new(a), Box::new(b))),
        (Tok::CoL, ..) => return Err(sorts("negative \\> positive")),
        (Tok::Amp, Neg(a), Neg(b)) => Neg(NegFormula::And(Box::new(a), Box::new(b))),
        (Tok::Amp, ..) => return Err(sorts("negative & negative")),
        (Tok::Pipe, Pos(a), Pos(b)) => Pos(PosFormula::Or(Box::new(a), Box::new(b))),
        (Tok::Pipe, ..) => return Err(sorts("positive | positive")),
        _ => unreachable!("non-operator token"),
    })
}

fn p_pol_chain(p: &mut P<'_>) -> Result<PolFormula, ParseError> {
    let (_, mut acc) = p_pol_unit(p)?;
    while let Some(t) = p.peek() {
        if formula_op(t).is_some() {
            let off = p.offset();
            p.bump();
            let (_, rhs) = p_pol_unit(p)?;
            acc = pol_combine(off, t, acc, rhs)?;
        } else {
            break;
        }
    }
    Ok(acc)
}

/// Parse a polarized formula (`^` = up shift, `_` = down shift).
pub fn parse_pol_formula(src: &str) -> Result<PolFormula, ParseError> {
    let mut p = P { lx: lex(src)?, pos: 0 };
    let f = p_pol_chain(&mut p)?;
    p.at_end()?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Formula::*;

    #[test]
    fn basic_formula() {
        assert_eq!(
            parse_formula("p * ~q").unwrap(),
            Tensor(
                Box::new(Formula::pos_atom("p")),
                Box::new(Formula::neg_atom("q"))
            )
        );
    }

    #[test]
    fn incomplete_input_offset() {
        let e = parse_formula("p *").unwrap_err();
        assert_eq!(e.offset, 3);
        assert!(!e.expected.is_empty());
    }

    #[test]
    fn left_chaining() {
        // no precedence: chains fold left
        assert_eq!(parse_formula("p / q * q").unwrap(), parse_formula("(p / q) * q").unwrap());
    }

    #[test]
    fn structure_connectives() {
        let s = parse_structure("(p / q) . q").unwrap();
        match s {
            Structure::Times(l, r) => {
                assert_eq!(*l, Structure::Leaf(parse_formula("p / q").unwrap()));
                assert_eq!(*r, Structure::Leaf(parse_formula("q").unwrap()));
            }
            _ => panic!("expected structural tensor"),
        }
        // structural reading wins for `</` in structure context
        assert_eq!(
            parse_structure("p </ q").unwrap(),
            Structure::Oslash(
                Box::new(Structure::Leaf(Formula::pos_atom("p"))),
                Box::new(Structure::Leaf(Formula::pos_atom("q")))
            )
        );
    }

    #[test]
    fn sequent_negates_right() {
        let w = parse_sequent("p => q * r").unwrap();
        assert_eq!(w.left, Structure::Leaf(Formula::pos_atom("p")));
        assert_eq!(w.right, Structure::Leaf(parse_formula("~r + ~q").unwrap()));
    }

    #[test]
    fn presentation_splits_on_semi() {
        let w = parse_sequent("(p / q) . q ; ~p").unwrap();
        assert_eq!(w.right, Structure::Leaf(Formula::neg_atom("p")));
    }

    #[test]
    fn polarized_shifts() {
        let f = parse_pol_formula("^p / q").unwrap();
        assert_eq!(f.to_string(), "^p / q");
        // shifts are sort-checked: `^` wants a positive body, `_` a negative one
        assert!(parse_pol_formula("^~p").is_err());
        assert!(parse_pol_formula("_p").is_err());
        assert!(parse_pol_formula("p + q").is_err());
    }
}
