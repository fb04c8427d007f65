//! `grishin` — prove, enumerate and refute sequents of the Lambek-Grishin
//! and classical non-associative Lambek calculi.
//!
//! Exit codes: 0 = provable (or: all corpus entries as expected, model
//! valid, countermodel found), 1 = the negative outcome, 2 = error or
//! indeterminate search.

use clap::{Args, Parser, Subcommand, ValueEnum};
use grishin_core::focused::{
    focused_enumerate, presentation_problem, prove_presentation, PresOutcome,
};
use grishin_core::parse::{parse_formula, parse_sequent};
use grishin_core::phase::{countermodel_search, ModelFile};
use grishin_core::polar::decorate;
use grishin_core::render::{render_fproof, render_proof, Format};
use grishin_core::structure::Presentation;
use grishin_core::unfocused::{prove, LogicVariant, ProveOutcome, SearchLimits};
use rayon::prelude::*;
use std::fs;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "grishin", version, about = "Proof search for LG and CNL sequents")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Lg0,
    Lgi,
    Cnl,
    CnlCompact,
}

impl From<VariantArg> for LogicVariant {
    fn from(v: VariantArg) -> LogicVariant {
        match v {
            VariantArg::Lg0 => LogicVariant::Lg0,
            VariantArg::Lgi => LogicVariant::Lgi,
            VariantArg::Cnl => LogicVariant::Cnl,
            VariantArg::CnlCompact => LogicVariant::CnlCompact,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Focused,
    Unfocused,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Ascii,
    Latex,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Ascii => Format::Ascii,
            FormatArg::Latex => Format::Latex,
            FormatArg::Json => Format::Json,
        }
    }
}

/// Inline input or a file holding it; exactly one source.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// inline sequent/formula text
    input: Option<String>,
    /// read the input from a file instead
    #[arg(long)]
    file: Option<String>,
}

impl Input {
    fn read(&self) -> Result<String, String> {
        match (&self.input, &self.file) {
            (Some(s), None) => Ok(s.clone()),
            (None, Some(path)) => {
                fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))
            }
            _ => Err("exactly one input source".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide a presentation `S ; S` or sequent `A => B`
    Prove {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "lg0")]
        logic: VariantArg,
        #[arg(long, value_enum, default_value = "focused")]
        engine: EngineArg,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
        /// visited-state limit for the unfocused engine
        #[arg(long, default_value_t = 1_000_000)]
        max_visited: usize,
        /// on UNPROVABLE, also search for a countermodel certificate
        #[arg(long)]
        certify: bool,
        /// carrier-size bound for --certify
        #[arg(long, default_value_t = 2)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustively enumerate focused proofs
    Enumerate {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "lg0")]
        logic: VariantArg,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
        /// stop after this many proofs per goal
        #[arg(long, default_value_t = 100)]
        cap: usize,
    },
    /// Decorate a formula with polarity shifts (and show the round trip)
    Translate {
        #[command(flatten)]
        input: Input,
    },
    /// Search for a finite phase countermodel certifying unprovability
    Countermodel {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "lg0")]
        logic: VariantArg,
        #[arg(long, default_value_t = 2)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Validate a phase-model JSON file
    CheckModel {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "lg0")]
        logic: VariantArg,
    },
    /// Run a corpus file: `variant TAB sequent TAB expected(P|U)` per line
    Corpus {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "focused")]
        engine: EngineArg,
        #[arg(long, default_value_t = 1_000_000)]
        max_visited: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_input_sequent(text: &str) -> Result<Presentation, String> {
    parse_sequent(text.trim()).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Prove {
            input,
            logic,
            engine,
            format,
            max_visited,
            certify,
            max_n,
            seed,
        } => {
            let w = parse_input_sequent(&input.read()?)?;
            let v: LogicVariant = logic.into();
            let format: Format = format.into();
            match engine {
                EngineArg::Focused => match prove_presentation(&w, v) {
                    PresOutcome::Provable(proofs) => {
                        println!("PROVABLE");
                        for p in &proofs {
                            println!("{}", render_fproof(p, format));
                        }
                        Ok(ExitCode::SUCCESS)
                    }
                    PresOutcome::Unprovable => {
                        println!("UNPROVABLE");
                        if certify {
                            report_countermodel(&w, v, max_n, seed);
                        }
                        Ok(ExitCode::from(1))
                    }
                },
                EngineArg::Unfocused => {
                    let lim = SearchLimits { max_visited };
                    match prove(&w, v, lim).map_err(|e| e.to_string())? {
                        ProveOutcome::Provable(p) => {
                            println!("PROVABLE");
                            println!("{}", render_proof(&p, format));
                            Ok(ExitCode::SUCCESS)
                        }
                        ProveOutcome::Unprovable => {
                            println!("UNPROVABLE");
                            if certify {
                                report_countermodel(&w, v, max_n, seed);
                            }
                            Ok(ExitCode::from(1))
                        }
                        ProveOutcome::Indeterminate => {
                            println!("INDETERMINATE (visited-state limit reached)");
                            Ok(ExitCode::from(2))
                        }
                    }
                }
            }
        }
        Command::Enumerate { input, logic, format, cap } => {
            let w = parse_input_sequent(&input.read()?)?;
            let v: LogicVariant = logic.into();
            let format: Format = format.into();
            let problem = presentation_problem(&w);
            let mut total: usize = 1;
            let mut truncated = false;
            let mut printed = Vec::new();
            for (l, r) in &problem.goals {
                let e = focused_enumerate(l, r, &problem.universe, v, cap)
                    .map_err(|e| e.to_string())?;
                truncated |= e.truncated;
                total = total.saturating_mul(e.proofs.len());
                printed.push(e);
            }
            println!("count: {total}{}", if truncated { " (truncated)" } else { "" });
            for (i, e) in printed.iter().enumerate() {
                if problem.goals.len() > 1 {
                    println!("goal {} of {}:", i + 1, printed.len());
                }
                for p in &e.proofs {
                    println!("{}", render_fproof(p, format));
                }
            }
            Ok(if total > 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Translate { input } => {
            let f = parse_formula(input.read()?.trim()).map_err(|e| e.to_string())?;
            let d = decorate(&f);
            println!("{d}");
            let back = grishin_core::polar::forget(&d);
            if back != f {
                return Err("internal: decoration round trip failed".into());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Countermodel { input, logic, max_n, seed } => {
            let w = parse_input_sequent(&input.read()?)?;
            match countermodel_search(&w, logic.into(), max_n, seed) {
                Some(model) => {
                    println!("countermodel found (carrier size {}):", model.space.n);
                    println!("{model}");
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("no countermodel found up to carrier size {max_n}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::CheckModel { input, logic } => {
            let text = input.read()?;
            let file: ModelFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
            let model = file.into_model(logic.into());
            match model.validate() {
                Ok(()) => {
                    println!("model ok (carrier size {})", model.space.n);
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    println!("invalid model: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Corpus { input, engine, max_visited } => {
            let text = input.read()?;
            let entries = parse_corpus(&text)?;
            let results: Vec<(usize, String, Result<bool, String>)> = entries
                .par_iter()
                .map(|entry| {
                    let verdict = match engine {
                        EngineArg::Focused => {
                            Ok(prove_presentation(&entry.sequent, entry.variant).is_provable())
                        }
                        EngineArg::Unfocused => {
                            match prove(&entry.sequent, entry.variant, SearchLimits { max_visited })
                            {
                                Ok(ProveOutcome::Provable(_)) => Ok(true),
                                Ok(ProveOutcome::Unprovable) => Ok(false),
                                Ok(ProveOutcome::Indeterminate) => {
                                    Err("indeterminate".to_string())
                                }
                                Err(e) => Err(e.to_string()),
                            }
                        }
                    };
                    (entry.line, entry.text.clone(), verdict)
                })
                .collect();
            let mut failures = 0;
            for ((line, text, verdict), entry) in results.iter().zip(&entries) {
                let status = match verdict {
                    Ok(got) if *got == entry.expected => "ok",
                    Ok(_) => {
                        failures += 1;
                        "MISMATCH"
                    }
                    Err(_) => {
                        failures += 1;
                        "ERROR"
                    }
                };
                println!(
                    "line {line}: [{}] {} expected {} got {} -> {status}",
                    entry.variant.name(),
                    text,
                    if entry.expected { "P" } else { "U" },
                    match verdict {
                        Ok(true) => "P",
                        Ok(false) => "U",
                        Err(_) => "?",
                    },
                );
            }
            println!("{} entries, {} failures", entries.len(), failures);
            Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn report_countermodel(w: &Presentation, v: LogicVariant, max_n: usize, seed: u64) {
    match countermodel_search(w, v, max_n, seed) {
        Some(model) => {
            println!("countermodel (carrier size {}):", model.space.n);
            println!("{model}");
        }
        None => println!("no countermodel found up to carrier size {max_n}"),
    }
}

struct CorpusEntry {
    line: usize,
    variant: LogicVariant,
    sequent: Presentation,
    text: String,
    expected: bool,
}

fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, String> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split('\t').collect();
        if parts.len() != 3 {
            return Err(format!("line {}: want `variant TAB sequent TAB P|U`", i + 1));
        }
        let variant = match parts[0].trim() {
            "lg0" => LogicVariant::Lg0,
            "lgi" => LogicVariant::Lgi,
            "cnl" => LogicVariant::Cnl,
            "cnl-compact" => LogicVariant::CnlCompact,
            other => return Err(format!("line {}: unknown variant `{other}`", i + 1)),
        };
        let sequent = parse_sequent(parts[1].trim())
            .map_err(|e| format!("line {}: {e}", i + 1))?;
        let expected = match parts[2].trim() {
            "P" => true,
            "U" => false,
            other => return Err(format!("line {}: expected P or U, got `{other}`", i + 1)),
        };
        out.push(CorpusEntry {
            line: i + 1,
            variant,
            sequent,
            text: parts[1].trim().to_string(),
            expected,
        });
    }
    Ok(out)
}
