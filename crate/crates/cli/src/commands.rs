//! The `snalab` subcommands. Each writes its report to `out` and returns
//! whether the mathematical check passed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use snalab_core::algebra::suites::{verify_kleene, verify_nelson, verify_sna};
use snalab_core::centered::{center_report, representable_as_twist, Representation};
use snalab_core::congruence::{open_implicative_filters, theta_of_filter};
use snalab_core::residuation::{residuated_view, term_translation_gap, verify_nelson_lattice, verify_translation};
use snalab_core::srl::verify_srl;
use snalab_core::twist::{quotient_srl, twist_filtered, twist_full, TwistAlgebra};
use snalab_core::varieties::{check_chain_variety, subdirect_embedding};
use snalab_core::{CheckMode, SnaAlgebra, Srl, Verdict};
use thiserror::Error;

use crate::dot::hasse_dot;
use crate::format::{load, render_json, render_text, AlgebraFile, InputError, Loaded};

#[derive(Debug, Parser)]
#[command(
    name = "snalab",
    version,
    about = "Finite subresiduated lattices and subresiduated Nelson algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Srl,
    Kleene,
    Nelson,
    Sna,
    NelsonLattice,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the result here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Write JSON instead of the text format.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a class, printing the least witness of each failure.
    Check {
        file: PathBuf,
        /// Defaults to srl for sr-lattice files and sna otherwise.
        #[arg(long, value_enum)]
        kind: Option<CheckKind>,
        /// Report every failing axiom instead of stopping at the first.
        #[arg(long)]
        full_report: bool,
    },
    /// Build the twist K(A), or K(A, F) for the filter above an element.
    Twist {
        file: PathBuf,
        /// Name of the least element of the filter.
        #[arg(long)]
        filter: Option<String>,
        #[command(flatten)]
        out: Output,
    },
    /// Build the sr-lattice T/θ.
    Quotient {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// List open implicative filters with their congruences.
    Congruences { file: PathBuf },
    /// Test membership in the variety generated by chains.
    Variety { file: PathBuf },
    /// Report the center, (CK), (C) and representability as a twist.
    Center { file: PathBuf },
    /// Emit the Hasse diagram in DOT.
    Dot {
        file: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check the residuated operations of a twist.
    Residuated { file: PathBuf },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Math(String),
    #[error("writing output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            _ => 2,
        }
    }
}

fn math<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Math(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    fn from_bool(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
        }
    }
}

fn need_srl(loaded: Loaded, what: &str) -> Result<Srl, CliError> {
    match loaded {
        Loaded::Srl(s) => Ok(s),
        _ => Err(CliError::Usage(format!("{what} needs an srl file"))),
    }
}

fn need_sna(loaded: Loaded, what: &str) -> Result<(SnaAlgebra, Option<TwistAlgebra>), CliError> {
    match loaded {
        Loaded::Sna { algebra, twist } => Ok((algebra, twist)),
        _ => Err(CliError::Usage(format!("{what} needs an sna file"))),
    }
}

fn need_twist(loaded: Loaded, what: &str) -> Result<TwistAlgebra, CliError> {
    match loaded {
        Loaded::Srl(s) => twist_full(&s).map_err(math),
        Loaded::Sna { twist: Some(k), .. } => Ok(k),
        _ => Err(CliError::Usage(format!(
            "{what} needs an srl file or an sna file with twist_of"
        ))),
    }
}

fn write_verdict(out: &mut dyn Write, v: &Verdict) -> std::io::Result<()> {
    if v.passed() {
        writeln!(out, "{}: PASS", v.suite)
    } else {
        writeln!(out, "{}: FAIL", v.suite)?;
        for f in &v.failures {
            writeln!(out, "  {f}")?;
        }
        Ok(())
    }
}

fn emit(out: &mut dyn Write, o: &Output, file: &AlgebraFile) -> Result<(), CliError> {
    let text = if o.json { render_json(file) } else { render_text(file) };
    match &o.output {
        Some(path) => {
            fs::write(path, text)?;
            writeln!(out, "wrote {}", path.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn check(path: &Path, kind: Option<CheckKind>, full: bool, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let loaded = load(path)?;
    let mode = if full {
        CheckMode::FullReport
    } else {
        CheckMode::FirstFailure
    };
    let kind = kind.unwrap_or(match loaded {
        Loaded::Srl(_) => CheckKind::Srl,
        _ => CheckKind::Sna,
    });
    let verdict = match kind {
        CheckKind::Srl => verify_srl(&need_srl(loaded, "--kind srl")?, mode),
        CheckKind::Kleene => verify_kleene(&need_sna(loaded, "--kind kleene")?.0, mode),
        CheckKind::Nelson => verify_nelson(&need_sna(loaded, "--kind nelson")?.0, mode),
        CheckKind::Sna => verify_sna(&need_sna(loaded, "--kind sna")?.0, mode),
        CheckKind::NelsonLattice => {
            let k = need_twist(loaded, "--kind nelson-lattice")?;
            verify_nelson_lattice(&residuated_view(&k).map_err(math)?, mode)
        }
    };
    write_verdict(out, &verdict)?;
    Ok(Outcome::from_bool(verdict.passed()))
}

fn twist(path: &Path, filter: Option<&str>, o: &Output, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let s = need_srl(load(path)?, "twist")?;
    let k = match filter {
        None => twist_full(&s),
        Some(name) => {
            let x = s
                .lattice()
                .elem(name)
                .map_err(|e| CliError::Usage(format!("--filter: {e}")))?;
            twist_filtered(&s, &s.lattice().upset(x))
        }
    }
    .map_err(math)?;
    emit(out, o, &AlgebraFile::from_sna(k.algebra()))?;
    Ok(Outcome::Pass)
}

fn quotient(path: &Path, o: &Output, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let (t, _) = need_sna(load(path)?, "quotient")?;
    let q = quotient_srl(&t).map_err(math)?;
    emit(out, o, &AlgebraFile::from_srl(&q.srl))?;
    Ok(Outcome::Pass)
}

fn congruences(path: &Path, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let (t, _) = need_sna(load(path)?, "congruences")?;
    for f in open_implicative_filters(&t).map_err(math)? {
        let p = theta_of_filter(&t, &f.members).map_err(math)?;
        let prime = if f.prime { "  prime" } else { "" };
        writeln!(
            out,
            "{}  <->  {}{prime}",
            f.members.display_with(t.names()),
            p.display_with(t.names())
        )?;
    }
    Ok(Outcome::Pass)
}

fn variety(path: &Path, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let (t, _) = need_sna(load(path)?, "variety")?;
    let v = check_chain_variety(&t).map_err(math)?;
    writeln!(out, "{v}")?;
    if v.member() && !t.is_trivial() {
        let e = subdirect_embedding(&t).map_err(math)?;
        writeln!(out, "subdirect factors: {}", e.factors.len())?;
        for f in &e.factors {
            writeln!(
                out,
                "  {}: chain of {}",
                f.filter.members.display_with(t.names()),
                f.quotient.size()
            )?;
        }
    }
    Ok(Outcome::from_bool(v.member()))
}

fn center(path: &Path, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let (t, _) = need_sna(load(path)?, "center")?;
    writeln!(out, "{}", center_report(&t).map_err(math)?.render(&t))?;
    let line = match representable_as_twist(&t).map_err(math)? {
        Representation::Twist { srl, .. } => format!("isomorphic to K(T/θ) with {} elements in T/θ", srl.size()),
        Representation::NoCenter => "not a twist: no center".into(),
        Representation::ConditionFails(c) => format!("not a twist: (CK) {}", c.render(&t)),
    };
    writeln!(out, "{line}")?;
    Ok(Outcome::Pass)
}

fn dot(path: &Path, output: Option<&Path>, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let loaded = load(path)?;
    let title = path
        .file_stem()
        .map_or("algebra".into(), |s| s.to_string_lossy().into_owned());
    let text = hasse_dot(&title, loaded.lattice());
    match output {
        Some(p) => {
            fs::write(p, text)?;
            writeln!(out, "wrote {}", p.display())?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(Outcome::Pass)
}

fn residuated(path: &Path, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let k = need_twist(load(path)?, "residuated")?;
    let v = residuated_view(&k).map_err(math)?;
    write_verdict(out, &verify_nelson_lattice(&v, CheckMode::FullReport))?;
    write_verdict(out, &verify_translation(&v, CheckMode::FullReport))?;
    let s = k.source();
    match term_translation_gap(s) {
        None => writeln!(out, "translation gap: none")?,
        Some(g) => writeln!(out, "translation gap: {}", g.render(s))?,
    }
    Ok(Outcome::Pass)
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check {
            file,
            kind,
            full_report,
        } => check(file, *kind, *full_report, out),
        Command::Twist { file, filter, out: o } => twist(file, filter.as_deref(), o, out),
        Command::Quotient { file, out: o } => quotient(file, o, out),
        Command::Congruences { file } => congruences(file, out),
        Command::Variety { file } => variety(file, out),
        Command::Center { file } => center(file, out),
        Command::Dot { file, output } => dot(file, output.as_deref(), out),
        Command::Residuated { file } => residuated(file, out),
    }
}
