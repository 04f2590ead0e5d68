use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sbraid::ld::laver_cmp;
use sbraid::representation::{apply_word, cmp_l, morphism_eq};
use sbraid::{color, EnvElement, Error, FWord, LDTable, LDTerm, RWord, XWord};

/// Computations in the monoid of shrinking braids.
///
/// Words are space-separated letters: `s3` (crossing), `s3^-1` (inverse crossing),
/// `x2` (merge). The empty string is the identity.
#[derive(Parser)]
#[command(name = "sbraid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two words denote the same element.
    Eq { w1: String, w2: String },
    /// Compare two words in the order <_L (prints LT, EQ or GT).
    Cmp { w1: String, w2: String },
    /// Split a word as `braid | merges`, merges in ascending form.
    Sx { w: String },
    /// Ascending form and fiber sequence of a word in the merges only.
    Canon { xword: String },
    /// Image of a free-group word such as `e1 e2^-1` under a monoid word.
    Act { w: String, fword: String },
    /// Realized word of an LD term such as `((j . j) o j)`.
    Ld { term: String },
    /// Compare two LD terms through their realizations (prints LT, EQ or GT).
    Laver { t1: String, t2: String },
    /// Coloring of a word on N top strands: one `eK -> IMAGE` line per bottom strand.
    Color { n: u32, w: String },
    /// Operate on ∘-sequences such as `1,3,2` over the LD table in TABLEFILE.
    Env {
        tablefile: PathBuf,
        u: String,
        v: String,
        #[arg(long, value_enum, default_value_t = EnvOp::Dot)]
        op: EnvOp,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EnvOp {
    Dot,
    Circ,
    Eq,
}

/// A failure and the exit code it maps to.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidTable(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<sbraid::ParseError> for Failure {
    fn from(e: sbraid::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn word(s: &str) -> Result<RWord, Failure> {
    Ok(s.parse::<RWord>()?)
}

fn term(s: &str) -> Result<LDTerm, Failure> {
    Ok(s.parse::<LDTerm>()?)
}

fn ordering(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

fn run(command: Command) -> Result<String, Failure> {
    Ok(match command {
        Command::Eq { w1, w2 } => format!("{}\n", morphism_eq(&word(&w1)?, &word(&w2)?)),
        Command::Cmp { w1, w2 } => format!("{}\n", ordering(cmp_l(&word(&w1)?, &word(&w2)?))),
        Command::Sx { w } => {
            let (braid, xs) = word(&w)?.sx_decompose();
            format!("{braid} | {xs}\n")
        }
        Command::Canon { xword } => {
            let w = word(&xword)?;
            let y = XWord::from_rword(&w).ok_or_else(|| {
                Failure::Domain(format!("`{w}` contains crossings; canon needs merges only"))
            })?;
            format!("{} | S={}\n", y.canonicalize(), y.s_of())
        }
        Command::Act { w, fword } => {
            let u: FWord = fword.parse()?;
            format!("{}\n", apply_word(&word(&w)?, &u))
        }
        Command::Ld { term: t } => format!("{}\n", term(&t)?.realize()),
        Command::Laver { t1, t2 } => format!("{}\n", ordering(laver_cmp(&term(&t1)?, &term(&t2)?))),
        Command::Color { n, w } => {
            if n == 0 {
                return Err(Failure::Usage("N must be at least 1".into()));
            }
            color(&word(&w)?, n)?.to_string()
        }
        Command::Env {
            tablefile,
            u,
            v,
            op,
        } => {
            let text = std::fs::read_to_string(&tablefile)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", tablefile.display())))?;
            let table: LDTable = text.parse()?;
            let (u, v): (EnvElement, EnvElement) = (u.parse()?, v.parse()?);
            for e in [&u, &v] {
                table
                    .validate(e)
                    .map_err(|e| Failure::Domain(e.to_string()))?;
            }
            match op {
                EnvOp::Dot => format!("{}\n", table.env_dot(&u, &v)),
                EnvOp::Circ => format!("{}\n", table.env_circ(&u, &v)),
                EnvOp::Eq => {
                    let budget =
                        (table.size() as usize).saturating_pow(u.len().max(v.len()) as u32);
                    format!("{}\n", table.orbit_eq(&u, &v, budget))
                }
            }
        }
    })
}
