use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use heegaard_core::spheres::{
    enumerate_intersection, pi2_genus1, reducibility_probe, search_commutator_certificate,
    verify_commutator_certificate, CertificateSearch, CommutatorCertificate, NotFoundReason, ProbeResult,
    SearchBounds,
};
use heegaard_core::{
    builtin, parse_diagram, parse_word, stabilize, validate, write_diagram, HeegaardDiagram, Membership,
    OrderVerdict, Side, SplittingHom, Word,
};

#[derive(Parser)]
#[command(name = "heegaard", version, about = "Group theory of Heegaard splittings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kernel {
    Alpha,
    Beta,
    Both,
    Join,
}

#[derive(Subcommand)]
enum Command {
    /// Check both sides of a diagram
    Validate { file: PathBuf },
    /// Presentation of the fundamental group
    Pi1 { file: PathBuf },
    /// First homology as invariant factors
    H1 { file: PathBuf },
    /// Order of the fundamental group by coset enumeration
    Order {
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
        file: PathBuf,
    },
    /// Kernel membership of a surface word
    Member {
        #[arg(long, value_enum)]
        kernel: Kernel,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
        file: PathBuf,
    },
    /// Rank of the second homotopy group of a genus-1 diagram
    #[command(name = "pi2-genus1")]
    Pi2Genus1 { file: PathBuf },
    /// Cyclic classes of the kernel intersection up to a length bound
    Enumerate {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        file: PathBuf,
    },
    /// Verify a commutator certificate for a word
    Certify {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long)]
        cert: PathBuf,
        file: PathBuf,
    },
    /// Bounded search for a commutator certificate
    #[command(name = "cert-search")]
    CertSearch {
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value_t = 3)]
        max_factors: usize,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long, default_value_t = SearchBounds::default().max_checks)]
        max_checks: u64,
        file: PathBuf,
    },
    /// Look for a reducing curve among twisted standard curves
    Probe {
        #[arg(long, default_value_t = 2)]
        depth: usize,
        file: PathBuf,
    },
    /// Write a catalog diagram
    Builtin {
        #[arg(long)]
        name: String,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<i64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the stabilization of a diagram
    Stabilize {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Successful runs end with `RESULT: <result>`; inconclusive runs also carry
/// a diagnostic for stderr.
enum Outcome {
    Done(String),
    Inconclusive { result: String, diagnostic: String },
}

struct Failure {
    message: String,
    /// Validation report printed to stdout before the result line.
    report: Option<String>,
}

impl Failure {
    fn new(message: impl Into<String>) -> Self {
        Failure { message: message.into(), report: None }
    }

    fn invalid(report: Option<String>) -> Self {
        Failure { message: INVALID.into(), report }
    }
}

const INVALID: &str = "invalid diagram";

impl From<heegaard_core::Error> for Failure {
    fn from(e: heegaard_core::Error) -> Self {
        Failure::new(e.to_string())
    }
}

type Run = Result<Outcome, Failure>;

fn read_diagram(path: &Path) -> Result<HeegaardDiagram, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(format!("cannot read {}: {e}", path.display())))?;
    parse_diagram(&text).map_err(|e| Failure::new(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<SplittingHom, Failure> {
    let d = read_diagram(path)?;
    let report = validate(&d);
    if !report.is_valid() {
        return Err(Failure::invalid(Some(report.to_string())));
    }
    Ok(SplittingHom::new(d)?)
}

fn word(s: &str) -> Result<Word, Failure> {
    parse_word(s).map_err(|e| Failure::new(format!("word `{s}`: {e}")))
}

fn write_out(path: &Path, d: &HeegaardDiagram) -> Run {
    fs::write(path, write_diagram(d))
        .map_err(|e| Failure::new(format!("cannot write {}: {e}", path.display())))?;
    Ok(Outcome::Done(format!("wrote {} (genus {})", path.display(), d.genus())))
}

fn vector(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(", "))
}

fn run(command: Command, text: &mut String) -> Run {
    match command {
        Command::Validate { file } => {
            let d = read_diagram(&file)?;
            let report = validate(&d);
            let _ = write!(text, "{report}");
            if report.is_valid() {
                Ok(Outcome::Done("valid".into()))
            } else {
                Err(Failure::invalid(None))
            }
        }
        Command::Pi1 { file } => {
            let p = load(&file)?.pi1_presentation()?;
            Ok(Outcome::Done(p.to_string()))
        }
        Command::H1 { file } => Ok(Outcome::Done(load(&file)?.h1()?.to_string())),
        Command::Order { limit, file } => match load(&file)?.order_pi1(limit)? {
            OrderVerdict::Finite(n) => Ok(Outcome::Done(format!("finite {n}"))),
            OrderVerdict::InfiniteByH1 => Ok(Outcome::Done("infinite".into())),
            OrderVerdict::Unknown { limit } => Ok(Outcome::Inconclusive {
                result: "unknown".into(),
                diagnostic: format!("coset enumeration exceeded {limit} cosets"),
            }),
        },
        Command::Member { kernel, word: w, limit, file } => {
            let s = load(&file)?;
            let w = word(&w)?;
            let answer = match kernel {
                Kernel::Alpha => s.in_kernel(&w, Side::Alpha)?,
                Kernel::Beta => s.in_kernel(&w, Side::Beta)?,
                Kernel::Both => s.in_intersection(&w)?,
                Kernel::Join => match s.in_join(&w, limit)? {
                    Membership::Yes => true,
                    Membership::No => false,
                    Membership::Unknown => {
                        return Ok(Outcome::Inconclusive {
                            result: "unknown".into(),
                            diagnostic: format!("coset enumeration exceeded {limit} cosets"),
                        })
                    }
                },
            };
            Ok(Outcome::Done(answer.to_string()))
        }
        Command::Pi2Genus1 { file } => {
            let d = read_diagram(&file)?;
            Ok(Outcome::Done(format!("rank {}", pi2_genus1(&d)?)))
        }
        Command::Enumerate { max_len, file } => {
            if max_len == 0 {
                return Err(Failure::new("--max-len must be at least 1"));
            }
            let e = enumerate_intersection(&load(&file)?, max_len)?;
            let _ = writeln!(text, "# growth table (evidence, not proof)");
            let _ = writeln!(text, "# length count cumulative");
            for (len, (count, total)) in e.counts.iter().zip(e.cumulative()).enumerate().skip(1) {
                let _ = writeln!(text, "{len} {count} {total}");
            }
            for w in &e.words {
                let _ = writeln!(text, "{w}");
            }
            Ok(Outcome::Done(format!("{} classes", e.words.len())))
        }
        Command::Certify { gamma, cert, file } => {
            let s = load(&file)?;
            let gamma = word(&gamma)?;
            let text = fs::read_to_string(&cert)
                .map_err(|e| Failure::new(format!("cannot read {}: {e}", cert.display())))?;
            let c = CommutatorCertificate::parse(&text)
                .map_err(|e| Failure::new(format!("{}: {e}", cert.display())))?;
            Ok(Outcome::Done(verify_commutator_certificate(&gamma, &c, &s)?.to_string()))
        }
        Command::CertSearch { gamma, max_factors, max_len, max_checks, file } => {
            let s = load(&file)?;
            let gamma = word(&gamma)?;
            let bounds = SearchBounds { max_factors, max_word_len: max_len, max_checks };
            match search_commutator_certificate(&gamma, &s, bounds)? {
                CertificateSearch::Found(c) => {
                    let _ = write!(text, "{c}");
                    Ok(Outcome::Done(format!("found {} factors", c.factors.len())))
                }
                CertificateSearch::NotFound(NotFoundReason::ObstructedByH1(v)) => {
                    let _ = writeln!(text, "h1 obstruction {}", vector(&v));
                    Ok(Outcome::Done("not-found obstructed".into()))
                }
                CertificateSearch::NotFound(reason) => Ok(Outcome::Inconclusive {
                    result: "not-found".into(),
                    diagnostic: match reason {
                        NotFoundReason::CheckLimit => format!("stopped after {max_checks} candidate checks"),
                        _ => format!("search space exhausted at {max_factors} factors, length {max_len}"),
                    },
                }),
            }
        }
        Command::Probe { depth, file } => match reducibility_probe(&load(&file)?, depth)? {
            ProbeResult::Reducing(w) => Ok(Outcome::Done(format!("reducible {w}"))),
            ProbeResult::NotFound => Ok(Outcome::Inconclusive {
                result: "not-found".into(),
                diagnostic: format!("no reducing curve within twist depth {depth}"),
            }),
        },
        Command::Builtin { name, params, out } => write_out(&out, &builtin(&name, &params)?),
        Command::Stabilize { file, out } => write_out(&out, &stabilize(&read_diagram(&file)?)?),
    }
}

/// Print everything in one write; a closed pipe is not an error.
fn emit(stdout: &str, stderr: &str, code: u8) -> ExitCode {
    let _ = std::io::stderr().write_all(stderr.as_bytes());
    let _ = std::io::stdout().write_all(stdout.as_bytes());
    ExitCode::from(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => return emit(&e.to_string(), "", 0),
        Err(e) => return emit("RESULT: error\n", &e.to_string(), 1),
    };
    let mut text = String::new();
    match run(cli.command, &mut text) {
        Ok(Outcome::Done(result)) => {
            let _ = writeln!(text, "RESULT: {result}");
            emit(&text, "", 0)
        }
        Ok(Outcome::Inconclusive { result, diagnostic }) => {
            let _ = writeln!(text, "RESULT: {result}");
            emit(&text, &format!("limit reached: {diagnostic}\n"), 2)
        }
        Err(Failure { message, report }) => {
            text.push_str(&report.unwrap_or_default());
            let _ = writeln!(text, "RESULT: {}", if message == INVALID { "invalid" } else { "error" });
            emit(&text, &format!("error: {message}\n"), 1)
        }
    }
}
