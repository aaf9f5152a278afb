//! Command-line front end for `gzcz`: file formats, correlation CSV export and
//! verification reports.
//!
//! Exit status: 0 success, 1 verification failed, 2 usage, parse or input
//! error, 3 search timeout.

pub mod csv;
pub mod format;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use gzcz::ccc::{kronecker_ccc, reachable_lengths, seed, transpose_ccc, verify_ccc};
use gzcz::ccc::{REFERENCE_LENGTHS_200, SEED_NAMES};
use gzcz::correlation::{aacf, accf, pacf, pccf};
use gzcz::golay::{build_zcz_pair, golay_mate, verify_gcp, GolayPair, SignQuadruple};
use gzcz::search::{search_ccc, SearchConfig};
use gzcz::seqcore::{ComplementarySet, CompleteComplementaryCode, PhaseSequence};
use gzcz::zczset::{build_zcz_set, optimal_width, optimality_factor, verify_golay_zcz};
use gzcz::zczset::{Alphabet, ZczReport};
use thiserror::Error;

use format::{Document, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TIMEOUT: i32 = 3;

/// Environment variable capping search worker threads.
pub const THREADS_VAR: &str = "GZCZ_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Core(#[from] gzcz::Error),
    #[error("{0}")]
    Input(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Exit status and the text to show the user.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub report: String,
}

impl Outcome {
    fn new(status: i32, report: String) -> Self {
        Self { status, report }
    }

    fn verdict(ok: bool, report: String) -> Self {
        Self::new(if ok { EXIT_OK } else { EXIT_FAILED }, report)
    }
}

#[derive(Debug, Parser)]
#[command(name = "gzcz", version, about = "Golay-ZCZ sequence toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Cross,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlphabetArg {
    Binary,
    Polyphase,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that a two-row file is a Golay complementary pair.
    VerifyGcp { input: PathBuf },
    /// Write the canonical Golay mate of a two-row pair.
    Mate { input: PathBuf, output: PathBuf },
    /// Build the length-4N Golay-ZCZ pair from a pair (and optional mate).
    BuildPair {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true, value_name = "x1,x2,x3,x4")]
        signs: String,
        output: PathBuf,
    },
    /// Check conditions C1-C3 of a sequence set against a claimed zone width.
    VerifyGzcz {
        input: PathBuf,
        #[arg(long)]
        claimed_z: usize,
    },
    /// Build the length-M²N Golay-ZCZ set from an (M, M, N) CCC.
    BuildSet { input: PathBuf, output: PathBuf },
    /// Check that a code file is a complete complementary code.
    CccVerify { input: PathBuf },
    /// Write the transpose of a CCC.
    CccTranspose { input: PathBuf, output: PathBuf },
    /// Write the Kronecker composition of two CCCs.
    CccKron {
        first: PathBuf,
        second: PathBuf,
        output: PathBuf,
    },
    /// List or export the built-in seed codes.
    #[command(group(ArgGroup::new("action").required(true).args(["list", "get"])))]
    Seeds {
        #[arg(long)]
        list: bool,
        #[arg(long, value_name = "NAME", requires = "output")]
        get: Option<String>,
        output: Option<PathBuf>,
    },
    /// Search for binary (4, 4, N) complete complementary codes.
    SearchCcc {
        #[arg(long = "M", default_value_t = 4)]
        set_size: usize,
        #[arg(long = "N")]
        length: usize,
        /// Seconds.
        #[arg(long, default_value_t = 60.0)]
        timeout: f64,
        #[arg(long, default_value_t = 1)]
        max: usize,
        /// Search without the sign-symmetry reduction.
        #[arg(long)]
        no_symmetry: bool,
        output: PathBuf,
    },
    /// Export a correlation profile as CSV.
    #[command(group(ArgGroup::new("kind").args(["periodic", "aperiodic"])))]
    Report {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        i: usize,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[arg(long)]
        periodic: bool,
        #[arg(long)]
        aperiodic: bool,
        /// Output file; the CSV is printed when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Compare a set's zone width with the optimal width.
    Bound {
        input: PathBuf,
        #[arg(long, value_enum)]
        alphabet: AlphabetArg,
    },
    /// Lengths reachable from the seed codes by Kronecker composition.
    Lengths {
        #[arg(long)]
        bound: usize,
    },
}

/// Runs one command. `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return Outcome::new(status, e.to_string().trim_end().to_string());
        }
    };
    dispatch(cli.command).unwrap_or_else(|e| Outcome::new(EXIT_USAGE, format!("error: {e}")))
}

fn read_all(path: &Path) -> CliResult<Vec<Document>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    format::parse_all(&text).map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })
}

fn read_one(path: &Path) -> CliResult<Document> {
    let mut docs = read_all(path)?;
    if docs.len() != 1 {
        return Err(CliError::Input(format!(
            "{}: expected one document, found {}",
            path.display(),
            docs.len()
        )));
    }
    Ok(docs.remove(0))
}

fn read_rows(path: &Path) -> CliResult<Vec<PhaseSequence>> {
    match read_one(path)? {
        Document::Set(s) => Ok(s.into_rows()),
        Document::Code(_) => Err(CliError::Input(format!(
            "{}: expected a sequence set, found a code",
            path.display()
        ))),
    }
}

fn read_code(path: &Path) -> CliResult<CompleteComplementaryCode> {
    match read_one(path)? {
        Document::Code(c) => Ok(c),
        Document::Set(_) => Err(CliError::Input(format!(
            "{}: expected a code with SET blocks, found a sequence set",
            path.display()
        ))),
    }
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_rows(path: &Path, rows: Vec<PhaseSequence>) -> CliResult<()> {
    let doc = Document::Set(ComplementarySet::new(rows)?);
    write_text(path, &format::serialize(&doc))
}

fn write_code(path: &Path, code: CompleteComplementaryCode) -> CliResult<()> {
    write_text(path, &format::serialize(&Document::Code(code)))
}

fn expect_rows(path: &Path, rows: &[PhaseSequence], allowed: &[usize]) -> CliResult<()> {
    if allowed.contains(&rows.len()) {
        return Ok(());
    }
    let want: Vec<String> = allowed.iter().map(usize::to_string).collect();
    Err(CliError::Input(format!(
        "{}: expected {} rows, found {}",
        path.display(),
        want.join(" or "),
        rows.len()
    )))
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn parse_signs(text: &str) -> CliResult<SignQuadruple> {
    let signs: Vec<i8> = text
        .split(',')
        .map(|s| s.trim().parse::<i8>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Input(format!("bad sign list '{text}'")))?;
    match signs[..] {
        [x1, x2, x3, x4] => Ok(SignQuadruple::new(x1, x2, x3, x4)?),
        _ => Err(CliError::Input(format!(
            "expected four signs, found {}",
            signs.len()
        ))),
    }
}

fn zcz_lines(r: &ZczReport) -> String {
    let zccz = r
        .measured_zccz
        .map_or_else(|| "none".to_string(), |z| z.to_string());
    format!(
        "set M={} L={} q={}\nZACZ {}\nZCCZ {}\nZ_min {}\ncomplementary {}\n",
        r.set_size,
        r.length,
        r.modulus,
        r.measured_zacz,
        zccz,
        r.z_min,
        if r.complementary { "yes" } else { "no" }
    )
}

fn threads_from_env() -> CliResult<usize> {
    match std::env::var(THREADS_VAR) {
        Err(_) => Ok(1),
        Ok(v) => v
            .trim()
            .parse()
            .ok()
            .filter(|&t| t >= 1)
            .ok_or_else(|| CliError::Input(format!("{THREADS_VAR} must be a positive integer"))),
    }
}

fn dispatch(command: Command) -> CliResult<Outcome> {
    match command {
        Command::VerifyGcp { input } => {
            let rows = read_rows(&input)?;
            expect_rows(&input, &rows, &[2])?;
            let ok = verify_gcp(&rows[0], &rows[1])?;
            Ok(Outcome::verdict(
                ok,
                format!("GCP length {}: {}", rows[0].len(), pass(ok)),
            ))
        }
        Command::Mate { input, output } => {
            let mut rows = read_rows(&input)?;
            expect_rows(&input, &rows, &[2])?;
            let b = rows.pop().expect("two rows");
            let a = rows.pop().expect("two rows");
            let mate = golay_mate(&GolayPair::new(a, b)?)?;
            let n = mate.len();
            let (c, d) = mate.into_parts();
            write_rows(&output, vec![c, d])?;
            Ok(Outcome::new(
                EXIT_OK,
                format!("mate of length {n} written to {}", output.display()),
            ))
        }
        Command::BuildPair {
            input,
            signs,
            output,
        } => {
            let signs = parse_signs(&signs)?;
            let rows = read_rows(&input)?;
            expect_rows(&input, &rows, &[2, 4])?;
            let pair = GolayPair::new(rows[0].clone(), rows[1].clone())?;
            let mate = match rows.len() {
                4 => GolayPair::new(rows[2].clone(), rows[3].clone())?,
                _ => golay_mate(&pair)?,
            };
            let (p, q) = build_zcz_pair(&pair, &mate, signs)?;
            let n = pair.len();
            let report = verify_golay_zcz(&[p.clone(), q.clone()], n)?;
            write_rows(&output, vec![p, q])?;
            let mut text = format!("pair of length {} written to {}\n", 4 * n, output.display());
            text.push_str(&zcz_lines(&report));
            let _ = write!(text, "claimed Z {n}: {}", pass(report.pass));
            Ok(Outcome::verdict(report.pass, text))
        }
        Command::VerifyGzcz { input, claimed_z } => {
            let rows = read_rows(&input)?;
            let report = verify_golay_zcz(&rows, claimed_z)?;
            let mut text = zcz_lines(&report);
            let _ = write!(text, "claimed Z {claimed_z}: {}", pass(report.pass));
            Ok(Outcome::verdict(report.pass, text))
        }
        Command::BuildSet { input, output } => {
            let code = read_code(&input)?;
            let (m, n) = (code.set_size(), code.len());
            let set = build_zcz_set(&code)?;
            let report = verify_golay_zcz(&set, (m - 1) * n)?;
            let modulus = report.modulus;
            write_rows(&output, set)?;
            let mut text = format!(
                "{m} sequences of length {} (q = {modulus}) written to {}\n",
                report.length,
                output.display()
            );
            text.push_str(&zcz_lines(&report));
            let _ = write!(text, "claimed Z {}: {}", (m - 1) * n, pass(report.pass));
            Ok(Outcome::verdict(report.pass, text))
        }
        Command::CccVerify { input } => {
            let code = read_code(&input)?;
            let ok = verify_ccc(&code);
            let (m, n) = (code.set_size(), code.len());
            Ok(Outcome::verdict(
                ok,
                format!("CCC ({m},{m},{n}): {}", pass(ok)),
            ))
        }
        Command::CccTranspose { input, output } => {
            let code = read_code(&input)?;
            let t = transpose_ccc(&code);
            let ok = verify_ccc(&t);
            write_code(&output, t)?;
            Ok(Outcome::verdict(
                ok,
                format!("transpose written to {}: {}", output.display(), pass(ok)),
            ))
        }
        Command::CccKron {
            first,
            second,
            output,
        } => {
            let k = kronecker_ccc(&read_code(&first)?, &read_code(&second)?)?;
            let ok = verify_ccc(&k);
            let (m, n) = (k.set_size(), k.len());
            write_code(&output, k)?;
            Ok(Outcome::verdict(
                ok,
                format!(
                    "CCC ({m},{m},{n}) written to {}: {}",
                    output.display(),
                    pass(ok)
                ),
            ))
        }
        Command::Seeds { list, get, output } => {
            if list {
                let mut text = String::new();
                for name in SEED_NAMES {
                    let code = seed(name)?;
                    let m = code.set_size();
                    let _ = writeln!(text, "{name} ({m},{m},{})", code.len());
                }
                return Ok(Outcome::new(EXIT_OK, text.trim_end().to_string()));
            }
            let name = get.expect("clap enforces --list or --get");
            let output = output.expect("clap enforces an output with --get");
            write_code(&output, seed(&name)?)?;
            Ok(Outcome::new(
                EXIT_OK,
                format!("{name} written to {}", output.display()),
            ))
        }
        Command::SearchCcc {
            set_size,
            length,
            timeout,
            max,
            no_symmetry,
            output,
        } => {
            if !(timeout.is_finite() && timeout > 0.0) {
                return Err(CliError::Input("timeout must be a positive number".into()));
            }
            let mut config = SearchConfig::new(length);
            config.set_size = set_size;
            config.timeout = Duration::from_secs_f64(timeout);
            config.max_solutions = max;
            config.symmetry_reduction = !no_symmetry;
            config.threads = threads_from_env()?;
            let outcome = search_ccc(&config)?;
            let docs: Vec<Document> = outcome.codes.into_iter().map(Document::Code).collect();
            write_text(&output, &format::serialize_all(&docs))?;
            let s = outcome.stats;
            let mut text = format!(
                "{} code(s) of length {length} written to {}\nnodes {} prunes {}",
                docs.len(),
                output.display(),
                s.nodes,
                s.prunes
            );
            let status = if outcome.timed_out {
                text.push_str("\ntimeout reached; results are partial");
                EXIT_TIMEOUT
            } else if docs.is_empty() {
                text.push_str("\nno code exists under the search settings");
                EXIT_FAILED
            } else {
                EXIT_OK
            };
            Ok(Outcome::new(status, text))
        }
        Command::Report {
            input,
            mode,
            i,
            j,
            periodic: _,
            aperiodic,
            csv,
        } => {
            let rows: Vec<PhaseSequence> = match read_one(&input)? {
                Document::Set(s) => s.into_rows(),
                Document::Code(c) => c.sets().iter().flat_map(|s| s.rows().to_vec()).collect(),
            };
            let pick = |k: usize| {
                rows.get(k).ok_or_else(|| {
                    CliError::Input(format!(
                        "row {k} out of range (file has {} rows)",
                        rows.len()
                    ))
                })
            };
            let profile = match (mode, aperiodic) {
                (Mode::Auto, false) => pacf(pick(i)?),
                (Mode::Auto, true) => aacf(pick(i)?),
                (Mode::Cross, false) => pccf(pick(i)?, pick(j)?)?,
                (Mode::Cross, true) => accf(pick(i)?, pick(j)?)?,
            };
            let body = csv::render(&profile);
            match csv {
                None => Ok(Outcome::new(EXIT_OK, body.trim_end().to_string())),
                Some(path) => {
                    write_text(&path, &body)?;
                    let what = match mode {
                        Mode::Auto => format!("row {i}"),
                        Mode::Cross => format!("rows {i},{j}"),
                    };
                    let kind = if aperiodic { "aperiodic" } else { "periodic" };
                    Ok(Outcome::new(
                        EXIT_OK,
                        format!(
                            "{kind} {} correlation of {what}: {} shifts written to {}",
                            if matches!(mode, Mode::Auto) {
                                "auto"
                            } else {
                                "cross"
                            },
                            body.lines().count() - 1,
                            path.display()
                        ),
                    ))
                }
            }
        }
        Command::Bound { input, alphabet } => {
            let rows = read_rows(&input)?;
            let report = verify_golay_zcz(&rows, 0)?;
            let (alphabet, rule) = match alphabet {
                AlphabetArg::Polyphase => (Alphabet::Polyphase, "floor(L/M)"),
                AlphabetArg::Binary => (Alphabet::Binary, "floor(L/2M)"),
            };
            let opt = optimal_width(report.length, report.set_size, alphabet);
            let factor = optimality_factor(&report, alphabet)
                .map_or_else(|| "undefined".to_string(), |c| c.to_string());
            let over = report.exceeds_polyphase_bound();
            let mut text = zcz_lines(&report);
            let _ = writeln!(text, "Z_opti {opt} ({rule})");
            let _ = writeln!(text, "C {factor}");
            let _ = write!(
                text,
                "polyphase bound: {}",
                if over { "VIOLATED" } else { "ok" }
            );
            if report.exceeds_binary_conjecture() {
                text.push_str("\nbinary conjecture: exceeded");
            }
            Ok(Outcome::verdict(!over, text))
        }
        Command::Lengths { bound } => {
            let reachable = reachable_lengths(bound);
            let listed: Vec<usize> = REFERENCE_LENGTHS_200
                .iter()
                .copied()
                .filter(|&n| n <= bound)
                .collect();
            let mut all: Vec<usize> = reachable.iter().chain(&listed).copied().collect();
            all.sort_unstable();
            all.dedup();
            let mark = |v: &[usize], n: usize| if v.contains(&n) { "yes" } else { "-" };
            let mut text = format!("{:>6}  {:>9}  {:>6}\n", "N", "reachable", "listed");
            for n in all {
                let _ = writeln!(
                    text,
                    "{n:>6}  {:>9}  {:>6}",
                    mark(&reachable, n),
                    mark(&listed, n)
                );
            }
            let _ = write!(
                text,
                "reachable {} listed {} (listed values only go up to 200)",
                reachable.len(),
                listed.len()
            );
            Ok(Outcome::new(EXIT_OK, text))
        }
    }
}
