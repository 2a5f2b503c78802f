//! Command-line front end shared by the `twalex` binary.
//!
//! Exit codes: 0 success (including degenerate inputs, which print a
//! notice), 1 a verification failed, 2 a file could not be read, 3 an input
//! could not be parsed or validated.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::Field;
use crate::corpus;
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::report::{self, Format};
use crate::representation::Representation;
use crate::selftest;
use crate::torres::{verify_classical_torres, verify_torres, Verdict};
use crate::wada::{classical_alexander, wada_invariant};

#[derive(Debug, Parser)]
#[command(name = "twalex", version, about = "Twisted Alexander polynomials of links and the Torres condition")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Wada's twisted Alexander invariant of a link and representation
    Compute(ComputeArgs),
    /// Multivariable Alexander polynomial of a link
    Classical(LinkArgs),
    /// Check the Torres condition for a deleted component
    Torres(TorresArgs),
    /// Print the Wirtinger presentation (of the reduced link with --drop)
    Presentation(PresentationArgs),
    /// Run the property suites
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum FormatArg {
    #[default]
    Text,
    JsonLines,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::JsonLines => Format::JsonLines,
        }
    }
}

#[derive(Debug, Args)]
pub struct LinkArgs {
    /// PD file
    #[arg(long)]
    pub link: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// PD file
    #[arg(long, required_unless_present = "presentation", conflicts_with = "presentation")]
    pub link: Option<PathBuf>,
    /// Presentation file, instead of a diagram
    #[arg(long)]
    pub presentation: Option<PathBuf>,
    /// Representation file, or `trivial:<n>`
    #[arg(long, default_value = "trivial:1")]
    pub rep: String,
    /// `Q` or `Fp:<p>`; must agree with a representation file
    #[arg(long)]
    pub field: Option<String>,
    /// Generator whose column is removed (default: the first admissible)
    #[arg(long)]
    pub remove_gen: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct TorresArgs {
    /// PD file
    #[arg(long)]
    pub link: PathBuf,
    /// Component to delete, from 1 (default: the last)
    #[arg(long)]
    pub drop: Option<usize>,
    /// Representation of the reduced link, or `trivial:<n>`
    #[arg(long, default_value = "trivial:2")]
    pub rep: String,
    /// `Q` or `Fp:<p>`; must agree with a representation file
    #[arg(long)]
    pub field: Option<String>,
    /// Generator of the full link whose column is removed
    #[arg(long)]
    pub remove_gen: Option<String>,
    /// Also check the classical (untwisted) Torres formula
    #[arg(long)]
    pub classical: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct PresentationArgs {
    /// PD file
    #[arg(long)]
    pub link: PathBuf,
    /// Delete this component (from 1) first
    #[arg(long)]
    pub drop: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Directory of PD files (and optional goldens.txt) instead of the bundled corpus
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: FormatArg,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => 2,
        Error::Consistency(_) => 1,
        _ => 3,
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| {
        let reason = if e.kind() == std::io::ErrorKind::NotFound {
            "file not found".to_string()
        } else {
            e.to_string()
        };
        Error::Io(format!("{}: {reason}", path.display()))
    })
}

/// Prefixes parse errors with the file name.
fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn link_name(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn load_link(path: &Path) -> Result<LinkDiagram> {
    in_file(path, LinkDiagram::parse_pd(&read(path)?))
}

fn parse_field(text: Option<&str>) -> Result<Option<Field>> {
    text.map(|t| t.parse::<Field>().map_err(Error::from)).transpose()
}

fn load_rep(spec: &str, field: Option<Field>, pres: &Presentation) -> Result<Representation> {
    if let Some(n) = spec.strip_prefix("trivial:") {
        let n: usize = n
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::Representation(format!("bad degree in `{spec}`")))?;
        return Ok(Representation::trivial(field.unwrap_or(Field::Rational), n, pres));
    }
    let path = Path::new(spec);
    let rep = in_file(path, Representation::parse(&read(path)?))?;
    if let Some(f) = field {
        if f != rep.field() {
            return Err(Error::Representation(format!(
                "{} is over {} but --field is {f}",
                path.display(),
                rep.field()
            )));
        }
    }
    rep.validate(pres)?;
    Ok(rep)
}

fn component_index(drop: Option<usize>, mu: usize) -> Result<usize> {
    match drop {
        None => Ok(mu - 1),
        Some(c) if (1..=mu).contains(&c) => Ok(c - 1),
        Some(c) => Err(Error::IndexOutOfRange { index: c, limit: mu }),
    }
}

/// Runs a parsed command, writing results to `out` and notices to `err`.
/// Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Compute(a) => {
            let (name, pres) = match (&a.link, &a.presentation) {
                (Some(l), _) => (link_name(l), load_link(l)?.wirtinger()?),
                (None, Some(p)) => (link_name(p), in_file(p, Presentation::parse(&read(p)?))?),
                (None, None) => unreachable!("clap requires one of them"),
            };
            let rep = load_rep(&a.rep, parse_field(a.field.as_deref())?, &pres)?;
            let remove = match &a.remove_gen {
                Some(label) => Some(
                    pres.generator_index(label)
                        .ok_or_else(|| Error::Presentation(format!("no generator {label}")))?,
                ),
                None => None,
            };
            let w = match wada_invariant(&pres, &rep, remove) {
                Err(Error::Degenerate(msg)) => {
                    let _ = writeln!(err, "notice: degenerate input: {msg}");
                    return Ok(0);
                }
                r => r?,
            };
            emit(out, &report::wada(&name, &w, a.format.into()))?;
            Ok(0)
        }
        Command::Classical(a) => {
            let d = load_link(&a.link)?;
            let p = classical_alexander(&d.wirtinger()?)?;
            emit(out, &report::classical(&link_name(&a.link), d.num_components(), &p, a.format.into()))?;
            Ok(0)
        }
        Command::Torres(a) => {
            let d = load_link(&a.link)?;
            if d.num_components() < 2 {
                return Err(Error::Diagram("the Torres condition needs at least two components".into()));
            }
            let mu = component_index(a.drop, d.num_components())?;
            let (reduced, _) = d.delete_component(mu)?;
            let pres_r = reduced.wirtinger()?;
            let rep = load_rep(&a.rep, parse_field(a.field.as_deref())?, &pres_r)?;
            let name = link_name(&a.link);
            let format: Format = a.format.into();
            let mut code = 0;
            if a.classical {
                let c = verify_classical_torres(&d, mu)?;
                emit(out, &report::classical_torres(&name, &c, format))?;
                if c.verdict == Verdict::Fail {
                    code = 1;
                }
            }
            let r = verify_torres(&d, mu, &rep, a.remove_gen.as_deref())?;
            emit(out, &report::torres(&name, &r, format))?;
            if r.divisibility == Verdict::Degenerate {
                let _ = writeln!(err, "notice: the reduced numerator vanishes; division is undefined");
            }
            if !r.passed() {
                code = 1;
            }
            Ok(code)
        }
        Command::Presentation(a) => {
            let d = load_link(&a.link)?;
            let d = match a.drop {
                Some(c) => d.delete_component(component_index(Some(c), d.num_components())?)?.0,
                None => d,
            };
            emit(out, &d.wirtinger()?.to_string())?;
            Ok(0)
        }
        Command::Selftest(a) => {
            let entries = match &a.corpus {
                Some(dir) => corpus::load_dir(dir)?,
                None => corpus::entries(),
            };
            let results = selftest::run_all(&entries, a.seed)?;
            emit(out, &report::selftest(&results, a.format.into()))?;
            Ok(if results.iter().all(|r| r.passed()) { 0 } else { 1 })
        }
    }
}
