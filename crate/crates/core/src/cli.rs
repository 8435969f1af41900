//! The `cxqt` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 budget refusal.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::closed::{q_closed, q_closed_label};
use crate::counter::{q_of_group, CrossCheck, Method, QReport};
use crate::error::{Error, Result};
use crate::group::{cache_load, cache_store, generate, Budget, FiniteGroup};
use crate::roots::{build_label, CartanType, Family, Label};
use crate::verify::{self, Suite, VerifyOptions};

/// Brute force runs alongside the closed form under `auto` up to this order.
pub const AUTO_BRUTE_LIMIT: u128 = 100_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "cxqt",
    version,
    about = "Conjugacy classes without eigenvalue -1 in finite reflection groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "CXQT_THREADS")]
    pub threads: Option<usize>,

    /// Directory for enumerated-group caches
    #[arg(long, global = true, env = "CXQT_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Allow enumerations above a million elements (E7)
    #[arg(long, global = true)]
    pub slow: bool,

    /// Allow brute force on E8
    #[arg(long, global = true)]
    pub force_e8: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Brute,
    Auto,
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// Type such as A4, E6, I2(5) or a sum like A2+B2; or a family letter
    /// followed by RANK
    #[arg(value_name = "TYPE")]
    pub ty: String,

    #[arg(value_name = "RANK")]
    pub rank: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute Q for one type
    Count {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Closed forms for every family, checked by brute force where feasible
    Table {
        /// Largest rank for the infinite families
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Per-class report by brute force
    Classes {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Run the self-check suites
    Verify {
        /// Restrict to these suites (roots, groups, classes, oracle,
        /// multiplicativity, appendix)
        #[arg(long = "suite", value_name = "SUITE")]
        suites: Vec<String>,
    },
}

/// Resolves `TYPE [RANK]` into a label: `A 4` is `A4`, `I2 5` is `I2(5)`.
pub fn parse_label(ty: &str, rank: Option<u32>) -> Result<Label> {
    let Some(n) = rank else {
        return ty.parse();
    };
    let t = ty.trim();
    let joined = if t.eq_ignore_ascii_case("I2") || t.eq_ignore_ascii_case("I") {
        format!("I2({n})")
    } else if t.ends_with(|c: char| c.is_ascii_digit()) || t.contains('+') {
        if let Ok(ct) = t.parse::<CartanType>() {
            if ct.family().fixed_rank() == Some(n) {
                return Ok(Label::Cartan(vec![ct]));
            }
        }
        return Err(Error::InvalidType(format!("{t} {n}")));
    } else {
        format!("{t}{n}")
    };
    joined.parse()
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::SlowRequired { .. } | Error::KeyTooWide { .. } => {
            EXIT_BUDGET
        }
        Error::InvalidType(_)
        | Error::InvalidRank { .. }
        | Error::ParseScalar(_)
        | Error::InvalidRootSystem { .. }
        | Error::NotClosed { .. }
        | Error::NotARoot { .. }
        | Error::Symbolic(_)
        | Error::NotUnit(_)
        | Error::Negative(_) => EXIT_INVALID,
        _ => EXIT_FAILED,
    }
}

struct Ctx {
    global: GlobalArgs,
}

impl Ctx {
    fn budget(&self) -> Budget {
        Budget {
            slow_ok: self.global.slow,
            force_e8: self.global.force_e8,
            ..Budget::default()
        }
    }

    fn cache_path(&self, label: &Label) -> Option<PathBuf> {
        let dir = self.global.cache_dir.as_ref()?;
        let name: String = label
            .to_string()
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        Some(dir.join(format!("{name}.cxqt")))
    }

    /// Enumerates a group, going through the cache directory when one is set.
    fn group(&self, label: &Label) -> Result<FiniteGroup> {
        let budget = self.budget();
        let system = build_label(label)?;
        budget.admit(&system)?;
        let Some(path) = self.cache_path(label) else {
            return generate(&system, &budget);
        };
        if path.exists() {
            match cache_load(&path) {
                Ok(g) if g.system().roots() == system.roots() => return Ok(g),
                Ok(_) => eprintln!(
                    "cxqt: {} holds a different root system; rebuilding",
                    path.display()
                ),
                Err(e) => eprintln!("cxqt: ignoring cache: {e}"),
            }
        }
        let g = generate(&system, &budget)?;
        std::fs::create_dir_all(path.parent().unwrap_or(Path::new(".")))?;
        cache_store(&g, &path)?;
        Ok(g)
    }

    fn emit(&self, text: &str) -> Result<()> {
        match &self.global.out {
            Some(p) => std::fs::write(p, text)?,
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())?;
                out.flush()?;
            }
        }
        Ok(())
    }
}

fn is_symbolic(label: &Label) -> bool {
    label.contains(Family::I2)
}

fn closed_report(label: &Label) -> Result<QReport> {
    let parts = label.components();
    Ok(QReport {
        label: label.to_string(),
        rank: parts.iter().map(|t| t.rank() as usize).sum(),
        group_order: parts
            .iter()
            .flat_map(|t| t.degrees())
            .map(BigUint::from)
            .product(),
        num_classes: None,
        q: q_closed_label(label)?,
        method: Method::Closed,
        classes: Vec::new(),
        cross_check: None,
    })
}

/// Q for a label under the chosen method.
pub fn count(
    label: &Label,
    method: MethodArg,
    budget: &Budget,
    group: impl FnOnce() -> Result<FiniteGroup>,
) -> Result<QReport> {
    match method {
        MethodArg::Closed => closed_report(label),
        MethodArg::Brute => Ok(q_of_group(&group()?)),
        MethodArg::Auto => {
            let closed = match label {
                Label::Cartan(_) => Some(closed_report(label)?),
                Label::Custom(_) => None,
            };
            let order = label.group_order();
            let brute_ok = !is_symbolic(label)
                && order.is_some_and(|o| o <= AUTO_BRUTE_LIMIT && budget.allows_order(o));
            match (closed, brute_ok) {
                (Some(c), false) => Ok(c),
                (closed, _) => {
                    let mut r = q_of_group(&group()?);
                    if let Some(c) = closed {
                        r.cross_check = Some(CrossCheck {
                            matches: c.q == r.q,
                            q_closed: c.q,
                            q_brute: r.q.clone(),
                        });
                    }
                    Ok(r)
                }
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn word_text(w: &[u8]) -> String {
    w.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_count(r: &QReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => r.to_json()? + "\n",
        Format::Csv => {
            let mut s = String::from("type,rank,group_order,num_classes,q,method,match\n");
            s += &format!(
                "{},{},{},{},{},{},{}\n",
                csv_field(&r.label),
                r.rank,
                r.group_order,
                r.num_classes.map(|n| n.to_string()).unwrap_or_default(),
                r.q,
                if r.method == Method::Brute {
                    "brute"
                } else {
                    "closed"
                },
                r.cross_check
                    .as_ref()
                    .map(|c| c.matches.to_string())
                    .unwrap_or_default()
            );
            s
        }
        Format::Text => {
            let method = if r.method == Method::Brute {
                "brute"
            } else {
                "closed"
            };
            let mut s = format!("{}: q={} order={}", r.label, r.q, r.group_order);
            if let Some(n) = r.num_classes {
                s += &format!(" classes={n}");
            }
            s += &format!(" method={method}");
            if let Some(c) = &r.cross_check {
                s += &format!(" closed={} match={}", c.q_closed, c.matches);
            }
            s + "\n"
        }
    })
}

fn render_classes(r: &QReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => r.to_json()? + "\n",
        Format::Csv => {
            let mut s = String::from("class,size,order,det,trace,charpoly,e_grade,rep_word\n");
            for (i, c) in r.classes.iter().enumerate() {
                s += &format!(
                    "{i},{},{},{},{},{},{},{}\n",
                    c.size,
                    c.order,
                    csv_field(&c.det.to_string()),
                    csv_field(&c.trace.to_string()),
                    csv_field(&c.charpoly.to_string()),
                    c.e_grade,
                    csv_field(&word_text(&c.rep_word))
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{}: order {}, {} classes, q = {}\n",
                r.label,
                r.group_order,
                r.classes.len(),
                r.q
            );
            s += &format!(
                "{:>5} {:>8} {:>5} {:>6} {:>12}  {:<30} {}\n",
                "class", "size", "order", "E(g)", "trace", "charpoly", "word"
            );
            for (i, c) in r.classes.iter().enumerate() {
                s += &format!(
                    "{i:>5} {:>8} {:>5} {:>6} {:>12}  {:<30} {}\n",
                    c.size,
                    c.order,
                    c.e_grade,
                    c.trace.to_string(),
                    c.charpoly.to_string(),
                    word_text(&c.rep_word)
                );
            }
            s
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub label: String,
    pub rank: u32,
    #[serde(serialize_with = "crate::counter::json_int::serialize")]
    pub q_closed: BigUint,
    pub q_brute: Option<u64>,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
}

/// Types listed by `table`: the infinite families up to `n_max`, then the
/// exceptional types.
pub fn table_types(n_max: u32) -> Vec<CartanType> {
    let mut out = Vec::new();
    for fam in [Family::A, Family::B, Family::C, Family::BC, Family::D] {
        let lo = if fam == Family::D { 2 } else { 1 };
        for n in lo..=n_max {
            out.push(CartanType::new(fam, n).expect("valid rank"));
        }
    }
    for fam in [
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
        Family::H3,
        Family::H4,
    ] {
        out.push(CartanType::new(fam, 0).expect("exceptional type"));
    }
    for n in 2..=n_max.max(2) {
        out.push(CartanType::new(Family::I2, n).expect("valid dihedral order"));
    }
    out
}

pub fn table(n_max: u32, method: MethodArg, budget: &Budget) -> Result<Vec<TableRow>> {
    table_types(n_max)
        .into_iter()
        .map(|t| {
            let closed = q_closed(t)?;
            let order = t.group_order();
            let run_brute = t.family() != Family::I2
                && match method {
                    MethodArg::Closed => false,
                    MethodArg::Auto => order <= AUTO_BRUTE_LIMIT && budget.allows_order(order),
                    MethodArg::Brute => {
                        budget.allows_order(order) && (t.family() != Family::E8 || budget.force_e8)
                    }
                };
            let brute = if run_brute {
                let g = generate(&crate::roots::RootSystem::build(t)?, budget)?;
                let q = q_of_group(&g).q;
                Some(u64::try_from(q).map_err(|e| Error::Internal(e.to_string()))?)
            } else {
                None
            };
            Ok(TableRow {
                label: t.to_string(),
                rank: t.rank(),
                matches: brute.map(|b| BigUint::from(b) == closed),
                q_closed: closed,
                q_brute: brute,
            })
        })
        .collect()
}

fn render_table(rows: &[TableRow], format: Format) -> Result<String> {
    let opt = |o: Option<String>| o.unwrap_or_default();
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(rows)? + "\n",
        Format::Csv => {
            let mut s = String::from("type,rank,q_closed,q_brute,match\n");
            for r in rows {
                s += &format!(
                    "{},{},{},{},{}\n",
                    csv_field(&r.label),
                    r.rank,
                    r.q_closed,
                    opt(r.q_brute.map(|q| q.to_string())),
                    opt(r.matches.map(|m| m.to_string()))
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{:<8} {:>4} {:>10} {:>8} {:>6}\n",
                "type", "rank", "q_closed", "q_brute", "match"
            );
            for r in rows {
                s += &format!(
                    "{:<8} {:>4} {:>10} {:>8} {:>6}\n",
                    r.label,
                    r.rank,
                    r.q_closed.to_string(),
                    opt(r.q_brute.map(|q| q.to_string())),
                    opt(r.matches.map(|m| m.to_string()))
                );
            }
            s
        }
    })
}

fn render_verify(report: &verify::VerifyReport, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(report)? + "\n",
        Format::Csv => {
            let mut s = String::from("suite,check,status,detail\n");
            for l in &report.lines {
                let status = serde_json::to_value(l.status)?;
                s += &format!(
                    "{},{},{},{}\n",
                    l.suite,
                    csv_field(&l.name),
                    status.as_str().unwrap_or(""),
                    csv_field(&l.detail)
                );
            }
            s
        }
        Format::Text => {
            let mut s: String = report.lines.iter().map(|l| format!("{l}\n")).collect();
            let failed = report.failures().count();
            s += &if failed == 0 {
                format!("all {} checks passed\n", report.lines.len())
            } else {
                format!("{failed} of {} checks failed\n", report.lines.len())
            };
            s
        }
    })
}

/// Runs a parsed command line; returns the exit code.
pub fn run(cli: Cli) -> Result<i32> {
    let ctx = Ctx { global: cli.global };
    let format = ctx.global.format;
    match cli.command {
        Command::Count { ty, method } => {
            let label = parse_label(&ty.ty, ty.rank)?;
            let report = count(&label, method, &ctx.budget(), || ctx.group(&label))?;
            ctx.emit(&render_count(&report, format)?)?;
            Ok(match &report.cross_check {
                Some(c) if !c.matches => EXIT_FAILED,
                _ => EXIT_OK,
            })
        }
        Command::Table { n_max, method } => {
            let rows = table(n_max, method, &ctx.budget())?;
            ctx.emit(&render_table(&rows, format)?)?;
            Ok(if rows.iter().any(|r| r.matches == Some(false)) {
                EXIT_FAILED
            } else {
                EXIT_OK
            })
        }
        Command::Classes { ty } => {
            let label = parse_label(&ty.ty, ty.rank)?;
            let report = q_of_group(&ctx.group(&label)?);
            ctx.emit(&render_classes(&report, format)?)?;
            Ok(EXIT_OK)
        }
        Command::Verify { suites } => {
            let suites = if suites.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suites
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<Vec<Suite>>>()?
            };
            let report = verify::run(&VerifyOptions {
                suites,
                slow: ctx.global.slow,
            });
            ctx.emit(&render_verify(&report, format)?)?;
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
    }
}

/// Entry point for the binary: parses `std::env::args`, runs, reports errors
/// on stderr.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    EXIT_OK
                }
                _ => EXIT_INVALID,
            };
        }
    };
    let pool = cli
        .global
        .threads
        .map(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build());
    let result = match pool {
        Some(Ok(pool)) => pool.install(|| run(cli)),
        Some(Err(e)) => Err(Error::Internal(e.to_string())),
        None => run(cli),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("cxqt: {e}");
            exit_code(&e)
        }
    }
}
