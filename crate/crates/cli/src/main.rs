//! `dyckperm`: batch front end for the dyckperm library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 precondition violation, 4 resource ceiling.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dyckperm::bijections::{beta, kappa, phi, phi_inv, psi_perm, trio_132_213};
use dyckperm::dyck::{enumerate_dyck_within, DyckPath};
use dyckperm::permutations::{enumerate_avoiders_within, Pattern, Permutation};
use dyckperm::polynomials::{
    a_poly_within, cat_qt_within, macmahon_q_catalan_within, tristat_gf_within, MultiPoly, Orientation,
};
use dyckperm::tableaux::j_involution;
use dyckperm::verify::{run_within, Suite};
use dyckperm::{Error, DEFAULT_MAX_N};

#[derive(Parser)]
#[command(
    name = "dyckperm",
    version,
    about = "Bijections between pattern-avoiding permutations and Dyck paths"
)]
struct Cli {
    /// Ceiling on n for enumerations and polynomial construction.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a bijection to a permutation or a Dyck path.
    Map {
        bijection: Bijection,
        /// Permutation such as "[6,2,1,5,4,3]" or path such as "010011".
        input: String,
    },
    /// Print A_n, Cat_n, MacMahon's q-Catalan number or a tristatistic polynomial.
    Poly {
        /// One of a, cat, macmahon, tristat:<class>:<plain|complemented>.
        which: String,
        n: usize,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Run an invariant suite for n = 1..=n_max.
    Verify { suite: String, n_max: usize },
    /// List a class of objects with their statistics.
    Enumerate {
        /// avoiders:<pattern> or dyck.
        kind: String,
        n: usize,
        #[arg(long, value_enum, default_value_t = ListFormat::Lines)]
        format: ListFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Bijection {
    Phi,
    PhiInv,
    PsiPerm,
    PsiPath,
    Rho,
    Inverse,
    Kappa,
    Beta,
    Trio,
    J,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Lines,
    Json,
    Csv,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidPermutation(_)
            | Error::NonBinaryCharacter { .. }
            | Error::UnbalancedCounts { .. }
            | Error::PrefixViolation { .. }
            | Error::EmptyPath
            | Error::InvalidPolynomial(_)
            | Error::InvalidTableau(_) => 2,
            Error::NotAvoiding(_)
            | Error::NotAnAscent(_)
            | Error::InconsistentDescentData(_)
            | Error::InvalidValleySet(_)
            | Error::BinomialRange { .. }
            | Error::NegativeExponent => 3,
            Error::ResourceLimit { .. } => 4,
            Error::NoAssignment(_) | Error::Internal(_) => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 1,
            message: format!("output: {e}"),
        }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

/// Display label, statistics columns and JSON value of one listed object.
type Row = (String, Vec<(&'static str, usize)>, Value);

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) if f.message.contains("Broken pipe") => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli, out: &mut Out) -> Result<u8, Failure> {
    match &cli.command {
        Command::Map { bijection, input } => map(*bijection, input, out).map(|()| 0),
        Command::Poly { which, n, format } => poly(which, *n, *format, cli.max_n, out).map(|()| 0),
        Command::Verify { suite, n_max } => verify(suite, *n_max, cli.max_n, out),
        Command::Enumerate { kind, n, format } => enumerate(kind, *n, *format, cli.max_n, out).map(|()| 0),
    }
}

fn perm_stats_line(s: &Permutation) -> String {
    let st = s.stats();
    format!("des={} maj={} imaj={} inv={}", st.des, st.maj, st.imaj, st.inv)
}

fn path_stats_line(d: &DyckPath) -> String {
    let st = d.stats();
    format!(
        "maj={} maj0={} maj1={} area={} bounce={}",
        st.maj,
        st.maj0,
        st.maj1,
        d.area(),
        d.bounce()
    )
}

fn map(bijection: Bijection, input: &str, out: &mut Out) -> Result<(), Failure> {
    let perm = || input.parse::<Permutation>();
    let path = || input.parse::<DyckPath>();
    let (image, stats) = match bijection {
        Bijection::Phi => {
            let d = phi(&perm()?)?;
            (d.to_string(), path_stats_line(&d))
        }
        Bijection::Kappa => {
            let d = kappa(&perm()?)?;
            (d.to_string(), path_stats_line(&d))
        }
        Bijection::Beta => {
            let d = beta(&perm()?)?;
            (d.to_string(), path_stats_line(&d))
        }
        Bijection::PsiPath => {
            let d = path()?.psi_complement();
            (d.to_string(), path_stats_line(&d))
        }
        Bijection::PhiInv => {
            let s = phi_inv(&path()?);
            (s.to_string(), perm_stats_line(&s))
        }
        perm_map => {
            let sigma = perm()?;
            let s = match perm_map {
                Bijection::PsiPerm => psi_perm(&sigma)?,
                Bijection::Rho => sigma.reverse(),
                Bijection::Inverse => sigma.inverse(),
                Bijection::Trio => trio_132_213(&sigma)?,
                Bijection::J => j_involution(&sigma)?,
                _ => unreachable!("path-valued maps handled above"),
            };
            (s.to_string(), perm_stats_line(&s))
        }
    };
    writeln!(out, "{image}")?;
    writeln!(out, "{stats}")?;
    Ok(())
}

fn parse_tristat(arg: &str) -> Result<(Pattern, Orientation), Failure> {
    let bad = || usage(format!("expected tristat:<class>:<plain|complemented>, got {arg:?}"));
    let mut parts = arg.split(':');
    let (Some("tristat"), Some(class), Some(orientation), None) =
        (parts.next(), parts.next(), parts.next(), parts.next())
    else {
        return Err(bad());
    };
    let pattern: Pattern = class.parse().map_err(|_| bad())?;
    let orientation = match orientation {
        "plain" => Orientation::Plain,
        "complemented" => Orientation::Complemented,
        _ => return Err(bad()),
    };
    Ok((pattern, orientation))
}

fn poly(which: &str, n: usize, format: PolyFormat, max_n: usize, out: &mut Out) -> Result<(), Failure> {
    let p: MultiPoly = match which {
        "a" => a_poly_within(n, max_n)?,
        "cat" => cat_qt_within(n, max_n)?,
        "macmahon" => macmahon_q_catalan_within(n, max_n)?,
        other if other.starts_with("tristat:") => {
            let (pattern, orientation) = parse_tristat(other)?;
            tristat_gf_within(n, pattern, orientation, max_n)?
        }
        other => {
            return Err(usage(format!(
                "unknown polynomial {other:?}; expected a, cat, macmahon or tristat:..."
            )))
        }
    };
    match format {
        PolyFormat::Text => writeln!(out, "{p}")?,
        PolyFormat::Json => writeln!(out, "{}", p.to_json())?,
    }
    Ok(())
}

fn verify(suite: &str, n_max: usize, max_n: usize, out: &mut Out) -> Result<u8, Failure> {
    let suite: Suite = suite.parse().map_err(usage)?;
    let report = run_within(suite, n_max, max_n)?;
    writeln!(out, "{report}")?;
    Ok(if report.passed() { 0 } else { 1 })
}

enum Kind {
    Avoiders(Permutation),
    Dyck,
}

fn parse_kind(kind: &str) -> Result<Kind, Failure> {
    if kind == "dyck" {
        return Ok(Kind::Dyck);
    }
    match kind.strip_prefix("avoiders:") {
        Some(tau) => Ok(Kind::Avoiders(tau.parse()?)),
        None => Err(usage(format!(
            "unknown kind {kind:?}; expected avoiders:<pattern> or dyck"
        ))),
    }
}

fn enumerate(kind: &str, n: usize, format: ListFormat, max_n: usize, out: &mut Out) -> Result<(), Failure> {
    let rows: Box<dyn Iterator<Item = Row>> = match parse_kind(kind)? {
        Kind::Avoiders(tau) => Box::new(enumerate_avoiders_within(n, &tau, max_n)?.map(|s| {
            let st = s.stats();
            let cols = vec![("des", st.des), ("maj", st.maj), ("imaj", st.imaj), ("inv", st.inv)];
            (s.to_string(), cols, json!(s.word()))
        })),
        Kind::Dyck => Box::new(enumerate_dyck_within(n, max_n)?.map(|d| {
            let st = d.stats();
            let cols = vec![
                ("maj", st.maj),
                ("maj0", st.maj0),
                ("maj1", st.maj1),
                ("area", d.area()),
                ("bounce", d.bounce()),
            ];
            (d.to_string(), cols, json!(d.to_string()))
        })),
    };
    let key = if kind == "dyck" { "path" } else { "permutation" };
    match format {
        ListFormat::Lines => {
            for (label, cols, _) in rows {
                let stats: Vec<String> = cols.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(out, "{label} {}", stats.join(" "))?;
            }
        }
        ListFormat::Csv => {
            let header: &[&str] = if key == "path" {
                &["maj", "maj0", "maj1", "area", "bounce"]
            } else {
                &["des", "maj", "imaj", "inv"]
            };
            writeln!(out, "{key},{}", header.join(","))?;
            for (label, cols, _) in rows {
                let values: Vec<String> = cols.iter().map(|(_, v)| v.to_string()).collect();
                // permutations contain commas, so they are quoted
                let label = if key == "path" { label } else { format!("\"{label}\"") };
                writeln!(out, "{label},{}", values.join(","))?;
            }
        }
        ListFormat::Json => {
            writeln!(out, "[")?;
            let mut first = true;
            for (_, cols, object) in rows {
                let mut obj = serde_json::Map::new();
                obj.insert(key.to_string(), object);
                for (k, v) in cols {
                    obj.insert(k.to_string(), json!(v));
                }
                let sep = if first { "" } else { ",\n" };
                first = false;
                write!(out, "{sep}  {}", Value::Object(obj))?;
            }
            if !first {
                writeln!(out)?;
            }
            writeln!(out, "]")?;
        }
    }
    Ok(())
}
