//! `pade`: build Padé approximants of the exponential, inspect their Newton
//! polygons, certify Galois groups and run the verification suites.

mod dto;
mod suites;

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use pade_galois::galois::certify_galois;
use pade_galois::newton::newton_polygon;
use pade_galois::{Conclusion, Family, FamilySpec, GaloisCertificate};

use dto::{coefficients, fraction, CertificateDto, PolygonDto};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(
    name = "pade",
    version,
    about = "Padé approximants of exp(x): polynomials, Newton polygons and Galois certificates"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Largest polynomial degree any command will build.
    #[arg(long, default_value_t = 400, global = true)]
    budget: u64,
    /// Seed for equal-degree splitting over finite fields.
    #[arg(long, default_value_t = 1, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    #[value(name = "e")]
    E,
    #[value(name = "L")]
    L,
}

/// `P u v`, `Q u v`, `e n`, or `L n r` (the integral shifted Laguerre
/// polynomial `n! L_n^(-1-n-r)`).
#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(value_enum)]
    family: FamilyName,
    #[arg(allow_negative_numbers = true, num_args = 1..=2, required = true)]
    params: Vec<i64>,
}

#[derive(Debug, Clone, Copy)]
struct MRange(u64, u64);

impl FromStr for MRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("{t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => (parse(s)?, parse(s)?),
        };
        if lo == 0 || lo > hi {
            return Err(format!("need 1 <= lo <= hi, got {s}"));
        }
        Ok(MRange(lo, hi))
    }
}

impl MRange {
    fn range(self) -> RangeInclusive<u64> {
        self.0..=self.1
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print coefficients in ascending order.
    Poly(FamilyArgs),
    /// Certify the Galois group. Exit 0 when the conclusion is definite.
    Certify(FamilyArgs),
    /// Galois groups of the diagonal approximants P(m,m+delta) and
    /// Q(m,m+delta). Rows are indexed by m, the degree of P.
    Table {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(0..=1))]
        delta: u8,
        /// Inclusive range `lo..hi`.
        #[arg(long, default_value = "2..20")]
        m: MRange,
    },
    /// Newton polygon at a prime.
    Np {
        #[command(flatten)]
        poly: FamilyArgs,
        #[arg(long)]
        prime: u64,
    },
    /// Run a verification suite. Exit 0 when every check passes.
    Verify {
        #[command(subcommand)]
        suite: suites::Suite,
    },
}

pub enum Exit {
    Ok,
    Failure,
    Unresolved,
    Usage,
}

impl From<Exit> for ExitCode {
    fn from(e: Exit) -> Self {
        ExitCode::from(match e {
            Exit::Ok => 0,
            Exit::Failure => 1,
            Exit::Unresolved => 2,
            Exit::Usage => 64,
        })
    }
}

/// A rejected invocation; reported on stderr with exit code 64.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

pub struct Context {
    pub format: Format,
    pub budget: u64,
    pub seed: u64,
}

impl Context {
    pub fn check_degree(&self, degree: u64) -> Result<(), UsageError> {
        if degree > self.budget {
            return Err(UsageError(format!(
                "degree {degree} exceeds --budget {}",
                self.budget
            )));
        }
        Ok(())
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn family_spec(args: &FamilyArgs) -> Result<FamilySpec, UsageError> {
    let unsigned = |x: i64| {
        u64::try_from(x).map_err(|_| UsageError(format!("parameter {x} must be non-negative")))
    };
    let spec = match (args.family, args.params.as_slice()) {
        (FamilyName::P, &[u, v]) => FamilySpec::P {
            u: unsigned(u)?,
            v: unsigned(v)?,
        },
        (FamilyName::Q, &[u, v]) => FamilySpec::Q {
            u: unsigned(u)?,
            v: unsigned(v)?,
        },
        (FamilyName::E, &[n]) => FamilySpec::Exp { n: unsigned(n)? },
        (FamilyName::L, &[n, r]) => FamilySpec::ShiftedGlp { n: unsigned(n)?, r },
        (family, params) => {
            let want = if family == FamilyName::E {
                "n"
            } else {
                "two parameters"
            };
            return Err(UsageError(format!(
                "{family:?} takes {want}, got {params:?}"
            )));
        }
    };
    spec.validate()?;
    Ok(spec)
}

fn cmd_poly(ctx: &Context, args: &FamilyArgs) -> Result<(String, Exit), UsageError> {
    let spec = family_spec(args)?;
    ctx.check_degree(spec.degree())?;
    let coeffs = coefficients(&spec.polynomial()?);
    let out = match ctx.format {
        Format::Json => to_json(&coeffs),
        Format::Tsv => coeffs.join("\t") + "\n",
        Format::Pretty => coeffs.join(" ") + "\n",
    };
    Ok((out, Exit::Ok))
}

fn certificate_exit(cert: &GaloisCertificate) -> Exit {
    match cert.conclusion {
        Conclusion::Definite(_) => Exit::Ok,
        _ => Exit::Unresolved,
    }
}

fn render_certificate(format: Format, dto: &CertificateDto) -> String {
    match format {
        Format::Json => to_json(dto),
        Format::Tsv => {
            let irr = serde_json::to_string(&dto.irreducibility).unwrap();
            let an = serde_json::to_string(&dto.an_containment).unwrap();
            format!(
                "{}\t{}\t{}\t{}\t{irr}\t{an}\t{}\t{}\t{}\n",
                dto.family,
                dto.u,
                dto.v,
                dto.degree,
                dto.newton_index,
                dto.square_class,
                dto.conclusion
            )
        }
        Format::Pretty => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "{}({},{})  degree {}",
                dto.family, dto.u, dto.v, dto.degree
            );
            let _ = writeln!(
                s,
                "irreducibility:   {}",
                serde_json::to_string(&dto.irreducibility).unwrap()
            );
            let _ = writeln!(
                s,
                "A_n containment:  {}",
                serde_json::to_string(&dto.an_containment).unwrap()
            );
            let _ = writeln!(s, "newton index:     {}", dto.newton_index);
            let _ = writeln!(s, "disc square class: {}", dto.square_class);
            let _ = writeln!(s, "conclusion:       {}", dto.conclusion);
            s
        }
    }
}

fn cmd_certify(ctx: &Context, args: &FamilyArgs) -> Result<(String, Exit), UsageError> {
    let spec = family_spec(args)?;
    ctx.check_degree(spec.degree())?;
    let cert = certify_galois(&spec)?;
    let dto = CertificateDto::new(&spec, &cert);
    Ok((
        render_certificate(ctx.format, &dto),
        certificate_exit(&cert),
    ))
}

#[derive(Debug, Serialize)]
struct TableRow {
    m: u64,
    p: CertificateDto,
    q: CertificateDto,
}

fn evidence(dto: &CertificateDto) -> String {
    let kind = |v: serde_json::Value| v["kind"].as_str().unwrap_or_default().to_owned();
    format!(
        "{}+{}",
        kind(serde_json::to_value(&dto.irreducibility).unwrap()),
        kind(serde_json::to_value(&dto.an_containment).unwrap())
    )
}

fn cmd_table(ctx: &Context, delta: u8, m: MRange) -> Result<(String, Exit), UsageError> {
    ctx.check_degree(m.1 + u64::from(delta))?;
    let ms: Vec<u64> = m.range().collect();
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(ms.len().max(1));
    let row = |m: u64| -> Result<(TableRow, bool), UsageError> {
        let mut certs = Vec::new();
        let mut definite = true;
        for family in [Family::P, Family::Q] {
            let spec = FamilySpec::diagonal(family, m, delta)?;
            let cert = certify_galois(&spec)?;
            definite &= cert.conclusion.definite().is_some();
            certs.push(CertificateDto::new(&spec, &cert));
        }
        let q = certs.pop().unwrap();
        let p = certs.pop().unwrap();
        Ok((TableRow { m, p, q }, definite))
    };
    // Rows are independent; strided across threads, then reassembled in order.
    let mut results: Vec<Option<Result<(TableRow, bool), UsageError>>> =
        (0..ms.len()).map(|_| None).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let ms = &ms;
                let row = &row;
                scope.spawn(move || {
                    (w..ms.len())
                        .step_by(workers)
                        .map(|i| (i, row(ms[i])))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("table worker panicked") {
                results[i] = Some(r);
            }
        }
    });
    let mut rows = Vec::new();
    let mut all_definite = true;
    for r in results {
        let (row, definite) = r.expect("every row computed")?;
        all_definite &= definite;
        rows.push(row);
    }
    let out = match ctx.format {
        Format::Json => to_json(&rows),
        Format::Tsv => {
            let mut s = String::from("m\tP\tQ\tP_evidence\tQ_evidence\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}",
                    r.m,
                    r.p.conclusion,
                    r.q.conclusion,
                    evidence(&r.p),
                    evidence(&r.q)
                );
            }
            s
        }
        Format::Pretty => {
            let mut s = format!(
                "{:>4}  {:<18}{:<18}{}\n",
                "m",
                format!("P(m,m+{delta})"),
                format!("Q(m,m+{delta})"),
                "evidence (P; Q)"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>4}  {:<18}{:<18}{}; {}",
                    r.m,
                    r.p.conclusion,
                    r.q.conclusion,
                    evidence(&r.p),
                    evidence(&r.q)
                );
            }
            s
        }
    };
    Ok((
        out,
        if all_definite {
            Exit::Ok
        } else {
            Exit::Unresolved
        },
    ))
}

fn cmd_np(ctx: &Context, args: &FamilyArgs, prime: u64) -> Result<(String, Exit), UsageError> {
    let spec = family_spec(args)?;
    ctx.check_degree(spec.degree())?;
    let np = newton_polygon(&spec.polynomial()?, prime)?;
    let dto = PolygonDto::from(&np);
    let out = match ctx.format {
        Format::Json => to_json(&dto),
        Format::Tsv => {
            let mut s = String::from("start_j\tstart_v\tend_j\tend_v\tslope\tlength\n");
            for seg in np.segments() {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    seg.start.0,
                    seg.start.1,
                    seg.end.0,
                    seg.end.1,
                    fraction(&seg.slope()),
                    seg.length()
                );
            }
            s
        }
        Format::Pretty => {
            let mut s = format!("Newton polygon of {spec} at {prime}\n");
            let vertices: Vec<String> = dto
                .vertices
                .iter()
                .map(|(j, v)| format!("({j},{v})"))
                .collect();
            let _ = writeln!(s, "vertices:  {}", vertices.join(" "));
            for seg in &dto.segments {
                let _ = writeln!(s, "segment:   slope {}, length {}", seg.slope, seg.length);
            }
            let _ = writeln!(s, "flatness:  {}", dto.flatness);
            let _ = writeln!(s, "steepness: {}", dto.steepness);
            s
        }
    };
    Ok((out, Exit::Ok))
}

fn run(cli: Cli) -> Result<(String, Exit), UsageError> {
    let ctx = Context {
        format: if cli.json { Format::Json } else { cli.format },
        budget: cli.budget,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Poly(args) => cmd_poly(&ctx, args),
        Command::Certify(args) => cmd_certify(&ctx, args),
        Command::Table { delta, m } => cmd_table(&ctx, *delta, *m),
        Command::Np { poly, prime } => cmd_np(&ctx, poly, *prime),
        Command::Verify { suite } => suites::run(&ctx, suite),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                Exit::Usage
            } else {
                Exit::Ok
            };
            let _ = e.print();
            return code.into();
        }
    };
    match run(cli) {
        Ok((out, exit)) => {
            print!("{out}");
            exit.into()
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            Exit::Usage.into()
        }
    }
}
