use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use pade_galois::families::{
    closed_form_disc, closed_form_disc_alternate_sign, schur_congruence_check, shifted_glp,
    verify_pade_identity,
};
use pade_galois::galois::{
    certify_galois, diagonal_square_class_rule, disc_square_class, near_eisenstein_analysis_seeded,
    verify_eisenstein_theorem, verify_prime_gap, NearEisensteinOutcome, NearEisensteinSide, Side,
};
use pade_galois::poly::discriminant;
use pade_galois::{Conclusion, Family, FamilySpec, GroupTag};

use crate::dto::fraction;
use crate::{to_json, Context, Exit, Format, UsageError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// `e_n Q(u,v) = c P(u,v) + O(x^(u+v+1))` for `u + v <= n <= max`.
    PadeIdentity {
        #[arg(long, default_value_t = 16)]
        max: u64,
    },
    /// Closed-form discriminant against the resultant, `n <= max`, `r <= max`.
    Discriminant {
        #[arg(long, default_value_t = 12)]
        max: u64,
    },
    /// Discriminant square classes of `P(m,m+1)` and `Q(m,m+1)` by `m mod 4`.
    SquareClass {
        #[arg(long, default_value_t = 40)]
        max: u64,
    },
    /// Eisenstein shape of `P(p^n,p^n+1)` and `Q(p^n-1,p^n)` at `p`.
    Eisenstein {
        #[arg(long, requires = "n")]
        p: Option<u64>,
        #[arg(long, requires = "p")]
        n: Option<u32>,
        #[arg(long, value_enum, default_value_t = SideArg::Both)]
        side: SideArg,
    },
    /// Schur-type congruences `F(m) = c x^(kp) F(m mod p) (mod p)`.
    SchurModP {
        #[arg(long, default_value_t = 40)]
        max: u64,
        #[arg(long = "p", value_delimiter = ',', default_value = "3,5,7")]
        primes: Vec<u64>,
    },
    /// A prime in `(2m/3, m-3)` for every `lo <= m <= hi`.
    PrimeGap {
        #[arg(long, default_value_t = 21)]
        lo: u64,
        #[arg(long, default_value_t = 100_000)]
        hi: u64,
    },
    /// Factor-degree dichotomy for `P(p+1,p+2)` and `Q(p,p+1)`.
    NearEisenstein {
        #[arg(long = "p", value_delimiter = ',', default_value = "3,5,7,11,13")]
        primes: Vec<u64>,
    },
    /// Galois group of `e_n` is `A_n` exactly when `n = 0 mod 4`.
    Coleman {
        #[arg(long, default_value_t = 3)]
        lo: u64,
        #[arg(long, default_value_t = 15)]
        hi: u64,
    },
}

impl Suite {
    fn name(&self) -> &'static str {
        match self {
            Suite::PadeIdentity { .. } => "pade-identity",
            Suite::Discriminant { .. } => "discriminant",
            Suite::SquareClass { .. } => "square-class",
            Suite::Eisenstein { .. } => "eisenstein",
            Suite::SchurModP { .. } => "schur-mod-p",
            Suite::PrimeGap { .. } => "prime-gap",
            Suite::NearEisenstein { .. } => "near-eisenstein",
            Suite::Coleman { .. } => "coleman",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

fn check(name: &str, params: &[(&str, String)], ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_owned(),
        params: params
            .iter()
            .map(|(k, v)| ((*k).to_owned(), v.clone()))
            .collect(),
        ok,
        detail: detail.into(),
    }
}

fn pade_identity(max: u64) -> Result<Vec<Check>, UsageError> {
    let mut out = Vec::new();
    for s in 1..=max {
        for u in 0..=s {
            let v = s - u;
            for n in s..=max {
                let r = verify_pade_identity(u, v, n)?;
                let params = [
                    ("u", u.to_string()),
                    ("v", v.to_string()),
                    ("n", n.to_string()),
                ];
                out.push(check(
                    "identity",
                    &params,
                    r.ok,
                    format!("scalar {}", fraction(&r.scalar)),
                ));
            }
        }
    }
    Ok(out)
}

fn discriminant_suite(max: u64) -> Result<Vec<Check>, UsageError> {
    let mut out = Vec::new();
    for n in 1..=max {
        for r in 0..=max {
            let f = shifted_glp(n, r as i64);
            let truth = discriminant(&f)?;
            let closed = closed_form_disc(n, r);
            let params = [("n", n.to_string()), ("r", r.to_string())];
            out.push(check(
                "closed-form",
                &params,
                truth == closed,
                digits(&truth).to_string(),
            ));
        }
    }
    let truth = discriminant(&shifted_glp(2, 3))?;
    let wrong = closed_form_disc_alternate_sign(2, 3);
    out.push(check(
        "negative-control",
        &[("u", "2".into()), ("v", "3".into())],
        truth != wrong,
        format!("sign (-1)^u gives {wrong}, true discriminant {truth}"),
    ));
    Ok(out)
}

fn digits(x: &num_bigint::BigInt) -> String {
    let s = x.to_string();
    if s.len() <= 24 {
        s
    } else {
        format!(
            "{}... ({} digits)",
            &s[..12],
            s.trim_start_matches('-').len()
        )
    }
}

fn square_class_suite(max: u64) -> Result<Vec<Check>, UsageError> {
    let mut out = Vec::new();
    for m in 2..=max {
        for family in [Family::P, Family::Q] {
            let f = FamilySpec::diagonal(family, m, 1)?.polynomial()?;
            let class = disc_square_class(&f)?;
            let rule = diagonal_square_class_rule(family, m)?;
            let params = [("family", family.to_string()), ("m", m.to_string())];
            out.push(check(
                "square-class",
                &params,
                rule.matches(&class),
                format!("class {class}"),
            ));
        }
    }
    Ok(out)
}

fn eisenstein_suite(
    ctx: &Context,
    p: Option<u64>,
    n: Option<u32>,
    side: SideArg,
) -> Result<Vec<Check>, UsageError> {
    let pairs = match (p, n) {
        (Some(p), Some(n)) => vec![(p, n)],
        _ => vec![
            (3, 1),
            (3, 2),
            (3, 3),
            (5, 1),
            (5, 2),
            (7, 1),
            (7, 2),
            (11, 1),
        ],
    };
    let sides = match side {
        SideArg::P => vec![Side::P],
        SideArg::Q => vec![Side::Q],
        SideArg::Both => vec![Side::P, Side::Q],
    };
    let mut out = Vec::new();
    for (p, n) in pairs {
        for &side in &sides {
            let r = verify_eisenstein_theorem(p, n, side, ctx.budget)?;
            let params = [
                ("p", p.to_string()),
                ("n", n.to_string()),
                ("side", format!("{side:?}")),
            ];
            for (name, ok) in r.checks() {
                let detail = match name {
                    "a0-valuation" => format!(
                        "v_p(a_0) = {}, expected {}",
                        r.a0_valuation, r.expected_a0_valuation
                    ),
                    "valuation-identity" => format!("failures at {:?}", r.identity_failures),
                    "single-segment" => {
                        format!("(0,{}) to ({},0)", r.expected_a0_valuation, r.degree)
                    }
                    _ => String::new(),
                };
                out.push(check(name, &params, ok, detail));
            }
        }
    }
    Ok(out)
}

fn schur_suite(max: u64, primes: &[u64]) -> Result<Vec<Check>, UsageError> {
    let mut out = Vec::new();
    for family in [Family::P, Family::Q] {
        for delta in [0u8, 1] {
            for &p in primes {
                for m in 1..=max {
                    let r = schur_congruence_check(family, m, delta, p)?;
                    let params = [
                        ("family", family.to_string()),
                        ("m", m.to_string()),
                        ("delta", delta.to_string()),
                        ("p", p.to_string()),
                    ];
                    let detail = match r.signed_scalar() {
                        Some(c) => format!("scalar {c}"),
                        None => "no unit scalar".to_owned(),
                    };
                    out.push(check("congruence", &params, r.ok(), detail));
                }
            }
        }
    }
    Ok(out)
}

fn prime_gap_suite(lo: u64, hi: u64) -> Result<Vec<Check>, UsageError> {
    let r = verify_prime_gap(lo, hi)?;
    let mut out: Vec<Check> = r
        .failures
        .iter()
        .map(|m| {
            check(
                "interval-has-prime",
                &[("m", m.to_string())],
                false,
                format!("no prime in ({}/3, {})", 2 * m, *m as i64 - 3),
            )
        })
        .collect();
    out.push(check(
        "range",
        &[("lo", lo.to_string()), ("hi", hi.to_string())],
        r.failures.is_empty(),
        format!("{} failures", r.failures.len()),
    ));
    Ok(out)
}

fn outcome_text(side: &NearEisensteinSide) -> String {
    let verdict = match &side.outcome {
        NearEisensteinOutcome::NoRootModQ { q } => format!("irreducible (no root mod {q})"),
        NearEisensteinOutcome::NoIntegerRoot { bound, candidates } => {
            format!("irreducible (none of {candidates} candidates below {bound} is a root)")
        }
        NearEisensteinOutcome::LinearFactor { root } => format!(
            "linear factor x - ({root}) times degree {}",
            side.polynomial.degree().unwrap_or(1) - 1
        ),
        NearEisensteinOutcome::Undetermined => "undetermined".to_owned(),
    };
    format!(
        "{verdict}; simple roots mod p at {:?}",
        side.simple_root_residues
    )
}

fn near_eisenstein_suite(ctx: &Context, primes: &[u64]) -> Result<Vec<Check>, UsageError> {
    let mut out = Vec::new();
    for &p in primes {
        ctx.check_degree(p + 1)?;
        let r = near_eisenstein_analysis_seeded(p, ctx.seed)?;
        for side in [&r.p_side, &r.q_side] {
            let params = [
                ("p", p.to_string()),
                ("family", side.family.to_string()),
                ("u", side.u.to_string()),
                ("v", side.v.to_string()),
            ];
            let n = side.polynomial.degree().unwrap_or(0);
            let expected: std::collections::BTreeSet<usize> =
                [0, 1, n - 1, n].into_iter().collect();
            out.push(check(
                "factor-degrees",
                &params,
                side.factor_degrees == expected,
                format!("{:?}", side.factor_degrees),
            ));
            if side.family == Family::P {
                let iv_ok = side.exclusion.as_ref().is_some_and(|iv| {
                    iv.lower == 1 && iv.upper == num_rational::BigRational::from_integer(p.into())
                });
                let detail = match &side.exclusion {
                    Some(iv) => format!("({}, {})", iv.lower, fraction(&iv.upper)),
                    None => "none".to_owned(),
                };
                out.push(check("exclusion-interval", &params, iv_ok, detail));
            }
            out.push(check(
                "dichotomy",
                &params,
                side.dichotomy_holds(p),
                outcome_text(side),
            ));
        }
    }
    Ok(out)
}

fn coleman_suite(ctx: &Context, lo: u64, hi: u64) -> Result<Vec<Check>, UsageError> {
    if lo == 0 || lo > hi {
        return Err(UsageError("need 1 <= lo <= hi".into()));
    }
    ctx.check_degree(hi)?;
    let mut out = Vec::new();
    for n in lo..=hi {
        let cert = certify_galois(&FamilySpec::Exp { n })?;
        let expected = if n % 4 == 0 {
            GroupTag::alternating(n)
        } else {
            GroupTag::symmetric(n)
        };
        out.push(check(
            "galois-group",
            &[("n", n.to_string())],
            cert.conclusion == Conclusion::Definite(expected),
            format!("{} (expected {expected})", cert.conclusion),
        ));
    }
    Ok(out)
}

pub fn run(ctx: &Context, suite: &Suite) -> Result<(String, Exit), UsageError> {
    let checks = match suite {
        Suite::PadeIdentity { max } => pade_identity(*max)?,
        Suite::Discriminant { max } => discriminant_suite(*max)?,
        Suite::SquareClass { max } => square_class_suite(*max)?,
        Suite::Eisenstein { p, n, side } => eisenstein_suite(ctx, *p, *n, *side)?,
        Suite::SchurModP { max, primes } => schur_suite(*max, primes)?,
        Suite::PrimeGap { lo, hi } => prime_gap_suite(*lo, *hi)?,
        Suite::NearEisenstein { primes } => near_eisenstein_suite(ctx, primes)?,
        Suite::Coleman { lo, hi } => coleman_suite(ctx, *lo, *hi)?,
    };
    let report = SuiteReport {
        suite: suite.name().to_owned(),
        passed: checks.iter().all(|c| c.ok),
        checks,
    };
    let exit = if report.passed {
        Exit::Ok
    } else {
        Exit::Failure
    };
    Ok((render(ctx.format, &report), exit))
}

fn params_text(params: &BTreeMap<String, String>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn render(format: Format, report: &SuiteReport) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Tsv => {
            let mut s = String::new();
            for c in &report.checks {
                let status = if c.ok { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{status}\t{}",
                    report.suite,
                    c.name,
                    params_text(&c.params),
                    c.detail
                );
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for c in report
                .checks
                .iter()
                .filter(|c| !c.ok || c.name == "negative-control")
            {
                let status = if c.ok { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{status} {} [{}] {}",
                    c.name,
                    params_text(&c.params),
                    c.detail
                );
            }
            let status = if report.passed { "PASS" } else { "FAIL" };
            let failed = report.checks.iter().filter(|c| !c.ok).count();
            let _ = write!(
                s,
                "{status} {} ({} checks",
                report.suite,
                report.checks.len()
            );
            if failed > 0 {
                let _ = write!(s, ", {failed} failed");
            }
            s.push_str(")\n");
            s
        }
    }
}
