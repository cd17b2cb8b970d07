//! The `cusp` command line.
//!
//! Exit status is 0 on success, 1 for domain errors (bad generators,
//! unparsable germs, out-of-range sites) and 2 for usage errors. Undecided
//! answers are part of the report, not errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::curve::CuspCurve;
use crate::error::{Error, Result};
use crate::germ::{Decision, LaurentGerm};
use crate::nagata::{power_table, SingularPart};
use crate::report::{Outcome, Report};
use crate::semigroup::NumericalSemigroup;
use crate::surgery::{GlobalSection, SurgeryCurve};

#[derive(Debug, Parser)]
#[command(name = "cusp", version, about = "Exact computations on monomial cusp curves")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Numerical semigroup <p,q>.
    #[command(subcommand)]
    Semigroup(SemigroupCmd),
    /// Germs on the cusp z1^p = z2^q.
    #[command(subcommand)]
    Curve(CurveCmd),
    /// Powers of the global function on the glued curve.
    #[command(subcommand)]
    Rado(RadoCmd),
    /// Power bound over a region containing finitely many cusps.
    #[command(subcommand)]
    Theorem1(Theorem1Cmd),
    /// Square-zero sections id + eps*g over the punctured line.
    #[command(subcommand)]
    Nagata(NagataCmd),
}

#[derive(Debug, Args)]
struct Generators {
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
}

#[derive(Debug, Subcommand)]
enum SemigroupCmd {
    /// Conductor, Frobenius number and a membership table.
    Info {
        #[command(flatten)]
        gens: Generators,
        /// Last n in the membership table (default: conductor + min(p,q)).
        #[arg(long)]
        upto: Option<i64>,
    },
}

#[derive(Debug, Subcommand)]
enum CurveCmd {
    /// Holomorphy, powers, flatness and Weierstrass data of a germ.
    Analyze {
        #[command(flatten)]
        gens: Generators,
        /// Pullback of the germ, e.g. "t + 2*t^5 + O(t^9)"; defaults to h.
        #[arg(long, allow_hyphen_values = true)]
        germ: Option<String>,
    },
    /// Floor condition versus exact holomorphy of z1^a z2^b h.
    Multiplier {
        #[command(flatten)]
        gens: Generators,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, allow_negative_numbers = true)]
        b: i64,
    },
}

#[derive(Debug, Subcommand)]
enum RadoCmd {
    /// Site where f^n fails to be holomorphic.
    Witness {
        #[arg(long = "max-k")]
        max_k: i64,
        #[arg(long)]
        n: i64,
    },
}

#[derive(Debug, Subcommand)]
enum Theorem1Cmd {
    /// n_Omega for sites 2..=region and the per-site table for f^n.
    Bound {
        #[arg(long = "max-k")]
        max_k: i64,
        #[arg(long)]
        region: i64,
        /// Power to tabulate (default: n_Omega).
        #[arg(long)]
        n: Option<i64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GChoice {
    /// g = 1/z
    Inv,
    /// g = exp(1/z)
    Expinv,
}

#[derive(Debug, Subcommand)]
enum NagataCmd {
    /// sigma^k and whether it extends across 0, for k = 1..=max-pow.
    Demo {
        #[arg(long, value_enum)]
        g: GChoice,
        #[arg(long = "max-pow")]
        max_pow: u32,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line; `args` includes the program name.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if status == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Invocation {
                status,
                stdout,
                stderr,
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => Invocation {
            status: 0,
            stdout: if cli.json {
                report.to_json()
            } else {
                report.to_text()
            },
            stderr: String::new(),
        },
        Err(e) => Invocation {
            status: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Semigroup(SemigroupCmd::Info { gens, upto }) => semigroup_info(gens, *upto),
        Command::Curve(CurveCmd::Analyze { gens, germ }) => curve_analyze(gens, germ.as_deref()),
        Command::Curve(CurveCmd::Multiplier { gens, a, b }) => curve_multiplier(gens, *a, *b),
        Command::Rado(RadoCmd::Witness { max_k, n }) => rado_witness(*max_k, *n),
        Command::Theorem1(Theorem1Cmd::Bound { max_k, region, n }) => {
            theorem1_bound(*max_k, *region, *n)
        }
        Command::Nagata(NagataCmd::Demo { g, max_pow }) => nagata_demo(*g, *max_pow),
    }
}

fn semigroup_info(gens: &Generators, upto: Option<i64>) -> Result<Report> {
    let s = NumericalSemigroup::new(gens.p, gens.q)?;
    let upto = upto.unwrap_or(s.conductor() + s.min_generator());
    if upto < 0 {
        return Err(Error::InvalidArgument(format!("--upto must be >= 0, got {upto}")));
    }
    let mut report = Report::new("semigroup info")
        .input("p", gens.p)
        .input("q", gens.q)
        .input("upto", upto);
    report.result("semigroup", s.to_string());
    report.result("conductor", s.conductor());
    report.result("frobenius", s.frobenius());
    let rows: Vec<Value> = (0..=upto)
        .map(|n| {
            json!({
                "n": n,
                "member": s.contains(n),
                "representation": s.representation(n).map(|(a, b)| format!("{a}*{}+{b}*{}", s.p(), s.q())),
            })
        })
        .collect();
    report.result("membership", rows);
    report.result(
        "gaps",
        (0..s.conductor()).filter(|n| !s.contains(*n)).collect::<Vec<_>>(),
    );
    let c = s.conductor();
    let law = !s.contains(c - 1) && (c..=c + 2 * s.p() * s.q()).all(|n| s.contains(n));
    report.finding(
        "conductor law",
        Outcome::from_bool(law),
        format!("{} is missing and [{c}, {}] is contained", c - 1, c + 2 * s.p() * s.q()),
    );
    Ok(report)
}

fn decision_value(d: &Decision) -> Value {
    Value::String(d.to_string())
}

fn result_or_message<T: serde::Serialize>(r: Result<T>) -> Value {
    match r {
        Ok(v) => json!(v),
        Err(e) => Value::String(e.to_string()),
    }
}

fn curve_analyze(gens: &Generators, germ: Option<&str>) -> Result<Report> {
    let c = CuspCurve::new(gens.p, gens.q)?;
    let rado = c.rado_germ();
    let f = match germ {
        Some(spec) => spec.parse::<LaurentGerm>()?,
        None => rado.pullback.clone(),
    };
    let mut report = Report::new("curve analyze")
        .input("p", gens.p)
        .input("q", gens.q)
        .input("germ", germ.unwrap_or("h"));

    report.result("curve", c.to_string());
    report.result("germ", f.to_string());
    report.result("rado", json!({"m": rado.m, "n": rado.n, "pullback": rado.pullback}));
    let decision = c.is_holomorphic_at_cusp(&f);
    report.result("decision", decision_value(&decision));
    report.result("witnessExponent", c.holomorphy_witness(&f));
    report.result("weaklyHolomorphic", decision_value(&c.is_weakly_holomorphic(&f)));
    report.result("minPower", result_or_message(c.min_power(&f)));
    report.result("stablePower", result_or_message(c.stable_power(&f)));

    let (d, axis) = c.covering_degree();
    report.result("coveringDegree", json!({"d": d, "projectionAxis": axis}));
    report.result("whitneyCone", c.whitney_cone());

    let flatness = c.order_of_flatness(&f);
    report.result(
        "orderOfFlatness",
        result_or_message(flatness.clone().map(|r| r.to_string())),
    );
    if let Ok(ord) = flatness {
        let bound = num_rational::Rational64::new(1, d);
        report.finding(
            "flatness bound",
            Outcome::from_bool(ord >= bound),
            format!("ord = {ord} against 1/d = {bound}"),
        );
    }

    if let Some(e) = f.lowest_exponent().filter(|e| *e >= 1) {
        let w = c.weierstrass(e)?;
        let coefficients: Vec<String> = w.coefficients.iter().map(|a| a.to_string()).collect();
        report.result(
            "weierstrass",
            json!({
                "germExponent": e,
                "factored": w.to_string(),
                "coefficients": coefficients,
            }),
        );
        report.finding(
            "weierstrass annihilates",
            Outcome::from_bool(w.annihilates_pullback()),
            format!("W(t^{d}, t^{e}) = 0"),
        );
    }

    let r = c.weak_generator_count();
    let (generates, smaller) = c.verify_weak_generation();
    report.result(
        "weakGenerators",
        json!({"r": r, "generates": generates, "fewerSuffice": smaller}),
    );
    report.finding(
        "weak generation",
        Outcome::from_bool(generates),
        format!(
            "1, h, ..., h^{r} generate up to exponent {}",
            c.semigroup().conductor() + r
        ),
    );
    Ok(report)
}

fn curve_multiplier(gens: &Generators, a: i64, b: i64) -> Result<Report> {
    let c = CuspCurve::new(gens.p, gens.q)?;
    if a < 0 || b < 0 {
        return Err(Error::InvalidArgument("--a and --b must be >= 0".into()));
    }
    let rado = c.rado_germ();
    let floor = c.floor_multiplier_check(a, b);
    let exact = c.exact_multiplier_check(a, b);
    let mut report = Report::new("curve multiplier")
        .input("p", gens.p)
        .input("q", gens.q)
        .input("a", a)
        .input("b", b);
    report.result("curve", c.to_string());
    report.result("rado", json!({"m": rado.m, "n": rado.n}));
    report.result("pullbackExponent", c.pullback_monomial(a, b) + 1);
    report.result("floorCheck", floor);
    report.result("exactCheck", exact);
    report.finding(
        "floor soundness",
        Outcome::from_bool(!floor || exact),
        "floor condition implies exact holomorphy",
    );
    Ok(report)
}

fn rado_witness(max_k: i64, n: i64) -> Result<Report> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!("--n must be >= 1, got {n}")));
    }
    let x = SurgeryCurve::build_standard(max_k)?;
    let f = GlobalSection::standard(&x);
    let site = x.no_global_power_witness(n)?;
    let first = f.first_witness(&x, n)?;
    let mut report = Report::new("rado witness")
        .input("max-k", max_k)
        .input("n", n);
    report.result("witnessSite", site);
    report.result("firstWitnessSite", first);
    report.result("germ", f.germ(site).map(|g| g.to_string()));
    report.result("decision", decision_value(&f.power_decision(&x, site, n)?));
    report.result("power", f.germ(site).map(|g| g.pow(n as u32).to_string()));
    report.finding(
        "witness pattern",
        Outcome::from_bool(site == n + 1),
        format!("f^{n} is not holomorphic at every site from {site} to {max_k}"),
    );
    Ok(report)
}

fn theorem1_bound(max_k: i64, region: i64, n: Option<i64>) -> Result<Report> {
    let x = SurgeryCurve::build_standard(max_k)?;
    let f = GlobalSection::standard(&x);
    let n_omega = x.n_omega(region)?;
    let n = n.unwrap_or(n_omega);
    let table = f.check_power(&x, n, region)?;
    let mut report = Report::new("theorem1 bound")
        .input("max-k", max_k)
        .input("region", region)
        .input("n", n);
    report.result("nOmega", n_omega);
    let rows: Vec<Value> = table
        .rows
        .iter()
        .map(|r| json!({"site": r.site, "decision": decision_value(&r.decision), "germ": r.germ}))
        .collect();
    report.result("sites", rows);
    report.result("overall", decision_value(&table.overall));
    let sharp = f.power_decision(&x, region, n_omega - 1)?;
    report.finding(
        "sharpness",
        Outcome::from_bool(n_omega < 2 || sharp.is_no()),
        format!("f^{} at site {region}: {sharp}", n_omega - 1),
    );
    if n >= n_omega {
        report.finding(
            "power bound",
            Outcome::from_bool(table.overall.is_yes()),
            format!("f^{n} holomorphic at sites 2..={region}"),
        );
    }
    Ok(report)
}

fn nagata_demo(g: GChoice, max_pow: u32) -> Result<Report> {
    if max_pow < 1 {
        return Err(Error::InvalidArgument("--max-pow must be >= 1".into()));
    }
    let part = match g {
        GChoice::Inv => SingularPart::Inverse,
        GChoice::Expinv => SingularPart::ExpInverse,
    };
    let rows = power_table(part, max_pow)?;
    let sigma = part.section();
    let mut report = Report::new("nagata demo")
        .input("g", part.object().to_string())
        .input("max-pow", max_pow);
    report.result("sigma", sigma.to_string());
    report.result("reduction", sigma.reduction().to_string());
    let table: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "k": r.k,
                "power": r.power.to_string(),
                "extends": r.extends,
                "linearFormulaExtends": r.linear_formula_extends,
            })
        })
        .collect();
    report.result("powers", table);

    let iterated = (1..=max_pow.min(50)).all(|k| sigma.pow(k).ok() == sigma.pow_iterated(k).ok());
    report.finding(
        "closed form matches iterated product",
        Outcome::from_bool(iterated),
        format!("k = 1..={}", max_pow.min(50)),
    );
    let extending: Vec<u32> = rows.iter().filter(|r| r.extends).map(|r| r.k).collect();
    if extending.is_empty() {
        report.finding(
            "no power extends",
            Outcome::Pass,
            format!("sigma^k is singular at 0 for k = 1..={max_pow}"),
        );
    } else {
        report.finding(
            "no power extends",
            Outcome::ContradictionWithPaper,
            format!(
                "sigma^k = (z^k, k z^(k-1) g) extends for k in {:?}; the formula id + eps*k*g would not",
                extending
            ),
        );
    }
    Ok(report)
}
