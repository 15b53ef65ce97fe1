mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use mzeta_core::composition::{compositions_up_to, Composition};
use mzeta_core::unitary::{conjecture_report, unitary_factor_scan, ScanBounds, Verdict};
use mzeta_core::verify::{run_eta, run_n, Check, CheckOutcome};
use mzeta_core::zeta::{format_rational, hadamard_series, parse_rational, RationalW};
use mzeta_core::{
    joint_distribution, BiPoly, BlockContext, Domain, Error, Permutation, SignedPermutation,
    StatPair, Word, DEFAULT_BUDGET,
};
use serde_json::{json, Value};

use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "mzeta",
    version,
    about = "Euler-Mahonian statistics and genus zeta numerators of hereditary orders"
)]
struct Cli {
    /// Largest number of objects any command may enumerate.
    #[arg(long, global = true, env = "MZETA_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u128,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every statistic of a word, an η-admissible permutation or a signed permutation.
    Stats(StatsArgs),
    /// Joint distribution of a statistic pair as a polynomial in x, y.
    Dist(DistArgs),
    /// Exhaustive verification of an identity, stopping at the first counterexample.
    Verify(VerifyArgs),
    /// W_η evaluated at rationals, or expanded as a series in y.
    Zeta(ZetaArgs),
    /// Unitary-factor test of the (denh,exc) numerator.
    Conjecture(ConjectureArgs),
    /// Bounded cyclotomic unitary-factor scan of a polynomial given as JSON.
    Scan(ScanArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["word", "perm", "signed"])))]
struct StatsArgs {
    #[arg(long)]
    eta: Option<String>,
    #[arg(long)]
    word: Option<String>,
    #[arg(long)]
    perm: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    signed: Option<String>,
    #[arg(long = "type", value_enum, default_value_t = SignedType::B)]
    signed_type: SignedType,
    /// Also print the intermediate sets.
    #[arg(long)]
    verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignedType {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DomainKind {
    Words,
    Admissible,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("size").required(true).args(["eta", "n"])))]
struct DistArgs {
    #[arg(long, value_enum)]
    domain: DomainKind,
    #[arg(long)]
    eta: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    pair: String,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("subject").required(true).args(["eta", "n", "all_eta_up_to"])))]
struct VerifyArgs {
    #[arg(long)]
    check: String,
    #[arg(long)]
    eta: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    all_eta_up_to: Option<usize>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("what").required(true).multiple(true).args(["q", "series_terms"])))]
struct ZetaArgs {
    #[arg(long)]
    eta: String,
    #[arg(long, requires = "t", allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, requires = "q", allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long)]
    series_terms: Option<u32>,
    /// Expand Σ_k Π_i [η_i+k choose k]_x y^k = W_η / (1 − x^n y) instead of W_η.
    #[arg(long, requires = "series_terms")]
    hadamard: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("shape").required(true).args(["eta", "rect"])))]
struct ConjectureArgs {
    #[arg(long)]
    eta: Option<String>,
    /// Rectangle (m^r) given as r,m.
    #[arg(long)]
    rect: Option<String>,
    #[arg(long)]
    max_d: Option<usize>,
    #[arg(long)]
    max_a: Option<u32>,
    #[arg(long)]
    max_b: Option<u32>,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// File holding {"vars":["x","y"],"terms":[[a,b,"c"],...]}.
    #[arg(long)]
    poly: PathBuf,
    #[arg(long)]
    max_d: Option<usize>,
    #[arg(long)]
    max_a: Option<u32>,
    #[arg(long)]
    max_b: Option<u32>,
}

/// Command failures, each carrying its exit code.
enum Failure {
    /// A verified identity failed or the conjecture met a counterexample.
    Refuted(String),
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::Inconsistent(_) => Failure::Refuted(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<(String, bool), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Stats(a) => stats(a, cli.format),
        Command::Dist(a) => dist(a, &cli),
        Command::Verify(a) => verify(a, &cli),
        Command::Zeta(a) => zeta(a, &cli),
        Command::Conjecture(a) => conjecture(a, &cli),
        Command::Scan(a) => scan(a, cli.format),
    };
    match result {
        Ok((output, ok)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{output}");
            }
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(Failure::Refuted(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg} (raise --budget or MZETA_BUDGET)");
            ExitCode::from(3)
        }
    }
}

fn parse_eta(s: &str) -> Result<Composition, Failure> {
    Ok(s.parse()?)
}

fn need_eta(eta: &Option<String>, what: &str) -> Result<Composition, Failure> {
    match eta {
        Some(s) => parse_eta(s),
        None => Err(Failure::Usage(format!("{what} requires --eta"))),
    }
}

fn stats(a: &StatsArgs, format: Format) -> CmdResult {
    let mut r = Report::new();
    if let Some(w) = &a.word {
        let eta = need_eta(&a.eta, "--word")?;
        let w = Word::parse(eta, w)?;
        let parts = w.denh_parts();
        r.text("composition", w.composition())
            .text("word", &w)
            .num("des", w.des() as i128)
            .num("maj", w.maj() as i128)
            .num("exc", w.exc() as i128)
            .num("inv", mzeta_core::stats::inv(w.letters()) as i128)
            .num("denh", w.denh() as i128);
        if a.verbose {
            r.set("Des", &w.descent_set())
                .set("Exc", &w.exc_set())
                .seq("E", &w.exceeding_subword())
                .seq("N", &w.nonexceeding_subword())
                .num("exc_sum", parts.exc_sum as i128)
                .num("imv(E)", parts.imv_exceeding as i128)
                .num("inv(N)", parts.inv_nonexceeding as i128)
                .text("std", w.standardize())
                .text("admissible", mzeta_core::admissible::word_to_admissible(&w));
        }
    } else if let Some(p) = &a.perm {
        let eta = need_eta(&a.eta, "--perm")?;
        let sigma = Permutation::parse(p)?;
        let ctx = BlockContext::new(eta.clone());
        if sigma.n() != eta.n() {
            return Err(Failure::Usage(format!(
                "permutation of length {} does not match n = {} of {eta}",
                sigma.n(),
                eta.n()
            )));
        }
        if !ctx.is_admissible(&sigma) {
            return Err(Failure::Usage(format!(
                "{sigma} is not {eta}-admissible: its descents are not all in {{{}}}, so den is undefined",
                eta.descent_set()
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )));
        }
        let parts = ctx.den_parts(&sigma)?;
        let w = ctx.admissible_to_word(&sigma)?;
        r.text("composition", &eta)
            .text("permutation", &sigma)
            .flag("admissible", true)
            .num("des", sigma.des() as i128)
            .num("maj", sigma.maj() as i128)
            .num("exc", sigma.exc() as i128)
            .num("I_sum", parts.i_sum as i128)
            .num("|N+|", parts.n_plus as i128)
            .num("|N-|", parts.n_minus as i128)
            .num("iexc", parts.iexc as i128)
            .num("den", parts.total() as i128)
            .text("word", &w);
        if a.verbose {
            let (weak, strict) = ctx.n_plus_split(&sigma);
            r.set("I", &ctx.i_set(&sigma))
                .cells("N+", &ctx.n_plus_set(&sigma))
                .cells("N-", &ctx.n_minus_set(&sigma))
                .cells("N+[<=]", &weak)
                .cells("N+[>]", &strict);
        }
    } else if let Some(s) = &a.signed {
        let s = SignedPermutation::parse(s)?;
        r.text("signed", &s);
        match a.signed_type {
            SignedType::B => {
                let b = s.b_stats();
                r.num("neg", b.neg as i128)
                    .num("ndes", b.ndes as i128)
                    .num("nmaj", b.nmaj as i128)
                    .num("fdes", b.fdes as i128)
                    .num("fmaj", b.fmaj as i128)
                    .num("excabs", s.excabs() as i128)
                    .num("nden", s.nden() as i128);
            }
            SignedType::D => {
                let d = s.d_stats()?;
                r.num("dneg", d.dneg as i128)
                    .num("ddes", d.ddes as i128)
                    .num("dmaj", d.dmaj as i128)
                    .num("dexc", d.dexc as i128)
                    .num("nsp", d.nsp as i128)
                    .num("dden", d.dden as i128);
                if a.verbose {
                    r.set("DNeg", &s.dneg_set());
                }
            }
        }
    }
    Ok((r.render(format), true))
}

fn dist(a: &DistArgs, cli: &Cli) -> CmdResult {
    let pair: StatPair = a.pair.parse()?;
    let domain = match (a.domain, &a.eta, a.n) {
        (DomainKind::Words, Some(e), _) => Domain::Words(parse_eta(e)?),
        (DomainKind::Admissible, Some(e), _) => Domain::Admissible(parse_eta(e)?),
        (DomainKind::B, _, Some(n)) if n > 0 => Domain::Signed(n),
        (DomainKind::D, _, Some(n)) if n > 0 => Domain::EvenSigned(n),
        (DomainKind::Words | DomainKind::Admissible, _, _) => {
            return Err(Failure::Usage("this domain takes --eta".into()))
        }
        _ => return Err(Failure::Usage("this domain takes --n with n ≥ 1".into())),
    };
    let p = joint_distribution(&domain, pair, cli.budget)?;
    Ok((render_poly(&p, cli.format), true))
}

fn render_poly(p: &BiPoly, format: Format) -> String {
    match format {
        Format::Text => format!("{p}\n"),
        Format::Json => format!("{}\n", p.to_json()),
    }
}

fn verify(a: &VerifyArgs, cli: &Cli) -> CmdResult {
    let check: Check = a.check.parse()?;
    let mut outcomes: Vec<CheckOutcome> = Vec::new();
    let mut run = |o: CheckOutcome| {
        let passed = o.passed();
        outcomes.push(o);
        passed
    };
    if let Some(e) = &a.eta {
        if check.takes_n() {
            return Err(Failure::Usage(format!("check {check} takes --n")));
        }
        run(run_eta(check, &parse_eta(e)?, cli.budget)?);
    } else if let Some(n) = a.n {
        if !check.takes_n() {
            return Err(Failure::Usage(format!("check {check} takes --eta")));
        }
        if n == 0 {
            return Err(Failure::Usage("--n must be at least 1".into()));
        }
        run(run_n(check, n, cli.budget)?);
    } else if let Some(max) = a.all_eta_up_to {
        if check.takes_n() {
            for n in 1..=max {
                if !run(run_n(check, n, cli.budget)?) {
                    break;
                }
            }
        } else {
            for eta in compositions_up_to(max) {
                if !run(run_eta(check, &eta, cli.budget)?) {
                    break;
                }
            }
        }
    }
    let passed = outcomes.iter().all(CheckOutcome::passed);
    let cases: u64 = outcomes.iter().map(|o| o.cases).sum();
    let failures = outcomes.iter().filter(|o| !o.passed()).count();
    let out = match cli.format {
        Format::Text => {
            let mut s = String::new();
            for o in &outcomes {
                s.push_str(&o.to_string());
                s.push('\n');
            }
            s.push_str(&format!(
                "{check}: {} ({} subject{}, {cases} cases, {failures} counterexample{})\n",
                if passed { "pass" } else { "FAIL" },
                outcomes.len(),
                if outcomes.len() == 1 { "" } else { "s" },
                if failures == 1 { "" } else { "s" },
            ));
            s
        }
        Format::Json => {
            let results: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "subject": o.subject,
                        "passed": o.passed(),
                        "cases": o.cases,
                        "note": o.note,
                        "counterexample": o.counterexample,
                    })
                })
                .collect();
            let v = json!({
                "check": check.name(),
                "passed": passed,
                "subjects": outcomes.len(),
                "cases": cases,
                "results": results,
            });
            format!("{v}\n")
        }
    };
    Ok((out, passed))
}

fn zeta(a: &ZetaArgs, cli: &Cli) -> CmdResult {
    let eta = parse_eta(&a.eta)?;
    let w = RationalW::genus(&eta, cli.budget)?;
    let mut r = Report::new();
    if let (Some(q), Some(t)) = (&a.q, &a.t) {
        let (q, t) = (parse_rational(q)?, parse_rational(t)?);
        r.text("W", format_rational(&w.eval(&q, &t)?));
    }
    if let Some(k) = a.series_terms {
        let series = if a.hadamard {
            hadamard_series(&eta, k)
        } else {
            w.y_series(k)
        };
        match cli.format {
            Format::Text => {
                for i in 0..k {
                    r.text(&format!("y^{i}"), series.y_coefficient(i));
                }
            }
            Format::Json => {
                r.poly("series", &series);
            }
        }
    }
    if cli.format == Format::Text && a.series_terms.is_none() {
        // a lone value prints bare
        let text = r.render(Format::Text);
        return Ok((text.strip_prefix("W: ").unwrap_or(&text).to_string(), true));
    }
    Ok((r.render(cli.format), true))
}

fn bounds_for(
    n: usize,
    max_a: Option<u32>,
    max_b: Option<u32>,
    max_d: Option<usize>,
) -> ScanBounds {
    let d = ScanBounds::default_for(n);
    ScanBounds {
        max_a: max_a.unwrap_or(d.max_a),
        max_b: max_b.unwrap_or(d.max_b),
        max_d: max_d.unwrap_or(d.max_d),
    }
}

fn conjecture(a: &ConjectureArgs, cli: &Cli) -> CmdResult {
    let eta = match (&a.eta, &a.rect) {
        (Some(e), _) => parse_eta(e)?,
        (_, Some(rm)) => {
            let dims: Vec<usize> = rm
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|_| Failure::Usage(format!("--rect expects r,m; got {rm:?}")))?;
            match dims[..] {
                [r, m] => Composition::rectangle(r, m)?,
                _ => return Err(Failure::Usage(format!("--rect expects r,m; got {rm:?}"))),
            }
        }
        _ => unreachable!("clap requires one of --eta, --rect"),
    };
    let bounds = bounds_for(eta.n(), a.max_a, a.max_b, a.max_d);
    let rep = conjecture_report(&eta, bounds, cli.budget)?;
    let mut r = Report::new();
    r.text("composition", &rep.composition);
    match rep.rectangle {
        Some((rr, m)) => r.push(
            "rectangle",
            format!("r={rr}, m={m}"),
            json!({ "r": rr, "m": m }),
        ),
        None => r.push("rectangle", "no", Value::Null),
    };
    r.flag("qualifies", rep.qualifies);
    match &rep.candidate {
        Some(c) => r.poly("candidate", c),
        None => r.push("candidate", "none (n odd)", Value::Null),
    };
    r.flag("divisible", rep.divisible)
        .poly("numerator", &rep.numerator)
        .poly("residual", &rep.residual)
        .push(
            "bounds",
            format!(
                "max_a={}, max_b={}, max_d={}",
                bounds.max_a, bounds.max_b, bounds.max_d
            ),
            json!({ "max_a": bounds.max_a, "max_b": bounds.max_b, "max_d": bounds.max_d }),
        );
    push_factors(&mut r, "residual_unitary_factors", &rep.residual_factors);
    let verdict = match rep.verdict {
        Verdict::Consistent => "CONSISTENT",
        Verdict::MissingFactor => "COUNTEREXAMPLE (qualifying rectangle without the factor)",
        Verdict::UnexpectedFactor => "COUNTEREXAMPLE (factor on a non-qualifying composition)",
        Verdict::UnitaryResidual => "COUNTEREXAMPLE (unitary factor in the residual)",
    };
    r.text("verdict", verdict);
    Ok((r.render(cli.format), rep.is_consistent()))
}

fn push_factors(r: &mut Report, key: &str, found: &[mzeta_core::unitary::UnitaryFactor]) {
    if found.is_empty() {
        r.push(key, "none found within bounds", json!([]));
        return;
    }
    let text: Vec<String> = found.iter().map(|u| u.to_string()).collect();
    let v: Vec<Value> = found
        .iter()
        .map(|u| json!({ "d": u.d, "a": u.a, "b": u.b, "factor": u.factor.to_json_value() }))
        .collect();
    r.push(key, text.join("; "), Value::Array(v));
}

fn scan(a: &ScanArgs, format: Format) -> CmdResult {
    let raw = fs::read_to_string(&a.poly)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", a.poly.display())))?;
    let f = BiPoly::from_json(&raw)?;
    if f.is_zero() {
        return Err(Failure::Usage(
            "the zero polynomial has no factorisation".into(),
        ));
    }
    let deg = f
        .degree_x()
        .unwrap_or(0)
        .max(f.degree_y().unwrap_or(0))
        .max(1) as usize;
    let bounds = bounds_for(deg, a.max_a, a.max_b, a.max_d);
    let found = unitary_factor_scan(&f, bounds);
    let mut r = Report::new();
    r.poly("polynomial", &f).push(
        "bounds",
        format!(
            "max_a={}, max_b={}, max_d={}",
            bounds.max_a, bounds.max_b, bounds.max_d
        ),
        json!({ "max_a": bounds.max_a, "max_b": bounds.max_b, "max_d": bounds.max_d }),
    );
    push_factors(&mut r, "unitary_factors", &found);
    Ok((r.render(format), true))
}
