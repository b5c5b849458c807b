use std::fmt::Write as _;
use std::path::Path;

use axes_ideals::axes::{ordinary_violation, symbolic_violation};
use axes_ideals::format::{parse_ideal, parse_monomial, survey_csv, survey_json, write_ideal};
use axes_ideals::ideal::first_non_member;
use axes_ideals::oracle::bruteforce_witness;
use axes_ideals::{
    check_engine_agreement, check_primary_decomposition, check_symbolic_lemma, greedy_certificate,
    i2n_generators, intersect_all, member, minimal_primes, power, prime_power_member, survey,
    symbolic_power, verify_certificate, AxesIdealSpec, CheckOutcome, Error, ExponentVector,
    FactorizationCertificate, MonomialIdeal, PrimeSupport, ResourceLimits,
};
use serde_json::json;

use crate::args::{Command, Engine, GlobalOpts, Mode, OutputFormat, Suite};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_GUARD: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

/// Exit code plus the text written to stdout (or `--out`).
#[derive(Debug)]
pub struct CommandResult {
    pub exit_code: u8,
    pub payload: String,
}

impl CommandResult {
    fn verdict(yes: bool, payload: String) -> Self {
        Self {
            exit_code: if yes { EXIT_YES } else { EXIT_NO },
            payload,
        }
    }

    fn ok(payload: String) -> Self {
        Self::verdict(true, payload)
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Core(Error::ResourceLimit(_)) => EXIT_GUARD,
            CliError::Core(Error::Internal(_)) => EXIT_INTERNAL,
            CliError::Core(_) => EXIT_USAGE,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Core(Error::NotSquarefree) => write!(
                f,
                "usage error: symbolic powers and minimal primes require a squarefree ideal \
                 (every generator exponent at most 1)"
            ),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

pub fn limits(g: &GlobalOpts) -> ResourceLimits {
    let d = ResourceLimits::default();
    ResourceLimits {
        max_n: g.max_n.unwrap_or(d.max_n),
        max_m: g.max_m.unwrap_or(d.max_m),
        max_degree: g.max_degree.unwrap_or(d.max_degree),
    }
}

fn load_ideal(path: &Path) -> CliResult<MonomialIdeal> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_ideal(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// The ideal chosen by `--axes` or a single `--ideal`.
fn selected_ideal(g: &GlobalOpts) -> CliResult<(MonomialIdeal, Option<AxesIdealSpec>)> {
    match (g.axes, g.ideal.as_slice()) {
        (Some(n), []) => {
            let spec = AxesIdealSpec::new(n)?;
            Ok((spec.ideal(), Some(spec)))
        }
        (None, [path]) => Ok((load_ideal(path)?, None)),
        (Some(_), [_, ..]) => usage("give either --axes or --ideal, not both"),
        (None, []) => usage("an ideal is required: pass --axes <n> or --ideal <file>"),
        (None, _) => usage("this command takes a single --ideal"),
    }
}

fn monomial(text: &str, n: usize) -> CliResult<ExponentVector> {
    parse_monomial(text, Some(n)).map_err(|e| CliError::Usage(format!("monomial `{text}`: {e}")))
}

/// Parses `3`, `1,2,5`, `1..4` (inclusive) or mixtures like `1,3..5`.
pub fn parse_list(text: &str) -> CliResult<Vec<u64>> {
    let bad = || CliError::Usage(format!("cannot parse list `{text}`"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim) {
        if let Some((lo, hi)) = part.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse::<u64>().map_err(|_| bad())?);
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

fn render_ideal(ideal: &MonomialIdeal, format: Option<OutputFormat>) -> String {
    match format {
        Some(OutputFormat::Json) => {
            let gens: Vec<&[u64]> = ideal
                .generators()
                .iter()
                .map(ExponentVector::as_slice)
                .collect();
            format!("{}\n", json!({ "n": ideal.n(), "generators": gens }))
        }
        _ => write_ideal(ideal),
    }
}

pub fn run(command: &Command, g: &GlobalOpts) -> CliResult<CommandResult> {
    match command {
        Command::Member { m, mode, monomial } => cmd_member(g, *m, *mode, monomial),
        Command::Certify { m, monomial } => cmd_certify(g, *m, monomial),
        Command::Verify {
            certificate,
            monomial,
        } => cmd_verify(certificate, monomial),
        Command::Power { m } => {
            let (ideal, _) = selected_ideal(g)?;
            limits(g).check(ideal.n(), *m, 0)?;
            Ok(CommandResult::ok(render_ideal(
                &power(&ideal, *m)?,
                g.format,
            )))
        }
        Command::Symbolic { k } => {
            let (ideal, _) = selected_ideal(g)?;
            if *k == 0 {
                return usage("-k must be at least 1");
            }
            limits(g).check(ideal.n(), *k, 0)?;
            Ok(CommandResult::ok(render_ideal(
                &symbolic_power(&ideal, *k)?,
                g.format,
            )))
        }
        Command::Intersect { files } => cmd_intersect(g, files),
        Command::Contains {
            power,
            symbolic,
            outer,
            inner,
        } => cmd_contains(g, *power, *symbolic, outer.as_deref(), inner.as_deref()),
        Command::Primes => cmd_primes(g),
        Command::Survey { n, m } => cmd_survey(g, n, m),
        Command::Check { suite, n, m } => cmd_check(g, *suite, n, m),
    }
}

fn cmd_member(g: &GlobalOpts, m: u64, mode: Mode, text: &str) -> CliResult<CommandResult> {
    let (ideal, axes) = selected_ideal(g)?;
    let a = monomial(text, ideal.n())?;
    if g.engine != Engine::Fast {
        limits(g).check(ideal.n(), m, 0)?;
    }

    let (is_member, explanation) = match (g.engine, mode) {
        (Engine::Fast, _) if axes.is_none() => {
            return usage(
                "--engine fast only applies to the axes ideal; use --axes or another engine",
            )
        }
        (Engine::Fast, Mode::Ordinary) => match ordinary_violation(&a, m)? {
            Some(v) => (false, format!("violated: {v}")),
            None if g.explain => {
                let cert = greedy_certificate(&a, m)?;
                (true, format!("witness pairs: {}", pairs_text(&cert)))
            }
            None => (true, String::new()),
        },
        (Engine::Fast, Mode::Symbolic) => match symbolic_violation(&a, m)? {
            Some(v) => (false, format!("violated: {v}")),
            None => (true, "all codim-inequalities hold".to_string()),
        },
        (Engine::Core, Mode::Ordinary) => {
            let yes = member(&a, &power(&ideal, m)?)?;
            (yes, ordinary_witness_text(&a, &ideal, m, yes)?)
        }
        (Engine::Oracle, Mode::Ordinary) => match bruteforce_witness(&a, &ideal, m)? {
            Some(w) => (true, format!("witness generators: {}", join(&w))),
            None => (false, format!("no product of {m} generators divides {a}")),
        },
        (Engine::Core, Mode::Symbolic) => {
            let yes = member(&a, &symbolic_power(&ideal, m)?)?;
            (yes, prime_text(m, first_missing_prime(&a, &ideal, m)?))
        }
        (Engine::Oracle, Mode::Symbolic) => {
            let missing = first_missing_prime(&a, &ideal, m)?;
            (missing.is_none(), prime_text(m, missing))
        }
    };

    let payload = match g.format {
        Some(OutputFormat::Json) => format!(
            "{}\n",
            json!({
                "monomial": a.as_slice(),
                "m": m,
                "mode": format!("{mode:?}").to_lowercase(),
                "engine": format!("{:?}", g.engine).to_lowercase(),
                "member": is_member,
                "explanation": if g.explain { Some(explanation) } else { None },
            })
        ),
        _ => {
            let mut s = String::from(if is_member {
                "member\n"
            } else {
                "not a member\n"
            });
            if g.explain {
                let _ = writeln!(s, "{explanation}");
            }
            s
        }
    };
    Ok(CommandResult::verdict(is_member, payload))
}

fn ordinary_witness_text(
    a: &ExponentVector,
    ideal: &MonomialIdeal,
    m: u64,
    yes: bool,
) -> CliResult<String> {
    if !yes {
        return Ok(format!("no generator of the {m}-th power divides {a}"));
    }
    Ok(match bruteforce_witness(a, ideal, m)? {
        Some(w) => format!("witness generators: {}", join(&w)),
        None => {
            return Err(Error::Internal(format!("{a} is in I^{m} but has no factorization")).into())
        }
    })
}

/// The first minimal prime `P` with `x^a ∉ P^m`, if any.
fn first_missing_prime(
    a: &ExponentVector,
    ideal: &MonomialIdeal,
    m: u64,
) -> CliResult<Option<PrimeSupport>> {
    for p in minimal_primes(ideal)? {
        if !prime_power_member(a, &p, m)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

fn prime_text(m: u64, missing: Option<PrimeSupport>) -> String {
    match missing {
        Some(p) => format!("not in P^{m} for minimal prime P = {p}"),
        None => format!("in P^{m} for every minimal prime P"),
    }
}

fn join(v: &[ExponentVector]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn pairs_text(cert: &FactorizationCertificate) -> String {
    cert.pairs
        .iter()
        .map(|(i, j)| format!("({i},{j})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_certify(g: &GlobalOpts, m: u64, text: &str) -> CliResult<CommandResult> {
    let Some(n) = g.axes else {
        return usage("certify works on the axes ideal; pass --axes <n>");
    };
    AxesIdealSpec::new(n)?;
    let a = monomial(text, n)?;
    if let Some(v) = ordinary_violation(&a, m)? {
        return Ok(CommandResult::verdict(
            false,
            format!("not a member: {v} fails for m={m}\n"),
        ));
    }
    let cert = greedy_certificate(&a, m)?;
    let json = serde_json::to_string(&cert).map_err(|e| Error::Internal(e.to_string()))?;
    Ok(CommandResult::ok(format!("{json}\n")))
}

fn cmd_verify(path: &Path, text: &str) -> CliResult<CommandResult> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let cert: FactorizationCertificate = serde_json::from_str(&raw)
        .map_err(|e| CliError::Usage(format!("{}: not a certificate: {e}", path.display())))?;
    let a = monomial(text, cert.n)?;
    match verify_certificate(&cert, &a) {
        Ok(true) => Ok(CommandResult::ok("valid\n".into())),
        Ok(false) => Ok(CommandResult::verdict(
            false,
            format!(
                "invalid: the {} pairs do not form a product of {} generators dividing {a}\n",
                cert.pairs.len(),
                cert.m
            ),
        )),
        Err(e @ Error::MalformedCertificate(_)) => usage(e.to_string()),
        Err(e) => Err(e.into()),
    }
}

fn cmd_intersect(g: &GlobalOpts, files: &[std::path::PathBuf]) -> CliResult<CommandResult> {
    let mut ideals = Vec::new();
    if let Some(n) = g.axes {
        ideals.push(i2n_generators(n)?);
    }
    for path in g.ideal.iter().chain(files) {
        ideals.push(load_ideal(path)?);
    }
    let Some(first) = ideals.first() else {
        return usage("intersect needs at least one ideal (--axes, --ideal, or file arguments)");
    };
    let n = first.n();
    let result = intersect_all(n, &ideals)?;
    Ok(CommandResult::ok(render_ideal(&result, g.format)))
}

fn cmd_contains(
    g: &GlobalOpts,
    power_m: Option<u64>,
    symbolic_d: Option<u64>,
    outer: Option<&Path>,
    inner: Option<&Path>,
) -> CliResult<CommandResult> {
    let lim = limits(g);
    let base = if power_m.is_some() || symbolic_d.is_some() || outer.is_none() || inner.is_none() {
        Some(selected_ideal(g)?.0)
    } else {
        None
    };
    let outer_ideal = match (outer, power_m) {
        (Some(p), _) => load_ideal(p)?,
        (None, m) => {
            let base = base.as_ref().expect("selected above");
            let m = m.unwrap_or(1);
            lim.check(base.n(), m, 0)?;
            power(base, m)?
        }
    };
    let inner_ideal = match (inner, symbolic_d) {
        (Some(p), _) => load_ideal(p)?,
        (None, Some(d)) => {
            let base = base.as_ref().expect("selected above");
            if d == 0 {
                return usage("--symbolic must be at least 1");
            }
            lim.check(base.n(), d, 0)?;
            symbolic_power(base, d)?
        }
        (None, None) => base.clone().expect("selected above"),
    };
    let missing = first_non_member(&outer_ideal, &inner_ideal)?;
    let mut payload = String::from(if missing.is_none() {
        "contained\n"
    } else {
        "not contained\n"
    });
    if g.explain {
        if let Some(w) = missing {
            let _ = writeln!(
                payload,
                "witness: {w} lies in the inner ideal but not the outer"
            );
        }
    }
    Ok(CommandResult::verdict(missing.is_none(), payload))
}

fn cmd_primes(g: &GlobalOpts) -> CliResult<CommandResult> {
    let (ideal, _) = selected_ideal(g)?;
    let primes = minimal_primes(&ideal)?;
    let payload = match g.format {
        Some(OutputFormat::Json) => {
            let v: Vec<&[usize]> = primes.iter().map(|p| p.variables()).collect();
            format!("{}\n", json!(v))
        }
        _ => primes.iter().map(|p| format!("{p}\n")).collect(),
    };
    Ok(CommandResult::ok(payload))
}

fn cmd_survey(g: &GlobalOpts, n: &str, m: &str) -> CliResult<CommandResult> {
    let ns: Vec<usize> = parse_list(n)?
        .into_iter()
        .map(|v| usize::try_from(v).map_err(|_| CliError::Usage(format!("n={v} too large"))))
        .collect::<CliResult<_>>()?;
    let ms: Vec<u64> = parse_list(m)?;
    let lim = limits(g);
    let rows = survey_pool()?.install(|| survey(&ns, &ms, &lim))?;
    let payload = match g.format {
        Some(OutputFormat::Json) => survey_json(&rows)?,
        _ => survey_csv(&rows)?,
    };
    Ok(CommandResult::ok(payload))
}

fn survey_pool() -> CliResult<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("AXES_IDEALS_THREADS") {
        let threads: usize = v.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
            CliError::Usage(format!(
                "AXES_IDEALS_THREADS must be a positive integer, got `{v}`"
            ))
        })?;
        builder = builder.num_threads(threads);
    }
    builder
        .build()
        .map_err(|e| CliError::Core(Error::Internal(format!("thread pool: {e}"))))
}

fn cmd_check(g: &GlobalOpts, suite: Suite, n: &str, m: &str) -> CliResult<CommandResult> {
    let ns: Vec<u64> = parse_list(n)?;
    let ms: Vec<u64> = parse_list(m)?;
    let lim = limits(g);

    type CheckFn = fn(usize, u64, &ResourceLimits) -> axes_ideals::Result<CheckOutcome>;
    let suites: Vec<(&str, CheckFn, u64)> = [
        ("decomposition", check_primary_decomposition as CheckFn, 0),
        ("symbolic", check_symbolic_lemma as CheckFn, 2),
        ("engines", check_engine_agreement as CheckFn, 3),
    ]
    .into_iter()
    .filter(|(name, _, _)| match suite {
        Suite::All => true,
        Suite::Decomposition => *name == "decomposition",
        Suite::Symbolic => *name == "symbolic",
        Suite::Engines => *name == "engines",
    })
    .collect();

    // Refuse before doing any work if a cell is out of bounds.
    for &n in &ns {
        if n < 3 {
            return usage(format!("check needs n >= 3, got {n}"));
        }
        for &m in &ms {
            if m < 1 {
                return usage("check needs m >= 1");
            }
            for &(_, _, extra) in &suites {
                lim.check(n as usize, m, 2 * m + extra)?;
            }
        }
    }

    let mut table = String::from("suite          n  m  result\n");
    let mut all_pass = true;
    for &(name, check, _) in &suites {
        for &n in &ns {
            for &m in &ms {
                let outcome = check(n as usize, m, &lim)?;
                let status = match &outcome {
                    CheckOutcome::Pass => "pass".to_string(),
                    CheckOutcome::Disagreement { vector, detail } => {
                        format!("FAIL at {vector}: {detail}")
                    }
                    CheckOutcome::DegreeBoundExceeded { generator, bound } => {
                        format!("FAIL generator {generator} has degree above {bound}")
                    }
                };
                all_pass &= outcome.passed();
                let _ = writeln!(table, "{name:<14} {n:<2} {m:<2} {status}");
            }
        }
    }
    Ok(CommandResult::verdict(all_pass, table))
}

#[cfg(test)]
mod tests {
    use super::parse_list;

    #[test]
    fn list_syntax() {
        assert_eq!(parse_list("3").unwrap(), vec![3]);
        assert_eq!(parse_list("1,2").unwrap(), vec![1, 2]);
        assert_eq!(parse_list("1..3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_list("1..=3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_list("1, 4..5").unwrap(), vec![1, 4, 5]);
        for bad in ["", "a", "3..1", "1..", "-1"] {
            assert!(parse_list(bad).is_err(), "{bad}");
        }
    }
}
