//! Command-line front end.
//!
//! Every verb produces an [`Outcome`]: a JSON object carrying a `schema`
//! field, a plain-text rendering, and whether the answer was a refutation.
//! Exit codes are 0 on success, 2 when the computed answer is negative
//! (a matrix outside the group, a non-normalizing matrix, a counterexample
//! found) and 1 on errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ideals::{factor, index_in_g5, Ideal};
use crate::matrix::GMatrix;
use crate::normalizer::{
    is_g5_elementary, normalizer_of, normalizes, normalizes_sampled, quotient_table,
    strongly_elementary, supergroup_chain, DEFAULT_ELEMENTARY_BOUND,
};
use crate::reduction::{g5_decompose, reduced_factor_with, TieBreak};
use crate::ring::RingElt;
use crate::selftest;
use crate::subgroups::{coset_table_bounded, g0_contains, principal_contains, DEFAULT_COSET_BOUND};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(
    name = "hecke-g5",
    version,
    about = "Exact computation in the Hecke group G5 and its congruence subgroups"
)]
pub struct Cli {
    /// Emit one JSON object per result
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for sampled checks
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Search or enumeration bound
    #[arg(long, global = true)]
    pub bound: Option<u64>,
    /// Read one command per line from a file
    #[arg(long)]
    pub batch: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Factor an element of Z[L] into primes
    Factor {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Reduced factor and reduced form of num/den
    Reduce {
        #[arg(allow_hyphen_values = true)]
        num: String,
        #[arg(allow_hyphen_values = true)]
        den: String,
        #[arg(long, hide = true)]
        lower_closed: bool,
    },
    /// Index of G0(tau) in G5
    Index {
        #[arg(allow_hyphen_values = true)]
        tau: String,
    },
    /// Right cosets of G0(tau) in G5 and the action of S and T
    Cosets {
        #[arg(allow_hyphen_values = true)]
        tau: String,
    },
    /// Membership of the matrix [[a, b], [c, d]] in G5, G0(tau) or G(tau)
    Member {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
        /// Test membership in G0(tau)
        #[arg(long, allow_hyphen_values = true)]
        level: Option<String>,
        /// With --level, test the principal congruence subgroup instead
        #[arg(long, requires = "level")]
        principal: bool,
    },
    /// Normalizer of G0(tau)
    Normalizer {
        #[arg(allow_hyphen_values = true)]
        tau: String,
        /// Also decide whether this matrix normalizes G0(tau)
        #[arg(long, allow_hyphen_values = true, num_args = 4, value_names = ["A", "B", "C", "D"])]
        matrix: Option<Vec<String>>,
        /// Number of sampled conjugations for the theorem-free check
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// Derivation of the normalizer bound step by step
    Explain {
        #[arg(allow_hyphen_values = true)]
        tau: String,
    },
    /// Search for reduced forms x/(r y) with x^2 != 1 mod r
    Elementary {
        #[arg(allow_hyphen_values = true)]
        r: String,
        /// Check every divisor of r
        #[arg(long)]
        strong: bool,
    },
    /// The quotient G0(tau/h)/G0(tau) as an explicit group
    Quotient {
        #[arg(allow_hyphen_values = true)]
        tau: String,
    },
    /// Reproduce the reference tables
    Selftest {
        /// Run only items whose id starts with one of these (comma separated)
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, hide = true)]
        inject_tie_fault: bool,
    },
}

impl Command {
    /// Arguments that parse back to this command.
    pub fn to_args(&self) -> Vec<String> {
        let s = |x: &str| x.to_string();
        match self {
            Command::Factor { element } => vec![s("factor"), element.clone()],
            Command::Reduce {
                num,
                den,
                lower_closed,
            } => {
                let mut v = vec![s("reduce"), num.clone(), den.clone()];
                if *lower_closed {
                    v.push(s("--lower-closed"));
                }
                v
            }
            Command::Index { tau } => vec![s("index"), tau.clone()],
            Command::Cosets { tau } => vec![s("cosets"), tau.clone()],
            Command::Member {
                a,
                b,
                c,
                d,
                level,
                principal,
            } => {
                let mut v = vec![s("member"), a.clone(), b.clone(), c.clone(), d.clone()];
                if let Some(l) = level {
                    v.push(format!("--level={l}"));
                }
                if *principal {
                    v.push(s("--principal"));
                }
                v
            }
            Command::Normalizer {
                tau,
                matrix,
                samples,
            } => {
                let mut v = vec![s("normalizer"), tau.clone()];
                if let Some(m) = matrix {
                    v.push(s("--matrix"));
                    v.extend(m.iter().cloned());
                }
                v.push(format!("--samples={samples}"));
                v
            }
            Command::Explain { tau } => vec![s("explain"), tau.clone()],
            Command::Elementary { r, strong } => {
                let mut v = vec![s("elementary"), r.clone()];
                if *strong {
                    v.push(s("--strong"));
                }
                v
            }
            Command::Quotient { tau } => vec![s("quotient"), tau.clone()],
            Command::Selftest {
                only,
                inject_tie_fault,
            } => {
                let mut v = vec![s("selftest")];
                if !only.is_empty() {
                    v.push(format!("--only={}", only.join(",")));
                }
                if *inject_tie_fault {
                    v.push(s("--inject-tie-fault"));
                }
                v
            }
        }
    }
}

/// Flags shared by every command of an invocation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Settings {
    pub seed: u64,
    pub bound: Option<u64>,
}

/// The result of one command.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: Value,
    pub text: String,
    /// The command computed a negative answer.
    pub refuted: bool,
    /// The command ran but reports failed checks.
    pub failed: bool,
}

impl Outcome {
    fn new(verb: &str, mut json: Value, text: String) -> Outcome {
        if let Value::Object(map) = &mut json {
            map.insert("schema".into(), Value::String(schema(verb)));
        }
        Outcome {
            json,
            text,
            refuted: false,
            failed: false,
        }
    }

    fn refuted_if(mut self, cond: bool) -> Outcome {
        self.refuted = cond;
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            EXIT_ERROR
        } else if self.refuted {
            EXIT_REFUTED
        } else {
            EXIT_OK
        }
    }
}

fn schema(verb: &str) -> String {
    format!("hecke-g5/{verb}/1")
}

pub fn error_json(e: &Error) -> Value {
    json!({
        "schema": schema("error"),
        "error": e.code(),
        "message": e.to_string(),
    })
}

pub fn parse_element(s: &str) -> Result<RingElt> {
    s.parse()
}

pub fn parse_matrix(entries: &[String]) -> Result<GMatrix> {
    if entries.len() != 4 {
        return Err(Error::BadRange(format!(
            "a matrix needs 4 entries, got {}",
            entries.len()
        )));
    }
    let e: Vec<RingElt> = entries
        .iter()
        .map(|x| parse_element(x))
        .collect::<Result<_>>()?;
    let [a, b, c, d]: [RingElt; 4] = e.try_into().expect("four entries");
    GMatrix::new(a, b, c, d)
}

fn elt_str(x: &RingElt) -> String {
    x.to_string()
}

fn paren(x: &RingElt) -> String {
    let s = x.to_string();
    if s.contains(['+', '*']) || s[1..].contains('-') {
        format!("({s})")
    } else {
        s
    }
}

/// `k·λᵉ` written as `k*L^e`.
fn lambda_multiple(k: &RingElt, e: i64) -> String {
    match e {
        0 => k.to_string(),
        _ => format!("{}*L^{e}", paren(k)),
    }
}

pub fn execute(cmd: &Command, settings: &Settings) -> Result<Outcome> {
    match cmd {
        Command::Factor { element } => {
            let x = parse_element(element)?;
            let f = factor(&x)?;
            let mut parts = vec![];
            if f.unit.exponent != 0 || f.unit.sign < 0 || f.factors.is_empty() {
                let sign = if f.unit.sign < 0 { "-" } else { "" };
                parts.push(match f.unit.exponent {
                    0 => format!("{sign}1"),
                    1 => format!("{sign}L"),
                    k => format!("{sign}L^{k}"),
                });
            }
            for (p, m) in &f.factors {
                let g = paren(&p.generator);
                parts.push(if *m == 1 { g } else { format!("{g}^{m}") });
            }
            let mut text = format!("{x} = {}", parts.join(" * "));
            for (p, m) in &f.factors {
                text.push_str(&format!(
                    "\n  {}  norm {}  over {}  {:?}  multiplicity {m}",
                    p.generator, p.absolute_norm, p.residue_characteristic, p.splitting
                ));
            }
            Ok(Outcome::new(
                "factor",
                json!({ "input": elt_str(&x), "factorization": f }),
                text,
            ))
        }
        Command::Reduce {
            num,
            den,
            lower_closed,
        } => {
            let a = parse_element(num)?;
            let b = parse_element(den)?;
            let tie = if *lower_closed {
                TieBreak::LowerClosed
            } else {
                TieBreak::UpperClosed
            };
            let r = reduced_factor_with(&a, &b, tie)?;
            let factored = [lambda_multiple(&a, r.e), lambda_multiple(&b, r.e)];
            let witness = r.completed_witness();
            let word = r.completed_word();
            let text = format!(
                "e = {}\nreduced: ({}) / ({})\nfactored: {} / {}\nwitness: {}\nword: {}",
                r.e, r.reduced_num, r.reduced_den, factored[0], factored[1], witness, word
            );
            Ok(Outcome::new(
                "reduce",
                json!({
                    "e": r.e,
                    "reduced": [elt_str(&r.reduced_num), elt_str(&r.reduced_den)],
                    "factored": factored,
                    "witness": witness,
                    "word": word,
                }),
                text,
            ))
        }
        Command::Index { tau } => {
            let t = parse_element(tau)?;
            let idx = index_in_g5(&t)?;
            Ok(Outcome::new(
                "index",
                json!({ "modulus": Ideal::new(&t)?, "index": idx.to_string() }),
                idx.to_string(),
            ))
        }
        Command::Cosets { tau } => {
            let t = parse_element(tau)?;
            let table = coset_table_bounded(&t, settings.bound.unwrap_or(DEFAULT_COSET_BOUND))?;
            let mut text = format!("modulus: {}\nsize: {}", table.modulus(), table.size());
            for (i, (c, d)) in table.points().iter().enumerate() {
                text.push_str(&format!(
                    "\n{i}: ({c} : {d})  S -> {}  T -> {}  rep {}",
                    table.action_s()[i],
                    table.action_t()[i],
                    if table.reps()[i].is_empty() {
                        "I".to_string()
                    } else {
                        table.reps()[i].to_string()
                    }
                ));
            }
            Ok(Outcome::new(
                "cosets",
                serde_json::to_value(&table).expect("serializable"),
                text,
            ))
        }
        Command::Member {
            a,
            b,
            c,
            d,
            level,
            principal,
        } => {
            let m = parse_matrix(&[a.clone(), b.clone(), c.clone(), d.clone()])?;
            let word = g5_decompose(&m)?;
            let mut value = json!({
                "matrix": m,
                "in_g5": word.is_some(),
                "word": word.as_ref().map(|w| w.to_string()),
            });
            let mut text = format!(
                "{m} in G5: {}",
                match &word {
                    Some(w) => format!(
                        "yes, word {}",
                        if w.is_empty() {
                            "I".into()
                        } else {
                            w.to_string()
                        }
                    ),
                    None => "no".into(),
                }
            );
            let mut member = word.is_some();
            if let Some(level) = level {
                let t = parse_element(level)?;
                let (name, inside) = if *principal {
                    ("G", principal_contains(&m, &t)?)
                } else {
                    ("G0", g0_contains(&m, &t)?)
                };
                value["level"] = json!(Ideal::new(&t)?);
                value["subgroup"] = json!(name);
                value["member"] = json!(inside);
                text.push_str(&format!(
                    "\nin {name}({t}): {}",
                    if inside { "yes" } else { "no" }
                ));
                member = inside;
            } else {
                value["member"] = json!(member);
            }
            Ok(Outcome::new("member", value, text).refuted_if(!member))
        }
        Command::Normalizer {
            tau,
            matrix,
            samples,
        } => {
            let t = parse_element(tau)?;
            let n = normalizer_of(&t)?;
            let mut value = json!({
                "modulus": n.modulus,
                "h": n.h,
                "quotient": n.quotient,
            });
            let mut text = format!(
                "N(G0({})) = G0({})\nh = {}\nquotient: {:?}",
                Ideal::new(&t)?.generator(),
                n.modulus.generator(),
                n.h,
                n.quotient
            );
            let mut refuted = false;
            if let Some(entries) = matrix {
                let m = parse_matrix(entries)?;
                let decided = normalizes(&m, &t)?;
                value["normalizes"] = json!(decided);
                text.push_str(&format!(
                    "\n{m} normalizes: {}",
                    if decided { "yes" } else { "no" }
                ));
                refuted = !decided;
                if *samples > 0 {
                    let sampled = normalizes_sampled(&m, &t, *samples, settings.seed)?;
                    value["sampled"] =
                        json!({ "count": samples, "seed": settings.seed, "refuted": !sampled });
                    text.push_str(&format!(
                        "\nsampled check ({samples} conjugations): {}",
                        if sampled { "no refutation" } else { "refuted" }
                    ));
                    refuted |= !sampled;
                }
            }
            Ok(Outcome::new("normalizer", value, text).refuted_if(refuted))
        }
        Command::Explain { tau } => {
            let t = parse_element(tau)?;
            let c = supergroup_chain(&t)?;
            let mut text = format!(
                "tau = {}\nhalf-power bound: G0({})",
                c.input.generator(),
                c.half_power_bound.generator()
            );
            for step in &c.steps {
                text.push_str(&format!(
                    "\nstrip {}: nu = {}",
                    paren(&step.stripped),
                    step.remainder.generator()
                ));
                for w in &step.witnesses {
                    text.push_str(&format!(
                        "\n  u = {}: gcd(nu/[nu], u^2 - 1) = {}, bound G0({})",
                        w.numerator,
                        w.gcd,
                        w.bound.generator()
                    ));
                }
                text.push_str(&format!(
                    "\n  combined bound G0({})",
                    step.bound.generator()
                ));
            }
            text.push_str(&format!(
                "\nfinal: G0({}) ({} tau/h)",
                c.final_bound.generator(),
                if c.agrees { "equals" } else { "DIFFERS FROM" }
            ));
            let failed = !c.agrees;
            let mut out = Outcome::new(
                "explain",
                serde_json::to_value(&c).expect("serializable"),
                text,
            );
            out.failed = failed;
            Ok(out)
        }
        Command::Elementary { r, strong } => {
            let r = parse_element(r)?;
            let bound = settings.bound.unwrap_or(DEFAULT_ELEMENTARY_BOUND);
            if *strong {
                let s = strongly_elementary(&r, bound)?;
                let mut text = format!(
                    "r = {}: strongly elementary {}",
                    s.r,
                    if s.holds { "holds" } else { "fails" }
                );
                text.push_str(&format!(
                    "\ndivisors: {}",
                    s.divisors
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                ));
                if let Some(f) = &s.failing {
                    text.push_str(&format!("\n{}", verdict_text(f)));
                }
                let holds = s.holds;
                let value = json!({
                    "r": elt_str(&s.r),
                    "holds": s.holds,
                    "divisors": s.divisors.iter().map(elt_str).collect::<Vec<_>>(),
                    "failing": s.failing,
                });
                Ok(Outcome::new("elementary", value, text).refuted_if(!holds))
            } else {
                let v = is_g5_elementary(&r, bound)?;
                let text = verdict_text(&v);
                let refuted = !v.is_elementary();
                Ok(Outcome::new(
                    "elementary",
                    serde_json::to_value(&v).expect("serializable"),
                    text,
                )
                .refuted_if(refuted))
            }
        }
        Command::Quotient { tau } => {
            let t = parse_element(tau)?;
            let q = quotient_table(&t)?;
            let profile: serde_json::Map<String, Value> = q
                .order_profile
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect();
            let text = format!(
                "G0({})/G0({}): order {}, exponent {}, {}\norder profile: {}\nclassification: {:?}",
                q.normalizer.modulus.generator(),
                q.modulus.generator(),
                q.order(),
                q.exponent(),
                if q.abelian { "abelian" } else { "non-abelian" },
                q.order_profile
                    .iter()
                    .map(|(k, v)| format!("{v} of order {k}"))
                    .collect::<Vec<_>>()
                    .join(", "),
                q.classification
            );
            let value = json!({
                "modulus": q.modulus,
                "normalizer": q.normalizer.modulus,
                "order": q.order(),
                "exponent": q.exponent(),
                "abelian": q.abelian,
                "order_profile": profile,
                "classification": q.classification,
                "elements": q.elements,
                "table": q.table,
            });
            Ok(Outcome::new("quotient", value, text))
        }
        Command::Selftest {
            only,
            inject_tie_fault,
        } => {
            let opts = selftest::Options {
                faulty_tie: *inject_tie_fault,
            };
            let results = selftest::run(only, &opts);
            if results.is_empty() {
                return Err(Error::BadRange(format!(
                    "no selftest item matches {only:?}"
                )));
            }
            let passed = results.iter().all(|r| r.passed);
            let mut text = String::new();
            for r in &results {
                text.push_str(&format!(
                    "{} {}\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.id
                ));
                for d in &r.details {
                    text.push_str(&format!("    {d}\n"));
                }
            }
            text.push_str(&format!(
                "{} of {} items passed",
                results.iter().filter(|r| r.passed).count(),
                results.len()
            ));
            let mut out = Outcome::new(
                "selftest",
                json!({ "passed": passed, "items": results }),
                text,
            );
            out.failed = !passed;
            Ok(out)
        }
    }
}

fn verdict_text(v: &crate::normalizer::ElementaryVerdict) -> String {
    match &v.witness {
        Some((x, y)) => format!(
            "r = {}: counterexample x = {}, y = {} (x/(r*y) reduced, x^2 != 1 mod r) [{:?}]",
            v.r, x, y, v.evidence
        ),
        None => format!(
            "r = {}: no counterexample up to {} [{:?}]",
            v.r, v.bound, v.evidence
        ),
    }
}

fn render(outcome: &Result<Outcome>, json_mode: bool, one_line: bool) -> (String, bool) {
    match outcome {
        Ok(o) if json_mode => (o.json.to_string(), false),
        Ok(o) if one_line => (
            o.text.lines().map(str::trim).collect::<Vec<_>>().join("; "),
            false,
        ),
        Ok(o) => (o.text.clone(), false),
        Err(e) if json_mode => (error_json(e).to_string(), true),
        Err(e) => (format!("error[{}]: {e}", e.code()), true),
    }
}

fn exit_code(outcome: &Result<Outcome>) -> i32 {
    match outcome {
        Ok(o) => o.exit_code(),
        Err(_) => EXIT_ERROR,
    }
}

fn run_batch(cli: &Cli, path: &PathBuf, out: &mut dyn Write) -> std::io::Result<i32> {
    let content = std::fs::read_to_string(path)?;
    let mut code = EXIT_OK;
    for line in content.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let args = std::iter::once("hecke-g5").chain(line.split_whitespace());
        let (outcome, json_mode) = match Cli::try_parse_from(args) {
            Ok(inner) => {
                let settings = Settings {
                    seed: inner.seed.or(cli.seed).unwrap_or(0),
                    bound: inner.bound.or(cli.bound),
                };
                let json_mode = cli.json || inner.json;
                match inner.command {
                    Some(cmd) if inner.batch.is_none() => (execute(&cmd, &settings), json_mode),
                    _ => (
                        Err(Error::BadRange(format!("not a command: {line}"))),
                        json_mode,
                    ),
                }
            }
            Err(e) => (
                Err(Error::Syntax {
                    pos: 0,
                    msg: e
                        .to_string()
                        .lines()
                        .next()
                        .unwrap_or_default()
                        .trim_start_matches("error: ")
                        .to_string(),
                }),
                cli.json,
            ),
        };
        let (s, _) = render(&outcome, json_mode, true);
        writeln!(out, "{s}")?;
        code = code.max(match exit_code(&outcome) {
            EXIT_ERROR => 3,
            c => c,
        });
    }
    Ok(if code == 3 { EXIT_ERROR } else { code })
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    if let Some(path) = &cli.batch {
        if cli.command.is_some() {
            let _ = writeln!(err, "error: --batch cannot be combined with a command");
            return EXIT_ERROR;
        }
        return match run_batch(&cli, path, out) {
            Ok(code) => code,
            Err(e) => {
                let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
                EXIT_ERROR
            }
        };
    }
    let Some(cmd) = &cli.command else {
        let _ = writeln!(err, "error: no command given (try --help)");
        return EXIT_ERROR;
    };
    let settings = Settings {
        seed: cli.seed.unwrap_or(0),
        bound: cli.bound,
    };
    let outcome = execute(cmd, &settings);
    let (s, is_err) = render(&outcome, cli.json, false);
    let _ = if is_err && !cli.json {
        writeln!(err, "{s}")
    } else {
        writeln!(out, "{s}")
    };
    exit_code(&outcome)
}
