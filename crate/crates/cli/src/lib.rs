//! Command-line front end for `affgebra`.
//!
//! [`run`] takes the full argument vector and returns the exit code with the
//! captured output, so the binary is a thin wrapper and tests need no
//! subprocesses.
//!
//! Exit codes: 0 success or pass, 1 domain failure (non-member input, axiom
//! counterexample, map not preserved), 2 usage or parse error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;

use affgebra::affine::default_scalars;
use affgebra::lie::{self, check_anti_axiom, check_bi_affine, check_jacobi_axiom, check_reduced_lie};
use affgebra::sna::{self, FreeEntryPattern};
use affgebra::{
    affine, AffineLine, AxiomReport, Eisenstein, Error, Generator, LineMap, Matrix, Rational, ScalarText, SnaBracket,
    SnaSpec,
};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "affgebra", version, about = "Exact computations in SNA(n) and other Lie affgebras")]
pub struct Cli {
    /// Matrices are (n+1)x(n+1).
    #[arg(long = "n", global = true, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,

    /// Scalar field: rationals (q) or Q(w), w a primitive cube root of unity (qw).
    #[arg(long, global = true, value_enum, default_value_t = FieldChoice::Q)]
    pub field: FieldChoice,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Number of random samples for `axioms`.
    #[arg(long, global = true, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,

    /// Bound on numerators and denominators of random entries.
    #[arg(long, global = true, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub bound: u32,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldChoice {
    Q,
    Qw,
}

/// Matrix arguments accept the text grammar (`a,b;c,d`), a JSON array of
/// rows, a generator name such as `A00_1`, or `@path` to read either grammar
/// from a file, where newlines may separate rows.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Test membership in SNA(n).
    Member {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Complete the n^2-1 free entries, comma-separated, to a member of SNA(n).
    Complete {
        #[arg(allow_hyphen_values = true)]
        pattern: String,
    },
    /// The bracket ab - ba + b, with barycentric coefficients when n = 2.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Brackets of the four SNA(2) generators.
    Table,
    /// The bracket reduced at basepoint o, and its image in sl(n+1)_0.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        o: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Verify the Chevalley triple in V(SNA(2)) at o = A01_0 over Q(w).
    Chevalley,
    /// Run the heap, action, bracket and reduction suites on random members.
    Axioms,
    /// Whether the line map with f(a) = lambda, f(b) = mu intertwines the zeta1 and zeta2 brackets.
    LineIso {
        #[arg(allow_hyphen_values = true)]
        zeta1: String,
        #[arg(allow_hyphen_values = true)]
        zeta2: String,
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Reply {
    ok: bool,
    text: String,
    json: Value,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotMember { .. } | Error::NotAffine(_) | Error::NotIdempotent(_) | Error::Internal(_) => {
                Failure::Domain(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<affgebra::MatrixError> for Failure {
    fn from(e: affgebra::MatrixError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<affgebra::FieldError> for Failure {
    fn from(e: affgebra::FieldError) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: 0, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let result = match cli.field {
        FieldChoice::Q => dispatch::<Rational>(&cli),
        FieldChoice::Qw => dispatch::<Eisenstein>(&cli),
    };
    match result {
        Ok(reply) => {
            let stdout = if cli.json { pretty(&reply.json) } else { reply.text };
            Outcome { code: if reply.ok { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(Failure::Domain(msg)) if cli.json => {
            Outcome { code: 1, stdout: pretty(&json!({ "error": msg })), stderr: String::new() }
        }
        Err(Failure::Domain(msg)) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn dispatch<F: ScalarText>(cli: &Cli) -> Result<Reply, Failure> {
    let n = usize::try_from(cli.n).map_err(|_| Failure::Usage(format!("n = {} is too large", cli.n)))?;
    let spec = SnaSpec::new(n)?;
    match &cli.command {
        Command::Member { matrix } => member::<F>(&spec, &read_matrix(matrix)?),
        Command::Complete { pattern } => complete::<F>(&spec, pattern),
        Command::Bracket { a, b } => bracket::<F>(&spec, &read_matrix(a)?, &read_matrix(b)?),
        Command::Table => table::<F>(&spec),
        Command::Reduce { o, a, b } => reduce::<F>(&spec, &read_matrix(o)?, &read_matrix(a)?, &read_matrix(b)?),
        Command::Chevalley => chevalley(),
        Command::Axioms => axioms::<F>(&spec, cli),
        Command::LineIso { zeta1, zeta2, lambda, mu } => {
            line_iso::<F>(&zeta1.parse()?, &zeta2.parse()?, &lambda.parse()?, &mu.parse()?)
        }
    }
}

fn read_matrix<F: ScalarText>(arg: &str) -> Result<Matrix<F>, Failure> {
    if let Ok(g) = arg.parse::<Generator>() {
        return Ok(g.matrix());
    }
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?,
        None => arg.to_string(),
    };
    if text.trim_start().starts_with('[') {
        return Ok(Matrix::parse_any(&text)?);
    }
    let rows: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    Ok(rows.join(";").parse()?)
}

fn matrix_json<F: ScalarText>(m: &Matrix<F>) -> Value {
    json!({ "text": m.to_string(), "rows": m.to_json() })
}

// ---------------------------------------------------------------------------

fn member<F: ScalarText>(spec: &SnaSpec, m: &Matrix<F>) -> Result<Reply, Failure> {
    Ok(match sna::violation(m, spec) {
        None => Reply {
            ok: true,
            text: "member\n".into(),
            json: json!({ "n": spec.n(), "verdict": "member", "violation": null }),
        },
        Some(v) => Reply {
            ok: false,
            text: format!("non-member: {v}\n"),
            json: json!({ "n": spec.n(), "verdict": "non-member", "violation": v.to_string() }),
        },
    })
}

fn complete<F: ScalarText>(spec: &SnaSpec, pattern: &str) -> Result<Reply, Failure> {
    let p = FreeEntryPattern::<F>::parse(spec, pattern)?;
    let m = sna::complete(&p, spec)?;
    Ok(Reply {
        ok: true,
        text: format!("{m}\n"),
        json: json!({ "n": spec.n(), "pattern": p.to_text(), "matrix": matrix_json(&m) }),
    })
}

fn bracket<F: ScalarText>(spec: &SnaSpec, a: &Matrix<F>, b: &Matrix<F>) -> Result<Reply, Failure> {
    let value = lie::sna_bracket(spec, a, b)?;
    let mut text = format!("{value}\n");
    let mut out = json!({ "n": spec.n(), "bracket": matrix_json(&value) });
    if spec.n() == 2 {
        let combo = sna::barycentric_coords(&value)?;
        writeln!(text, "coefficients: {}", combo.tuple_text()).unwrap();
        writeln!(text, "combination: {}", combo.expression()).unwrap();
        out["coefficients"] = combo.to_json();
        out["combination"] = combo.expression().into();
    }
    Ok(Reply { ok: true, text, json: out })
}

fn table<F: ScalarText>(spec: &SnaSpec) -> Result<Reply, Failure> {
    if spec.n() != 2 {
        return Err(Error::UnsupportedDimension { op: "table", supported: 2, n: spec.n() }.into());
    }
    let entries = sna::canonical_table::<F>()?;
    let text = entries.iter().map(|e| format!("{e}\n")).collect();
    let json = entries
        .iter()
        .map(|e| {
            json!({
                "left": e.left.name(),
                "right": e.right.name(),
                "coefficients": e.combo.to_json(),
                "combination": e.combo.expression(),
            })
        })
        .collect();
    Ok(Reply { ok: true, text, json: Value::Array(json) })
}

fn reduce<F: ScalarText>(spec: &SnaSpec, o: &Matrix<F>, a: &Matrix<F>, b: &Matrix<F>) -> Result<Reply, Failure> {
    let point = lie::reduce_bracket(spec, &SnaBracket, o, a, b)?;
    let vector = sna::reduction_iso(spec, o, &point)?;
    Ok(Reply {
        ok: true,
        text: format!("{point}\nin sl0: {vector}\n"),
        json: json!({ "n": spec.n(), "reduced": matrix_json(&point), "sl0": matrix_json(&vector) }),
    })
}

fn chevalley() -> Result<Reply, Failure> {
    let t = sna::ChevalleyTriple::construct()?;
    let relations = t.relations()?;
    let ok = relations.iter().all(|r| r.holds);
    let mut text = String::new();
    for (name, m) in [("o", &t.o), ("e", &t.e), ("f", &t.f), ("h", &t.h)] {
        writeln!(text, "{name}: {m}").unwrap();
    }
    for r in &relations {
        writeln!(text, "{}: {}", r.name, if r.holds { "holds" } else { "FAILS" }).unwrap();
    }
    let json = json!({
        "o": matrix_json(&t.o),
        "e": matrix_json(&t.e),
        "f": matrix_json(&t.f),
        "h": matrix_json(&t.h),
        "relations": serde_json::to_value(&relations).expect("relations serialize"),
    });
    Ok(Reply { ok, text, json })
}

fn axioms<F: ScalarText>(spec: &SnaSpec, cli: &Cli) -> Result<Reply, Failure> {
    let count = usize::try_from(cli.samples).map_err(|_| Failure::Usage("too many samples".into()))?;
    let samples = sna::random_elements::<F>(spec, cli.seed, count, cli.bound);
    let mut scalars = default_scalars::<F>();
    // ω, when the field has it
    if let Ok(w) = "w".parse::<F>() {
        scalars.push(w);
    }
    let o = &samples[0];
    let reports: Vec<AxiomReport> = vec![
        affine::check_heap_axioms(spec, &samples),
        affine::check_action_axioms(spec, &samples, &scalars),
        check_anti_axiom(spec, &SnaBracket, &samples),
        check_jacobi_axiom(spec, &SnaBracket, &samples),
        check_bi_affine(spec, &SnaBracket, &samples, &scalars),
        check_reduced_lie(spec, &SnaBracket, o, &samples, &scalars),
    ];
    let ok = reports.iter().all(AxiomReport::passed);
    let field = match cli.field {
        FieldChoice::Q => "Q",
        FieldChoice::Qw => "Q(w)",
    };
    let mut text =
        format!("seed: {}\nsamples: {count} from SNA({}) over {field}, bound {}\n", cli.seed, spec.n(), cli.bound);
    for r in &reports {
        writeln!(text, "{r}").unwrap();
    }
    if let Some(ce) = reports.iter().find_map(|r| r.counterexample.as_ref()) {
        writeln!(text, "counterexample:\n{}", pretty(&serde_json::to_value(ce).expect("serializes")).trim_end())
            .unwrap();
    }
    let json = json!({
        "seed": cli.seed,
        "samples": count,
        "n": spec.n(),
        "field": field,
        "bound": cli.bound,
        "passed": ok,
        "suites": reports.iter().map(AxiomReport::to_json).collect::<Vec<_>>(),
    });
    Ok(Reply { ok, text, json })
}

fn line_iso<F: ScalarText>(zeta1: &F, zeta2: &F, lambda: &F, mu: &F) -> Result<Reply, Failure> {
    let preserved = lie::line_iso_obstruction(zeta1, zeta2, lambda, mu);
    let line = AffineLine::new(Generator::A00_0.matrix::<F>(), Generator::A01_0.matrix())?;
    let map = LineMap { lambda: lambda.clone(), mu: mu.clone() };
    if map.preserves_on_generators(&line, zeta1, zeta2)? != preserved {
        return Err(Failure::Domain("coordinate and point computations disagree".into()));
    }
    let defect = (zeta1.clone() - zeta2.clone()) * (mu.clone() - lambda.clone());
    let verdict = if preserved { "preserved" } else { "not preserved" };
    let onto = map.is_onto();
    Ok(Reply {
        ok: preserved,
        text: format!("{verdict}\n(zeta1-zeta2)(mu-lambda) = {defect}\nonto: {}\n", if onto { "yes" } else { "no" }),
        json: json!({
            "zeta1": zeta1.to_string(),
            "zeta2": zeta2.to_string(),
            "lambda": lambda.to_string(),
            "mu": mu.to_string(),
            "defect": defect.to_string(),
            "onto": onto,
            "preserved": preserved,
        }),
    })
}
