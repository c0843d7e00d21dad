use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gl2_tensor::{
    enumerate_irreps, ind_t1_decompose, ind_tm1_decompose, ind_zu_decompose,
    oracle_tensor_decompose, pantoja_tensor, parse_label, run_suite, self_dual_classify,
    tensor_decompose, CharTable, CycloValue, Decomposition, Error, Execution, FieldParams,
    IrrepLabel, MultChar, Suite, TorusChar, DEFAULT_SEED,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "gl2tensor",
    version,
    about = "Tensor products and induced representations of GL2(F_q), q odd"
)]
struct Cli {
    /// Seed for choosing the roots of unity used in exact extraction.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every irreducible with its dimension and central character.
    Irreps {
        #[arg(long)]
        q: u64,
    },
    /// Decompose the tensor product of two irreducibles.
    Tensor {
        #[arg(long)]
        q: u64,
        label1: String,
        label2: String,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decompose a representation induced from a torus or from ZU.
    Induce {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum)]
        from: Subgroup,
        /// `a,b` for t1, `k` for tm1, `rho` for zu.
        #[arg(long = "char", allow_hyphen_values = true)]
        character: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the character table.
    Table {
        #[arg(long)]
        q: u64,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// List the self-dual irreducibles.
    Selfdual {
        #[arg(long)]
        q: u64,
    },
    /// Run exhaustive property sweeps.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
        /// Run on the calling thread only.
        #[arg(long)]
        sequential: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Formula,
    Pantoja,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Subgroup {
    T1,
    Tm1,
    Zu,
}

enum Failure {
    Validation(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPrime(_)
            | Error::EvenCharacteristic(_)
            | Error::BadExponent(_)
            | Error::NotPrimePower(_)
            | Error::FieldTooLarge(_)
            | Error::ParamMismatch { .. }
            | Error::DegeneratePrincipalSeries(_)
            | Error::DecomposableCuspidalLabel(_)
            | Error::LabelParse(_)
            | Error::DegenerateInput(_) => Failure::Validation(e.to_string()),
            _ => Failure::Verification(format!("internal inconsistency: {e}\n")),
        }
    }
}

type Outcome = Result<String, Failure>;

fn field(q: u64) -> Result<FieldParams, Failure> {
    FieldParams::from_q(q).map_err(|e| match e {
        Error::FieldTooLarge(_) => Failure::Validation(e.to_string()),
        _ => Failure::Validation(format!("q must be an odd prime power (got {q})")),
    })
}

/// Parses a label, noting on stderr when it was rewritten to canonical form.
fn label(params: &FieldParams, text: &str) -> Result<IrrepLabel, Failure> {
    let parsed = parse_label(params, text)?;
    let canonical = parsed.to_string();
    if canonical != text.trim() {
        eprintln!("note: {} canonicalized to {canonical}", text.trim());
    }
    Ok(parsed)
}

#[derive(Serialize)]
struct Constituent {
    label: String,
    dim: u64,
    mult: i64,
}

fn constituents(d: &Decomposition) -> Vec<Constituent> {
    d.iter()
        .map(|(l, &m)| Constituent {
            label: l.to_string(),
            dim: l.dimension(),
            mult: m,
        })
        .collect()
}

fn text_table(d: &Decomposition) -> String {
    let mut out = String::new();
    for c in constituents(d) {
        writeln!(out, "  {:<14} dim {:<6} mult {}", c.label, c.dim, c.mult).unwrap();
    }
    writeln!(out, "total dimension {}", d.total_dimension()).unwrap();
    out
}

#[derive(Serialize)]
struct TensorJson {
    q: u32,
    inputs: [String; 2],
    constituents: Vec<Constituent>,
    total_dim: i64,
    multiplicity_free: bool,
}

fn tensor(q: u64, seed: u64, l1: &str, l2: &str, method: Method, format: Format) -> Outcome {
    let params = field(q)?;
    let (r1, r2) = (label(&params, l1)?, label(&params, l2)?);
    let d = match method {
        Method::Formula => tensor_decompose(&r1, &r2)?,
        Method::Pantoja => pantoja_tensor(&r1, &r2)?,
        Method::Oracle => oracle_tensor_decompose(&CharTable::new(params, seed), &r1, &r2)?,
    };
    Ok(match format {
        Format::Json => json(&TensorJson {
            q: params.q(),
            inputs: [r1.to_string(), r2.to_string()],
            constituents: constituents(&d),
            total_dim: d.total_dimension(),
            multiplicity_free: d.is_multiplicity_free(),
        }),
        Format::Text => {
            let free = if d.is_multiplicity_free() {
                "multiplicity free"
            } else {
                "not multiplicity free"
            };
            format!("{r1} ⊗ {r2} = {d}\n{}{free}\n", text_table(&d))
        }
    })
}

#[derive(Serialize)]
struct InduceJson {
    q: u32,
    from: &'static str,
    character: String,
    constituents: Vec<Constituent>,
    total_dim: i64,
}

fn parse_ints(text: &str, want: usize) -> Result<Vec<i64>, Failure> {
    let parts: Result<Vec<i64>, _> = text.split(',').map(|s| s.trim().parse()).collect();
    match parts {
        Ok(v) if v.len() == want => Ok(v),
        _ => Err(Failure::Validation(format!(
            "expected {want} comma-separated integer(s), got `{text}`"
        ))),
    }
}

fn induce(q: u64, from: Subgroup, spec: &str, format: Format) -> Outcome {
    let params = field(q)?;
    let (name, character, d) = match from {
        Subgroup::T1 => {
            let v = parse_ints(spec, 2)?;
            let (a, b) = (MultChar::new(&params, v[0]), MultChar::new(&params, v[1]));
            (
                "t1",
                format!("{},{}", a.exponent(), b.exponent()),
                ind_t1_decompose(a, b)?,
            )
        }
        Subgroup::Tm1 => {
            let l = TorusChar::new(&params, parse_ints(spec, 1)?[0]);
            ("tm1", l.exponent().to_string(), ind_tm1_decompose(l))
        }
        Subgroup::Zu => {
            let rho = MultChar::new(&params, parse_ints(spec, 1)?[0]);
            ("zu", rho.exponent().to_string(), ind_zu_decompose(rho))
        }
    };
    Ok(match format {
        Format::Json => json(&InduceJson {
            q: params.q(),
            from: name,
            character,
            constituents: constituents(&d),
            total_dim: d.total_dimension(),
        }),
        Format::Text => format!("Ind[{name}]({character}) = {d}\n{}", text_table(&d)),
    })
}

fn irreps(q: u64) -> Outcome {
    let params = field(q)?;
    let mut out = String::new();
    writeln!(out, "{:<14} {:>6}  central", "label", "dim").unwrap();
    for r in enumerate_irreps(&params) {
        writeln!(
            out,
            "{:<14} {:>6}  {}",
            r.to_string(),
            r.dimension(),
            r.central_character().exponent()
        )
        .unwrap();
    }
    Ok(out)
}

fn cyclo_text(v: &CycloValue) -> String {
    let terms: Vec<String> = v.terms().map(|(e, c)| format!("({e}, {c})")).collect();
    format!("[{}]", terms.join(", "))
}

#[derive(Serialize)]
struct ClassJson {
    label: String,
    size: u64,
}

#[derive(Serialize)]
struct RowJson {
    label: String,
    values: Vec<Vec<(u32, i64)>>,
}

#[derive(Serialize)]
struct TableJson {
    q: u32,
    modulus: u32,
    classes: Vec<ClassJson>,
    rows: Vec<RowJson>,
}

fn table(q: u64, seed: u64, format: TableFormat) -> Outcome {
    let params = field(q)?;
    let t = CharTable::new(params, seed);
    let ncls = t.classes().len();
    Ok(match format {
        TableFormat::Json => json(&TableJson {
            q: params.q(),
            modulus: params.m2(),
            classes: t
                .classes()
                .iter()
                .map(|c| ClassJson {
                    label: c.label.to_string(),
                    size: c.size,
                })
                .collect(),
            rows: t
                .irreps()
                .iter()
                .enumerate()
                .map(|(i, r)| RowJson {
                    label: r.to_string(),
                    values: (0..ncls).map(|c| t.value(i, c).terms().collect()).collect(),
                })
                .collect(),
        }),
        TableFormat::Csv => {
            let mut out = String::from("irrep");
            for c in t.classes() {
                write!(out, ",\"{}\"", c.label).unwrap();
            }
            out.push('\n');
            for (i, r) in t.irreps().iter().enumerate() {
                write!(out, "\"{r}\"").unwrap();
                for c in 0..ncls {
                    write!(out, ",\"{}\"", cyclo_text(t.value(i, c))).unwrap();
                }
                out.push('\n');
            }
            out
        }
    })
}

fn selfdual(q: u64) -> Outcome {
    let params = field(q)?;
    let mut out = String::new();
    for r in self_dual_classify(&params) {
        writeln!(out, "{r}").unwrap();
    }
    Ok(out)
}

fn verify(q: u64, seed: u64, suite: &str, sequential: bool) -> Outcome {
    let params = field(q)?;
    let suite: Suite = suite.parse().map_err(Failure::Validation)?;
    let exec = if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let t = CharTable::new(params, seed);
    let reports = run_suite(&t, suite, exec);
    let mut out = String::new();
    for r in &reports {
        writeln!(out, "{r}").unwrap();
        for f in r.failures.iter().take(5) {
            writeln!(out, "    {f}").unwrap();
        }
    }
    let ev = t.evaluator();
    writeln!(
        out,
        "exact extractions: {} ({} disagreements)",
        ev.extractions(),
        ev.disagreements()
    )
    .unwrap();
    if reports.iter().all(|r| r.passed()) && ev.disagreements() == 0 {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let seed = cli.seed;
    let outcome = match cli.command {
        Command::Irreps { q } => irreps(q),
        Command::Tensor {
            q,
            label1,
            label2,
            method,
            format,
        } => tensor(q, seed, &label1, &label2, method, format),
        Command::Induce {
            q,
            from,
            character,
            format,
        } => induce(q, from, &character, format),
        Command::Table { q, format } => table(q, seed, format),
        Command::Selfdual { q } => selfdual(q),
        Command::Verify {
            q,
            suite,
            sequential,
        } => verify(q, seed, &suite, sequential),
    };
    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            print!("{msg}");
            eprintln!("error: verification failed");
            ExitCode::from(3)
        }
    }
}
