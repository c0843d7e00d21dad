//! End-to-end acceptance checks. Prints one `PASS`/`FAIL` line per criterion
//! and exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use gl2_tensor::verify::{
    highest_multiplicity, induction_vs_oracle, orthogonality, pantoja_vs_formula,
    ps_cuspidal_criterion, self_duality, set_counts, tensor_vs_oracle, uniqueness_sweep,
    CheckReport,
};
use gl2_tensor::{
    enumerate_irreps, tensor_decompose, unique_decomp_witness, CharTable, Execution, Family,
    FieldParams, IrrepLabel, DEFAULT_SEED,
};

const EXEC: Execution = Execution::Parallel;

/// Whole-suite runtime budget for the tensor sweep.
const TENSOR_BUDGET_SECS: u64 = 300;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_reports(reports: &[CheckReport]) -> Self {
        let checks: u64 = reports.iter().map(|r| r.checked).sum();
        let failed: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed()).collect();
        let detail = match failed.first() {
            None => format!("{checks} checks"),
            Some(r) => format!(
                "{r}; first failure: {}",
                r.failures.first().map(String::as_str).unwrap_or("?")
            ),
        };
        Self {
            passed: failed.is_empty(),
            detail,
        }
    }
}

fn field(q: u64) -> FieldParams {
    FieldParams::from_q(q).expect("odd prime power")
}

struct Tables(BTreeMap<u64, CharTable>);

impl Tables {
    fn get(&mut self, q: u64) -> &CharTable {
        self.0
            .entry(q)
            .or_insert_with(|| CharTable::new(field(q), DEFAULT_SEED))
    }

    fn extractions(&self) -> (u64, u64) {
        self.0.values().fold((0, 0), |(e, d), t| {
            (
                e + t.evaluator().extractions(),
                d + t.evaluator().disagreements(),
            )
        })
    }
}

fn tensor_master(tables: &mut Tables) -> Outcome {
    let start = Instant::now();
    let reports: Vec<_> = [3, 5, 7, 9, 11]
        .into_iter()
        .map(|q| tensor_vs_oracle(tables.get(q), EXEC))
        .collect();
    let secs = start.elapsed().as_secs_f64();
    let mut out = Outcome::from_reports(&reports);
    let pairs: Vec<u64> = reports.iter().map(|r| r.checked).collect();
    let expected = [36, 300, 1176, 3240, 7260];
    if pairs != expected {
        out.passed = false;
        out.detail = format!("pair counts {pairs:?}, expected {expected:?}");
    }
    if secs > TENSOR_BUDGET_SECS as f64 {
        out.passed = false;
    }
    out.detail = format!("{}, {secs:.1}s", out.detail);
    out
}

fn induction(tables: &mut Tables) -> Outcome {
    let reports: Vec<_> = [3, 5, 7, 9]
        .into_iter()
        .map(|q| induction_vs_oracle(tables.get(q), EXEC))
        .collect();
    Outcome::from_reports(&reports)
}

fn pantoja() -> Outcome {
    let reports: Vec<_> = [3, 5, 7]
        .into_iter()
        .map(|q| pantoja_vs_formula(&field(q), EXEC))
        .collect();
    Outcome::from_reports(&reports)
}

fn orthogonality_all(tables: &mut Tables) -> Outcome {
    let reports: Vec<_> = [3, 5, 7, 9]
        .into_iter()
        .map(|q| orthogonality(tables.get(q), EXEC))
        .collect();
    Outcome::from_reports(&reports)
}

fn multiplicity() -> Outcome {
    let reports: Vec<_> = [3, 5, 7, 9]
        .into_iter()
        .map(|q| highest_multiplicity(&field(q), EXEC))
        .collect();
    Outcome::from_reports(&reports)
}

fn self_dual(tables: &mut Tables) -> Outcome {
    let reports: Vec<_> = [3, 5, 7, 9]
        .into_iter()
        .map(|q| self_duality(tables.get(q), EXEC))
        .collect();
    let mut out = Outcome::from_reports(&reports);
    let q3 = gl2_tensor::self_dual_classify(&field(3)).len();
    if q3 != 6 {
        out.passed = false;
        out.detail = format!("q=3 self-dual count {q3}, expected 6");
    }
    out
}

fn ps_cuspidal() -> Outcome {
    let reports: Vec<_> = [5, 7]
        .into_iter()
        .map(|q| ps_cuspidal_criterion(&field(q), EXEC))
        .collect();
    Outcome::from_reports(&reports)
}

fn uniqueness() -> Outcome {
    let reports: Vec<_> = [3, 5]
        .into_iter()
        .map(|q| uniqueness_sweep(&field(q), EXEC))
        .collect();
    Outcome::from_reports(&reports)
}

fn counts() -> Outcome {
    let reports: Vec<_> = [3, 5, 7, 9, 11, 13]
        .into_iter()
        .map(|q| set_counts(&field(q)))
        .collect();
    Outcome::from_reports(&reports)
}

fn smallest_field() -> Outcome {
    let p = field(3);
    let irreps = enumerate_irreps(&p);
    let of = |f: Family| -> Vec<IrrepLabel> {
        irreps.iter().copied().filter(|r| r.family() == f).collect()
    };
    let (cusps, ps) = (of(Family::Cuspidal), of(Family::PrincipalSeries));
    let mut problems = Vec::new();
    if cusps.len() != 3 || ps.len() != 1 {
        problems.push(format!(
            "{} cuspidal, {} principal series",
            cusps.len(),
            ps.len()
        ));
    }
    for &v in &ps {
        let IrrepLabel::PrincipalSeries(a, b) = v else {
            unreachable!()
        };
        for &c in &cusps {
            let IrrepLabel::Cuspidal(l) = c else {
                unreachable!()
            };
            match unique_decomp_witness(a, b, l) {
                Ok(None) => {}
                other => problems.push(format!("{v} ⊗ {c}: witness {other:?}")),
            }
        }
    }
    // every collision among these products is a twist
    let among: Vec<IrrepLabel> = ps.iter().chain(&cusps).copied().collect();
    let mut seen: Vec<((IrrepLabel, IrrepLabel), _)> = Vec::new();
    for (i, &x) in among.iter().enumerate() {
        for &y in &among[i..] {
            let d = tensor_decompose(&x, &y).expect("valid labels");
            for (pair, other) in &seen {
                if *other == d && !gl2_tensor::analysis::twist_related(*pair, (x, y)) {
                    problems.push(format!("{pair:?} and {:?} collide", (x, y)));
                }
            }
            seen.push(((x, y), d));
        }
    }
    Outcome {
        passed: problems.is_empty(),
        detail: problems
            .first()
            .cloned()
            .unwrap_or_else(|| format!("{} products, no witness", seen.len())),
    }
}

fn main() -> ExitCode {
    let mut tables = Tables(BTreeMap::new());
    let mut results: Vec<(&str, Outcome)> = vec![
        (
            "1 tensor products equal the oracle, q=3..11",
            tensor_master(&mut tables),
        ),
        (
            "2 induced representations equal reciprocity, q=3..9",
            induction(&mut tables),
        ),
        (
            "3 induced-representation route equals closed forms, q=3..7",
            pantoja(),
        ),
        (
            "4 character table orthogonality, q=3..9",
            orthogonality_all(&mut tables),
        ),
        ("5 highest multiplicity is two, q=3..9", multiplicity()),
        ("6 self-duality three ways, q=3..9", self_dual(&mut tables)),
        (
            "7 principal series ⊗ cuspidal criterion and witnesses, q=5,7",
            ps_cuspidal(),
        ),
        ("8 unique decomposition sweep, q=3,5", uniqueness()),
        ("9 S, W, V set sizes, q=3..13", counts()),
        (
            "10 q=3 has no unique-decomposition counterexample",
            smallest_field(),
        ),
    ];
    let (extractions, disagreements) = tables.extractions();
    results.push((
        "11 dual-prime extraction agrees everywhere",
        Outcome {
            passed: disagreements == 0 && extractions >= 100_000,
            detail: format!("{extractions} extractions, {disagreements} disagreements"),
        },
    ));

    let mut failed = 0;
    for (name, o) in &results {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        println!("{tag} criterion {name}: {}", o.detail);
        failed += usize::from(!o.passed);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
