use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gl2_tensor::verify::{highest_multiplicity, induction_vs_oracle, tensor_vs_oracle};
use gl2_tensor::{CharTable, Execution, FieldParams, DEFAULT_SEED};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn tensor_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("tensor_vs_oracle");
    group.sample_size(10);
    for q in [5u64, 7, 9] {
        let table = CharTable::new(FieldParams::from_q(q).unwrap(), DEFAULT_SEED);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, q), &table, |b, t| {
                b.iter(|| assert!(tensor_vs_oracle(t, exec).passed()))
            });
        }
    }
    group.finish();
}

fn induction(c: &mut Criterion) {
    let mut group = c.benchmark_group("induction_vs_oracle");
    group.sample_size(10);
    for q in [7u64, 9] {
        let table = CharTable::new(FieldParams::from_q(q).unwrap(), DEFAULT_SEED);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, q), &table, |b, t| {
                b.iter(|| assert!(induction_vs_oracle(t, exec).passed()))
            });
        }
    }
    group.finish();
}

fn closed_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("highest_multiplicity");
    for q in [9u64, 11] {
        let p = FieldParams::from_q(q).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, q), &p, |b, p| {
                b.iter(|| assert!(highest_multiplicity(p, exec).passed()))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, tensor_oracle, induction, closed_forms);
criterion_main!(benches);
