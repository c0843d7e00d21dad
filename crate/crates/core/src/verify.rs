//! Exhaustive property sweeps at a fixed `q`.
//!
//! Each check returns a [`CheckReport`] listing every failure instead of
//! stopping at the first one. The CLI `verify` command and the acceptance tests
//! both run these.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::analysis::{
    cuspidal_collision_violations, ps_cusp_products_agree, self_dual_classify, twist_related,
    unique_decomp_witness, v_set_separation_violations, verify_unique_decomposition_with,
};
use crate::chars::{MultChar, TorusChar};
use crate::chartable::CharTable;
use crate::formulas::{
    ind_t1_decompose, ind_tm1_decompose, ind_zu_decompose, pantoja_tensor, tensor_decompose,
};
use crate::irrep::{build_s, build_v, build_w, enumerate_irreps, Family, IrrepLabel};
use crate::oracle::{
    oracle_induced_decompose, oracle_tensor_decompose, tensor_multiplicity, InducingData,
};
use crate::par::{unordered_pairs, Execution};
use crate::params::FieldParams;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub q: u32,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: &'static str, q: u32) -> Self {
        Self {
            name,
            q,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn expect(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "q={} {}: {} ({} checks, {} failures)",
            self.q,
            self.name,
            status,
            self.checked,
            self.failures.len()
        )
    }
}

fn label_pairs(params: &FieldParams) -> Vec<(IrrepLabel, IrrepLabel)> {
    unordered_pairs(&enumerate_irreps(params))
}

/// Closed forms against character inner products, every unordered pair.
pub fn tensor_vs_oracle(table: &CharTable, exec: Execution) -> CheckReport {
    let pairs = label_pairs(table.params());
    let outcomes = exec.map(&pairs, |(r1, r2)| {
        let formula = tensor_decompose(r1, r2);
        let oracle = oracle_tensor_decompose(table, r1, r2);
        match (formula, oracle) {
            (Ok(f), Ok(o)) if f == o => None,
            (Ok(f), Ok(o)) => Some(format!("{r1} ⊗ {r2}: formula {f}, oracle {o}")),
            (f, o) => Some(format!("{r1} ⊗ {r2}: {f:?} / {o:?}")),
        }
    });
    let mut rep = CheckReport::new("tensor products match the oracle", table.params().q());
    for o in outcomes {
        rep.expect(o.is_none(), || o.unwrap_or_default());
    }
    rep
}

/// Decompositions assembled from induced representations against the closed forms.
pub fn pantoja_vs_formula(params: &FieldParams, exec: Execution) -> CheckReport {
    let pairs = label_pairs(params);
    let outcomes = exec.map(&pairs, |(r1, r2)| {
        match (pantoja_tensor(r1, r2), tensor_decompose(r1, r2)) {
            (Ok(p), Ok(f)) if p == f => None,
            (p, f) => Some(format!("{r1} ⊗ {r2}: induced route {p:?}, formula {f:?}")),
        }
    });
    let mut rep = CheckReport::new("induced-representation route matches", params.q());
    for o in outcomes {
        rep.expect(o.is_none(), || o.unwrap_or_default());
    }
    rep
}

/// Highest multiplicity is exactly 2, reached only by `st ⊗ ps` and `ps ⊗ ps`
/// on constituents of dimension `q` or `q + 1`.
pub fn highest_multiplicity(params: &FieldParams, exec: Execution) -> CheckReport {
    let q = u64::from(params.q());
    let pairs = label_pairs(params);
    let products = exec.map(&pairs, |(r1, r2)| tensor_decompose(r1, r2));
    let mut rep = CheckReport::new("highest multiplicity is two", params.q());
    let mut max_seen = 0;
    for ((r1, r2), d) in pairs.iter().zip(products) {
        let d = match d {
            Ok(d) => d,
            Err(e) => {
                rep.expect(false, || format!("{r1} ⊗ {r2}: {e}"));
                continue;
            }
        };
        let m = d.max_multiplicity();
        max_seen = max_seen.max(m);
        rep.expect(m <= 2, || format!("{r1} ⊗ {r2}: multiplicity {m}"));
        if m < 2 {
            continue;
        }
        let shape = [r1.family(), r2.family()];
        let allowed = shape.contains(&Family::PrincipalSeries)
            && shape
                .iter()
                .all(|f| matches!(f, Family::Steinberg | Family::PrincipalSeries));
        rep.expect(allowed, || {
            format!("{r1} ⊗ {r2}: doubled constituent in a {shape:?} product")
        });
        for (l, &k) in d.iter().filter(|(_, &k)| k == 2) {
            let dim = l.dimension();
            rep.expect(dim == q || dim == q + 1, || {
                format!("{r1} ⊗ {r2}: {k}·{l} has dimension {dim}")
            });
        }
    }
    rep.expect(max_seen == 2, || {
        format!("maximum multiplicity {max_seen}, expected 2")
    });
    rep
}

/// Every inducing character of both tori and of `ZU`.
pub fn inducing_data(params: &FieldParams) -> Vec<InducingData> {
    let chars: Vec<MultChar> = (0..params.m1())
        .map(|a| MultChar::new(params, a.into()))
        .collect();
    let mut out = Vec::new();
    for &a in &chars {
        for &b in &chars {
            out.push(InducingData::SplitTorus(a, b));
        }
    }
    for k in 0..params.m2() {
        out.push(InducingData::AnisoTorus(TorusChar::new(params, k.into())));
    }
    out.extend(chars.iter().map(|&r| InducingData::ZU(r)));
    out
}

/// Induction formulas against Frobenius reciprocity, every inducing character.
pub fn induction_vs_oracle(table: &CharTable, exec: Execution) -> CheckReport {
    let data = inducing_data(table.params());
    let outcomes = exec.map(&data, |d| {
        let formula = match *d {
            InducingData::SplitTorus(a, b) => ind_t1_decompose(a, b),
            InducingData::AnisoTorus(l) => Ok(ind_tm1_decompose(l)),
            InducingData::ZU(r) => Ok(ind_zu_decompose(r)),
        };
        let oracle = oracle_induced_decompose(table, d);
        let dim_ok = formula
            .as_ref()
            .is_ok_and(|f| f.total_dimension() as u64 == d.index());
        match (formula, oracle) {
            (Ok(f), Ok(o)) if f == o && dim_ok => None,
            (f, o) => Some(format!("{d:?}: formula {f:?}, reciprocity {o:?}")),
        }
    });
    let mut rep = CheckReport::new(
        "induced representations match reciprocity",
        table.params().q(),
    );
    for o in outcomes {
        rep.expect(o.is_none(), || o.unwrap_or_default());
    }
    rep
}

/// Row and column orthogonality, plus the degree and count identities.
pub fn orthogonality(table: &CharTable, exec: Execution) -> CheckReport {
    let params = table.params();
    let mut rep = CheckReport::new("character table orthogonality", params.q());
    let n = table.irreps().len();
    rep.expect(
        n == table.classes().len() && n == params.class_count(),
        || format!("{n} irreducibles, {} classes", table.classes().len()),
    );
    let dims: u64 = table.irreps().iter().map(|r| r.dimension().pow(2)).sum();
    rep.expect(dims == params.group_order(), || {
        format!(
            "sum of squared degrees {dims}, group order {}",
            params.group_order()
        )
    });

    let idx: Vec<usize> = (0..n).collect();
    let pairs = unordered_pairs(&idx);
    let rows = exec.map(&pairs, |&(r, s)| {
        let want = i64::from(r == s);
        match table.row_inner_product(r, s) {
            Ok(v) if v == want => None,
            got => Some(format!(
                "<{}, {}> = {got:?}, expected {want}",
                table.irreps()[r],
                table.irreps()[s]
            )),
        }
    });
    let cols = exec.map(&pairs, |&(c, d)| {
        let data = &table.classes()[c];
        let want = if c == d {
            (params.group_order() / data.size) as i64
        } else {
            0
        };
        match table.column_inner_product(c, d) {
            Ok(v) if v == want => None,
            got => Some(format!(
                "column ({}, {}) = {got:?}, expected {want}",
                data.label,
                table.classes()[d].label
            )),
        }
    });
    for o in rows.into_iter().chain(cols) {
        rep.expect(o.is_none(), || o.unwrap_or_default());
    }
    rep
}

/// Three characterizations of self-duality agree, with the expected family sizes.
pub fn self_duality(table: &CharTable, exec: Execution) -> CheckReport {
    let params = table.params();
    let q = u64::from(params.q());
    let mut rep = CheckReport::new("self-dual classification", params.q());
    let irreps = enumerate_irreps(params);
    let trivial = IrrepLabel::OneDim(MultChar::trivial(params));
    let listed = self_dual_classify(params);
    let by_dual: BTreeSet<IrrepLabel> = irreps.iter().copied().filter(|r| r.dual() == *r).collect();
    let contains_trivial = exec.map(&irreps, |r| tensor_multiplicity(table, r, r, &trivial));
    let mut by_trivial = BTreeSet::new();
    for (r, m) in irreps.iter().zip(contains_trivial) {
        match m {
            Ok(1) => {
                by_trivial.insert(*r);
            }
            Ok(0) => {}
            other => rep.expect(false, || format!("<{r} ⊗ {r}, 1> = {other:?}")),
        }
    }
    rep.expect(listed == by_dual, || {
        format!("classified {listed:?}, by dual {by_dual:?}")
    });
    rep.expect(listed == by_trivial, || {
        format!("classified {listed:?}, by <V⊗V, 1> {by_trivial:?}")
    });
    let count = |fam: Family| listed.iter().filter(|r| r.family() == fam).count() as u64;
    let sizes = [
        count(Family::OneDim),
        count(Family::Steinberg),
        count(Family::PrincipalSeries),
        count(Family::Cuspidal),
    ];
    let want = [2, 2, (q - 1) / 2, (q - 1) / 2];
    rep.expect(sizes == want, || {
        format!("family sizes {sizes:?}, expected {want:?}")
    });
    rep
}

fn ps_cusp_products(
    params: &FieldParams,
) -> Vec<(MultChar, MultChar, TorusChar, IrrepLabel, IrrepLabel)> {
    let irreps = enumerate_irreps(params);
    let mut out = Vec::new();
    for ps in &irreps {
        let IrrepLabel::PrincipalSeries(a, b) = *ps else {
            continue;
        };
        for cusp in &irreps {
            if let IrrepLabel::Cuspidal(l) = *cusp {
                out.push((a, b, l, *ps, *cusp));
            }
        }
    }
    out
}

/// `ps(a, b) ⊗ cusp(Λ)` agree exactly when `a b Λ̄` does, and a non-twist
/// witness exists for every such product unless `q = 3`.
pub fn ps_cuspidal_criterion(params: &FieldParams, exec: Execution) -> CheckReport {
    let mut rep = CheckReport::new("principal series ⊗ cuspidal criterion", params.q());
    let items = ps_cusp_products(params);
    let products: Vec<_> = exec.map(&items, |(_, _, _, ps, cusp)| tensor_decompose(ps, cusp));
    let mut decs = Vec::with_capacity(products.len());
    for (item, d) in items.iter().zip(products) {
        match d {
            Ok(d) => decs.push(d),
            Err(e) => {
                rep.expect(false, || format!("{} ⊗ {}: {e}", item.3, item.4));
                return rep;
            }
        }
    }
    let idx: Vec<usize> = (0..items.len()).collect();
    let row_failures = exec.map(&idx, |&i| {
        let (a, b, l, ps, cusp) = items[i];
        let mut bad = Vec::new();
        for (j, &(c, d, m, ps2, cusp2)) in items.iter().enumerate().skip(i) {
            let same = decs[i] == decs[j];
            match ps_cusp_products_agree(a, b, l, c, d, m) {
                Ok(pred) if pred == same => {}
                got => bad.push(format!(
                    "{ps} ⊗ {cusp} vs {ps2} ⊗ {cusp2}: equal products {same}, criterion {got:?}"
                )),
            }
        }
        (items.len() - i, bad)
    });
    for (n, bad) in row_failures {
        rep.checked += n as u64 - bad.len() as u64;
        for b in bad {
            rep.expect(false, || b);
        }
    }

    let witnesses = exec.map(&items, |&(a, b, l, ps, cusp)| {
        let w = unique_decomp_witness(a, b, l);
        (ps, cusp, w)
    });
    for (ps, cusp, w) in witnesses {
        match w {
            Ok(None) => rep.expect(params.q() == 3, || format!("{ps} ⊗ {cusp}: no witness")),
            Ok(Some((v, c))) => {
                let ok = params.q() != 3
                    && !twist_related((ps, cusp), (v, c))
                    && tensor_decompose(&v, &c).ok() == tensor_decompose(&ps, &cusp).ok();
                rep.expect(ok, || format!("{ps} ⊗ {cusp}: bad witness ({v}, {c})"));
            }
            Err(e) => rep.expect(false, || format!("{ps} ⊗ {cusp}: {e}")),
        }
    }
    rep
}

/// Exhaustive uniqueness sweep over pairs of dimension > 1.
pub fn uniqueness_sweep(params: &FieldParams, exec: Execution) -> CheckReport {
    let mut rep = CheckReport::new("unique decomposition sweep", params.q());
    match verify_unique_decomposition_with(params, exec) {
        Ok(r) => {
            rep.checked = r.pairs_examined as u64;
            rep.failures = r.violations;
        }
        Err(e) => rep.expect(false, || e.to_string()),
    }
    rep
}

/// The two cuspidal separation properties behind the uniqueness sweep.
pub fn cuspidal_separation(params: &FieldParams) -> CheckReport {
    let mut rep = CheckReport::new("cuspidal separation", params.q());
    let v = v_set_separation_violations(params);
    rep.expect(v.is_empty(), || format!("V sets fail to separate: {v:?}"));
    match cuspidal_collision_violations(params) {
        Ok(v) => rep.expect(v.is_empty(), || {
            format!("cuspidal product collisions: {v:?}")
        }),
        Err(e) => rep.expect(false, || e.to_string()),
    }
    rep
}

/// Sizes of the `S`, `W` and `V` sets, split by whether the character is a square.
pub fn set_counts(params: &FieldParams) -> CheckReport {
    let q = u64::from(params.q());
    let mut rep = CheckReport::new("S, W, V set sizes", params.q());
    for a in 0..params.m1() {
        let x = MultChar::new(params, a.into());
        let (s, w) = (build_s(x).len() as u64, build_w(x).len() as u64);
        let want = if x.is_square() {
            ((q - 3) / 2, (q - 1) / 2)
        } else {
            ((q - 1) / 2, (q + 1) / 2)
        };
        rep.expect((s, w) == want, || {
            format!("{x:?}: |S|, |W| = {s}, {w}; expected {want:?}")
        });
    }
    for k in 0..params.m2() {
        let l = TorusChar::new(params, k.into());
        if l.is_decomposable() {
            continue;
        }
        let v = build_v(l).len() as u64;
        let want = if l.bar().is_square() {
            (q - 3) / 2
        } else {
            (q - 1) / 2
        };
        rep.expect(v == want, || format!("{l:?}: |V| = {v}, expected {want}"));
    }
    rep
}

/// Named groups of checks, as exposed by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Tensor,
    Induction,
    Orthogonality,
    SelfDual,
    Unique,
    Counts,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = [
        "all",
        "tensor",
        "induction",
        "orthogonality",
        "selfdual",
        "unique",
        "counts",
    ];
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "all" => Self::All,
            "tensor" => Self::Tensor,
            "induction" => Self::Induction,
            "orthogonality" => Self::Orthogonality,
            "selfdual" => Self::SelfDual,
            "unique" => Self::Unique,
            "counts" => Self::Counts,
            _ => return Err(format!("unknown suite {s:?}")),
        })
    }
}

/// Runs `suite` against `table` (whose field fixes `q`).
pub fn run_suite(table: &CharTable, suite: Suite, exec: Execution) -> Vec<CheckReport> {
    let params = table.params();
    let mut out = Vec::new();
    let want = |s: Suite| suite == Suite::All || suite == s;
    if want(Suite::Tensor) {
        out.push(tensor_vs_oracle(table, exec));
        out.push(pantoja_vs_formula(params, exec));
        out.push(highest_multiplicity(params, exec));
    }
    if want(Suite::Induction) {
        out.push(induction_vs_oracle(table, exec));
    }
    if want(Suite::Orthogonality) {
        out.push(orthogonality(table, exec));
    }
    if want(Suite::SelfDual) {
        out.push(self_duality(table, exec));
    }
    if want(Suite::Unique) {
        out.push(ps_cuspidal_criterion(params, exec));
        out.push(uniqueness_sweep(params, exec));
        out.push(cuspidal_separation(params));
    }
    if want(Suite::Counts) {
        out.push(set_counts(params));
    }
    out
}
