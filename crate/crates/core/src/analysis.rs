//! Classification results built on the decomposition formulas: multiplicity
//! freeness, self-duality, and the unique decomposition property.
//!
//! A product `V1 ⊗ V2` has the unique decomposition property when every
//! factorization `W1 ⊗ W2` of the same representation is obtained from
//! `(V1, V2)` by twisting each factor with a one-dimensional character and
//! possibly swapping the factors. That property fails exactly for products of
//! a principal series with a cuspidal representation (when `q > 3`): those are
//! determined by the single residue `αβΛ̄`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::chars::{MultChar, TorusChar};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::formulas::tensor_decompose;
use crate::irrep::{build_v, build_w, enumerate_irreps, Family, IrrepLabel};
use crate::par::{unordered_pairs, Execution};
use crate::params::FieldParams;

/// Outcome of [`is_multiplicity_free`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityCheck {
    pub free: bool,
    /// A constituent of maximal multiplicity when `free` is false.
    pub witness: Option<(IrrepLabel, i64)>,
}

pub fn is_multiplicity_free(r1: &IrrepLabel, r2: &IrrepLabel) -> Result<MultiplicityCheck> {
    let d = tensor_decompose(r1, r2)?;
    let witness = d
        .iter()
        .filter(|(_, &m)| m > 1)
        .max_by_key(|(_, &m)| m)
        .map(|(l, &m)| (*l, m));
    if let Some((l, m)) = witness {
        assert_eq!(m, 2, "{r1} ⊗ {r2}: multiplicity above two");
        assert!(
            matches!(l.family(), Family::Steinberg | Family::PrincipalSeries),
            "{r1} ⊗ {r2}: doubled constituent {l} of dimension {}",
            l.dimension()
        );
    }
    Ok(MultiplicityCheck {
        free: witness.is_none(),
        witness,
    })
}

/// The self-dual irreducibles, listed family by family:
/// `1d` and `st` at the trivial and sign characters, `ps(α, α^{-1})` with
/// `α^2 ≠ 1` together with `ps(1, sign)`, and every cuspidal with `Λ̄ = 1`.
pub fn self_dual_classify(params: &FieldParams) -> BTreeSet<IrrepLabel> {
    let one = MultChar::trivial(params);
    let sign = MultChar::sign(params);
    let mut out = BTreeSet::new();
    for a in [one, sign] {
        out.insert(IrrepLabel::OneDim(a));
        out.insert(IrrepLabel::Steinberg(a));
    }
    for a in 0..params.m1() {
        let alpha = MultChar::new(params, a.into());
        if alpha * alpha != one {
            out.insert(IrrepLabel::principal(alpha, alpha.inverse()).expect("α ≠ α^{-1}"));
        }
    }
    out.insert(IrrepLabel::principal(one, sign).expect("sign is nontrivial"));
    out.extend(build_w(one));
    out
}

/// Whether `(V1, V2)` and `(W1, W2)` agree up to one-dimensional twists of each
/// factor and a swap.
pub fn twist_related(v: (IrrepLabel, IrrepLabel), w: (IrrepLabel, IrrepLabel)) -> bool {
    (is_twist_of(&v.0, &w.0) && is_twist_of(&v.1, &w.1))
        || (is_twist_of(&v.0, &w.1) && is_twist_of(&v.1, &w.0))
}

/// Whether `v = χ ⊗ w` for some one-dimensional `χ`.
pub fn is_twist_of(v: &IrrepLabel, w: &IrrepLabel) -> bool {
    if v.family() != w.family() || v.q() != w.q() {
        return false;
    }
    let q = v.q();
    (0..q - 1).any(|t| w.twist(MultChar::from_reduced(t, q)) == *v)
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::DegenerateInput(what.to_string()))
    }
}

/// Criterion for `ps(a, b) ⊗ cusp(Λ) = ps(c, d) ⊗ cusp(M)`: `a b Λ̄ = c d M̄`.
pub fn ps_cusp_products_agree(
    a: MultChar,
    b: MultChar,
    l: TorusChar,
    c: MultChar,
    d: MultChar,
    m: TorusChar,
) -> Result<bool> {
    a.try_mul(b)?.try_mul(c)?.try_mul(d)?;
    l.try_mul(m)?;
    a.try_mul(l.bar())?;
    require(a != b, "first principal series has equal characters")?;
    require(c != d, "second principal series has equal characters")?;
    require(
        !l.is_decomposable(),
        "first torus character is decomposable",
    )?;
    require(
        !m.is_decomposable(),
        "second torus character is decomposable",
    )?;
    Ok(a * b * l.bar() == c * d * m.bar())
}

/// A factorization of `ps(a, b) ⊗ cusp(Λ)` that is not a twist of the given one,
/// or `None` when no twist `θ ∉ {1, b/a, (b/a)^2}` exists (that is, `q = 3`).
///
/// The witness is `(ps(θa, b), cusp(Ψ))` with `Ψ̄ = θ^{-1} Λ̄`, `θ` the smallest
/// admissible exponent and `Ψ` the smallest indecomposable exponent.
pub fn unique_decomp_witness(
    a: MultChar,
    b: MultChar,
    l: TorusChar,
) -> Result<Option<(IrrepLabel, IrrepLabel)>> {
    a.try_mul(b)?;
    a.try_mul(l.bar())?;
    require(a != b, "principal series has equal characters")?;
    require(!l.is_decomposable(), "torus character is decomposable")?;
    let q = a.q();
    let ratio = b * a.inverse();
    let excluded = [MultChar::from_reduced(0, q), ratio, ratio * ratio];
    let Some(theta) = (0..q - 1)
        .map(|t| MultChar::from_reduced(t, q))
        .find(|t| !excluded.contains(t))
    else {
        return Ok(None);
    };
    let target = l.bar() * theta.inverse();
    let m1 = q - 1;
    let psi = (0..=q)
        .map(|j| TorusChar::from_reduced(target.exponent() + j * m1, q))
        .find(|k| !k.is_decomposable())
        .expect("every residue class mod q-1 has indecomposable lifts");
    Ok(Some((
        IrrepLabel::principal(theta * a, b)?,
        IrrepLabel::cuspidal(psi)?,
    )))
}

/// One set of unordered pairs sharing a tensor product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionGroup {
    pub pairs: Vec<(IrrepLabel, IrrepLabel)>,
    pub decomposition: Decomposition,
}

#[derive(Debug, Clone, Default)]
pub struct UniquenessReport {
    pub pairs_examined: usize,
    /// Groups with at least two pairs.
    pub collisions: Vec<CollisionGroup>,
    pub violations: Vec<String>,
}

impl UniquenessReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn is_ps_cusp(pair: &(IrrepLabel, IrrepLabel)) -> bool {
    matches!(
        (pair.0.family(), pair.1.family()),
        (Family::PrincipalSeries, Family::Cuspidal) | (Family::Cuspidal, Family::PrincipalSeries)
    )
}

fn ps_cusp_key(pair: &(IrrepLabel, IrrepLabel)) -> MultChar {
    pair.0.central_character() * pair.1.central_character()
}

/// Sweeps every unordered pair of irreducibles of dimension > 1, grouping by
/// tensor product. Collisions outside `{q-1, q+1}` must be twist-related;
/// `(q+1, q-1)` pairs must collide exactly when `a b Λ̄` agrees.
pub fn verify_unique_decomposition(params: &FieldParams) -> Result<UniquenessReport> {
    verify_unique_decomposition_with(params, Execution::default())
}

pub fn verify_unique_decomposition_with(
    params: &FieldParams,
    exec: Execution,
) -> Result<UniquenessReport> {
    let big: Vec<IrrepLabel> = enumerate_irreps(params)
        .into_iter()
        .filter(|r| r.dimension() > 1)
        .collect();
    let pairs = unordered_pairs(&big);
    let products = exec.map(&pairs, |(r1, r2)| tensor_decompose(r1, r2));
    let mut groups: HashMap<Decomposition, Vec<(IrrepLabel, IrrepLabel)>> = HashMap::new();
    for (pair, d) in pairs.iter().zip(products) {
        groups.entry(d?).or_default().push(*pair);
    }
    let pairs_examined = pairs.len();

    let mut report = UniquenessReport {
        pairs_examined,
        ..Default::default()
    };
    // residue αβΛ̄ -> the decompositions seen for it (must be exactly one)
    let mut ps_cusp_classes: BTreeMap<MultChar, BTreeSet<usize>> = BTreeMap::new();
    let mut ordered: Vec<_> = groups.into_iter().collect();
    ordered.sort_by(|x, y| x.1.cmp(&y.1));
    for (gi, (decomposition, pairs)) in ordered.into_iter().enumerate() {
        for p in pairs.iter().filter(|p| is_ps_cusp(p)) {
            ps_cusp_classes
                .entry(ps_cusp_key(p))
                .or_default()
                .insert(gi);
        }
        if pairs.len() < 2 {
            continue;
        }
        let first = pairs[0];
        for &other in &pairs[1..] {
            if is_ps_cusp(&first) && is_ps_cusp(&other) {
                if ps_cusp_key(&first) != ps_cusp_key(&other) {
                    report
                        .violations
                        .push(format!("{first:?} and {other:?} collide but αβΛ̄ differs"));
                }
            } else if !twist_related(first, other) {
                report.violations.push(format!(
                    "{first:?} and {other:?} collide without being twist-related"
                ));
            }
        }
        report.collisions.push(CollisionGroup {
            pairs,
            decomposition,
        });
    }
    for (key, gs) in ps_cusp_classes {
        if gs.len() != 1 {
            report.violations.push(format!(
                "principal series ⊗ cuspidal pairs with αβΛ̄ = {key:?} give {} distinct products",
                gs.len()
            ));
        }
    }
    Ok(report)
}

/// For indecomposable `Λ, Λ'`: `V(Λ) = V(Λ')` iff `cusp(Λ) = cusp(Λ')`.
/// Returns the offending pairs (empty when the property holds).
pub fn v_set_separation_violations(params: &FieldParams) -> Vec<(TorusChar, TorusChar)> {
    let indec: Vec<TorusChar> = (0..params.m2())
        .map(|k| TorusChar::new(params, k.into()))
        .filter(|l| !l.is_decomposable())
        .collect();
    let vs: Vec<_> = indec.iter().map(|&l| build_v(l)).collect();
    let mut bad = Vec::new();
    for (i, &l) in indec.iter().enumerate() {
        for (j, &m) in indec.iter().enumerate() {
            let same_v = vs[i] == vs[j];
            let same_label = IrrepLabel::cuspidal(l).ok() == IrrepLabel::cuspidal(m).ok();
            if same_v != same_label {
                bad.push((l, m));
            }
        }
    }
    bad
}

/// Whenever `cusp(Λ) ⊗ cusp(Φ) = cusp(Λ') ⊗ cusp(Φ')`, the products must satisfy
/// `Λ'Φ' ∈ {ΛΦ, (ΛΦ)^q}` and `Λ'Φ'^q ∈ {ΛΦ^q, Λ^qΦ}`, or the same with
/// `Λ'Φ'` and `Λ'Φ'^q` exchanged. Returns the offending 4-tuples.
pub fn cuspidal_collision_violations(params: &FieldParams) -> Result<Vec<[IrrepLabel; 4]>> {
    let cusps: Vec<(IrrepLabel, TorusChar)> = enumerate_irreps(params)
        .into_iter()
        .filter_map(|r| match r {
            IrrepLabel::Cuspidal(l) => Some((r, l)),
            _ => None,
        })
        .collect();
    let mut products = Vec::new();
    for &(r1, l) in &cusps {
        for &(r2, f) in &cusps {
            products.push(((r1, l), (r2, f), tensor_decompose(&r1, &r2)?));
        }
    }
    let orbit = |x: TorusChar| [x, x.frobenius()];
    let mut bad = Vec::new();
    for ((r1, l), (r2, f), d) in &products {
        for ((s1, l2), (s2, f2), d2) in &products {
            if d != d2 {
                continue;
            }
            let (p, pq) = (*l * *f, *l * f.frobenius());
            let (p2, pq2) = (*l2 * *f2, *l2 * f2.frobenius());
            let straight = orbit(p).contains(&p2) && [pq, l.frobenius() * *f].contains(&pq2);
            let crossed = orbit(p).contains(&pq2) && [pq, l.frobenius() * *f].contains(&p2);
            if !(straight || crossed) {
                bad.push([*r1, *r2, *s1, *s2]);
            }
        }
    }
    Ok(bad)
}
