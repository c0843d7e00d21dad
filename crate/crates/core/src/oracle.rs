//! Brute-force multiplicities from the character table.
//!
//! Tensor multiplicities are class sums `(1/|G|) Σ_c |c| χ1(c) χ2(c) conj(χ(c))`.
//! Induced multiplicities use Frobenius reciprocity, `<Ind φ, π> = <φ, Res π>`,
//! summed over the elements of the subgroup by exponent, with each element
//! mapped to its conjugacy class label. No matrices or field elements appear.
//!
//! The sums are evaluated directly under the two homomorphisms of the table's
//! [`ModularEvaluator`](crate::cyclo::ModularEvaluator) (which is what
//! extraction would do to the formal sum anyway) and then lifted; the formal
//! route is kept in [`tensor_multiplicity_formal`] for cross-checking.

use crate::chars::{MultChar, TorusChar};
use crate::chartable::{CharTable, ConjClassLabel};
use crate::cyclo::{mul_mod, CycloValue};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::irrep::IrrepLabel;

/// A subgroup together with the character being induced from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InducingData {
    /// Split torus `T_1` (diagonal matrices) with `diag(x, y) ↦ α(x) β(y)`.
    SplitTorus(MultChar, MultChar),
    /// Anisotropic torus `T_{-1} ≅ F_{q^2}^x` with the character `Λ`.
    AnisoTorus(TorusChar),
    /// `ZU` with `ρψ`, `ψ` any nontrivial character of `U`.
    ZU(MultChar),
}

impl InducingData {
    fn q(&self) -> u32 {
        match self {
            Self::SplitTorus(a, _) | Self::ZU(a) => a.q(),
            Self::AnisoTorus(l) => l.q(),
        }
    }

    /// `[G : H]`.
    pub fn index(&self) -> u64 {
        let q = u64::from(self.q());
        match self {
            Self::SplitTorus(..) => q * (q + 1),
            Self::AnisoTorus(_) => q * (q - 1),
            Self::ZU(_) => q * q - 1,
        }
    }
}

#[inline]
fn dot_mod(a: &[u64], b: &[u64], p: u64) -> u64 {
    const SPILL: u128 = 1 << 127;
    let mut acc: u128 = 0;
    for (&x, &y) in a.iter().zip(b) {
        acc += u128::from(x) * u128::from(y);
        if acc >= SPILL {
            acc %= u128::from(p);
        }
    }
    (acc % u128::from(p)) as u64
}

fn check_field(table: &CharTable, q: u32) -> Result<()> {
    if table.params().q() == q {
        Ok(())
    } else {
        Err(Error::ParamMismatch {
            left: q,
            right: table.params().q(),
        })
    }
}

fn multiplicity_bound(table: &CharTable) -> u64 {
    let q1 = u64::from(table.params().q()) + 1;
    q1 * q1
}

/// Per-class weights `|c| χ1(c) χ2(c)` under each evaluation target.
fn pair_weights(table: &CharTable, i: usize, j: usize) -> [Vec<u64>; 2] {
    let ncls = table.classes().len();
    let mut out = [Vec::with_capacity(ncls), Vec::with_capacity(ncls)];
    for (t, w) in out.iter_mut().enumerate() {
        let p = table.evaluator().targets()[t].prime();
        for (c, data) in table.classes().iter().enumerate() {
            let v = mul_mod(table.image(t, i, c), table.image(t, j, c), p);
            w.push(mul_mod(v, data.size % p, p));
        }
    }
    out
}

fn multiplicity_from_weights(table: &CharTable, weights: &[Vec<u64>; 2], s: usize) -> Result<i64> {
    let ev = table.evaluator();
    let images =
        [0, 1].map(|t| dot_mod(&weights[t], table.conj_row(t, s), ev.targets()[t].prime()));
    ev.extract_from_images(
        images,
        table.params().group_order(),
        multiplicity_bound(table),
    )
}

/// `<r1 ⊗ r2, s>`.
pub fn tensor_multiplicity(
    table: &CharTable,
    r1: &IrrepLabel,
    r2: &IrrepLabel,
    s: &IrrepLabel,
) -> Result<i64> {
    let (i, j, k) = (
        table.irrep_index(r1)?,
        table.irrep_index(r2)?,
        table.irrep_index(s)?,
    );
    multiplicity_from_weights(table, &pair_weights(table, i, j), k)
}

/// `<r1 ⊗ r2, s>` built as an explicit cyclotomic sum and then extracted.
pub fn tensor_multiplicity_formal(
    table: &CharTable,
    r1: &IrrepLabel,
    r2: &IrrepLabel,
    s: &IrrepLabel,
) -> Result<i64> {
    let (i, j, k) = (
        table.irrep_index(r1)?,
        table.irrep_index(r2)?,
        table.irrep_index(s)?,
    );
    let mut acc = CycloValue::zero(table.params().m2());
    for (c, data) in table.classes().iter().enumerate() {
        let prod = table.value(i, c) * table.value(j, c);
        CycloValue::mul_acc(&mut acc, data.size as i64, &prod, &table.value(k, c).conj());
    }
    table.evaluator().extract_integer(
        &acc,
        table.params().group_order(),
        multiplicity_bound(table),
    )
}

/// Decomposes `r1 ⊗ r2` by computing every multiplicity.
pub fn oracle_tensor_decompose(
    table: &CharTable,
    r1: &IrrepLabel,
    r2: &IrrepLabel,
) -> Result<Decomposition> {
    let (i, j) = (table.irrep_index(r1)?, table.irrep_index(r2)?);
    let weights = pair_weights(table, i, j);
    let mut d = Decomposition::new();
    for (k, s) in table.irreps().iter().enumerate() {
        let m = multiplicity_from_weights(table, &weights, k)?;
        if m < 0 {
            return Err(Error::NegativeMultiplicity {
                label: s.to_string(),
                mult: m,
            });
        }
        d.add(*s, m);
    }
    let expected = r1.dimension() * r2.dimension();
    let actual = d.total_dimension() as u64;
    if actual != expected {
        return Err(Error::DimensionMismatch { expected, actual });
    }
    Ok(d)
}

/// `<Ind_H^G φ, s>` by Frobenius reciprocity.
pub fn induction_multiplicity(
    table: &CharTable,
    data: &InducingData,
    s: &IrrepLabel,
) -> Result<i64> {
    check_field(table, data.q())?;
    let row = table.irrep_index(s)?;
    let params = *table.params();
    let q = params.q();
    let n = params.m2();
    let m1 = params.m1();
    let ev = table.evaluator();
    let class = |c: ConjClassLabel| table.class_index(&c).expect("canonical class label");

    let images = [0, 1].map(|t| {
        let target = &ev.targets()[t];
        let p = target.prime();
        // η^e = ζ^{(q+1)e}
        let eta = |e: u64| target.power(((e * u64::from(q + 1)) % u64::from(n)) as u32);
        let mut acc = 0u64;
        match *data {
            InducingData::AnisoTorus(l) => {
                let k = u64::from(l.exponent());
                for m in 0..n {
                    let c = class(ConjClassLabel::torus(&params, m.into()));
                    let phi = target.power(((k * u64::from(m)) % u64::from(n)) as u32);
                    acc = (acc + mul_mod(phi, table.conj_image(t, row, c), p)) % p;
                }
            }
            InducingData::SplitTorus(a, b) => {
                let (a, b) = (u64::from(a.exponent()), u64::from(b.exponent()));
                for i in 0..m1 {
                    for j in 0..m1 {
                        let c = class(ConjClassLabel::diagonal(&params, i.into(), j.into()));
                        let phi = eta(a * u64::from(i) + b * u64::from(j));
                        acc = (acc + mul_mod(phi, table.conj_image(t, row, c), p)) % p;
                    }
                }
            }
            InducingData::ZU(rho) => {
                let r = u64::from(rho.exponent());
                for i in 0..m1 {
                    let cen = table.conj_image(t, row, class(ConjClassLabel::Central(i)));
                    let nss = table.conj_image(t, row, class(ConjClassLabel::NonSemisimple(i)));
                    // Σ_{u≠1} ψ(u) = -1, and every nontrivial unipotent part lands in nss:i
                    let diff = (cen + p - nss) % p;
                    acc = (acc + mul_mod(eta(r * u64::from(i)), diff, p)) % p;
                }
            }
        }
        acc
    });

    let q64 = u64::from(q);
    let subgroup_order = match data {
        InducingData::AnisoTorus(_) => q64 * q64 - 1,
        InducingData::SplitTorus(..) => (q64 - 1) * (q64 - 1),
        InducingData::ZU(_) => q64 * (q64 - 1),
    };
    ev.extract_from_images(images, subgroup_order, multiplicity_bound(table))
}

/// Decomposes an induced representation by reciprocity, checking the total
/// dimension against the index.
pub fn oracle_induced_decompose(table: &CharTable, data: &InducingData) -> Result<Decomposition> {
    let mut d = Decomposition::new();
    for s in table.irreps() {
        let m = induction_multiplicity(table, data, s)?;
        if m < 0 {
            return Err(Error::NegativeMultiplicity {
                label: s.to_string(),
                mult: m,
            });
        }
        d.add(*s, m);
    }
    let actual = d.total_dimension() as u64;
    if actual != data.index() {
        return Err(Error::DimensionMismatch {
            expected: data.index(),
            actual,
        });
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::DEFAULT_SEED;
    use crate::formulas::{
        ind_t1_decompose, ind_tm1_decompose, ind_zu_decompose, tensor_decompose,
    };
    use crate::irrep::parse_label;
    use crate::params::FieldParams;

    fn table(q: u64) -> CharTable {
        CharTable::new(FieldParams::from_q(q).unwrap(), DEFAULT_SEED)
    }

    #[test]
    fn multiplicity_examples() {
        let t = table(3);
        let l = |s| parse_label(t.params(), s).unwrap();
        assert_eq!(
            tensor_multiplicity(&t, &l("st:0"), &l("st:0"), &l("1d:0")).unwrap(),
            1
        );
        assert_eq!(
            tensor_multiplicity(&t, &l("1d:0"), &l("1d:0"), &l("1d:0")).unwrap(),
            1
        );
        assert_eq!(
            tensor_multiplicity(&t, &l("st:0"), &l("ps:0,1"), &l("ps:0,1")).unwrap(),
            2
        );
        assert_eq!(
            tensor_multiplicity_formal(&t, &l("st:0"), &l("ps:0,1"), &l("ps:0,1")).unwrap(),
            2
        );
    }

    #[test]
    fn formal_and_evaluated_routes_agree() {
        for q in [3, 5] {
            let t = table(q);
            let all = t.irreps().to_vec();
            for r1 in &all {
                for r2 in all.iter().step_by(3) {
                    for s in &all {
                        assert_eq!(
                            tensor_multiplicity(&t, r1, r2, s).unwrap(),
                            tensor_multiplicity_formal(&t, r1, r2, s).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_decomposition_examples() {
        let t = table(3);
        let l = |s| parse_label(t.params(), s).unwrap();
        assert_eq!(
            oracle_tensor_decompose(&t, &l("st:0"), &l("st:0")).unwrap(),
            tensor_decompose(&l("st:0"), &l("st:0")).unwrap()
        );
        let t5 = table(5);
        let l5 = |s| parse_label(t5.params(), s).unwrap();
        let d = oracle_tensor_decompose(&t5, &l5("ps:0,2"), &l5("cusp:1")).unwrap();
        assert_eq!(d.to_string(), "ps:0,3 + ps:1,2 + cusp:3 + cusp:7 + cusp:19");
        for r in t5.irreps() {
            let d = oracle_tensor_decompose(&t5, &l5("1d:3"), r).unwrap();
            assert_eq!(d.len(), 1);
            assert_eq!(d.total_dimension() as u64, r.dimension());
        }
    }

    #[test]
    fn induction_examples() {
        let t3 = table(3);
        let p3 = *t3.params();
        let l3 = |s| parse_label(&p3, s).unwrap();
        let aniso = InducingData::AnisoTorus(TorusChar::new(&p3, 1));
        assert_eq!(
            induction_multiplicity(&t3, &aniso, &l3("ps:0,1")).unwrap(),
            1
        );
        let zu = InducingData::ZU(MultChar::new(&p3, 0));
        assert_eq!(induction_multiplicity(&t3, &zu, &l3("cusp:2")).unwrap(), 1);
        let t5 = table(5);
        let p5 = *t5.params();
        let split = InducingData::SplitTorus(MultChar::new(&p5, 0), MultChar::new(&p5, 3));
        assert_eq!(
            induction_multiplicity(&t5, &split, &parse_label(&p5, "ps:0,3").unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn reciprocity_matches_formulas_small() {
        for q in [3, 5] {
            let t = table(q);
            let p = *t.params();
            for k in 0..p.m2() {
                let l = TorusChar::new(&p, k.into());
                assert_eq!(
                    oracle_induced_decompose(&t, &InducingData::AnisoTorus(l)).unwrap(),
                    ind_tm1_decompose(l)
                );
            }
            for a in 0..p.m1() {
                let a = MultChar::new(&p, a.into());
                assert_eq!(
                    oracle_induced_decompose(&t, &InducingData::ZU(a)).unwrap(),
                    ind_zu_decompose(a)
                );
                for b in 0..p.m1() {
                    let b = MultChar::new(&p, b.into());
                    assert_eq!(
                        oracle_induced_decompose(&t, &InducingData::SplitTorus(a, b)).unwrap(),
                        ind_t1_decompose(a, b).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn wrong_field_rejected() {
        let t = table(3);
        let other = parse_label(&FieldParams::from_q(5).unwrap(), "st:0").unwrap();
        assert!(tensor_multiplicity(&t, &other, &other, &other).is_err());
    }
}
