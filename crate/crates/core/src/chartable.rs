//! Conjugacy classes and the character table of `GL2(F_q)`.
//!
//! Classes are labelled by residues, like the irreducibles:
//!
//! | label | representative | size |
//! |---|---|---|
//! | `cen:i` | `h^i I` | 1 |
//! | `nss:i` | `h^i` times a nontrivial unipotent | `q^2 - 1` |
//! | `spl:i,j` | `diag(h^i, h^j)`, `i < j` | `q(q+1)` |
//! | `ell:m` | `g^m` in the anisotropic torus, `(q+1) ∤ m` | `q(q-1)` |
//!
//! Elliptic labels are canonicalized on the Frobenius orbit `{m, mq}` exactly
//! as cuspidal labels are. All values are exact [`CycloValue`]s with modulus
//! `N = q^2 - 1`; `η = ζ^{q+1}` has order `q - 1`.

use std::collections::HashMap;
use std::fmt;

use crate::chars::reduce;
use crate::cyclo::{CycloValue, ModularEvaluator};
use crate::error::{Error, Result};
use crate::irrep::{enumerate_irreps, IrrepLabel};
use crate::params::FieldParams;

/// Canonical conjugacy-class label.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConjClassLabel {
    Central(u32),
    NonSemisimple(u32),
    /// Invariant: `i < j`.
    Split(u32, u32),
    /// Invariant: `(q+1) ∤ m`, `m` minimal in `{m, mq mod (q^2-1)}`.
    Elliptic(u32),
}

impl ConjClassLabel {
    /// Class of `diag(h^i, h^j)`.
    pub fn diagonal(params: &FieldParams, i: i64, j: i64) -> Self {
        let (i, j) = (reduce(i, params.m1()), reduce(j, params.m1()));
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Self::Central(i),
            std::cmp::Ordering::Less => Self::Split(i, j),
            std::cmp::Ordering::Greater => Self::Split(j, i),
        }
    }

    /// Class of the torus element `g^m`.
    pub fn torus(params: &FieldParams, m: i64) -> Self {
        let q = params.q();
        let m = reduce(m, params.m2());
        if m % (q + 1) == 0 {
            Self::Central(m / (q + 1))
        } else {
            let mq = ((u64::from(m) * u64::from(q)) % u64::from(params.m2())) as u32;
            Self::Elliptic(m.min(mq))
        }
    }

    pub fn size(&self, params: &FieldParams) -> u64 {
        let q = u64::from(params.q());
        match self {
            Self::Central(_) => 1,
            Self::NonSemisimple(_) => q * q - 1,
            Self::Split(..) => q * (q + 1),
            Self::Elliptic(_) => q * (q - 1),
        }
    }
}

impl fmt::Display for ConjClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Central(i) => write!(f, "cen:{i}"),
            Self::NonSemisimple(i) => write!(f, "nss:{i}"),
            Self::Split(i, j) => write!(f, "spl:{i},{j}"),
            Self::Elliptic(m) => write!(f, "ell:{m}"),
        }
    }
}

impl fmt::Debug for ConjClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassData {
    pub label: ConjClassLabel,
    pub size: u64,
}

/// All classes in label order (mirroring the irreducible order).
pub fn enumerate_classes(params: &FieldParams) -> Vec<ClassData> {
    let m1 = params.m1();
    let mut labels = Vec::with_capacity(params.class_count());
    labels.extend((0..m1).map(ConjClassLabel::Central));
    labels.extend((0..m1).map(ConjClassLabel::NonSemisimple));
    for i in 0..m1 {
        for j in i + 1..m1 {
            labels.push(ConjClassLabel::Split(i, j));
        }
    }
    for m in 0..params.m2() {
        if let ConjClassLabel::Elliptic(c) = ConjClassLabel::torus(params, m.into()) {
            if c == m {
                labels.push(ConjClassLabel::Elliptic(m));
            }
        }
    }
    labels
        .into_iter()
        .map(|label| ClassData {
            label,
            size: label.size(params),
        })
        .collect()
}

/// The value of the irreducible character `r` on the class `c`.
pub fn char_value(params: &FieldParams, r: &IrrepLabel, c: &ConjClassLabel) -> Result<CycloValue> {
    if r.q() != params.q() {
        return Err(Error::ParamMismatch {
            left: r.q(),
            right: params.q(),
        });
    }
    let n = params.m2();
    let q = i64::from(params.q());
    // η^e as a ζ-power
    let eta = |e: i64| CycloValue::root(n, e * (q + 1));
    let e = |x: u32| i64::from(x);
    let v = match (*r, *c) {
        (IrrepLabel::OneDim(a), ConjClassLabel::Central(i))
        | (IrrepLabel::OneDim(a), ConjClassLabel::NonSemisimple(i)) => {
            eta(2 * e(a.exponent()) * e(i))
        }
        (IrrepLabel::OneDim(a), ConjClassLabel::Split(i, j)) => eta(e(a.exponent()) * e(i + j)),
        (IrrepLabel::OneDim(a), ConjClassLabel::Elliptic(m)) => eta(e(a.exponent()) * e(m)),

        (IrrepLabel::Steinberg(a), ConjClassLabel::Central(i)) => {
            eta(2 * e(a.exponent()) * e(i)).scale(q)
        }
        (IrrepLabel::Steinberg(_), ConjClassLabel::NonSemisimple(_)) => CycloValue::zero(n),
        (IrrepLabel::Steinberg(a), ConjClassLabel::Split(i, j)) => eta(e(a.exponent()) * e(i + j)),
        (IrrepLabel::Steinberg(a), ConjClassLabel::Elliptic(m)) => {
            eta(e(a.exponent()) * e(m)).scale(-1)
        }

        (IrrepLabel::PrincipalSeries(a, b), cls) => {
            let (a, b) = (e(a.exponent()), e(b.exponent()));
            match cls {
                ConjClassLabel::Central(i) => eta((a + b) * e(i)).scale(q + 1),
                ConjClassLabel::NonSemisimple(i) => eta((a + b) * e(i)),
                ConjClassLabel::Split(i, j) => {
                    &eta(a * e(i) + b * e(j)) + &eta(a * e(j) + b * e(i))
                }
                ConjClassLabel::Elliptic(_) => CycloValue::zero(n),
            }
        }

        (IrrepLabel::Cuspidal(l), cls) => {
            let k = e(l.exponent());
            match cls {
                ConjClassLabel::Central(i) => CycloValue::term(n, k * (q + 1) * e(i), q - 1),
                ConjClassLabel::NonSemisimple(i) => CycloValue::term(n, k * (q + 1) * e(i), -1),
                ConjClassLabel::Split(..) => CycloValue::zero(n),
                ConjClassLabel::Elliptic(m) => {
                    CycloValue::from_terms(n, [(k * e(m), -1), (k * q * e(m), -1)])
                }
            }
        }
    };
    Ok(v)
}

/// The full table, with every entry also evaluated under both primes of a
/// [`ModularEvaluator`]. Immutable once built.
#[derive(Debug)]
pub struct CharTable {
    params: FieldParams,
    irreps: Vec<IrrepLabel>,
    classes: Vec<ClassData>,
    irrep_index: HashMap<IrrepLabel, usize>,
    class_index: HashMap<ConjClassLabel, usize>,
    values: Vec<CycloValue>,
    /// `images[t][row * ncls + col]`: value under target `t`.
    images: [Vec<u64>; 2],
    conj_images: [Vec<u64>; 2],
    evaluator: ModularEvaluator,
}

impl CharTable {
    pub fn new(params: FieldParams, seed: u64) -> Self {
        let irreps = enumerate_irreps(&params);
        let classes = enumerate_classes(&params);
        let evaluator = ModularEvaluator::for_field(&params, seed);
        let mut values = Vec::with_capacity(irreps.len() * classes.len());
        for r in &irreps {
            for c in &classes {
                values.push(char_value(&params, r, &c.label).expect("same field"));
            }
        }
        let image_of = |conj: bool, t: usize| -> Vec<u64> {
            values
                .iter()
                .map(|v| {
                    let v = if conj { v.conj() } else { v.clone() };
                    evaluator.eval(&v).expect("table modulus")[t]
                })
                .collect()
        };
        let images = [image_of(false, 0), image_of(false, 1)];
        let conj_images = [image_of(true, 0), image_of(true, 1)];
        let irrep_index = irreps.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let class_index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.label, i))
            .collect();
        Self {
            params,
            irreps,
            classes,
            irrep_index,
            class_index,
            values,
            images,
            conj_images,
            evaluator,
        }
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn irreps(&self) -> &[IrrepLabel] {
        &self.irreps
    }

    pub fn classes(&self) -> &[ClassData] {
        &self.classes
    }

    pub fn evaluator(&self) -> &ModularEvaluator {
        &self.evaluator
    }

    pub fn irrep_index(&self, r: &IrrepLabel) -> Result<usize> {
        self.irrep_index
            .get(r)
            .copied()
            .ok_or(Error::ParamMismatch {
                left: r.q(),
                right: self.params.q(),
            })
    }

    pub fn class_index(&self, c: &ConjClassLabel) -> Option<usize> {
        self.class_index.get(c).copied()
    }

    pub fn value(&self, row: usize, col: usize) -> &CycloValue {
        &self.values[row * self.classes.len() + col]
    }

    #[inline]
    pub(crate) fn image(&self, t: usize, row: usize, col: usize) -> u64 {
        self.images[t][row * self.classes.len() + col]
    }

    /// Images of `conj(χ_row)` across all classes.
    pub(crate) fn conj_row(&self, t: usize, row: usize) -> &[u64] {
        let ncls = self.classes.len();
        &self.conj_images[t][row * ncls..(row + 1) * ncls]
    }

    #[inline]
    pub(crate) fn conj_image(&self, t: usize, row: usize, col: usize) -> u64 {
        self.conj_images[t][row * self.classes.len() + col]
    }

    /// `(1/|G|) Σ_c |c| χ_r(c) conj(χ_s(c))`, formed as an exact cyclotomic sum and extracted.
    pub fn row_inner_product(&self, r: usize, s: usize) -> Result<i64> {
        let n = self.params.m2();
        let mut acc = CycloValue::zero(n);
        for (c, data) in self.classes.iter().enumerate() {
            CycloValue::mul_acc(
                &mut acc,
                data.size as i64,
                self.value(r, c),
                &self.value(s, c).conj(),
            );
        }
        self.evaluator
            .extract_integer(&acc, self.params.group_order(), 1)
    }

    /// `Σ_r χ_r(c) conj(χ_r(c'))`, which equals `|G| / |c|` when `c = c'` and 0 otherwise.
    pub fn column_inner_product(&self, c: usize, d: usize) -> Result<i64> {
        let n = self.params.m2();
        let mut acc = CycloValue::zero(n);
        for r in 0..self.irreps.len() {
            CycloValue::mul_acc(&mut acc, 1, self.value(r, c), &self.value(r, d).conj());
        }
        self.evaluator
            .extract_integer(&acc, 1, self.params.group_order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::DEFAULT_SEED;
    use crate::irrep::parse_label;

    fn f(q: u64) -> FieldParams {
        FieldParams::from_q(q).unwrap()
    }

    #[test]
    fn class_counts_and_sizes() {
        let cl = enumerate_classes(&f(3));
        assert_eq!(cl.len(), 8);
        assert_eq!(cl.iter().map(|c| c.size).sum::<u64>(), 48);
        let cl = enumerate_classes(&f(5));
        assert_eq!(cl.len(), 24);
        assert_eq!(cl.iter().map(|c| c.size).sum::<u64>(), 480);
        for q in [3, 5, 7, 9, 11, 13] {
            let p = f(q);
            let cl = enumerate_classes(&p);
            assert_eq!(cl.len(), enumerate_irreps(&p).len());
            assert_eq!(cl.iter().map(|c| c.size).sum::<u64>(), p.group_order());
        }
    }

    #[test]
    fn torus_class_map() {
        let p = f(5);
        assert_eq!(ConjClassLabel::torus(&p, 12), ConjClassLabel::Central(2));
        assert_eq!(ConjClassLabel::torus(&p, 11), ConjClassLabel::Elliptic(7));
        assert_eq!(
            ConjClassLabel::diagonal(&p, 3, 1),
            ConjClassLabel::Split(1, 3)
        );
        assert_eq!(
            ConjClassLabel::diagonal(&p, 6, 2),
            ConjClassLabel::Central(2)
        );
    }

    #[test]
    fn value_examples() {
        let p = f(3);
        let cusp = parse_label(&p, "cusp:1").unwrap();
        let v = char_value(&p, &cusp, &ConjClassLabel::Elliptic(1)).unwrap();
        assert_eq!(v, CycloValue::from_terms(8, [(1, -1), (3, -1)]));
        let st = parse_label(&p, "st:0").unwrap();
        assert!(char_value(&p, &st, &ConjClassLabel::NonSemisimple(0))
            .unwrap()
            .is_zero());
        for q in [3, 5, 7] {
            let p = f(q);
            let triv = parse_label(&p, "1d:0").unwrap();
            for c in enumerate_classes(&p) {
                assert_eq!(
                    char_value(&p, &triv, &c.label).unwrap(),
                    CycloValue::integer(p.m2(), 1)
                );
            }
        }
        let other = parse_label(&f(5), "1d:0").unwrap();
        assert!(matches!(
            char_value(&p, &other, &ConjClassLabel::Central(0)),
            Err(Error::ParamMismatch { .. })
        ));
    }

    #[test]
    fn degrees_and_central_column() {
        for q in [3, 5, 7] {
            let p = f(q);
            let t = CharTable::new(p, DEFAULT_SEED);
            let cen0 = t.class_index(&ConjClassLabel::Central(0)).unwrap();
            for (row, r) in t.irreps().iter().enumerate() {
                assert_eq!(
                    *t.value(row, cen0),
                    CycloValue::integer(p.m2(), r.dimension() as i64)
                );
                for i in 0..p.m1() {
                    let col = t.class_index(&ConjClassLabel::Central(i)).unwrap();
                    let omega = r.central_character().exponent() * i;
                    let expect = CycloValue::term(
                        p.m2(),
                        i64::from(omega) * (i64::from(p.q()) + 1),
                        r.dimension() as i64,
                    );
                    assert_eq!(*t.value(row, col), expect);
                }
            }
        }
    }

    #[test]
    fn q3_cuspidal_norm_is_one() {
        let t = CharTable::new(f(3), DEFAULT_SEED);
        let r = t
            .irrep_index(&parse_label(t.params(), "cusp:1").unwrap())
            .unwrap();
        assert_eq!(t.row_inner_product(r, r).unwrap(), 1);
    }

    #[test]
    fn orthogonality_small() {
        for q in [3, 5] {
            let t = CharTable::new(f(q), DEFAULT_SEED);
            let n = t.irreps().len();
            for r in 0..n {
                for s in 0..n {
                    assert_eq!(t.row_inner_product(r, s).unwrap(), i64::from(r == s));
                }
            }
            for c in 0..n {
                for d in 0..n {
                    let expect = if c == d {
                        (t.params().group_order() / t.classes()[c].size) as i64
                    } else {
                        0
                    };
                    assert_eq!(t.column_inner_product(c, d).unwrap(), expect);
                }
            }
        }
    }
}
