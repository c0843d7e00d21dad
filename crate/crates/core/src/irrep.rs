//! Labels for the irreducible representations of `GL2(F_q)`.
//!
//! There are four families: one-dimensional `α ∘ det`, the twisted Steinberg
//! representations (dimension `q`), principal series indexed by an unordered
//! pair of distinct characters (dimension `q+1`), and cuspidal representations
//! indexed by a Frobenius orbit `{Λ, Λ^q}` of indecomposable torus characters
//! (dimension `q-1`).
//!
//! Labels print and parse in the grammar `1d:<a>`, `st:<a>`, `ps:<a>,<b>`,
//! `cusp:<k>`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::chars::{MultChar, TorusChar};
use crate::error::{Error, Result};
use crate::params::FieldParams;

/// Canonical label of an irreducible representation.
///
/// The derived ordering (family, then residues) is the global label order used
/// for enumeration and for all printed output.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrrepLabel {
    OneDim(MultChar),
    Steinberg(MultChar),
    /// Invariant: first exponent < second exponent.
    PrincipalSeries(MultChar, MultChar),
    /// Invariant: indecomposable, exponent minimal in its Frobenius orbit.
    Cuspidal(TorusChar),
}

/// The four families, in label order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    OneDim,
    Steinberg,
    PrincipalSeries,
    Cuspidal,
}

impl IrrepLabel {
    /// Principal series for the unordered pair `{a, b}`.
    pub fn principal(a: MultChar, b: MultChar) -> Result<Self> {
        if a.q() != b.q() {
            return Err(Error::ParamMismatch {
                left: a.q(),
                right: b.q(),
            });
        }
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Self::PrincipalSeries(a, b)),
            std::cmp::Ordering::Greater => Ok(Self::PrincipalSeries(b, a)),
            std::cmp::Ordering::Equal => Err(Error::DegeneratePrincipalSeries(a.exponent())),
        }
    }

    /// Cuspidal representation attached to the orbit of `l`.
    pub fn cuspidal(l: TorusChar) -> Result<Self> {
        if l.is_decomposable() {
            return Err(Error::DecomposableCuspidalLabel(l.exponent()));
        }
        Ok(Self::Cuspidal(canonical_torus(l)))
    }

    pub fn family(&self) -> Family {
        match self {
            Self::OneDim(_) => Family::OneDim,
            Self::Steinberg(_) => Family::Steinberg,
            Self::PrincipalSeries(..) => Family::PrincipalSeries,
            Self::Cuspidal(_) => Family::Cuspidal,
        }
    }

    pub fn q(&self) -> u32 {
        match self {
            Self::OneDim(a) | Self::Steinberg(a) | Self::PrincipalSeries(a, _) => a.q(),
            Self::Cuspidal(l) => l.q(),
        }
    }

    pub fn dimension(&self) -> u64 {
        let q = u64::from(self.q());
        match self {
            Self::OneDim(_) => 1,
            Self::Steinberg(_) => q,
            Self::PrincipalSeries(..) => q + 1,
            Self::Cuspidal(_) => q - 1,
        }
    }

    /// The character by which the centre acts.
    pub fn central_character(&self) -> MultChar {
        match *self {
            Self::OneDim(a) | Self::Steinberg(a) => a * a,
            Self::PrincipalSeries(a, b) => a * b,
            Self::Cuspidal(l) => l.bar(),
        }
    }

    /// Contragredient representation.
    pub fn dual(&self) -> Self {
        match *self {
            Self::OneDim(a) => Self::OneDim(a.inverse()),
            Self::Steinberg(a) => Self::Steinberg(a.inverse()),
            Self::PrincipalSeries(a, b) => {
                Self::principal(a.inverse(), b.inverse()).expect("inversion is injective")
            }
            Self::Cuspidal(l) => Self::Cuspidal(canonical_torus(l.inverse())),
        }
    }

    /// `(θ ∘ det) ⊗ self`.
    pub fn twist(&self, theta: MultChar) -> Self {
        match *self {
            Self::OneDim(a) => Self::OneDim(a * theta),
            Self::Steinberg(a) => Self::Steinberg(a * theta),
            Self::PrincipalSeries(a, b) => {
                Self::principal(a * theta, b * theta).expect("twisting is injective")
            }
            Self::Cuspidal(l) => Self::Cuspidal(canonical_torus(l + theta)),
        }
    }
}

fn canonical_torus(l: TorusChar) -> TorusChar {
    let fr = l.frobenius();
    if fr < l {
        fr
    } else {
        l
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OneDim(a) => write!(f, "1d:{}", a.exponent()),
            Self::Steinberg(a) => write!(f, "st:{}", a.exponent()),
            Self::PrincipalSeries(a, b) => write!(f, "ps:{},{}", a.exponent(), b.exponent()),
            Self::Cuspidal(l) => write!(f, "cusp:{}", l.exponent()),
        }
    }
}

impl fmt::Debug for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An uncanonicalized label as typed by a user: residues may be out of range,
/// unordered, or name the other member of a Frobenius orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RawLabel {
    OneDim(i64),
    Steinberg(i64),
    PrincipalSeries(i64, i64),
    Cuspidal(i64),
}

impl RawLabel {
    pub fn canonicalize(&self, params: &FieldParams) -> Result<IrrepLabel> {
        let m = |a: i64| MultChar::new(params, a);
        match *self {
            Self::OneDim(a) => Ok(IrrepLabel::OneDim(m(a))),
            Self::Steinberg(a) => Ok(IrrepLabel::Steinberg(m(a))),
            Self::PrincipalSeries(a, b) => IrrepLabel::principal(m(a), m(b)),
            Self::Cuspidal(k) => IrrepLabel::cuspidal(TorusChar::new(params, k)),
        }
    }
}

impl From<IrrepLabel> for RawLabel {
    fn from(label: IrrepLabel) -> Self {
        let e = |a: MultChar| i64::from(a.exponent());
        match label {
            IrrepLabel::OneDim(a) => Self::OneDim(e(a)),
            IrrepLabel::Steinberg(a) => Self::Steinberg(e(a)),
            IrrepLabel::PrincipalSeries(a, b) => Self::PrincipalSeries(e(a), e(b)),
            IrrepLabel::Cuspidal(l) => Self::Cuspidal(i64::from(l.exponent())),
        }
    }
}

impl fmt::Display for RawLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OneDim(a) => write!(f, "1d:{a}"),
            Self::Steinberg(a) => write!(f, "st:{a}"),
            Self::PrincipalSeries(a, b) => write!(f, "ps:{a},{b}"),
            Self::Cuspidal(k) => write!(f, "cusp:{k}"),
        }
    }
}

impl FromStr for RawLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::LabelParse(s.to_string());
        let (tag, body) = s.trim().split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
        match tag.trim() {
            "1d" => Ok(Self::OneDim(num(body)?)),
            "st" => Ok(Self::Steinberg(num(body)?)),
            "ps" => {
                let (a, b) = body.split_once(',').ok_or_else(bad)?;
                Ok(Self::PrincipalSeries(num(a)?, num(b)?))
            }
            "cusp" => Ok(Self::Cuspidal(num(body)?)),
            _ => Err(bad()),
        }
    }
}

/// Parses and canonicalizes a label in one step.
pub fn parse_label(params: &FieldParams, s: &str) -> Result<IrrepLabel> {
    s.parse::<RawLabel>()?.canonicalize(params)
}

/// All irreducibles in label order: `q-1` one-dimensional, `q-1` Steinberg,
/// `(q-1)(q-2)/2` principal series, `q(q-1)/2` cuspidal.
pub fn enumerate_irreps(params: &FieldParams) -> Vec<IrrepLabel> {
    let m1 = params.m1();
    let m = |a: u32| MultChar::new(params, a.into());
    let mut out = Vec::with_capacity(params.class_count());
    out.extend((0..m1).map(|a| IrrepLabel::OneDim(m(a))));
    out.extend((0..m1).map(|a| IrrepLabel::Steinberg(m(a))));
    for a in 0..m1 {
        for b in a + 1..m1 {
            out.push(IrrepLabel::PrincipalSeries(m(a), m(b)));
        }
    }
    for k in 0..params.m2() {
        let l = TorusChar::new(params, k.into());
        if !l.is_decomposable() && l.orbit_min() == k {
            out.push(IrrepLabel::Cuspidal(l));
        }
    }
    out
}

/// `{ ps(γ1, γ2) : γ1 ≠ γ2, γ1 γ2 = x }`.
pub fn build_s(x: MultChar) -> BTreeSet<IrrepLabel> {
    let m1 = x.q() - 1;
    let xa = x.exponent();
    (0..m1)
        .filter_map(|b1| {
            let b2 = (xa + m1 - b1) % m1;
            (b1 < b2).then(|| {
                IrrepLabel::PrincipalSeries(
                    MultChar::from_reduced(b1, x.q()),
                    MultChar::from_reduced(b2, x.q()),
                )
            })
        })
        .collect()
}

/// `{ cusp(Λ) : Λ̄ = x, Λ indecomposable }`.
pub fn build_w(x: MultChar) -> BTreeSet<IrrepLabel> {
    let q = x.q();
    let m1 = q - 1;
    (0..=q)
        .map(|j| x.exponent() + j * m1)
        .filter(|k| k % (q + 1) != 0)
        .map(|k| IrrepLabel::Cuspidal(canonical_torus(TorusChar::from_reduced(k, q))))
        .collect()
}

/// `W(Λ̄)` with `cusp(Λ)` removed; for decomposable `Λ` nothing is removed.
pub fn build_v(l: TorusChar) -> BTreeSet<IrrepLabel> {
    let mut w = build_w(l.bar());
    if let Ok(own) = IrrepLabel::cuspidal(l) {
        w.remove(&own);
    }
    w
}
