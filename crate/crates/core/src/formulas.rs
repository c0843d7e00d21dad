//! Closed-form decompositions.
//!
//! [`tensor_decompose`] implements the complete table of tensor products of two
//! irreducibles. [`ind_tm1_decompose`], [`ind_t1_decompose`] and
//! [`ind_zu_decompose`] decompose the representations induced from the
//! anisotropic torus, the split torus and from `ZU` (centre times unipotent
//! radical, with a nontrivial additive character on `U`).
//!
//! [`pantoja_tensor`] reaches the same tensor products by a second route: each
//! product of two representations of dimension > 1 is written as a torus
//! induction plus or minus a correction, and each torus induction is in turn
//! written as a `ZU`-induction plus or minus a correction. Intermediate results
//! are virtual; nonnegativity is checked only at the end.
//!
//! Notation in the comments: characters of `F_q^x` are written additively
//! (their exponents), `-θ` is `θ` times the sign character, `S(x)`, `W(x)`,
//! `V(Λ)` are the sets built in [`crate::irrep`].

use crate::chars::{MultChar, TorusChar};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::irrep::{build_s, build_v, build_w, IrrepLabel};

fn same_field(r1: &IrrepLabel, r2: &IrrepLabel) -> Result<()> {
    if r1.q() == r2.q() {
        Ok(())
    } else {
        Err(Error::ParamMismatch {
            left: r1.q(),
            right: r2.q(),
        })
    }
}

fn steinbergs_over_sqrts(d: &mut Decomposition, x: MultChar) {
    d.add_all(x.sqrts().into_iter().map(IrrepLabel::Steinberg));
}

/// `Ind_B^G(μ, ν)`: principal series when `μ ≠ ν`, else `1d(μ) ⊕ st(μ)`.
fn borel_induced(d: &mut Decomposition, mu: MultChar, nu: MultChar) {
    match IrrepLabel::principal(mu, nu) {
        Ok(ps) => d.add(ps, 1),
        Err(_) => {
            d.add(IrrepLabel::OneDim(mu), 1);
            d.add(IrrepLabel::Steinberg(mu), 1);
        }
    }
}

fn cusp(l: TorusChar) -> IrrepLabel {
    IrrepLabel::cuspidal(l).expect("indecomposable by construction")
}

/// Decomposition of `r1 ⊗ r2` into irreducibles.
pub fn tensor_decompose(r1: &IrrepLabel, r2: &IrrepLabel) -> Result<Decomposition> {
    use IrrepLabel::*;

    same_field(r1, r2)?;
    let (r1, r2) = if r1.family() <= r2.family() {
        (*r1, *r2)
    } else {
        (*r2, *r1)
    };
    let mut d = Decomposition::new();
    match (r1, r2) {
        (OneDim(a), other) => d.add(other.twist(a), 1),

        (Steinberg(a), Steinberg(c)) => {
            let s = a * c;
            d.add(OneDim(s), 1);
            d.add(Steinberg(s), 1);
            d.add(Steinberg(s.neg_char()), 1);
            d.add_all(build_s(s * s));
            d.add_all(build_v(s.compose_det()));
        }

        (Steinberg(a), PrincipalSeries(c, e)) => {
            let x = a * a * c * e;
            let doubled = IrrepLabel::principal(a * c, a * e)?;
            steinbergs_over_sqrts(&mut d, x);
            d.add(doubled, 2);
            d.add_all(build_s(x).into_iter().filter(|v| *v != doubled));
            d.add_all(build_w(x));
        }

        (Steinberg(a), Cuspidal(l)) => {
            let x = a * a * l.bar();
            steinbergs_over_sqrts(&mut d, x);
            d.add_all(build_s(x));
            d.add_all(build_v(l + a));
        }

        (PrincipalSeries(a, b), PrincipalSeries(c, e)) => {
            let x = a * b * c * e;
            steinbergs_over_sqrts(&mut d, x);
            d.add_all(build_s(x));
            d.add_all(build_w(x));
            borel_induced(&mut d, a * c, b * e);
            borel_induced(&mut d, a * e, b * c);
        }

        (PrincipalSeries(a, b), Cuspidal(l)) => {
            let x = a * b * l.bar();
            steinbergs_over_sqrts(&mut d, x);
            d.add_all(build_s(x));
            d.add_all(build_w(x));
        }

        (Cuspidal(l), Cuspidal(f)) => {
            let x = l.bar() * f.bar();
            let prod = l * f;
            let twisted = l * f.frobenius();
            d.add_all(build_s(x));
            match (prod.decompose(), twisted.decompose()) {
                (None, None) => {
                    steinbergs_over_sqrts(&mut d, x);
                    let (drop1, drop2) = (cusp(prod), cusp(twisted));
                    d.add_all(
                        build_w(x)
                            .into_iter()
                            .filter(|w| *w != drop1 && *w != drop2),
                    );
                }
                (None, Some(theta)) => {
                    d.add(OneDim(theta), 1);
                    d.add(Steinberg(theta.neg_char()), 1);
                    let drop = cusp(prod);
                    d.add_all(build_w(x).into_iter().filter(|w| *w != drop));
                }
                (Some(theta), None) => {
                    d.add(OneDim(theta), 1);
                    d.add(Steinberg(theta.neg_char()), 1);
                    let drop = cusp(twisted);
                    d.add_all(build_w(x).into_iter().filter(|w| *w != drop));
                }
                (Some(theta), Some(theta2)) => {
                    assert_eq!(
                        theta2,
                        theta.neg_char(),
                        "both products decomposable but θ' ≠ -θ"
                    );
                    d.add(OneDim(theta), 1);
                    d.add(OneDim(theta2), 1);
                    d.add_all(build_w(x));
                }
            }
        }

        _ => unreachable!("pair ordered by family"),
    }
    Ok(d)
}

/// Decomposition of `Ind_{T_{-1}}^G Λ` (dimension `q(q-1)`).
pub fn ind_tm1_decompose(l: TorusChar) -> Decomposition {
    let mut d = Decomposition::new();
    let x = l.bar();
    d.add_all(build_s(x));
    match l.decompose() {
        Some(beta) => {
            d.add(IrrepLabel::OneDim(beta), 1);
            d.add(IrrepLabel::Steinberg(beta.neg_char()), 1);
            // V of a decomposable character is all of W(Λ̄)
            d.add_all(build_w(x));
        }
        None => {
            steinbergs_over_sqrts(&mut d, x);
            d.add_all(build_v(l));
        }
    }
    d
}

/// Decomposition of `Ind_{T_1}^G (α, β)` (dimension `q(q+1)`).
pub fn ind_t1_decompose(a: MultChar, b: MultChar) -> Result<Decomposition> {
    a.try_mul(b)?;
    let mut d = Decomposition::new();
    let x = a * b;
    if a == b {
        d.add(IrrepLabel::OneDim(a), 1);
        d.add(IrrepLabel::Steinberg(a), 2);
        d.add(IrrepLabel::Steinberg(a.neg_char()), 1);
    } else {
        d.add(IrrepLabel::principal(a, b)?, 1);
        steinbergs_over_sqrts(&mut d, x);
    }
    d.add_all(build_s(x));
    d.add_all(build_w(x));
    Ok(d)
}

/// Decomposition of `Ind_{ZU}^G (ρψ)` (dimension `q^2 - 1`); multiplicity free and
/// independent of the nontrivial `ψ`.
pub fn ind_zu_decompose(rho: MultChar) -> Decomposition {
    let mut d = Decomposition::new();
    steinbergs_over_sqrts(&mut d, rho);
    d.add_all(build_s(rho));
    d.add_all(build_w(rho));
    d
}

/// `Ind_{T_{-1}}^G Λ` assembled from `Ind_{ZU}^G(Λ̄ψ)` and a correction. Virtual.
pub fn ind_tm1_via_zu(l: TorusChar) -> Decomposition {
    let mut d = Decomposition::new_virtual();
    d.add_scaled(&ind_zu_decompose(l.bar()), 1);
    match l.decompose() {
        None => d.add(cusp(l), -1),
        Some(alpha) => {
            d.add(IrrepLabel::Steinberg(alpha), -1);
            d.add(IrrepLabel::OneDim(alpha), 1);
        }
    }
    d
}

/// `Ind_{T_1}^G (α, β)` assembled from `Ind_{ZU}^G(αβψ)` and a correction. Virtual.
pub fn ind_t1_via_zu(a: MultChar, b: MultChar) -> Result<Decomposition> {
    a.try_mul(b)?;
    let mut d = Decomposition::new_virtual();
    d.add_scaled(&ind_zu_decompose(a * b), 1);
    if a == b {
        d.add(IrrepLabel::Steinberg(a), 1);
        d.add(IrrepLabel::OneDim(a), 1);
    } else {
        d.add(IrrepLabel::principal(a, b)?, 1);
    }
    Ok(d)
}

/// `r1 ⊗ r2` through torus inductions, each of which goes through `ZU`.
///
/// Products with a one-dimensional factor are plain twists and are delegated
/// to [`tensor_decompose`].
pub fn pantoja_tensor(r1: &IrrepLabel, r2: &IrrepLabel) -> Result<Decomposition> {
    use IrrepLabel::*;

    same_field(r1, r2)?;
    let (r1, r2) = if r1.family() <= r2.family() {
        (*r1, *r2)
    } else {
        (*r2, *r1)
    };
    let mut d = Decomposition::new_virtual();
    match (r1, r2) {
        (OneDim(_), _) => return tensor_decompose(&r1, &r2),

        (Steinberg(a), Steinberg(c)) => {
            d.add_scaled(&ind_tm1_via_zu((a * c).compose_det()), 1);
            d.add(Steinberg(a * c), 1);
        }

        (Steinberg(a), PrincipalSeries(c, e)) => {
            d.add_scaled(&ind_t1_via_zu(a * c, a * e)?, 1);
        }

        (Steinberg(a), Cuspidal(l)) => {
            d.add_scaled(&ind_tm1_via_zu(l + a), 1);
        }

        (PrincipalSeries(a, b), PrincipalSeries(c, e)) => {
            d.add_scaled(&ind_t1_via_zu(a * c, b * e)?, 1);
            borel_induced(&mut d, b * c, a * e);
        }

        (PrincipalSeries(a, b), Cuspidal(l)) => {
            d.add_scaled(&ind_t1_via_zu(a * b, l.bar())?, 1);
            let mut correction = Decomposition::new();
            borel_induced(&mut correction, a * b, l.bar());
            d.add_scaled(&correction, -1);
        }

        (Cuspidal(l), Cuspidal(f)) => {
            d.add_scaled(&ind_tm1_via_zu(l * f.frobenius()), 1);
            let prod = l * f;
            match prod.decompose() {
                None => d.add(cusp(prod), -1),
                Some(theta) => {
                    d.add(Steinberg(theta), -1);
                    d.add(OneDim(theta), 1);
                }
            }
        }

        _ => unreachable!("pair ordered by family"),
    }
    d.into_genuine()
}
