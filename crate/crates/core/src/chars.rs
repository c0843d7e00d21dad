//! Characters of `F_q^x` and of the anisotropic torus `T = F_{q^2}^x`.
//!
//! Both groups are cyclic, so a character is stored as its exponent against a
//! fixed generator of the dual group: `MultChar(a)` sends the generator `h` of
//! `F_q^x` to `eta^a` (`eta` a primitive `(q-1)`-th root of unity) and
//! `TorusChar(k)` sends the generator `g` of `F_{q^2}^x` to `zeta^k`
//! (`zeta` primitive of order `q^2-1`, `eta = zeta^(q+1)`).
//!
//! `F_q^x` sits inside `F_{q^2}^x` as the subgroup generated by `h = g^(q+1)`, and
//! the norm (determinant on the torus) sends `g^m` to `h^m`. Every formula in
//! the crate is in terms of these exponents; a different choice of generators
//! only relabels characters by an automorphism of the cyclic groups.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use crate::error::{Error, Result};
use crate::params::FieldParams;

#[inline]
pub(crate) fn reduce(x: i64, m: u32) -> u32 {
    x.rem_euclid(i64::from(m)) as u32
}

/// A character of `F_q^x`, stored as an exponent modulo `q - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultChar {
    a: u32,
    q: u32,
}

impl MultChar {
    /// The character with exponent `a`, reduced modulo `q - 1`.
    pub fn new(params: &FieldParams, a: i64) -> Self {
        Self {
            a: reduce(a, params.m1()),
            q: params.q(),
        }
    }

    /// `a` must already lie in `0..q-1`.
    pub(crate) fn from_reduced(a: u32, q: u32) -> Self {
        debug_assert!(a < q - 1);
        Self { a, q }
    }

    pub fn trivial(params: &FieldParams) -> Self {
        Self::new(params, 0)
    }

    /// The order-two character (the sign of `F_q^x`).
    pub fn sign(params: &FieldParams) -> Self {
        Self::new(params, i64::from(params.m1() / 2))
    }

    pub fn exponent(&self) -> u32 {
        self.a
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    fn m1(&self) -> u32 {
        self.q - 1
    }

    fn check(&self, other: &Self) -> Result<()> {
        check_q(self.q, other.q)
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        self.check(&other)?;
        Ok(self * other)
    }

    pub fn inverse(self) -> Self {
        Self {
            a: reduce(-i64::from(self.a), self.m1()),
            q: self.q,
        }
    }

    pub fn pow(self, e: i64) -> Self {
        Self {
            a: reduce(i64::from(self.a) * e, self.m1()),
            q: self.q,
        }
    }

    /// `-x`: the other solution of `y^2 = x^2`, i.e. `x` times the sign character.
    pub fn neg_char(self) -> Self {
        Self {
            a: (self.a + self.m1() / 2) % self.m1(),
            q: self.q,
        }
    }

    pub fn is_square(&self) -> bool {
        self.a % 2 == 0
    }

    /// All `y` with `y^2 = self`: empty for odd exponents, two characters otherwise.
    pub fn sqrts(self) -> Vec<MultChar> {
        if !self.is_square() {
            return Vec::new();
        }
        let half = self.a / 2;
        let other = half + self.m1() / 2;
        let mut out = vec![
            Self { a: half, q: self.q },
            Self {
                a: other % self.m1(),
                q: self.q,
            },
        ];
        out.sort();
        out
    }

    /// Lifts through the norm: `self ∘ det` as a torus character.
    pub fn compose_det(self) -> TorusChar {
        TorusChar {
            k: self.a * (self.q + 1),
            q: self.q,
        }
    }
}

impl Ord for MultChar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.q, self.a).cmp(&(other.q, other.a))
    }
}

impl PartialOrd for MultChar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for MultChar {
    type Output = MultChar;

    /// Panics if the operands come from different fields; see [`MultChar::try_mul`].
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.q, rhs.q, "characters of different fields");
        Self {
            a: (self.a + rhs.a) % self.m1(),
            q: self.q,
        }
    }
}

impl fmt::Debug for MultChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α{}", self.a)
    }
}

/// A character of the anisotropic torus, stored as an exponent modulo `q^2 - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorusChar {
    k: u32,
    q: u32,
}

impl TorusChar {
    pub fn new(params: &FieldParams, k: i64) -> Self {
        Self {
            k: reduce(k, params.m2()),
            q: params.q(),
        }
    }

    /// `k` must already lie in `0..q^2-1`.
    pub(crate) fn from_reduced(k: u32, q: u32) -> Self {
        debug_assert!(k < q * q - 1);
        Self { k, q }
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    fn m2(&self) -> u32 {
        self.q * self.q - 1
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        check_q(self.q, other.q)?;
        Ok(self * other)
    }

    pub fn inverse(self) -> Self {
        Self {
            k: reduce(-i64::from(self.k), self.m2()),
            q: self.q,
        }
    }

    /// `(theta ∘ det) * self`.
    pub fn twist(self, theta: MultChar) -> Result<Self> {
        check_q(self.q, theta.q())?;
        Ok(self * theta.compose_det())
    }

    /// `Λ ↦ Λ^q`.
    pub fn frobenius(self) -> Self {
        Self {
            k: ((u64::from(self.k) * u64::from(self.q)) % u64::from(self.m2())) as u32,
            q: self.q,
        }
    }

    /// Restriction to the scalar matrices, `x ↦ Λ(xI)`.
    pub fn bar(self) -> MultChar {
        MultChar {
            a: self.k % (self.q - 1),
            q: self.q,
        }
    }

    /// `Some(β)` when `self = β ∘ det`, `None` when `self` is indecomposable.
    pub fn decompose(self) -> Option<MultChar> {
        (self.k % (self.q + 1) == 0).then(|| MultChar {
            a: self.k / (self.q + 1),
            q: self.q,
        })
    }

    pub fn is_decomposable(&self) -> bool {
        self.k % (self.q + 1) == 0
    }

    /// Smallest exponent in the Frobenius orbit `{k, kq}`.
    pub fn orbit_min(self) -> u32 {
        self.k.min(self.frobenius().k)
    }
}

impl Ord for TorusChar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.q, self.k).cmp(&(other.q, other.k))
    }
}

impl PartialOrd for TorusChar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for TorusChar {
    type Output = TorusChar;

    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.q, rhs.q, "characters of different fields");
        Self {
            k: (self.k + rhs.k) % self.m2(),
            q: self.q,
        }
    }
}

impl Add<MultChar> for TorusChar {
    type Output = TorusChar;

    /// Twist by `theta ∘ det` (written additively, as exponents add).
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, theta: MultChar) -> Self {
        self * theta.compose_det()
    }
}

impl Neg for TorusChar {
    type Output = TorusChar;

    fn neg(self) -> Self {
        self.inverse()
    }
}

impl fmt::Debug for TorusChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ{}", self.k)
    }
}

fn check_q(left: u32, right: u32) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::ParamMismatch { left, right })
    }
}
