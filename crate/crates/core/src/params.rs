//! Validated parameters for one odd prime power `q`.

use crate::error::{Error, Result};

/// Parameter pack for `GL2(F_q)`.
///
/// `m1 = q - 1` is the order of `F_q^x` (and of its character group), `m2 = q^2 - 1`
/// the order of the anisotropic torus `F_{q^2}^x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldParams {
    p: u32,
    n: u32,
    q: u32,
}

pub(crate) fn is_prime(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    if x % 2 == 0 {
        return x == 2;
    }
    let mut d = 3;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldParams {
    /// Builds the pack for `q = p^n`.
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadExponent(n));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        let q = p.checked_pow(n).unwrap_or(u64::MAX);
        if q > u64::from(u16::MAX) {
            return Err(Error::FieldTooLarge(q));
        }
        Ok(Self {
            p: p as u32,
            n,
            q: q as u32,
        })
    }

    /// Builds the pack from `q` directly, factoring it as a prime power.
    pub fn from_q(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        if q > u64::from(u16::MAX) {
            return Err(Error::FieldTooLarge(q));
        }
        let p = (2..=q).find(|d| q % d == 0).unwrap_or(q);
        let mut rest = q;
        let mut n = 0;
        while rest % p == 0 {
            rest /= p;
            n += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        if p == 2 {
            return Err(Error::EvenCharacteristic(p));
        }
        Self::new(p, n)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `q - 1`.
    pub fn m1(&self) -> u32 {
        self.q - 1
    }

    /// `q^2 - 1`.
    pub fn m2(&self) -> u32 {
        self.q * self.q - 1
    }

    /// `|GL2(F_q)| = q (q-1)^2 (q+1)`.
    pub fn group_order(&self) -> u64 {
        let q = u64::from(self.q);
        q * (q - 1) * (q - 1) * (q + 1)
    }

    /// Number of conjugacy classes, equal to the number of irreducibles.
    pub fn class_count(&self) -> usize {
        self.m2() as usize
    }
}
