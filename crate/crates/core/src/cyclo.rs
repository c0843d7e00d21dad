//! Formal integer combinations of `N`-th roots of unity, and exact extraction of
//! rational integers from them.
//!
//! A [`CycloValue`] is an element of the group ring `Z[Z/N]`, mapped onto
//! `Z[ζ_N]` by sending the basis element `e` to `ζ^e`. We never reduce modulo
//! the cyclotomic polynomial. Instead, when a combination is known to equal a
//! rational integer `r` (an inner product of characters, say), we evaluate it
//! at an element `w` of exact order `N` in `F_P` for a prime `P ≡ 1 (mod N)`.
//! That map is a ring homomorphism `Z[ζ_N] → F_P`, so it sends the value to
//! `r mod P`, and `r` is recovered by a symmetric lift once `P > 2|r|`.
//! A second, independent prime checks every extraction.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::params::{is_prime, FieldParams};

/// `Σ c_e ζ^e` with exponents modulo `N`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloValue {
    modulus: u32,
    coeffs: BTreeMap<u32, i64>,
}

impl CycloValue {
    pub fn zero(modulus: u32) -> Self {
        assert!(modulus > 0);
        Self {
            modulus,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn integer(modulus: u32, c: i64) -> Self {
        let mut v = Self::zero(modulus);
        v.add_term(0, c);
        v
    }

    /// `c · ζ^e`.
    pub fn term(modulus: u32, e: i64, c: i64) -> Self {
        let mut v = Self::zero(modulus);
        v.add_term(e, c);
        v
    }

    /// `ζ^e`.
    pub fn root(modulus: u32, e: i64) -> Self {
        Self::term(modulus, e, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(modulus: u32, terms: I) -> Self {
        let mut v = Self::zero(modulus);
        for (e, c) in terms {
            v.add_term(e, c);
        }
        v
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(exponent, coefficient)` pairs in exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, e: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = e.rem_euclid(i64::from(self.modulus)) as u32;
        let slot = self.coeffs.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.coeffs.remove(&e);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.modulus, other.modulus))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.into(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.into(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.modulus);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(i64::from(e1) + i64::from(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Complex conjugate: `ζ^e ↦ ζ^{-e}`.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero(self.modulus);
        for (e, c) in self.terms() {
            out.add_term(-i64::from(e), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.modulus);
        for (e, c) in self.terms() {
            out.add_term(e.into(), c * k);
        }
        out
    }

    /// Accumulates `k · self · other` into `acc` without intermediate allocation.
    pub fn mul_acc(acc: &mut Self, k: i64, a: &Self, b: &Self) {
        assert!(acc.modulus == a.modulus && a.modulus == b.modulus);
        for (e1, c1) in a.terms() {
            for (e2, c2) in b.terms() {
                acc.add_term(i64::from(e1) + i64::from(e2), k * c1 * c2);
            }
        }
    }

    /// Sum of the absolute values of the coefficients (an upper bound on `|value|`).
    pub fn l1_norm(&self) -> i64 {
        self.coeffs.values().map(|c| c.abs()).sum()
    }
}

impl Add for &CycloValue {
    type Output = CycloValue;

    fn add(self, rhs: Self) -> CycloValue {
        self.try_add(rhs).expect("cyclotomic moduli differ")
    }
}

impl Sub for &CycloValue {
    type Output = CycloValue;

    fn sub(self, rhs: Self) -> CycloValue {
        self.try_sub(rhs).expect("cyclotomic moduli differ")
    }
}

impl Mul for &CycloValue {
    type Output = CycloValue;

    fn mul(self, rhs: Self) -> CycloValue {
        self.try_mul(rhs).expect("cyclotomic moduli differ")
    }
}

impl Neg for &CycloValue {
    type Output = CycloValue;

    fn neg(self) -> CycloValue {
        self.scale(-1)
    }
}

impl fmt::Debug for CycloValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({e}, {c})")?;
        }
        write!(f, "] mod {}", self.modulus)
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// One evaluation target: a prime `P ≡ 1 (mod N)` and `w ∈ F_P` of exact order `N`,
/// with the powers of `w` tabulated.
#[derive(Debug, Clone)]
pub struct RootOfUnityMod {
    prime: u64,
    root: u64,
    powers: Vec<u64>,
}

impl RootOfUnityMod {
    /// The smallest prime `P ≡ 1 (mod n)` strictly above `above`, with a root of
    /// order `n` drawn from `rng`.
    fn search(n: u32, above: u64, rng: &mut ChaCha8Rng) -> Self {
        let n64 = u64::from(n);
        let mut prime = (above / n64 + 1) * n64 + 1;
        while !is_prime(prime) {
            prime += n64;
        }
        let factors = prime_factors(n64);
        let root = loop {
            let x = rng.gen_range(2..prime);
            let w = pow_mod(x, (prime - 1) / n64, prime);
            if w != 0 && factors.iter().all(|&l| pow_mod(w, n64 / l, prime) != 1) {
                break w;
            }
        };
        let mut powers = Vec::with_capacity(n as usize);
        let mut acc = 1 % prime;
        for _ in 0..n {
            powers.push(acc);
            acc = mul_mod(acc, root, prime);
        }
        debug_assert_eq!(acc, 1 % prime);
        Self {
            prime,
            root,
            powers,
        }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn root(&self) -> u64 {
        self.root
    }

    /// `w^e mod P`, for `e` already reduced modulo `N`.
    #[inline]
    pub fn power(&self, e: u32) -> u64 {
        self.powers[e as usize]
    }

    fn reduce_int(&self, c: i64) -> u64 {
        c.rem_euclid(self.prime as i64) as u64
    }

    fn eval(&self, v: &CycloValue) -> u64 {
        v.terms().fold(0, |acc, (e, c)| {
            (acc + mul_mod(self.reduce_int(c), self.power(e), self.prime)) % self.prime
        })
    }

    /// `image / divisor` lifted to the symmetric range `(-P/2, P/2]`.
    fn lift(&self, image: u64, divisor: u64) -> i128 {
        let inv = pow_mod(divisor % self.prime, self.prime - 2, self.prime);
        let r = mul_mod(image, inv, self.prime);
        if r > self.prime / 2 {
            i128::from(r) - i128::from(self.prime)
        } else {
            i128::from(r)
        }
    }
}

/// Ring homomorphisms `Z[ζ_N] → F_P` for two independent primes, used to read off
/// integers from cyclotomic sums.
///
/// Counts every extraction it performs; see [`ModularEvaluator::extractions`].
#[derive(Debug)]
pub struct ModularEvaluator {
    modulus: u32,
    targets: [RootOfUnityMod; 2],
    extractions: AtomicU64,
    disagreements: AtomicU64,
}

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x6c32_7465_6e73;

impl ModularEvaluator {
    /// Evaluator for `N = q^2 - 1`, with both primes above
    /// `2 |G| (q+1)^3`, which bounds every character sum formed in this crate.
    pub fn for_field(params: &FieldParams, seed: u64) -> Self {
        let q1 = u64::from(params.q()) + 1;
        let bound = 2 * params.group_order() * q1 * q1 * q1;
        Self::new(params.m2(), bound, seed)
    }

    /// Evaluator for modulus `n` with both primes exceeding `above`.
    pub fn new(n: u32, above: u64, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let first = RootOfUnityMod::search(n, above, &mut rng);
        let second = RootOfUnityMod::search(n, first.prime, &mut rng);
        Self {
            modulus: n,
            targets: [first, second],
            extractions: AtomicU64::new(0),
            disagreements: AtomicU64::new(0),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn targets(&self) -> &[RootOfUnityMod; 2] {
        &self.targets
    }

    /// Number of integer extractions performed so far (each one checked by both primes).
    pub fn extractions(&self) -> u64 {
        self.extractions.load(Ordering::Relaxed)
    }

    /// Number of extractions whose two primes disagreed or left the bound.
    pub fn disagreements(&self) -> u64 {
        self.disagreements.load(Ordering::Relaxed)
    }

    /// Images of `v` under both homomorphisms.
    pub fn eval(&self, v: &CycloValue) -> Result<[u64; 2]> {
        if v.modulus() != self.modulus {
            return Err(Error::ModulusMismatch(v.modulus(), self.modulus));
        }
        Ok([self.targets[0].eval(v), self.targets[1].eval(v)])
    }

    /// Recovers `r = s / divisor`, which the caller guarantees is an integer with
    /// `|r| <= bound`.
    pub fn extract_integer(&self, s: &CycloValue, divisor: u64, bound: u64) -> Result<i64> {
        let images = self.eval(s)?;
        self.extract_from_images(images, divisor, bound)
    }

    /// As [`Self::extract_integer`], starting from images already computed with
    /// [`Self::eval`] (or assembled from images of the summands).
    pub fn extract_from_images(&self, images: [u64; 2], divisor: u64, bound: u64) -> Result<i64> {
        let needed = 2 * u128::from(divisor) * u128::from(bound);
        let smallest = self.targets[0].prime;
        if u128::from(smallest) <= needed || divisor == 0 {
            return Err(Error::PrecisionExceeded {
                needed,
                prime: smallest,
            });
        }
        self.extractions.fetch_add(1, Ordering::Relaxed);
        let first = self.targets[0].lift(images[0], divisor);
        let second = self.targets[1].lift(images[1], divisor);
        if first != second || first.unsigned_abs() > u128::from(bound) {
            self.disagreements.fetch_add(1, Ordering::Relaxed);
            return Err(Error::NotAnInteger {
                bound,
                first,
                second,
            });
        }
        Ok(first as i64)
    }
}
