//! Exact arithmetic in cyclotomic rings Z[zeta_N], modeled as integer
//! polynomials modulo the N-th cyclotomic polynomial.
//!
//! The point of this module is that square roots of small integers have
//! exact cyclotomic models — the Gauss sum for `sqrt(p*)`, and
//! `zeta_8 + zeta_8^{-1}` / `zeta_8 + zeta_8^3` for `sqrt(2)` / `sqrt(-2)`
//! — so the half-cyclotomic polynomials downstream come out with exact
//! integer structure instead of floating-point guesses.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numthy::{cyclotomic, is_prime, legendre};
use crate::polyarith::IntegerPolynomial;

/// An element of Z[zeta_N], stored as its residue modulo the N-th
/// cyclotomic polynomial (degree < phi(N)).
///
/// Elements at different levels never mix implicitly; use
/// [`embed`](CyclotomicElement::embed) to move into a larger field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicElement {
    level: u64,
    rep: IntegerPolynomial,
}

impl CyclotomicElement {
    /// Wraps a polynomial in X as an element at the given level, reducing
    /// modulo the cyclotomic polynomial.
    pub fn new(level: u64, poly: IntegerPolynomial) -> Self {
        assert!(level >= 1, "level must be positive");
        let rep = poly.rem_monic(&cyclotomic(level));
        CyclotomicElement { level, rep }
    }

    pub fn from_integer(level: u64, c: BigInt) -> Self {
        Self::new(level, IntegerPolynomial::constant(c))
    }

    pub fn zero(level: u64) -> Self {
        Self::from_integer(level, BigInt::zero())
    }

    pub fn one(level: u64) -> Self {
        Self::from_integer(level, BigInt::from(1))
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Residue representative, degree < phi(level).
    pub fn rep(&self) -> &IntegerPolynomial {
        &self.rep
    }

    /// The rational integer this element equals, if it is constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.rep.degree() {
            None => Some(BigInt::zero()),
            Some(0) => Some(self.rep.coeff(0)),
            _ => None,
        }
    }

    fn check_level(&self, rhs: &Self) -> Result<()> {
        if self.level != rhs.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: rhs.level,
            });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_level(rhs)?;
        Ok(CyclotomicElement {
            level: self.level,
            rep: &self.rep + &rhs.rep,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_level(rhs)?;
        Ok(CyclotomicElement {
            level: self.level,
            rep: &self.rep - &rhs.rep,
        })
    }

    pub fn neg(&self) -> Self {
        CyclotomicElement {
            level: self.level,
            rep: -&self.rep,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_level(rhs)?;
        Ok(CyclotomicElement {
            level: self.level,
            rep: (&self.rep * &rhs.rep).rem_monic(&cyclotomic(self.level)),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.level);
        for _ in 0..e {
            acc = acc.mul(self).expect("same level");
        }
        acc
    }

    /// The same algebraic number at a larger level: requires
    /// `self.level | target` and maps `zeta_N` to `zeta_M^(M/N)`.
    pub fn embed(&self, target: u64) -> Result<Self> {
        if target % self.level != 0 {
            return Err(Error::NotDivisible {
                level: self.level,
                target,
            });
        }
        let k = (target / self.level) as usize;
        Ok(CyclotomicElement::new(target, self.rep.compose_power(k)))
    }
}

/// `zeta_N^k`, with `k` reduced modulo `N` (negative `k` allowed).
pub fn zeta_power(level: u64, k: i64) -> CyclotomicElement {
    assert!(level >= 1, "level must be positive");
    let e = k.rem_euclid(level as i64) as usize;
    CyclotomicElement::new(level, IntegerPolynomial::monomial(e))
}

/// The quadratic Gauss sum `sum_a (a/p) zeta_p^a` at level `p`.
///
/// Its square is exactly `p*`, which makes it the canonical exact model of
/// `sqrt(p*)` used by the quadratic descent.
pub fn gauss_sum(p: u64) -> CyclotomicElement {
    assert!(p > 2 && is_prime(p), "gauss_sum requires an odd prime");
    let mut coeffs = vec![BigInt::zero(); p as usize];
    for a in 1..p {
        coeffs[a as usize] = BigInt::from(legendre(a as i64, p));
    }
    CyclotomicElement::new(p, IntegerPolynomial::from_coeffs(coeffs))
}

/// `zeta_8 + zeta_8^{-1}`, an exact model of `sqrt(2)` at level 8.
pub fn sqrt_two_elem() -> CyclotomicElement {
    zeta_power(8, 1).add(&zeta_power(8, -1)).unwrap()
}

/// `zeta_8 + zeta_8^3`, an exact model of `sqrt(-2)` at level 8.
pub fn sqrt_minus_two_elem() -> CyclotomicElement {
    zeta_power(8, 1).add(&zeta_power(8, 3)).unwrap()
}

/// Writes `a = rat + rad * root` with integer `rat`, `rad`, where `root` is
/// an element whose square is a rational integer.
///
/// The residue representation is solved as a two-unknown integer linear
/// system on two coordinates and then verified against the full coefficient
/// vector, so a successful descent is a proof of membership in `Z + Z*root`.
pub fn descend_quadratic(
    a: &CyclotomicElement,
    root: &CyclotomicElement,
) -> Result<(BigInt, BigInt)> {
    if a.level() != root.level() {
        return Err(Error::LevelMismatch {
            left: a.level(),
            right: root.level(),
        });
    }
    let d = root
        .mul(root)?
        .as_integer()
        .ok_or_else(|| Error::BadArguments("root does not square to a rational integer".into()))?;
    if d.is_zero() {
        return Err(Error::BadArguments("root squares to zero".into()));
    }
    // Pivot on any nonconstant coordinate of the root; one exists because
    // the root is irrational (its square d is a nonsquare integer there).
    let root_deg = root
        .rep()
        .degree()
        .ok_or_else(|| Error::BadArguments("root is zero".into()))?;
    let pivot = (1..=root_deg)
        .find(|&j| !root.rep().coeff(j).is_zero())
        .ok_or_else(|| Error::BadArguments("root is rational".into()))?;
    let rc = root.rep().coeff(pivot);
    let ac = a.rep().coeff(pivot);
    if (&ac % &rc) != BigInt::zero() {
        return Err(Error::NotInQuadraticSubring(format!(
            "coordinate {pivot} of {ac} not divisible by {rc}"
        )));
    }
    let rad = &ac / &rc;
    let rat = a.rep().coeff(0) - &rad * root.rep().coeff(0);
    // Full-vector verification.
    let mut expect = root.rep() * &IntegerPolynomial::constant(rad.clone());
    expect = &expect + &IntegerPolynomial::constant(rat.clone());
    if &expect != a.rep() {
        return Err(Error::NotInQuadraticSubring(
            "element is not of the form rat + rad*root".into(),
        ));
    }
    Ok((rat, rad))
}

impl std::fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} mod Phi_{}", self.rep, self.level)
    }
}
