//! Dense exact polynomial arithmetic over arbitrary-precision integers.
//!
//! Everything downstream — cyclotomic polynomials, Gauss sums, the scaled
//! Weil polynomials themselves — is built on [`IntegerPolynomial`]. All
//! degrees in this crate stay small (a couple of hundred at most), so a
//! dense ascending-order coefficient vector is the right representation:
//! simple, exact, cache-friendly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A univariate polynomial with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree order: index `i` holds the
/// coefficient of `X^i`. The zero polynomial is the empty vector; any other
/// value keeps a nonzero leading (last) coefficient, so
/// `degree = len - 1` for nonzero polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntegerPolynomial {
    /// The zero polynomial (empty coefficient vector).
    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `X^degree`.
    pub fn monomial(degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = BigInt::one();
        IntegerPolynomial { coeffs }
    }

    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntegerPolynomial { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from machine integers, ascending order.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `X^j` (zero beyond the degree).
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// True when every exponent with a nonzero coefficient is even.
    pub fn is_even_support(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(j, c)| j % 2 == 0 || c.is_zero())
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::InexactDivision`] if the division leaves a
    /// remainder at any step, and [`Error::DivisionByZero`] for a zero
    /// divisor. Every divisor used inside this crate is monic, so the
    /// per-step leading-coefficient division is always exact there.
    pub fn divexact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let df = self.degree().unwrap();
        let dg = divisor.degree().unwrap();
        if df < dg {
            return Err(Error::InexactDivision(format!(
                "degree {df} dividend under degree {dg} divisor"
            )));
        }
        let lead = divisor.leading().unwrap();
        let mut work = self.coeffs.clone();
        let qdeg = df - dg;
        let mut quot = vec![BigInt::zero(); qdeg + 1];
        for i in (0..=qdeg).rev() {
            let top = std::mem::replace(&mut work[i + dg], BigInt::zero());
            if top.is_zero() {
                continue;
            }
            if (&top % lead) != BigInt::zero() {
                return Err(Error::InexactDivision(format!(
                    "leading coefficient {lead} does not divide {top}"
                )));
            }
            let q = &top / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate().take(dg) {
                work[i + j] -= &q * dc;
            }
            quot[i] = q;
        }
        if work.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision("nonzero remainder".into()));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Substitution `X -> X^k`: returns `f(X^k)`. Requires `k >= 1`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power requires k >= 1");
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * k] = c.clone();
        }
        IntegerPolynomial { coeffs }
    }

    /// Returns `f(-X)`: sign-flips every odd-index coefficient.
    pub fn negate_variable(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
            .collect();
        IntegerPolynomial { coeffs }
    }

    /// Small integer power by repeated squaring.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `X^exponent mod modulus` by square-and-multiply on the exponent.
    ///
    /// The modulus must be monic of degree at least 1.
    pub fn powmod_x(exponent: u64, modulus: &Self) -> Self {
        assert!(
            modulus.is_monic() && modulus.degree().unwrap_or(0) >= 1,
            "powmod_x needs a monic modulus of degree >= 1"
        );
        let x = Self::monomial(1).rem_monic(modulus);
        if exponent == 0 {
            return Self::one().rem_monic(modulus);
        }
        let mut acc = Self::one();
        let bits = 64 - exponent.leading_zeros();
        for shift in (0..bits).rev() {
            acc = (&acc * &acc).rem_monic(modulus);
            if (exponent >> shift) & 1 == 1 {
                acc = (&acc * &x).rem_monic(modulus);
            }
        }
        acc
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, modulus: &Self) -> Self {
        debug_assert!(modulus.is_monic());
        let dm = modulus.degree().expect("nonzero modulus");
        let Some(df) = self.degree() else {
            return Self::zero();
        };
        if df < dm {
            return self.clone();
        }
        let mut work = self.coeffs.clone();
        for i in (dm..=df).rev() {
            let top = std::mem::replace(&mut work[i], BigInt::zero());
            if top.is_zero() {
                continue;
            }
            for (j, mc) in modulus.coeffs.iter().enumerate().take(dm) {
                work[i - dm + j] -= &top * mc;
            }
        }
        work.truncate(dm);
        Self::from_coeffs(work)
    }

    /// Ascending coefficients as decimal strings (the canonical machine
    /// form; survives any JSON integer-width limit).
    pub fn coeffs_decimal(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl Add for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn add(self, rhs: Self) -> IntegerPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            if let Some(r) = rhs.coeffs.get(i) {
                c += r;
            }
            coeffs.push(c);
        }
        IntegerPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn sub(self, rhs: Self) -> IntegerPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn neg(self) -> IntegerPolynomial {
        IntegerPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntegerPolynomial {
    type Output = IntegerPolynomial;
    fn mul(self, rhs: Self) -> IntegerPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntegerPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntegerPolynomial::from_coeffs(coeffs)
    }
}

/// Canonical text rendering: descending powers with explicit signs, e.g.
/// `X^8 - 2*X^6 + 4*X^4 - 8*X^2 + 16`.
impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match j {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if j == 1 {
                        write!(f, "X")?;
                    } else {
                        write!(f, "X^{j}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64(coeffs)
    }

    #[test]
    fn add_cancellation_and_identity() {
        assert_eq!(&p(&[1, 0, 1]) + &p(&[0, 0, -1]), p(&[1]));
        let f = p(&[3, -2, 0, 7]);
        assert_eq!(&IntegerPolynomial::zero() + &f, f);
        assert_eq!(&p(&[2, 1]) + &p(&[-2, 1]), p(&[0, 2]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        // (X^2+3X+3)(X^2-3X+3) = X^4 - 3X^2 + 9
        assert_eq!(&p(&[3, 3, 1]) * &p(&[3, -3, 1]), p(&[9, 0, -3, 0, 1]));
        let f = p(&[5, 0, -1, 2]);
        assert_eq!(&f * &IntegerPolynomial::one(), f);
    }

    #[test]
    fn divexact_examples() {
        assert_eq!(p(&[-1, 0, 1]).divexact(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        assert_eq!(
            p(&[9, 0, -3, 0, 1]).divexact(&p(&[3, 3, 1])).unwrap(),
            p(&[3, -3, 1])
        );
        assert!(matches!(
            p(&[1, 0, 1]).divexact(&p(&[-1, 1])),
            Err(Error::InexactDivision(_))
        ));
        assert_eq!(
            p(&[1, 1]).divexact(&IntegerPolynomial::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn compose_power_examples() {
        let f = p(&[1, 2, 3]);
        assert_eq!(f.compose_power(1), f);
        assert_eq!(p(&[1, 0, 1]).compose_power(3), p(&[1, 0, 0, 0, 0, 0, 1]));
        // Phi_3(X^3) = Phi_9
        assert_eq!(
            p(&[1, 1, 1]).compose_power(3),
            p(&[1, 0, 0, 1, 0, 0, 1])
        );
    }

    #[test]
    fn negate_variable_examples() {
        assert_eq!(p(&[3, 3, 1]).negate_variable(), p(&[3, -3, 1]));
        let even = p(&[9, 0, 0, 0, 1]);
        assert_eq!(even.negate_variable(), even);
        let f = p(&[1, -4, 2, 8]);
        assert_eq!(f.negate_variable().negate_variable(), f);
    }

    #[test]
    fn powmod_examples() {
        // X^4 mod (X^2+1) = 1
        assert_eq!(
            IntegerPolynomial::powmod_x(4, &p(&[1, 0, 1])),
            IntegerPolynomial::one()
        );
        // X^2 mod (X^2+2) = -2
        assert_eq!(IntegerPolynomial::powmod_x(2, &p(&[2, 0, 1])), p(&[-2]));
        // X^12 mod (X^2+3X+3) = 729
        assert_eq!(IntegerPolynomial::powmod_x(12, &p(&[3, 3, 1])), p(&[729]));
    }

    #[test]
    fn powmod_matches_naive_remainder() {
        // Exhaustive over small exponents and a family of monic moduli.
        let moduli = [
            p(&[1, 0, 1]),
            p(&[3, 3, 1]),
            p(&[2, 0, 0, 1]),
            p(&[-1, 2, -3, 0, 1]),
            p(&[5, -1, 0, 0, 0, 0, 0, 0, 1]),
        ];
        for m in &moduli {
            for n in 0..=64u64 {
                let naive = IntegerPolynomial::monomial(n as usize).rem_monic(m);
                assert_eq!(IntegerPolynomial::powmod_x(n, m), naive);
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(
            p(&[16, 0, -8, 0, 4, 0, -2, 0, 1]).to_string(),
            "X^8 - 2*X^6 + 4*X^4 - 8*X^2 + 16"
        );
        assert_eq!(p(&[-3, 0, 1]).to_string(), "X^2 - 3");
        assert_eq!(p(&[0, 1]).to_string(), "X");
        assert_eq!(p(&[-7]).to_string(), "-7");
        assert_eq!(IntegerPolynomial::zero().to_string(), "0");
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntegerPolynomial> {
        prop::collection::vec(-50i64..50, 0..=max_deg + 1)
            .prop_map(|v| IntegerPolynomial::from_i64(&v))
    }

    proptest! {
        #[test]
        fn mul_then_divexact_roundtrips(f in arb_poly(6), g in arb_poly(6)) {
            prop_assume!(!g.is_zero());
            let prod = &f * &g;
            prop_assert_eq!(prod.divexact(&g).unwrap(), f);
        }

        #[test]
        fn negate_variable_is_involution(f in arb_poly(8)) {
            prop_assert_eq!(f.negate_variable().negate_variable(), f.clone());
            let fixed = f.negate_variable() == f;
            prop_assert_eq!(fixed, f.is_even_support());
        }

        #[test]
        fn compose_power_multiplies(f in arb_poly(4), a in 1usize..4, b in 1usize..4) {
            prop_assert_eq!(
                f.compose_power(a * b),
                f.compose_power(a).compose_power(b)
            );
        }

        #[test]
        fn mul_degree_adds(f in arb_poly(6), g in arb_poly(6)) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let prod = &f * &g;
            prop_assert_eq!(
                prod.degree().unwrap(),
                f.degree().unwrap() + g.degree().unwrap()
            );
        }
    }
}
