//! The square-root scaling operator and the minimal polynomials of
//! supersingular Weil numbers.
//!
//! For a signed prime power `q' = ±p^n` with `n` odd, the minimal
//! polynomial over Q of `sqrt(q') * zeta_4t` is either the scaled
//! cyclotomic polynomial `Phi_4t` (the normal case, degree phi(4t)) or a
//! scaled half-cyclotomic polynomial (the exceptional case, degree
//! phi(4t)/2). For even `n` the square root of `q` is an integer and every
//! minimal polynomial is a scaled cyclotomic `Phi_m`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numthy::{cyclotomic, is_prime, prime_power};
use crate::polyarith::IntegerPolynomial;
use crate::psipoly::{psi, psi_two, QuadraticPolynomial};
use crate::Sign;

/// The finite-field parameters `(p, n, q = p^n)` together with the sign
/// convention `q' = ±p^n` used by the odd-exponent classification.
///
/// The sign is only meaningful when `n` is odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldParameters {
    p: u64,
    n: u32,
    q: BigInt,
    sign: Sign,
}

impl FieldParameters {
    /// Parameters with the positive sign convention.
    pub fn new(p: u64, n: u32) -> Result<Self> {
        Self::with_sign(p, n, Sign::Plus)
    }

    pub fn with_sign(p: u64, n: u32, sign: Sign) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::OutOfRange("exponent n must be >= 1".into()));
        }
        Ok(FieldParameters {
            p,
            n,
            q: prime_power(p, n),
            sign,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `q = p^n` (always positive).
    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// The signed value `q' = ±p^n`.
    pub fn signed_q(&self) -> BigInt {
        match self.sign {
            Sign::Plus => self.q.clone(),
            Sign::Minus => -self.q.clone(),
        }
    }

    pub fn has_odd_exponent(&self) -> bool {
        self.n % 2 == 1
    }
}

/// Integer square root when `n` is a perfect square.
pub(crate) fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// The scaling `f^[sqrt(s)](X) = sqrt(s)^deg(f) * f(X / sqrt(s))`, which
/// sends the coefficient of `X^j` to `c_j * s^((deg - j)/2)`.
///
/// Exact integrality requires either a perfect-square `s`, or a polynomial
/// supported on even exponents with even degree (the case of cyclotomic
/// polynomials `Phi_m` with `4 | m`).
pub fn scale_sqrt(f: &IntegerPolynomial, s: &BigInt) -> Result<IntegerPolynomial> {
    if s.is_zero() {
        return Err(Error::BadArguments("scale_sqrt requires nonzero s".into()));
    }
    if f.is_zero() {
        return Ok(IntegerPolynomial::zero());
    }
    let deg = f.degree().unwrap();
    if let Some(root) = exact_sqrt(s) {
        let coeffs = (0..=deg)
            .map(|j| f.coeff(j) * root.pow((deg - j) as u32))
            .collect();
        return Ok(IntegerPolynomial::from_coeffs(coeffs));
    }
    if deg % 2 != 0 || !f.is_even_support() {
        return Err(Error::NonIntegralScaling(format!(
            "s = {s} is not a perfect square and the polynomial has odd-degree support"
        )));
    }
    let coeffs = (0..=deg)
        .map(|j| {
            if j % 2 == 0 {
                f.coeff(j) * s.pow(((deg - j) / 2) as u32)
            } else {
                BigInt::zero()
            }
        })
        .collect();
    Ok(IntegerPolynomial::from_coeffs(coeffs))
}

/// The scaling `psi^[sqrt(s)]` of a quadratic polynomial with radicand `d`,
/// integral exactly when `d * s` is a positive perfect square `u^2`.
///
/// Even coefficients scale by powers of `s`; the odd coefficient of `X^j`
/// becomes `rad[j] * s^((deg - j - 1)/2) * u`, taking the positive integer
/// root `u` (the branch choice only swaps the two sign variants, which are
/// always emitted together downstream).
pub fn scale_quad(poly: &QuadraticPolynomial, s: &BigInt) -> Result<IntegerPolynomial> {
    let ds = BigInt::from(poly.radicand()) * s;
    let u = exact_sqrt(&ds).ok_or_else(|| {
        Error::NonIntegralScaling(format!(
            "d*s = {ds} is not a positive perfect square (d = {}, s = {s})",
            poly.radicand()
        ))
    })?;
    let deg = poly.degree();
    let coeffs = (0..=deg)
        .map(|j| {
            if j % 2 == 0 {
                poly.rat()[j].clone() * s.pow(((deg - j) / 2) as u32)
            } else {
                poly.rad()[j].clone() * s.pow(((deg - j - 1) / 2) as u32) * &u
            }
        })
        .collect();
    Ok(IntegerPolynomial::from_coeffs(coeffs))
}

/// Which branch of the odd-exponent classification applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddCaseTag {
    /// Minimal polynomial `Phi_4t` scaled by `sqrt(q')`, degree phi(4t).
    Normal,
    /// `q' = 3 mod 4`, `p | t`, `t` odd: scaled half-cyclotomic for the odd
    /// prime `p`, degree phi(4t)/2, two sign variants.
    ExcOddP,
    /// `q' > 0` even, `t = 2 mod 4`: scaled radicand-2 polynomial.
    ExcTwoPlus,
    /// `q' < 0` even, `t = 2 mod 4`: scaled radicand-(-2) polynomial.
    ExcTwoMinus,
}

/// Minimal polynomial of `theta = sqrt(q') * zeta_4t` over Q for odd
/// exponent, as a total classification over all `t >= 1`.
///
/// Returns the case tag together with one polynomial (normal case) or the
/// two sign variants (exceptional cases).
pub fn minimal_poly_odd(fp: &FieldParameters, t: u64) -> (OddCaseTag, Vec<IntegerPolynomial>) {
    assert!(fp.has_odd_exponent(), "minimal_poly_odd requires odd n");
    assert!(t >= 1, "t must be positive");
    let qs = fp.signed_q();
    if fp.p == 2 {
        if t % 4 == 2 {
            let (tag, sign) = match fp.sign {
                Sign::Plus => (OddCaseTag::ExcTwoPlus, Sign::Plus),
                Sign::Minus => (OddCaseTag::ExcTwoMinus, Sign::Minus),
            };
            let base = psi_two(t / 2, sign).expect("t/2 is odd when t = 2 mod 4");
            let a = scale_quad(&base, &qs).expect("2q' or -2q' is a positive even square");
            let b = scale_quad(&base.negate_variable(), &qs).expect("same scaling");
            return (tag, vec![a, b]);
        }
    } else {
        let three_mod_four = qs.mod_floor(&BigInt::from(4)) == BigInt::from(3);
        if three_mod_four && t % 2 == 1 && t % fp.p == 0 {
            // sqrt(q') zeta_4t = ±sqrt(-q') zeta_t, and -q' = 1 mod 4 here,
            // so the scaler is s = -q' (matching the radicand p*).
            let base = psi(fp.p, t / fp.p).expect("odd prime, odd quotient");
            let s = -&qs;
            let a = scale_quad(&base, &s).expect("p* times -q' is a positive square");
            let b = scale_quad(&base.negate_variable(), &s).expect("same scaling");
            return (OddCaseTag::ExcOddP, vec![a, b]);
        }
    }
    let poly = scale_sqrt(&cyclotomic(4 * t), &qs)
        .expect("cyclotomic polynomials at multiples of 4 have even support");
    (OddCaseTag::Normal, vec![poly])
}

/// Minimal polynomial for even exponent: `Phi_m` scaled by the integer
/// `sqrt(q)`.
pub fn minimal_poly_even(fp: &FieldParameters, m: u64) -> IntegerPolynomial {
    assert!(!fp.has_odd_exponent(), "minimal_poly_even requires even n");
    assert!(m >= 1, "m must be positive");
    scale_sqrt(&cyclotomic(m), fp.q()).expect("q is a perfect square for even n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psipoly::psi_negate;

    fn p(coeffs: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64(coeffs)
    }

    #[test]
    fn scale_sqrt_examples() {
        // Phi_8 scaled by sqrt(3): X^4 + 9.
        assert_eq!(
            scale_sqrt(&cyclotomic(8), &BigInt::from(3)).unwrap(),
            p(&[9, 0, 0, 0, 1])
        );
        // X^2 + 1 scaled by sqrt(-3): X^2 - 3.
        assert_eq!(
            scale_sqrt(&p(&[1, 0, 1]), &BigInt::from(-3)).unwrap(),
            p(&[-3, 0, 1])
        );
        // Perfect square s: X + 1 scaled by sqrt(4) = 2 gives X + 2.
        assert_eq!(
            scale_sqrt(&p(&[1, 1]), &BigInt::from(4)).unwrap(),
            p(&[2, 1])
        );
        assert!(matches!(
            scale_sqrt(&p(&[1, 1]), &BigInt::from(3)),
            Err(Error::NonIntegralScaling(_))
        ));
        assert!(scale_sqrt(&p(&[1, 1]), &BigInt::zero()).is_err());
    }

    #[test]
    fn scale_quad_examples() {
        // psi(3,1) scaled with s = -3: the pair X^2 ± 3X + 3.
        let base = psi(3, 1).unwrap();
        let s = BigInt::from(-3);
        let a = scale_quad(&base, &s).unwrap();
        let b = scale_quad(&psi_negate(&base), &s).unwrap();
        let pair = [a, b];
        assert!(pair.contains(&p(&[3, 3, 1])));
        assert!(pair.contains(&p(&[3, -3, 1])));

        // psi_two(1, +) scaled with s = 2: the pair X^2 ± 2X + 2.
        let base = psi_two(1, Sign::Plus).unwrap();
        let s = BigInt::from(2);
        let pair = [
            scale_quad(&base, &s).unwrap(),
            scale_quad(&base.negate_variable(), &s).unwrap(),
        ];
        assert!(pair.contains(&p(&[2, 2, 1])));
        assert!(pair.contains(&p(&[2, -2, 1])));

        // psi(5,1) scaled with s = -q' = 5 (for q' = -5): the pair
        // X^4 ± 5X^3 + 15X^2 ± 25X + 25 with matching signs.
        let base = psi(5, 1).unwrap();
        let s = BigInt::from(5);
        let pair = [
            scale_quad(&base, &s).unwrap(),
            scale_quad(&base.negate_variable(), &s).unwrap(),
        ];
        assert!(pair.contains(&p(&[25, 25, 15, 5, 1])));
        assert!(pair.contains(&p(&[25, -25, 15, -5, 1])));

        // d*s negative: not integral.
        assert!(matches!(
            scale_quad(&base, &BigInt::from(-5)),
            Err(Error::NonIntegralScaling(_))
        ));
    }

    #[test]
    fn minimal_poly_odd_cases() {
        // p = 3, sign +, t = 3: exceptional odd-p pair X^2 ± 3X + 3.
        let fp = FieldParameters::with_sign(3, 1, Sign::Plus).unwrap();
        let (tag, polys) = minimal_poly_odd(&fp, 3);
        assert_eq!(tag, OddCaseTag::ExcOddP);
        assert!(polys.contains(&p(&[3, 3, 1])) && polys.contains(&p(&[3, -3, 1])));

        // p = 3, sign -, t = 3: normal, Phi_12 scaled by sqrt(-3).
        let fp = FieldParameters::with_sign(3, 1, Sign::Minus).unwrap();
        let (tag, polys) = minimal_poly_odd(&fp, 3);
        assert_eq!(tag, OddCaseTag::Normal);
        assert_eq!(polys, vec![p(&[9, 0, 3, 0, 1])]);

        // p = 2, sign +, t = 2: the radicand-2 pair X^2 ± 2X + 2.
        let fp = FieldParameters::with_sign(2, 1, Sign::Plus).unwrap();
        let (tag, polys) = minimal_poly_odd(&fp, 2);
        assert_eq!(tag, OddCaseTag::ExcTwoPlus);
        assert!(polys.contains(&p(&[2, 2, 1])) && polys.contains(&p(&[2, -2, 1])));

        // Degrees: normal phi(4t), exceptional phi(4t)/2.
        use crate::numthy::euler_phi;
        for (pr, sgn, t) in [
            (3u64, Sign::Plus, 1u64),
            (3, Sign::Minus, 5),
            (3, Sign::Plus, 9),
            (2, Sign::Minus, 6),
            (7, Sign::Plus, 7),
        ] {
            let fp = FieldParameters::with_sign(pr, 1, sgn).unwrap();
            let (tag, polys) = minimal_poly_odd(&fp, t);
            let expect = match tag {
                OddCaseTag::Normal => euler_phi(4 * t),
                _ => euler_phi(4 * t) / 2,
            };
            for poly in &polys {
                assert_eq!(poly.degree().unwrap() as u64, expect);
                assert!(poly.is_monic());
            }
        }
    }

    #[test]
    fn exceptional_pair_multiplies_to_normal_form() {
        // The product of the two exceptional variants equals the reducible
        // scaled Phi_4t.
        for (pr, sgn, t) in [(3u64, Sign::Plus, 3u64), (7, Sign::Plus, 7), (2, Sign::Plus, 2)] {
            let fp = FieldParameters::with_sign(pr, 1, sgn).unwrap();
            let (tag, polys) = minimal_poly_odd(&fp, t);
            assert_ne!(tag, OddCaseTag::Normal);
            let product = &polys[0] * &polys[1];
            let normal = scale_sqrt(&cyclotomic(4 * t), &fp.signed_q()).unwrap();
            assert_eq!(product, normal);
        }
    }

    #[test]
    fn minimal_poly_even_examples() {
        let fp = FieldParameters::new(2, 2).unwrap();
        assert_eq!(minimal_poly_even(&fp, 3), p(&[4, 2, 1]));
        assert_eq!(minimal_poly_even(&fp, 1), p(&[-2, 1]));
        assert_eq!(minimal_poly_even(&fp, 12), p(&[16, 0, -4, 0, 1]));
    }

    #[test]
    fn field_parameters_validation() {
        assert!(matches!(FieldParameters::new(4, 1), Err(Error::NotPrime(4))));
        assert!(FieldParameters::new(2, 0).is_err());
        let fp = FieldParameters::with_sign(3, 3, Sign::Minus).unwrap();
        assert_eq!(fp.q(), &BigInt::from(27));
        assert_eq!(fp.signed_q(), BigInt::from(-27));
    }
}
