//! The half-cyclotomic polynomials: Legendre-twisted products of roots of
//! unity whose coefficients live in a quadratic ring Z[sqrt(d)].
//!
//! `psi(p, t)` is the monic polynomial of degree phi(pt) whose roots are
//! `(a/p) * zeta_pt^a` over the units `a` mod `pt`; `psi_two(t, sign)` is
//! the degree-2*phi(t) analogue with roots `zeta_8^{e} * zeta_t^a`
//! (`e = ±1` for radicand 2, `e = 1, 3` for radicand -2). Both are built as
//! exact products of linear factors over the ambient cyclotomic ring and
//! then descended coefficient-by-coefficient into Z + Z*sqrt(d); the
//! classical recursions are kept as independent cross-checks in the tests
//! rather than used as the construction path.

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cyclofield::{
    descend_quadratic, gauss_sum, sqrt_minus_two_elem, sqrt_two_elem,
    CyclotomicElement,
};
use crate::error::{Error, Result};
use crate::numthy::{is_prime, legendre, p_star};
use crate::polyarith::IntegerPolynomial;
use crate::Sign;

/// A monic polynomial of even degree over Z[sqrt(d)] whose even-power
/// coefficients are rational integers and whose odd-power coefficients are
/// integer multiples of sqrt(d).
///
/// `rat[j]` holds the coefficient of `X^j` for even `j`; `rad[j]` holds the
/// multiplier of `sqrt(d)` at odd `j`. The opposite-parity entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPolynomial {
    radicand: i64,
    rat: Vec<BigInt>,
    rad: Vec<BigInt>,
}

impl QuadraticPolynomial {
    fn new(radicand: i64, rat: Vec<BigInt>, rad: Vec<BigInt>) -> Self {
        assert_eq!(rat.len(), rad.len());
        assert!(!rat.is_empty() && rat.len() % 2 == 1, "degree must be even");
        assert!(rat.last().unwrap().is_one(), "must be monic");
        assert!(radicand != 0);
        for j in 0..rat.len() {
            if j % 2 == 0 {
                assert!(rad[j].is_zero(), "rad entry at even index {j}");
            } else {
                assert!(rat[j].is_zero(), "rat entry at odd index {j}");
            }
        }
        QuadraticPolynomial { radicand, rat, rad }
    }

    /// The squarefree integer `d` with coefficients in Z + Z*sqrt(d).
    pub fn radicand(&self) -> i64 {
        self.radicand
    }

    pub fn degree(&self) -> usize {
        self.rat.len() - 1
    }

    /// Rational parts, indexed by power (nonzero only at even indices).
    pub fn rat(&self) -> &[BigInt] {
        &self.rat
    }

    /// sqrt(d) multipliers, indexed by power (nonzero only at odd indices).
    pub fn rad(&self) -> &[BigInt] {
        &self.rad
    }

    /// The other sign variant: the polynomial evaluated at `-X`, which
    /// flips exactly the sqrt(d) parts (the degree is even, so it stays
    /// monic).
    pub fn negate_variable(&self) -> Self {
        QuadraticPolynomial {
            radicand: self.radicand,
            rat: self.rat.clone(),
            rad: self.rad.iter().map(|c| -c).collect(),
        }
    }

    /// Substitution `X -> X^k` for odd `k` (odd powers stay odd, so the
    /// parity structure survives).
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k % 2 == 1, "compose_power needs odd k to stay parity-split");
        let n = self.degree() * k + 1;
        let mut rat = vec![BigInt::zero(); n];
        let mut rad = vec![BigInt::zero(); n];
        for j in 0..self.rat.len() {
            rat[j * k] = self.rat[j].clone();
            rad[j * k] = self.rad[j].clone();
        }
        QuadraticPolynomial::new(self.radicand, rat, rad)
    }

    /// Exact product of two polynomials over the same quadratic ring:
    /// `(R1 + S1 s)(R2 + S2 s) = (R1 R2 + d S1 S2) + (R1 S2 + S1 R2) s`.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.radicand != rhs.radicand {
            return Err(Error::BadArguments(format!(
                "radicands {} and {} differ",
                self.radicand, rhs.radicand
            )));
        }
        let d = IntegerPolynomial::constant(BigInt::from(self.radicand));
        let (r1, s1) = self.split();
        let (r2, s2) = rhs.split();
        let rat = &(&r1 * &r2) + &(&d * &(&s1 * &s2));
        let rad = &(&r1 * &s2) + &(&s1 * &r2);
        Ok(Self::from_split(self.radicand, &rat, &rad))
    }

    /// The integer polynomial `f(X) * f(-X) = R^2 - d S^2`; all sqrt(d)
    /// cross terms cancel exactly.
    pub fn negation_product(&self) -> IntegerPolynomial {
        let d = IntegerPolynomial::constant(BigInt::from(self.radicand));
        let (r, s) = self.split();
        &(&r * &r) - &(&d * &(&s * &s))
    }

    fn split(&self) -> (IntegerPolynomial, IntegerPolynomial) {
        (
            IntegerPolynomial::from_coeffs(self.rat.clone()),
            IntegerPolynomial::from_coeffs(self.rad.clone()),
        )
    }

    fn from_split(radicand: i64, rat: &IntegerPolynomial, rad: &IntegerPolynomial) -> Self {
        let deg = rat.degree().expect("monic rational part");
        let mut rv = vec![BigInt::zero(); deg + 1];
        let mut sv = vec![BigInt::zero(); deg + 1];
        for (j, item) in rv.iter_mut().enumerate() {
            *item = rat.coeff(j);
        }
        for (j, item) in sv.iter_mut().enumerate() {
            *item = rad.coeff(j);
        }
        QuadraticPolynomial::new(radicand, rv, sv)
    }
}

/// Rendering like `X^4 + s*X^3 + 3*X^2 + s*X + 1 where s^2 = 5`.
impl fmt::Display for QuadraticPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        let mut first = true;
        for j in (0..self.rat.len()).rev() {
            let (c, radical) = if j % 2 == 0 {
                (&self.rat[j], false)
            } else {
                (&self.rad[j], true)
            };
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
            let mut head = String::new();
            if !mag.is_one() || (!radical && j == 0) {
                head.push_str(&mag.to_string());
            }
            if radical {
                if !head.is_empty() {
                    head.push('*');
                }
                head.push('s');
            }
            match j {
                0 => write!(f, "{head}")?,
                1 => {
                    if head.is_empty() {
                        write!(f, "X")?
                    } else {
                        write!(f, "{head}*X")?
                    }
                }
                _ => {
                    if head.is_empty() {
                        write!(f, "X^{j}")?
                    } else {
                        write!(f, "{head}*X^{j}")?
                    }
                }
            }
        }
        write!(f, " where s^2 = {}", self.radicand)
    }
}

/// Multiplies out `prod (X - s * zeta_N^e)` where every root is a signed
/// monomial `(s, e)` with `s = -1` encoded by `neg`.
///
/// The coefficients are accumulated in Z[X]/(X^N - 1), where multiplying by
/// a root of unity is just a cyclic index shift; a single reduction modulo
/// the cyclotomic polynomial at the end lands everything in Z[zeta_N].
fn product_of_monomial_factors(level: u64, roots: &[(bool, u64)]) -> Vec<CyclotomicElement> {
    let n = level as usize;
    let mut coeffs: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]];
    coeffs[0][0] = BigInt::one();
    for &(neg, exp) in roots {
        let e = (exp % level) as usize;
        let mut next: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            for (k, v) in c.iter().enumerate() {
                // X * c
                next[i + 1][k] += v;
                // -(±zeta^e) * c
                let idx = (k + e) % n;
                if neg {
                    next[i][idx] += v;
                } else {
                    next[i][idx] -= v;
                }
            }
        }
        coeffs = next;
    }
    coeffs
        .into_iter()
        .map(|v| CyclotomicElement::new(level, IntegerPolynomial::from_coeffs(v)))
        .collect()
}

/// Descends every coefficient into Z + Z*sqrt(d) and validates the
/// even/odd parity structure.
fn descend_all(
    radicand: i64,
    level: u64,
    coeffs: &[CyclotomicElement],
    root: &CyclotomicElement,
) -> QuadraticPolynomial {
    let root = root.embed(level).expect("root level divides target level");
    let mut rat = vec![BigInt::zero(); coeffs.len()];
    let mut rad = vec![BigInt::zero(); coeffs.len()];
    for (j, c) in coeffs.iter().enumerate() {
        let (r, s) = descend_quadratic(c, &root)
            .expect("half-cyclotomic coefficients lie in Z + Z*sqrt(d)");
        if j % 2 == 0 {
            assert!(s.is_zero(), "even coefficient with radical part at X^{j}");
            rat[j] = r;
        } else {
            assert!(r.is_zero(), "odd coefficient with rational part at X^{j}");
            rad[j] = s;
        }
    }
    QuadraticPolynomial::new(radicand, rat, rad)
}

static PSI_CACHE: Mutex<Option<HashMap<(u64, u64), QuadraticPolynomial>>> = Mutex::new(None);
static PSI_TWO_CACHE: Mutex<Option<HashMap<(u64, Sign), QuadraticPolynomial>>> = Mutex::new(None);

/// The degree-phi(pt) polynomial with roots `(a/p) zeta_pt^a`, `a` running
/// over the units modulo `pt`; monic with radicand `p*`.
///
/// Requires an odd prime `p` and odd `t >= 1`. The canonical primitive root
/// `zeta_pt` is fixed once; the opposite Legendre-class choice would give
/// [`QuadraticPolynomial::negate_variable`] of the result, and enumeration
/// layers always emit both variants.
pub fn psi(p: u64, t: u64) -> Result<QuadraticPolynomial> {
    if p == 2 || !is_prime(p) {
        return Err(Error::BadArguments(format!("psi requires an odd prime, got {p}")));
    }
    if t == 0 || t % 2 == 0 {
        return Err(Error::BadArguments(format!("psi requires odd t >= 1, got {t}")));
    }
    {
        let guard = PSI_CACHE.lock().unwrap();
        if let Some(cached) = guard.as_ref().and_then(|m| m.get(&(p, t))) {
            return Ok(cached.clone());
        }
    }
    let level = p * t;
    let roots: Vec<(bool, u64)> = (1..level)
        .filter(|a| num_integer::gcd(*a, level) == 1)
        .map(|a| (legendre(a as i64, p) == -1, a))
        .collect();
    let coeffs = product_of_monomial_factors(level, &roots);
    let result = descend_all(p_star(p), level, &coeffs, &gauss_sum(p));
    PSI_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert((p, t), result.clone());
    Ok(result)
}

/// The degree-2*phi(t) polynomial with roots `zeta_8^{±1} zeta_t^a`
/// (radicand 2, `sign = Plus`) or `zeta_8^{1,3} zeta_t^a` (radicand -2,
/// `sign = Minus`), for odd `t >= 1`.
pub fn psi_two(t: u64, sign: Sign) -> Result<QuadraticPolynomial> {
    if t == 0 || t % 2 == 0 {
        return Err(Error::BadArguments(format!(
            "psi_two requires odd t >= 1, got {t}"
        )));
    }
    {
        let guard = PSI_TWO_CACHE.lock().unwrap();
        if let Some(cached) = guard.as_ref().and_then(|m| m.get(&(t, sign))) {
            return Ok(cached.clone());
        }
    }
    let level = 8 * t;
    // zeta_8 = zeta_level^t and zeta_t = zeta_level^8.
    let second_eight_power: i64 = match sign {
        Sign::Plus => -1,
        Sign::Minus => 3,
    };
    let mut roots = Vec::new();
    for a in 1..=t {
        if num_integer::gcd(a, t) != 1 {
            continue;
        }
        let exp1 = (t + 8 * a) % level;
        let exp2 = (second_eight_power * t as i64 + 8 * a as i64).rem_euclid(level as i64) as u64;
        roots.push((false, exp1));
        roots.push((false, exp2));
    }
    let coeffs = product_of_monomial_factors(level, &roots);
    let (radicand, root) = match sign {
        Sign::Plus => (2, sqrt_two_elem()),
        Sign::Minus => (-2, sqrt_minus_two_elem()),
    };
    let result = descend_all(radicand, level, &coeffs, &root);
    PSI_TWO_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert((t, sign), result.clone());
    Ok(result)
}

/// The other sign variant (free function mirror of
/// [`QuadraticPolynomial::negate_variable`]).
pub fn psi_negate(poly: &QuadraticPolynomial) -> QuadraticPolynomial {
    poly.negate_variable()
}
