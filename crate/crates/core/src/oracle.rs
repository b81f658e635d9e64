//! Independent verification of enumerated classes: structural coefficient
//! symmetry, an exact root-of-unity supersingularity test, a brute-force
//! search over small-degree Weil polynomials, and a floating-point root
//! modulus check.
//!
//! None of these reuse the classification path, so agreement between the
//! enumeration and this module is genuine evidence rather than tautology.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::numthy::max_with_phi_at_most;
use crate::polyarith::IntegerPolynomial;
use crate::weilmin::exact_sqrt;

/// Checks the coefficient functional equation of a degree-2g Weil
/// polynomial: the coefficient of `X^i` must equal `q^(g-i)` times the
/// coefficient of `X^(2g-i)` for all `i <= g`.
///
/// Returns `false` for non-monic input; odd degree is an error.
pub fn is_weil_structured(poly: &IntegerPolynomial, q: &BigInt) -> Result<bool> {
    let Some(deg) = poly.degree() else {
        return Ok(false);
    };
    if deg % 2 != 0 {
        return Err(Error::OddDegree(deg));
    }
    if !poly.is_monic() {
        return Ok(false);
    }
    let g = deg / 2;
    for i in 0..=g {
        if poly.coeff(i) != q.pow((g - i) as u32) * poly.coeff(deg - i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Default search cutoff for [`is_supersingular_exact`]: `2 M^2` where `M`
/// is the largest `m` with `phi(m) <= 2 deg`. Any supersingular polynomial
/// of this degree has root-of-unity part of order at most `M`, and even a
/// product of two such factors repeats below `2 M^2`, so failure under this
/// cutoff disproves supersingularity for structured inputs.
pub fn supersingularity_bound(degree: usize) -> u64 {
    let m = max_with_phi_at_most(2 * degree as u64);
    2 * m * m
}

/// The least `N <= n_max` such that every root `pi` of the polynomial,
/// with multiplicity, satisfies `pi^(2N) = q^N` — concretely, the
/// polynomial divides `(X^(2N) - q^N)^deg`. Returns `None` when no such
/// `N` exists below the cutoff.
///
/// For squarefree input this is plain divisibility of `X^(2N) - q^N`; the
/// power accommodates repeated-root products like `(X - sqrt(q))^2` that
/// the brute-force search must also recognize. Consecutive `N` share the
/// reduction work: each step is one multiplication by `X^2 mod poly`.
pub fn is_supersingular_exact(
    poly: &IntegerPolynomial,
    q: &BigInt,
    n_max: u64,
) -> Option<u64> {
    let deg = poly.degree().unwrap_or(0);
    assert!(
        poly.is_monic() && deg >= 1,
        "requires a monic nonconstant polynomial"
    );
    let x2 = IntegerPolynomial::monomial(2).rem_monic(poly);
    let mut power = IntegerPolynomial::one();
    let mut qn = BigInt::one();
    for n in 1..=n_max {
        power = (&power * &x2).rem_monic(poly);
        qn *= q;
        let residue = &power - &IntegerPolynomial::constant(qn.clone());
        if residue.is_zero() {
            return Some(n);
        }
        // A nonzero residue can still vanish when raised to the degree if
        // the polynomial has repeated factors; constants never can.
        if residue.degree().unwrap() >= 1 {
            let mut pw = residue;
            let mut e = 1usize;
            let mut nil = false;
            while e < deg {
                pw = (&pw * &pw).rem_monic(poly);
                e *= 2;
                if pw.is_zero() {
                    nil = true;
                    break;
                }
            }
            if nil {
                return Some(n);
            }
        }
    }
    None
}

/// All monic degree-2g integer Weil polynomial candidates that pass the
/// exact supersingularity test: coefficients range over the
/// root-magnitude box `|a_i| <= C(2g,i) q^(i/2)`, with the constant term
/// pinned to `±q^g` (the root product has absolute value exactly `q^g`).
/// Includes reducible products and repeated-root squares; see
/// [`brute_force_weil_irreducible`] for the filtered list.
///
/// Only `g = 1` and `g = 2` are supported; the grid blows up beyond that.
pub fn brute_force_weil(q: &BigInt, g: u32) -> Result<Vec<IntegerPolynomial>> {
    if g == 0 || g > 2 {
        return Err(Error::UnsupportedDegree(g));
    }
    let n_max = supersingularity_bound(2 * g as usize);
    let qi = q
        .to_i64()
        .ok_or_else(|| Error::OutOfRange("q too large for the brute-force grid".into()))?;
    // floor(c * q^(k/2)) = isqrt(c^2 * q^k), the shared bound for both the
    // coefficient box and the power-sum prescreens.
    let root_bound = |c: i64, k: u32| -> Result<i64> {
        (BigInt::from(c * c) * q.pow(k))
            .sqrt()
            .to_i64()
            .ok_or_else(|| Error::OutOfRange("q too large for the brute-force grid".into()))
    };
    let mut found = Vec::new();
    let consider = |coeffs: Vec<BigInt>, found: &mut Vec<IntegerPolynomial>| {
        let poly = IntegerPolynomial::from_coeffs(coeffs);
        // Every supersingular candidate has all roots exactly on the circle
        // of radius sqrt(q), so a loose numeric modulus check is a safe
        // discard; the exact divisibility test makes the final call.
        if let Ok(false) = root_modulus_check(&poly, q, 0.1) {
            return;
        }
        if is_supersingular_exact(&poly, q, n_max).is_some() {
            found.push(poly);
        }
    };
    match g {
        1 => {
            let b1 = root_bound(2, 1)?;
            let p2_bound = 2 * qi;
            for a0 in [qi, -qi] {
                for a1 in -b1..=b1 {
                    // |p_2| = |a1^2 - 2 a0| <= 2q for roots of modulus sqrt(q).
                    if (a1 * a1 - 2 * a0).abs() > p2_bound {
                        continue;
                    }
                    consider(
                        vec![BigInt::from(a0), BigInt::from(a1), BigInt::one()],
                        &mut found,
                    );
                }
            }
        }
        _ => {
            let b1 = root_bound(4, 1)?;
            let b2 = 6 * qi;
            let b3 = root_bound(4, 3)?;
            let p2_bound = (4 * qi) as i128;
            let p3_bound = root_bound(4, 3)? as i128;
            let p4_bound = (4 * qi * qi) as i128;
            let q2 = qi * qi;
            for a4 in [q2, -q2] {
                for a1 in -b1..=b1 {
                    for a2 in -b2..=b2 {
                        let (a1, a2) = (a1 as i128, a2 as i128);
                        if (a1 * a1 - 2 * a2).abs() > p2_bound {
                            continue;
                        }
                        for a3 in -b3..=b3 {
                            let a3 = a3 as i128;
                            // Newton power sums of roots on the circle stay
                            // under 4 q^(k/2); exact integer prescreens.
                            let p3 = -a1 * a1 * a1 + 3 * a1 * a2 - 3 * a3;
                            if p3.abs() > p3_bound {
                                continue;
                            }
                            let p4 = a1 * a1 * a1 * a1 - 4 * a1 * a1 * a2
                                + 2 * a2 * a2
                                + 4 * a1 * a3
                                - 4 * a4 as i128;
                            if p4.abs() > p4_bound {
                                continue;
                            }
                            consider(
                                vec![
                                    BigInt::from(a4),
                                    BigInt::from(a3 as i64),
                                    BigInt::from(a2 as i64),
                                    BigInt::from(a1 as i64),
                                    BigInt::one(),
                                ],
                                &mut found,
                            );
                        }
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| {
        (a.coeffs().len(), a.coeffs()).cmp(&(b.coeffs().len(), b.coeffs()))
    });
    Ok(found)
}

/// The irreducible members of [`brute_force_weil`], obtained by discarding
/// exact products of lower-degree supersingular factors (linear factors
/// `X ∓ sqrt(q)` exist only over square `q`; degree-4 reducibles are
/// products of two members of the degree-2 list).
pub fn brute_force_weil_irreducible(q: &BigInt, g: u32) -> Result<Vec<IntegerPolynomial>> {
    let raw = brute_force_weil(q, g)?;
    let linears: Vec<IntegerPolynomial> = match exact_sqrt(q) {
        Some(r) => vec![
            IntegerPolynomial::from_coeffs(vec![-&r, BigInt::one()]),
            IntegerPolynomial::from_coeffs(vec![r, BigInt::one()]),
        ],
        None => Vec::new(),
    };
    let factors: Vec<IntegerPolynomial> = match g {
        1 => linears,
        _ => brute_force_weil(q, 1)?,
    };
    let mut products = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        for h in &factors[i..] {
            products.push(f * h);
        }
    }
    Ok(raw
        .into_iter()
        .filter(|poly| !products.contains(poly))
        .collect())
}

/// Checks that every complex root `z` satisfies
/// `| |z| - sqrt(q) | < tol * sqrt(q)`, using an all-roots simultaneous
/// iteration in double precision.
pub fn root_modulus_check(poly: &IntegerPolynomial, q: &BigInt, tol: f64) -> Result<bool> {
    let roots = complex_roots(poly)?;
    let target = q.to_f64().expect("q fits in f64").sqrt();
    Ok(roots
        .iter()
        .all(|z| (z.norm() - target).abs() < tol * target))
}

/// All complex roots by Durand–Kerner simultaneous iteration with a
/// deterministically perturbed initial circle.
fn complex_roots(poly: &IntegerPolynomial) -> Result<Vec<Complex64>> {
    let deg = poly.degree().unwrap_or(0);
    assert!(deg >= 1, "requires a nonconstant polynomial");
    let lead = poly.leading().unwrap().to_f64().unwrap_or(f64::NAN);
    let coeffs: Vec<f64> = (0..=deg)
        .map(|j| poly.coeff(j).to_f64().unwrap_or(f64::NAN) / lead)
        .collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::NoConvergence(
            "coefficients exceed double-precision range".into(),
        ));
    }
    // Fujiwara-style inclusion radius for every root.
    let radius = 1.0
        + (0..deg)
            .map(|j| coeffs[j].abs().powf(1.0 / (deg - j) as f64))
            .fold(0.0f64, f64::max);
    // Deterministic jitter breaks the symmetry of the initial circle.
    let mut seed = 0x5DEECE66Du64;
    let mut jitter = || {
        seed = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        ((seed >> 11) as f64 / (1u64 << 53) as f64 - 0.5) * 1e-3
    };
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle =
                2.0 * std::f64::consts::PI * (k as f64 + 0.354) / deg as f64 + jitter();
            Complex64::from_polar(radius * (1.0 + jitter()), angle)
        })
        .collect();
    let eval = |x: Complex64| -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for j in (0..deg).rev() {
            acc = acc * x + coeffs[j];
        }
        acc
    };
    for _ in 0..1000 {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                z[i] += Complex64::new(1e-8 * radius, 1e-8 * radius);
                max_step = f64::MAX;
                continue;
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-13 * (1.0 + radius) {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence(format!(
        "root iteration did not settle for degree {deg}"
    )))
}
