//! Arithmetic functions and quadratic characters: factorization, Euler's
//! totient and its inverse, the Möbius function, multiplicative orders, the
//! Legendre symbol, the mod-8 characters, `p*`, and cyclotomic polynomials.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polyarith::IntegerPolynomial;

/// Complete prime factorization, primes strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// `(prime, exponent)` pairs in increasing prime order.
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// Number of distinct prime factors (the usual omega function).
    pub fn omega(&self) -> u64 {
        self.pairs.len() as u64
    }

    /// Reconstructs the factored integer.
    pub fn product(&self) -> u64 {
        self.pairs
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin primality test, valid for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    // This witness set is known to be deterministic below 3.3 * 10^24.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division (inputs in this crate stay small);
/// a Miller–Rabin shortcut finishes off a large prime cofactor.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::OutOfRange("factorize requires n >= 1".into()));
    }
    let mut pairs = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0u32;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            pairs.push((p, e));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    let mut d = 5u64;
    while d.saturating_mul(d) <= rest {
        if rest > 1 && is_prime(rest) {
            break;
        }
        push(d, &mut rest);
        push(d + 2, &mut rest);
        d += 6;
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    pairs.sort_unstable();
    Ok(Factorization { pairs })
}

/// Euler's totient.
pub fn euler_phi(m: u64) -> u64 {
    assert!(m >= 1, "euler_phi requires m >= 1");
    factorize(m)
        .unwrap()
        .pairs()
        .iter()
        .fold(1u64, |acc, &(p, e)| acc * p.pow(e - 1) * (p - 1))
}

/// Möbius function: 0 on non-squarefree input, otherwise (-1)^omega.
pub fn moebius(n: u64) -> i32 {
    assert!(n >= 1, "moebius requires n >= 1");
    let f = factorize(n).unwrap();
    if f.pairs().iter().any(|&(_, e)| e > 1) {
        return 0;
    }
    if f.omega() % 2 == 0 {
        1
    } else {
        -1
    }
}

// Shared totient sieve backing inverse_phi; grown on demand so repeated
// scans over the interval [1, 2k^2 + 1] stay cheap.
static PHI_SIEVE: Mutex<Vec<u64>> = Mutex::new(Vec::new());

fn with_phi_sieve<T>(limit: usize, f: impl FnOnce(&[u64]) -> T) -> T {
    let mut sieve = PHI_SIEVE.lock().unwrap();
    if sieve.len() <= limit {
        let n = (limit + 1).max(2 * sieve.len());
        let mut phi: Vec<u64> = (0..n as u64).collect();
        for i in 2..n {
            if phi[i] == i as u64 {
                for j in (i..n).step_by(i) {
                    phi[j] -= phi[j] / i as u64;
                }
            }
        }
        *sieve = phi;
    }
    f(&sieve)
}

/// All `m` with `phi(m) = k`, ascending; empty when no preimage exists.
///
/// Exhaustive scan of `[1, 2k^2 + 1]`, complete because
/// `phi(m) >= sqrt(m/2)`.
pub fn inverse_phi(k: u64) -> Vec<u64> {
    assert!(k >= 1, "inverse_phi requires k >= 1");
    let bound = (2 * k * k + 1) as usize;
    with_phi_sieve(bound, |phi| {
        (1..=bound)
            .filter(|&m| phi[m] == k)
            .map(|m| m as u64)
            .collect()
    })
}

/// Largest `m` with `phi(m) <= k` (used to bound supersingularity searches).
pub fn max_with_phi_at_most(k: u64) -> u64 {
    assert!(k >= 1);
    let bound = (2 * k * k + 1) as usize;
    with_phi_sieve(bound, |phi| {
        (1..=bound)
            .rev()
            .find(|&m| phi[m] <= k)
            .expect("phi(1) = 1 <= k") as u64
    })
}

/// Least `r >= 1` with `a^r = 1 mod m`. By convention the order modulo 1
/// is 1 (the degenerate case `m = p^k * s` with `s = 1` needs it).
pub fn multiplicative_order(a: u64, m: u64) -> Result<u64> {
    assert!(m >= 1, "multiplicative_order requires m >= 1");
    if m == 1 {
        return Ok(1);
    }
    let a = a % m;
    if num_integer::gcd(a, m) != 1 {
        return Err(Error::NotCoprime { base: a, modulus: m });
    }
    let mut order = euler_phi(m);
    for &(p, _) in factorize(order).unwrap().pairs() {
        while order % p == 0 && powmod(a, order / p, m) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// Legendre symbol `(a/p)` for an odd prime `p`: 0 exactly when `p | a`.
pub fn legendre(a: i64, p: u64) -> i32 {
    debug_assert!(p > 2 && is_prime(p), "legendre requires an odd prime");
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let s = powmod(r, (p - 1) / 2, p);
    if s == 1 {
        1
    } else {
        -1
    }
}

/// The quadratic character with `eps(a) = +1` exactly when `a = 1 mod 4`.
pub fn char_eps(a: i64) -> Result<i32> {
    if a % 2 == 0 {
        return Err(Error::EvenArgument(a));
    }
    Ok(if a.rem_euclid(4) == 1 { 1 } else { -1 })
}

/// The mod-8 character attached to sqrt(2): +1 on ±1, -1 on ±3.
pub fn char_two(a: i64) -> Result<i32> {
    if a % 2 == 0 {
        return Err(Error::EvenArgument(a));
    }
    Ok(match a.rem_euclid(8) {
        1 | 7 => 1,
        _ => -1,
    })
}

/// The mod-8 character attached to sqrt(-2): +1 on 1 and 3, -1 on -1 and -3.
pub fn char_minus_two(a: i64) -> Result<i32> {
    if a % 2 == 0 {
        return Err(Error::EvenArgument(a));
    }
    Ok(match a.rem_euclid(8) {
        1 | 3 => 1,
        _ => -1,
    })
}

/// `p* = (-1/p) p`: `p` when `p = 1 mod 4`, `-p` when `p = 3 mod 4`.
/// This is the discriminant-normalized prime with `sqrt(p*)` inside the
/// `p`-th cyclotomic field.
pub fn p_star(p: u64) -> i64 {
    debug_assert!(p > 2 && is_prime(p), "p_star requires an odd prime");
    if p % 4 == 1 {
        p as i64
    } else {
        -(p as i64)
    }
}

/// Sorted divisors of `n`.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut divs = vec![1u64];
    for &(p, e) in factorize(n).unwrap().pairs() {
        let base = divs.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            divs.extend(base.iter().map(|d| d * pk));
        }
    }
    divs.sort_unstable();
    divs
}

static CYCLOTOMIC_CACHE: Mutex<Option<HashMap<u64, IntegerPolynomial>>> = Mutex::new(None);

/// The `m`-th cyclotomic polynomial: monic of degree `phi(m)`.
///
/// Computed by the exact recursion `Phi_m = (X^m - 1) / prod_{d|m, d<m} Phi_d`
/// (successive exact divisions, no rational intermediates) and memoized
/// behind a mutex, so concurrent callers are fine.
pub fn cyclotomic(m: u64) -> IntegerPolynomial {
    assert!(m >= 1, "cyclotomic requires m >= 1");
    let mut guard = CYCLOTOMIC_CACHE.lock().unwrap();
    let cache = guard.get_or_insert_with(HashMap::new);
    if let Some(p) = cache.get(&m) {
        return p.clone();
    }
    for d in divisors(m) {
        if cache.contains_key(&d) {
            continue;
        }
        // X^d - 1
        let mut poly = &IntegerPolynomial::monomial(d as usize)
            - &IntegerPolynomial::one();
        for dd in divisors(d) {
            if dd < d {
                poly = poly
                    .divexact(&cache[&dd])
                    .expect("cyclotomic recursion divides exactly");
            }
        }
        cache.insert(d, poly);
    }
    cache[&m].clone()
}

/// `q = p^n` as an exact big integer.
pub fn prime_power(p: u64, n: u32) -> BigInt {
    let mut q = BigInt::one();
    for _ in 0..n {
        q *= p;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::IntegerPolynomial;

    #[test]
    fn factorize_examples() {
        assert_eq!(factorize(1).unwrap().pairs(), &[]);
        assert_eq!(factorize(12).unwrap().pairs(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(44).unwrap().pairs(), &[(2, 2), (11, 1)]);
        assert!(matches!(factorize(0), Err(Error::OutOfRange(_))));
        for n in 1..2000u64 {
            assert_eq!(factorize(n).unwrap().product(), n);
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(44), 20);
        assert_eq!(euler_phi(36), 12);
    }

    #[test]
    fn inverse_phi_examples() {
        assert!(inverse_phi(14).is_empty());
        assert_eq!(inverse_phi(2), vec![3, 4, 6]);
        assert_eq!(inverse_phi(4), vec![5, 8, 10, 12]);
        assert_eq!(inverse_phi(1), vec![1, 2]);
        for k in 1..=40u64 {
            for m in inverse_phi(k) {
                assert_eq!(euler_phi(m), k);
                assert!(m <= 2 * k * k + 1);
            }
        }
    }

    #[test]
    fn moebius_small() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(moebius(i as u64 + 1), e);
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(2, 3).unwrap(), 2);
        assert_eq!(multiplicative_order(7, 3).unwrap(), 1);
        assert_eq!(multiplicative_order(12345, 1).unwrap(), 1);
        assert!(matches!(
            multiplicative_order(6, 9),
            Err(Error::NotCoprime { .. })
        ));
        for m in 2..80u64 {
            for a in 1..m {
                if num_integer::gcd(a, m) == 1 {
                    let r = multiplicative_order(a, m).unwrap();
                    assert_eq!(powmod(a, r, m), 1);
                    assert_eq!(euler_phi(m) % r, 0, "order divides phi");
                }
            }
        }
    }

    #[test]
    fn legendre_examples_and_multiplicativity() {
        assert_eq!(legendre(1, 5), 1);
        assert_eq!(legendre(2, 5), -1);
        assert_eq!(legendre(5, 5), 0);
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            for a in 0..p as i64 {
                for b in 0..p as i64 {
                    assert_eq!(legendre(a * b, p), legendre(a, p) * legendre(b, p));
                }
            }
            // Counts residues and non-residues equally.
            let residues: i32 = (1..p as i64).map(|a| legendre(a, p)).sum();
            assert_eq!(residues, 0);
        }
    }

    #[test]
    fn characters() {
        assert_eq!(char_eps(5).unwrap(), 1);
        assert_eq!(char_eps(-1).unwrap(), -1);
        assert_eq!(char_two(3).unwrap(), -1);
        assert_eq!(char_two(7).unwrap(), 1);
        assert_eq!(char_minus_two(7).unwrap(), -1);
        assert_eq!(char_minus_two(3).unwrap(), 1);
        assert!(matches!(char_eps(4), Err(Error::EvenArgument(4))));
        // All three are characters on the odd residues mod 8.
        for chi in [char_eps, char_two, char_minus_two] {
            for a in [1i64, 3, 5, 7] {
                for b in [1i64, 3, 5, 7] {
                    assert_eq!(chi(a * b).unwrap(), chi(a).unwrap() * chi(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn p_star_examples() {
        assert_eq!(p_star(5), 5);
        assert_eq!(p_star(3), -3);
        assert_eq!(p_star(13), 13);
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1), IntegerPolynomial::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(4), IntegerPolynomial::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(12), IntegerPolynomial::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(
            cyclotomic(20),
            IntegerPolynomial::from_i64(&[1, 0, -1, 0, 1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn cyclotomic_product_identity() {
        // prod_{d | n} Phi_d = X^n - 1, exactly, for all n <= 200.
        for n in 1..=200u64 {
            let mut prod = IntegerPolynomial::one();
            for d in divisors(n) {
                prod = &prod * &cyclotomic(d);
            }
            let expect = &IntegerPolynomial::monomial(n as usize) - &IntegerPolynomial::one();
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn cyclotomic_even_support_for_multiples_of_four() {
        for m in (4..=200u64).step_by(4) {
            assert!(cyclotomic(m).is_even_support(), "Phi_{m}");
        }
    }

    #[test]
    fn cyclotomic_degree_is_phi() {
        for m in 1..=150u64 {
            assert_eq!(cyclotomic(m).degree().unwrap() as u64, euler_phi(m));
        }
    }

    #[test]
    fn max_phi_bound() {
        // phi(m) <= 4 holds last at m = 12.
        assert_eq!(max_with_phi_at_most(4), 12);
        assert_eq!(max_with_phi_at_most(8), 30);
        assert_eq!(max_with_phi_at_most(1), 2);
    }

    #[test]
    fn primality_spot_checks() {
        let primes = [2u64, 3, 5, 7, 11, 101, 65537, 2147483647];
        for p in primes {
            assert!(is_prime(p));
        }
        for c in [1u64, 4, 9, 100, 65539 * 3, 2147483647 * 2] {
            assert!(!is_prime(c));
        }
    }
}
