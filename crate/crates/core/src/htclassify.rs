//! The enumeration engine: every isogeny class of simple supersingular
//! abelian varieties of a given dimension over F_q, identified by its
//! characteristic polynomial of Frobenius.
//!
//! For odd exponent the classes come from minimal polynomials of
//! `sqrt(±q) zeta_4t` together with the one real-rooted class `X^2 - q`
//! (which carries multiplicity 2 and lives in dimension 2). For even
//! exponent they are scaled cyclotomic polynomials `Phi_m` with the
//! multiplicity decided by the parity of the residue degree of `p`.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::numthy::{inverse_phi, is_prime, multiplicative_order, prime_power};
use crate::polyarith::IntegerPolynomial;
use crate::weilmin::{minimal_poly_even, minimal_poly_odd, FieldParameters, OddCaseTag};
use crate::Sign;

/// Which branch of the classification produced a record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// Odd exponent, scaled cyclotomic minimal polynomial.
    Normal,
    /// Odd exponent, scaled half-cyclotomic for the odd prime `p`.
    ExcOddP,
    /// Odd exponent, `q' > 0`, radicand 2.
    ExcTwoPlus,
    /// Odd exponent, `q' < 0`, radicand -2.
    ExcTwoMinus,
    /// Odd exponent, the real-rooted class `(X^2 - q)^2` in dimension 2.
    RealOdd,
    /// Even exponent, scaled cyclotomic `Phi_m` (possibly squared).
    EvenCyclotomic,
    /// Even exponent, the real classes `(X ± sqrt(q))^2` from `m = 1, 2`.
    EvenReal,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::Normal => "Normal",
            CaseTag::ExcOddP => "ExcOddP",
            CaseTag::ExcTwoPlus => "ExcTwoPlus",
            CaseTag::ExcTwoMinus => "ExcTwoMinus",
            CaseTag::RealOdd => "RealOdd",
            CaseTag::EvenCyclotomic => "EvenCyclotomic",
            CaseTag::EvenReal => "EvenReal",
        }
    }
}

/// Which of the two sign variants of an exceptional pair a record is;
/// `NotApplicable` (serialized as "none") everywhere else.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SignVariant {
    A,
    B,
    NotApplicable,
}

impl SignVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            SignVariant::A => "A",
            SignVariant::B => "B",
            SignVariant::NotApplicable => "none",
        }
    }
}

/// One isogeny class of simple supersingular abelian varieties.
///
/// The characteristic polynomial is `weil_poly^e` with `weil_poly`
/// irreducible and `e` in {1, 2}; `deg(weil_poly) * e = 2g` always holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyClassRecord {
    /// Field parameters; the sign is the witness that produced the record
    /// (only meaningful for odd exponent).
    pub field: FieldParameters,
    /// Dimension of the abelian variety.
    pub g: u32,
    pub case_tag: CaseTag,
    /// The defining `t` (odd exponent) or `m` (even exponent).
    pub param: u64,
    pub sign_variant: SignVariant,
    /// Irreducible minimal Weil polynomial.
    pub weil_poly: IntegerPolynomial,
    /// Multiplicity: 1 or 2.
    pub e: u8,
    /// `weil_poly^e`, the characteristic polynomial of Frobenius.
    pub char_poly: IntegerPolynomial,
}

impl IsogenyClassRecord {
    fn new(
        field: FieldParameters,
        g: u32,
        case_tag: CaseTag,
        param: u64,
        sign_variant: SignVariant,
        weil_poly: IntegerPolynomial,
        e: u8,
    ) -> Self {
        let char_poly = weil_poly.pow(e as u32);
        debug_assert_eq!(
            weil_poly.degree().unwrap() as u64 * e as u64,
            2 * g as u64,
            "dimension identity deg * e = 2g"
        );
        IsogenyClassRecord {
            field,
            g,
            case_tag,
            param,
            sign_variant,
            weil_poly,
            e,
            char_poly,
        }
    }
}

/// The residue degree `r` of `p` in the `m`-th cyclotomic field and the
/// multiplicity `e` it forces: `e = 1` for even `r`, `e = 2` for odd `r`.
///
/// For `p` not dividing `m` this is the multiplicative order of `p` mod
/// `m`; for `m = p^k s` it is `ord(p mod s) * (p^k - p^(k-1))`.
pub fn multiplicity_even(p: u64, m: u64) -> (u64, u8) {
    assert!(m >= 1, "m must be positive");
    assert!(is_prime(p), "p must be prime");
    let r = if m % p != 0 {
        multiplicative_order(p, m).expect("coprime by construction")
    } else {
        let mut s = m;
        let mut pk = 1u64;
        while s % p == 0 {
            s /= p;
            pk *= p;
        }
        let f = multiplicative_order(p, s).expect("p-free part is coprime");
        f * (pk - pk / p)
    };
    let e = if r % 2 == 0 { 1 } else { 2 };
    (r, e)
}

/// All isogeny classes of dimension `g` over `F_{p^n}` with `n` even.
pub fn enumerate_even(p: u64, n: u32, g: u32) -> Result<Vec<IsogenyClassRecord>> {
    check_inputs(p, n, g)?;
    if n % 2 != 0 {
        return Err(Error::BadArguments("enumerate_even requires even n".into()));
    }
    let fp = FieldParameters::new(p, n)?;
    let mut records = Vec::new();
    // Unsquared classes: phi(m) = 2g with even residue degree.
    for m in inverse_phi(2 * g as u64) {
        let (_, e) = multiplicity_even(p, m);
        if e == 1 {
            let weil = minimal_poly_even(&fp, m);
            records.push(IsogenyClassRecord::new(
                fp.clone(),
                g,
                CaseTag::EvenCyclotomic,
                m,
                SignVariant::NotApplicable,
                weil,
                1,
            ));
        }
    }
    // Squared classes: phi(m) = g with odd residue degree. For g = 1 this
    // is m in {1, 2}, the real classes (X ∓ sqrt(q))^2.
    for m in inverse_phi(g as u64) {
        let (_, e) = multiplicity_even(p, m);
        if e == 2 {
            let weil = minimal_poly_even(&fp, m);
            let tag = if m <= 2 {
                CaseTag::EvenReal
            } else {
                CaseTag::EvenCyclotomic
            };
            records.push(IsogenyClassRecord::new(
                fp.clone(),
                g,
                tag,
                m,
                SignVariant::NotApplicable,
                weil,
                2,
            ));
        }
    }
    Ok(sorted(dedup(records)))
}

/// All isogeny classes of dimension `g` over `F_{p^n}` with `n` odd.
pub fn enumerate_odd(p: u64, n: u32, g: u32) -> Result<Vec<IsogenyClassRecord>> {
    check_inputs(p, n, g)?;
    if n % 2 != 1 {
        return Err(Error::BadArguments("enumerate_odd requires odd n".into()));
    }
    let q = prime_power(p, n);
    let real_weil =
        IntegerPolynomial::from_coeffs(vec![-&q, BigInt::from(0), BigInt::from(1)]);
    let mut records = Vec::new();
    // The only real-rooted minimal Weil polynomial is X^2 - q; its local
    // invariants force multiplicity 2, so it contributes to dimension 2.
    if g == 2 {
        let fp = FieldParameters::with_sign(p, n, Sign::Minus)?;
        records.push(IsogenyClassRecord::new(
            fp,
            g,
            CaseTag::RealOdd,
            1,
            SignVariant::NotApplicable,
            real_weil.clone(),
            2,
        ));
    }
    for sign in [Sign::Plus, Sign::Minus] {
        let fp = FieldParameters::with_sign(p, n, sign)?;
        // Normal-case candidates: phi(4t) = 2g.
        for t in candidate_t(2 * g as u64) {
            let (tag, polys) = minimal_poly_odd(&fp, t);
            if tag != OddCaseTag::Normal {
                continue; // exceptional here means degree g: dimension g/2
            }
            let weil = polys.into_iter().next().unwrap();
            if weil == real_weil {
                continue; // routed to dimension 2 with multiplicity 2
            }
            records.push(IsogenyClassRecord::new(
                fp.clone(),
                g,
                CaseTag::Normal,
                t,
                SignVariant::NotApplicable,
                weil,
                1,
            ));
        }
        // Exceptional-case candidates: phi(4t) = 4g, both sign variants.
        for t in candidate_t(4 * g as u64) {
            let (tag, polys) = minimal_poly_odd(&fp, t);
            let case = match tag {
                OddCaseTag::Normal => continue, // degree 2g at dimension 2g
                OddCaseTag::ExcOddP => CaseTag::ExcOddP,
                OddCaseTag::ExcTwoPlus => CaseTag::ExcTwoPlus,
                OddCaseTag::ExcTwoMinus => CaseTag::ExcTwoMinus,
            };
            let mut variants = polys.into_iter();
            let a = variants.next().unwrap();
            let b = variants.next().unwrap();
            records.push(IsogenyClassRecord::new(
                fp.clone(),
                g,
                case,
                t,
                SignVariant::A,
                a,
                1,
            ));
            records.push(IsogenyClassRecord::new(
                fp.clone(),
                g,
                case,
                t,
                SignVariant::B,
                b,
                1,
            ));
        }
    }
    Ok(sorted(dedup(records)))
}

/// Dimension-`g` isogeny classes over `F_{p^n}`, dispatching on the parity
/// of the exponent.
pub fn enumerate(p: u64, n: u32, g: u32) -> Result<Vec<IsogenyClassRecord>> {
    check_inputs(p, n, g)?;
    if n % 2 == 1 {
        enumerate_odd(p, n, g)
    } else {
        enumerate_even(p, n, g)
    }
}

fn check_inputs(p: u64, n: u32, g: u32) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::OutOfRange("exponent n must be >= 1".into()));
    }
    if g == 0 {
        return Err(Error::OutOfRange("dimension g must be >= 1".into()));
    }
    Ok(())
}

/// The `t` with `phi(4t) = k`: members of the totient preimage of `k`
/// divisible by 4, each divided by 4.
fn candidate_t(k: u64) -> Vec<u64> {
    inverse_phi(k)
        .into_iter()
        .filter(|m| m % 4 == 0)
        .map(|m| m / 4)
        .collect()
}

/// Removes coefficientwise duplicates of the Weil polynomial. Insertion
/// order is (sign, t, variant)-ascending, so the surviving witness is the
/// lexicographically smallest provenance.
fn dedup(records: Vec<IsogenyClassRecord>) -> Vec<IsogenyClassRecord> {
    let mut seen: HashMap<Vec<BigInt>, usize> = HashMap::new();
    let mut kept = Vec::new();
    for rec in records {
        let key = rec.weil_poly.coeffs().to_vec();
        if seen.contains_key(&key) {
            continue;
        }
        seen.insert(key, kept.len());
        kept.push(rec);
    }
    kept
}

/// Canonical output order: by degree, then ascending coefficient sequence.
fn sorted(mut records: Vec<IsogenyClassRecord>) -> Vec<IsogenyClassRecord> {
    records.sort_by(|a, b| {
        let ka = (a.weil_poly.coeffs().len(), a.weil_poly.coeffs());
        let kb = (b.weil_poly.coeffs().len(), b.weil_poly.coeffs());
        ka.cmp(&kb)
    });
    records
}
