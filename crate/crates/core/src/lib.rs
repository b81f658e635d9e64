//! Exact classification of the characteristic polynomials of Frobenius of
//! simple supersingular abelian varieties over finite fields.
//!
//! Every root of such a characteristic polynomial is `sqrt(q)` times a
//! root of unity, so the whole classification reduces to exact integer
//! arithmetic: cyclotomic polynomials, Gauss sums as square-root models,
//! Legendre-twisted "half-cyclotomic" polynomials, and a square-root
//! scaling operator. This crate implements that classification for any
//! `F_q` and any dimension, together with counting and existence results
//! and independent verification oracles.
//!
//! # Modules
//!
//! - [`polyarith`] — dense exact integer polynomials (the substrate).
//! - [`numthy`] — totients and their inverses, orders, characters, `Phi_m`.
//! - [`cyclofield`] — arithmetic in Z[zeta_N], Gauss sums, quadratic descent.
//! - [`psipoly`] — the half-cyclotomic polynomials over Z[sqrt(d)].
//! - [`weilmin`] — the scaling operator and minimal polynomials of
//!   supersingular Weil numbers.
//! - [`htclassify`] — enumeration of isogeny classes per dimension.
//! - [`census`] — counts, existence verdicts, gap dimensions.
//! - [`oracle`] — independent checks: structure, exact supersingularity,
//!   brute-force search, numeric root moduli.
//! - [`report`] — JSON / CSV / text / table renderings.
//!
//! # Quick start
//!
//! ```
//! use ssav::htclassify::enumerate;
//!
//! // Every isogeny class of simple supersingular abelian surfaces over F_3.
//! for record in enumerate(3, 1, 2).unwrap() {
//!     println!("{} (e = {})", record.char_poly, record.e);
//! }
//! ```
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p ssav --example enumerate_classes
//! cargo run -p ssav --example summary_tables
//! cargo run -p ssav --example psi_identities
//! cargo run -p ssav --example gap_census
//! cargo run -p ssav --example verify_enumeration
//! cargo run -p ssav --example count_comparison
//! ```
//!
//! A thin `ssav` binary exposes the same operations as subcommands with
//! stable JSON/CSV output; see the crate README.

pub mod census;
pub mod cyclofield;
pub mod error;
pub mod htclassify;
pub mod numthy;
pub mod oracle;
pub mod polyarith;
pub mod psipoly;
pub mod report;
pub mod weilmin;

pub use error::{Error, Result};
pub use htclassify::IsogenyClassRecord;
pub use polyarith::IntegerPolynomial;

/// Sign selector shared by the signed prime power `q' = ±p^n` and the
/// `±2` radicands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}
