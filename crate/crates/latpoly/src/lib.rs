//! Exact-arithmetic toolkit for lattice polytopes.
//!
//! Everything here is computed over arbitrary-precision integers and
//! rationals; no floating point enters any kernel path. The toolkit covers:
//!
//! * convex hulls, irredundant facet descriptions, face lattices and
//!   lattice-normalized volumes ([`polytope`], [`faces`]);
//! * regularity of lattice polytopes: simplicity, smoothness, edge lattice
//!   lengths and jet-spanning levels ([`regularity`]);
//! * discriminant degrees and dual defect via alternating face-volume sums
//!   ([`defect`]);
//! * Cayley sums and detection of Cayley decompositions onto unimodular
//!   simplices ([`cayley`]);
//! * polyhedral adjunction: adjoint polytopes `P^(s)`, Q-codegree, nef value,
//!   core and codegree ([`adjunction`]);
//! * a verifier that cross-checks the equivalence of the Cayley, codegree and
//!   vanishing-sum characterizations on smooth polytopes ([`verifier`]).
//!
//! The `examples/` directory contains one runnable program per capability;
//! `cargo run --example smooth_equivalence` is a good starting point. A thin
//! CLI binary (`latpoly`) exposes the same operations on JSON polytope
//! documents, see [`cli`].

pub mod adjunction;
pub mod cayley;
pub mod cli;
pub mod defect;
pub mod document;
pub mod faces;
pub mod fan;
pub mod lattice_points;
pub mod linalg;
pub mod lp;
pub mod polytope;
pub mod regularity;
pub mod report;
pub mod verifier;

mod error;

pub use error::{Error, Result};

/// Arbitrary-precision integer used throughout the crate.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

/// Shorthand for building an `Int` from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for building a `Rat` from a machine integer.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Shorthand for building the rational `p/q`. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Formats a rational canonically: plain integer when the denominator is 1,
/// `p/q` with `q > 0` otherwise.
pub fn rat_string(r: &Rat) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the canonical rational format produced by [`rat_string`].
pub fn parse_rat(s: &str) -> Result<Rat> {
    use num_traits::Zero;
    let s = s.trim();
    let make_err = || Error::Document(format!("malformed rational `{s}`"));
    if let Some((p, q)) = s.split_once('/') {
        let p: Int = p.trim().parse().map_err(|_| make_err())?;
        let q: Int = q.trim().parse().map_err(|_| make_err())?;
        if q.is_zero() {
            return Err(Error::Document(format!("zero denominator in `{s}`")));
        }
        Ok(Rat::new(p, q))
    } else {
        let p: Int = s.parse().map_err(|_| make_err())?;
        Ok(Rat::from_integer(p))
    }
}
