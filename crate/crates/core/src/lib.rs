//! Combinatorial machinery for deciding when the exterior of a one-bridge
//! braid in a solid torus fibres over the circle, together with the slope,
//! surgery and orbi-lens arithmetic that surrounds that question.
//!
//! The crate is organised around a small pipeline:
//!
//! - [`braid`]: a one-bridge braid `(n, b, t)`, its strand permutation and
//!   the relator of the one-relator presentation of its exterior's
//!   fundamental group;
//! - [`brown`]: Brown's finitely-generated-kernel criterion for a weight
//!   homomorphism on a two-generator one-relator group;
//! - [`fibration`]: the weight homomorphism attached to a boundary slope,
//!   the resulting fibration verdict, and rational approximation of
//!   homology classes by fibre classes;
//! - [`slope`]: slopes on a torus, their geometric intersection distance,
//!   and the parity obstruction coming from orientation-reversing
//!   involutions;
//! - [`orbilens`]: invariants of cyclic quotients of the three-sphere;
//! - [`surgery`]: the lens-space order produced by a cosmetic surgery on a
//!   Berge-Gabai knot;
//! - [`alexander`]: an independent Alexander-polynomial oracle built on Fox
//!   calculus, used to cross-check fibration verdicts.
//!
//! All arithmetic is exact. Intermediate products are widened to 128 bits;
//! a result that cannot be narrowed back is a hard panic, never a silent
//! wraparound. The crate is `no_std` (with `alloc`).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alexander;
pub mod braid;
pub mod brown;
pub mod fibration;
pub mod orbilens;
pub mod slope;
pub mod surgery;
pub mod word;

pub use braid::BraidParams;
pub use brown::{BrownVerdict, WeightHom};
pub use fibration::FibrationVerdict;
pub use slope::Slope;
pub use word::Word;

/// Greatest common divisor of two non-negative integers.
pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Greatest common divisor through absolute values; `gcd(0, 0) = 0`.
pub(crate) fn gcd_i64(a: i64, b: i64) -> u64 {
    gcd_u64(a.unsigned_abs(), b.unsigned_abs())
}
