//! Orbi-lens spaces: cyclic quotients of the three-sphere.
//!
//! A finite cyclic subgroup of `SO(4)` acts on `S^3` by rotating two
//! orthogonal coordinate planes; the quotient orbifold is a lens space
//! with ramification along at most the two Heegaard cores. This module
//! computes the combinatorial invariants of such quotients and of the
//! resulting descriptors `L(p, q; b1, b2)`.

use core::fmt;

use crate::gcd_u64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbiLensError {
    /// A rotation order or isotropy order must be at least 1.
    NonPositiveOrder,
    /// A rotation angle must be coprime to its order.
    AngleNotCoprime,
    /// `p` and `q` must be coprime.
    NotPrimitive,
    /// The two isotropy orders must be coprime.
    IsotropyNotCoprime,
    /// Operation defined only for descriptors with `b1 = 1`.
    RamifiedFirstCore,
}

impl fmt::Display for OrbiLensError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbiLensError::NonPositiveOrder => {
                write!(f, "NonPositiveOrder: orders must be positive")
            }
            OrbiLensError::AngleNotCoprime => {
                write!(
                    f,
                    "AngleNotCoprime: rotation angle shares a factor with its order"
                )
            }
            OrbiLensError::NotPrimitive => write!(f, "NotPrimitive: gcd(p, q) != 1"),
            OrbiLensError::IsotropyNotCoprime => {
                write!(f, "IsotropyNotCoprime: gcd(b1, b2) != 1")
            }
            OrbiLensError::RamifiedFirstCore => {
                write!(f, "RamifiedFirstCore: operation requires b1 = 1")
            }
        }
    }
}

impl core::error::Error for OrbiLensError {}

/// A generator of a finite cyclic subgroup of `SO(4)`, acting as
/// `(z, w) -> (e^{2 pi i alpha1 / a1} z, e^{2 pi i alpha2 / a2} w)`
/// on the two coordinate planes of `C^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclicActionParams {
    a1: u64,
    alpha1: i64,
    a2: u64,
    alpha2: i64,
}

impl CyclicActionParams {
    pub fn new(a1: u64, alpha1: i64, a2: u64, alpha2: i64) -> Result<Self, OrbiLensError> {
        if a1 == 0 || a2 == 0 {
            return Err(OrbiLensError::NonPositiveOrder);
        }
        if gcd_u64(alpha1.unsigned_abs(), a1) != 1 || gcd_u64(alpha2.unsigned_abs(), a2) != 1 {
            return Err(OrbiLensError::AngleNotCoprime);
        }
        Ok(CyclicActionParams {
            a1,
            alpha1,
            a2,
            alpha2,
        })
    }

    /// Rotation orders only; the angles default to 1.
    pub fn from_orders(a1: u64, a2: u64) -> Result<Self, OrbiLensError> {
        CyclicActionParams::new(a1, 1, a2, 1)
    }

    pub fn a1(&self) -> u64 {
        self.a1
    }

    pub fn a2(&self) -> u64 {
        self.a2
    }

    pub fn alpha1(&self) -> i64 {
        self.alpha1
    }

    pub fn alpha2(&self) -> i64 {
        self.alpha2
    }
}

/// Invariants of the quotient of `S^3` by the cyclic group generated by a
/// [`CyclicActionParams`] rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuotientData {
    /// Order of the cyclic group: `lcm(a1, a2)`.
    pub n: u64,
    /// `a1 / gcd(a1, a2)`; ramification index along the second core.
    pub abar1: u64,
    /// `a2 / gcd(a1, a2)`; ramification index along the first core.
    pub abar2: u64,
    /// Order of the fundamental group of the underlying lens space:
    /// `gcd(a1, a2)`.
    pub base_order: u64,
}

impl fmt::Display for QuotientData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} abar1={} abar2={} base_order={}",
            self.n, self.abar1, self.abar2, self.base_order
        )
    }
}

/// Quotient invariants of the cyclic action: group order `n = lcm(a1, a2)`,
/// the reduced rotation orders, and the order of the base lens space group.
pub fn quotient_data(params: &CyclicActionParams) -> QuotientData {
    let g = gcd_u64(params.a1, params.a2);
    let n = (params.a1 as u128 * params.a2 as u128 / g as u128)
        .try_into()
        .expect("lcm overflows u64");
    QuotientData {
        n,
        abar1: params.a1 / g,
        abar2: params.a2 / g,
        base_order: g,
    }
}

/// Descriptor `L(p, q; b1, b2)`: a lens space `L(p, q)` with isotropy of
/// orders `b1`, `b2` along the cores of a genus-one Heegaard splitting.
///
/// `q` is reduced mod `p` into `[0, p)` at construction; `q = 0` occurs
/// only for `p = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbiLens {
    p: u64,
    q: u64,
    b1: u64,
    b2: u64,
}

impl OrbiLens {
    pub fn new(p: u64, q: i64, b1: u64, b2: u64) -> Result<OrbiLens, OrbiLensError> {
        if p == 0 || b1 == 0 || b2 == 0 {
            return Err(OrbiLensError::NonPositiveOrder);
        }
        let q = q.rem_euclid(p as i64) as u64;
        if gcd_u64(p, q) != 1 {
            return Err(OrbiLensError::NotPrimitive);
        }
        if gcd_u64(b1, b2) != 1 {
            return Err(OrbiLensError::IsotropyNotCoprime);
        }
        Ok(OrbiLens { p, q, b1, b2 })
    }

    /// The one-cored form `L(p, q; a) = L(p, q; 1, a)`.
    pub fn with_single_core(p: u64, q: i64, a: u64) -> Result<OrbiLens, OrbiLensError> {
        OrbiLens::new(p, q, 1, a)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn b1(&self) -> u64 {
        self.b1
    }

    pub fn b2(&self) -> u64 {
        self.b2
    }
}

impl fmt::Display for OrbiLens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{};{},{})", self.p, self.q, self.b1, self.b2)
    }
}

/// Order of the orbifold fundamental group: `b1 * b2 * p`.
pub fn fundamental_group_order(l: &OrbiLens) -> u64 {
    (l.b1 as u128 * l.b2 as u128 * l.p as u128)
        .try_into()
        .expect("fundamental group order overflows u64")
}

/// Whether the preimage in `S^3` of a winding-number-`w` knot in
/// `L(p, q; a)` is connected, i.e. `gcd(w, a*p) = 1`.
///
/// Only descriptors with `b1 = 1` are accepted.
pub fn unwrap_is_knot(w: u64, l: &OrbiLens) -> Result<bool, OrbiLensError> {
    if l.b1 != 1 {
        return Err(OrbiLensError::RamifiedFirstCore);
    }
    let ap: u64 = (l.b2 as u128 * l.p as u128)
        .try_into()
        .expect("covering order overflows u64");
    Ok(gcd_u64(w, ap) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_data_examples() {
        let d = quotient_data(&CyclicActionParams::from_orders(2, 3).unwrap());
        assert_eq!(
            d,
            QuotientData {
                n: 6,
                abar1: 2,
                abar2: 3,
                base_order: 1
            }
        );

        let d = quotient_data(&CyclicActionParams::from_orders(1, 1).unwrap());
        assert_eq!(
            d,
            QuotientData {
                n: 1,
                abar1: 1,
                abar2: 1,
                base_order: 1
            }
        );

        let d = quotient_data(&CyclicActionParams::from_orders(4, 6).unwrap());
        assert_eq!(
            d,
            QuotientData {
                n: 12,
                abar1: 2,
                abar2: 3,
                base_order: 2
            }
        );
    }

    #[test]
    fn quotient_identities_exhaustive() {
        for a1 in 1..=50 {
            for a2 in 1..=50 {
                let d = quotient_data(&CyclicActionParams::from_orders(a1, a2).unwrap());
                assert_eq!(gcd_u64(d.abar1, d.abar2), 1);
                assert_eq!(d.abar1 * d.base_order, a1);
                assert_eq!(d.abar2 * d.base_order, a2);
                assert_eq!(d.n, d.abar1 * d.abar2 * d.base_order);
            }
        }
    }

    #[test]
    fn angles_must_be_coprime() {
        assert!(CyclicActionParams::new(4, 2, 3, 1).is_err());
        assert!(CyclicActionParams::new(4, 3, 3, 2).is_ok());
        assert!(CyclicActionParams::new(0, 1, 3, 1).is_err());
    }

    #[test]
    fn group_order_examples() {
        let l = OrbiLens::new(5, 2, 1, 1).unwrap();
        assert_eq!(fundamental_group_order(&l), 5);
        let l = OrbiLens::new(5, 2, 1, 3).unwrap();
        assert_eq!(fundamental_group_order(&l), 15);
        let l = OrbiLens::new(1, 0, 2, 3).unwrap();
        assert_eq!(fundamental_group_order(&l), 6);
    }

    #[test]
    fn q_reduction() {
        assert_eq!(OrbiLens::new(5, 7, 1, 1).unwrap().q(), 2);
        assert_eq!(OrbiLens::new(5, -3, 1, 1).unwrap().q(), 2);
        assert_eq!(OrbiLens::new(1, 4, 1, 1).unwrap().q(), 0);
        // q = 0 with p > 1 is not primitive.
        assert_eq!(OrbiLens::new(5, 5, 1, 1), Err(OrbiLensError::NotPrimitive));
    }

    #[test]
    fn unwrap_connectivity_examples() {
        let l = OrbiLens::with_single_core(5, 2, 2).unwrap();
        assert_eq!(unwrap_is_knot(3, &l), Ok(true));
        assert_eq!(unwrap_is_knot(2, &l), Ok(false));
        assert_eq!(unwrap_is_knot(1, &l), Ok(true));
        let ramified = OrbiLens::new(1, 0, 2, 3).unwrap();
        assert_eq!(
            unwrap_is_knot(3, &ramified),
            Err(OrbiLensError::RamifiedFirstCore)
        );
    }

    #[test]
    fn unwrap_unit_winding_always_connected() {
        for p in 1..=20 {
            for q in 0..p as i64 {
                if gcd_u64(p, q as u64) != 1 {
                    continue;
                }
                for a in 1..=10 {
                    let l = OrbiLens::with_single_core(p, q, a).unwrap();
                    assert_eq!(unwrap_is_knot(1, &l), Ok(true));
                }
            }
        }
    }
}
