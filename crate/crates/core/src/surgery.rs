//! Cosmetic-surgery homology for Berge-Gabai knots.
//!
//! A Berge-Gabai knot of winding number `w` in a solid torus `V_1` inside
//! a lens space `L(p, q)` admits a cosmetic surgery slope
//! `r = +-(m mu_0 + lambda_0)` with `gcd(m, w) = 1`. Surgery along `r`
//! turns `V_1` back into a solid torus whose meridian slope reads
//! `m mu_1 + w^2 lambda_1` on `partial V_1`, so the surgered ambient space
//! is a lens space whose group order is the distance
//! `p' = |m p - q w^2|` to the meridian `q mu_1 + p lambda_1` of the
//! complementary solid torus. The hypotheses force `gcd(p, p') = 1`.

use core::fmt;

use crate::gcd_u64;
use crate::slope::Slope;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurgeryError {
    /// One of the gcd preconditions `gcd(p, q) = gcd(p, w) = gcd(m, w) = 1`
    /// fails, or a parameter is out of range.
    InvalidInput,
    /// The surgered order vanishes: `m p = q w^2`. This can only happen
    /// for `p = w = 1`, `m = q`, outside the geometric range of winding
    /// numbers, and is rejected rather than reported as a lens space.
    DegenerateSurgery,
    /// Intermediate arithmetic left the 64-bit range.
    Overflow,
}

impl fmt::Display for SurgeryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurgeryError::InvalidInput => {
                write!(
                    f,
                    "InvalidInput: gcd(p,q), gcd(p,w), gcd(m,w) must all be 1"
                )
            }
            SurgeryError::DegenerateSurgery => {
                write!(f, "DegenerateSurgery: m p - q w^2 = 0")
            }
            SurgeryError::Overflow => write!(f, "Overflow: surgery parameter out of range"),
        }
    }
}

impl core::error::Error for SurgeryError {}

/// Input data for a cosmetic surgery on a Berge-Gabai knot: the ambient
/// lens space `L(p, q)`, the winding number `w`, and the surgery
/// parameter `m` of the slope `m mu_0 + lambda_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BGSurgeryInput {
    p: u64,
    q: i64,
    w: u64,
    m: i64,
}

impl BGSurgeryInput {
    pub fn new(p: u64, q: i64, w: u64, m: i64) -> Result<BGSurgeryInput, SurgeryError> {
        if p == 0 || w == 0 {
            return Err(SurgeryError::InvalidInput);
        }
        if gcd_u64(p, q.unsigned_abs()) != 1
            || gcd_u64(p, w) != 1
            || gcd_u64(m.unsigned_abs(), w) != 1
        {
            return Err(SurgeryError::InvalidInput);
        }
        Ok(BGSurgeryInput { p, q, w, m })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn w(&self) -> u64 {
        self.w
    }

    pub fn m(&self) -> i64 {
        self.m
    }
}

/// Result of the surgery: the order `p'` of the surgered lens space's
/// fundamental group, and the meridian image `m mu_1 + w^2 lambda_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurgeryResult {
    /// `p' = |m p - q w^2|`, never zero, coprime to `p`.
    pub p_prime: u64,
    /// Coefficients `(m, w^2)` of the new meridian in the
    /// `(mu_1, lambda_1)` basis.
    pub meridian_image: (i64, u64),
}

/// The surgered lens-space order `p' = |m p - q w^2|` with its
/// coprimality certificate `gcd(p, p') = 1`.
pub fn cosmetic_surgery_lens(input: &BGSurgeryInput) -> Result<SurgeryResult, SurgeryError> {
    let w_sq: u64 = (input.w as u128 * input.w as u128)
        .try_into()
        .map_err(|_| SurgeryError::Overflow)?;
    let det = input.m as i128 * input.p as i128 - input.q as i128 * w_sq as i128;
    let p_prime = u64::try_from(det.unsigned_abs()).map_err(|_| SurgeryError::Overflow)?;
    if p_prime == 0 {
        return Err(SurgeryError::DegenerateSurgery);
    }
    debug_assert_eq!(gcd_u64(input.p, p_prime), 1);
    Ok(SurgeryResult {
        p_prime,
        meridian_image: (input.m, w_sq),
    })
}

/// The cosmetic surgery slope `+-(m mu_0 + lambda_0)` as a canonical
/// slope in the `(lambda_0, mu_0)` ordering.
pub fn surgery_slope(m: i64) -> Slope {
    Slope::new(1, m).expect("(1, m) is primitive")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn input(p: u64, q: i64, w: u64, m: i64) -> BGSurgeryInput {
        BGSurgeryInput::new(p, q, w, m).unwrap()
    }

    #[test]
    fn lens_order_examples() {
        assert_eq!(
            cosmetic_surgery_lens(&input(5, 2, 3, 1)).unwrap().p_prime,
            13
        );
        assert_eq!(
            cosmetic_surgery_lens(&input(1, 0, 1, 1)).unwrap().p_prime,
            1
        );
        assert_eq!(
            cosmetic_surgery_lens(&input(3, 1, 2, 1)).unwrap().p_prime,
            1
        );
    }

    #[test]
    fn meridian_image_coefficients() {
        let r = cosmetic_surgery_lens(&input(5, 2, 3, -4)).unwrap();
        assert_eq!(r.meridian_image, (-4, 9));
        assert_eq!(r.p_prime, 38);
    }

    #[test]
    fn precondition_checks() {
        assert_eq!(
            BGSurgeryInput::new(4, 2, 1, 1),
            Err(SurgeryError::InvalidInput)
        );
        assert_eq!(
            BGSurgeryInput::new(4, 1, 2, 1),
            Err(SurgeryError::InvalidInput)
        );
        assert_eq!(
            BGSurgeryInput::new(5, 1, 2, 4),
            Err(SurgeryError::InvalidInput)
        );
        assert_eq!(
            BGSurgeryInput::new(0, 1, 1, 1),
            Err(SurgeryError::InvalidInput)
        );
        // m = 0 forces w = 1 through gcd(m, w) = w.
        assert_eq!(
            BGSurgeryInput::new(3, 1, 2, 0),
            Err(SurgeryError::InvalidInput)
        );
        assert!(BGSurgeryInput::new(3, 1, 1, 0).is_ok());
    }

    // The only arithmetic zero of |mp - qw^2| under the gcd preconditions
    // is p = w = 1, m = q.
    #[test]
    fn degenerate_corner() {
        assert_eq!(
            cosmetic_surgery_lens(&input(1, 5, 1, 5)),
            Err(SurgeryError::DegenerateSurgery)
        );
        assert_eq!(
            cosmetic_surgery_lens(&input(1, 0, 1, 0)),
            Err(SurgeryError::DegenerateSurgery)
        );
        for w in 2..=40u64 {
            for p in 1..=40u64 {
                if gcd_u64(p, w) != 1 {
                    continue;
                }
                for q in -8..=8i64 {
                    for m in -8..=8i64 {
                        let Ok(inp) = BGSurgeryInput::new(p, q, w, m) else {
                            continue;
                        };
                        assert_ne!(
                            m as i128 * p as i128,
                            q as i128 * (w * w) as i128,
                            "{inp:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn coprimality_small_exhaustive() {
        for p in 1..=25u64 {
            for q in -25..=25i64 {
                for w in 1..=25u64 {
                    for m in -10..=10i64 {
                        let Ok(inp) = BGSurgeryInput::new(p, q, w, m) else {
                            continue;
                        };
                        let Ok(res) = cosmetic_surgery_lens(&inp) else {
                            continue;
                        };
                        assert_eq!(gcd_u64(p, res.p_prime), 1);
                        // gcd(p, |mp - qw^2|) = gcd(p, q w^2 mod p).
                        let qw2 =
                            (q as i128 * (w as i128) * (w as i128)).rem_euclid(p as i128) as u64;
                        assert_eq!(gcd_u64(p, res.p_prime), gcd_u64(p, qw2));
                    }
                }
            }
        }
    }

    #[test]
    fn surgery_slope_examples() {
        assert_eq!(surgery_slope(0), Slope::new(1, 0).unwrap());
        assert_eq!(surgery_slope(1), Slope::new(1, 1).unwrap());
        assert_eq!(surgery_slope(-2), Slope::new(1, -2).unwrap());
    }
}
