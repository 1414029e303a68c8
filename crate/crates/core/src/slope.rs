//! Slopes on a torus and their intersection arithmetic.
//!
//! A slope is an isotopy class of essential simple closed curves, identified
//! with a primitive class `p·mu + q·lambda` in the first homology of the
//! torus, up to sign. We store the canonical representative with `p > 0`,
//! or `(0, 1)` when the meridian coefficient vanishes.

use alloc::vec::Vec;
use core::fmt;

use crate::gcd_i64;

/// A sign, `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Error raised when a pair of integers does not describe a slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SlopeError {
    /// Both coordinates are zero.
    ZeroClass,
    /// A coordinate is too large for exact canonicalisation.
    Overflow,
}

impl fmt::Display for SlopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlopeError::ZeroClass => write!(f, "ZeroClass: (0, 0) is not a slope"),
            SlopeError::Overflow => write!(f, "Overflow: slope coordinate out of range"),
        }
    }
}

impl core::error::Error for SlopeError {}

/// A slope, stored as the canonical primitive pair `(p, q)`.
///
/// Canonical form: `p > 0`, or `(p, q) = (0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    /// The slope of the class `p·mu + q·lambda`.
    ///
    /// The pair is divided by its gcd and sign-normalised, so any nonzero
    /// integer pair is accepted and mapped to the primitive class it spans.
    pub fn new(p: i64, q: i64) -> Result<Slope, SlopeError> {
        if p == 0 && q == 0 {
            return Err(SlopeError::ZeroClass);
        }
        if p == i64::MIN || q == i64::MIN {
            return Err(SlopeError::Overflow);
        }
        let g = gcd_i64(p, q) as i64;
        let (mut p, mut q) = (p / g, q / g);
        if p < 0 || (p == 0 && q < 0) {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    /// Meridian coefficient of the canonical representative.
    pub fn p(&self) -> i64 {
        self.p
    }

    /// Longitude coefficient of the canonical representative.
    pub fn q(&self) -> i64 {
        self.q
    }

    /// The meridian slope `(1, 0)`.
    pub fn meridian() -> Slope {
        Slope { p: 1, q: 0 }
    }

    /// The longitude slope `(0, 1)`.
    pub fn longitude() -> Slope {
        Slope { p: 0, q: 1 }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

fn narrow(det: i128) -> u64 {
    u64::try_from(det.unsigned_abs()).expect("slope distance overflows u64")
}

/// Geometric intersection distance `|p1·q2 - p2·q1|` of two slopes.
///
/// Symmetric, and zero exactly when the slopes coincide.
pub fn distance(r1: Slope, r2: Slope) -> u64 {
    let det = r1.p as i128 * r2.q as i128 - r2.p as i128 * r1.q as i128;
    narrow(det)
}

/// Image of a slope under the orientation-reversing involution sending
/// `mu -> -eps·mu` and `lambda -> eps·lambda`, as a canonical slope.
pub fn involution_image(r: Slope, eps: Sign) -> Slope {
    let e = eps.value();
    Slope::new(-e * r.p, e * r.q).expect("involution image of a slope is a slope")
}

/// Distance from a slope to its involution image: `2|pq|`.
///
/// Zero exactly on the meridian and the longitude; always even, which is
/// the parity obstruction for slopes invariant under the involution.
pub fn involution_distance(r: Slope) -> u64 {
    narrow(2 * r.p as i128 * r.q as i128)
}

/// All canonical slopes with `|p| <= bound` and `|q| <= bound`.
///
/// `q` runs in the balanced order `0, 1, -1, 2, -2, ...`, so searches
/// seeded by this enumeration prefer small non-negative slopes.
pub fn enumerate_canonical(bound: u32) -> Vec<Slope> {
    let b = bound as i64;
    let mut out = Vec::new();
    if bound >= 1 {
        out.push(Slope::longitude());
    }
    for p in 1..=b {
        for mag in 0..=b {
            let signs: &[i64] = if mag == 0 { &[0] } else { &[mag, -mag] };
            for &q in signs {
                if gcd_i64(p, q) == 1 {
                    out.push(Slope { p, q });
                }
            }
        }
    }
    out
}

/// Largest set of canonical slopes with `|p|, |q| <= bound` that are
/// pairwise at distance at most one, found by exhaustive search.
///
/// Returns the size together with one witness set. For every `bound >= 1`
/// the size is 3: distance-one triples exist (for example the Farey triple
/// `(1,0), (0,1), (1,1)`) but no four slopes are pairwise this close.
pub fn max_close_clique(bound: u32) -> (usize, Vec<Slope>) {
    let slopes = enumerate_canonical(bound);
    let n = slopes.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i && distance(slopes[i], slopes[j]) <= 1)
                .collect()
        })
        .collect();

    let mut best: Vec<usize> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let all: Vec<usize> = (0..n).collect();
    extend_clique(&adj, &mut current, all, &mut best);
    let witness = best.iter().map(|&i| slopes[i]).collect::<Vec<_>>();
    (witness.len(), witness)
}

fn extend_clique(
    adj: &[Vec<usize>],
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    best: &mut Vec<usize>,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if current.len() + candidates.len() <= best.len() {
        return;
    }
    for (k, &v) in candidates.iter().enumerate() {
        if current.len() + (candidates.len() - k) <= best.len() {
            break;
        }
        let next: Vec<usize> = candidates[k + 1..]
            .iter()
            .copied()
            .filter(|&u| adj[v].contains(&u))
            .collect();
        current.push(v);
        extend_clique(adj, current, next, best);
        current.pop();
    }
}
