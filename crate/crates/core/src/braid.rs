//! One-bridge braids in a solid torus.
//!
//! A one-bridge braid on `n` strands is specified by the triple
//! `(n, b, t)`: braid index, bridge index and twisting number. The braid
//! word is `sigma_{b-1} ... sigma_0 delta^t`, where `delta` is the positive
//! `2 pi / n` twist; only its strand permutation matters here. When the
//! permutation is an `n`-cycle the braid closes to a knot `K`, and the
//! fundamental group of the exterior of `K` in the solid torus is the
//! two-generator one-relator group `< x, y | y w x y^-1 w^-1 x^-1 >`,
//! with `w` the strand word computed by [`strand_word`].

use alloc::vec::Vec;
use core::fmt;

use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidError {
    /// Braid index must be at least 2.
    IndexTooSmall,
    /// Bridge index must satisfy `1 <= b <= n - 1`.
    BridgeOutOfRange,
    /// The strand permutation is not an `n`-cycle, so the braid closure
    /// is a link with more than one component.
    NotAKnot,
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::IndexTooSmall => write!(f, "IndexTooSmall: braid index n must be >= 2"),
            BraidError::BridgeOutOfRange => {
                write!(
                    f,
                    "BridgeOutOfRange: bridge index b must satisfy 1 <= b <= n-1"
                )
            }
            BraidError::NotAKnot => {
                write!(f, "NotAKnot: the strand permutation is not an n-cycle")
            }
        }
    }
}

impl core::error::Error for BraidError {}

/// Parameters `(n, b, t)` of a one-bridge braid.
///
/// The twisting number is stored reduced mod `n`, since full twists are
/// central and do not change the strand permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BraidParams {
    n: usize,
    b: usize,
    t: usize,
}

impl BraidParams {
    pub fn new(n: usize, b: usize, t: i64) -> Result<BraidParams, BraidError> {
        if n < 2 {
            return Err(BraidError::IndexTooSmall);
        }
        if b < 1 || b > n - 1 {
            return Err(BraidError::BridgeOutOfRange);
        }
        let t = t.rem_euclid(n as i64) as usize;
        Ok(BraidParams { n, b, t })
    }

    /// Braid index `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Bridge index `b`.
    pub fn b(&self) -> usize {
        self.b
    }

    /// Twisting number `t`, reduced into `[0, n)`.
    pub fn t(&self) -> usize {
        self.t
    }
}

impl fmt::Display for BraidParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, b={}, t={})", self.n, self.b, self.t)
    }
}

/// A permutation of `{0, ..., n-1}` stored by its image array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// Builds a permutation from its image array.
    ///
    /// Panics if the array is not a bijection of `{0, ..., n-1}`.
    pub fn from_images(images: Vec<usize>) -> Perm {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &i in &images {
            assert!(i < n && !seen[i], "image array is not a bijection");
            seen[i] = true;
        }
        Perm { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    /// Whether the permutation is a single cycle through all points.
    pub fn is_n_cycle(&self) -> bool {
        let n = self.images.len();
        if n == 0 {
            return false;
        }
        let mut a = 0;
        let mut steps = 0;
        loop {
            a = self.images[a];
            steps += 1;
            if a == 0 {
                break;
            }
        }
        steps == n
    }

    /// The forward orbit `pi(a), pi^2(a), ..., pi^k(a)`.
    pub fn orbit(&self, a: usize, k: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(k);
        let mut cur = a;
        for _ in 0..k {
            cur = self.images[cur];
            out.push(cur);
        }
        out
    }
}

/// Strand permutation of the braid `sigma_{b-1} ... sigma_0 delta^t`:
///
/// ```text
/// pi(a) = a + t + 1  (mod n)   for 0 <= a < b
/// pi(b) = t          (mod n)
/// pi(a) = a + t      (mod n)   for b < a < n
/// ```
pub fn permutation(params: &BraidParams) -> Perm {
    let (n, b, t) = (params.n, params.b, params.t);
    let images = (0..n)
        .map(|a| {
            if a < b {
                (a + t + 1) % n
            } else if a == b {
                t % n
            } else {
                (a + t) % n
            }
        })
        .collect();
    Perm::from_images(images)
}

/// Whether the braid closure is a knot, i.e. the strand permutation is an
/// `n`-cycle.
pub fn is_knot(params: &BraidParams) -> bool {
    permutation(params).is_n_cycle()
}

/// The strand word `w = w_1 ... w_{n-1}` with `w_j = y` when
/// `pi^j(b) < b` and `w_j = x` when `pi^j(b) > b`.
///
/// `pi^j(b) = b` cannot occur for `1 <= j <= n-1` when the permutation is
/// an `n`-cycle, which is required.
pub fn strand_word(params: &BraidParams) -> Result<Word, BraidError> {
    let pi = permutation(params);
    if !pi.is_n_cycle() {
        return Err(BraidError::NotAKnot);
    }
    let letters = pi
        .orbit(params.b, params.n - 1)
        .into_iter()
        .map(|a| {
            debug_assert_ne!(a, params.b);
            if a < params.b {
                Letter::Y
            } else {
                Letter::X
            }
        })
        .collect();
    Ok(Word::new(letters))
}

/// The relator `R = y w x y^-1 w^-1 x^-1` of the exterior's fundamental
/// group, of length `2n + 2`.
///
/// `R` is cyclically reduced by construction and has zero exponent sum in
/// both generators.
pub fn relator(params: &BraidParams) -> Result<Word, BraidError> {
    let w = strand_word(params)?;
    let mut letters = Vec::with_capacity(2 * params.n + 2);
    letters.push(Letter::Y);
    letters.extend_from_slice(w.letters());
    letters.push(Letter::X);
    letters.push(Letter::YInv);
    letters.extend(w.inverse().letters().iter().copied());
    letters.push(Letter::XInv);
    Ok(Word::new(letters))
}

/// All `(n, b, t)` with the given braid index whose closure is a knot.
pub fn knots_with_index(n: usize) -> Vec<BraidParams> {
    let mut out = Vec::new();
    for b in 1..n {
        for t in 0..n {
            if let Ok(params) = BraidParams::new(n, b, t as i64) {
                if is_knot(&params) {
                    out.push(params);
                }
            }
        }
    }
    out
}
