//! Fox calculus and the specialised Alexander invariant.
//!
//! For a presentation `< x, y | R >` the abelianised Fox derivatives
//! `dR/dx`, `dR/dy` form the Alexander matrix; specialising along an
//! integer weight homomorphism `x -> T^wx`, `y -> T^wy` and taking the
//! gcd of the two entries gives a one-variable invariant. A fibred weight
//! class is expected to produce a monic polynomial, which makes this an
//! independent cross-check for Brown-criterion verdicts.
//!
//! All polynomial arithmetic is exact over the integers; gcds are
//! computed by content extraction and a primitive pseudo-remainder
//! sequence. For specialisations coming from a zero-exponent-sum relator
//! the fundamental identity
//! `dX (T^wx - 1) + dY (T^wy - 1) = 0`
//! pins the gcd down to an exact division,
//! `gcd = dX (T^g - 1) / (T^|wy| - 1)` with `g = gcd(wx, wy)`,
//! which is used as a fast route and verified by trial division.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::brown::WeightHom;
use crate::gcd_i64;
use crate::word::{Gen, Letter, Word};

type Coeff = i128;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlexanderError {
    /// The relator must have zero exponent sum in both generators.
    NonzeroExponentSum,
    /// The weight homomorphism must be nonzero on both generators.
    ZeroWeight,
    /// Monicity is undefined for the zero polynomial.
    ZeroPolynomial,
    /// Coefficient arithmetic left the 128-bit range.
    Overflow,
}

impl fmt::Display for AlexanderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlexanderError::NonzeroExponentSum => {
                write!(f, "NonzeroExponentSum: relator has nonzero exponent sum")
            }
            AlexanderError::ZeroWeight => {
                write!(f, "ZeroWeight: weight homomorphism vanishes on a generator")
            }
            AlexanderError::ZeroPolynomial => {
                write!(f, "ZeroPolynomial: monicity is undefined for 0")
            }
            AlexanderError::Overflow => write!(f, "Overflow: coefficient out of range"),
        }
    }
}

impl core::error::Error for AlexanderError {}

/// A Laurent polynomial in two variables `X`, `Y` with integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i64, i64), Coeff>,
}

impl LaurentPoly2 {
    pub fn zero() -> LaurentPoly2 {
        LaurentPoly2::default()
    }

    pub fn monomial(i: i64, j: i64, c: Coeff) -> LaurentPoly2 {
        let mut p = LaurentPoly2::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), Coeff)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn add_term(&mut self, i: i64, j: i64, c: Coeff) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert(0);
        *entry = entry.checked_add(c).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for ((i, j), c) in other.terms() {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = LaurentPoly2::zero();
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in other.terms() {
                out.add_term(
                    i1 + i2,
                    j1 + j2,
                    c1.checked_mul(c2).expect("coefficient overflow"),
                );
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.terms() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{i},{j}:{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// A Laurent polynomial in one variable `T` with integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly1 {
    terms: BTreeMap<i64, Coeff>,
}

impl LaurentPoly1 {
    pub fn zero() -> LaurentPoly1 {
        LaurentPoly1::default()
    }

    pub fn monomial(e: i64, c: Coeff) -> LaurentPoly1 {
        let mut p = LaurentPoly1::zero();
        p.add_term(e, c);
        p
    }

    /// `T^e - 1`.
    pub fn binomial(e: i64) -> LaurentPoly1 {
        let mut p = LaurentPoly1::monomial(e, 1);
        p.add_term(0, -1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, Coeff)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, e: i64) -> Coeff {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Difference of highest and lowest exponent, or 0 for the zero
    /// polynomial.
    pub fn degree_spread(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn add_term(&mut self, e: i64, c: Coeff) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(e).or_insert(0);
        *entry = entry.checked_add(c).expect("coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn mul(&self, other: &LaurentPoly1) -> LaurentPoly1 {
        let mut out = LaurentPoly1::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }

    fn shift(&self, by: i64) -> LaurentPoly1 {
        LaurentPoly1 {
            terms: self.terms.iter().map(|(&e, &c)| (e + by, c)).collect(),
        }
    }

    fn negate(&self) -> LaurentPoly1 {
        LaurentPoly1 {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }

    /// Gcd of the absolute coefficient values; 0 for the zero polynomial.
    fn content(&self) -> Coeff {
        let mut g: Coeff = 0;
        for (_, c) in self.terms() {
            g = gcd_i128(g, c);
            if g == 1 {
                break;
            }
        }
        g
    }

    fn scale_down(&self, d: Coeff) -> LaurentPoly1 {
        LaurentPoly1 {
            terms: self.terms.iter().map(|(&e, &c)| (e, c / d)).collect(),
        }
    }

    /// Unit-normalised form: lowest exponent 0, positive leading
    /// coefficient.
    pub fn normalize(&self) -> LaurentPoly1 {
        if self.is_zero() {
            return LaurentPoly1::zero();
        }
        let shifted = self.shift(-self.min_exp().expect("nonzero"));
        let lead = shifted.coeff(shifted.max_exp().expect("nonzero"));
        if lead < 0 {
            shifted.negate()
        } else {
            shifted
        }
    }
}

impl fmt::Display for LaurentPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}:{c}")?;
            first = false;
        }
        Ok(())
    }
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Abelianised Fox derivatives `(dR/dx, dR/dy)` of a word.
///
/// Satisfies the fundamental identity
/// `dX (X - 1) + dY (Y - 1) = X^ex Y^ey - 1`
/// where `(ex, ey)` are the exponent sums of the word; for relators with
/// zero exponent sums the right side vanishes.
pub fn fox_derivatives(word: &Word) -> (LaurentPoly2, LaurentPoly2) {
    let mut dx = LaurentPoly2::zero();
    let mut dy = LaurentPoly2::zero();
    let (mut ex, mut ey) = (0i64, 0i64);
    for &l in word.letters() {
        match l {
            Letter::X => {
                dx.add_term(ex, ey, 1);
                ex += 1;
            }
            Letter::XInv => {
                ex -= 1;
                dx.add_term(ex, ey, -1);
            }
            Letter::Y => {
                dy.add_term(ex, ey, 1);
                ey += 1;
            }
            Letter::YInv => {
                ey -= 1;
                dy.add_term(ex, ey, -1);
            }
        }
    }
    (dx, dy)
}

/// Substitutes `X -> T^wx`, `Y -> T^wy`, collecting terms.
pub fn specialize(poly: &LaurentPoly2, hom: &WeightHom) -> LaurentPoly1 {
    let mut out = LaurentPoly1::zero();
    for ((i, j), c) in poly.terms() {
        let e = i
            .checked_mul(hom.wx)
            .and_then(|a| j.checked_mul(hom.wy).and_then(|b| a.checked_add(b)))
            .expect("specialised exponent overflow");
        out.add_term(e, c);
    }
    out
}

/// Exact division over the integers: `Some(q)` with `a = q b` when `b`
/// divides `a`, else `None`.
fn exact_div(a: &LaurentPoly1, b: &LaurentPoly1) -> Option<LaurentPoly1> {
    assert!(!b.is_zero(), "division by zero polynomial");
    // Work with min exponent 0 on both sides; the shift is a unit.
    let a = a.shift(-a.min_exp().unwrap_or(0));
    let b = b.shift(-b.min_exp().expect("nonzero"));
    let lead_b = b.max_exp().expect("nonzero");
    let lc_b = b.coeff(lead_b);
    let mut rem = a;
    let mut quo = LaurentPoly1::zero();
    while !rem.is_zero() {
        let lead_r = rem.max_exp().expect("nonzero");
        if lead_r < lead_b {
            return None;
        }
        let lc_r = rem.coeff(lead_r);
        if lc_r % lc_b != 0 {
            return None;
        }
        let t = lc_r / lc_b;
        let e = lead_r - lead_b;
        quo.add_term(e, t);
        for (eb, cb) in b.terms() {
            rem.add_term(eb + e, -t.checked_mul(cb).expect("coefficient overflow"));
        }
    }
    Some(quo)
}

/// Primitive pseudo-remainder-sequence gcd, up to units.
///
/// Contents are split off and recombined at the end, so the result is an
/// integer gcd: it divides both inputs over `Z[T, T^-1]` and is divisible
/// by every common divisor.
pub fn gcd(a: &LaurentPoly1, b: &LaurentPoly1) -> LaurentPoly1 {
    if a.is_zero() {
        return b.normalize();
    }
    if b.is_zero() {
        return a.normalize();
    }
    let content_gcd = gcd_i128(a.content(), b.content());
    let mut a = a.scale_down(a.content()).normalize();
    let mut b = b.scale_down(b.content()).normalize();
    if a.degree_spread() < b.degree_spread() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = match r.content() {
            0 => LaurentPoly1::zero(),
            c => r.scale_down(c).normalize(),
        };
    }
    let mut out = LaurentPoly1::zero();
    for (e, c) in a.terms() {
        out.add_term(e, c.checked_mul(content_gcd).expect("coefficient overflow"));
    }
    out.normalize()
}

/// Pseudo-remainder of `a` by `b` (both with min exponent 0, `b` nonzero):
/// repeatedly scales `a` by the leading coefficient of `b` and subtracts a
/// monomial multiple of `b` until the degree drops below `deg b`.
fn pseudo_rem(a: &LaurentPoly1, b: &LaurentPoly1) -> LaurentPoly1 {
    let lead_b = b.max_exp().expect("nonzero divisor");
    let lc_b = b.coeff(lead_b);
    let mut rem = a.clone();
    while let Some(lead_r) = rem.max_exp() {
        if lead_r < lead_b {
            break;
        }
        let lc_r = rem.coeff(lead_r);
        let mut next = LaurentPoly1::zero();
        for (e, c) in rem.terms() {
            next.add_term(e, c.checked_mul(lc_b).expect("coefficient overflow"));
        }
        for (e, c) in b.terms() {
            next.add_term(
                e + lead_r - lead_b,
                -c.checked_mul(lc_r).expect("coefficient overflow"),
            );
        }
        rem = next;
    }
    rem
}

/// The specialised Alexander invariant: the normalised integer gcd of the
/// two specialised Fox derivatives of the relator.
///
/// The relator must have zero exponent sum in both generators and the
/// homomorphism must be nonzero on both. When the fundamental identity
/// route applies the gcd is computed by exact division and verified by
/// trial division into both entries; otherwise the pseudo-remainder gcd
/// is used.
pub fn alexander_specialized(word: &Word, hom: &WeightHom) -> Result<LaurentPoly1, AlexanderError> {
    if word.exponent_sum(Gen::X) != 0 || word.exponent_sum(Gen::Y) != 0 {
        return Err(AlexanderError::NonzeroExponentSum);
    }
    if hom.wx == 0 || hom.wy == 0 {
        return Err(AlexanderError::ZeroWeight);
    }
    let (dx, dy) = fox_derivatives(word);
    let a = specialize(&dx, hom);
    let b = specialize(&dy, hom);
    if a.is_zero() && b.is_zero() {
        return Ok(LaurentPoly1::zero());
    }
    if a.is_zero() {
        return Ok(b.normalize());
    }
    if b.is_zero() {
        return Ok(a.normalize());
    }
    let g = gcd_i64(hom.wx, hom.wy) as i64;
    let numerator = a.mul(&LaurentPoly1::binomial(g));
    if let Some(candidate) = exact_div(&numerator, &LaurentPoly1::binomial(hom.wy.abs())) {
        let candidate = candidate.normalize();
        if exact_div(&a, &candidate).is_some() && exact_div(&b, &candidate).is_some() {
            return Ok(candidate);
        }
    }
    Ok(gcd(&a, &b))
}

/// Whether both the highest and the lowest coefficient are `+-1`.
pub fn monic_check(poly: &LaurentPoly1) -> Result<bool, AlexanderError> {
    if poly.is_zero() {
        return Err(AlexanderError::ZeroPolynomial);
    }
    let lo = poly.coeff(poly.min_exp().expect("nonzero"));
    let hi = poly.coeff(poly.max_exp().expect("nonzero"));
    Ok(lo.abs() == 1 && hi.abs() == 1)
}
