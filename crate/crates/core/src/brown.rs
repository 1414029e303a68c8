//! Brown's finite-generation criterion for two-generator one-relator
//! groups.
//!
//! Let `G = < x, y | R >` with `R = R_1 ... R_m` cyclically reduced and
//! non-trivial, and let `phi: G -> Z` be a homomorphism with
//! `phi(x) != 0` and `phi(y) != 0`. Brown's theorem says `ker(phi)` is
//! finitely generated if and only if the sequence of prefix values
//! `phi(R_1 ... R_i)`, `i = 1..m`, attains its maximum exactly once and
//! its minimum exactly once.
//!
//! Prefix indexing starts at the first letter. Since the total value of
//! the relator is zero, the empty prefix and the full word both carry the
//! value 0, so the multiset of attained values - and with it the
//! uniqueness verdict - does not depend on whether the empty prefix is
//! included.

use alloc::vec::Vec;
use core::fmt;

use crate::word::{Gen, Letter, Word};

/// An integer-valued homomorphism on the free group, given by its values
/// on the two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeightHom {
    pub wx: i64,
    pub wy: i64,
}

impl WeightHom {
    pub fn new(wx: i64, wy: i64) -> WeightHom {
        WeightHom { wx, wy }
    }

    /// Value of the homomorphism on a single letter.
    pub fn weight(&self, letter: Letter) -> i64 {
        let base = match letter.gen() {
            Gen::X => self.wx,
            Gen::Y => self.wy,
        };
        base * letter.exponent()
    }

    /// Value on a whole word, checked against overflow.
    pub fn value(&self, word: &Word) -> Result<i64, BrownError> {
        let mut total: i64 = 0;
        for &l in word.letters() {
            total = total
                .checked_add(self.weight(l))
                .ok_or(BrownError::Overflow)?;
        }
        Ok(total)
    }
}

impl fmt::Display for WeightHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(x -> {}, y -> {})", self.wx, self.wy)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BrownError {
    /// The relator freely or cyclically reduces to the empty word.
    TrivialRelator,
    /// The criterion requires the homomorphism to be nonzero on both
    /// generators.
    NonzeroWeightRequired,
    /// The relator must be cyclically reduced.
    NotCyclicallyReduced,
    /// The homomorphism must vanish on the relator.
    NonzeroTotal,
    /// Prefix sums left the 64-bit range.
    Overflow,
}

impl fmt::Display for BrownError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrownError::TrivialRelator => {
                write!(f, "TrivialRelator: relator reduces to the empty word")
            }
            BrownError::NonzeroWeightRequired => {
                write!(
                    f,
                    "NonzeroWeightRequired: phi(x) and phi(y) must both be nonzero"
                )
            }
            BrownError::NotCyclicallyReduced => {
                write!(
                    f,
                    "NotCyclicallyReduced: relator must be cyclically reduced"
                )
            }
            BrownError::NonzeroTotal => {
                write!(
                    f,
                    "NonzeroTotal: homomorphism does not vanish on the relator"
                )
            }
            BrownError::Overflow => write!(f, "Overflow: prefix value out of range"),
        }
    }
}

impl core::error::Error for BrownError {}

/// Outcome of Brown's criterion, with the full prefix-value certificate.
///
/// Positions are 1-based indices into the relator. `kernel_fg` holds
/// exactly when both `max_positions` and `min_positions` are singletons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrownVerdict {
    pub kernel_fg: bool,
    pub prefix_values: Vec<i64>,
    pub max_value: i64,
    pub max_positions: Vec<usize>,
    pub min_value: i64,
    pub min_positions: Vec<usize>,
}

/// Cyclically reduces a word: free reduction followed by stripping
/// matching first/last inverse pairs. The result is conjugate to the
/// input in the free group.
///
/// Errs with [`BrownError::TrivialRelator`] when reduction empties the
/// word.
pub fn cyclic_reduce(word: &Word) -> Result<Word, BrownError> {
    let reduced = word.free_reduce();
    let mut letters = reduced.letters().to_vec();
    let mut start = 0;
    let mut end = letters.len();
    while end - start >= 2 && letters[end - 1].cancels(letters[start]) {
        start += 1;
        end -= 1;
    }
    letters.truncate(end);
    letters.drain(..start);
    if letters.is_empty() {
        return Err(BrownError::TrivialRelator);
    }
    Ok(Word::new(letters))
}

/// Running values `phi(R_1 ... R_i)` for `i = 1..m`.
///
/// The total value over the word must vanish; the last entry is then 0.
pub fn prefix_values(word: &Word, hom: &WeightHom) -> Result<Vec<i64>, BrownError> {
    if hom.value(word)? != 0 {
        return Err(BrownError::NonzeroTotal);
    }
    let mut out = Vec::with_capacity(word.len());
    let mut acc: i64 = 0;
    for &l in word.letters() {
        acc = acc.checked_add(hom.weight(l)).ok_or(BrownError::Overflow)?;
        out.push(acc);
    }
    Ok(out)
}

/// Brown's criterion for `< x, y | word >` and the homomorphism `hom`.
///
/// The word must be cyclically reduced and non-trivial, the homomorphism
/// nonzero on both generators and zero on the word. The verdict reports
/// every position attaining the extreme values, so a failure is a
/// checkable certificate rather than a bare flag.
pub fn brown_criterion(word: &Word, hom: &WeightHom) -> Result<BrownVerdict, BrownError> {
    if word.is_empty() {
        return Err(BrownError::TrivialRelator);
    }
    if hom.wx == 0 || hom.wy == 0 {
        return Err(BrownError::NonzeroWeightRequired);
    }
    if !word.is_cyclically_reduced() {
        return Err(BrownError::NotCyclicallyReduced);
    }
    let values = prefix_values(word, hom)?;
    let max_value = *values.iter().max().expect("word is nonempty");
    let min_value = *values.iter().min().expect("word is nonempty");
    let positions_of = |v: i64| -> Vec<usize> {
        values
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == v)
            .map(|(i, _)| i + 1)
            .collect()
    };
    let max_positions = positions_of(max_value);
    let min_positions = positions_of(min_value);
    let kernel_fg = max_positions.len() == 1 && min_positions.len() == 1;
    Ok(BrownVerdict {
        kernel_fg,
        prefix_values: values,
        max_value,
        max_positions,
        min_value,
        min_positions,
    })
}
