//! Words in the free group on two generators `x`, `y`.
//!
//! Words serialise as compact strings: `x`, `y` for the generators and
//! `X`, `Y` for their inverses, so `yxY` stands for `y x y^-1`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// One of the two free generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gen {
    X,
    Y,
}

/// A letter of a word: a generator or an inverse generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    X,
    XInv,
    Y,
    YInv,
}

impl Letter {
    /// The generator this letter is a power of.
    pub fn gen(self) -> Gen {
        match self {
            Letter::X | Letter::XInv => Gen::X,
            Letter::Y | Letter::YInv => Gen::Y,
        }
    }

    /// Exponent of the letter: `+1` for a generator, `-1` for its inverse.
    pub fn exponent(self) -> i64 {
        match self {
            Letter::X | Letter::Y => 1,
            Letter::XInv | Letter::YInv => -1,
        }
    }

    /// The inverse letter.
    pub fn inverse(self) -> Letter {
        match self {
            Letter::X => Letter::XInv,
            Letter::XInv => Letter::X,
            Letter::Y => Letter::YInv,
            Letter::YInv => Letter::Y,
        }
    }

    /// True when `self * other` cancels freely.
    pub fn cancels(self, other: Letter) -> bool {
        self.inverse() == other
    }

    fn to_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::XInv => 'X',
            Letter::Y => 'y',
            Letter::YInv => 'Y',
        }
    }

    fn from_char(c: char) -> Option<Letter> {
        match c {
            'x' => Some(Letter::X),
            'X' => Some(Letter::XInv),
            'y' => Some(Letter::Y),
            'Y' => Some(Letter::YInv),
            _ => None,
        }
    }
}

/// Error raised when parsing a word from its compact string form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseWordError {
    pub bad_char: char,
}

impl fmt::Display for ParseWordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ParseWordError: unexpected character {:?}, expected one of x, X, y, Y",
            self.bad_char
        )
    }
}

impl core::error::Error for ParseWordError {}

/// A word over the alphabet `{x, x^-1, y, y^-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn empty() -> Word {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Formal inverse: reversed word with every letter inverted.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation, with no reduction performed.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Free reduction: cancel adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last().is_some_and(|&top| top.cancels(l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| !w[0].cancels(w[1]))
    }

    /// Freely reduced and the first letter does not cancel the last.
    pub fn is_cyclically_reduced(&self) -> bool {
        if !self.is_freely_reduced() {
            return false;
        }
        match (self.letters.first(), self.letters.last()) {
            (Some(&first), Some(&last)) => !last.cancels(first),
            _ => true,
        }
    }

    /// Net exponent of a generator over the whole word.
    pub fn exponent_sum(&self, gen: Gen) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen() == gen)
            .map(|l| l.exponent())
            .sum()
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Word, ParseWordError> {
        s.chars()
            .map(|c| Letter::from_char(c).ok_or(ParseWordError { bad_char: c }))
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters.iter().map(|l| l.to_char()).collect();
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let word = w("yxyxxyxxYXYXXYXX");
        assert_eq!(word.to_string(), "yxyxxyxxYXYXXYXX");
        assert_eq!(word.len(), 16);
    }

    #[test]
    fn parse_rejects_garbage() {
        let err = "xyz".parse::<Word>().unwrap_err();
        assert_eq!(err.bad_char, 'z');
    }

    #[test]
    fn free_reduction_cancels_pairs() {
        assert_eq!(w("xX").free_reduce(), Word::empty());
        assert_eq!(w("xyYX").free_reduce(), Word::empty());
        assert_eq!(w("xyYx").free_reduce(), w("xx"));
        assert!(w("xyXY").is_freely_reduced());
    }

    #[test]
    fn cyclic_reducedness() {
        assert!(w("xyXY").is_cyclically_reduced());
        assert!(!w("xyX").is_cyclically_reduced());
        assert!(w("").is_cyclically_reduced());
        assert!(w("x").is_cyclically_reduced());
    }

    #[test]
    fn exponent_sums() {
        let word = w("yxyxxyxxYXYXXYXX");
        assert_eq!(word.exponent_sum(Gen::X), 0);
        assert_eq!(word.exponent_sum(Gen::Y), 0);
        assert_eq!(w("xxY").exponent_sum(Gen::X), 2);
        assert_eq!(w("xxY").exponent_sum(Gen::Y), -1);
    }

    #[test]
    fn inverse_reverses_and_inverts() {
        assert_eq!(w("xyX").inverse(), w("xYX"));
        assert_eq!(w("xyX").inverse().inverse(), w("xyX"));
    }
}
