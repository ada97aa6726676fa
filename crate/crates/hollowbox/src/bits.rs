//! Binary strings indexing vertices of boxes and of the Boolean cube.

use std::fmt;
use thiserror::Error;

/// A string over `{0,1}`, written leftmost-position-first. Doubles as a
/// vertex index of a box (`0` picks the low endpoint of an axis, `1` the
/// high endpoint) and as an element of the cube `{0,1}^d`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitString(Vec<bool>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BitStringError {
    #[error("bit string must be nonempty")]
    Empty,
    #[error("invalid bit {found:?} at position {position}")]
    InvalidBit { position: usize, found: char },
}

impl BitString {
    pub fn new(bits: Vec<bool>) -> Result<Self, BitStringError> {
        if bits.is_empty() {
            return Err(BitStringError::Empty);
        }
        Ok(BitString(bits))
    }

    pub fn parse(s: &str) -> Result<Self, BitStringError> {
        let mut bits = Vec::with_capacity(s.len());
        for (position, ch) in s.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                found => return Err(BitStringError::InvalidBit { position, found }),
            }
        }
        Self::new(bits)
    }

    /// The `index`-th string of length `d` in lexicographic order
    /// (position 0 is the most significant).
    ///
    /// # Panics
    /// Panics if `d == 0`, `d > 63` or `index >= 2^d`.
    pub fn from_index(d: usize, index: u64) -> Self {
        assert!(d >= 1 && d <= 63, "bit string length {d} out of range");
        assert!(index < (1u64 << d), "index {index} out of range for d={d}");
        BitString((0..d).map(|i| (index >> (d - 1 - i)) & 1 == 1).collect())
    }

    /// All strings of length `d` in lexicographic order.
    pub fn all(d: usize) -> impl Iterator<Item = BitString> {
        assert!(d >= 1 && d <= 63, "bit string length {d} out of range");
        (0..(1u64 << d)).map(move |i| BitString::from_index(d, i))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bit(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// Positionwise complement.
    pub fn complement(&self) -> BitString {
        BitString(self.0.iter().map(|b| !b).collect())
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<String> = BitString::all(2).map(|b| b.to_string()).collect();
        assert_eq!(all, ["00", "01", "10", "11"]);
    }

    #[test]
    fn parse_and_display() {
        let b = BitString::parse("0110").unwrap();
        assert_eq!(b.to_string(), "0110");
        assert_eq!(b.len(), 4);
        assert!(!b.bit(0));
        assert!(b.bit(1));
        assert!(BitString::parse("01a").is_err());
        assert!(BitString::parse("").is_err());
    }

    #[test]
    fn ordering_matches_string_order() {
        let a = BitString::parse("01").unwrap();
        let b = BitString::parse("10").unwrap();
        assert!(a < b);
    }
}
