//! Letters and alphabets.
//!
//! Type C letters are encoded as signed integers: `k` for an unbarred k and
//! `-k` for a barred k. The total order is 1 < ... < n < -n < ... < -1.
//! Type A letters are plain ordinals 1..=m.

use crate::error::Error;
use std::fmt;

/// A single tableau entry. Positive = unbarred, negative = barred (type C);
/// type A tableaux only use positive entries.
pub type Letter = i32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Alphabet {
    /// The symplectic alphabet 1 < ... < n < -n < ... < -1.
    C { n: usize },
    /// The linear alphabet 1 < ... < m.
    A { m: usize },
}

impl Alphabet {
    pub fn c(n: usize) -> Self {
        Alphabet::C { n }
    }

    pub fn a(m: usize) -> Self {
        Alphabet::A { m }
    }

    /// Number of distinct letters.
    pub fn size(&self) -> usize {
        match *self {
            Alphabet::C { n } => 2 * n,
            Alphabet::A { m } => m,
        }
    }

    /// Rank of the alphabet: n for C_n, m for [m].
    pub fn rank(&self) -> usize {
        match *self {
            Alphabet::C { n } => n,
            Alphabet::A { m } => m,
        }
    }

    pub fn is_c(&self) -> bool {
        matches!(self, Alphabet::C { .. })
    }

    /// Valid crystal colors: 1..=n for C_n, 1..=m-1 for A_{m-1}.
    pub fn colors(&self) -> std::ops::RangeInclusive<usize> {
        match *self {
            Alphabet::C { n } => 1..=n,
            Alphabet::A { m } => 1..=(m.saturating_sub(1)),
        }
    }

    pub fn contains(&self, x: Letter) -> bool {
        match *self {
            Alphabet::C { n } => x != 0 && (x.unsigned_abs() as usize) <= n,
            Alphabet::A { m } => x >= 1 && (x as usize) <= m,
        }
    }

    /// Position of `x` in the total order, from 1 to `size()`.
    pub fn ord(&self, x: Letter) -> usize {
        debug_assert!(self.contains(x), "letter {x} outside {self:?}");
        match *self {
            Alphabet::C { n } => {
                if x > 0 {
                    x as usize
                } else {
                    2 * n + 1 - (-x) as usize
                }
            }
            Alphabet::A { .. } => x as usize,
        }
    }

    /// Inverse of `ord`.
    pub fn letter_at(&self, ord: usize) -> Letter {
        debug_assert!(ord >= 1 && ord <= self.size());
        match *self {
            Alphabet::C { n } => {
                if ord <= n {
                    ord as i32
                } else {
                    -((2 * n + 1 - ord) as i32)
                }
            }
            Alphabet::A { .. } => ord as i32,
        }
    }

    /// Order-reversing complement: k <-> k-bar in type C, j <-> m+1-j in type A.
    pub fn complement(&self, x: Letter) -> Letter {
        match *self {
            Alphabet::C { .. } => -x,
            Alphabet::A { m } => m as i32 + 1 - x,
        }
    }

    pub fn lt(&self, x: Letter, y: Letter) -> bool {
        self.ord(x) < self.ord(y)
    }

    pub fn le(&self, x: Letter, y: Letter) -> bool {
        self.ord(x) <= self.ord(y)
    }

    /// Sorts letters ascending in the alphabet order.
    pub fn sort(&self, letters: &mut [Letter]) {
        letters.sort_by_key(|&x| self.ord(x));
    }

    pub fn parse_letter(&self, s: &str) -> Result<Letter, Error> {
        let x: i32 = s
            .trim()
            .parse()
            .map_err(|_| Error::BadLetter(s.to_string()))?;
        if !self.contains(x) {
            return Err(Error::BadLetter(format!("{s} not in {self}")));
        }
        Ok(x)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Alphabet::C { n } => write!(f, "C{n}"),
            Alphabet::A { m } => write!(f, "A[{m}]"),
        }
    }
}

pub fn is_barred(x: Letter) -> bool {
    x < 0
}
