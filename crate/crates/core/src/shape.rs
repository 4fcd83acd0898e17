//! Partitions and skew shapes.

use crate::error::{Error, Result};
use std::fmt;

/// A partition: weakly decreasing parts, trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, serde::Serialize)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::BadShape(format!("{parts:?} not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Shape(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Row length, 0 beyond the last row.
    pub fn row(&self, r: usize) -> usize {
        self.0.get(r).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Shape {
        let cols = self.row(0);
        let parts = (0..cols)
            .map(|c| self.0.iter().filter(|&&len| len > c).count())
            .collect();
        Shape(parts)
    }

    pub fn contains(&self, other: &Shape) -> bool {
        (0..other.rows()).all(|r| self.row(r) >= other.row(r))
    }

    /// Column height of column `c` (0-based).
    pub fn col_height(&self, c: usize) -> usize {
        self.0.iter().filter(|&&len| len > c).count()
    }

    /// All partitions of total size `size` with at most `max_rows` parts.
    pub fn all(size: usize, max_rows: usize) -> Vec<Shape> {
        fn go(rest: usize, max_part: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Shape>) {
            if rest == 0 {
                out.push(Shape(cur.clone()));
                return;
            }
            if rows_left == 0 {
                return;
            }
            for p in (1..=rest.min(max_part)).rev() {
                cur.push(p);
                go(rest - p, p, rows_left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_rows, &mut Vec::new(), &mut out);
        out
    }

    /// All nonempty partitions with size at most `max_size` and at most `max_rows` parts.
    pub fn all_up_to(max_size: usize, max_rows: usize) -> Vec<Shape> {
        (1..=max_size).flat_map(|s| Shape::all(s, max_rows)).collect()
    }
}

impl From<&[usize]> for Shape {
    fn from(parts: &[usize]) -> Self {
        Shape::new(parts.to_vec()).expect("invalid partition")
    }
}

impl<const N: usize> From<[usize; N]> for Shape {
    fn from(parts: [usize; N]) -> Self {
        Shape::new(parts.to_vec()).expect("invalid partition")
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A skew shape outer/inner with inner contained in outer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct SkewShape {
    pub outer: Shape,
    pub inner: Shape,
}

impl SkewShape {
    pub fn new(outer: Shape, inner: Shape) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::BadShape(format!(
                "inner {inner} not contained in outer {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Shape) -> Self {
        SkewShape { outer, inner: Shape::default() }
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}
