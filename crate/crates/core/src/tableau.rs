//! Skew tableaux with optional puncture, canonical text format, weights.
//!
//! Cells are addressed (row, col), 0-based, English convention (row 0 on
//! top, col 0 at left). Internally a tableau is stored column by column,
//! which is the natural unit for splits and jeu de taquin.

use crate::alphabet::{Alphabet, Letter};
use crate::column;
use crate::error::{Error, Result};
use crate::shape::{Shape, SkewShape};

/// One column of a skew tableau: `top` is the row of its first cell,
/// `cells` runs downward. `None` marks the puncture.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Column {
    pub top: usize,
    pub cells: Vec<Option<Letter>>,
}

impl Column {
    pub fn bottom(&self) -> usize {
        self.top + self.cells.len()
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.cells.iter().filter_map(|c| *c).collect()
    }

    pub fn puncture_row(&self) -> Option<usize> {
        self.cells.iter().position(|c| c.is_none()).map(|i| self.top + i)
    }

    /// Letter at absolute row `r`, None if punctured or outside.
    pub fn at(&self, r: usize) -> Option<Letter> {
        if r < self.top || r >= self.bottom() {
            None
        } else {
            self.cells[r - self.top]
        }
    }

    pub fn has_cell(&self, r: usize) -> bool {
        r >= self.top && r < self.bottom()
    }

    /// Rebuilds the column from a letter set, keeping `top`/height, with an
    /// optional puncture at absolute row `punct`. Letters are placed in
    /// increasing order skipping the puncture.
    pub fn refill(&self, alphabet: &Alphabet, mut letters: Vec<Letter>, punct: Option<usize>) -> Result<Column> {
        alphabet.sort(&mut letters);
        let height = self.cells.len();
        let expect = height - punct.iter().len();
        if letters.len() != expect {
            return Err(Error::Invariant(format!(
                "refill: {} letters into column of height {height} (puncture: {punct:?})",
                letters.len()
            )));
        }
        let mut cells = Vec::with_capacity(height);
        let mut it = letters.into_iter();
        for i in 0..height {
            if punct == Some(self.top + i) {
                cells.push(None);
            } else {
                cells.push(Some(it.next().unwrap()));
            }
        }
        Ok(Column { top: self.top, cells })
    }
}

#[derive(Debug, Clone)]
pub struct SkewTableau {
    pub alphabet: Alphabet,
    cols: Vec<Column>,
}

/// Equality is canonical: placeholder columns that carry no cells and imply
/// no inner region are invisible.
impl PartialEq for SkewTableau {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.render() == other.render()
    }
}

impl Eq for SkewTableau {}

impl std::hash::Hash for SkewTableau {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.alphabet.hash(state);
        self.render().hash(state);
    }
}

impl SkewTableau {
    /// Builds from explicit columns, validating geometry and semistandardness.
    pub fn from_cols(alphabet: Alphabet, cols: Vec<Column>) -> Result<Self> {
        let t = SkewTableau { alphabet, cols };
        t.validate()?;
        Ok(t)
    }

    /// Builds from rows of (possibly inner-prefixed) cells.
    /// `rows[r]` holds the cells of row `r` starting at column `inner[r]`.
    pub fn from_rows(alphabet: Alphabet, inner: &Shape, rows: Vec<Vec<Option<Letter>>>) -> Result<Self> {
        let mut outer_parts = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            outer_parts.push(inner.row(r) + row.len());
            let _ = r;
        }
        let outer = Shape::new(outer_parts)?;
        if !outer.contains(inner) {
            return Err(Error::BadShape("inner exceeds outer".into()));
        }
        let ncols = outer.row(0);
        let mut cols = Vec::with_capacity(ncols);
        for c in 0..ncols {
            let top = (0..rows.len()).find(|&r| inner.row(r) <= c && c < outer.row(r));
            let Some(top) = top else {
                // fully inner column: keep it as a placeholder so column
                // indices stay aligned with x-coordinates
                let inner_height = (0..rows.len()).filter(|&r| inner.row(r) > c).count();
                cols.push(Column { top: inner_height, cells: Vec::new() });
                continue;
            };
            let mut cells = Vec::new();
            let mut r = top;
            while r < rows.len() && inner.row(r) <= c && c < outer.row(r) {
                cells.push(rows[r][c - inner.row(r)]);
                r += 1;
            }
            cols.push(Column { top, cells });
        }
        SkewTableau::from_cols(alphabet, cols)
    }

    /// Empty tableau.
    pub fn empty(alphabet: Alphabet) -> Self {
        SkewTableau { alphabet, cols: Vec::new() }
    }

    /// The highest-weight (Yamanouchi) tableau of straight shape: row i
    /// filled with letter i+1.
    pub fn yamanouchi(alphabet: Alphabet, shape: &Shape) -> Self {
        let cols = (0..shape.row(0))
            .map(|c| {
                let h = shape.col_height(c);
                Column { top: 0, cells: (0..h).map(|r| Some(r as i32 + 1)).collect() }
            })
            .collect();
        SkewTableau { alphabet, cols }
    }

    pub fn cols(&self) -> &[Column] {
        &self.cols
    }

    pub fn cols_mut(&mut self) -> &mut Vec<Column> {
        &mut self.cols
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn size(&self) -> usize {
        self.cols.iter().map(|c| c.cells.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn outer_shape(&self) -> Shape {
        let rows = self.cols.iter().map(|c| c.bottom()).max().unwrap_or(0);
        let parts = (0..rows)
            .map(|r| self.cols.iter().filter(|c| c.has_cell(r) || c.top > r).count())
            .collect();
        Shape::new(parts).expect("outer shape")
    }

    pub fn inner_shape(&self) -> Shape {
        let rows = self.cols.iter().map(|c| c.bottom()).max().unwrap_or(0);
        let parts = (0..rows)
            .map(|r| self.cols.iter().filter(|c| c.top > r).count())
            .collect();
        Shape::new(parts).expect("inner shape")
    }

    pub fn skew_shape(&self) -> SkewShape {
        SkewShape { outer: self.outer_shape(), inner: self.inner_shape() }
    }

    pub fn is_straight(&self) -> bool {
        self.inner_shape().is_empty()
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<Letter> {
        self.cols.get(c).and_then(|col| col.at(r))
    }

    pub fn has_cell(&self, r: usize, c: usize) -> bool {
        self.cols.get(c).is_some_and(|col| col.has_cell(r))
    }

    pub fn puncture(&self) -> Option<(usize, usize)> {
        self.cols
            .iter()
            .enumerate()
            .find_map(|(c, col)| col.puncture_row().map(|r| (r, c)))
    }

    pub fn set_entry(&mut self, r: usize, c: usize, x: Letter) {
        let col = &mut self.cols[c];
        col.cells[r - col.top] = Some(x);
    }

    /// Cells in Japanese reading order: columns right to left, top to bottom.
    /// Punctures are skipped.
    pub fn reading_cells(&self) -> Vec<(usize, usize, Letter)> {
        let mut out = Vec::with_capacity(self.size());
        for (c, col) in self.cols.iter().enumerate().rev() {
            for (i, cell) in col.cells.iter().enumerate() {
                if let Some(x) = cell {
                    out.push((col.top + i, c, *x));
                }
            }
        }
        out
    }

    /// Signed weight for type C (entry i = #i minus #i-bar), multiplicity
    /// vector for type A.
    pub fn weight(&self) -> Vec<i64> {
        let mut w = vec![0i64; self.alphabet.rank()];
        for col in &self.cols {
            for cell in col.cells.iter().flatten() {
                let x = *cell;
                if x > 0 {
                    w[(x - 1) as usize] += 1;
                } else {
                    w[(-x - 1) as usize] -= 1;
                }
            }
        }
        w
    }

    fn validate(&self) -> Result<()> {
        let mut punctures = 0;
        for w in self.cols.windows(2) {
            if w[0].top < w[1].top || w[0].bottom() < w[1].bottom() {
                return Err(Error::BadShape("columns do not form a skew shape".into()));
            }
        }
        for col in &self.cols {
            punctures += col.cells.iter().filter(|c| c.is_none()).count();
            for cell in col.cells.iter().flatten() {
                if !self.alphabet.contains(*cell) {
                    return Err(Error::BadLetter(format!("{cell} not in {}", self.alphabet)));
                }
            }
        }
        if punctures > 1 {
            return Err(Error::BadShape("more than one puncture".into()));
        }
        self.check_semistandard()
    }

    /// Rows weakly increase, columns strictly increase; the puncture is
    /// transparent.
    pub fn check_semistandard(&self) -> Result<()> {
        let a = &self.alphabet;
        for (c, col) in self.cols.iter().enumerate() {
            let letters = col.letters();
            for w in letters.windows(2) {
                if !a.lt(w[0], w[1]) {
                    let r = col.cells.iter().position(|x| *x == Some(w[1])).unwrap();
                    return Err(Error::NotSemistandard { row: col.top + r, col: c });
                }
            }
        }
        for c in 0..self.cols.len().saturating_sub(1) {
            let (left, right) = (&self.cols[c], &self.cols[c + 1]);
            for r in right.top..right.bottom() {
                if let (Some(x), Some(y)) = (left.at(r), right.at(r)) {
                    if !a.le(x, y) {
                        return Err(Error::NotSemistandard { row: r, col: c + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    /// True iff semistandard with admissible columns and semistandard split
    /// (type C); plain semistandardness for type A.
    pub fn is_kn(&self) -> bool {
        self.check_kn().is_ok()
    }

    pub fn check_kn(&self) -> Result<()> {
        self.check_semistandard()?;
        let Alphabet::C { n } = self.alphabet else {
            return Ok(());
        };
        let mut split_cols: Vec<(usize, Vec<Letter>)> = Vec::with_capacity(2 * self.cols.len());
        for (c, col) in self.cols.iter().enumerate() {
            let letters = col.letters();
            let (l, r) = column::split(&letters, n).map_err(|e| match e {
                Error::NotAdmissible { z, .. } => Error::NotAdmissible { col: c, z },
                e => e,
            })?;
            split_cols.push((col.top, l));
            split_cols.push((col.top, r));
        }
        // Adjacent split columns must be row-wise weakly increasing. Columns
        // with punctures contribute their letters packed around the puncture.
        let a = &self.alphabet;
        for (i, pair) in split_cols.windows(2).enumerate() {
            let (top0, l0) = &pair[0];
            let (top1, l1) = &pair[1];
            let orig0 = &self.cols[i / 2];
            let orig1 = &self.cols[(i + 1) / 2];
            // Re-place letters into cells, skipping punctures, to compare rows.
            let place = |top: usize, col: &Column, letters: &[Letter]| -> Vec<(usize, Letter)> {
                let mut out = Vec::new();
                let mut it = letters.iter();
                for j in 0..col.cells.len() {
                    if col.cells[j].is_some() {
                        out.push((top + j, *it.next().unwrap()));
                    }
                }
                out
            };
            let cells0 = place(*top0, orig0, l0);
            let cells1 = place(*top1, orig1, l1);
            for &(r, y) in &cells1 {
                if let Some(&(_, x)) = cells0.iter().find(|&&(r0, _)| r0 == r) {
                    if !a.le(x, y) {
                        return Err(Error::SplitNotSemistandard { row: r, col: i + 1 });
                    }
                }
            }
        }
        Ok(())
    }

    /// The split form spl(T) as a (2k)-column type-A-ordered tableau over the
    /// same letters, for display.
    pub fn split_form(&self) -> Result<SkewTableau> {
        let Alphabet::C { n } = self.alphabet else {
            return Ok(self.clone());
        };
        let mut cols = Vec::with_capacity(2 * self.cols.len());
        for col in &self.cols {
            let letters = col.letters();
            let (l, r) = column::split(&letters, n)?;
            for letters in [l, r] {
                let mut cells = Vec::with_capacity(col.cells.len());
                let mut it = letters.into_iter();
                for cell in &col.cells {
                    cells.push(if cell.is_some() { Some(it.next().unwrap()) } else { None });
                }
                cols.push(Column { top: col.top, cells });
            }
        }
        Ok(SkewTableau { alphabet: self.alphabet, cols })
    }

    // ---- text format ----

    /// Canonical text: rows joined by "/", cells by ","; barred letters as
    /// "-k", inner cells ".", puncture "*".
    pub fn render(&self) -> String {
        let outer = self.outer_shape();
        let inner = self.inner_shape();
        let mut rows = Vec::new();
        for r in 0..outer.rows() {
            let mut cells = Vec::new();
            for c in 0..outer.row(r) {
                if c < inner.row(r) {
                    cells.push(".".to_string());
                } else if self.entry(r, c).is_none() && self.has_cell(r, c) {
                    cells.push("*".to_string());
                } else {
                    cells.push(self.entry(r, c).unwrap().to_string());
                }
            }
            rows.push(cells.join(","));
        }
        rows.join("/")
    }

    pub fn parse(alphabet: Alphabet, s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut inner_parts = Vec::new();
        let mut rows = Vec::new();
        if s.is_empty() {
            return Ok(SkewTableau::empty(alphabet));
        }
        for (r, row_s) in s.split('/').enumerate() {
            let mut inner = 0usize;
            let mut row = Vec::new();
            for (c, cell_s) in row_s.split(',').enumerate() {
                match cell_s {
                    "." => {
                        if !row.is_empty() {
                            return Err(Error::Parse {
                                row: r + 1,
                                col: c + 1,
                                msg: "inner cell after a filled cell".into(),
                            });
                        }
                        inner += 1;
                    }
                    "*" => row.push(None),
                    _ => {
                        let x = alphabet.parse_letter(cell_s).map_err(|e| Error::Parse {
                            row: r + 1,
                            col: c + 1,
                            msg: e.to_string(),
                        })?;
                        row.push(Some(x));
                    }
                }
            }
            inner_parts.push(inner);
            rows.push(row);
        }
        let inner = Shape::new(inner_parts)
            .map_err(|e| Error::Parse { row: 0, col: 0, msg: e.to_string() })?;
        SkewTableau::from_rows(alphabet, &inner, rows)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let outer = self.outer_shape();
        let inner = self.inner_shape();
        let rows: Vec<Vec<serde_json::Value>> = (0..outer.rows())
            .map(|r| {
                (0..outer.row(r))
                    .map(|c| match self.entry(r, c) {
                        Some(x) => serde_json::json!(x),
                        None => serde_json::Value::Null,
                    })
                    .collect()
            })
            .collect();
        serde_json::json!({
            "n": self.alphabet.rank(),
            "outer": outer.parts(),
            "inner": inner.parts(),
            "rows": rows,
        })
    }

    /// Restriction to the letters whose order position lies in lo..=hi
    /// (1-based). Cells holding smaller letters remain as inner region;
    /// larger letters leave the shape. Column x-coordinates are preserved
    /// via placeholder columns.
    pub fn restrict_window(&self, lo: usize, hi: usize) -> Result<SkewTableau> {
        let a = self.alphabet;
        let mut cols = Vec::with_capacity(self.cols.len());
        for col in &self.cols {
            let mut below = 0usize;
            let mut cells = Vec::new();
            for (i, cell) in col.cells.iter().enumerate() {
                let x = cell
                    .ok_or_else(|| Error::Domain("cannot restrict a punctured tableau".into()))?;
                let o = a.ord(x);
                if o < lo {
                    below += 1;
                    if !cells.is_empty() {
                        return Err(Error::Domain(
                            "restriction does not form a column interval".into(),
                        ));
                    }
                } else if o <= hi {
                    if col.top + i != col.top + below + cells.len() {
                        return Err(Error::Domain(
                            "restriction does not form a column interval".into(),
                        ));
                    }
                    cells.push(Some(x));
                }
            }
            cols.push(Column { top: col.top + below, cells });
        }
        while cols.last().is_some_and(|c: &Column| c.cells.is_empty() && c.top == 0) {
            cols.pop();
        }
        SkewTableau::from_cols(self.alphabet, cols)
    }

    /// Rotate the tableau by pi and complement every letter. The result is a
    /// skew tableau anchored so that its outer shape is the rectangle
    /// complement of the original.
    pub fn rotate_complement(&self) -> SkewTableau {
        let live: Vec<&Column> = self.cols.iter().filter(|c| !c.cells.is_empty()).collect();
        if live.is_empty() {
            return SkewTableau::empty(self.alphabet);
        }
        let height = live.iter().map(|c| c.bottom()).max().unwrap();
        let cols = live
            .iter()
            .rev()
            .map(|col| {
                let cells: Vec<Option<Letter>> = col
                    .cells
                    .iter()
                    .rev()
                    .map(|cell| cell.map(|x| self.alphabet.complement(x)))
                    .collect();
                Column { top: height - col.bottom(), cells }
            })
            .collect();
        SkewTableau { alphabet: self.alphabet, cols }
    }

    /// Shift every letter by `delta` ranks within type C: k -> k+delta,
    /// k-bar -> (k+delta)-bar, rebasing onto the alphabet C_{n+delta'}.
    pub fn shift_letters(&self, delta: i32, new_n: usize) -> SkewTableau {
        let cols = self
            .cols
            .iter()
            .map(|col| Column {
                top: col.top,
                cells: col
                    .cells
                    .iter()
                    .map(|cell| {
                        cell.map(|x| if x > 0 { x + delta } else { x - delta })
                    })
                    .collect(),
            })
            .collect();
        SkewTableau { alphabet: Alphabet::c(new_n), cols }
    }
}

pub fn letter_to_string(x: Letter) -> String {
    x.to_string()
}

pub use crate::alphabet::is_barred as letter_is_barred;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_render_roundtrip() {
        let a = Alphabet::c(2);
        let t = SkewTableau::parse(a, "1,1/2").unwrap();
        assert_eq!(t.render(), "1,1/2");
        assert_eq!(t.outer_shape(), Shape::from([2, 1]));
        assert!(t.is_straight());
        assert_eq!(t.weight(), vec![2, 1]);
    }

    #[test]
    fn parse_skew_punctured() {
        let a = Alphabet::c(3);
        let t = SkewTableau::parse(a, "*,2/3,-2/-3").unwrap();
        assert_eq!(t.puncture(), Some((0, 0)));
        assert_eq!(t.render(), "*,2/3,-2/-3");
        let t2 = SkewTableau::parse(a, ".,2,-2,-1/-2,-2,-1/-1").unwrap();
        assert_eq!(t2.inner_shape(), Shape::from([1]));
        assert_eq!(t2.outer_shape(), Shape::from([4, 3, 1]));
        assert_eq!(t2.render(), ".,2,-2,-1/-2,-2,-1/-1");
    }

    #[test]
    fn semistandard_violations_detected() {
        let a = Alphabet::c(2);
        assert!(SkewTableau::parse(a, "2,1").is_err());
        assert!(SkewTableau::parse(a, "1/1").is_err());
        // -2 < 2 is false in C order: barred after unbarred
        assert!(SkewTableau::parse(a, "-2,2").is_err());
    }

    #[test]
    fn non_kn_split() {
        let a = Alphabet::c(2);
        // both columns (2,2-bar): admissible, but split is not semistandard
        let t = SkewTableau::parse(a, "2,2/-2,-2").unwrap();
        assert!(t.check_semistandard().is_ok());
        assert!(!t.is_kn());
        // a single admissible column is KN
        let c = SkewTableau::parse(a, "2/-2").unwrap();
        assert!(c.is_kn());
    }

    #[test]
    fn yamanouchi_weight() {
        let t = SkewTableau::yamanouchi(Alphabet::c(2), &Shape::from([2, 1]));
        assert_eq!(t.render(), "1,1/2");
        assert_eq!(t.weight(), vec![2, 1]);
    }

    #[test]
    fn rotate_complement() {
        let a = Alphabet::c(3);
        // rect(T) from the full-reversal example: rows (-2,-2,-1,-1)/(-1)
        let t = SkewTableau::parse(a, "-2,-2,-1,-1/-1").unwrap();
        let r = t.rotate_complement();
        assert_eq!(r.render(), ".,.,.,1/1,1,2,2");
    }
}
