//! Words, symplectic Knuth relations, plactic equivalence, and type A column
//! insertion with recording tableaux.

use crate::alphabet::{Alphabet, Letter};
use crate::column;
use crate::error::{Error, Result};
use crate::shape::Shape;
use crate::tableau::{Column, SkewTableau};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    pub alphabet: Alphabet,
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self> {
        for &x in &letters {
            if !alphabet.contains(x) {
                return Err(Error::BadLetter(format!("{x} not in {alphabet}")));
            }
        }
        Ok(Word { alphabet, letters })
    }

    pub fn parse(alphabet: Alphabet, s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|tok| alphabet.parse_letter(tok))
            .collect::<Result<Vec<_>>>()?;
        Word::new(alphabet, letters)
    }

    pub fn render(&self) -> String {
        self.letters.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn weight(&self) -> Vec<i64> {
        let mut w = vec![0i64; self.alphabet.rank()];
        for &x in &self.letters {
            if x > 0 {
                w[(x - 1) as usize] += 1;
            } else {
                w[(-x - 1) as usize] -= 1;
            }
        }
        w
    }

    /// The diagonal (antichain staircase) skew tableau whose reading word is
    /// this word: letter j sits alone in column N-j (0-based), row j-1.
    pub fn diagonal_tableau(&self) -> SkewTableau {
        let n = self.letters.len();
        let cols = (0..n)
            .map(|c| Column { top: n - 1 - c, cells: vec![Some(self.letters[n - 1 - c])] })
            .collect();
        SkewTableau::from_cols(self.alphabet, cols).expect("diagonal tableau")
    }
}

/// Japanese reading: columns right to left, each top to bottom.
pub fn reading_word(t: &SkewTableau) -> Result<Word> {
    if t.puncture().is_some() {
        return Err(Error::Domain("reading word of a punctured tableau".into()));
    }
    let letters = t.reading_cells().into_iter().map(|(_, _, x)| x).collect();
    Word::new(t.alphabet, letters)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KnuthRule {
    R1a,
    R1b,
    R2a,
    R2b,
    R3Contract,
    R3Dilate(i32),
}

impl std::str::FromStr for KnuthRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "r1a" => Ok(KnuthRule::R1a),
            "r1b" => Ok(KnuthRule::R1b),
            "r2a" => Ok(KnuthRule::R2a),
            "r2b" => Ok(KnuthRule::R2b),
            "r3contract" | "r3c" => Ok(KnuthRule::R3Contract),
            other => {
                if let Some(z) = other.strip_prefix("r3dilate:").or(other.strip_prefix("r3d:")) {
                    let z: i32 = z.parse().map_err(|_| Error::Domain(format!("bad rule {s}")))?;
                    Ok(KnuthRule::R3Dilate(z))
                } else {
                    Err(Error::Domain(format!("unknown rule {s}")))
                }
            }
        }
    }
}

fn bar(x: Letter) -> Letter {
    -x
}

/// Applies one Knuth rewrite at `pos` (0-based). Errors when the pattern
/// does not match there.
pub fn knuth_step(w: &Word, pos: usize, rule: KnuthRule) -> Result<Word> {
    let a = w.alphabet;
    let Alphabet::C { n } = a else {
        return Err(Error::Domain("symplectic Knuth relations need a type C word".into()));
    };
    let fail = |rule: &str| Error::Domain(format!("rule {rule} does not match at position {pos}"));
    let mut out = w.letters.clone();
    match rule {
        KnuthRule::R1a => {
            // y z x -> y x z, for x <= y < z, z != bar(x)
            let [y, z, x] = w.letters[pos..].first_chunk().ok_or_else(|| fail("R1a"))?;
            if !(a.le(*x, *y) && a.lt(*y, *z) && *z != bar(*x)) {
                return Err(fail("R1a"));
            }
            out[pos + 1] = *x;
            out[pos + 2] = *z;
        }
        KnuthRule::R1b => {
            // x z y -> z x y, for x < y <= z, z != bar(x)
            let [x, z, y] = w.letters[pos..].first_chunk().ok_or_else(|| fail("R1b"))?;
            if !(a.lt(*x, *y) && a.le(*y, *z) && *z != bar(*x)) {
                return Err(fail("R1b"));
            }
            out[pos] = *z;
            out[pos + 1] = *x;
        }
        KnuthRule::R2a => {
            // y bar(x-1) (x-1) -> y x bar(x), for 1 < x <= n, x <= y <= bar(x)
            let [y, b, u] = w.letters[pos..].first_chunk().ok_or_else(|| fail("R2a"))?;
            if !(*u > 0 && *b == -*u) {
                return Err(fail("R2a"));
            }
            let x = *u + 1;
            if !(x <= n as i32 && a.le(x, *y) && a.le(*y, -x)) {
                return Err(fail("R2a"));
            }
            out[pos + 1] = x;
            out[pos + 2] = -x;
        }
        KnuthRule::R2b => {
            // x bar(x) y -> bar(x-1) (x-1) y, same conditions
            let [u, b, y] = w.letters[pos..].first_chunk().ok_or_else(|| fail("R2b"))?;
            let x = *u;
            if !(x > 1 && *b == -x && a.le(x, *y) && a.le(*y, -x)) {
                return Err(fail("R2b"));
            }
            out[pos] = -(x - 1);
            out[pos + 1] = x - 1;
        }
        KnuthRule::R3Contract => {
            let run = increasing_run(&a, &w.letters[pos..]);
            let seg = &w.letters[pos..pos + run];
            if column::is_admissible(seg, n) || !column::prefixes_admissible(seg, n) {
                return Err(fail("R3contract"));
            }
            let z = column::lowest_violation(seg, n).ok_or_else(|| fail("R3contract"))?;
            if column::count_n(seg, z as usize, n) != z as usize + 1 {
                return Err(fail("R3contract"));
            }
            let kept: Vec<Letter> =
                seg.iter().copied().filter(|&x| x.abs() != z).collect();
            out.splice(pos..pos + run, kept);
        }
        KnuthRule::R3Dilate(z) => {
            let run = increasing_run(&a, &w.letters[pos..]);
            let seg = &w.letters[pos..pos + run];
            if seg.iter().any(|&x| x.abs() == z) || z < 1 || z > n as i32 {
                return Err(fail("R3dilate"));
            }
            let mut dilated: Vec<Letter> = seg.to_vec();
            dilated.push(z);
            dilated.push(-z);
            a.sort(&mut dilated);
            if column::is_admissible(&dilated, n)
                || !column::prefixes_admissible(&dilated, n)
                || column::lowest_violation(&dilated, n) != Some(z)
            {
                return Err(fail("R3dilate"));
            }
            out.splice(pos..pos + run, dilated);
        }
    }
    Word::new(a, out)
}

/// Length of the maximal strictly increasing run starting at the front.
fn increasing_run(a: &Alphabet, s: &[Letter]) -> usize {
    let mut k = 1.min(s.len());
    while k < s.len() && a.lt(s[k - 1], s[k]) {
        k += 1;
    }
    k
}

/// Plactic (symplectic Knuth) equivalence, decided by comparing symplectic
/// rectifications of the diagonal tableaux of the two words.
pub fn plactic_equivalent(w1: &Word, w2: &Word) -> Result<bool> {
    if w1.alphabet != w2.alphabet {
        return Err(Error::Domain("words over different alphabets".into()));
    }
    if w1.weight() != w2.weight() {
        return Ok(false);
    }
    Ok(plactic_class(w1)? == plactic_class(w2)?)
}

/// The plactic normal form: the symplectic rectification of the word's
/// diagonal tableau.
pub fn plactic_class(w: &Word) -> Result<SkewTableau> {
    if w.is_empty() {
        return Ok(SkewTableau::empty(w.alphabet));
    }
    crate::sjdt::rectify(&w.diagonal_tableau())
}

// ---- standard tableaux and type A column insertion ----

/// A standard tableau of straight shape, its cells labelled bijectively by
/// 1..=N with rows and columns strictly increasing. Stored column-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardTableau {
    cols: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(cols: Vec<Vec<usize>>) -> Result<Self> {
        let t = StandardTableau { cols };
        t.check()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        StandardTableau { cols: Vec::new() }
    }

    fn check(&self) -> Result<()> {
        let n: usize = self.cols.iter().map(|c| c.len()).sum();
        let mut seen = vec![false; n + 1];
        for (c, col) in self.cols.iter().enumerate() {
            if c + 1 < self.cols.len() && self.cols[c + 1].len() > col.len() {
                return Err(Error::BadShape("standard tableau columns not decreasing".into()));
            }
            for (r, &x) in col.iter().enumerate() {
                if x < 1 || x > n || seen[x] {
                    return Err(Error::Domain(format!("label {x} repeated or out of range")));
                }
                seen[x] = true;
                if r > 0 && col[r - 1] >= x {
                    return Err(Error::NotSemistandard { row: r, col: c });
                }
                if c > 0 && self.cols[c - 1][r] >= x {
                    return Err(Error::NotSemistandard { row: r, col: c });
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn shape(&self) -> Shape {
        let rows = self.cols.first().map(|c| c.len()).unwrap_or(0);
        Shape::new((0..rows).map(|r| self.cols.iter().filter(|c| c.len() > r).count()).collect())
            .expect("standard shape")
    }

    pub fn label(&self, r: usize, c: usize) -> Option<usize> {
        self.cols.get(c).and_then(|col| col.get(r).copied())
    }

    pub fn cell_of(&self, label: usize) -> Option<(usize, usize)> {
        for (c, col) in self.cols.iter().enumerate() {
            if let Some(r) = col.iter().position(|&x| x == label) {
                return Some((r, c));
            }
        }
        None
    }

    fn add_cell(&mut self, r: usize, c: usize, label: usize) {
        if c == self.cols.len() {
            self.cols.push(Vec::new());
        }
        debug_assert_eq!(self.cols[c].len(), r);
        self.cols[c].push(label);
    }

    pub fn render(&self) -> String {
        let shape = self.shape();
        let mut rows = Vec::new();
        for r in 0..shape.rows() {
            let mut row = Vec::new();
            for c in 0..shape.row(r) {
                row.push(self.label(r, c).unwrap().to_string());
            }
            rows.push(row.join(","));
        }
        rows.join("/")
    }
}

/// Schensted column insertion of one letter; returns the created cell.
fn column_insert_letter(cols: &mut Vec<Column>, a: &Alphabet, x: Letter) -> (usize, usize) {
    let mut carry = x;
    let mut c = 0;
    loop {
        if c == cols.len() {
            cols.push(Column { top: 0, cells: vec![Some(carry)] });
            return (0, c);
        }
        let col = &mut cols[c];
        // bump the topmost entry >= carry
        let pos = col
            .cells
            .iter()
            .position(|&y| a.ord(y.unwrap()) >= a.ord(carry));
        match pos {
            None => {
                col.cells.push(Some(carry));
                return (col.cells.len() - 1, c);
            }
            Some(i) => {
                let bumped = col.cells[i].unwrap();
                col.cells[i] = Some(carry);
                carry = bumped;
                c += 1;
            }
        }
    }
}

/// Column insertion of a word into a straight tableau, recording the cells
/// created (labelled 1..=|w| in insertion order).
pub fn column_insert(p: &SkewTableau, w: &Word) -> Result<(SkewTableau, StandardTableau)> {
    if !p.is_straight() || p.puncture().is_some() {
        return Err(Error::Domain("insertion needs a straight unpunctured tableau".into()));
    }
    let a = p.alphabet;
    let mut cols = p.cols().to_vec();
    let mut rec = StandardTableau::empty();
    for (k, &x) in w.letters.iter().enumerate() {
        let (r, c) = column_insert_letter(&mut cols, &a, x);
        rec.add_cell(r, c, k + 1);
    }
    let out = SkewTableau::from_cols(a, cols)?;
    Ok((out, rec))
}

/// Inverse of `column_insert`: removes cells in decreasing label order and
/// returns the unique word that inserts to (p, q).
pub fn reverse_column_insert(p: &SkewTableau, q: &StandardTableau) -> Result<Word> {
    let a = p.alphabet;
    let mut cols = p.cols().to_vec();
    let mut letters_rev = Vec::with_capacity(q.size());
    for label in (1..=q.size()).rev() {
        let (r, c) = q
            .cell_of(label)
            .ok_or_else(|| Error::Domain(format!("label {label} missing from recording")))?;
        let col = cols
            .get_mut(c)
            .ok_or_else(|| Error::Domain("recording shape exceeds tableau".into()))?;
        if col.cells.len() != r + 1 {
            return Err(Error::Domain(format!(
                "label {label} at ({r},{c}) is not an outer corner of the remaining shape"
            )));
        }
        let mut carry = col.cells.pop().unwrap().unwrap();
        if col.cells.is_empty() {
            cols.pop();
        }
        for cc in (0..c).rev() {
            let col = &mut cols[cc];
            // reverse-bump the bottommost entry <= carry
            let i = col
                .cells
                .iter()
                .rposition(|&y| a.ord(y.unwrap()) <= a.ord(carry))
                .ok_or_else(|| Error::Invariant("reverse insertion found no smaller entry".into()))?;
            let next = col.cells[i].unwrap();
            col.cells[i] = Some(carry);
            carry = next;
        }
        letters_rev.push(carry);
    }
    letters_rev.reverse();
    Word::new(a, letters_rev)
}
