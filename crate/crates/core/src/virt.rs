//! Baker virtualization: the virtual column split, the embedding E of a C_n
//! crystal into an A_{2n-1} crystal by column insertion, the recording
//! tableau determined by the shape, the inverse map, and virtual crystal
//! operators and involutions.
//!
//! A_{2n-1} tableaux are stored over the ordinal alphabet 1..=2n; the letter
//! k-bar of the C_n alphabet corresponds to the ordinal 2n+1-k.

use crate::alphabet::{Alphabet, Letter};
use crate::column;
use crate::error::{Error, Result};
use crate::shape::Shape;
use crate::tableau::{Column, SkewTableau};
use crate::type_a;
use crate::word::{column_insert, reverse_column_insert, StandardTableau, Word};

/// Converts a type C tableau to its ordinal type A form over 1..=2n.
pub fn to_a(t: &SkewTableau) -> Result<SkewTableau> {
    let Alphabet::C { n: _n } = t.alphabet else {
        return Err(Error::Domain("expected a type C tableau".into()));
    };
    let a = Alphabet::a(2 * _n);
    let ca = t.alphabet;
    let cols = t
        .cols()
        .iter()
        .map(|col| Column {
            top: col.top,
            cells: col.cells.iter().map(|cell| cell.map(|x| ca.ord(x) as Letter)).collect(),
        })
        .collect();
    SkewTableau::from_cols(a, cols)
}

/// Inverse of `to_a`.
pub fn to_c(t: &SkewTableau, n: usize) -> Result<SkewTableau> {
    let Alphabet::A { m } = t.alphabet else {
        return Err(Error::Domain("expected a type A tableau".into()));
    };
    if m != 2 * n {
        return Err(Error::Domain(format!("alphabet size {m} is not 2n = {}", 2 * n)));
    }
    let ca = Alphabet::c(n);
    let cols = t
        .cols()
        .iter()
        .map(|col| Column {
            top: col.top,
            cells: col.cells.iter().map(|cell| cell.map(|x| ca.letter_at(x as usize))).collect(),
        })
        .collect();
    SkewTableau::from_cols(ca, cols)
}

/// Parses an A_{2n-1} tableau written in the barred convention (-k for the
/// ordinal 2n+1-k).
pub fn parse_virtual(n: usize, s: &str) -> Result<SkewTableau> {
    let t = SkewTableau::parse(Alphabet::c(n), s)?;
    to_a(&t)
}

/// The virtual split of an admissible column of height i: a two-column type
/// A tableau of shape (height 2n-i, height i). The right column is rC; the
/// left column is lC together with both members of every symmetric pair
/// absent from lC's values.
pub fn virtual_split(col: &[Letter], n: usize) -> Result<SkewTableau> {
    let ca = Alphabet::c(n);
    let (l, r) = column::split(col, n)?;
    let values: Vec<i32> = l.iter().map(|x| x.abs()).collect();
    let mut left = l.clone();
    for v in 1..=n as i32 {
        if !values.contains(&v) {
            left.push(v);
            left.push(-v);
        }
    }
    ca.sort(&mut left);
    let a = Alphabet::a(2 * n);
    let to_ord = |v: &[Letter]| -> Vec<Option<Letter>> {
        v.iter().map(|&x| Some(ca.ord(x) as Letter)).collect()
    };
    let cols = vec![
        Column { top: 0, cells: to_ord(&left) },
        Column { top: 0, cells: to_ord(&r) },
    ];
    SkewTableau::from_cols(a, cols)
}

/// Inverse of `virtual_split`; errors when the two-column tableau is not in
/// the image.
pub fn virtual_split_inv(t: &SkewTableau, n: usize) -> Result<Vec<Letter>> {
    let Alphabet::A { m } = t.alphabet else {
        return Err(Error::Domain("expected a type A two-column tableau".into()));
    };
    if m != 2 * n || t.num_cols() != 2 {
        return Err(Error::Domain("expected a two-column tableau over 1..=2n".into()));
    }
    let ca = Alphabet::c(n);
    let left: Vec<Letter> =
        t.cols()[0].letters().iter().map(|&o| ca.letter_at(o as usize)).collect();
    let right: Vec<Letter> =
        t.cols()[1].letters().iter().map(|&o| ca.letter_at(o as usize)).collect();
    if left.len() + right.len() != 2 * n {
        return Err(Error::Domain("column heights do not sum to 2n".into()));
    }
    // symmetric pairs of the left column are exactly the completed values
    let pairs: Vec<i32> = column::symmetric_pairs(&left);
    let l_c: Vec<Letter> = left.iter().copied().filter(|x| !pairs.contains(&x.abs())).collect();
    // the original column: unbarred letters of rC, barred letters of lC
    let mut col: Vec<Letter> = right.iter().copied().filter(|&x| x > 0).collect();
    col.extend(l_c.iter().copied().filter(|&x| x < 0));
    ca.sort(&mut col);
    let check = virtual_split(&col, n)?;
    if &check != t {
        return Err(Error::Domain(format!(
            "two-column tableau is not a virtual split (nearest candidate {col:?})"
        )));
    }
    Ok(col)
}

/// Reading word of a virtual split (right column then left, top to bottom).
pub fn virtual_split_word(psi: &SkewTableau) -> Result<Word> {
    crate::word::reading_word(psi)
}

/// The Baker embedding: column insertion of the virtual split words of the
/// columns of T, rightmost column first.
pub fn embed(t: &SkewTableau) -> Result<SkewTableau> {
    Ok(embed_with_recording(t)?.0)
}

pub fn embed_with_recording(t: &SkewTableau) -> Result<(SkewTableau, StandardTableau)> {
    let Alphabet::C { n } = t.alphabet else {
        return Err(Error::Domain("the embedding is defined on type C tableaux".into()));
    };
    if !t.is_straight() {
        return Err(Error::Domain("the embedding needs a straight tableau".into()));
    }
    t.check_kn()?;
    let a = Alphabet::a(2 * n);
    let mut letters = Vec::new();
    for col in t.cols().iter().rev() {
        let psi = virtual_split(&col.letters(), n)?;
        letters.extend(virtual_split_word(&psi)?.letters);
    }
    let w = Word::new(a, letters)?;
    column_insert(&SkewTableau::empty(a), &w)
}

/// lambda^A: each column of lambda of height h contributes columns of
/// heights h and 2n-h.
pub fn virtual_shape(lambda: &Shape, n: usize) -> Result<Shape> {
    if lambda.rows() > n {
        return Err(Error::Domain(format!("{lambda} has more than {n} parts")));
    }
    let mut parts = vec![0usize; 2 * n];
    for c in 0..lambda.row(0) {
        let h = lambda.col_height(c);
        for hh in [h, 2 * n - h] {
            for row in parts.iter_mut().take(hh) {
                *row += 1;
            }
        }
    }
    Shape::new(parts)
}

/// The recording tableau determined by lambda: grow the shape by columns of
/// heights m_1, 2n-m_1, m_2, 2n-m_2, ... (column heights of lambda in
/// increasing order), filling each added vertical strip top to bottom.
pub fn q_lambda(lambda: &Shape, n: usize) -> Result<StandardTableau> {
    if lambda.rows() > n {
        return Err(Error::Domain(format!("{lambda} has more than {n} parts")));
    }
    let mut ms: Vec<usize> = (0..lambda.row(0)).map(|c| lambda.col_height(c)).collect();
    ms.reverse(); // increasing
    let shape_of = |heights: &[usize]| -> Vec<usize> {
        let mut parts = vec![0usize; 2 * n];
        for &h in heights {
            for row in parts.iter_mut().take(h) {
                *row += 1;
            }
        }
        parts
    };
    let mut heights: Vec<usize> = Vec::new();
    let mut cols: Vec<Vec<usize>> = Vec::new();
    let mut label = 1usize;
    for &m in &ms {
        for h in [m, 2 * n - m] {
            let old = shape_of(&heights);
            heights.push(h);
            let new = shape_of(&heights);
            // the added vertical strip, top to bottom
            for (r, (&o, &w)) in old.iter().zip(new.iter()).enumerate() {
                if w > o {
                    debug_assert_eq!(w, o + 1);
                    let c = w - 1;
                    while cols.len() <= c {
                        cols.push(Vec::new());
                    }
                    debug_assert_eq!(cols[c].len(), r);
                    cols[c].push(label);
                    label += 1;
                }
            }
        }
    }
    StandardTableau::new(cols)
}

/// Inverse of the embedding, which doubles as the image-membership test:
/// reverse the column insertion against the recording tableau of lambda and
/// unsplit every column pair.
pub fn invert(p: &SkewTableau, lambda: &Shape, n: usize) -> Result<SkewTableau> {
    let Alphabet::A { m } = p.alphabet else {
        return Err(Error::Domain("expected a type A tableau".into()));
    };
    if m != 2 * n {
        return Err(Error::Domain(format!("alphabet size {m} is not 2n = {}", 2 * n)));
    }
    let lam_a = virtual_shape(lambda, n)?;
    if p.outer_shape() != lam_a || !p.is_straight() {
        return Err(Error::Domain(format!(
            "shape {} is not the virtual shape {lam_a} of {lambda}",
            p.outer_shape()
        )));
    }
    let q = q_lambda(lambda, n)?;
    let w = reverse_column_insert(p, &q)?;
    let k = lambda.row(0);
    let a = p.alphabet;
    let mut cols_c: Vec<Vec<Letter>> = Vec::with_capacity(k);
    for j in 0..k {
        let seg = &w.letters[j * 2 * n..(j + 1) * 2 * n];
        let (two_col, _) = column_insert(&SkewTableau::empty(a), &Word::new(a, seg.to_vec())?)?;
        if two_col.num_cols() != 2 {
            return Err(Error::Domain(format!(
                "column pair {} does not insert to two columns; not in the image",
                j + 1
            )));
        }
        let col = virtual_split_inv(&two_col, n).map_err(|e| {
            Error::Domain(format!("column pair {} fails to unsplit: {e}", j + 1))
        })?;
        cols_c.push(col);
    }
    // segments arrive rightmost-column first
    cols_c.reverse();
    let cols = cols_c
        .into_iter()
        .map(|letters| Column { top: 0, cells: letters.into_iter().map(Some).collect() })
        .collect();
    let out = SkewTableau::from_cols(Alphabet::c(n), cols)?;
    out.check_kn()?;
    Ok(out)
}

/// Virtual lowering operator: f^A_i f^A_{2n-i} for i < n, (f^A_n)^2 for i=n.
pub fn virtual_f(p: &SkewTableau, i: usize, n: usize) -> Result<Option<SkewTableau>> {
    let (c1, c2) = virtual_colors(i, n)?;
    let Some(step) = crate::crystal::f(p, c1)? else { return Ok(None) };
    crate::crystal::f(&step, c2)
}

/// Virtual raising operator.
pub fn virtual_e(p: &SkewTableau, i: usize, n: usize) -> Result<Option<SkewTableau>> {
    let (c1, c2) = virtual_colors(i, n)?;
    let Some(step) = crate::crystal::e(p, c2)? else { return Ok(None) };
    crate::crystal::e(&step, c1)
}

fn virtual_colors(i: usize, n: usize) -> Result<(usize, usize)> {
    if i < 1 || i > n {
        return Err(Error::BadColor(i));
    }
    if i == n {
        Ok((n, n))
    } else {
        Ok((i, 2 * n - i))
    }
}

/// The folded interval(s) in the A_{2n-1} diagram corresponding to the C_n
/// interval [p,q].
pub fn fold_interval(p: usize, q: usize, n: usize) -> Result<Vec<(usize, usize)>> {
    if p < 1 || q > n || p > q {
        return Err(Error::BadInterval(p, q));
    }
    if q == n {
        Ok(vec![(p, 2 * n - p)])
    } else {
        Ok(vec![(p, q), (2 * n - q, 2 * n - p)])
    }
}

/// The partial involution on the virtual side for the C_n interval [p,q].
pub fn virtual_partial_xi(pa: &SkewTableau, p: usize, q: usize, n: usize) -> Result<SkewTableau> {
    type_a::partial_xi(pa, &fold_interval(p, q, n)?)
}

/// Verifies the commutative square E(xi^C_[p,q](T)) = xi^A_fold(E(T)).
pub fn check_diagram(t: &SkewTableau, p: usize, q: usize) -> Result<bool> {
    let Alphabet::C { n } = t.alphabet else {
        return Err(Error::Domain("type C tableau required".into()));
    };
    let via_c = crate::involutions::partial_xi_c(t, p, q)?;
    let lhs = embed(&via_c)?;
    let rhs = virtual_partial_xi(&embed(t)?, p, q, n)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal;

    #[test]
    fn psi_examples_n6() {
        // the four column splits of the rank 6 worked example
        let n = 6;
        let cases: Vec<(Vec<i32>, &str)> = vec![
            (vec![-3, -1], "2,-3/4,-1/5/6/-6/-5/-4/-3/-2/-1"),
            (vec![3, 5, -5, -3, -1], "2,3/4,5/6,-4/-6,-2/-5,-1/-3/-1"),
            (vec![2, 4, 6, -6, -5, -4], "1,2/2,4/3,6/-6,-5/-5,-3/-4,-1"),
            (vec![1, 2, 3, 5, 6, -5], "1,1/2,2/3,3/4,5/6,6/-5,-4"),
        ];
        for (col, expect) in cases {
            let psi = virtual_split(&col, n).unwrap();
            let want = parse_virtual(n, expect).unwrap();
            assert_eq!(psi, want, "psi({col:?})");
            assert_eq!(virtual_split_inv(&psi, n).unwrap(), col);
        }
    }

    #[test]
    fn psi_roundtrip_exhaustive_small() {
        for n in 1..=3 {
            for col in crate::column::all_columns(n, n) {
                if col.is_empty() || !crate::column::is_admissible(&col, n) {
                    continue;
                }
                let psi = virtual_split(&col, n).unwrap();
                assert_eq!(psi.cols()[1].letters().len(), col.len());
                assert_eq!(psi.cols()[0].letters().len(), 2 * n - col.len());
                assert_eq!(virtual_split_inv(&psi, n).unwrap(), col);
            }
        }
    }

    #[test]
    fn embed_yamanouchi() {
        let n = 2;
        let lam = Shape::from([2, 1]);
        let t = SkewTableau::yamanouchi(Alphabet::c(n), &lam);
        let e = embed(&t).unwrap();
        let lam_a = virtual_shape(&lam, n).unwrap();
        assert_eq!(e.outer_shape(), lam_a);
        let want = SkewTableau::yamanouchi(Alphabet::a(2 * n), &lam_a);
        assert_eq!(e, want);
    }

    #[test]
    fn q_lambda_tiny() {
        let q = q_lambda(&Shape::from([1]), 1).unwrap();
        assert_eq!(q.shape(), Shape::from([2]));
        assert_eq!(q.label(0, 0), Some(1));
        assert_eq!(q.label(0, 1), Some(2));
    }

    #[test]
    fn recording_is_q_lambda() {
        let n = 2;
        for lam in Shape::all_up_to(3, n) {
            let ql = q_lambda(&lam, n).unwrap();
            let g = crystal::generate_full(Alphabet::c(n), &lam).unwrap();
            for v in &g.vertices {
                let (_, q) = embed_with_recording(v).unwrap();
                assert_eq!(q, ql, "recording differs at {}", v.render());
            }
        }
    }

    #[test]
    fn invert_roundtrip_exhaustive() {
        let n = 2;
        for lam in Shape::all_up_to(4, n) {
            let g = crystal::generate_full(Alphabet::c(n), &lam).unwrap();
            for v in &g.vertices {
                let e = embed(v).unwrap();
                let back = invert(&e, &lam, n).unwrap();
                assert_eq!(back, *v);
            }
        }
    }

    #[test]
    fn intertwining_on_c2_21() {
        let n = 2;
        let lam = Shape::from([2, 1]);
        let g = crystal::generate_full(Alphabet::c(n), &lam).unwrap();
        for v in &g.vertices {
            let ev = embed(v).unwrap();
            for i in 1..=n {
                let lhs = crystal::f(v, i).unwrap().map(|t| embed(&t).unwrap());
                let rhs = virtual_f(&ev, i, n).unwrap();
                assert_eq!(lhs, rhs, "f_{i} fails to intertwine at {}", v.render());
            }
        }
    }

    #[test]
    fn eps_halving_at_n() {
        let n = 2;
        let g = crystal::generate_full(Alphabet::c(n), &Shape::from([2, 1])).unwrap();
        for v in &g.vertices {
            let ev = embed(v).unwrap();
            let (eps_c, phi_c) = crystal::eps_phi(v, n).unwrap();
            let (eps_a, phi_a) = crystal::eps_phi(&ev, n).unwrap();
            assert_eq!(2 * eps_c, eps_a);
            assert_eq!(2 * phi_c, phi_a);
            let (e1c, p1c) = crystal::eps_phi(v, 1).unwrap();
            let (e1a, p1a) = crystal::eps_phi(&ev, 1).unwrap();
            let (e3a, p3a) = crystal::eps_phi(&ev, 2 * n - 1).unwrap();
            assert_eq!((e1c, p1c), (e1a, p1a));
            assert_eq!((e1c, p1c), (e3a, p3a));
        }
    }
}
