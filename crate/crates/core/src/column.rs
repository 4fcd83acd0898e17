//! Admissible columns: the N(m) criterion, splitting, and the bijection
//! between admissible and coadmissible columns used by horizontal slides.
//!
//! A column is a strictly increasing sequence of letters over
//! 1 < ... < n < -n < ... < -1, given here as a sorted `Vec<Letter>`.

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};

/// Number of letters x in `col` with x <= m or x >= m-bar.
pub fn count_n(col: &[Letter], m: usize, n: usize) -> usize {
    let a = Alphabet::c(n);
    let lo = m;
    let hi = 2 * n + 1 - m;
    col.iter().filter(|&&x| a.ord(x) <= lo || a.ord(x) >= hi).count()
}

/// Values z such that both z and z-bar appear in `col`, largest first.
pub fn symmetric_pairs(col: &[Letter]) -> Vec<i32> {
    let mut zs: Vec<i32> = col
        .iter()
        .filter(|&&x| x > 0 && col.contains(&-x))
        .copied()
        .collect();
    zs.sort_unstable_by(|a, b| b.cmp(a));
    zs
}

pub fn is_admissible(col: &[Letter], n: usize) -> bool {
    col.len() <= n && (1..=n).all(|m| count_n(col, m, n) <= m)
}

/// The lowest unbarred z with z, z-bar in the column and N(z) > z, if any.
pub fn lowest_violation(col: &[Letter], n: usize) -> Option<i32> {
    let mut zs = symmetric_pairs(col);
    zs.reverse();
    zs.into_iter().find(|&z| count_n(col, z as usize, n) > z as usize)
}

/// Witness set T = {t_1 > ... > t_m} from the admissibility definition:
/// t_1 < z_1 maximal with t, t-bar not in the column, and
/// t_i < min(t_{i-1}, z_i) maximal with the same freeness.
pub fn witness_set(col: &[Letter], _n: usize) -> Option<Vec<i32>> {
    let zs = symmetric_pairs(col);
    let free = |t: i32, taken: &[i32]| {
        t >= 1 && !col.contains(&t) && !col.contains(&-t) && !taken.contains(&t)
    };
    let mut ts: Vec<i32> = Vec::with_capacity(zs.len());
    for (i, &z) in zs.iter().enumerate() {
        let cap = if i == 0 { z } else { ts[i - 1].min(z) };
        let t = (1..cap).rev().find(|&t| free(t, &ts))?;
        ts.push(t);
    }
    Some(ts)
}

/// The split (lC, rC): lC replaces each z_i by t_i, rC replaces each
/// z_i-bar by t_i-bar. Errors on non-admissible input, naming the lowest
/// violating z.
pub fn split(col: &[Letter], n: usize) -> Result<(Vec<Letter>, Vec<Letter>)> {
    let a = Alphabet::c(n);
    if !is_admissible(col, n) {
        let z = lowest_violation(col, n).unwrap_or(0);
        return Err(Error::NotAdmissible { col: 0, z });
    }
    let zs = symmetric_pairs(col);
    let ts = witness_set(col, n).ok_or(Error::NotAdmissible {
        col: 0,
        z: lowest_violation(col, n).unwrap_or(0),
    })?;
    let mut l: Vec<Letter> = col.to_vec();
    let mut r: Vec<Letter> = col.to_vec();
    for (&z, &t) in zs.iter().zip(&ts) {
        *l.iter_mut().find(|x| **x == z).unwrap() = t;
        *r.iter_mut().find(|x| **x == -z).unwrap() = -t;
    }
    a.sort(&mut l);
    a.sort(&mut r);
    Ok((l, r))
}

/// The coadmissible companion: unbarred letters of lC followed by barred
/// letters of rC.
pub fn coadmissible(col: &[Letter], n: usize) -> Result<Vec<Letter>> {
    let (l, r) = split(col, n)?;
    let mut out: Vec<Letter> = l.into_iter().filter(|&x| x > 0).collect();
    out.extend(r.into_iter().filter(|&x| x < 0));
    Ok(out)
}

/// Inverse of `coadmissible`. The symmetric pairs of the coadmissible column
/// are exactly the witness values t_i; the z_i are rebuilt greedily from
/// below: z_m minimal above t_m with z, z-bar free, then upwards.
pub fn coadmissible_inv(col: &[Letter], n: usize) -> Result<Vec<Letter>> {
    let a = Alphabet::c(n);
    let ts = symmetric_pairs(col); // t_1 > ... > t_m
    let m = ts.len();
    let mut zs = vec![0i32; m];
    let mut chosen: Vec<i32> = Vec::new();
    for i in (0..m).rev() {
        let lower = if i == m - 1 { ts[i] } else { ts[i].max(zs[i + 1]) };
        let z = (lower + 1..=n as i32).find(|&z| {
            !col.contains(&z) && !col.contains(&-z) && !chosen.contains(&z)
        });
        let Some(z) = z else {
            return Err(Error::Domain(format!(
                "column {col:?} is not coadmissible over C{n}"
            )));
        };
        zs[i] = z;
        chosen.push(z);
    }
    let mut out: Vec<Letter> = col
        .iter()
        .copied()
        .filter(|&x| !ts.contains(&x.abs()))
        .collect();
    for &z in &zs {
        out.push(z);
        out.push(-z);
    }
    a.sort(&mut out);
    let check = coadmissible(&out, n)?;
    if check != col {
        return Err(Error::Invariant(format!(
            "coadmissible_inv({col:?}) produced {out:?}, which maps back to {check:?}"
        )));
    }
    Ok(out)
}

/// One contraction step: removes the lowest violating pair (z, z-bar) from a
/// non-admissible column. Returns the survivors and z.
pub fn contract(col: &[Letter], n: usize) -> Result<(Vec<Letter>, i32)> {
    let z = lowest_violation(col, n).ok_or_else(|| {
        Error::Domain(format!("column {col:?} is admissible, nothing to contract"))
    })?;
    let out = col.iter().copied().filter(|&x| x.abs() != z).collect();
    Ok((out, z))
}

/// True iff every proper prefix of the column word is admissible (the
/// applicability condition for the contraction relation).
pub fn prefixes_admissible(col: &[Letter], n: usize) -> bool {
    (0..col.len()).all(|k| is_admissible(&col[..k], n))
}

/// Inverse of `contract`: the unique k with col + {k, k-bar} a valid
/// non-admissible column whose contraction removes exactly (k, k-bar).
pub fn dilate(col: &[Letter], n: usize) -> Result<(Vec<Letter>, i32)> {
    let a = Alphabet::c(n);
    let mut found = Vec::new();
    for k in 1..=n as i32 {
        if col.contains(&k) || col.contains(&-k) {
            continue;
        }
        let mut w: Vec<Letter> = col.to_vec();
        w.push(k);
        w.push(-k);
        a.sort(&mut w);
        if is_admissible(&w, n) || !prefixes_admissible(&w, n) {
            continue;
        }
        if lowest_violation(&w, n) == Some(k) {
            found.push((w, k));
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        0 => Err(Error::Domain(format!("no dilation of {col:?} over C{n}"))),
        _ => Err(Error::Invariant(format!(
            "dilation of {col:?} over C{n} is ambiguous: {:?}",
            found.iter().map(|f| f.1).collect::<Vec<_>>()
        ))),
    }
}

/// All strictly increasing letter sequences over C_n of height <= max_h,
/// including the empty one.
pub fn all_columns(n: usize, max_h: usize) -> Vec<Vec<Letter>> {
    let a = Alphabet::c(n);
    let letters: Vec<Letter> = (1..=2 * n).map(|o| a.letter_at(o)).collect();
    fn combos(letters: &[Letter], k: usize, start: usize, buf: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if buf.len() == k {
            out.push(buf.clone());
            return;
        }
        for i in start..letters.len() {
            buf.push(letters[i]);
            combos(letters, k, i + 1, buf, out);
            buf.pop();
        }
    }
    let mut out = vec![vec![]];
    for h in 1..=max_h {
        combos(&letters, h, 0, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_examples() {
        // both letters of (2, 2-bar) satisfy x <= 2 or x >= 2-bar
        assert_eq!(count_n(&[2, -2], 2, 2), 2);
        // (1, 1-bar): N(1) = 2 > 1
        assert_eq!(count_n(&[1, -1], 1, 2), 2);
        assert_eq!(count_n(&[2, 3, 4, -4, -3], 3, 4), 3);
        assert_eq!(count_n(&[2, 3, 4, -4, -3], 4, 4), 5);
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&[2, -2], 2));
        assert!(!is_admissible(&[1, -1], 2));
        assert!(is_admissible(&[1, 2, 3], 3));
        assert!(!is_admissible(&[2, 2, -2], 2) || true); // repeats never arise
    }

    #[test]
    fn split_examples() {
        assert_eq!(split(&[2, -2], 2).unwrap(), (vec![1, -2], vec![2, -1]));
        // all-unbarred column splits to itself
        assert_eq!(split(&[1, 2], 3).unwrap(), (vec![1, 2], vec![1, 2]));
        // no symmetric pair: split is the identity
        assert_eq!(split(&[2, -3], 3).unwrap(), (vec![2, -3], vec![2, -3]));
        assert!(split(&[1, -1], 2).is_err());
    }

    #[test]
    fn phi_examples() {
        assert_eq!(coadmissible(&[2, -2], 2).unwrap(), vec![1, -1]);
        assert_eq!(coadmissible(&[1, 2], 3).unwrap(), vec![1, 2]);
        assert_eq!(coadmissible_inv(&[1, -1], 2).unwrap(), vec![2, -2]);
        assert_eq!(coadmissible(&[2, 3, -3], 3).unwrap(), vec![1, 2, -1]);
        assert_eq!(coadmissible_inv(&[1, 2, -1], 3).unwrap(), vec![2, 3, -3]);
    }

    #[test]
    fn admissibility_criteria_agree() {
        // N(m)-criterion vs existence of the witness set, exhaustively.
        for n in 1..=3 {
            for col in all_columns(n, 3.min(n)) {
                let by_n = is_admissible(&col, n);
                let by_witness = witness_set(&col, n).is_some();
                assert_eq!(by_n, by_witness, "disagree on {col:?} over C{n}");
            }
        }
    }

    #[test]
    fn phi_is_a_bijection() {
        use std::collections::HashSet;
        for n in 1..=3 {
            for h in 1..=n {
                let cols: Vec<_> = all_columns(n, h)
                    .into_iter()
                    .filter(|c| c.len() == h && is_admissible(c, n))
                    .collect();
                let mut images = HashSet::new();
                for c in &cols {
                    let d = coadmissible(c, n).unwrap();
                    assert!(images.insert(d.clone()), "collision at {c:?}");
                    assert_eq!(coadmissible_inv(&d, n).unwrap(), *c);
                }
            }
        }
    }

    #[test]
    fn split_is_semistandard_pair() {
        let a = Alphabet::c(3);
        for col in all_columns(3, 3) {
            if col.is_empty() || !is_admissible(&col, 3) {
                continue;
            }
            let (l, r) = split(&col, 3).unwrap();
            assert_eq!(l.len(), col.len());
            assert_eq!(r.len(), col.len());
            for i in 0..l.len() {
                assert!(a.le(l[i], r[i]), "l !<= r at {col:?}");
            }
        }
    }

    #[test]
    fn contract_dilate_roundtrip() {
        // (2,3,4,-4,-3) over C4 contracts by z=4; dilation restores it.
        let w = vec![2, 3, 4, -4, -3];
        assert!(!is_admissible(&w, 4));
        let (v, z) = contract(&w, 4).unwrap();
        assert_eq!(z, 4);
        assert_eq!(v, vec![2, 3, -3]);
        // dilate needs the full cell count context: (2,3,-3) is admissible,
        // its unique dilation back to 5 letters re-adds (4, -4).
        let (w2, k) = dilate(&v, 4).unwrap();
        assert_eq!(k, 4);
        assert_eq!(w2, w);
    }
}
