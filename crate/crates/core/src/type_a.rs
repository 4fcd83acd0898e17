//! Type A machinery: evacuation, reversal on skew shapes, partial
//! Schutzenberger involutions on letter windows, Bender-Knuth involutions and
//! their compositions.

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::sjdt;
use crate::tableau::{Column, SkewTableau};

fn expect_a(t: &SkewTableau) -> Result<usize> {
    match t.alphabet {
        Alphabet::A { m } => Ok(m),
        _ => Err(Error::Domain("a type A tableau is required".into())),
    }
}

/// Schutzenberger evacuation of a straight tableau: rotate, complement,
/// rectify.
pub fn evacuation(t: &SkewTableau) -> Result<SkewTableau> {
    if !t.is_straight() {
        return Err(Error::Domain("evacuation needs a straight shape".into()));
    }
    sjdt::rectify(&t.rotate_complement())
}

/// Merges cell-disjoint pieces back into one tableau.
pub fn reassemble(alphabet: Alphabet, pieces: &[&SkewTableau]) -> Result<SkewTableau> {
    use std::collections::BTreeMap;
    let mut cells: BTreeMap<(usize, usize), Letter> = BTreeMap::new();
    for piece in pieces {
        for (c, col) in piece.cols().iter().enumerate() {
            for (i, cell) in col.cells.iter().enumerate() {
                let x = cell.ok_or_else(|| Error::Domain("cannot reassemble punctures".into()))?;
                if cells.insert((col.top + i, c), x).is_some() {
                    return Err(Error::Invariant(format!(
                        "reassembly overlap at ({},{c})",
                        col.top + i
                    )));
                }
            }
        }
    }
    let width = cells.keys().map(|&(_, c)| c + 1).max().unwrap_or(0);
    let mut cols = Vec::with_capacity(width);
    for c in 0..width {
        let mut rows: Vec<(usize, Letter)> =
            cells.iter().filter(|&(&(_, cc), _)| cc == c).map(|(&(r, _), &x)| (r, x)).collect();
        rows.sort_unstable();
        if rows.is_empty() {
            return Err(Error::Invariant(format!("reassembly left column {c} empty")));
        }
        let top = rows[0].0;
        if rows.last().unwrap().0 - top + 1 != rows.len() {
            return Err(Error::Invariant(format!("reassembled column {c} has gaps")));
        }
        cols.push(Column { top, cells: rows.into_iter().map(|(_, x)| Some(x)).collect() });
    }
    SkewTableau::from_cols(alphabet, cols)
}

/// Evacuation restricted to the entries 1..=cap; larger entries are frozen.
pub fn evacuation_capped(t: &SkewTableau, cap: usize) -> Result<SkewTableau> {
    let m = expect_a(t)?;
    if cap == 0 || cap > m {
        return Err(Error::Domain(format!("cap {cap} outside 1..={m}")));
    }
    if t.is_empty() {
        return Ok(t.clone());
    }
    if cap == m {
        return evacuation(t);
    }
    let low = t.restrict_window(1, cap)?;
    let high = t.restrict_window(cap + 1, m)?;
    if low.is_empty() {
        return Ok(t.clone());
    }
    // complement within the window 1..=cap, rotate, rectify
    let rot = {
        let r = low.rotate_complement();
        let delta = cap as i32 - m as i32; // complement used m+1-x; correct to cap+1-x
        let cols = r
            .cols()
            .iter()
            .map(|col| Column {
                top: col.top,
                cells: col.cells.iter().map(|cell| cell.map(|x| x + delta)).collect(),
            })
            .collect();
        SkewTableau::from_cols(t.alphabet, cols)?
    };
    let ev = sjdt::rectify(&rot)?;
    if high.is_empty() {
        return Ok(ev);
    }
    reassemble(t.alphabet, &[&ev, &high])
}

/// Reversal of a skew tableau: anti-rectification of the evacuation of the
/// rectification, by journalled replay.
pub fn reversal(t: &SkewTableau) -> Result<SkewTableau> {
    if t.is_empty() {
        return Ok(t.clone());
    }
    let (rect, journal) = sjdt::rectify_with_journal(t)?;
    let ev = sjdt::rectify(&rect.rotate_complement())?;
    sjdt::replay_reversed(&ev, &journal)
}

/// Reversal on the letter window lo..=hi (1-based letters); entries outside
/// the window are frozen in place.
pub fn reversal_window(t: &SkewTableau, lo: usize, hi: usize) -> Result<SkewTableau> {
    let m = expect_a(t)?;
    if lo < 1 || hi > m || lo > hi {
        return Err(Error::BadInterval(lo, hi));
    }
    let below = if lo > 1 { t.restrict_window(1, lo - 1)? } else { SkewTableau::empty(t.alphabet) };
    let mid = t.restrict_window(lo, hi)?;
    let above = t.restrict_window(hi + 1, m)?;
    if mid.is_empty() {
        return Ok(t.clone());
    }
    // slide the window down to 1..=w, reverse there, shift back
    let w = hi - lo + 1;
    let shift = |tt: &SkewTableau, d: i32, mm: usize| -> Result<SkewTableau> {
        let cols = tt
            .cols()
            .iter()
            .map(|col| Column {
                top: col.top,
                cells: col.cells.iter().map(|cell| cell.map(|x| x + d)).collect(),
            })
            .collect();
        SkewTableau::from_cols(Alphabet::a(mm), cols)
    };
    let mid_shifted = shift(&mid, -((lo as i32) - 1), w)?;
    let rev = reversal(&mid_shifted)?;
    let mid_back = shift(&rev, lo as i32 - 1, m)?;
    let mut pieces: Vec<&SkewTableau> = Vec::new();
    for p in [&below, &mid_back, &above] {
        if !p.is_empty() {
            pieces.push(p);
        }
    }
    reassemble(t.alphabet, &pieces)
}

/// Partial Schutzenberger involution for a union of pairwise disconnected
/// Dynkin intervals [p,q] (colors); the letter window of [p,q] is p..=q+1.
pub fn partial_xi(t: &SkewTableau, intervals: &[(usize, usize)]) -> Result<SkewTableau> {
    let m = expect_a(t)?;
    let mut sorted: Vec<(usize, usize)> = intervals.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0].1 + 1 >= w[1].0 {
            return Err(Error::Domain(format!(
                "intervals [{},{}] and [{},{}] are not disconnected",
                w[0].0, w[0].1, w[1].0, w[1].1
            )));
        }
    }
    let mut cur = t.clone();
    for &(p, q) in &sorted {
        if p < 1 || q > m - 1 || p > q {
            return Err(Error::BadInterval(p, q));
        }
        cur = reversal_window(&cur, p, q + 1)?;
    }
    Ok(cur)
}

/// The Bender-Knuth involution t_i: within each row, k free i's followed by
/// l free (i+1)'s become l free i's followed by k free (i+1)'s.
pub fn bender_knuth(t: &SkewTableau, i: usize) -> Result<SkewTableau> {
    let m = expect_a(t)?;
    if i < 1 || i >= m {
        return Err(Error::BadColor(i));
    }
    let (a, b) = (i as Letter, (i + 1) as Letter);
    let mut out = t.clone();
    let outer = t.outer_shape();
    for r in 0..outer.rows() {
        let mut free_cells = Vec::new();
        let mut l = 0usize;
        for c in 0..outer.row(r) {
            match t.entry(r, c) {
                Some(x) if x == a => {
                    // fixed when i+1 sits directly below
                    if t.entry(r + 1, c) != Some(b) {
                        free_cells.push(c);
                    }
                }
                Some(x) if x == b => {
                    // fixed when i sits directly above
                    if r == 0 || t.entry(r - 1, c) != Some(a) {
                        free_cells.push(c);
                        l += 1;
                    }
                }
                _ => {}
            }
        }
        for (idx, &c) in free_cells.iter().enumerate() {
            out.set_entry(r, c, if idx < l { a } else { b });
        }
    }
    out.check_semistandard()?;
    Ok(out)
}

/// q_{[1,i]} = t_1 (t_2 t_1) ... (t_i ... t_1), the Bender-Knuth form of
/// evacuation capped at i+1.
pub fn q_initial(t: &SkewTableau, i: usize) -> Result<SkewTableau> {
    let mut cur = t.clone();
    for j in 1..=i {
        for k in (1..=j).rev() {
            cur = bender_knuth(&cur, k)?;
        }
    }
    Ok(cur)
}

/// Promotion p_i = t_i ... t_2 t_1.
pub fn promotion(t: &SkewTableau, i: usize) -> Result<SkewTableau> {
    let mut cur = t.clone();
    for k in (1..=i).rev() {
        cur = bender_knuth(&cur, k)?;
    }
    Ok(cur)
}

/// q_{[j,k-1]} = q_{[1,k-1]} q_{[1,k-j]} q_{[1,k-1]} for j <= k-1.
pub fn q_interval(t: &SkewTableau, j: usize, k1: usize) -> Result<SkewTableau> {
    if j > k1 {
        return Err(Error::BadInterval(j, k1));
    }
    let k = k1 + 1;
    let s1 = q_initial(t, k - 1)?;
    let s2 = q_initial(&s1, k - j)?;
    q_initial(&s2, k - 1)
}

/// The dual Bender-Knuth involution of dual index `idx` (conjugate of
/// t_{m-idx} by full evacuation, written in Bender-Knuth generators).
pub fn dual_bender_knuth(t: &SkewTableau, idx: usize) -> Result<SkewTableau> {
    let m = expect_a(t)?;
    if idx < 1 || idx >= m {
        return Err(Error::BadColor(idx));
    }
    let i = m - idx;
    let e1 = q_initial(t, m - 1)?;
    let ti = bender_knuth(&e1, i)?;
    q_initial(&ti, m - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::Shape;

    fn a(m: usize) -> Alphabet {
        Alphabet::a(m)
    }

    #[test]
    fn evac_single_cell() {
        let t = SkewTableau::parse(a(1), "1").unwrap();
        assert_eq!(evacuation(&t).unwrap(), t);
    }

    #[test]
    fn evac_is_involution_small() {
        for lam in Shape::all_up_to(4, 3) {
            let g = crate::crystal::generate_full(a(3), &lam).unwrap();
            for v in &g.vertices {
                let e = evacuation(v).unwrap();
                assert_eq!(evacuation(&e).unwrap(), *v, "evac^2 != id at {}", v.render());
                let mut w = v.weight();
                w.reverse();
                assert_eq!(e.weight(), w);
            }
        }
    }

    #[test]
    fn rev_squared_and_straight_case() {
        let t = SkewTableau::parse(a(3), ".,1,2/1,3/2").unwrap();
        let r = reversal(&t).unwrap();
        assert_eq!(t.skew_shape(), r.skew_shape());
        assert_eq!(reversal(&r).unwrap(), t);
        // reversal of a straight tableau is evacuation
        let s = SkewTableau::parse(a(3), "1,1,2/2,3").unwrap();
        assert_eq!(reversal(&s).unwrap(), evacuation(&s).unwrap());
    }

    #[test]
    fn bk_basic() {
        let t = SkewTableau::parse(a(2), "1,1,2").unwrap();
        assert_eq!(bender_knuth(&t, 1).unwrap().render(), "1,2,2");
        // the column pair (1/2) is fixed
        let t = SkewTableau::parse(a(2), "1,1/2").unwrap();
        assert_eq!(bender_knuth(&t, 1).unwrap().render(), "1,2/2");
    }

    #[test]
    fn bk_squared_and_weight() {
        for lam in Shape::all_up_to(4, 3) {
            let g = crate::crystal::generate_full(a(3), &lam).unwrap();
            for v in &g.vertices {
                for i in 1..=2 {
                    let b = bender_knuth(v, i).unwrap();
                    assert_eq!(bender_knuth(&b, i).unwrap(), *v);
                    let mut w = v.weight();
                    w.swap(i - 1, i);
                    assert_eq!(b.weight(), w);
                }
            }
        }
    }

    #[test]
    fn q_initial_is_capped_evacuation() {
        for lam in Shape::all_up_to(4, 4) {
            let g = crate::crystal::generate_full(a(4), &lam).unwrap();
            for v in &g.vertices {
                for i in 1..=3 {
                    assert_eq!(
                        q_initial(v, i).unwrap(),
                        evacuation_capped(v, i + 1).unwrap(),
                        "q_[1,{i}] != evac_{} at {}",
                        i + 1,
                        v.render()
                    );
                }
            }
        }
    }

    #[test]
    fn partial_xi_full_diagram_is_evacuation() {
        let t = SkewTableau::parse(a(3), "1,1,2/2,3").unwrap();
        assert_eq!(partial_xi(&t, &[(1, 2)]).unwrap(), evacuation(&t).unwrap());
    }

    #[test]
    fn disconnected_commute() {
        for lam in Shape::all_up_to(4, 4) {
            let g = crate::crystal::generate_full(a(4), &lam).unwrap();
            for v in &g.vertices {
                let x = partial_xi(&partial_xi(v, &[(1, 1)]).unwrap(), &[(3, 3)]).unwrap();
                let y = partial_xi(&partial_xi(v, &[(3, 3)]).unwrap(), &[(1, 1)]).unwrap();
                assert_eq!(x, y);
                assert_eq!(partial_xi(v, &[(1, 1), (3, 3)]).unwrap(), x);
            }
        }
    }
}
