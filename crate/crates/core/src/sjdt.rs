//! Sheats-Lecouvey symplectic jeu de taquin.
//!
//! Elementary slides act on a punctured skew tableau. With the puncture in
//! column C1 at row r and C2 the column to its right, let alpha be the entry
//! below the puncture in rC1 and beta the entry right of the puncture in lC2:
//!
//! - A. alpha <= beta, or beta missing: vertical slide.
//! - B.1 beta barred: beta moves from C2 into the coadmissible picture of C1.
//! - B.2 beta unbarred: beta moves from the coadmissible picture of C2 into
//!   C1; the start column may become non-admissible and is contracted (a
//!   symmetric pair is erased, the column loses its top and bottom cell)
//!   once the complete slide has finished.
//!
//! Every complete slide is journalled so that the reverse pass is an exact
//! replay; a journalled contraction is replayed as a dilation whose inserted
//! pair is rederived from the state at replay time.
//!
//! In the type A alphabet splits and the coadmissible map are trivial and the
//! contraction case never arises, so the same engine performs ordinary jeu de
//! taquin.

use crate::alphabet::{is_barred, Alphabet, Letter};
use crate::column;
use crate::error::{Error, Result};
use crate::tableau::{Column, SkewTableau};

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Contraction {
    pub col: usize,
    pub z: i32,
    pub top_cell: (usize, usize),
    pub bottom_cell: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum SlideEvent {
    /// One contraction applied to a column before any slide (reduced
    /// alphabet preprocessing).
    PreContraction(Contraction),
    /// A complete slide from an inner corner to an exit cell, with the
    /// contraction it triggered in its start column, if any.
    Slide {
        start: (usize, usize),
        exit: (usize, usize),
        contraction: Option<Contraction>,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct Journal {
    pub events: Vec<SlideEvent>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Vertical,
    HorizontalBarred,
    HorizontalUnbarred,
    Complete,
}

fn split_letters(a: &Alphabet, letters: &[Letter]) -> Result<(Vec<Letter>, Vec<Letter>)> {
    match *a {
        Alphabet::C { n } => column::split(letters, n),
        Alphabet::A { .. } => Ok((letters.to_vec(), letters.to_vec())),
    }
}

fn phi(a: &Alphabet, letters: &[Letter]) -> Result<Vec<Letter>> {
    match *a {
        Alphabet::C { n } => column::coadmissible(letters, n),
        Alphabet::A { .. } => Ok(letters.to_vec()),
    }
}

fn phi_inv(a: &Alphabet, letters: &[Letter]) -> Result<Vec<Letter>> {
    match *a {
        Alphabet::C { n } => column::coadmissible_inv(letters, n),
        Alphabet::A { .. } => Ok(letters.to_vec()),
    }
}

fn col_admissible(a: &Alphabet, letters: &[Letter]) -> bool {
    match *a {
        Alphabet::C { n } => column::is_admissible(letters, n),
        Alphabet::A { .. } => true,
    }
}

/// Split of a column's letters, extended to the transiently non-admissible
/// columns met during replay right after a dilation: the inserted symmetric
/// pair is transparent, so the contracted column is split and the pair put
/// back in place.
fn split_letters_lax(a: &Alphabet, letters: &[Letter]) -> Result<(Vec<Letter>, Vec<Letter>)> {
    if col_admissible(a, letters) {
        return split_letters(a, letters);
    }
    let Alphabet::C { n } = *a else { unreachable!("type A columns are always admissible") };
    let (v, z) = column::contract(letters, n)?;
    if !column::is_admissible(&v, n) {
        return Err(Error::Invariant(format!(
            "column {letters:?} is more than one contraction away from admissible"
        )));
    }
    let (mut l, mut r) = column::split(&v, n)?;
    for side in [&mut l, &mut r] {
        side.push(z);
        side.push(-z);
        a.sort(side);
    }
    Ok((l, r))
}

/// Entry of the left split column at absolute row `r`, treating the puncture
/// as transparent.
fn l_split_at(a: &Alphabet, col: &Column, r: usize) -> Result<Option<Letter>> {
    let Some(real) = col.at(r) else { return Ok(None) };
    if a.is_c() && is_barred(real) {
        // lC agrees with the real column on barred cells
        return Ok(Some(real));
    }
    let (l, _) = split_letters_lax(a, &col.letters())?;
    let idx = col.cells[..(r - col.top)].iter().filter(|c| c.is_some()).count();
    Ok(Some(l[idx]))
}

/// Entry of the right split column at absolute row `r`.
fn r_split_at(a: &Alphabet, col: &Column, r: usize) -> Result<Option<Letter>> {
    let Some(real) = col.at(r) else { return Ok(None) };
    if !a.is_c() || !is_barred(real) {
        // rC agrees with the real column on unbarred cells
        return Ok(Some(real));
    }
    let (_, rr) = split_letters_lax(a, &col.letters())?;
    let idx = col.cells[..(r - col.top)].iter().filter(|c| c.is_some()).count();
    Ok(Some(rr[idx]))
}

/// One elementary forward slide. The tableau must carry a puncture.
pub fn elementary_slide(t: &SkewTableau) -> Result<(SkewTableau, Step)> {
    let (r, c) = t
        .puncture()
        .ok_or_else(|| Error::Domain("elementary slide needs a punctured tableau".into()))?;
    let a = t.alphabet;
    let mut out = t.clone();
    let cols = out.cols_mut();

    let alpha = r_split_at(&a, &cols[c], r + 1)?;
    let beta = match cols.get(c + 1) {
        Some(col2) => l_split_at(&a, col2, r)?,
        None => None,
    };

    match (alpha, beta) {
        (None, None) => Ok((out, Step::Complete)),
        (Some(al), Some(be)) if a.le(al, be) => {
            vertical(&mut cols[c], r);
            Ok((out, Step::Vertical))
        }
        (Some(_), None) => {
            vertical(&mut cols[c], r);
            Ok((out, Step::Vertical))
        }
        (_, Some(be)) => {
            if a.is_c() && is_barred(be) {
                // B.1: beta leaves the real C2 and joins Phi(C1).
                let l1 = cols[c].letters();
                let new1 = phi_inv(&a, &{
                    let mut d = phi(&a, &l1)?;
                    d.push(be);
                    a.sort(&mut d);
                    d
                })?;
                cols[c] = cols[c].refill(&a, new1, None)?;
                debug_assert_eq!(cols[c + 1].at(r), Some(be));
                let idx = r - cols[c + 1].top;
                cols[c + 1].cells[idx] = None;
                Ok((out, Step::HorizontalBarred))
            } else {
                // B.2: beta leaves Phi(C2) and joins the real C1.
                let mut new1 = cols[c].letters();
                new1.push(be);
                a.sort(&mut new1);
                cols[c] = cols[c].refill(&a, new1, None)?;
                let l2 = cols[c + 1].letters();
                let mut d = phi(&a, &l2)?;
                let pos = d
                    .iter()
                    .position(|&x| x == be)
                    .ok_or_else(|| Error::Invariant(format!("{be} not in Phi(C2) {d:?}")))?;
                d.remove(pos);
                let new2 = phi_inv(&a, &d)?;
                cols[c + 1] = cols[c + 1].refill(&a, new2, Some(r))?;
                Ok((out, Step::HorizontalUnbarred))
            }
        }
    }
}

fn vertical(col: &mut Column, r: usize) {
    let i = r - col.top;
    col.cells[i] = col.cells[i + 1];
    col.cells[i + 1] = None;
}

/// Inner corners of the inner shape: cells (r,c) of the inner shape with no
/// inner cell below or to the right, ordered lowest row first.
pub fn inner_corners(t: &SkewTableau) -> Vec<(usize, usize)> {
    let inner = t.inner_shape();
    let mut corners = Vec::new();
    for r in 0..inner.rows() {
        let len = inner.row(r);
        if len > 0 && inner.row(r + 1) < len {
            corners.push((r, len - 1));
        }
    }
    corners.sort_by_key(|&(r, c)| (std::cmp::Reverse(r), c));
    corners
}

/// Opens a puncture at the inner corner (r,c).
fn punch(t: &mut SkewTableau, r: usize, c: usize) -> Result<()> {
    let cols = t.cols_mut();
    let col = cols
        .get_mut(c)
        .ok_or_else(|| Error::Domain(format!("no column {c} to punch")))?;
    if col.top != r + 1 {
        return Err(Error::Domain(format!(
            "cell ({r},{c}) is not an inner corner of the tableau"
        )));
    }
    col.cells.insert(0, None);
    col.top = r;
    Ok(())
}

/// Closes the puncture, which must rest at the bottom of its column.
fn remove_exit(t: &mut SkewTableau) -> Result<(usize, usize)> {
    let (r, c) = t.puncture().ok_or_else(|| Error::Invariant("no puncture to remove".into()))?;
    let col = &mut t.cols_mut()[c];
    if col.puncture_row() != Some(col.bottom() - 1) {
        return Err(Error::Invariant("slide ended away from the column bottom".into()));
    }
    col.cells.pop();
    Ok((r, c))
}

/// Contracts column `c` (erase the lowest violating symmetric pair, empty the
/// top and bottom cells, repack). Returns the journal record.
fn contract_column(t: &mut SkewTableau, c: usize) -> Result<Contraction> {
    let Alphabet::C { n } = t.alphabet else {
        return Err(Error::Invariant("contraction in a type A tableau".into()));
    };
    let col = &mut t.cols_mut()[c];
    let letters = col.letters();
    debug_assert!(column::prefixes_admissible(&letters, n));
    let (survivors, z) = column::contract(&letters, n)?;
    let top_cell = (col.top, c);
    let bottom_cell = (col.bottom() - 1, c);
    let cells: Vec<Option<Letter>> = survivors.into_iter().map(Some).collect();
    debug_assert_eq!(cells.len() + 2, col.cells.len());
    col.top += 1;
    col.cells = cells;
    Ok(Contraction { col: c, z, top_cell, bottom_cell })
}

/// Dilates column `c` back onto the cell range [top_cell.0 .. bottom_cell.0],
/// inserting the unique symmetric pair whose contraction undoes it.
fn dilate_column(t: &mut SkewTableau, ev: &Contraction) -> Result<()> {
    let Alphabet::C { n } = t.alphabet else {
        return Err(Error::Invariant("dilation in a type A tableau".into()));
    };
    let c = ev.col;
    let col = &mut t.cols_mut()[c];
    if col.top != ev.top_cell.0 + 1 || col.bottom() != ev.bottom_cell.0 {
        return Err(Error::Invariant(format!(
            "dilation cells {:?}/{:?} do not bound column {c} (top {}, bottom {})",
            ev.top_cell,
            ev.bottom_cell,
            col.top,
            col.bottom()
        )));
    }
    let letters = col.letters();
    let (w, _k) = column::dilate(&letters, n)?;
    col.top -= 1;
    col.cells = w.into_iter().map(Some).collect();
    Ok(())
}

/// A complete slide from the inner corner (r,c): elementary slides until the
/// puncture exits, then the start column is contracted if the slide left it
/// non-admissible. Returns the journal event.
pub fn complete_slide(t: &SkewTableau, corner: (usize, usize)) -> Result<(SkewTableau, SlideEvent)> {
    if t.puncture().is_some() {
        return Err(Error::Domain("tableau already punctured".into()));
    }
    let mut cur = t.clone();
    punch(&mut cur, corner.0, corner.1)?;
    loop {
        let (next, step) = elementary_slide(&cur)?;
        cur = next;
        if step == Step::Complete {
            break;
        }
    }
    let exit = remove_exit(&mut cur)?;
    let mut contraction = None;
    if let Alphabet::C { n } = cur.alphabet {
        let start_col = corner.1;
        let letters = cur.cols()[start_col].letters();
        if !column::is_admissible(&letters, n) {
            contraction = Some(contract_column(&mut cur, start_col)?);
        }
        for (c, col) in cur.cols().iter().enumerate() {
            if !column::is_admissible(&col.letters(), n) {
                return Err(Error::Invariant(format!(
                    "column {c} non-admissible after a slide started in column {start_col}"
                )));
            }
        }
    }
    Ok((cur, SlideEvent::Slide { start: corner, exit, contraction }))
}

/// Rectifies a skew tableau, sliding always from the inner corner in the
/// lowest row. Returns the straight tableau and the journal.
pub fn rectify_with_journal(t: &SkewTableau) -> Result<(SkewTableau, Journal)> {
    let mut cur = t.clone();
    let mut journal = Journal::default();
    loop {
        let corners = inner_corners(&cur);
        let Some(&corner) = corners.first() else { break };
        let (next, ev) = complete_slide(&cur, corner)?;
        cur = next;
        journal.events.push(ev);
    }
    Ok((cur, journal))
}

/// Rectification, discarding the journal.
pub fn rectify(t: &SkewTableau) -> Result<SkewTableau> {
    Ok(rectify_with_journal(t)?.0)
}

/// One elementary reverse slide. The tableau must carry a puncture (the
/// travelling hole).
pub fn elementary_reverse_slide(t: &SkewTableau) -> Result<(SkewTableau, Step)> {
    let (r, c) = t
        .puncture()
        .ok_or_else(|| Error::Domain("reverse slide needs a punctured tableau".into()))?;
    let a = t.alphabet;
    let mut out = t.clone();
    let cols = out.cols_mut();

    let alpha = if r == 0 { None } else { l_split_at(&a, &cols[c], r - 1)? };
    let beta = if c == 0 {
        None
    } else {
        r_split_at(&a, &cols[c - 1], r)?
    };

    match (alpha, beta) {
        (None, None) => Ok((out, Step::Complete)),
        (Some(al), Some(be)) if a.le(be, al) => {
            reverse_vertical(&mut cols[c], r);
            Ok((out, Step::Vertical))
        }
        (Some(_), None) => {
            reverse_vertical(&mut cols[c], r);
            Ok((out, Step::Vertical))
        }
        (_, Some(be)) => {
            if a.is_c() && is_barred(be) {
                // Inverse of B.1: beta leaves Phi(C1) and rejoins the real C2.
                let mut new2 = cols[c].letters();
                new2.push(be);
                a.sort(&mut new2);
                cols[c] = cols[c].refill(&a, new2, None)?;
                let l1 = cols[c - 1].letters();
                let mut d = phi(&a, &l1)?;
                let pos = d
                    .iter()
                    .position(|&x| x == be)
                    .ok_or_else(|| Error::Invariant(format!("{be} not in Phi(C1) {d:?}")))?;
                d.remove(pos);
                let new1 = phi_inv(&a, &d)?;
                cols[c - 1] = cols[c - 1].refill(&a, new1, Some(r))?;
                Ok((out, Step::HorizontalBarred))
            } else {
                // Inverse of B.2: beta leaves the real C1 and joins Phi(C2).
                let l2 = cols[c].letters();
                let new2 = phi_inv(&a, &{
                    let mut d = phi(&a, &l2)?;
                    d.push(be);
                    a.sort(&mut d);
                    d
                })?;
                cols[c] = cols[c].refill(&a, new2, None)?;
                debug_assert_eq!(cols[c - 1].at(r), Some(be));
                let idx = r - cols[c - 1].top;
                cols[c - 1].cells[idx] = None;
                Ok((out, Step::HorizontalUnbarred))
            }
        }
    }
}

fn reverse_vertical(col: &mut Column, r: usize) {
    let i = r - col.top;
    col.cells[i] = col.cells[i - 1];
    col.cells[i - 1] = None;
}

/// Opens a hole at the outer cell (r,c), which must extend column c downward.
fn punch_outer(t: &mut SkewTableau, r: usize, c: usize) -> Result<()> {
    let cols = t.cols_mut();
    if c > cols.len() {
        return Err(Error::Domain(format!("cell ({r},{c}) is not adjacent to the shape")));
    }
    if c == cols.len() {
        cols.push(Column { top: r, cells: vec![None] });
        return Ok(());
    }
    let col = &mut cols[c];
    if col.cells.is_empty() {
        if col.top != r {
            return Err(Error::Domain(format!(
                "cell ({r},{c}) does not extend the empty column {c} (top {})",
                col.top
            )));
        }
        col.cells.push(None);
        return Ok(());
    }
    if col.bottom() != r {
        return Err(Error::Domain(format!(
            "cell ({r},{c}) does not extend column {c} (bottom {})",
            col.bottom()
        )));
    }
    col.cells.push(None);
    Ok(())
}

/// Closes a resting hole, which must sit at the top of its column.
fn remove_rest(t: &mut SkewTableau) -> Result<(usize, usize)> {
    let (r, c) = t.puncture().ok_or_else(|| Error::Invariant("no hole to remove".into()))?;
    let col = &mut t.cols_mut()[c];
    if col.puncture_row() != Some(col.top) {
        return Err(Error::Invariant("reverse slide ended away from the column top".into()));
    }
    col.cells.remove(0);
    col.top += 1;
    Ok((r, c))
}

/// A complete reverse slide from the outer cell `exit` inward. Returns the
/// resting cell, which joins the inner shape.
pub fn complete_reverse_slide(
    t: &SkewTableau,
    exit: (usize, usize),
) -> Result<(SkewTableau, (usize, usize))> {
    if t.puncture().is_some() {
        return Err(Error::Domain("tableau already punctured".into()));
    }
    let mut cur = t.clone();
    punch_outer(&mut cur, exit.0, exit.1)?;
    loop {
        let (next, step) = elementary_reverse_slide(&cur)?;
        cur = next;
        if step == Step::Complete {
            break;
        }
    }
    let rest = remove_rest(&mut cur)?;
    Ok((cur, rest))
}

/// Replays a forward journal backwards: reverse slides consume the journal's
/// exit cells, journalled contractions become dilations, pre-contractions
/// are undone last.
pub fn replay_reversed(t: &SkewTableau, journal: &Journal) -> Result<SkewTableau> {
    let mut cur = t.clone();
    for ev in journal.events.iter().rev() {
        match ev {
            SlideEvent::PreContraction(c) => {
                dilate_column(&mut cur, c)?;
            }
            SlideEvent::Slide { exit, contraction, .. } => {
                if let Some(c) = contraction {
                    dilate_column(&mut cur, c)?;
                }
                let (next, _rest) = complete_reverse_slide(&cur, *exit)?;
                cur = next;
            }
        }
    }
    Ok(cur)
}

/// Contracts every non-admissible column of a tableau over a reduced
/// alphabet, left to right, recording pre-contraction events.
pub fn pre_contract(t: &SkewTableau) -> Result<(SkewTableau, Journal)> {
    let Alphabet::C { n } = t.alphabet else {
        return Ok((t.clone(), Journal::default()));
    };
    let mut cur = t.clone();
    let mut journal = Journal::default();
    for c in 0..cur.num_cols() {
        while !column::is_admissible(&cur.cols()[c].letters(), n) {
            let ev = contract_column(&mut cur, c)?;
            journal.events.push(SlideEvent::PreContraction(ev));
        }
    }
    Ok((cur, journal))
}

/// The reduced slide on the interval [+-j, n]: shift entries down by j-1,
/// contract非 non-admissible columns, run one complete slide from the
/// puncture, shift back. The exit stays punctured so callers can display it.
pub fn reduced_complete_slide(t: &SkewTableau, j: usize) -> Result<SkewTableau> {
    let Alphabet::C { n } = t.alphabet else {
        return Err(Error::Domain("reduced slides act on type C tableaux".into()));
    };
    if j < 1 || j > n {
        return Err(Error::BadInterval(j, n));
    }
    let (pr, pc) = t
        .puncture()
        .ok_or_else(|| Error::Domain("mark the slide corner with a puncture".into()))?;
    for col in t.cols() {
        for cell in col.cells.iter().flatten() {
            if (cell.unsigned_abs() as usize) < j {
                return Err(Error::Domain(format!("entry {cell} outside [+-{j},{n}]")));
            }
        }
    }
    // Temporarily close the puncture to shift and pre-contract.
    let mut closed = t.clone();
    {
        let col = &mut closed.cols_mut()[pc];
        if col.puncture_row() != Some(col.top) {
            return Err(Error::Domain("the puncture must mark an inner corner".into()));
        }
        col.cells.remove(0);
        col.top += 1;
    }
    let m = n - j + 1;
    let shifted = closed.shift_letters(-((j as i32) - 1), m);
    let (pre, _j1) = pre_contract(&shifted)?;
    let mut cur = pre;
    punch(&mut cur, pr, pc)?;
    loop {
        let (next, step) = elementary_slide(&cur)?;
        cur = next;
        if step == Step::Complete {
            break;
        }
    }
    // Contract the start column if needed, keeping the exit puncture visible.
    if !column::is_admissible(&cur.cols()[pc].letters(), m) {
        let punct_in_start = cur.cols()[pc].puncture_row().is_some();
        if punct_in_start {
            return Err(Error::Invariant("contraction in the exit column".into()));
        }
        contract_column(&mut cur, pc)?;
    }
    let mut out = cur.shift_letters(j as i32 - 1, n);
    // Cells emptied by contractions leave the shape of this pedagogical view
    // when they cannot sit inside a partition-shaped inner region.
    let cols = out.cols_mut();
    for c in 1..cols.len() {
        if cols[c].cells.is_empty() && cols[c].top > cols[c - 1].top {
            cols[c].top = cols[c - 1].top;
        }
    }
    while cols.last().is_some_and(|col| col.cells.is_empty()) {
        cols.pop();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::SkewTableau;

    fn c(n: usize) -> Alphabet {
        Alphabet::c(n)
    }

    #[test]
    fn complete_slide_ordinary() {
        // (*,2)/(3,-2)/(-3) slides to (1,-1)/(3,*)/(-3), i.e. (1,-1)/(3)/(-3).
        let t = SkewTableau::parse(c(3), ".,2/3,-2/-3").unwrap();
        let (out, ev) = complete_slide(&t, (0, 0)).unwrap();
        assert_eq!(out.render(), "1,-1/3/-3");
        match ev {
            SlideEvent::Slide { start, exit, contraction } => {
                assert_eq!(start, (0, 0));
                assert_eq!(exit, (1, 1));
                assert!(contraction.is_none());
            }
            _ => panic!(),
        }
    }

    #[test]
    fn complete_slide_second_illustration() {
        // (*,3)/(3,-3)/(-3): B.2 keeps the start column admissible over C3.
        let t = SkewTableau::parse(c(3), ".,3/3,-3/-3").unwrap();
        let (mid, step) = {
            let mut cur = t.clone();
            punch(&mut cur, 0, 0).unwrap();
            elementary_slide(&cur).unwrap()
        };
        assert_eq!(step, Step::HorizontalUnbarred);
        assert_eq!(mid.render(), "2,*/3,-2/-3");
        let (out, _) = complete_slide(&t, (0, 0)).unwrap();
        assert_eq!(out.render(), "2,-2/3/-3");
    }

    #[test]
    fn vertical_only_slide() {
        let t = SkewTableau::parse(c(2), "./1/2").unwrap();
        let (out, _) = complete_slide(&t, (0, 0)).unwrap();
        assert_eq!(out.render(), "1/2");
    }

    #[test]
    fn reduced_slide_examples() {
        // SJDT_2 on (*,2)/(3,-2)/(-3): the second column contracts away and
        // the slide is purely vertical, leaving (3)/(-3) with the exit below.
        let t = SkewTableau::parse(c(3), "*,2/3,-2/-3").unwrap();
        let out = reduced_complete_slide(&t, 2).unwrap();
        assert_eq!(out.render(), "3/-3/*");
    }

    #[test]
    fn rectify_straight_is_identity() {
        let t = SkewTableau::parse(c(2), "1,1/2").unwrap();
        let (r, j) = rectify_with_journal(&t).unwrap();
        assert_eq!(r, t);
        assert!(j.events.is_empty());
    }

    #[test]
    fn rectify_and_replay_roundtrip() {
        let t = SkewTableau::parse(c(3), ".,2,-2,-1/-2,-2,-1/-1").unwrap();
        let (r, j) = rectify_with_journal(&t).unwrap();
        assert_eq!(r.render(), "-2,-2,-1,-1/-1");
        // one slide contracted: the journal records it
        assert!(j
            .events
            .iter()
            .any(|e| matches!(e, SlideEvent::Slide { contraction: Some(_), .. })));
        let back = replay_reversed(&r, &j).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn reading_word_class_preserved() {
        use crate::word::plactic_equivalent;
        let t = SkewTableau::parse(c(2), ".,2/2,-2/-1").unwrap();
        let corners = inner_corners(&t);
        let (out, _) = complete_slide(&t, corners[0]).unwrap();
        let w1 = crate::word::reading_word(&t).unwrap();
        let w2 = crate::word::reading_word(&out).unwrap();
        assert!(plactic_equivalent(&w1, &w2).unwrap());
    }
}
