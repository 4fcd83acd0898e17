//! Symplectic Schutzenberger-Lusztig involutions: evacuation, reversal of
//! skew tableaux, the partial reversal on [j,n] by colorful tableau
//! switching, crystal reflection operators, and symplectic Bender-Knuth
//! involutions.

use crate::alphabet::Alphabet;
use crate::crystal;
use crate::error::{Error, Result};
use crate::sjdt;
use crate::tableau::SkewTableau;
use crate::type_a;
use crate::virt;

fn expect_c(t: &SkewTableau) -> Result<usize> {
    match t.alphabet {
        Alphabet::C { n } => Ok(n),
        _ => Err(Error::Domain("a type C tableau is required".into())),
    }
}

/// Symplectic evacuation of a straight tableau: complement all entries,
/// rotate by pi, rectify.
pub fn evacuation_c(t: &SkewTableau) -> Result<SkewTableau> {
    expect_c(t)?;
    if !t.is_straight() {
        return Err(Error::Domain("evacuation needs a straight shape".into()));
    }
    sjdt::rectify(&t.rotate_complement())
}

/// Full reversal of a skew tableau: rectify with a journal, evacuate, replay
/// the journal backwards.
pub fn reversal_c(t: &SkewTableau) -> Result<SkewTableau> {
    expect_c(t)?;
    if t.is_empty() {
        return Ok(t.clone());
    }
    t.check_kn()?;
    let (rect, journal) = sjdt::rectify_with_journal(t)?;
    let ev = sjdt::rectify(&rect.rotate_complement())?;
    sjdt::replay_reversed(&ev, &journal)
}

/// Partial symplectic reversal on the interval [j,n]: letters outside
/// [+-j, n] are frozen; the window is shifted to C_{n-j+1}, pre-contracted,
/// rectified with a journal, evacuated, and replayed backwards.
pub fn partial_reversal_jn(t: &SkewTableau, j: usize) -> Result<SkewTableau> {
    let n = expect_c(t)?;
    if j < 1 || j > n {
        return Err(Error::BadInterval(j, n));
    }
    t.check_kn()?;
    if j == 1 {
        return reversal_c(t);
    }
    let plus = t.restrict_window(1, j - 1)?;
    let minus = t.restrict_window(2 * n + 2 - j, 2 * n)?;
    let body = t.restrict_window(j, 2 * n + 1 - j)?;
    if body.is_empty() {
        return Ok(t.clone());
    }
    let m = n - j + 1;
    let shifted = body.shift_letters(-((j as i32) - 1), m);
    let (pre, mut journal) = sjdt::pre_contract(&shifted)?;
    let (rect, slides) = sjdt::rectify_with_journal(&pre)?;
    journal.events.extend(slides.events);
    let ev = sjdt::rectify(&rect.rotate_complement())?;
    let replayed = sjdt::replay_reversed(&ev, &journal)?;
    if replayed.skew_shape() != shifted.skew_shape() {
        return Err(Error::Invariant(format!(
            "replay changed the window shape: {} vs {}",
            replayed.skew_shape().outer,
            shifted.skew_shape().outer
        )));
    }
    let body_back = replayed.shift_letters(j as i32 - 1, n);
    let mut pieces: Vec<&SkewTableau> = Vec::new();
    for p in [&plus, &body_back, &minus] {
        if !p.is_empty() {
            pieces.push(p);
        }
    }
    let out = type_a::reassemble(t.alphabet, &pieces)?;
    out.check_kn()?;
    Ok(out)
}

/// The crystal reflection operator on the i-string through t.
pub fn reflection_xi(t: &SkewTableau, i: usize) -> Result<SkewTableau> {
    let (eps, phi) = crystal::eps_phi(t, i)?;
    let mut cur = t.clone();
    if eps > phi {
        for _ in 0..eps - phi {
            cur = crystal::e(&cur, i)?
                .ok_or_else(|| Error::Invariant("string shorter than eps".into()))?;
        }
    } else {
        for _ in 0..phi - eps {
            cur = crystal::f(&cur, i)?
                .ok_or_else(|| Error::Invariant("string shorter than phi".into()))?;
        }
    }
    Ok(cur)
}

/// The partial Schutzenberger-Lusztig involution xi^{C_n}_{[p,q]} on a
/// straight tableau: intervals [j,n] go through the switching algorithm,
/// interior intervals through virtualization.
pub fn partial_xi_c(t: &SkewTableau, p: usize, q: usize) -> Result<SkewTableau> {
    let n = expect_c(t)?;
    if p < 1 || q > n || p > q {
        return Err(Error::BadInterval(p, q));
    }
    if p == n {
        return reflection_xi(t, n);
    }
    if q == n {
        return partial_reversal_jn(t, p);
    }
    if !t.is_straight() {
        return Err(Error::Domain(
            "interior partial involutions act on straight tableaux".into(),
        ));
    }
    let lambda = t.outer_shape();
    let embedded = virt::embed(t)?;
    let moved = virt::virtual_partial_xi(&embedded, p, q, n)?;
    virt::invert(&moved, &lambda, n)
}

/// The symplectic Bender-Knuth involution t_i, 1 <= i <= 2n-1, as the stated
/// composition of partial involutions.
pub fn symplectic_bk(t: &SkewTableau, i: usize) -> Result<SkewTableau> {
    let n = expect_c(t)?;
    if i < 1 || i > 2 * n - 1 {
        return Err(Error::BadColor(i));
    }
    let q1 = |t: &SkewTableau, j: usize| -> Result<SkewTableau> {
        if j == 0 {
            Ok(t.clone())
        } else {
            partial_xi_c(t, 1, j)
        }
    };
    if i == 1 {
        return q1(t, 1);
    }
    if i < n {
        // t_i = q_[1,i-1] q_[1,i] q_[1,i-1] q_[1,i-2], applied right to left
        let s = q1(t, i - 2)?;
        let s = q1(&s, i - 1)?;
        let s = q1(&s, i)?;
        return q1(&s, i - 1);
    }
    if i == n {
        return reflection_xi(t, n);
    }
    // t_{n-1+k} = q_[n-k+1,n] q_[n-k+2,n], applied right to left
    let k = i - n + 1;
    let s = if n - k + 2 > n { t.clone() } else { partial_xi_c(t, n - k + 2, n)? };
    partial_xi_c(&s, n - k + 1, n)
}
