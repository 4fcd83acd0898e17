//! Built-in worked examples, embedded as data and replayed step by step.
//! Each fixture compares every intermediate of a computation against its
//! expected value and reports per-step pass/fail.

use crate::alphabet::Alphabet;
use crate::cactus::{act, enumerate_relations, verify, SuiteKind};
use crate::error::{Error, Result};
use crate::involutions;
use crate::shape::Shape;
use crate::sjdt;
use crate::tableau::SkewTableau;
use crate::type_a;
use crate::virt;

pub const NAMES: [&str; 5] = [
    "full-reversal-c3",
    "partial-reversal-c4",
    "virtualization-n6",
    "bk-c2",
    "counterexample-c2",
];

#[derive(Debug, Clone, serde::Serialize)]
pub struct StepCheck {
    pub label: String,
    pub expected: String,
    pub actual: String,
}

impl StepCheck {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct FixtureReport {
    pub name: String,
    pub steps: Vec<StepCheck>,
}

impl FixtureReport {
    pub fn passed(&self) -> bool {
        self.steps.iter().all(|s| s.ok())
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("fixture {}\n", self.name);
        for st in &self.steps {
            if st.ok() {
                s.push_str(&format!("  [PASS] {}: {}\n", st.label, st.actual));
            } else {
                s.push_str(&format!(
                    "  [FAIL] {}: expected {}, got {}\n",
                    st.label, st.expected, st.actual
                ));
            }
        }
        s.push_str(if self.passed() { "  ALL PASS\n" } else { "  FAILURES PRESENT\n" });
        s
    }
}

struct Steps(Vec<StepCheck>);

impl Steps {
    fn add(&mut self, label: &str, expected: impl ToString, actual: impl ToString) {
        self.0.push(StepCheck {
            label: label.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }
}

pub fn run(name: &str) -> Result<FixtureReport> {
    match name {
        "full-reversal-c3" => full_reversal_c3(),
        "partial-reversal-c4" => partial_reversal_c4(),
        "virtualization-n6" => virtualization_n6(),
        "bk-c2" => bk_c2(),
        "counterexample-c2" => counterexample_c2(),
        other => Err(Error::Domain(format!(
            "unknown fixture {other}; known: {}",
            NAMES.join(", ")
        ))),
    }
}

/// Full reversal of a skew tableau over C_3, with every intermediate of the
/// slide chain, the evacuation, and the replay.
fn full_reversal_c3() -> Result<FixtureReport> {
    let a = Alphabet::c(3);
    let mut steps = Steps(Vec::new());
    let t = SkewTableau::parse(a, ".,2,-2,-1/-2,-2,-1/-1")?;
    steps.add("input is KN", "true", t.is_kn());

    let (s1, ev1) = sjdt::complete_slide(&t, (0, 0))?;
    steps.add("slide 1 result", ".,-2,-1,-1/-2,-1", s1.render());
    let contracted = matches!(
        ev1,
        sjdt::SlideEvent::Slide { contraction: Some(sjdt::Contraction { z: 1, .. }), .. }
    );
    steps.add("slide 1 contracted the pair (1,-1)", "true", contracted);

    let (s2, _) = sjdt::complete_slide(&s1, (0, 0))?;
    steps.add("slide 2 gives rect(T)", "-2,-2,-1,-1/-1", s2.render());

    let (rect, journal) = sjdt::rectify_with_journal(&t)?;
    steps.add("rect(T)", "-2,-2,-1,-1/-1", rect.render());

    let rot = rect.rotate_complement();
    steps.add("rotated complement", ".,.,.,1/1,1,2,2", rot.render());
    let evac = sjdt::rectify(&rot)?;
    steps.add("evacuation of rect(T)", "1,1,1,2/2", evac.render());

    let rev = sjdt::replay_reversed(&evac, &journal)?;
    steps.add("reversal(T)", ".,1,1,2/1,2,2/-2", rev.render());
    steps.add("reversal(T) via one call", rev.render(), involutions::reversal_c(&t)?.render());
    steps.add("involution check", t.render(), involutions::reversal_c(&rev)?.render());
    Ok(FixtureReport { name: "full-reversal-c3".into(), steps: steps.0 })
}

/// Partial reversal on [2,4] over C_4 with the colorful switching
/// intermediates (shown in the original alphabet).
fn partial_reversal_c4() -> Result<FixtureReport> {
    let a = Alphabet::c(4);
    let mut steps = Steps(Vec::new());
    let p = SkewTableau::parse(a, "1,2,2,-1/4,4,-3/-4,-2,-1/-3")?;
    steps.add("input weight", "[-1, 1, -2, 1]", format!("{:?}", p.weight()));

    let body = p.restrict_window(2, 7)?; // letters in [+-2, 4]
    steps.add("window body", ".,2,2/4,4,-3/-4,-2/-3", body.render());

    let shifted = body.shift_letters(-1, 3);
    let (pre, mut journal) = sjdt::pre_contract(&shifted)?;
    steps.add(
        "pre-contraction of column 2",
        ".,.,2/4,4,-3/-4/-3",
        pre.shift_letters(1, 4).render(),
    );

    let mut cur = pre.clone();
    let expected_slides =
        [".,2,-3/4,4/-4/-3", ".,4,-3/2/-3", "2,4,-3/-3"];
    for (k, want) in expected_slides.iter().enumerate() {
        let corners = sjdt::inner_corners(&cur);
        let (next, ev) = sjdt::complete_slide(&cur, corners[0])?;
        cur = next;
        journal.events.push(ev);
        steps.add(&format!("slide {}", k + 1), *want, cur.shift_letters(1, 4).render());
    }
    steps.add("reduced rectification", "2,4,-3/-3", cur.shift_letters(1, 4).render());

    let evac = sjdt::rectify(&cur.rotate_complement())?;
    steps.add("evacuation of the window", "3,3,-2/-4", evac.shift_letters(1, 4).render());

    let replayed = sjdt::replay_reversed(&evac, &journal)?;
    steps.add(
        "replayed window",
        ".,2,3/3,3,-3/-4,-2/-2",
        replayed.shift_letters(1, 4).render(),
    );

    let full = involutions::partial_reversal_jn(&p, 2)?;
    steps.add("partial reversal", "1,2,3,-1/3,3,-3/-4,-2,-1/-2", full.render());
    steps.add("result weight", "[-1, -1, 2, -1]", format!("{:?}", full.weight()));
    steps.add("involution check", p.render(), involutions::partial_reversal_jn(&full, 2)?.render());
    Ok(FixtureReport { name: "partial-reversal-c4".into(), steps: steps.0 })
}

/// The rank 6 virtualization example, end to end.
fn virtualization_n6() -> Result<FixtureReport> {
    let n = 6;
    let a = Alphabet::c(n);
    let mut steps = Steps(Vec::new());
    let t = SkewTableau::parse(a, "1,2,3,-3/2,4,5,-1/3,6,-5/5,-6,-3/6,-5,-1/-5,-4")?;
    steps.add("input weight", "[-1, 2, 0, 0, -1, 1]", format!("{:?}", t.weight()));
    let lambda = t.outer_shape();
    steps.add("shape", "(4,4,3,3,3,2)", lambda.to_string());

    let lam_a = virt::virtual_shape(&lambda, n)?;
    steps.add("virtual shape", "(8,8,7,7,7,6,2,1,1,1)", lam_a.to_string());

    let ql = virt::q_lambda(&lambda, n)?;
    steps.add(
        "recording tableau",
        "1,3,13,18,25,31,37,43/2,4,14,19,26,32,38,44/5,15,20,27,33,39,45/6,16,21,28,34,40,46/7,17,22,29,35,41,47/8,23,30,36,42,48/9,24/10/11/12",
        ql.render(),
    );

    // the four virtual column splits of T, rightmost column first
    let psis = [
        "2,-3/4,-1/5/6/-6/-5/-4/-3/-2/-1",
        "2,3/4,5/6,-4/-6,-2/-5,-1/-3/-1",
        "1,2/2,4/3,6/-6,-5/-5,-3/-4,-1",
        "1,1/2,2/3,3/4,5/6,6/-5,-4",
    ];
    for (k, want) in psis.iter().enumerate() {
        let col = &t.cols()[t.num_cols() - 1 - k];
        let psi = virt::virtual_split(&col.letters(), n)?;
        steps.add(&format!("psi(C{})", k + 1), *want, virt::to_c(&psi, n)?.render());
    }

    let (e, q) = virt::embed_with_recording(&t)?;
    steps.add(
        "E(T)",
        "1,1,1,2,2,2,4,-3/2,2,2,3,4,5,5,-1/3,3,3,4,6,6,-4/4,5,6,-6,-6,-5,-2/6,6,-6,-5,-5,-3,-1/-5,-5,-4,-4,-3,-1/-4,-1/-3/-2/-1",
        virt::to_c(&e, n)?.render(),
    );
    steps.add(
        "wt(E(T))",
        "[3, 6, 4, 4, 3, 5, 3, 5, 4, 4, 2, 5]",
        format!("{:?}", e.weight()),
    );
    steps.add("recording equals Q_lambda", "true", q == ql);
    steps.add("inverse of E recovers T", t.render(), virt::invert(&e, &lambda, n)?.render());

    let moved = virt::virtual_partial_xi(&e, 1, 5, n)?;
    steps.add(
        "evacuated unbarred part",
        "1,1,1,1,1,4,4/2,2,2,3,3,5,5/3,3,4,5,5,6/4,5,6/5,6",
        moved.restrict_window(1, 6)?.render(),
    );

    let back = virt::invert(&moved, &lambda, n)?;
    // virtual splits of the image columns, rightmost first
    let psis_out = [
        "1,-3/4,-2/5/6/-6/-5/-4/-3/-2/-1",
        "3,4/5,5/6,-3/-6,-2/-4,-1/-2/-1",
        "1,1/2,3/4,5/-6,-6/-5,-4/-3,-2",
        "1,1/2,2/3,3/4,5/5,6/-6,-4",
    ];
    for (k, want) in psis_out.iter().enumerate() {
        let col = &back.cols()[back.num_cols() - 1 - k];
        let psi = virt::virtual_split(&col.letters(), n)?;
        steps.add(&format!("psi(C'{})", k + 1), *want, virt::to_c(&psi, n)?.render());
    }
    steps.add(
        "xi_[1,5](T)",
        "1,1,4,-3/2,3,5,-2/3,5,-4/5,-6,-2/6,-5,-1/-6,-3",
        back.render(),
    );
    steps.add("window weight reversed", "[1, -1, 0, 0, 2, -1]", format!("{:?}", back.weight()));
    steps.add(
        "same via the type C dispatcher",
        back.render(),
        involutions::partial_xi_c(&t, 1, 5)?.render(),
    );
    Ok(FixtureReport { name: "virtualization-n6".into(), steps: steps.0 })
}

/// The C_2 symplectic Bender-Knuth involutions and their virtual images.
fn bk_c2() -> Result<FixtureReport> {
    let n = 2;
    let a = Alphabet::c(n);
    let mut steps = Steps(Vec::new());
    let t = SkewTableau::parse(a, "1,1,2,2,2,-2,-1,-1/2,-2,-2,-1,-1")?;
    steps.add("input weight", "[-2, 1]", format!("{:?}", t.weight()));
    let lambda = t.outer_shape();

    let t1 = involutions::symplectic_bk(&t, 1)?;
    steps.add("t1", "1,1,1,1,2,-2,-1,-1/2,-2,-2,-2,-1", t1.render());
    steps.add("wt(t1)", "[1, -2]", format!("{:?}", t1.weight()));
    let t2 = involutions::symplectic_bk(&t, 2)?;
    steps.add("t2", "1,1,2,2,-2,-2,-1,-1/2,-2,-2,-1,-1", t2.render());
    steps.add("wt(t2)", "[-2, -1]", format!("{:?}", t2.weight()));
    let t3 = involutions::symplectic_bk(&t, 3)?;
    steps.add("t3", "1,1,1,1,2,2,-2,-1/2,2,-2,-2,-1", t3.render());
    steps.add("wt(t3)", "[2, 1]", format!("{:?}", t3.weight()));

    let e = virt::embed(&t)?;
    steps.add(
        "E(T)",
        "1,1,1,1,1,1,2,2,2,2,2,2,-2,-2,-1,-1/2,2,2,-2,-2,-2,-2,-1,-1,-1,-1,-1,-1/-2,-1,-1",
        virt::to_c(&e, n)?.render(),
    );

    // t1 = E^-1 xi_3 tA_1 E
    let v1 = {
        let s = type_a::bender_knuth(&e, 1)?;
        let s = type_a::partial_xi(&s, &[(3, 3)])?;
        virt::invert(&s, &lambda, n)?
    };
    steps.add("t1 via virtualization", t1.render(), v1.render());
    steps.add(
        "E(t1 T)",
        "1,1,1,1,1,1,1,1,1,2,2,2,-2,-2,-1,-1/2,2,2,-2,-2,-2,-2,-2,-2,-2,-1,-1,-1/-2,-1,-1",
        virt::to_c(&virt::embed(&t1)?, n)?.render(),
    );

    // t2 = E^-1 xi_2 E
    let v2 = {
        let s = type_a::partial_xi(&e, &[(2, 2)])?;
        virt::invert(&s, &lambda, n)?
    };
    steps.add("t2 via virtualization", t2.render(), v2.render());
    steps.add(
        "E(t2 T)",
        "1,1,1,1,1,1,2,2,2,2,-2,-2,-2,-2,-1,-1/2,2,2,-2,-2,-2,-2,-1,-1,-1,-1,-1,-1/-2,-1,-1",
        virt::to_c(&virt::embed(&t2)?, n)?.render(),
    );

    // t3 = E^-1 xi_2 evac E, with evac in Bender-Knuth form
    let v3 = {
        let s = type_a::q_initial(&e, 3)?;
        let s = type_a::partial_xi(&s, &[(2, 2)])?;
        virt::invert(&s, &lambda, n)?
    };
    steps.add("t3 via virtualization", t3.render(), v3.render());

    // the C_2 relations: t_i^2 = (t1 t2)^4 = (t2 t3)^2 = 1
    let suite = enumerate_relations(SuiteKind::BkC, 2)?;
    let rep = verify(&suite, "KN((8,5),2) at T", std::slice::from_ref(&t))?;
    steps.add("BK relations at T", "pass", if rep.passed() { "pass" } else { "fail" });
    Ok(FixtureReport { name: "bk-c2".into(), steps: steps.0 })
}

/// The C_2 tableau where the Bender-Knuth involutions fail to realize the
/// long Weyl group element.
fn counterexample_c2() -> Result<FixtureReport> {
    let a = Alphabet::c(2);
    let mut steps = Steps(Vec::new());
    let t = SkewTableau::parse(a, "2,-1/-2")?;
    let w1221 = act(
        &crate::cactus::GroupWord(vec![
            crate::cactus::Generator::BkC(2),
            crate::cactus::Generator::BkC(1),
            crate::cactus::Generator::BkC(2),
            crate::cactus::Generator::BkC(1),
        ]),
        &t,
    )?;
    steps.add("t2 t1 t2 t1 (T)", "1,-2/2", w1221.render());
    let w2112 = act(
        &crate::cactus::GroupWord(vec![
            crate::cactus::Generator::BkC(1),
            crate::cactus::Generator::BkC(2),
            crate::cactus::Generator::BkC(1),
            crate::cactus::Generator::BkC(2),
        ]),
        &t,
    )?;
    steps.add("t1 t2 t1 t2 (T)", "1,-2/2", w2112.render());
    let full = involutions::evacuation_c(&t)?;
    steps.add("full involution of T", "1,2/-2", full.render());
    steps.add("they differ", "true", w1221 != full);
    steps.add(
        "weights agree nevertheless",
        format!("{:?}", full.weight()),
        format!("{:?}", w1221.weight()),
    );
    Ok(FixtureReport { name: "counterexample-c2".into(), steps: steps.0 })
}

/// The expected 16-vertex crystal of shape (2,1) over C_2: every arrow of
/// the reference figure, as (source, color, target) renders.
pub fn c2_21_expected_arrows() -> Vec<(&'static str, usize, &'static str)> {
    vec![
        ("1,1/2", 1, "1,2/2"),
        ("1,1/-2", 1, "1,2/-2"),
        ("1,2/-2", 1, "2,2/-2"),
        ("2,2/-2", 1, "2,2/-1"),
        ("2,-2/-2", 1, "2,-2/-1"),
        ("-2,-2/-1", 1, "-2,-1/-1"),
        ("1,-2/-2", 1, "1,-1/-2"),
        ("2,-1/-2", 1, "2,-1/-1"),
        ("1,-1/-2", 1, "2,-1/-2"),
        ("1,-2/2", 1, "1,-1/2"),
        ("1,1/2", 2, "1,1/-2"),
        ("2,-1/-1", 2, "-2,-1/-1"),
        ("1,-1/2", 2, "1,-1/-2"),
        ("1,-2/2", 2, "1,-2/-2"),
        ("1,2/2", 2, "1,-2/2"),
        ("2,2/-2", 2, "2,-2/-2"),
        ("2,2/-1", 2, "2,-2/-1"),
        ("2,-2/-1", 2, "-2,-2/-1"),
    ]
}

/// Builds the C_2 crystal of shape (2,1) and checks it against the embedded
/// figure, returning mismatch descriptions (empty = exact match).
pub fn check_c2_21_figure() -> Result<Vec<String>> {
    let g = crate::crystal::generate_full(Alphabet::c(2), &Shape::from([2, 1]))?;
    let mut problems = Vec::new();
    if g.len() != 16 {
        problems.push(format!("expected 16 vertices, found {}", g.len()));
    }
    let mut actual: Vec<(String, usize, String)> = g
        .arrows
        .iter()
        .map(|&(s, i, t)| (g.vertices[s].render(), i, g.vertices[t].render()))
        .collect();
    let mut expected: Vec<(String, usize, String)> = c2_21_expected_arrows()
        .into_iter()
        .map(|(s, i, t)| (s.to_string(), i, t.to_string()))
        .collect();
    actual.sort();
    expected.sort();
    if actual != expected {
        for e in &expected {
            if !actual.contains(e) {
                problems.push(format!("missing arrow {} -{}-> {}", e.0, e.1, e.2));
            }
        }
        for a in &actual {
            if !expected.contains(a) {
                problems.push(format!("extra arrow {} -{}-> {}", a.0, a.1, a.2));
            }
        }
    }
    Ok(problems)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_pass() {
        for name in NAMES {
            let rep = run(name).unwrap();
            assert!(rep.passed(), "{}", rep.render_text());
        }
    }

    #[test]
    fn c2_figure_matches() {
        let problems = check_c2_21_figure().unwrap();
        assert!(problems.is_empty(), "{problems:?}");
    }
}
