//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use kncrystal::cactus::{self, enumerate_relations, verify, SuiteKind};
use kncrystal::word::{column_insert, reverse_column_insert, Word};
use kncrystal::{column, crystal, fixtures, involutions, sjdt, type_a, virt};
use kncrystal::{Alphabet, Shape, SkewTableau};
use std::time::Instant;

fn report(criterion: &str, pass: bool) {
    println!("criterion {criterion}: {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {criterion} failed");
}

/// Enumerates every KN skew tableau of the given shape by backtracking.
fn all_skew_kn(outer: &Shape, inner: &Shape, n: usize) -> Vec<SkewTableau> {
    let a = Alphabet::c(n);
    let letters: Vec<i32> = (1..=2 * n).map(|o| a.letter_at(o)).collect();
    let mut rows: Vec<Vec<Option<i32>>> =
        (0..outer.rows()).map(|r| vec![None; outer.row(r) - inner.row(r)]).collect();
    let cells: Vec<(usize, usize)> = {
        // column-major order so admissibility can prune early
        let mut v = Vec::new();
        for c in 0..outer.row(0) {
            for r in 0..outer.rows() {
                if c >= inner.row(r) && c < outer.row(r) {
                    v.push((r, c));
                }
            }
        }
        v
    };
    let mut out = Vec::new();
    fn entry(rows: &[Vec<Option<i32>>], inner: &Shape, r: usize, c: usize) -> Option<i32> {
        if c < inner.row(r) {
            return None;
        }
        rows.get(r).and_then(|row| row.get(c - inner.row(r)).copied().flatten())
    }
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        rows: &mut Vec<Vec<Option<i32>>>,
        letters: &[i32],
        a: &Alphabet,
        inner: &Shape,
        n: usize,
        out: &mut Vec<SkewTableau>,
    ) {
        if k == cells.len() {
            if let Ok(t) = SkewTableau::from_rows(*a, inner, rows.clone()) {
                if t.is_kn() {
                    out.push(t);
                }
            }
            return;
        }
        let (r, c) = cells[k];
        for &x in letters {
            // column strict against the cell above, row weak against the left
            if r > 0 {
                if let Some(up) = entry(rows, inner, r - 1, c) {
                    if !a.lt(up, x) {
                        continue;
                    }
                }
            }
            if c > 0 {
                if let Some(left) = entry(rows, inner, r, c - 1) {
                    if !a.le(left, x) {
                        continue;
                    }
                }
            }
            rows[r][c - inner.row(r)] = Some(x);
            go(k + 1, cells, rows, letters, a, inner, n, out);
            rows[r][c - inner.row(r)] = None;
        }
    }
    go(0, &cells, &mut rows, &letters, &a, inner, n, &mut out);
    out
}

fn universes(n: usize, max_cells: usize) -> Vec<(Shape, crystal::CrystalGraph)> {
    Shape::all_up_to(max_cells, n)
        .into_iter()
        .map(|lam| {
            let g = crystal::generate_full(Alphabet::c(n), &lam).unwrap();
            (lam, g)
        })
        .collect()
}

#[test]
fn criterion_01_c2_crystal_figure() {
    let start = Instant::now();
    let problems = fixtures::check_c2_21_figure().unwrap();
    let elapsed = start.elapsed();
    let pass = problems.is_empty() && elapsed.as_secs_f64() < 1.0;
    if !problems.is_empty() {
        eprintln!("{problems:?}");
    }
    report("1 (C2 shape (2,1) crystal, 16 vertices, exact arrows, <1s)", pass);
}

#[test]
fn criterion_02_admissibility_split() {
    let mut pass = true;
    pass &= column::is_admissible(&[2, -2], 2);
    pass &= !column::is_admissible(&[1, -1], 2);
    pass &= column::split(&[2, -2], 2).unwrap() == (vec![1, -2], vec![2, -1]);
    let t = SkewTableau::parse(Alphabet::c(2), "2,2/-2,-2").unwrap();
    pass &= !t.is_kn();
    pass &= matches!(t.check_kn(), Err(kncrystal::Error::SplitNotSemistandard { .. }));
    let single = SkewTableau::parse(Alphabet::c(2), "2/-2").unwrap();
    pass &= single.is_kn();
    report("2 (admissibility and split fixtures)", pass);
}

#[test]
fn criterion_03_full_reversal_fixture() {
    let rep = fixtures::run("full-reversal-c3").unwrap();
    if !rep.passed() {
        eprintln!("{}", rep.render_text());
    }
    report("3 (full reversal worked example, all intermediates)", rep.passed());
}

#[test]
fn criterion_04_partial_reversal_fixture() {
    let rep = fixtures::run("partial-reversal-c4").unwrap();
    if !rep.passed() {
        eprintln!("{}", rep.render_text());
    }
    report("4 (partial reversal on [2,4] over C4)", rep.passed());
}

#[test]
fn criterion_05_virtualization_fixture() {
    let rep = fixtures::run("virtualization-n6").unwrap();
    if !rep.passed() {
        eprintln!("{}", rep.render_text());
    }
    report("5 (rank 6 virtualization, end to end)", rep.passed());
}

#[test]
fn criterion_06_bk_fixture() {
    let rep = fixtures::run("bk-c2").unwrap();
    if !rep.passed() {
        eprintln!("{}", rep.render_text());
    }
    report("6 (C2 Bender-Knuth involutions and virtual factorizations)", rep.passed());
}

#[test]
fn criterion_07_counterexample_fixture() {
    let rep = fixtures::run("counterexample-c2").unwrap();
    if !rep.passed() {
        eprintln!("{}", rep.render_text());
    }
    report("7 (C2 long-element counterexample)", rep.passed());
}

fn alpha_pairing(n: usize, i: usize, wt: &[i64]) -> i64 {
    // <wt, alpha_i^vee>: wt_i - wt_{i+1} for i<n, wt_n for i=n
    if i < n {
        wt[i - 1] - wt[i]
    } else {
        wt[n - 1]
    }
}

fn crystal_axioms(g: &crystal::CrystalGraph, n: usize) -> bool {
    for v in &g.vertices {
        let wt = v.weight();
        for i in 1..=n {
            let (eps, phi) = crystal::eps_phi(v, i).unwrap();
            if phi as i64 - eps as i64 != alpha_pairing(n, i, &wt) {
                return false;
            }
            if let Some(w) = crystal::f(v, i).unwrap() {
                if crystal::e(&w, i).unwrap().as_ref() != Some(v) {
                    return false;
                }
                let mut expect = wt.clone();
                if i < n {
                    expect[i - 1] -= 1;
                    expect[i] += 1;
                } else {
                    expect[n - 1] -= 2;
                }
                if w.weight() != expect {
                    return false;
                }
            }
            if let Some(w) = crystal::e(v, i).unwrap() {
                if crystal::f(&w, i).unwrap().as_ref() != Some(v) {
                    return false;
                }
            }
        }
    }
    true
}

fn unique_extremes_in_branchings(g: &crystal::CrystalGraph, n: usize) -> bool {
    let mut intervals = Vec::new();
    for p in 1..=n {
        for q in p..=n {
            intervals.push((p, q));
        }
    }
    for (p, q) in intervals {
        let colors: Vec<usize> = (p..=q).collect();
        let b = g.branch(&colors).unwrap();
        let comps = b.components();
        let mut reps: Vec<usize> = comps.clone();
        reps.sort_unstable();
        reps.dedup();
        for rep in reps {
            if b.highest_of(rep).is_err() || b.lowest_of(rep).is_err() {
                return false;
            }
        }
    }
    true
}

fn suite_passes(kind: SuiteKind, n: usize, verts: &[SkewTableau]) -> bool {
    let suite = enumerate_relations(kind, n).unwrap();
    let rep = verify(&suite, "acceptance", verts).unwrap();
    if !rep.passed() {
        eprintln!("{}", rep.render_text());
    }
    rep.passed()
}

fn coplacticity(n: usize) -> bool {
    // every slide commutes with every crystal operator, on all KN skew
    // tableaux with up to 6 cells over C_n
    let shapes: Vec<(Shape, Shape)> = {
        let mut v = Vec::new();
        for outer in Shape::all_up_to(6, 4) {
            for inner in Shape::all_up_to(outer.size() - 1, 4)
                .into_iter()
                .chain(std::iter::once(Shape::default()))
            {
                if outer.contains(&inner)
                    && !(inner == Shape::default())
                    && outer.size() - inner.size() >= 1
                {
                    v.push((outer.clone(), inner));
                }
            }
        }
        v
    };
    for (outer, inner) in shapes {
        for t in all_skew_kn(&outer, &inner, n) {
            let corners = sjdt::inner_corners(&t);
            let Some(&corner) = corners.first() else { continue };
            let (slid, _) = sjdt::complete_slide(&t, corner).unwrap();
            for i in 1..=n {
                let lhs = crystal::f(&t, i)
                    .unwrap()
                    .map(|x| sjdt::complete_slide(&x, corner).unwrap().0);
                let rhs = crystal::f(&slid, i).unwrap();
                if lhs != rhs {
                    eprintln!(
                        "slide does not commute with f_{i} at {} (corner {corner:?})",
                        t.render()
                    );
                    return false;
                }
            }
            // the reading word's plactic class is invariant
            let w1 = kncrystal::word::reading_word(&t).unwrap();
            let w2 = kncrystal::word::reading_word(&slid).unwrap();
            if !kncrystal::word::plactic_equivalent(&w1, &w2).unwrap() {
                return false;
            }
        }
    }
    true
}

fn intertwining_and_squares(n: usize, g: &crystal::CrystalGraph) -> bool {
    for v in &g.vertices {
        let ev = virt::embed(v).unwrap();
        for i in 1..=n {
            let lhs = crystal::f(v, i).unwrap().map(|t| virt::embed(&t).unwrap());
            if lhs != virt::virtual_f(&ev, i, n).unwrap() {
                return false;
            }
            let lhs_e = crystal::e(v, i).unwrap().map(|t| virt::embed(&t).unwrap());
            if lhs_e != virt::virtual_e(&ev, i, n).unwrap() {
                return false;
            }
        }
        for p in 1..=n {
            for q in p..=n {
                if !virt::check_diagram(v, p, q).unwrap() {
                    eprintln!("square fails at {} interval [{p},{q}]", v.render());
                    return false;
                }
            }
        }
    }
    true
}

fn dual_path(n: usize, g: &crystal::CrystalGraph) -> bool {
    for v in &g.vertices {
        let lambda = v.outer_shape();
        for j in 1..=n {
            let by_switch = involutions::partial_reversal_jn(v, j).unwrap();
            let emb = virt::embed(v).unwrap();
            let moved = virt::virtual_partial_xi(&emb, j, n, n).unwrap();
            let by_virt = virt::invert(&moved, &lambda, n).unwrap();
            if by_switch != by_virt {
                eprintln!("dual path differs at {} j={j}", v.render());
                return false;
            }
        }
    }
    true
}

#[test]
fn criterion_08_relation_suites() {
    let start = Instant::now();
    let mut pass = true;
    for (n, max_cells) in [(2usize, 5usize), (3, 4)] {
        let unis = universes(n, max_cells);
        let all_verts: Vec<SkewTableau> =
            unis.iter().flat_map(|(_, g)| g.vertices.iter().cloned()).collect();
        // (a) crystal axioms + unique extremes in every branching
        for (_, g) in &unis {
            pass &= crystal_axioms(g, n);
            pass &= unique_extremes_in_branchings(g, n);
        }
        println!("  8a rank {n}: axioms and extremes ok ({} vertices)", all_verts.len());
        // (b) symplectic cactus relations
        pass &= suite_passes(SuiteKind::Jsp, n, &all_verts);
        println!("  8b rank {n}: J_sp relations ok");
        // (c) the ten Bender-Knuth relation families
        pass &= suite_passes(SuiteKind::BkC, n, &all_verts);
        println!("  8c rank {n}: BK relations ok");
        // (d) B_n reflection relations
        pass &= suite_passes(SuiteKind::BnReflections, n, &all_verts);
        println!("  8d rank {n}: reflection relations ok");
        // (f) intertwining and commutative squares, (g) dual paths
        for (_, g) in &unis {
            pass &= intertwining_and_squares(n, g);
            pass &= dual_path(n, g);
        }
        println!("  8f/8g rank {n}: virtualization squares and dual paths ok");
    }
    // (e) coplacticity of slides at rank 2
    let cop = coplacticity(2);
    pass &= cop;
    println!("  8e: slides commute with crystal operators ({cop})");
    let elapsed = start.elapsed();
    println!("  8 runtime: {:.1}s", elapsed.as_secs_f64());
    pass &= elapsed.as_secs() < 600;
    report("8 (exhaustive relation suites, zero failures, <10min)", pass);
}

#[test]
fn criterion_09_non_relation_probes() {
    let suite = enumerate_relations(SuiteKind::NonRelations, 3).unwrap();
    let mut found_power = false;
    let mut found_braid = false;
    'outer: for lam in Shape::all_up_to(5, 3) {
        let g = crystal::generate_full(Alphabet::c(3), &lam).unwrap();
        let rep = verify(&suite, "probe", &g.vertices).unwrap();
        for r in &rep.relations {
            if !r.witnesses.is_empty() {
                if r.name.contains("(t1 t2)^3") {
                    found_power = true;
                }
                if r.name.contains("braid") {
                    found_braid = true;
                }
            }
        }
        if found_power && found_braid {
            break 'outer;
        }
    }
    report("9 (witnesses for the failing power and braid relations, rank 3)", found_power && found_braid);
}

#[test]
fn criterion_10_character_symmetry() {
    let mut pass = true;
    for (n, max_cells) in [(2usize, 5usize), (3, 4)] {
        for lam in Shape::all_up_to(max_cells, n) {
            let g = crystal::generate_full(Alphabet::c(n), &lam).unwrap();
            let ch = g.character();
            for i in 1..=n {
                let mut moved: Vec<(Vec<i64>, usize)> = ch
                    .iter()
                    .map(|(wt, &m)| {
                        let mut w = wt.clone();
                        if i < n {
                            w.swap(i - 1, i);
                        } else {
                            w[n - 1] = -w[n - 1];
                        }
                        (w, m)
                    })
                    .collect();
                moved.sort();
                let orig: Vec<(Vec<i64>, usize)> =
                    ch.iter().map(|(w, &m)| (w.clone(), m)).collect();
                if moved != orig {
                    eprintln!("character of {lam} over C{n} not r_{i}-symmetric");
                    pass = false;
                }
            }
        }
    }
    report("10 (characters are Weyl-symmetric Laurent polynomials)", pass);
}

#[test]
fn criterion_11_roundtrips() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(20260810);
    let mut pass = true;

    // parse/render on every generated vertex plus random crystals
    for (_, g) in universes(2, 4) {
        for v in &g.vertices {
            pass &= SkewTableau::parse(v.alphabet, &v.render()).unwrap() == *v;
        }
    }

    // coadmissible bijection: exhaustive n <= 3, then 1000 random columns
    for n in 1..=3 {
        for col in column::all_columns(n, n) {
            if col.is_empty() || !column::is_admissible(&col, n) {
                continue;
            }
            let d = column::coadmissible(&col, n).unwrap();
            pass &= column::coadmissible_inv(&d, n).unwrap() == col;
        }
    }
    let mut done = 0;
    while done < 1000 {
        let n = rng.gen_range(2..=5usize);
        let a = Alphabet::c(n);
        let h = rng.gen_range(1..=n);
        let mut ords: Vec<usize> = (1..=2 * n).collect();
        for i in (1..ords.len()).rev() {
            ords.swap(i, rng.gen_range(0..=i));
        }
        let mut col: Vec<i32> = ords[..h].iter().map(|&o| a.letter_at(o)).collect();
        a.sort(&mut col);
        if !column::is_admissible(&col, n) {
            continue;
        }
        let d = column::coadmissible(&col, n).unwrap();
        pass &= column::coadmissible_inv(&d, n).unwrap() == col;
        done += 1;
    }

    // embedding roundtrip: exhaustive rank 2 up to 4 cells, random rank 3
    for (lam, g) in universes(2, 4) {
        for v in &g.vertices {
            pass &= virt::invert(&virt::embed(v).unwrap(), &lam, 2).unwrap() == *v;
        }
    }
    let rank3: Vec<(Shape, crystal::CrystalGraph)> = universes(3, 3);
    let mut count = 0;
    while count < 1000 {
        let (lam, g) = &rank3[rng.gen_range(0..rank3.len())];
        let v = &g.vertices[rng.gen_range(0..g.vertices.len())];
        pass &= virt::invert(&virt::embed(v).unwrap(), lam, 3).unwrap() == *v;
        count += 1;
    }

    // rectify / replay: exhaustive small skews over C2, then random picks
    let mut skews = Vec::new();
    for outer in Shape::all_up_to(6, 3) {
        for inner in Shape::all_up_to(outer.size().saturating_sub(1), 3) {
            if outer.contains(&inner) {
                skews.push((outer.clone(), inner));
            }
        }
    }
    let mut pool = Vec::new();
    for (outer, inner) in &skews {
        for t in all_skew_kn(outer, inner, 2) {
            let (rect, journal) = sjdt::rectify_with_journal(&t).unwrap();
            let back = sjdt::replay_reversed(&rect, &journal).unwrap();
            pass &= back == t;
            pool.push(t);
        }
    }
    for _ in 0..1000 {
        let t = &pool[rng.gen_range(0..pool.len())];
        let (rect, journal) = sjdt::rectify_with_journal(t).unwrap();
        pass &= sjdt::replay_reversed(&rect, &journal).unwrap() == *t;
    }

    // column insertion roundtrip on 1000 random type A words
    for _ in 0..1000 {
        let m = rng.gen_range(2..=6usize);
        let a = Alphabet::a(m);
        let len = rng.gen_range(1..=10usize);
        let letters: Vec<i32> = (0..len).map(|_| rng.gen_range(1..=m as i32)).collect();
        let w = Word::new(a, letters).unwrap();
        let (p, q) = column_insert(&SkewTableau::empty(a), &w).unwrap();
        pass &= reverse_column_insert(&p, &q).unwrap() == w;
    }

    report("11 (round-trip identities on their domains)", pass);
}
