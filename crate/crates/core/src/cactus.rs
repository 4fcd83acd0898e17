//! Symbolic cactus and Bender-Knuth generators, group words, exhaustive
//! relation verification on finite tableau universes, and the folding
//! injection into the type A cactus group.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::involutions;
use crate::shape::Shape;
use crate::tableau::SkewTableau;
use crate::type_a;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// s_[p,q] of the type A cactus group, acting by partial reversal.
    CactusA { p: usize, q: usize },
    /// s_[p,q] of the symplectic cactus group.
    CactusC { p: usize, q: usize },
    /// The folded generator s~_[p,q] acting on type A tableaux over 1..=2n.
    VirtualCactus { p: usize, q: usize, n: usize },
    /// Type A Bender-Knuth involution t_i.
    BkA(usize),
    /// Symplectic Bender-Knuth involution t_i, 1 <= i <= 2n-1.
    BkC(usize),
    /// q_[j,k] in type A Bender-Knuth generators.
    QA { j: usize, k: usize },
    /// q^C_[j,k] = xi^C_[j,k].
    QC { j: usize, k: usize },
    /// Crystal reflection operator xi_i on a type C tableau.
    ReflectionC(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::CactusA { p, q } => write!(f, "sA[{p},{q}]"),
            Generator::CactusC { p, q } => write!(f, "s[{p},{q}]"),
            Generator::VirtualCactus { p, q, .. } => write!(f, "s~[{p},{q}]"),
            Generator::BkA(i) => write!(f, "tA{i}"),
            Generator::BkC(i) => write!(f, "t{i}"),
            Generator::QA { j, k } => write!(f, "qA[{j},{k}]"),
            Generator::QC { j, k } => write!(f, "q[{j},{k}]"),
            Generator::ReflectionC(i) => write!(f, "x{i}"),
        }
    }
}

/// A formal word in generators, acting right to left.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GroupWord(pub Vec<Generator>);

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl GroupWord {
    pub fn of(gens: &[Generator]) -> Self {
        GroupWord(gens.to_vec())
    }

    /// (w)^pow by repetition.
    pub fn pow(&self, pow: usize) -> Self {
        let mut v = Vec::with_capacity(self.0.len() * pow);
        for _ in 0..pow {
            v.extend_from_slice(&self.0);
        }
        GroupWord(v)
    }

    /// Concatenation: `self` acts after `other`.
    pub fn after(&self, other: &GroupWord) -> Self {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        GroupWord(w)
    }
}

pub fn apply_generator(g: &Generator, t: &SkewTableau) -> Result<SkewTableau> {
    match *g {
        Generator::CactusA { p, q } => type_a::partial_xi(t, &[(p, q)]),
        Generator::CactusC { p, q } => involutions::partial_xi_c(t, p, q),
        Generator::VirtualCactus { p, q, n } => crate::virt::virtual_partial_xi(t, p, q, n),
        Generator::BkA(i) => type_a::bender_knuth(t, i),
        Generator::BkC(i) => involutions::symplectic_bk(t, i),
        Generator::QA { j, k } => type_a::q_interval(t, j, k),
        Generator::QC { j, k } => involutions::partial_xi_c(t, j, k),
        Generator::ReflectionC(i) => involutions::reflection_xi(t, i),
    }
}

/// Right-to-left composition.
pub fn act(word: &GroupWord, t: &SkewTableau) -> Result<SkewTableau> {
    let mut cur = t.clone();
    for g in word.0.iter().rev() {
        cur = apply_generator(g, &cur)?;
    }
    Ok(cur)
}

#[derive(Debug, Clone)]
pub struct Relation {
    pub name: String,
    pub lhs: GroupWord,
    pub rhs: GroupWord,
    /// Relations expected to hold; probes of non-relations set this false.
    pub expect_equal: bool,
}

impl Relation {
    fn holds(name: impl Into<String>, lhs: GroupWord, rhs: GroupWord) -> Self {
        Relation { name: name.into(), lhs, rhs, expect_equal: true }
    }

    fn fails(name: impl Into<String>, lhs: GroupWord, rhs: GroupWord) -> Self {
        Relation { name: name.into(), lhs, rhs, expect_equal: false }
    }
}

#[derive(Debug, Clone)]
pub struct RelationSuite {
    pub name: String,
    pub relations: Vec<Relation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    /// Type A cactus group on the diagram [m-1] (alphabet size m).
    Jn,
    /// Symplectic cactus group on [n].
    Jsp,
    /// Virtual symplectic cactus group inside the type A cactus on [2n-1].
    VJ2n,
    /// Type A Bender-Knuth relations (alphabet size m).
    BkA,
    /// Symplectic Bender-Knuth relations (the ten families).
    BkC,
    /// Weyl group B_n relations of the reflection operators.
    BnReflections,
    /// Probes of known non-relations (witnesses expected).
    NonRelations,
}

impl std::str::FromStr for SuiteKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "jn" | "j_n" => Ok(SuiteKind::Jn),
            "jsp" | "j_sp" => Ok(SuiteKind::Jsp),
            "vj2n" | "vj" => Ok(SuiteKind::VJ2n),
            "bka" | "bk_a" => Ok(SuiteKind::BkA),
            "bkc" | "bk_c" => Ok(SuiteKind::BkC),
            "bn" | "reflections" => Ok(SuiteKind::BnReflections),
            "nonrel" | "non-relations" => Ok(SuiteKind::NonRelations),
            other => Err(Error::Domain(format!("unknown suite {other}"))),
        }
    }
}

fn intervals(lo: usize, hi: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for p in lo..=hi {
        for q in p..=hi {
            v.push((p, q));
        }
    }
    v
}

/// The complete finite list of relation instances for the given kind and
/// rank (n for the type C kinds, alphabet size m for the type A kinds).
pub fn enumerate_relations(kind: SuiteKind, rank: usize) -> Result<RelationSuite> {
    if rank < 2 {
        return Err(Error::Domain("rank at least 2 required".into()));
    }
    let mut rels = Vec::new();
    match kind {
        SuiteKind::Jn => {
            let m = rank; // alphabet size; diagram [m-1]
            let gens = intervals(1, m - 1);
            for &(p, q) in &gens {
                let s = GroupWord(vec![Generator::CactusA { p, q }]);
                rels.push(Relation::holds(format!("1A s[{p},{q}]^2"), s.pow(2), GroupWord::default()));
            }
            for &(p, q) in &gens {
                for &(k, l) in &gens {
                    if q + 1 < k {
                        let a = Generator::CactusA { p, q };
                        let b = Generator::CactusA { p: k, q: l };
                        rels.push(Relation::holds(
                            format!("2A s[{p},{q}]s[{k},{l}]"),
                            GroupWord(vec![a, b]),
                            GroupWord(vec![b, a]),
                        ));
                    }
                }
            }
            for &(p, q) in &gens {
                for &(k, l) in &gens {
                    if p <= k && l <= q && (p, q) != (k, l) {
                        let outer = Generator::CactusA { p, q };
                        let inner = Generator::CactusA { p: k, q: l };
                        let refl = Generator::CactusA { p: p + q - l, q: p + q - k };
                        rels.push(Relation::holds(
                            format!("3A s[{p},{q}]s[{k},{l}]"),
                            GroupWord(vec![outer, inner]),
                            GroupWord(vec![refl, outer]),
                        ));
                    }
                }
            }
        }
        SuiteKind::Jsp | SuiteKind::VJ2n => {
            let n = rank;
            let mk = |p: usize, q: usize| -> Generator {
                if kind == SuiteKind::Jsp {
                    Generator::CactusC { p, q }
                } else {
                    Generator::VirtualCactus { p, q, n }
                }
            };
            let tag = if kind == SuiteKind::Jsp { "C" } else { "C~" };
            let gens = intervals(1, n);
            for &(p, q) in &gens {
                let s = GroupWord(vec![mk(p, q)]);
                rels.push(Relation::holds(format!("1{tag} s[{p},{q}]^2"), s.pow(2), GroupWord::default()));
            }
            for &(p, q) in &gens {
                for &(k, l) in &gens {
                    if q + 1 < k {
                        let (a, b) = (mk(p, q), mk(k, l));
                        rels.push(Relation::holds(
                            format!("2{tag} s[{p},{q}]s[{k},{l}]"),
                            GroupWord(vec![a, b]),
                            GroupWord(vec![b, a]),
                        ));
                    }
                }
            }
            // 3C(i): [k,l] inside [p,n]: commute
            for p in 1..=n {
                for &(k, l) in &intervals(p, n) {
                    let (a, b) = (mk(p, n), mk(k, l));
                    rels.push(Relation::holds(
                        format!("3{tag}i s[{p},{n}]s[{k},{l}]"),
                        GroupWord(vec![a, b]),
                        GroupWord(vec![b, a]),
                    ));
                }
            }
            // 3C(ii): [k,l] inside [p,q] within [n-1]: reversal
            for &(p, q) in &intervals(1, n - 1) {
                for &(k, l) in &intervals(p, q) {
                    let outer = mk(p, q);
                    let inner = mk(k, l);
                    let refl = mk(p + q - l, p + q - k);
                    rels.push(Relation::holds(
                        format!("3{tag}ii s[{p},{q}]s[{k},{l}]"),
                        GroupWord(vec![outer, inner]),
                        GroupWord(vec![refl, outer]),
                    ));
                }
            }
        }
        SuiteKind::BkA => {
            let m = rank;
            let t = |i: usize| Generator::BkA(i);
            for i in 1..m {
                rels.push(Relation::holds(
                    format!("tA{i}^2"),
                    GroupWord(vec![t(i)]).pow(2),
                    GroupWord::default(),
                ));
            }
            for i in 1..m {
                for jj in i + 2..m {
                    rels.push(Relation::holds(
                        format!("tA{i} tA{jj} commute"),
                        GroupWord(vec![t(i), t(jj)]),
                        GroupWord(vec![t(jj), t(i)]),
                    ));
                }
            }
            for i in 3..m {
                // (t1 q_[1,i])^4 = 1 for i > 2
                let w = GroupWord(vec![t(1), Generator::QA { j: 1, k: i }]);
                rels.push(Relation::holds(format!("(tA1 qA[1,{i}])^4"), w.pow(4), GroupWord::default()));
            }
            if m >= 3 {
                let w = GroupWord(vec![t(1), t(2)]);
                rels.push(Relation::holds("(tA1 tA2)^6", w.pow(6), GroupWord::default()));
            }
            for i in 1..m {
                for j in i + 2..m {
                    for k in j + 1..m {
                        // (t_i q_[j,k-1])^2 = 1 for i+1 < j < k
                        let w = GroupWord(vec![t(i), Generator::QA { j, k: k - 1 }]);
                        rels.push(Relation::holds(
                            format!("(tA{i} qA[{j},{}])^2", k - 1),
                            w.pow(2),
                            GroupWord::default(),
                        ));
                    }
                }
            }
        }
        SuiteKind::BkC => {
            let n = rank;
            let t = |i: usize| Generator::BkC(i);
            for i in 1..=2 * n - 1 {
                rels.push(Relation::holds(
                    format!("(t{i})^2"),
                    GroupWord(vec![t(i)]).pow(2),
                    GroupWord::default(),
                ));
            }
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        let w = GroupWord(vec![t(n + i - 1), t(n + j - 1)]);
                        rels.push(Relation::holds(
                            format!("(t{} t{})^2", n + i - 1, n + j - 1),
                            w.pow(2),
                            GroupWord::default(),
                        ));
                    }
                }
            }
            for i in 1..n {
                for j in 1..n {
                    if i + 1 < j {
                        let w = GroupWord(vec![t(i), t(j)]);
                        rels.push(Relation::holds(
                            format!("(t{i} t{j})^2"),
                            w.pow(2),
                            GroupWord::default(),
                        ));
                    }
                }
            }
            for i in 1..n {
                for j in 1..=n {
                    if i < n - j {
                        let w = GroupWord(vec![t(i), t(n + j - 1)]);
                        rels.push(Relation::holds(
                            format!("(t{i} t{})^2", n + j - 1),
                            w.pow(2),
                            GroupWord::default(),
                        ));
                    }
                }
            }
            for i in 1..n {
                for j in i + 2..=n {
                    for k in j + 1..=n {
                        let w = GroupWord(vec![t(i), Generator::QC { j, k: k - 1 }]);
                        rels.push(Relation::holds(
                            format!("(t{i} q[{j},{}])^2", k - 1),
                            w.pow(2),
                            GroupWord::default(),
                        ));
                    }
                }
            }
            for i in 1..n {
                for j in i + 2..=n {
                    let w = GroupWord(vec![t(i), Generator::QC { j, k: n }]);
                    rels.push(Relation::holds(
                        format!("(t{i} q[{j},{n}])^2"),
                        w.pow(2),
                        GroupWord::default(),
                    ));
                }
            }
            for i in 1..=n {
                for j in 1..=n {
                    let w = GroupWord(vec![t(n + i - 1), Generator::QC { j, k: n }]);
                    rels.push(Relation::holds(
                        format!("(t{} q[{j},{n}])^2", n + i - 1),
                        w.pow(2),
                        GroupWord::default(),
                    ));
                }
            }
            for i in 1..=n {
                for j in 1..=n {
                    for k in j + 1..=n {
                        if n - i + 1 < j {
                            let w = GroupWord(vec![t(n + i - 1), Generator::QC { j, k: k - 1 }]);
                            rels.push(Relation::holds(
                                format!("(t{} q[{j},{}])^2", n + i - 1, k - 1),
                                w.pow(2),
                                GroupWord::default(),
                            ));
                        }
                    }
                }
            }
            if n >= 3 {
                let w = GroupWord(vec![t(1), t(2)]);
                rels.push(Relation::holds("(t1 t2)^6", w.pow(6), GroupWord::default()));
            }
            // (t_{n-1} ... t_2 t_1 t_2 ... t_{n-1} t_n)^4 = 1
            let mut seq = Vec::new();
            for i in (1..n).rev() {
                seq.push(t(i));
            }
            for i in 2..n {
                seq.push(t(i));
            }
            seq.push(t(n));
            let name = if n == 2 { "(t1 t2)^4".to_string() } else { "long-element^4".to_string() };
            rels.push(Relation::holds(name, GroupWord(seq).pow(4), GroupWord::default()));
        }
        SuiteKind::BnReflections => {
            let n = rank;
            let x = |i: usize| Generator::ReflectionC(i);
            for i in 1..=n {
                rels.push(Relation::holds(
                    format!("x{i}^2"),
                    GroupWord(vec![x(i)]).pow(2),
                    GroupWord::default(),
                ));
            }
            for i in 1..=n {
                for j in i + 2..=n {
                    rels.push(Relation::holds(
                        format!("(x{i} x{j})^2"),
                        GroupWord(vec![x(i), x(j)]).pow(2),
                        GroupWord::default(),
                    ));
                }
            }
            for i in 1..=n.saturating_sub(2) {
                rels.push(Relation::holds(
                    format!("(x{i} x{})^3", i + 1),
                    GroupWord(vec![x(i), x(i + 1)]).pow(3),
                    GroupWord::default(),
                ));
            }
            rels.push(Relation::holds(
                format!("(x{} x{n})^4", n - 1),
                GroupWord(vec![x(n - 1), x(n)]).pow(4),
                GroupWord::default(),
            ));
        }
        SuiteKind::NonRelations => {
            let n = rank;
            let t = |i: usize| Generator::BkC(i);
            if n >= 3 {
                rels.push(Relation::fails(
                    "(t1 t2)^3 != 1",
                    GroupWord(vec![t(1), t(2)]).pow(3),
                    GroupWord::default(),
                ));
                rels.push(Relation::fails(
                    "braid t1 t2 t1 != t2 t1 t2",
                    GroupWord(vec![t(1), t(2), t(1)]),
                    GroupWord(vec![t(2), t(1), t(2)]),
                ));
            } else {
                rels.push(Relation::fails(
                    "weyl-long != full involution",
                    GroupWord(vec![t(2), t(1), t(2), t(1)]),
                    GroupWord(vec![Generator::QC { j: 1, k: 2 }]),
                ));
            }
        }
    }
    Ok(RelationSuite { name: format!("{kind:?}"), relations: rels })
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Witness {
    pub relation: String,
    pub vertex: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct RelationReport {
    pub name: String,
    pub expect_equal: bool,
    pub checked: usize,
    pub witnesses: Vec<Witness>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        if self.expect_equal {
            self.witnesses.is_empty()
        } else {
            !self.witnesses.is_empty()
        }
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Report {
    pub suite: String,
    pub universe: String,
    pub relations: Vec<RelationReport>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|r| r.passed())
    }

    pub fn total_checks(&self) -> usize {
        self.relations.iter().map(|r| r.checked).sum()
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("suite {} on {}\n", self.suite, self.universe);
        for r in &self.relations {
            let status = match (r.expect_equal, r.witnesses.is_empty()) {
                (true, true) => "PASS",
                (true, false) => "FAIL",
                (false, false) => "WITNESS",
                // a probe may find its witness on another universe
                (false, true) => "none",
            };
            let kind = if r.expect_equal { "" } else { " (witness expected)" };
            s.push_str(&format!(
                "  [{status}] {}{kind}: {} checks, {} witness(es)\n",
                r.name,
                r.checked,
                r.witnesses.len()
            ));
            for w in r.witnesses.iter().take(1) {
                s.push_str(&format!(
                    "        at {}: lhs -> {}, rhs -> {}\n",
                    w.vertex, w.lhs, w.rhs
                ));
            }
        }
        s.push_str(&format!(
            "  {}: {} relation instances, {} action checks\n",
            if self.passed() { "ALL PASS" } else { "FAILURES PRESENT" },
            self.relations.len(),
            self.total_checks()
        ));
        s
    }
}

/// Checks every relation on every vertex; failures are data (witnesses), not
/// errors. Witnesses are recorded in canonical vertex order.
pub fn verify(suite: &RelationSuite, universe_name: &str, vertices: &[SkewTableau]) -> Result<Report> {
    let mut out = Vec::with_capacity(suite.relations.len());
    for rel in &suite.relations {
        let mut witnesses = Vec::new();
        for v in vertices {
            let lhs = act(&rel.lhs, v)?;
            let rhs = act(&rel.rhs, v)?;
            if lhs != rhs {
                witnesses.push(Witness {
                    relation: rel.name.clone(),
                    vertex: v.render(),
                    lhs: lhs.render(),
                    rhs: rhs.render(),
                });
                if !rel.expect_equal {
                    break; // one witness suffices for a non-relation probe
                }
            }
        }
        out.push(RelationReport {
            name: rel.name.clone(),
            expect_equal: rel.expect_equal,
            checked: vertices.len(),
            witnesses,
        });
    }
    Ok(Report {
        suite: suite.name.clone(),
        universe: universe_name.to_string(),
        relations: out,
    })
}

/// The folding injection on words: s_[p,q] with q < n maps to the commuting
/// pair s_[p,q] s_[2n-q,2n-p] in the type A cactus on [2n-1]; s_[p,n] maps
/// to s_[p,2n-p].
pub fn fold_gamma(word: &GroupWord, n: usize) -> Result<GroupWord> {
    let mut out = Vec::new();
    for g in &word.0 {
        match *g {
            Generator::CactusC { p, q } => {
                if q == n {
                    out.push(Generator::CactusA { p, q: 2 * n - p });
                } else {
                    out.push(Generator::CactusA { p, q });
                    out.push(Generator::CactusA { p: 2 * n - q, q: 2 * n - p });
                }
            }
            _ => {
                return Err(Error::Domain(
                    "folding is defined on symplectic cactus generators".into(),
                ))
            }
        }
    }
    Ok(GroupWord(out))
}

/// All straight KN (or SSYT) universes of the given rank with |lambda| <=
/// max_cells, as (shape, vertices) pairs in a deterministic order.
pub fn universes(alphabet: Alphabet, max_cells: usize) -> Result<Vec<(Shape, Vec<SkewTableau>)>> {
    let max_rows = match alphabet {
        Alphabet::C { n } => n,
        Alphabet::A { m } => m,
    };
    let mut out = Vec::new();
    for lam in Shape::all_up_to(max_cells, max_rows) {
        let g = crate::crystal::generate_full(alphabet, &lam)?;
        out.push((lam, g.vertices));
    }
    Ok(out)
}
