//! Crystal operators via the signature rule, graph generation, Levi
//! branching, components, and characters.

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::tableau::SkewTableau;
use std::collections::{BTreeMap, HashMap, VecDeque};

/// Signature classification of a letter for color i: +1, -1 or 0.
fn sign_of(a: &Alphabet, i: usize, x: Letter) -> i8 {
    match *a {
        Alphabet::C { n } => {
            let i = i as i32;
            if i < n as i32 {
                if x == i || x == -(i + 1) {
                    1
                } else if x == i + 1 || x == -i {
                    -1
                } else {
                    0
                }
            } else if x == n as i32 {
                1
            } else if x == -(n as i32) {
                -1
            } else {
                0
            }
        }
        Alphabet::A { .. } => {
            let i = i as i32;
            if x == i {
                1
            } else if x == i + 1 {
                -1
            } else {
                0
            }
        }
    }
}

fn raise_letter(a: &Alphabet, i: usize, x: Letter) -> Letter {
    // e_i: i+1 -> i, -i -> -(i+1); for i = n: -n -> n.
    match *a {
        Alphabet::C { n } if i == n => n as i32,
        _ => x - 1,
    }
}

fn lower_letter(a: &Alphabet, i: usize, x: Letter) -> Letter {
    // f_i: i -> i+1, -(i+1) -> -i; for i = n: n -> -n.
    match *a {
        Alphabet::C { n } if i == n => -(n as i32),
        _ => x + 1,
    }
}

/// Uncancelled signature positions of color i on the reading word:
/// (surviving minus cell list, surviving plus cell list), in word order.
fn signature(t: &SkewTableau, i: usize) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    let a = &t.alphabet;
    let mut minus = Vec::new();
    let mut plus: Vec<(usize, usize)> = Vec::new();
    for (r, c, x) in t.reading_cells() {
        match sign_of(a, i, x) {
            1 => plus.push((r, c)),
            -1 => {
                if plus.is_empty() {
                    minus.push((r, c));
                } else {
                    plus.pop();
                }
            }
            _ => {}
        }
    }
    (minus, plus)
}

fn check_color(a: &Alphabet, i: usize) -> Result<()> {
    if a.colors().contains(&i) {
        Ok(())
    } else {
        Err(Error::BadColor(i))
    }
}

/// Lowering operator f_i; None when it annihilates.
pub fn f(t: &SkewTableau, i: usize) -> Result<Option<SkewTableau>> {
    check_color(&t.alphabet, i)?;
    let (_, plus) = signature(t, i);
    let Some(&(r, c)) = plus.first() else { return Ok(None) };
    let mut out = t.clone();
    let x = t.entry(r, c).unwrap();
    out.set_entry(r, c, lower_letter(&t.alphabet, i, x));
    debug_assert!(out.check_semistandard().is_ok(), "f_{i} broke {}", t.render());
    Ok(Some(out))
}

/// Raising operator e_i; None when it annihilates.
pub fn e(t: &SkewTableau, i: usize) -> Result<Option<SkewTableau>> {
    check_color(&t.alphabet, i)?;
    let (minus, _) = signature(t, i);
    let Some(&(r, c)) = minus.last() else { return Ok(None) };
    let mut out = t.clone();
    let x = t.entry(r, c).unwrap();
    out.set_entry(r, c, raise_letter(&t.alphabet, i, x));
    debug_assert!(out.check_semistandard().is_ok(), "e_{i} broke {}", t.render());
    Ok(Some(out))
}

/// String lengths (eps_i, phi_i) from the signature rule.
pub fn eps_phi(t: &SkewTableau, i: usize) -> Result<(usize, usize)> {
    check_color(&t.alphabet, i)?;
    let (minus, plus) = signature(t, i);
    Ok((minus.len(), plus.len()))
}

pub fn is_highest(t: &SkewTableau, colors: &[usize]) -> Result<bool> {
    for &i in colors {
        if eps_phi(t, i)?.0 != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone)]
pub struct CrystalGraph {
    pub alphabet: Alphabet,
    pub colors: Vec<usize>,
    pub vertices: Vec<SkewTableau>,
    /// (source id, color, target id)
    pub arrows: Vec<(usize, usize, usize)>,
    index: HashMap<String, usize>,
    /// True when the seed was not a highest weight vertex.
    pub partial: bool,
}

impl CrystalGraph {
    pub fn id_of(&self, t: &SkewTableau) -> Option<usize> {
        self.index.get(&t.render()).copied()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Component id per vertex (smallest vertex id in the component).
    pub fn components(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &(s, _, t) in &self.arrows {
            let (a, b) = (find(&mut parent, s), find(&mut parent, t));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        (0..self.vertices.len()).map(|v| find(&mut parent, v)).collect()
    }

    /// Unique source (no incoming arrow) of the component of `v`.
    pub fn highest_of(&self, v: usize) -> Result<usize> {
        self.extreme_of(v, true)
    }

    /// Unique sink (no outgoing arrow) of the component of `v`.
    pub fn lowest_of(&self, v: usize) -> Result<usize> {
        self.extreme_of(v, false)
    }

    fn extreme_of(&self, v: usize, source: bool) -> Result<usize> {
        let comp = self.components();
        let target = comp[v];
        let mut blocked = vec![false; self.vertices.len()];
        for &(s, _, t) in &self.arrows {
            blocked[if source { t } else { s }] = true;
        }
        let found: Vec<usize> = (0..self.vertices.len())
            .filter(|&u| comp[u] == target && !blocked[u])
            .collect();
        if found.len() != 1 {
            return Err(Error::Invariant(format!(
                "component of vertex {v} has {} {}s",
                found.len(),
                if source { "source" } else { "sink" }
            )));
        }
        Ok(found[0])
    }

    /// Restriction to the colors in J; vertices unchanged.
    pub fn branch(&self, j_colors: &[usize]) -> Result<CrystalGraph> {
        for &i in j_colors {
            if !self.colors.contains(&i) {
                return Err(Error::BadColor(i));
            }
        }
        let arrows = self
            .arrows
            .iter()
            .copied()
            .filter(|&(_, i, _)| j_colors.contains(&i))
            .collect();
        Ok(CrystalGraph {
            alphabet: self.alphabet,
            colors: j_colors.to_vec(),
            vertices: self.vertices.clone(),
            arrows,
            index: self.index.clone(),
            partial: self.partial,
        })
    }

    /// The character as a map from weight vectors to multiplicities.
    pub fn character(&self) -> BTreeMap<Vec<i64>, usize> {
        let mut ch = BTreeMap::new();
        for v in &self.vertices {
            *ch.entry(v.weight()).or_insert(0) += 1;
        }
        ch
    }

    pub fn to_dot(&self) -> String {
        const PALETTE: [&str; 8] =
            ["blue", "red", "forestgreen", "orange", "purple", "brown", "cyan4", "magenta"];
        let mut s = String::from("digraph crystal {\n  rankdir=TB;\n  node [shape=box, fontname=monospace];\n");
        for (i, v) in self.vertices.iter().enumerate() {
            s.push_str(&format!("  v{} [label=\"{}\"];\n", i, v.render()));
        }
        for &(src, i, dst) in &self.arrows {
            let color = PALETTE[(i - 1) % PALETTE.len()];
            s.push_str(&format!("  v{src} -> v{dst} [label=\"{i}\", color={color}];\n"));
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "alphabet": format!("{}", self.alphabet),
            "colors": self.colors,
            "vertices": self.vertices.iter().map(|v| v.render()).collect::<Vec<_>>(),
            "weights": self.vertices.iter().map(|v| v.weight()).collect::<Vec<_>>(),
            "arrows": self.arrows,
        })
    }
}

/// BFS closure of the seed under all f_i, i in `colors` (ascending, FIFO, so
/// the vertex order is reproducible). Type C seeds must be KN tableaux.
pub fn generate(seed: &SkewTableau, colors: &[usize]) -> Result<CrystalGraph> {
    let alphabet = seed.alphabet;
    for &i in colors {
        check_color(&alphabet, i)?;
    }
    if alphabet.is_c() {
        seed.check_kn()?;
    } else {
        seed.check_semistandard()?;
    }
    let mut colors = colors.to_vec();
    colors.sort_unstable();
    colors.dedup();
    let partial = !is_highest(seed, &colors)?;

    let mut vertices = vec![seed.clone()];
    let mut index = HashMap::new();
    index.insert(seed.render(), 0usize);
    let mut arrows = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &i in &colors {
            let t = vertices[v].clone();
            if let Some(next) = f(&t, i)? {
                let key = next.render();
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = vertices.len();
                        vertices.push(next);
                        index.insert(key, id);
                        queue.push_back(id);
                        id
                    }
                };
                arrows.push((v, i, id));
            }
        }
    }
    Ok(CrystalGraph { alphabet, colors, vertices, arrows, index, partial })
}

/// Generates the full crystal of all KN tableaux of shape `lambda`
/// (or SSYT for type A) from its Yamanouchi highest weight tableau.
pub fn generate_full(alphabet: Alphabet, lambda: &crate::shape::Shape) -> Result<CrystalGraph> {
    let seed = SkewTableau::yamanouchi(alphabet, lambda);
    let colors: Vec<usize> = alphabet.colors().collect();
    generate(&seed, &colors)
}
