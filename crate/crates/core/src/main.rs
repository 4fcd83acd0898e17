use clap::{Args, Parser, Subcommand};
use kncrystal::cactus::{enumerate_relations, verify, SuiteKind};
use kncrystal::word::KnuthRule;
use kncrystal::{crystal, fixtures, involutions, type_a, virt, word};
use kncrystal::{Alphabet, Shape, SkewTableau, Word};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kncrystal",
    about = "Kashiwara-Nakashima tableau crystals: symplectic jeu de taquin, involutions, virtualization, relation verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Clone)]
struct AlphabetArg {
    /// Rank n of the symplectic alphabet 1 < ... < n < -n < ... < -1
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Use the linear alphabet 1..=M instead (type A)
    #[arg(long, value_name = "M")]
    type_a: Option<usize>,
}

impl AlphabetArg {
    fn get(&self) -> Alphabet {
        match self.type_a {
            Some(m) => Alphabet::a(m),
            None => Alphabet::c(self.n),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect tableaux: KN check, column split, weight
    Tab {
        #[command(subcommand)]
        what: TabCmd,
    },
    /// Words: Knuth rewrites and plactic normal forms
    Word {
        #[command(subcommand)]
        what: WordCmd,
    },
    /// Build and export crystal graphs
    Crystal {
        #[command(subcommand)]
        what: CrystalCmd,
    },
    /// Apply a sequence of crystal operators, e.g. f1,f2,e1
    Op {
        #[command(flatten)]
        alpha: AlphabetArg,
        /// Comma-separated operators (f<i> or e<i>)
        ops: String,
        /// Tableau in canonical text (stdin when omitted)
        tableau: Option<String>,
    },
    /// Jeu de taquin slides, one step at a time or complete
    Slide {
        #[command(subcommand)]
        what: SlideCmd,
    },
    /// Involutions: evacuation, reversal, partial involutions, reflections,
    /// Bender-Knuth
    Inv {
        #[command(subcommand)]
        what: InvCmd,
    },
    /// Virtualization into type A
    Virt {
        #[command(subcommand)]
        what: VirtCmd,
    },
    /// Run a relation suite exhaustively over small crystals
    Verify {
        /// Suite: jsp, jn, vj2n, bka, bkc, bn, nonrel
        #[arg(long)]
        suite: String,
        /// Rank n (type C suites) or alphabet size (type A suites)
        #[arg(long)]
        rank: usize,
        /// Verify on all shapes with at most this many cells
        #[arg(long, default_value_t = 4)]
        max_cells: usize,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Replay a built-in worked example and check every intermediate
    Fixture {
        #[command(subcommand)]
        what: FixtureCmd,
    },
}

#[derive(Subcommand)]
enum TabCmd {
    /// Check the KN conditions (admissible columns, semistandard split)
    Check {
        #[command(flatten)]
        alpha: AlphabetArg,
        tableau: Option<String>,
    },
    /// Print the split form spl(T)
    Split {
        #[command(flatten)]
        alpha: AlphabetArg,
        tableau: Option<String>,
    },
    /// Print the weight vector
    Weight {
        #[command(flatten)]
        alpha: AlphabetArg,
        tableau: Option<String>,
        /// Emit JSON (includes the tableau export)
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum WordCmd {
    /// Apply one Knuth rewrite at a position
    Knuth {
        #[command(flatten)]
        alpha: AlphabetArg,
        /// Rule: r1a, r1b, r2a, r2b, r3contract, r3dilate:<z>
        #[arg(long)]
        rule: String,
        /// 0-based position in the word
        #[arg(long)]
        pos: usize,
        /// The word, letters separated by spaces (e.g. "2 3 -2 -3 1")
        word: String,
    },
    /// Print the plactic normal form (symplectic rectification)
    Rect {
        #[command(flatten)]
        alpha: AlphabetArg,
        word: String,
    },
}

#[derive(Subcommand)]
enum CrystalCmd {
    /// Generate the crystal from a highest weight shape or a seed tableau
    Build(CrystalArgs),
    /// DOT export
    Dot(CrystalArgs),
    /// JSON export
    Json(CrystalArgs),
    /// Character: weight multiplicities
    Character(CrystalArgs),
}

#[derive(Args)]
struct CrystalArgs {
    #[command(flatten)]
    alpha: AlphabetArg,
    /// Highest weight shape, e.g. 2,1
    #[arg(long, conflicts_with = "seed")]
    shape: Option<String>,
    /// Seed tableau (generates its down-set when not highest weight)
    #[arg(long)]
    seed: Option<String>,
    /// Restrict to these colors, e.g. 1,2
    #[arg(long)]
    colors: Option<String>,
    /// Write the export to a file instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum InvCmd {
    /// Full evacuation (straight shapes)
    Evac {
        #[command(flatten)]
        alpha: AlphabetArg,
        tableau: Option<String>,
    },
    /// Full reversal (skew shapes)
    Reversal {
        #[command(flatten)]
        alpha: AlphabetArg,
        tableau: Option<String>,
    },
    /// Partial involution on a Dynkin interval p,q
    Partial {
        #[command(flatten)]
        alpha: AlphabetArg,
        #[arg(long, value_name = "p,q")]
        interval: String,
        tableau: Option<String>,
    },
    /// Bender-Knuth involution (type C: 1..=2n-1; type A: 1..=m-1)
    Bk {
        #[command(flatten)]
        alpha: AlphabetArg,
        #[arg(long)]
        i: usize,
        tableau: Option<String>,
    },
    /// Crystal reflection operator
    Reflect {
        #[command(flatten)]
        alpha: AlphabetArg,
        #[arg(long)]
        i: usize,
        tableau: Option<String>,
    },
}

#[derive(Subcommand)]
enum VirtCmd {
    /// Embed a straight KN tableau into type A (barred rendering)
    Embed {
        #[command(flatten)]
        alpha: AlphabetArg,
        tableau: Option<String>,
    },
    /// Invert the embedding; --shape names lambda
    Invert {
        #[command(flatten)]
        alpha: AlphabetArg,
        #[arg(long)]
        shape: String,
        /// Virtual tableau in barred convention
        tableau: Option<String>,
    },
    /// Verify the commuting square for an interval
    Check {
        #[command(flatten)]
        alpha: AlphabetArg,
        #[arg(long, value_name = "p,q")]
        interval: String,
        tableau: Option<String>,
    },
}

#[derive(Subcommand)]
enum SlideCmd {
    /// One elementary slide of a punctured tableau (puncture written "*")
    Elementary {
        #[command(flatten)]
        alpha: AlphabetArg,
        tableau: Option<String>,
    },
    /// A complete slide from the inner corner r,c (0-based)
    Complete {
        #[command(flatten)]
        alpha: AlphabetArg,
        #[arg(long, value_name = "r,c")]
        corner: String,
        tableau: Option<String>,
    },
    /// A complete slide reduced to the interval [+-j, n]; the puncture marks
    /// the corner and the exit stays visible
    Reduced {
        #[command(flatten)]
        alpha: AlphabetArg,
        #[arg(long)]
        j: usize,
        tableau: Option<String>,
    },
    /// Rectify a skew tableau completely
    Rect {
        #[command(flatten)]
        alpha: AlphabetArg,
        tableau: Option<String>,
    },
}

#[derive(Subcommand)]
enum FixtureCmd {
    /// Run one fixture (or "all")
    Run { name: String },
    /// List fixture names
    List,
}

fn read_stdin() -> kncrystal::Result<String> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| kncrystal::Error::Domain(format!("stdin: {e}")))?;
    Ok(buf)
}

fn read_tableau(alpha: &AlphabetArg, arg: &Option<String>) -> kncrystal::Result<SkewTableau> {
    let text = match arg {
        Some(s) => s.clone(),
        None => read_stdin()?,
    };
    SkewTableau::parse(alpha.get(), &text)
}

fn parse_interval(s: &str) -> kncrystal::Result<(usize, usize)> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(kncrystal::Error::Domain(format!("interval `{s}` is not of the form p,q")));
    }
    let p = parts[0].trim().parse().map_err(|_| kncrystal::Error::Domain("bad interval".into()))?;
    let q = parts[1].trim().parse().map_err(|_| kncrystal::Error::Domain("bad interval".into()))?;
    Ok((p, q))
}

fn parse_shape(s: &str) -> kncrystal::Result<Shape> {
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| kncrystal::Error::Domain(format!("bad shape `{s}`")))?;
    Shape::new(parts)
}

fn emit(out: &Option<std::path::PathBuf>, data: &str) -> kncrystal::Result<()> {
    match out {
        Some(path) => std::fs::write(path, data)
            .map_err(|e| kncrystal::Error::Domain(format!("write {}: {e}", path.display()))),
        None => {
            println!("{data}");
            Ok(())
        }
    }
}

fn build_graph(args: &CrystalArgs) -> kncrystal::Result<crystal::CrystalGraph> {
    let a = args.alpha.get();
    let seed = match (&args.shape, &args.seed) {
        (Some(s), None) => SkewTableau::yamanouchi(a, &parse_shape(s)?),
        (None, Some(t)) => SkewTableau::parse(a, t)?,
        _ => return Err(kncrystal::Error::Domain("give exactly one of --shape/--seed".into())),
    };
    let colors: Vec<usize> = match &args.colors {
        Some(c) => c
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| kncrystal::Error::Domain("bad colors".into()))?,
        None => a.colors().collect(),
    };
    crystal::generate(&seed, &colors)
}

fn run() -> kncrystal::Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Cmd::Tab { what } => match what {
            TabCmd::Check { alpha, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                match t.check_kn() {
                    Ok(()) => {
                        println!("KN: yes ({})", t.render());
                        Ok(0)
                    }
                    Err(e) => {
                        println!("not KN: {e}");
                        Ok(1)
                    }
                }
            }
            TabCmd::Split { alpha, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                println!("{}", t.split_form()?.render());
                Ok(0)
            }
            TabCmd::Weight { alpha, tableau, json } => {
                let t = read_tableau(&alpha, &tableau)?;
                if json {
                    let mut j = t.to_json();
                    j["weight"] = serde_json::json!(t.weight());
                    println!("{}", serde_json::to_string_pretty(&j).unwrap());
                } else {
                    println!("{:?}", t.weight());
                }
                Ok(0)
            }
        },
        Cmd::Word { what } => match what {
            WordCmd::Knuth { alpha, rule, pos, word: w } => {
                let w = Word::parse(alpha.get(), &w)?;
                let rule: KnuthRule = rule.parse()?;
                let out = word::knuth_step(&w, pos, rule)?;
                println!("{}", out.render());
                Ok(0)
            }
            WordCmd::Rect { alpha, word: w } => {
                let w = Word::parse(alpha.get(), &w)?;
                println!("{}", word::plactic_class(&w)?.render());
                Ok(0)
            }
        },
        Cmd::Crystal { what } => match what {
            CrystalCmd::Build(args) => {
                let g = build_graph(&args)?;
                let mut s = format!(
                    "{} vertices, {} arrows{}\n",
                    g.len(),
                    g.arrows.len(),
                    if g.partial { " (seed was not highest weight)" } else { "" }
                );
                for (i, v) in g.vertices.iter().enumerate() {
                    s.push_str(&format!("v{i}: {}\n", v.render()));
                }
                for &(src, c, dst) in &g.arrows {
                    s.push_str(&format!("v{src} -{c}-> v{dst}\n"));
                }
                emit(&args.out, s.trim_end())?;
                Ok(0)
            }
            CrystalCmd::Dot(args) => {
                let g = build_graph(&args)?;
                emit(&args.out, &g.to_dot())?;
                Ok(0)
            }
            CrystalCmd::Json(args) => {
                let g = build_graph(&args)?;
                emit(&args.out, &serde_json::to_string_pretty(&g.to_json()).unwrap())?;
                Ok(0)
            }
            CrystalCmd::Character(args) => {
                let g = build_graph(&args)?;
                let mut s = String::new();
                for (wt, mult) in g.character() {
                    s.push_str(&format!("{wt:?}: {mult}\n"));
                }
                emit(&args.out, s.trim_end())?;
                Ok(0)
            }
        },
        Cmd::Op { alpha, ops, tableau } => {
            let mut t = read_tableau(&alpha, &tableau)?;
            for op in ops.split(',') {
                let op = op.trim();
                let (kind, idx) = op.split_at(1);
                let i: usize = idx
                    .parse()
                    .map_err(|_| kncrystal::Error::Domain(format!("bad operator `{op}`")))?;
                let next = match kind {
                    "f" => crystal::f(&t, i)?,
                    "e" => crystal::e(&t, i)?,
                    _ => return Err(kncrystal::Error::Domain(format!("bad operator `{op}`"))),
                };
                match next {
                    Some(x) => t = x,
                    None => {
                        println!("0 (annihilated at {op})");
                        return Ok(0);
                    }
                }
            }
            println!("{}", t.render());
            Ok(0)
        }
        Cmd::Slide { what } => match what {
            SlideCmd::Elementary { alpha, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                let (out, step) = kncrystal::sjdt::elementary_slide(&t)?;
                println!("{}   ({step:?})", out.render());
                Ok(0)
            }
            SlideCmd::Complete { alpha, corner, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                let (r, c) = parse_interval(&corner)?;
                let (out, ev) = kncrystal::sjdt::complete_slide(&t, (r, c))?;
                println!("{}", out.render());
                if let kncrystal::sjdt::SlideEvent::Slide { exit, contraction, .. } = ev {
                    println!("exit: ({},{})", exit.0, exit.1);
                    if let Some(c) = contraction {
                        println!("contracted ({}, -{}) in column {}", c.z, c.z, c.col);
                    }
                }
                Ok(0)
            }
            SlideCmd::Reduced { alpha, j, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                println!("{}", kncrystal::sjdt::reduced_complete_slide(&t, j)?.render());
                Ok(0)
            }
            SlideCmd::Rect { alpha, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                println!("{}", kncrystal::sjdt::rectify(&t)?.render());
                Ok(0)
            }
        },
        Cmd::Inv { what } => match what {
            InvCmd::Evac { alpha, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                let out = if t.alphabet.is_c() {
                    involutions::evacuation_c(&t)?
                } else {
                    type_a::evacuation(&t)?
                };
                println!("{}", out.render());
                Ok(0)
            }
            InvCmd::Reversal { alpha, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                let out = if t.alphabet.is_c() {
                    involutions::reversal_c(&t)?
                } else {
                    type_a::reversal(&t)?
                };
                println!("{}", out.render());
                Ok(0)
            }
            InvCmd::Partial { alpha, interval, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                let (p, q) = parse_interval(&interval)?;
                let out = if t.alphabet.is_c() {
                    involutions::partial_xi_c(&t, p, q)?
                } else {
                    type_a::partial_xi(&t, &[(p, q)])?
                };
                println!("{}", out.render());
                Ok(0)
            }
            InvCmd::Bk { alpha, i, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                let out = if t.alphabet.is_c() {
                    involutions::symplectic_bk(&t, i)?
                } else {
                    type_a::bender_knuth(&t, i)?
                };
                println!("{}", out.render());
                Ok(0)
            }
            InvCmd::Reflect { alpha, i, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                println!("{}", involutions::reflection_xi(&t, i)?.render());
                Ok(0)
            }
        },
        Cmd::Virt { what } => match what {
            VirtCmd::Embed { alpha, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                let n = alpha.n;
                let e = virt::embed(&t)?;
                println!("{}", virt::to_c(&e, n)?.render());
                Ok(0)
            }
            VirtCmd::Invert { alpha, shape, tableau } => {
                let n = alpha.n;
                let text = match &tableau {
                    Some(s) => s.clone(),
                    None => read_stdin()?,
                };
                let p = virt::parse_virtual(n, &text)?;
                let lambda = parse_shape(&shape)?;
                println!("{}", virt::invert(&p, &lambda, n)?.render());
                Ok(0)
            }
            VirtCmd::Check { alpha, interval, tableau } => {
                let t = read_tableau(&alpha, &tableau)?;
                let (p, q) = parse_interval(&interval)?;
                let ok = virt::check_diagram(&t, p, q)?;
                println!("commuting square for [{p},{q}]: {}", if ok { "PASS" } else { "FAIL" });
                Ok(if ok { 0 } else { 1 })
            }
        },
        Cmd::Verify { suite, rank, max_cells, json } => {
            let kind: SuiteKind = suite.parse()?;
            let alphabet = match kind {
                SuiteKind::Jn | SuiteKind::BkA => Alphabet::a(rank),
                SuiteKind::VJ2n => Alphabet::a(2 * rank),
                _ => Alphabet::c(rank),
            };
            let suite = enumerate_relations(kind, rank)?;
            // a relation must hold on every universe; a probed non-relation
            // needs a witness in at least one
            let mut equal_ok = true;
            let mut witness_found = vec![false; suite.relations.len()];
            let mut reports = Vec::new();
            for (lam, verts) in kncrystal::cactus::universes(alphabet, max_cells)? {
                let rep = verify(&suite, &format!("shape {lam} over {alphabet}"), &verts)?;
                for (k, r) in rep.relations.iter().enumerate() {
                    if r.expect_equal {
                        equal_ok &= r.witnesses.is_empty();
                    } else if !r.witnesses.is_empty() {
                        witness_found[k] = true;
                    }
                }
                if json {
                    reports.push(rep);
                } else {
                    print!("{}", rep.render_text());
                }
            }
            let probes_ok = suite
                .relations
                .iter()
                .enumerate()
                .all(|(k, r)| r.expect_equal || witness_found[k]);
            let all_pass = equal_ok && probes_ok;
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            } else {
                println!(
                    "overall: {}",
                    if all_pass { "ALL PASS" } else { "FAILURES PRESENT" }
                );
            }
            Ok(if all_pass { 0 } else { 1 })
        }
        Cmd::Fixture { what } => match what {
            FixtureCmd::Run { name } => {
                let names: Vec<&str> = if name == "all" {
                    fixtures::NAMES.to_vec()
                } else {
                    vec![name.as_str()]
                };
                let mut ok = true;
                for n in names {
                    let rep = fixtures::run(n)?;
                    print!("{}", rep.render_text());
                    ok &= rep.passed();
                }
                Ok(if ok { 0 } else { 1 })
            }
            FixtureCmd::List => {
                for n in fixtures::NAMES {
                    println!("{n}");
                }
                Ok(0)
            }
        },
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            let usage = matches!(
                e,
                kncrystal::Error::Parse { .. }
                    | kncrystal::Error::BadLetter(_)
                    | kncrystal::Error::BadShape(_)
                    | kncrystal::Error::BadColor(_)
                    | kncrystal::Error::BadInterval(..)
                    | kncrystal::Error::Domain(_)
            );
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}
