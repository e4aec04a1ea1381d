// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The `modalkit` command line.
//!
//! Every subcommand prints a deterministic text report, or a JSON object
//! with `--json`. Exit codes: 0 success, 1 when the answer is negative
//! (invalid, not isomorphic, violations found, ...), 2 on any error, which
//! is printed as a single `error: ...` line on stderr.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{self, ModalAlgebra};
use crate::bits;
use crate::definability::{self, Violation};
use crate::error::{Error, Result};
use crate::firstorder::{self, parse_fo};
use crate::formula::{parse, Formula};
use crate::frame::{self, BoundedMorphism, Frame, Model, UltrafilterChoice, Verdict};
use crate::io::{self, AlgebraJson, FrameJson};
use crate::limits::Limits;
use crate::variety::{self, AxiomVerdict};

/// Environment variable overriding `max_worlds`.
pub const MAX_WORLDS_ENV: &str = "MODALKIT_MAX_WORLDS";

#[derive(Parser, Debug)]
#[command(
    name = "modalkit",
    version,
    about = "Kripke frames, modal algebras and their duality"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// TOML file overriding search caps (see `Limits`).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Structure {
    #[arg(long)]
    frame: Option<PathBuf>,
    #[arg(long)]
    model: Option<PathBuf>,
    #[arg(long)]
    algebra: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Frame validity, truth in a model, or validity in an algebra.
    Check {
        #[command(flatten)]
        on: Structure,
        #[arg(long)]
        formula: String,
        /// World to evaluate at (models only; default every world).
        #[arg(long)]
        world: Option<usize>,
    },
    /// Whether a frame validates every axiom in a file.
    Validates {
        #[arg(long)]
        frame: PathBuf,
        #[arg(long)]
        axioms: PathBuf,
    },
    /// Round trip cf(cm(F)) for a frame, or em(A) with the embedding for an algebra.
    Duality {
        #[arg(long, conflicts_with = "algebra", required_unless_present = "algebra")]
        frame: Option<PathBuf>,
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Complex algebra of a frame.
    Cm {
        #[arg(long)]
        frame: PathBuf,
    },
    /// Canonical frame of an algebra.
    Cf {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Canonical embedding algebra cm(cf(A)).
    Em {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Free algebra of a finitely generated variety.
    Free {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long, short = 'n')]
        generators: usize,
    },
    /// Validity of the axioms on the level-n canonical frame.
    Canonicity {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long, short = 'n')]
        generators: usize,
    },
    /// Compare cf(A^I) with |I| copies of cf(A), A the free algebra.
    ProbePower {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long, short = 'n')]
        generators: usize,
        #[arg(long)]
        index_count: usize,
    },
    /// Standard translation of a formula at v0.
    Translate {
        #[arg(long)]
        formula: String,
        /// Also compare modal truth and first-order satisfaction here.
        #[arg(long, requires = "world")]
        model: Option<PathBuf>,
        #[arg(long, requires = "model")]
        world: Option<usize>,
    },
    /// First-order satisfaction in a frame or model.
    FoCheck {
        #[arg(long, conflicts_with = "model", required_unless_present = "model")]
        frame: Option<PathBuf>,
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long)]
        sentence: String,
        /// Binds v0 to this world.
        #[arg(long)]
        world: Option<usize>,
    },
    /// Quasi-modal recognizer.
    QmCheck {
        #[arg(long)]
        sentence: String,
    },
    /// Bounded morphisms between frames: search, or check one map.
    Morphisms {
        #[arg(long)]
        source: PathBuf,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        surjective: bool,
        #[arg(long, value_delimiter = ',', conflicts_with = "surjective")]
        map: Option<Vec<usize>>,
    },
    /// Frame isomorphism.
    Iso {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Disjoint union of frames.
    Union {
        #[arg(long = "frame", required = true)]
        frames: Vec<PathBuf>,
    },
    /// Subframe generated by a set of worlds.
    Subframe {
        #[arg(long)]
        frame: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        seeds: Vec<usize>,
    },
    /// Ultraproduct of frames over a principal ultrafilter.
    Ultraproduct {
        #[arg(long = "frame", required = true)]
        frames: Vec<PathBuf>,
        #[arg(
            long,
            conflicts_with = "nonprincipal",
            required_unless_present = "nonprincipal"
        )]
        index: Option<usize>,
        #[arg(long)]
        nonprincipal: bool,
    },
    /// Closure of a frame class under the frame constructions.
    GtClosure {
        #[arg(long)]
        class: PathBuf,
        #[arg(long)]
        bound: usize,
    },
    /// Search for a formula defining a frame class.
    GtSearch {
        #[arg(long)]
        class: PathBuf,
        #[arg(long)]
        universe: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 1)]
        vars: u32,
    },
}

struct Report {
    text: String,
    json: Value,
    code: i32,
}

impl Report {
    fn new(ok: bool, text: String, json: Value) -> Report {
        Report {
            text,
            json,
            code: if ok { 0 } else { 1 },
        }
    }
}

/// Runs one invocation. `args` includes the program name. Returns the exit
/// code.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered
                .lines()
                .next()
                .unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    let report = limits(cli.config.as_deref()).and_then(|l| run(cli.command, &l));
    match report {
        Ok(r) => {
            let written = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&r.json).expect("report is JSON")
                )
            } else {
                write!(out, "{}", r.text)
            };
            if written.is_err() {
                return 2;
            }
            r.code
        }
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn limits(config: Option<&Path>) -> Result<Limits> {
    let mut l = match config {
        Some(p) => io::read_limits(p)?,
        None => Limits::default(),
    };
    if let Ok(v) = std::env::var(MAX_WORLDS_ENV) {
        l.max_worlds = v
            .trim()
            .parse()
            .map_err(|_| Error::MalformedMap(format!("{MAX_WORLDS_ENV}={v:?} is not a number")))?;
    }
    Ok(l)
}

fn capped(fr: Frame, l: &Limits) -> Result<Frame> {
    if fr.len() > l.max_worlds {
        return Err(Error::CapExceeded {
            what: "frame",
            size: fr.len(),
            unit: "worlds",
            cap: l.max_worlds,
        });
    }
    Ok(fr)
}

fn load_frame(p: &Path, l: &Limits) -> Result<Frame> {
    capped(io::read_frame(p)?, l)
}

fn load_model(p: &Path, l: &Limits) -> Result<Model> {
    let m = io::read_model(p)?;
    capped(m.frame.clone(), l)?;
    Ok(m)
}

fn load_algebra(p: &Path, l: &Limits) -> Result<ModalAlgebra> {
    let a = io::read_algebra(p)?;
    if a.atoms() > l.max_atoms {
        return Err(Error::CapExceeded {
            what: "algebra",
            size: a.atoms(),
            unit: "atoms",
            cap: l.max_atoms,
        });
    }
    Ok(a)
}

fn frame_json(fr: &Frame) -> Value {
    json!(FrameJson::from_frame(fr))
}

fn algebra_json(a: &ModalAlgebra) -> Value {
    json!(AlgebraJson::from_algebra(a))
}

fn algebra_text(a: &ModalAlgebra) -> String {
    serde_json::to_string(&AlgebraJson::from_algebra(a)).expect("algebra is JSON")
}

fn map_text(map: &[usize]) -> String {
    map.iter()
        .enumerate()
        .map(|(a, b)| format!("{a}->{b}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Valid => json!({"valid": true}),
        Verdict::Invalid(c) => json!({
            "valid": false,
            "countermodel": {"val": io::valuation_json(&c.valuation), "world": c.world},
        }),
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Valid => "valid\n".into(),
        Verdict::Invalid(c) => format!(
            "invalid\ncountermodel: {} at world {}\n",
            c.valuation_json(),
            c.world
        ),
    }
}

fn axiom_verdicts(vs: &[AxiomVerdict], text: &mut String) -> Value {
    let mut out = Vec::new();
    for v in vs {
        match &v.countermodel {
            None => text.push_str(&format!("valid    {}\n", v.axiom)),
            Some(c) => text.push_str(&format!(
                "invalid  {}  countermodel {} at world {}\n",
                v.axiom,
                c.valuation_json(),
                c.world
            )),
        }
        let verdict = match &v.countermodel {
            None => Verdict::Valid,
            Some(c) => Verdict::Invalid(c.clone()),
        };
        let mut j = verdict_json(&verdict);
        j["axiom"] = json!(v.axiom.to_string());
        out.push(j);
    }
    json!(out)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cmd: Command, l: &Limits) -> Result<Report> {
    match cmd {
        Command::Check { on, formula, world } => check(on, &parse(&formula)?, world, l),
        Command::Validates { frame, axioms } => {
            let fr = load_frame(&frame, l)?;
            let axioms = io::read_axioms(&axioms)?;
            let verdicts = axioms
                .iter()
                .map(|ax| {
                    Ok(AxiomVerdict {
                        axiom: ax.clone(),
                        countermodel: frame::frame_valid(&fr, ax, l)?.countermodel().cloned(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let ok = verdicts.iter().all(AxiomVerdict::is_valid);
            let mut text = String::new();
            let vs = axiom_verdicts(&verdicts, &mut text);
            text.push_str(&format!("validates: {}\n", yes(ok)));
            Ok(Report::new(
                ok,
                text,
                json!({"validates": ok, "axioms": vs}),
            ))
        }
        Command::Duality { frame: Some(p), .. } => {
            let fr = load_frame(&p, l)?;
            let round = algebra::cf(&algebra::cm(&fr));
            let iso = frame::is_isomorphic(&round, &fr);
            let mut text = format!("frame: {fr}\ncf(cm(frame)): {round}\n");
            match &iso {
                Some(m) => text.push_str(&format!("isomorphic: yes\niso: {}\n", map_text(m))),
                None => text.push_str("isomorphic: no\n"),
            }
            let j = json!({"frame": frame_json(&fr), "round_trip": frame_json(&round), "isomorphic": iso.is_some(), "iso": iso});
            Ok(Report::new(iso.is_some(), text, j))
        }
        Command::Duality { algebra: a, .. } => {
            let alg = load_algebra(&a.expect("clap requires one source"), l)?;
            let e = algebra::em(&alg);
            let jt = algebra::jt_embedding(&alg);
            let bijective = jt.is_injective() && jt.is_surjective();
            let iso = algebra::algebras_isomorphic(&alg, &e);
            let text = format!(
                "algebra: {}\nem(algebra): {}\nembedding dual map: {}\nbijective: {}\n",
                algebra_text(&alg),
                algebra_text(&e),
                map_text(jt.dual_atom_map()),
                yes(bijective)
            );
            let j = json!({
                "algebra": algebra_json(&alg),
                "em": algebra_json(&e),
                "dual_atom_map": jt.dual_atom_map(),
                "bijective": bijective,
                "isomorphic": iso.is_some(),
            });
            Ok(Report::new(bijective && iso.is_some(), text, j))
        }
        Command::Cm { frame } => {
            let a = algebra::cm(&load_frame(&frame, l)?);
            Ok(Report::new(
                true,
                format!("{}\n", algebra_text(&a)),
                algebra_json(&a),
            ))
        }
        Command::Cf { algebra: p } => {
            let fr = algebra::cf(&load_algebra(&p, l)?);
            Ok(Report::new(true, format!("{fr}\n"), frame_json(&fr)))
        }
        Command::Em { algebra: p } => {
            let a = algebra::em(&load_algebra(&p, l)?);
            Ok(Report::new(
                true,
                format!("{}\n", algebra_text(&a)),
                algebra_json(&a),
            ))
        }
        Command::Free {
            presentation,
            generators,
        } => {
            let pres = io::read_presentation(&presentation, l)?;
            let free = variety::free_algebra(&pres, generators, l)?;
            let atoms = free.algebra.atoms();
            let mut text = format!("atoms: {atoms}\nelements: {}\n", 1u128 << atoms);
            for (i, g) in free.generators.iter().enumerate() {
                text.push_str(&format!("g{i}: {:?}\n", bits::to_vec(*g)));
            }
            text.push_str(&format!("algebra: {}\n", algebra_text(&free.algebra)));
            let gens: Vec<Vec<usize>> = free.generators.iter().map(|g| bits::to_vec(*g)).collect();
            let j = json!({
                "atoms": atoms,
                "elements": (1u128 << atoms).to_string(),
                "generators": gens,
                "algebra": algebra_json(&free.algebra),
            });
            Ok(Report::new(true, text, j))
        }
        Command::Canonicity {
            presentation,
            generators,
        } => {
            let pres = io::read_presentation(&presentation, l)?;
            let r = variety::canonicity_report(&pres, generators, l)?;
            let mut text = format!(
                "level {} canonical frame: {}\natoms: {}\n",
                r.generators, r.frame, r.atoms
            );
            let vs = axiom_verdicts(&r.verdicts, &mut text);
            text.push_str(&format!(
                "canonical at level {}: {}\n",
                r.generators,
                yes(r.canonical())
            ));
            let j = json!({
                "generators": r.generators,
                "atoms": r.atoms,
                "frame": frame_json(&r.frame),
                "axioms": vs,
                "canonical": r.canonical(),
            });
            Ok(Report::new(r.canonical(), text, j))
        }
        Command::ProbePower {
            presentation,
            generators,
            index_count,
        } => {
            let pres = io::read_presentation(&presentation, l)?;
            let p = variety::power_commutation_probe(&pres, generators, index_count, l)?;
            let mut text = format!(
                "cf(A^I): {}\nunion of cf(A): {}\n",
                p.power_frame, p.union_frame
            );
            match &p.iso {
                Some(m) => text.push_str(&format!("isomorphic: yes\niso: {}\n", map_text(m))),
                None => text.push_str("isomorphic: no\n"),
            }
            text.push_str("cf(A^I):\n");
            let pv = axiom_verdicts(&p.power_verdicts, &mut text);
            text.push_str("union of cf(A):\n");
            let uv = axiom_verdicts(&p.union_verdicts, &mut text);
            let j = json!({
                "generators": p.generators,
                "index_count": p.i_count,
                "power_frame": frame_json(&p.power_frame),
                "union_frame": frame_json(&p.union_frame),
                "isomorphic": p.isomorphic(),
                "iso": p.iso,
                "power_axioms": pv,
                "union_axioms": uv,
            });
            Ok(Report::new(p.isomorphic(), text, j))
        }
        Command::Translate {
            formula,
            model,
            world,
        } => {
            let f = parse(&formula)?;
            let st = firstorder::simplify(&firstorder::standard_translation(&f, 0));
            let mut text = format!("{st}\n");
            let mut j = json!({"formula": f.to_string(), "translation": st.to_string()});
            let mut ok = true;
            if let (Some(p), Some(w)) = (model, world) {
                let m = load_model(&p, l)?;
                let modal = frame::truth(&m, w, &f)?;
                let fo = firstorder::fo_satisfies(&m, &st, &BTreeMap::from([(0, w)]))?;
                ok = modal == fo;
                text.push_str(&format!(
                    "modal truth at {w}: {modal}\nfirst-order at v0={w}: {fo}\n"
                ));
                j["modal"] = json!(modal);
                j["first_order"] = json!(fo);
                j["agree"] = json!(ok);
            }
            Ok(Report::new(ok, text, j))
        }
        Command::FoCheck {
            frame: fp,
            model,
            sentence,
            world,
        } => {
            let s = parse_fo(&sentence)?;
            let m = match (fp, model) {
                (Some(p), _) => Model::new(load_frame(&p, l)?, BTreeMap::new())?,
                (None, Some(p)) => load_model(&p, l)?,
                (None, None) => unreachable!("clap requires one source"),
            };
            let env: BTreeMap<u32, usize> = world.map(|w| (0, w)).into_iter().collect();
            let sat = firstorder::fo_satisfies(&m, &s, &env)?;
            let text = format!("{}\n", if sat { "satisfied" } else { "not satisfied" });
            Ok(Report::new(
                sat,
                text,
                json!({"sentence": s.to_string(), "satisfied": sat}),
            ))
        }
        Command::QmCheck { sentence } => {
            let s = parse_fo(&sentence)?;
            let q = firstorder::is_quasi_modal(&s)?;
            let text = match &q.violation {
                None => "quasi-modal\n".to_string(),
                Some(v) => format!("not quasi-modal: {v}\n"),
            };
            let j = json!({"sentence": s.to_string(), "quasi_modal": q.is_quasi_modal(), "violation": q.violation});
            Ok(Report::new(q.is_quasi_modal(), text, j))
        }
        Command::Morphisms {
            source,
            target,
            surjective,
            map,
        } => {
            let src = load_frame(&source, l)?;
            let tgt = load_frame(&target, l)?;
            if let Some(map) = map {
                return Ok(match BoundedMorphism::new(src, tgt, map.clone()) {
                    Ok(g) => Report::new(
                        true,
                        format!(
                            "bounded morphism{}\n",
                            if g.is_surjective() {
                                ", surjective"
                            } else {
                                ""
                            }
                        ),
                        json!({"map": map, "bounded_morphism": true, "surjective": g.is_surjective()}),
                    ),
                    Err(Error::InvalidMorphism(why)) => Report::new(
                        false,
                        format!("not a bounded morphism: {why}\n"),
                        json!({"map": map, "bounded_morphism": false, "reason": why}),
                    ),
                    Err(e) => return Err(e),
                });
            }
            let found = frame::find_bounded_morphisms(&src, &tgt, surjective, l)?;
            let mut text = format!("{} bounded morphism(s)\n", found.len());
            for g in &found {
                text.push_str(&format!(
                    "{}{}\n",
                    map_text(g.map()),
                    if g.is_surjective() { "  onto" } else { "" }
                ));
            }
            let maps: Vec<Value> = found
                .iter()
                .map(|g| json!({"map": g.map(), "surjective": g.is_surjective()}))
                .collect();
            Ok(Report::new(
                !found.is_empty(),
                text,
                json!({"morphisms": maps}),
            ))
        }
        Command::Iso { left, right } => {
            let a = load_frame(&left, l)?;
            let b = load_frame(&right, l)?;
            let iso = frame::is_isomorphic(&a, &b);
            let text = match &iso {
                Some(m) => format!("isomorphic: yes\niso: {}\n", map_text(m)),
                None => "isomorphic: no\n".into(),
            };
            Ok(Report::new(
                iso.is_some(),
                text,
                json!({"isomorphic": iso.is_some(), "iso": iso}),
            ))
        }
        Command::Union { frames } => {
            let frs = frames
                .iter()
                .map(|p| load_frame(p, l))
                .collect::<Result<Vec<_>>>()?;
            let u = frame::disjoint_union(&frs)?;
            let fr = capped(u.frame, l)?;
            let mut text = format!("{fr}\n");
            for (i, inj) in u.injections.iter().enumerate() {
                text.push_str(&format!("frame {i}: {}\n", map_text(inj)));
            }
            Ok(Report::new(
                true,
                text,
                json!({"frame": frame_json(&fr), "injections": u.injections}),
            ))
        }
        Command::Subframe { frame: p, seeds } => {
            let fr = load_frame(&p, l)?;
            let mut set = 0;
            for s in seeds {
                fr.check_world(s)?;
                set |= bits::singleton(s);
            }
            let sub = frame::generated_subframe(&fr, set)?;
            let text = format!("worlds: {:?}\n{}\n", sub.worlds, sub.frame);
            Ok(Report::new(
                true,
                text,
                json!({"worlds": sub.worlds, "frame": frame_json(&sub.frame)}),
            ))
        }
        Command::Ultraproduct { frames, index, .. } => {
            let frs = frames
                .iter()
                .map(|p| load_frame(p, l))
                .collect::<Result<Vec<_>>>()?;
            let choice = index.map_or(
                UltrafilterChoice::NonPrincipal,
                UltrafilterChoice::Principal,
            );
            let u = frame::ultraproduct_principal(&frs, choice, l)?;
            let text = format!(
                "{}\nclasses: {}\niso onto factor: {}\n",
                u.model.frame,
                u.representatives.len(),
                map_text(&u.iso)
            );
            let j = json!({"frame": frame_json(&u.model.frame), "representatives": u.representatives, "iso": u.iso});
            Ok(Report::new(true, text, j))
        }
        Command::GtClosure { class, bound } => {
            let c = io::read_class(&class, l)?;
            let r = definability::closure_report(&c, bound, l)?;
            let mut text = format!(
                "members up to {} worlds: {}\ngenerated subframes: {}\nbounded-morphic images: {}\ndisjoint unions: {}\nultrafilter extensions: vacuous on finite frames\n",
                r.bound,
                r.members,
                if r.closed_under_subframes() { "closed" } else { "not closed" },
                if r.closed_under_images() { "closed" } else { "not closed" },
                if r.closed_under_unions() { "closed" } else { "not closed" },
            );
            let mut vs = Vec::new();
            for v in &r.violations {
                let (line, j) = match v {
                    Violation::Subframe { member, subframe } => (
                        format!("subframe {subframe} of member {member}"),
                        json!({"kind": "subframe", "member": frame_json(member), "witness": frame_json(subframe)}),
                    ),
                    Violation::Image { member, image, map } => (
                        format!("image {image} of member {member} via {}", map_text(map)),
                        json!({"kind": "image", "member": frame_json(member), "witness": frame_json(image), "map": map}),
                    ),
                    Violation::Union { left, right } => (
                        format!("union of members {left} and {right}"),
                        json!({"kind": "union", "left": frame_json(left), "right": frame_json(right)}),
                    ),
                };
                text.push_str(&format!("violation: {line}\n"));
                vs.push(j);
            }
            let j = json!({
                "bound": r.bound,
                "members": r.members,
                "subframes": r.closed_under_subframes(),
                "images": r.closed_under_images(),
                "unions": r.closed_under_unions(),
                "violations": vs,
            });
            Ok(Report::new(r.closed(), text, j))
        }
        Command::GtSearch {
            class,
            universe,
            depth,
            vars,
        } => {
            let c = io::read_class(&class, l)?;
            let found = definability::search_defining_formula(&c, universe, depth, vars, l)?;
            let text = match &found {
                Some(f) => format!("{f}\n"),
                None => "none\n".into(),
            };
            Ok(Report::new(
                found.is_some(),
                text,
                json!({"formula": found.as_ref().map(Formula::to_string)}),
            ))
        }
    }
}

fn check(on: Structure, f: &Formula, world: Option<usize>, l: &Limits) -> Result<Report> {
    if let Some(p) = on.frame {
        let v = frame::frame_valid(&load_frame(&p, l)?, f, l)?;
        return Ok(Report::new(
            v.is_valid(),
            verdict_text(&v),
            verdict_json(&v),
        ));
    }
    if let Some(p) = on.model {
        let m = load_model(&p, l)?;
        let worlds: Vec<usize> = match world {
            Some(w) => vec![w],
            None => (0..m.frame.len()).collect(),
        };
        let mut text = String::new();
        let mut truths = BTreeMap::new();
        for w in worlds {
            let t = frame::truth(&m, w, f)?;
            text.push_str(&format!("world {w}: {t}\n"));
            truths.insert(w.to_string(), t);
        }
        let ok = truths.values().all(|t| *t);
        return Ok(Report::new(ok, text, json!({"truth": truths})));
    }
    let p = on.algebra.expect("clap requires one source");
    let alg = load_algebra(&p, l)?;
    let refutation = algebra::algebra_validates(&alg, f, l)?;
    let (text, j) = match &refutation {
        None => ("valid\n".to_string(), json!({"valid": true})),
        Some(a) => (
            format!(
                "invalid\nassignment: {}\n",
                serde_json::to_string(&io::valuation_json(a)).expect("JSON")
            ),
            json!({"valid": false, "assignment": io::valuation_json(a)}),
        ),
    };
    Ok(Report::new(refutation.is_none(), text, j))
}
