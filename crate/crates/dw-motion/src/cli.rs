//! Batch command-line front end. Every command prints one JSON report
//! (or CSV for `chars verify --csv`) and exits with 0 when the requested
//! verification holds, 1 when it fails and 2 on usage or input errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::characters::verify_character_identity;
use crate::dw::{assemble_dimension_reduction, count_labels, mcg_rep, verify_intertwiner, DwSpace, Surface};
use crate::group::FiniteGroup;
use crate::homs::{enumerate_homs, HomClasses};
use crate::links::{
    motion_presentation, motion_rep, psi_all_blocks, psi_bijection, thm2_decomposition, verify_motion_relations,
    BaseChoice, FluxLabel, LinkFamily, PsiReport,
};
use crate::presentation::{Endomorphism, Presentation};
use crate::simplicial::{
    partition_function, verify_idempotent_blocks, verify_lemma1, BoundaryColoring, Triangulation,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "dwm", version, about = "Dijkgraaf-Witten spaces and motion-group representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect a finite group.
    Group {
        /// Group spec: Z:n, S:n, D:n, Q8, SL2:p, SL3:p, prod(a,b), table:<path>.
        spec: String,
        #[command(subcommand)]
        query: Option<GroupQuery>,
    },
    /// Enumerate Hom(π, G) for a presentation file.
    Homs {
        #[arg(long)]
        group: String,
        #[arg(long)]
        pres: PathBuf,
        /// Also report conjugation classes.
        #[arg(long)]
        classes: bool,
    },
    /// Dijkgraaf-Witten spaces, labels, dimension reduction, state sums.
    Dw {
        #[command(subcommand)]
        command: DwCommand,
    },
    /// Motion-group representations of links.
    Motion {
        #[command(subcommand)]
        command: MotionCommand,
    },
    /// Permutation-character identities for SL(d,p).
    Chars {
        #[command(subcommand)]
        command: CharsCommand,
    },
}

#[derive(Subcommand, Debug)]
enum GroupQuery {
    /// Conjugacy classes.
    Classes,
    /// Centralizer of an element given by its label.
    Centralizer { element: String },
}

#[derive(Args, Debug)]
struct SpaceSource {
    #[arg(long, conflicts_with = "surface")]
    pres: Option<PathBuf>,
    /// circle, sphere, torus, t3 or genus:<g>.
    #[arg(long)]
    surface: Option<String>,
}

#[derive(Subcommand, Debug)]
enum DwCommand {
    /// Basis of V_G(Y) and the mapping-class action where built in.
    Space {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        source: SpaceSource,
    },
    /// Size of the label set of a closed manifold.
    Labels {
        #[arg(long)]
        group: String,
        #[arg(long)]
        surface: String,
    },
    /// Assembly map ⊕ V_{C_G(g)}(Y) → V_G(Y×S¹) and its intertwiner squares.
    Dimred {
        #[arg(long)]
        group: String,
        #[arg(long)]
        surface: String,
        /// Endomorphism file (`gen -> word` lines) to test instead of the
        /// built-in mapping-class generators.
        #[arg(long)]
        check_intertwiner: Option<PathBuf>,
    },
    /// Colorings and the state sum of a triangulation.
    Colorings {
        #[arg(long)]
        group: String,
        #[arg(long)]
        tri: PathBuf,
        /// Boundary coloring JSON.
        #[arg(long)]
        boundary: Option<PathBuf>,
        #[arg(long)]
        verify_lemma1: bool,
        /// Treat the triangulation as a 1-dimensional Y and check Z(Y×I).
        #[arg(long)]
        verify_idempotent: bool,
    },
}

#[derive(Args, Debug)]
struct LinkArgs {
    /// torus:p,q,n, necklace:n or hopf:n.
    #[arg(long)]
    link: String,
    #[arg(long)]
    group: String,
    /// Component label `g,h` as element labels.
    #[arg(long)]
    flux: String,
}

#[derive(Subcommand, Debug)]
enum MotionCommand {
    /// Pure-flux motion representation.
    Rep {
        #[command(flatten)]
        link: LinkArgs,
        /// Axis label `g_c,h_c` for necklace and Hopf links.
        #[arg(long)]
        axis_flux: Option<String>,
        #[arg(long)]
        emit_permutations: bool,
        #[arg(long)]
        verify_relations: bool,
    },
    /// Ψ bijection on one block or on every nonempty block.
    Psi {
        #[command(flatten)]
        link: LinkArgs,
        /// Block `x,y` given by element labels of the two classes.
        #[arg(long)]
        block: Option<String>,
        /// Use the alternate base tuple.
        #[arg(long)]
        alternate_base: bool,
    },
    /// Block decomposition of a torus-link space.
    Thm2 {
        #[command(flatten)]
        link: LinkArgs,
    },
}

#[derive(Subcommand, Debug)]
enum CharsCommand {
    Verify {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        csv: bool,
    },
}

/// Usage or input error, exit code 2.
#[derive(Debug)]
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Outcome, InputError>;

enum Outcome {
    Json { result: Value, verified: bool },
    Text { text: String, verified: bool },
}

struct Context {
    hasher: Sha256,
}

impl Context {
    fn read(&mut self, path: &Path) -> Result<String, InputError> {
        let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        self.hasher.update(path.to_string_lossy().as_bytes());
        self.hasher.update([0]);
        self.hasher.update(text.as_bytes());
        Ok(text)
    }

    fn group(&mut self, spec: &str) -> Result<FiniteGroup, InputError> {
        if let Some(path) = spec.strip_prefix("table:") {
            let text = self.read(Path::new(path))?;
            return Ok(FiniteGroup::parse_table(spec, &text)?);
        }
        Ok(spec.parse()?)
    }
}

fn conventions() -> Value {
    json!({
        "canonical_form": "lexicographically minimal image tuple in the conjugation orbit",
        "action": "act(e)[phi] = [phi o e^-1]; covariant, act(e1 o e2) = act(e1) o act(e2)",
        "permutations": "0-based basis indices in cycle notation",
        "witness": "minimal a with rho(word) = a label a^-1",
        "basis_order": "classes sorted by canonical form",
    })
}

fn labels(g: &FiniteGroup, images: &[usize]) -> Vec<String> {
    images.iter().map(|&e| g.label(e).to_string()).collect()
}

fn run_group(ctx: &mut Context, spec: &str, query: &Option<GroupQuery>) -> CmdResult {
    let g = ctx.group(spec)?;
    let mut result = json!({
        "name": g.name(),
        "order": g.order(),
        "abelian": g.is_abelian(),
    });
    match query {
        None => {
            result["elements"] = json!(g.labels());
        }
        Some(GroupQuery::Classes) => {
            let cc = g.conjugacy_classes();
            let classes: Vec<Value> = cc
                .classes()
                .iter()
                .map(|c| json!({"rep": g.label(c[0]), "size": c.len(), "elements": labels(&g, c), "element_order": g.element_order(c[0])}))
                .collect();
            result["class_count"] = json!(cc.len());
            result["classes"] = json!(classes);
        }
        Some(GroupQuery::Centralizer { element }) => {
            let x = g.element(element)?;
            let c = g.centralizer(&[x]);
            result["element"] = json!(element);
            result["centralizer_order"] = json!(c.len());
            result["centralizer"] = json!(labels(&g, &c));
        }
    }
    Ok(Outcome::Json { result, verified: true })
}

fn run_homs(ctx: &mut Context, group: &str, pres: &Path, classes: bool) -> CmdResult {
    let g = ctx.group(group)?;
    let p = Presentation::parse(&ctx.read(pres)?)?;
    let homs = enumerate_homs(&p, &g);
    let mut result = json!({"homs": homs.len(), "generators": p.generator_names()});
    if classes {
        let hc = HomClasses::from_homs(&homs, &g)?;
        result["classes"] = json!(hc.len());
        result["class_list"] = json!(hc
            .classes()
            .iter()
            .map(|c| json!({"images": labels(&g, &c.canonical.images), "orbit_size": c.orbit_size}))
            .collect::<Vec<_>>());
    }
    Ok(Outcome::Json { result, verified: true })
}

fn perm_map(names: &[String], perms: &[crate::perm::Permutation]) -> Value {
    let map: serde_json::Map<String, Value> = names
        .iter()
        .zip(perms)
        .map(|(n, p)| (n.clone(), json!(p.cycle_notation())))
        .collect();
    Value::Object(map)
}

fn run_dw(ctx: &mut Context, cmd: &DwCommand) -> CmdResult {
    match cmd {
        DwCommand::Space { group, source } => {
            let g = ctx.group(group)?;
            let (p, gens) = match (&source.pres, &source.surface) {
                (Some(path), None) => (Presentation::parse(&ctx.read(path)?)?, Vec::new()),
                (None, Some(s)) => {
                    let s: Surface = s.parse()?;
                    (s.presentation(), s.mapping_class_generators())
                }
                _ => return Err(InputError("exactly one of --pres and --surface is required".into())),
            };
            let space = DwSpace::new(&p, &g);
            let rep = mcg_rep(&space, &g, &gens)?;
            let basis: Vec<Vec<String>> = space.classes().classes().iter().map(|c| labels(&g, &c.canonical.images)).collect();
            let result = json!({
                "dimension": space.dim(),
                "presentation": p.to_text(),
                "basis": basis,
                "trivial_class": space.trivial_class(),
                "mapping_class_group": perm_map(&rep.names, &rep.perms),
            });
            Ok(Outcome::Json { result, verified: true })
        }
        DwCommand::Labels { group, surface } => {
            let g = ctx.group(group)?;
            let s: Surface = surface.parse()?;
            let lc = count_labels(&s.presentation(), &g)?;
            let terms: Vec<Value> = lc
                .terms
                .iter()
                .map(|t| json!({"class": labels(&g, &t.class), "centralizer_order": t.centralizer_order, "irreps": t.irreps}))
                .collect();
            Ok(Outcome::Json {
                result: json!({"count": lc.count, "terms": terms}),
                verified: true,
            })
        }
        DwCommand::Dimred {
            group,
            surface,
            check_intertwiner,
        } => {
            let g = ctx.group(group)?;
            let s: Surface = surface.parse()?;
            let py = s.presentation();
            let map = assemble_dimension_reduction(&py, &g)?;
            let gens = match check_intertwiner {
                Some(path) => vec![("file".to_string(), Endomorphism::parse(&py, &ctx.read(path)?)?)],
                None => s.mapping_class_generators(),
            };
            let mut checks = serde_json::Map::new();
            let mut all = map.is_bijective();
            for (name, f) in &gens {
                let r = verify_intertwiner(&map, &py, &g, f)?;
                all &= r.holds;
                checks.insert(name.clone(), serde_json::to_value(&r)?);
            }
            let blocks: Vec<Value> = map
                .blocks
                .iter()
                .map(|b| json!({"class_rep": g.label(b.rep), "centralizer_order": b.centralizer.group.order(), "dimension": b.source.len()}))
                .collect();
            let result = json!({
                "source_dim": map.source_dim(),
                "target_dim": map.target.len(),
                "bijective": map.is_bijective(),
                "blocks": blocks,
                "intertwiners": checks,
            });
            Ok(Outcome::Json { result, verified: all })
        }
        DwCommand::Colorings {
            group,
            tri,
            boundary,
            verify_lemma1: lemma1,
            verify_idempotent,
        } => {
            let g = ctx.group(group)?;
            let t = Triangulation::from_json(&ctx.read(tri)?)?;
            let tau = match boundary {
                Some(path) => Some(BoundaryColoring::from_json(&t, &g, &ctx.read(path)?)?),
                None => None,
            };
            let z = partition_function(&t, &g, tau.as_ref())?;
            let mut verified = true;
            let mut result = json!({
                "vertices": t.vertex_count(),
                "edges": t.edges().len(),
                "triangles": t.triangles().len(),
                "colorings": z.count,
                "partition_function": {
                    "count": z.count,
                    "half_exponent": z.half_exponent,
                    "group_order": z.group_order,
                    "exact": z.to_string(),
                    "approx": z.to_f64(),
                },
            });
            if *lemma1 {
                let r = verify_lemma1(&t, &g)?;
                verified &= r.holds;
                result["lemma1"] = serde_json::to_value(&r)?;
            }
            if *verify_idempotent {
                let yi = Triangulation::product_with_interval(&t)?;
                let r = verify_idempotent_blocks(&t, &yi, &g)?;
                verified &= r.holds();
                let mut v = serde_json::to_value(&r)?;
                v["cylinder_vertices"] = json!(yi.vertex_count());
                v["holds"] = json!(r.holds());
                result["idempotent"] = v;
            }
            Ok(Outcome::Json { result, verified })
        }
    }
}

fn parse_link(ctx: &mut Context, a: &LinkArgs) -> Result<(LinkFamily, FiniteGroup, FluxLabel), InputError> {
    let link: LinkFamily = a.link.parse()?;
    let g = ctx.group(&a.group)?;
    let flux = FluxLabel::parse(&g, &a.flux)?;
    Ok((link, g, flux))
}

fn torus_params(link: &LinkFamily) -> Result<(u32, u32, usize), InputError> {
    match *link {
        LinkFamily::Torus { p, q, n } => Ok((p, q, n)),
        other => Err(InputError(format!("{other} is not a torus link"))),
    }
}

fn psi_json(g: &FiniteGroup, r: &PsiReport) -> Value {
    let cc = g.conjugacy_classes();
    json!({
        "block": [g.label(cc.rep(r.x_class)), g.label(cc.rep(r.y_class))],
        "base": {"images": labels(g, &r.base.images), "witnesses": labels(g, &r.base.witnesses)},
        "centralizer_order": r.centralizer_order,
        "s_dim": r.s_dim(),
        "f_dim": r.f_dim,
        "map": r.map,
        "well_defined": r.well_defined,
        "injective": r.injective,
        "surjective": r.surjective,
        "block_preserved": r.block_preserved,
        "natural": r.natural,
        "failing_generators": r.failing_generators,
        "s_image_order": r.s_image_order,
        "f_image_order": r.f_image_order,
        "holds": r.holds(),
    })
}

fn run_motion(ctx: &mut Context, cmd: &MotionCommand) -> CmdResult {
    match cmd {
        MotionCommand::Rep {
            link,
            axis_flux,
            emit_permutations,
            verify_relations,
        } => {
            let (family, g, flux) = parse_link(ctx, link)?;
            let axis = axis_flux.as_deref().map(|s| FluxLabel::parse(&g, s)).transpose()?;
            let m = motion_rep(&family, &g, flux, axis)?;
            let basis: Vec<Vec<String>> = m.space.classes().classes().iter().map(|c| labels(&g, &c.canonical.images)).collect();
            let mut result = json!({
                "link": family.to_string(),
                "presentation": m.presentation.to_text(),
                "dimension": m.space.dim(),
                "basis": basis,
                "generators": m.rep.names,
            });
            let mut verified = true;
            if *emit_permutations {
                result["permutations"] = perm_map(&m.rep.names, &m.rep.perms);
            }
            if *verify_relations {
                let report = verify_motion_relations(&m.rep, &motion_presentation(&family));
                verified = report.all_hold();
                result["relations"] = json!({
                    "family": report.family,
                    "results": report.results,
                    "all_hold": report.all_hold(),
                    "failures": report.failures(),
                });
            }
            Ok(Outcome::Json { result, verified })
        }
        MotionCommand::Psi {
            link,
            block,
            alternate_base,
        } => {
            let (family, g, flux) = parse_link(ctx, link)?;
            let (p, q, n) = torus_params(&family)?;
            let choice = if *alternate_base { BaseChoice::Alternate } else { BaseChoice::Minimal };
            let reports = match block {
                Some(b) => {
                    let (x, y) = b
                        .split_once(',')
                        .ok_or_else(|| InputError(format!("malformed block `{b}`")))?;
                    let cc = g.conjugacy_classes();
                    let key = (cc.class_of(g.element(x)?), cc.class_of(g.element(y)?));
                    vec![psi_bijection(&g, p, q, n, flux, key, choice)?]
                }
                None => psi_all_blocks(&g, p, q, n, flux, choice)?,
            };
            let verified = reports.iter().all(PsiReport::holds);
            let blocks: Vec<Value> = reports.iter().map(|r| psi_json(&g, r)).collect();
            Ok(Outcome::Json {
                result: json!({"link": family.to_string(), "base_choice": choice, "blocks": blocks, "holds": verified}),
                verified,
            })
        }
        MotionCommand::Thm2 { link } => {
            let (family, g, flux) = parse_link(ctx, link)?;
            let (p, q, n) = torus_params(&family)?;
            let r = thm2_decomposition(&g, p, q, n, flux)?;
            let cc = g.conjugacy_classes();
            let blocks: Vec<Value> = r
                .blocks
                .iter()
                .map(|b| {
                    json!({
                        "block": [g.label(cc.rep(b.x_class)), g.label(cc.rep(b.y_class))],
                        "s_dim": b.s_dim,
                        "f_dim": b.f_dim,
                        "centralizer_order": b.centralizer_order,
                        "bijective": b.bijective,
                        "natural": b.natural,
                    })
                })
                .collect();
            let holds = r.holds();
            Ok(Outcome::Json {
                result: json!({"u": r.u, "v": r.v, "lhs_dim": r.lhs_dim, "rhs_dim": r.rhs_dim, "blocks": blocks, "holds": holds}),
                verified: holds,
            })
        }
    }
}

fn run_chars(cmd: &CharsCommand) -> CmdResult {
    let CharsCommand::Verify { d, p, csv } = cmd;
    let r = verify_character_identity(*d, *p)?;
    if *csv {
        return Ok(Outcome::Text {
            text: r.to_csv(),
            verified: r.holds,
        });
    }
    let verified = r.holds;
    Ok(Outcome::Json {
        result: serde_json::to_value(&r)?,
        verified,
    })
}

fn dispatch(ctx: &mut Context, cmd: &Command) -> CmdResult {
    match cmd {
        Command::Group { spec, query } => run_group(ctx, spec, query),
        Command::Homs { group, pres, classes } => run_homs(ctx, group, pres, *classes),
        Command::Dw { command } => run_dw(ctx, command),
        Command::Motion { command } => run_motion(ctx, command),
        Command::Chars { command } => run_chars(command),
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, InputError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("DWM_THREADS") {
        let n: usize = v.parse().map_err(|_| InputError(format!("DWM_THREADS must be a positive integer, got `{v}`")))?;
        builder = builder.num_threads(n.max(1));
    }
    Ok(builder.build()?)
}

/// Parses `argv` (including the program name), runs the command and writes
/// the report to `out`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let mut ctx = Context { hasher: Sha256::new() };
    for a in argv.iter().skip(1) {
        ctx.hasher.update(a.to_string_lossy().as_bytes());
        ctx.hasher.update([0]);
    }
    let outcome = thread_pool().and_then(|pool| pool.install(|| dispatch(&mut ctx, &cli.command)));
    let command: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match outcome {
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Ok(Outcome::Text { text, verified }) => {
            let _ = write!(out, "{text}");
            i32::from(!verified)
        }
        Ok(Outcome::Json { result, verified }) => {
            let digest: String = ctx.hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
            let report = json!({
                "command": command,
                "input_digest": digest,
                "version": VERSION,
                "conventions": conventions(),
                "verified": verified,
                "result": result,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("JSON values serialize"));
            i32::from(!verified)
        }
    }
}
