//! Command-line front end. Every verb produces an [`Outcome`]; rendering and
//! exit codes are decided in one place.
//!
//! Exit codes: 0 success, 1 law violations / nothing found / predicate false,
//! 2 usage, input or budget errors.

use std::io::Write;
use std::path::{Path as FsPath, PathBuf};
use std::sync::Arc;

use catk_core::finset::{evaluate_free_functor, FinFunction, FinSetObj};
use catk_core::functor::{
    cat_category, check_functor_laws, check_naturality, enumerate_functors, FunctorData, NatTransData,
};
use catk_core::kernel::{check_category_laws, commutes, opposite_category, FinCategory, MorPath, ObjId};
use catk_core::monoidal::{
    cartesian_structure, check_monoidal_structure, check_symmetric_structure, MonoidalStructure,
    SymmetricStructure,
};
use catk_core::quiver::{Path, Quiver};
use catk_core::smc::{check_free_smc_laws, diagrams_equal, enumerate_homs, Signature, SmcBounds};
use catk_core::universal::{find_coproducts, find_initials, find_products, find_terminals};
use catk_core::{Violation, DEFAULT_INSTANCE_BUDGET};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dsl::{self, print_category, Assignment, DocumentKind, Payload};
use crate::term::parse_term;

pub const BUDGET_VAR: &str = "CATK_INSTANCE_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TensorChoice {
    /// Cartesian product with the terminal object as unit.
    Products,
    /// Composition in a one-object category.
    Monoid,
}

#[derive(Debug, Parser)]
#[command(name = "catk", version, about = "Check and search finite categorical structures")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Identity and associativity laws of a `.cat` file.
    Check { file: PathBuf },
    /// Functor laws of a `.fun` file.
    CheckFunctor { file: PathBuf },
    /// Naturality of a family of components between two functors.
    CheckNatural {
        f: PathBuf,
        g: PathBuf,
        /// `OBJECT=MORPHISM`, one per source object.
        #[arg(long = "component", value_name = "OBJ=MOR")]
        components: Vec<String>,
    },
    /// The composite `f ; g`.
    Compose { file: PathBuf, f: String, g: String },
    /// Whether two parallel paths (`f;g` or `@A`) have the same composite.
    Commutes { file: PathBuf, left: String, right: String },
    /// The opposite category, printed as a `.cat` document.
    Opposite { file: PathBuf },
    /// Paths between two nodes of a quiver.
    Paths {
        file: PathBuf,
        from: String,
        to: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long)]
        count: bool,
    },
    /// Image of a path under the finite-set functor given by an assignment.
    FreeEval { quiver: PathBuf, assignment: PathBuf, path: String },
    /// Terminal objects.
    Terminal { file: PathBuf },
    /// Initial objects.
    Initial { file: PathBuf },
    /// Product cones over two objects.
    Product { file: PathBuf, a: String, b: String },
    /// Coproduct cocones under two objects.
    Coproduct { file: PathBuf, a: String, b: String },
    /// Cartesian monoidal structure, its tensor table and its coherence.
    MonoidalFromProducts { file: PathBuf },
    /// Bifunctoriality and coherence of a monoidal structure.
    CheckMonoidal {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "products")]
        tensor: TensorChoice,
    },
    /// Monoidal coherence plus the symmetry laws of the braiding.
    CheckSymmetric {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "products")]
        tensor: TensorChoice,
    },
    /// The category of the listed categories and all functors between them.
    Cat {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// All functors between two categories.
    Functors {
        source: PathBuf,
        target: PathBuf,
        #[arg(long)]
        count: bool,
    },
    /// Equality of two terms in the free symmetric monoidal category.
    SmcEqual { sig: PathBuf, left: String, right: String },
    /// Morphisms between two words, up to a number of boxes.
    SmcEnum {
        sig: PathBuf,
        dom: String,
        cod: String,
        #[arg(long, default_value_t = 2)]
        max_boxes: usize,
        #[arg(long)]
        count: bool,
    },
    /// Laws of the free symmetric monoidal category within bounds.
    SmcCheck {
        sig: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_boxes: usize,
        #[arg(long, default_value_t = 3)]
        max_word: usize,
    },
}

/// What a verb produced. `found == false` marks an absent answer or a false
/// predicate; `note` goes to stderr.
#[derive(Debug, Default)]
struct Outcome {
    violations: Vec<Violation>,
    results: Vec<Value>,
    found: bool,
    note: Option<String>,
}

impl Outcome {
    fn results(results: Vec<Value>) -> Self {
        Outcome { results, found: true, ..Default::default() }
    }

    fn report(violations: Vec<Violation>) -> Self {
        Outcome { violations, found: true, ..Default::default() }
    }

    fn ok(&self) -> bool {
        self.found && self.violations.is_empty()
    }
}

#[derive(Serialize)]
struct JsonOutput<'a> {
    ok: bool,
    violations: &'a [Violation],
    results: &'a [Value],
}

/// An error that aborts the command with exit code 2.
#[derive(Debug)]
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

type Res<T> = Result<T, Fatal>;

/// Run the tool on `args` (including the program name). Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = match dispatch(cli.command) {
        Ok(o) => o,
        Err(Fatal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    if let Some(note) = &outcome.note {
        let _ = writeln!(err, "{note}");
    }
    let written = match cli.format {
        Format::Json => render_json(&outcome, out),
        Format::Text => render_text(&outcome, out),
    };
    if written.is_err() {
        return 2;
    }
    if outcome.ok() {
        0
    } else {
        1
    }
}

fn render_json(o: &Outcome, out: &mut dyn Write) -> std::io::Result<()> {
    let doc = JsonOutput { ok: o.ok(), violations: &o.violations, results: &o.results };
    let text = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    writeln!(out, "{text}")
}

fn render_text(o: &Outcome, out: &mut dyn Write) -> std::io::Result<()> {
    for r in &o.results {
        match r {
            Value::String(s) if s.ends_with('\n') => write!(out, "{s}")?,
            Value::String(s) => writeln!(out, "{s}")?,
            other => writeln!(out, "{other}")?,
        }
    }
    for v in &o.violations {
        writeln!(out, "violation {v}")?;
    }
    if o.results.is_empty() && o.violations.is_empty() && o.found {
        writeln!(out, "ok")?;
    }
    Ok(())
}

fn budget() -> Res<usize> {
    match std::env::var(BUDGET_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| Fatal(format!("{BUDGET_VAR} must be a non-negative integer, got `{s}`"))),
        Err(_) => Ok(DEFAULT_INSTANCE_BUDGET),
    }
}

fn load(path: &FsPath, want: DocumentKind) -> Res<Payload> {
    let kind = DocumentKind::from_path(path)?;
    if kind != want {
        return Err(Fatal(format!("{}: expected a .{} file", path.display(), extension(want))));
    }
    Ok(dsl::load_document(path)?.payload)
}

fn extension(kind: DocumentKind) -> &'static str {
    match kind {
        DocumentKind::Category => "cat",
        DocumentKind::Quiver => "qv",
        DocumentKind::Signature => "sig",
        DocumentKind::Functor => "fun",
        DocumentKind::Assignment => "asg",
    }
}

fn load_category(path: &FsPath) -> Res<FinCategory> {
    match load(path, DocumentKind::Category)? {
        Payload::Category(c) => Ok(c),
        _ => unreachable!("kind checked"),
    }
}

fn load_quiver(path: &FsPath) -> Res<Quiver> {
    match load(path, DocumentKind::Quiver)? {
        Payload::Quiver(q) => Ok(q),
        _ => unreachable!("kind checked"),
    }
}

fn load_signature(path: &FsPath) -> Res<Signature> {
    match load(path, DocumentKind::Signature)? {
        Payload::Signature(s) => Ok(s),
        _ => unreachable!("kind checked"),
    }
}

fn load_assignment(path: &FsPath) -> Res<Assignment> {
    match load(path, DocumentKind::Assignment)? {
        Payload::Assignment(a) => Ok(a),
        _ => unreachable!("kind checked"),
    }
}

/// Category files named in a `.fun` header are resolved next to it.
fn load_functor(path: &FsPath) -> Res<FunctorData> {
    let Payload::Functor(decl) = load(path, DocumentKind::Functor)? else { unreachable!("kind checked") };
    let dir = path.parent().unwrap_or(FsPath::new(""));
    let src = Arc::new(load_category(&dir.join(&decl.source))?);
    let tgt = Arc::new(load_category(&dir.join(&decl.target))?);
    FunctorData::from_names(src, tgt, &decl.objects, &decl.morphisms)
        .map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn object(cat: &FinCategory, name: &str) -> Res<ObjId> {
    cat.object(name).ok_or_else(|| Fatal(format!("unknown object `{name}`")))
}

/// `@A` or `f;g;h`.
fn category_path(cat: &FinCategory, text: &str) -> Res<MorPath> {
    let text = text.trim();
    if let Some(obj) = text.strip_prefix('@') {
        return Ok(MorPath::empty(object(cat, obj.trim())?));
    }
    let steps = text
        .split(';')
        .map(|s| cat.morphism(s.trim()).ok_or_else(|| Fatal(format!("unknown morphism `{}`", s.trim()))))
        .collect::<Res<Vec<_>>>()?;
    Ok(MorPath::of(cat, &steps).expect("split yields at least one step"))
}

fn quiver_path(q: &Quiver, text: &str) -> Res<Path> {
    let text = text.trim();
    if let Some(node) = text.strip_prefix('@') {
        return Ok(q.path_identity(node.trim())?);
    }
    let steps: Vec<&str> = text.split(';').map(str::trim).collect();
    Ok(q.path_from_edges(&steps)?)
}

fn functor_json(f: &FunctorData) -> Value {
    let (s, t) = (f.source_category(), f.target_category());
    let objects: Vec<Value> =
        s.object_ids().map(|a| json!([s.object_name(a), t.object_name(f.obj(a))])).collect();
    let morphisms: Vec<Value> =
        s.morphism_ids().map(|m| json!([s.morphism_name(m), t.morphism_name(f.mor(m))])).collect();
    json!({ "objects": objects, "morphisms": morphisms })
}

fn not_found(note: String) -> Outcome {
    Outcome { note: Some(note), ..Default::default() }
}

fn predicate(value: bool) -> Outcome {
    Outcome { results: vec![Value::Bool(value)], found: value, ..Default::default() }
}

/// Cartesian structure, or the reason it does not exist.
fn products_structure(cat: &Arc<FinCategory>) -> Result<(MonoidalStructure, SymmetricStructure), Outcome> {
    cartesian_structure(cat).map_err(|e| not_found(e.to_string()))
}

fn structure(cat: FinCategory, tensor: TensorChoice) -> Res<Result<(MonoidalStructure, SymmetricStructure), Outcome>> {
    let cat = Arc::new(cat);
    match tensor {
        TensorChoice::Products => Ok(products_structure(&cat)),
        TensorChoice::Monoid => {
            let m = MonoidalStructure::strict_monoid(cat)?;
            let s = SymmetricStructure::identity(&m)?;
            Ok(Ok((m, s)))
        }
    }
}

fn summary(m: &MonoidalStructure) -> Value {
    json!({ "unit": m.base().object_name(m.unit_object()), "strict": m.strict() })
}

fn dispatch(command: Command) -> Res<Outcome> {
    Ok(match command {
        Command::Check { file } => Outcome::report(check_category_laws(&load_category(&file)?).violations),
        Command::CheckFunctor { file } => Outcome::report(check_functor_laws(&load_functor(&file)?).violations),
        Command::CheckNatural { f, g, components } => {
            let (f, g) = (load_functor(&f)?, load_functor(&g)?);
            let (src, tgt) = (f.source_category().clone(), f.target_category().clone());
            let mut chosen = vec![None; src.num_objects()];
            for c in &components {
                let (a, m) = c.split_once('=').ok_or_else(|| Fatal(format!("component `{c}` is not OBJ=MOR")))?;
                let a = object(&src, a.trim())?;
                let m = tgt.morphism(m.trim()).ok_or_else(|| Fatal(format!("unknown morphism `{}`", m.trim())))?;
                if chosen[a.0].replace(m).is_some() {
                    return Err(Fatal(format!("component at `{}` given twice", src.object_name(a))));
                }
            }
            let comps = chosen
                .into_iter()
                .enumerate()
                .map(|(i, m)| m.ok_or_else(|| Fatal(format!("no component at `{}`", src.object_name(ObjId(i))))))
                .collect::<Res<Vec<_>>>()?;
            Outcome::report(check_naturality(&NatTransData::new(f, g, comps)?).violations)
        }
        Command::Compose { file, f, g } => {
            let cat = load_category(&file)?;
            let mor = |n: &str| cat.morphism(n).ok_or_else(|| Fatal(format!("unknown morphism `{n}`")));
            let h = cat.compose(mor(&f)?, mor(&g)?)?;
            Outcome::results(vec![json!(cat.morphism_name(h))])
        }
        Command::Commutes { file, left, right } => {
            let cat = load_category(&file)?;
            let (p, q) = (category_path(&cat, &left)?, category_path(&cat, &right)?);
            predicate(commutes(&cat, &p, &q)?)
        }
        Command::Opposite { file } => {
            Outcome::results(vec![json!(print_category(&opposite_category(&load_category(&file)?)))])
        }
        Command::Paths { file, from, to, max_len, count } => {
            let q = load_quiver(&file)?;
            let paths = q.hom_paths(&from, &to, max_len)?;
            if count {
                Outcome::results(vec![json!(paths.len())])
            } else {
                Outcome::results(paths.iter().map(|p| json!(q.show_path(p))).collect())
            }
        }
        Command::FreeEval { quiver, assignment, path } => {
            let q = load_quiver(&quiver)?;
            let asg = load_assignment(&assignment)?;
            let size = |node: &str| {
                asg.nodes
                    .iter()
                    .find(|(n, _)| n == node)
                    .map(|&(_, k)| FinSetObj(k))
                    .ok_or_else(|| Fatal(format!("node `{node}` has no size")))
            };
            let sizes = q.node_ids().map(|n| size(q.node_name(n))).collect::<Res<Vec<_>>>()?;
            for (n, _) in &asg.nodes {
                q.node(n).ok_or_else(|| Fatal(format!("`{n}` is not a node")))?;
            }
            for (e, _) in &asg.edges {
                q.edge_id(e).ok_or_else(|| Fatal(format!("`{e}` is not an edge")))?;
            }
            let tables = q
                .edge_ids()
                .map(|e| {
                    let edge = q.edge(e);
                    let (_, table) = asg
                        .edges
                        .iter()
                        .find(|(n, _)| n == &edge.name)
                        .ok_or_else(|| Fatal(format!("edge `{}` has no table", edge.name)))?;
                    FinFunction::new(sizes[edge.src.0], sizes[edge.tgt.0], table.clone())
                        .map_err(|err| Fatal(format!("edge `{}`: {err}", edge.name)))
                })
                .collect::<Res<Vec<_>>>()?;
            let p = quiver_path(&q, &path)?;
            let image = evaluate_free_functor(&q, &sizes, &tables, &p)?;
            Outcome::results(vec![json!({ "dom": image.dom().0, "cod": image.cod().0, "table": image.table() })])
        }
        Command::Terminal { file } => {
            let cat = load_category(&file)?;
            let found: Vec<Value> = find_terminals(&cat).iter().map(|w| json!(cat.object_name(w.object))).collect();
            if found.is_empty() {
                not_found("no terminal object".into())
            } else {
                Outcome::results(found)
            }
        }
        Command::Initial { file } => {
            let cat = load_category(&file)?;
            let found: Vec<Value> = find_initials(&cat).iter().map(|w| json!(cat.object_name(w.object))).collect();
            if found.is_empty() {
                not_found("no initial object".into())
            } else {
                Outcome::results(found)
            }
        }
        Command::Product { file, a, b } => {
            let cat = load_category(&file)?;
            let ws = find_products(&cat, object(&cat, &a)?, object(&cat, &b)?)?;
            let found: Vec<Value> = ws
                .iter()
                .map(|w| {
                    json!({
                        "apex": cat.object_name(w.apex),
                        "proj_l": cat.morphism_name(w.proj_l),
                        "proj_r": cat.morphism_name(w.proj_r),
                    })
                })
                .collect();
            if found.is_empty() {
                not_found(format!("no product of {a} and {b}"))
            } else {
                Outcome::results(found)
            }
        }
        Command::Coproduct { file, a, b } => {
            let cat = load_category(&file)?;
            let ws = find_coproducts(&cat, object(&cat, &a)?, object(&cat, &b)?)?;
            let found: Vec<Value> = ws
                .iter()
                .map(|w| {
                    json!({
                        "apex": cat.object_name(w.apex),
                        "inj_l": cat.morphism_name(w.inj_l),
                        "inj_r": cat.morphism_name(w.inj_r),
                    })
                })
                .collect();
            if found.is_empty() {
                not_found(format!("no coproduct of {a} and {b}"))
            } else {
                Outcome::results(found)
            }
        }
        Command::MonoidalFromProducts { file } => {
            let cat = Arc::new(load_category(&file)?);
            match products_structure(&cat) {
                Err(o) => o,
                Ok((m, s)) => {
                    let tensor: Vec<Value> = cat
                        .object_ids()
                        .flat_map(|a| cat.object_ids().map(move |b| (a, b)))
                        .map(|(a, b)| {
                            json!([cat.object_name(a), cat.object_name(b), cat.object_name(m.tensor_objects(a, b))])
                        })
                        .collect();
                    let mut result = summary(&m);
                    result["tensor"] = Value::Array(tensor);
                    let mut report = check_monoidal_structure(&m);
                    report.merge(check_symmetric_structure(&m, &s));
                    Outcome { results: vec![result], ..Outcome::report(report.violations) }
                }
            }
        }
        Command::CheckMonoidal { file, tensor } => match structure(load_category(&file)?, tensor)? {
            Err(o) => o,
            Ok((m, _)) => Outcome { results: vec![summary(&m)], ..Outcome::report(check_monoidal_structure(&m).violations) },
        },
        Command::CheckSymmetric { file, tensor } => match structure(load_category(&file)?, tensor)? {
            Err(o) => o,
            Ok((m, s)) => {
                let mut report = check_monoidal_structure(&m);
                report.merge(check_symmetric_structure(&m, &s));
                Outcome { results: vec![summary(&m)], ..Outcome::report(report.violations) }
            }
        },
        Command::Cat { files } => {
            let cats = files
                .iter()
                .map(|p| {
                    let name = p.file_stem().and_then(|s| s.to_str()).unwrap_or("").to_string();
                    Ok((name, Arc::new(load_category(p)?)))
                })
                .collect::<Res<Vec<_>>>()?;
            let cat = cat_category(&cats, budget()?)?;
            let c = &cat.category;
            let homs: Vec<Value> = c
                .object_ids()
                .flat_map(|a| c.object_ids().map(move |b| (a, b)))
                .map(|(a, b)| json!([c.object_name(a), c.object_name(b), c.hom(a, b).len()]))
                .collect();
            let result = json!({
                "objects": c.object_ids().map(|a| c.object_name(a)).collect::<Vec<_>>(),
                "homs": homs,
            });
            Outcome { results: vec![result], ..Outcome::report(check_category_laws(c).violations) }
        }
        Command::Functors { source, target, count } => {
            let src = Arc::new(load_category(&source)?);
            let tgt = Arc::new(load_category(&target)?);
            let fs = enumerate_functors(&src, &tgt);
            if count {
                Outcome::results(vec![json!(fs.len())])
            } else {
                Outcome::results(fs.iter().map(functor_json).collect())
            }
        }
        Command::SmcEqual { sig, left, right } => {
            let sig = load_signature(&sig)?;
            let l = parse_term(&sig, &left).map_err(|e| Fatal(format!("left term: {e}")))?;
            let r = parse_term(&sig, &right).map_err(|e| Fatal(format!("right term: {e}")))?;
            predicate(diagrams_equal(&sig, &l, &r))
        }
        Command::SmcEnum { sig, dom, cod, max_boxes, count } => {
            let sig = load_signature(&sig)?;
            let (w1, w2) = (sig.parse_word(&dom)?, sig.parse_word(&cod)?);
            let homs = enumerate_homs(&sig, &w1, &w2, max_boxes);
            if count {
                Outcome::results(vec![json!(homs.len())])
            } else {
                Outcome::results(homs.into_iter().map(|c| json!(c.form)).collect())
            }
        }
        Command::SmcCheck { sig, max_boxes, max_word } => {
            let sig = load_signature(&sig)?;
            Outcome::report(check_free_smc_laws(&sig, SmcBounds { max_boxes, max_word }).violations)
        }
    })
}
