//! Line-oriented text formats for categories (`.cat`), quivers (`.qv`),
//! signatures (`.sig`), functors (`.fun`) and finite-set assignments
//! (`.asg`). `#` starts a comment. Parsing checks syntax here and hands
//! semantic validation to the owning builder, attaching declaration spans to
//! whatever it rejects.

use std::fmt;
use std::path::Path as FsPath;

use catk_core::kernel::{FinCategory, FinCategoryBuilder, KernelError};
use catk_core::quiver::{Quiver, QuiverError};
use catk_core::smc::{Signature, SmcError};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}", self.line)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("line {line}, column {col}: expected {expected}")]
    Syntax { line: usize, col: usize, expected: String },
    #[error("{}: {message}", show_spans(.spans))]
    Semantic { message: String, spans: Vec<Span> },
    #[error("unknown document kind `{0}` (expected .cat, .qv, .sig, .fun or .asg)")]
    UnknownKind(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

fn show_spans(spans: &[Span]) -> String {
    if spans.is_empty() {
        "document".to_string()
    } else {
        spans.iter().map(Span::to_string).collect::<Vec<_>>().join(", ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DocumentKind {
    Category,
    Quiver,
    Signature,
    Functor,
    Assignment,
}

impl DocumentKind {
    pub fn from_extension(ext: &str) -> Option<Self> {
        match ext {
            "cat" => Some(Self::Category),
            "qv" => Some(Self::Quiver),
            "sig" => Some(Self::Signature),
            "fun" => Some(Self::Functor),
            "asg" => Some(Self::Assignment),
            _ => None,
        }
    }

    pub fn from_path(path: &FsPath) -> Result<Self, DslError> {
        let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
        Self::from_extension(ext).ok_or_else(|| DslError::UnknownKind(path.display().to_string()))
    }
}

/// A functor presentation; the categories it names are resolved by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorDecl {
    pub name: String,
    pub source: String,
    pub target: String,
    pub objects: Vec<(String, String)>,
    pub morphisms: Vec<(String, String)>,
}

/// Finite-set sizes for nodes and tables for edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    pub nodes: Vec<(String, usize)>,
    pub edges: Vec<(String, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Category(FinCategory),
    Quiver(Quiver),
    Signature(Signature),
    Functor(FunctorDecl),
    Assignment(Assignment),
}

#[derive(Clone, Debug)]
pub struct Document {
    pub kind: DocumentKind,
    pub payload: Payload,
    /// One entry per declaration line, in file order.
    pub spans: Vec<Span>,
}

impl PartialEq for Document {
    /// Structural equality; spans are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.payload == other.payload
    }
}

/// Cursor over one line. Columns are 1-based character positions.
struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

impl<'a> Cursor<'a> {
    fn new(line: usize, text: &'a str) -> Self {
        Cursor { line, text, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn col(&self) -> usize {
        self.text[..self.pos].chars().count() + 1
    }

    fn span(&self) -> Span {
        Span { line: self.line, col: self.col() }
    }

    fn fail<T>(&self, expected: &str) -> Result<T, DslError> {
        Err(DslError::Syntax { line: self.line, col: self.col(), expected: expected.to_string() })
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), DslError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.fail(&format!("`{token}`"))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, DslError> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !is_ident_char(c)).unwrap_or(self.rest().len());
        if len == 0 {
            return self.fail(what);
        }
        let s = self.rest()[..len].to_string();
        self.pos += len;
        Ok(s)
    }

    /// `.`-separated identifiers or `1`.
    fn word(&mut self) -> Result<String, DslError> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !(is_ident_char(c) || c == '.')).unwrap_or(self.rest().len());
        let w = &self.rest()[..len];
        if w.is_empty() || w.split('.').any(str::is_empty) {
            return self.fail("a word (`x.y` or `1`)");
        }
        self.pos += len;
        Ok(w.to_string())
    }

    fn number(&mut self) -> Result<usize, DslError> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        match self.rest()[..len].parse() {
            Ok(n) => {
                self.pos += len;
                Ok(n)
            }
            Err(_) => self.fail("a non-negative integer"),
        }
    }

    /// Comma-separated identifiers up to the end of the line (possibly none).
    fn ident_list(&mut self, what: &str) -> Result<Vec<String>, DslError> {
        let mut out = Vec::new();
        if self.at_end() {
            return Ok(out);
        }
        loop {
            out.push(self.ident(what)?);
            if !self.eat(",") {
                break;
            }
        }
        Ok(out)
    }

    /// Everything up to the next whitespace; for file references.
    fn token(&mut self, what: &str) -> Result<String, DslError> {
        self.skip_ws();
        let len = self.rest().find(char::is_whitespace).unwrap_or(self.rest().len());
        if len == 0 {
            return self.fail(what);
        }
        let s = self.rest()[..len].to_string();
        self.pos += len;
        Ok(s)
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.rest().is_empty()
    }

    fn finish(&mut self) -> Result<(), DslError> {
        if self.at_end() {
            Ok(())
        } else {
            self.fail("end of line")
        }
    }
}

/// Non-blank lines with comments removed, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        (!l.trim().is_empty()).then_some((i + 1, l))
    })
}

fn semantic(message: impl fmt::Display, spans: Vec<Span>) -> DslError {
    DslError::Semantic { message: message.to_string(), spans }
}

pub fn parse_document(kind: DocumentKind, text: &str) -> Result<Document, DslError> {
    match kind {
        DocumentKind::Category => parse_category(text),
        DocumentKind::Quiver => parse_quiver(text),
        DocumentKind::Signature => parse_signature(text),
        DocumentKind::Functor => parse_functor(text),
        DocumentKind::Assignment => parse_assignment(text),
    }
}

/// Read and parse a file, choosing the format from its extension.
pub fn load_document(path: &FsPath) -> Result<Document, DslError> {
    let kind = DocumentKind::from_path(path)?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| DslError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_document(kind, &text).map_err(|e| match e {
        DslError::Syntax { .. } | DslError::Semantic { .. } => {
            DslError::Io { path: path.display().to_string(), message: e.to_string() }
        }
        other => other,
    })
}

#[derive(Default)]
struct CategoryDecls {
    objects: Vec<(String, Span)>,
    morphisms: Vec<(String, String, String, Span)>,
    comps: Vec<(String, String, String, Span)>,
}

impl CategoryDecls {
    fn spans_for(&self, err: &KernelError) -> Vec<Span> {
        let mor_named = |n: &str| -> Vec<Span> {
            let mut spans: Vec<Span> = self.morphisms.iter().filter(|m| m.0 == n).map(|m| m.3).collect();
            spans.extend(self.objects.iter().filter(|o| format!("id_{}", o.0) == n).map(|o| o.1));
            spans
        };
        let comp_of = |f: &str, g: &str| -> Vec<Span> {
            self.comps.iter().filter(|c| c.0 == f && c.1 == g).map(|c| c.3).collect()
        };
        let mut spans = match err {
            KernelError::DuplicateId(n) => {
                let mut s: Vec<Span> = self.objects.iter().filter(|o| &o.0 == n).map(|o| o.1).collect();
                s.extend(mor_named(n));
                s
            }
            KernelError::UnknownObject(o) => {
                self.morphisms.iter().filter(|m| &m.1 == o || &m.2 == o).map(|m| m.3).take(1).collect()
            }
            KernelError::UnknownMorphism(m) => self
                .comps
                .iter()
                .filter(|c| &c.0 == m || &c.1 == m || &c.2 == m)
                .map(|c| c.3)
                .take(1)
                .collect(),
            KernelError::NotComposable { f, g }
            | KernelError::IllTypedComposite { f, g, .. }
            | KernelError::ConflictingComposite { f, g, .. } => comp_of(f, g),
            KernelError::MissingComposite { f, g } => {
                let mut s = mor_named(f);
                s.extend(mor_named(g));
                s
            }
            KernelError::IdentityConflict(msg) => self
                .comps
                .iter()
                .filter(|c| msg.contains(&format!("`{} ; {}`", c.0, c.1)))
                .map(|c| c.3)
                .collect(),
            _ => Vec::new(),
        };
        spans.sort();
        spans.dedup();
        spans
    }
}

fn parse_category(text: &str) -> Result<Document, DslError> {
    let mut decls = CategoryDecls::default();
    let mut spans = Vec::new();
    for (n, line) in lines(text) {
        let mut c = Cursor::new(n, line);
        c.skip_ws();
        let span = c.span();
        if c.eat("objects") {
            c.expect(":")?;
            for o in c.ident_list("an object name")? {
                decls.objects.push((o, span));
            }
        } else if c.eat("mor") {
            let name = c.ident("a morphism name")?;
            c.expect(":")?;
            let src = c.ident("a source object")?;
            c.expect("->")?;
            let tgt = c.ident("a target object")?;
            decls.morphisms.push((name, src, tgt, span));
        } else if c.eat("comp") {
            let f = c.ident("a morphism name")?;
            let g = c.ident("a morphism name")?;
            c.expect("=")?;
            let h = c.ident("a morphism name")?;
            decls.comps.push((f, g, h, span));
        } else {
            return c.fail("`objects:`, `mor` or `comp`");
        }
        c.finish()?;
        spans.push(span);
    }
    let mut b = FinCategoryBuilder::new();
    b.objects(decls.objects.iter().map(|o| o.0.clone()));
    for (name, src, tgt, _) in &decls.morphisms {
        b.morphism(name.clone(), src.clone(), tgt.clone());
    }
    for (f, g, h, _) in &decls.comps {
        b.compose(f.clone(), g.clone(), h.clone());
    }
    let cat = b.build().map_err(|e| semantic(&e, decls.spans_for(&e)))?;
    Ok(Document { kind: DocumentKind::Category, payload: Payload::Category(cat), spans })
}

fn parse_quiver(text: &str) -> Result<Document, DslError> {
    let mut nodes: Vec<(String, Span)> = Vec::new();
    let mut edges: Vec<(String, String, String, Span)> = Vec::new();
    let mut spans = Vec::new();
    for (n, line) in lines(text) {
        let mut c = Cursor::new(n, line);
        c.skip_ws();
        let span = c.span();
        if c.eat("nodes") {
            c.expect(":")?;
            for x in c.ident_list("a node name")? {
                nodes.push((x, span));
            }
        } else if c.eat("edge") {
            let name = c.ident("an edge name")?;
            c.expect(":")?;
            let src = c.ident("a source node")?;
            c.expect("->")?;
            let tgt = c.ident("a target node")?;
            edges.push((name, src, tgt, span));
        } else {
            return c.fail("`nodes:` or `edge`");
        }
        c.finish()?;
        spans.push(span);
    }
    let node_names: Vec<&str> = nodes.iter().map(|n| n.0.as_str()).collect();
    let edge_triples: Vec<(&str, &str, &str)> =
        edges.iter().map(|e| (e.0.as_str(), e.1.as_str(), e.2.as_str())).collect();
    let q = Quiver::new(&node_names, &edge_triples).map_err(|e| {
        let spans = match &e {
            QuiverError::DuplicateNode(x) => nodes.iter().filter(|n| &n.0 == x).map(|n| n.1).collect(),
            QuiverError::UnknownNode(x) => {
                edges.iter().filter(|ed| &ed.1 == x || &ed.2 == x).map(|ed| ed.3).take(1).collect()
            }
            QuiverError::DuplicateEdgeName(x) => edges.iter().filter(|ed| &ed.0 == x).map(|ed| ed.3).collect(),
            _ => Vec::new(),
        };
        semantic(&e, spans)
    })?;
    Ok(Document { kind: DocumentKind::Quiver, payload: Payload::Quiver(q), spans })
}

fn parse_signature(text: &str) -> Result<Document, DslError> {
    let mut objects: Vec<(String, Span)> = Vec::new();
    let mut gens: Vec<(String, String, String, Span)> = Vec::new();
    let mut spans = Vec::new();
    for (n, line) in lines(text) {
        let mut c = Cursor::new(n, line);
        c.skip_ws();
        let span = c.span();
        if c.eat("objects") {
            c.expect(":")?;
            for x in c.ident_list("an object token")? {
                objects.push((x, span));
            }
        } else if c.eat("gen") {
            let name = c.ident("a generator name")?;
            c.expect(":")?;
            let dom = c.word()?;
            c.expect("->")?;
            let cod = c.word()?;
            gens.push((name, dom, cod, span));
        } else {
            return c.fail("`objects:` or `gen`");
        }
        c.finish()?;
        spans.push(span);
    }
    let obj_names: Vec<&str> = objects.iter().map(|o| o.0.as_str()).collect();
    let gen_triples: Vec<(&str, &str, &str)> =
        gens.iter().map(|g| (g.0.as_str(), g.1.as_str(), g.2.as_str())).collect();
    let sig = Signature::new(&obj_names, &gen_triples).map_err(|e| {
        let spans = match &e {
            SmcError::DuplicateObject(x) => objects.iter().filter(|o| &o.0 == x).map(|o| o.1).collect(),
            SmcError::DuplicateGenerator(x) => gens.iter().filter(|g| &g.0 == x).map(|g| g.3).collect(),
            SmcError::UnknownObjectToken(x) => gens
                .iter()
                .filter(|g| g.1.split('.').chain(g.2.split('.')).any(|t| t == x))
                .map(|g| g.3)
                .take(1)
                .collect(),
            _ => Vec::new(),
        };
        semantic(&e, spans)
    })?;
    Ok(Document { kind: DocumentKind::Signature, payload: Payload::Signature(sig), spans })
}

fn duplicates<'a>(items: impl Iterator<Item = (&'a str, Span)>) -> Option<(String, Vec<Span>)> {
    let items: Vec<(&str, Span)> = items.collect();
    for (i, (name, _)) in items.iter().enumerate() {
        if items[..i].iter().any(|(n, _)| n == name) {
            let spans = items.iter().filter(|(n, _)| n == name).map(|(_, s)| *s).collect();
            return Some((name.to_string(), spans));
        }
    }
    None
}

fn parse_functor(text: &str) -> Result<Document, DslError> {
    let mut header: Option<(String, String, String)> = None;
    let mut objects: Vec<(String, String, Span)> = Vec::new();
    let mut morphisms: Vec<(String, String, Span)> = Vec::new();
    let mut spans = Vec::new();
    for (n, line) in lines(text) {
        let mut c = Cursor::new(n, line);
        c.skip_ws();
        let span = c.span();
        if c.eat("functor") {
            if header.is_some() {
                return Err(semantic("second `functor` header", vec![span]));
            }
            let name = c.ident("a functor name")?;
            c.expect(":")?;
            let src = c.token("a source file")?;
            c.expect("->")?;
            let tgt = c.token("a target file")?;
            header = Some((name, src, tgt));
        } else if c.eat("obj") {
            let a = c.ident("an object name")?;
            c.expect("|->")?;
            let x = c.ident("an object name")?;
            objects.push((a, x, span));
        } else if c.eat("mor") {
            let f = c.ident("a morphism name")?;
            c.expect("|->")?;
            let g = c.ident("a morphism name")?;
            morphisms.push((f, g, span));
        } else {
            return c.fail("`functor`, `obj` or `mor`");
        }
        c.finish()?;
        spans.push(span);
    }
    let (name, source, target) = header.ok_or_else(|| semantic("missing `functor` header", Vec::new()))?;
    if let Some((x, s)) = duplicates(objects.iter().map(|o| (o.0.as_str(), o.2))) {
        return Err(semantic(format!("object `{x}` is mapped twice"), s));
    }
    if let Some((x, s)) = duplicates(morphisms.iter().map(|m| (m.0.as_str(), m.2))) {
        return Err(semantic(format!("morphism `{x}` is mapped twice"), s));
    }
    let decl = FunctorDecl {
        name,
        source,
        target,
        objects: objects.into_iter().map(|(a, x, _)| (a, x)).collect(),
        morphisms: morphisms.into_iter().map(|(f, g, _)| (f, g)).collect(),
    };
    Ok(Document { kind: DocumentKind::Functor, payload: Payload::Functor(decl), spans })
}

fn parse_assignment(text: &str) -> Result<Document, DslError> {
    let mut nodes: Vec<(String, usize, Span)> = Vec::new();
    let mut edges: Vec<(String, Vec<usize>, Span)> = Vec::new();
    let mut spans = Vec::new();
    for (n, line) in lines(text) {
        let mut c = Cursor::new(n, line);
        c.skip_ws();
        let span = c.span();
        if c.eat("node") {
            let name = c.ident("a node name")?;
            c.expect("=")?;
            nodes.push((name, c.number()?, span));
        } else if c.eat("edge") {
            let name = c.ident("an edge name")?;
            c.expect("=")?;
            c.expect("[")?;
            let mut table = Vec::new();
            if !c.eat("]") {
                loop {
                    table.push(c.number()?);
                    if c.eat("]") {
                        break;
                    }
                    c.expect(",")?;
                }
            }
            edges.push((name, table, span));
        } else {
            return c.fail("`node` or `edge`");
        }
        c.finish()?;
        spans.push(span);
    }
    if let Some((x, s)) = duplicates(nodes.iter().map(|o| (o.0.as_str(), o.2))) {
        return Err(semantic(format!("node `{x}` is assigned twice"), s));
    }
    if let Some((x, s)) = duplicates(edges.iter().map(|o| (o.0.as_str(), o.2))) {
        return Err(semantic(format!("edge `{x}` is assigned twice"), s));
    }
    let asg = Assignment {
        nodes: nodes.into_iter().map(|(n, k, _)| (n, k)).collect(),
        edges: edges.into_iter().map(|(e, t, _)| (e, t)).collect(),
    };
    Ok(Document { kind: DocumentKind::Assignment, payload: Payload::Assignment(asg), spans })
}

/// Canonical text: declarations in index order, one per line.
pub fn print_document(doc: &Document) -> String {
    match &doc.payload {
        Payload::Category(c) => print_category(c),
        Payload::Quiver(q) => print_quiver(q),
        Payload::Signature(s) => print_signature(s),
        Payload::Functor(f) => print_functor(f),
        Payload::Assignment(a) => print_assignment(a),
    }
}

/// Objects, then non-identity morphisms, then composites of two
/// non-identity morphisms. Identities are referred to as `id_<object>`.
pub fn print_category(c: &FinCategory) -> String {
    let name = |m| {
        if c.is_identity(m) {
            format!("id_{}", c.object_name(c.source(m)))
        } else {
            c.morphism_name(m).to_string()
        }
    };
    let objects: Vec<&str> = c.object_ids().map(|a| c.object_name(a)).collect();
    let mut out = list_line("objects:", &objects);
    for f in c.morphism_ids().filter(|&f| !c.is_identity(f)) {
        out.push_str(&format!(
            "mor {} : {} -> {}\n",
            c.morphism_name(f),
            c.object_name(c.source(f)),
            c.object_name(c.target(f))
        ));
    }
    for (f, g, h) in c.proper_composites() {
        out.push_str(&format!("comp {} {} = {}\n", name(f), name(g), name(h)));
    }
    out
}

fn list_line(head: &str, items: &[&str]) -> String {
    if items.is_empty() {
        format!("{head}\n")
    } else {
        format!("{head} {}\n", items.join(", "))
    }
}

pub fn print_quiver(q: &Quiver) -> String {
    let nodes: Vec<&str> = q.node_ids().map(|n| q.node_name(n)).collect();
    let mut out = list_line("nodes:", &nodes);
    for e in q.edge_ids() {
        let edge = q.edge(e);
        out.push_str(&format!("edge {} : {} -> {}\n", edge.name, q.node_name(edge.src), q.node_name(edge.tgt)));
    }
    out
}

pub fn print_signature(s: &Signature) -> String {
    let objects: Vec<&str> = s.objects().iter().map(String::as_str).collect();
    let mut out = list_line("objects:", &objects);
    for g in s.generators() {
        out.push_str(&format!("gen {} : {} -> {}\n", g.name, s.show_word(&g.dom), s.show_word(&g.cod)));
    }
    out
}

pub fn print_functor(f: &FunctorDecl) -> String {
    let mut out = format!("functor {} : {} -> {}\n", f.name, f.source, f.target);
    for (a, x) in &f.objects {
        out.push_str(&format!("obj {a} |-> {x}\n"));
    }
    for (m, g) in &f.morphisms {
        out.push_str(&format!("mor {m} |-> {g}\n"));
    }
    out
}

pub fn print_assignment(a: &Assignment) -> String {
    let mut out = String::new();
    for (n, k) in &a.nodes {
        out.push_str(&format!("node {n} = {k}\n"));
    }
    for (e, t) in &a.edges {
        let t: Vec<String> = t.iter().map(usize::to_string).collect();
        out.push_str(&format!("edge {e} = [{}]\n", t.join(",")));
    }
    out
}
