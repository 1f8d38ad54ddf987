//! Finite categories with explicit hom-sets, the exhaustive law checker,
//! opposites, commutation of paths, and the [`CategoryView`] interface shared
//! with possibly-infinite categories.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::report::{Law, LawReport};

/// Index of an object inside one [`FinCategory`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

/// Index of a morphism inside one [`FinCategory`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MorId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("invalid identifier `{0}`")]
    InvalidName(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("missing composite `{f} ; {g}`")]
    MissingComposite { f: String, g: String },
    #[error("composite `{f} ; {g} = {h}` is ill-typed: `{h}` is not a morphism {src} -> {tgt}")]
    IllTypedComposite { f: String, g: String, h: String, src: String, tgt: String },
    #[error("identity conflict: {0}")]
    IdentityConflict(String),
    #[error("conflicting composites for `{f} ; {g}`: `{first}` and `{second}`")]
    ConflictingComposite { f: String, g: String, first: String, second: String },
    #[error("`{f}` and `{g}` are not composable")]
    NotComposable { f: String, g: String },
    #[error("paths do not share endpoints: {left} vs {right}")]
    EndpointMismatch { left: String, right: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Morphism {
    name: String,
    src: ObjId,
    tgt: ObjId,
}

/// A fully tabulated finite category.
///
/// Morphism equality is identifier equality: hom-sets are enumerated, never
/// quotiented. The composition table is total on composable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<MorId>,
    /// Flattened `n × n` table of hom-sets, indexed `src * n + tgt`.
    homs: Vec<Vec<MorId>>,
    comp: BTreeMap<(MorId, MorId), MorId>,
    obj_index: HashMap<String, ObjId>,
    mor_index: HashMap<String, MorId>,
}

/// Collects a presentation and validates it into a [`FinCategory`].
///
/// Identities are created as `id_<object>` unless a declared endomorphism is
/// designated with [`FinCategoryBuilder::identity`]. Composites involving an
/// identity are filled in automatically; supplied entries that disagree with
/// them are rejected.
#[derive(Clone, Debug, Default)]
pub struct FinCategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    identities: Vec<(String, String)>,
    entries: Vec<(String, String, String)>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c == ':' || c == '#')
}

impl FinCategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: impl Into<String>) -> &mut Self {
        self.objects.push(name.into());
        self
    }

    pub fn objects<I, S>(&mut self, names: I) -> &mut Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.objects.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn morphism(
        &mut self,
        name: impl Into<String>,
        src: impl Into<String>,
        tgt: impl Into<String>,
    ) -> &mut Self {
        self.morphisms.push((name.into(), src.into(), tgt.into()));
        self
    }

    /// Designate the declared endomorphism `morphism` as the identity of `object`.
    pub fn identity(&mut self, object: impl Into<String>, morphism: impl Into<String>) -> &mut Self {
        self.identities.push((object.into(), morphism.into()));
        self
    }

    /// Supply `f ; g = h`.
    pub fn compose(
        &mut self,
        f: impl Into<String>,
        g: impl Into<String>,
        h: impl Into<String>,
    ) -> &mut Self {
        self.entries.push((f.into(), g.into(), h.into()));
        self
    }

    pub fn build(&self) -> Result<FinCategory, KernelError> {
        let mut obj_index = HashMap::new();
        for name in &self.objects {
            if !valid_name(name) {
                return Err(KernelError::InvalidName(name.clone()));
            }
            if obj_index.insert(name.clone(), ObjId(obj_index.len())).is_some() {
                return Err(KernelError::DuplicateId(name.clone()));
            }
        }

        // Declared morphisms, validated before identities are laid out.
        let mut declared: HashMap<&str, (ObjId, ObjId)> = HashMap::new();
        for (name, src, tgt) in &self.morphisms {
            if !valid_name(name) {
                return Err(KernelError::InvalidName(name.clone()));
            }
            let s = *obj_index.get(src).ok_or_else(|| KernelError::UnknownObject(src.clone()))?;
            let t = *obj_index.get(tgt).ok_or_else(|| KernelError::UnknownObject(tgt.clone()))?;
            if declared.insert(name.as_str(), (s, t)).is_some() {
                return Err(KernelError::DuplicateId(name.clone()));
            }
        }

        let mut designated: Vec<Option<String>> = vec![None; self.objects.len()];
        for (obj, mor) in &self.identities {
            let a = *obj_index.get(obj).ok_or_else(|| KernelError::UnknownObject(obj.clone()))?;
            let &(s, t) =
                declared.get(mor.as_str()).ok_or_else(|| KernelError::UnknownMorphism(mor.clone()))?;
            if s != a || t != a {
                return Err(KernelError::IdentityConflict(format!(
                    "`{mor}` is not an endomorphism of `{obj}`"
                )));
            }
            if designated[a.0].replace(mor.clone()).is_some() {
                return Err(KernelError::IdentityConflict(format!(
                    "object `{obj}` has two designated identities"
                )));
            }
        }

        let mut morphisms = Vec::new();
        let mut mor_index = HashMap::new();
        for (i, obj) in self.objects.iter().enumerate() {
            if designated[i].is_none() {
                let name = format!("id_{obj}");
                if declared.contains_key(name.as_str()) {
                    return Err(KernelError::DuplicateId(name));
                }
                mor_index.insert(name.clone(), MorId(morphisms.len()));
                morphisms.push(Morphism { name, src: ObjId(i), tgt: ObjId(i) });
            }
        }
        for (name, _, _) in &self.morphisms {
            let (src, tgt) = declared[name.as_str()];
            mor_index.insert(name.clone(), MorId(morphisms.len()));
            morphisms.push(Morphism { name: name.clone(), src, tgt });
        }
        let identities: Vec<MorId> = (0..self.objects.len())
            .map(|i| match &designated[i] {
                Some(m) => mor_index[m],
                None => mor_index[&format!("id_{}", self.objects[i])],
            })
            .collect();

        let n = self.objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for (i, m) in morphisms.iter().enumerate() {
            homs[m.src.0 * n + m.tgt.0].push(MorId(i));
        }

        let mut comp = BTreeMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            let f = MorId(i);
            comp.insert((identities[m.src.0], f), f);
            comp.insert((f, identities[m.tgt.0]), f);
        }
        let is_identity = |m: MorId| identities[morphisms[m.0].src.0] == m;

        let lookup = |name: &String| {
            mor_index.get(name).copied().ok_or_else(|| KernelError::UnknownMorphism(name.clone()))
        };
        let mut supplied: HashMap<(MorId, MorId), MorId> = HashMap::new();
        for (f, g, h) in &self.entries {
            let (fi, gi, hi) = (lookup(f)?, lookup(g)?, lookup(h)?);
            let (mf, mg, mh) = (&morphisms[fi.0], &morphisms[gi.0], &morphisms[hi.0]);
            if mf.tgt != mg.src {
                return Err(KernelError::NotComposable { f: f.clone(), g: g.clone() });
            }
            if mh.src != mf.src || mh.tgt != mg.tgt {
                return Err(KernelError::IllTypedComposite {
                    f: f.clone(),
                    g: g.clone(),
                    h: h.clone(),
                    src: self.objects[mf.src.0].clone(),
                    tgt: self.objects[mg.tgt.0].clone(),
                });
            }
            if is_identity(fi) || is_identity(gi) {
                let forced = comp[&(fi, gi)];
                if forced != hi {
                    return Err(KernelError::IdentityConflict(format!(
                        "`{f} ; {g}` is forced to be `{}`, not `{h}`",
                        morphisms[forced.0].name
                    )));
                }
            }
            if let Some(prev) = supplied.insert((fi, gi), hi) {
                if prev != hi {
                    return Err(KernelError::ConflictingComposite {
                        f: f.clone(),
                        g: g.clone(),
                        first: morphisms[prev.0].name.clone(),
                        second: h.clone(),
                    });
                }
            }
            comp.insert((fi, gi), hi);
        }

        let cat = FinCategory { objects: self.objects.clone(), morphisms, identities, homs, comp, obj_index, mor_index };
        for f in cat.morphism_ids() {
            for &g in cat.out_of(cat.target(f)).iter() {
                if !cat.comp.contains_key(&(f, g)) {
                    return Err(KernelError::MissingComposite {
                        f: cat.morphism_name(f).to_string(),
                        g: cat.morphism_name(g).to_string(),
                    });
                }
            }
        }
        Ok(cat)
    }
}

impl FinCategory {
    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object_ids(&self) -> impl Iterator<Item = ObjId> + '_ {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = MorId> + '_ {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn object(&self, name: &str) -> Option<ObjId> {
        self.obj_index.get(name).copied()
    }

    pub fn morphism(&self, name: &str) -> Option<MorId> {
        self.mor_index.get(name).copied()
    }

    pub fn object_name(&self, a: ObjId) -> &str {
        &self.objects[a.0]
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn source(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].src
    }

    pub fn target(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].tgt
    }

    pub fn identity(&self, a: ObjId) -> MorId {
        self.identities[a.0]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identities[self.source(f).0] == f
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> &[MorId] {
        &self.homs[a.0 * self.objects.len() + b.0]
    }

    /// All morphisms with source `a`, in index order.
    pub fn out_of(&self, a: ObjId) -> Vec<MorId> {
        self.morphism_ids().filter(|&f| self.source(f) == a).collect()
    }

    /// `f ; g` (first `f`, then `g`).
    pub fn compose(&self, f: MorId, g: MorId) -> Result<MorId, KernelError> {
        self.comp.get(&(f, g)).copied().ok_or_else(|| KernelError::NotComposable {
            f: self.morphism_name(f).to_string(),
            g: self.morphism_name(g).to_string(),
        })
    }

    /// Every composition table entry, identities included, ordered by `(f, g)`.
    pub fn composites(&self) -> impl Iterator<Item = (MorId, MorId, MorId)> + '_ {
        self.comp.iter().map(|(&(f, g), &h)| (f, g, h))
    }

    /// Composites where neither factor is an identity.
    pub fn proper_composites(&self) -> impl Iterator<Item = (MorId, MorId, MorId)> + '_ {
        self.composites().filter(|&(f, g, _)| !self.is_identity(f) && !self.is_identity(g))
    }

    /// Replace one composition entry without re-running identity checks.
    ///
    /// The result is structurally well-typed but may break the category laws;
    /// it exists to exercise the law checker.
    pub fn with_composite(&self, f: MorId, g: MorId, h: MorId) -> Result<FinCategory, KernelError> {
        if self.target(f) != self.source(g) {
            return Err(KernelError::NotComposable {
                f: self.morphism_name(f).to_string(),
                g: self.morphism_name(g).to_string(),
            });
        }
        if self.source(h) != self.source(f) || self.target(h) != self.target(g) {
            return Err(KernelError::IllTypedComposite {
                f: self.morphism_name(f).to_string(),
                g: self.morphism_name(g).to_string(),
                h: self.morphism_name(h).to_string(),
                src: self.object_name(self.source(f)).to_string(),
                tgt: self.object_name(self.target(g)).to_string(),
            });
        }
        let mut out = self.clone();
        out.comp.insert((f, g), h);
        Ok(out)
    }

    /// Restrict to a subset of morphisms (identities are always kept).
    ///
    /// Fails with `MissingComposite` when the kept morphisms are not closed
    /// under composition.
    pub fn restrict(&self, keep: impl Fn(MorId) -> bool) -> Result<FinCategory, KernelError> {
        let mut b = FinCategoryBuilder::new();
        b.objects(self.objects.iter().cloned());
        let kept: Vec<MorId> =
            self.morphism_ids().filter(|&f| self.is_identity(f) || keep(f)).collect();
        for &f in &kept {
            b.morphism(self.morphism_name(f), self.object_name(self.source(f)), self.object_name(self.target(f)));
        }
        for a in self.object_ids() {
            b.identity(self.object_name(a), self.morphism_name(self.identity(a)));
        }
        for (f, g, h) in self.proper_composites() {
            if kept.contains(&f) && kept.contains(&g) {
                if !kept.contains(&h) {
                    return Err(KernelError::MissingComposite {
                        f: self.morphism_name(f).to_string(),
                        g: self.morphism_name(g).to_string(),
                    });
                }
                b.compose(self.morphism_name(f), self.morphism_name(g), self.morphism_name(h));
            }
        }
        b.build()
    }
}

/// Composable sequence of morphisms in a [`FinCategory`]; the empty path
/// carries its anchor object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorPath {
    pub anchor: ObjId,
    pub steps: Vec<MorId>,
}

impl MorPath {
    pub fn empty(anchor: ObjId) -> Self {
        MorPath { anchor, steps: Vec::new() }
    }

    /// Path of the given steps anchored at the source of the first.
    pub fn of(cat: &FinCategory, steps: &[MorId]) -> Option<Self> {
        let first = steps.first()?;
        Some(MorPath { anchor: cat.source(*first), steps: steps.to_vec() })
    }

    /// Fold the path through composition.
    pub fn evaluate(&self, cat: &FinCategory) -> Result<MorId, KernelError> {
        let mut acc = cat.identity(self.anchor);
        for &step in &self.steps {
            acc = cat.compose(acc, step)?;
        }
        Ok(acc)
    }

    pub fn source(&self) -> ObjId {
        self.anchor
    }

    pub fn target(&self, cat: &FinCategory) -> ObjId {
        self.steps.last().map_or(self.anchor, |&f| cat.target(f))
    }

    fn describe(&self, cat: &FinCategory) -> String {
        if self.steps.is_empty() {
            format!("@{}", cat.object_name(self.anchor))
        } else {
            self.steps.iter().map(|&f| cat.morphism_name(f)).collect::<Vec<_>>().join(";")
        }
    }
}

/// Exhaustively check both identity laws and associativity.
pub fn check_category_laws(cat: &FinCategory) -> LawReport {
    let mut report = LawReport::new();
    let name = |f: MorId| cat.morphism_name(f).to_string();
    for f in cat.morphism_ids() {
        let id_s = cat.identity(cat.source(f));
        let id_t = cat.identity(cat.target(f));
        let left = cat.comp[&(id_s, f)];
        if left != f {
            report.push(
                Law::LeftIdentity,
                vec![name(f), name(id_s)],
                format!("{} ; {} = {}, expected {}", name(id_s), name(f), name(left), name(f)),
            );
        }
        let right = cat.comp[&(f, id_t)];
        if right != f {
            report.push(
                Law::RightIdentity,
                vec![name(f), name(id_t)],
                format!("{} ; {} = {}, expected {}", name(f), name(id_t), name(right), name(f)),
            );
        }
    }
    let outs: Vec<Vec<MorId>> = cat.object_ids().map(|a| cat.out_of(a)).collect();
    for f in cat.morphism_ids() {
        for &g in &outs[cat.target(f).0] {
            let fg = cat.comp[&(f, g)];
            for &h in &outs[cat.target(g).0] {
                let gh = cat.comp[&(g, h)];
                let lhs = cat.comp[&(f, gh)];
                let rhs = cat.comp[&(fg, h)];
                if lhs != rhs {
                    report.push(
                        Law::Associativity,
                        vec![name(f), name(g), name(h)],
                        format!(
                            "{f} ; ({g} ; {h}) = {} but ({f} ; {g}) ; {h} = {}",
                            name(lhs),
                            name(rhs),
                            f = name(f),
                            g = name(g),
                            h = name(h)
                        ),
                    );
                }
            }
        }
    }
    report
}

/// Same objects, reversed morphisms, `comp_op(f, g) = comp(g, f)`.
pub fn opposite_category(cat: &FinCategory) -> FinCategory {
    let n = cat.num_objects();
    let morphisms = cat
        .morphisms
        .iter()
        .map(|m| Morphism { name: m.name.clone(), src: m.tgt, tgt: m.src })
        .collect();
    let mut homs = vec![Vec::new(); n * n];
    for a in 0..n {
        for b in 0..n {
            homs[a * n + b] = cat.homs[b * n + a].clone();
        }
    }
    let comp = cat.comp.iter().map(|(&(f, g), &h)| ((g, f), h)).collect();
    FinCategory {
        objects: cat.objects.clone(),
        morphisms,
        identities: cat.identities.clone(),
        homs,
        comp,
        obj_index: cat.obj_index.clone(),
        mor_index: cat.mor_index.clone(),
    }
}

/// Whether two parallel paths fold to the same morphism.
pub fn commutes(cat: &FinCategory, p1: &MorPath, p2: &MorPath) -> Result<bool, KernelError> {
    if p1.source() != p2.source() || p1.target(cat) != p2.target(cat) {
        return Err(KernelError::EndpointMismatch { left: p1.describe(cat), right: p2.describe(cat) });
    }
    Ok(p1.evaluate(cat)? == p2.evaluate(cat)?)
}

/// Uniform handle over finite and infinite categories.
///
/// `hom` is a bounded enumerator; how `bound` is read is up to the
/// implementation (ignored for finite tables, maximal path length for free
/// categories, maximal set size for finite sets).
pub trait CategoryView {
    type Obj: Clone + PartialEq + fmt::Debug;
    type Mor: Clone + fmt::Debug;

    fn contains_object(&self, obj: &Self::Obj) -> bool;
    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, obj: &Self::Obj) -> Self::Mor;
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor, KernelError>;
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool;
    fn hom(&self, a: &Self::Obj, b: &Self::Obj, bound: usize) -> Vec<Self::Mor>;
    fn show_obj(&self, obj: &Self::Obj) -> String;
    fn show_mor(&self, f: &Self::Mor) -> String;
}

impl CategoryView for FinCategory {
    type Obj = ObjId;
    type Mor = MorId;

    fn contains_object(&self, obj: &ObjId) -> bool {
        obj.0 < self.num_objects()
    }
    fn source(&self, f: &MorId) -> ObjId {
        FinCategory::source(self, *f)
    }
    fn target(&self, f: &MorId) -> ObjId {
        FinCategory::target(self, *f)
    }
    fn identity(&self, obj: &ObjId) -> MorId {
        FinCategory::identity(self, *obj)
    }
    fn compose(&self, f: &MorId, g: &MorId) -> Result<MorId, KernelError> {
        FinCategory::compose(self, *f, *g)
    }
    fn mor_eq(&self, f: &MorId, g: &MorId) -> bool {
        f == g
    }
    fn hom(&self, a: &ObjId, b: &ObjId, _bound: usize) -> Vec<MorId> {
        FinCategory::hom(self, *a, *b).to_vec()
    }
    fn show_obj(&self, obj: &ObjId) -> String {
        self.object_name(*obj).to_string()
    }
    fn show_mor(&self, f: &MorId) -> String {
        self.morphism_name(*f).to_string()
    }
}

impl<C: CategoryView + ?Sized> CategoryView for &C {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn contains_object(&self, obj: &Self::Obj) -> bool {
        (**self).contains_object(obj)
    }
    fn source(&self, f: &Self::Mor) -> Self::Obj {
        (**self).source(f)
    }
    fn target(&self, f: &Self::Mor) -> Self::Obj {
        (**self).target(f)
    }
    fn identity(&self, obj: &Self::Obj) -> Self::Mor {
        (**self).identity(obj)
    }
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor, KernelError> {
        (**self).compose(f, g)
    }
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        (**self).mor_eq(f, g)
    }
    fn hom(&self, a: &Self::Obj, b: &Self::Obj, bound: usize) -> Vec<Self::Mor> {
        (**self).hom(a, b, bound)
    }
    fn show_obj(&self, obj: &Self::Obj) -> String {
        (**self).show_obj(obj)
    }
    fn show_mor(&self, f: &Self::Mor) -> String {
        (**self).show_mor(f)
    }
}

/// Bounded law sweep over a [`CategoryView`]: identities on every listed
/// object and associativity on every composable triple drawn from the
/// bounded hom-sets between listed objects.
pub fn check_view_laws<C: CategoryView>(view: &C, objects: &[C::Obj], bound: usize) -> LawReport {
    let mut report = LawReport::new();
    let homs: Vec<Vec<Vec<C::Mor>>> = objects
        .iter()
        .map(|a| objects.iter().map(|b| view.hom(a, b, bound)).collect())
        .collect();
    for (i, a) in objects.iter().enumerate() {
        for (j, b) in objects.iter().enumerate() {
            let id_a = view.identity(a);
            let id_b = view.identity(b);
            for f in &homs[i][j] {
                match view.compose(&id_a, f) {
                    Ok(l) if view.mor_eq(&l, f) => {}
                    other => report.push(
                        Law::LeftIdentity,
                        vec![view.show_mor(f)],
                        format!("id ; {} gave {:?}", view.show_mor(f), other.map(|m| view.show_mor(&m))),
                    ),
                }
                match view.compose(f, &id_b) {
                    Ok(r) if view.mor_eq(&r, f) => {}
                    other => report.push(
                        Law::RightIdentity,
                        vec![view.show_mor(f)],
                        format!("{} ; id gave {:?}", view.show_mor(f), other.map(|m| view.show_mor(&m))),
                    ),
                }
            }
        }
    }
    let n = objects.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for f in &homs[a][b] {
                        for g in &homs[b][c] {
                            for h in &homs[c][d] {
                                let lhs = view.compose(g, h).and_then(|gh| view.compose(f, &gh));
                                let rhs = view.compose(f, g).and_then(|fg| view.compose(&fg, h));
                                let holds = matches!((&lhs, &rhs), (Ok(l), Ok(r)) if view.mor_eq(l, r));
                                if !holds {
                                    report.push(
                                        Law::Associativity,
                                        vec![view.show_mor(f), view.show_mor(g), view.show_mor(h)],
                                        "f ; (g ; h) differs from (f ; g) ; h",
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}
