//! Functors, natural transformations, functor enumeration, the category Cat
//! at desk scale, and extension of quiver maps along the free category.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::kernel::{CategoryView, FinCategory, FinCategoryBuilder, MorId, ObjId};
use crate::quiver::{free_category, EdgeId, FreeCategory, NodeId, Path, Quiver};
use crate::report::{Law, LawReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("object `{0}` has no image")]
    UnmappedObject(String),
    #[error("morphism `{0}` has no image")]
    UnmappedMorphism(String),
    #[error("`{0}` is mapped twice")]
    DuplicateMapping(String),
    #[error("image of `{morphism}` is ill-typed: {detail}")]
    SourceTargetMismatch { morphism: String, detail: String },
    #[error("functors are not composable: target of the first is not the source of the second")]
    NotComposable,
    #[error("functors have different sources or targets")]
    NotParallel,
    #[error("component at `{object}` is ill-typed: {detail}")]
    IllTypedComponent { object: String, detail: String },
    #[error("tabulating Cat needs {needed} functors, more than the cap of {cap}")]
    CapExceeded { needed: usize, cap: usize },
    #[error("image of edge `{edge}` is ill-typed: {detail}")]
    IllTypedEdgeImage { edge: String, detail: String },
    #[error("node or edge map has the wrong length")]
    IncompleteQuiverMap,
}

/// Anything that maps objects and morphisms of one view into another.
pub trait FunctorView {
    type Source: CategoryView;
    type Target: CategoryView;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn map_obj(&self, obj: &<Self::Source as CategoryView>::Obj) -> <Self::Target as CategoryView>::Obj;
    fn map_mor(&self, f: &<Self::Source as CategoryView>::Mor) -> <Self::Target as CategoryView>::Mor;
}

/// Check `F(id_a) = id_{F a}` on the listed objects and `F(f;g) = F f ; F g`
/// on every composable pair drawn from bounded hom-sets between them.
pub fn sweep_functor_laws<F: FunctorView>(
    functor: &F,
    objects: &[<F::Source as CategoryView>::Obj],
    bound: usize,
) -> LawReport {
    let src = functor.source();
    let tgt = functor.target();
    let mut report = LawReport::new();
    for a in objects {
        let lhs = functor.map_mor(&src.identity(a));
        let rhs = tgt.identity(&functor.map_obj(a));
        if !tgt.mor_eq(&lhs, &rhs) {
            report.push(
                Law::FunctorIdentity,
                vec![src.show_obj(a)],
                format!("F(id_{}) = {}, expected {}", src.show_obj(a), tgt.show_mor(&lhs), tgt.show_mor(&rhs)),
            );
        }
    }
    let homs: Vec<Vec<Vec<_>>> =
        objects.iter().map(|a| objects.iter().map(|b| src.hom(a, b, bound)).collect()).collect();
    let n = objects.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for f in &homs[a][b] {
                    for g in &homs[b][c] {
                        let Ok(fg) = src.compose(f, g) else { continue };
                        let lhs = functor.map_mor(&fg);
                        let rhs = tgt.compose(&functor.map_mor(f), &functor.map_mor(g));
                        let holds = matches!(&rhs, Ok(r) if tgt.mor_eq(&lhs, r));
                        if !holds {
                            report.push(
                                Law::FunctorComposition,
                                vec![src.show_mor(f), src.show_mor(g)],
                                format!(
                                    "F({} ; {}) = {} but F({}) ; F({}) = {}",
                                    src.show_mor(f),
                                    src.show_mor(g),
                                    tgt.show_mor(&lhs),
                                    src.show_mor(f),
                                    src.show_mor(g),
                                    rhs.map(|r| tgt.show_mor(&r)).unwrap_or_else(|e| e.to_string())
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    report
}

/// A tabulated map between finite categories. Equality is pointwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorData {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    obj_map: Vec<ObjId>,
    mor_map: Vec<MorId>,
}

impl FunctorData {
    /// Validates totality and typing (`f: a → b` implies `F f: F a → F b`).
    /// The functor laws themselves are checked by [`check_functor_laws`].
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        obj_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
    ) -> Result<Self, FunctorError> {
        if obj_map.len() != source.num_objects() {
            let missing = source.object_name(ObjId(obj_map.len().min(source.num_objects().saturating_sub(1))));
            return Err(FunctorError::UnmappedObject(missing.to_string()));
        }
        if mor_map.len() != source.num_morphisms() {
            let missing =
                source.morphism_name(MorId(mor_map.len().min(source.num_morphisms().saturating_sub(1))));
            return Err(FunctorError::UnmappedMorphism(missing.to_string()));
        }
        for (i, x) in obj_map.iter().enumerate() {
            if x.0 >= target.num_objects() {
                return Err(FunctorError::UnknownObject(format!("#{} (image of {})", x.0, source.object_name(ObjId(i)))));
            }
        }
        for f in source.morphism_ids() {
            let img = mor_map[f.0];
            if img.0 >= target.num_morphisms() {
                return Err(FunctorError::UnknownMorphism(format!("#{} (image of {})", img.0, source.morphism_name(f))));
            }
            let want_src = obj_map[source.source(f).0];
            let want_tgt = obj_map[source.target(f).0];
            if target.source(img) != want_src || target.target(img) != want_tgt {
                return Err(FunctorError::SourceTargetMismatch {
                    morphism: source.morphism_name(f).to_string(),
                    detail: format!(
                        "`{}` is {} -> {}, expected {} -> {}",
                        target.morphism_name(img),
                        target.object_name(target.source(img)),
                        target.object_name(target.target(img)),
                        target.object_name(want_src),
                        target.object_name(want_tgt)
                    ),
                });
            }
        }
        Ok(FunctorData { source, target, obj_map, mor_map })
    }

    /// Build from name pairs. Identities without an explicit image are sent
    /// to the identity of the image object.
    pub fn from_names(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        objects: &[(String, String)],
        morphisms: &[(String, String)],
    ) -> Result<Self, FunctorError> {
        let mut obj_map: Vec<Option<ObjId>> = vec![None; source.num_objects()];
        for (a, x) in objects {
            let ai = source.object(a).ok_or_else(|| FunctorError::UnknownObject(a.clone()))?;
            let xi = target.object(x).ok_or_else(|| FunctorError::UnknownObject(x.clone()))?;
            if obj_map[ai.0].replace(xi).is_some() {
                return Err(FunctorError::DuplicateMapping(a.clone()));
            }
        }
        let obj_map: Vec<ObjId> = obj_map
            .into_iter()
            .enumerate()
            .map(|(i, x)| x.ok_or_else(|| FunctorError::UnmappedObject(source.object_name(ObjId(i)).to_string())))
            .collect::<Result<_, _>>()?;
        let mut mor_map: Vec<Option<MorId>> = vec![None; source.num_morphisms()];
        for (f, g) in morphisms {
            let fi = source.morphism(f).ok_or_else(|| FunctorError::UnknownMorphism(f.clone()))?;
            let gi = target.morphism(g).ok_or_else(|| FunctorError::UnknownMorphism(g.clone()))?;
            if mor_map[fi.0].replace(gi).is_some() {
                return Err(FunctorError::DuplicateMapping(f.clone()));
            }
        }
        let mor_map: Vec<MorId> = mor_map
            .into_iter()
            .enumerate()
            .map(|(i, g)| {
                let f = MorId(i);
                match g {
                    Some(g) => Ok(g),
                    None if source.is_identity(f) => Ok(target.identity(obj_map[source.source(f).0])),
                    None => Err(FunctorError::UnmappedMorphism(source.morphism_name(f).to_string())),
                }
            })
            .collect::<Result<_, _>>()?;
        Self::new(source, target, obj_map, mor_map)
    }

    pub fn identity(cat: Arc<FinCategory>) -> Self {
        let obj_map = cat.object_ids().collect();
        let mor_map = cat.morphism_ids().collect();
        FunctorData { source: cat.clone(), target: cat, obj_map, mor_map }
    }

    /// Everything goes to `x` and its identity.
    pub fn constant(source: Arc<FinCategory>, target: Arc<FinCategory>, x: ObjId) -> Self {
        let obj_map = vec![x; source.num_objects()];
        let mor_map = vec![target.identity(x); source.num_morphisms()];
        FunctorData { source, target, obj_map, mor_map }
    }

    pub fn source_category(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target_category(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn obj(&self, a: ObjId) -> ObjId {
        self.obj_map[a.0]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.mor_map[f.0]
    }

    pub fn obj_map(&self) -> &[ObjId] {
        &self.obj_map
    }

    pub fn mor_map(&self) -> &[MorId] {
        &self.mor_map
    }

    /// Pointwise equality of the maps (sources and targets are assumed shared).
    pub fn same_maps(&self, other: &FunctorData) -> bool {
        self.obj_map == other.obj_map && self.mor_map == other.mor_map
    }
}

fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl FunctorView for FunctorData {
    type Source = FinCategory;
    type Target = FinCategory;

    fn source(&self) -> &FinCategory {
        &self.source
    }
    fn target(&self) -> &FinCategory {
        &self.target
    }
    fn map_obj(&self, obj: &ObjId) -> ObjId {
        self.obj_map[obj.0]
    }
    fn map_mor(&self, f: &MorId) -> MorId {
        self.mor_map[f.0]
    }
}

/// Exhaustive functor-law check on a finite source.
pub fn check_functor_laws(f: &FunctorData) -> LawReport {
    let objects: Vec<ObjId> = f.source.object_ids().collect();
    sweep_functor_laws(f, &objects, 0)
}

/// `F ; G`: first `F`, then `G`.
pub fn compose_functors(f: &FunctorData, g: &FunctorData) -> Result<FunctorData, FunctorError> {
    if !same_category(&f.target, &g.source) {
        return Err(FunctorError::NotComposable);
    }
    Ok(FunctorData {
        source: f.source.clone(),
        target: g.target.clone(),
        obj_map: f.obj_map.iter().map(|a| g.obj_map[a.0]).collect(),
        mor_map: f.mor_map.iter().map(|m| g.mor_map[m.0]).collect(),
    })
}

/// Every law-passing functor `C → D`, ordered lexicographically by object map
/// and then by morphism map (indices in declaration order).
pub fn enumerate_functors(c: &Arc<FinCategory>, d: &Arc<FinCategory>) -> Vec<FunctorData> {
    let n_obj = c.num_objects();
    let n_mor = c.num_morphisms();
    let mut out = Vec::new();
    if n_obj > 0 && d.num_objects() == 0 {
        return out;
    }
    // Composition constraints, keyed by the largest index they mention, so each
    // one is checked as soon as all three images are fixed.
    let mut constraints: Vec<Vec<(MorId, MorId, MorId)>> = vec![Vec::new(); n_mor];
    for (f, g, h) in c.composites() {
        let last = f.0.max(g.0).max(h.0);
        constraints[last].push((f, g, h));
    }
    let mut obj_map = vec![ObjId(0); n_obj];
    loop {
        let mut mor_map = vec![MorId(0); n_mor];
        assign_morphisms(c, d, &obj_map, &constraints, 0, &mut mor_map, &mut out);
        // odometer over object maps, most significant digit first
        let mut i = n_obj;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            obj_map[i].0 += 1;
            if obj_map[i].0 < d.num_objects() {
                break;
            }
            obj_map[i] = ObjId(0);
        }
    }
}

fn assign_morphisms(
    c: &Arc<FinCategory>,
    d: &Arc<FinCategory>,
    obj_map: &[ObjId],
    constraints: &[Vec<(MorId, MorId, MorId)>],
    k: usize,
    mor_map: &mut Vec<MorId>,
    out: &mut Vec<FunctorData>,
) {
    if k == mor_map.len() {
        out.push(FunctorData {
            source: c.clone(),
            target: d.clone(),
            obj_map: obj_map.to_vec(),
            mor_map: mor_map.clone(),
        });
        return;
    }
    let f = MorId(k);
    let (a, b) = (obj_map[c.source(f).0], obj_map[c.target(f).0]);
    let candidates: Vec<MorId> = if c.is_identity(f) { vec![d.identity(a)] } else { d.hom(a, b).to_vec() };
    for img in candidates {
        mor_map[k] = img;
        let ok = constraints[k].iter().all(|&(f, g, h)| d.compose(mor_map[f.0], mor_map[g.0]) == Ok(mor_map[h.0]));
        if ok {
            assign_morphisms(c, d, obj_map, constraints, k + 1, mor_map, out);
        }
    }
}

/// Cat restricted to the listed categories, with the functor behind each morphism.
#[derive(Clone, Debug)]
pub struct CatCategory {
    pub category: FinCategory,
    /// `functors[m.0]` is the functor named by morphism `m`.
    pub functors: Vec<FunctorData>,
}

/// Objects are the given categories, morphisms all functors between them.
pub fn cat_category(cats: &[(String, Arc<FinCategory>)], cap: usize) -> Result<CatCategory, FunctorError> {
    let n = cats.len();
    let mut homs: Vec<Vec<FunctorData>> = Vec::with_capacity(n * n);
    let mut total = 0usize;
    for (_, c) in cats {
        for (_, d) in cats {
            let fs = enumerate_functors(c, d);
            total += fs.len();
            if total > cap {
                return Err(FunctorError::CapExceeded { needed: total, cap });
            }
            homs.push(fs);
        }
    }
    let mut b = FinCategoryBuilder::new();
    b.objects(cats.iter().map(|(name, _)| name.clone()));
    let mut names: Vec<Vec<String>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for k in 0..n {
            let fs = &homs[i * n + k];
            let mut row = Vec::with_capacity(fs.len());
            for (j, f) in fs.iter().enumerate() {
                let is_id = i == k && f.same_maps(&FunctorData::identity(cats[i].1.clone()));
                let name =
                    if is_id { format!("id_{}", cats[i].0) } else { format!("{}_{}_{}", cats[i].0, cats[k].0, j) };
                if is_id {
                    b.morphism(name.clone(), cats[i].0.clone(), cats[i].0.clone());
                    b.identity(cats[i].0.clone(), name.clone());
                } else {
                    b.morphism(name.clone(), cats[i].0.clone(), cats[k].0.clone());
                }
                row.push(name);
            }
            names.push(row);
        }
    }
    for i in 0..n {
        for k in 0..n {
            for l in 0..n {
                let lookup: HashMap<(Vec<ObjId>, Vec<MorId>), usize> = homs[i * n + l]
                    .iter()
                    .enumerate()
                    .map(|(j, h)| ((h.obj_map.clone(), h.mor_map.clone()), j))
                    .collect();
                for (jf, f) in homs[i * n + k].iter().enumerate() {
                    for (jg, g) in homs[k * n + l].iter().enumerate() {
                        let fg = compose_functors(f, g)?;
                        let jh = lookup[&(fg.obj_map, fg.mor_map)];
                        b.compose(
                            names[i * n + k][jf].clone(),
                            names[k * n + l][jg].clone(),
                            names[i * n + l][jh].clone(),
                        );
                    }
                }
            }
        }
    }
    let category = b.build().map_err(|e| FunctorError::UnknownMorphism(e.to_string()))?;
    let mut functors: Vec<Option<FunctorData>> = vec![None; category.num_morphisms()];
    for (hom, row) in homs.into_iter().zip(&names) {
        for (f, name) in hom.into_iter().zip(row) {
            let m = category.morphism(name).expect("every functor was declared");
            functors[m.0] = Some(f);
        }
    }
    let functors = functors.into_iter().map(|f| f.expect("every morphism is a functor")).collect();
    Ok(CatCategory { category, functors })
}

/// The functor out of a free category determined by where it sends nodes and edges.
#[derive(Clone, Debug)]
pub struct FreeFunctor<C: CategoryView> {
    free: FreeCategory,
    target: C,
    node_map: Vec<C::Obj>,
    edge_map: Vec<C::Mor>,
}

/// Extend node and edge images (indexed by node and edge id) to the unique
/// functor `free_category(q) → C`.
pub fn free_functor_extend<C: CategoryView>(
    q: &Quiver,
    target: C,
    node_map: Vec<C::Obj>,
    edge_map: Vec<C::Mor>,
) -> Result<FreeFunctor<C>, FunctorError> {
    if node_map.len() != q.num_nodes() || edge_map.len() != q.num_edges() {
        return Err(FunctorError::IncompleteQuiverMap);
    }
    for e in q.edge_ids() {
        let edge = q.edge(e);
        let img = &edge_map[e.0];
        let (s, t) = (&node_map[edge.src.0], &node_map[edge.tgt.0]);
        if target.source(img) != *s || target.target(img) != *t {
            return Err(FunctorError::IllTypedEdgeImage {
                edge: edge.name.clone(),
                detail: format!(
                    "{} is {} -> {}, expected {} -> {}",
                    target.show_mor(img),
                    target.show_obj(&target.source(img)),
                    target.show_obj(&target.target(img)),
                    target.show_obj(s),
                    target.show_obj(t)
                ),
            });
        }
    }
    Ok(FreeFunctor { free: free_category(q), target, node_map, edge_map })
}

impl<C: CategoryView> FreeFunctor<C> {
    pub fn edge_image(&self, e: EdgeId) -> &C::Mor {
        &self.edge_map[e.0]
    }

    pub fn node_image(&self, n: NodeId) -> &C::Obj {
        &self.node_map[n.0]
    }

    pub fn free_category(&self) -> &FreeCategory {
        &self.free
    }
}

impl<C: CategoryView> FunctorView for FreeFunctor<C> {
    type Source = FreeCategory;
    type Target = C;

    fn source(&self) -> &FreeCategory {
        &self.free
    }
    fn target(&self) -> &C {
        &self.target
    }
    fn map_obj(&self, obj: &NodeId) -> C::Obj {
        self.node_map[obj.0].clone()
    }
    fn map_mor(&self, p: &Path) -> C::Mor {
        let mut acc = self.target.identity(&self.node_map[p.anchor.0]);
        for e in &p.steps {
            acc = self
                .target
                .compose(&acc, &self.edge_map[e.0])
                .expect("edge images are type-checked when the functor is built");
        }
        acc
    }
}

/// A family of components `t_a : F a → G a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransData {
    f: FunctorData,
    g: FunctorData,
    components: Vec<MorId>,
}

impl NatTransData {
    pub fn new(f: FunctorData, g: FunctorData, components: Vec<MorId>) -> Result<Self, FunctorError> {
        if !same_category(&f.source, &g.source) || !same_category(&f.target, &g.target) {
            return Err(FunctorError::NotParallel);
        }
        let src = &f.source;
        let tgt = &f.target;
        if components.len() != src.num_objects() {
            return Err(FunctorError::UnmappedObject(format!("{} components for {} objects", components.len(), src.num_objects())));
        }
        for a in src.object_ids() {
            let t = components[a.0];
            if t.0 >= tgt.num_morphisms() || tgt.source(t) != f.obj(a) || tgt.target(t) != g.obj(a) {
                return Err(FunctorError::IllTypedComponent {
                    object: src.object_name(a).to_string(),
                    detail: format!(
                        "expected a morphism {} -> {}",
                        tgt.object_name(f.obj(a)),
                        tgt.object_name(g.obj(a))
                    ),
                });
            }
        }
        Ok(NatTransData { f, g, components })
    }

    /// Identity transformation on `F`.
    pub fn identity(f: FunctorData) -> Self {
        let components = f.obj_map.iter().map(|&x| f.target.identity(x)).collect();
        NatTransData { g: f.clone(), f, components }
    }

    pub fn component(&self, a: ObjId) -> MorId {
        self.components[a.0]
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    pub fn with_component(&self, a: ObjId, t: MorId) -> Result<Self, FunctorError> {
        let mut components = self.components.clone();
        components[a.0] = t;
        Self::new(self.f.clone(), self.g.clone(), components)
    }
}

/// For every `h: a → b`, `t_a ; G h = F h ; t_b`.
pub fn check_naturality(t: &NatTransData) -> LawReport {
    let src = &t.f.source;
    let tgt = &t.f.target;
    let mut report = LawReport::new();
    for h in src.morphism_ids() {
        let (a, b) = (src.source(h), src.target(h));
        let lhs = tgt.compose(t.components[a.0], t.g.mor(h));
        let rhs = tgt.compose(t.f.mor(h), t.components[b.0]);
        if lhs != rhs || lhs.is_err() {
            let show = |r: &Result<MorId, _>| match r {
                Ok(m) => tgt.morphism_name(*m).to_string(),
                Err(e) => format!("{e}"),
            };
            report.push(
                Law::Naturality,
                vec![src.morphism_name(h).to_string()],
                format!("t_{} ; G({}) = {} but F({}) ; t_{} = {}", src.object_name(a), src.morphism_name(h), show(&lhs), src.morphism_name(h), src.object_name(b), show(&rhs)),
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::kernel::check_category_laws;

    #[test]
    fn identity_and_constant_functors_are_lawful() {
        for c in [fixtures::walking_arrow(), fixtures::z2(), fixtures::divisor_poset(12)] {
            let c = Arc::new(c);
            assert!(check_functor_laws(&FunctorData::identity(c.clone())).is_empty());
            let t = Arc::new(fixtures::trivial());
            assert!(check_functor_laws(&FunctorData::constant(c.clone(), t, ObjId(0))).is_empty());
        }
    }

    #[test]
    fn chain_into_z2_breaks_composition_once() {
        let chain = Arc::new(fixtures::chain3());
        let z2 = Arc::new(fixtures::z2());
        let pairs = |xs: &[(&str, &str)]| xs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect::<Vec<_>>();
        let f = FunctorData::from_names(
            chain.clone(),
            z2.clone(),
            &pairs(&[("A", "pt"), ("B", "pt"), ("C", "pt")]),
            &pairs(&[("f", "s"), ("g", "s"), ("h", "s")]),
        )
        .unwrap();
        let report = check_functor_laws(&f);
        assert_eq!(report.len(), 1);
        assert_eq!(report.violations[0].law, Law::FunctorComposition);
        assert_eq!(report.violations[0].witnesses, vec!["f".to_string(), "g".to_string()]);
    }

    #[test]
    fn ill_typed_map_is_rejected() {
        let wa = Arc::new(fixtures::walking_arrow());
        let err = FunctorData::from_names(
            wa.clone(),
            wa.clone(),
            &[("A".into(), "B".into()), ("B".into(), "A".into())],
            &[("f".into(), "f".into())],
        )
        .unwrap_err();
        assert!(matches!(err, FunctorError::SourceTargetMismatch { .. }));
    }

    #[test]
    fn walking_arrow_endofunctors() {
        let wa = Arc::new(fixtures::walking_arrow());
        let fs = enumerate_functors(&wa, &wa);
        let objs: Vec<Vec<&str>> =
            fs.iter().map(|f| f.obj_map().iter().map(|&x| wa.object_name(x)).collect()).collect();
        assert_eq!(objs, vec![vec!["A", "A"], vec!["A", "B"], vec!["B", "B"]]);
        let t = Arc::new(fixtures::trivial());
        assert_eq!(enumerate_functors(&wa, &t).len(), 1);
        assert_eq!(enumerate_functors(&t, &wa).len(), 2);
    }

    #[test]
    fn composition_of_functors() {
        let wa = Arc::new(fixtures::walking_arrow());
        let t = Arc::new(fixtures::trivial());
        let id = FunctorData::identity(wa.clone());
        for f in enumerate_functors(&wa, &wa) {
            assert_eq!(compose_functors(&f, &id).unwrap(), f);
            assert_eq!(compose_functors(&id, &f).unwrap(), f);
        }
        // inclusion of the trivial category at B, followed by collapse, is constant at B
        let incl = enumerate_functors(&t, &wa).pop().unwrap();
        let b = wa.object("B").unwrap();
        let collapse = FunctorData::constant(wa.clone(), wa.clone(), b);
        let direct = FunctorData::constant(t.clone(), wa.clone(), b);
        assert_eq!(compose_functors(&incl, &collapse).unwrap(), direct);
        assert_eq!(compose_functors(&collapse, &incl), Err(FunctorError::NotComposable));
    }

    #[test]
    fn cat_of_small_fixtures() {
        let cats = vec![
            ("T".to_string(), Arc::new(fixtures::trivial())),
            ("W".to_string(), Arc::new(fixtures::walking_arrow())),
            ("Z".to_string(), Arc::new(fixtures::z2())),
        ];
        let cat = cat_category(&cats, 10_000).unwrap();
        let c = &cat.category;
        assert!(check_category_laws(c).is_empty());
        let (t, w) = (c.object("T").unwrap(), c.object("W").unwrap());
        assert_eq!(c.hom(t, w).len(), 2);
        assert_eq!(c.hom(w, t).len(), 1);
        assert!(cat_category(&[], 10).unwrap().category.num_objects() == 0);
        assert!(matches!(cat_category(&cats, 3), Err(FunctorError::CapExceeded { .. })));
    }

    #[test]
    fn free_extension_into_z2() {
        let q = fixtures::ab_quiver();
        let z2 = fixtures::z2();
        let s = z2.morphism("s").unwrap();
        let pt = ObjId(0);
        let ext = free_functor_extend(&q, &z2, vec![pt, pt], vec![s, s]).unwrap();
        let p = q.path_from_edges(&["a", "b", "a", "b"]).unwrap();
        assert_eq!(z2.morphism_name(ext.map_mor(&p)), "e");
        let single = q.path_from_edges(&["a"]).unwrap();
        assert_eq!(ext.map_mor(&single), s);
        let empty = q.path_identity("B").unwrap();
        assert_eq!(ext.map_mor(&empty), z2.identity(pt));
        let report = sweep_functor_laws(&ext, &ext.free_category().objects(), 4);
        assert!(report.is_empty());
    }

    #[test]
    fn ill_typed_edge_image() {
        let q = fixtures::ab_quiver();
        let wa = fixtures::walking_arrow();
        let (a, b) = (wa.object("A").unwrap(), wa.object("B").unwrap());
        let f = wa.morphism("f").unwrap();
        let err = free_functor_extend(&q, &wa, vec![a, b], vec![f, f]).unwrap_err();
        assert!(matches!(err, FunctorError::IllTypedEdgeImage { ref edge, .. } if edge == "b"));
    }

    #[test]
    fn naturality_square_is_reported() {
        let wa = Arc::new(fixtures::walking_arrow());
        let par = Arc::new(fixtures::parallel_pair());
        let (x, y) = (par.object("A").unwrap(), par.object("B").unwrap());
        let f = FunctorData::constant(wa.clone(), par.clone(), x);
        let g = FunctorData::constant(wa.clone(), par.clone(), y);
        let (u, v) = (par.morphism("f").unwrap(), par.morphism("g").unwrap());
        let good = NatTransData::new(f.clone(), g.clone(), vec![u, u]).unwrap();
        assert!(check_naturality(&good).is_empty());
        let bad = NatTransData::new(f.clone(), g.clone(), vec![u, v]).unwrap();
        let report = check_naturality(&bad);
        assert_eq!(report.len(), 1);
        assert_eq!(report.violations[0].witnesses, vec!["f".to_string()]);
        assert!(check_naturality(&NatTransData::identity(f)).is_empty());
        assert!(matches!(
            NatTransData::new(g.clone(), g, vec![u, u]),
            Err(FunctorError::IllTypedComponent { .. })
        ));
    }
}
