//! Product categories, monoidal and symmetric structure with exhaustive
//! coherence checking, and the cartesian monoidal structure induced by chosen
//! binary products and a terminal object.

use std::sync::Arc;

use thiserror::Error;

use crate::functor::{check_functor_laws, FunctorData};
use crate::kernel::{CategoryView, FinCategory, FinCategoryBuilder, KernelError, MorId, ObjId};
use crate::report::{Law, LawReport};
use crate::universal::{
    check_product, check_terminal, find_products, find_terminals, mediators, ProductWitness, TerminalWitness,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidalError {
    #[error("no valid product chosen for ({0}, {1})")]
    MissingProduct(String, String),
    #[error("no valid terminal object")]
    MissingTerminal,
    #[error("tensor is not a well-typed map out of the product category: {0}")]
    IllTypedTensor(String),
    #[error("ill-typed structure morphism: {0}")]
    IllTypedStructure(String),
}

/// `C × D` with componentwise identities and composition.
///
/// Object `(a, b)` has index `a * |obj D| + b`; morphism `(f, g)` has index
/// `f * |mor D| + g`. Names are `(a,b)` and `(f,g)`.
pub fn product_category(c: &FinCategory, d: &FinCategory) -> FinCategory {
    let mut b = FinCategoryBuilder::new();
    let obj_name = |x: ObjId, y: ObjId| format!("({},{})", c.object_name(x), d.object_name(y));
    let mor_name = |f: MorId, g: MorId| format!("({},{})", c.morphism_name(f), d.morphism_name(g));
    for x in c.object_ids() {
        for y in d.object_ids() {
            b.object(obj_name(x, y));
        }
    }
    for f in c.morphism_ids() {
        for g in d.morphism_ids() {
            b.morphism(
                mor_name(f, g),
                obj_name(c.source(f), d.source(g)),
                obj_name(c.target(f), d.target(g)),
            );
        }
    }
    for x in c.object_ids() {
        for y in d.object_ids() {
            b.identity(obj_name(x, y), mor_name(c.identity(x), d.identity(y)));
        }
    }
    for (f, h, fh) in c.composites() {
        for (g, k, gk) in d.composites() {
            b.compose(mor_name(f, g), mor_name(h, k), mor_name(fh, gk));
        }
    }
    b.build().expect("componentwise structure of two categories is a category")
}

pub fn product_obj(right: &FinCategory, a: ObjId, b: ObjId) -> ObjId {
    ObjId(a.0 * right.num_objects() + b.0)
}

pub fn product_mor(right: &FinCategory, f: MorId, g: MorId) -> MorId {
    MorId(f.0 * right.num_morphisms() + g.0)
}

type ObjOf<M> = <<M as MonoidalView>::Cat as CategoryView>::Obj;
type MorOf<M> = <<M as MonoidalView>::Cat as CategoryView>::Mor;

/// Monoidal data over a [`CategoryView`]. The associator runs
/// `(a⊗b)⊗c → a⊗(b⊗c)`, the unitors `I⊗a → a` and `a⊗I → a`; each has a
/// designated inverse.
pub trait MonoidalView {
    type Cat: CategoryView;

    fn category(&self) -> &Self::Cat;
    fn unit(&self) -> ObjOf<Self>;
    fn tensor_obj(&self, a: &ObjOf<Self>, b: &ObjOf<Self>) -> ObjOf<Self>;
    fn tensor_mor(&self, f: &MorOf<Self>, g: &MorOf<Self>) -> MorOf<Self>;
    fn associator(&self, a: &ObjOf<Self>, b: &ObjOf<Self>, c: &ObjOf<Self>) -> MorOf<Self>;
    fn associator_inv(&self, a: &ObjOf<Self>, b: &ObjOf<Self>, c: &ObjOf<Self>) -> MorOf<Self>;
    fn left_unitor(&self, a: &ObjOf<Self>) -> MorOf<Self>;
    fn left_unitor_inv(&self, a: &ObjOf<Self>) -> MorOf<Self>;
    fn right_unitor(&self, a: &ObjOf<Self>) -> MorOf<Self>;
    fn right_unitor_inv(&self, a: &ObjOf<Self>) -> MorOf<Self>;
    fn is_strict(&self) -> bool {
        false
    }
}

/// A braiding `σ_{a,b} : a⊗b → b⊗a` on top of monoidal data.
pub trait BraidedView: MonoidalView {
    fn braiding(&self, a: &ObjOf<Self>, b: &ObjOf<Self>) -> MorOf<Self>;
}

/// Helpers shared by the sweeps.
struct Sweep<'a, M: MonoidalView> {
    m: &'a M,
    objects: &'a [ObjOf<M>],
    morphisms: Vec<MorOf<M>>,
    report: LawReport,
}

impl<'a, M: MonoidalView> Sweep<'a, M> {
    fn new(m: &'a M, objects: &'a [ObjOf<M>], bound: usize) -> Self {
        let cat = m.category();
        let mut morphisms = Vec::new();
        for a in objects {
            for b in objects {
                morphisms.extend(cat.hom(a, b, bound));
            }
        }
        Sweep { m, objects, morphisms, report: LawReport::new() }
    }

    fn cat(&self) -> &M::Cat {
        self.m.category()
    }

    fn chain(&self, ms: &[MorOf<M>]) -> Result<MorOf<M>, KernelError> {
        let cat = self.cat();
        let mut acc = ms[0].clone();
        for m in &ms[1..] {
            acc = cat.compose(&acc, m)?;
        }
        Ok(acc)
    }

    fn same(&self, l: &Result<MorOf<M>, KernelError>, r: &Result<MorOf<M>, KernelError>) -> bool {
        matches!((l, r), (Ok(l), Ok(r)) if self.cat().mor_eq(l, r))
    }

    fn show(&self, r: &Result<MorOf<M>, KernelError>) -> String {
        match r {
            Ok(m) => self.cat().show_mor(m),
            Err(e) => format!("<{e}>"),
        }
    }

    fn o(&self, a: &ObjOf<M>) -> String {
        self.cat().show_obj(a)
    }

    fn mor(&self, f: &MorOf<M>) -> String {
        self.cat().show_mor(f)
    }

    fn expect_eq(
        &mut self,
        law: Law,
        witnesses: Vec<String>,
        what: &str,
        lhs: Result<MorOf<M>, KernelError>,
        rhs: Result<MorOf<M>, KernelError>,
    ) {
        if !self.same(&lhs, &rhs) {
            let detail = format!("{what}: {} vs {}", self.show(&lhs), self.show(&rhs));
            self.report.push(law, witnesses, detail);
        }
    }

    fn expect_typed(&mut self, law: Law, what: String, f: &MorOf<M>, src: &ObjOf<M>, tgt: &ObjOf<M>) {
        let cat = self.cat();
        if cat.source(f) != *src || cat.target(f) != *tgt {
            let detail = format!(
                "{what} = {} is {} -> {}, expected {} -> {}",
                cat.show_mor(f),
                cat.show_obj(&cat.source(f)),
                cat.show_obj(&cat.target(f)),
                cat.show_obj(src),
                cat.show_obj(tgt)
            );
            self.report.push(law, vec![cat.show_mor(f)], detail);
        }
    }

    fn composable_pairs(&self) -> Vec<(MorOf<M>, MorOf<M>)> {
        let cat = self.cat();
        let mut out = Vec::new();
        for f in &self.morphisms {
            for g in &self.morphisms {
                if cat.target(f) == cat.source(g) {
                    out.push((f.clone(), g.clone()));
                }
            }
        }
        out
    }

    fn bifunctor(&mut self, law: Law, identities: bool) {
        let m = self.m;
        let cat = m.category();
        if identities {
            for a in self.objects {
                for b in self.objects {
                    let ab = m.tensor_obj(a, b);
                    let lhs = Ok(m.tensor_mor(&cat.identity(a), &cat.identity(b)));
                    let w = vec![self.o(a), self.o(b)];
                    self.expect_eq(law, w, "id ⊗ id = id", lhs, Ok(cat.identity(&ab)));
                }
            }
            let morphisms = self.morphisms.clone();
            for f in &morphisms {
                for g in &morphisms {
                    let fg = m.tensor_mor(f, g);
                    let src = m.tensor_obj(&cat.source(f), &cat.source(g));
                    let tgt = m.tensor_obj(&cat.target(f), &cat.target(g));
                    self.expect_typed(Law::Typing, format!("{} ⊗ {}", self.mor(f), self.mor(g)), &fg, &src, &tgt);
                }
            }
        }
        let pairs = self.composable_pairs();
        for (f, h) in &pairs {
            for (g, k) in &pairs {
                let lhs = self.chain(&[m.tensor_mor(f, g), m.tensor_mor(h, k)]);
                let rhs = match (cat.compose(f, h), cat.compose(g, k)) {
                    (Ok(fh), Ok(gk)) => Ok(m.tensor_mor(&fh, &gk)),
                    (Err(e), _) | (_, Err(e)) => Err(e),
                };
                let w = vec![self.mor(f), self.mor(g), self.mor(h), self.mor(k)];
                self.expect_eq(law, w, "(f ⊗ g) ; (h ⊗ k) = (f ; h) ⊗ (g ; k)", lhs, rhs);
            }
        }
    }

    fn structure_typing(&mut self) {
        let m = self.m;
        let unit = m.unit();
        for a in self.objects {
            let ia = m.tensor_obj(&unit, a);
            let ai = m.tensor_obj(a, &unit);
            self.expect_typed(Law::Typing, format!("λ_{}", self.o(a)), &m.left_unitor(a), &ia, a);
            self.expect_typed(Law::Typing, format!("λ⁻¹_{}", self.o(a)), &m.left_unitor_inv(a), a, &ia);
            self.expect_typed(Law::Typing, format!("ρ_{}", self.o(a)), &m.right_unitor(a), &ai, a);
            self.expect_typed(Law::Typing, format!("ρ⁻¹_{}", self.o(a)), &m.right_unitor_inv(a), a, &ai);
            for b in self.objects {
                for c in self.objects {
                    let left = m.tensor_obj(&m.tensor_obj(a, b), c);
                    let right = m.tensor_obj(a, &m.tensor_obj(b, c));
                    let name = format!("α_{},{},{}", self.o(a), self.o(b), self.o(c));
                    self.expect_typed(Law::Typing, name.clone(), &m.associator(a, b, c), &left, &right);
                    self.expect_typed(Law::Typing, format!("{name}⁻¹"), &m.associator_inv(a, b, c), &right, &left);
                }
            }
        }
    }

    fn coherence(&mut self) {
        let m = self.m;
        let cat = m.category();
        let unit = m.unit();
        let objs = self.objects;
        self.structure_typing();
        if !self.report.is_empty() {
            // the remaining equations are meaningless on ill-typed data
            return;
        }
        for a in objs {
            let ia = m.tensor_obj(&unit, a);
            let ai = m.tensor_obj(a, &unit);
            let (l, li) = (m.left_unitor(a), m.left_unitor_inv(a));
            let (r, ri) = (m.right_unitor(a), m.right_unitor_inv(a));
            let w = vec![self.o(a)];
            self.expect_eq(Law::Inverse, w.clone(), "λ ; λ⁻¹ = id", self.chain(&[l.clone(), li.clone()]), Ok(cat.identity(&ia)));
            self.expect_eq(Law::Inverse, w.clone(), "λ⁻¹ ; λ = id", self.chain(&[li, l]), Ok(cat.identity(a)));
            self.expect_eq(Law::Inverse, w.clone(), "ρ ; ρ⁻¹ = id", self.chain(&[r.clone(), ri.clone()]), Ok(cat.identity(&ai)));
            self.expect_eq(Law::Inverse, w, "ρ⁻¹ ; ρ = id", self.chain(&[ri, r]), Ok(cat.identity(a)));
        }
        for a in objs {
            for b in objs {
                for c in objs {
                    let left = m.tensor_obj(&m.tensor_obj(a, b), c);
                    let right = m.tensor_obj(a, &m.tensor_obj(b, c));
                    let (al, ai) = (m.associator(a, b, c), m.associator_inv(a, b, c));
                    let w = vec![self.o(a), self.o(b), self.o(c)];
                    self.expect_eq(Law::Inverse, w.clone(), "α ; α⁻¹ = id", self.chain(&[al.clone(), ai.clone()]), Ok(cat.identity(&left)));
                    self.expect_eq(Law::Inverse, w, "α⁻¹ ; α = id", self.chain(&[ai, al]), Ok(cat.identity(&right)));
                }
            }
        }

        // naturality of the associator and unitors
        let morphisms = self.morphisms.clone();
        let id_unit = cat.identity(&unit);
        for f in &morphisms {
            let (a, a2) = (cat.source(f), cat.target(f));
            let lhs = self.chain(&[m.tensor_mor(&id_unit, f), m.left_unitor(&a2)]);
            let rhs = self.chain(&[m.left_unitor(&a), f.clone()]);
            self.expect_eq(Law::Naturality, vec![self.mor(f)], "λ natural", lhs, rhs);
            let lhs = self.chain(&[m.tensor_mor(f, &id_unit), m.right_unitor(&a2)]);
            let rhs = self.chain(&[m.right_unitor(&a), f.clone()]);
            self.expect_eq(Law::Naturality, vec![self.mor(f)], "ρ natural", lhs, rhs);
        }
        for f in &morphisms {
            for g in &morphisms {
                for h in &morphisms {
                    let (a, b, c) = (cat.source(f), cat.source(g), cat.source(h));
                    let (a2, b2, c2) = (cat.target(f), cat.target(g), cat.target(h));
                    let lhs = self.chain(&[m.tensor_mor(&m.tensor_mor(f, g), h), m.associator(&a2, &b2, &c2)]);
                    let rhs = self.chain(&[m.associator(&a, &b, &c), m.tensor_mor(f, &m.tensor_mor(g, h))]);
                    let w = vec![self.mor(f), self.mor(g), self.mor(h)];
                    self.expect_eq(Law::Naturality, w, "α natural", lhs, rhs);
                }
            }
        }

        // pentagon
        for a in objs {
            for b in objs {
                for c in objs {
                    for d in objs {
                        let ab = m.tensor_obj(a, b);
                        let bc = m.tensor_obj(b, c);
                        let cd = m.tensor_obj(c, d);
                        let lhs = self.chain(&[
                            m.tensor_mor(&m.associator(a, b, c), &cat.identity(d)),
                            m.associator(a, &bc, d),
                            m.tensor_mor(&cat.identity(a), &m.associator(b, c, d)),
                        ]);
                        let rhs = self.chain(&[m.associator(&ab, c, d), m.associator(a, b, &cd)]);
                        let w = vec![self.o(a), self.o(b), self.o(c), self.o(d)];
                        self.expect_eq(Law::Pentagon, w, "pentagon", lhs, rhs);
                    }
                }
            }
        }
        // triangle
        for a in objs {
            for b in objs {
                let lhs = self.chain(&[
                    m.associator(a, &unit, b),
                    m.tensor_mor(&cat.identity(a), &m.left_unitor(b)),
                ]);
                let rhs = Ok(m.tensor_mor(&m.right_unitor(a), &cat.identity(b)));
                self.expect_eq(Law::Triangle, vec![self.o(a), self.o(b)], "triangle", lhs, rhs);
            }
        }

        if m.is_strict() {
            for a in objs {
                let w = vec![self.o(a)];
                let id = Ok(cat.identity(a));
                self.expect_eq(Law::Strictness, w.clone(), "λ = id", Ok(m.left_unitor(a)), id.clone());
                self.expect_eq(Law::Strictness, w, "ρ = id", Ok(m.right_unitor(a)), id);
                for b in objs {
                    for c in objs {
                        let abc = m.tensor_obj(&m.tensor_obj(a, b), c);
                        let w = vec![self.o(a), self.o(b), self.o(c)];
                        self.expect_eq(Law::Strictness, w, "α = id", Ok(m.associator(a, b, c)), Ok(cat.identity(&abc)));
                    }
                }
            }
        }
    }

    fn braiding(&mut self)
    where
        M: BraidedView,
    {
        let m = self.m;
        let cat = m.category();
        let objs = self.objects;
        for a in objs {
            for b in objs {
                let s = m.braiding(a, b);
                let (ab, ba) = (m.tensor_obj(a, b), m.tensor_obj(b, a));
                self.expect_typed(Law::Typing, format!("σ_{},{}", self.o(a), self.o(b)), &s, &ab, &ba);
            }
        }
        if !self.report.is_empty() {
            return;
        }
        let morphisms = self.morphisms.clone();
        for f in &morphisms {
            for g in &morphisms {
                let lhs = self.chain(&[m.tensor_mor(f, g), m.braiding(&cat.target(f), &cat.target(g))]);
                let rhs = self.chain(&[m.braiding(&cat.source(f), &cat.source(g)), m.tensor_mor(g, f)]);
                self.expect_eq(Law::Naturality, vec![self.mor(f), self.mor(g)], "σ natural", lhs, rhs);
            }
        }
        for a in objs {
            for b in objs {
                let lhs = self.chain(&[m.braiding(a, b), m.braiding(b, a)]);
                let rhs = Ok(cat.identity(&m.tensor_obj(a, b)));
                self.expect_eq(Law::Symmetry, vec![self.o(a), self.o(b)], "σ_{a,b} ; σ_{b,a} = id", lhs, rhs);
            }
        }
        for a in objs {
            for b in objs {
                for c in objs {
                    let w = vec![self.o(a), self.o(b), self.o(c)];
                    let bc = m.tensor_obj(b, c);
                    let ab = m.tensor_obj(a, b);
                    let lhs = self.chain(&[m.associator(a, b, c), m.braiding(a, &bc), m.associator(b, c, a)]);
                    let rhs = self.chain(&[
                        m.tensor_mor(&m.braiding(a, b), &cat.identity(c)),
                        m.associator(b, a, c),
                        m.tensor_mor(&cat.identity(b), &m.braiding(a, c)),
                    ]);
                    self.expect_eq(Law::Hexagon, w.clone(), "first hexagon", lhs, rhs);
                    let lhs = self.chain(&[
                        m.associator_inv(a, b, c),
                        m.braiding(&ab, c),
                        m.associator_inv(c, a, b),
                    ]);
                    let rhs = self.chain(&[
                        m.tensor_mor(&cat.identity(a), &m.braiding(b, c)),
                        m.associator_inv(a, c, b),
                        m.tensor_mor(&m.braiding(a, c), &cat.identity(b)),
                    ]);
                    self.expect_eq(Law::Hexagon, w, "second hexagon", lhs, rhs);
                }
            }
        }
    }
}

/// Tensor preserves identities, is well-typed, and satisfies interchange on
/// every pair of composable pairs (reported as `bifunctor`).
pub fn check_bifunctoriality<M: MonoidalView>(m: &M, objects: &[ObjOf<M>], bound: usize) -> LawReport {
    let mut s = Sweep::new(m, objects, bound);
    s.bifunctor(Law::Bifunctor, true);
    s.report
}

/// `(f ⊗ g) ; (h ⊗ k) = (f ; h) ⊗ (g ; k)` swept directly.
pub fn check_interchange<M: MonoidalView>(m: &M, objects: &[ObjOf<M>], bound: usize) -> LawReport {
    let mut s = Sweep::new(m, objects, bound);
    s.bifunctor(Law::Interchange, false);
    s.report
}

/// Typing and inverses of structure morphisms, naturality of associator and
/// unitors, pentagon, triangle, and strictness when claimed.
pub fn check_coherence<M: MonoidalView>(m: &M, objects: &[ObjOf<M>], bound: usize) -> LawReport {
    let mut s = Sweep::new(m, objects, bound);
    s.coherence();
    s.report
}

pub fn check_monoidal_laws<M: MonoidalView>(m: &M, objects: &[ObjOf<M>], bound: usize) -> LawReport {
    let mut report = check_bifunctoriality(m, objects, bound);
    report.merge(check_coherence(m, objects, bound));
    report
}

/// Braiding naturality, both hexagons and `σ ; σ = id`.
pub fn check_braiding_laws<M: BraidedView>(m: &M, objects: &[ObjOf<M>], bound: usize) -> LawReport {
    let mut s = Sweep::new(m, objects, bound);
    s.braiding();
    s.report
}

/// Monoidal structure on a finite category, fully tabulated.
#[derive(Clone, Debug)]
pub struct MonoidalStructure {
    base: Arc<FinCategory>,
    tensor: FunctorData,
    unit: ObjId,
    associator: Vec<(MorId, MorId)>,
    left_unitor: Vec<(MorId, MorId)>,
    right_unitor: Vec<(MorId, MorId)>,
    strict: bool,
}

impl MonoidalStructure {
    /// Tabulate structure given as functions. Structure morphisms are paired
    /// with their designated inverses.
    #[allow(clippy::too_many_arguments)]
    pub fn from_fns(
        base: Arc<FinCategory>,
        tensor_obj: impl Fn(ObjId, ObjId) -> ObjId,
        tensor_mor: impl Fn(MorId, MorId) -> MorId,
        unit: ObjId,
        associator: impl Fn(ObjId, ObjId, ObjId) -> (MorId, MorId),
        left_unitor: impl Fn(ObjId) -> (MorId, MorId),
        right_unitor: impl Fn(ObjId) -> (MorId, MorId),
        strict: bool,
    ) -> Result<Self, MonoidalError> {
        let square = Arc::new(product_category(&base, &base));
        let mut obj_map = Vec::with_capacity(square.num_objects());
        for a in base.object_ids() {
            for b in base.object_ids() {
                obj_map.push(tensor_obj(a, b));
            }
        }
        let mut mor_map = Vec::with_capacity(square.num_morphisms());
        for f in base.morphism_ids() {
            for g in base.morphism_ids() {
                mor_map.push(tensor_mor(f, g));
            }
        }
        let tensor = FunctorData::new(square, base.clone(), obj_map, mor_map)
            .map_err(|e| MonoidalError::IllTypedTensor(e.to_string()))?;
        let objs: Vec<ObjId> = base.object_ids().collect();
        let mut assoc = Vec::with_capacity(objs.len().pow(3));
        for &a in &objs {
            for &b in &objs {
                for &c in &objs {
                    assoc.push(associator(a, b, c));
                }
            }
        }
        let m = MonoidalStructure {
            left_unitor: objs.iter().map(|&a| left_unitor(a)).collect(),
            right_unitor: objs.iter().map(|&a| right_unitor(a)).collect(),
            base,
            tensor,
            unit,
            associator: assoc,
            strict,
        };
        m.check_structure_typing()?;
        Ok(m)
    }

    /// One-object category with tensor given by composition and identity
    /// structure morphisms; strict by construction.
    pub fn strict_monoid(base: Arc<FinCategory>) -> Result<Self, MonoidalError> {
        if base.num_objects() != 1 {
            return Err(MonoidalError::IllTypedTensor("composition tensor needs exactly one object".into()));
        }
        let pt = ObjId(0);
        let id = base.identity(pt);
        let cat = base.clone();
        Self::from_fns(
            base,
            |_, _| pt,
            move |f, g| cat.compose(f, g).expect("one object: everything composes"),
            pt,
            |_, _, _| (id, id),
            |_| (id, id),
            |_| (id, id),
            true,
        )
    }

    fn check_structure_typing(&self) -> Result<(), MonoidalError> {
        let objs: Vec<ObjId> = self.base.object_ids().collect();
        let n = self.base.num_morphisms();
        let all = self.associator.iter().chain(&self.left_unitor).chain(&self.right_unitor);
        if let Some(&(f, g)) = all.clone().find(|&&(f, g)| f.0 >= n || g.0 >= n) {
            return Err(MonoidalError::IllTypedStructure(format!("unknown morphism #{}", f.0.max(g.0))));
        }
        if self.unit.0 >= self.base.num_objects() {
            return Err(MonoidalError::IllTypedStructure(format!("unknown unit object #{}", self.unit.0)));
        }
        let mut s = Sweep::new(self, &objs, 0);
        s.structure_typing();
        let first = s.report.iter().next().map(|v| v.detail.clone());
        match first {
            Some(detail) => Err(MonoidalError::IllTypedStructure(detail)),
            None => Ok(()),
        }
    }

    /// Replace one associator component (and its inverse).
    pub fn with_associator(&self, a: ObjId, b: ObjId, c: ObjId, forward: MorId, inverse: MorId) -> Result<Self, MonoidalError> {
        let mut out = self.clone();
        let n = self.base.num_objects();
        out.associator[(a.0 * n + b.0) * n + c.0] = (forward, inverse);
        out.check_structure_typing()?;
        Ok(out)
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn tensor(&self) -> &FunctorData {
        &self.tensor
    }

    pub fn unit_object(&self) -> ObjId {
        self.unit
    }

    pub fn strict(&self) -> bool {
        self.strict
    }

    pub fn tensor_objects(&self, a: ObjId, b: ObjId) -> ObjId {
        self.tensor.obj(product_obj(&self.base, a, b))
    }

    pub fn associator_component(&self, a: ObjId, b: ObjId, c: ObjId) -> MorId {
        let n = self.base.num_objects();
        self.associator[(a.0 * n + b.0) * n + c.0].0
    }

    /// All associator and unitor components, forward direction.
    pub fn structure_morphisms(&self) -> impl Iterator<Item = MorId> + '_ {
        self.associator
            .iter()
            .chain(&self.left_unitor)
            .chain(&self.right_unitor)
            .map(|&(f, _)| f)
    }
}

impl MonoidalView for MonoidalStructure {
    type Cat = FinCategory;

    fn category(&self) -> &FinCategory {
        &self.base
    }
    fn unit(&self) -> ObjId {
        self.unit
    }
    fn tensor_obj(&self, a: &ObjId, b: &ObjId) -> ObjId {
        self.tensor_objects(*a, *b)
    }
    fn tensor_mor(&self, f: &MorId, g: &MorId) -> MorId {
        self.tensor.mor(product_mor(&self.base, *f, *g))
    }
    fn associator(&self, a: &ObjId, b: &ObjId, c: &ObjId) -> MorId {
        self.associator_component(*a, *b, *c)
    }
    fn associator_inv(&self, a: &ObjId, b: &ObjId, c: &ObjId) -> MorId {
        let n = self.base.num_objects();
        self.associator[(a.0 * n + b.0) * n + c.0].1
    }
    fn left_unitor(&self, a: &ObjId) -> MorId {
        self.left_unitor[a.0].0
    }
    fn left_unitor_inv(&self, a: &ObjId) -> MorId {
        self.left_unitor[a.0].1
    }
    fn right_unitor(&self, a: &ObjId) -> MorId {
        self.right_unitor[a.0].0
    }
    fn right_unitor_inv(&self, a: &ObjId) -> MorId {
        self.right_unitor[a.0].1
    }
    fn is_strict(&self) -> bool {
        self.strict
    }
}

/// Functoriality of the tensor out of `C × C` (reported as `bifunctor`),
/// followed by the full coherence sweep over all objects.
pub fn check_monoidal_structure(m: &MonoidalStructure) -> LawReport {
    let mut report = check_functor_laws(&m.tensor).relabel(Law::Bifunctor);
    let objects: Vec<ObjId> = m.base.object_ids().collect();
    report.merge(check_coherence(m, &objects, 0));
    report
}

/// Braiding components `σ_{a,b}`, indexed `a * n + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricStructure {
    braiding: Vec<MorId>,
}

impl SymmetricStructure {
    pub fn from_fn(m: &MonoidalStructure, braiding: impl Fn(ObjId, ObjId) -> MorId) -> Result<Self, MonoidalError> {
        let base = &m.base;
        let mut out = Vec::new();
        for a in base.object_ids() {
            for b in base.object_ids() {
                let s = braiding(a, b);
                let (ab, ba) = (m.tensor_objects(a, b), m.tensor_objects(b, a));
                if s.0 >= base.num_morphisms() || base.source(s) != ab || base.target(s) != ba {
                    return Err(MonoidalError::IllTypedStructure(format!(
                        "σ_{},{} must be {} -> {}",
                        base.object_name(a),
                        base.object_name(b),
                        base.object_name(ab),
                        base.object_name(ba)
                    )));
                }
                out.push(s);
            }
        }
        Ok(SymmetricStructure { braiding: out })
    }

    /// Identity braiding; requires `a⊗b = b⊗a` on the nose.
    pub fn identity(m: &MonoidalStructure) -> Result<Self, MonoidalError> {
        Self::from_fn(m, |a, b| m.base.identity(m.tensor_objects(a, b)))
    }

    pub fn component(&self, n: usize, a: ObjId, b: ObjId) -> MorId {
        self.braiding[a.0 * n + b.0]
    }
}

struct Braided<'a> {
    m: &'a MonoidalStructure,
    s: &'a SymmetricStructure,
}

impl MonoidalView for Braided<'_> {
    type Cat = FinCategory;

    fn category(&self) -> &FinCategory {
        &self.m.base
    }
    fn unit(&self) -> ObjId {
        self.m.unit
    }
    fn tensor_obj(&self, a: &ObjId, b: &ObjId) -> ObjId {
        self.m.tensor_obj(a, b)
    }
    fn tensor_mor(&self, f: &MorId, g: &MorId) -> MorId {
        self.m.tensor_mor(f, g)
    }
    fn associator(&self, a: &ObjId, b: &ObjId, c: &ObjId) -> MorId {
        self.m.associator(a, b, c)
    }
    fn associator_inv(&self, a: &ObjId, b: &ObjId, c: &ObjId) -> MorId {
        self.m.associator_inv(a, b, c)
    }
    fn left_unitor(&self, a: &ObjId) -> MorId {
        self.m.left_unitor(a)
    }
    fn left_unitor_inv(&self, a: &ObjId) -> MorId {
        self.m.left_unitor_inv(a)
    }
    fn right_unitor(&self, a: &ObjId) -> MorId {
        self.m.right_unitor(a)
    }
    fn right_unitor_inv(&self, a: &ObjId) -> MorId {
        self.m.right_unitor_inv(a)
    }
    fn is_strict(&self) -> bool {
        self.m.strict
    }
}

impl BraidedView for Braided<'_> {
    fn braiding(&self, a: &ObjId, b: &ObjId) -> MorId {
        self.s.component(self.m.base.num_objects(), *a, *b)
    }
}

pub fn check_symmetric_structure(m: &MonoidalStructure, s: &SymmetricStructure) -> LawReport {
    let objects: Vec<ObjId> = m.base.object_ids().collect();
    check_braiding_laws(&Braided { m, s }, &objects, 0)
}

/// Chosen binary products and a terminal object on a category view.
pub trait ChosenProducts: CategoryView {
    fn product_apex(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    /// `a⊗b → a`
    fn proj_l(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    /// `a⊗b → b`
    fn proj_r(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Mor;
    /// The mediating morphism `c → a⊗b` for `f : c → a` and `g : c → b`.
    fn pair(&self, a: &Self::Obj, b: &Self::Obj, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn terminal(&self) -> Self::Obj;
    /// The unique morphism `c → 1`.
    fn bang(&self, c: &Self::Obj) -> Self::Mor;
}

/// The monoidal (and symmetric) structure induced by chosen products: tensor
/// is the chosen product, unit the terminal object, and every structure
/// morphism is the mediating morphism of the evident cone.
#[derive(Clone, Debug)]
pub struct CartesianMonoidal<C: ChosenProducts> {
    cat: C,
}

impl<C: ChosenProducts> CartesianMonoidal<C> {
    pub fn new(cat: C) -> Self {
        CartesianMonoidal { cat }
    }

    fn then(&self, f: &C::Mor, g: &C::Mor) -> C::Mor {
        self.cat.compose(f, g).expect("cartesian structure maps compose by construction")
    }
}

impl<C: ChosenProducts> MonoidalView for CartesianMonoidal<C> {
    type Cat = C;

    fn category(&self) -> &C {
        &self.cat
    }
    fn unit(&self) -> C::Obj {
        self.cat.terminal()
    }
    fn tensor_obj(&self, a: &C::Obj, b: &C::Obj) -> C::Obj {
        self.cat.product_apex(a, b)
    }
    fn tensor_mor(&self, f: &C::Mor, g: &C::Mor) -> C::Mor {
        let c = &self.cat;
        let (a, b) = (c.source(f), c.source(g));
        let (a2, b2) = (c.target(f), c.target(g));
        let left = self.then(&c.proj_l(&a, &b), f);
        let right = self.then(&c.proj_r(&a, &b), g);
        c.pair(&a2, &b2, &left, &right)
    }
    fn associator(&self, a: &C::Obj, b: &C::Obj, x: &C::Obj) -> C::Mor {
        let c = &self.cat;
        let ab = c.product_apex(a, b);
        let bx = c.product_apex(b, x);
        let outer_l = c.proj_l(&ab, x);
        let outer_r = c.proj_r(&ab, x);
        let to_a = self.then(&outer_l, &c.proj_l(a, b));
        let to_b = self.then(&outer_l, &c.proj_r(a, b));
        let to_bx = c.pair(b, x, &to_b, &outer_r);
        c.pair(a, &bx, &to_a, &to_bx)
    }
    fn associator_inv(&self, a: &C::Obj, b: &C::Obj, x: &C::Obj) -> C::Mor {
        let c = &self.cat;
        let ab = c.product_apex(a, b);
        let bx = c.product_apex(b, x);
        let outer_l = c.proj_l(a, &bx);
        let outer_r = c.proj_r(a, &bx);
        let to_b = self.then(&outer_r, &c.proj_l(b, x));
        let to_x = self.then(&outer_r, &c.proj_r(b, x));
        let to_ab = c.pair(a, b, &outer_l, &to_b);
        c.pair(&ab, x, &to_ab, &to_x)
    }
    fn left_unitor(&self, a: &C::Obj) -> C::Mor {
        self.cat.proj_r(&self.cat.terminal(), a)
    }
    fn left_unitor_inv(&self, a: &C::Obj) -> C::Mor {
        let c = &self.cat;
        c.pair(&c.terminal(), a, &c.bang(a), &c.identity(a))
    }
    fn right_unitor(&self, a: &C::Obj) -> C::Mor {
        self.cat.proj_l(a, &self.cat.terminal())
    }
    fn right_unitor_inv(&self, a: &C::Obj) -> C::Mor {
        let c = &self.cat;
        c.pair(a, &c.terminal(), &c.identity(a), &c.bang(a))
    }
}

impl<C: ChosenProducts> BraidedView for CartesianMonoidal<C> {
    fn braiding(&self, a: &C::Obj, b: &C::Obj) -> C::Mor {
        let c = &self.cat;
        c.pair(b, a, &c.proj_r(a, b), &c.proj_l(a, b))
    }
}

/// A finite category together with validated product and terminal choices.
#[derive(Clone, Debug)]
pub struct FinCartesian<'a> {
    cat: &'a FinCategory,
    products: Vec<ProductWitness>,
    terminal: ObjId,
}

impl<'a> FinCartesian<'a> {
    /// Every chosen witness must pass `check_product`; the terminal must pass
    /// `check_terminal`.
    pub fn new(
        cat: &'a FinCategory,
        chooser: impl Fn(ObjId, ObjId) -> Option<ProductWitness>,
        terminal: TerminalWitness,
    ) -> Result<Self, MonoidalError> {
        let mut products = Vec::new();
        for a in cat.object_ids() {
            for b in cat.object_ids() {
                let missing = || MonoidalError::MissingProduct(cat.object_name(a).into(), cat.object_name(b).into());
                let w = chooser(a, b).ok_or_else(missing)?;
                if w.left != a || w.right != b {
                    return Err(missing());
                }
                match check_product(cat, &w) {
                    Ok(r) if r.is_empty() => products.push(w),
                    _ => return Err(missing()),
                }
            }
        }
        match check_terminal(cat, terminal.object) {
            Ok(r) if r.is_empty() => {}
            _ => return Err(MonoidalError::MissingTerminal),
        }
        Ok(FinCartesian { cat, products, terminal: terminal.object })
    }

    fn witness(&self, a: ObjId, b: ObjId) -> &ProductWitness {
        &self.products[a.0 * self.cat.num_objects() + b.0]
    }
}

impl CategoryView for FinCartesian<'_> {
    type Obj = ObjId;
    type Mor = MorId;

    fn contains_object(&self, obj: &ObjId) -> bool {
        self.cat.contains_object(obj)
    }
    fn source(&self, f: &MorId) -> ObjId {
        self.cat.source(*f)
    }
    fn target(&self, f: &MorId) -> ObjId {
        self.cat.target(*f)
    }
    fn identity(&self, obj: &ObjId) -> MorId {
        self.cat.identity(*obj)
    }
    fn compose(&self, f: &MorId, g: &MorId) -> Result<MorId, KernelError> {
        self.cat.compose(*f, *g)
    }
    fn mor_eq(&self, f: &MorId, g: &MorId) -> bool {
        f == g
    }
    fn hom(&self, a: &ObjId, b: &ObjId, _bound: usize) -> Vec<MorId> {
        self.cat.hom(*a, *b).to_vec()
    }
    fn show_obj(&self, obj: &ObjId) -> String {
        self.cat.object_name(*obj).to_string()
    }
    fn show_mor(&self, f: &MorId) -> String {
        self.cat.morphism_name(*f).to_string()
    }
}

impl ChosenProducts for FinCartesian<'_> {
    fn product_apex(&self, a: &ObjId, b: &ObjId) -> ObjId {
        self.witness(*a, *b).apex
    }
    fn proj_l(&self, a: &ObjId, b: &ObjId) -> MorId {
        self.witness(*a, *b).proj_l
    }
    fn proj_r(&self, a: &ObjId, b: &ObjId) -> MorId {
        self.witness(*a, *b).proj_r
    }
    fn pair(&self, a: &ObjId, b: &ObjId, f: &MorId, g: &MorId) -> MorId {
        mediators(self.cat, self.witness(*a, *b), *f, *g)[0]
    }
    fn terminal(&self) -> ObjId {
        self.terminal
    }
    fn bang(&self, c: &ObjId) -> MorId {
        self.cat.hom(*c, self.terminal)[0]
    }
}

fn tabulate(base: &Arc<FinCategory>, cart: &CartesianMonoidal<FinCartesian<'_>>) -> Result<MonoidalStructure, MonoidalError> {
    let cat: &FinCategory = base;
    let mut structural = Vec::new();
    let objs: Vec<ObjId> = cat.object_ids().collect();
    for &a in &objs {
        structural.push(cart.left_unitor(&a));
        structural.push(cart.right_unitor(&a));
        for &b in &objs {
            for &c in &objs {
                structural.push(cart.associator(&a, &b, &c));
            }
        }
    }
    let strict = structural.iter().all(|&f| cat.is_identity(f));
    MonoidalStructure::from_fns(
        base.clone(),
        |a, b| cart.tensor_obj(&a, &b),
        |f, g| cart.tensor_mor(&f, &g),
        cart.unit(),
        |a, b, c| (cart.associator(&a, &b, &c), cart.associator_inv(&a, &b, &c)),
        |a| (cart.left_unitor(&a), cart.left_unitor_inv(&a)),
        |a| (cart.right_unitor(&a), cart.right_unitor_inv(&a)),
        strict,
    )
}

/// Tensor from the chosen products, unit the terminal object, structure
/// morphisms the unique mediating isomorphisms. The result is flagged strict
/// exactly when every structure morphism is an identity.
pub fn monoidal_from_products(
    cat: &Arc<FinCategory>,
    chooser: impl Fn(ObjId, ObjId) -> Option<ProductWitness>,
    terminal: TerminalWitness,
) -> Result<MonoidalStructure, MonoidalError> {
    let cart = CartesianMonoidal::new(FinCartesian::new(cat, chooser, terminal)?);
    tabulate(cat, &cart)
}

/// As [`monoidal_from_products`], with the braiding `⟨π_r, π_l⟩`.
pub fn symmetric_from_products(
    cat: &Arc<FinCategory>,
    chooser: impl Fn(ObjId, ObjId) -> Option<ProductWitness>,
    terminal: TerminalWitness,
) -> Result<(MonoidalStructure, SymmetricStructure), MonoidalError> {
    let cart = CartesianMonoidal::new(FinCartesian::new(cat, chooser, terminal)?);
    let m = tabulate(cat, &cart)?;
    let s = SymmetricStructure::from_fn(&m, |a, b| cart.braiding(&a, &b))?;
    Ok((m, s))
}

/// First product witness for every pair (in `find_products` order).
pub fn first_product_chooser(cat: &FinCategory) -> impl Fn(ObjId, ObjId) -> Option<ProductWitness> + '_ {
    move |a, b| find_products(cat, a, b).ok().and_then(|ws| ws.into_iter().next())
}

/// Products and terminal chosen as the first found; fails with
/// `MissingProduct` before `MissingTerminal`.
pub fn cartesian_structure(cat: &Arc<FinCategory>) -> Result<(MonoidalStructure, SymmetricStructure), MonoidalError> {
    let table: Vec<Option<ProductWitness>> = cat
        .object_ids()
        .flat_map(|a| cat.object_ids().map(move |b| (a, b)))
        .map(|(a, b)| find_products(cat, a, b).ok().and_then(|ws| ws.into_iter().next()))
        .collect();
    let n = cat.num_objects();
    for a in cat.object_ids() {
        for b in cat.object_ids() {
            if table[a.0 * n + b.0].is_none() {
                return Err(MonoidalError::MissingProduct(cat.object_name(a).into(), cat.object_name(b).into()));
            }
        }
    }
    let terminal = *find_terminals(cat).first().ok_or(MonoidalError::MissingTerminal)?;
    symmetric_from_products(cat, |a, b| table[a.0 * n + b.0], terminal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::kernel::check_category_laws;

    #[test]
    fn product_category_counts() {
        let wa = fixtures::walking_arrow();
        let sq = product_category(&wa, &wa);
        assert_eq!(sq.num_objects(), 4);
        assert_eq!(sq.num_morphisms(), 9);
        let (a, b) = (wa.object("A").unwrap(), wa.object("B").unwrap());
        let (ab, bb) = (product_obj(&wa, a, b), product_obj(&wa, b, b));
        assert_eq!(sq.hom(ab, bb).len(), wa.hom(a, b).len() * wa.hom(b, b).len());
        assert!(check_category_laws(&sq).is_empty());
        let f = wa.morphism("f").unwrap();
        assert_eq!(sq.morphism_name(product_mor(&wa, f, f)), "(f,f)");
    }

    #[test]
    fn gcd_structure_on_divisors_of_12() {
        let p = Arc::new(fixtures::divisor_poset(12));
        let (m, s) = cartesian_structure(&p).unwrap();
        assert!(check_monoidal_structure(&m).is_empty());
        assert!(check_symmetric_structure(&m, &s).is_empty());
        assert_eq!(p.object_name(m.unit_object()), "12");
        let (four, six) = (p.object("4").unwrap(), p.object("6").unwrap());
        assert_eq!(p.object_name(m.tensor_objects(four, six)), "2");
    }

    #[test]
    fn z2_strict_structure() {
        let z2 = Arc::new(fixtures::z2());
        let m = MonoidalStructure::strict_monoid(z2.clone()).unwrap();
        assert!(check_monoidal_structure(&m).is_empty());
        let s = SymmetricStructure::identity(&m).unwrap();
        assert!(check_symmetric_structure(&m, &s).is_empty());
        // a non-identity associator component breaks the pentagon
        let pt = ObjId(0);
        let sm = z2.morphism("s").unwrap();
        let bad = m.with_associator(pt, pt, pt, sm, sm).unwrap();
        let report = check_monoidal_structure(&bad);
        assert!(report.count(Law::Pentagon) + report.count(Law::Naturality) > 0);
        assert!(report.count(Law::Strictness) > 0);
    }

    #[test]
    fn s3_identity_braiding_is_not_natural() {
        let s3 = Arc::new(fixtures::s3());
        let m = MonoidalStructure::strict_monoid(s3).unwrap();
        let s = SymmetricStructure::identity(&m).unwrap();
        assert!(check_symmetric_structure(&m, &s).count(Law::Naturality) > 0);
    }

    #[test]
    fn trivial_category_gives_a_strict_structure() {
        let t = Arc::new(fixtures::trivial());
        let (m, _) = cartesian_structure(&t).unwrap();
        assert!(m.strict());
        assert!(check_monoidal_structure(&m).is_empty());
    }

    #[test]
    fn discrete_category_has_no_products() {
        let d = Arc::new(fixtures::discrete(2));
        assert!(matches!(cartesian_structure(&d), Err(MonoidalError::MissingProduct(..))));
    }

    #[test]
    fn interchange_holds_directly() {
        let p = Arc::new(fixtures::divisor_poset(12));
        let (m, _) = cartesian_structure(&p).unwrap();
        let objs: Vec<ObjId> = p.object_ids().collect();
        assert!(check_interchange(&m, &objs, 0).is_empty());
    }
}
