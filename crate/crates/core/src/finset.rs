//! Finite sets and tabulated functions. Two functions are equal exactly when
//! their tables are, so every law reduces to table comparison.

use std::fmt;

use thiserror::Error;

use crate::functor::{free_functor_extend, FunctorError, FunctorView};
use crate::kernel::{CategoryView, KernelError};
use crate::monoidal::{
    check_braiding_laws, check_monoidal_laws, CartesianMonoidal, ChosenProducts,
};
use crate::quiver::{Path, Quiver};
use crate::report::LawReport;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinSetError {
    #[error("table has length {found}, expected {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("entry {value} at position {index} is outside 0..{cod}")]
    OutOfRange { index: usize, value: usize, cod: usize },
    #[error("cannot compose: codomain {left_cod} differs from domain {right_dom}")]
    ComposeDomainMismatch { left_cod: usize, right_dom: usize },
    #[error("tabulation needs {needed} instances, more than the budget of {budget}")]
    CapExceeded { needed: usize, budget: usize },
    #[error("size cap must be at least 1")]
    ZeroCap,
    #[error("image of edge `{edge}` is ill-typed: {detail}")]
    IllTypedEdgeImage { edge: String, detail: String },
    #[error("not a path in the quiver")]
    NotAPath,
}

/// The set `{0, .., size - 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSetObj(pub usize);

impl fmt::Display for FinSetObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinFunction {
    dom: FinSetObj,
    cod: FinSetObj,
    table: Vec<usize>,
}

impl FinFunction {
    pub fn new(dom: FinSetObj, cod: FinSetObj, table: Vec<usize>) -> Result<Self, FinSetError> {
        if table.len() != dom.0 {
            return Err(FinSetError::TableLength { expected: dom.0, found: table.len() });
        }
        if let Some((index, &value)) = table.iter().enumerate().find(|&(_, &v)| v >= cod.0) {
            return Err(FinSetError::OutOfRange { index, value, cod: cod.0 });
        }
        Ok(FinFunction { dom, cod, table })
    }

    pub fn identity(a: FinSetObj) -> Self {
        FinFunction { dom: a, cod: a, table: (0..a.0).collect() }
    }

    pub fn constant(dom: FinSetObj, cod: FinSetObj, value: usize) -> Result<Self, FinSetError> {
        Self::new(dom, cod, vec![value; dom.0])
    }

    pub fn dom(&self) -> FinSetObj {
        self.dom
    }

    pub fn cod(&self) -> FinSetObj {
        self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self` first, then `g`.
    pub fn then(&self, g: &FinFunction) -> Result<FinFunction, FinSetError> {
        if self.cod != g.dom {
            return Err(FinSetError::ComposeDomainMismatch { left_cod: self.cod.0, right_dom: g.dom.0 });
        }
        Ok(FinFunction { dom: self.dom, cod: g.cod, table: self.table.iter().map(|&x| g.table[x]).collect() })
    }
}

impl fmt::Display for FinFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}{:?}", self.dom, self.cod, self.table)
    }
}

/// All `cod^dom` functions, tables in lexicographic order.
pub fn all_functions(dom: FinSetObj, cod: FinSetObj) -> Vec<FinFunction> {
    let (m, n) = (dom.0, cod.0);
    if m > 0 && n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n.pow(m as u32));
    let mut table = vec![0; m];
    loop {
        out.push(FinFunction { dom, cod, table: table.clone() });
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            table[i] += 1;
            if table[i] < n {
                break;
            }
            table[i] = 0;
        }
    }
}

/// The category of finite sets, with chosen products `|A|·|B|` under the
/// row-major pair encoding `(i, j) ↦ i·|B| + j` and the singleton as
/// terminal object. The hom enumerator ignores its bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FinSetCategory;

pub fn finset_category() -> FinSetCategory {
    FinSetCategory
}

impl CategoryView for FinSetCategory {
    type Obj = FinSetObj;
    type Mor = FinFunction;

    fn contains_object(&self, _obj: &FinSetObj) -> bool {
        true
    }
    fn source(&self, f: &FinFunction) -> FinSetObj {
        f.dom
    }
    fn target(&self, f: &FinFunction) -> FinSetObj {
        f.cod
    }
    fn identity(&self, obj: &FinSetObj) -> FinFunction {
        FinFunction::identity(*obj)
    }
    fn compose(&self, f: &FinFunction, g: &FinFunction) -> Result<FinFunction, KernelError> {
        f.then(g).map_err(|_| KernelError::NotComposable { f: f.to_string(), g: g.to_string() })
    }
    fn mor_eq(&self, f: &FinFunction, g: &FinFunction) -> bool {
        f == g
    }
    fn hom(&self, a: &FinSetObj, b: &FinSetObj, _bound: usize) -> Vec<FinFunction> {
        all_functions(*a, *b)
    }
    fn show_obj(&self, obj: &FinSetObj) -> String {
        obj.to_string()
    }
    fn show_mor(&self, f: &FinFunction) -> String {
        f.to_string()
    }
}

impl ChosenProducts for FinSetCategory {
    fn product_apex(&self, a: &FinSetObj, b: &FinSetObj) -> FinSetObj {
        FinSetObj(a.0 * b.0)
    }
    fn proj_l(&self, a: &FinSetObj, b: &FinSetObj) -> FinFunction {
        FinFunction { dom: self.product_apex(a, b), cod: *a, table: (0..a.0 * b.0).map(|k| k / b.0).collect() }
    }
    fn proj_r(&self, a: &FinSetObj, b: &FinSetObj) -> FinFunction {
        FinFunction { dom: self.product_apex(a, b), cod: *b, table: (0..a.0 * b.0).map(|k| k % b.0).collect() }
    }
    fn pair(&self, a: &FinSetObj, b: &FinSetObj, f: &FinFunction, g: &FinFunction) -> FinFunction {
        let table = f.table.iter().zip(&g.table).map(|(&i, &j)| i * b.0 + j).collect();
        FinFunction { dom: f.dom, cod: self.product_apex(a, b), table }
    }
    fn terminal(&self) -> FinSetObj {
        FinSetObj(1)
    }
    fn bang(&self, c: &FinSetObj) -> FinFunction {
        FinFunction { dom: *c, cod: FinSetObj(1), table: vec![0; c.0] }
    }
}

/// The cartesian structure on finite sets, checked on the objects of size at
/// most `cap`. Tensors of sample objects may exceed the cap; they are still
/// finite sets, so every equation is decided pointwise.
#[derive(Clone, Debug)]
pub struct FinSetMonoidal {
    cap: usize,
    structure: CartesianMonoidal<FinSetCategory>,
}

/// Number of morphisms among objects of size `0..=cap`, i.e. `Σ b^a`.
pub fn finset_instances(cap: usize) -> usize {
    (0..=cap).flat_map(|a| (0..=cap).map(move |b| b.pow(a as u32))).sum()
}

pub fn finset_products_monoidal(size_cap: usize, budget: usize) -> Result<FinSetMonoidal, FinSetError> {
    if size_cap == 0 {
        return Err(FinSetError::ZeroCap);
    }
    let needed = finset_instances(size_cap);
    if needed > budget {
        return Err(FinSetError::CapExceeded { needed, budget });
    }
    Ok(FinSetMonoidal { cap: size_cap, structure: CartesianMonoidal::new(FinSetCategory) })
}

impl FinSetMonoidal {
    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn structure(&self) -> &CartesianMonoidal<FinSetCategory> {
        &self.structure
    }

    pub fn objects(&self) -> Vec<FinSetObj> {
        (0..=self.cap).map(FinSetObj).collect()
    }

    /// Bifunctoriality, typing, inverses, naturality, pentagon and triangle.
    pub fn check_monoidal(&self) -> LawReport {
        check_monoidal_laws(&self.structure, &self.objects(), 0)
    }

    /// Braiding naturality, hexagons and symmetry for the coordinate swap.
    pub fn check_symmetric(&self) -> LawReport {
        check_braiding_laws(&self.structure, &self.objects(), 0)
    }
}

/// Image of `p` under the functor sending node `n` to `node_sizes[n]` and
/// edge `e` to `edge_tables[e]`.
pub fn evaluate_free_functor(
    q: &Quiver,
    node_sizes: &[FinSetObj],
    edge_tables: &[FinFunction],
    p: &Path,
) -> Result<FinFunction, FinSetError> {
    let functor = free_functor_extend(q, FinSetCategory, node_sizes.to_vec(), edge_tables.to_vec()).map_err(|e| match e {
        FunctorError::IllTypedEdgeImage { edge, detail } => FinSetError::IllTypedEdgeImage { edge, detail },
        other => FinSetError::IllTypedEdgeImage { edge: String::new(), detail: other.to_string() },
    })?;
    if !q.is_path(p) {
        return Err(FinSetError::NotAPath);
    }
    Ok(functor.map_mor(p))
}
