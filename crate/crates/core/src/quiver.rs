//! Quivers, their path categories, and finite monoids as one-object categories.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::kernel::{CategoryView, FinCategory, FinCategoryBuilder, KernelError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("duplicate node `{0}`")]
    DuplicateNode(String),
    #[error("duplicate edge name `{0}`")]
    DuplicateEdgeName(String),
    #[error("paths are not composable: {0}")]
    NotComposable(String),
    #[error("unknown monoid element `{0}`")]
    UnknownElement(String),
    #[error("duplicate monoid element `{0}`")]
    DuplicateElement(String),
    #[error("multiplication table has the wrong shape")]
    TableShape,
    #[error("unit law fails at `{0}`")]
    UnitLawFails(String),
    #[error("not associative: ({a}{b}){c} differs from {a}({b}{c})")]
    NotAssociative { a: String, b: String, c: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub name: String,
    pub src: NodeId,
    pub tgt: NodeId,
}

/// A directed multigraph with named nodes and edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    nodes: Vec<String>,
    edges: Vec<Edge>,
    node_index: HashMap<String, NodeId>,
    edge_index: HashMap<String, EdgeId>,
}

/// A morphism of the path category: a source node and a chain of edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub anchor: NodeId,
    pub steps: Vec<EdgeId>,
}

impl Path {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl Quiver {
    pub fn new<N, E>(nodes: &[N], edges: &[(E, N, N)]) -> Result<Self, QuiverError>
    where
        N: AsRef<str>,
        E: AsRef<str>,
    {
        let mut node_index = HashMap::new();
        let mut node_names = Vec::new();
        for n in nodes {
            let n = n.as_ref();
            if node_index.insert(n.to_string(), NodeId(node_names.len())).is_some() {
                return Err(QuiverError::DuplicateNode(n.to_string()));
            }
            node_names.push(n.to_string());
        }
        let mut edge_index = HashMap::new();
        let mut edge_list = Vec::new();
        for (name, src, tgt) in edges {
            let node = |n: &N| {
                node_index
                    .get(n.as_ref())
                    .copied()
                    .ok_or_else(|| QuiverError::UnknownNode(n.as_ref().to_string()))
            };
            let (src, tgt) = (node(src)?, node(tgt)?);
            let name = name.as_ref().to_string();
            if edge_index.insert(name.clone(), EdgeId(edge_list.len())).is_some() {
                return Err(QuiverError::DuplicateEdgeName(name));
            }
            edge_list.push(Edge { name, src, tgt });
        }
        Ok(Quiver { nodes: node_names, edges: edge_list, node_index, edge_index })
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.nodes.len()).map(NodeId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn node(&self, name: &str) -> Option<NodeId> {
        self.node_index.get(name).copied()
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    pub fn node_name(&self, n: NodeId) -> &str {
        &self.nodes[n.0]
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn path_identity(&self, node: &str) -> Result<Path, QuiverError> {
        let anchor = self.node(node).ok_or_else(|| QuiverError::UnknownNode(node.to_string()))?;
        Ok(Path { anchor, steps: Vec::new() })
    }

    /// Build a path from edge names; the anchor is the first edge's source.
    pub fn path_from_edges(&self, edges: &[&str]) -> Result<Path, QuiverError> {
        let first = edges.first().ok_or_else(|| QuiverError::NotComposable("empty edge list".into()))?;
        let e0 = self.edge_id(first).ok_or_else(|| QuiverError::UnknownEdge(first.to_string()))?;
        let mut path = Path { anchor: self.edge(e0).src, steps: Vec::new() };
        for name in edges {
            let e = self.edge_id(name).ok_or_else(|| QuiverError::UnknownEdge(name.to_string()))?;
            path = self.path_compose(&path, &Path { anchor: self.edge(e).src, steps: vec![e] })?;
        }
        Ok(path)
    }

    /// Target node of a path (its anchor when empty).
    pub fn path_target(&self, p: &Path) -> NodeId {
        p.steps.last().map_or(p.anchor, |e| self.edges[e.0].tgt)
    }

    /// Whether `p` is a well-formed path of this quiver.
    pub fn is_path(&self, p: &Path) -> bool {
        if p.anchor.0 >= self.nodes.len() {
            return false;
        }
        let mut at = p.anchor;
        for e in &p.steps {
            match self.edges.get(e.0) {
                Some(edge) if edge.src == at => at = edge.tgt,
                _ => return false,
            }
        }
        true
    }

    /// Concatenation; `p` must end where `q` starts.
    pub fn path_compose(&self, p: &Path, q: &Path) -> Result<Path, QuiverError> {
        let end = self.path_target(p);
        if end != q.anchor {
            return Err(QuiverError::NotComposable(format!(
                "{} ends at {} but {} starts at {}",
                self.show_path(p),
                self.node_name(end),
                self.show_path(q),
                self.node_name(q.anchor)
            )));
        }
        let mut steps = p.steps.clone();
        steps.extend_from_slice(&q.steps);
        Ok(Path { anchor: p.anchor, steps })
    }

    /// `@A` for the empty path at `A`, otherwise edge names joined by `;`.
    pub fn show_path(&self, p: &Path) -> String {
        if p.steps.is_empty() {
            format!("@{}", self.node_name(p.anchor))
        } else {
            p.steps.iter().map(|e| self.edges[e.0].name.as_str()).collect::<Vec<_>>().join(";")
        }
    }

    /// Every path from `a` to `b` with at most `max_len` steps, ordered by
    /// length and then lexicographically by edge names.
    pub fn hom_paths(&self, a: &str, b: &str, max_len: usize) -> Result<Vec<Path>, QuiverError> {
        let a = self.node(a).ok_or_else(|| QuiverError::UnknownNode(a.to_string()))?;
        let b = self.node(b).ok_or_else(|| QuiverError::UnknownNode(b.to_string()))?;
        Ok(self.hom_paths_by_id(a, b, max_len))
    }

    pub fn hom_paths_by_id(&self, a: NodeId, b: NodeId, max_len: usize) -> Vec<Path> {
        let dist = self.distances_to(b);
        let mut by_name: Vec<EdgeId> = self.edge_ids().collect();
        by_name.sort_by(|x, y| self.edges[x.0].name.cmp(&self.edges[y.0].name));
        let mut out = Vec::new();
        for len in 0..=max_len {
            let mut steps = Vec::with_capacity(len);
            self.extend_paths(a, b, len, &by_name, &dist, &mut steps, &mut out);
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_paths(
        &self,
        at: NodeId,
        goal: NodeId,
        remaining: usize,
        by_name: &[EdgeId],
        dist: &[Option<usize>],
        steps: &mut Vec<EdgeId>,
        out: &mut Vec<Path>,
    ) {
        if remaining == 0 {
            if at == goal {
                let anchor = steps.first().map_or(at, |e| self.edges[e.0].src);
                out.push(Path { anchor, steps: steps.clone() });
            }
            return;
        }
        match dist[at.0] {
            Some(d) if d <= remaining => {}
            _ => return,
        }
        for &e in by_name {
            let edge = &self.edges[e.0];
            if edge.src != at {
                continue;
            }
            steps.push(e);
            self.extend_paths(edge.tgt, goal, remaining - 1, by_name, dist, steps, out);
            steps.pop();
        }
    }

    /// Shortest number of steps from each node to `goal`.
    fn distances_to(&self, goal: NodeId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.nodes.len()];
        dist[goal.0] = Some(0);
        let mut queue = VecDeque::from([goal]);
        while let Some(n) = queue.pop_front() {
            let d = dist[n.0].unwrap_or(0);
            for edge in &self.edges {
                if edge.tgt == n && dist[edge.src.0].is_none() {
                    dist[edge.src.0] = Some(d + 1);
                    queue.push_back(edge.src);
                }
            }
        }
        dist
    }
}

/// The path category of a quiver. Morphisms are paths, equality is equality
/// of step sequences, and the hom enumerator is bounded by path length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeCategory {
    quiver: Quiver,
}

pub fn free_category(q: &Quiver) -> FreeCategory {
    FreeCategory { quiver: q.clone() }
}

impl FreeCategory {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn objects(&self) -> Vec<NodeId> {
        self.quiver.node_ids().collect()
    }
}

impl CategoryView for FreeCategory {
    type Obj = NodeId;
    type Mor = Path;

    fn contains_object(&self, obj: &NodeId) -> bool {
        obj.0 < self.quiver.num_nodes()
    }
    fn source(&self, f: &Path) -> NodeId {
        f.anchor
    }
    fn target(&self, f: &Path) -> NodeId {
        self.quiver.path_target(f)
    }
    fn identity(&self, obj: &NodeId) -> Path {
        Path { anchor: *obj, steps: Vec::new() }
    }
    fn compose(&self, f: &Path, g: &Path) -> Result<Path, KernelError> {
        self.quiver.path_compose(f, g).map_err(|_| KernelError::NotComposable {
            f: self.quiver.show_path(f),
            g: self.quiver.show_path(g),
        })
    }
    fn mor_eq(&self, f: &Path, g: &Path) -> bool {
        f == g
    }
    fn hom(&self, a: &NodeId, b: &NodeId, bound: usize) -> Vec<Path> {
        self.quiver.hom_paths_by_id(*a, *b, bound)
    }
    fn show_obj(&self, obj: &NodeId) -> String {
        self.quiver.node_name(*obj).to_string()
    }
    fn show_mor(&self, f: &Path) -> String {
        self.quiver.show_path(f)
    }
}

/// A finite monoid given by a total multiplication table; the unit and
/// associativity laws are checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    elements: Vec<String>,
    unit: usize,
    table: Vec<usize>,
}

impl FiniteMonoid {
    /// `mult(i, j)` is the index of the product of elements `i` and `j`.
    pub fn new<S: AsRef<str>>(
        elements: &[S],
        unit: &str,
        mult: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, QuiverError> {
        let elements: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(QuiverError::DuplicateElement(e.clone()));
            }
        }
        let n = elements.len();
        let unit = elements
            .iter()
            .position(|e| e == unit)
            .ok_or_else(|| QuiverError::UnknownElement(unit.to_string()))?;
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let k = mult(i, j);
                if k >= n {
                    return Err(QuiverError::TableShape);
                }
                table.push(k);
            }
        }
        let m = FiniteMonoid { elements, unit, table };
        for x in 0..n {
            if m.mul(unit, x) != x || m.mul(x, unit) != x {
                return Err(QuiverError::UnitLawFails(m.elements[x].clone()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c)) {
                        return Err(QuiverError::NotAssociative {
                            a: m.elements[a].clone(),
                            b: m.elements[b].clone(),
                            c: m.elements[c].clone(),
                        });
                    }
                }
            }
        }
        Ok(m)
    }

    /// Table given by rows of element names: `rows[i][j]` is `elements[i] · elements[j]`.
    pub fn from_rows<S: AsRef<str>>(elements: &[S], unit: &str, rows: &[&[&str]]) -> Result<Self, QuiverError> {
        let n = elements.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(QuiverError::TableShape);
        }
        let mut idx = Vec::with_capacity(n * n);
        for row in rows {
            for name in row.iter() {
                let k = elements
                    .iter()
                    .position(|e| e.as_ref() == *name)
                    .ok_or_else(|| QuiverError::UnknownElement(name.to_string()))?;
                idx.push(k);
            }
        }
        Self::new(elements, unit, |i, j| idx[i * n + j])
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.elements.len() + b]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn element(&self, i: usize) -> &str {
        &self.elements[i]
    }
}

impl fmt::Display for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "monoid{{{}}}", self.elements.join(", "))
    }
}

/// Name of the single object of a monoid viewed as a category.
pub const MONOID_OBJECT: &str = "pt";

/// One object, one endomorphism per element, composition `f ; g = f·g`.
pub fn monoid_as_category(m: &FiniteMonoid) -> FinCategory {
    let mut b = FinCategoryBuilder::new();
    b.object(MONOID_OBJECT);
    for e in &m.elements {
        b.morphism(e.as_str(), MONOID_OBJECT, MONOID_OBJECT);
    }
    b.identity(MONOID_OBJECT, m.elements[m.unit].as_str());
    let n = m.len();
    for i in 0..n {
        for j in 0..n {
            b.compose(m.elements[i].as_str(), m.elements[j].as_str(), m.elements[m.mul(i, j)].as_str());
        }
    }
    b.build().expect("a law-checked monoid always tabulates")
}
