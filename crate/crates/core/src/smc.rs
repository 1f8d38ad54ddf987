//! The free strict symmetric monoidal category on a signature.
//!
//! Objects are words over the generating objects. A morphism is an acyclic
//! wiring: every out-port (a domain position or a box output) feeds exactly
//! one in-port (a codomain position or a box input) of the same type. Two
//! wirings denote the same morphism iff they are isomorphic relative to the
//! boundary, which is decided by comparing canonical serializations.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use itertools::Itertools;
use thiserror::Error;

use crate::report::{Law, LawReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmcError {
    #[error("unknown object token `{0}`")]
    UnknownObjectToken(String),
    #[error("object token `{0}` declared twice")]
    DuplicateObject(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("cannot compose: codomain {left} differs from domain {right}")]
    WordMismatch { left: String, right: String },
    #[error("invalid wiring: {0}")]
    InvalidWiring(String),
}

/// A word of generating objects, by token index. The empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub dom: Word,
    pub cod: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    objects: Vec<String>,
    generators: Vec<Generator>,
}

impl Signature {
    /// Generator words use the `.`-separated syntax of [`Signature::parse_word`].
    pub fn new<S: AsRef<str>>(objects: &[S], generators: &[(S, S, S)]) -> Result<Self, SmcError> {
        let mut sig = Signature { objects: Vec::new(), generators: Vec::new() };
        for o in objects {
            let o = o.as_ref();
            if sig.objects.iter().any(|x| x == o) {
                return Err(SmcError::DuplicateObject(o.to_string()));
            }
            sig.objects.push(o.to_string());
        }
        for (name, dom, cod) in generators {
            let name = name.as_ref();
            if sig.generator(name).is_some() {
                return Err(SmcError::DuplicateGenerator(name.to_string()));
            }
            let dom = sig.parse_word(dom.as_ref())?;
            let cod = sig.parse_word(cod.as_ref())?;
            sig.generators.push(Generator { name: name.to_string(), dom, cod });
        }
        Ok(sig)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn token(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    /// `x.y.x`; `1` (or nothing) is the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word, SmcError> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::unit());
        }
        s.split('.')
            .map(|t| self.token(t.trim()).ok_or_else(|| SmcError::UnknownObjectToken(t.trim().to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn show_word(&self, w: &Word) -> String {
        if w.is_empty() {
            "1".to_string()
        } else {
            w.0.iter().map(|&t| self.objects[t].as_str()).join(".")
        }
    }

    /// Every word of length at most `max_len`, shortest first, then
    /// lexicographically by token index.
    pub fn words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::unit()];
        let mut layer = vec![Word::unit()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for t in 0..self.objects.len() {
                    let mut v = w.0.clone();
                    v.push(t);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

/// Where a wire starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OutPort {
    /// Domain position.
    Dom(usize),
    /// Output `j` of box `b`.
    Box(usize, usize),
}

/// Where a wire ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InPort {
    Cod(usize),
    Box(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    dom: Word,
    cod: Word,
    boxes: Vec<usize>,
    inputs: Vec<Vec<OutPort>>,
    outputs: Vec<OutPort>,
}

impl Diagram {
    /// A wiring given explicitly: `inputs[b][k]` feeds input `k` of box `b`,
    /// `outputs[j]` feeds codomain position `j`.
    pub fn from_parts(
        sig: &Signature,
        dom: Word,
        cod: Word,
        boxes: Vec<usize>,
        inputs: Vec<Vec<OutPort>>,
        outputs: Vec<OutPort>,
    ) -> Result<Self, SmcError> {
        let d = Diagram { dom, cod, boxes, inputs, outputs };
        d.validate(sig)?;
        Ok(d)
    }

    pub fn identity(w: &Word) -> Self {
        Diagram {
            dom: w.clone(),
            cod: w.clone(),
            boxes: Vec::new(),
            inputs: Vec::new(),
            outputs: (0..w.len()).map(OutPort::Dom).collect(),
        }
    }

    pub fn generator(sig: &Signature, name: &str) -> Result<Self, SmcError> {
        let g = sig.generator(name).ok_or_else(|| SmcError::UnknownGenerator(name.to_string()))?;
        let gen = &sig.generators[g];
        Ok(Diagram {
            dom: gen.dom.clone(),
            cod: gen.cod.clone(),
            boxes: vec![g],
            inputs: vec![(0..gen.dom.len()).map(OutPort::Dom).collect()],
            outputs: (0..gen.cod.len()).map(|j| OutPort::Box(0, j)).collect(),
        })
    }

    /// `u·v → v·u`, swapping the two blocks.
    pub fn symmetry(u: &Word, v: &Word) -> Self {
        let (m, n) = (u.len(), v.len());
        Diagram {
            dom: u.concat(v),
            cod: v.concat(u),
            boxes: Vec::new(),
            inputs: Vec::new(),
            outputs: (m..m + n).chain(0..m).map(OutPort::Dom).collect(),
        }
    }

    pub fn dom(&self) -> &Word {
        &self.dom
    }

    pub fn cod(&self) -> &Word {
        &self.cod
    }

    pub fn boxes(&self) -> &[usize] {
        &self.boxes
    }

    pub fn num_boxes(&self) -> usize {
        self.boxes.len()
    }

    pub fn inputs(&self) -> &[Vec<OutPort>] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[OutPort] {
        &self.outputs
    }

    /// `self` first, then `next`.
    pub fn compose(&self, next: &Diagram) -> Result<Diagram, SmcError> {
        if self.cod != next.dom {
            return Err(SmcError::WordMismatch { left: format!("{:?}", self.cod.0), right: format!("{:?}", next.dom.0) });
        }
        let offset = self.boxes.len();
        let remap = |p: &OutPort| match *p {
            OutPort::Dom(i) => self.outputs[i],
            OutPort::Box(b, j) => OutPort::Box(b + offset, j),
        };
        Ok(Diagram {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            boxes: self.boxes.iter().chain(&next.boxes).copied().collect(),
            inputs: self
                .inputs
                .iter()
                .cloned()
                .chain(next.inputs.iter().map(|ins| ins.iter().map(remap).collect()))
                .collect(),
            outputs: next.outputs.iter().map(remap).collect(),
        })
    }

    /// Side by side, `self` on the left.
    pub fn tensor(&self, right: &Diagram) -> Diagram {
        let (shift, offset) = (self.dom.len(), self.boxes.len());
        let remap = |p: &OutPort| match *p {
            OutPort::Dom(i) => OutPort::Dom(i + shift),
            OutPort::Box(b, j) => OutPort::Box(b + offset, j),
        };
        Diagram {
            dom: self.dom.concat(&right.dom),
            cod: self.cod.concat(&right.cod),
            boxes: self.boxes.iter().chain(&right.boxes).copied().collect(),
            inputs: self
                .inputs
                .iter()
                .cloned()
                .chain(right.inputs.iter().map(|ins| ins.iter().map(remap).collect()))
                .collect(),
            outputs: self.outputs.iter().copied().chain(right.outputs.iter().map(remap)).collect(),
        }
    }

    fn out_type(&self, sig: &Signature, p: OutPort) -> Option<usize> {
        match p {
            OutPort::Dom(i) => self.dom.0.get(i).copied(),
            OutPort::Box(b, j) => self.boxes.get(b).and_then(|&g| sig.generators[g].cod.0.get(j).copied()),
        }
    }

    /// Arity, typing, perfect matching and acyclicity.
    pub fn validate(&self, sig: &Signature) -> Result<(), SmcError> {
        let bad = |s: String| Err(SmcError::InvalidWiring(s));
        if self.dom.0.iter().chain(&self.cod.0).any(|&t| t >= sig.objects.len()) {
            return bad("word uses an undeclared token".into());
        }
        if self.inputs.len() != self.boxes.len() {
            return bad("one input list per box required".into());
        }
        if self.outputs.len() != self.cod.len() {
            return bad("one source per codomain position required".into());
        }
        let mut used: BTreeMap<OutPort, usize> = BTreeMap::new();
        for (b, &g) in self.boxes.iter().enumerate() {
            let gen = sig.generators.get(g).ok_or_else(|| SmcError::UnknownGenerator(format!("#{g}")))?;
            if self.inputs[b].len() != gen.dom.len() {
                return bad(format!("box {b} ({}) needs {} inputs", gen.name, gen.dom.len()));
            }
            for (k, &p) in self.inputs[b].iter().enumerate() {
                if self.out_type(sig, p) != Some(gen.dom.0[k]) {
                    return bad(format!("input {k} of box {b} is fed by an ill-typed or missing port"));
                }
                *used.entry(p).or_default() += 1;
            }
        }
        for (j, &p) in self.outputs.iter().enumerate() {
            if self.out_type(sig, p) != Some(self.cod.0[j]) {
                return bad(format!("codomain position {j} is fed by an ill-typed or missing port"));
            }
            *used.entry(p).or_default() += 1;
        }
        let all_out = (0..self.dom.len())
            .map(OutPort::Dom)
            .chain(self.boxes.iter().enumerate().flat_map(|(b, &g)| {
                (0..sig.generators[g].cod.len()).map(move |j| OutPort::Box(b, j))
            }));
        for p in all_out {
            match used.get(&p) {
                Some(1) => {}
                Some(_) => return bad(format!("{p:?} is used more than once")),
                None => return bad(format!("{p:?} is unused")),
            }
        }
        if !self.is_acyclic() {
            return bad("wiring has a cycle".into());
        }
        Ok(())
    }

    /// Kahn's algorithm over the box dependency relation.
    pub fn is_acyclic(&self) -> bool {
        let n = self.boxes.len();
        let mut indeg = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for (b, ins) in self.inputs.iter().enumerate() {
            for p in ins {
                if let OutPort::Box(a, _) = *p {
                    succ[a].push(b);
                    indeg[b] += 1;
                }
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&b| indeg[b] == 0).collect();
        let mut seen = 0;
        while let Some(b) = queue.pop_front() {
            seen += 1;
            for &c in &succ[b] {
                indeg[c] -= 1;
                if indeg[c] == 0 {
                    queue.push_back(c);
                }
            }
        }
        seen == n
    }

    fn consumers(&self, sig: &Signature) -> (Vec<InPort>, Vec<Vec<InPort>>) {
        let mut dom = vec![InPort::Cod(usize::MAX); self.dom.len()];
        let mut boxes: Vec<Vec<InPort>> =
            self.boxes.iter().map(|&g| vec![InPort::Cod(usize::MAX); sig.generators[g].cod.len()]).collect();
        let mut set = |p: OutPort, q: InPort| match p {
            OutPort::Dom(i) => dom[i] = q,
            OutPort::Box(b, j) => boxes[b][j] = q,
        };
        for (b, ins) in self.inputs.iter().enumerate() {
            for (k, &p) in ins.iter().enumerate() {
                set(p, InPort::Box(b, k));
            }
        }
        for (j, &p) in self.outputs.iter().enumerate() {
            set(p, InPort::Cod(j));
        }
        (dom, boxes)
    }

    /// Boxes renumbered in `order` (old indices, new positions).
    fn renumbered(&self, order: &[usize]) -> Diagram {
        let mut new_of = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let remap = |p: &OutPort| match *p {
            OutPort::Dom(i) => OutPort::Dom(i),
            OutPort::Box(b, j) => OutPort::Box(new_of[b], j),
        };
        Diagram {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            boxes: order.iter().map(|&b| self.boxes[b]).collect(),
            inputs: order.iter().map(|&b| self.inputs[b].iter().map(remap).collect()).collect(),
            outputs: self.outputs.iter().map(remap).collect(),
        }
    }
}

fn show_port(p: &OutPort) -> String {
    match *p {
        OutPort::Dom(i) => format!("d{i}"),
        OutPort::Box(b, j) => format!("b{b}:{j}"),
    }
}

/// Serialization of the diagram exactly as stored, without renumbering.
pub fn serialize_raw(sig: &Signature, d: &Diagram) -> String {
    let mut s = format!("dom={} cod={} boxes=[", sig.show_word(&d.dom), sig.show_word(&d.cod));
    s.push_str(&d.boxes.iter().map(|&g| sig.generators[g].name.as_str()).join(","));
    let _ = write!(s, "] out=[{}] in=[", d.outputs.iter().map(show_port).join(","));
    s.push_str(&d.inputs.iter().map(|ins| format!("[{}]", ins.iter().map(show_port).join(","))).join(","));
    s.push(']');
    s
}

struct Traversal<'a> {
    d: &'a Diagram,
    dom_consumer: &'a [InPort],
    box_consumer: &'a [Vec<InPort>],
}

impl Traversal<'_> {
    /// Breadth-first labeling from the seeds: a box's sources in input order,
    /// then its consumers in output order.
    fn run(&self, seeds: &[usize], labels: &mut [bool], order: &mut Vec<usize>) {
        let mut queue = VecDeque::new();
        let mut visit = |b: usize, queue: &mut VecDeque<usize>, order: &mut Vec<usize>| {
            if !labels[b] {
                labels[b] = true;
                order.push(b);
                queue.push_back(b);
            }
        };
        for &s in seeds {
            visit(s, &mut queue, order);
        }
        while let Some(b) = queue.pop_front() {
            for p in &self.d.inputs[b] {
                if let OutPort::Box(a, _) = *p {
                    visit(a, &mut queue, order);
                }
            }
            for q in &self.box_consumer[b] {
                if let InPort::Box(c, _) = *q {
                    visit(c, &mut queue, order);
                }
            }
        }
    }

    fn boundary_seeds(&self) -> Vec<usize> {
        let from_dom = self.dom_consumer.iter().filter_map(|q| match *q {
            InPort::Box(b, _) => Some(b),
            InPort::Cod(_) => None,
        });
        let from_cod = self.d.outputs.iter().filter_map(|p| match *p {
            OutPort::Box(b, _) => Some(b),
            OutPort::Dom(_) => None,
        });
        from_dom.chain(from_cod).collect()
    }
}

/// Canonical renumbering of the boxes: breadth-first from the boundary
/// (domain ports in order, then codomain ports), then every closed component
/// labeled from whichever start box gives the least serialization, closed
/// components sorted by that serialization.
pub fn canonicalize(sig: &Signature, d: &Diagram) -> Diagram {
    let (dom_consumer, box_consumer) = d.consumers(sig);
    let t = Traversal { d, dom_consumer: &dom_consumer, box_consumer: &box_consumer };
    let n = d.boxes.len();
    let mut labels = vec![false; n];
    let mut order = Vec::with_capacity(n);
    t.run(&t.boundary_seeds(), &mut labels, &mut order);

    let mut components: Vec<(String, Vec<usize>)> = Vec::new();
    let mut seen = labels.clone();
    for b in 0..n {
        if seen[b] {
            continue;
        }
        let mut members = Vec::new();
        t.run(&[b], &mut seen, &mut members);
        let best = members
            .iter()
            .map(|&s| {
                let mut local = labels.clone();
                let mut comp_order = Vec::new();
                t.run(&[s], &mut local, &mut comp_order);
                (component_code(sig, d, &comp_order), comp_order)
            })
            .min()
            .expect("a component has at least one box");
        components.push(best);
    }
    components.sort();
    for (_, comp_order) in components {
        order.extend(comp_order);
    }
    d.renumbered(&order)
}

fn component_code(sig: &Signature, d: &Diagram, order: &[usize]) -> String {
    let local = |b: usize| order.iter().position(|&x| x == b).expect("closed component");
    order
        .iter()
        .map(|&b| {
            let ins = d.inputs[b].iter().map(|p| match *p {
                OutPort::Box(a, j) => format!("b{}:{j}", local(a)),
                OutPort::Dom(i) => format!("d{i}"),
            });
            format!("{}({})", sig.generators[d.boxes[b]].name, ins.format(","))
        })
        .join(";")
}

/// A diagram in canonical numbering together with its serialization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalDiagram {
    pub diagram: Diagram,
    pub form: String,
}

pub fn canonical(sig: &Signature, d: &Diagram) -> CanonicalDiagram {
    let diagram = canonicalize(sig, d);
    let form = serialize_raw(sig, &diagram);
    CanonicalDiagram { diagram, form }
}

pub fn canonical_form(sig: &Signature, d: &Diagram) -> String {
    canonical(sig, d).form
}

/// Equality in the free strict symmetric monoidal category.
pub fn diagrams_equal(sig: &Signature, d1: &Diagram, d2: &Diagram) -> bool {
    d1.dom == d2.dom && d1.cod == d2.cod && canonical_form(sig, d1) == canonical_form(sig, d2)
}

fn token_counts(sig: &Signature, w: &Word) -> Vec<usize> {
    let mut c = vec![0; sig.objects.len()];
    for &t in &w.0 {
        c[t] += 1;
    }
    c
}

/// Multisets of generator indices of size exactly `k`, as non-decreasing lists.
fn multisets(num_gens: usize, k: usize) -> Vec<Vec<usize>> {
    (0..num_gens).combinations_with_replacement(k).collect()
}

/// Every morphism `w1 → w2` with at most `max_boxes` boxes, one canonical
/// representative each, ordered by box count and then serialization.
pub fn enumerate_homs(sig: &Signature, w1: &Word, w2: &Word, max_boxes: usize) -> Vec<CanonicalDiagram> {
    let mut found: BTreeMap<(usize, String), Diagram> = BTreeMap::new();
    for k in 0..=max_boxes {
        let choices = if k == 0 { vec![Vec::new()] } else { multisets(sig.generators.len(), k) };
        for boxes in choices {
            let mut supply = token_counts(sig, w1);
            let mut demand = token_counts(sig, w2);
            for &g in &boxes {
                for &t in &sig.generators[g].cod.0 {
                    supply[t] += 1;
                }
                for &t in &sig.generators[g].dom.0 {
                    demand[t] += 1;
                }
            }
            if supply != demand {
                continue;
            }
            for d in wirings(sig, w1, w2, &boxes) {
                if d.is_acyclic() {
                    let c = canonical(sig, &d);
                    found.entry((k, c.form)).or_insert(c.diagram);
                }
            }
        }
    }
    found.into_iter().map(|((_, form), diagram)| CanonicalDiagram { diagram, form }).collect()
}

/// All type-respecting perfect matchings for a fixed box list, acyclic or not.
fn wirings(sig: &Signature, w1: &Word, w2: &Word, boxes: &[usize]) -> Vec<Diagram> {
    let mut outs: Vec<Vec<OutPort>> = vec![Vec::new(); sig.objects.len()];
    let mut ins: Vec<Vec<InPort>> = vec![Vec::new(); sig.objects.len()];
    for (i, &t) in w1.0.iter().enumerate() {
        outs[t].push(OutPort::Dom(i));
    }
    for (j, &t) in w2.0.iter().enumerate() {
        ins[t].push(InPort::Cod(j));
    }
    for (b, &g) in boxes.iter().enumerate() {
        for (j, &t) in sig.generators[g].cod.0.iter().enumerate() {
            outs[t].push(OutPort::Box(b, j));
        }
        for (k, &t) in sig.generators[g].dom.0.iter().enumerate() {
            ins[t].push(InPort::Box(b, k));
        }
    }
    let per_token: Vec<Vec<Vec<usize>>> = outs.iter().map(|o| (0..o.len()).permutations(o.len()).collect()).collect();
    let template = Diagram {
        dom: w1.clone(),
        cod: w2.clone(),
        boxes: boxes.to_vec(),
        inputs: boxes.iter().map(|&g| vec![OutPort::Dom(usize::MAX); sig.generators[g].dom.len()]).collect(),
        outputs: vec![OutPort::Dom(usize::MAX); w2.len()],
    };
    let mut out = Vec::new();
    fill(&per_token, &outs, &ins, 0, template, &mut out);
    out
}

fn fill(
    per_token: &[Vec<Vec<usize>>],
    outs: &[Vec<OutPort>],
    ins: &[Vec<InPort>],
    t: usize,
    current: Diagram,
    acc: &mut Vec<Diagram>,
) {
    if t == per_token.len() {
        acc.push(current);
        return;
    }
    for perm in &per_token[t] {
        let mut d = current.clone();
        for (k, &q) in ins[t].iter().enumerate() {
            let p = outs[t][perm[k]];
            match q {
                InPort::Cod(j) => d.outputs[j] = p,
                InPort::Box(b, i) => d.inputs[b][i] = p,
            }
        }
        fill(per_token, outs, ins, t + 1, d, acc);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SmcBounds {
    /// Total boxes over all diagrams in one law instance.
    pub max_boxes: usize,
    /// Longest word appearing as a boundary of any composite in an instance.
    pub max_word: usize,
}

/// Category, strict monoidal, interchange and symmetry laws over every
/// enumerated instance within `bounds`, compared by canonical form.
pub fn check_free_smc_laws(sig: &Signature, bounds: SmcBounds) -> LawReport {
    check_free_smc_laws_with(sig, bounds, &canonical_form)
}

/// As [`check_free_smc_laws`], deciding equality with `canon`.
pub fn check_free_smc_laws_with(
    sig: &Signature,
    bounds: SmcBounds,
    canon: &dyn Fn(&Signature, &Diagram) -> String,
) -> LawReport {
    LawSweep::new(sig, bounds, canon).run()
}

struct LawSweep<'a> {
    sig: &'a Signature,
    bounds: SmcBounds,
    canon: &'a dyn Fn(&Signature, &Diagram) -> String,
    words: Vec<Word>,
    pool: Vec<Diagram>,
    report: LawReport,
}

impl<'a> LawSweep<'a> {
    fn new(sig: &'a Signature, bounds: SmcBounds, canon: &'a dyn Fn(&Signature, &Diagram) -> String) -> Self {
        let words = sig.words(bounds.max_word);
        let mut pool = Vec::new();
        for u in &words {
            for v in &words {
                pool.extend(enumerate_homs(sig, u, v, bounds.max_boxes).into_iter().map(|c| c.diagram));
            }
        }
        LawSweep { sig, bounds, canon, words, pool, report: LawReport::new() }
    }

    fn expect(&mut self, law: Law, what: &str, parts: &[&Diagram], lhs: &Diagram, rhs: &Diagram) {
        let equal = lhs.dom == rhs.dom && lhs.cod == rhs.cod && (self.canon)(self.sig, lhs) == (self.canon)(self.sig, rhs);
        if !equal {
            let witnesses = parts.iter().map(|d| canonical_form(self.sig, d)).collect();
            let detail = format!("{what}: {} vs {}", (self.canon)(self.sig, lhs), (self.canon)(self.sig, rhs));
            self.report.push(law, witnesses, detail);
        }
    }

    fn fits(&self, words: &[usize], boxes: usize) -> bool {
        boxes <= self.bounds.max_boxes && words.iter().all(|&l| l <= self.bounds.max_word)
    }

    fn then(a: &Diagram, b: &Diagram) -> Diagram {
        a.compose(b).expect("composable by selection")
    }

    fn run(mut self) -> LawReport {
        let pool = std::mem::take(&mut self.pool);
        let words = self.words.clone();

        for f in &pool {
            let l = Self::then(&Diagram::identity(&f.dom), f);
            let r = Self::then(f, &Diagram::identity(&f.cod));
            self.expect(Law::LeftIdentity, "id ; f = f", &[f], &l, f);
            self.expect(Law::RightIdentity, "f ; id = f", &[f], &r, f);
            let unit = Diagram::identity(&Word::unit());
            self.expect(Law::Strictness, "1 ⊗ f = f", &[f], &unit.tensor(f), f);
            self.expect(Law::Strictness, "f ⊗ 1 = f", &[f], &f.tensor(&unit), f);
        }

        let pairs: Vec<(&Diagram, &Diagram)> = pool
            .iter()
            .flat_map(|f| pool.iter().map(move |g| (f, g)))
            .filter(|(f, g)| f.cod == g.dom && f.num_boxes() + g.num_boxes() <= self.bounds.max_boxes)
            .collect();

        for &(f, g) in &pairs {
            for h in pool.iter().filter(|h| h.dom == g.cod) {
                if f.num_boxes() + g.num_boxes() + h.num_boxes() > self.bounds.max_boxes {
                    continue;
                }
                let l = Self::then(&Self::then(f, g), h);
                let r = Self::then(f, &Self::then(g, h));
                self.expect(Law::Associativity, "(f ; g) ; h = f ; (g ; h)", &[f, g, h], &l, &r);
            }
        }

        for f in &pool {
            for g in &pool {
                for h in &pool {
                    let boxes = f.num_boxes() + g.num_boxes() + h.num_boxes();
                    let dl = f.dom.len() + g.dom.len() + h.dom.len();
                    let cl = f.cod.len() + g.cod.len() + h.cod.len();
                    if !self.fits(&[dl, cl], boxes) {
                        continue;
                    }
                    let l = f.tensor(g).tensor(h);
                    let r = f.tensor(&g.tensor(h));
                    self.expect(Law::Strictness, "(f ⊗ g) ⊗ h = f ⊗ (g ⊗ h)", &[f, g, h], &l, &r);
                }
            }
        }

        for &(f, h) in &pairs {
            for &(g, k) in &pairs {
                let boxes = f.num_boxes() + g.num_boxes() + h.num_boxes() + k.num_boxes();
                let lens = [f.dom.len() + g.dom.len(), f.cod.len() + g.cod.len(), h.cod.len() + k.cod.len()];
                if !self.fits(&lens, boxes) {
                    continue;
                }
                let l = Self::then(&f.tensor(g), &h.tensor(k));
                let r = Self::then(f, h).tensor(&Self::then(g, k));
                self.expect(Law::Interchange, "(f ⊗ g) ; (h ⊗ k) = (f ; h) ⊗ (g ; k)", &[f, g, h, k], &l, &r);
            }
        }

        for f in &pool {
            for w in &words {
                if !self.fits(&[f.dom.len() + w.len(), f.cod.len() + w.len()], f.num_boxes()) {
                    continue;
                }
                let id = Diagram::identity(w);
                let l = Self::then(&f.tensor(&id), &Diagram::symmetry(&f.cod, w));
                let r = Self::then(&Diagram::symmetry(&f.dom, w), &id.tensor(f));
                self.expect(Law::Naturality, "(f ⊗ id) ; σ = σ ; (id ⊗ f)", &[f, &id], &l, &r);
            }
        }

        for u in &words {
            for v in &words {
                if u.len() + v.len() > self.bounds.max_word {
                    continue;
                }
                let s = Diagram::symmetry(u, v);
                let l = Self::then(&s, &Diagram::symmetry(v, u));
                self.expect(Law::Symmetry, "σ_{u,v} ; σ_{v,u} = id", &[&s], &l, &Diagram::identity(&u.concat(v)));
                for w in &words {
                    if u.len() + v.len() + w.len() > self.bounds.max_word {
                        continue;
                    }
                    let l = Diagram::symmetry(u, &v.concat(w));
                    let r = Self::then(
                        &Diagram::symmetry(u, v).tensor(&Diagram::identity(w)),
                        &Diagram::identity(v).tensor(&Diagram::symmetry(u, w)),
                    );
                    self.expect(Law::Hexagon, "σ_{u,v·w} = (σ_{u,v} ⊗ id) ; (id ⊗ σ_{u,w})", &[&l], &l, &r);
                    let l = Diagram::symmetry(&u.concat(v), w);
                    let r = Self::then(
                        &Diagram::identity(u).tensor(&Diagram::symmetry(v, w)),
                        &Diagram::symmetry(u, w).tensor(&Diagram::identity(v)),
                    );
                    self.expect(Law::Hexagon, "σ_{u·v,w} = (id ⊗ σ_{v,w}) ; (σ_{u,w} ⊗ id)", &[&l], &l, &r);
                }
            }
        }
        self.report
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xm() -> Signature {
        Signature::new(&["x"], &[("m", "x.x", "x")]).unwrap()
    }

    fn w(sig: &Signature, s: &str) -> Word {
        sig.parse_word(s).unwrap()
    }

    #[test]
    fn signature_errors() {
        assert_eq!(
            Signature::new(&["x"], &[("m", "x.y", "x")]),
            Err(SmcError::UnknownObjectToken("y".into()))
        );
        assert_eq!(
            Signature::new(&["x"], &[("m", "x", "x"), ("m", "x", "1")]),
            Err(SmcError::DuplicateGenerator("m".into()))
        );
    }

    #[test]
    fn atomic_shapes() {
        let sig = xm();
        let m = Diagram::generator(&sig, "m").unwrap();
        assert_eq!((m.dom().len(), m.cod().len(), m.num_boxes()), (2, 1, 1));
        assert_eq!(Diagram::generator(&sig, "q"), Err(SmcError::UnknownGenerator("q".into())));
        let x = w(&sig, "x");
        let s = Diagram::symmetry(&x, &x);
        assert!(diagrams_equal(&sig, &s.compose(&s).unwrap(), &Diagram::identity(&w(&sig, "x.x"))));
        assert!(!diagrams_equal(&sig, &s, &Diagram::identity(&w(&sig, "x.x"))));
        assert_eq!(Diagram::identity(&Word::unit()).num_boxes(), 0);
    }

    #[test]
    fn left_and_right_trees_differ() {
        let sig = xm();
        let m = Diagram::generator(&sig, "m").unwrap();
        let id = Diagram::identity(&w(&sig, "x"));
        let left = m.tensor(&id).compose(&m).unwrap();
        let right = id.tensor(&m).compose(&m).unwrap();
        assert!(!diagrams_equal(&sig, &left, &right));
        let homs = enumerate_homs(&sig, &w(&sig, "x.x.x"), &w(&sig, "x"), 2);
        assert!(homs.iter().any(|c| c.form == canonical_form(&sig, &left)));
        assert!(homs.iter().any(|c| c.form == canonical_form(&sig, &right)));
    }

    #[test]
    fn sliding() {
        let sig = xm();
        let m = Diagram::generator(&sig, "m").unwrap();
        let (xx, x) = (Diagram::identity(&w(&sig, "x.x")), Diagram::identity(&w(&sig, "x")));
        let slid = m.tensor(&xx).compose(&x.tensor(&m)).unwrap();
        assert!(diagrams_equal(&sig, &slid, &m.tensor(&m)));
    }

    #[test]
    fn compose_checks_words() {
        let sig = xm();
        let m = Diagram::generator(&sig, "m").unwrap();
        assert!(matches!(m.compose(&m.clone()), Err(SmcError::WordMismatch { .. })));
    }

    #[test]
    fn permutation_counts() {
        let sig = Signature::new::<&str>(&["x"], &[]).unwrap();
        let x = |n: usize| Word(vec![0; n]);
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_homs(&sig, &x(n), &x(n), 0).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 24, 120]);
        assert!(enumerate_homs(&sig, &x(2), &x(3), 3).is_empty());
    }

    #[test]
    fn validation_rejects_cycles_and_reuse() {
        let sig = Signature::new(&["x"], &[("f", "x", "x")]).unwrap();
        let x = w(&sig, "x");
        let cyclic = Diagram::from_parts(
            &sig,
            x.clone(),
            x.clone(),
            vec![0, 0],
            vec![vec![OutPort::Box(1, 0)], vec![OutPort::Box(0, 0)]],
            vec![OutPort::Dom(0)],
        );
        assert!(matches!(cyclic, Err(SmcError::InvalidWiring(_))));
        let reused = Diagram::from_parts(&sig, x.clone(), x, vec![0], vec![vec![OutPort::Dom(0)]], vec![OutPort::Dom(0)]);
        assert!(matches!(reused, Err(SmcError::InvalidWiring(_))));
    }

    #[test]
    fn closed_components_are_order_independent() {
        let sig = Signature::new(&["x"], &[("u", "1", "x"), ("c", "x", "1")]).unwrap();
        let u = Diagram::generator(&sig, "u").unwrap();
        let c = Diagram::generator(&sig, "c").unwrap();
        let scalar = u.compose(&c).unwrap();
        let id = Diagram::identity(&w(&sig, "x"));
        assert!(diagrams_equal(&sig, &scalar.tensor(&id), &id.tensor(&scalar)));
        let two = scalar.tensor(&scalar);
        assert_eq!(canonical_form(&sig, &two), canonical_form(&sig, &canonicalize(&sig, &two)));
    }

    #[test]
    fn laws_hold_on_small_bounds() {
        let sig = xm();
        let report = check_free_smc_laws(&sig, SmcBounds { max_boxes: 1, max_word: 3 });
        assert!(report.is_empty(), "{report}");
    }
}
