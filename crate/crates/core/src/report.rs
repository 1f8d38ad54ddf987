//! Law reports: the runtime replacement for proof terms.

use std::fmt;

use serde::Serialize;

/// The equation family a violation falsifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    LeftIdentity,
    RightIdentity,
    Associativity,
    FunctorIdentity,
    FunctorComposition,
    Naturality,
    Bifunctor,
    Pentagon,
    Triangle,
    Hexagon,
    Symmetry,
    /// A cone (or cocone) with no mediating morphism, or a missing unique morphism.
    UniversalExistence,
    /// A cone (or cocone) with more than one mediating morphism.
    UniversalUniqueness,
    /// `(f ⊗ g) ; (h ⊗ k) = (f ; h) ⊗ (g ; k)` checked directly.
    Interchange,
    /// A designated inverse that does not compose to identities.
    Inverse,
    /// Strict structure whose structure morphisms or object equations fail.
    Strictness,
    /// A structure morphism with the wrong source or target.
    Typing,
}

impl Law {
    pub fn as_str(self) -> &'static str {
        match self {
            Law::LeftIdentity => "left-identity",
            Law::RightIdentity => "right-identity",
            Law::Associativity => "associativity",
            Law::FunctorIdentity => "functor-identity",
            Law::FunctorComposition => "functor-composition",
            Law::Naturality => "naturality",
            Law::Bifunctor => "bifunctor",
            Law::Pentagon => "pentagon",
            Law::Triangle => "triangle",
            Law::Hexagon => "hexagon",
            Law::Symmetry => "symmetry",
            Law::UniversalExistence => "universal-existence",
            Law::UniversalUniqueness => "universal-uniqueness",
            Law::Interchange => "interchange",
            Law::Inverse => "inverse",
            Law::Strictness => "strictness",
            Law::Typing => "typing",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One falsified law instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: Law,
    /// Object and morphism identifiers involved in the instance.
    pub witnesses: Vec<String>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} [{}]", self.law, self.detail, self.witnesses.join(", "))
    }
}

/// The outcome of a law sweep. Empty means every checked instance holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub violations: Vec<Violation>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn push(&mut self, law: Law, witnesses: Vec<String>, detail: impl Into<String>) {
        self.violations.push(Violation { law, witnesses, detail: detail.into() });
    }

    pub fn merge(&mut self, other: LawReport) {
        self.violations.extend(other.violations);
    }

    /// Number of violations of the given law.
    pub fn count(&self, law: Law) -> usize {
        self.violations.iter().filter(|v| v.law == law).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter()
    }

    /// Re-tag every violation with `law`, keeping witnesses and details.
    pub fn relabel(mut self, law: Law) -> Self {
        for v in &mut self.violations {
            v.detail = format!("{} ({})", v.detail, v.law);
            v.law = law;
        }
        self
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
