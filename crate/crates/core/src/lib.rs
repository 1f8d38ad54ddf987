//! A small, executable category theory kernel.
//!
//! Categories, functors, natural transformations, universal objects and
//! monoidal structure are represented as plain data. Their laws are not
//! carried as proofs; instead every structure comes with a checker that
//! evaluates each law instance exhaustively (finite data) or up to an explicit
//! bound (free categories, finite sets), producing a [`LawReport`] that lists
//! every falsified equation together with its witnesses.
//!
//! Composition is always written in diagrammatic order: `compose(f, g)` is
//! "first `f`, then `g`".

pub mod finset;
pub mod fixtures;
pub mod functor;
pub mod kernel;
pub mod monoidal;
pub mod quiver;
pub mod report;
pub mod smc;
pub mod universal;

pub use kernel::{CategoryView, FinCategory, FinCategoryBuilder, KernelError, MorId, MorPath, ObjId};
pub use report::{Law, LawReport, Violation};

/// Default cap on tabulated instances (functor counts, finite-set morphisms).
pub const DEFAULT_INSTANCE_BUDGET: usize = 10_000;
