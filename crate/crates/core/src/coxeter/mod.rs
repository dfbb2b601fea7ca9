//! Coxeter diagrams, the geometric representation over [`crate::exactreal`],
//! exact word reduction, lengths and descent sets.

mod cayley;
mod diagram;
mod group;

pub use cayley::CayleyGraph;
pub use diagram::{Bond, CoxeterDiagram, DiagramError, FiniteType};
pub use group::{root_sign, CoxeterGroup, GroupElement, Matrix, RootSign};
pub(crate) use group::column_root_sign;
