//! Bruhat lattices of γ-sortable elements of Coxeter groups.
//!
//! Given a Coxeter group `W` (finite or not) and a Coxeter element γ, the
//! γ-sortable elements of `W` form a finitary lattice `B_γ` under Bruhat
//! order. This crate builds that lattice exactly and verifies its structural
//! properties computationally:
//!
//! * exact arithmetic in the real cyclotomic field ℚ(2cos(π/N)), so that root
//!   positivity — and therefore every length and descent computation — is
//!   decided without floating point ([`exactreal`]);
//! * the geometric representation, word reduction and Cayley-graph
//!   generation for arbitrary Coxeter diagrams ([`coxeter`]);
//! * γ-sorting words, sortability and enumeration of sortable elements
//!   ([`sortable`]);
//! * the lattice `B_γ` itself with its SB-labeling, Möbius function,
//!   join-distributivity and antimatroid structure ([`lattice`]);
//! * Coxeter elements as acyclic diagram orientations, the forbidden-pattern
//!   scan for distributivity and replayable counterexamples ([`orient`]);
//! * deliberately naive reference implementations used to cross-check the
//!   fast paths ([`oracle`]).

pub mod coxeter;
pub mod exactreal;
pub mod lattice;
pub mod oracle;
pub mod orient;
pub mod poset;
mod poly;
pub mod sortable;

pub use coxeter::{Bond, CayleyGraph, CoxeterDiagram, CoxeterGroup, GroupElement};
pub use exactreal::{minimal_polynomial, FieldElement, RealCycloField};
pub use lattice::BruhatLattice;
pub use sortable::{AlphaSet, GammaContext, SortableElement, SortingWord};
