//! Exact-arithmetic engine for non-compact hyperbolic Coxeter polytopes with
//! `n+3` facets and one non-simple vertex.
//!
//! The crate is organised around the objects of the classification method:
//!
//! * [`exact`] — the ring of rational linear combinations of square roots of
//!   squarefree integers, with certified sign computation. Every Gram entry
//!   and every dotted edge weight lives here; nothing in the crate ever
//!   decides a sign from floating point.
//! * [`diagram`] — Coxeter diagrams: weighted graphs with finite-order,
//!   infinite and dotted edges, a line-oriented file format, subdiagram
//!   extraction and canonical forms for isomorphism-level deduplication.
//! * [`gram`] — Gram matrices of diagrams and their exact inertia via LDLᵀ
//!   with symmetric pivoting.
//! * [`classify`] — elliptic / parabolic / Lannér / quasi-Lannér
//!   classification, defined through signatures alone, plus enumeration of
//!   connected diagrams by class.
//! * [`gale`] — standard two-dimensional Gale diagrams of polytopes with
//!   `n+3` facets: enumeration, face tests and the subdiagram constraints
//!   they impose on candidate polytopes.
//! * [`poly`] — small polynomial toolkit (one or two unknowns) over the
//!   radical ring: fraction-free determinants, resultants, real-root
//!   isolation and in-ring square roots.
//! * [`search`] — the five-step pipeline from Gale diagrams to certified
//!   Coxeter polytopes, including the exact solve for unknown dotted weights.
//! * [`catalog`] — the bundled machine-readable catalog of known polytopes
//!   (dimensions 4–10) and its batch verification.
//! * [`render`] — Graphviz DOT and TikZ output.

pub mod canon;
pub mod catalog;
mod catalog_data;
pub mod classify;
pub mod diagram;
pub mod exact;
pub mod gale;
pub mod gram;
pub mod poly;
pub mod render;
pub mod search;

pub use classify::DiagramClass;
pub use diagram::{CoxeterDiagram, EdgeLabel};
pub use exact::{RadicalNumber, Sign, SignCertificate};
pub use gale::GaleDiagram;
pub use gram::{GramMatrix, InertiaTriple};
// re-exported once search lands: pub use search::VerificationReport;
