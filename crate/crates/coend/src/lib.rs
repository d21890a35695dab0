//! Exact construction and verification of the self-dual weak Hopf algebra
//! attached to the quantum sl2 spherical category at a primitive 4r-th root
//! of unity.
//!
//! The crate is organized along the pipeline:
//!
//! * [`cyclotomic`] - exact arithmetic in Q(zeta_4r) and exact linear algebra;
//! * [`skein`] - Temperley-Lieb diagrams, Jones-Wenzl projectors, Kauffman
//!   bracket, and closed-network evaluation (the brute-force oracle);
//! * [`recoupling`] - admissibility, quantum dimensions, theta coefficients,
//!   quantum 6j symbols, recoupling and pentagon checks;
//! * [`wha`] - the weak Hopf algebra H at level r in the double-tree basis,
//!   with every structure tensor exact, plus axiom and self-duality suites;
//! * [`repcat`] - comodule, action, truncation and c-map data per simple
//!   color, with exact consistency checks;
//! * [`cli`] - command dispatch, the diagram-expression DSL, and JSON export.

pub mod cli;
pub mod cyclotomic;
pub mod recoupling;
pub mod repcat;
pub mod skein;
pub mod wha;
