//! Exact computation of all-terminal reliability and split reliability
//! polynomials, gadget edge substitution, and constructive location of
//! reliability roots of simple graphs in the unit disk.
//!
//! The crate is organized around a handful of engines that check each other:
//!
//! * [`graphs`] — multigraphs, two-terminal gadgets, and edge substitution.
//! * [`polyalg`] — exact integer polynomials plus dyadic fixed-point
//!   evaluation with certified rounding bounds.
//! * [`relcore`] — reliability engines: definitional brute force,
//!   deletion–contraction, complete-graph recursions with a persistent
//!   cache, and the gadget composition formula.
//! * [`asympt`] — diagnostics for the large-`n` behaviour of `Rel(K_n)`
//!   and `sRel(K_n)` inside the unit disk.
//! * [`rootfind`] — multiprecision simultaneous root finding, Sturm-based
//!   real root isolation, and zero-distribution summaries.
//! * [`density`] — certified placement of a reliability root of a concrete
//!   simple graph near any requested target in the unit disk.

pub mod asympt;
pub mod density;
pub mod error;
pub mod graphs;
pub mod polyalg;
pub mod relcore;
pub mod rootfind;

pub use error::{Error, Result};
pub use graphs::{Multigraph, TwoTerminalGraph};
pub use polyalg::{ComplexDyadic, Dyadic, IntPolynomial};
