//! Dynkin-diagram criteria for the vanishing of twisted Witt groups of
//! split projective homogeneous varieties `X_theta = G/P_theta`.
//!
//! The crate decides, from the diagram, the parabolic subset `theta`, and
//! the class of a line bundle `L` modulo 2, whether `W^i(X_theta, L) = 0` for
//! every `i` is guaranteed. The main entry point is [`vanishing::classify`].
//!
//! ```
//! use dynkin_witt::dynkin::{DynkinDiagram, Letter, Vertex, VertexSet};
//! use dynkin_witt::vanishing::{classify_decoration, Rule};
//!
//! let d4 = DynkinDiagram::simple(Letter::D, 4).unwrap();
//! let legs: VertexSet = [1, 4].into_iter().map(Vertex::new).collect();
//! let lambda = VertexSet::singleton(Vertex::new(3));
//! let verdict = classify_decoration(&d4, legs, lambda).unwrap();
//! assert_eq!(verdict.rule(), Some(Rule::MainTheorem { witness: Vertex::new(3) }));
//! ```

pub mod cli;
pub mod dynkin;
pub mod enumeration;
pub mod error;
pub mod picard;
pub mod vanishing;
pub mod weights;

pub use error::{Error, Result};
