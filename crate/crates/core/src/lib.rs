//! Recognition of unipolar and generalised split graphs in `O(n^2)` time,
//! with certificates, and the optimization problems a certificate makes easy.
//!
//! A graph is *unipolar* when its vertices split into a central clique and a
//! disjoint union of side cliques with no edges between different side
//! cliques. It is a *generalised split graph* when it or its complement is
//! unipolar.
//!
//! ```
//! use gsplit::{recognise, check_representation, Graph};
//!
//! let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
//! let rep = recognise(&c4).expect("C4 is unipolar");
//! assert!(check_representation(&c4, &rep));
//! ```

pub mod crosscheck;
pub mod error;
pub mod generators;
pub mod graph;
pub mod optimizers;
pub mod oracle;
pub mod recognition;
pub mod twosat;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use recognition::{
    check_representation, recognise, recognise_gsg, recognise_with_stats, GsgCertificate,
    GsgVerdict, Representation,
};
