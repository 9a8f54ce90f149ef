//! Exact-arithmetic toolkit for chromatic polynomials of small graphs.
//!
//! The crate computes chromatic polynomials exactly (deletion-contraction
//! with block decomposition, series reduction, and canonical-form
//! memoization), provides closed forms for theta graphs, star-subdivided
//! `K4`, subdivided `K_{3,t}`, and cactus graphs, certifies real-root
//! locations with Sturm sequences, and exhaustively verifies Tomescu's
//! conjectured bound `(x)_k (x-1)^(n-k)` over all connected 4-chromatic
//! graphs of small order. Every verdict is decided in exact rational
//! arithmetic.

pub mod bounds;
pub mod chroma;
pub mod conjecture;
pub mod families;
pub mod graph;
pub mod poly;

pub use bounds::{BoundReport, BoundsError, RootCertificate};
pub use chroma::{chromatic_polynomial, count_colorings, ChromaticEngine};
pub use conjecture::{ConjectureError, ConjectureReport, GapVerdict};
pub use families::{CStarSpec, CactusSpec, FamilyError, K3tSpec, Sk4Spec, ThetaSpec};
pub use graph::{BlockDecomposition, Graph, GraphError};
pub use poly::roots::{largest_real_root, positive_beyond, Positivity, RootSearch, SturmChain};
pub use poly::{Poly, PolyError, Rational, RootInterval};
