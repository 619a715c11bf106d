//! Deciding L-space knots from genus-1 doubly-pointed Heegaard diagrams.
//!
//! The library models doubly-pointed genus-1 Heegaard diagrams exactly (PL
//! curves with rational vertices on the square torus), reduces them by
//! bigon elimination, decides the coherence criterion and the resulting
//! L-space verdict with an independent chain-shape cross-check, computes
//! Alexander polynomials for knots in the three-sphere, and classifies
//! 1-bridge braids in the solid torus together with their inclusions into
//! the three-sphere and lens spaces.

pub mod braid;
pub mod diagram;
pub mod floer;
pub mod io;
pub mod lattice;
pub mod render;

pub use braid::{
    berge_search, braid_equivalent, braid_validate, classify_inclusion, classify_type, geodesic,
    inclusion_diagram, mirror, slope_interval, solid_torus_fillings, BraidClass, BraidError,
    BridgeBraid, InclusionVerdict, SearchRow,
};
pub use diagram::{
    from_standard_form, CoherenceVerdict, DiagramError, GraphicSign, IntersectionPoint,
    OneOneDiagram,
};
pub use floer::{
    alexander_polynomial, chain_shape_check, chain_summand, lspace_verdict, ChainShape,
    ChainSummand, FloerError, LSpaceVerdict, LaurentPolynomial,
};
pub use lattice::{CyclicInterval, ProjectiveSlope, Rational};

// The search parallelizes over parameter triples; callers that cap the
// thread count need the same rayon the library was built with.
pub use rayon;
