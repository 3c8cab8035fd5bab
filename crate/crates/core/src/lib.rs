//! Combinatorial simple 3-polytopes and their toric invariants: belt
//! structure, bigraded moment-angle cohomology, truncation surgeries,
//! fullerene enumeration, and quasitoric presentations.

pub mod belts;
pub mod betti;
pub mod canonical;
pub mod dga;
pub mod error;
pub mod generator;
pub mod homology;
pub mod io;
pub mod nerve;
pub mod polytope;
pub mod quasitoric;
pub mod transform;

pub use belts::{
    classify, facet_surrounded_by_belt, five_belt_structure, has_4belt_not_surrounding_quad,
    is_flag, k_belts, zigzag_cycles, Belt, ClassKind, Classification, FiveBeltStructure,
};
pub use betti::{
    betti_bigraded, betti_closed_forms, betti_full_sweep, disjoint_pair_count, poincare_check,
    poly_identity_check, BettiMode, BettiTable,
};
pub use canonical::{
    canonical_code, equivalent, equivalent_either_orientation, is_combinatorially_chiral,
    CanonicalCode, OrientationClass,
};
pub use dga::{h3_squared_trivial, CochainAlgebra, DgaElement};
pub use error::{BettiError, Obstruction, PolytopeError, QuasitoricError, TransformError};
pub use generator::{
    applicable_truncations, generate, icosahedral_word, GenerationCatalog, IterOp,
};
pub use homology::{reduced_homology, HomologySummand};
pub use io::{parse_json, parse_planar_code, to_dot, to_json, to_planar_code};
pub use nerve::{dual_sphere, nerve, polygon_nerve, NerveComplex};
pub use polytope::{
    barrel, c60, cube, d_k, dodecahedron, drum, prism, simplex, validate_facets, PVector,
    Polytope, ValidationReport,
};
pub use quasitoric::{
    char_class_presentation, char_matrix, cohomology_ranks, four_color, parse_class_presentation,
    presentation, CharMatrix, RingPresentation,
};
pub use transform::{
    chamfer, leapfrog, op_commute_check, sk_truncate, straighten, Straightened, TruncationSpec,
};
