//! Exact computations around hypersurfaces in linear subspaces of
//! Grassmannians: Hilbert polynomials and functions of their homogeneous
//! coordinate rings, tangent-space dimensions of the corresponding Hilbert
//! scheme points, Schubert classes of the planes and of the hypersurface
//! cycles inside them, and the census of component families that a fixed
//! Hilbert polynomial cuts out.
//!
//! Everything runs over the rationals with [`num_rational::BigRational`]
//! entries, so results are exact rather than floating-point. Each closed
//! formula exposed here is paired with an independent linear-algebra route
//! (Macaulay-style degree slices, Pluecker coordinates, Littlewood-Richardson
//! expansion) and the [`verify`] module replays those comparisons on demand.
//!
//! Module map:
//!
//! * [`linalg`]: dense rational matrices, reduced echelon form, nullspaces.
//! * [`poly`]: multivariate homogeneous polynomials, graded ideals, Hilbert
//!   functions, syzygies, and the `Hom(I, S/I)` dimension oracle.
//! * [`grass`]: Pluecker embedding, shuffle relations, Schubert membership,
//!   and classification of maximal linear subspaces on a Grassmannian.
//! * [`schubert`]: partitions in a box, Pieri products, and
//!   Littlewood-Richardson multiplication of Schubert classes.
//! * [`components`]: the closed formulas (Hilbert polynomial of a degree-d
//!   hypersurface in an m-plane, flag-variety dimensions, projective-bundle
//!   dimensions) and the component census report.
//! * [`verify`]: scoped self-check suite cross-validating formulas against
//!   the oracles; the CLI's `verify` subcommand is a thin wrapper over it.

pub mod components;
pub mod error;
pub mod grass;
pub mod linalg;
pub mod poly;
pub mod schubert;
pub mod verify;

pub use components::{
    binomial_count, binomial_polynomial, bundle_total_dimension, component_report,
    component_report_from_json, flag_dimension, hilbert_poly, hypersurface_class, mplane_classes,
    planar_curve_poly, plane_grassmannian_base, ComponentDescriptor, ComponentReport,
    FlagVarietyDescriptor, HilbertPolynomial,
};
pub use error::{Error, Result};
pub use grass::{
    classify_plane, matrix_from_columns, matrix_to_columns, on_grassmannian, parametrize_plane,
    plane_from_plucker, plucker_embed, plucker_relations, schubert_membership,
    span_of_hypersurface, FlagBasis, GrassmannianContext, PlaneClassification, PlaneFamily,
    PlaneFamilySpec, PluckerPoint,
};
pub use linalg::{format_rat, parse_rat, rat, rat_int, Rat, RationalMatrix};
pub use poly::{
    hilbert_function, hom_dimension, hom_dimension_detailed, hypersurface_ideal, macaulay_matrix,
    monomials_of_degree, quotient_basis, syzygies_in_degree, GradedIdeal, HomDimension,
    HomogeneousPoly, HypersurfaceIdealSpec, Monomial, PolyTermJson, QuotientBasis,
};
pub use schubert::{lr_multiply, pieri, BoxContext, ClassSum, Partition, SchubertClass};
pub use verify::{run_all, run_criterion, CriterionResult, Scope};
