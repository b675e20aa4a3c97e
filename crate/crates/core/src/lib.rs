//! Good semigroups of `N^I`, their ideals and duality, and value semigroups
//! of algebroid curves computed by exact linear algebra.

pub mod curve;
pub mod duality;
pub mod ideal;
pub mod io;
pub mod lattice;
pub mod semigroup;

pub use curve::{
    AlgebroidCurve, BranchVector, CurveError, FractionalIdealPresentation, Poly, TruncatedModule,
};
pub use duality::{
    canonical_ideal, canonical_ideal_on, classify_tower, dual, enumerate_intermediate_good,
    is_canonical_ideal, is_self_dual, is_stable, is_symmetric, normalized_dual,
    self_duality_conditions, theorem26_semigroup_condition, ClassificationResult, DualityError,
    FailedCondition, SelfDualityConditions, TowerKind, DEFAULT_TOWER_BUDGET,
};
pub use ideal::{
    decompose, localize, maximal_ideals, DecompositionResult, IdealError, MaximalIdeal,
};
pub use io::{render_grid, CurveFile, FormatError, RenderFormat, SemigroupFile};
pub use lattice::{
    AxiomReport, Box, E2Witness, ExtInt, ExtPoint, IdealRep, LatticeError, LatticePoint,
};
pub use semigroup::{numerical_semigroups_up_to, GoodSemigroup, SemigroupError};
