//! Exact computations on curve germs in projective space and their tangent
//! varieties: jets, curve types, Wronskian lifts, stratum codimensions,
//! singularity lookup with normal forms, and Legendre surface germs.
//!
//! All arithmetic is over ℚ. Results that depend on a truncation order say so
//! in their type (`NotFiniteTypeUpTo`, `verified_order`, ...).

#![forbid(unsafe_code)]

pub mod classify;
pub mod curves;
pub mod jets;
pub mod linalg;
pub mod poly;
pub mod strata;
pub mod surfaces;
pub mod tangency;

pub use classify::{
    classify, normal_form, normal_form_curve, normal_form_curve_at, Classification, ClassifyError, NormalForm,
    SingularityClass,
};
pub use curves::{curve_type, flag_lift, normalize, projective_type, CurveGerm, FlagFrame, TypeSequence, TypeVerdict};
pub use jets::{ExtOrder, Jet1, Jet2, JetError, Var};
pub use strata::{
    codim_flag, codim_lagrangian, codim_plain, enumerate_generic, lagrangian_admissible, orders_to_type, CurveClass,
    LagrangianOrders,
};
pub use surfaces::{
    complete_to_legendre, ordinary_h, ordinary_point_class, saji_analysis, saji_verdict, slice_identity_residual,
    surface_tangent_map, transversal_slice, veronese_membership, Inconclusive, LegendreImmersion, LegendreSurfaceGerm,
    OrdinaryPointClass, PointKind, SajiReport, SajiVerdict, SurfaceError, SurfaceTangentMap, SymMatrix3,
    VeroneseStratum,
};
pub use tangency::{
    generating_family_tangent, grassmann_lift, jacobi_membership, morin_versal_opening, opening_check, tangent_map,
    MorinOpening, OpeningCertificate, TangentMapGerm,
};

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// `p/q` as a [`Rational`].
///
/// # Panics
/// Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
