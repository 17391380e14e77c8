//! Exact polynomials in `a, q, t` and the generating functions built from
//! permutation and path statistics.

mod catalan;
mod kd;
mod matching;
mod multipoly;
mod series;

pub use catalan::{
    a_poly, a_poly_via_paths, a_poly_via_paths_within, a_poly_within, cat_qt, cat_qt_within, gf_residuals,
    macmahon_by_division, macmahon_q_catalan, macmahon_q_catalan_within, q_binomial, q_integer, specialize, tristat_gf,
    tristat_gf_within, verify_gf_identity, verify_gf_identity_with, GfDenominator, Orientation, Specialization,
};
pub use kd::{kd_search, kd_search_within, KdAssignment, KdSearch, FULL_ENUMERATION_MAX_N};
pub use matching::hopcroft_karp;
pub use multipoly::{Monomial, MultiPoly};
pub use series::TruncatedSeries;
