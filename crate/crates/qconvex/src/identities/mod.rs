//! Named split polynomials, their exact closed-form identities, and the
//! integer-grid checks tying them back to the `l_mod` operator.

mod catalog;
mod grids;

pub use catalog::{
    build_named_poly, verify_all, verify_identity, IdentityCheck, NamedPoly, IDENTITY_IDS,
    POLY_NAMES,
};
pub use grids::{
    factorization_sides, grid_verify_factorization, grid_verify_sign_claims, FactorizationGrid,
    GridPoint, GridReport,
};
