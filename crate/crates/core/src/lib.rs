//! Exact computations with the U₅ operator on 5-adic automorphic forms for
//! the definite quaternion algebra over Q ramified at {2, ∞}.
//!
//! Everything is carried out over Q(i), embedded into Q₅ through `i ↦ √−1 ≡ 2 (mod 5)`:
//! closed-form matrix entries of U₅ on each U₂-eigencomponent, fraction-free
//! ranks and determinants, classical dimension formulas, and the ghost series
//! whose zeros predict where the leading minors drop rank.

/// Version tag used to key cached results.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod classical;
pub mod error;
pub mod exactnum;
pub mod ghost;
pub mod heckeop;
pub mod linalg;
pub mod matrix;
pub mod oracle;
pub mod tables;

pub use classical::{d_iw, d_unr, d_unr_oracle, DimensionProfile, ORACLE_WEIGHT_CAP};
pub use error::{Error, Result};
pub use exactnum::{embed_mod, hensel_sqrt_minus_one, val5, GaussianInteger, GaussianRational, PadicApprox, Valuation};
pub use ghost::{
    check_corollary, check_proof_identity, check_theorem, compare_conjecture, ghost_coeff_valuation, ghost_exponent,
    ghost_newton_polygon, wk_val_diff, ConjectureReport, CorollaryReport, GhostCoefficient, GhostSeries,
    ProofIdentityReport, TheoremReport,
};
pub use heckeop::{
    antidiagonal_operator, block_minor, classical_block, entry_closed_form, entry_series_oracle, u2_eigenvalue,
    MinorRecord, WeightComponent,
};
pub use linalg::{char_poly, corank, determinant, newton_polygon, rank, stabilized_char_valuations, CharPoly, NewtonPolygon};
pub use matrix::BlockMatrix;
pub use tables::{column_cells, reference_corank, sweep, GridCell};
