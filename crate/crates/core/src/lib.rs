//! Exact reconstruction of a symmetric orthogonal-polynomial system.
//!
//! The weight `w_P(x) = |x+½|/√(1+x) + |x−½|/√(1−x)` on `(−1, 1)` has monic
//! orthogonal polynomials with `γ₁ = ½`, `γ_{3n+2} = ¼` and
//! `γ_{3n} + γ_{3n+1} = ½`. This crate computes the moments, Hankel
//! determinants, chain-sequence parameters and recurrence coefficients in
//! exact arithmetic over Q(√2), checks the cubic decomposition
//! `P_{3n} = Q_n ∘ T̂₃`, and cross-checks everything against a 192-bit
//! quadrature oracle.
//!
//! ```
//! use cubicmap::{gamma_direct, moment_table, Rat, WeightSpec};
//!
//! let table = moment_table(&WeightSpec::p(), 10).unwrap();
//! let gamma = gamma_direct(&table, 10).unwrap();
//! assert_eq!(gamma[9], "3187/12870".parse::<Rat>().unwrap());
//! ```

pub mod error;
pub mod mapping;
pub mod moments;
pub mod numeric;
pub mod polyalg;
pub mod qfield;
pub mod recurrence;

pub use error::{Error, Result};
pub use mapping::{
    build_q_from_gamma, verify_decomposition, weight_transfer_check, Identity, IdentityRow,
    MappingReport, TransferReport,
};
pub use moments::{
    apply_functional, inner_product, moment_p, moment_q, moment_table, MomentTable, WeightId,
    WeightSpec,
};
pub use numeric::{QuadResult, WeightChecks};
pub use polyalg::{cheb_t_monic, cheb_u_monic, recurrence_polys, Poly};
pub use qfield::{Rat, QS2};
pub use recurrence::{
    chain_params, det_fraction_free, gamma_direct, gamma_from_chain, hankel_det, hankel_dets,
    s_sequence, verify_conjecture, Check, ConjectureReport, LedgerRow, RecurrenceTable,
    RouteComparison, RouteRow,
};
