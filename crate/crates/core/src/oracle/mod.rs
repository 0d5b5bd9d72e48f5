//! Brute-force ground truth over small finite fields.
//!
//! Everything here counts by explicit enumeration: `GL_n(F_q)` with its
//! conjugacy classes and the transpose-inverse involution, solution counts
//! of the surface-group equations as class-function convolutions, and
//! Frobenius-plus-inversion orbits on multiplicative groups.  The closed
//! formulas elsewhere in the crate are validated against these counts.

mod field;
mod group;
mod orbits;

pub use field::FiniteField;
pub use group::{correspondence_check, eta_counts, rep_count, EtaKind, GroupTable};
pub use orbits::{
    gamma_orbit_oracle, mu_m_action, orbit_prop_oracle, unit_group_action, FInvAction,
    GammaOrbitCounts,
};

/// Element-level enumeration budget: `|GL_n(F_q)|` at most this.
pub const GROUP_BUDGET: u64 = 20_000;
/// Field enumeration budget for the orbit oracle.
pub const FIELD_BUDGET: u64 = 1_000_000;
