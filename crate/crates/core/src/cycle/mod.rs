//! Matrix representation of cycles, the map 𝔦, invariant pairings and
//! the quadratic curves they describe.

mod curve;
mod form;
mod pairing;

pub use curve::{curve_from_cycle, QuadraticCurve};
pub use form::{conjugate, i_map, linear_action_matrix, Cycle};
pub use pairing::{
    is_isotropic, is_orthogonal, isotropic_to_point, orthogonality_remark_form, p_hat, pairing, pairing_matrix,
    point_to_isotropic, q_tau, real_line, IsotropicPoint,
};
