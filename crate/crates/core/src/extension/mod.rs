//! From intervals to points of the extended half-plane.

mod closed_form;
mod common;
mod discriminant;
mod family;
mod interval;
mod procedure;
mod subgroup;

pub use closed_form::{extension_point_elliptic, extension_point_hyperbolic, extension_point_parabolic};
pub use common::{common_point_forms, common_points};
pub use discriminant::{discriminant_classify, discriminant_value, fixed_point_quadratic};
pub use family::{
    cosine_to_real_line, invariant_interval_family, orthogonal_form_through, real_line_fraction, t_parameter,
};
pub use interval::{AlignedTriple, ExtensionPoint, Interval};
pub use procedure::{extend_triple, Extension};
pub use subgroup::{canonical_subgroup, subgroup_from_map, subgroup_from_triple, OneParamSubgroup};
