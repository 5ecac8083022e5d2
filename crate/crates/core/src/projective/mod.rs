//! Homogeneous arithmetic on the real projective line and the action of
//! SL(2, R) on it.

mod fixed;
mod iwasawa;
mod moebius;
mod point;
pub mod subgroups;
mod triple;

pub(crate) use fixed::eigenvector;
pub use fixed::{classify_trace, fixed_points, FixedPointReport};
pub use iwasawa::{iwasawa, Iwasawa};
pub use moebius::{apply_map, MoebiusMap};
pub use point::ProjPoint;
pub(crate) use triple::orientation_value;
pub use triple::{
    map_between_opposite_triples, map_between_triples, map_to_standard, orientation, reflection, Orientation,
    OrientedTriple,
};
