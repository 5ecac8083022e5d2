//! Cycles, invariant pairings and the Poincaré extension of Möbius maps
//! of the real projective line.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! aliases below fix the usual double precision choice.

pub mod cycle;
pub mod eph;
pub mod error;
pub mod extension;
pub mod mat2;
pub mod projective;
pub mod scalar;
pub mod tolerance;

pub use cycle::{Cycle, QuadraticCurve};
pub use eph::{EphClass, PairingSignature};
pub use error::{GeometryError, Result};
pub use extension::{AlignedTriple, Extension, ExtensionPoint, Interval, OneParamSubgroup};
pub use mat2::{Mat2, Mat4};
pub use projective::{MoebiusMap, ProjPoint};
pub use scalar::Scalar;
pub use tolerance::Tolerance;

pub type ProjPoint64 = ProjPoint<f64>;
pub type MoebiusMap64 = MoebiusMap<f64>;
pub type Mat2x64 = Mat2<f64>;
pub type Cycle64 = Cycle<f64>;
pub type Interval64 = Interval<f64>;
pub type AlignedTriple64 = AlignedTriple<f64>;
pub type ExtensionPoint64 = ExtensionPoint<f64>;
pub type OneParamSubgroup64 = OneParamSubgroup<f64>;
pub type Tolerance64 = Tolerance<f64>;

pub type ProjPoint32 = ProjPoint<f32>;
pub type MoebiusMap32 = MoebiusMap<f32>;
pub type Cycle32 = Cycle<f32>;
