use std::fmt;

use crate::scalar::Scalar;

/// Elliptic / parabolic / hyperbolic selector, `tau` in {-1, 0, 1}.
///
/// The same three values label the invariant pairings of cycles, the
/// canonical one-parameter subgroups `H_tau` and the geometry of the
/// extended half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EphClass {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// Signature of an invariant pairing; identical to the geometry selector.
pub type PairingSignature = EphClass;

impl EphClass {
    pub const ALL: [EphClass; 3] = [EphClass::Elliptic, EphClass::Parabolic, EphClass::Hyperbolic];

    pub fn tau(self) -> i8 {
        match self {
            EphClass::Elliptic => -1,
            EphClass::Parabolic => 0,
            EphClass::Hyperbolic => 1,
        }
    }

    /// `tau` as a scalar.
    pub fn value<T: Scalar>(self) -> T {
        T::lit(f64::from(self.tau()))
    }

    pub fn from_tau(tau: i8) -> Option<Self> {
        match tau {
            -1 => Some(EphClass::Elliptic),
            0 => Some(EphClass::Parabolic),
            1 => Some(EphClass::Hyperbolic),
            _ => None,
        }
    }

    /// Class from the sign of a discriminant-like quantity: negative is
    /// elliptic, zero parabolic, positive hyperbolic.
    pub fn from_sign(sign: i8) -> Self {
        match sign.signum() {
            -1 => EphClass::Elliptic,
            0 => EphClass::Parabolic,
            _ => EphClass::Hyperbolic,
        }
    }

    /// Number of real fixed points of a non-identity map of this class.
    pub fn fixed_point_count(self) -> usize {
        match self {
            EphClass::Elliptic => 0,
            EphClass::Parabolic => 1,
            EphClass::Hyperbolic => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EphClass::Elliptic => "elliptic",
            EphClass::Parabolic => "parabolic",
            EphClass::Hyperbolic => "hyperbolic",
        }
    }
}

impl fmt::Display for EphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
