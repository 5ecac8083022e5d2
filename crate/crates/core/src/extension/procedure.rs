use crate::cycle::{isotropic_to_point, Cycle, IsotropicPoint};
use crate::eph::EphClass;
use crate::error::{degenerate, Result};
use crate::extension::discriminant::discriminant_classify;
use crate::extension::interval::{AlignedTriple, ExtensionPoint};
use crate::extension::subgroup::{subgroup_from_triple, OneParamSubgroup};
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// Outcome of extending an aligned triple to a point of the half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extension<T> {
    pub tau: EphClass,
    pub discriminant: T,
    pub subgroup: OneParamSubgroup<T>,
    pub t2: T,
    pub t3: T,
    /// τ-isotropic form fixed by the subgroup, normalised with `k = 1`
    /// whenever `k ≠ 0`.
    pub form: Cycle<T>,
    /// `None` when the form sits at infinity (`k = 0`).
    pub point: Option<ExtensionPoint<T>>,
}

/// Runs the extension procedure on an aligned triple:
/// recover the subgroup through the triple, confirm its class with the
/// discriminant, conjugate it to `H_τ` and pull back the form `P̂` fixed
/// by `H_τ`.
///
/// Triples generating the same subgroup give the same form. The point
/// is reported as `(u, |v|)`; for hyperbolic subgroups the pulled back
/// form may sit below the axis.
pub fn extend_triple<T: Scalar>(t: &AlignedTriple<T>, tol: Tolerance<T>) -> Result<Extension<T>> {
    let (subgroup, t2, t3) = subgroup_from_triple(t, tol)?;
    let (discriminant, tau) = discriminant_classify(t, tol.eps_class);
    if tau != subgroup.tau() {
        return Err(degenerate(format!("discriminant says {tau}, the triple map is {}", subgroup.tau())));
    }
    let form = subgroup.invariant_form().normalized(tol.eps);
    let point = match isotropic_to_point(&form, tau, tol.eps.sqrt())? {
        IsotropicPoint::Finite { u, v } => Some(ExtensionPoint::new(u, v.abs(), tau)?),
        IsotropicPoint::AtInfinity => None,
    };
    Ok(Extension { tau, discriminant, subgroup, t2, t3, form, point })
}
