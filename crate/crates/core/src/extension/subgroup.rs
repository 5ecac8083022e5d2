use crate::cycle::{p_hat, Cycle};
use crate::eph::EphClass;
use crate::error::{degenerate, invalid, GeometryError, Result};
use crate::extension::interval::AlignedTriple;
use crate::mat2::{log_factor, Mat2};
use crate::projective::subgroups::{h_tau, h_tau_generator};
use crate::projective::{
    apply_map, classify_trace, eigenvector, fixed_points, map_between_triples, orientation_value, FixedPointReport,
    MoebiusMap, ProjPoint,
};
use crate::scalar::Scalar;
use crate::tolerance::Tolerance;

/// One-parameter subgroup `ψ(t) = exp(t X)` together with a conjugator
/// `g` bringing it to the canonical subgroup of its class:
/// `g ψ(t) g⁻¹ = H_τ(ω t)`.
///
/// The rate `ω` is signed. Conjugation inside SL(2, R) cannot reverse the
/// direction of a parabolic flow, and for elliptic flows the sign is fixed
/// by requiring `det g = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneParamSubgroup<T> {
    generator: Mat2<T>,
    conjugator: MoebiusMap<T>,
    tau: EphClass,
    rate: T,
}

impl<T: Scalar> OneParamSubgroup<T> {
    /// Traceless generator `X`.
    pub fn generator(&self) -> Mat2<T> {
        self.generator
    }

    pub fn conjugator(&self) -> MoebiusMap<T> {
        self.conjugator
    }

    pub fn tau(&self) -> EphClass {
        self.tau
    }

    /// `ω` with `g X g⁻¹ = ω [[0, τ], [1, 0]]`.
    pub fn rate(&self) -> T {
        self.rate
    }

    /// `ψ(t)`.
    pub fn at(&self, t: T) -> Mat2<T> {
        self.generator.scale(t).exp_traceless()
    }

    /// `g ψ(t) g⁻¹`, which equals `H_τ(ω t)`.
    pub fn normal_form(&self, t: T) -> Mat2<T> {
        let g = self.conjugator.matrix();
        g * self.at(t) * g.adjugate()
    }

    /// `H_τ(ω t)` computed directly.
    pub fn canonical_at(&self, t: T) -> Mat2<T> {
        h_tau(self.tau, self.rate * t)
    }

    /// The τ-isotropic form `g⁻¹ P̂ g` fixed by every `ψ(t)`.
    pub fn invariant_form(&self) -> Cycle<T> {
        p_hat(self.tau).conjugate_by(&self.conjugator.matrix().adjugate())
    }

    /// Time `t` with `ψ(t) from = to`.
    ///
    /// Solved after conjugation to `H_τ`: writing `g·from = [p : q]` and
    /// `g·to = [η₁ : η₂]`, the condition reads `C(s) A + S(s) B = 0` with
    /// `A = η₂p - η₁q`, `B = τη₂q - η₁p` and `(C, S)` the diagonal and
    /// lower entries of `H_τ(s)`. Elliptic solutions are unique modulo `π`
    /// and reported in `(-π/2, π/2]`.
    pub fn parameter_between(&self, from: &ProjPoint<T>, to: &ProjPoint<T>, eps: T) -> Result<T> {
        let g = self.conjugator.matrix();
        let [p, q] = g.apply_vec(from.unit());
        let [e1, e2] = g.apply_vec(to.unit());
        let a = e2 * p - e1 * q;
        let b = self.tau.value::<T>() * e2 * q - e1 * p;
        let size = p.hypot(q) * e1.hypot(e2);
        let unreachable = || GeometryError::Domain(format!("{to} is not on the orbit of {from} under the subgroup"));
        let s = match self.tau {
            EphClass::Elliptic => {
                let s = (-a).atan2(b);
                let half_pi = T::FRAC_PI_2();
                if s > half_pi {
                    s - T::PI()
                } else if s <= -half_pi {
                    s + T::PI()
                } else {
                    s
                }
            }
            EphClass::Parabolic => {
                if b.abs() <= eps * size {
                    if a.abs() <= eps * size {
                        return Ok(T::zero());
                    }
                    return Err(unreachable());
                }
                -a / b
            }
            EphClass::Hyperbolic => {
                if b.abs() <= eps * size {
                    if a.abs() <= eps * size {
                        return Ok(T::zero());
                    }
                    return Err(unreachable());
                }
                let r = -a / b;
                if r.abs() >= T::one() {
                    return Err(unreachable());
                }
                r.atanh()
            }
        };
        Ok(s / self.rate)
    }
}

/// Embeds `φ = ψ(1)` into its one-parameter subgroup.
///
/// The generator is the principal logarithm
/// `X = f(tr φ / 2) (φ - (tr φ / 2) I)` with `f(cosh r) = r / sinh r`,
/// continued to `r / sin r`; `φ` is taken in its canonical form with
/// non-negative trace. Maps within `eps_class` of the parabolic boundary
/// are classified parabolic but keep the exact logarithm, so `exp X = φ`
/// holds across the guard band.
///
/// The conjugator is assembled from `g⁻¹ = [w | X w / ω]`, which gives
/// `g X g⁻¹ = ω [[0, τ], [1, 0]]` as soon as `ω² τ = -det X`:
/// - hyperbolic: `w` is the sum of the eigenvectors of `X`, so the fixed
///   points go to `±1`, and `ω > 0`;
/// - parabolic: `w` is a basis vector not annihilated by `X`, the fixed
///   point goes to `0`;
/// - elliptic: `w = e₁`, the invariant point goes to `(0, 1)`.
///
/// In every case `w` is rescaled so that `det g = 1`.
pub fn subgroup_from_map<T: Scalar>(phi: &MoebiusMap<T>, tol: Tolerance<T>) -> Result<OneParamSubgroup<T>> {
    if phi.is_identity(tol.eps) {
        return Err(degenerate("the identity lies on every one-parameter subgroup"));
    }
    let m = phi.matrix();
    let h = m.trace() * T::half();
    let tau = classify_trace(m.trace(), tol.eps_class);
    let x = m.traceless_part().scale(log_factor(h));
    let cols = |w: [T; 2], omega: T| {
        let xw = x.apply_vec(w);
        Mat2::new(w[0], xw[0] / omega, w[1], xw[1] / omega)
    };
    let (w, omega) = match tau {
        EphClass::Hyperbolic => {
            let s = (-x.det()).sqrt();
            let plus = eigenvector(&x, s);
            let mut minus = eigenvector(&x, -s);
            if plus[0] * minus[1] - plus[1] * minus[0] > T::zero() {
                minus = [-minus[0], -minus[1]];
            }
            ([plus[0] + minus[0], plus[1] + minus[1]], s)
        }
        EphClass::Parabolic => {
            let (c1, c2) = (x.apply_vec([T::one(), T::zero()]), x.apply_vec([T::zero(), T::one()]));
            let w =
                if c1[0].hypot(c1[1]) >= c2[0].hypot(c2[1]) { [T::one(), T::zero()] } else { [T::zero(), T::one()] };
            let xw = x.apply_vec(w);
            (w, w[0] * xw[1] - w[1] * xw[0])
        }
        EphClass::Elliptic => {
            let theta = x.det().max(T::zero()).sqrt();
            let omega = if x.c >= T::zero() { theta } else { -theta };
            ([T::one(), T::zero()], omega)
        }
    };
    if omega == T::zero() || !omega.is_finite() {
        return Err(degenerate("generator too close to zero"));
    }
    let ginv = cols(w, omega);
    let det = ginv.det();
    if det.is_nan() || det <= T::zero() {
        return Err(degenerate("could not build a conjugator in SL(2, R)"));
    }
    let lambda = T::one() / det.sqrt();
    let ginv = cols([w[0] * lambda, w[1] * lambda], omega);
    let conjugator = MoebiusMap::from_matrix(ginv.adjugate())?;
    Ok(OneParamSubgroup { generator: x, conjugator, tau, rate: omega })
}

/// The subgroup already in canonical form, `ψ(t) = H_τ(t)`.
pub fn canonical_subgroup<T: Scalar>(tau: EphClass) -> OneParamSubgroup<T> {
    OneParamSubgroup { generator: h_tau_generator(tau), conjugator: MoebiusMap::identity(), tau, rate: T::one() }
}

/// Subgroup through an aligned triple, with times `t₂`, `t₃` such that
/// `ψ(t_j)` maps the first interval onto the `j`-th.
///
/// The subgroup is the one containing `φ_XY`, the map sending start points
/// to end points. When `φ_XY` has two fixed points `f₁ < f₂`, start points
/// outside `(f₁, f₂)` are first reflected by `C_{f₁f₂}`, so all of them lie
/// on the orbit `(f₁, f₂)`.
pub fn subgroup_from_triple<T: Scalar>(t: &AlignedTriple<T>, tol: Tolerance<T>) -> Result<(OneParamSubgroup<T>, T, T)> {
    let phi = map_between_triples(&t.xs(), &t.ys())?;
    let sub = subgroup_from_map(&phi, tol)?;
    let mut starts = t.xs().points();
    let report = fixed_points(&phi, tol);
    for f in report.points() {
        for i in t.intervals() {
            if f.approx_eq(&i.x, tol.eps) || f.approx_eq(&i.y, tol.eps) {
                return Err(degenerate(format!("interval endpoint {f} is fixed by the triple map")));
            }
        }
    }
    if let FixedPointReport::Hyperbolic(f1, f2) = report {
        let reflection = Cycle::from_endpoints(&f1, &f2).matrix();
        for p in starts.iter_mut() {
            if orientation_value(&f1, p, &f2) < T::zero() {
                *p = apply_map(&reflection, p)?;
            }
        }
    }
    if sub.tau != report.eph().ok_or_else(|| invalid("triple map is the identity"))? {
        return Err(degenerate("fixed points and trace disagree on the class"));
    }
    let t2 = sub.parameter_between(&starts[0], &starts[1], tol.eps)?;
    let t3 = sub.parameter_between(&starts[0], &starts[2], tol.eps)?;
    Ok((sub, t2, t3))
}
