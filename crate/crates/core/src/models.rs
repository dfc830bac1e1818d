//! Scattering models: collision kernels `B`, differential cross sections σ,
//! and their structural checks.
//!
//! A collision kernel is a nonnegative function of the collision geometry,
//! invariant under relabeling the incoming pair, relabeling the outgoing
//! pair, and exchanging the roles of incoming and outgoing states
//! (microreversibility). Four families are provided:
//!
//! * [`ModelKind::PowerLawE`] — `B = C E^{1-α/2}` with total energy `E`,
//!   `0 ≤ α ≤ 2` (`α = 2` is the borderline constant-kernel case),
//! * [`ModelKind::Gp20Model1`] — `B = b E^{α/2}`,
//! * [`ModelKind::Gp20Model2`] — `B = b (R^{α/2}|g|^α + (1-R)^{α/2}((I+I*)/m)^{α/2})`,
//! * [`ModelKind::Gp20Model3`] — kinetic term plus per-molecule internal
//!   terms, symmetrized over the outgoing energy split so that all three
//!   invariances hold exactly,
//!
//! each optionally multiplied by a bounded even function of the scattering
//! angle cosine. `B` and σ are related through
//!
//! ```text
//! σ = B (1-R)^{δ-2} R^{1/2} (r(1-r))^{δ/2-1} / (|g| E²).
//! ```
//!
//! All families satisfy the envelope
//! `B ≤ C·E (1 + Ψ^{γ/2-1})` with `Ψ = |g||g'|`, which
//! [`envelope_check_est1a`] verifies empirically on random geometries.

use crate::error::{Error, Result};
use crate::kinematics::{
    post_collision, total_energy, BlParams, CollisionPair, GasModel, PhasePoint,
};
use crate::quadrature::{open_unit, random_direction, McStream};
use nalgebra::Vector3;

/// Relative velocities below this are treated as singular in σ and kernel
/// evaluations.
pub const MIN_RELATIVE_SPEED: f64 = 1e-8;

/// The model families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    PowerLawE,
    Gp20Model1,
    Gp20Model2,
    Gp20Model3,
}

impl ModelKind {
    pub fn name(&self) -> &'static str {
        match self {
            ModelKind::PowerLawE => "power_law_e",
            ModelKind::Gp20Model1 => "gp20_model1",
            ModelKind::Gp20Model2 => "gp20_model2",
            ModelKind::Gp20Model3 => "gp20_model3",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "power_law_e" => Ok(ModelKind::PowerLawE),
            "gp20_model1" => Ok(ModelKind::Gp20Model1),
            "gp20_model2" => Ok(ModelKind::Gp20Model2),
            "gp20_model3" => Ok(ModelKind::Gp20Model3),
            other => Err(Error::invalid(format!("unknown model variant '{other}'"))),
        }
    }
}

/// Optional angular factor `b(cos θ)`, even in the cosine.
#[derive(Debug, Clone, PartialEq)]
pub enum AngularFactor {
    /// `b ≡ 1`.
    Constant,
    /// Piecewise-linear even function tabulated on a uniform grid over
    /// `|cos θ| ∈ [0, 1]`; values must be positive and bounded.
    TabulatedEven(Vec<f64>),
}

impl AngularFactor {
    pub fn is_isotropic(&self) -> bool {
        matches!(self, AngularFactor::Constant)
    }

    pub fn eval(&self, cos_theta: f64) -> f64 {
        match self {
            AngularFactor::Constant => 1.0,
            AngularFactor::TabulatedEven(vals) => {
                let c = cos_theta.abs().min(1.0);
                if vals.len() == 1 {
                    return vals[0];
                }
                let t = c * (vals.len() - 1) as f64;
                let k = (t.floor() as usize).min(vals.len() - 2);
                let frac = t - k as f64;
                vals[k] * (1.0 - frac) + vals[k + 1] * frac
            }
        }
    }

    fn validate(&self) -> Result<()> {
        if let AngularFactor::TabulatedEven(vals) = self {
            if vals.is_empty() {
                return Err(Error::invalid("angular table must be non-empty".into()));
            }
            if vals.iter().any(|v| !v.is_finite() || *v <= 0.0) {
                return Err(Error::invalid("angular table values must be positive and finite".into()));
            }
        }
        Ok(())
    }
}

/// A scattering model: family, strength constant (`C` or `b`), energy
/// exponent α, and angular factor.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatteringModel {
    pub kind: ModelKind,
    pub strength: f64,
    pub alpha: f64,
    pub angular: AngularFactor,
}

impl ScatteringModel {
    pub fn new(kind: ModelKind, strength: f64, alpha: f64) -> Result<Self> {
        let model = ScatteringModel { kind, strength, alpha, angular: AngularFactor::Constant };
        model.validate()?;
        Ok(model)
    }

    /// Constant-kernel reference model (`PowerLawE` with `α = 2`, `C = 1`).
    pub fn constant_kernel() -> Self {
        ScatteringModel {
            kind: ModelKind::PowerLawE,
            strength: 1.0,
            alpha: 2.0,
            angular: AngularFactor::Constant,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.strength.is_finite() || self.strength <= 0.0 {
            return Err(Error::invalid(format!(
                "model strength must be positive, got {}",
                self.strength
            )));
        }
        self.angular.validate()?;
        match self.kind {
            ModelKind::PowerLawE => {
                if !(0.0..=2.0).contains(&self.alpha) {
                    return Err(Error::invalid(format!(
                        "power-law exponent must satisfy 0 <= alpha <= 2, got {}",
                        self.alpha
                    )));
                }
            }
            _ => {
                if !(self.alpha > 0.0 && self.alpha <= 2.0) {
                    return Err(Error::invalid(format!(
                        "model exponent must satisfy 0 < alpha <= 2, got {}",
                        self.alpha
                    )));
                }
            }
        }
        Ok(())
    }

    /// True for the borderline constant-kernel case `α = 2` of the power-law
    /// family, admitted but outside the strict decay range.
    pub fn borderline_alpha(&self) -> bool {
        self.kind == ModelKind::PowerLawE && self.alpha == 2.0
    }

    /// True when `B` does not depend on the scattering angle.
    pub fn is_isotropic(&self) -> bool {
        self.angular.is_isotropic()
    }
}

/// A full collision geometry: incoming and outgoing pairs on the
/// conservation manifold, with the derived quantities every model needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollisionGeometry {
    pub pre: CollisionPair,
    pub post: CollisionPair,
    /// Total collision energy.
    pub energy: f64,
    /// Incoming relative speed `|g|`.
    pub g_norm: f64,
    /// Outgoing relative speed `|g'|`.
    pub g_prime_norm: f64,
    /// Kinetic energy fraction `R = m|g'|²/(4E)` of the outgoing state.
    pub big_r: f64,
    /// Internal split fraction `r = I'/(I' + I*')` (0.5 when both vanish).
    pub r: f64,
    /// Scattering angle cosine `g·g'/(|g||g'|)` (0 when `|g'| = 0`).
    pub cos_theta: f64,
}

/// Relative tolerance for the conservation checks in
/// [`CollisionGeometry::new`].
const GEOMETRY_TOL: f64 = 1e-10;

impl CollisionGeometry {
    /// Builds a geometry from two explicit pairs, validating momentum and
    /// energy conservation to `1e-10` relative.
    pub fn new(pre: CollisionPair, post: CollisionPair, gas: &GasModel) -> Result<Self> {
        let e_pre = total_energy(&pre, gas);
        let e_post = total_energy(&post, gas);
        let scale = e_pre.abs().max(e_post.abs()).max(1e-300);
        if (e_pre - e_post).abs() > GEOMETRY_TOL * scale {
            return Err(Error::invalid(format!(
                "pairs are not on the energy manifold: E_in={e_pre}, E_out={e_post}"
            )));
        }
        let dp = (pre.momentum_sum() - post.momentum_sum()).norm();
        let p_scale = pre.momentum_sum().norm().max(pre.relative_velocity().norm()).max(1.0);
        if dp > GEOMETRY_TOL * p_scale {
            return Err(Error::invalid(format!("pairs do not conserve momentum: |dp| = {dp}")));
        }
        let g = pre.relative_velocity();
        let gp = post.relative_velocity();
        let g_norm = g.norm();
        let g_prime_norm = gp.norm();
        if g_norm < MIN_RELATIVE_SPEED {
            return Err(Error::singular(format!(
                "incoming relative speed {g_norm} below {MIN_RELATIVE_SPEED}"
            )));
        }
        let energy = e_pre;
        let internal_out = post.a.internal + post.b.internal;
        let r = if internal_out > 0.0 { post.a.internal / internal_out } else { 0.5 };
        let big_r = (0.25 * gas.mass * g_prime_norm * g_prime_norm / energy).clamp(0.0, 1.0);
        let cos_theta = if g_prime_norm > 0.0 { g.dot(&gp) / (g_norm * g_prime_norm) } else { 0.0 };
        Ok(CollisionGeometry {
            pre,
            post,
            energy,
            g_norm,
            g_prime_norm,
            big_r,
            r,
            cos_theta: cos_theta.clamp(-1.0, 1.0),
        })
    }

    /// Builds a geometry by applying the collision map to `pre`.
    pub fn from_bl(pre: CollisionPair, bl: &BlParams, gas: &GasModel) -> Result<Self> {
        let g = pre.relative_velocity();
        let g_norm = g.norm();
        if g_norm < MIN_RELATIVE_SPEED {
            return Err(Error::singular(format!(
                "incoming relative speed {g_norm} below {MIN_RELATIVE_SPEED}"
            )));
        }
        let post = post_collision(&pre, bl, gas)?.pair;
        let energy = total_energy(&pre, gas);
        let g_prime_norm = 2.0 * (bl.big_r * energy / gas.mass).sqrt();
        let cos_theta = if g_prime_norm > 0.0 { g.dot(&bl.omega) / g_norm } else { 0.0 };
        Ok(CollisionGeometry {
            pre,
            post,
            energy,
            g_norm,
            g_prime_norm,
            big_r: bl.big_r,
            r: bl.r,
            cos_theta: cos_theta.clamp(-1.0, 1.0),
        })
    }

    /// The reversed collision (outgoing pair plays the incoming role).
    pub fn reversed(&self, gas: &GasModel) -> Result<Self> {
        CollisionGeometry::new(self.post, self.pre, gas)
    }

    /// The geometry with the outgoing pair relabeled.
    pub fn outgoing_swapped(&self, gas: &GasModel) -> Result<Self> {
        CollisionGeometry::new(self.pre, self.post.swapped(), gas)
    }

    /// The geometry with both pairs relabeled.
    pub fn both_swapped(&self, gas: &GasModel) -> Result<Self> {
        CollisionGeometry::new(self.pre.swapped(), self.post.swapped(), gas)
    }
}

/// Evaluates the collision kernel `B ≥ 0` for `model` on `geometry`.
///
/// All families are implemented through combinations that are exactly
/// invariant (to rounding) under incoming relabeling, outgoing relabeling,
/// and collision reversal.
pub fn kernel_b(model: &ScatteringModel, geom: &CollisionGeometry, gas: &GasModel) -> f64 {
    let ang = model.angular.eval(geom.cos_theta);
    let e = geom.energy;
    let a = model.alpha;
    let value = match model.kind {
        ModelKind::PowerLawE => e.powf(1.0 - 0.5 * a),
        ModelKind::Gp20Model1 => e.powf(0.5 * a),
        ModelKind::Gp20Model2 => {
            // R^{α/2}|g|^α = (m |g|²|g'|² / (4E))^{α/2} / m^{α/2}, written in
            // the reversal-symmetric form.
            let kinetic = (geom.g_norm * geom.g_prime_norm).powf(a)
                * (gas.mass / (4.0 * e)).powf(0.5 * a);
            let i_in = geom.pre.a.internal + geom.pre.b.internal;
            let i_out = geom.post.a.internal + geom.post.b.internal;
            let internal = (i_in * i_out / (gas.mass * e)).powf(0.5 * a);
            kinetic + internal
        }
        ModelKind::Gp20Model3 => {
            let kinetic = (geom.g_norm * geom.g_prime_norm).powf(a)
                * (gas.mass / (4.0 * e)).powf(0.5 * a);
            let me = gas.mass * e;
            let half = 0.5 * a;
            // Symmetrized per-molecule internal terms: half-sum over the two
            // outgoing labels for each incoming label.
            let internal = 0.5
                * ((geom.post.a.internal * geom.pre.a.internal / me).powf(half)
                    + (geom.post.b.internal * geom.pre.a.internal / me).powf(half)
                    + (geom.post.b.internal * geom.pre.b.internal / me).powf(half)
                    + (geom.post.a.internal * geom.pre.b.internal / me).powf(half));
            kinetic + internal
        }
    };
    model.strength * ang * value
}

/// Differential cross section from the kernel:
/// `σ = B (1-R)^{δ-2} R^{1/2} (r(1-r))^{δ/2-1} / (|g| E²)`.
///
/// Errors on near-zero relative speed and on boundary energy fractions,
/// where the relation degenerates.
pub fn sigma(model: &ScatteringModel, geom: &CollisionGeometry, gas: &GasModel) -> Result<f64> {
    if geom.g_norm < MIN_RELATIVE_SPEED {
        return Err(Error::singular(format!(
            "relative speed {} below {MIN_RELATIVE_SPEED}",
            geom.g_norm
        )));
    }
    if geom.big_r <= 0.0 || geom.big_r >= 1.0 || geom.r <= 0.0 || geom.r >= 1.0 {
        return Err(Error::singular(format!(
            "energy fractions on the boundary: r={}, R={}",
            geom.r, geom.big_r
        )));
    }
    let b = kernel_b(model, geom, gas);
    let half_exp = 0.5 * gas.delta - 1.0;
    let rr = geom.r * (1.0 - geom.r);
    let lead = if half_exp == 0.0 { 1.0 } else { rr.powf(half_exp) };
    Ok(b * (1.0 - geom.big_r).powf(gas.delta - 2.0) * geom.big_r.sqrt() * lead
        / (geom.g_norm * geom.energy * geom.energy))
}

/// Result of the empirical kernel-envelope scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnvelopeReport {
    /// Largest observed `B / (E (1 + Ψ^{γ/2-1}))` with `Ψ = |g||g'|`.
    pub worst_ratio: f64,
    /// Energy at which the worst ratio occurred.
    pub worst_energy: f64,
    pub samples: u64,
    pub gamma: f64,
}

/// Scans random collision geometries with total energy in
/// `(e_min, e_max)` and reports the worst ratio of `B` to the envelope
/// `E (1 + Ψ^{γ/2-1})`. The scan itself is the oracle: a finite worst ratio
/// bounded uniformly in the energy range is the envelope property.
pub fn envelope_check_est1a(
    model: &ScatteringModel,
    gas: &GasModel,
    gamma: f64,
    e_range: (f64, f64),
    samples: u64,
    seed: u64,
) -> Result<EnvelopeReport> {
    if !(gamma > 0.0 && gamma < 1.0) {
        return Err(Error::invalid(format!("gamma must lie in (0,1), got {gamma}")));
    }
    let (e_min, e_max) = e_range;
    if !(e_min > 0.0 && e_max > e_min) {
        return Err(Error::invalid(format!("bad energy range ({e_min}, {e_max})")));
    }
    model.validate()?;
    gas.validate()?;
    let stream = McStream::new(seed);
    let mut worst = 0.0f64;
    let mut worst_energy = e_min;
    for i in 0..samples {
        let mut rng = stream.rng_for(i);
        let e = e_min * (e_max / e_min).powf(open_unit(&mut rng));
        // Split E into kinetic and two internal shares, built so the pair
        // has exactly total energy e.
        let kin_share = open_unit(&mut rng);
        let split = open_unit(&mut rng);
        let g_norm = (4.0 * kin_share * e / gas.mass).sqrt().max(MIN_RELATIVE_SPEED * 2.0);
        let i_a = split * (1.0 - kin_share) * e;
        let i_b = (1.0 - split) * (1.0 - kin_share) * e;
        let dir = random_direction(&mut rng);
        let pre = CollisionPair::new(
            PhasePoint::new(0.5 * g_norm * dir, i_a),
            PhasePoint::new(-0.5 * g_norm * dir, i_b),
        );
        let omega = random_direction(&mut rng);
        let bl = BlParams::new(omega, open_unit(&mut rng), open_unit(&mut rng))?;
        let geom = CollisionGeometry::from_bl(pre, &bl, gas)?;
        let b = kernel_b(model, &geom, gas);
        if !b.is_finite() || b < 0.0 {
            return Err(Error::NonFinite {
                context: "envelope_check_est1a",
                detail: format!("kernel value {b} at energy {e}"),
            });
        }
        let psi = geom.g_norm * geom.g_prime_norm;
        if psi <= 0.0 {
            continue;
        }
        let envelope = geom.energy * (1.0 + psi.powf(0.5 * gamma - 1.0));
        let ratio = b / envelope;
        if ratio > worst {
            worst = ratio;
            worst_energy = geom.energy;
        }
    }
    Ok(EnvelopeReport { worst_ratio: worst, worst_energy, samples, gamma })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gas() -> GasModel {
        GasModel::default()
    }

    fn head_on_geometry(r: f64, big_r: f64) -> CollisionGeometry {
        let pre = CollisionPair::new(
            PhasePoint::new(Vector3::new(1.0, 0.0, 0.0), 0.5),
            PhasePoint::new(Vector3::new(-1.0, 0.0, 0.0), 0.5),
        );
        let bl = BlParams::new(Vector3::new(0.0, 0.0, 1.0), r, big_r).unwrap();
        CollisionGeometry::from_bl(pre, &bl, &gas()).unwrap()
    }

    #[test]
    fn power_law_kernel_values() {
        let geom = head_on_geometry(0.5, 0.5);
        assert_eq!(geom.energy, 2.0);
        let constant = ScatteringModel::constant_kernel();
        assert!((kernel_b(&constant, &geom, &gas()) - 1.0).abs() < 1e-15);
        let alpha1 = ScatteringModel::new(ModelKind::PowerLawE, 1.0, 1.0).unwrap();
        assert!((kernel_b(&alpha1, &geom, &gas()) - 2.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn sigma_from_kernel_reference_value() {
        // r = R = 1/2 at the head-on configuration: σ = B √R / (|g| E²) for
        // δ = 2, so σ = √2·√0.5/(2·4) = 1/8.
        let geom = head_on_geometry(0.5, 0.5);
        let alpha1 = ScatteringModel::new(ModelKind::PowerLawE, 1.0, 1.0).unwrap();
        let s = sigma(&alpha1, &geom, &gas()).unwrap();
        assert!((s - 0.125).abs() < 1e-15, "sigma {s}");
    }

    #[test]
    fn sigma_matches_velocity_form_closed_expression() {
        // Independent closed form for the power-law family:
        // σ = (√m C/2) √(|g|² - 4ΔI/m) (I'I*')^{δ/2-1} / (|g| E^{δ+(α-1)/2}).
        let m = 1.0;
        for (r, big_r, alpha) in [(0.3, 0.6, 1.0), (0.7, 0.2, 0.5), (0.5, 0.9, 2.0)] {
            let geom = head_on_geometry(r, big_r);
            let model = ScatteringModel::new(ModelKind::PowerLawE, 1.0, alpha).unwrap();
            let got = sigma(&model, &geom, &gas()).unwrap();
            let delta_i = geom.post.a.internal + geom.post.b.internal
                - geom.pre.a.internal
                - geom.pre.b.internal;
            let gp = (geom.g_norm * geom.g_norm - 4.0 * delta_i / m).sqrt();
            let expect = 0.5 * m.sqrt() * gp
                / (geom.g_norm * geom.energy.powf(2.0 + 0.5 * (alpha - 1.0)));
            assert!(
                (got - expect).abs() < 1e-12 * expect.abs(),
                "sigma {got} vs closed form {expect}"
            );
        }
    }

    #[test]
    fn kernel_symmetries_hold_to_rounding() {
        let gas = gas();
        let stream = McStream::new(2024);
        let models = [
            ScatteringModel::new(ModelKind::PowerLawE, 1.3, 1.0).unwrap(),
            ScatteringModel::new(ModelKind::Gp20Model1, 0.8, 1.5).unwrap(),
            ScatteringModel::new(ModelKind::Gp20Model2, 1.1, 1.0).unwrap(),
            ScatteringModel::new(ModelKind::Gp20Model3, 0.9, 0.7).unwrap(),
        ];
        for i in 0..10_000u64 {
            let mut rng = stream.rng_for(i);
            let pre = CollisionPair::new(
                PhasePoint::new(3.0 * random_direction(&mut rng), 0.1 + 4.0 * open_unit(&mut rng)),
                PhasePoint::new(2.0 * random_direction(&mut rng), 0.1 + 4.0 * open_unit(&mut rng)),
            );
            if pre.relative_velocity().norm() < 1e-3 {
                continue;
            }
            let bl = BlParams::new(
                random_direction(&mut rng),
                open_unit(&mut rng),
                open_unit(&mut rng),
            )
            .unwrap();
            let geom = CollisionGeometry::from_bl(pre, &bl, &gas).unwrap();
            let swapped_out = geom.outgoing_swapped(&gas).unwrap();
            let swapped_both = geom.both_swapped(&gas).unwrap();
            let reversed = geom.reversed(&gas).unwrap();
            for model in &models {
                let b0 = kernel_b(model, &geom, &gas);
                for (tag, other) in [
                    ("outgoing swap", &swapped_out),
                    ("both swap", &swapped_both),
                    ("reversal", &reversed),
                ] {
                    let b1 = kernel_b(model, other, &gas);
                    let scale = b0.abs().max(b1.abs()).max(1e-300);
                    assert!(
                        (b0 - b1).abs() <= 1e-12 * scale,
                        "{} breaks {tag}: {b0} vs {b1}",
                        model.kind.name()
                    );
                }
            }
        }
    }

    #[test]
    fn envelope_holds_for_all_families() {
        let gas = gas();
        for (kind, alpha, bound) in [
            (ModelKind::PowerLawE, 1.0, 1.0),
            (ModelKind::Gp20Model1, 2.0, 1.0),
            (ModelKind::Gp20Model2, 1.0, 3.0),
            (ModelKind::Gp20Model3, 1.0, 4.0),
        ] {
            let model = ScatteringModel::new(kind, 1.0, alpha).unwrap();
            let report =
                envelope_check_est1a(&model, &gas, 0.5, (0.01, 100.0), 10_000, 7).unwrap();
            assert!(
                report.worst_ratio <= bound,
                "{} worst ratio {} exceeds {}",
                kind.name(),
                report.worst_ratio,
                bound
            );
            assert!(report.worst_ratio > 0.0);
        }
    }

    #[test]
    fn gp20_model1_envelope_is_tight_at_alpha_two() {
        let model = ScatteringModel::new(ModelKind::Gp20Model1, 1.0, 2.0).unwrap();
        let report =
            envelope_check_est1a(&model, &gas(), 0.5, (0.01, 100.0), 10_000, 11).unwrap();
        // B = b E, envelope = E (1 + Ψ^{-3/4}) ≥ E, so the ratio approaches
        // but never exceeds 1.
        assert!(report.worst_ratio <= 1.0 + 1e-12);
        assert!(report.worst_ratio > 0.8);
    }

    #[test]
    fn validation_rejects_bad_parameters() {
        assert!(ScatteringModel::new(ModelKind::PowerLawE, 1.0, 2.5).is_err());
        assert!(ScatteringModel::new(ModelKind::PowerLawE, -1.0, 1.0).is_err());
        assert!(ScatteringModel::new(ModelKind::Gp20Model2, 1.0, 0.0).is_err());
        assert!(ScatteringModel::new(ModelKind::PowerLawE, 1.0, 2.0).unwrap().borderline_alpha());
        assert!(ModelKind::parse("gp20_model2").is_ok());
        assert!(ModelKind::parse("hard_sphere").is_err());
    }

    #[test]
    fn sigma_rejects_singular_inputs() {
        let model = ScatteringModel::constant_kernel();
        let geom = head_on_geometry(0.5, 0.5);
        let mut boundary = geom;
        boundary.big_r = 1.0;
        assert!(sigma(&model, &boundary, &gas()).is_err());
        let mut slow = geom;
        slow.g_norm = 1e-9;
        assert!(sigma(&model, &slow, &gas()).is_err());
    }

    #[test]
    fn angular_factor_interpolates_evenly() {
        let table = AngularFactor::TabulatedEven(vec![1.0, 2.0, 3.0]);
        assert!((table.eval(0.0) - 1.0).abs() < 1e-15);
        assert!((table.eval(0.5) - 2.0).abs() < 1e-15);
        assert!((table.eval(-0.5) - 2.0).abs() < 1e-15);
        assert!((table.eval(1.0) - 3.0).abs() < 1e-15);
        assert!((table.eval(0.25) - 1.5).abs() < 1e-15);
    }
}
