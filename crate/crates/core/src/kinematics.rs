//! Exact collision kinematics for a polyatomic gas with a continuous
//! internal-energy variable.
//!
//! A molecule carries a velocity `ξ ∈ ℝ³` and an internal energy `I > 0`;
//! the gas is characterized by a molecular mass `m` and `δ ≥ 2` internal
//! degrees of freedom. A binary collision conserves momentum and the total
//! energy
//!
//! ```text
//! E = (m/4) |ξ - ξ*|² + I + I*,
//! ```
//!
//! and the post-collision state is parametrized Borgnakke-Larsen style by a
//! unit vector `ω` and energy fractions `(r, R) ∈ [0,1]²`:
//!
//! ```text
//! I' = r (1-R) E,   I*' = (1-r)(1-R) E,   |g'| = 2 √(R E / m),
//! ξ'  = G + (|g'|/2) ω,   ξ*' = G - (|g'|/2) ω,
//! ```
//!
//! with `G` the velocity midpoint. The map is an involution: applying it to
//! the post-collision pair with the reconstructed parameters returns the
//! original pair.

use crate::error::{Error, Result};
use nalgebra::Vector3;

/// Gas-level constants: molecular mass and internal degrees of freedom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasModel {
    /// Molecular mass `m > 0`.
    pub mass: f64,
    /// Internal degrees of freedom `δ ≥ 2`.
    pub delta: f64,
}

impl Default for GasModel {
    fn default() -> Self {
        GasModel { mass: 1.0, delta: 2.0 }
    }
}

impl GasModel {
    pub fn new(mass: f64, delta: f64) -> Result<Self> {
        let gas = GasModel { mass, delta };
        gas.validate()?;
        Ok(gas)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.mass > 0.0) || !self.mass.is_finite() {
            return Err(Error::invalid(format!("mass must be positive, got {}", self.mass)));
        }
        if !(self.delta >= 2.0) || !self.delta.is_finite() {
            return Err(Error::invalid(format!(
                "internal degrees of freedom must satisfy delta >= 2, got {}",
                self.delta
            )));
        }
        Ok(())
    }
}

/// A single-molecule state: velocity and internal energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhasePoint {
    pub vel: Vector3<f64>,
    /// Internal energy `I > 0` (0 is admitted as a boundary value in
    /// integrands where the measure vanishes there).
    pub internal: f64,
}

impl PhasePoint {
    pub fn new(vel: Vector3<f64>, internal: f64) -> Self {
        PhasePoint { vel, internal }
    }

    /// State with velocity `(0, 0, s)`, the canonical representative of all
    /// states of speed `s` for isotropic quantities.
    pub fn radial(speed: f64, internal: f64) -> Self {
        PhasePoint { vel: Vector3::new(0.0, 0.0, speed), internal }
    }

    pub fn speed(&self) -> f64 {
        self.vel.norm()
    }
}

/// An ordered pair of molecular states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CollisionPair {
    pub a: PhasePoint,
    pub b: PhasePoint,
}

impl CollisionPair {
    pub fn new(a: PhasePoint, b: PhasePoint) -> Self {
        CollisionPair { a, b }
    }

    /// Relative velocity `g = ξ_a - ξ_b`.
    pub fn relative_velocity(&self) -> Vector3<f64> {
        self.a.vel - self.b.vel
    }

    /// Velocity midpoint `G = (ξ_a + ξ_b)/2`, conserved by collisions.
    pub fn center_velocity(&self) -> Vector3<f64> {
        0.5 * (self.a.vel + self.b.vel)
    }

    /// Total momentum per unit mass, `ξ_a + ξ_b`.
    pub fn momentum_sum(&self) -> Vector3<f64> {
        self.a.vel + self.b.vel
    }

    /// Pair with the two states swapped.
    pub fn swapped(&self) -> Self {
        CollisionPair { a: self.b, b: self.a }
    }
}

/// Total collision energy `E = (m/4)|g|² + I_a + I_b`.
pub fn total_energy(pair: &CollisionPair, gas: &GasModel) -> f64 {
    let g = pair.relative_velocity();
    0.25 * gas.mass * g.norm_squared() + pair.a.internal + pair.b.internal
}

/// Borgnakke-Larsen collision parameters.
///
/// `r` splits the post-collision internal energy between the two molecules,
/// `R` splits total energy between relative motion and internal energy, and
/// `omega` is the post-collision direction of the relative velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlParams {
    pub omega: Vector3<f64>,
    pub r: f64,
    pub big_r: f64,
}

/// How far a direction vector may deviate from unit length.
const OMEGA_NORM_TOL: f64 = 1e-12;

impl BlParams {
    pub fn new(omega: Vector3<f64>, r: f64, big_r: f64) -> Result<Self> {
        let p = BlParams { omega, r, big_r };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.r) || !(0.0..=1.0).contains(&self.big_r) {
            return Err(Error::invalid(format!(
                "energy fractions must lie in [0,1], got r={}, R={}",
                self.r, self.big_r
            )));
        }
        let n = self.omega.norm();
        if (n - 1.0).abs() > OMEGA_NORM_TOL {
            return Err(Error::invalid(format!("omega must be a unit vector, |omega| = {n}")));
        }
        Ok(())
    }

    /// True when `r` or `R` sits exactly on the boundary of `[0,1]`, where
    /// the collision degenerates (zero relative speed or zero internal
    /// energy); quadrature nodes never sample these points.
    pub fn on_boundary(&self) -> bool {
        self.r == 0.0 || self.r == 1.0 || self.big_r == 0.0 || self.big_r == 1.0
    }
}

/// Result of applying the collision map: the post-collision pair plus a flag
/// marking degenerate boundary parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PostCollision {
    pub pair: CollisionPair,
    /// Set when the generating `(r, R)` sat on the boundary of `[0,1]²`.
    pub boundary: bool,
}

/// Applies the Borgnakke-Larsen collision map.
///
/// Conserves momentum and total energy exactly up to rounding; the returned
/// internal energies are nonnegative by construction.
pub fn post_collision(pair: &CollisionPair, bl: &BlParams, gas: &GasModel) -> Result<PostCollision> {
    bl.validate()?;
    gas.validate()?;
    let e = total_energy(pair, gas);
    let center = pair.center_velocity();
    let g_prime = 2.0 * (bl.big_r * e / gas.mass).sqrt();
    let half = 0.5 * g_prime;
    let i_a = bl.r * (1.0 - bl.big_r) * e;
    let i_b = (1.0 - bl.r) * (1.0 - bl.big_r) * e;
    let post = CollisionPair {
        a: PhasePoint::new(center + half * bl.omega, i_a),
        b: PhasePoint::new(center - half * bl.omega, i_b),
    };
    Ok(PostCollision { pair: post, boundary: bl.on_boundary() })
}

/// Reconstructs the Borgnakke-Larsen parameters that map `post` back to
/// `pre`: the collision map is an involution under this reconstruction.
pub fn reconstruct_bl(pre: &CollisionPair, post: &CollisionPair, gas: &GasModel) -> Result<BlParams> {
    let e = total_energy(post, gas);
    if !(e > 0.0) {
        return Err(Error::singular("zero-energy pair has no collision parameters".into()));
    }
    let g = pre.relative_velocity();
    let g_norm = g.norm();
    if g_norm == 0.0 {
        return Err(Error::singular("pre-collision pair with zero relative velocity".into()));
    }
    let big_r = 0.25 * gas.mass * g_norm * g_norm / e;
    let denom = (1.0 - big_r) * e;
    let r = if denom > 0.0 { pre.a.internal / denom } else { 0.5 };
    BlParams::new(g / g_norm, r.clamp(0.0, 1.0), big_r.clamp(0.0, 1.0))
}

/// Maximum absolute violation of momentum (componentwise, mass-weighted) and
/// total-energy conservation between two pairs.
pub fn conservation_residual(pre: &CollisionPair, post: &CollisionPair, gas: &GasModel) -> f64 {
    let dp = gas.mass * (pre.momentum_sum() - post.momentum_sum());
    let de = total_energy(pre, gas) - total_energy(post, gas);
    dp.abs().max().max(de.abs())
}

/// Post-collision velocities from the scattering direction and the total
/// internal-energy change `ΔI = I' + I*' - I - I*`, via
/// `|g'| = √(|g|² - 4 ΔI / m)`.
///
/// Derived accessor only: [`post_collision`] is the source of truth. Errors
/// when `m |g|² ≤ 4 ΔI`, where no outgoing state exists.
pub fn primed_velocities_from_delta(
    pair: &CollisionPair,
    omega: &Vector3<f64>,
    delta_i: f64,
    gas: &GasModel,
) -> Result<(Vector3<f64>, Vector3<f64>)> {
    let n = omega.norm();
    if (n - 1.0).abs() > OMEGA_NORM_TOL {
        return Err(Error::invalid(format!("omega must be a unit vector, |omega| = {n}")));
    }
    let g2 = pair.relative_velocity().norm_squared();
    let rad = g2 - 4.0 * delta_i / gas.mass;
    if rad <= 0.0 {
        return Err(Error::singular(format!(
            "inadmissible internal-energy change: m|g|^2 = {} <= 4 dI = {}",
            gas.mass * g2,
            4.0 * delta_i
        )));
    }
    let center = pair.center_velocity();
    let half = 0.5 * rad.sqrt();
    Ok((center + half * omega, center - half * omega))
}

/// The Borgnakke-Larsen measure factor
/// `(r(1-r))^{δ/2-1} (1-R)^{δ-1} R^{1/2}`.
pub fn bl_weight(bl: &BlParams, gas: &GasModel) -> f64 {
    let half_exp = 0.5 * gas.delta - 1.0;
    let rr = bl.r * (1.0 - bl.r);
    let lead = if half_exp == 0.0 { 1.0 } else { rr.powf(half_exp) };
    lead * (1.0 - bl.big_r).powf(gas.delta - 1.0) * bl.big_r.sqrt()
}
