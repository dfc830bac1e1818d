//! Numerical realization of the collision operator of a polyatomic gas whose
//! internal (rotational/vibrational) energy is a continuous variable.
//!
//! A molecule is described by a velocity `ξ ∈ ℝ³` and an internal energy
//! `I > 0`, with `δ ≥ 2` internal degrees of freedom. Binary collisions are
//! parametrized Borgnakke-Larsen style by a scattering direction `ω ∈ S²` and
//! two energy-split fractions `(r, R) ∈ [0,1]²`. On top of the exact
//! kinematics the crate provides:
//!
//! * scattering models (an energy power law plus three standard polyatomic
//!   kernels) with their symmetry and envelope checks ([`models`]),
//! * Maxwellian equilibria, collision invariants and moment extraction
//!   ([`distributions`]),
//! * deterministic Gauss-type and seeded Monte Carlo quadrature ([`quadrature`]),
//! * the bilinear collision operator `Q(f,f)`, its quarter-symmetrized weak
//!   form and the entropy-production functional ([`collision_op`]),
//! * the linearized operator `L = ν − K`: the collision frequency ν by two
//!   independent routes and the integral kernels of `K` ([`linearized`]),
//! * Nyström discretization, symmetrization, eigenanalysis, null-space and
//!   coercivity diagnostics ([`spectral`]), and a binary on-disk format for
//!   assembled operators ([`blop`]).
//!
//! All routines are deterministic: fixed-order pairwise summation is used for
//! reductions, and Monte Carlo draws are pure functions of `(seed, index)`.

pub mod blop;
pub mod collision_op;
pub mod distributions;
pub mod error;
pub mod kinematics;
pub mod linearized;
pub mod models;
pub mod quadrature;
pub mod spectral;

pub use error::{Error, Result};
pub use kinematics::{BlParams, CollisionPair, GasModel, PhasePoint, PostCollision};
pub use models::{AngularFactor, CollisionGeometry, ModelKind, ScatteringModel};
pub use quadrature::QuadratureSpec;
