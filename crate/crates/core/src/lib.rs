//! Analysis toolkit for a discrete-time, two-player affinity/power system.
//!
//! Two players `A` and `B` each hold an affinity value. Player `A`'s power is
//! `P = γ·(B − A)`; every step `A` moves by `α·P` and `B` by `−β·P`. The
//! transition matrix always has eigenvalue `1` (every state with `A = B` is a
//! fixed point); the second eigenvalue `λ₂ = 1 − αγ − βγ` decides everything
//! else.
//!
//! * [`model`] holds parameters, state and forward simulation.
//! * [`spectral`] has the eigenstructure, closed-form matrix powers (including
//!   the defective Jordan case) and an iterative oracle.
//! * [`classifier`] maps parameters and initial states to stability classes,
//!   dominance archetypes and asymptotic fates.
//! * [`cli`] is the command-line front end used by the `powerdyn` binary.

pub mod classifier;
pub mod cli;
pub mod error;
pub mod model;
pub mod spectral;

pub use classifier::{
    asymptotic_fate, classify, classify_archetype, classify_stability, divergence_signs_at,
    equilibrium_limit, oscillation_points, Archetype, ArchetypeCase, BehavioralClass,
    ClassificationReport, Fate, Limit, SpectralClass, Stance, CLASSIFY_EPSILON,
};
pub use error::{Error, Result};
pub use model::{
    power, simulate, step, validate_params, ModelParams, State, Trajectory,
    DEFAULT_DIVERGENCE_THRESHOLD,
};
pub use spectral::{
    matrix_power_closed, matrix_power_iterative, spectrum, state_at, transition_matrix, Mat2,
    Spectrum, BRANCH_EPSILON,
};
