//! Eigenstructure of the transition matrix and closed-form powers.
//!
//! With `k = αγ` and `m = βγ` the transition matrix is
//!
//! ```text
//! M = | 1 − k    k   |
//!     |   m    1 − m |
//! ```
//!
//! Its eigenvalues are `1` (eigenvector `(1, 1)`) and `λ₂ = 1 − k − m`
//! (eigenvector `(−α, β)`). When `α + β ≠ 0` the matrix is diagonalizable and
//!
//! ```text
//! Mᵗ = 1/(α+β) · | β + αλ₂ᵗ   α − αλ₂ᵗ |
//!                | β − βλ₂ᵗ   α + βλ₂ᵗ |
//! ```
//!
//! When `α + β = 0` the two eigenvalues coincide at `1`, `M` is a single Jordan
//! block and `Mᵗ` grows linearly:
//!
//! ```text
//! Mᵗ = | 1 − tk    tk   |
//!      |  −tk    1 + tk |
//! ```

use serde::Serialize;

use crate::model::{ModelParams, State};

/// Default `|α + β|` below which the defective (Jordan) closed form is used.
pub const BRANCH_EPSILON: f64 = 1e-12;

/// Row-major 2×2 real matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Mat2 {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(1.0, 0.0, 0.0, 1.0);

    pub const fn new(m11: f64, m12: f64, m21: f64, m22: f64) -> Self {
        Self { m11, m12, m21, m22 }
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            m11: self.m11 * rhs.m11 + self.m12 * rhs.m21,
            m12: self.m11 * rhs.m12 + self.m12 * rhs.m22,
            m21: self.m21 * rhs.m11 + self.m22 * rhs.m21,
            m22: self.m21 * rhs.m12 + self.m22 * rhs.m22,
        }
    }

    pub fn apply(&self, s: State) -> State {
        State {
            a: self.m11 * s.a + self.m12 * s.b,
            b: self.m21 * s.a + self.m22 * s.b,
        }
    }

    pub fn apply_vec(&self, v: (f64, f64)) -> (f64, f64) {
        (
            self.m11 * v.0 + self.m12 * v.1,
            self.m21 * v.0 + self.m22 * v.1,
        )
    }

    pub fn entries(&self) -> [f64; 4] {
        [self.m11, self.m12, self.m21, self.m22]
    }

    pub fn is_finite(&self) -> bool {
        self.entries().iter().all(|x| x.is_finite())
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Spectrum {
    pub lambda1: f64,
    pub lambda2: f64,
    pub v1: (f64, f64),
    pub v2: (f64, f64),
    pub diagonalizable: bool,
}

pub fn transition_matrix(params: &ModelParams) -> Mat2 {
    let k = params.gain_a();
    let m = params.gain_b();
    Mat2::new(1.0 - k, k, m, 1.0 - m)
}

/// Eigenvalues and eigenvectors of the transition matrix.
///
/// `v2` is `(−α, β)`, which stays defined when `β = 0`.
pub fn spectrum(params: &ModelParams, epsilon: f64) -> Spectrum {
    Spectrum {
        lambda1: 1.0,
        lambda2: params.lambda2(),
        v1: (1.0, 1.0),
        v2: (-params.alpha(), params.beta()),
        diagonalizable: !is_defective(params, epsilon),
    }
}

fn is_defective(params: &ModelParams, epsilon: f64) -> bool {
    (params.alpha() + params.beta()).abs() <= epsilon
}

/// `xⁿ` by binary exponentiation.
pub(crate) fn powi_by_squaring(x: f64, mut n: u64) -> f64 {
    let mut base = x;
    let mut acc = 1.0;
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        n >>= 1;
        if n > 0 {
            base *= base;
        }
    }
    acc
}

/// `Mᵗ` from the closed forms, using [`BRANCH_EPSILON`].
pub fn matrix_power_closed(params: &ModelParams, t: u64) -> Mat2 {
    matrix_power_closed_eps(params, t, BRANCH_EPSILON)
}

/// `Mᵗ` from the closed forms, switching to the Jordan form when
/// `|α + β| ≤ epsilon`.
pub fn matrix_power_closed_eps(params: &ModelParams, t: u64, epsilon: f64) -> Mat2 {
    if t == 0 {
        return Mat2::IDENTITY;
    }
    if is_defective(params, epsilon) {
        let tk = t as f64 * params.gain_a();
        return Mat2::new(1.0 - tk, tk, -tk, 1.0 + tk);
    }
    let (alpha, beta) = (params.alpha(), params.beta());
    let sum = alpha + beta;
    let lt = powi_by_squaring(params.lambda2(), t);
    Mat2::new(
        (beta + alpha * lt) / sum,
        (alpha - alpha * lt) / sum,
        (beta - beta * lt) / sum,
        (alpha + beta * lt) / sum,
    )
}

/// `Mᵗ` by `t` successive left-multiplications by `M`, starting from `I`.
pub fn matrix_power_iterative(params: &ModelParams, t: u64) -> Mat2 {
    let m = transition_matrix(params);
    (0..t).fold(Mat2::IDENTITY, |acc, _| m.mul(&acc))
}

/// State after `t` steps from the closed form, using [`BRANCH_EPSILON`].
pub fn state_at(params: &ModelParams, initial: State, t: u64) -> State {
    state_at_eps(params, initial, t, BRANCH_EPSILON)
}

/// State after `t` steps from the closed form.
///
/// In the defective branch both players move by the same displacement
/// `tαγ·(B₀ − A₀)`, so the gap `B − A` is preserved.
pub fn state_at_eps(params: &ModelParams, initial: State, t: u64, epsilon: f64) -> State {
    if t > 0 && is_defective(params, epsilon) {
        let shift = t as f64 * params.gain_a() * initial.gap();
        return State::new(initial.a + shift, initial.b + shift);
    }
    matrix_power_closed_eps(params, t, epsilon).apply(initial)
}
