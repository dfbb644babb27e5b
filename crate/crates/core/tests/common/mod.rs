#![allow(dead_code)]

use powerdyn::{ModelParams, State};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn params(alpha: f64, beta: f64, gamma: f64) -> ModelParams {
    ModelParams::new(alpha, beta, gamma).expect("valid test parameters")
}

/// `α, β ∈ [−2, 2]`, `γ ∈ [0.1, 3]`.
pub fn random_params(rng: &mut impl Rng) -> ModelParams {
    loop {
        let alpha = rng.gen_range(-2.0..=2.0);
        let beta = rng.gen_range(-2.0..=2.0);
        let gamma = rng.gen_range(0.1..=3.0);
        if let Ok(p) = ModelParams::new(alpha, beta, gamma) {
            return p;
        }
    }
}

/// Rejection-samples [`random_params`] until `accept` holds.
pub fn random_params_where(
    rng: &mut impl Rng,
    accept: impl Fn(&ModelParams) -> bool,
) -> ModelParams {
    loop {
        let p = random_params(rng);
        if accept(&p) {
            return p;
        }
    }
}

pub fn random_state(rng: &mut impl Rng, bound: f64) -> State {
    State::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

/// `|x − y| ≤ tol · max(|y|, 1)`: relative above unit magnitude, absolute below.
pub fn close_mixed(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * y.abs().max(1.0)
}

/// Textbook iteration of the two update equations, written independently of
/// the library's `step`.
pub fn naive_step(alpha: f64, beta: f64, gamma: f64, s: State) -> State {
    let power = gamma * (s.b - s.a);
    State::new(s.a + alpha * power, s.b - beta * power)
}
