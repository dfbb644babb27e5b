//! Parameters, state and forward simulation.

use serde::Serialize;

use crate::error::{Error, Result};

/// Trajectories stop once either affinity exceeds this magnitude.
pub const DEFAULT_DIVERGENCE_THRESHOLD: f64 = 1e12;

/// Validated `(α, β, γ)`.
///
/// `α` and `β` are the players' power sensitivities (positive means the player
/// is dominant, negative submissive); `γ` is the power gain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModelParams {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

impl ModelParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        for (name, value) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
            if !value.is_finite() {
                return Err(Error::NonFiniteInput { name, value });
            }
        }
        if gamma <= 0.0 {
            return Err(Error::GammaNotPositive(gamma));
        }
        if alpha == 0.0 && beta == 0.0 {
            return Err(Error::DegenerateModel);
        }
        Ok(Self { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `αγ`, the fraction of the gap that `A` closes each step.
    pub fn gain_a(&self) -> f64 {
        self.alpha * self.gamma
    }

    /// `βγ`, the fraction of the gap that `B` closes each step.
    pub fn gain_b(&self) -> f64 {
        self.beta * self.gamma
    }

    /// The non-trivial eigenvalue `1 − αγ − βγ`.
    pub fn lambda2(&self) -> f64 {
        1.0 - self.gain_a() - self.gain_b()
    }

    /// The equivalent parameterization `(αγ, βγ, 1)`.
    pub fn rescaled(&self) -> Self {
        Self {
            alpha: self.gain_a(),
            beta: self.gain_b(),
            gamma: 1.0,
        }
    }
}

pub fn validate_params(alpha: f64, beta: f64, gamma: f64) -> Result<ModelParams> {
    ModelParams::new(alpha, beta, gamma)
}

/// Affinities `(A, B)` at one timestep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct State {
    pub a: f64,
    pub b: f64,
}

impl State {
    pub const fn new(a: f64, b: f64) -> Self {
        Self { a, b }
    }

    /// `B − A`.
    pub fn gap(&self) -> f64 {
        self.b - self.a
    }

    #[inline]
    pub fn max_abs(&self) -> f64 {
        self.a.abs().max(self.b.abs())
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite()
    }
}

/// Player `A`'s power `γ·(B − A)`; player `B`'s power is its negation.
pub fn power(params: &ModelParams, s: State) -> f64 {
    params.gamma * (s.b - s.a)
}

/// One step of the recurrence.
///
/// Evaluated as the row-stochastic matrix product written in affine form,
/// `A' = A + αγ·(B − A)` and `B' = B − βγ·(B − A)`, with the products `αγ`
/// and `βγ` formed first. States with `A = B` are returned unchanged, and
/// `(α, β, γ)` and `(αγ, βγ, 1)` produce bit-identical steps.
#[inline]
pub fn step(params: &ModelParams, s: State) -> State {
    let gap = s.b - s.a;
    State {
        a: s.a + params.gain_a() * gap,
        b: s.b - params.gain_b() * gap,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Trajectory {
    pub params: ModelParams,
    pub states: Vec<State>,
    /// Index of the last stored state when the run stopped early because the
    /// divergence threshold was crossed.
    pub truncated_at: Option<usize>,
}

impl Trajectory {
    pub fn initial(&self) -> State {
        self.states[0]
    }

    pub fn last(&self) -> State {
        *self
            .states
            .last()
            .expect("trajectory holds at least the initial state")
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated_at.is_some()
    }
}

/// Iterates [`step`] up to `steps` times.
///
/// The run stops at the first `t` with `max(|A|, |B|) > divergence_threshold`;
/// that state is kept and `truncated_at = Some(t)`. A step that would produce a
/// non-finite value is never stored; the run is then truncated at the previous
/// index.
pub fn simulate(
    params: &ModelParams,
    initial: State,
    steps: usize,
    divergence_threshold: f64,
) -> Trajectory {
    let mut states = Vec::with_capacity(steps.saturating_add(1).min(1 << 20));
    states.push(initial);
    let mut truncated_at = None;
    if initial.max_abs() > divergence_threshold {
        truncated_at = Some(0);
    } else {
        let mut current = initial;
        for t in 1..=steps {
            let next = step(params, current);
            if !next.is_finite() {
                truncated_at = Some(t - 1);
                break;
            }
            states.push(next);
            if next.max_abs() > divergence_threshold {
                truncated_at = Some(t);
                break;
            }
            current = next;
        }
    }
    Trajectory {
        params: *params,
        states,
        truncated_at,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(alpha: f64, beta: f64, gamma: f64) -> ModelParams {
        ModelParams::new(alpha, beta, gamma).unwrap()
    }

    #[test]
    fn validation() {
        let ok = validate_params(1.0, 0.5, 1.0).unwrap();
        assert_eq!((ok.alpha(), ok.beta(), ok.gamma()), (1.0, 0.5, 1.0));
        assert_eq!(validate_params(0.0, 0.0, 1.0), Err(Error::DegenerateModel));
        assert_eq!(
            validate_params(1.0, 1.0, 0.0),
            Err(Error::GammaNotPositive(0.0))
        );
        assert_eq!(
            validate_params(1.0, 1.0, -2.0),
            Err(Error::GammaNotPositive(-2.0))
        );
        assert!(matches!(
            validate_params(f64::NAN, 1.0, 1.0),
            Err(Error::NonFiniteInput { name: "alpha", .. })
        ));
        assert!(matches!(
            validate_params(1.0, 1.0, f64::INFINITY),
            Err(Error::NonFiniteInput { name: "gamma", .. })
        ));
        // One zero sensitivity is allowed.
        assert!(validate_params(0.0, -3.0, 1.0).is_ok());
    }

    #[test]
    fn power_examples() {
        assert_eq!(power(&p(1.0, 1.0, 2.0), State::new(1.0, 4.0)), 6.0);
        assert_eq!(power(&p(0.3, -0.7, 1.7), State::new(2.5, 2.5)), 0.0);
        assert_eq!(power(&p(1.0, -1.0, 1.0), State::new(0.0, 1.0)), 1.0);
    }

    #[test]
    fn step_examples() {
        assert_eq!(
            step(&p(1.0, 1.0, 1.0), State::new(0.0, 2.0)),
            State::new(2.0, 0.0)
        );
        assert_eq!(
            step(&p(0.5, 0.5, 1.0), State::new(0.0, 10.0)),
            State::new(5.0, 5.0)
        );
        for params in [p(1.0, 1.0, 1.0), p(0.37, -1.9, 0.3), p(-2.0, 0.0, 3.0)] {
            assert_eq!(step(&params, State::new(5.0, 5.0)), State::new(5.0, 5.0));
        }
    }

    #[test]
    fn step_matches_matrix_product_and_power_form() {
        let params = p(0.37, -0.81, 1.3);
        let s = State::new(-2.25, 7.5);
        let (k, m) = (0.37 * 1.3, -0.81 * 1.3);
        let by_matrix = State::new((1.0 - k) * s.a + k * s.b, m * s.a + (1.0 - m) * s.b);
        let pw = power(&params, s);
        let by_power = State::new(s.a + 0.37 * pw, s.b + 0.81 * pw);
        let got = step(&params, s);
        for other in [by_matrix, by_power] {
            assert!((got.a - other.a).abs() < 1e-12);
            assert!((got.b - other.b).abs() < 1e-12);
        }
    }

    #[test]
    fn simulate_examples() {
        let tr = simulate(&p(1.0, 1.0, 1.0), State::new(0.0, 2.0), 4, 1e12);
        let want: Vec<State> = [(0.0, 2.0), (2.0, 0.0), (0.0, 2.0), (2.0, 0.0), (0.0, 2.0)]
            .iter()
            .map(|&(a, b)| State::new(a, b))
            .collect();
        assert_eq!(tr.states, want);
        assert!(!tr.is_truncated());

        let tr = simulate(&p(0.5, 0.5, 1.0), State::new(0.0, 10.0), 3, 1e12);
        assert_eq!(
            tr.states,
            vec![
                State::new(0.0, 10.0),
                State::new(5.0, 5.0),
                State::new(5.0, 5.0),
                State::new(5.0, 5.0)
            ]
        );

        let tr = simulate(&p(1.0, -1.0, 1.0), State::new(0.0, 1.0), 3, 1e12);
        assert_eq!(
            tr.states,
            vec![
                State::new(0.0, 1.0),
                State::new(1.0, 2.0),
                State::new(2.0, 3.0),
                State::new(3.0, 4.0)
            ]
        );
    }

    #[test]
    fn simulate_truncates_at_threshold() {
        let tr = simulate(&p(-0.5, -0.5, 1.0), State::new(0.0, 1.0), 100, 1e12);
        let t = tr.truncated_at.expect("lambda2 = 2 must diverge");
        assert_eq!(tr.len(), t + 1);
        assert!(tr.last().max_abs() > 1e12);
        assert!(tr.states[t - 1].max_abs() <= 1e12);
        assert!((39..=42).contains(&t), "t = {t}");
    }

    #[test]
    fn simulate_never_stores_non_finite_states() {
        let tr = simulate(
            &p(-50.0, -50.0, 3.0),
            State::new(0.0, 1.0),
            10_000,
            f64::INFINITY,
        );
        assert!(tr.is_truncated());
        assert!(tr.states.iter().all(State::is_finite));
    }

    #[test]
    fn simulate_initial_beyond_threshold() {
        let tr = simulate(&p(1.0, 1.0, 1.0), State::new(0.0, 10.0), 5, 1.0);
        assert_eq!(tr.len(), 1);
        assert_eq!(tr.truncated_at, Some(0));
    }

    #[test]
    fn rescaling_is_bit_identical() {
        let params = p(0.713, -0.291, 2.37);
        let a = simulate(&params, State::new(1.5, -3.25), 100, 1e12);
        let b = simulate(&params.rescaled(), State::new(1.5, -3.25), 100, 1e12);
        assert_eq!(a.states, b.states);
    }
}
