//! Stability classes, dominance archetypes and asymptotic fates.
//!
//! Every class boundary is decided on `λ₂` with a single tolerance `ε`:
//!
//! | `λ₂`                    | behavioral class            | spectral class      |
//! |-------------------------|-----------------------------|---------------------|
//! | `|λ₂ − 1| ≤ ε`          | `LinearlyDivergent`         | `MarginallyStable`  |
//! | `|λ₂ + 1| ≤ ε`          | `PeriodTwoOscillation`      | `MarginallyStable`  |
//! | `λ₂ > 1 + ε`            | `GeometricallyDivergent`    | `Unstable`          |
//! | `λ₂ < −1 − ε`           | `GeometricallyAlternating`  | `Unstable`          |
//! | otherwise (`|λ₂| < 1`)  | `Convergent`                | `MarginallyStable`  |
//!
//! `λ₁ = 1` for every parameter set, so the spectral class is never "stable"
//! in the strict sense; the behavioral class carries the finer distinction.

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::model::{step, ModelParams, State};

/// Default tolerance for all classification decisions.
pub const CLASSIFY_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpectralClass {
    MarginallyStable,
    Unstable,
}

impl SpectralClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SpectralClass::MarginallyStable => "marginally_stable",
            SpectralClass::Unstable => "unstable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BehavioralClass {
    Convergent,
    PeriodTwoOscillation,
    LinearlyDivergent,
    GeometricallyDivergent,
    GeometricallyAlternating,
}

impl BehavioralClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            BehavioralClass::Convergent => "convergent",
            BehavioralClass::PeriodTwoOscillation => "period_two",
            BehavioralClass::LinearlyDivergent => "linearly_divergent",
            BehavioralClass::GeometricallyDivergent => "geometrically_divergent",
            BehavioralClass::GeometricallyAlternating => "geometrically_alternating",
        }
    }

    pub fn spectral(&self) -> SpectralClass {
        match self {
            BehavioralClass::Convergent
            | BehavioralClass::PeriodTwoOscillation
            | BehavioralClass::LinearlyDivergent => SpectralClass::MarginallyStable,
            BehavioralClass::GeometricallyDivergent | BehavioralClass::GeometricallyAlternating => {
                SpectralClass::Unstable
            }
        }
    }

    fn from_lambda2(lambda2: f64, epsilon: f64) -> Self {
        if (lambda2 - 1.0).abs() <= epsilon {
            BehavioralClass::LinearlyDivergent
        } else if (lambda2 + 1.0).abs() <= epsilon {
            BehavioralClass::PeriodTwoOscillation
        } else if lambda2 > 1.0 {
            BehavioralClass::GeometricallyDivergent
        } else if lambda2 < -1.0 {
            BehavioralClass::GeometricallyAlternating
        } else {
            BehavioralClass::Convergent
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stance {
    Dominant,
    Submissive,
    Neutral,
}

impl Stance {
    fn of(sensitivity: f64, epsilon: f64) -> Self {
        if sensitivity > epsilon {
            Stance::Dominant
        } else if sensitivity < -epsilon {
            Stance::Submissive
        } else {
            Stance::Neutral
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Stance::Dominant => "dominant",
            Stance::Submissive => "submissive",
            Stance::Neutral => "neutral",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArchetypeCase {
    BothDominant,
    BothSubmissive,
    ADominantBSubmissive,
    BDominantASubmissive,
    MixedWithNeutral,
}

impl ArchetypeCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            ArchetypeCase::BothDominant => "both_dominant",
            ArchetypeCase::BothSubmissive => "both_submissive",
            ArchetypeCase::ADominantBSubmissive => "a_dominant_b_submissive",
            ArchetypeCase::BDominantASubmissive => "b_dominant_a_submissive",
            ArchetypeCase::MixedWithNeutral => "mixed_with_neutral",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Archetype {
    pub stance_a: Stance,
    pub stance_b: Stance,
    pub case_label: ArchetypeCase,
}

/// Long-run behavior of one player's affinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Limit {
    Finite(f64),
    PlusInfinity,
    MinusInfinity,
    /// Diverges in magnitude with the sign flipping every step.
    AlternatingPlusMinus,
    /// Bounded period-two orbit between the two values.
    Orbit(f64, f64),
}

impl Serialize for Limit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match *self {
            Limit::Finite(x) => serializer.serialize_f64(x),
            Limit::PlusInfinity => serializer.serialize_str("+inf"),
            Limit::MinusInfinity => serializer.serialize_str("-inf"),
            Limit::AlternatingPlusMinus => serializer.serialize_str("alt"),
            Limit::Orbit(x, y) => {
                let mut seq = serializer.serialize_seq(Some(2))?;
                seq.serialize_element(&x)?;
                seq.serialize_element(&y)?;
                seq.end()
            }
        }
    }
}

impl Limit {
    fn infinity(sign: f64) -> Self {
        if sign > 0.0 {
            Limit::PlusInfinity
        } else {
            Limit::MinusInfinity
        }
    }

    fn orbit(x: f64, y: f64) -> Self {
        if x == y {
            Limit::Finite(x)
        } else {
            Limit::Orbit(x, y)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fate {
    pub a_limit: Limit,
    pub b_limit: Limit,
    pub period: u8,
    pub orbit_points: Option<(State, State)>,
}

impl Serialize for Fate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let orbit = self
            .orbit_points
            .map(|(p1, p2)| [[p1.a, p1.b], [p2.a, p2.b]]);
        let mut st = serializer.serialize_struct("Fate", 4)?;
        st.serialize_field("a_limit", &self.a_limit)?;
        st.serialize_field("b_limit", &self.b_limit)?;
        st.serialize_field("period", &self.period)?;
        st.serialize_field("orbit", &orbit)?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassificationReport {
    pub params: ModelParams,
    pub lambda2: f64,
    pub spectral: SpectralClass,
    pub behavioral: BehavioralClass,
    pub archetype: Archetype,
    pub fate: Option<Fate>,
    /// The fixed point the trajectory settles on (convergent runs and
    /// equilibrium starts) or oscillates around (period-two runs).
    pub equilibrium: Option<State>,
}

impl Serialize for ClassificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ClassificationReport", 11)?;
        st.serialize_field("alpha", &self.params.alpha())?;
        st.serialize_field("beta", &self.params.beta())?;
        st.serialize_field("gamma", &self.params.gamma())?;
        st.serialize_field("lambda2", &self.lambda2)?;
        st.serialize_field("spectral_class", self.spectral.as_str())?;
        st.serialize_field("behavioral_class", self.behavioral.as_str())?;
        st.serialize_field("archetype", self.archetype.case_label.as_str())?;
        st.serialize_field("stance_a", self.archetype.stance_a.as_str())?;
        st.serialize_field("stance_b", self.archetype.stance_b.as_str())?;
        st.serialize_field("fate", &self.fate)?;
        st.serialize_field("equilibrium", &self.equilibrium)?;
        st.end()
    }
}

pub fn classify_stability(params: &ModelParams, epsilon: f64) -> (SpectralClass, BehavioralClass) {
    let behavioral = BehavioralClass::from_lambda2(params.lambda2(), epsilon);
    (behavioral.spectral(), behavioral)
}

pub fn classify_archetype(params: &ModelParams, epsilon: f64) -> Archetype {
    use Stance::*;
    let stance_a = Stance::of(params.alpha(), epsilon);
    let stance_b = Stance::of(params.beta(), epsilon);
    let case_label = match (stance_a, stance_b) {
        (Dominant, Dominant) => ArchetypeCase::BothDominant,
        (Submissive, Submissive) => ArchetypeCase::BothSubmissive,
        (Dominant, Submissive) => ArchetypeCase::ADominantBSubmissive,
        (Submissive, Dominant) => ArchetypeCase::BDominantASubmissive,
        _ => ArchetypeCase::MixedWithNeutral,
    };
    Archetype {
        stance_a,
        stance_b,
        case_label,
    }
}

/// The weighted mean `(βA₀ + αB₀)/(α + β)`, conserved up to scale by the
/// dynamics.
fn weighted_mean(params: &ModelParams, initial: State) -> f64 {
    let (alpha, beta) = (params.alpha(), params.beta());
    (beta * initial.a + alpha * initial.b) / (alpha + beta)
}

/// The equilibrium a convergent system settles on.
pub fn equilibrium_limit(params: &ModelParams, initial: State, epsilon: f64) -> Result<State> {
    let lambda2 = params.lambda2();
    if lambda2.abs() >= 1.0 - epsilon {
        return Err(Error::NotConvergent { lambda2 });
    }
    let x = weighted_mean(params, initial);
    Ok(State::new(x, x))
}

/// The two points a `λ₂ = −1` system alternates between, starting with the
/// initial state.
pub fn oscillation_points(
    params: &ModelParams,
    initial: State,
    epsilon: f64,
) -> Result<(State, State)> {
    let lambda2 = params.lambda2();
    if (lambda2 + 1.0).abs() > epsilon {
        return Err(Error::NotOscillatory { lambda2 });
    }
    if initial.gap().abs() <= epsilon {
        return Err(Error::TrivialOrbit);
    }
    let (alpha, beta) = (params.alpha(), params.beta());
    let sum = alpha + beta;
    let (a0, b0) = (initial.a, initial.b);
    let second = State::new(
        ((beta - alpha) * a0 + 2.0 * alpha * b0) / sum,
        ((alpha - beta) * b0 + 2.0 * beta * a0) / sum,
    );
    Ok((initial, second))
}

/// Sign of a value that is known to be non-zero in exact arithmetic.
fn strict_sign(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

pub fn asymptotic_fate(params: &ModelParams, initial: State, epsilon: f64) -> Fate {
    let gap = initial.gap();
    if gap.abs() <= epsilon {
        return Fate {
            a_limit: Limit::Finite(initial.a),
            b_limit: Limit::Finite(initial.a),
            period: 1,
            orbit_points: None,
        };
    }
    let (alpha, beta) = (params.alpha(), params.beta());
    // Zero-ness uses the stance dead-zone; directions use the exact sign.
    let alpha_zero = alpha.abs() <= epsilon && beta.abs() > epsilon;
    let beta_zero = beta.abs() <= epsilon && alpha.abs() > epsilon;
    let dir = strict_sign(gap);

    let (_, behavioral) = classify_stability(params, epsilon);
    match behavioral {
        BehavioralClass::Convergent => {
            let x = weighted_mean(params, initial);
            Fate {
                a_limit: Limit::Finite(x),
                b_limit: Limit::Finite(x),
                period: 1,
                orbit_points: None,
            }
        }
        BehavioralClass::PeriodTwoOscillation => {
            let (p1, p2) = oscillation_points(params, initial, epsilon)
                .expect("class and non-equilibrium start checked above");
            Fate {
                a_limit: Limit::orbit(p1.a, p2.a),
                b_limit: Limit::orbit(p1.b, p2.b),
                period: 2,
                orbit_points: Some((p1, p2)),
            }
        }
        BehavioralClass::LinearlyDivergent => {
            // α = −β, so a zero α can only come from tolerance; fall back to −β.
            let sens = if alpha != 0.0 {
                strict_sign(alpha)
            } else {
                -strict_sign(beta)
            };
            let limit = Limit::infinity(sens * dir);
            Fate {
                a_limit: limit,
                b_limit: limit,
                period: 1,
                orbit_points: None,
            }
        }
        BehavioralClass::GeometricallyDivergent => {
            let (a_limit, b_limit) = if alpha_zero {
                (Limit::Finite(initial.a), Limit::infinity(dir))
            } else if beta_zero {
                (Limit::infinity(-dir), Limit::Finite(initial.b))
            } else {
                (
                    Limit::infinity(strict_sign(alpha) * dir),
                    Limit::infinity(-strict_sign(beta) * dir),
                )
            };
            Fate {
                a_limit,
                b_limit,
                period: 1,
                orbit_points: None,
            }
        }
        BehavioralClass::GeometricallyAlternating => {
            let (a_limit, b_limit) = if alpha_zero {
                (Limit::Finite(initial.a), Limit::AlternatingPlusMinus)
            } else if beta_zero {
                (Limit::AlternatingPlusMinus, Limit::Finite(initial.b))
            } else {
                (Limit::AlternatingPlusMinus, Limit::AlternatingPlusMinus)
            };
            Fate {
                a_limit,
                b_limit,
                period: 2,
                orbit_points: None,
            }
        }
    }
}

/// Asymptotic sign of `(A(t), B(t))` for large `t` of the given parity.
///
/// Each component is `+1` or `−1` when that player diverges and `0` when it
/// stays bounded. For sign-alternating divergence the sign at even `t` is
/// `sign(α)·sign(A₀ − B₀)` for `A` and `sign(β)·sign(B₀ − A₀)` for `B`,
/// flipping at odd `t`.
pub fn divergence_signs_at(params: &ModelParams, initial: State, t: u64, epsilon: f64) -> (i8, i8) {
    let fate = asymptotic_fate(params, initial, epsilon);
    let parity = if t.is_multiple_of(2) { 1.0 } else { -1.0 };
    let dir = strict_sign(initial.gap());
    let of = |limit: Limit, sens: f64, gap_sign: f64| -> i8 {
        match limit {
            Limit::PlusInfinity => 1,
            Limit::MinusInfinity => -1,
            Limit::AlternatingPlusMinus => (sens * gap_sign * parity) as i8,
            Limit::Finite(_) | Limit::Orbit(..) => 0,
        }
    };
    (
        of(fate.a_limit, strict_sign(params.alpha()), -dir),
        of(fate.b_limit, strict_sign(params.beta()), dir),
    )
}

/// Full report; fate and equilibrium are filled only when `initial` is given.
pub fn classify(
    params: &ModelParams,
    initial: Option<State>,
    epsilon: f64,
) -> ClassificationReport {
    let (spectral, behavioral) = classify_stability(params, epsilon);
    let archetype = classify_archetype(params, epsilon);
    let fate = initial.map(|s| asymptotic_fate(params, s, epsilon));
    let equilibrium = initial.and_then(|s| {
        if s.gap().abs() <= epsilon {
            return Some(State::new(s.a, s.a));
        }
        match behavioral {
            BehavioralClass::Convergent => equilibrium_limit(params, s, epsilon).ok(),
            BehavioralClass::PeriodTwoOscillation => {
                let x = weighted_mean(params, s);
                Some(State::new(x, x))
            }
            _ => None,
        }
    });
    ClassificationReport {
        params: *params,
        lambda2: params.lambda2(),
        spectral,
        behavioral,
        archetype,
        fate,
        equilibrium,
    }
}

/// Checks that `p1 → p2 → p1` under [`step`] within `tol`.
pub fn is_period_two_orbit(params: &ModelParams, p1: State, p2: State, tol: f64) -> bool {
    let close = |x: State, y: State| (x.a - y.a).abs() <= tol && (x.b - y.b).abs() <= tol;
    close(step(params, p1), p2) && close(step(params, p2), p1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::simulate;

    const EPS: f64 = CLASSIFY_EPSILON;

    fn p(alpha: f64, beta: f64, gamma: f64) -> ModelParams {
        ModelParams::new(alpha, beta, gamma).unwrap()
    }

    #[test]
    fn stability_examples() {
        assert_eq!(
            classify_stability(&p(1.0, 1.0, 1.0), EPS),
            (
                SpectralClass::MarginallyStable,
                BehavioralClass::PeriodTwoOscillation
            )
        );
        assert_eq!(
            classify_stability(&p(1.0, -1.0, 1.0), EPS),
            (
                SpectralClass::MarginallyStable,
                BehavioralClass::LinearlyDivergent
            )
        );
        let params = p(-1.0, 0.5, 1.0);
        assert_eq!(params.lambda2(), 1.5);
        assert_eq!(
            classify_stability(&params, EPS),
            (
                SpectralClass::Unstable,
                BehavioralClass::GeometricallyDivergent
            )
        );
        assert_eq!(
            classify_stability(&p(1.5, 1.5, 1.0), EPS),
            (
                SpectralClass::Unstable,
                BehavioralClass::GeometricallyAlternating
            )
        );
        assert_eq!(
            classify_stability(&p(0.3, 0.4, 1.0), EPS),
            (SpectralClass::MarginallyStable, BehavioralClass::Convergent)
        );
    }

    #[test]
    fn stability_tolerance_band() {
        // λ₂ = 1 + 5e-10 sits inside the band.
        let params = p(-2.5e-10, -2.5e-10, 1.0);
        assert_eq!(
            classify_stability(&params, EPS).1,
            BehavioralClass::LinearlyDivergent
        );
        assert_eq!(
            classify_stability(&params, 1e-12).1,
            BehavioralClass::GeometricallyDivergent
        );
    }

    #[test]
    fn archetype_examples() {
        let a = classify_archetype(&p(1.0, 0.5, 1.0), EPS);
        assert_eq!(a.case_label, ArchetypeCase::BothDominant);
        let a = classify_archetype(&p(1.0, -0.5, 1.0), EPS);
        assert_eq!(a.case_label, ArchetypeCase::ADominantBSubmissive);
        let a = classify_archetype(&p(-1.0, 2.0, 1.0), EPS);
        assert_eq!(a.case_label, ArchetypeCase::BDominantASubmissive);
        let a = classify_archetype(&p(-1.0, -2.0, 1.0), EPS);
        assert_eq!(a.case_label, ArchetypeCase::BothSubmissive);
        let a = classify_archetype(&p(0.0, 1.0, 1.0), EPS);
        assert_eq!(
            (a.stance_a, a.stance_b, a.case_label),
            (
                Stance::Neutral,
                Stance::Dominant,
                ArchetypeCase::MixedWithNeutral
            )
        );
        let a = classify_archetype(&p(1e-10, 1.0, 1.0), EPS);
        assert_eq!(a.stance_a, Stance::Neutral);
    }

    #[test]
    fn equilibrium_examples() {
        let eq = equilibrium_limit(&p(0.5, 0.5, 1.0), State::new(0.0, 10.0), EPS).unwrap();
        assert_eq!(eq, State::new(5.0, 5.0));
        let tr = simulate(&p(0.5, 0.5, 1.0), State::new(0.0, 10.0), 100, 1e12);
        assert_eq!(tr.last(), eq);

        let eq = equilibrium_limit(&p(1.0, 0.5, 1.0), State::new(3.0, 3.0), EPS).unwrap();
        assert_eq!(eq, State::new(3.0, 3.0));

        let params = p(1.5, 0.25, 1.0);
        assert_eq!(params.lambda2(), -0.75);
        let eq = equilibrium_limit(&params, State::new(0.0, 7.0), EPS).unwrap();
        assert!((eq.a - 6.0).abs() < 1e-15 && (eq.b - 6.0).abs() < 1e-15);
        let last = simulate(&params, State::new(0.0, 7.0), 200, 1e12).last();
        assert!((last.a - 6.0).abs() < 1e-12 && (last.b - 6.0).abs() < 1e-12);
    }

    #[test]
    fn equilibrium_rejects_non_convergent() {
        for params in [p(1.0, 1.0, 1.0), p(1.0, -1.0, 1.0), p(-1.0, -1.0, 1.0)] {
            assert!(matches!(
                equilibrium_limit(&params, State::new(0.0, 1.0), EPS),
                Err(Error::NotConvergent { .. })
            ));
        }
    }

    #[test]
    fn oscillation_examples() {
        let params = p(1.0, 1.0, 1.0);
        let (p1, p2) = oscillation_points(&params, State::new(0.0, 2.0), EPS).unwrap();
        assert_eq!((p1, p2), (State::new(0.0, 2.0), State::new(2.0, 0.0)));
        assert!(is_period_two_orbit(&params, p1, p2, 1e-9));
        assert_eq!(step(&params, State::new(1.0, 1.0)), State::new(1.0, 1.0));

        let params = p(1.5, 0.5, 1.0);
        let (p1, p2) = oscillation_points(&params, State::new(0.0, 4.0), EPS).unwrap();
        assert_eq!((p1, p2), (State::new(0.0, 4.0), State::new(6.0, 2.0)));
        let once = step(&params, p1);
        assert_eq!(once, p2);
        assert_eq!(step(&params, once), p1);

        assert_eq!(
            oscillation_points(&p(1.0, 1.0, 1.0), State::new(4.0, 4.0), EPS),
            Err(Error::TrivialOrbit)
        );
        assert!(matches!(
            oscillation_points(&p(0.5, 0.5, 1.0), State::new(0.0, 1.0), EPS),
            Err(Error::NotOscillatory { .. })
        ));
    }

    #[test]
    fn fate_examples() {
        let f = asymptotic_fate(&p(1.0, -1.0, 1.0), State::new(0.0, 1.0), EPS);
        assert_eq!(
            (f.a_limit, f.b_limit),
            (Limit::PlusInfinity, Limit::PlusInfinity)
        );
        let f = asymptotic_fate(&p(1.0, -1.0, 1.0), State::new(1.0, 0.0), EPS);
        assert_eq!(
            (f.a_limit, f.b_limit),
            (Limit::MinusInfinity, Limit::MinusInfinity)
        );
        let f = asymptotic_fate(&p(-0.5, -0.5, 1.0), State::new(0.0, 1.0), EPS);
        assert_eq!(
            (f.a_limit, f.b_limit),
            (Limit::MinusInfinity, Limit::PlusInfinity)
        );
        let f = asymptotic_fate(&p(0.0, 3.0, 1.0), State::new(0.0, 1.0), EPS);
        assert_eq!(
            (f.a_limit, f.b_limit, f.period),
            (Limit::Finite(0.0), Limit::AlternatingPlusMinus, 2)
        );
        let f = asymptotic_fate(&p(0.0, -3.0, 1.0), State::new(0.0, 1.0), EPS);
        assert_eq!(
            (f.a_limit, f.b_limit),
            (Limit::Finite(0.0), Limit::PlusInfinity)
        );
        let f = asymptotic_fate(&p(-3.0, 0.0, 1.0), State::new(0.0, 1.0), EPS);
        assert_eq!(
            (f.a_limit, f.b_limit),
            (Limit::MinusInfinity, Limit::Finite(1.0))
        );
    }

    #[test]
    fn fate_equal_start_is_fixed_point_for_every_class() {
        for params in [
            p(1.0, -1.0, 1.0),
            p(-0.5, -0.5, 1.0),
            p(2.0, 2.0, 1.0),
            p(1.0, 1.0, 1.0),
        ] {
            let f = asymptotic_fate(&params, State::new(2.5, 2.5), EPS);
            assert_eq!(f.a_limit, Limit::Finite(2.5));
            assert_eq!(f.b_limit, Limit::Finite(2.5));
            assert_eq!(f.period, 1);
        }
    }

    #[test]
    fn fate_period_two_with_silent_player() {
        // α = 0 keeps A fixed while B flips across it.
        let params = p(0.0, 2.0, 1.0);
        let f = asymptotic_fate(&params, State::new(1.0, 3.0), EPS);
        assert_eq!(f.a_limit, Limit::Finite(1.0));
        assert_eq!(f.b_limit, Limit::Orbit(3.0, -1.0));
        assert_eq!(f.period, 2);
    }

    #[test]
    fn alternating_signs_follow_parity() {
        let params = p(1.5, 1.5, 1.0);
        let s0 = State::new(0.0, 1.0);
        assert_eq!(divergence_signs_at(&params, s0, 40, EPS), (-1, 1));
        assert_eq!(divergence_signs_at(&params, s0, 41, EPS), (1, -1));
        let tr = simulate(&params, s0, 1000, 1e9);
        let t = tr.truncated_at.unwrap();
        let last = tr.last();
        let want = divergence_signs_at(&params, s0, t as u64, EPS);
        assert_eq!((last.a.signum() as i8, last.b.signum() as i8), want);
    }

    #[test]
    fn classify_examples() {
        let r = classify(&p(1.0, 0.5, 1.0), None, EPS);
        assert_eq!(r.lambda2, -0.5);
        assert_eq!(r.spectral, SpectralClass::MarginallyStable);
        assert_eq!(r.behavioral, BehavioralClass::Convergent);
        assert_eq!(r.archetype.case_label, ArchetypeCase::BothDominant);
        assert!(r.fate.is_none() && r.equilibrium.is_none());

        let r = classify(&p(1.0, 1.0, 1.0), Some(State::new(0.0, 2.0)), EPS);
        assert_eq!(r.behavioral, BehavioralClass::PeriodTwoOscillation);
        let fate = r.fate.unwrap();
        assert_eq!(
            fate.orbit_points,
            Some((State::new(0.0, 2.0), State::new(2.0, 0.0)))
        );
        assert_eq!(r.equilibrium, Some(State::new(1.0, 1.0)));
        let tr = simulate(&p(1.0, 1.0, 1.0), State::new(0.0, 2.0), 4, 1e12);
        assert_eq!(tr.states[1], State::new(2.0, 0.0));
        assert_eq!(tr.states[4], State::new(0.0, 2.0));

        assert_eq!(
            crate::model::validate_params(0.0, 0.0, 1.0).map(|p| classify(&p, None, EPS)),
            Err(Error::DegenerateModel)
        );
    }

    #[test]
    fn report_json_shape() {
        let r = classify(&p(1.0, 1.0, 1.0), Some(State::new(0.0, 2.0)), EPS);
        let v = serde_json::to_value(r).unwrap();
        assert_eq!(v["behavioral_class"], "period_two");
        assert_eq!(
            v["fate"]["orbit"],
            serde_json::json!([[0.0, 2.0], [2.0, 0.0]])
        );
        assert_eq!(v["fate"]["a_limit"], serde_json::json!([0.0, 2.0]));

        let r = classify(&p(1.5, 1.5, 1.0), Some(State::new(0.0, 1.0)), EPS);
        let v = serde_json::to_value(r).unwrap();
        assert_eq!(v["fate"]["a_limit"], "alt");
        assert!(v["equilibrium"].is_null());

        let r = classify(&p(1.0, -1.0, 1.0), Some(State::new(1.0, 0.0)), EPS);
        let v = serde_json::to_value(r).unwrap();
        assert_eq!(v["fate"]["b_limit"], "-inf");
    }
}
