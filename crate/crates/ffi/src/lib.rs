//! C ABI for `powerdyn`.
//!
//! Heap objects (`PdModel`, `PdTrajectory`) are opaque handles created by a
//! `*_new`/`pd_simulate` call and released with the matching `*_free`. Every
//! fallible call returns a [`PdStatus`] and writes its result through an out
//! pointer; out pointers are left untouched on failure. Panics never cross the
//! boundary: they are reported as [`PdStatus::Panic`].
//!
//! The header `include/powerdyn.h` is regenerated by `build.rs`.

use std::ffi::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use powerdyn::{
    classifier, model, spectral, ArchetypeCase, BehavioralClass, Error, Limit, ModelParams,
    SpectralClass, Stance, State, Trajectory,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdStatus {
    Ok = 0,
    NullPointer = 1,
    GammaNotPositive = 2,
    DegenerateModel = 3,
    NonFiniteInput = 4,
    NotConvergent = 5,
    NotOscillatory = 6,
    TrivialOrbit = 7,
    InvalidArgument = 8,
    IndexOutOfRange = 9,
    Panic = 10,
}

impl From<Error> for PdStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::GammaNotPositive(_) => PdStatus::GammaNotPositive,
            Error::DegenerateModel => PdStatus::DegenerateModel,
            Error::NonFiniteInput { .. } => PdStatus::NonFiniteInput,
            Error::NotConvergent { .. } => PdStatus::NotConvergent,
            Error::NotOscillatory { .. } => PdStatus::NotOscillatory,
            Error::TrivialOrbit => PdStatus::TrivialOrbit,
        }
    }
}

/// Opaque model handle.
pub struct PdModel {
    params: ModelParams,
}

/// Opaque trajectory handle.
pub struct PdTrajectory {
    inner: Trajectory,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdState {
    pub a: f64,
    pub b: f64,
}

impl From<State> for PdState {
    fn from(s: State) -> Self {
        PdState { a: s.a, b: s.b }
    }
}

impl From<PdState> for State {
    fn from(s: PdState) -> Self {
        State::new(s.a, s.b)
    }
}

/// Row-major 2x2 matrix.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdMat2 {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
}

impl From<spectral::Mat2> for PdMat2 {
    fn from(m: spectral::Mat2) -> Self {
        PdMat2 {
            m11: m.m11,
            m12: m.m12,
            m21: m.m21,
            m22: m.m22,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdSpectralClass {
    MarginallyStable = 0,
    Unstable = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdBehavioralClass {
    Convergent = 0,
    PeriodTwo = 1,
    LinearlyDivergent = 2,
    GeometricallyDivergent = 3,
    GeometricallyAlternating = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdStance {
    Dominant = 0,
    Submissive = 1,
    Neutral = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdArchetype {
    BothDominant = 0,
    BothSubmissive = 1,
    ADominantBSubmissive = 2,
    BDominantASubmissive = 3,
    MixedWithNeutral = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdLimitKind {
    Finite = 0,
    PlusInfinity = 1,
    MinusInfinity = 2,
    AlternatingPlusMinus = 3,
    /// Period-two orbit between `value` and `value2`.
    Orbit = 4,
}

/// One player's limit. `value` is set for `FINITE` and `ORBIT`, `value2`
/// only for `ORBIT`; unused fields are zero.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdLimit {
    pub kind: PdLimitKind,
    pub value: f64,
    pub value2: f64,
}

impl From<Limit> for PdLimit {
    fn from(l: Limit) -> Self {
        let (kind, value, value2) = match l {
            Limit::Finite(x) => (PdLimitKind::Finite, x, 0.0),
            Limit::PlusInfinity => (PdLimitKind::PlusInfinity, 0.0, 0.0),
            Limit::MinusInfinity => (PdLimitKind::MinusInfinity, 0.0, 0.0),
            Limit::AlternatingPlusMinus => (PdLimitKind::AlternatingPlusMinus, 0.0, 0.0),
            Limit::Orbit(x, y) => (PdLimitKind::Orbit, x, y),
        };
        PdLimit {
            kind,
            value,
            value2,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdFate {
    pub a_limit: PdLimit,
    pub b_limit: PdLimit,
    pub period: u8,
    pub has_orbit: bool,
    pub orbit_first: PdState,
    pub orbit_second: PdState,
}

impl From<classifier::Fate> for PdFate {
    fn from(f: classifier::Fate) -> Self {
        let zero = PdState { a: 0.0, b: 0.0 };
        let (first, second) = f
            .orbit_points
            .map(|(p, q)| (p.into(), q.into()))
            .unwrap_or((zero, zero));
        PdFate {
            a_limit: f.a_limit.into(),
            b_limit: f.b_limit.into(),
            period: f.period,
            has_orbit: f.orbit_points.is_some(),
            orbit_first: first,
            orbit_second: second,
        }
    }
}

/// Flattened classification report. `fate` and `equilibrium` are meaningful
/// only when the matching `has_*` flag is set.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdReport {
    pub lambda2: f64,
    pub spectral: PdSpectralClass,
    pub behavioral: PdBehavioralClass,
    pub archetype: PdArchetype,
    pub stance_a: PdStance,
    pub stance_b: PdStance,
    pub has_fate: bool,
    pub fate: PdFate,
    pub has_equilibrium: bool,
    pub equilibrium: PdState,
}

fn stance(s: Stance) -> PdStance {
    match s {
        Stance::Dominant => PdStance::Dominant,
        Stance::Submissive => PdStance::Submissive,
        Stance::Neutral => PdStance::Neutral,
    }
}

impl From<classifier::ClassificationReport> for PdReport {
    fn from(r: classifier::ClassificationReport) -> Self {
        let spectral = match r.spectral {
            SpectralClass::MarginallyStable => PdSpectralClass::MarginallyStable,
            SpectralClass::Unstable => PdSpectralClass::Unstable,
        };
        let behavioral = match r.behavioral {
            BehavioralClass::Convergent => PdBehavioralClass::Convergent,
            BehavioralClass::PeriodTwoOscillation => PdBehavioralClass::PeriodTwo,
            BehavioralClass::LinearlyDivergent => PdBehavioralClass::LinearlyDivergent,
            BehavioralClass::GeometricallyDivergent => PdBehavioralClass::GeometricallyDivergent,
            BehavioralClass::GeometricallyAlternating => {
                PdBehavioralClass::GeometricallyAlternating
            }
        };
        let archetype = match r.archetype.case_label {
            ArchetypeCase::BothDominant => PdArchetype::BothDominant,
            ArchetypeCase::BothSubmissive => PdArchetype::BothSubmissive,
            ArchetypeCase::ADominantBSubmissive => PdArchetype::ADominantBSubmissive,
            ArchetypeCase::BDominantASubmissive => PdArchetype::BDominantASubmissive,
            ArchetypeCase::MixedWithNeutral => PdArchetype::MixedWithNeutral,
        };
        let empty_fate = PdFate {
            a_limit: Limit::Finite(0.0).into(),
            b_limit: Limit::Finite(0.0).into(),
            period: 0,
            has_orbit: false,
            orbit_first: PdState { a: 0.0, b: 0.0 },
            orbit_second: PdState { a: 0.0, b: 0.0 },
        };
        PdReport {
            lambda2: r.lambda2,
            spectral,
            behavioral,
            archetype,
            stance_a: stance(r.archetype.stance_a),
            stance_b: stance(r.archetype.stance_b),
            has_fate: r.fate.is_some(),
            fate: r.fate.map(PdFate::from).unwrap_or(empty_fate),
            has_equilibrium: r.equilibrium.is_some(),
            equilibrium: r
                .equilibrium
                .map(PdState::from)
                .unwrap_or(PdState { a: 0.0, b: 0.0 }),
        }
    }
}

fn guard(f: impl FnOnce() -> PdStatus) -> PdStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(PdStatus::Panic)
}

/// Borrows the model behind a handle.
///
/// # Safety
/// `model` must be null or a live pointer from [`pd_model_new`].
unsafe fn model_ref<'a>(model: *const PdModel) -> Option<&'a ModelParams> {
    model.as_ref().map(|m| &m.params)
}

/// Writes `value` through `out`, or reports a null out pointer.
///
/// # Safety
/// `out` must be null or valid for a write of `T`.
unsafe fn put<T>(out: *mut T, value: T) -> PdStatus {
    if out.is_null() {
        return PdStatus::NullPointer;
    }
    out.write(value);
    PdStatus::Ok
}

/// Static, NUL-terminated description of a status code.
#[no_mangle]
pub extern "C" fn pd_status_message(status: PdStatus) -> *const c_char {
    let msg: &'static [u8] = match status {
        PdStatus::Ok => b"ok\0",
        PdStatus::NullPointer => b"null pointer argument\0",
        PdStatus::GammaNotPositive => b"gamma must be strictly positive\0",
        PdStatus::DegenerateModel => b"degenerate model: alpha and beta are both zero\0",
        PdStatus::NonFiniteInput => b"non-finite input\0",
        PdStatus::NotConvergent => b"system does not converge\0",
        PdStatus::NotOscillatory => b"system does not oscillate with period two\0",
        PdStatus::TrivialOrbit => b"initial state is an equilibrium\0",
        PdStatus::InvalidArgument => b"invalid argument\0",
        PdStatus::IndexOutOfRange => b"index out of range\0",
        PdStatus::Panic => b"internal panic\0",
    };
    msg.as_ptr().cast()
}

/// Validates `(alpha, beta, gamma)` and allocates a model handle.
///
/// # Safety
/// `out` must be valid for writing one pointer. Release the handle with
/// [`pd_model_free`].
#[no_mangle]
pub unsafe extern "C" fn pd_model_new(
    alpha: f64,
    beta: f64,
    gamma: f64,
    out: *mut *mut PdModel,
) -> PdStatus {
    guard(|| {
        if out.is_null() {
            return PdStatus::NullPointer;
        }
        match ModelParams::new(alpha, beta, gamma) {
            Ok(params) => put(out, Box::into_raw(Box::new(PdModel { params }))),
            Err(e) => e.into(),
        }
    })
}

/// # Safety
/// `model` must be null or a pointer from [`pd_model_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pd_model_free(model: *mut PdModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

/// # Safety
/// `model` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_model_lambda2(model: *const PdModel, out: *mut f64) -> PdStatus {
    guard(|| match model_ref(model) {
        Some(p) => put(out, p.lambda2()),
        None => PdStatus::NullPointer,
    })
}

/// # Safety
/// `model` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_power(
    model: *const PdModel,
    state: PdState,
    out: *mut f64,
) -> PdStatus {
    guard(|| match model_ref(model) {
        Some(p) => put(out, model::power(p, state.into())),
        None => PdStatus::NullPointer,
    })
}

/// # Safety
/// `model` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_step(
    model: *const PdModel,
    state: PdState,
    out: *mut PdState,
) -> PdStatus {
    guard(|| match model_ref(model) {
        Some(p) => put(out, model::step(p, state.into()).into()),
        None => PdStatus::NullPointer,
    })
}

/// Closed-form state after `t` steps.
///
/// # Safety
/// `model` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_state_at(
    model: *const PdModel,
    initial: PdState,
    t: u64,
    out: *mut PdState,
) -> PdStatus {
    guard(|| match model_ref(model) {
        Some(p) => put(out, spectral::state_at(p, initial.into(), t).into()),
        None => PdStatus::NullPointer,
    })
}

/// # Safety
/// `model` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_transition_matrix(model: *const PdModel, out: *mut PdMat2) -> PdStatus {
    guard(|| match model_ref(model) {
        Some(p) => put(out, spectral::transition_matrix(p).into()),
        None => PdStatus::NullPointer,
    })
}

/// # Safety
/// `model` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_power_closed(
    model: *const PdModel,
    t: u64,
    out: *mut PdMat2,
) -> PdStatus {
    guard(|| match model_ref(model) {
        Some(p) => put(out, spectral::matrix_power_closed(p, t).into()),
        None => PdStatus::NullPointer,
    })
}

/// # Safety
/// `model` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_matrix_power_iterative(
    model: *const PdModel,
    t: u64,
    out: *mut PdMat2,
) -> PdStatus {
    guard(|| match model_ref(model) {
        Some(p) => put(out, spectral::matrix_power_iterative(p, t).into()),
        None => PdStatus::NullPointer,
    })
}

/// Full classification. `initial` may be null, in which case the report has
/// no fate and no equilibrium.
///
/// # Safety
/// `model` must be a live handle; `initial` null or readable; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pd_classify(
    model: *const PdModel,
    initial: *const PdState,
    epsilon: f64,
    out: *mut PdReport,
) -> PdStatus {
    guard(|| {
        let Some(p) = model_ref(model) else {
            return PdStatus::NullPointer;
        };
        if !(epsilon > 0.0 && epsilon.is_finite()) {
            return PdStatus::InvalidArgument;
        }
        let initial = initial.as_ref().map(|s| State::from(*s));
        if initial.is_some_and(|s| !s.is_finite()) {
            return PdStatus::NonFiniteInput;
        }
        put(out, classifier::classify(p, initial, epsilon).into())
    })
}

/// # Safety
/// `model` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_equilibrium_limit(
    model: *const PdModel,
    initial: PdState,
    epsilon: f64,
    out: *mut PdState,
) -> PdStatus {
    guard(|| {
        let Some(p) = model_ref(model) else {
            return PdStatus::NullPointer;
        };
        match classifier::equilibrium_limit(p, initial.into(), epsilon) {
            Ok(s) => put(out, s.into()),
            Err(e) => e.into(),
        }
    })
}

/// # Safety
/// `model` must be a live handle; `first` and `second` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_oscillation_points(
    model: *const PdModel,
    initial: PdState,
    epsilon: f64,
    first: *mut PdState,
    second: *mut PdState,
) -> PdStatus {
    guard(|| {
        let Some(p) = model_ref(model) else {
            return PdStatus::NullPointer;
        };
        if first.is_null() || second.is_null() {
            return PdStatus::NullPointer;
        }
        match classifier::oscillation_points(p, initial.into(), epsilon) {
            Ok((p1, p2)) => {
                first.write(p1.into());
                second.write(p2.into());
                PdStatus::Ok
            }
            Err(e) => e.into(),
        }
    })
}

/// Runs the forward simulation and allocates a trajectory handle.
///
/// # Safety
/// `model` must be a live handle; `out` must be writable. Release the result
/// with [`pd_trajectory_free`].
#[no_mangle]
pub unsafe extern "C" fn pd_simulate(
    model: *const PdModel,
    initial: PdState,
    steps: usize,
    divergence_threshold: f64,
    out: *mut *mut PdTrajectory,
) -> PdStatus {
    guard(|| {
        let Some(p) = model_ref(model) else {
            return PdStatus::NullPointer;
        };
        if out.is_null() {
            return PdStatus::NullPointer;
        }
        let initial = State::from(initial);
        if !initial.is_finite() {
            return PdStatus::NonFiniteInput;
        }
        if divergence_threshold.is_nan() || divergence_threshold <= 0.0 {
            return PdStatus::InvalidArgument;
        }
        let inner = model::simulate(p, initial, steps, divergence_threshold);
        put(out, Box::into_raw(Box::new(PdTrajectory { inner })))
    })
}

/// Number of stored states (at least one); zero for a null handle.
///
/// # Safety
/// `traj` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pd_trajectory_len(traj: *const PdTrajectory) -> usize {
    traj.as_ref().map_or(0, |t| t.inner.len())
}

/// # Safety
/// `traj` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_trajectory_get(
    traj: *const PdTrajectory,
    index: usize,
    out: *mut PdState,
) -> PdStatus {
    guard(|| {
        let Some(t) = traj.as_ref() else {
            return PdStatus::NullPointer;
        };
        match t.inner.states.get(index) {
            Some(s) => put(out, (*s).into()),
            None => PdStatus::IndexOutOfRange,
        }
    })
}

/// Writes the truncation index, or `-1` when the run completed all steps.
///
/// # Safety
/// `traj` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pd_trajectory_truncated_at(
    traj: *const PdTrajectory,
    out: *mut i64,
) -> PdStatus {
    guard(|| {
        let Some(t) = traj.as_ref() else {
            return PdStatus::NullPointer;
        };
        put(out, t.inner.truncated_at.map_or(-1, |i| i as i64))
    })
}

/// # Safety
/// `traj` must be null or a pointer from [`pd_simulate`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pd_trajectory_free(traj: *mut PdTrajectory) {
    if !traj.is_null() {
        drop(Box::from_raw(traj));
    }
}
