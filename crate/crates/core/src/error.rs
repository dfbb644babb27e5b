use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma must be strictly positive (got {0})")]
    GammaNotPositive(f64),
    #[error("degenerate model: alpha and beta are both zero")]
    DegenerateModel,
    #[error("non-finite input: {name} = {value}")]
    NonFiniteInput { name: &'static str, value: f64 },
    #[error("system does not converge (lambda2 = {lambda2})")]
    NotConvergent { lambda2: f64 },
    #[error("system does not oscillate with period two (lambda2 = {lambda2})")]
    NotOscillatory { lambda2: f64 },
    #[error("initial state is an equilibrium; the orbit is a single point")]
    TrivialOrbit,
}
