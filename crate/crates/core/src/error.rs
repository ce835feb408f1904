use thiserror::Error;

use crate::ComplexValue;

/// Errors raised by the numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma pole at non-positive integer {0}")]
    Pole(ComplexValue),
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),
    #[error("series diverges for this argument")]
    DivergentInput,
    #[error("series did not converge within {0} terms")]
    NoConvergence(usize),
    #[error("numerator gamma hits a pole at term {0}")]
    NumeratorPole(usize),
    #[error("left and right pole families collide: {0}")]
    PoleCollision(String),
    #[error("no vertical line separates the pole families (left edge {left}, right edge {right})")]
    NoSeparatingLine { left: f64, right: f64 },
    #[error("contour integrand does not decay: {0}")]
    NoDecay(String),
    #[error("contour quadrature did not converge after {halvings} halvings (last change {change:e})")]
    NotConverged { halvings: u32, change: f64 },
    #[error("Meijer G argument must be non-zero")]
    ZeroArgument,
    #[error("imaginary residue {0:e} exceeds tolerance for a real-valued G")]
    ImaginaryResidue(f64),
    #[error("theta sequence exceeds its declared bound at k = {0}")]
    UnboundedTheta(usize),
    #[error("tail fit unstable: residual {residual:e} vs leading term {leading:e}")]
    FitUnstable { residual: f64, leading: f64 },
    #[error("quadrature truncation exceeded tolerance: tail bound {0:e}")]
    Truncation(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
