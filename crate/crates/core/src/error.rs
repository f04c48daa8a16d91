use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Clone, Debug, PartialEq, Error)]
pub enum Error {
    #[error("biquaternion is a zero divisor")]
    ZeroDivisor,
    #[error("not a unit imaginary quaternion")]
    NotUnitImaginary,
    #[error("field is singular at the evaluation point")]
    SingularField,
    #[error("complex square root hit the branch cut")]
    BranchFailure,
    #[error("Moebius map is singular at this fibre point")]
    SingularMoebius,
    #[error("degenerate map: ad - bc = 0")]
    DegenerateMap,
    #[error("biquaternion is not normalized: |phi phibar - 1| = {0:e}")]
    NotNormalized(f64),
    #[error("denominator of the Moebius map is not invertible")]
    SingularPoint,
    #[error("coefficients do not admit the chi/psi factorization")]
    DegenerateFactorization,
    #[error("point lies outside the z4 = 1 chart")]
    ChartMiss,
    #[error("transition function is singular at the origin")]
    OriginSingular,
    #[error("degenerate line embedding")]
    DegenerateEmbedding,
    #[error("alpha-plane and beta-plane do not intersect")]
    NoIntersection,
    #[error("chart is singular: complex structures coincide")]
    ChartSingular,
    #[error("complex structure sits at a pole of the chart")]
    PoleChart,
    #[error("direction is not null")]
    NonNullDirection,
    #[error("connection is singular on the integration path")]
    SingularOnPath,
    #[error("not a solution: residual {0:e}")]
    NotASolution(f64),
    #[error("homogeneous coordinates are all zero")]
    ZeroHomogeneous,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
