use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("subset {0:?} is not strictly increasing inside 1..={1}")]
    BadSubset(Vec<usize>, usize),
    #[error("partition {0:?} does not fit the {1}x{2} box")]
    BoxViolation(Vec<usize>, usize, usize),
    #[error("partition {0:?} is not weakly decreasing")]
    BadPartition(Vec<usize>),
    #[error("conditions live on different Grassmannians")]
    RingMismatch,
    #[error("at least {0} classes are required")]
    TooFewClasses(usize),
    #[error("at least 3 marked points are required, got {0}")]
    TooFewPoints(usize),
    #[error("point {0}: two weights coincide")]
    Tie(String),
    #[error("point {0}: weights must span less than 1")]
    Window(String),
    #[error("point {0}: weights are not in the normalized order alpha < beta_1 < ... < beta_n")]
    Unnormalized(String),
    #[error("point {0}: expected {1} weights, got {2}")]
    Arity(String, usize, usize),
    #[error("point {0}: weights are not sorted as required")]
    Order(String),
    #[error("sum of weights is {0}, expected an integer")]
    NonIntegerSum(String),
    #[error("parabolic degree is {0}, expected 0")]
    NonzeroSum(String),
    #[error("degrees sum to {0}, expected {1}")]
    DegreeSum(String, String),
    #[error("no point has alpha < beta_2, so theta cannot map L into V")]
    NoPoles,
    #[error("degree list has length {0}, expected {1}")]
    DegreeCount(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
