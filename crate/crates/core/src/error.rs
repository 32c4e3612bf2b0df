use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator {index} is not a bijection on 0..{degree}")]
    NonBijective { index: usize, degree: usize },

    #[error("closure exceeds the cap of {cap} elements")]
    ClosureExceedsCap { cap: usize },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("group of order {order} exceeds the subgroup lattice cap {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },

    #[error("group of order {order} exceeds the cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("group is not abelian")]
    NotAbelian,

    #[error("group of order {0} is not a 2-group")]
    NotA2Group(usize),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("mismatch: {0}")]
    Mismatch(String),

    #[error("internal verification failed: {0}")]
    InternalVerificationFailed(String),

    #[error("{count} irreducibles exceed the brute-force limit of {limit}")]
    TooManyIrreducibles { count: usize, limit: usize },

    #[error("gcd({n}, |Z(G)| = {center}) is not 1")]
    GcdPreconditionViolated { n: u64, center: usize },

    #[error("character of degree {0} is not linear")]
    NonlinearCharacter(u64),

    #[error("index {index} exceeds the matrix dimension cap {cap}")]
    IndexCapExceeded { index: usize, cap: usize },

    #[error("family {tag}: parameter constraint violated: {reason}")]
    ParameterConstraintViolated { tag: String, reason: String },

    #[error("family {tag}: constructed group fails its postcondition: {reason}")]
    PostconditionFailed { tag: String, reason: String },

    #[error("group matches several families: {}", .0.join(", "))]
    AmbiguousFamily(Vec<String>),

    #[error("structural invariant violated: {0}")]
    InvariantViolated(String),

    #[error("parse error in {context}{}: {message}", location(.line, .column))]
    Parse {
        context: String,
        line: Option<usize>,
        column: Option<usize>,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn location(line: &Option<usize>, column: &Option<usize>) -> String {
    match (line, column) {
        (Some(l), Some(c)) => format!(" at line {l}, column {c}"),
        (Some(l), None) => format!(" at line {l}"),
        _ => String::new(),
    }
}

impl Error {
    /// True for every error that signals a size cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::ClosureExceedsCap { .. }
                | Error::LatticeCapExceeded { .. }
                | Error::CapExceeded { .. }
                | Error::TooManyIrreducibles { .. }
                | Error::IndexCapExceeded { .. }
        )
    }
}
