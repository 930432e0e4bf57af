use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid variable list: {0}")]
    InvalidVarList(String),

    #[error("monomial has {got} exponents but the variable list has {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("polynomial is zero after normalization")]
    ZeroPolynomial,

    #[error("generic parameter collides with another term on monomial {monomial}")]
    ParameterCollision { monomial: String },

    #[error("syntax error at offset {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("unknown variable `{name}` at offset {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("negative exponent at offset {position}")]
    NegativeExponent { position: usize },

    #[error(
        "not quasihomogeneous: {first} has degree {first_degree} but {second} has degree {second_degree}"
    )]
    NotQuasihomogeneous {
        first: String,
        first_degree: u64,
        second: String,
        second_degree: u64,
    },

    #[error("no positive weight vector makes the polynomial quasihomogeneous: {0}")]
    NoPositiveSolution(String),

    #[error("weights are not unique (solution space has dimension {}); basis: {}; pass explicit weights", .basis.len(), render_basis(.basis))]
    NonUniqueWeights { basis: Vec<Vec<String>> },

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("non-normal input: q_{variable} = {q} does not divide the exponent of {variable} in {witness}")]
    NonNormalInput {
        variable: String,
        q: u64,
        witness: String,
    },

    #[error("linear cone reduction: {weight} is not divisible by s = {divisor} at {variable}")]
    InexactConeDivision {
        variable: String,
        weight: u64,
        divisor: u64,
    },

    #[error("failing pair {{{i}, {j}}} has q_{i} = {qi} > 1 and q_{j} = {qj} > 1")]
    RemarkViolation {
        i: String,
        j: String,
        qi: u64,
        qj: u64,
    },

    #[error("invalid boundary: {0}")]
    InvalidBoundary(String),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("line {line}: unknown stratum name `{name}`")]
    UnknownStratumName { line: usize, name: String },

    #[error("line {line}: duplicate record id `{id}`")]
    DuplicateId { line: usize, id: String },

    #[error("inconsistent family `{family}`: {reason}")]
    InconsistentFamily { family: String, reason: String },

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

fn render_basis(basis: &[Vec<String>]) -> String {
    basis
        .iter()
        .map(|v| format!("({})", v.join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}
