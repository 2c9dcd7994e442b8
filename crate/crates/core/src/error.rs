use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("parse error: {0}")]
    Parse(String),

    #[error("not associative at ({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
    #[error("no identity: element {unit} is not a two-sided unit (fails against {witness})")]
    NoIdentity { unit: usize, witness: usize },
    #[error("inverse not unique: element {element} has generalized inverses {first} and {second}")]
    InverseNotUnique {
        element: usize,
        first: usize,
        second: usize,
    },
    #[error("inverse missing: element {0} has no generalized inverse")]
    InverseMissing(usize),
    #[error("idempotents {0} and {1} do not commute")]
    IdempotentsDoNotCommute(usize, usize),
    #[error("table entry {value} at ({row},{col}) out of range for size {size}")]
    TableOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("induced table ill-defined at classes ({0},{1})")]
    InducedTableIllDefined(usize, usize),
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("subspace not preserved")]
    SubspaceNotPreserved,
    #[error("size cap exceeded: {what} needs {size} > cap {cap}")]
    SizeCap { what: String, size: u128, cap: u128 },
    #[error("not a left module: {0}")]
    NotLeftModule(String),
    #[error("module/monoid mismatch: {0}")]
    ModuleMismatch(String),
    #[error("not a right module: {0}")]
    NotRightModule(String),

    #[error("algebra invalid: {0}")]
    AlgebraInvalid(String),
    #[error("action invalid: {0}")]
    ActionInvalid(String),
    #[error("action not compatible")]
    NotCompatible,
    #[error("monoid is not E-unitary")]
    NotEUnitary,
    #[error("A not separable")]
    NotSeparable,
    #[error("induced multiplication ill-defined: {0}")]
    IllDefined(String),
    #[error("bimodule axioms fail: {0}")]
    BimoduleAxioms(String),
    #[error("partial action invalid: {0}")]
    PartialActionInvalid(String),

    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("enumeration cap exceeded: {0}")]
    EnumerationCap(String),
}
