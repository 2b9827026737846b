use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("table entry {value} at row {row}, column {col} is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("table is not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("table has no two-sided identity element")]
    NoIdentity,
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("not a permutation of 0..{degree}: {perm:?}")]
    NotAPermutation { degree: usize, perm: Vec<usize> },
    #[error("group closure exceeded the bound of {bound} elements")]
    GroupTooLarge { bound: usize },
    #[error("subgroup is not closed: {a} * {b} = {product} is missing")]
    NotClosed {
        a: String,
        b: String,
        product: String,
    },
    #[error("subgroup does not contain the identity")]
    MissingIdentity,
    #[error("subgroup member set is empty")]
    EmptySubgroup,
    #[error("element index {0} is out of range")]
    ElementOutOfRange(usize),
    #[error("representative {element} does not lie in coset {coset}")]
    BadRepresentative { element: usize, coset: usize },
    #[error("operands live on different groups")]
    GroupMismatch,
    #[error("operands live on different coset spaces")]
    SpaceMismatch,
    #[error("operands are different kinds of measure")]
    KindMismatch,
    #[error("operands belong to different rho systems")]
    SystemMismatch,
    #[error("expected {expected} weights, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("rho must be strictly positive, got {value} on coset {coset}")]
    NonPositiveRho { coset: usize, value: f64 },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid input: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
