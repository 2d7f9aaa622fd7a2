use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("cover relation has a cycle through `{0}`")]
    CycleDetected(String),
    #[error("not a lattice: `{a}` and `{b}` have no unique {kind}")]
    NotALattice {
        a: String,
        b: String,
        kind: &'static str,
    },
    #[error("`{a}` is not strictly below `{b}`")]
    NotComparable { a: String, b: String },
    #[error("lattice is not atomic: `{0}` is not a join of atoms")]
    NotAtomic(String),
    #[error("lattice has an empty proper part")]
    TrivialLattice,
    #[error("syntax error in `{input}`: {reason}")]
    Syntax { input: String, reason: String },
    #[error("negative exponent in `{0}`")]
    NegativeExponent(String),
    #[error("empty generator set")]
    EmptyGeneratorSet,
    #[error("the unit ideal is not supported")]
    UnitIdeal,
    #[error("degree overflow: {0}")]
    DegreeOverflow(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("too many atoms: {got} exceeds cap {cap}")]
    TooManyAtoms { got: usize, cap: usize },
    #[error("ideal is not squarefree: generator `{0}`")]
    NotSquarefree(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("`{0}` is not a face of the complex")]
    NotAFace(String),
    #[error("degenerate complex: {0}")]
    DegenerateComplex(String),
    #[error("the full simplex has a zero Stanley-Reisner ideal")]
    FullSimplex,
    #[error("block {0} of the partition is not a chain")]
    NotAPartition(String),
    #[error("block {0} is not a chain")]
    NotAChain(usize),
    #[error("`{0}` is not an element of the lcm lattice")]
    NotALatticeElement(String),
    #[error("ideal does not have a linear resolution")]
    NoLinearResolution,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
