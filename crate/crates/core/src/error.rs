use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a unit: {value} mod {modulus}")]
    NotAUnit { value: u64, modulus: u64 },

    #[error("no element of that order: {order} does not divide {modulus} - 1")]
    NoElementOfOrder { order: u64, modulus: u64 },

    #[error("{0} is not square-free")]
    NotSquareFree(u64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("primes must satisfy r < q < p, got p={p}, q={q}, r={r}")]
    Misordered { p: u64, q: u64, r: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("requires table form (order {order} exceeds table threshold {threshold})")]
    RequiresTable { order: usize, threshold: usize },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("group is not abelian")]
    NotAbelian,

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("action is not by automorphisms: {0}")]
    NotAnAction(String),

    #[error("invalid matched pair: {0}")]
    InvalidMatchedPair(String),

    #[error("no complement found for a normal subgroup of order {0}")]
    NoComplement(usize),

    #[error("group of order {order} is above the cohomology threshold {threshold}; use metacyclic formula")]
    CohomologyTooLarge { order: usize, threshold: usize },

    #[error("cocycles live on different domains or moduli")]
    CocycleMismatch,

    #[error("not a cocycle: {0}")]
    NotACocycle(String),

    #[error("Hopf axiom verification failed: {0}")]
    HopfAxiom(String),

    #[error("not a smash product")]
    NotASmashProduct,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
