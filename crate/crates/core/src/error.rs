use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("modulus is reducible over GF({p}): divisible by {factor:?}")]
    ReducibleModulus { p: u32, factor: Vec<u32> },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field of order {0} exceeds the supported size")]
    FieldTooLarge(u64),
    #[error("element code {code} out of range for a field of order {q}")]
    InvalidElement { code: u64, q: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("operands belong to different rings")]
    MixedRings,
    #[error("operation needs characteristic 2, field has characteristic {0}")]
    OddCharacteristic(u32),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("element is not a unit: gcd with the modulus is {gcd:?}")]
    NotAUnit { gcd: Vec<u32> },
    #[error("lambda must be nonzero")]
    ZeroLambda,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("invalid circulant spec: {0}")]
    InvalidSpec(String),
    #[error("product is not consta-circulant: {0}")]
    NotCirculantProduct(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("search space of {size} exceeds the limit of {limit}")]
    SearchSpaceTooLarge { size: u128, limit: u128 },
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("scalar is not fixed by the automorphism")]
    NotInFixedField,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
}
