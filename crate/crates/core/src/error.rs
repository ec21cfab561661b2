use alloc::string::String;

/// Every failure a synthesis, simulation or hashing operation can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("angle denominator overflowed its fixed-width representation")]
    AngleOverflow,
    #[error("angle denominator must be positive")]
    ZeroDenominator,
    #[error("angle vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("angle vector length {0} is not even")]
    OddLength(usize),
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("qubit {qubit} is out of range for width {width}")]
    QubitOutOfRange { qubit: usize, width: usize },
    #[error("qubit {0} appears more than once in one gate")]
    DuplicateQubit(usize),
    #[error("control pattern length {pattern} does not match {controls} controls")]
    PatternMismatch { pattern: usize, controls: usize },
    #[error("circuit contains an unlowered macro gate at position {0}")]
    NotLowered(usize),
    #[error("width mismatch: circuit has {circuit} qubits, state has {state}")]
    WidthMismatch { circuit: usize, state: usize },
    #[error("width {width} exceeds the simulation limit of {limit} qubits")]
    WidthTooLarge { width: usize, limit: usize },
    #[error("dimension mismatch: {left} versus {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("gate needs at least {needed} controls, found {found}")]
    TooFewControls { needed: usize, found: usize },
    #[error("{controls} controls need a borrowed ancilla but none is available")]
    MissingAncilla { controls: usize },
    #[error("recursion depth {k} exceeds the {m} available controls")]
    DepthExceedsControls { k: usize, m: usize },
    #[error("k = {k} violates the bound k <= n - {slack} for n = {n}")]
    BoundViolation { n: usize, k: usize, slack: usize },
    #[error("the phase variant rewrites only z rotations")]
    AxisNotSupported,
    #[error("integer overflow while evaluating a count formula")]
    CountOverflow,
    #[error("unexpected gate: {0}")]
    UnexpectedGate(String),
    #[error("the X gate acts on qubit {x}, not on the rotation target {target}")]
    XNotOnTarget { x: usize, target: usize },
    #[error("parameter set is empty")]
    EmptySet,
    #[error("modulus q = {0} is below 2")]
    ModulusTooSmall(u64),
    #[error("element {element} is not in Z_{q}")]
    ElementOutOfRange { element: u64, q: u64 },
    #[error("element {0} appears more than once")]
    DuplicateElement(u64),
    #[error("set size {d} exceeds the modulus {q}")]
    SetTooLarge { d: usize, q: u64 },
    #[error("input {x} is not in Z_{q}")]
    InputOutOfRange { x: u64, q: u64 },
    #[error("modulus {q} is above the exhaustive audit limit {limit}")]
    AuditTooLarge { q: u64, limit: u64 },
    #[error("cannot parse angle: {0}")]
    InvalidAngle(String),
    #[error("invalid basis label: {0}")]
    InvalidBasisLabel(String),
}

pub type Result<T> = core::result::Result<T, Error>;
