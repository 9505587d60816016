use alloc::string::String;
use core::fmt;

use crate::calendar::Date;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A series or frame was constructed with no rows.
    Empty { what: &'static str },
    /// A value that must be finite was NaN or infinite.
    NonFinite { what: &'static str, index: usize },
    /// Two containers that must have equal length do not.
    LengthMismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },
    /// Dates that must be aligned differ.
    DateMismatch { expected: Date, found: Date },
    /// A daily sequence skipped at least one day.
    DateGap { expected: Date, found: Date },
    /// The same date appeared twice.
    DuplicateDate { date: Date },
    /// Not enough observations for the requested operation.
    TooShort { needed: usize, len: usize },
    /// Seed values handed to `integrate` have the wrong length.
    SeedLength { expected: usize, got: usize },
    /// Split cutoff leaves one side empty or lies outside the date range.
    CutoffOutOfRange { cutoff: Date, start: Date, end: Date },
    /// A column that must vary is constant.
    ConstantColumn { name: String },
    /// Two columns share a name.
    DuplicateColumn { name: String },
    /// A named column does not exist.
    UnknownColumn { name: String },
    /// A 0/1 indicator column holds some other value.
    FlagNotBinary { name: String, index: usize },
    /// Text input (holiday file, date literal) failed to parse.
    Parse { what: &'static str, line: usize },
    /// Model order or configuration is out of its valid range.
    InvalidConfig { reason: String },
    /// Vector length does not match a network/kernel dimension.
    ShapeMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    /// Training loss became NaN or infinite.
    NonFiniteLoss { epoch: usize, batch: usize },
    /// Dynamic prediction was asked to start from too little history.
    InsufficientHistory { needed: usize, got: usize },
    /// A forecast frame does not cover the requested horizon.
    HorizonMismatch { expected: usize, got: usize },
    /// Every candidate in an order/hyperparameter grid failed to fit.
    AllCandidatesFailed { attempted: usize },
    /// Grid has no combinations.
    EmptyGrid,
    /// Grid exceeds the configured combination cap.
    GridTooLarge { combos: usize, cap: usize },
    /// MAPE is undefined when an actual value is zero.
    ZeroActual { index: usize },
    /// More folds than rows.
    KTooLarge { k: usize, rows: usize },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Empty { what } => write!(f, "{what} must not be empty"),
            Error::NonFinite { what, index } => {
                write!(f, "{what} contains a non-finite value at index {index}")
            }
            Error::LengthMismatch { what, left, right } => {
                write!(f, "{what}: length mismatch ({left} vs {right})")
            }
            Error::DateMismatch { expected, found } => {
                write!(f, "date mismatch: expected {expected}, found {found}")
            }
            Error::DateGap { expected, found } => {
                write!(f, "gap in daily dates: expected {expected}, found {found}")
            }
            Error::DuplicateDate { date } => write!(f, "duplicate date {date}"),
            Error::TooShort { needed, len } => {
                write!(f, "series too short: need more than {needed}, have {len}")
            }
            Error::SeedLength { expected, got } => {
                write!(f, "seed values: expected {expected}, got {got}")
            }
            Error::CutoffOutOfRange {
                cutoff,
                start,
                end,
            } => write!(
                f,
                "cutoff {cutoff} must lie in [{start}, {end}) so both partitions are non-empty"
            ),
            Error::ConstantColumn { name } => {
                write!(f, "column '{name}' is constant (stddev = 0)")
            }
            Error::DuplicateColumn { name } => write!(f, "duplicate column name '{name}'"),
            Error::UnknownColumn { name } => write!(f, "unknown column '{name}'"),
            Error::FlagNotBinary { name, index } => {
                write!(f, "flag column '{name}' is not 0/1 at index {index}")
            }
            Error::Parse { what, line } => write!(f, "failed to parse {what} at line {line}"),
            Error::InvalidConfig { reason } => write!(f, "invalid configuration: {reason}"),
            Error::ShapeMismatch {
                what,
                expected,
                got,
            } => write!(f, "{what}: expected dimension {expected}, got {got}"),
            Error::NonFiniteLoss { epoch, batch } => {
                write!(f, "non-finite training loss at epoch {epoch}, batch {batch}")
            }
            Error::InsufficientHistory { needed, got } => {
                write!(f, "need at least {needed} history values, got {got}")
            }
            Error::HorizonMismatch { expected, got } => {
                write!(f, "future frame has {got} rows, horizon needs {expected}")
            }
            Error::AllCandidatesFailed { attempted } => {
                write!(f, "all {attempted} candidate fits failed")
            }
            Error::EmptyGrid => write!(f, "grid has no combinations"),
            Error::GridTooLarge { combos, cap } => {
                write!(f, "grid has {combos} combinations, cap is {cap}")
            }
            Error::ZeroActual { index } => {
                write!(f, "MAPE undefined: actual value at index {index} is zero")
            }
            Error::KTooLarge { k, rows } => write!(f, "k = {k} exceeds row count {rows}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
