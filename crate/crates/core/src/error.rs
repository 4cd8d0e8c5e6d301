use alloc::string::String;
use core::fmt;

/// Errors raised by constructors and checks.
///
/// The variants map onto the CLI exit codes: `Usage` is an input error,
/// `Hypothesis` means a construction's precondition does not hold, and
/// `Inconsistent` means two independent routes to the same fact disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Shape, field or argument mismatch.
    Usage(String),
    /// Arithmetic outside the domain (inverse of zero, period of x·f, ...).
    Domain(String),
    /// A theorem or family precondition failed.
    Hypothesis(String),
    /// Two routes that must agree did not.
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Usage(m) => write!(f, "usage error: {m}"),
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Hypothesis(m) => write!(f, "hypothesis failed: {m}"),
            Error::Inconsistent(m) => write!(f, "inconsistent result: {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

macro_rules! usage {
    ($($arg:tt)*) => { $crate::error::Error::Usage(alloc::format!($($arg)*)) };
}
macro_rules! hypothesis {
    ($($arg:tt)*) => { $crate::error::Error::Hypothesis(alloc::format!($($arg)*)) };
}
pub(crate) use hypothesis;
pub(crate) use usage;
