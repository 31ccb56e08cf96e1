use thiserror::Error;

/// Errors raised by every operation in the crate.
///
/// The variants map one-to-one onto the CLI exit codes: `Input` is 2,
/// `Unsupported` and `RegularIntegralCase` are 3, `Internal` is 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// The weight has regular integral infinitesimal character, where the
    /// sl(n+1) degree is an alternating sum that is not computed here.
    #[error("regular integral infinitesimal character: degree is an alternating sum of dimensions")]
    RegularIntegralCase,
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Short machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Input(_) => "input",
            Error::Unsupported(_) => "unsupported",
            Error::RegularIntegralCase => "regular_integral_case",
            Error::Internal(_) => "internal",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 2,
            Error::Unsupported(_) | Error::RegularIntegralCase => 3,
            Error::Internal(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
