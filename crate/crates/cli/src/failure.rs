use std::fmt;

/// An error carrying its process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}

pub const MISMATCH: u8 = 1;
pub const USAGE: u8 = 2;
pub const CEILING: u8 = 3;

pub fn mismatch(message: impl Into<String>) -> Failure {
    Failure {
        code: MISMATCH,
        message: message.into(),
    }
}

pub fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        message: message.into(),
    }
}

pub fn ceiling(message: impl Into<String>) -> Failure {
    Failure {
        code: CEILING,
        message: message.into(),
    }
}
