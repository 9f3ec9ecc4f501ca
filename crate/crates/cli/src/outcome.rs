use addrep::Error;

#[derive(Debug)]
pub enum Failure {
    /// A requested assertion did not hold.
    Check(String),
    /// Bad flags, unreadable input, or a precondition the input violates.
    Input(String),
}

pub type Outcome = Result<(), Failure>;

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::IdentityBroken(_)
            | Error::DuplicatePair(..)
            | Error::NonpositiveBracket { .. }
            | Error::Exhausted { .. }
            | Error::ScanBoundExceeded { .. } => Failure::Check(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

pub fn check(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check(what()))
    }
}

pub fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}
