//! Report assembly and rendering for the `kideal` command line.

pub mod render;
pub mod report;

use kideal::Error;

/// Exit status for usage errors such as an even `q`.
pub const EXIT_USAGE: u8 = 64;

/// Process exit status for a library error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::MethodInapplicable(_) => 2,
        Error::ResourceLimit(_) => 3,
        Error::Parse(_) => 4,
        Error::InvalidInput(_) => EXIT_USAGE,
        _ => 1,
    }
}
