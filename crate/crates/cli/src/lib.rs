//! Library side of the `tautring` command-line tool: text/JSON rendering,
//! the transcribed golden tables, and the verification suites the binary
//! and the acceptance tests share.

pub mod render;
pub mod tables;
pub mod verify;
