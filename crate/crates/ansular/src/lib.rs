//! File formats, the bundled dataset corpus and the command line for
//! `ansular-core`.

pub mod cli;
pub mod corpus;
pub mod format;
