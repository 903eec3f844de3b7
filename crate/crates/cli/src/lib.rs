//! Library half of the `cullis` command: matrix input, the compute and
//! bench drivers, and the identity self-test suites.

pub mod bench;
pub mod compute;
pub mod input;
pub mod report;
pub mod selftest;
