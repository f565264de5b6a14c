//! File format, verification suites and random search used by the CLI.

pub mod mgrp;
pub mod sample;
pub mod suites;

pub use mgrp::{parse_mgrp, parse_mgrp_str, to_mgrp_string, write_mgrp};
pub use sample::{sample_stingray, SampleReport};
pub use suites::{signature_suite, verify_suite, Check, SignatureSpec, Suite, VerifyReport};
