//! Placeholder; populated after the core engines are in place.

use super::{execute, SuiteConfig, SuiteReport};

pub fn run_paper_suite(config: &SuiteConfig) -> SuiteReport {
    execute(config, Vec::new())
}
