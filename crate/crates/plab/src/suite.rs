//! The verification suite: every headline claim checked on concrete
//! instances, with report emission.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;

use crate::error::Result;

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub verdict: Verdict,
    pub runtime_ms: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub version: String,
    pub heavy: bool,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// digest over everything except runtimes; stable across reruns
    pub content_digest: String,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub heavy: bool,
    pub cache_dir: Option<PathBuf>,
    pub threads: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            heavy: false,
            cache_dir: None,
            threads: 0, // rayon default
        }
    }
}

mod checks;

pub use checks::run_paper_suite;

impl SuiteReport {
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# Verification suite report\n\nseed: {} | version: {} | heavy: {} | {} checks, {} passed, {} failed\n\ncontent digest: `{}`\n\n",
            self.seed, self.version, self.heavy, self.total, self.passed, self.failed, self.content_digest
        ));
        out.push_str("| check | anchor | instance | expected | computed | verdict | ms |\n");
        out.push_str("|---|---|---|---|---|---|---|\n");
        for c in &self.checks {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} |\n",
                c.id,
                c.anchor,
                c.instance,
                c.expected,
                c.computed,
                match c.verdict {
                    Verdict::Pass => "PASS",
                    Verdict::Fail => "FAIL",
                },
                c.runtime_ms
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,anchor,instance,expected,computed,verdict,runtime_ms\n");
        let esc = |s: &str| {
            if s.contains(',') || s.contains('"') {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                esc(&c.id),
                esc(&c.anchor),
                esc(&c.instance),
                esc(&c.expected),
                esc(&c.computed),
                match c.verdict {
                    Verdict::Pass => "PASS",
                    Verdict::Fail => "FAIL",
                },
                c.runtime_ms
            ));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn write_files(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("report.md"), self.to_markdown())?;
        std::fs::write(dir.join("report.csv"), self.to_csv())?;
        std::fs::write(dir.join("report.json"), self.to_json())?;
        Ok(())
    }
}

pub(crate) struct CheckRun {
    pub id: &'static str,
    pub anchor: &'static str,
    pub run: Box<dyn Fn(&SuiteConfig) -> Result<CheckOutcome> + Send + Sync>,
}

pub struct CheckOutcome {
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl CheckOutcome {
    pub fn compare<T: PartialEq + std::fmt::Display>(
        instance: impl Into<String>,
        expected: T,
        computed: T,
    ) -> CheckOutcome {
        CheckOutcome {
            instance: instance.into(),
            pass: expected == computed,
            expected: expected.to_string(),
            computed: computed.to_string(),
        }
    }
}

pub(crate) fn execute(config: &SuiteConfig, runs: Vec<CheckRun>) -> SuiteReport {
    use rayon::prelude::*;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .stack_size(64 * 1024 * 1024)
        .build()
        .expect("thread pool");
    let mut checks: Vec<CheckRecord> = pool.install(|| {
        runs.par_iter()
            .map(|check| {
                let start = Instant::now();
                let outcome = (check.run)(config);
                let runtime_ms = start.elapsed().as_millis();
                match outcome {
                    Ok(o) => CheckRecord {
                        id: check.id.to_string(),
                        anchor: check.anchor.to_string(),
                        instance: o.instance,
                        expected: o.expected,
                        computed: o.computed,
                        verdict: if o.pass { Verdict::Pass } else { Verdict::Fail },
                        runtime_ms,
                    },
                    Err(e) => CheckRecord {
                        id: check.id.to_string(),
                        anchor: check.anchor.to_string(),
                        instance: String::new(),
                        expected: "no error".into(),
                        computed: format!("error: {e}"),
                        verdict: Verdict::Fail,
                        runtime_ms,
                    },
                }
            })
            .collect()
    });
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = checks.iter().filter(|c| c.verdict == Verdict::Pass).count();
    let failed = checks.len() - passed;

    // digest over runtime-free content so reruns with a fixed seed produce
    // an identical value
    let mut digest: u64 = 0xcbf29ce484222325;
    let mut feed = |s: &str| {
        for b in s.bytes() {
            digest ^= b as u64;
            digest = digest.wrapping_mul(0x100000001b3);
        }
    };
    feed(&config.seed.to_string());
    for c in &checks {
        feed(&c.id);
        feed(&c.instance);
        feed(&c.expected);
        feed(&c.computed);
    }

    SuiteReport {
        seed: config.seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
        heavy: config.heavy,
        total: checks.len(),
        passed,
        failed,
        content_digest: format!("{digest:016x}"),
        checks,
    }
}
