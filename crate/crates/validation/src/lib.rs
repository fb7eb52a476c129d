// SPDX-License-Identifier: Apache-2.0

//! Runner for named acceptance checks: each check prints one PASS/FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

/// Outcome of one check: verdict plus a one-line summary of what was measured.
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    pub fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome { passed, detail: detail.into() }
    }
}

#[derive(Default)]
pub struct Suite {
    results: Vec<(String, bool)>,
}

impl Suite {
    /// Runs `check`, treating a panic as a failure, and prints its line.
    pub fn run(&mut self, id: &str, name: &str, check: impl FnOnce() -> Outcome) {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Outcome::new(false, format!("panic: {msg}"))
        });
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!("{verdict} [{id}] {name} ({:.2}s): {}", start.elapsed().as_secs_f64(), outcome.detail);
        self.results.push((id.to_string(), outcome.passed));
    }

    pub fn failed(&self) -> Vec<&str> {
        self.results.iter().filter(|(_, ok)| !ok).map(|(id, _)| id.as_str()).collect()
    }

    /// Prints the summary and returns the process exit code.
    pub fn finish(&self) -> i32 {
        let failed = self.failed();
        println!("acceptance: {} of {} criteria passed", self.results.len() - failed.len(), self.results.len());
        if failed.is_empty() {
            0
        } else {
            println!("failed: {}", failed.join(", "));
            1
        }
    }
}
