use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::report::{Check, Status};

/// What a check body reports back.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub status: Status,
    pub detail: String,
}

impl Outcome {
    pub fn pass(detail: impl Into<String>) -> Self {
        Outcome { status: Status::Pass, detail: detail.into() }
    }

    pub fn fail(detail: impl Into<String>) -> Self {
        Outcome { status: Status::Fail, detail: detail.into() }
    }
}

/// Passes with `detail` or fails with its own message. Chains of
/// conditions fold through this with `and_then`-style early returns.
pub fn require(ok: bool, detail: impl Into<String>, failure: impl Into<String>) -> Outcome {
    if ok {
        Outcome::pass(detail)
    } else {
        Outcome::fail(failure)
    }
}

/// A deferred check: the closure runs on the worker pool.
pub struct CheckSpec {
    pub id: String,
    pub description: String,
    pub run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

pub fn spec(
    id: impl Into<String>,
    description: impl Into<String>,
    run: impl Fn() -> Outcome + Send + Sync + 'static,
) -> CheckSpec {
    CheckSpec { id: id.into(), description: description.into(), run: Box::new(run) }
}

/// Runs every check and assembles the results sorted by id, so the report
/// does not depend on completion order. `jobs` bounds the worker pool; with
/// no bound the global pool decides.
pub fn execute(specs: Vec<CheckSpec>, jobs: Option<usize>) -> (Vec<Check>, BTreeMap<String, u64>) {
    let run_all = || -> Vec<(Check, u64)> {
        specs
            .par_iter()
            .map(|spec| {
                let start = Instant::now();
                let outcome = (spec.run)();
                let micros = start.elapsed().as_micros() as u64;
                let check = Check {
                    id: spec.id.clone(),
                    description: spec.description.clone(),
                    status: outcome.status,
                    detail: outcome.detail,
                };
                (check, micros)
            })
            .collect()
    };
    let mut rows = match jobs {
        Some(bound) => rayon::ThreadPoolBuilder::new()
            .num_threads(bound)
            .build()
            .expect("worker pool")
            .install(run_all),
        None => run_all(),
    };
    rows.sort_by(|a, b| a.0.id.cmp(&b.0.id));
    debug_assert!(rows.windows(2).all(|w| w[0].0.id != w[1].0.id), "check ids are unique");
    let timing = rows.iter().map(|(check, micros)| (check.id.clone(), *micros)).collect();
    (rows.into_iter().map(|(check, _)| check).collect(), timing)
}
