use std::time::Duration;

use goodmap_core::poly::{Field, Ideal, Rational};
use goodmap_core::{AffineConstructible, Stratum};
use serde_json::{json, Map, Value};

use crate::input::Source;
use crate::CliError;

/// Job report. Keys serialize in sorted order, and `timing_ms` appears only
/// when requested, so identical jobs give identical bytes.
#[derive(Debug, Clone)]
pub struct Report {
    job: String,
    seed: u64,
    size_cap: usize,
    inputs: Vec<Value>,
    verdicts: Map<String, Value>,
    witnesses: Vec<Value>,
    counterexamples: Vec<Value>,
    timing_ms: Option<u128>,
}

impl Report {
    pub fn new(job: &str, seed: u64, size_cap: usize) -> Self {
        Report {
            job: job.to_string(),
            seed,
            size_cap,
            inputs: Vec::new(),
            verdicts: Map::new(),
            witnesses: Vec::new(),
            counterexamples: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn input(&mut self, source: &Source) {
        self.inputs.push(json!({
            "path": source.path.display().to_string(),
            "sha256": source.sha256,
        }));
    }

    pub fn verdict(&mut self, key: &str, value: Value) {
        self.verdicts.insert(key.to_string(), value);
    }

    pub fn verdicts(&self) -> &Map<String, Value> {
        &self.verdicts
    }

    pub fn witness(&mut self, value: Value) {
        self.witnesses.push(value);
    }

    pub fn witnesses(&self) -> &[Value] {
        &self.witnesses
    }

    pub fn counterexample(&mut self, value: Value) {
        self.counterexamples.push(value);
    }

    pub fn counterexamples(&self) -> &[Value] {
        &self.counterexamples
    }

    pub fn set_timing(&mut self, elapsed: Duration) {
        self.timing_ms = Some(elapsed.as_millis());
    }
}

impl From<&Report> for Value {
    fn from(r: &Report) -> Value {
        let mut out = json!({
            "tool": "goodmap",
            "version": env!("CARGO_PKG_VERSION"),
            "job": r.job,
            "seed": r.seed,
            "size_cap": r.size_cap,
            "inputs": r.inputs,
            "verdicts": r.verdicts,
            "witnesses": r.witnesses,
            "counterexamples": r.counterexamples,
        });
        if let Some(ms) = r.timing_ms {
            out["timing_ms"] = json!(ms as u64);
        }
        out
    }
}

fn generators<F: Field>(ideal: &Ideal<F>, names: &[String]) -> Vec<String> {
    ideal
        .generators()
        .iter()
        .map(|g| g.display_with(names).to_string())
        .collect()
}

pub(crate) fn ideal(ideal: &Ideal<Rational>, names: &[String]) -> Result<Value, CliError> {
    let basis: Vec<String> = ideal
        .basis()?
        .iter()
        .map(|g| g.display_with(names).to_string())
        .collect();
    Ok(json!(basis))
}

pub(crate) fn stratum(s: &Stratum<Rational>, names: &[String]) -> Value {
    json!({
        "present": generators(s.present(), names),
        "absent": generators(s.absent(), names),
    })
}

pub(crate) fn strata(set: &AffineConstructible<Rational>, names: &[String]) -> Value {
    Value::Array(set.strata().iter().map(|s| stratum(s, names)).collect())
}
