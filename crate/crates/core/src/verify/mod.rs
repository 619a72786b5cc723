//! Exhaustive and statistical checks of rigidity statements.
//!
//! Every exhaustive check enumerates a family of graphs, classifies each
//! member with its own [`RigidityOracle`](crate::RigidityOracle), and
//! collects the result into a [`VerificationReport`]. Reports list the
//! offending graphs in graph6 so that each entry can be decoded and
//! re-checked independently.

mod lemmas;
mod random;
mod theorems;
mod thresholds;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::catalog;
use crate::error::Result;
use crate::graph::{encode_graph6, Graph};

pub use lemmas::{
    verify_claim2, verify_coning, verify_cycle_construction, verify_easybound, verify_minlarge, verify_minlarge3,
    verify_preservation, verify_rc_bounds, verify_rc_sum, verify_s1s2s3, verify_simplicial_vertex,
    verify_small_circuits,
};
pub use random::{
    default_pairing, experiment_sample, greedy_pairing, random_rigidity_experiment, search_pairing, verify_contraction_chain, ChainReport, ChainStep,
    RandomExperiment,
};
pub use theorems::{
    globally_rigid_2d, redundantly_rigid, verify_degree_sum, verify_ecount, verify_global_2d, verify_theorem_r2,
    verify_theorem_r3, BoundKind,
};
pub use thresholds::{compute_f, compute_g, known_f, known_g, Threshold, ThresholdStatus};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Text(String),
    Bool(bool),
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as i64)
    }
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.to_string())
    }
}

impl From<bool> for ParamValue {
    fn from(v: bool) -> Self {
        ParamValue::Bool(v)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    /// Graphs (or instances) that met the hypothesis and were checked.
    pub examined: usize,
    pub violations: usize,
    pub exceptions: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub params: BTreeMap<String, ParamValue>,
    pub counts: Counts,
    pub pass: bool,
    /// graph6 of every graph contradicting the claim, sorted.
    pub violations: Vec<String>,
    /// Names of the known exceptional graphs that were met.
    pub exceptions: Vec<String>,
    /// graph6 of exceptional graphs met, or of tightness witnesses.
    pub witnesses: Vec<String>,
    /// Set when a tightness check found no graph just below the threshold.
    pub missing_witness: bool,
    pub seed: u64,
    /// Wall time; left out of the serialized form unless set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl VerificationReport {
    pub(crate) fn new(claim: &str, seed: u64) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            params: BTreeMap::new(),
            counts: Counts::default(),
            pass: true,
            violations: Vec::new(),
            exceptions: Vec::new(),
            witnesses: Vec::new(),
            missing_witness: false,
            seed,
            millis: None,
        }
    }

    pub(crate) fn param(mut self, key: &str, value: impl Into<ParamValue>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Sorts the lists, fills the counts and recomputes `pass`.
    pub(crate) fn finish(mut self, started: Instant) -> Self {
        self.violations.sort();
        self.violations.dedup();
        self.exceptions.sort();
        self.exceptions.dedup();
        self.witnesses.sort();
        self.witnesses.dedup();
        self.counts.violations = self.violations.len();
        self.counts.exceptions = self.exceptions.len();
        self.pass = self.violations.is_empty() && !self.missing_witness;
        self.millis = Some(started.elapsed().as_millis() as u64);
        self
    }
}

/// Classification of one graph by a checker.
pub(crate) enum Outcome {
    /// The hypothesis does not apply.
    Skip,
    Pass,
    Violation,
    /// A listed exception, by name.
    Exception(String),
    /// Passes and also witnesses tightness.
    Witness,
}

/// Runs `check` over `graphs` in parallel and merges the outcomes in input
/// order, so the report does not depend on the worker count.
pub(crate) fn run_over<F>(report: VerificationReport, graphs: &[Graph], check: F) -> Result<VerificationReport>
where
    F: Fn(&Graph) -> Result<Outcome> + Sync,
{
    run_indexed(report, graphs, |_, g| check(g))
}

/// As [`run_over`], also passing each graph's index.
pub(crate) fn run_indexed<F>(mut report: VerificationReport, graphs: &[Graph], check: F) -> Result<VerificationReport>
where
    F: Fn(usize, &Graph) -> Result<Outcome> + Sync,
{
    let started = Instant::now();
    let outcomes: Vec<Outcome> =
        graphs.par_iter().enumerate().map(|(i, g)| check(i, g)).collect::<Result<_>>()?;
    for (g, outcome) in graphs.iter().zip(outcomes) {
        match outcome {
            Outcome::Skip => continue,
            Outcome::Pass => {}
            Outcome::Violation => report.violations.push(encode_graph6(g)),
            Outcome::Exception(name) => {
                report.exceptions.push(name);
                report.witnesses.push(encode_graph6(g));
            }
            Outcome::Witness => report.witnesses.push(encode_graph6(g)),
        }
        report.counts.examined += 1;
    }
    Ok(report.finish(started))
}

/// Name of the listed exceptional graph isomorphic to `g`, if any.
pub(crate) fn exception_name(g: &Graph, names: &[&str]) -> Result<Option<String>> {
    let form = canonical_form(g)?;
    for &name in names {
        let entry = match name {
            "C4" => Graph::cycle(4),
            other => catalog::catalog(other)?.graph,
        };
        if entry.n() == g.n() && entry.edge_count() == g.edge_count() && canonical_form(&entry)? == form {
            return Ok(Some(name.to_string()));
        }
    }
    Ok(None)
}
