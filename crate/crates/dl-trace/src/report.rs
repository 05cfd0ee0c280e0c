//! The serializable trace report, with stable field names.

use crate::closed_form::ClosedFormCase;
use dl_algebra::Poly;
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct StratumRow {
    /// 1-based stratum index.
    pub i: usize,
    /// Quotient characteristic polynomial, in the text format.
    pub shape: String,
    /// Number of flag witnesses with this quotient shape.
    pub witnesses: u64,
    /// The torus counting quantity for the matched class.
    pub torus_count: u64,
    /// `witnesses * torus_count`.
    pub contribution: u64,
    #[serde(skip)]
    pub quotient: Option<Poly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RejectedRow {
    pub i: usize,
    pub shape: String,
    pub witnesses: u64,
    /// The clause that excluded this shape.
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceReport {
    pub schema: u32,
    pub family: String,
    pub n: usize,
    pub q: u64,
    pub f_g: String,
    pub strata: Vec<StratumRow>,
    pub rejected: Vec<RejectedRow>,
    pub total: u64,
    pub closed_form_value: u64,
    pub diagnosis: String,
    #[serde(skip)]
    pub closed_case: ClosedFormCase,
    /// `"nonzero trace"` or `"zero trace"`.
    pub status: String,
}

impl TraceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn agreement(&self) -> bool {
        self.total == self.closed_form_value
    }
}
