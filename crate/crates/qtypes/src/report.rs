//! Structured-output envelope and text rendering helpers.
//!
//! Structured output is a stable, versioned JSON schema so that runs can be
//! diffed and replayed: every value carries its kind tag, every report
//! echoes the configuration (including the seed), and serialization order
//! is deterministic.

use crate::sampler::GenericValueReport;
use crate::value::ExtendedRational;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "qtypes-report/1";

/// Wrap a result in the versioned envelope.
pub fn envelope<C: Serialize>(command: &str, config: &C, result: Value) -> Value {
    serde_json::json!({
        "schema": SCHEMA_VERSION,
        "command": command,
        "config": config,
        "result": result,
    })
}

pub fn value_text(v: &ExtendedRational) -> String {
    match v {
        ExtendedRational::Finite(r) => r.to_string(),
        ExtendedRational::AtLeast(r) => format!("at least {} (truncation limit)", r),
        ExtendedRational::Infinite => "infinite".to_string(),
    }
}

pub fn generic_report_text(label: &str, rep: &GenericValueReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("{}: {}\n", label, value_text(&rep.modal_value)));
    out.push_str(&format!(
        "  samples: {} used, {} rejected (seed {})\n",
        rep.samples_used, rep.rejected, rep.seed
    ));
    out.push_str(&format!(
        "  modal frequency: {}   min: {}   max: {}\n",
        rep.frequency,
        value_text(&rep.min_value),
        value_text(&rep.max_value)
    ));
    out.push_str(&format!(
        "  certified: {}{}\n",
        if rep.exact { "yes" } else { "no" },
        if rep.low_confidence {
            "   [low confidence]"
        } else {
            ""
        }
    ));
    if rep.tally.len() > 1 {
        out.push_str("  histogram:\n");
        for (v, count) in &rep.tally {
            out.push_str(&format!("    {} -> {}\n", value_text(v), count));
        }
    }
    out
}
