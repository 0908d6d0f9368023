use std::time::Instant;

use serde_json::{json, Map, Value};

use quadalg::hilbert::{GsReport, HilbertData, NilpotencyVerdict};

/// Wall-clock time per named phase, in call order.
#[derive(Debug, Default)]
pub struct Timer {
    phases: Vec<(&'static str, f64)>,
}

impl Timer {
    pub fn phase<T>(&mut self, name: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.phases.push((name, start.elapsed().as_secs_f64() * 1e3));
        out
    }

    pub fn json(&self) -> Value {
        let mut m = Map::new();
        for (name, ms) in &self.phases {
            m.insert((*name).to_string(), json!((ms * 1e3).round() / 1e3));
        }
        Value::Object(m)
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.phases.iter().map(|(n, ms)| format!("{n} {ms:.1} ms")).collect();
        parts.join(", ")
    }
}

/// Coefficients as JSON numbers while they fit in u64, as strings beyond.
pub fn series_json(coeffs: &[u128]) -> Value {
    Value::Array(
        coeffs
            .iter()
            .map(|&c| match u64::try_from(c) {
                Ok(v) => json!(v),
                Err(_) => json!(c.to_string()),
            })
            .collect(),
    )
}

pub fn gs_json(gs: &GsReport) -> Value {
    json!({
        "product": gs.product.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "text": gs.render(),
        "complete": gs.complete,
        "pass": gs.pass(),
    })
}

pub struct RunReport {
    pub input: String,
    pub field: u64,
    pub basis_size: usize,
    pub complete_through: usize,
    pub series: HilbertData,
    pub verdict: NilpotencyVerdict,
    pub gs: GsReport,
    pub timer: Timer,
}

impl RunReport {
    pub fn json(&self, timings: bool) -> Value {
        let mut v = json!({
            "input": self.input,
            "field": self.field,
            "basis_size": self.basis_size,
            "complete_through": self.complete_through,
            "series": series_json(&self.series.coefficients),
            "series_text": self.series.to_string(),
            "verdict": self.verdict.to_string(),
            "nilpotent": self.verdict.is_nilpotent(),
            "golod_shafarevich": gs_json(&self.gs),
        });
        if timings {
            v["timings_ms"] = self.timer.json();
        }
        v
    }
}
