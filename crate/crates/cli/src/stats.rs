//! Operation counts for each doomsyear strategy over all two-digit years.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use doomsday_core::{doomsyear, Label, MethodId, Trace, YearTwo};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Magnitude {
    pub min: i64,
    pub max: i64,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodCost {
    pub method: MethodId,
    /// Step label to number of occurrences over `x = 0..=99`.
    pub counts: BTreeMap<String, u64>,
    /// odd11 only: additions of 11 before and after the halving.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub add_11_first_stage: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub add_11_second_stage: Option<u64>,
    /// Largest accumulator value reached per year, summarized over all years.
    pub peak_accumulator: Magnitude,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CostReport {
    pub methods: Vec<MethodCost>,
}

impl CostReport {
    pub fn method(&self, method: MethodId) -> &MethodCost {
        self.methods.iter().find(|m| m.method == method).expect("every method is reported")
    }
}

impl MethodCost {
    pub fn count(&self, label: Label) -> u64 {
        self.counts.get(label.as_str()).copied().unwrap_or(0)
    }
}

fn peak(trace: &Trace) -> i64 {
    trace.accumulator_steps().flat_map(|s| [s.input.abs(), s.output.abs()]).max().unwrap_or(0)
}

pub fn method_cost(method: MethodId) -> MethodCost {
    let mut counts = BTreeMap::new();
    let mut first = 0;
    let mut second = 0;
    let mut peaks = Vec::with_capacity(100);

    for x in YearTwo::all() {
        let (_, trace) = doomsyear(x, method);
        let mut halved = false;
        for step in trace.steps() {
            *counts.entry(step.label.as_str().to_owned()).or_insert(0) += 1;
            match step.label {
                Label::Halve => halved = true,
                Label::Add11 if halved => second += 1,
                Label::Add11 => first += 1,
                _ => {}
            }
        }
        peaks.push(peak(&trace));
    }

    let odd11 = method == MethodId::Odd11;
    MethodCost {
        method,
        counts,
        add_11_first_stage: odd11.then_some(first),
        add_11_second_stage: odd11.then_some(second),
        peak_accumulator: Magnitude {
            min: *peaks.iter().min().unwrap(),
            max: *peaks.iter().max().unwrap(),
            mean: peaks.iter().sum::<i64>() as f64 / peaks.len() as f64,
        },
    }
}

pub fn cost_report() -> CostReport {
    CostReport { methods: MethodId::ALL.into_iter().map(method_cost).collect() }
}

pub fn render_text(report: &CostReport) -> String {
    let mut out = String::new();
    let _ = write!(out, "{:<22}", "operation");
    for m in &report.methods {
        let _ = write!(out, "{:>10}", m.method.as_str());
    }
    out.push('\n');

    let used: Vec<Label> = Label::ALL.into_iter().filter(|l| report.methods.iter().any(|m| m.count(*l) > 0)).collect();
    let mut row = |name: &str, values: Vec<String>| {
        let _ = write!(out, "{name:<22}");
        for v in values {
            let _ = write!(out, "{v:>10}");
        }
        out.push('\n');
    };
    for label in used {
        row(label.as_str(), report.methods.iter().map(|m| m.count(label).to_string()).collect());
    }
    let stage = |v: Option<u64>| v.map_or("-".to_owned(), |n| n.to_string());
    row("add_11 (first stage)", report.methods.iter().map(|m| stage(m.add_11_first_stage)).collect());
    row("add_11 (second stage)", report.methods.iter().map(|m| stage(m.add_11_second_stage)).collect());
    row("peak accumulator min", report.methods.iter().map(|m| m.peak_accumulator.min.to_string()).collect());
    row("peak accumulator max", report.methods.iter().map(|m| m.peak_accumulator.max.to_string()).collect());
    row("peak accumulator mean", report.methods.iter().map(|m| format!("{:.2}", m.peak_accumulator.mean)).collect());
    out
}
