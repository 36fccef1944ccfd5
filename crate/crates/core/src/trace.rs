//! Step-by-step record of a mental calculation.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    /// Output is the parity bit of the input: 1 for odd, 0 for even.
    ParityCheck,
    #[serde(rename = "add_11")]
    Add11,
    Halve,
    #[serde(rename = "mod_7")]
    Mod7,
    Complement,
    ClosestMultiple,
    Subtract,
    #[serde(rename = "iterate_add_11")]
    IterateAdd11,
    Negate,
    #[serde(rename = "div_12")]
    Div12,
    #[serde(rename = "mod_12")]
    Mod12,
    #[serde(rename = "div_4")]
    Div4,
    /// Input is the first Conway term, output the three-term total.
    Sum,
    AddDoomscentury,
    AddDoomsmonth,
}

impl Label {
    pub const ALL: [Label; 15] = [
        Label::ParityCheck,
        Label::Add11,
        Label::Halve,
        Label::Mod7,
        Label::Complement,
        Label::ClosestMultiple,
        Label::Subtract,
        Label::IterateAdd11,
        Label::Negate,
        Label::Div12,
        Label::Mod12,
        Label::Div4,
        Label::Sum,
        Label::AddDoomscentury,
        Label::AddDoomsmonth,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::ParityCheck => "parity_check",
            Label::Add11 => "add_11",
            Label::Halve => "halve",
            Label::Mod7 => "mod_7",
            Label::Complement => "complement",
            Label::ClosestMultiple => "closest_multiple",
            Label::Subtract => "subtract",
            Label::IterateAdd11 => "iterate_add_11",
            Label::Negate => "negate",
            Label::Div12 => "div_12",
            Label::Mod12 => "mod_12",
            Label::Div4 => "div_4",
            Label::Sum => "sum",
            Label::AddDoomscentury => "add_doomscentury",
            Label::AddDoomsmonth => "add_doomsmonth",
        }
    }

    /// Steps whose output is not the new accumulator value.
    pub fn is_side_observation(self) -> bool {
        matches!(self, Label::ParityCheck)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub label: Label,
    #[serde(rename = "in")]
    pub input: i64,
    #[serde(rename = "out")]
    pub output: i64,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.label, self.input, self.output)
    }
}

/// Ordered computation steps.
///
/// `Display` yields the normalized golden-file form, one `label: in -> out`
/// line per step.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Trace {
    steps: Vec<Step>,
}

impl Trace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, label: Label, input: i64, output: i64) {
        self.steps.push(Step { label, input, output });
    }

    pub fn extend(&mut self, other: Trace) {
        self.steps.extend(other.steps);
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn contains(&self, label: Label) -> bool {
        self.steps.iter().any(|s| s.label == label)
    }

    pub fn count(&self, label: Label) -> usize {
        self.steps.iter().filter(|s| s.label == label).count()
    }

    /// Steps that carry the running accumulator, i.e. everything except
    /// parity observations.
    pub fn accumulator_steps(&self) -> impl Iterator<Item = &Step> {
        self.steps.iter().filter(|s| !s.label.is_side_observation())
    }

    /// True when each accumulator step consumes the previous one's output.
    pub fn is_chained(&self) -> bool {
        let acc: Vec<_> = self.accumulator_steps().collect();
        acc.windows(2).all(|w| w[0].output == w[1].input)
    }

    /// Renders the trace as spoken mental-arithmetic phrases, one per
    /// entry. A parity check directly after a halving is folded into the
    /// halving phrase ("divided by two is 48 which is even").
    pub fn narrate(&self) -> Vec<String> {
        let mut lines = Vec::new();
        let mut steps = self.steps.iter().peekable();
        while let Some(step) = steps.next() {
            let line = match step.label {
                Label::ParityCheck => format!("{:02} is {}", step.input, parity_word(step.output)),
                Label::Add11 | Label::IterateAdd11 => format!("plus eleven is {}", step.output),
                Label::Halve => {
                    // zero is spoken as the two-digit year "00"
                    let mut s = if step.output == 0 {
                        "divided by two is 00".to_owned()
                    } else {
                        format!("divided by two is {}", step.output)
                    };
                    if let Some(next) = steps.next_if(|n| n.label == Label::ParityCheck) {
                        s.push_str(&format!(" which is {}", parity_word(next.output)));
                    }
                    s
                }
                Label::Mod7 => format!(
                    "modulo seven is {} because {} - {} = {}",
                    step.output,
                    step.input,
                    step.input - step.output,
                    step.output
                ),
                Label::Complement => format!("whose seven's complement is {}", step.output),
                Label::ClosestMultiple => format!("closest multiple of seven is {}", step.output),
                Label::Subtract => format!("{} - {} = {}", step.input, step.input - step.output, step.output),
                Label::Negate => format!("{} is negative so reduce {}", step.input, step.output),
                Label::Div12 => format!("{:02} divided by twelve is {}", step.input, step.output),
                Label::Mod12 => format!("remainder is {}", step.output),
                Label::Div4 => format!("remainder divided by four is {}", step.output),
                Label::Sum => format!("sum of the three terms is {}", step.output),
                Label::AddDoomscentury => {
                    format!("plus doomscentury {} is {}", step.output - step.input, step.output)
                }
                Label::AddDoomsmonth => {
                    format!("plus doomsmonth {} is {}", step.output - step.input, step.output)
                }
            };
            lines.push(line);
        }
        lines
    }

    /// The narration joined in the arrow style, one phrase per line.
    pub fn explain(&self) -> String {
        let mut out = String::new();
        for (i, line) in self.narrate().iter().enumerate() {
            if i > 0 {
                out.push_str("→ ");
            }
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

fn parity_word(bit: i64) -> &'static str {
    if bit == 1 {
        "odd"
    } else {
        "even"
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            writeln!(f, "{step}")?;
        }
        Ok(())
    }
}

/// Parses the normalized `label: in -> out` form back into a trace.
impl std::str::FromStr for Trace {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut trace = Trace::new();
        for line in s.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (label, rest) = line.split_once(':').ok_or_else(|| format!("missing ':' in {line:?}"))?;
            let (input, output) = rest.split_once("->").ok_or_else(|| format!("missing '->' in {line:?}"))?;
            let label = Label::ALL
                .into_iter()
                .find(|l| l.as_str() == label.trim())
                .ok_or_else(|| format!("unknown label {label:?}"))?;
            let parse = |v: &str| v.trim().parse::<i64>().map_err(|e| format!("{e} in {line:?}"));
            trace.push(label, parse(input)?, parse(output)?);
        }
        Ok(trace)
    }
}
