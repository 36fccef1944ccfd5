//! The year-within-century term of the Doomsday sum.
//!
//! Three strategies compute it from a two-digit year `x`:
//!
//! * `conway`: `x/12 + x%12 + (x%12)/4`, reduced mod 7 at the end.
//! * `odd11`: add 11 if odd, halve, add 11 if odd, reduce mod 7, take the
//!   7's complement.
//! * `walters`: add 11 until divisible by 4, halve, negate mod 7.
//!
//! All three agree with `x + x/4 (mod 7)` on every `x` in `0..=99`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trace::{Label, Trace};
use crate::z7::{mod7, sevens_complement, Z7Residue};

/// A year within its century, `0..=99`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct YearTwo(u8);

impl YearTwo {
    pub fn new(x: i64) -> Result<Self> {
        if (0..=99).contains(&x) {
            Ok(YearTwo(x as u8))
        } else {
            Err(Error::YearTwoOutOfRange(x))
        }
    }

    pub fn value(self) -> i64 {
        i64::from(self.0)
    }

    pub fn all() -> impl Iterator<Item = YearTwo> {
        (0..=99).map(YearTwo)
    }
}

impl TryFrom<i64> for YearTwo {
    type Error = Error;

    fn try_from(x: i64) -> Result<Self> {
        YearTwo::new(x)
    }
}

impl From<YearTwo> for i64 {
    fn from(x: YearTwo) -> i64 {
        x.value()
    }
}

impl fmt::Display for YearTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:02}", self.0)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodId {
    Conway,
    #[default]
    Odd11,
    Walters,
}

impl MethodId {
    pub const ALL: [MethodId; 3] = [MethodId::Conway, MethodId::Odd11, MethodId::Walters];

    pub fn as_str(self) -> &'static str {
        match self {
            MethodId::Conway => "conway",
            MethodId::Odd11 => "odd11",
            MethodId::Walters => "walters",
        }
    }
}

impl fmt::Display for MethodId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MethodId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MethodId::ALL.into_iter().find(|m| m.as_str() == s).ok_or_else(|| Error::UnknownMethod(s.to_owned()))
    }
}

pub fn conway_doomsyear(x: YearTwo) -> Z7Residue {
    conway_with_trace(x).0
}

fn conway_with_trace(x: YearTwo) -> (Z7Residue, Trace) {
    let x = x.value();
    let dozens = x / 12;
    let rest = x % 12;
    let fours = rest / 4;
    let total = dozens + rest + fours;
    let result = mod7(total);

    let mut trace = Trace::new();
    trace.push(Label::Div12, x, dozens);
    trace.push(Label::Mod12, x, rest);
    trace.push(Label::Div4, rest, fours);
    trace.push(Label::Sum, dozens, total);
    trace.push(Label::Mod7, total, result.into());
    (result, trace)
}

/// `x + floor(x/4) (mod 7)`, the form every strategy is checked against.
pub fn simplified_doomsyear(x: YearTwo) -> Z7Residue {
    let x = x.value();
    mod7(x + x / 4)
}

/// The five-step Odd+11 procedure. Both parity checks are always recorded,
/// so a skipped addition shows up as an even parity step with no `add_11`
/// after it.
pub fn odd11_doomsyear(x: YearTwo) -> (Z7Residue, Trace) {
    let mut trace = Trace::new();
    let mut acc = x.value();

    add_11_if_odd(&mut acc, &mut trace);
    let halved = acc / 2;
    trace.push(Label::Halve, acc, halved);
    acc = halved;
    add_11_if_odd(&mut acc, &mut trace);

    let remainder = mod7(acc);
    trace.push(Label::Mod7, acc, remainder.into());
    let result = sevens_complement(remainder);
    trace.push(Label::Complement, remainder.into(), result.into());
    (result, trace)
}

fn add_11_if_odd(acc: &mut i64, trace: &mut Trace) {
    let parity = *acc % 2;
    trace.push(Label::ParityCheck, *acc, parity);
    if parity == 1 {
        trace.push(Label::Add11, *acc, *acc + 11);
        *acc += 11;
    }
}

/// Walters' method in its iterative form: one `iterate_add_11` step per
/// addition, `x mod 4` of them in total.
pub fn walters_doomsyear(x: YearTwo) -> (Z7Residue, Trace) {
    let mut trace = Trace::new();
    let mut acc = x.value();
    while acc % 4 != 0 {
        trace.push(Label::IterateAdd11, acc, acc + 11);
        acc += 11;
    }
    let halved = acc / 2;
    trace.push(Label::Halve, acc, halved);

    let remainder = mod7(halved);
    trace.push(Label::Mod7, halved, remainder.into());
    let result = sevens_complement(remainder);
    trace.push(Label::Complement, remainder.into(), result.into());
    (result, trace)
}

/// Runs the chosen strategy. The conway trace is minimal: its three terms,
/// their sum and the final reduction.
pub fn doomsyear(x: YearTwo, method: MethodId) -> (Z7Residue, Trace) {
    match method {
        MethodId::Conway => conway_with_trace(x),
        MethodId::Odd11 => odd11_doomsyear(x),
        MethodId::Walters => walters_doomsyear(x),
    }
}
