//! The full pipeline: `weekday = doomscentury + doomsyear + doomsmonth (mod 7)`.
//!
//! The doomsyear term is computed first, the century anchor is added to it,
//! then the month offset, and a single reduction mod 7 closes the sum.

use serde::{Deserialize, Serialize};

use crate::date::{self, check_year, CivilDate};
use crate::doomsyear::{doomsyear, MethodId, YearTwo};
use crate::error::{Error, Result};
use crate::trace::{Label, Trace};
use crate::z7::{mod7, sevens_complement, Weekday, Z7Residue};

pub use crate::date::is_leap;

/// Weekday code of the century's anchor Doomsday, `5 * (c mod 4) + 2 (mod 7)`
/// with `c = floor(year / 100)`.
pub fn doomscentury(year: i64) -> Result<Z7Residue> {
    check_year(year)?;
    let c = year / 100;
    Ok(mod7(5 * (c % 4) + 2))
}

/// The day of `month` that always falls on the year's Doomsday.
pub fn doomsdate(month: i64, leap: bool) -> Result<i64> {
    Ok(match month {
        1 if leap => 4,
        1 => 3,
        2 if leap => 29,
        2 => 28,
        3 => 7,
        4 => 4,
        5 => 9,
        6 => 6,
        7 => 11,
        8 => 8,
        9 => 5,
        10 => 10,
        11 => 7,
        12 => 12,
        _ => return Err(Error::InvalidMonth(month)),
    })
}

/// The leap-year mnemonics 1/11 and 2/22, a week after the canonical
/// January and February Doomsdays.
pub fn alternate_doomsdate(month: i64, leap: bool) -> Option<i64> {
    match (month, leap) {
        (1, true) => Some(11),
        (2, true) => Some(22),
        _ => None,
    }
}

/// Signed distance from the month's Doomsday to `day`.
pub fn doomsmonth(month: i64, day: i64, leap: bool) -> Result<i64> {
    let anchor = doomsdate(month, leap)?;
    let len = date::month_length(month, leap)?;
    if !(1..=len).contains(&day) {
        return Err(Error::InvalidMonthDay { month, day });
    }
    Ok(day - anchor)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoomsdayBreakdown {
    pub doomscentury: Z7Residue,
    pub doomsyear: Z7Residue,
    pub doomsmonth: i64,
    pub weekday: Weekday,
}

impl DoomsdayBreakdown {
    /// Recombines the three terms.
    pub fn sum_mod7(&self) -> Z7Residue {
        mod7(i64::from(self.doomscentury) + i64::from(self.doomsyear) + self.doomsmonth)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DayOfWeek {
    pub weekday: Weekday,
    pub breakdown: DoomsdayBreakdown,
    pub trace: Trace,
}

pub fn day_of_week(date: CivilDate, method: MethodId) -> DayOfWeek {
    let leap = date.is_leap();
    let x = YearTwo::new(date.year_two()).expect("year mod 100 is a two-digit year");
    let century = doomscentury(date.year()).expect("CivilDate year is in range");
    let month_offset = doomsmonth(date.month(), date.day(), leap).expect("CivilDate is valid");

    let (year_term, mut trace) = doomsyear(x, method);

    let mut acc = i64::from(year_term);
    trace.push(Label::AddDoomscentury, acc, acc + i64::from(century));
    acc += i64::from(century);
    trace.push(Label::AddDoomsmonth, acc, acc + month_offset);
    acc += month_offset;

    let code = reduce_running_sum(acc, &mut trace);
    let weekday = Weekday::from_code(code);
    DayOfWeek {
        weekday,
        breakdown: DoomsdayBreakdown { doomscentury: century, doomsyear: year_term, doomsmonth: month_offset, weekday },
        trace,
    }
}

/// Final reduction. A negative sum is reduced by its absolute value and
/// then complemented, so the trace never shows a negative modulus.
fn reduce_running_sum(sum: i64, trace: &mut Trace) -> Z7Residue {
    if sum >= 0 {
        let r = mod7(sum);
        trace.push(Label::Mod7, sum, r.into());
        return r;
    }
    trace.push(Label::Negate, sum, -sum);
    let r = mod7(-sum);
    trace.push(Label::Mod7, -sum, r.into());
    let c = sevens_complement(r);
    trace.push(Label::Complement, r.into(), c.into());
    c
}
