//! Independent weekday oracle based on a day count from 1970-01-01.
//!
//! Nothing here goes through the Doomsday pipeline or the Z/7Z helpers; the
//! leap rule and month lengths are re-derived locally so that agreement with
//! [`crate::doomsday::day_of_week`] is evidence rather than a tautology.

use serde::{Deserialize, Serialize};

use crate::date::CivilDate;
use crate::error::{Error, Result};
use crate::z7::Weekday;

/// Days since 1970-01-01, a Thursday.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EpochDayNumber(pub i64);

impl EpochDayNumber {
    pub fn days(self) -> i64 {
        self.0
    }
}

/// Days from 0000-03-01 to 1970-01-01 in the March-based proleptic count.
const EPOCH_SHIFT: i64 = 719_468;
const DAYS_PER_ERA: i64 = 146_097;
/// Thursday in the Sunday = 0 numbering.
const EPOCH_WEEKDAY: i64 = 4;

fn leap(year: i64) -> bool {
    if year % 400 == 0 {
        true
    } else if year % 100 == 0 {
        false
    } else {
        year % 4 == 0
    }
}

pub fn february_length(year: i64) -> i64 {
    if leap(year) {
        29
    } else {
        28
    }
}

fn month_days(year: i64, month: i64) -> Option<i64> {
    const LENGTHS: [i64; 12] = [31, 0, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31];
    match month {
        2 => Some(february_length(year)),
        1..=12 => Some(LENGTHS[(month - 1) as usize]),
        _ => None,
    }
}

/// Day count using shifted 400-year eras in which March is the first month,
/// so the leap day sits at the end of each computational year.
pub fn to_epoch_days(date: CivilDate) -> Result<EpochDayNumber> {
    let (year, month, day) = (date.year(), date.month(), date.day());
    if !(1583..=9999).contains(&year) {
        return Err(Error::YearOutOfRange(year));
    }
    let len = month_days(year, month).ok_or(Error::InvalidMonth(month))?;
    if !(1..=len).contains(&day) {
        return Err(Error::InvalidDay { year, month, day });
    }

    let y = if month <= 2 { year - 1 } else { year };
    let era = y.div_euclid(400);
    let year_of_era = y - era * 400;
    let shifted_month = (month + 9) % 12; // March = 0
    let day_of_year = (153 * shifted_month + 2) / 5 + day - 1;
    let day_of_era = year_of_era * 365 + year_of_era / 4 - year_of_era / 100 + day_of_year;
    Ok(EpochDayNumber(era * DAYS_PER_ERA + day_of_era - EPOCH_SHIFT))
}

pub fn oracle_weekday(date: CivilDate) -> Result<Weekday> {
    let days = to_epoch_days(date)?.days();
    Ok(Weekday::ALL[(days + EPOCH_WEEKDAY).rem_euclid(7) as usize])
}
