//! Validated Gregorian calendar dates in the supported range.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MIN_YEAR: i64 = 1583;
pub const MAX_YEAR: i64 = 9999;

pub fn check_year(year: i64) -> Result<()> {
    if (MIN_YEAR..=MAX_YEAR).contains(&year) {
        Ok(())
    } else {
        Err(Error::YearOutOfRange(year))
    }
}

/// Gregorian leap rule.
pub fn is_leap(year: i64) -> Result<bool> {
    check_year(year)?;
    Ok(gregorian_leap(year))
}

fn gregorian_leap(year: i64) -> bool {
    year % 4 == 0 && (year % 100 != 0 || year % 400 == 0)
}

pub fn days_in_month(year: i64, month: i64) -> Result<i64> {
    check_year(year)?;
    month_length(month, gregorian_leap(year))
}

pub(crate) fn month_length(month: i64, leap: bool) -> Result<i64> {
    Ok(match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 if leap => 29,
        2 => 28,
        _ => return Err(Error::InvalidMonth(month)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CivilDate {
    year: u16,
    month: u8,
    day: u8,
}

impl CivilDate {
    pub fn new(year: i64, month: i64, day: i64) -> Result<Self> {
        check_year(year)?;
        let len = month_length(month, gregorian_leap(year))?;
        if !(1..=len).contains(&day) {
            return Err(Error::InvalidDay { year, month, day });
        }
        Ok(CivilDate { year: year as u16, month: month as u8, day: day as u8 })
    }

    pub fn year(self) -> i64 {
        i64::from(self.year)
    }

    pub fn month(self) -> i64 {
        i64::from(self.month)
    }

    pub fn day(self) -> i64 {
        i64::from(self.day)
    }

    pub fn is_leap(self) -> bool {
        gregorian_leap(self.year())
    }

    /// `floor(year / 100)`.
    pub fn century(self) -> i64 {
        self.year() / 100
    }

    /// `year mod 100`; year 2000 has two-digit year 00 in century 20.
    pub fn year_two(self) -> i64 {
        self.year() % 100
    }

    /// The following day, or `None` after 9999-12-31.
    pub fn succ(self) -> Option<CivilDate> {
        let (y, m, d) = (self.year(), self.month(), self.day());
        CivilDate::new(y, m, d + 1)
            .or_else(|_| CivilDate::new(y, m + 1, 1))
            .or_else(|_| CivilDate::new(y + 1, 1, 1))
            .ok()
    }

    /// Every date of `year`, in calendar order.
    pub fn days_of_year(year: i64) -> Result<impl Iterator<Item = CivilDate>> {
        let first = CivilDate::new(year, 1, 1)?;
        Ok(std::iter::successors(Some(first), |d| d.succ()).take_while(move |d| d.year() == year))
    }
}

impl fmt::Display for CivilDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
    }
}

/// ISO 8601 calendar date, `YYYY-MM-DD`.
impl FromStr for CivilDate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::DateFormat(s.to_owned());
        let mut parts = s.trim().split('-');
        let (Some(y), Some(m), Some(d), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(bad());
        };
        if y.len() != 4 || m.len() != 2 || d.len() != 2 {
            return Err(bad());
        }
        let num = |p: &str| -> Result<i64> {
            if p.bytes().all(|b| b.is_ascii_digit()) {
                p.parse().map_err(|_| bad())
            } else {
                Err(bad())
            }
        };
        CivilDate::new(num(y)?, num(m)?, num(d)?)
    }
}
