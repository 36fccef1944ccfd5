//! Date-range scan comparing the Doomsday pipeline with the oracle.

use std::fmt::Write as _;
use std::time::Instant;

use doomsday_core::date::{check_year, CivilDate};
use doomsday_core::{day_of_week, oracle_weekday, MethodId, Weekday};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub date: String,
    pub expected: Weekday,
    pub got: Weekday,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub from_year: i64,
    pub to_year: i64,
    pub method: MethodId,
    pub dates_checked: u64,
    /// Calendar order, whatever the worker count.
    pub mismatches: Vec<Mismatch>,
    pub elapsed_ms: f64,
}

impl VerifyReport {
    pub fn success(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn check_range(from_year: i64, to_year: i64) -> Result<(), String> {
    check_year(from_year).map_err(|e| e.to_string())?;
    check_year(to_year).map_err(|e| e.to_string())?;
    if from_year > to_year {
        return Err(format!("empty range: from-year {from_year} is after to-year {to_year}"));
    }
    Ok(())
}

/// Scans every date of `from_year..=to_year` with `compute`, in parallel by
/// year.
pub fn verify_with<F>(from_year: i64, to_year: i64, method: MethodId, compute: F) -> Result<VerifyReport, String>
where
    F: Fn(CivilDate) -> Weekday + Sync,
{
    check_range(from_year, to_year)?;
    let start = Instant::now();
    let per_year: Vec<(u64, Vec<Mismatch>)> = (from_year..=to_year)
        .into_par_iter()
        .map(|year| {
            let mut checked = 0;
            let mut mismatches = Vec::new();
            for date in CivilDate::days_of_year(year).expect("year validated") {
                checked += 1;
                let expected = oracle_weekday(date).expect("valid date");
                let got = compute(date);
                if got != expected {
                    mismatches.push(Mismatch { date: date.to_string(), expected, got });
                }
            }
            (checked, mismatches)
        })
        .collect();

    let dates_checked = per_year.iter().map(|(n, _)| n).sum();
    let mismatches = per_year.into_iter().flat_map(|(_, m)| m).collect();
    Ok(VerifyReport {
        from_year,
        to_year,
        method,
        dates_checked,
        mismatches,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

pub fn verify_range(from_year: i64, to_year: i64, method: MethodId) -> Result<VerifyReport, String> {
    verify_with(from_year, to_year, method, |d| day_of_week(d, method).weekday)
}

pub fn render_text(report: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "checked {} dates from {:04}-01-01 to {:04}-12-31 with {}: {} mismatches ({:.1} ms)",
        report.dates_checked,
        report.from_year,
        report.to_year,
        report.method,
        report.mismatches.len(),
        report.elapsed_ms
    );
    for m in &report.mismatches {
        let _ = writeln!(out, "  {}: expected {}, got {}", m.date, m.expected, m.got);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use doomsday_core::weekday_add;

    #[test]
    fn single_leap_year() {
        let report = verify_range(2000, 2000, MethodId::Odd11).unwrap();
        assert_eq!(report.dates_checked, 366);
        assert!(report.success());
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(verify_range(2199, 1800, MethodId::Odd11).is_err());
        assert!(verify_range(1582, 1600, MethodId::Odd11).is_err());
        assert!(verify_range(1600, 10_000, MethodId::Odd11).is_err());
    }

    #[test]
    fn mismatches_are_reported_in_calendar_order() {
        // Wrong on the 13th of every month.
        let faulty = |d: CivilDate| {
            let w = day_of_week(d, MethodId::Conway).weekday;
            if d.day() == 13 {
                weekday_add(w, 1)
            } else {
                w
            }
        };
        let report = verify_with(1990, 2009, MethodId::Conway, faulty).unwrap();
        assert_eq!(report.mismatches.len(), 20 * 12);
        assert!(!report.success());
        assert_eq!(report.mismatches[0].date, "1990-01-13");
        let dates: Vec<&str> = report.mismatches.iter().map(|m| m.date.as_str()).collect();
        let mut sorted = dates.clone();
        sorted.sort();
        assert_eq!(dates, sorted);
    }
}
