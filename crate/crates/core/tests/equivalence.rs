//! Exhaustive checks of the doomsyear identities and of the full pipeline
//! against the day-count oracle.

use doomsday_core::date::{is_leap, CivilDate, MAX_YEAR, MIN_YEAR};
use doomsday_core::doomsday::{alternate_doomsdate, doomscentury, doomsdate};
use doomsday_core::doomsyear::{conway_doomsyear, odd11_doomsyear, simplified_doomsyear, walters_doomsyear};
use doomsday_core::{day_of_week, mod7, oracle_weekday, to_epoch_days, Label, MethodId, Weekday, YearTwo};

/// The Odd+11 procedure written as a single closed-form expression.
fn odd11_closed_form(x: i64) -> i64 {
    let half = (x + 11 * (x % 2)) / 2;
    -(half + 11 * (half % 2))
}

#[test]
fn all_strategies_agree_for_every_two_digit_year() {
    for x in YearTwo::all() {
        let reference = simplified_doomsyear(x);
        assert_eq!(conway_doomsyear(x), reference, "conway x={x}");
        assert_eq!(odd11_doomsyear(x).0, reference, "odd11 x={x}");
        assert_eq!(walters_doomsyear(x).0, reference, "walters x={x}");
        assert_eq!(mod7(odd11_closed_form(x.value())), reference, "closed form x={x}");
    }
}

#[test]
fn walters_sum_is_seven_times_an_integer_over_four() {
    for x in 0..=99i64 {
        let s = x + 11 * (x % 4);
        assert_eq!(s % 4, 0);
        assert_eq!((x + x / 4 + s / 2) % 7, 0, "x={x}");
    }
}

#[test]
fn value_entering_mod7_is_even() {
    for x in YearTwo::all() {
        let (_, trace) = odd11_doomsyear(x);
        let step = trace.steps().iter().find(|s| s.label == Label::Mod7).unwrap();
        assert_eq!(step.input % 2, 0, "x={x}");
    }
}

fn all_dates() -> impl Iterator<Item = CivilDate> {
    std::iter::successors(Some(CivilDate::new(MIN_YEAR, 1, 1).unwrap()), |d| d.succ())
}

#[test]
fn oracle_successor_property_over_supported_range() {
    let mut prev = to_epoch_days(CivilDate::new(MIN_YEAR, 1, 1).unwrap()).unwrap().days();
    let mut count = 1;
    for d in all_dates().skip(1) {
        let days = to_epoch_days(d).unwrap().days();
        assert_eq!(days, prev + 1, "{d}");
        prev = days;
        count += 1;
    }
    let last = to_epoch_days(CivilDate::new(MAX_YEAR, 12, 31).unwrap()).unwrap().days();
    assert_eq!(prev, last);
    assert_eq!(count, last - to_epoch_days(CivilDate::new(MIN_YEAR, 1, 1).unwrap()).unwrap().days() + 1);
}

#[test]
fn pipeline_matches_oracle_over_supported_range() {
    for d in all_dates() {
        let expected = oracle_weekday(d).unwrap();
        for method in MethodId::ALL {
            let out = day_of_week(d, method);
            assert_eq!(out.weekday, expected, "{d} {method}");
            assert_eq!(out.breakdown.sum_mod7(), out.weekday.code(), "{d} {method}");
        }
    }
}

#[test]
fn doomsdates_share_a_weekday_in_every_year() {
    for year in MIN_YEAR..=MAX_YEAR {
        let leap = is_leap(year).unwrap();
        let on = |m, d| oracle_weekday(CivilDate::new(year, m, d).unwrap()).unwrap();
        let anchor = on(4, 4);
        for month in 1..=12 {
            assert_eq!(on(month, doomsdate(month, leap).unwrap()), anchor, "{year}-{month}");
            if let Some(alt) = alternate_doomsdate(month, leap) {
                assert_eq!(on(month, alt), anchor, "{year}-{month} alternate");
            }
        }
    }
}

#[test]
fn doomscentury_is_the_weekday_of_the_centurys_anchor() {
    for c in 16..=99 {
        let year = c * 100;
        if year < MIN_YEAR {
            continue;
        }
        let leap = is_leap(year).unwrap();
        let anchor = oracle_weekday(CivilDate::new(year, 2, doomsdate(2, leap).unwrap()).unwrap()).unwrap();
        // The anchor year has doomsyear 0, so its Doomsday is the century term.
        assert_eq!(Weekday::from_code(doomscentury(year).unwrap()), anchor, "{year}");
    }
    for year in MIN_YEAR..=MAX_YEAR - 400 {
        assert_eq!(doomscentury(year), doomscentury(year + 400));
    }
}
