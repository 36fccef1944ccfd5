use thiserror::Error;

/// Validation failures for inputs to the doomsday computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("two-digit year {0} out of range 0..=99")]
    YearTwoOutOfRange(i64),
    #[error("year {0} outside supported range 1583..=9999")]
    YearOutOfRange(i64),
    #[error("invalid month {0}")]
    InvalidMonth(i64),
    #[error("invalid day {day} for {year:04}-{month:02}")]
    InvalidDay { year: i64, month: i64, day: i64 },
    #[error("invalid day {day} for month {month}")]
    InvalidMonthDay { month: i64, day: i64 },
    #[error("cannot parse date {0:?}, expected YYYY-MM-DD")]
    DateFormat(String),
    #[error("unknown method {0:?}, expected conway, odd11 or walters")]
    UnknownMethod(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
