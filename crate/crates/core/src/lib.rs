//! Day-of-week computation with Conway's Doomsday rule.
//!
//! The year-within-century term can be computed three ways (see
//! [`doomsyear`]); each produces a [`Trace`] of the mental steps involved.
//! [`oracle`] is an independent day-count implementation used to check the
//! pipeline.

pub mod date;
pub mod doomsday;
pub mod doomsyear;
mod error;
pub mod oracle;
pub mod trace;
pub mod z7;

pub use date::CivilDate;
pub use doomsday::{day_of_week, DayOfWeek, DoomsdayBreakdown};
pub use doomsyear::{doomsyear, MethodId, YearTwo};
pub use error::{Error, Result};
pub use oracle::{oracle_weekday, to_epoch_days, EpochDayNumber};
pub use trace::{Label, Step, Trace};
pub use z7::{mod7, sevens_complement, weekday_add, Weekday, Z7Residue};
