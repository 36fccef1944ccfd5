//! Arithmetic in the cyclic group of integers modulo 7.
//!
//! Residues are always stored in `0..=6`. Negation is expressed through the
//! 7's complement, whose value at zero is zero rather than seven.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::trace::{Label, Trace};

/// An element of Z/7Z, held as its least nonnegative representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Z7Residue(u8);

impl Z7Residue {
    pub const ZERO: Z7Residue = Z7Residue(0);

    /// Reduces any integer to its residue.
    pub fn new(n: i64) -> Self {
        mod7(n)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Every residue, in increasing order.
    pub fn all() -> impl Iterator<Item = Z7Residue> {
        (0..7).map(Z7Residue)
    }
}

impl fmt::Display for Z7Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<Z7Residue> for i64 {
    fn from(r: Z7Residue) -> i64 {
        i64::from(r.0)
    }
}

impl Add for Z7Residue {
    type Output = Z7Residue;

    fn add(self, rhs: Z7Residue) -> Z7Residue {
        Z7Residue((self.0 + rhs.0) % 7)
    }
}

impl Neg for Z7Residue {
    type Output = Z7Residue;

    fn neg(self) -> Z7Residue {
        sevens_complement(self)
    }
}

impl Sub for Z7Residue {
    type Output = Z7Residue;

    fn sub(self, rhs: Z7Residue) -> Z7Residue {
        self + -rhs
    }
}

/// Least nonnegative residue of `n` modulo 7.
pub fn mod7(n: i64) -> Z7Residue {
    Z7Residue(n.rem_euclid(7) as u8)
}

/// `7 - d`, with the complement of 0 taken as 0.
pub fn sevens_complement(d: Z7Residue) -> Z7Residue {
    if d.0 == 0 {
        d
    } else {
        Z7Residue(7 - d.0)
    }
}

/// Reduces `n` mod 7 through its nearest multiple of seven.
///
/// The trace holds a `closest_multiple` step (`n -> multiple`), a `subtract`
/// step (`n -> n - multiple`) and, when the multiple lies above `n`, a
/// `complement` step (`|difference| -> residue`). The nearest multiple never
/// ties since seven is odd; the smaller one would win if it did.
pub fn closest_multiple_mod7(n: u32) -> (Z7Residue, Trace) {
    let n = i64::from(n);
    let below = n - n % 7;
    let above = below + 7;
    let multiple = if above - n < n - below { above } else { below };
    let difference = n - multiple;

    let mut trace = Trace::new();
    trace.push(Label::ClosestMultiple, n, multiple);
    trace.push(Label::Subtract, n, difference);
    let residue = if difference < 0 {
        let r = sevens_complement(Z7Residue(-difference as u8));
        trace.push(Label::Complement, -difference, r.into());
        r
    } else {
        Z7Residue(difference as u8)
    };
    (residue, trace)
}

/// Day names in Conway's order, Sunday = 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Weekday {
    Sunday,
    Monday,
    Tuesday,
    Wednesday,
    Thursday,
    Friday,
    Saturday,
}

impl Weekday {
    /// Indexed by code.
    pub const ALL: [Weekday; 7] = [
        Weekday::Sunday,
        Weekday::Monday,
        Weekday::Tuesday,
        Weekday::Wednesday,
        Weekday::Thursday,
        Weekday::Friday,
        Weekday::Saturday,
    ];

    pub fn code(self) -> Z7Residue {
        Z7Residue(self as u8)
    }

    pub fn from_code(code: Z7Residue) -> Weekday {
        Weekday::ALL[code.0 as usize]
    }

    pub fn name(self) -> &'static str {
        match self {
            Weekday::Sunday => "Sunday",
            Weekday::Monday => "Monday",
            Weekday::Tuesday => "Tuesday",
            Weekday::Wednesday => "Wednesday",
            Weekday::Thursday => "Thursday",
            Weekday::Friday => "Friday",
            Weekday::Saturday => "Saturday",
        }
    }
}

impl fmt::Display for Weekday {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Weekday {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Weekday::ALL
            .iter()
            .copied()
            .find(|w| w.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown weekday {s:?}"))
    }
}

/// The weekday `k` days after `w` (before, for negative `k`).
pub fn weekday_add(w: Weekday, k: i64) -> Weekday {
    Weekday::from_code(mod7(i64::from(w.code()) + k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: u8) -> Z7Residue {
        Z7Residue(n)
    }

    #[test]
    fn mod7_examples() {
        assert_eq!(mod7(48), r(6));
        assert_eq!(mod7(0), r(0));
        assert_eq!(mod7(-60), r(3));
    }

    #[test]
    fn complement_table() {
        let expected = [0, 6, 5, 4, 3, 2, 1];
        for (d, want) in expected.iter().enumerate() {
            assert_eq!(sevens_complement(r(d as u8)), r(*want));
        }
    }

    #[test]
    fn closest_multiple_examples() {
        let cases = [(32, 4, 35, true), (58, 2, 56, false), (40, 5, 42, true), (62, 6, 63, true), (24, 3, 21, false)];
        for (n, residue, multiple, complemented) in cases {
            let (got, trace) = closest_multiple_mod7(n);
            assert_eq!(got, r(residue), "n={n}");
            assert_eq!(trace.steps()[0].output, multiple, "n={n}");
            assert_eq!(trace.contains(Label::Complement), complemented, "n={n}");
        }
    }

    #[test]
    fn closest_multiple_trace_shape() {
        let (_, trace) = closest_multiple_mod7(32);
        assert_eq!(trace.to_string(), "closest_multiple: 32 -> 35\nsubtract: 32 -> -3\ncomplement: 3 -> 4\n");
    }

    #[test]
    fn closest_multiple_prefers_nearer() {
        // 10 is 3 from 7 and 4 from 14.
        assert_eq!(closest_multiple_mod7(10).1.steps()[0].output, 7);
        assert_eq!(closest_multiple_mod7(11).1.steps()[0].output, 14);
        assert_eq!(closest_multiple_mod7(0).1.steps()[0].output, 0);
    }

    #[test]
    fn weekday_examples() {
        use Weekday::*;
        assert_eq!(weekday_add(Monday, 2), Wednesday);
        assert_eq!(weekday_add(Friday, -18), Monday);
        assert_eq!(weekday_add(Sunday, 0), Sunday);
        assert_eq!(weekday_add(Sunday, -60), Wednesday);
    }

    #[test]
    fn weekday_codes_are_conways_table() {
        let names = ["sunday", "monday", "tuesday", "wednesday", "thursday", "friday", "saturday"];
        for (code, name) in names.iter().enumerate() {
            let w: Weekday = name.parse().unwrap();
            assert_eq!(w.code(), r(code as u8));
            assert_eq!(Weekday::from_code(r(code as u8)), w);
        }
    }

    #[test]
    fn inverse_is_complement() {
        for x in Z7Residue::all() {
            assert_eq!(x + sevens_complement(x), Z7Residue::ZERO);
            assert_eq!(-(-x), x);
        }
    }

    #[test]
    fn group_closure_matches_integer_addition() {
        for a in Z7Residue::all() {
            for b in Z7Residue::all() {
                assert_eq!(a + b, mod7(i64::from(a) + i64::from(b)));
                assert_eq!(a - b, mod7(i64::from(a) - i64::from(b)));
            }
        }
    }

    #[test]
    fn closest_multiple_agrees_with_mod7_on_domain() {
        for n in 0..=199u32 {
            assert_eq!(closest_multiple_mod7(n).0, mod7(n.into()));
        }
    }

    proptest! {
        #[test]
        fn mod7_stays_in_range(n in any::<i64>()) {
            prop_assert!(mod7(n).value() <= 6);
        }

        #[test]
        fn negation_is_complement_of_absolute_residue(n in 1i64..=i64::MAX / 2) {
            prop_assert_eq!(mod7(-n), sevens_complement(mod7(n)));
        }

        #[test]
        fn weekday_shift_round_trips(code in 0u8..7, k in -100_000i64..100_000) {
            let w = Weekday::from_code(Z7Residue(code));
            prop_assert_eq!(weekday_add(weekday_add(w, k), -k), w);
        }
    }
}
