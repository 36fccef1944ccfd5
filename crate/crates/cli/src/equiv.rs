//! Exhaustive four-way doomsyear comparison over `x = 0..=99`.

use std::fmt::Write as _;

use doomsday_core::doomsyear::{conway_doomsyear, odd11_doomsyear, simplified_doomsyear, walters_doomsyear};
use doomsday_core::{Label, YearTwo, Z7Residue};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivRow {
    pub x: i64,
    pub conway: Z7Residue,
    pub simplified: Z7Residue,
    pub odd11: Z7Residue,
    pub walters: Z7Residue,
    /// The odd11 accumulator as it enters the mod-7 step.
    pub mod7_input: i64,
}

impl EquivRow {
    pub fn agrees(&self) -> bool {
        self.conway == self.simplified && self.odd11 == self.simplified && self.walters == self.simplified
    }

    pub fn mod7_input_even(&self) -> bool {
        self.mod7_input % 2 == 0
    }
}

pub fn equiv_rows() -> Vec<EquivRow> {
    YearTwo::all()
        .map(|x| {
            let (odd11, trace) = odd11_doomsyear(x);
            let mod7_input = trace
                .steps()
                .iter()
                .find(|s| s.label == Label::Mod7)
                .map(|s| s.input)
                .expect("odd11 always reduces mod 7");
            EquivRow {
                x: x.value(),
                conway: conway_doomsyear(x),
                simplified: simplified_doomsyear(x),
                odd11,
                walters: walters_doomsyear(x).0,
                mod7_input,
            }
        })
        .collect()
}

pub fn render_text(rows: &[EquivRow]) -> String {
    let mut out = String::from(" x  conway  simplified  odd11  walters  mod7_in\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{:02}  {:>6}  {:>10}  {:>5}  {:>7}  {:>7}{}",
            r.x,
            r.conway,
            r.simplified,
            r.odd11,
            r.walters,
            r.mod7_input,
            if r.agrees() && r.mod7_input_even() { "" } else { "  <-- FAIL" }
        );
    }
    let agree = rows.iter().filter(|r| r.agrees()).count();
    let even = rows.iter().filter(|r| r.mod7_input_even()).count();
    let _ = writeln!(out, "{agree}/{} agree; {even}/{} mod-7 inputs even", rows.len(), rows.len());
    out
}
