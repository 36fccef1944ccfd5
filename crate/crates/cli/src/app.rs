//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 success or agreement, 1 a mismatch was found, 2 usage or
//! validation error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use doomsday_core::doomsday::{alternate_doomsdate, doomsdate};
use doomsday_core::{day_of_week, doomsyear, CivilDate, DayOfWeek, MethodId, Trace, YearTwo};
use serde::Serialize;

use crate::{equiv, stats, verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "doomsday", version, about = "Day of the week by Conway's Doomsday rule")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[value(name = "conway")]
    Conway,
    #[value(name = "odd11")]
    Odd11,
    #[value(name = "walters")]
    Walters,
}

impl From<MethodArg> for MethodId {
    fn from(m: MethodArg) -> MethodId {
        match m {
            MethodArg::Conway => MethodId::Conway,
            MethodArg::Odd11 => MethodId::Odd11,
            MethodArg::Walters => MethodId::Walters,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DoomsyearMethodArg {
    #[value(name = "conway")]
    Conway,
    #[value(name = "odd11")]
    Odd11,
    #[value(name = "walters")]
    Walters,
    #[value(name = "all")]
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Weekday of a date given as YYYY-MM-DD
    Day {
        date: String,
        #[arg(long, value_enum, default_value = "odd11")]
        method: MethodArg,
        /// Print every step of the calculation
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        json: bool,
    },
    /// Doomsyear term of a two-digit year
    Doomsyear {
        #[arg(allow_hyphen_values = true)]
        year: String,
        #[arg(long, value_enum, default_value = "odd11")]
        method: DoomsyearMethodArg,
        #[arg(long)]
        explain: bool,
    },
    /// Compare the pipeline with the oracle for every date in a year range
    Verify {
        #[arg(allow_hyphen_values = true)]
        from_year: i64,
        #[arg(allow_hyphen_values = true)]
        to_year: i64,
        #[arg(long, value_enum, default_value = "odd11")]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Check that all doomsyear strategies agree on 00..99
    Equiv {
        #[arg(long)]
        json: bool,
    },
    /// Operation counts per doomsyear strategy over 00..99
    Stats {
        #[arg(long)]
        json: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    let result = match command {
        Command::Day { date, method, explain, json } => cmd_day(&date, method.into(), explain, json),
        Command::Doomsyear { year, method, explain } => cmd_doomsyear(&year, method, explain),
        Command::Verify { from_year, to_year, method, json } => cmd_verify(from_year, to_year, method.into(), json),
        Command::Equiv { json } => cmd_equiv(json),
        Command::Stats { json } => cmd_stats(json),
    };
    result.and_then(|(code, text)| {
        out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
        Ok(code)
    })
}

type Output = Result<(i32, String), String>;

#[derive(Debug, Serialize)]
struct BreakdownJson {
    doomscentury: i64,
    doomsyear: i64,
    doomsmonth: i64,
    sum_mod7: i64,
}

#[derive(Debug, Serialize)]
struct DayJson<'a> {
    date: String,
    method: MethodId,
    weekday: &'a str,
    breakdown: BreakdownJson,
    trace: &'a Trace,
}

const MONTHS: [&str; 12] = [
    "January",
    "February",
    "March",
    "April",
    "May",
    "June",
    "July",
    "August",
    "September",
    "October",
    "November",
    "December",
];

fn cmd_day(date: &str, method: MethodId, explain: bool, json: bool) -> Output {
    let date: CivilDate = date.parse().map_err(|e: doomsday_core::Error| e.to_string())?;
    let result = day_of_week(date, method);

    if json {
        let b = &result.breakdown;
        let doc = DayJson {
            date: date.to_string(),
            method,
            weekday: result.weekday.name(),
            breakdown: BreakdownJson {
                doomscentury: b.doomscentury.into(),
                doomsyear: b.doomsyear.into(),
                doomsmonth: b.doomsmonth,
                sum_mod7: b.sum_mod7().into(),
            },
            trace: &result.trace,
        };
        let text = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
        return Ok((EXIT_OK, text + "\n"));
    }
    if explain {
        return Ok((EXIT_OK, explain_day(date, method, &result)));
    }
    Ok((EXIT_OK, format!("{}\n", result.weekday)))
}

fn explain_day(date: CivilDate, method: MethodId, result: &DayOfWeek) -> String {
    let leap = date.is_leap();
    let month = date.month();
    let anchor = doomsdate(month, leap).expect("valid month");
    let mut text = format!("{date}: century {}, year {:02}, doomsyear by {method}\n", date.century(), date.year_two());
    for (i, line) in result.trace.narrate().iter().enumerate() {
        let arrow = if i == 0 { "" } else { "→ " };
        text.push_str(&format!("{:>2}) {arrow}{line}\n", i + 1));
    }
    let mut doomsday_line = format!("Doomsday in {} is {month}/{anchor}", MONTHS[(month - 1) as usize]);
    if let Some(alt) = alternate_doomsdate(month, leap) {
        doomsday_line.push_str(&format!(" (also {month}/{alt})"));
    }
    text.push_str(&doomsday_line);
    text.push('\n');
    text.push_str(&format!("{}\n", result.weekday));
    text
}

fn parse_year_two(s: &str) -> Result<YearTwo, String> {
    let x: i64 = s.trim().parse().map_err(|_| format!("cannot parse two-digit year {s:?}"))?;
    YearTwo::new(x).map_err(|e| e.to_string())
}

fn cmd_doomsyear(year: &str, method: DoomsyearMethodArg, explain: bool) -> Output {
    let x = parse_year_two(year)?;
    let single = |m: MethodId| {
        let (residue, trace) = doomsyear(x, m);
        if explain {
            trace.explain()
        } else {
            format!("{residue}\n")
        }
    };
    Ok(match method {
        DoomsyearMethodArg::Conway => (EXIT_OK, single(MethodId::Conway)),
        DoomsyearMethodArg::Odd11 => (EXIT_OK, single(MethodId::Odd11)),
        DoomsyearMethodArg::Walters => (EXIT_OK, single(MethodId::Walters)),
        DoomsyearMethodArg::All => {
            let mut text = String::new();
            let mut residues = Vec::new();
            for m in MethodId::ALL {
                let (residue, trace) = doomsyear(x, m);
                text.push_str(&format!("{m} {residue}\n"));
                if explain {
                    for line in trace.explain().lines() {
                        text.push_str(&format!("    {line}\n"));
                    }
                }
                residues.push(residue);
            }
            let agree = residues.windows(2).all(|w| w[0] == w[1]);
            text.push_str(if agree { "AGREE\n" } else { "DISAGREE\n" });
            (if agree { EXIT_OK } else { EXIT_MISMATCH }, text)
        }
    })
}

fn cmd_verify(from_year: i64, to_year: i64, method: MethodId, json: bool) -> Output {
    let report = verify::verify_range(from_year, to_year, method)?;
    let code = if report.success() { EXIT_OK } else { EXIT_MISMATCH };
    let text = if json {
        serde_json::to_string_pretty(&report).map_err(|e| e.to_string())? + "\n"
    } else {
        verify::render_text(&report)
    };
    Ok((code, text))
}

fn cmd_equiv(json: bool) -> Output {
    let rows = equiv::equiv_rows();
    let ok = rows.iter().all(|r| r.agrees() && r.mod7_input_even());
    let text = if json {
        serde_json::to_string_pretty(&rows).map_err(|e| e.to_string())? + "\n"
    } else {
        equiv::render_text(&rows)
    };
    Ok((if ok { EXIT_OK } else { EXIT_MISMATCH }, text))
}

fn cmd_stats(json: bool) -> Output {
    let report = stats::cost_report();
    let text = if json {
        serde_json::to_string_pretty(&report).map_err(|e| e.to_string())? + "\n"
    } else {
        stats::render_text(&report)
    };
    Ok((EXIT_OK, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("doomsday").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn day_default_method() {
        assert_eq!(call(&["day", "2000-02-29"]), (0, "Tuesday\n".into(), String::new()));
        assert_eq!(call(&["day", "1985-04-04", "--method", "odd11"]).1, "Thursday\n");
    }

    #[test]
    fn day_validation_errors() {
        let (code, _, err) = call(&["day", "1985-13-01"]);
        assert_eq!(code, 2);
        assert!(err.contains("invalid month"), "{err}");
        let (code, _, err) = call(&["day", "1500-01-01"]);
        assert_eq!(code, 2);
        assert!(err.contains("outside supported range"), "{err}");
        assert_eq!(call(&["day", "yesterday"]).0, 2);
        assert_eq!(call(&["day", "2000-01-01", "--method", "decade"]).0, 2);
    }

    #[test]
    fn explain_mentions_leap_alternate() {
        let (_, text, _) = call(&["day", "2000-01-01", "--explain"]);
        assert!(text.contains("Doomsday in January is 1/4 (also 1/11)"), "{text}");
        assert!(text.ends_with("Saturday\n"), "{text}");
        assert!(text.contains("whose seven's complement is 6"), "{text}");
    }

    #[test]
    fn doomsyear_examples() {
        assert_eq!(call(&["doomsyear", "99"]).1, "4\n");
        assert_eq!(call(&["doomsyear", "07"]).1, "1\n");
        assert_eq!(
            call(&["doomsyear", "00", "--method", "all"]),
            (0, "conway 0\nodd11 0\nwalters 0\nAGREE\n".into(), String::new())
        );
        assert_eq!(call(&["doomsyear", "100"]).0, 2);
        assert_eq!(call(&["doomsyear", "-1"]).0, 2);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, text, _) = call(&["verify", "2000", "2000"]);
        assert_eq!(code, 0);
        assert!(text.starts_with("checked 366 dates"), "{text}");
        assert_eq!(call(&["verify", "2199", "1800"]).0, 2);
    }

    #[test]
    fn help_goes_to_stdout_with_success() {
        let (code, text, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(text.contains("doomsyear"));
        assert_eq!(call(&[]).0, 2);
    }
}
