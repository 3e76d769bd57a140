//! Day count conventions for accrual fractions.

use chrono::{Datelike, NaiveDate};

use crate::error::{Error, Result};

/// Supported day count conventions.
///
/// `Thirty360` follows the US 30/360 rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DayCount {
    Act360,
    #[default]
    Act365F,
    Thirty360,
}

impl DayCount {
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "act/360" | "act360" => Some(DayCount::Act360),
            "act/365" | "act/365f" | "act365f" | "act365" => Some(DayCount::Act365F),
            "30/360" | "30e360" | "thirty360" | "30/360us" => Some(DayCount::Thirty360),
            _ => None,
        }
    }
}

impl std::fmt::Display for DayCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DayCount::Act360 => "act/360",
            DayCount::Act365F => "act/365f",
            DayCount::Thirty360 => "30/360",
        };
        f.write_str(s)
    }
}

/// Accrual fraction `δ(from, to)` under the given convention.
///
/// Rejects reversed date ranges; `δ(d, d) = 0`.
pub fn year_fraction(dc: DayCount, from: NaiveDate, to: NaiveDate) -> Result<f64> {
    if to < from {
        return Err(Error::InvalidArgument(format!(
            "reversed date range {from} .. {to}"
        )));
    }
    let frac = match dc {
        DayCount::Act360 => (to - from).num_days() as f64 / 360.0,
        DayCount::Act365F => (to - from).num_days() as f64 / 365.0,
        DayCount::Thirty360 => {
            let d1 = from.day().min(30) as i64;
            let d2 = if to.day() == 31 && from.day() >= 30 {
                30
            } else {
                to.day() as i64
            };
            let days = 360 * (to.year() as i64 - from.year() as i64)
                + 30 * (to.month() as i64 - from.month() as i64)
                + (d2 - d1);
            days as f64 / 360.0
        }
    };
    Ok(frac)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn d(y: i32, m: u32, day: u32) -> NaiveDate {
        NaiveDate::from_ymd_opt(y, m, day).unwrap()
    }

    #[test]
    fn same_date_is_zero() {
        for dc in [DayCount::Act360, DayCount::Act365F, DayCount::Thirty360] {
            assert_eq!(year_fraction(dc, d(2012, 10, 1), d(2012, 10, 1)).unwrap(), 0.0);
        }
    }

    #[test]
    fn act360_94_days() {
        let f = year_fraction(DayCount::Act360, d(2012, 10, 1), d(2013, 1, 3)).unwrap();
        assert_relative_eq!(f, 94.0 / 360.0, max_relative = 1e-15);
    }

    #[test]
    fn thirty360_half_year() {
        let f = year_fraction(DayCount::Thirty360, d(2013, 1, 15), d(2013, 7, 15)).unwrap();
        assert_eq!(f, 0.5);
    }

    #[test]
    fn thirty360_month_end_rule() {
        // 30th to 31st collapses to zero days under the US rule
        let f = year_fraction(DayCount::Thirty360, d(2013, 1, 30), d(2013, 1, 31)).unwrap();
        assert_eq!(f, 0.0);
        // but 29th to 31st keeps the 31st
        let f = year_fraction(DayCount::Thirty360, d(2013, 1, 29), d(2013, 1, 31)).unwrap();
        assert_eq!(f, 2.0 / 360.0);
    }

    #[test]
    fn reversed_range_rejected() {
        assert!(year_fraction(DayCount::Act365F, d(2013, 1, 2), d(2013, 1, 1)).is_err());
    }

    #[test]
    fn act_conventions_are_additive() {
        let (a, b, c) = (d(2012, 3, 1), d(2012, 11, 17), d(2014, 6, 2));
        for dc in [DayCount::Act360, DayCount::Act365F] {
            let whole = year_fraction(dc, a, c).unwrap();
            let split =
                year_fraction(dc, a, b).unwrap() + year_fraction(dc, b, c).unwrap();
            assert_relative_eq!(whole, split, max_relative = 1e-15);
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!(DayCount::parse("ACT/360"), Some(DayCount::Act360));
        assert_eq!(DayCount::parse("act/365f"), Some(DayCount::Act365F));
        assert_eq!(DayCount::parse("30/360"), Some(DayCount::Thirty360));
        assert_eq!(DayCount::parse("bogus"), None);
    }
}
