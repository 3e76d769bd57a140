//! Date arithmetic: weekend rolls, spot lag, and periodic payment schedules.
//!
//! The calendar is weekend-only; no holiday files are consulted.

use chrono::{Datelike, Months, NaiveDate, Weekday};

use crate::error::{Error, Result};

/// Roll a date falling on a weekend forward to the following Monday.
pub fn roll_following(date: NaiveDate) -> NaiveDate {
    match date.weekday() {
        Weekday::Sat => date + chrono::Duration::days(2),
        Weekday::Sun => date + chrono::Duration::days(1),
        _ => date,
    }
}

/// Advance a number of business days (weekend-only calendar).
pub fn add_business_days(date: NaiveDate, days: u32) -> NaiveDate {
    let mut d = date;
    for _ in 0..days {
        d += chrono::Duration::days(1);
        d = roll_following(d);
    }
    d
}

/// Settlement date `valuation + lag` business days.
pub fn spot_date(valuation: NaiveDate, lag_days: u32) -> NaiveDate {
    add_business_days(valuation, lag_days)
}

/// `anchor + months`, day-of-month preserved (clamped at month end), then
/// weekend-rolled.
pub fn add_months_rolled(anchor: NaiveDate, months: u32) -> Result<NaiveDate> {
    let raw = anchor
        .checked_add_months(Months::new(months))
        .ok_or_else(|| Error::InvalidArgument(format!("date overflow: {anchor} + {months}m")))?;
    Ok(roll_following(raw))
}

/// Whole months between two dates, ignoring any weekend roll on `to`.
fn approx_months_between(from: NaiveDate, to: NaiveDate) -> i64 {
    (to.year() as i64 - from.year() as i64) * 12 + (to.month() as i64 - from.month() as i64)
}

/// Number of months `k` such that `add_months_rolled(anchor, k) == target`.
///
/// Rolled targets can land a day or two past the raw anchor date, so the raw
/// month difference is probed within ±1.
pub fn months_to_target(anchor: NaiveDate, target: NaiveDate, label: &str) -> Result<u32> {
    let raw = approx_months_between(anchor, target);
    for cand in [raw, raw - 1, raw + 1] {
        if cand > 0 {
            if let Ok(rolled) = add_months_rolled(anchor, cand as u32) {
                if rolled == target {
                    return Ok(cand as u32);
                }
            }
        }
    }
    Err(Error::InvalidSchedule {
        label: label.to_string(),
        msg: format!("{target} is not a rolled whole-month offset of {anchor}"),
    })
}

/// Payment dates `anchor + j*step` months for `j = 1..=k`, weekend-rolled,
/// with the final date required to equal `maturity`.
pub fn periodic_schedule(
    anchor: NaiveDate,
    maturity: NaiveDate,
    step_months: u32,
    label: &str,
) -> Result<Vec<NaiveDate>> {
    if step_months == 0 {
        return Err(Error::InvalidSchedule {
            label: label.to_string(),
            msg: "zero-length period".into(),
        });
    }
    let total = months_to_target(anchor, maturity, label)?;
    if total % step_months != 0 {
        return Err(Error::InvalidSchedule {
            label: label.to_string(),
            msg: format!("{total} months is not a multiple of the {step_months}-month period"),
        });
    }
    (1..=total / step_months)
        .map(|j| add_months_rolled(anchor, j * step_months))
        .collect()
}

/// Bond coupon dates stepping from `next_coupon` to `maturity` without
/// weekend adjustment; the steps must land exactly on the maturity date.
pub fn coupon_schedule(
    next_coupon: NaiveDate,
    maturity: NaiveDate,
    step_months: u32,
    label: &str,
) -> Result<Vec<NaiveDate>> {
    if step_months == 0 {
        return Err(Error::InvalidSchedule {
            label: label.to_string(),
            msg: "zero-length coupon period".into(),
        });
    }
    let mut dates = vec![next_coupon];
    let mut current = next_coupon;
    while current < maturity {
        current = current
            .checked_add_months(Months::new(step_months))
            .ok_or_else(|| Error::InvalidSchedule {
                label: label.to_string(),
                msg: "date overflow in coupon schedule".into(),
            })?;
        dates.push(current);
    }
    if *dates.last().unwrap() != maturity {
        return Err(Error::InvalidSchedule {
            label: label.to_string(),
            msg: format!(
                "coupon steps of {step_months} months from {next_coupon} do not land on {maturity}"
            ),
        });
    }
    Ok(dates)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(y: i32, m: u32, day: u32) -> NaiveDate {
        NaiveDate::from_ymd_opt(y, m, day).unwrap()
    }

    #[test]
    fn spot_t_plus_two() {
        // Mon 2012-10-01 + 2 business days = Wed 2012-10-03
        assert_eq!(spot_date(d(2012, 10, 1), 2), d(2012, 10, 3));
        // Mon 2013-11-04 + 2 = Wed 2013-11-06
        assert_eq!(spot_date(d(2013, 11, 4), 2), d(2013, 11, 6));
        // Fri + 2 skips the weekend
        assert_eq!(spot_date(d(2012, 10, 5), 2), d(2012, 10, 9));
    }

    #[test]
    fn weekend_rolls_reproduce_market_dates() {
        let spot = d(2012, 10, 3);
        // 2015-10-03 is a Saturday -> Monday 5th
        assert_eq!(add_months_rolled(spot, 36).unwrap(), d(2015, 10, 5));
        // 2027-10-03 is a Sunday -> Monday 4th
        assert_eq!(add_months_rolled(spot, 180).unwrap(), d(2027, 10, 4));
        // 2042-10-03 is a Friday, unchanged
        assert_eq!(add_months_rolled(spot, 360).unwrap(), d(2042, 10, 3));
    }

    #[test]
    fn months_to_target_handles_rolled_dates() {
        let spot = d(2012, 10, 3);
        assert_eq!(months_to_target(spot, d(2015, 10, 5), "t").unwrap(), 36);
        assert_eq!(months_to_target(spot, d(2016, 10, 3), "t").unwrap(), 48);
        assert!(months_to_target(spot, d(2016, 10, 14), "t").is_err());
    }

    #[test]
    fn annual_swap_schedule() {
        let spot = d(2012, 10, 3);
        let sched = periodic_schedule(spot, d(2015, 10, 5), 12, "swap3y").unwrap();
        assert_eq!(sched, vec![d(2013, 10, 3), d(2014, 10, 3), d(2015, 10, 5)]);
    }

    #[test]
    fn coupon_schedule_exact_landing() {
        let sched = coupon_schedule(d(1997, 1, 19), d(1998, 1, 19), 6, "bond2").unwrap();
        assert_eq!(sched, vec![d(1997, 1, 19), d(1997, 7, 19), d(1998, 1, 19)]);
        // single remaining coupon
        let sched = coupon_schedule(d(1996, 11, 15), d(1996, 11, 15), 6, "bond1").unwrap();
        assert_eq!(sched, vec![d(1996, 11, 15)]);
        // misaligned maturity
        assert!(coupon_schedule(d(1997, 1, 19), d(1998, 2, 19), 6, "bad").is_err());
    }
}
