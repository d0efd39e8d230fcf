//! Analytic bounds on the minimum perimeter.
//!
//! The lower bound comes from the continuous relaxation of the canonical
//! objective, `sqrt(7/2) * sqrt(8n - 1) - 2`. The upper bound evaluates the
//! relaxed objective (with constant `-2`) at the feasible point `a = 3m`,
//! `c = m` of volume `7m^2` and transports it to general `n` by monotonicity.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Values within this distance of an integer are re-evaluated exactly before
/// rounding.
pub const ROUNDING_GUARD: f64 = 1e-9;

/// The asymptotic bound gap.
pub const GAP_LIMIT: f64 = 17.5;

pub fn continuous_lower(n: u64) -> f64 {
    (3.5f64).sqrt() * (8.0 * n as f64 - 1.0).sqrt() - 2.0
}

/// `ceil(continuous_lower(n))`, computed exactly; `3` for `n = 1`.
///
/// `L >= sqrt(7/2 (8n-1)) - 2` iff `2(L+2)^2 >= 56n - 7`.
pub fn lower_bound(n: u64) -> u64 {
    if n <= 1 {
        return 3;
    }
    let target = 56 * n as u128 - 7;
    let holds = |l: u64| 2 * ((l + 2) as u128).pow(2) >= target;
    let mut l = continuous_lower(n).ceil().max(0.0) as u64;
    while l > 0 && holds(l - 1) {
        l -= 1;
    }
    while !holds(l) {
        l += 1;
    }
    l
}

/// Unconstrained minimiser `(a*, c*)` of the relaxed objective.
pub fn continuous_minimizer(n: u64) -> (f64, f64) {
    let r = (8.0 * n as f64 - 1.0).sqrt();
    let s14 = 14f64.sqrt();
    (3.0 * r / (2.0 * s14), (14.0 + s14 * r) / 28.0)
}

/// `4a + 3c - 3 - (1 + sqrt(1 + 8(C(a,2) - n + c a)))/2` over the reals.
/// `None` where the square root is undefined.
pub fn relaxed_objective(a: f64, c: f64, n: u64) -> Option<f64> {
    let rad = 1.0 + 8.0 * (a * (a - 1.0) / 2.0 - n as f64 + c * a);
    (rad >= 0.0).then(|| 4.0 * a + 3.0 * c - 3.0 - 0.5 * (1.0 + rad.sqrt()))
}

/// Volume `7m^2` and the relaxed upper objective at `a = 3m, c = m`:
/// `15m - sqrt(4m^2 - 12m + 1)/2 - 5/2`.
pub fn construction_value(m: u64) -> Result<(u64, f64)> {
    let rad = 4 * m as i128 * m as i128 - 12 * m as i128 + 1;
    if m == 0 || rad < 0 {
        return Err(Error::InvalidArgument(format!(
            "construction index m={m} needs 4m^2 - 12m + 1 >= 0 (m >= 3)"
        )));
    }
    let m_f = m as f64;
    Ok((7 * m * m, 15.0 * m_f - 0.5 * (rad as f64).sqrt() - 2.5))
}

/// `n + 2 sqrt(7n) - 8`, an upper estimate of the next construction volume.
fn shifted_volume(n: u64) -> f64 {
    let n = n as f64;
    n + 2.0 * (7.0 * n).sqrt() - 8.0
}

fn upper_parts(n: u64, plus_one: bool) -> Option<(f64, f64)> {
    let s = shifted_volume(n);
    if s < 0.0 {
        return None;
    }
    let s7 = 7f64.sqrt();
    let rad = 4.0 / 7.0 * s - 12.0 / s7 * s.sqrt() + if plus_one { 1.0 } else { 0.0 };
    Some((15.0 / s7 * s.sqrt(), rad))
}

/// The real-valued upper bound before flooring; `None` where a radicand is
/// negative.
pub fn upper_real(n: u64) -> Option<f64> {
    let (lead, rad) = upper_parts(n, true)?;
    if rad.abs() < ROUNDING_GUARD {
        return precise::upper(n, true).map(|v| v.to_f64());
    }
    (rad >= 0.0).then(|| lead - 0.5 * rad.sqrt())
}

/// The upper bound with the `+1` under the inner root dropped. Only used to
/// study the monotone-difference argument; defined from `n = 39`.
pub fn weakened_upper(n: u64) -> Option<f64> {
    let (lead, rad) = upper_parts(n, false)?;
    (rad >= 0.0).then(|| lead - 0.5 * rad.sqrt())
}

/// Integer upper bound, `floor(upper_real(n))`.
pub fn upper_bound(n: u64) -> Option<u64> {
    let value = upper_real(n)?;
    let nearest = value.round();
    if (value - nearest).abs() < ROUNDING_GUARD {
        return precise::upper(n, true).map(|v| v.floor());
    }
    Some(value.floor() as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapReport {
    /// `upper_real(n) - continuous_lower(n)`.
    pub real: f64,
    /// `upper_bound(n) - lower_bound(n)`.
    pub rounded: i64,
}

pub fn bound_gap(n: u64) -> Option<GapReport> {
    let real = upper_real(n)? - continuous_lower(n);
    let rounded = upper_bound(n)? as i64 - lower_bound(n) as i64;
    Some(GapReport { real, rounded })
}

/// Gap between [`weakened_upper`] and the continuous lower bound.
pub fn weakened_gap(n: u64) -> Option<f64> {
    Some(weakened_upper(n)? - continuous_lower(n))
}

/// Smallest `n <= max_n` where [`upper_bound`] is defined, and whether it
/// stays defined on the rest of `[first, max_n]`.
pub fn upper_bound_domain(max_n: u64) -> Option<(u64, bool)> {
    let first = (1..=max_n).find(|&n| upper_bound(n).is_some())?;
    let contiguous = (first..=max_n).all(|n| upper_real(n).is_some());
    Some((first, contiguous))
}

/// Fixed-point re-evaluation for values that land next to a rounding cliff.
mod precise {
    use num_bigint::BigInt;
    use num_integer::Integer;

    const DIGITS: u32 = 60;

    pub struct Fixed(BigInt);

    fn scale() -> BigInt {
        BigInt::from(10u8).pow(DIGITS)
    }

    fn sqrt_fixed(x: &BigInt) -> Option<BigInt> {
        (x.sign() != num_bigint::Sign::Minus).then(|| (x * scale()).sqrt())
    }

    impl Fixed {
        pub fn floor(&self) -> u64 {
            u64::try_from(self.0.div_floor(&scale())).unwrap_or(0)
        }

        pub fn to_f64(&self) -> f64 {
            let s = scale();
            let int = self.0.div_floor(&s);
            let frac = &self.0 - &int * &s;
            let frac_digits = frac / BigInt::from(10u8).pow(DIGITS - 15);
            i64::try_from(int).unwrap_or(i64::MAX) as f64
                + i64::try_from(frac_digits).unwrap_or(0) as f64 * 1e-15
        }
    }

    pub fn upper(n: u64, plus_one: bool) -> Option<Fixed> {
        let s = scale();
        let n = BigInt::from(n);
        let root_7n = (BigInt::from(7) * &n * &s * &s).sqrt();
        let vol = &n * &s + BigInt::from(2) * root_7n - BigInt::from(8) * &s;
        let root_vol = sqrt_fixed(&vol)?;
        let root_7 = (BigInt::from(7) * &s * &s).sqrt();
        let lead = BigInt::from(15) * &root_vol * &s / &root_7;
        let mut rad = BigInt::from(4) * &vol / BigInt::from(7)
            - BigInt::from(12) * &root_vol * &s / &root_7;
        if plus_one {
            rad += &s;
        }
        let tail = sqrt_fixed(&rad)?;
        Some(Fixed(lead - tail / BigInt::from(2)))
    }
}
