//! Threshold functions for forced squared paths and cycles.
//!
//! For `n/2 < δ < n` let `rp(n, δ)` be the largest `r` with
//! `n − δ + ⌊δ/r⌋ > δ` and `rc(n, δ)` the same with `⌈δ/r⌉`. Then
//!
//! * `sqp(n, δ) = min(⌈(3/2)⌈δ/rp⌉ + 1/2⌉, n)`
//! * `sqc(n, δ) = min(⌊(3/2)⌈δ/rc⌉⌋, n)`
//!
//! are the longest squared path and squared cycle that minimum degree `δ`
//! forces in an `n`-vertex graph.

use crate::Rational;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::ops::RangeInclusive;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ThresholdError {
    #[error("minimum degree {delta} is outside n/2 < delta < n for n = {n}")]
    DomainError { n: usize, delta: usize },
    #[error("parameter {0} must lie in [0, 1)")]
    BadParameter(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Path,
    Cycle,
}

fn check_domain(n: usize, delta: usize) -> Result<(), ThresholdError> {
    if 2 * delta <= n || delta >= n {
        Err(ThresholdError::DomainError { n, delta })
    } else {
        Ok(())
    }
}

fn defining_inequality(variant: Variant, n: usize, delta: usize, r: usize) -> bool {
    let part = match variant {
        Variant::Path => delta / r,
        Variant::Cycle => delta.div_ceil(r),
    };
    n - delta + part > delta
}

/// Largest `r` satisfying the defining inequality, found by an upward scan.
pub fn r_value(variant: Variant, n: usize, delta: usize) -> Result<usize, ThresholdError> {
    check_domain(n, delta)?;
    let mut r = 1;
    while defining_inequality(variant, n, delta, r + 1) {
        r += 1;
    }
    Ok(r)
}

pub fn threshold(variant: Variant, n: usize, delta: usize) -> Result<usize, ThresholdError> {
    let r = r_value(variant, n, delta)?;
    let c = delta.div_ceil(r);
    let raw = match variant {
        Variant::Path => (3 * c + 2) / 2,
        Variant::Cycle => 3 * c / 2,
    };
    Ok(raw.min(n))
}

pub fn rp(n: usize, delta: usize) -> Result<usize, ThresholdError> {
    r_value(Variant::Path, n, delta)
}

pub fn rc(n: usize, delta: usize) -> Result<usize, ThresholdError> {
    r_value(Variant::Cycle, n, delta)
}

pub fn sqp(n: usize, delta: usize) -> Result<usize, ThresholdError> {
    threshold(Variant::Path, n, delta)
}

pub fn sqc(n: usize, delta: usize) -> Result<usize, ThresholdError> {
    threshold(Variant::Cycle, n, delta)
}

/// All threshold quantities at one `(n, δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThresholdPoint {
    pub n: usize,
    pub delta: usize,
    pub rp: usize,
    pub rc: usize,
    pub sqp: usize,
    pub sqc: usize,
}

impl ThresholdPoint {
    pub fn new(n: usize, delta: usize) -> Result<Self, ThresholdError> {
        Ok(ThresholdPoint {
            n,
            delta,
            rp: rp(n, delta)?,
            rc: rc(n, delta)?,
            sqp: sqp(n, delta)?,
            sqc: sqc(n, delta)?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepRow {
    pub delta: usize,
    pub value: usize,
    /// `value(δ) − value(δ−1) > 2`; false when `δ−1` is outside the domain.
    pub jump: bool,
}

pub fn sweep(
    variant: Variant,
    n: usize,
    deltas: RangeInclusive<usize>,
) -> Result<Vec<SweepRow>, ThresholdError> {
    let mut rows = Vec::new();
    for delta in deltas {
        let value = threshold(variant, n, delta)?;
        let prev = threshold(variant, n, delta - 1).ok();
        rows.push(SweepRow { delta, value, jump: prev.is_some_and(|p| value > p + 2) });
    }
    Ok(rows)
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("delta,value,jump\n");
    for r in rows {
        out.push_str(&format!("{},{},{}\n", r.delta, r.value, u8::from(r.jump)));
    }
    out
}

/// Which hypotheses of each inequality hold at the evaluated point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Hypotheses {
    pub eq_r: bool,
    pub eq_sqpa: bool,
    pub eq_sqpb_first: bool,
    pub eq_sqpb_second: bool,
}

/// Exact evaluation of the rp sandwich and the two stability-proof
/// inequalities at one point. `δ + ηn` is evaluated at the integer
/// `δ + ⌈ηn⌉`, capped at `n − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    pub n: usize,
    pub delta: usize,
    pub eta: Rational,
    pub mu: Rational,
    pub shifted_delta: usize,
    pub eq_r_holds: bool,
    pub eq_sqpa_holds: bool,
    pub eq_sqpb_first_holds: bool,
    pub eq_sqpb_second_holds: bool,
    pub eq_sqpb_holds: bool,
    pub hypotheses_met: Hypotheses,
}

impl InequalityReport {
    /// Names of inequalities that fail while their hypotheses hold.
    pub fn falsifications(&self) -> Vec<&'static str> {
        let h = self.hypotheses_met;
        let mut out = Vec::new();
        if h.eq_r && !self.eq_r_holds {
            out.push("eq_r");
        }
        if h.eq_sqpa && !self.eq_sqpa_holds {
            out.push("eq_sqpa");
        }
        if h.eq_sqpb_first && !self.eq_sqpb_first_holds {
            out.push("eq_sqpb_first");
        }
        if h.eq_sqpb_second && !self.eq_sqpb_second_holds {
            out.push("eq_sqpb_second");
        }
        out
    }
}

fn q(x: usize) -> Rational {
    Rational::from_integer(x as i128)
}

/// `(n−δ)/(2δ−n+1) ≤ r < (δ+1)/(2δ−n+1)` and
/// `((r+1)n−r)/(2r+1) ≤ δ < (rn−r+1)/(2r−1)` for `r = rp(n, δ)`.
pub fn rp_sandwich_holds(n: usize, delta: usize) -> Result<bool, ThresholdError> {
    let r = rp(n, delta)?;
    let (nq, dq, rq) = (q(n), q(delta), q(r));
    let s = q(2 * delta - n + 1);
    let first = ((rq + 1) * nq - rq) / (q(2 * r + 1)) <= dq && dq < (rq * nq - rq + 1) / q(2 * r - 1);
    let second = (nq - dq) / s <= rq && rq < (dq + 1) / s;
    Ok(first && second)
}

pub fn check_inequalities(
    n: usize,
    delta: usize,
    eta: Rational,
    mu: Rational,
) -> Result<InequalityReport, ThresholdError> {
    check_domain(n, delta)?;
    let unit = Rational::one();
    if eta < Rational::zero() || eta >= unit {
        return Err(ThresholdError::BadParameter("eta"));
    }
    if mu < Rational::zero() || mu >= unit {
        return Err(ThresholdError::BadParameter("mu"));
    }
    let (nq, dq) = (q(n), q(delta));
    let eta_n = eta * nq;
    let slack = eta_n.ceil().to_integer() as usize;
    let shifted = (delta + slack).min(n - 1);

    let eq_r_holds = rp_sandwich_holds(n, delta)?;

    let r_shift = rp(n, shifted)?;
    let s_shift = q(sqp(n, shifted)?);
    let two = q(2);
    let three_halves = Rational::new(3, 2);
    let second_term = (dq + q(3) * eta_n) / q(r_shift) - two;
    let bound_a = if r_shift >= 2 {
        three_halves * (dq / q(r_shift - 1) - two).min(second_term)
    } else {
        three_halves * second_term
    };
    let eq_sqpa_holds = s_shift <= bound_a;

    let mid = Rational::new(19, 20) * q(3) * (q(2 * delta) - nq) - two;
    let eq_sqpb_first_holds = s_shift <= mid && mid <= q(6 * delta) - q(3 * n) - q(100) * eta_n;
    let eq_sqpb_second_holds = s_shift <= q(4 * delta) - q(2 * n);

    let positive = eta > Rational::zero() && mu > Rational::zero();
    let dense = dq > nq / two + mu * nq;
    let small_sqp = s_shift <= Rational::new(11, 20) * nq;
    let r_here = rp(n, delta)?;
    let second_gate = r_here >= 3 && (r_here >= 5 || r_here == r_shift);
    let hypotheses_met = Hypotheses {
        eq_r: true,
        eq_sqpa: positive && dense && small_sqp,
        eq_sqpb_first: positive && dense && small_sqp,
        eq_sqpb_second: positive && dense && second_gate,
    };
    Ok(InequalityReport {
        n,
        delta,
        eta,
        mu,
        shifted_delta: shifted,
        eq_r_holds,
        eq_sqpa_holds,
        eq_sqpb_first_holds,
        eq_sqpb_second_holds,
        eq_sqpb_holds: eq_sqpb_first_holds && eq_sqpb_second_holds,
        hypotheses_met,
    })
}

/// Parses `p/q`, an integer, or a finite decimal such as `0.01` into an
/// exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, d)) = s.split_once('/') {
        let p: i128 = p.trim().parse().ok()?;
        let d: i128 = d.trim().parse().ok()?;
        return (d != 0).then(|| Rational::new(p, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 30 {
            return None;
        }
        let neg = int.starts_with('-');
        let int_part: i128 = if int.is_empty() || int == "-" { 0 } else { int.parse().ok()? };
        let den = 10i128.checked_pow(frac.len() as u32)?;
        let f: i128 = frac.parse().ok()?;
        let mag = int_part.abs() * den + f;
        return Some(Rational::new(if neg { -mag } else { mag }, den));
    }
    s.parse::<i128>().ok().map(Rational::from_integer)
}

/// Formats as `p/q`, or `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `⌈x⌉` for a non-negative rational, as an integer.
pub fn ceil_usize(x: Rational) -> usize {
    let (d, m) = x.numer().div_mod_floor(x.denom());
    (d + i128::from(!m.is_zero())) as usize
}
