//! Exact decisions about angles that are rational multiples of π.
//!
//! For rational `r` in `[0, 1]`, `arcsin(sqrt(r)) / π` is rational only for
//! `r` in `{0, 1/4, 1/2, 3/4, 1}`. Everything here runs on arbitrary
//! precision rationals; floating point cannot certify irrationality.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An angle `q·π` with `q` rational in `[0, 1]`, or an irrational multiple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalAngle {
    Rational(BigRational),
    Irrational,
}

impl RationalAngle {
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Self::Rational(q) => Some(q),
            Self::Irrational => None,
        }
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rational(q) => write!(f, "{q}"),
            Self::Irrational => f.write_str("irrational"),
        }
    }
}

impl Serialize for RationalAngle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalAngle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        if text == "irrational" {
            return Ok(Self::Irrational);
        }
        parse_rational(&text)
            .map(Self::Rational)
            .map_err(serde::de::Error::custom)
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::OutOfRange(format!("not a rational number: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

fn small_pair(q: &BigRational) -> Option<(u64, u64)> {
    Some((q.numer().to_u64()?, q.denom().to_u64()?))
}

/// `arcsin(sqrt(r)) / π` for rational `r` in `[0, 1]`.
pub fn rational_arcsin_sqrt(r: &BigRational) -> Result<RationalAngle> {
    if r.is_negative() || *r > BigRational::one() {
        return Err(Error::OutOfRange(format!("{r} is outside [0, 1]")));
    }
    let angle = match small_pair(r) {
        Some((0, _)) => (0, 1),
        Some((1, 4)) => (1, 6),
        Some((1, 2)) => (1, 4),
        Some((3, 4)) => (1, 3),
        Some((1, 1)) => (1, 2),
        _ => return Ok(RationalAngle::Irrational),
    };
    Ok(RationalAngle::Rational(BigRational::new(
        angle.0.into(),
        angle.1.into(),
    )))
}

/// Why an equal-chord cycle does not fit on a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Obstruction {
    /// Radius below 1/2: no unit chord exists.
    RadiusTooSmall,
    /// The step angle is an irrational multiple of π, so the walk never closes.
    IrrationalAngle,
    /// The step angle is rational but `m` steps do not return to the start.
    DoesNotClose,
    /// The walk closes, but before visiting `m` distinct points.
    VerticesCoincide,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleCycle {
    pub feasible: bool,
    /// Number of turns around the circle when feasible.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub winding: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub obstruction: Option<Obstruction>,
}

impl CircleCycle {
    fn infeasible(why: Obstruction) -> Self {
        CircleCycle {
            feasible: false,
            winding: None,
            obstruction: Some(why),
        }
    }
}

/// Decides whether `C_m` has a unit-distance embedding with distinct
/// vertices on a circle of radius `sqrt(r_squared)`.
///
/// A unit chord subtends the angle `θ` with `sin(θ/2) = 1/(2r)`. Every
/// vertex then sits at an integer multiple of `θ`, so a cycle needs
/// `θ = 2π·a/b` in lowest terms; the reachable points form a `b`-cycle
/// and `m` distinct vertices close up exactly when `b = m`.
pub fn cycle_on_circle_feasible(r_squared: &BigRational, m: usize) -> Result<CircleCycle> {
    if !r_squared.is_positive() {
        return Err(Error::OutOfRange(format!(
            "r^2 = {r_squared} must be positive"
        )));
    }
    if m < 3 {
        return Err(Error::OutOfRange(format!("cycle length {m} is below 3")));
    }
    let quarter = BigRational::new(1.into(), 4.into());
    if *r_squared < quarter {
        return Ok(CircleCycle::infeasible(Obstruction::RadiusTooSmall));
    }
    // sin²(θ/2) = 1 / (4 r²).
    let sin_sq = (r_squared * BigRational::from_integer(4.into())).recip();
    let half = match rational_arcsin_sqrt(&sin_sq)? {
        RationalAngle::Irrational => {
            return Ok(CircleCycle::infeasible(Obstruction::IrrationalAngle))
        }
        RationalAngle::Rational(q) => q,
    };
    // θ / (2π) equals half-angle / π.
    let (a, b) = small_pair(&half).expect("table entries are small");
    let m = m as u64;
    if !m.is_multiple_of(b) {
        return Ok(CircleCycle::infeasible(Obstruction::DoesNotClose));
    }
    if b != m {
        return Ok(CircleCycle::infeasible(Obstruction::VerticesCoincide));
    }
    Ok(CircleCycle {
        feasible: true,
        winding: Some(a),
        obstruction: None,
    })
}
