//! The extended naturals used as weights and thresholds.
//!
//! `NbarPoint` ranges over N ∪ {−∞}; `NunderPoint` adds +∞. Both are totally
//! ordered with −∞ below every natural.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NbarPoint {
    NegInfinity,
    Finite(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NunderPoint {
    NegInfinity,
    Finite(u64),
    PosInfinity,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid point `{0}`: expected -inf, +inf or a natural number")]
pub struct PointParseError(pub String);

impl NbarPoint {
    /// Position in the order −∞, 0, 1, 2, …
    pub fn position(self) -> usize {
        match self {
            NbarPoint::NegInfinity => 0,
            NbarPoint::Finite(n) => n as usize + 1,
        }
    }

    pub fn from_position(pos: usize) -> Self {
        match pos {
            0 => NbarPoint::NegInfinity,
            p => NbarPoint::Finite(p as u64 - 1),
        }
    }

    pub fn max(self, other: Self) -> Self {
        std::cmp::max(self, other)
    }
}

impl NunderPoint {
    pub fn min(self, other: Self) -> Self {
        std::cmp::min(self, other)
    }
}

impl From<NbarPoint> for NunderPoint {
    fn from(p: NbarPoint) -> Self {
        match p {
            NbarPoint::NegInfinity => NunderPoint::NegInfinity,
            NbarPoint::Finite(n) => NunderPoint::Finite(n),
        }
    }
}

impl PartialEq<NunderPoint> for NbarPoint {
    fn eq(&self, other: &NunderPoint) -> bool {
        NunderPoint::from(*self) == *other
    }
}

impl PartialOrd<NunderPoint> for NbarPoint {
    fn partial_cmp(&self, other: &NunderPoint) -> Option<std::cmp::Ordering> {
        NunderPoint::from(*self).partial_cmp(other)
    }
}

impl fmt::Display for NbarPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        NunderPoint::from(*self).fmt(f)
    }
}

impl fmt::Display for NunderPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NunderPoint::NegInfinity => f.write_str("-inf"),
            NunderPoint::Finite(n) => write!(f, "{n}"),
            NunderPoint::PosInfinity => f.write_str("+inf"),
        }
    }
}

impl FromStr for NunderPoint {
    type Err = PointParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "-inf" => Ok(NunderPoint::NegInfinity),
            "+inf" | "inf" => Ok(NunderPoint::PosInfinity),
            t if !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) => {
                t.parse().map(NunderPoint::Finite).map_err(|_| PointParseError(s.to_string()))
            }
            _ => Err(PointParseError(s.to_string())),
        }
    }
}

impl FromStr for NbarPoint {
    type Err = PointParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<NunderPoint>()? {
            NunderPoint::NegInfinity => Ok(NbarPoint::NegInfinity),
            NunderPoint::Finite(n) => Ok(NbarPoint::Finite(n)),
            NunderPoint::PosInfinity => Err(PointParseError(s.to_string())),
        }
    }
}
