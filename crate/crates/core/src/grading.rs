//! Gradings on `RO(C2)` and `RO(ΠB)`.
//!
//! `RO(ΠB)` is presented as `Z{1, σ, Ω0, Ω1} / (Ω0 + Ω1 = 2σ − 2)`. We eliminate `Ω0` and store a
//! grading as `m·Ω1 + a + b·σ`, which makes the parity condition on the two fixed ranks automatic.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("grading {0} is not the grading of an Euler class: both real coordinates must be even")]
    NotEulerGrading(PiBDegree),
    #[error("cannot parse grading {0:?}: {1}")]
    Parse(String, String),
}

/// A grading `a + b·σ` in `RO(C2)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RoC2Degree {
    pub a: i32,
    pub b: i32,
}

impl RoC2Degree {
    pub const ZERO: RoC2Degree = RoC2Degree { a: 0, b: 0 };

    pub const fn new(a: i32, b: i32) -> Self {
        RoC2Degree { a, b }
    }

    /// Underlying nonequivariant dimension.
    pub fn rank(self) -> i32 {
        self.a + self.b
    }
}

impl Add for RoC2Degree {
    type Output = RoC2Degree;
    fn add(self, rhs: Self) -> Self {
        RoC2Degree::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for RoC2Degree {
    type Output = RoC2Degree;
    fn sub(self, rhs: Self) -> Self {
        RoC2Degree::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for RoC2Degree {
    type Output = RoC2Degree;
    fn neg(self) -> Self {
        RoC2Degree::new(-self.a, -self.b)
    }
}

impl fmt::Display for RoC2Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*s", self.a, self.b)
    }
}

/// A grading `m·Ω1 + a + b·σ` in `RO(ΠB)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PiBDegree {
    pub m: i32,
    pub a: i32,
    pub b: i32,
}

/// Real ranks `(|α|, |α0^C2|, |α1^C2|)` of a grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RankTriple {
    pub n_total: i32,
    pub n_fix0: i32,
    pub n_fix1: i32,
}

impl RankTriple {
    pub const fn new(n_total: i32, n_fix0: i32, n_fix1: i32) -> Self {
        RankTriple { n_total, n_fix0, n_fix1 }
    }
}

impl fmt::Display for RankTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_total, self.n_fix0, self.n_fix1)
    }
}

impl PiBDegree {
    pub const ZERO: PiBDegree = PiBDegree { m: 0, a: 0, b: 0 };
    /// `Ω1 = ω − 2`, the grading of `ζ1`.
    pub const OMEGA1: PiBDegree = PiBDegree { m: 1, a: 0, b: 0 };
    /// `Ω0 = 2σ − 2 − Ω1`, the grading of `ζ0`.
    pub const OMEGA0: PiBDegree = PiBDegree { m: -1, a: -2, b: 2 };
    /// `ω = 2 + Ω1`, the grading of `ĉ_ω`.
    pub const OMEGA: PiBDegree = PiBDegree { m: 1, a: 2, b: 0 };
    /// `χω = 2 + Ω0`, the grading of `ĉ_χω`.
    pub const CHI_OMEGA: PiBDegree = PiBDegree { m: -1, a: 0, b: 2 };

    pub const fn new(m: i32, a: i32, b: i32) -> Self {
        PiBDegree { m, a, b }
    }

    /// The `RO(C2)` part of a grading with `m = 0`.
    pub fn from_roc2(x: RoC2Degree) -> Self {
        PiBDegree::new(0, x.a, x.b)
    }

    /// Drops the `Ω1` coordinate.
    pub fn roc2_part(self) -> RoC2Degree {
        RoC2Degree::new(self.a, self.b)
    }

    pub fn rank_triple(self) -> RankTriple {
        rank_triple(self)
    }

    /// Multiplies by an integer.
    pub fn scale(self, k: i32) -> Self {
        PiBDegree::new(self.m * k, self.a * k, self.b * k)
    }
}

impl Add for PiBDegree {
    type Output = PiBDegree;
    fn add(self, rhs: Self) -> Self {
        deg_add(self, rhs)
    }
}

impl Add<RoC2Degree> for PiBDegree {
    type Output = PiBDegree;
    fn add(self, rhs: RoC2Degree) -> Self {
        PiBDegree::new(self.m, self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for PiBDegree {
    type Output = PiBDegree;
    fn sub(self, rhs: Self) -> Self {
        PiBDegree::new(self.m - rhs.m, self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for PiBDegree {
    type Output = PiBDegree;
    fn neg(self) -> Self {
        PiBDegree::new(-self.m, -self.a, -self.b)
    }
}

pub fn deg_add(x: PiBDegree, y: PiBDegree) -> PiBDegree {
    PiBDegree::new(x.m + y.m, x.a + y.a, x.b + y.b)
}

/// Real ranks of a grading: `(a + b, a, a − 2m)`.
pub fn rank_triple(x: PiBDegree) -> RankTriple {
    RankTriple::new(x.a + x.b, x.a, x.a - 2 * x.m)
}

/// Grading of the Euler class of a bundle with complex ranks `(n, n0, n1)`.
pub fn euler_grading(n: i32, n0: i32, n1: i32) -> PiBDegree {
    PiBDegree::new(n0 - n1, 2 * n0, 2 * (n - n0))
}

/// Inverse of [`euler_grading`]. The result holds *complex* ranks `(n, n0, n1)`.
pub fn recover_ranks(x: PiBDegree) -> Result<RankTriple, GradingError> {
    if x.a % 2 != 0 || x.b % 2 != 0 {
        return Err(GradingError::NotEulerGrading(x));
    }
    let (a, b) = (x.a / 2, x.b / 2);
    Ok(RankTriple::new(a + b, a, a - x.m))
}

impl fmt::Display for PiBDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*W1 + {} + {}*s", self.m, self.a, self.b)
    }
}

impl FromStr for PiBDegree {
    type Err = GradingError;

    /// Accepts any signed sum of terms `k*W1`, `k*s`, `k`, `W1`, `s`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |why: &str| GradingError::Parse(text.to_string(), why.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty grading"));
        }
        let mut out = PiBDegree::ZERO;
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1;
            if let Some(r) = rest.strip_prefix('+') {
                if first {
                    return Err(err("leading '+'"));
                }
                rest = r;
            } else if !first && !rest.starts_with('-') {
                return Err(err("expected '+' or '-' between terms"));
            }
            // a term may carry its own sign, as in "-1*W1 + -2 + 2*s"
            while let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r;
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            first = false;
            let (coeff, unit) = match term.split_once('*') {
                Some((c, u)) => (c.parse::<i32>().map_err(|_| err("bad coefficient"))?, u),
                None => match term {
                    "W1" | "s" => (1, term),
                    _ => (term.parse::<i32>().map_err(|_| err("bad term"))?, ""),
                },
            };
            let k = sign * coeff;
            match unit {
                "W1" => out.m += k,
                "s" => out.b += k,
                "" => out.a += k,
                _ => return Err(err("unknown unit; expected W1 or s")),
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deg_add_examples() {
        assert_eq!(deg_add(PiBDegree::ZERO, PiBDegree::new(1, 2, 0)), PiBDegree::new(1, 2, 0));
        // ζ0 · ĉ_ω lives in 2σ
        assert_eq!(deg_add(PiBDegree::OMEGA0, PiBDegree::OMEGA), PiBDegree::new(0, 0, 2));
        // ζ0 · ζ1 = ξ, which lives in −2 + 2σ
        assert_eq!(deg_add(PiBDegree::OMEGA0, PiBDegree::OMEGA1), PiBDegree::new(0, -2, 2));
    }

    #[test]
    fn rank_triple_examples() {
        assert_eq!(rank_triple(PiBDegree::ZERO), RankTriple::new(0, 0, 0));
        assert_eq!(rank_triple(PiBDegree::OMEGA), RankTriple::new(2, 2, 0));
        assert_eq!(rank_triple(PiBDegree::new(0, 0, 8)), RankTriple::new(8, 0, 0));
    }

    #[test]
    fn euler_grading_examples() {
        assert_eq!(euler_grading(4, 0, 0), PiBDegree::new(0, 0, 8));
        assert_eq!(euler_grading(1, 1, 1), PiBDegree::new(0, 2, 0));
        assert_eq!(rank_triple(euler_grading(1, 1, 1)), RankTriple::new(2, 2, 2));
        assert_eq!(
            euler_grading(2, 1, 1),
            deg_add(PiBDegree::OMEGA, PiBDegree::CHI_OMEGA)
        );
    }

    #[test]
    fn recover_ranks_examples() {
        assert_eq!(recover_ranks(PiBDegree::new(0, 0, 8)), Ok(RankTriple::new(4, 0, 0)));
        assert_eq!(recover_ranks(PiBDegree::new(0, 2, 2)), Ok(RankTriple::new(2, 1, 1)));
        assert!(recover_ranks(PiBDegree::new(0, 1, 2)).is_err());
        assert!(recover_ranks(PiBDegree::new(0, 2, 3)).is_err());
    }

    #[test]
    fn recover_inverts_euler_grading() {
        for n in 0..=20 {
            for n0 in 0..=n {
                for n1 in 0..=n {
                    let g = euler_grading(n, n0, n1);
                    assert_eq!(recover_ranks(g), Ok(RankTriple::new(n, n0, n1)));
                    assert_eq!(rank_triple(g), RankTriple::new(2 * n, 2 * n0, 2 * n1));
                }
            }
        }
    }

    #[test]
    fn parse_display_round_trip() {
        for g in [PiBDegree::ZERO, PiBDegree::OMEGA0, PiBDegree::new(3, -4, 7)] {
            assert_eq!(g.to_string().parse::<PiBDegree>(), Ok(g));
        }
        assert_eq!("W1 - 2 + 2*s".parse::<PiBDegree>(), Ok(PiBDegree::new(1, -2, 2)));
        assert!("3*x".parse::<PiBDegree>().is_err());
        assert!("".parse::<PiBDegree>().is_err());
    }

    proptest::proptest! {
        #[test]
        fn rank_triple_is_additive(m1 in -50i32..50, a1 in -50i32..50, b1 in -50i32..50,
                                   m2 in -50i32..50, a2 in -50i32..50, b2 in -50i32..50) {
            let x = PiBDegree::new(m1, a1, b1);
            let y = PiBDegree::new(m2, a2, b2);
            let (rx, ry, rs) = (rank_triple(x), rank_triple(y), rank_triple(x + y));
            proptest::prop_assert_eq!(rs.n_total, rx.n_total + ry.n_total);
            proptest::prop_assert_eq!(rs.n_fix0, rx.n_fix0 + ry.n_fix0);
            proptest::prop_assert_eq!(rs.n_fix1, rx.n_fix1 + ry.n_fix1);
            proptest::prop_assert_eq!(rx, RankTriple::new(a1 + b1, a1, a1 - 2 * m1));
            proptest::prop_assert_eq!(x.to_string().parse::<PiBDegree>(), Ok(x));
        }
    }
}
