//! Constant-`Z` coefficients: the point ring with `κ = 0`, so `g = 2`, `e^{-m}κ` disappears and
//! `2e = 0`.

use std::fmt;

use crate::euler::{closed_form, BundleSum, DegreeTriple, Ranks};
use crate::grading::RoC2Degree;
use crate::hscalar::to_constz;
use crate::projmod::{mod_fixed, BasisMonomial, Element, FixedPair, ZElement};
use crate::scalar::{Scalar, ScalarMonomial};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ZMonomial {
    One,
    /// 2-torsion
    E(u32),
    Xi(u32),
    /// 2-torsion
    EXi(u32, u32),
    TauInv(u32),
}

pub type ZHElement = Scalar<ZMonomial>;

impl ZMonomial {
    fn rank(self) -> u8 {
        match self {
            ZMonomial::One => 0,
            ZMonomial::E(_) => 1,
            ZMonomial::Xi(_) => 2,
            ZMonomial::EXi(..) => 3,
            ZMonomial::TauInv(_) => 4,
        }
    }

    pub fn rho(self) -> i64 {
        match self {
            ZMonomial::One | ZMonomial::Xi(_) => 1,
            ZMonomial::TauInv(_) => 2,
            ZMonomial::E(_) | ZMonomial::EXi(..) => 0,
        }
    }

    /// Fixed-point value, read in `Z/2`.
    pub fn fixed_mod2(self) -> i64 {
        match self {
            ZMonomial::One | ZMonomial::E(_) => 1,
            _ => 0,
        }
    }
}

impl ScalarMonomial for ZMonomial {
    const ONE: Self = ZMonomial::One;

    fn grading(self) -> RoC2Degree {
        let (a, b) = match self {
            ZMonomial::One => (0, 0),
            ZMonomial::E(m) => (0, m as i32),
            ZMonomial::Xi(n) => (-2 * n as i32, 2 * n as i32),
            ZMonomial::EXi(m, n) => (-2 * n as i32, (m + 2 * n) as i32),
            ZMonomial::TauInv(n) => (2 * n as i32, -2 * n as i32),
        };
        RoC2Degree::new(a, b)
    }

    fn torsion(self) -> i64 {
        match self {
            ZMonomial::E(_) | ZMonomial::EXi(..) => 2,
            _ => 0,
        }
    }

    fn mul(self, other: Self) -> Vec<(i64, Self)> {
        use ZMonomial::*;
        let (x, y) = if self.rank() <= other.rank() { (self, other) } else { (other, self) };
        match (x, y) {
            (One, y) => vec![(1, y)],
            (E(i), E(j)) => vec![(1, E(i + j))],
            (E(i), Xi(n)) => vec![(1, EXi(i, n))],
            (E(i), EXi(j, n)) => vec![(1, EXi(i + j, n))],
            (E(_), TauInv(_)) => vec![],
            (Xi(i), Xi(j)) => vec![(1, Xi(i + j))],
            (Xi(i), EXi(j, n)) => vec![(1, EXi(j, i + n))],
            (Xi(i), TauInv(n)) => {
                if i < n {
                    vec![(1, TauInv(n - i))]
                } else if i == n {
                    vec![(2, One)]
                } else {
                    vec![(2, Xi(i - n))]
                }
            }
            (EXi(i, n), EXi(j, k)) => vec![(1, EXi(i + j, n + k))],
            (EXi(..), TauInv(_)) => vec![],
            (TauInv(i), TauInv(j)) => vec![(2, TauInv(i + j))],
            _ => unreachable!("monomial pair ({x:?}, {y:?}) not ordered"),
        }
    }

    fn xi(n: u32) -> Self {
        if n == 0 {
            ZMonomial::One
        } else {
            ZMonomial::Xi(n)
        }
    }

    fn e(m: u32) -> Self {
        if m == 0 {
            ZMonomial::One
        } else {
            ZMonomial::E(m)
        }
    }

    fn relation_unit() -> ZHElement {
        ZHElement::one()
    }

    fn write_text(self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZMonomial::One => f.write_str("1"),
            ZMonomial::E(1) => f.write_str("e"),
            ZMonomial::E(m) => write!(f, "e^{m}"),
            ZMonomial::Xi(1) => f.write_str("xi"),
            ZMonomial::Xi(n) => write!(f, "xi^{n}"),
            ZMonomial::EXi(m, n) => {
                ZMonomial::E(m).write_text(f)?;
                f.write_str("*")?;
                ZMonomial::Xi(n).write_text(f)
            }
            ZMonomial::TauInv(n) => write!(f, "tau(i^-{})", 2 * n),
        }
    }

    fn rho_value(self) -> i64 {
        self.rho()
    }

    fn fixed_value(self) -> i64 {
        self.fixed_mod2()
    }

    fn tau_text(self) -> Option<String> {
        match self {
            ZMonomial::Xi(n) => Some(format!("tau(i^{})", 2 * n)),
            _ => None,
        }
    }
}

pub fn z_fixed_scalar(x: &ZHElement) -> i64 {
    x.fixed().rem_euclid(2)
}

/// Change of coefficients `Burnside → Z`; the preferred basis maps to the preferred basis.
pub fn z_map(x: &Element) -> ZElement {
    x.map_coeffs(to_constz)
}

/// The closed form for `e(F)` with constant `Z` coefficients.
pub fn z_euler_closed(f: &BundleSum) -> Result<ZElement> {
    let form = closed_form(f)?;
    let sp = f.space();
    let Ranks { n, n0, n1 } = f.ranks();
    let DegreeTriple { delta, delta0, delta1 } = f.degrees();
    if delta % 2 != 0 {
        return Ok(ZElement::monomial(sp, ZHElement::from_int(delta), form.p_n));
    }
    let main = ZElement::monomial(sp, to_constz(&form.tau_n).scale(delta / 2), form.p_n);
    if delta0 % 2 == 0 && delta1 % 2 == 0 {
        return Ok(main);
    }
    let e = ZHElement::e((2 * (n - n0 - n1)) as u32);
    let extra = ZElement::monomial(sp, e, BasisMonomial::new(0, 0, n0, n1));
    main.checked_add(&extra)
}

/// Fixed-point image with `Z/2` coefficients.
pub fn z_fixed(x: &ZElement) -> FixedPair {
    mod_fixed(x).reduce_mod(2)
}
