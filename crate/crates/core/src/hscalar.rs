//! The even-column part of the `RO(C2)`-graded cohomology of a point with Burnside ring
//! coefficients.
//!
//! Additively it has one generator per grading except at the origin, where it is the Burnside
//! ring `A(C2) = Z{1, g}`:
//!
//! | monomial        | grading        | group |
//! |-----------------|----------------|-------|
//! | `1`, `g`        | `0`            | `A(C2)` |
//! | `e^m`           | `mσ`           | `Z`   |
//! | `e^-m*kappa`    | `−mσ`          | `Z`   |
//! | `xi^n`          | `−2n + 2nσ`    | `Z`   |
//! | `e^m*xi^n`      | `−2n + (m+2n)σ`| `Z/2` |
//! | `tau(i^-2n)`    | `2n − 2nσ`     | `Z`   |
//!
//! `κ = 2 − g` is not a monomial, and `τ(ι^{2ℓ})` for `ℓ > 0` is `2ξ^ℓ`.

use std::fmt;

use crate::grading::RoC2Degree;
use crate::scalar::{Scalar, ScalarMonomial};
use crate::variants::zconst::{ZHElement, ZMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HMonomial {
    One,
    G,
    E(u32),
    /// `e^{-m}κ`
    EInvKappa(u32),
    Xi(u32),
    /// `e^m ξ^n`, 2-torsion
    EXi(u32, u32),
    /// `τ(ι^{-2n})`
    TauInv(u32),
}

pub type HElement = Scalar<HMonomial>;

impl HMonomial {
    fn rank(self) -> u8 {
        match self {
            HMonomial::One => 0,
            HMonomial::G => 1,
            HMonomial::E(_) => 2,
            HMonomial::EInvKappa(_) => 3,
            HMonomial::Xi(_) => 4,
            HMonomial::EXi(..) => 5,
            HMonomial::TauInv(_) => 6,
        }
    }

    /// Value of the restriction to nonequivariant cohomology, as a multiple of `ι^k`.
    pub fn rho(self) -> i64 {
        match self {
            HMonomial::One | HMonomial::Xi(_) => 1,
            HMonomial::G | HMonomial::TauInv(_) => 2,
            HMonomial::E(_) | HMonomial::EInvKappa(_) | HMonomial::EXi(..) => 0,
        }
    }

    /// Value of the fixed-point map.
    pub fn fixed(self) -> i64 {
        match self {
            HMonomial::One | HMonomial::E(_) => 1,
            HMonomial::EInvKappa(_) => 2,
            HMonomial::G | HMonomial::Xi(_) | HMonomial::EXi(..) | HMonomial::TauInv(_) => 0,
        }
    }
}

impl ScalarMonomial for HMonomial {
    const ONE: Self = HMonomial::One;

    fn grading(self) -> RoC2Degree {
        let (a, b) = match self {
            HMonomial::One | HMonomial::G => (0, 0),
            HMonomial::E(m) => (0, m as i32),
            HMonomial::EInvKappa(m) => (0, -(m as i32)),
            HMonomial::Xi(n) => (-2 * n as i32, 2 * n as i32),
            HMonomial::EXi(m, n) => (-2 * n as i32, (m + 2 * n) as i32),
            HMonomial::TauInv(n) => (2 * n as i32, -2 * n as i32),
        };
        RoC2Degree::new(a, b)
    }

    fn torsion(self) -> i64 {
        match self {
            HMonomial::EXi(..) => 2,
            _ => 0,
        }
    }

    fn mul(self, other: Self) -> Vec<(i64, Self)> {
        use HMonomial::*;
        let (x, y) = if self.rank() <= other.rank() { (self, other) } else { (other, self) };
        match (x, y) {
            (One, y) => vec![(1, y)],
            (G, G) => vec![(2, G)],
            (G, Xi(n)) => vec![(2, Xi(n))],
            (G, TauInv(n)) => vec![(2, TauInv(n))],
            (G, E(_) | EInvKappa(_) | EXi(..)) => vec![],
            (E(i), E(j)) => vec![(1, E(i + j))],
            (E(i), EInvKappa(j)) => {
                if i < j {
                    vec![(1, EInvKappa(j - i))]
                } else if i == j {
                    vec![(2, One), (-1, G)]
                } else {
                    vec![(2, E(i - j))]
                }
            }
            (E(i), Xi(n)) => vec![(1, EXi(i, n))],
            (E(i), EXi(j, n)) => vec![(1, EXi(i + j, n))],
            (E(_), TauInv(_)) => vec![],
            (EInvKappa(i), EInvKappa(j)) => vec![(2, EInvKappa(i + j))],
            (EInvKappa(_), Xi(_) | EXi(..) | TauInv(_)) => vec![],
            (Xi(i), Xi(j)) => vec![(1, Xi(i + j))],
            (Xi(i), EXi(j, n)) => vec![(1, EXi(j, i + n))],
            (Xi(i), TauInv(n)) => {
                if i < n {
                    vec![(1, TauInv(n - i))]
                } else if i == n {
                    vec![(1, G)]
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
            HMonomial::One
        } else {
            HMonomial::Xi(n)
        }
    }

    fn e(m: u32) -> Self {
        if m == 0 {
            HMonomial::One
        } else {
            HMonomial::E(m)
        }
    }

    fn relation_unit() -> HElement {
        unit_u()
    }

    fn write_text(self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HMonomial::One => f.write_str("1"),
            HMonomial::G => f.write_str("g"),
            HMonomial::E(1) => f.write_str("e"),
            HMonomial::E(m) => write!(f, "e^{m}"),
            HMonomial::EInvKappa(m) => write!(f, "e^-{m}*kappa"),
            HMonomial::Xi(1) => f.write_str("xi"),
            HMonomial::Xi(n) => write!(f, "xi^{n}"),
            HMonomial::EXi(m, n) => {
                HMonomial::E(m).write_text(f)?;
                f.write_str("*")?;
                HMonomial::Xi(n).write_text(f)
            }
            HMonomial::TauInv(n) => write!(f, "tau(i^-{})", 2 * n),
        }
    }

    fn rho_value(self) -> i64 {
        self.rho()
    }

    fn fixed_value(self) -> i64 {
        self.fixed()
    }

    fn tau_text(self) -> Option<String> {
        match self {
            HMonomial::Xi(n) => Some(format!("tau(i^{})", 2 * n)),
            _ => None,
        }
    }
}

/// `g = [C2/e]`.
pub fn g() -> HElement {
    HElement::monomial(1, HMonomial::G)
}

/// `κ = 2 − g`.
pub fn kappa() -> HElement {
    HElement::from_terms(RoC2Degree::ZERO, [(2, HMonomial::One), (-1, HMonomial::G)])
}

/// The unit `1 − κ = g − 1`; it squares to 1.
pub fn unit_u() -> HElement {
    HElement::from_terms(RoC2Degree::ZERO, [(-1, HMonomial::One), (1, HMonomial::G)])
}

/// `τ(ι^{2ℓ})`: `tau(i^-2n)` for `ℓ = −n < 0`, `g` for `ℓ = 0`, and `2ξ^ℓ` for `ℓ > 0`.
pub fn tau(ell: i32) -> HElement {
    match ell {
        l if l < 0 => HElement::monomial(1, HMonomial::TauInv(l.unsigned_abs())),
        0 => g(),
        l => HElement::monomial(2, HMonomial::Xi(l as u32)),
    }
}

/// `e^j κ`: `e^{-m}κ` for `j = −m < 0`, `κ` for `j = 0`, and `2e^j` for `j > 0`.
pub fn e_kappa(j: i32) -> HElement {
    match j {
        j if j < 0 => HElement::monomial(1, HMonomial::EInvKappa(j.unsigned_abs())),
        0 => kappa(),
        j => HElement::monomial(2, HMonomial::E(j as u32)),
    }
}

/// Restriction to nonequivariant cohomology of a point: `coeff · ι^iota`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Restriction {
    pub coeff: i64,
    pub iota: i32,
}

pub fn h_add(x: &HElement, y: &HElement) -> Result<HElement, crate::Error> {
    x.checked_add(y).map_err(|(a, b)| crate::Error::GradingMismatch(a.to_string(), b.to_string()))
}

pub fn h_mul(x: &HElement, y: &HElement) -> HElement {
    x * y
}

pub fn h_rho(x: &HElement) -> Restriction {
    Restriction { coeff: x.rho(), iota: x.grading().b }
}

pub fn h_fixed(x: &HElement) -> i64 {
    x.fixed()
}

/// Membership in the additive subgroup `T` spanned by `A(C2)`, `e^m`, `e^{-m}κ` and `τ(ι^{2ℓ})`.
pub fn in_t(x: &HElement) -> bool {
    x.terms().all(|(m, c)| match m {
        HMonomial::EXi(..) => false,
        HMonomial::Xi(_) => c % 2 == 0,
        _ => true,
    })
}

/// Membership in the ideal `I_e ⊂ T`.
pub fn in_ie(x: &HElement) -> bool {
    x.terms().all(|(m, c)| match m {
        HMonomial::EXi(..) => false,
        HMonomial::One | HMonomial::E(_) | HMonomial::Xi(_) => c % 2 == 0,
        HMonomial::G | HMonomial::EInvKappa(_) | HMonomial::TauInv(_) => true,
    })
}

/// Sets `κ = 0`: `g ↦ 2`, `e^{-m}κ ↦ 0`, and `e` becomes 2-torsion.
pub fn to_constz(x: &HElement) -> ZHElement {
    x.map_terms(x.grading(), |m| match m {
        HMonomial::One => vec![(1, ZMonomial::One)],
        HMonomial::G => vec![(2, ZMonomial::One)],
        HMonomial::E(k) => vec![(1, ZMonomial::E(k))],
        HMonomial::EInvKappa(_) => vec![],
        HMonomial::Xi(n) => vec![(1, ZMonomial::Xi(n))],
        HMonomial::EXi(k, n) => vec![(1, ZMonomial::EXi(k, n))],
        HMonomial::TauInv(n) => vec![(1, ZMonomial::TauInv(n))],
    })
}

/// The monomials spanning the group in a grading (empty outside the even-column support).
pub fn monomials_at(g: RoC2Degree) -> Vec<HMonomial> {
    let (a, b) = (g.a, g.b);
    if a % 2 != 0 {
        return vec![];
    }
    if a == 0 {
        return match b {
            0 => vec![HMonomial::One, HMonomial::G],
            b if b > 0 => vec![HMonomial::E(b as u32)],
            b => vec![HMonomial::EInvKappa(b.unsigned_abs())],
        };
    }
    let n = (a / 2).unsigned_abs();
    if a < 0 {
        let excess = b - 2 * n as i32;
        match excess {
            0 => vec![HMonomial::Xi(n)],
            e if e > 0 => vec![HMonomial::EXi(e as u32, n)],
            _ => vec![],
        }
    } else if b == -a {
        vec![HMonomial::TauInv(n)]
    } else {
        vec![]
    }
}

/// Kind of group in a grading, as drawn in the chart of the point ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Zero,
    Burnside,
    Integers,
    Two,
}

pub fn group_at(g: RoC2Degree) -> GroupKind {
    match monomials_at(g).as_slice() {
        [] => GroupKind::Zero,
        [_, _] => GroupKind::Burnside,
        [m] if m.torsion() == 2 => GroupKind::Two,
        _ => GroupKind::Integers,
    }
}

/// Prints an element of `T` with even multiples of `ξ^ℓ` written as multiples of `τ(ι^{2ℓ})`.
pub fn tau_form(x: &HElement) -> String {
    x.tau_form()
}
