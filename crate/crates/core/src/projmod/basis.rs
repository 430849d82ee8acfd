//! Projective spaces `X(p,q)`, canonical monomials and the preferred basis in each `m`-class.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::grading::PiBDegree;
use crate::{Error, Result};

/// `X(p,q)`, the projective space of `C^p ⊕ (C^σ)^q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProjSpace {
    pub p: u32,
    pub q: u32,
}

impl ProjSpace {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if p + q == 0 {
            return Err(Error::EmptySpace);
        }
        Ok(ProjSpace { p, q })
    }

    /// Rank of the cohomology as a module over the point ring.
    pub fn rank(self) -> u32 {
        self.p + self.q
    }

    pub(crate) fn pi(self) -> i32 {
        self.p as i32
    }

    pub(crate) fn qi(self) -> i32 {
        self.q as i32
    }
}

impl fmt::Display for ProjSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({},{})", self.p, self.q)
    }
}

/// `ζ0^s ζ1^t ĉ_ω^a ĉ_χω^b`. Negative `s` or `t` denotes a divided element.
///
/// The same type carries unnormalized products inside the rewrite engine; [`family`] tells the
/// two apart.
///
/// [`family`]: BasisMonomial::family
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct BasisMonomial {
    pub s: i32,
    pub t: i32,
    pub a: i32,
    pub b: i32,
}

/// The six shapes a basis monomial can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// `ζ1^t ĉ_ω^a`, `t ≥ 1`, `a < p`
    Alpha,
    /// `ζ0^s ĉ_χω^b`, `s ≥ 1`, `b < q`
    Beta,
    /// `ĉ_ω^a ĉ_χω^b`
    Gamma,
    /// `ζ0 ĉ_ω^a ĉ_χω^b`, `1 ≤ a ≤ p`, `b < q`
    Delta,
    /// `ζ0^{-k} ĉ_ω^p ĉ_χω^b`
    Epsilon,
    /// `ζ1^{-k} ĉ_ω^a ĉ_χω^q`
    ZetaF,
}

/// Position of a monomial: its `m`-class and the point `(A, B)` with grading `m·Ω1 + 2A + 2Bσ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Position {
    pub m: i32,
    #[serde(rename = "A")]
    pub a: i32,
    #[serde(rename = "B")]
    pub b: i32,
}

impl BasisMonomial {
    pub const ONE: BasisMonomial = BasisMonomial { s: 0, t: 0, a: 0, b: 0 };

    pub const fn new(s: i32, t: i32, a: i32, b: i32) -> Self {
        BasisMonomial { s, t, a, b }
    }

    pub fn position(self) -> Position {
        Position { m: self.t - self.s + self.a - self.b, a: self.a - self.s, b: self.s + self.b }
    }

    /// Restriction index: the class restricts to `ĉ^{a+b}`.
    pub fn index(self) -> i32 {
        self.a + self.b
    }

    pub fn grading(self) -> PiBDegree {
        let pos = self.position();
        PiBDegree::new(pos.m, 2 * pos.a, 2 * pos.b)
    }

    pub fn is_divided(self) -> bool {
        self.s < 0 || self.t < 0
    }

    pub fn family(self, sp: ProjSpace) -> Option<Family> {
        let (p, q) = (sp.pi(), sp.qi());
        let BasisMonomial { s, t, a, b } = self;
        if a < 0 || b < 0 {
            return None;
        }
        let fam = match (s, t) {
            (0, t) if t >= 1 && a < p && b == 0 => Family::Alpha,
            (s, 0) if s >= 1 && a == 0 && b < q => Family::Beta,
            (0, 0) if a <= p && b <= q && (a, b) != (p, q) => Family::Gamma,
            (1, 0) if 1 <= a && a <= p && b < q => Family::Delta,
            (s, 0) if s <= -1 && a == p && b < q => Family::Epsilon,
            (0, t) if t <= -1 && a < p && b == q => Family::ZetaF,
            _ => return None,
        };
        Some(fam)
    }

    pub fn is_basis(self, sp: ProjSpace) -> bool {
        self.family(sp).is_some()
    }

    /// Exponentwise product, not normalized.
    pub fn raw_mul(self, other: BasisMonomial) -> BasisMonomial {
        BasisMonomial::new(self.s + other.s, self.t + other.t, self.a + other.a, self.b + other.b)
    }
}

impl Ord for BasisMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |x: &Self| (x.index(), x.s, x.t, x.a, x.b);
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for BasisMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, k) in [("z0", self.s), ("z1", self.t), ("cw", self.a), ("cxw", self.b)] {
            match k {
                0 => {}
                1 => parts.push(name.to_string()),
                k => parts.push(format!("{name}^{k}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// The four multiplicative generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Z0,
    Z1,
    Cw,
    Cxw,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::Z0, Generator::Z1, Generator::Cw, Generator::Cxw];

    pub fn monomial(self) -> BasisMonomial {
        match self {
            Generator::Z0 => BasisMonomial::new(1, 0, 0, 0),
            Generator::Z1 => BasisMonomial::new(0, 1, 0, 0),
            Generator::Cw => BasisMonomial::new(0, 0, 1, 0),
            Generator::Cxw => BasisMonomial::new(0, 0, 0, 1),
        }
    }
}

/// The basis `F_{p,q}(m)` of the `m`-class, ordered by restriction index.
pub fn basis(sp: ProjSpace, m: i32) -> Vec<BasisMonomial> {
    let mut out = Vec::with_capacity(sp.rank() as usize);
    unroll(sp.pi(), sp.qi(), m, BasisMonomial::ONE, &mut out);
    out.sort();
    out
}

/// `F_{p,q}(m)` multiplied by `shift`, appended to `out`.
fn unroll(p: i32, q: i32, m: i32, shift: BasisMonomial, out: &mut Vec<BasisMonomial>) {
    if q == 0 {
        out.extend((0..p).map(|j| shift.raw_mul(BasisMonomial::new(0, m - j, j, 0))));
    } else if p == 0 {
        out.extend((0..q).map(|j| shift.raw_mul(BasisMonomial::new(-m - j, 0, 0, j))));
    } else if m >= 0 {
        out.push(shift.raw_mul(BasisMonomial::new(0, m, 0, 0)));
        unroll(p - 1, q, m - 1, shift.raw_mul(Generator::Cw.monomial()), out);
    } else {
        out.push(shift.raw_mul(BasisMonomial::new(-m, 0, 0, 0)));
        unroll(p, q - 1, m + 1, shift.raw_mul(Generator::Cxw.monomial()), out);
    }
}

pub fn position(x: BasisMonomial) -> Position {
    x.position()
}
