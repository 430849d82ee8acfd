//! Borel cohomology: the point ring `Z[e, ξ^{±1}]/(2e)` and `X(p,q)` as polynomials in
//! `ĉ` (the image of `ζ0 ĉ_ω`) modulo `ĉ^p (ĉ + e²)^q`.

use std::collections::BTreeMap;
use std::fmt;

use crate::euler::{BundleSum, DegreeTriple, Ranks};
use crate::hscalar::{HElement, HMonomial};
use crate::projmod::{Element, ProjSpace};
use crate::scalar::{join_signed, write_term};
use crate::Result;

/// `Σ c · e^m ξ^n`, with coefficients in `Z/2` once `m ≥ 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BorelScalar {
    terms: BTreeMap<(u32, i32), i64>,
}

impl BorelScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(c: i64, e: u32, xi: i32) -> Self {
        let mut out = Self::zero();
        out.add_term(c, e, xi);
        out
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(c, 0, 0)
    }

    fn add_term(&mut self, c: i64, e: u32, xi: i32) {
        let entry = self.terms.entry((e, xi)).or_insert(0);
        *entry += c;
        if e > 0 {
            *entry = entry.rem_euclid(2);
        }
        if *entry == 0 {
            self.terms.remove(&(e, xi));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, i32), i64)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, *c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((e, xi), c) in other.terms() {
            out.add_term(c, e, xi);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for ((e, xi), c) in self.terms() {
            out.add_term(c * k, e, xi);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((e1, x1), c1) in self.terms() {
            for ((e2, x2), c2) in other.terms() {
                out.add_term(c1 * c2, e1 + e2, x1 + x2);
            }
        }
        out
    }

    /// Multiplies by `ξ^k`.
    pub fn shift_xi(&self, k: i32) -> Self {
        BorelScalar { terms: self.terms.iter().map(|(&(e, x), &c)| ((e, x + k), c)).collect() }
    }
}

impl fmt::Display for BorelScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().map(|((e, xi), c)| {
            let mut parts = Vec::new();
            match e {
                0 => {}
                1 => parts.push("e".to_string()),
                e => parts.push(format!("e^{e}")),
            }
            match xi {
                0 => {}
                1 => parts.push("xi".to_string()),
                x => parts.push(format!("xi^{x}")),
            }
            let text = if parts.is_empty() { "1".to_string() } else { parts.join("*") };
            let mut body = String::new();
            write_term(&mut body, c.abs(), &text);
            (c < 0, body)
        });
        f.write_str(&join_signed(terms))
    }
}

/// Image of a point-ring element: `κ ↦ 0`, `g ↦ 2`, `τ(ι^{-2n}) ↦ 2ξ^{-n}`.
pub fn borel_scalar(x: &HElement) -> BorelScalar {
    let mut out = BorelScalar::zero();
    for (m, c) in x.terms() {
        match m {
            HMonomial::One => out.add_term(c, 0, 0),
            HMonomial::G => out.add_term(2 * c, 0, 0),
            HMonomial::EInvKappa(_) => {}
            HMonomial::E(k) => out.add_term(c, k, 0),
            HMonomial::Xi(n) => out.add_term(c, 0, n as i32),
            HMonomial::EXi(k, n) => out.add_term(c, k, n as i32),
            HMonomial::TauInv(n) => out.add_term(2 * c, 0, -(n as i32)),
        }
    }
    out
}

/// A polynomial in `ĉ` of degree below `p+q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BorelElement {
    sp: ProjSpace,
    coeffs: Vec<BorelScalar>,
}

fn binomial_parity(n: u32, k: u32) -> i64 {
    // Lucas: C(n,k) is odd iff the bits of k are a subset of those of n.
    i64::from(k & !n == 0)
}

impl BorelElement {
    pub fn zero(sp: ProjSpace) -> Self {
        BorelElement { sp, coeffs: vec![BorelScalar::zero(); sp.rank() as usize] }
    }

    pub fn one(sp: ProjSpace) -> Self {
        Self::from_poly(sp, vec![BorelScalar::from_int(1)])
    }

    /// `ĉ`.
    pub fn c(sp: ProjSpace) -> Self {
        Self::from_poly(sp, vec![BorelScalar::zero(), BorelScalar::from_int(1)])
    }

    pub fn scalar(sp: ProjSpace, s: BorelScalar) -> Self {
        Self::from_poly(sp, vec![s])
    }

    /// Reduces an arbitrary polynomial, lowest degree first.
    pub fn from_poly(sp: ProjSpace, poly: Vec<BorelScalar>) -> Self {
        BorelElement { sp, coeffs: reduce(sp, poly) }
    }

    pub fn space(&self) -> ProjSpace {
        self.sp
    }

    pub fn coeffs(&self) -> &[BorelScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BorelScalar::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.sp, other.sp);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x.add(y)).collect();
        BorelElement { sp: self.sp, coeffs }
    }

    pub fn scale(&self, s: &BorelScalar) -> Self {
        BorelElement { sp: self.sp, coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.sp, other.sp);
        let mut poly = vec![BorelScalar::zero(); 2 * self.coeffs.len()];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate() {
                poly[i + j] = poly[i + j].add(&x.mul(y));
            }
        }
        Self::from_poly(self.sp, poly)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.sp), |acc, _| acc.mul(self))
    }
}

/// `ĉ^{p+q} = −Σ_{j<q} C(q,j) e^{2(q−j)} ĉ^{p+j}`, applied from the top down. Every term on
/// the right has a positive power of `e`, so only the parity of the binomial matters.
pub fn reduce(sp: ProjSpace, mut poly: Vec<BorelScalar>) -> Vec<BorelScalar> {
    let n = sp.rank() as usize;
    let (p, q) = (sp.p as usize, sp.q);
    while poly.len() > n {
        let top = poly.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let shift = poly.len() - n;
        for j in 0..q {
            let parity = binomial_parity(q, j);
            if parity == 0 {
                continue;
            }
            let e_power = BorelScalar::monomial(1, 2 * (q - j), 0);
            let k = shift + p + j as usize;
            poly[k] = poly[k].add(&top.mul(&e_power).scale(-1));
        }
    }
    poly.resize(n, BorelScalar::zero());
    poly
}

/// The defining relation `ĉ^p (ĉ + e²)^q`, unreduced.
pub fn relation(sp: ProjSpace) -> Vec<BorelScalar> {
    let mut poly = vec![BorelScalar::zero(); sp.p as usize];
    poly.push(BorelScalar::from_int(1));
    for _ in 0..sp.q {
        let mut next = vec![BorelScalar::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c);
            next[i] = next[i].add(&c.mul(&BorelScalar::monomial(1, 2, 0)));
        }
        poly = next;
    }
    poly
}

impl fmt::Display for BorelElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let carrier = match k {
                0 => String::new(),
                1 => "c".to_string(),
                k => format!("c^{k}"),
            };
            for ((e, xi), v) in c.terms() {
                let scalar = BorelScalar::monomial(1, e, xi).to_string();
                let text = match (scalar.as_str(), carrier.as_str()) {
                    (s, "") => s.to_string(),
                    ("1", c) => c.to_string(),
                    (s, c) => format!("{s}*{c}"),
                };
                let mut body = String::new();
                write_term(&mut body, v.abs(), &text);
                terms.push((v < 0, body));
            }
        }
        f.write_str(&join_signed(terms))
    }
}

/// `ζ0 ↦ 1`, `ζ1 ↦ ξ`, `ĉ_ω ↦ ĉ`, `ĉ_χω ↦ ξ^{-1}(ĉ + e²)`, then multiplied by `ξ^{n1}` so that
/// every line bundle has rank `2σ`.
pub fn borel_map(x: &Element, n1: i32) -> BorelElement {
    let sp = x.space();
    let c = BorelElement::c(sp);
    let c_twisted = c.add(&BorelElement::scalar(sp, BorelScalar::monomial(1, 2, 0)));
    let mut acc = BorelElement::zero(sp);
    for (m, coeff) in x.terms() {
        let s = borel_scalar(coeff).shift_xi(m.t - m.b + n1);
        let term = c.pow(m.a as u32).mul(&c_twisted.pow(m.b as u32)).scale(&s);
        acc = acc.add(&term);
    }
    acc
}

pub fn borel_euler_closed(f: &BundleSum) -> Result<BorelElement> {
    f.check_context()?;
    let sp = f.space();
    let Ranks { n, n0, n1 } = f.ranks();
    let DegreeTriple { delta, delta0, delta1 } = f.degrees();
    let c = BorelElement::c(sp);
    let c_twisted = c.add(&BorelElement::scalar(sp, BorelScalar::monomial(1, 2, 0)));
    let int = |k: i64| BorelScalar::from_int(k);
    let out = if delta % 2 != 0 {
        c.pow(n0 as u32).mul(&c_twisted.pow((n - n0) as u32)).scale(&int(delta))
    } else {
        let main = c.pow(n as u32).scale(&int(delta));
        if delta0 % 2 == 0 && delta1 % 2 == 0 {
            main
        } else {
            let e = BorelScalar::monomial(1, (2 * (n - n0 - n1)) as u32, 0);
            main.add(&c.pow(n0 as u32).mul(&c_twisted.pow(n1 as u32)).scale(&e))
        }
    };
    Ok(out)
}
