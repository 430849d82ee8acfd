//! Restriction to nonequivariant cohomology and the fixed-point map.

use std::fmt;

use serde::Serialize;

use crate::hscalar::in_t;
use crate::projmod::basis::Family;
use crate::projmod::element::{Element, ModuleElement};
use crate::scalar::ScalarMonomial;

/// An element of `Z[ĉ]/(ĉ^N)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NoneqPoly {
    pub truncation: u32,
    pub coeffs: Vec<i64>,
}

impl NoneqPoly {
    pub fn zero(truncation: u32) -> Self {
        NoneqPoly { truncation, coeffs: vec![0; truncation as usize] }
    }

    /// `c · ĉ^k`, zero when `k ≥ N`.
    pub fn monomial(truncation: u32, c: i64, k: i32) -> Self {
        let mut out = Self::zero(truncation);
        out.add(c, k);
        out
    }

    pub fn add(&mut self, c: i64, k: i32) {
        if let Some(slot) = usize::try_from(k).ok().and_then(|k| self.coeffs.get_mut(k)) {
            *slot += c;
        }
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.truncation, other.truncation);
        let mut out = Self::zero(self.truncation);
        for (i, &x) in self.coeffs.iter().enumerate() {
            for (j, &y) in other.coeffs.iter().enumerate() {
                out.add(x * y, (i + j) as i32);
            }
        }
        out
    }

    pub fn reduce_mod(&self, n: i64) -> Self {
        NoneqPoly { truncation: self.truncation, coeffs: self.coeffs.iter().map(|c| c.rem_euclid(n)).collect() }
    }

    /// `(k, c)` for the highest nonzero term.
    pub fn leading(&self) -> Option<(usize, i64)> {
        self.coeffs.iter().enumerate().rev().find(|(_, &c)| c != 0).map(|(k, &c)| (k, c))
    }
}

impl fmt::Display for NoneqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().enumerate().rev().filter(|(_, &c)| c != 0).map(|(k, &c)| {
            let mut body = String::new();
            let carrier = match k {
                0 => "1".to_string(),
                1 => "c".to_string(),
                k => format!("c^{k}"),
            };
            crate::scalar::write_term(&mut body, c.abs(), &carrier);
            (c < 0, body)
        });
        f.write_str(&crate::scalar::join_signed(terms))
    }
}

/// Image under the fixed-point map, in `H(X(p)) × H(X(q))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FixedPair {
    pub b0: NoneqPoly,
    pub b1: NoneqPoly,
}

impl FixedPair {
    pub fn mul(&self, other: &Self) -> Self {
        FixedPair { b0: self.b0.mul(&other.b0), b1: self.b1.mul(&other.b1) }
    }

    pub fn reduce_mod(&self, n: i64) -> Self {
        FixedPair { b0: self.b0.reduce_mod(n), b1: self.b1.reduce_mod(n) }
    }
}

impl fmt::Display for FixedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.b0, self.b1)
    }
}

pub fn mod_rho<M: ScalarMonomial>(x: &ModuleElement<M>) -> NoneqPoly {
    let mut out = NoneqPoly::zero(x.space().rank());
    for (y, c) in x.terms() {
        out.add(c.rho(), y.index());
    }
    out
}

pub fn mod_fixed<M: ScalarMonomial>(x: &ModuleElement<M>) -> FixedPair {
    let sp = x.space();
    let mut b0 = NoneqPoly::zero(sp.p);
    let mut b1 = NoneqPoly::zero(sp.q);
    for (y, c) in x.terms() {
        let v = c.fixed();
        let (on_b0, on_b1) = match y.family(sp).expect("normalized elements have basis support") {
            Family::Gamma => (true, true),
            Family::Alpha | Family::ZetaF => (true, false),
            Family::Beta | Family::Delta | Family::Epsilon => (false, true),
        };
        if on_b0 {
            b0.add(v, y.a);
        }
        if on_b1 {
            b1.add(v, y.b);
        }
    }
    FixedPair { b0, b1 }
}

/// Whether every coefficient lies in `T`.
pub fn in_tilde_t(x: &Element) -> bool {
    x.terms().all(|(_, c)| in_t(c))
}
