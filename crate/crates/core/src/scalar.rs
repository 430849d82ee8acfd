//! Homogeneous integer combinations of named monomials.
//!
//! Both the Burnside-coefficient point ring and its constant-`Z` quotient are presented this way:
//! a ring given by a finite list of monomial shapes, a monomial multiplication table, and the
//! additive order of each monomial (0 for a `Z` summand, 2 for a `Z/2` summand).

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use crate::grading::RoC2Degree;

pub trait ScalarMonomial: Copy + Ord + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    const ONE: Self;

    fn grading(self) -> RoC2Degree;

    /// Additive order of the summand generated by this monomial; 0 means infinite.
    fn torsion(self) -> i64;

    /// Product of two monomials as an integer combination.
    fn mul(self, other: Self) -> Vec<(i64, Self)>;

    /// `ξ^n`; `n = 0` gives `1`.
    fn xi(n: u32) -> Self;

    /// `e^m`; `m = 0` gives `1`.
    fn e(m: u32) -> Self;

    /// The unit `u` in the relation `ζ1·ĉ_χω = u·ζ0·ĉ_ω + e²`.
    fn relation_unit() -> Scalar<Self>;

    /// Canonical text of the monomial, `"1"` for the unit.
    fn write_text(self, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    /// Coefficient of the restriction to nonequivariant cohomology.
    fn rho_value(self) -> i64;

    /// Value of the fixed-point map.
    fn fixed_value(self) -> i64;

    /// For `ξ^n`, the text of `τ(ι^{2n}) = 2ξ^n`.
    fn tau_text(self) -> Option<String> {
        None
    }
}

/// A homogeneous element: a grading and a finite map from monomials to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar<M: ScalarMonomial> {
    grading: RoC2Degree,
    terms: BTreeMap<M, i64>,
}

impl<M: ScalarMonomial> Scalar<M> {
    pub fn zero(grading: RoC2Degree) -> Self {
        Scalar { grading, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, M::ONE)
    }

    pub fn from_int(k: i64) -> Self {
        Self::monomial(k, M::ONE)
    }

    pub fn monomial(coeff: i64, m: M) -> Self {
        let mut out = Self::zero(m.grading());
        out.add_term(coeff, m);
        out
    }

    pub fn xi(n: u32) -> Self {
        Self::monomial(1, M::xi(n))
    }

    pub fn e(m: u32) -> Self {
        Self::monomial(1, M::e(m))
    }

    /// Builds an element from terms that must all share `grading`.
    pub fn from_terms(grading: RoC2Degree, terms: impl IntoIterator<Item = (i64, M)>) -> Self {
        let mut out = Self::zero(grading);
        for (c, m) in terms {
            assert_eq!(m.grading(), grading, "monomial {m:?} does not live in grading {grading}");
            out.add_term(c, m);
        }
        out
    }

    pub fn grading(&self) -> RoC2Degree {
        self.grading
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (M, i64)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: M) -> i64 {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    fn add_term(&mut self, coeff: i64, m: M) {
        let entry = self.terms.entry(m).or_insert(0);
        *entry += coeff;
        let t = m.torsion();
        if t != 0 {
            *entry = entry.rem_euclid(t);
        }
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    /// Sum of two elements. Zero is homogeneous of every grading, so it never conflicts.
    pub fn checked_add(&self, other: &Self) -> Result<Self, (RoC2Degree, RoC2Degree)> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() && self.grading != other.grading {
            return Ok(other.clone());
        }
        if self.grading != other.grading {
            return Err((self.grading, other.grading));
        }
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(c, m);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero(self.grading);
        for (m, c) in self.terms() {
            out.add_term(c * k, m);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `x / 2` when every coefficient is even and sits in a torsion-free summand.
    pub fn halve(&self) -> Option<Self> {
        let mut out = Self::zero(self.grading);
        for (m, c) in self.terms() {
            if m.torsion() != 0 || c % 2 != 0 {
                return None;
            }
            out.add_term(c / 2, m);
        }
        Some(out)
    }

    /// Restriction coefficient; zero unless the grading has rank 0.
    pub fn rho(&self) -> i64 {
        if self.grading.rank() != 0 {
            return 0;
        }
        self.terms().map(|(m, c)| c * m.rho_value()).sum()
    }

    pub fn fixed(&self) -> i64 {
        self.terms().map(|(m, c)| c * m.fixed_value()).sum()
    }

    /// Text with even multiples of `ξ^n` written as multiples of `τ(ι^{2n})`.
    pub fn tau_form(&self) -> String {
        let terms = self.terms().map(|(m, c)| {
            let mut body = String::new();
            match m.tau_text() {
                Some(text) if c % 2 == 0 => write_term(&mut body, (c / 2).abs(), &text),
                _ => write_term(&mut body, c.abs(), &monomial_text(m)),
            }
            (c < 0, body)
        });
        join_signed(terms)
    }

    /// Applies a monomial-wise linear map into another scalar ring.
    pub fn map_terms<N: ScalarMonomial>(&self, grading: RoC2Degree, f: impl Fn(M) -> Vec<(i64, N)>) -> Scalar<N> {
        let mut out = Scalar::<N>::zero(grading);
        for (m, c) in self.terms() {
            for (k, n) in f(m) {
                out.add_term(c * k, n);
            }
        }
        out
    }
}

impl<M: ScalarMonomial> Add for &Scalar<M> {
    type Output = Scalar<M>;
    fn add(self, rhs: Self) -> Scalar<M> {
        self.checked_add(rhs)
            .unwrap_or_else(|(x, y)| panic!("adding scalars of different gradings {x} and {y}"))
    }
}

impl<M: ScalarMonomial> Add for Scalar<M> {
    type Output = Scalar<M>;
    fn add(self, rhs: Self) -> Scalar<M> {
        &self + &rhs
    }
}

impl<M: ScalarMonomial> Neg for &Scalar<M> {
    type Output = Scalar<M>;
    fn neg(self) -> Scalar<M> {
        self.scale(-1)
    }
}

impl<M: ScalarMonomial> Neg for Scalar<M> {
    type Output = Scalar<M>;
    fn neg(self) -> Scalar<M> {
        self.scale(-1)
    }
}

impl<M: ScalarMonomial> Sub for &Scalar<M> {
    type Output = Scalar<M>;
    fn sub(self, rhs: Self) -> Scalar<M> {
        self + &(-rhs)
    }
}

impl<M: ScalarMonomial> Sub for Scalar<M> {
    type Output = Scalar<M>;
    fn sub(self, rhs: Self) -> Scalar<M> {
        &self - &rhs
    }
}

impl<M: ScalarMonomial> Mul for &Scalar<M> {
    type Output = Scalar<M>;
    fn mul(self, rhs: Self) -> Scalar<M> {
        let mut out = Scalar::zero(self.grading + rhs.grading);
        for (x, cx) in self.terms() {
            for (y, cy) in rhs.terms() {
                for (k, z) in x.mul(y) {
                    debug_assert_eq!(z.grading(), out.grading);
                    out.add_term(cx * cy * k, z);
                }
            }
        }
        out
    }
}

impl<M: ScalarMonomial> Mul for Scalar<M> {
    type Output = Scalar<M>;
    fn mul(self, rhs: Self) -> Scalar<M> {
        &self * &rhs
    }
}

struct MonomialText<M>(M);

impl<M: ScalarMonomial> fmt::Display for MonomialText<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_text(f)
    }
}

pub(crate) fn monomial_text<M: ScalarMonomial>(m: M) -> String {
    MonomialText(m).to_string()
}

/// Writes `c*text` for a nonnegative coefficient, dropping a unit coefficient or unit monomial.
pub(crate) fn write_term(out: &mut String, magnitude: i64, text: &str) {
    use fmt::Write;
    if text == "1" {
        let _ = write!(out, "{magnitude}");
    } else if magnitude == 1 {
        out.push_str(text);
    } else {
        let _ = write!(out, "{magnitude}*{text}");
    }
}

/// Joins signed terms as `t1 + t2 - t3`.
pub(crate) fn join_signed(terms: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (negative, body)) in terms.into_iter().enumerate() {
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<M: ScalarMonomial> fmt::Display for Scalar<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms().map(|(m, c)| {
            let mut body = String::new();
            write_term(&mut body, c.abs(), &monomial_text(m));
            (c < 0, body)
        });
        f.write_str(&join_signed(terms))
    }
}

impl<M: ScalarMonomial> fmt::Debug for Scalar<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in {}", self, self.grading)
    }
}
