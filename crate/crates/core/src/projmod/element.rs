//! Elements of the free module `H(X(p,q))` over the point ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::grading::{PiBDegree, RoC2Degree};
use crate::hscalar::HMonomial;
use crate::projmod::basis::{basis, BasisMonomial, Generator, ProjSpace};
use crate::projmod::rewrite::{normalize, Rules};
use crate::scalar::{Scalar, ScalarMonomial};
use crate::variants::zconst::ZMonomial;
use crate::{Error, Result};

/// A homogeneous element: basis monomials with nonzero scalar coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement<M: ScalarMonomial> {
    sp: ProjSpace,
    grading: PiBDegree,
    terms: BTreeMap<BasisMonomial, Scalar<M>>,
}

/// Burnside ring coefficients.
pub type Element = ModuleElement<HMonomial>;
/// Constant `Z` coefficients.
pub type ZElement = ModuleElement<ZMonomial>;

fn coeff_grading(total: PiBDegree, x: BasisMonomial) -> Option<RoC2Degree> {
    let d = total - x.grading();
    (d.m == 0).then(|| RoC2Degree::new(d.a, d.b))
}

impl<M: ScalarMonomial> ModuleElement<M> {
    pub fn zero(sp: ProjSpace, grading: PiBDegree) -> Self {
        ModuleElement { sp, grading, terms: BTreeMap::new() }
    }

    pub fn one(sp: ProjSpace) -> Self {
        Self::monomial(sp, Scalar::one(), BasisMonomial::ONE)
    }

    /// `c · x` for an arbitrary monomial `x`, normalized.
    pub fn monomial(sp: ProjSpace, c: Scalar<M>, x: BasisMonomial) -> Self {
        Self::monomial_with(sp, Rules::standard(), c, x)
    }

    pub fn monomial_with(sp: ProjSpace, rules: Rules, c: Scalar<M>, x: BasisMonomial) -> Self {
        let grading = x.grading() + c.grading();
        let mut out = Self::zero(sp, grading);
        for (y, k) in normalize(sp, rules, c, x) {
            out.add_term(y, k);
        }
        out
    }

    /// A basis monomial with coefficient 1; errors when `x` is not in the basis.
    pub fn basis_element(sp: ProjSpace, x: BasisMonomial) -> Result<Self> {
        if !x.is_basis(sp) {
            return Err(Error::NotBasis(x.to_string(), sp.to_string()));
        }
        let mut out = Self::zero(sp, x.grading());
        out.add_term(x, Scalar::one());
        Ok(out)
    }

    /// Builds an element from already-normalized terms. Zero coefficients are dropped.
    pub fn from_terms(
        sp: ProjSpace,
        grading: PiBDegree,
        terms: impl IntoIterator<Item = (BasisMonomial, Scalar<M>)>,
    ) -> Result<Self> {
        let mut out = Self::zero(sp, grading);
        for (x, c) in terms {
            if !x.is_basis(sp) {
                return Err(Error::NotBasis(x.to_string(), sp.to_string()));
            }
            if c.is_zero() {
                continue;
            }
            if coeff_grading(grading, x) != Some(c.grading()) {
                return Err(Error::GradingMismatch(
                    grading.to_string(),
                    (x.grading() + c.grading()).to_string(),
                ));
            }
            out.add_term(x, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, x: BasisMonomial, c: Scalar<M>) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(coeff_grading(self.grading, x), Some(c.grading()), "{x} in {}", self.grading);
        match self.terms.get(&x) {
            Some(old) => {
                let sum = old + &c;
                if sum.is_zero() {
                    self.terms.remove(&x);
                } else {
                    self.terms.insert(x, sum);
                }
            }
            None => {
                self.terms.insert(x, c);
            }
        }
    }

    pub fn space(&self) -> ProjSpace {
        self.sp
    }

    pub fn grading(&self) -> PiBDegree {
        self.grading
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (BasisMonomial, &Scalar<M>)> + '_ {
        self.terms.iter().map(|(x, c)| (*x, c))
    }

    /// Coefficient of `x`, zero of the right grading when absent.
    pub fn coeff(&self, x: BasisMonomial) -> Scalar<M> {
        match self.terms.get(&x) {
            Some(c) => c.clone(),
            None => Scalar::zero(coeff_grading(self.grading, x).unwrap_or_default()),
        }
    }

    pub fn has_divided(&self) -> bool {
        self.terms.keys().any(|x| x.is_divided())
    }

    /// Sum; zero is homogeneous of every grading.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.sp, other.sp, "adding elements of different spaces");
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() && self.grading != other.grading {
            return Ok(other.clone());
        }
        if self.grading != other.grading {
            return Err(Error::GradingMismatch(self.grading.to_string(), other.grading.to_string()));
        }
        let mut out = self.clone();
        for (x, c) in other.terms() {
            out.add_term(x, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Self {
        self.scalar_mul(&Scalar::from_int(k))
    }

    pub fn scalar_mul(&self, c: &Scalar<M>) -> Self {
        let mut out = Self::zero(self.sp, self.grading + c.grading());
        for (x, k) in self.terms() {
            out.add_term(x, k * c);
        }
        out
    }

    /// `x / 2`, when every coefficient halves.
    pub fn halve(&self) -> Option<Self> {
        let mut out = Self::zero(self.sp, self.grading);
        for (x, c) in self.terms() {
            out.add_term(x, c.halve()?);
        }
        Some(out)
    }

    /// Multiplication by one of the four generators.
    pub fn gen_mul(&self, g: Generator) -> Self {
        self.gen_mul_with(Rules::standard(), g)
    }

    pub fn gen_mul_with(&self, rules: Rules, g: Generator) -> Self {
        let gm = g.monomial();
        let mut out = Self::zero(self.sp, self.grading + gm.grading());
        for (x, c) in self.terms() {
            for (y, k) in normalize(self.sp, rules, c.clone(), x.raw_mul(gm)) {
                out.add_term(y, k);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_with(Rules::standard(), other)
    }

    /// Product. At most one factor may involve divided monomials.
    pub fn mul_with(&self, rules: Rules, other: &Self) -> Result<Self> {
        assert_eq!(self.sp, other.sp, "multiplying elements of different spaces");
        if self.has_divided() && other.has_divided() {
            return Err(Error::UnsupportedProduct);
        }
        let mut out = Self::zero(self.sp, self.grading + other.grading);
        for (x, cx) in self.terms() {
            for (y, cy) in other.terms() {
                for (z, k) in normalize(self.sp, rules, cx * cy, x.raw_mul(y)) {
                    out.add_term(z, k);
                }
            }
        }
        Ok(out)
    }

    /// Product with an unnormalized combination of monomials in the generators, of the given
    /// grading. Such a combination never involves divided monomials, so this always succeeds.
    pub fn mul_raw_with(&self, rules: Rules, grading: PiBDegree, raw: &[(Scalar<M>, BasisMonomial)]) -> Self {
        let mut out = Self::zero(self.sp, self.grading + grading);
        for (x, cx) in self.terms() {
            for (c, y) in raw {
                debug_assert!(!y.is_divided());
                for (z, k) in normalize(self.sp, rules, cx * c, x.raw_mul(*y)) {
                    out.add_term(z, k);
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut out = Self::one(self.sp);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Coefficients over the basis of the element's `m`-class, in restriction-index order.
    pub fn coeff_vector(&self) -> Vec<(usize, Scalar<M>)> {
        basis(self.sp, self.grading.m).into_iter().enumerate().map(|(i, x)| (i, self.coeff(x))).collect()
    }

    /// Applies a coefficient map termwise; the basis is the same in every theory.
    pub fn map_coeffs<N: ScalarMonomial>(&self, f: impl Fn(&Scalar<M>) -> Scalar<N>) -> ModuleElement<N> {
        let mut out = ModuleElement::zero(self.sp, self.grading);
        for (x, c) in self.terms() {
            out.add_term(x, f(c));
        }
        out
    }

    /// Text in terms of the basis elements `P_i` of the `m`-class, highest index first.
    pub fn p_form(&self) -> String {
        let terms = self
            .terms()
            .rev()
            .map(|(x, c)| term_text(&format!("P{}", x.index()), &c.tau_form(), c.len() == 1));
        crate::scalar::join_signed(terms)
    }
}

/// `(negative, body)` of a term `c · carrier`, given the text of `c`.
fn term_text(carrier: &str, scalar: &str, single: bool) -> (bool, String) {
    if single {
        let negative = scalar.starts_with('-');
        let body = scalar.trim_start_matches('-');
        let text = match (body, carrier) {
            (b, "1") => b.to_string(),
            ("1", carrier) => carrier.to_string(),
            (b, carrier) => format!("{b}*{carrier}"),
        };
        (negative, text)
    } else if carrier == "1" {
        (false, scalar.to_string())
    } else {
        (false, format!("({scalar})*{carrier}"))
    }
}

impl<M: ScalarMonomial> fmt::Display for ModuleElement<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms =
            self.terms().rev().map(|(x, c)| term_text(&x.to_string(), &c.to_string(), c.len() == 1));
        f.write_str(&crate::scalar::join_signed(terms))
    }
}

impl<M: ScalarMonomial> fmt::Debug for ModuleElement<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] in {} on {}", self, self.grading, self.sp)
    }
}

impl<M: ScalarMonomial> Add for &ModuleElement<M> {
    type Output = ModuleElement<M>;
    fn add(self, rhs: Self) -> ModuleElement<M> {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<M: ScalarMonomial> Add for ModuleElement<M> {
    type Output = ModuleElement<M>;
    fn add(self, rhs: Self) -> ModuleElement<M> {
        &self + &rhs
    }
}

impl<M: ScalarMonomial> Neg for &ModuleElement<M> {
    type Output = ModuleElement<M>;
    fn neg(self) -> ModuleElement<M> {
        self.scale(-1)
    }
}

impl<M: ScalarMonomial> Sub for &ModuleElement<M> {
    type Output = ModuleElement<M>;
    fn sub(self, rhs: Self) -> ModuleElement<M> {
        self + &(-rhs)
    }
}

impl<M: ScalarMonomial> Sub for ModuleElement<M> {
    type Output = ModuleElement<M>;
    fn sub(self, rhs: Self) -> ModuleElement<M> {
        &self - &rhs
    }
}

/// `g · x` for a generator and a basis monomial.
pub fn gen_mul(sp: ProjSpace, g: Generator, x: BasisMonomial) -> Result<Element> {
    Ok(Element::basis_element(sp, x)?.gen_mul(g))
}

pub fn mod_mul(x: &Element, y: &Element) -> Result<Element> {
    x.mul(y)
}

pub fn coeff_vector(x: &Element) -> Vec<(usize, Scalar<HMonomial>)> {
    x.coeff_vector()
}
