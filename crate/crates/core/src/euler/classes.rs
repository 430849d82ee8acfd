//! Euler classes: products of line-bundle classes and the closed form.

use crate::euler::bundle::{BundleSum, BundleType, DegreeTriple, LineBundle, Ranks};
use crate::grading::{euler_grading, recover_ranks, PiBDegree};
use crate::hscalar::{e_kappa, g, tau, HElement, HMonomial};
use crate::projmod::{mod_fixed, mod_rho, BasisMonomial, Element, ProjSpace, Rules};
use crate::{Error, Result};

const ONE: BasisMonomial = BasisMonomial::ONE;
const CW: BasisMonomial = BasisMonomial::new(0, 0, 1, 0);
const CXW: BasisMonomial = BasisMonomial::new(0, 0, 0, 1);
const Z0_CW: BasisMonomial = BasisMonomial::new(1, 0, 1, 0);
const CW_CXW: BasisMonomial = BasisMonomial::new(0, 0, 1, 1);
const Z1_CW_CXW: BasisMonomial = BasisMonomial::new(0, 1, 1, 1);
const Z0_CW_CXW: BasisMonomial = BasisMonomial::new(1, 0, 1, 1);

/// A line-bundle Euler class as a polynomial in the generators, before normalization.
#[derive(Clone, Debug)]
pub struct LineForm {
    pub grading: PiBDegree,
    pub terms: Vec<(HElement, BasisMonomial)>,
}

pub fn line_form(l: LineBundle) -> LineForm {
    let d = l.half();
    let dg = g().scale(d);
    let dk = HElement::monomial(d, HMonomial::EInvKappa(2));
    let one_dg = &HElement::one() + &dg;
    let (terms, (n0, n1)) = match l.kind() {
        BundleType::I => (vec![(one_dg, CW), (dk, Z1_CW_CXW)], (1, 0)),
        BundleType::II => (vec![(HElement::monomial(d, HMonomial::TauInv(1)), Z0_CW), (dk, CW_CXW)], (1, 1)),
        BundleType::III => (vec![(one_dg, CXW), (dk, Z0_CW_CXW)], (0, 1)),
        BundleType::IV => (vec![(HElement::e(2), ONE), (dg, Z0_CW)], (0, 0)),
    };
    let terms = terms.into_iter().filter(|(c, _)| !c.is_zero()).collect();
    LineForm { grading: euler_grading(1, n0, n1), terms }
}

fn require_general(sp: ProjSpace) -> Result<()> {
    if sp.p == 0 || sp.q == 0 {
        return Err(Error::Context(format!("line bundle Euler classes need p, q >= 1, got {sp}")));
    }
    Ok(())
}

pub fn euler_line(l: LineBundle, sp: ProjSpace) -> Result<Element> {
    require_general(sp)?;
    let form = line_form(l);
    Ok(Element::one(sp).mul_raw_with(Rules::standard(), form.grading, &form.terms))
}

/// `e(F)` as the product of the line-bundle classes.
pub fn euler_product(f: &BundleSum) -> Result<Element> {
    euler_product_with(f, Rules::standard())
}

pub fn euler_product_with(f: &BundleSum, rules: Rules) -> Result<Element> {
    let sp = f.space();
    if !f.is_empty() {
        require_general(sp)?;
    }
    let mut acc = Element::one(sp);
    for &l in f.bundles() {
        let form = line_form(l);
        acc = acc.mul_raw_with(rules, form.grading, &form.terms);
    }
    Ok(acc)
}

/// `(N/2) · c · P`, with `P` a possibly unnormalized monomial.
#[derive(Clone, Debug)]
struct HalfTerm {
    numer: i64,
    scalar: HElement,
    carrier: BasisMonomial,
}

impl HalfTerm {
    /// Halving is done as late as possible: on the integer, then on the scalar, and finally on
    /// the normalized product, where the carrier may already have killed the term.
    fn eval(&self, sp: ProjSpace) -> Result<Element> {
        let HalfTerm { numer, scalar, carrier } = self;
        if numer % 2 == 0 {
            return Ok(Element::monomial(sp, scalar.scale(numer / 2), *carrier));
        }
        if let Some(h) = scalar.halve() {
            return Ok(Element::monomial(sp, h.scale(*numer), *carrier));
        }
        let y = Element::monomial(sp, scalar.clone(), *carrier);
        y.halve().map(|h| h.scale(*numer)).ok_or_else(|| {
            Error::Internal(format!("({numer}/2)*({scalar})*{carrier} = ({numer}/2)*({y}) is not integral"))
        })
    }
}

/// Which of the three cases of the closed form applies, and its ingredients.
#[derive(Clone, Debug)]
pub struct ClosedForm {
    pub case: u8,
    pub p_n: BasisMonomial,
    pub tau_n: HElement,
    pub p_k: BasisMonomial,
    pub p_k_minus_1: BasisMonomial,
    terms: [HalfTerm; 3],
}

pub fn closed_form(f: &BundleSum) -> Result<ClosedForm> {
    let sp = f.space();
    require_general(sp)?;
    f.check_context()?;
    let (p, q) = (sp.p as i32, sp.q as i32);
    let Ranks { n, n0, n1 } = f.ranks();
    let DegreeTriple { delta, delta0, delta1 } = f.degrees();
    let eps = (n + n0 + n1).rem_euclid(2);

    let (p_n, tau_n) = if n + n0 - n1 > 2 * p {
        (BasisMonomial::new(-(n + n0 - n1 - 2 * p), 0, p, n - p), tau(n - n1 - p))
    } else if n - n0 + n1 > 2 * q {
        (BasisMonomial::new(0, -(n - n0 + n1 - 2 * q), n - q, q), tau(n - n0 - q))
    } else {
        let a = (n + n0 - n1 + eps) / 2;
        let b = (n - n0 + n1 - eps) / 2;
        (BasisMonomial::new(eps, 0, a, b), tau((n - n0 - n1 - eps) / 2))
    };
    let p_k = if n0 < p { BasisMonomial::new(1, 0, n0 + 1, n1) } else { BasisMonomial::new(-(n0 - p), 0, p, n1) };
    let p_k1 = if n1 < q { BasisMonomial::new(0, 0, n0, n1) } else { BasisMonomial::new(0, -(n1 - q), n0, q) };
    let nb0 = n0.min(p - 1);
    let nb1 = n1.min(q);

    let term = |numer: i64, scalar: HElement, carrier: BasisMonomial| HalfTerm { numer, scalar, carrier };
    let (case, terms) = if delta % 2 == 0 {
        (
            1,
            [
                term(delta, tau_n.clone(), p_n),
                term(delta1 - delta0, e_kappa(-2 * (nb0 + nb1 - n + 1)), p_k),
                term(delta0, e_kappa(-2 * (nb0 + nb1 - n)), p_k1),
            ],
        )
    } else if delta0 != 0 {
        (
            2,
            [
                term(delta - delta0, g(), p_n),
                term(delta1 - delta0, e_kappa(-2), p_k),
                term(2 * delta0, HElement::one(), p_k1),
            ],
        )
    } else {
        (
            3,
            [
                term(delta - delta1, g(), p_n),
                term(0, HElement::one(), p_k),
                term(2 * delta1, HElement::one(), p_k1),
            ],
        )
    };
    Ok(ClosedForm { case, p_n, tau_n, p_k, p_k_minus_1: p_k1, terms })
}

/// `e(F)` from the closed form `α P_n + β P_k + γ P_{k−1}`.
pub fn euler_closed(f: &BundleSum) -> Result<Element> {
    let form = closed_form(f)?;
    let r = f.ranks();
    let mut acc = Element::zero(f.space(), euler_grading(r.n, r.n0, r.n1));
    for t in &form.terms {
        let x = t.eval(f.space())?;
        acc = acc.checked_add(&x).map_err(|e| Error::Internal(format!("closed form term {t:?}: {e}")))?;
    }
    Ok(acc)
}

/// Reads `(Δ, Δ0, Δ1)` off the restriction and fixed-point images.
pub fn recover_degrees(x: &Element) -> Result<DegreeTriple> {
    let r = recover_ranks(x.grading())?;
    let at = |poly: &crate::projmod::NoneqPoly, k: i32| usize::try_from(k).map(|k| poly.coeff(k)).unwrap_or(0);
    let rho = mod_rho(x);
    let fixed = mod_fixed(x);
    Ok(DegreeTriple {
        delta: at(&rho, r.n_total),
        delta0: at(&fixed.b0, r.n_fix0),
        delta1: at(&fixed.b1, r.n_fix1),
    })
}
