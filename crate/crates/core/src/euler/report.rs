//! Cross-checks of an Euler class computed two ways.

use serde::Serialize;

use crate::euler::bundle::{BundleSum, BundleType, DegreeTriple, Ranks};
use crate::euler::classes::{closed_form, euler_closed, euler_product_with, recover_degrees};
use crate::grading::{euler_grading, recover_ranks, RankTriple};
use crate::hscalar::{in_ie, HElement};
use crate::projmod::{in_tilde_t, mod_fixed, BasisMonomial, Element, FixedPair, NoneqPoly, Rules};
use crate::variants::borel::{borel_euler_closed, borel_map};
use crate::variants::zconst::{z_euler_closed, z_fixed, z_map};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    /// Both sides, when the check failed.
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Coefficient {
    pub i: usize,
    pub scalar: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EulerReport {
    pub bundles: String,
    pub p: u32,
    pub q: u32,
    pub ranks: Ranks,
    pub degrees: DegreeTriple,
    pub grading: String,
    pub case: u8,
    pub product: String,
    pub closed: String,
    pub p_form: String,
    pub coefficients: Vec<Coefficient>,
    pub in_tilde_t: bool,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub class: Element,
}

impl EulerReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn check(name: &'static str, pass: bool, detail: impl FnOnce() -> String) -> Check {
    Check { name, pass, detail: if pass { String::new() } else { detail() } }
}

fn eq_check<T: PartialEq + std::fmt::Display>(name: &'static str, left: &T, right: &T) -> Check {
    check(name, left == right, || format!("{left} != {right}"))
}

/// Runs every check on `F`. `split` chooses the partition used for the multiplicativity check,
/// defaulting to half the summands.
pub fn bezout_report(f: &BundleSum, split: Option<usize>) -> Result<EulerReport> {
    bezout_report_with(f, Rules::standard(), split)
}

/// As [`bezout_report`], with the given rules on the product path only.
pub fn bezout_report_with(f: &BundleSum, rules: Rules, split: Option<usize>) -> Result<EulerReport> {
    f.check_context()?;
    let sp = f.space();
    let ranks = f.ranks();
    let degrees = f.degrees();
    let product = euler_product_with(f, rules)?;
    let closed = euler_closed(f)?;
    let grading = euler_grading(ranks.n, ranks.n0, ranks.n1);
    let mut checks = vec![
        eq_check("product_equals_closed", &product, &closed),
        eq_check("grading", &product.grading(), &grading),
        check("in_tilde_t", in_tilde_t(&product), || product.to_string()),
        support_check(&product, ranks),
    ];
    match recover_degrees(&product) {
        Ok(d) => checks.push(eq_check("recover_degrees", &d, &degrees)),
        Err(e) => checks.push(check("recover_degrees", false, || e.to_string())),
    }
    match recover_ranks(product.grading()) {
        Ok(r) => checks.push(eq_check("recover_ranks", &r, &RankTriple::new(ranks.n, ranks.n0, ranks.n1))),
        Err(e) => checks.push(check("recover_ranks", false, || e.to_string())),
    }
    checks.push(multiplicativity_check(f, rules, &product, split)?);
    checks.push(parity_check(f));
    checks.push(je_check(&product, ranks, degrees));

    let z_class = z_map(&product);
    checks.push(eq_check("zconst_closed", &z_class, &z_euler_closed(f)?));
    checks.push(eq_check("zconst_fixed", &z_fixed(&z_class), &z_fixed_expected(f)));
    checks.push(eq_check("borel_closed", &borel_map(&product, ranks.n1), &borel_euler_closed(f)?));

    let coefficients = product
        .coeff_vector()
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| Coefficient { i, scalar: c.tau_form() })
        .collect();
    Ok(EulerReport {
        bundles: f.to_string(),
        p: sp.p,
        q: sp.q,
        ranks,
        degrees,
        grading: grading.to_string(),
        case: closed_form(f)?.case,
        product: product.to_string(),
        closed: closed.to_string(),
        p_form: product.p_form(),
        coefficients,
        in_tilde_t: in_tilde_t(&product),
        checks,
        class: product,
    })
}

/// At most three basis elements, on the diagonal or in the column of the class.
fn support_check(x: &Element, r: Ranks) -> Check {
    let stray: Vec<String> = x
        .terms()
        .map(|(m, _)| m)
        .filter(|m| {
            let pos = m.position();
            pos.a + pos.b != r.n && pos.a != r.n0
        })
        .map(|m| m.to_string())
        .collect();
    check("support", x.len() <= 3 && stray.is_empty(), || {
        format!("{} terms, off the diagonal and column: [{}]", x.len(), stray.join(", "))
    })
}

fn multiplicativity_check(f: &BundleSum, rules: Rules, whole: &Element, split: Option<usize>) -> Result<Check> {
    let (f1, f2) = f.split_at(split.unwrap_or(f.len() / 2));
    let (e1, e2) = (euler_product_with(&f1, rules)?, euler_product_with(&f2, rules)?);
    let classes = match e1.mul_with(rules, &e2) {
        Ok(prod) => eq_check("multiplicativity", whole, &prod),
        Err(_) => {
            let borel = borel_map(&e1, f1.ranks().n1).mul(&borel_map(&e2, f2.ranks().n1));
            let fixed = mod_fixed(&e1).mul(&mod_fixed(&e2));
            let whole_borel = borel_map(whole, f.ranks().n1);
            let whole_fixed = mod_fixed(whole);
            check("multiplicativity", borel == whole_borel && fixed == whole_fixed, || {
                format!("images ({whole_borel}, {whole_fixed}) != ({borel}, {fixed})")
            })
        }
    };
    if !classes.pass {
        return Ok(classes);
    }
    let (d, d1, d2) = (f.degrees(), f1.degrees(), f2.degrees());
    let r = f.ranks();
    let sp = f.space();
    let expected = DegreeTriple {
        delta: d1.delta * d2.delta,
        delta0: if r.n0 >= sp.p as i32 { 0 } else { d1.delta0 * d2.delta0 },
        delta1: if r.n1 >= sp.q as i32 { 0 } else { d1.delta1 * d2.delta1 },
    };
    Ok(check("multiplicativity", d == expected, || format!("degrees {d} != {expected} from {f1} and {f2}")))
}

fn odd_or_zero(x: i64) -> bool {
    x == 0 || x % 2 != 0
}

fn parity_check(f: &BundleSum) -> Check {
    let d = f.degrees();
    let (n2, n4) = (f.count(BundleType::II), f.count(BundleType::IV));
    let ok = if n2 > 0 {
        d.delta % 2 == 0 && d.delta0 % 2 == 0 && d.delta1 % 2 == 0
    } else if n4 > 0 {
        d.delta % 2 == 0 && odd_or_zero(d.delta0) && odd_or_zero(d.delta1)
    } else {
        d.delta % 2 != 0 && odd_or_zero(d.delta0) && odd_or_zero(d.delta1)
    };
    check("parity", ok, || format!("degrees {d} with {n2} summands of type II and {n4} of type IV"))
}

/// `e(F)` agrees modulo `J_e` with 0 or with `e^{2(n−n0−n1)} ĉ_ω^{n0} ĉ_χω^{n1}`.
fn je_check(x: &Element, r: Ranks, d: DegreeTriple) -> Check {
    let reference = if d.delta0 % 2 == 0 && d.delta1 % 2 == 0 {
        Element::zero(x.space(), x.grading())
    } else {
        let e = HElement::e((2 * (r.n - r.n0 - r.n1)) as u32);
        Element::monomial(x.space(), e, BasisMonomial::new(0, 0, r.n0, r.n1))
    };
    match x.checked_add(&-&reference) {
        Ok(diff) => check("mod_je", diff.terms().all(|(_, c)| in_ie(c)), || format!("{x} - ({reference}) = {diff}")),
        Err(e) => check("mod_je", false, || e.to_string()),
    }
}

/// `(ĉ^{n0}, ĉ^{n1})` when `Δ0` or `Δ1` is odd, `(0, 0)` otherwise.
fn z_fixed_expected(f: &BundleSum) -> FixedPair {
    let sp = f.space();
    let (r, d) = (f.ranks(), f.degrees());
    let k = i64::from(d.delta0 % 2 != 0 || d.delta1 % 2 != 0);
    FixedPair { b0: NoneqPoly::monomial(sp.p, k, r.n0), b1: NoneqPoly::monomial(sp.q, k, r.n1) }
}
