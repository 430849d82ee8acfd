//! Test oracle: the Borel localization together with the fixed-point map.
//!
//! Both are computed straight from the generator images, without the rewrite engine. On the
//! cohomology of `X(p,q)` the pair is injective, so two elements with equal images are equal.

#![allow(dead_code)]

use std::collections::BTreeMap;

use equibezout_core::hscalar::{HElement, HMonomial};
use equibezout_core::projmod::{BasisMonomial, Element, ProjSpace};

/// `Σ c · e^m ξ^n` with `2e = 0`.
pub type Coef = BTreeMap<(u32, i32), i64>;

/// Polynomial in `ĉ` over [`Coef`], reduced modulo `ĉ^p (ĉ + e²)^q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorelImage(pub Vec<Coef>);

fn coef_add(x: &mut Coef, key: (u32, i32), c: i64) {
    let entry = x.entry(key).or_insert(0);
    *entry += c;
    if key.0 > 0 {
        *entry = entry.rem_euclid(2);
    }
    if *entry == 0 {
        x.remove(&key);
    }
}

fn coef_mul(x: &Coef, y: &Coef) -> Coef {
    let mut out = Coef::new();
    for (&(m1, n1), &c1) in x {
        for (&(m2, n2), &c2) in y {
            coef_add(&mut out, (m1 + m2, n1 + n2), c1 * c2);
        }
    }
    out
}

fn poly_mul(x: &[Coef], y: &[Coef]) -> Vec<Coef> {
    let mut out = vec![Coef::new(); (x.len() + y.len()).saturating_sub(1)];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            for (k, c) in coef_mul(a, b) {
                coef_add(&mut out[i + j], k, c);
            }
        }
    }
    out
}

/// `ĉ^p (ĉ + e²)^q` expanded by repeated multiplication.
fn relation(p: u32, q: u32) -> Vec<Coef> {
    let mut f = vec![Coef::new(); p as usize + 1];
    f[p as usize].insert((0, 0), 1);
    let mut linear = vec![Coef::new(), Coef::new()];
    linear[0].insert((2, 0), 1);
    linear[1].insert((0, 0), 1);
    for _ in 0..q {
        f = poly_mul(&f, &linear);
    }
    f
}

/// Long division by the monic relation.
fn reduce(mut x: Vec<Coef>, sp: ProjSpace) -> BorelImage {
    let f = relation(sp.p, sp.q);
    let n = f.len() - 1;
    while x.len() > n {
        let top = x.pop().unwrap();
        let shift = x.len() - n;
        for (j, fj) in f.iter().enumerate().take(n) {
            for (k, c) in coef_mul(&top, fj) {
                coef_add(&mut x[shift + j], k, -c);
            }
        }
    }
    x.resize(n, Coef::new());
    BorelImage(x)
}

pub fn scalar_borel(c: &HElement) -> Coef {
    let mut out = Coef::new();
    for (m, k) in c.terms() {
        let (key, v) = match m {
            HMonomial::One => ((0, 0), 1),
            HMonomial::G => ((0, 0), 2),
            HMonomial::EInvKappa(_) => continue,
            HMonomial::E(a) => ((a, 0), 1),
            HMonomial::Xi(n) => ((0, n as i32), 1),
            HMonomial::EXi(a, n) => ((a, n as i32), 1),
            HMonomial::TauInv(n) => ((0, -(n as i32)), 2),
        };
        coef_add(&mut out, key, k * v);
    }
    out
}

pub fn scalar_fixed(c: &HElement) -> i64 {
    c.terms()
        .map(|(m, k)| {
            k * match m {
                HMonomial::One | HMonomial::E(_) => 1,
                HMonomial::EInvKappa(_) => 2,
                _ => 0,
            }
        })
        .sum()
}

/// `ζ0 ↦ 1, ζ1 ↦ ξ, ĉ_ω ↦ ĉ, ĉ_χω ↦ ξ^{-1}(ĉ + e²)`, unreduced.
fn monomial_borel(x: BasisMonomial) -> Vec<Coef> {
    let mut out = vec![Coef::new(); x.a as usize + 1];
    out[x.a as usize].insert((0, x.t - x.b), 1);
    let mut linear = vec![Coef::new(), Coef::new()];
    linear[0].insert((2, 0), 1);
    linear[1].insert((0, 0), 1);
    for _ in 0..x.b {
        out = poly_mul(&out, &linear);
    }
    out
}

/// Image of `Σ c_i x_i` for arbitrary (not necessarily basis) monomials `x_i`.
pub fn borel_of_terms(sp: ProjSpace, terms: &[(BasisMonomial, HElement)]) -> BorelImage {
    let mut acc: Vec<Coef> = Vec::new();
    for (x, c) in terms {
        let cb = scalar_borel(c);
        let poly = monomial_borel(*x);
        if acc.len() < poly.len() {
            acc.resize(poly.len(), Coef::new());
        }
        for (i, pc) in poly.iter().enumerate() {
            for (k, v) in coef_mul(&cb, pc) {
                coef_add(&mut acc[i], k, v);
            }
        }
    }
    reduce(acc, sp)
}

/// Fixed-point images `(Σ c ĉ^k mod ĉ^p, Σ c ĉ^k mod ĉ^q)` as coefficient vectors.
pub fn fixed_of_terms(sp: ProjSpace, terms: &[(BasisMonomial, HElement)]) -> (Vec<i64>, Vec<i64>) {
    let mut b0 = vec![0; sp.p as usize];
    let mut b1 = vec![0; sp.q as usize];
    for (x, c) in terms {
        let v = scalar_fixed(c);
        if x.s == 0 && (x.a as usize) < b0.len() {
            b0[x.a as usize] += v;
        }
        if x.t == 0 && (x.b as usize) < b1.len() {
            b1[x.b as usize] += v;
        }
    }
    (b0, b1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Image {
    pub borel: BorelImage,
    pub fixed: (Vec<i64>, Vec<i64>),
}

pub fn image_of_terms(sp: ProjSpace, terms: &[(BasisMonomial, HElement)]) -> Image {
    Image { borel: borel_of_terms(sp, terms), fixed: fixed_of_terms(sp, terms) }
}

pub fn image(x: &Element) -> Image {
    let terms: Vec<_> = x.terms().map(|(m, c)| (m, c.clone())).collect();
    image_of_terms(x.space(), &terms)
}

pub fn space(p: u32, q: u32) -> ProjSpace {
    ProjSpace::new(p, q).unwrap()
}

pub mod random {
    use equibezout_core::grading::{PiBDegree, RoC2Degree};
    use equibezout_core::hscalar::{monomials_at, HElement};
    use equibezout_core::projmod::{basis, Element, ProjSpace};
    use rand::Rng;

    /// A random combination of the generators of the group in grading `g`.
    pub fn scalar<R: Rng>(rng: &mut R, g: RoC2Degree) -> HElement {
        let terms: Vec<_> = monomials_at(g)
            .into_iter()
            .map(|m| (rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }, m))
            .collect();
        HElement::from_terms(g, terms)
    }

    /// The grading of `c · x` for a random basis element `x` and a random nonzero scalar monomial `c`,
    /// so that the group is rarely trivial.
    pub fn grading<R: Rng>(rng: &mut R, sp: ProjSpace, mmax: i32) -> PiBDegree {
        let b = basis(sp, rng.gen_range(-mmax..=mmax));
        let x = b[rng.gen_range(0..b.len())].grading();
        let (k, n) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
        let (a, s) = match rng.gen_range(0..6) {
            0 => (0, 0),
            1 => (0, k),
            2 => (0, -k),
            3 => (-2 * n, 2 * n),
            4 => (-2 * n, 2 * n + k),
            _ => (2 * n, -2 * n),
        };
        PiBDegree::new(x.m, x.a + a, x.b + s)
    }

    pub fn space<R: Rng>(rng: &mut R, max: u32) -> ProjSpace {
        loop {
            if let Ok(sp) = ProjSpace::new(rng.gen_range(0..=max), rng.gen_range(0..=max)) {
                return sp;
            }
        }
    }

    /// Coefficient grading of the basis element `x` inside an element of grading `d`.
    pub fn coeff_grading(d: PiBDegree, x: equibezout_core::projmod::BasisMonomial) -> RoC2Degree {
        let g = x.grading();
        RoC2Degree::new(d.a - g.a, d.b - g.b)
    }

    /// A random element of grading `d`, most basis elements present.
    pub fn element<R: Rng>(rng: &mut R, sp: ProjSpace, d: PiBDegree, divided: bool) -> Element {
        let mut terms = Vec::new();
        for x in basis(sp, d.m) {
            if (divided || !x.is_divided()) && rng.gen_bool(0.7) {
                terms.push((x, scalar(rng, coeff_grading(d, x))));
            }
        }
        Element::from_terms(sp, d, terms).expect("basis terms of matching grading")
    }
}
