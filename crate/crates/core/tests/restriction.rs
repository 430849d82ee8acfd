mod common;

use common::random;
use equibezout_core::euler::{euler_product, BundleSum, LineBundle};
use equibezout_core::grading::{PiBDegree, RoC2Degree};
use equibezout_core::hscalar::{monomials_at, HElement, HMonomial};
use equibezout_core::projmod::{basis, mod_fixed, mod_rho, BasisMonomial, Element, ProjSpace};
use equibezout_core::variants::z_map;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Pairs `(x, y)` with `x` arbitrary and `y` free of divided monomials, so `xy` is defined.
fn products(seed: u64, count: usize) -> Vec<(Element, Element)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let sp = random::space(&mut rng, 4);
            let (dx, dy) = (random::grading(&mut rng, sp, 5), random::grading(&mut rng, sp, 5));
            let x = random::element(&mut rng, sp, dx, true);
            let y = random::element(&mut rng, sp, dy, false);
            (x, y)
        })
        .collect()
}

#[test]
fn restriction_and_fixed_points_are_multiplicative() {
    let mut nontrivial = 0;
    for (x, y) in products(11, 500) {
        let xy = x.mul(&y).unwrap();
        let visible = |z: &Element| !mod_rho(z).is_zero() || mod_fixed(z) != mod_fixed(&Element::zero(z.space(), z.grading()));
        nontrivial += usize::from(visible(&x) && visible(&y));
        assert_eq!(mod_rho(&xy), mod_rho(&x).mul(&mod_rho(&y)), "rho of ({x})*({y})");
        assert_eq!(mod_fixed(&xy), mod_fixed(&x).mul(&mod_fixed(&y)), "fixed points of ({x})*({y})");
    }
    assert!(nontrivial > 100, "only {nontrivial} samples with both images nonzero");
}

#[test]
fn constant_coefficients_are_a_ring_map() {
    for (x, y) in products(12, 500) {
        let xy = x.mul(&y).unwrap();
        assert_eq!(z_map(&xy), z_map(&x).mul(&z_map(&y)).unwrap(), "({x})*({y})");
    }
}

/// Additive generators of `T` in one grading.
fn t_generators(g: RoC2Degree) -> Vec<HElement> {
    monomials_at(g)
        .into_iter()
        .filter_map(|m| match m {
            HMonomial::EXi(..) => None,
            HMonomial::Xi(_) => Some(HElement::monomial(2, m)),
            m => Some(HElement::monomial(1, m)),
        })
        .collect()
}

fn unknowns(sp: ProjSpace, d: PiBDegree) -> Vec<(BasisMonomial, HElement)> {
    basis(sp, d.m)
        .into_iter()
        .flat_map(|x| t_generators(random::coeff_grading(d, x)).into_iter().map(move |c| (x, c)))
        .collect()
}

/// Restriction and both fixed-point components, concatenated.
fn image_vector(x: &Element) -> Vec<i128> {
    let sp = x.space();
    let (rho, fixed) = (mod_rho(x), mod_fixed(x));
    let mut out: Vec<i128> = (0..sp.rank() as usize).map(|k| rho.coeff(k) as i128).collect();
    out.extend((0..sp.p as usize).map(|k| fixed.b0.coeff(k) as i128));
    out.extend((0..sp.q as usize).map(|k| fixed.b1.coeff(k) as i128));
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Solves `A k = y` over the rationals by fraction-free elimination. Returns `None` unless the
/// columns are independent; the solution must then be unique.
fn solve(columns: &[Vec<i128>], y: &[i128]) -> Option<Vec<(i128, i128)>> {
    let n = columns.len();
    let mut rows: Vec<Vec<i128>> =
        (0..y.len()).map(|r| columns.iter().map(|c| c[r]).chain([y[r]]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let pr = (r..rows.len()).find(|&i| rows[i][col] != 0)?;
        rows.swap(r, pr);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let b = row[col];
                for (v, &w) in row.iter_mut().zip(&pivot) {
                    *v = *v * pivot[col] - w * b;
                }
                let g = row.iter().fold(0, |g, &v| gcd(g, v));
                if g > 1 {
                    row.iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    assert!(rows[r..].iter().all(|row| row[n] == 0), "inconsistent system");
    Some(pivots.iter().enumerate().map(|(col, &r)| (rows[r][n], rows[r][col])).collect())
}

fn round_trip(x: &Element) {
    let sp = x.space();
    let unk = unknowns(sp, x.grading());
    let columns: Vec<Vec<i128>> = unk
        .iter()
        .map(|(b, c)| image_vector(&Element::from_terms(sp, x.grading(), [(*b, c.clone())]).unwrap()))
        .collect();
    let sol = solve(&columns, &image_vector(x)).unwrap_or_else(|| panic!("{x} on {sp}: not determined"));
    let mut terms = Vec::new();
    for ((num, den), (b, c)) in sol.into_iter().zip(unk) {
        assert_eq!(num % den, 0, "{x}: non-integral coefficient {num}/{den} of ({c})*{b}");
        terms.push((b, c.scale((num / den) as i64)));
    }
    let mut y = Element::zero(sp, x.grading());
    for (b, c) in terms {
        y = &y + &Element::from_terms(sp, x.grading(), [(b, c)]).unwrap();
    }
    assert_eq!(&y, x, "on {sp}");
}

#[test]
fn elements_of_t_tilde_are_determined_by_their_images() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut checked = 0;
    for _ in 0..400 {
        let sp = random::space(&mut rng, 4);
        let d = random::grading(&mut rng, sp, 5);
        let unk = unknowns(sp, d);
        let mut x = Element::zero(sp, d);
        for (b, c) in unk {
            let k = rng.gen_range(-3..=3);
            x = &x + &Element::from_terms(sp, d, [(b, c.scale(k))]).unwrap();
        }
        round_trip(&x);
        checked += usize::from(!x.is_zero());
    }
    assert!(checked > 300, "only {checked} nonzero samples");

    for _ in 0..200 {
        let (p, q) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let sp = ProjSpace::new(p, q).unwrap();
        let n = rng.gen_range(0..p + q);
        let f = BundleSum::new(
            sp,
            (0..n).map(|_| {
                let d = rng.gen_range(-4..=4);
                if rng.gen_bool(0.5) {
                    LineBundle::twisted(d)
                } else {
                    LineBundle::untwisted(d)
                }
            }),
        );
        if f.check_context().is_ok() {
            round_trip(&euler_product(&f).unwrap());
        }
    }
}
