//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use equibezout::parse::{parse_element, parse_element_in, parse_scalar};
use equibezout::verify::{basis_structure, operator_identities, sample, verify, VerifyConfig};
use equibezout::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use equibezout_core::euler::{bezout_report, euler_closed, euler_product, recover_degrees, BundleSum, DegreeTriple, LineBundle};
use equibezout_core::grading::PiBDegree;
use equibezout_core::hscalar::{HElement, HMonomial};
use equibezout_core::projmod::{basis, Element, Fault, ProjSpace, Rules};
use equibezout_core::variants::borel::{reduce, relation};
use equibezout_core::variants::{BorelElement, BorelScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn cli(args: &[&str]) -> (i32, String) {
    run(std::iter::once("equibezout").chain(args.iter().copied()))
}

fn sp(p: u32, q: u32) -> ProjSpace {
    ProjSpace::new(p, q).unwrap()
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let space = sp(5, 5);
    let f = BundleSum::parse(space, "4*xO(2)").map_err(err)?;
    let product = euler_product(&f).map_err(err)?;
    let closed = euler_closed(&f).map_err(err)?;
    let expected = parse_element(space, "16*xi^2*cw^2*cxw^2 + e^8").map_err(err)?;
    let same = parse_element(space, "8*tau(i^4)*cw^2*cxw^2 + e^8").map_err(err)?;
    ensure(product == expected && closed == expected && same == expected, || {
        format!("product {product}, closed {closed}")
    })?;
    ensure(product.p_form() == "8*tau(i^4)*P4 + e^8*P0", || product.p_form())?;
    let d = recover_degrees(&product).map_err(err)?;
    ensure(d == DegreeTriple { delta: 16, delta0: 1, delta1: 1 }, || format!("degrees {d}"))?;
    ensure(product.grading() == PiBDegree::new(0, 0, 8), || format!("grading {}", product.grading()))?;
    let (code, out) = cli(&["euler", "5", "5", "4*xO(2)"]);
    ensure(code == EXIT_OK && out.contains("e(F) = 8*tau(i^4)*P4 + e^8*P0"), || out.clone())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("16*xi^2*cw^2*cxw^2 + e^8 by both paths in {elapsed:?}"))
}

/// The four line-bundle classes as text, with `d` the half of the degree.
fn line_formula(twisted: bool, odd: bool, d: i64) -> String {
    match (twisted, odd) {
        (false, true) => format!("cw + ({d})*(g*cw + e^-2*kappa*z1*cw*cxw)"),
        (false, false) => format!("({d})*(tau(i^-2)*z0*cw + e^-2*kappa*cw*cxw)"),
        (true, true) => format!("cxw + ({d})*(g*cxw + e^-2*kappa*z0*cw*cxw)"),
        (true, false) => format!("e^2 + ({d})*g*z0*cw"),
    }
}

fn line_bundles() -> Outcome {
    let space = sp(3, 3);
    let mut n = 0;
    for d in -3..=3 {
        for (twisted, odd) in [(false, true), (false, false), (true, true), (true, false)] {
            let degree = 2 * d + i64::from(odd);
            let l = if twisted { LineBundle::twisted(degree) } else { LineBundle::untwisted(degree) };
            let closed = euler_closed(&BundleSum::new(space, [l])).map_err(err)?;
            let text = line_formula(twisted, odd, d);
            let quoted = parse_element_in(space, closed.grading(), &text).map_err(err)?;
            ensure(closed == quoted, || format!("{l}: {closed} != {text}"))?;
            n += 1;
        }
    }
    let o2 = euler_closed(&BundleSum::parse(space, "O(2)").map_err(err)?).map_err(err)?;
    ensure(o2.to_string() == "e^-2*kappa*cw*cxw + tau(i^-2)*z0*cw", || o2.to_string())?;
    Ok(format!("{n} single bundles on X(3,3)"))
}

fn differential() -> Outcome {
    let config = VerifyConfig { seed: 1, count: 1000, pmax: 6, qmax: 6, dmax: 5 };
    let start = Instant::now();
    let out = verify(&config, Rules::standard());
    let elapsed = start.elapsed();
    ensure(out.instances.ok(), || format!("{:?} {:?}", out.instances.failures, out.counterexample))?;
    ensure(out.instances.total == 1000, || format!("{} instances", out.instances.total))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    let faulty = verify(&VerifyConfig { count: 200, ..config }, Rules::with_fault(Fault::DropRelationE2));
    let cx = faulty.counterexample.as_ref().ok_or("an injected fault went unnoticed")?;
    Ok(format!(
        "1000/1000 in {elapsed:?}; injected fault caught, shrunk to {} on X({},{})",
        cx.bundles, cx.p, cx.q
    ))
}

fn identities() -> Outcome {
    let r = operator_identities(5, 5, 8);
    ensure(r.ok(), || r.failures.join("; "))?;
    Ok(format!("{}/{} identities", r.passed, r.total))
}

fn diagram(m: i32) -> BTreeSet<(i32, i32)> {
    let dots: &[(i32, i32)] = match m {
        -6 => &[(-6, 6), (-5, 6), (-4, 6), (-3, 6), (-2, 6), (0, 5), (1, 5), (2, 5), (3, 5)],
        0 => &[(0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (1, 2), (2, 3), (3, 4), (4, 4)],
        2 => &[(0, 0), (1, 0), (2, 1), (3, 2), (2, 0), (3, 1), (4, 2), (5, 2), (6, 2)],
        _ => &[(6, -2), (7, -2), (8, -2), (9, -2), (10, -2), (0, 0), (1, 0), (2, 0), (3, 0)],
    };
    dots.iter().copied().collect()
}

fn basis_shape() -> Outcome {
    let r = basis_structure(10, 10);
    ensure(r.ok(), || r.failures.join("; "))?;
    for m in [-6, 0, 2, 6] {
        let dots: BTreeSet<_> = basis(sp(4, 5), m).iter().map(|x| (x.position().a, x.position().b)).collect();
        ensure(dots == diagram(m), || format!("m = {m}: {dots:?}"))?;
    }
    Ok(format!("{} (space, m) pairs; four X(4,5) diagrams", r.total))
}

fn all_monomials() -> Vec<HElement> {
    let mut out = vec![HMonomial::One, HMonomial::G];
    for k in 1..=6 {
        out.extend([HMonomial::E(k), HMonomial::EInvKappa(k), HMonomial::Xi(k), HMonomial::TauInv(k)]);
        out.extend((1..=6).map(|n| HMonomial::EXi(k, n)));
    }
    out.into_iter().map(|m| HElement::monomial(1, m)).collect()
}

fn arithmetic() -> Outcome {
    let ms = all_monomials();
    let mut triples = 0;
    for x in &ms {
        for y in &ms {
            ensure(x * y == y * x, || format!("{x} * {y}"))?;
            for z in &ms {
                ensure(&(x * y) * z == x * &(y * z), || format!("({x} * {y}) * {z}"))?;
                if y.grading() == z.grading() {
                    ensure(x * &(y + z) == &(x * y) + &(x * z), || format!("{x} * ({y} + {z})"))?;
                }
                triples += 1;
            }
        }
    }
    for (lhs, rhs) in [
        ("g^2", "2*g"),
        ("g*e", "0"),
        ("g*xi", "2*xi"),
        ("2*e*xi", "0"),
        ("kappa^2", "2*kappa"),
        ("(1 - kappa)^2", "1"),
        ("e*e^-1*kappa", "kappa"),
        ("tau(i^-2)^2", "2*tau(i^-4)"),
    ] {
        let (l, r) = (parse_scalar(lhs).map_err(err)?, parse_scalar(rhs).map_err(err)?);
        ensure(l == r || (l.is_zero() && r.is_zero()), || format!("{lhs} = {l}, {rhs} = {r}"))?;
    }
    Ok(format!("{triples} monomial triples and 8 identities"))
}

fn functoriality() -> Outcome {
    let config = VerifyConfig { seed: 1, count: 1000, pmax: 6, qmax: 6, dmax: 5 };
    for f in sample(&config) {
        let r = bezout_report(&f, None).map_err(err)?;
        for c in r.checks.iter().filter(|c| c.name == "zconst_closed" || c.name == "borel_closed") {
            ensure(c.pass, || format!("{} on {}: {} {}", f, f.space(), c.name, c.detail))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let space = sp(rng.gen_range(1..=5), rng.gen_range(1..=5));
        let poly: Vec<BorelScalar> = (0..space.rank())
            .map(|_| BorelScalar::monomial(rng.gen_range(-5..=5), rng.gen_range(0..=3), rng.gen_range(-2..=2)))
            .collect();
        let rel = relation(space);
        let mut product = vec![BorelScalar::zero(); poly.len() + rel.len()];
        for (i, a) in poly.iter().enumerate() {
            for (j, b) in rel.iter().enumerate() {
                product[i + j] = product[i + j].add(&a.mul(b));
            }
        }
        ensure(reduce(space, product).iter().all(BorelScalar::is_zero), || format!("{poly:?} on {space}"))?;
        let x = BorelElement::from_poly(space, poly);
        ensure(BorelElement::from_poly(space, reduce(space, x.coeffs().to_vec())) == x, || format!("{x} not reduced"))?;
    }
    Ok("1000 instances in both theories; 200 relation reductions".into())
}

fn information_loss() -> Outcome {
    let (code, out) = cli(&["compare", "2", "2", "O(3)+xO(1)", "O(1)+xO(3)"]);
    ensure(code == EXIT_OK, || out.clone())?;
    for line in ["burnside: differ", "zconst: equal", "borel: equal"] {
        ensure(out.lines().any(|l| l == line), || format!("no {line:?} in\n{out}"))?;
    }
    let config = VerifyConfig { seed: 1, count: 1000, pmax: 6, qmax: 6, dmax: 5 };
    for f in sample(&config) {
        let r = bezout_report(&f, None).map_err(err)?;
        let c = r.checks.iter().find(|c| c.name == "zconst_fixed").ok_or("no fixed-point check")?;
        ensure(c.pass, || format!("{} on {}: {}", f, f.space(), c.detail))?;
    }
    Ok("Burnside distinct, Z and Borel equal; parity rule on 1000 instances".into())
}

fn parser_and_exit_codes() -> Outcome {
    let mut n = 0;
    for p in 0..=4 {
        for q in 0..=4 {
            let Ok(space) = ProjSpace::new(p, q) else { continue };
            for m in -6..=6 {
                for x in basis(space, m) {
                    let e = Element::basis_element(space, x).map_err(err)?;
                    let back = parse_element_in(space, e.grading(), &e.to_string()).map_err(err)?;
                    ensure(back == e, || format!("{e} on {space}"))?;
                    n += 1;
                }
            }
        }
    }
    for x in all_monomials() {
        ensure(parse_scalar(&x.to_string()).map_err(err)? == x, || x.to_string())?;
        n += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let space = sp(rng.gen_range(1..=4), rng.gen_range(1..=4));
        let k = rng.gen_range(0..space.p + space.q);
        let f = BundleSum::new(space, (0..k).map(|_| LineBundle::untwisted(rng.gen_range(-5..=5))));
        let x = if f.check_context().is_ok() { euler_product(&f).map_err(err)? } else { Element::one(space) };
        let y = x.scale(rng.gen_range(-3..=3));
        let back = parse_element_in(space, y.grading(), &y.to_string()).map_err(err)?;
        ensure(back == y, || format!("{y} on {space}"))?;
        n += 1;
    }
    let expect = [
        (&["euler", "5", "5", "4*xO(2)"][..], EXIT_OK),
        (&["euler", "1", "1", "O(1)+O(1)"], EXIT_FAILURE),
        (&["basis", "0", "0", "0"], EXIT_USAGE),
        (&["euler", "2", "2", "O(3"], EXIT_USAGE),
        (&["nonsense"], EXIT_USAGE),
        (&["verify", "--count", "0"], EXIT_OK),
        (&["chart", "0..0"], EXIT_OK),
    ];
    for (args, code) in expect {
        let (got, out) = cli(args);
        ensure(got == code, || format!("{args:?} exited {got}, expected {code}: {out}"))?;
    }
    Ok(format!("{n} round trips; {} exit codes", expect.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("worked example 4*xO(2) on X(5,5)", worked_example),
        ("single line bundles", line_bundles),
        ("differential suite", differential),
        ("operator identities", identities),
        ("basis structure", basis_shape),
        ("point ring arithmetic", arithmetic),
        ("coefficient-change functoriality", functoriality),
        ("information loss", information_loss),
        ("parser round trip and exit codes", parser_and_exit_codes),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
}
