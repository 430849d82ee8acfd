//! Seeded randomized verification: Euler classes of random bundle sums, plus exhaustive
//! identity and basis checks on small spaces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use equibezout_core::euler::{bezout_report_with, BundleSum, LineBundle};
use equibezout_core::hscalar::{unit_u, HElement};
use equibezout_core::projmod::{basis, mod_rho, BasisMonomial, Element, Generator, NoneqPoly, ProjSpace, Rules};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub count: usize,
    pub pmax: u32,
    pub qmax: u32,
    pub dmax: i64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 0, count: 1000, pmax: 6, qmax: 6, dmax: 5 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub p: u32,
    pub q: u32,
    pub bundles: String,
    pub failed: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub total: usize,
    pub passed: usize,
    /// First few failures, for diagnosis.
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &'static str, results: impl IntoIterator<Item = Result<(), String>>) -> Self {
        let mut out = SuiteReport { name, total: 0, passed: 0, failures: Vec::new() };
        for r in results {
            out.total += 1;
            match r {
                Ok(()) => out.passed += 1,
                Err(why) if out.failures.len() < 5 => out.failures.push(why),
                Err(_) => {}
            }
        }
        out
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyOutcome {
    pub config: VerifyConfig,
    pub instances: SuiteReport,
    /// The first failing instance after shrinking.
    pub counterexample: Option<Counterexample>,
    pub suites: Vec<SuiteReport>,
}

impl VerifyOutcome {
    pub fn ok(&self) -> bool {
        self.instances.ok() && self.suites.iter().all(SuiteReport::ok)
    }
}

/// Draws `count` context-valid bundle sums with `1 ≤ p ≤ pmax`, `1 ≤ q ≤ qmax`, `n < p+q`, `|d| ≤ dmax`.
pub fn sample(config: &VerifyConfig) -> Vec<BundleSum> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::with_capacity(config.count);
    while out.len() < config.count {
        let p = rng.gen_range(1..=config.pmax.max(1));
        let q = rng.gen_range(1..=config.qmax.max(1));
        let sp = ProjSpace::new(p, q).expect("p+q > 0");
        let n = rng.gen_range(0..p + q);
        let bundles = (0..n).map(|_| {
            let d = rng.gen_range(-config.dmax..=config.dmax);
            if rng.gen_bool(0.5) {
                LineBundle::twisted(d)
            } else {
                LineBundle::untwisted(d)
            }
        });
        let f = BundleSum::new(sp, bundles);
        if f.context_check().is_empty() {
            out.push(f);
        }
    }
    out
}

/// Names of the failing checks, empty when everything passes.
pub fn failures(f: &BundleSum, rules: Rules) -> Vec<String> {
    match bezout_report_with(f, rules, None) {
        Ok(r) => r.failures().map(|c| c.name.to_string()).collect(),
        Err(e) => vec![format!("error: {e}")],
    }
}

/// Greedy shrinking in a fixed order: drop summands, then replace each `d` by the smallest `|d|` that
/// still fails, then shrink p and q.
pub fn shrink(f: &BundleSum, rules: Rules) -> BundleSum {
    let fails = |g: &BundleSum| g.context_check().is_empty() && !failures(g, rules).is_empty();
    let mut cur = f.clone();
    'outer: loop {
        let sp = cur.space();
        let bundles = cur.bundles().to_vec();
        for i in 0..bundles.len() {
            let mut fewer = bundles.clone();
            fewer.remove(i);
            let g = BundleSum::new(sp, fewer);
            if fails(&g) {
                cur = g;
                continue 'outer;
            }
        }
        for i in 0..bundles.len() {
            let d = bundles[i].d;
            for k in 0..d.abs() {
                let mut smaller = bundles.clone();
                smaller[i].d = k * d.signum();
                let g = BundleSum::new(sp, smaller);
                if fails(&g) {
                    cur = g;
                    continue 'outer;
                }
            }
        }
        for (p, q) in [(sp.p.saturating_sub(1), sp.q), (sp.p, sp.q.saturating_sub(1))] {
            if p == 0 || q == 0 {
                continue;
            }
            let g = BundleSum::new(ProjSpace::new(p, q).expect("p+q > 0"), bundles.clone());
            if fails(&g) {
                cur = g;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// Runs everything. `rules` applies to the product path of the random instances only.
pub fn verify(config: &VerifyConfig, rules: Rules) -> VerifyOutcome {
    let instances = sample(config);
    let results: Vec<Vec<String>> = instances.par_iter().map(|f| failures(f, rules)).collect();
    let first_bad = results.iter().position(|r| !r.is_empty());
    let counterexample = first_bad.map(|i| {
        let small = shrink(&instances[i], rules);
        Counterexample {
            p: small.space().p,
            q: small.space().q,
            bundles: small.to_string(),
            failed: failures(&small, rules),
        }
    });
    let report = SuiteReport::new(
        "random instances",
        instances.iter().zip(&results).map(|(f, r)| {
            if r.is_empty() {
                Ok(())
            } else {
                Err(format!("{f} on {}: {}", f.space(), r.join(", ")))
            }
        }),
    );
    VerifyOutcome {
        config: *config,
        instances: report,
        counterexample,
        suites: vec![operator_identities(5, 5, 8), basis_structure(10, 10)],
    }
}

fn eq(what: &str, x: &Element, y: &Element, left: &Element) -> Result<(), String> {
    if x == y {
        Ok(())
    } else {
        Err(format!("{what} on {} at {left}: {x} != {y}", left.space()))
    }
}

fn identities_at(sp: ProjSpace, m: BasisMonomial) -> Vec<Result<(), String>> {
    use Generator::*;
    let x = Element::basis_element(sp, m).expect("basis element");
    let xi = HElement::xi(1);
    let e2 = HElement::e(2);
    let mut out = vec![
        eq("z0*z1 = xi", &x.gen_mul(Z1).gen_mul(Z0), &x.scalar_mul(&xi), &x),
        eq(
            "z1*cxw = (1-kappa)*z0*cw + e^2",
            &x.gen_mul(Cxw).gen_mul(Z1),
            &(&x.gen_mul(Cw).gen_mul(Z0).scalar_mul(&unit_u()) + &x.scalar_mul(&e2)),
            &x,
        ),
    ];
    let mut top = x.clone();
    for _ in 0..sp.p {
        top = top.gen_mul(Cw);
    }
    for _ in 0..sp.q {
        top = top.gen_mul(Cxw);
    }
    out.push(eq("cw^p*cxw^q = 0", &top, &Element::zero(sp, top.grading()), &x));
    for (i, g) in Generator::ALL.iter().enumerate() {
        for h in &Generator::ALL[i + 1..] {
            out.push(eq("commutation", &x.gen_mul(*g).gen_mul(*h), &x.gen_mul(*h).gen_mul(*g), &x));
        }
    }
    let one = HElement::one();
    if m.s < 0 {
        let up = Element::monomial(sp, one.clone(), BasisMonomial::new(m.s + 1, 0, m.a, m.b));
        out.push(eq("z0 * z0^-k", &x.gen_mul(Z0), &up, &x));
        let down = Element::monomial(sp, xi.clone(), BasisMonomial::new(m.s - 1, 0, m.a, m.b));
        out.push(eq("z1 * z0^-k", &x.gen_mul(Z1), &down, &x));
    }
    if m.s < 0 || m.t < 0 {
        let (k, g) = if m.s < 0 { (-m.s, Z0) } else { (-m.t, Z1) };
        let mut y = x.clone();
        for _ in 0..k {
            y = y.gen_mul(g);
        }
        let undivided = Element::basis_element(sp, BasisMonomial::new(0, 0, m.a, m.b)).expect("basis element");
        out.push(eq("z^k * z^-k", &y, &undivided, &x));
    }
    if m.t < 0 {
        let up = Element::monomial(sp, one, BasisMonomial::new(0, m.t + 1, m.a, m.b));
        out.push(eq("z1 * z1^-k", &x.gen_mul(Z1), &up, &x));
        let down = Element::monomial(sp, xi, BasisMonomial::new(0, m.t - 1, m.a, m.b));
        out.push(eq("z0 * z1^-k", &x.gen_mul(Z0), &down, &x));
    }
    out
}

/// Generator identities on every basis element of `X(p,q)` with `p ≤ pmax`, `q ≤ qmax`, `|m| ≤ mmax`.
pub fn operator_identities(pmax: u32, qmax: u32, mmax: i32) -> SuiteReport {
    let cases: Vec<(ProjSpace, BasisMonomial)> = (0..=pmax)
        .flat_map(|p| (0..=qmax).map(move |q| (p, q)))
        .filter_map(|(p, q)| ProjSpace::new(p, q).ok())
        .flat_map(|sp| (-mmax..=mmax).flat_map(move |m| basis(sp, m).into_iter().map(move |x| (sp, x))))
        .collect();
    let results: Vec<_> = cases.par_iter().flat_map_iter(|&(sp, x)| identities_at(sp, x)).collect();
    SuiteReport::new("operator identities", results)
}

fn structure_at(sp: ProjSpace, m: i32) -> Result<(), String> {
    let b = basis(sp, m);
    let n = sp.rank() as usize;
    let fail = |why: String| Err(format!("{sp} m={m}: {why}"));
    if b.len() != n {
        return fail(format!("{} basis elements, expected {n}", b.len()));
    }
    let mut per_column = std::collections::BTreeMap::new();
    for (i, x) in b.iter().enumerate() {
        let pos = x.position();
        if pos.m != m || pos.a + pos.b != i as i32 || x.index() != i as i32 {
            return fail(format!("P{i} = {x} sits at {pos:?}"));
        }
        *per_column.entry(pos.a).or_insert(0) += 1;
        let rho = mod_rho(&Element::basis_element(sp, *x).map_err(|e| e.to_string())?);
        if rho != NoneqPoly::monomial(sp.rank(), 1, i as i32) {
            return fail(format!("rho(P{i}) = {rho}"));
        }
    }
    if let Some((a, k)) = per_column.iter().find(|(_, k)| **k > 2) {
        return fail(format!("{k} basis elements in column A = {a}"));
    }
    Ok(())
}

/// Shape of the basis for all `p+q ≤ nmax` and `|m| ≤ mmax`.
pub fn basis_structure(nmax: u32, mmax: i32) -> SuiteReport {
    let results = (0..=nmax)
        .flat_map(|p| (0..=nmax - p).map(move |q| (p, q)))
        .filter_map(|(p, q)| ProjSpace::new(p, q).ok())
        .flat_map(|sp| (-mmax..=mmax).map(move |m| structure_at(sp, m)));
    SuiteReport::new("basis structure", results)
}
