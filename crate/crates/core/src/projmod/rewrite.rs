//! Normal forms: rewriting an arbitrary product of generators and divided elements into the
//! preferred basis.
//!
//! With `u = 1 − κ` (so `u² = 1`), the relations used are
//!
//! * `ζ0 ζ1 = ξ`, also against divided elements;
//! * `ζ1 ĉ_χω = u ζ0 ĉ_ω + e²`, and the equivalent `ζ0² ĉ_ω = u ξ ĉ_χω − u e² ζ0`;
//! * `ζ1^t ĉ_ω^p = ξ^t ζ0^{-t} ĉ_ω^p` and `ζ0^s ĉ_χω^q = ξ^s ζ1^{-s} ĉ_χω^q`;
//! * anything divisible by `ĉ_ω^p ĉ_χω^q` vanishes.

use crate::projmod::basis::{BasisMonomial, ProjSpace};
use crate::scalar::{Scalar, ScalarMonomial};

const STEP_LIMIT: usize = 1 << 22;

/// A deliberately wrong rewrite, for testing that the verification harness notices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Drops the `e²` term of `ζ1 ĉ_χω = u ζ0 ĉ_ω + e²`.
    DropRelationE2,
}

/// Which rewrite rules to apply. Only [`Rules::standard`] is available outside tests.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rules {
    fault: Option<Fault>,
}

impl Rules {
    pub const fn standard() -> Self {
        Rules { fault: None }
    }

    #[cfg(any(test, feature = "fault-injection"))]
    pub const fn with_fault(fault: Fault) -> Self {
        Rules { fault: Some(fault) }
    }

    pub fn fault(&self) -> Option<Fault> {
        self.fault
    }
}

enum Step<M: ScalarMonomial> {
    Basis,
    Zero,
    Rewrite(Vec<(Scalar<M>, BasisMonomial)>),
}

fn step<M: ScalarMonomial>(sp: ProjSpace, rules: Rules, x: BasisMonomial) -> Step<M> {
    let (p, q) = (sp.pi(), sp.qi());
    let BasisMonomial { s, t, a, b } = x;
    let mono = BasisMonomial::new;
    let xi = |n: i32| Scalar::<M>::xi(n as u32);
    let e2 = Scalar::<M>::e(2);
    let u = M::relation_unit();

    assert!(a >= 0 && b >= 0, "negative exponent of a Chern class in {x}");
    assert!(!(s < 0 && t < 0), "{x} divides by both z0 and z1");

    if (s >= 1 && t != 0) || (t >= 1 && s != 0) {
        return Step::Rewrite(vec![(xi(1), mono(s - 1, t - 1, a, b))]);
    }

    if t >= 1 {
        if b >= 1 {
            let mut out = vec![(u, mono(1, t - 1, a + 1, b - 1))];
            if rules.fault != Some(Fault::DropRelationE2) {
                out.push((e2, mono(0, t - 1, a, b - 1)));
            }
            return Step::Rewrite(out);
        }
        if a >= p {
            return Step::Rewrite(vec![(xi(t), mono(-t, 0, a, 0))]);
        }
        return Step::Basis;
    }

    if t < 0 {
        assert!(b >= q, "{x} is not divisible by z1^{}", -t);
        if a >= p {
            return Step::Zero;
        }
        if b > q {
            return Step::Rewrite(vec![
                (&u * &xi(1), mono(0, t - 2, a + 1, b - 1)),
                (e2, mono(0, t - 1, a, b - 1)),
            ]);
        }
        return Step::Basis;
    }

    let lower_cw = |s: i32| {
        Step::Rewrite(vec![
            (&u * &xi(1), mono(s - 2, 0, a - 1, b + 1)),
            (-(&u * &e2), mono(s - 1, 0, a - 1, b)),
        ])
    };

    if s < 0 {
        assert!(a >= p, "{x} is not divisible by z0^{}", -s);
        if b >= q {
            return Step::Zero;
        }
        if a > p {
            return lower_cw(s);
        }
        return Step::Basis;
    }

    if a >= p && b >= q {
        return Step::Zero;
    }
    if (s >= 2 && a >= 1) || a > p {
        return lower_cw(s);
    }
    if b >= q {
        if s >= 1 {
            return Step::Rewrite(vec![(xi(s), mono(0, -s, a, b))]);
        }
        if b > q {
            return Step::Rewrite(vec![
                (&u * &xi(1), mono(0, -2, a + 1, b - 1)),
                (e2, mono(0, -1, a, b - 1)),
            ]);
        }
    }
    Step::Basis
}

/// Rewrites `coeff · x` into basis monomials with their coefficients (not yet collected).
pub(crate) fn normalize<M: ScalarMonomial>(
    sp: ProjSpace,
    rules: Rules,
    coeff: Scalar<M>,
    x: BasisMonomial,
) -> Vec<(BasisMonomial, Scalar<M>)> {
    let mut work = vec![(coeff, x)];
    let mut out = Vec::new();
    let mut steps = 0usize;
    while let Some((c, y)) = work.pop() {
        if c.is_zero() {
            continue;
        }
        steps += 1;
        assert!(steps < STEP_LIMIT, "rewriting {x} on {sp} did not terminate");
        match step::<M>(sp, rules, y) {
            Step::Basis => {
                debug_assert!(y.is_basis(sp), "{y} left unreduced on {sp}");
                out.push((y, c));
            }
            Step::Zero => {}
            Step::Rewrite(terms) => {
                for (k, z) in terms {
                    work.push((&c * &k, z));
                }
            }
        }
    }
    out
}
