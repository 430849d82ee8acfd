//! Line bundles `O(d)`, `χO(d)`, their sums, ranks and `C2`-degrees.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::projmod::ProjSpace;
use crate::{Error, Result};

/// `O(d)`, or `χO(d)` when `twisted`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LineBundle {
    pub twisted: bool,
    pub d: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BundleType {
    /// `O(2d+1)`
    I,
    /// `O(2d)`
    II,
    /// `χO(2d+1)`
    III,
    /// `χO(2d)`
    IV,
}

impl LineBundle {
    pub const fn untwisted(d: i64) -> Self {
        LineBundle { twisted: false, d }
    }

    pub const fn twisted(d: i64) -> Self {
        LineBundle { twisted: true, d }
    }

    pub fn kind(self) -> BundleType {
        match (self.twisted, self.d.rem_euclid(2) == 1) {
            (false, true) => BundleType::I,
            (false, false) => BundleType::II,
            (true, true) => BundleType::III,
            (true, false) => BundleType::IV,
        }
    }

    /// The `d` in `O(2d+1)`, `O(2d)`, `χO(2d+1)` or `χO(2d)`.
    pub fn half(self) -> i64 {
        self.d.div_euclid(2)
    }
}

pub fn classify_line(l: LineBundle) -> BundleType {
    l.kind()
}

impl fmt::Display for LineBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = if self.twisted { "xO" } else { "O" };
        write!(f, "{prefix}({})", self.d)
    }
}

impl FromStr for LineBundle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (twisted, rest) = if let Some(r) = s.strip_prefix("xO") {
            (true, r)
        } else if let Some(r) = s.strip_prefix('O') {
            (false, r)
        } else {
            return Err(Error::Parse(format!("expected O(d) or xO(d), found {s:?}")));
        };
        let inner = rest
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected a parenthesized degree in {s:?}")))?;
        let d = inner
            .trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad degree {inner:?} in {s:?}")))?;
        Ok(LineBundle { twisted, d })
    }
}

/// Complex ranks `(n, n0, n1)` of a sum of line bundles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Ranks {
    pub n: i32,
    pub n0: i32,
    pub n1: i32,
}

/// `(Δ, Δ0, Δ1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeTriple {
    pub delta: i64,
    pub delta0: i64,
    pub delta1: i64,
}

impl fmt::Display for DegreeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.delta, self.delta0, self.delta1)
    }
}

/// A sum of line bundles over a fixed `X(p,q)`, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BundleSum {
    sp: ProjSpace,
    bundles: Vec<LineBundle>,
}

impl BundleSum {
    pub fn new(sp: ProjSpace, bundles: impl IntoIterator<Item = LineBundle>) -> Self {
        let mut bundles: Vec<_> = bundles.into_iter().collect();
        bundles.sort();
        BundleSum { sp, bundles }
    }

    /// Parses `term ("+" term)*` with `term := [count "*"] ("O(" d ")" | "xO(" d ")")`, or `0`.
    pub fn parse(sp: ProjSpace, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "0" {
            return Ok(Self::new(sp, []));
        }
        let mut bundles = Vec::new();
        for term in split_terms(text)? {
            let (count, atom) = match term.split_once('*') {
                Some((c, atom)) => {
                    let c = c.trim();
                    let count = c
                        .parse::<u32>()
                        .ok()
                        .filter(|&k| k > 0 && !c.starts_with('+'))
                        .ok_or_else(|| Error::Parse(format!("bad count {c:?}: must be a positive integer")))?;
                    (count, atom)
                }
                None => (1, term),
            };
            let l: LineBundle = atom.parse()?;
            bundles.extend(std::iter::repeat_n(l, count as usize));
        }
        Ok(Self::new(sp, bundles))
    }

    pub fn space(&self) -> ProjSpace {
        self.sp
    }

    pub fn bundles(&self) -> &[LineBundle] {
        &self.bundles
    }

    pub fn len(&self) -> usize {
        self.bundles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bundles.is_empty()
    }

    pub fn count(&self, t: BundleType) -> i32 {
        self.bundles.iter().filter(|l| l.kind() == t).count() as i32
    }

    pub fn ranks(&self) -> Ranks {
        let (i, ii, iii) = (self.count(BundleType::I), self.count(BundleType::II), self.count(BundleType::III));
        Ranks { n: self.bundles.len() as i32, n0: i + ii, n1: ii + iii }
    }

    fn product(&self, types: &[BundleType]) -> i64 {
        self.bundles.iter().filter(|l| types.contains(&l.kind())).map(|l| l.d).product()
    }

    pub fn degrees(&self) -> DegreeTriple {
        let r = self.ranks();
        let delta = self.bundles.iter().map(|l| l.d).product();
        let delta0 = if r.n0 >= self.sp.p as i32 { 0 } else { self.product(&[BundleType::I, BundleType::II]) };
        let delta1 = if r.n1 >= self.sp.q as i32 { 0 } else { self.product(&[BundleType::II, BundleType::III]) };
        DegreeTriple { delta, delta0, delta1 }
    }

    /// Violations of `n < p+q`, `n−q ≤ n0 ≤ n` and `n−p ≤ n1 ≤ n`; empty when the sum is valid.
    pub fn context_check(&self) -> Vec<String> {
        let Ranks { n, n0, n1 } = self.ranks();
        let (p, q) = (self.sp.p as i32, self.sp.q as i32);
        let mut out = Vec::new();
        if n >= p + q {
            out.push(format!("n = {n} is not less than p+q = {}", p + q));
        }
        if n - q > n0 || n0 > n {
            out.push(format!("n0 = {n0} is outside [n-q, n] = [{}, {n}]", n - q));
        }
        if n - p > n1 || n1 > n {
            out.push(format!("n1 = {n1} is outside [n-p, n] = [{}, {n}]", n - p));
        }
        out
    }

    pub fn check_context(&self) -> Result<()> {
        let v = self.context_check();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::Context(v.join("; ")))
        }
    }

    /// Sum of two bundle sums over the same space.
    pub fn join(&self, other: &BundleSum) -> BundleSum {
        assert_eq!(self.sp, other.sp);
        Self::new(self.sp, self.bundles.iter().chain(other.bundles.iter()).copied())
    }

    /// Splits into the first `k` summands and the rest.
    pub fn split_at(&self, k: usize) -> (BundleSum, BundleSum) {
        let (x, y) = self.bundles.split_at(k.min(self.bundles.len()));
        (Self::new(self.sp, x.iter().copied()), Self::new(self.sp, y.iter().copied()))
    }
}

/// Splits on top-level `+` signs, leaving the signs inside `O(+3)` alone.
fn split_terms(text: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in {text:?}")));
        }
    }
    out.push(&text[start..]);
    if out.iter().any(|t| t.trim().is_empty()) {
        return Err(Error::Parse(format!("empty summand in {text:?}")));
    }
    Ok(out)
}

impl fmt::Display for BundleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bundles.is_empty() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.bundles.len() {
            let l = self.bundles[i];
            let k = self.bundles[i..].iter().take_while(|&&x| x == l).count();
            parts.push(if k == 1 { l.to_string() } else { format!("{k}*{l}") });
            i += k;
        }
        f.write_str(&parts.join("+"))
    }
}

pub fn ranks(f: &BundleSum) -> Ranks {
    f.ranks()
}

pub fn degrees(f: &BundleSum) -> DegreeTriple {
    f.degrees()
}

pub fn context_check(f: &BundleSum) -> Vec<String> {
    f.context_check()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sp(p: u32, q: u32) -> ProjSpace {
        ProjSpace::new(p, q).unwrap()
    }

    #[test]
    fn classification() {
        assert_eq!(LineBundle::untwisted(3).kind(), BundleType::I);
        assert_eq!(LineBundle::twisted(2).kind(), BundleType::IV);
        assert_eq!(LineBundle::untwisted(0).kind(), BundleType::II);
        assert_eq!(LineBundle::twisted(-3).kind(), BundleType::III);
        assert_eq!(LineBundle::untwisted(-3).half(), -2);
    }

    #[test]
    fn ranks_and_degrees() {
        let f = BundleSum::parse(sp(5, 5), "4*xO(2)").unwrap();
        assert_eq!(f.ranks(), Ranks { n: 4, n0: 0, n1: 0 });
        assert_eq!(f.degrees(), DegreeTriple { delta: 16, delta0: 1, delta1: 1 });
        let f = BundleSum::parse(sp(2, 2), "O(2)").unwrap();
        assert_eq!(f.ranks(), Ranks { n: 1, n0: 1, n1: 1 });
        assert_eq!(f.degrees(), DegreeTriple { delta: 2, delta0: 2, delta1: 2 });
        let f = BundleSum::parse(sp(2, 2), "O(3)+xO(1)").unwrap();
        assert_eq!(f.ranks(), Ranks { n: 2, n0: 1, n1: 1 });
        assert_eq!(f.degrees(), DegreeTriple { delta: 3, delta0: 3, delta1: 1 });
        let empty = BundleSum::parse(sp(1, 1), "0").unwrap();
        assert_eq!(empty.degrees(), DegreeTriple { delta: 1, delta0: 1, delta1: 1 });
    }

    #[test]
    fn context() {
        assert!(BundleSum::parse(sp(5, 5), "4*xO(2)").unwrap().context_check().is_empty());
        assert!(!BundleSum::parse(sp(1, 1), "O(1)+O(1)").unwrap().context_check().is_empty());
        let f = BundleSum::parse(sp(2, 2), "2*O(1)").unwrap();
        assert!(f.context_check().is_empty());
        assert_eq!(f.degrees().delta0, 0);
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "O(1)+", "0*O(1)", "-1*O(2)", "O1", "yO(2)", "O(x)", "O(1))"] {
            assert!(BundleSum::parse(sp(2, 2), bad).is_err(), "{bad:?}");
        }
        let f = BundleSum::parse(sp(2, 2), " xO(-2) + 2 * O( 3 ) ").unwrap();
        assert_eq!(f.to_string(), "2*O(3)+xO(-2)");
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(ds in proptest::collection::vec((any::<bool>(), -9i64..9), 0..6)) {
            let f = BundleSum::new(sp(3, 3), ds.into_iter().map(|(t, d)| LineBundle { twisted: t, d }));
            let text = f.to_string();
            prop_assert_eq!(BundleSum::parse(sp(3, 3), &text).unwrap(), f);
        }
    }
}
