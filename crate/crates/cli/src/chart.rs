//! ASCII picture of the groups of the point ring, one cell per grading `a + bσ`.

use equibezout_core::grading::RoC2Degree;
use equibezout_core::hscalar::{group_at, GroupKind};

/// Generators labelled under the plot, with their gradings `(a, b)`.
const MARKS: [(&str, i32, i32); 4] =
    [("e", 0, 1), ("xi", -2, 2), ("tau(i^-2)", 2, -2), ("e^-1*kappa", 0, -1)];

fn symbol(kind: GroupKind) -> &'static str {
    match kind {
        GroupKind::Zero => ".",
        GroupKind::Burnside => "#",
        GroupKind::Integers => "@",
        GroupKind::Two => "o",
    }
}

/// Parses `lo..hi`; a reversed range is accepted and is empty.
pub fn parse_range(text: &str) -> Result<(i32, i32), String> {
    let (lo, hi) = text.split_once("..").ok_or_else(|| format!("expected lo..hi, got {text:?}"))?;
    let num = |s: &str| s.trim().parse::<i32>().map_err(|_| format!("bad bound {s:?} in {text:?}"));
    let (lo, hi) = (num(lo)?, num(hi)?);
    if lo.unsigned_abs() > 1000 || hi.unsigned_abs() > 1000 {
        return Err(format!("range {text:?} is too large; bounds must lie in -1000..1000"));
    }
    Ok((lo, hi))
}

/// Columns are the even `a` in `lo..=hi`; rows run over `b` from `R` down to `−R`, `R = max(|lo|, |hi|, 1)`.
pub fn chart(lo: i32, hi: i32) -> String {
    if lo > hi {
        return String::new();
    }
    let columns: Vec<i32> = (lo..=hi).filter(|a| a % 2 == 0).collect();
    if columns.is_empty() {
        return String::new();
    }
    let r = lo.abs().max(hi.abs()).max(1);
    let width = columns.iter().chain([r, -r].iter()).map(|k| k.to_string().len()).max().unwrap_or(1) + 1;
    let mut out = String::new();
    for b in (-r..=r).rev() {
        out.push_str(&format!("{b:>width$} |"));
        for &a in &columns {
            out.push_str(&format!("{:>width$}", symbol(group_at(RoC2Degree::new(a, b)))));
        }
        out.push('\n');
    }
    out.push_str(&format!("{:>width$} +{}\n", "", "-".repeat(width * columns.len())));
    out.push_str(&format!("{:>width$}  ", "b/a"));
    for &a in &columns {
        out.push_str(&format!("{a:>width$}"));
    }
    out.push('\n');
    out.push_str("\n# A(C2)   @ Z   o Z/2   . 0\n");
    for (name, a, b) in MARKS {
        if columns.contains(&a) && b.abs() <= r {
            out.push_str(&format!("{name} at ({a}, {b})\n"));
        }
    }
    out
}
