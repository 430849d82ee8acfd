//! How much each coefficient theory remembers about a bundle sum.

use serde::Serialize;

use crate::euler::{euler_product, BundleSum, DegreeTriple};
use crate::variants::borel::borel_map;
use crate::variants::zconst::z_map;
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct TheoryVerdict {
    pub theory: &'static str,
    pub equal: bool,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub left: String,
    pub right: String,
    pub degrees_left: DegreeTriple,
    pub degrees_right: DegreeTriple,
    pub verdicts: Vec<TheoryVerdict>,
    /// Borel cohomology has no fixed-point data to compare.
    pub borel_fixed_points: &'static str,
}

pub fn compare(f: &BundleSum, g: &BundleSum) -> Result<Comparison> {
    if f.space() != g.space() {
        return Err(Error::Context(format!("bundle sums live on {} and {}", f.space(), g.space())));
    }
    f.check_context()?;
    g.check_context()?;
    let (ef, eg) = (euler_product(f)?, euler_product(g)?);
    let (zf, zg) = (z_map(&ef), z_map(&eg));
    let (bf, bg) = (borel_map(&ef, f.ranks().n1), borel_map(&eg, g.ranks().n1));
    let verdicts = vec![
        TheoryVerdict { theory: "burnside", equal: ef == eg, left: ef.to_string(), right: eg.to_string() },
        TheoryVerdict { theory: "zconst", equal: zf == zg, left: zf.to_string(), right: zg.to_string() },
        TheoryVerdict { theory: "borel", equal: bf == bg, left: bf.to_string(), right: bg.to_string() },
    ];
    Ok(Comparison {
        left: f.to_string(),
        right: g.to_string(),
        degrees_left: f.degrees(),
        degrees_right: g.degrees(),
        verdicts,
        borel_fixed_points: "no fixed-point data",
    })
}
