//! Euler classes of sums of line bundles and the Bezout theorems.

pub mod bundle;
pub mod classes;
pub mod report;

pub use bundle::{classify_line, context_check, degrees, ranks, BundleSum, BundleType, DegreeTriple, LineBundle, Ranks};
pub use classes::{closed_form, euler_closed, euler_line, euler_product, euler_product_with, line_form, recover_degrees, ClosedForm, LineForm};
pub use report::{bezout_report, bezout_report_with, Check, Coefficient, EulerReport};
