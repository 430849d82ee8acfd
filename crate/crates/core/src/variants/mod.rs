//! Coefficient theories other than the Burnside ring.

pub mod borel;
pub mod compare;
pub mod zconst;

pub use borel::{borel_euler_closed, borel_map, BorelElement, BorelScalar};
pub use compare::{compare, Comparison};
pub use zconst::{z_euler_closed, z_fixed, z_map, ZHElement, ZMonomial};
