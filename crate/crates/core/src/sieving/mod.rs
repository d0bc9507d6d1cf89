//! The cyclic shift action on `DT(n, n)`, its orbits and fixed points, and
//! orbit-realizability checks for candidate sieving polynomials.

mod action;
mod csp;
mod realize;

pub use action::{act, orbits, orbits_with, shift_subset, Orbit, OrbitReport};
pub use csp::{
    fixed_point_count, fixed_point_count_capped, fixed_points_closed, fixed_points_exhaustive,
    verify_csp, verify_csp_with, CspReport, CspRow, FixedPointCount, Verdict,
    DEFAULT_EXHAUSTIVE_CAP,
};
pub use realize::{
    conjecture_polynomial, conjecture_probe, realizability, ConjectureProbe, Failure,
    Realizability, RealizabilityReport,
};
