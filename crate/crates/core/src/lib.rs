//! Engine for alternated Julia sets in two worlds: floating-point
//! escape-time dynamics over the complex plane, and exact arithmetic
//! dynamics over the rationals measured with p-adic absolute values.
//!
//! The complex side iterates the pair F1(z) = z^2 + c1, F2(z) = z^2 + c2
//! and its auxiliary quartic (z^2 + c1)^2 + c2, classifies connectivity
//! from the three critical orbits, and renders escape-time images. The
//! p-adic side works entirely in exact rationals, so escape past the
//! ultrametric bound and exact cycles are proofs rather than estimates.

pub mod complex_dynamics;
pub mod connectivity;
pub mod error;
pub mod padic;
pub mod padic_dynamics;
pub mod poly;
pub mod rational;
pub mod render;

pub use num_complex::Complex64;

pub use complex_dynamics::{
    alternated_orbit, classify_connectivity, escape_radius, quartic_critical_points,
    AlternatedParams, OrbitRecord, QuarticMap,
};
pub use connectivity::{trichotomy, Connectivity, ConnectivityClass, DecidedBy};
pub use error::{Error, Result};
pub use padic::{abs_p, check_prime, is_prime, vp, PAdicMagnitude, Valuation};
pub use padic_dynamics::{
    alternated_orbit_p, classify_alternated_padic, escape_bound_p, mandelbrot_member,
    mandelbrot_member_quadratic, normal_form_poly, orbit_classify_p, orbit_trace_p, BudgetLimit,
    MandelbrotDecision, MandelbrotVerdict, Membership, PAdicOrbit, PAdicOrbitVerdict,
    DEFAULT_SIZE_BUDGET,
};
pub use poly::{RationalPoly, RationalRoots};
pub use rational::{bit_length, parse_rational, ratio, Rational};
pub use render::{
    ppm_bytes, render_alternated, render_mandelbrot, write_ppm, EscapeImage, ViewPort,
    DEFAULT_PIXEL_CAP,
};
