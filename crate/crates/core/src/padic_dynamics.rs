//! Exact p-adic orbit dynamics over the rationals: proved escape and
//! proved cycles, Mandelbrot membership, and the alternated-Julia
//! connectivity classifier.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{One, Zero};

use crate::connectivity::{trichotomy, Connectivity, ConnectivityClass, DecidedBy};
use crate::error::{Error, Result};
use crate::padic::{abs_p, check_prime, PAdicMagnitude};
use crate::poly::RationalPoly;
use crate::rational::{bit_length, Rational};

/// Default cap on the bit length of orbit values; beyond it the engine
/// reports `Unknown` rather than grinding on ever-larger exact numbers.
pub const DEFAULT_SIZE_BUDGET: u64 = 1_000_000;

/// Which budget stopped an undecided orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BudgetLimit {
    Iterations,
    ValueBits,
}

/// Outcome of an exact p-adic orbit run. Escape past the bound and exact
/// repetition are proofs; everything else is `Unknown`.
#[derive(Clone, Debug, PartialEq)]
pub enum PAdicOrbitVerdict {
    /// Two exactly equal iterates were found: points[entry] equals
    /// points[entry + cycle_len].
    BoundedProved { entry: usize, cycle_len: usize },
    /// The magnitude at `escape_index` strictly exceeds the escape
    /// bound, which proves divergence.
    UnboundedProved {
        escape_index: usize,
        magnitude: PAdicMagnitude,
    },
    /// Neither proof was reached within the budgets.
    Unknown { iterations: usize, limit: BudgetLimit },
}

impl PAdicOrbitVerdict {
    pub fn is_bounded_proved(&self) -> bool {
        matches!(self, PAdicOrbitVerdict::BoundedProved { .. })
    }

    pub fn is_unbounded_proved(&self) -> bool {
        matches!(self, PAdicOrbitVerdict::UnboundedProved { .. })
    }

    /// Escape index for proved-unbounded orbits.
    pub fn escape_index(&self) -> Option<usize> {
        match self {
            PAdicOrbitVerdict::UnboundedProved { escape_index, .. } => Some(*escape_index),
            _ => None,
        }
    }
}

impl fmt::Display for PAdicOrbitVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PAdicOrbitVerdict::BoundedProved { entry, cycle_len } => {
                write!(f, "bounded-proved (entry {entry}, cycle length {cycle_len})")
            }
            PAdicOrbitVerdict::UnboundedProved {
                escape_index,
                magnitude,
            } => write!(
                f,
                "unbounded-proved (escape index {escape_index}, magnitude {magnitude})"
            ),
            PAdicOrbitVerdict::Unknown { iterations, limit } => {
                let reason = match limit {
                    BudgetLimit::Iterations => "iteration budget exhausted",
                    BudgetLimit::ValueBits => "size budget exceeded",
                };
                write!(f, "unknown ({iterations} iterations, {reason})")
            }
        }
    }
}

/// An orbit prefix together with its verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct PAdicOrbit {
    /// z_0, z_1, ...; ends at the proving point or where a budget tripped.
    pub points: Vec<Rational>,
    pub verdict: PAdicOrbitVerdict,
}

/// p-adic Mandelbrot membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Membership::Yes => "yes",
            Membership::No => "no",
            Membership::Unknown => "unknown",
        };
        f.write_str(name)
    }
}

/// How a membership verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MandelbrotDecision {
    /// p >= degree: the Mandelbrot set is exactly the unit poly-disk.
    PolyDiskTheorem,
    /// Quadratic family: the unit-disk criterion, decisive both ways.
    UnitDiskTheorem,
    /// Critical-orbit simulation (or its structural limits).
    CriticalOrbitSimulation,
    /// An orbit budget ran out before any proof.
    BudgetExhausted,
}

impl fmt::Display for MandelbrotDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MandelbrotDecision::PolyDiskTheorem => "poly-disk-theorem",
            MandelbrotDecision::UnitDiskTheorem => "unit-disk-theorem",
            MandelbrotDecision::CriticalOrbitSimulation => "critical-orbit-simulation",
            MandelbrotDecision::BudgetExhausted => "budget-exhausted",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MandelbrotVerdict {
    pub member: Membership,
    pub decided_by: MandelbrotDecision,
}

/// Cycle-detection key over exact orbit values.
///
/// `Ratio`'s own `Hash` walks the continued fraction with one stack
/// frame per term, which overflows on orbit-sized values. Engine values
/// are always reduced with positive denominators, so hashing and
/// comparing the (numerator, denominator) pair directly is consistent
/// with value equality and runs in linear time.
#[derive(Clone)]
struct OrbitKey(Rational);

impl PartialEq for OrbitKey {
    fn eq(&self, other: &Self) -> bool {
        self.0.numer() == other.0.numer() && self.0.denom() == other.0.denom()
    }
}

impl Eq for OrbitKey {}

impl Hash for OrbitKey {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.numer().hash(state);
        self.0.denom().hash(state);
    }
}

fn require_monic_of_degree(f: &RationalPoly, min: usize) -> Result<usize> {
    let degree = f.degree().unwrap_or(0);
    if degree < min {
        return Err(Error::DegreeTooLow { degree, min });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    Ok(degree)
}

/// The sound escape magnitude B = max(1, max_k |a_k|_p) over the
/// non-leading coefficients of a monic `f` of degree >= 2. Whenever
/// |z|_p > B, ultrametric domination gives |f(z)|_p = |z|_p^deg(f),
/// so one step past the bound proves divergence.
pub fn escape_bound_p(f: &RationalPoly, p: u64) -> Result<PAdicMagnitude> {
    check_prime(p)?;
    let degree = require_monic_of_degree(f, 2)?;
    let mut bound = PAdicMagnitude::one(p);
    for k in 0..degree {
        let magnitude = abs_p(&f.coeff(k), p)?;
        if magnitude > bound {
            bound = magnitude;
        }
    }
    Ok(bound)
}

/// Runs the orbit of `z0` under `f` exactly, returning the points
/// computed along with the verdict. Escape past `escape_bound_p` and
/// exact repetition of a value are proofs; exhausting `max_iter` steps
/// or growing past `size_budget` bits yields `Unknown`.
pub fn orbit_trace_p(
    f: &RationalPoly,
    z0: &Rational,
    p: u64,
    max_iter: u32,
    size_budget: u64,
) -> Result<PAdicOrbit> {
    let bound = escape_bound_p(f, p)?;
    let mut points = vec![z0.clone()];
    let mut seen: HashMap<OrbitKey, usize> = HashMap::new();
    let verdict = loop {
        let index = points.len() - 1;
        let z = points.last().expect("nonempty orbit").clone();
        let magnitude = abs_p(&z, p)?;
        if magnitude > bound {
            break PAdicOrbitVerdict::UnboundedProved {
                escape_index: index,
                magnitude,
            };
        }
        if let Some(&entry) = seen.get(&OrbitKey(z.clone())) {
            break PAdicOrbitVerdict::BoundedProved {
                entry,
                cycle_len: index - entry,
            };
        }
        if bit_length(&z) > size_budget {
            break PAdicOrbitVerdict::Unknown {
                iterations: index,
                limit: BudgetLimit::ValueBits,
            };
        }
        if index as u32 == max_iter {
            break PAdicOrbitVerdict::Unknown {
                iterations: index,
                limit: BudgetLimit::Iterations,
            };
        }
        seen.insert(OrbitKey(z.clone()), index);
        points.push(f.eval(&z));
    };
    Ok(PAdicOrbit { points, verdict })
}

/// Verdict-only form of [`orbit_trace_p`].
pub fn orbit_classify_p(
    f: &RationalPoly,
    z0: &Rational,
    p: u64,
    max_iter: u32,
    size_budget: u64,
) -> Result<PAdicOrbitVerdict> {
    Ok(orbit_trace_p(f, z0, p, max_iter, size_budget)?.verdict)
}

/// Quadratic-family membership: c is in the p-adic Mandelbrot set
/// exactly when |c|_p <= 1, decisive in both directions.
pub fn mandelbrot_member_quadratic(c: &Rational, p: u64) -> Result<MandelbrotVerdict> {
    let member = if abs_p(c, p)?.at_most_one() {
        Membership::Yes
    } else {
        Membership::No
    };
    Ok(MandelbrotVerdict {
        member,
        decided_by: MandelbrotDecision::UnitDiskTheorem,
    })
}

/// The degree-d normal form F_v(z) = z^d + c_1 z^(d-2) + ... + c_(d-1)
/// for a coefficient vector v of length d - 1 (no z^(d-1) term).
pub fn normal_form_poly(v: &[Rational]) -> RationalPoly {
    let d = v.len() + 1;
    let mut coeffs = vec![Rational::zero(); d + 1];
    coeffs[d] = Rational::one();
    for (j, c) in v.iter().enumerate() {
        coeffs[d - 2 - j] = c.clone();
    }
    RationalPoly::new(coeffs)
}

/// Membership of the coefficient vector `v` in the degree-(|v|+1)
/// p-adic Mandelbrot set. For p >= d the poly-disk criterion decides
/// both ways; otherwise every rational critical orbit is simulated.
pub fn mandelbrot_member(
    v: &[Rational],
    p: u64,
    max_iter: u32,
    size_budget: u64,
) -> Result<MandelbrotVerdict> {
    check_prime(p)?;
    if v.is_empty() {
        return Err(Error::DegreeTooLow { degree: 1, min: 2 });
    }
    let degree = v.len() + 1;
    if p >= degree as u64 {
        let mut inside = true;
        for c in v {
            if !abs_p(c, p)?.at_most_one() {
                inside = false;
            }
        }
        return Ok(MandelbrotVerdict {
            member: if inside { Membership::Yes } else { Membership::No },
            decided_by: MandelbrotDecision::PolyDiskTheorem,
        });
    }

    let f = normal_form_poly(v);
    let critical = f.derivative().rational_roots()?;
    if critical.unresolved_degree > 0 {
        // Some critical points are irrational; the exact engine cannot
        // simulate their orbits.
        return Ok(MandelbrotVerdict {
            member: Membership::Unknown,
            decided_by: MandelbrotDecision::CriticalOrbitSimulation,
        });
    }
    let mut all_bounded = true;
    let mut any_unknown = false;
    for root in critical.distinct() {
        match orbit_classify_p(&f, &root, p, max_iter, size_budget)? {
            PAdicOrbitVerdict::UnboundedProved { .. } => {
                return Ok(MandelbrotVerdict {
                    member: Membership::No,
                    decided_by: MandelbrotDecision::CriticalOrbitSimulation,
                });
            }
            PAdicOrbitVerdict::BoundedProved { .. } => {}
            PAdicOrbitVerdict::Unknown { .. } => {
                all_bounded = false;
                any_unknown = true;
            }
        }
    }
    if all_bounded {
        Ok(MandelbrotVerdict {
            member: Membership::Yes,
            decided_by: MandelbrotDecision::CriticalOrbitSimulation,
        })
    } else {
        debug_assert!(any_unknown);
        Ok(MandelbrotVerdict {
            member: Membership::Unknown,
            decided_by: MandelbrotDecision::BudgetExhausted,
        })
    }
}

/// Classifies the p-adic alternated Julia set of monic `f1`, `f2` of
/// degree >= 2 through the composition F = f2 ∘ f1.
///
/// Fast path: when deg(F) <= p, F is in normal form (zero z^(deg-1)
/// coefficient), and every non-leading coefficient has magnitude <= 1,
/// the set is connected by theorem and no orbit is run. Otherwise the
/// rational critical orbits of F are simulated and the trichotomy is
/// applied; any undecided orbit or irrational critical point yields
/// `Undetermined`.
pub fn classify_alternated_padic(
    f1: &RationalPoly,
    f2: &RationalPoly,
    p: u64,
    max_iter: u32,
    size_budget: u64,
) -> Result<ConnectivityClass> {
    check_prime(p)?;
    require_monic_of_degree(f1, 2)?;
    require_monic_of_degree(f2, 2)?;
    let f = f2.compose(f1);
    let degree = f.degree().expect("composition of nonconstant polynomials");

    if degree as u64 <= p && f.coeff(degree - 1).is_zero() {
        let mut in_disk = true;
        for k in 0..degree {
            if !abs_p(&f.coeff(k), p)?.at_most_one() {
                in_disk = false;
                break;
            }
        }
        if in_disk {
            return Ok(ConnectivityClass {
                connectivity: Connectivity::Connected,
                decided_by: DecidedBy::Theorem,
                critical_escape_indices: Vec::new(),
            });
        }
    }

    let critical = f.derivative().rational_roots()?;
    let mut escape_indices: Vec<Option<u32>> = Vec::new();
    let mut any_unknown = false;
    for root in critical.distinct() {
        match orbit_classify_p(&f, &root, p, max_iter, size_budget)? {
            PAdicOrbitVerdict::UnboundedProved { escape_index, .. } => {
                escape_indices.push(Some(escape_index as u32));
            }
            PAdicOrbitVerdict::BoundedProved { .. } => escape_indices.push(None),
            PAdicOrbitVerdict::Unknown { .. } => {
                escape_indices.push(None);
                any_unknown = true;
            }
        }
    }

    if any_unknown || critical.unresolved_degree > 0 {
        return Ok(ConnectivityClass {
            connectivity: Connectivity::Undetermined,
            decided_by: DecidedBy::BudgetExhausted,
            critical_escape_indices: escape_indices,
        });
    }

    let flags: Vec<bool> = escape_indices.iter().map(Option::is_some).collect();
    Ok(ConnectivityClass {
        connectivity: trichotomy(&flags),
        decided_by: DecidedBy::Simulation,
        critical_escape_indices: escape_indices,
    })
}

/// Runs the alternated orbit z1 = f1(z0), z2 = f2(z1), ... exactly.
///
/// `max_iter` counts composed rounds (one f1 followed by one f2), so at
/// most 2·max_iter points follow z0. The escape bound of the composed
/// map F = f2 ∘ f1 is applied to the even-indexed terms, whose
/// boundedness is equivalent to that of the whole orbit; cycle witnesses
/// and escape indices are reported in alternated index space.
pub fn alternated_orbit_p(
    z0: &Rational,
    f1: &RationalPoly,
    f2: &RationalPoly,
    p: u64,
    max_iter: u32,
    size_budget: u64,
) -> Result<PAdicOrbit> {
    check_prime(p)?;
    require_monic_of_degree(f1, 2)?;
    require_monic_of_degree(f2, 2)?;
    let composed = f2.compose(f1);
    let bound = escape_bound_p(&composed, p)?;

    let mut points = vec![z0.clone()];
    let mut seen: HashMap<OrbitKey, usize> = HashMap::new();
    let verdict = loop {
        let index = points.len() - 1;
        let round = index / 2;
        let z = points.last().expect("nonempty orbit").clone();
        let magnitude = abs_p(&z, p)?;
        if magnitude > bound {
            break PAdicOrbitVerdict::UnboundedProved {
                escape_index: index,
                magnitude,
            };
        }
        if let Some(&entry) = seen.get(&OrbitKey(z.clone())) {
            break PAdicOrbitVerdict::BoundedProved {
                entry,
                cycle_len: index - entry,
            };
        }
        if bit_length(&z) > size_budget {
            break PAdicOrbitVerdict::Unknown {
                iterations: round,
                limit: BudgetLimit::ValueBits,
            };
        }
        if round as u32 == max_iter {
            break PAdicOrbitVerdict::Unknown {
                iterations: round,
                limit: BudgetLimit::Iterations,
            };
        }
        seen.insert(OrbitKey(z.clone()), index);
        let odd = f1.eval(&z);
        if bit_length(&odd) > size_budget {
            points.push(odd);
            break PAdicOrbitVerdict::Unknown {
                iterations: round,
                limit: BudgetLimit::ValueBits,
            };
        }
        let even = f2.eval(&odd);
        points.push(odd);
        points.push(even);
    };
    Ok(PAdicOrbit { points, verdict })
}
