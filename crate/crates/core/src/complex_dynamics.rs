//! Alternated quadratic dynamics over the complex plane: orbits, the
//! auxiliary quartic, critical points, and connectivity classification.

use num_complex::Complex64;

use crate::connectivity::{trichotomy, Connectivity, ConnectivityClass, DecidedBy};

/// The two constants of an alternated system F1(z) = z^2 + c1,
/// F2(z) = z^2 + c2. Every pair is a valid input.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlternatedParams {
    pub c1: Complex64,
    pub c2: Complex64,
}

impl AlternatedParams {
    pub fn new(c1: Complex64, c2: Complex64) -> Self {
        Self { c1, c2 }
    }

    /// Swapping the constants turns the F1-first orbit into the
    /// F2-first one and vice versa.
    pub fn swapped(self) -> Self {
        Self {
            c1: self.c2,
            c2: self.c1,
        }
    }
}

/// A computed alternated orbit prefix.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    /// z_0, z_1, ...; ends at the escaping point or after `max_iter` steps.
    pub points: Vec<Complex64>,
    pub escaped: bool,
    /// Index of the first point whose magnitude exceeds the radius.
    pub escape_index: Option<usize>,
    pub radius_used: f64,
}

/// Iterates the alternated maps from `z0`, applying F1 first, stopping
/// at the first point with |z| > radius or after `max_iter` applications.
pub fn alternated_orbit(
    z0: Complex64,
    params: AlternatedParams,
    max_iter: u32,
    radius: f64,
) -> OrbitRecord {
    let radius_sq = radius * radius;
    let mut points = Vec::with_capacity(max_iter as usize + 1);
    points.push(z0);
    let mut escaped = false;
    let mut escape_index = None;
    for step in 0..=max_iter {
        let z = *points.last().expect("nonempty orbit");
        if z.norm_sqr() > radius_sq {
            escaped = true;
            escape_index = Some(step as usize);
            break;
        }
        if step == max_iter {
            break;
        }
        let c = if step % 2 == 0 { params.c1 } else { params.c2 };
        points.push(z * z + c);
    }
    OrbitRecord {
        points,
        escaped,
        escape_index,
        radius_used: radius,
    }
}

/// The auxiliary quartic F(z) = (z^2 + c1)^2 + c2 whose orbit equals the
/// even-indexed alternated orbit.
#[derive(Clone, Copy, Debug)]
pub struct QuarticMap {
    params: AlternatedParams,
}

impl QuarticMap {
    pub fn new(params: AlternatedParams) -> Self {
        Self { params }
    }

    /// One application, in the factored two-step order (square, add c1,
    /// square, add c2) so each iterate is bit-identical to the matching
    /// even-indexed alternated term.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let w = z * z + self.params.c1;
        w * w + self.params.c2
    }

    /// n-fold application.
    pub fn iterate(&self, z0: Complex64, n: u32) -> Complex64 {
        let mut z = z0;
        for _ in 0..n {
            z = self.eval(z);
        }
        z
    }
}

/// The three critical points of the auxiliary quartic: 0 and ±√(-c1),
/// with the principal branch of the square root.
pub fn quartic_critical_points(c1: Complex64) -> [Complex64; 3] {
    let s = (-c1).sqrt();
    [Complex64::new(0.0, 0.0), s, -s]
}

/// A radius beyond which one quartic application strictly increases the
/// magnitude: R = max(2, 1 + 2|c1| + |c1^2 + c2|).
pub fn escape_radius(params: AlternatedParams) -> f64 {
    let bound = 1.0 + 2.0 * params.c1.norm() + (params.c1 * params.c1 + params.c2).norm();
    bound.max(2.0)
}

/// Index of the first quartic iterate with |z| > radius, or `None`
/// within the budget.
fn quartic_escape_index(map: &QuarticMap, z0: Complex64, max_iter: u32, radius: f64) -> Option<u32> {
    let radius_sq = radius * radius;
    let mut z = z0;
    for step in 0..=max_iter {
        if z.norm_sqr() > radius_sq {
            return Some(step);
        }
        if step < max_iter {
            z = map.eval(z);
        }
    }
    None
}

/// Classifies the alternated Julia set of `params` by simulating the
/// three quartic critical orbits with the sound escape radius: none
/// escaped means connected, all totally disconnected, a mix disconnected.
///
/// Escape within budget is decisive for that orbit; "bounded" is only a
/// budget statement, so the connected branch reports `BudgetExhausted`.
pub fn classify_connectivity(params: AlternatedParams, max_iter: u32) -> ConnectivityClass {
    let radius = escape_radius(params);
    let map = QuarticMap::new(params);
    let critical_escape_indices: Vec<Option<u32>> = quartic_critical_points(params.c1)
        .iter()
        .map(|&w| quartic_escape_index(&map, w, max_iter, radius))
        .collect();
    let flags: Vec<bool> = critical_escape_indices.iter().map(Option::is_some).collect();
    let connectivity = trichotomy(&flags);
    let decided_by = if connectivity == Connectivity::Connected {
        DecidedBy::BudgetExhausted
    } else {
        DecidedBy::Simulation
    };
    ConnectivityClass {
        connectivity,
        decided_by,
        critical_escape_indices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn fixed_point_of_the_zero_maps() {
        let record = alternated_orbit(c(0.0, 0.0), AlternatedParams::new(c(0.0, 0.0), c(0.0, 0.0)), 10, 2.0);
        assert!(!record.escaped);
        assert_eq!(record.points.len(), 11);
        assert!(record.points.iter().all(|z| z.norm_sqr() == 0.0));
    }

    #[test]
    fn starting_point_beyond_radius_escapes_immediately() {
        let params = AlternatedParams::new(c(0.3, 0.2), c(-0.5, 0.1));
        let record = alternated_orbit(c(10.0, 0.0), params, 100, 4.0);
        assert!(record.escaped);
        assert_eq!(record.escape_index, Some(0));
        assert_eq!(record.points.len(), 1);
    }

    #[test]
    fn totally_disconnected_pair_escapes_from_the_origin() {
        let params = AlternatedParams::new(c(-0.76, 0.1), c(-0.76, 0.1));
        let radius = 2.0f64.max(params.c1.norm()).max(params.c2.norm());
        let record = alternated_orbit(c(0.0, 0.0), params, 1000, radius);
        assert!(record.escaped);
    }

    #[test]
    fn orbit_alternates_f1_first() {
        let params = AlternatedParams::new(c(1.0, 0.0), c(-2.0, 0.0));
        let record = alternated_orbit(c(0.0, 0.0), params, 3, 100.0);
        // z1 = 0^2 + c1 = 1, z2 = 1 + c2 = -1, z3 = 1 + c1 = 2
        assert_eq!(record.points[1], c(1.0, 0.0));
        assert_eq!(record.points[2], c(-1.0, 0.0));
        assert_eq!(record.points[3], c(2.0, 0.0));
    }

    #[test]
    fn escaping_orbit_respects_the_radius_invariant() {
        let params = AlternatedParams::new(c(-0.76, 0.1), c(-0.76, 0.15));
        let record = alternated_orbit(c(1.2, 0.3), params, 500, 3.0);
        if let Some(k) = record.escape_index {
            assert!(record.points[k].norm_sqr() > 9.0);
            for z in &record.points[..k] {
                assert!(z.norm_sqr() <= 9.0);
            }
        }
    }

    #[test]
    fn quartic_matches_the_factored_form() {
        let map = QuarticMap::new(AlternatedParams::new(c(0.0, 0.0), c(0.0, 0.0)));
        assert_eq!(map.eval(c(2.0, 0.0)), c(16.0, 0.0));
        // (0 - 1/4)^2 + 1/2 = 9/16, exact in binary floating point.
        let map = QuarticMap::new(AlternatedParams::new(c(-0.25, 0.0), c(0.5, 0.0)));
        assert_eq!(map.eval(c(0.0, 0.0)), c(0.5625, 0.0));
    }

    #[test]
    fn critical_points_collapse_at_zero() {
        let points = quartic_critical_points(c(0.0, 0.0));
        assert!(points.iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn critical_points_of_real_negative_c1() {
        let points = quartic_critical_points(c(-1.0, 0.0));
        assert_eq!(points[0], c(0.0, 0.0));
        assert_eq!(points[1], c(1.0, 0.0));
        assert_eq!(points[2], c(-1.0, 0.0));
    }

    #[test]
    fn critical_points_null_the_derivative() {
        let c1 = c(-0.76, 0.1);
        for w in quartic_critical_points(c1) {
            // F'(z) = 4z^3 + 4 c1 z in expanded form.
            let residual = 4.0 * w * w * w + 4.0 * c1 * w;
            assert!(residual.norm() < 1e-10, "residual {}", residual.norm());
        }
    }

    #[test]
    fn escape_radius_examples() {
        assert_eq!(escape_radius(AlternatedParams::new(c(0.0, 0.0), c(0.0, 0.0))), 2.0);
        assert_eq!(escape_radius(AlternatedParams::new(c(-1.0, 0.0), c(0.0, 0.0))), 4.0);
        let fig2 = AlternatedParams::new(c(-0.76, 0.1), c(-0.76, 0.1));
        let radius = escape_radius(fig2);
        assert!(radius > 2.70 && radius < 2.75, "radius {radius}");
    }

    #[test]
    fn escape_radius_is_sound_just_past_the_bound() {
        // |z| slightly beyond R must strictly grow under the quartic.
        let cases = [
            AlternatedParams::new(c(-0.76, 0.1), c(-0.76, 0.1)),
            AlternatedParams::new(c(-1.0, 0.0), c(0.0, 0.0)),
            AlternatedParams::new(c(1.3, -0.9), c(-0.4, 1.7)),
        ];
        for params in cases {
            let radius = escape_radius(params);
            let map = QuarticMap::new(params);
            for k in 0..64 {
                let angle = k as f64 * std::f64::consts::PI / 32.0;
                let z = Complex64::from_polar(radius + 1e-6 + (k as f64) * 0.01, angle);
                assert!(map.eval(z).norm() > z.norm(), "stalled at {z}");
            }
        }
    }

    #[test]
    fn figure_caption_classifications() {
        let totally = classify_connectivity(
            AlternatedParams::new(c(-0.76, 0.1), c(-0.76, 0.1)),
            1000,
        );
        assert_eq!(totally.connectivity, Connectivity::TotallyDisconnected);
        assert_eq!(totally.decided_by, DecidedBy::Simulation);
        assert!(totally.escaped_flags().iter().all(|&e| e));

        let disconnected = classify_connectivity(
            AlternatedParams::new(c(-0.76, 0.1), c(-0.76, 0.15)),
            1000,
        );
        assert_eq!(disconnected.connectivity, Connectivity::Disconnected);

        let connected = classify_connectivity(
            AlternatedParams::new(c(-0.765, 0.11), c(-0.76, 0.1)),
            1000,
        );
        assert_eq!(connected.connectivity, Connectivity::Connected);
        assert_eq!(connected.decided_by, DecidedBy::BudgetExhausted);
        assert!(connected.escaped_flags().iter().all(|&e| !e));
    }

    #[test]
    fn quartic_iterates_equal_even_alternated_terms_exactly() {
        let params = AlternatedParams::new(c(-0.613, 0.27), c(0.19, -0.55));
        let z0 = c(0.31, -0.42);
        let record = alternated_orbit(z0, params, 40, 1e12);
        let map = QuarticMap::new(params);
        let mut z = z0;
        let mut compared = 0;
        for n in 0..=20 {
            let Some(even_term) = record.points.get(2 * n) else {
                break;
            };
            assert_eq!(z, *even_term, "mismatch at quartic step {n}");
            z = map.eval(z);
            compared += 1;
        }
        assert!(compared >= 2, "orbit too short to compare");
    }

    #[test]
    fn growth_is_monotone_after_escape() {
        // Once an even-indexed term clears the sound radius, continued
        // alternated iteration grows strictly in magnitude.
        let params = AlternatedParams::new(c(-0.76, 0.1), c(-0.76, 0.1));
        let radius = escape_radius(params);
        let record = alternated_orbit(c(0.0, 0.0), params, 1000, radius);
        let k = record.escape_index.expect("escapes");
        let mut z = record.points[k];
        let mut magnitude = z.norm();
        for step in k..k + 8 {
            let constant = if step % 2 == 0 { params.c1 } else { params.c2 };
            z = z * z + constant;
            let next = z.norm();
            assert!(next > magnitude, "no growth at step {step}");
            magnitude = next;
        }
    }

    #[test]
    fn swapped_params_realize_the_other_orbit_order() {
        let params = AlternatedParams::new(c(0.3, 0.0), c(-0.7, 0.0));
        let record = alternated_orbit(c(0.1, 0.0), params.swapped(), 4, 100.0);
        // First applied map is now z^2 + c2 of the original pair.
        assert_eq!(record.points[1], c(0.1, 0.0) * c(0.1, 0.0) + c(-0.7, 0.0));
    }
}
