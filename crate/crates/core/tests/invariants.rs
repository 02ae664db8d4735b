//! Cross-module properties: ultrametric laws, composition equivalences,
//! root-extraction completeness, and disk-criterion consistency.

use altjulia_core::{
    alternated_orbit, alternated_orbit_p, orbit_classify_p, orbit_trace_p, ratio, vp,
    AlternatedParams, Complex64, PAdicOrbitVerdict, QuarticMap, Rational, RationalPoly, Valuation,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

const SMALL_PRIMES: [u64; 4] = [2, 3, 5, 7];

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-1_000_000i64..1_000_000, 1i64..1_000_000).prop_map(|(n, d)| ratio(n, d))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=24).prop_map(|(n, d)| ratio(n, d))
}

/// Monic polynomial of degree 2 or 3 with small rational coefficients.
fn monic_poly() -> impl Strategy<Value = RationalPoly> {
    (2usize..=3, proptest::collection::vec(small_rational(), 3))
        .prop_map(|(degree, lower)| {
            let mut coeffs: Vec<Rational> = lower.into_iter().take(degree).collect();
            coeffs.push(Rational::one());
            RationalPoly::new(coeffs)
        })
}

fn valuation_sum(a: Valuation, b: Valuation) -> Valuation {
    match (a, b) {
        (Valuation::Finite(x), Valuation::Finite(y)) => Valuation::Finite(x + y),
        _ => Valuation::Infinite,
    }
}

proptest! {
    /// |x + y|_p <= max(|x|_p, |y|_p), with equality when the two
    /// magnitudes differ.
    #[test]
    fn ultrametric_inequality(x in rational_strategy(), y in rational_strategy()) {
        for p in SMALL_PRIMES {
            let vx = vp(&x, p).unwrap();
            let vy = vp(&y, p).unwrap();
            let vsum = vp(&(x.clone() + y.clone()), p).unwrap();
            let vmin = vx.min(vy);
            prop_assert!(vsum >= vmin, "p = {p}: v(x+y) = {vsum:?} < min = {vmin:?}");
            if vx != vy {
                prop_assert_eq!(vsum, vmin, "equality must hold when magnitudes differ (p = {})", p);
            }
        }
    }

    /// v_p(xy) = v_p(x) + v_p(y), i.e. magnitudes multiply.
    #[test]
    fn valuations_add_under_multiplication(x in rational_strategy(), y in rational_strategy()) {
        for p in SMALL_PRIMES {
            let product = vp(&(x.clone() * y.clone()), p).unwrap();
            let expected = valuation_sum(vp(&x, p).unwrap(), vp(&y, p).unwrap());
            prop_assert_eq!(product, expected, "p = {}", p);
        }
    }

    /// Primes dividing neither side leave the magnitude at 1.
    #[test]
    fn foreign_primes_see_a_unit(n in 1i64..=1000, d in 1i64..=1000) {
        let x = ratio(n, d);
        for p in [1009u64, 10007, 1000003] {
            prop_assert_eq!(vp(&x, p).unwrap(), Valuation::Finite(0));
        }
    }

    /// deg(G ∘ F) = deg(G)·deg(F) and evaluation factors through
    /// composition exactly.
    #[test]
    fn composition_degree_and_evaluation(
        g in monic_poly(),
        f in monic_poly(),
        x in small_rational(),
    ) {
        let composed = g.compose(&f);
        prop_assert_eq!(
            composed.degree(),
            Some(g.degree().unwrap() * f.degree().unwrap())
        );
        prop_assert_eq!(composed.eval(&x), g.eval(&f.eval(&x)));
    }

    /// Roots injected by construction are recovered exactly, and the
    /// root-free cofactor's degree is reported as unresolved.
    #[test]
    fn rational_roots_recover_constructed_factors(
        roots in proptest::collection::btree_set(-12i64..=12, 1..=3),
        multiplicities in proptest::collection::vec(1usize..=2, 3),
        with_irreducible in any::<bool>(),
    ) {
        let mut product = RationalPoly::constant(ratio(3, 7));
        let mut expected: Vec<(Rational, usize)> = Vec::new();
        for (i, r) in roots.iter().enumerate() {
            let m = multiplicities[i.min(multiplicities.len() - 1)];
            let linear = RationalPoly::new(vec![ratio(-r, 2), Rational::one()]);
            for _ in 0..m {
                product = &product * &linear;
            }
            expected.push((ratio(*r, 2), m));
        }
        let irreducible_degree = if with_irreducible {
            // z^2 + 1 has no rational roots.
            let cofactor = RationalPoly::new(vec![Rational::one(), Rational::zero(), Rational::one()]);
            product = &product * &cofactor;
            2
        } else {
            0
        };

        let found = product.rational_roots().unwrap();
        prop_assert_eq!(found.unresolved_degree, irreducible_degree);
        let mut found_sorted = found.roots.clone();
        found_sorted.sort();
        let mut expected_sorted = expected;
        expected_sorted.sort();
        prop_assert_eq!(found_sorted, expected_sorted);
        for (root, _) in &found.roots {
            prop_assert!(product.eval(root).is_zero());
        }
    }

    /// The returned critical points null the expanded quartic derivative
    /// to within 1e-10 across the |c1| <= 2 disk.
    #[test]
    fn critical_points_null_the_derivative(re in -2.0f64..2.0, im in -2.0f64..2.0) {
        let c1 = Complex64::new(re, im);
        prop_assume!(c1.norm() <= 2.0);
        for w in altjulia_core::quartic_critical_points(c1) {
            let residual = 4.0 * w * w * w + 4.0 * c1 * w;
            prop_assert!(residual.norm() < 1e-10, "residual {} at c1 = {}", residual.norm(), c1);
        }
    }

    /// The quartic orbit is the even-indexed alternated orbit, with
    /// bitwise-identical floating point.
    #[test]
    fn quartic_equals_even_alternated_terms(
        z0re in -1.5f64..1.5, z0im in -1.5f64..1.5,
        c1re in -1.5f64..1.5, c1im in -1.5f64..1.5,
        c2re in -1.5f64..1.5, c2im in -1.5f64..1.5,
    ) {
        let params = AlternatedParams::new(
            Complex64::new(c1re, c1im),
            Complex64::new(c2re, c2im),
        );
        let z0 = Complex64::new(z0re, z0im);
        let record = alternated_orbit(z0, params, 60, 1e100);
        let map = QuarticMap::new(params);
        let mut z = z0;
        for n in 0.. {
            let Some(even_term) = record.points.get(2 * n) else { break };
            prop_assert_eq!(z, *even_term, "quartic step {}", n);
            z = map.eval(z);
        }
    }

    /// Even-indexed p-adic alternated terms equal the composed-map orbit
    /// term by term, and the even/odd subsequences never receive
    /// contradictory proofs.
    #[test]
    fn alternated_padic_orbit_matches_composition(
        f1 in monic_poly(),
        f2 in monic_poly(),
        z0 in small_rational(),
        p in proptest::sample::select(&SMALL_PRIMES[..]),
    ) {
        let alternated = alternated_orbit_p(&z0, &f1, &f2, p, 8, 3_000).unwrap();
        let composed = f2.compose(&f1);
        let even_orbit = orbit_trace_p(&composed, &z0, p, 8, 3_000).unwrap();
        let check = alternated.points.len() / 2;
        for n in 0..=check.min(even_orbit.points.len() - 1) {
            let Some(even_term) = alternated.points.get(2 * n) else { break };
            prop_assert_eq!(even_term, &even_orbit.points[n], "composed step {}", n);
        }

        // Odd subsequence as its own composed orbit from z1 = f1(z0).
        let odd_map = f1.compose(&f2);
        let odd_verdict = orbit_classify_p(&odd_map, &f1.eval(&z0), p, 8, 3_000).unwrap();
        let contradictory = (even_orbit.verdict.is_bounded_proved() && odd_verdict.is_unbounded_proved())
            || (even_orbit.verdict.is_unbounded_proved() && odd_verdict.is_bounded_proved());
        prop_assert!(!contradictory, "even {:?} vs odd {:?}", even_orbit.verdict, odd_verdict);
    }

    /// Quadratic disk criterion both ways: inside the unit disk the
    /// critical orbit is never proved unbounded; strictly outside it is
    /// proved unbounded within three steps, after which the valuation
    /// law v(z_{k+1}) = deg·v(z_k) holds on replay.
    #[test]
    fn quadratic_disk_consistency(
        n in -40i64..=40,
        d in 1i64..=40,
        scale in 1i64..=6,
        p in proptest::sample::select(&SMALL_PRIMES[..]),
    ) {
        let inside = {
            // Force v_p >= 0 by clearing p from the denominator.
            let mut den = d;
            while den % p as i64 == 0 { den /= p as i64; }
            ratio(n, den.max(1))
        };
        let f_in = quadratic(&inside);
        let verdict = orbit_classify_p(&f_in, &Rational::zero(), p, 12, 5_000).unwrap();
        prop_assert!(!verdict.is_unbounded_proved(), "|c|<=1 proved unbounded: {verdict:?}");

        let outside = &inside + ratio(1, (p as i64).pow(scale as u32));
        if vp(&outside, p).unwrap() < Valuation::Finite(0) {
            let f_out = quadratic(&outside);
            let trace = orbit_trace_p(&f_out, &Rational::zero(), p, 12, 1_000_000).unwrap();
            match trace.verdict {
                PAdicOrbitVerdict::UnboundedProved { escape_index, .. } => {
                    prop_assert!(escape_index <= 3, "late escape at {escape_index}");
                    // Ultrametric domination past the bound, replayed.
                    let mut z = trace.points[escape_index].clone();
                    let mut v = vp(&z, p).unwrap().finite().unwrap();
                    for _ in 0..3 {
                        z = f_out.eval(&z);
                        let next = vp(&z, p).unwrap().finite().unwrap();
                        prop_assert_eq!(next, 2 * v, "domination law broke");
                        v = next;
                    }
                }
                other => prop_assert!(false, "expected proved escape, got {other:?}"),
            }
        }
    }
}

/// |z| just past the sound radius strictly grows under the quartic, for
/// 1000 random parameter pairs in the |c| <= 2 box.
#[test]
fn escape_radius_soundness_sweep() {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(0x0e5c_a9ed);
    for _ in 0..1000 {
        let mut c = || Complex64::new(rng.random_range(-2.0..=2.0), rng.random_range(-2.0..=2.0));
        let params = AlternatedParams::new(c(), c());
        let radius = altjulia_core::escape_radius(params);
        let map = QuarticMap::new(params);
        let modulus = radius + rng.random_range(f64::EPSILON..1.0);
        let angle = rng.random_range(0.0..std::f64::consts::TAU);
        let z = Complex64::from_polar(modulus, angle);
        assert!(
            map.eval(z).norm() > z.norm(),
            "no growth at |z| = {modulus} for {params:?}"
        );
    }
}

fn quadratic(c: &Rational) -> RationalPoly {
    RationalPoly::new(vec![c.clone(), Rational::zero(), Rational::one()])
}

#[test]
fn classify_is_invariant_under_critical_point_order() {
    use altjulia_core::{classify_connectivity, trichotomy};
    let params = AlternatedParams::new(Complex64::new(-0.76, 0.1), Complex64::new(-0.76, 0.15));
    let class = classify_connectivity(params, 400);
    let mut flags = class.escaped_flags();
    let direct = trichotomy(&flags);
    flags.reverse();
    assert_eq!(trichotomy(&flags), direct);
    flags.rotate_left(1);
    assert_eq!(trichotomy(&flags), direct);
    assert_eq!(direct, class.connectivity);
}
