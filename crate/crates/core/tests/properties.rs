mod common;

use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{modulate, random_split, vec_norm};
use toeplitz_bracket::boundary::{
    build_restricted, classic_neumann, corner_block, interior_placements, rank_one_sum,
    BoundaryKind, Side,
};
use toeplitz_bracket::spectra::{
    check_bracketing, check_bracketing_with, eigenvalues, grid_shift, kernel_basis,
    periodic_lower_bound, NeumannVariant,
};
use toeplitz_bracket::symbol::{circular_distance, decompose_pentadiagonal};
use toeplitz_bracket::toeplitz::{circulant_periodic, reflect_antidiagonal, toeplitz_finite};
use toeplitz_bracket::{BandedCoeffs, Symbol, SymbolSpec, TWO_PI};

use BoundaryKind::{ModifiedDirichlet, ModifiedNeumann};

fn spec_strategy(max_factors: usize, max_alpha: u32) -> impl Strategy<Value = SymbolSpec> {
    prop::collection::vec((0.0..TWO_PI, 1..=max_alpha), 1..=max_factors).prop_filter_map(
        "angles must be distinct",
        |factors| {
            let distinct = factors.iter().enumerate().all(|(i, &(a, _))| {
                factors[..i]
                    .iter()
                    .all(|&(b, _)| circular_distance(a, b) > 1e-3)
            });
            distinct.then(|| SymbolSpec::new(&factors).ok()).flatten()
        },
    )
}

fn admissible_penta() -> impl Strategy<Value = (f64, f64, f64)> {
    (0.05..5.0f64, -4.0..=4.0f64, -5.0..10.0f64).prop_map(|(a2, r, a0)| (a0, a2 * r, a2))
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(0x70e9_11c2),
        ..ProptestConfig::default()
    }
}

fn nn(spec: &SymbolSpec, size: usize) -> toeplitz_bracket::HermitianMatrix {
    build_restricted(spec, size, ModifiedNeumann, ModifiedNeumann).unwrap()
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn symbol_is_nonnegative_and_matches_coefficients(spec in spec_strategy(3, 3)) {
        let coeffs = spec.fourier_coefficients();
        let scale = coeffs.abs_sum();
        for i in 0..10_000 {
            let x = TWO_PI * i as f64 / 10_000.0;
            let product = spec.evaluate(x);
            prop_assert!(product >= 0.0);
            let series = coeffs.evaluate(x).unwrap();
            prop_assert!((product - series).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn zeros_are_exact_on_the_product_form(spec in spec_strategy(4, 3)) {
        for e in spec.angles() {
            prop_assert!(spec.evaluate(e).abs() <= 1e-12);
        }
    }

    #[test]
    fn toeplitz_windows_agree(spec in spec_strategy(2, 2), extra in 0usize..20, start in 0usize..10) {
        let coeffs = spec.fourier_coefficients();
        let small = 2 * spec.degree() + 1 + extra;
        let large = small + start + 5;
        let a = toeplitz_finite(&coeffs, small).unwrap();
        let b = toeplitz_finite(&coeffs, large).unwrap().principal_block(start, small).unwrap();
        prop_assert_eq!(a.max_abs_diff(&b).unwrap(), 0.0);
    }

    #[test]
    fn circulant_eigenvalues_are_symbol_samples(spec in spec_strategy(3, 2), extra in 0usize..30) {
        let size = 2 * spec.degree() + 1 + extra;
        let per = circulant_periodic(&spec.fourier_coefficients(), size).unwrap();
        let mut samples: Vec<f64> = (1..=size)
            .map(|k| spec.evaluate(TWO_PI * k as f64 / size as f64))
            .collect();
        samples.sort_by(f64::total_cmp);
        let spectrum = eigenvalues(&per).unwrap();
        for (a, b) in spectrum.values().iter().zip(&samples) {
            prop_assert!((a - b).abs() <= 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn reflection_preserves_spectrum(spec in spec_strategy(2, 2), extra in 0usize..12) {
        let size = 2 * spec.degree() + 1 + extra;
        let h = build_restricted(&spec, size, ModifiedNeumann, BoundaryKind::Simple).unwrap();
        let r = reflect_antidiagonal(&h);
        let a = eigenvalues(&h).unwrap();
        let b = eigenvalues(&r).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            prop_assert!((x - y).abs() <= 1e-10 * h.norm_inf().max(1.0));
        }
        prop_assert_eq!(reflect_antidiagonal(&r), h);
    }

    #[test]
    fn neumann_neumann_is_interior_rank_one_sum(spec in spec_strategy(3, 2)) {
        let n = spec.degree();
        let size = 4 * n + 3;
        let t = nn(&spec, size);
        let sum = rank_one_sum(&spec, size, interior_placements(size, n)).unwrap();
        prop_assert!(t.max_abs_diff(&sum).unwrap() <= 1e-12 * t.norm_inf());
    }

    #[test]
    fn kernel_vectors_are_annihilated(spec in spec_strategy(3, 2), extra in 0usize..30) {
        let size = 2 * spec.degree() + 1 + extra;
        let t = nn(&spec, size);
        for v in kernel_basis(&spec, size) {
            let image = t.mul_vec(&v).unwrap();
            prop_assert!(vec_norm(&image) <= 1e-9 * t.norm_inf());
        }
    }

    #[test]
    fn corner_blocks_are_sign_definite(spec in spec_strategy(3, 2)) {
        for side in [Side::Left, Side::Right] {
            let neumann = eigenvalues(&corner_block(&spec, ModifiedNeumann, side).unwrap()).unwrap();
            let dirichlet = eigenvalues(&corner_block(&spec, ModifiedDirichlet, side).unwrap()).unwrap();
            let scale = dirichlet.max().abs().max(1.0);
            prop_assert!(neumann.max() <= 1e-12 * scale);
            prop_assert!(dirichlet.min() >= -1e-12 * scale);
        }
    }

    #[test]
    fn modulation_shifts_angles(spec in spec_strategy(2, 2), shift in 0.0..TWO_PI, extra in 0usize..10) {
        let size = 2 * spec.degree() + 1 + extra;
        let shifted = spec.shifted(shift).unwrap();
        for (left, right) in [
            (BoundaryKind::Simple, BoundaryKind::Simple),
            (ModifiedNeumann, ModifiedNeumann),
            (ModifiedDirichlet, ModifiedNeumann),
        ] {
            let a = modulate(&build_restricted(&spec, size, left, right).unwrap(), shift);
            let b = build_restricted(&shifted, size, left, right).unwrap();
            prop_assert!(a.max_abs_diff(&b).unwrap() <= 1e-12 * b.norm_inf().max(1.0));
        }
        let a = eigenvalues(&nn(&spec, size)).unwrap();
        let b = eigenvalues(&nn(&shifted, size)).unwrap();
        for (x, y) in a.values().iter().zip(b.values()) {
            prop_assert!((x - y).abs() <= 1e-9);
        }
    }

    #[test]
    fn min_max_lower_bound(spec in spec_strategy(3, 2), extra in 0usize..40) {
        let n = spec.degree();
        let size = 2 * n + 1 + extra;
        let gap = eigenvalues(&nn(&spec, size)).unwrap().values()[n];
        prop_assert!(gap >= periodic_lower_bound(&spec, size, 0.0) - 1e-9);
        let shift = grid_shift(&spec.angles().collect::<Vec<_>>(), size);
        prop_assert!(gap >= periodic_lower_bound(&spec, size, shift) - 1e-9);
    }

    #[test]
    fn circulant_minus_neumann_has_rank_n(spec in spec_strategy(3, 2), extra in 0usize..30) {
        let n = spec.degree();
        let size = 2 * n + 1 + extra;
        let per = circulant_periodic(&spec.fourier_coefficients(), size).unwrap();
        let diff = eigenvalues(&per.try_sub(&nn(&spec, size)).unwrap()).unwrap();
        prop_assert_eq!(diff.values().iter().filter(|&&v| v > 1e-8).count(), n);
        prop_assert!(diff.min() >= -1e-10);
    }

    #[test]
    fn grid_shift_keeps_distance(
        angles in prop::collection::vec(0.0..TWO_PI, 1..=5),
        size in 1usize..=200,
    ) {
        let shift = grid_shift(&angles, size);
        let dist = common::exhaustive_grid_distance(&angles, size, shift);
        let bound = TWO_PI / (2f64.powi(angles.len() as i32) * size as f64);
        prop_assert!(dist >= bound * (1.0 - 1e-12));
        prop_assert!(shift > 0.0 && shift <= TWO_PI);
    }

    #[test]
    fn non_admissible_triples_are_rejected(a2 in 0.05..5.0f64, r in 4.01..20.0f64, sign in prop::bool::ANY) {
        let a1 = if sign { a2 * r } else { -a2 * r };
        prop_assert!(decompose_pentadiagonal(1.0, a1, a2).is_err());
    }
}

proptest! {
    #![proptest_config(config(50))]

    #[test]
    fn bracketing_chain_holds(spec in spec_strategy(3, 2), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let symbol = Symbol::from(spec.clone());
        for _ in 0..3 {
            let (l1, l2) = random_split(&mut rng, spec.degree(), 60);
            let norm = toeplitz_finite(&symbol.coefficients(), l1 + l2).unwrap().norm_inf();
            let r = check_bracketing(&symbol, l1, l2, 1e-9 * norm).unwrap();
            prop_assert!(r.all_hold(), "{:?}", r);
        }
    }

    #[test]
    fn pentadiagonal_chain_holds((a0, a1, a2) in admissible_penta(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let symbol = Symbol::pentadiagonal(a0, a1, a2).unwrap();
        let (l1, l2) = random_split(&mut rng, 2, 60);
        let norm = toeplitz_finite(&symbol.coefficients(), l1 + l2).unwrap().norm_inf();
        let r = check_bracketing(&symbol, l1, l2, 1e-9 * norm.max(1.0)).unwrap();
        prop_assert!(r.all_hold(), "{:?}", r);
    }
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn pentadiagonal_round_trip((a0, a1, a2) in admissible_penta()) {
        let d = decompose_pentadiagonal(a0, a1, a2).unwrap();
        let rebuilt = d.reconstruct();
        let expected = BandedCoeffs::pentadiagonal(a0, a1, a2).unwrap();
        for k in -2..=2 {
            prop_assert!((rebuilt.get(k) - expected.get(k)).norm() <= 1e-12);
        }
        // The shift is the infimum of the symbol.
        let min = (0..2000)
            .map(|i| expected.evaluate(TWO_PI * i as f64 / 2000.0).unwrap())
            .fold(f64::INFINITY, f64::min);
        prop_assert!(min >= d.shift - 1e-9 * expected.abs_sum());
        prop_assert!(min - d.shift <= 1e-4 * expected.abs_sum());
    }
}

#[test]
fn laplacian_classic_and_modified_neumann_coincide() {
    let spec = SymbolSpec::new(&[(TWO_PI, 1)]).unwrap();
    let coeffs = spec.fourier_coefficients();
    for size in [3, 4, 7, 12] {
        for side in [Side::Left, Side::Right] {
            let classic = classic_neumann(&coeffs, size, side).unwrap();
            let (left, right) = match side {
                Side::Left => (ModifiedNeumann, BoundaryKind::Simple),
                Side::Right => (BoundaryKind::Simple, ModifiedNeumann),
            };
            let modified = build_restricted(&spec, size, left, right).unwrap();
            assert!(classic.max_abs_diff(&modified).unwrap() <= 1e-15);
        }
    }
}

#[test]
fn laplacian_classic_chain_holds() {
    let symbol = Symbol::from(SymbolSpec::new(&[(0.0, 1)]).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let (l1, l2) = random_split(&mut rng, 1, 40);
        let r = check_bracketing_with(&symbol, l1, l2, 1e-9, NeumannVariant::Classic).unwrap();
        assert!(r.all_hold(), "{r:?}");
    }
}

#[test]
fn random_splits_respect_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4);
        let (a, b) = random_split(&mut rng, n, 60);
        assert!(a > 2 * n && b > 2 * n && a + b <= 60);
    }
}

#[test]
fn modulation_helper_is_unitary_conjugation() {
    let spec = SymbolSpec::new(&[(0.4, 1), (2.0, 2)]).unwrap();
    let t = nn(&spec, 11);
    let back = modulate(&modulate(&t, 1.3), -1.3);
    assert!(back.max_abs_diff(&t).unwrap() <= 1e-12 * t.norm_inf());
}
