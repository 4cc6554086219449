use num_complex::Complex64;
use proptest::prelude::*;

use cayspec::cayley::{adjacency_in_vertex_order, beta_blocks, color_from_layers, ColorFunction};
use cayspec::group::{gcd, pow_mod, Complement, FiniteGroup};
use cayspec::repr::{builtin_irreps, irreps_cyclic, split_irreps, validate_irrep_set};
use cayspec::spectra::{
    spectrum_blocks, spectrum_cor33, spectrum_normal, spectrum_thm31, Thm31Options,
};
use cayspec::verify::{compare_spectra, verify_spectrum, verify_thm21_reconstruction};

fn metacyclic_params() -> impl Strategy<Value = (usize, usize, usize)> {
    (2usize..=16, 1usize..=6).prop_flat_map(|(m, l)| {
        let rs: Vec<usize> = (1..m)
            .filter(|&r| gcd(r, m) == 1 && pow_mod(r, l, m) == 1)
            .collect();
        (Just(m), Just(l), proptest::sample::select(rs))
    })
}

fn any_group() -> impl Strategy<Value = FiniteGroup> {
    prop_oneof![
        (1usize..=20).prop_map(|n| FiniteGroup::cyclic(n).unwrap()),
        (3usize..=9).prop_map(|n| FiniteGroup::dihedral(n).unwrap()),
        proptest::collection::vec(2usize..=4, 1..=3)
            .prop_map(|o| FiniteGroup::abelian(&o).unwrap()),
        metacyclic_params().prop_map(|(m, l, r)| FiniteGroup::metacyclic(m, l, r).unwrap()),
    ]
}

fn with_color(g: FiniteGroup) -> impl Strategy<Value = (FiniteGroup, ColorFunction)> {
    let n = g.order();
    proptest::collection::vec((-3i32..=3, -3i32..=3), n).prop_map(move |vals| {
        let alpha = ColorFunction::from_values(
            vals.into_iter()
                .map(|(a, b)| Complex64::new(a as f64, b as f64))
                .collect(),
        );
        (g.clone(), alpha)
    })
}

fn multiplier_orbits(m: usize, r: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for s in 0..m {
        let mut orbit = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = x * r % m;
        }
        if !orbit.is_empty() {
            out.push(orbit);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn group_axioms(g in any_group(), seed in any::<u64>()) {
        let n = g.order();
        let (x, y, z) = ((seed % n as u64) as usize, ((seed >> 16) % n as u64) as usize, ((seed >> 32) % n as u64) as usize);
        prop_assert_eq!(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
        prop_assert_eq!(g.mul(x, g.inv(x)), g.identity());
        prop_assert_eq!(g.mul(g.identity(), x), x);
        // canonical encodings round-trip
        prop_assert_eq!(g.index_of(&g.element(x)).unwrap(), x);
    }

    #[test]
    fn class_sizes_partition_and_divide(g in any_group()) {
        let classes = g.conjugacy_classes();
        let total: usize = classes.iter().map(|c| c.size()).sum();
        prop_assert_eq!(total, g.order());
        for c in &classes {
            prop_assert_eq!(g.order() % c.size(), 0);
        }
        if let Some(irreps) = builtin_irreps(&g) {
            prop_assert_eq!(irreps.len(), classes.len());
        }
    }

    #[test]
    fn builtin_irreps_validate(g in any_group()) {
        let irreps = builtin_irreps(&g).unwrap();
        let report = validate_irrep_set(&g, &irreps);
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn block_decomposition_reassembles((g, alpha) in any_group().prop_flat_map(with_color)) {
        let blocks = beta_blocks(&g, &alpha).unwrap();
        let adj = adjacency_in_vertex_order(&g, &alpha);
        prop_assert_eq!(blocks.reassemble(), adj.matrix);
    }

    #[test]
    fn adjacency_rows_sum_to_total_weight((g, alpha) in any_group().prop_flat_map(with_color)) {
        let adj = adjacency_in_vertex_order(&g, &alpha);
        let total: Complex64 = alpha.values().iter().sum();
        for i in 0..g.order() {
            let row: Complex64 = adj.matrix.row(i).iter().sum();
            let col: Complex64 = adj.matrix.column(i).iter().sum();
            prop_assert!((row - total).norm() < 1e-12);
            prop_assert!((col - total).norm() < 1e-12);
        }
    }

    #[test]
    fn hermitian_iff_symmetric((g, alpha) in any_group().prop_flat_map(with_color)) {
        let adj = adjacency_in_vertex_order(&g, &alpha);
        prop_assert_eq!(adj.is_hermitian(), alpha.is_symmetric(&g));
    }

    #[test]
    fn reconstruction_is_exact((g, alpha) in any_group().prop_flat_map(with_color)) {
        let irreps = builtin_irreps(&g).unwrap();
        prop_assert!(verify_thm21_reconstruction(&g, &alpha, &irreps).unwrap() < 1e-10);
    }

    #[test]
    fn cor33_certified_and_matches_dense_solver(
        (m, l, r) in metacyclic_params(),
        picks in proptest::collection::vec(any::<u32>(), 6),
    ) {
        let orbits = multiplier_orbits(m, r);
        let layers: Vec<Vec<usize>> = (0..l)
            .map(|t| {
                let mut layer: Vec<usize> = orbits
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| picks[t] >> (i % 32) & 1 == 1)
                    .flat_map(|(_, o)| o.iter().copied())
                    .collect();
                layer.sort_unstable();
                layer
            })
            .collect();
        let g = FiniteGroup::metacyclic(m, l, r).unwrap();
        let alpha = color_from_layers(&g, &layers).unwrap();
        let s = spectrum_cor33(m, l, r, &layers, true).unwrap();
        let report = verify_spectrum(&g, &alpha, &s, 1e-9).unwrap();
        prop_assert!(report.passed, "{}", report);
        // Hermitian part: compare against the dense solver when symmetric
        if alpha.is_symmetric(&g) {
            let adj = adjacency_in_vertex_order(&g, &alpha);
            let mut dense: Vec<f64> = adj.matrix.symmetric_eigen().eigenvalues.iter().copied().collect();
            dense.sort_by(f64::total_cmp);
            let mut ours: Vec<f64> = s.eigenvalues().iter().map(|z| z.re).collect();
            ours.sort_by(f64::total_cmp);
            for (a, b) in dense.iter().zip(&ours) {
                prop_assert!((a - b).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn blocks_agree_with_normal_formula_on_class_functions(
        g in prop_oneof![
            (3usize..=12).prop_map(|n| FiniteGroup::dihedral(n).unwrap()),
            (1usize..=24).prop_map(|n| FiniteGroup::cyclic(n).unwrap()),
        ],
        mask in any::<u64>(),
    ) {
        let classes = g.conjugacy_classes();
        let set: Vec<usize> = classes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .flat_map(|(_, c)| c.members.iter().copied())
            .collect();
        let alpha = ColorFunction::from_set(&g, &set);
        let irreps = builtin_irreps(&g).unwrap();
        let a = spectrum_normal(&g, &alpha, &irreps, false).unwrap();
        let b = spectrum_blocks(&g, &alpha, &irreps, true).unwrap();
        prop_assert!(compare_spectra(&a, &b, 1e-9).unwrap().equal);
        prop_assert!(verify_spectrum(&g, &alpha, &b, 1e-9).unwrap().passed);
    }

    #[test]
    fn blocks_certify_arbitrary_symmetric_colors(n in 3usize..=9, mask in any::<u64>()) {
        let g = FiniteGroup::dihedral(n).unwrap();
        let mut alpha = ColorFunction::zero(g.order());
        for x in 0..g.order() {
            if mask >> (x % 64) & 1 == 1 {
                alpha.set(x, Complex64::new(1.0, 0.0));
                alpha.set(g.inv(x), Complex64::new(1.0, 0.0));
            }
        }
        let irreps = builtin_irreps(&g).unwrap();
        let s = spectrum_blocks(&g, &alpha, &irreps, true).unwrap();
        let report = verify_spectrum(&g, &alpha, &s, 1e-9).unwrap();
        prop_assert!(report.passed, "{}", report);
    }

    #[test]
    fn thm31_multiplicities_sum_to_order(
        m in 2usize..=9,
        n in 3usize..=5,
        invert in any::<bool>(),
        mask in any::<u64>(),
    ) {
        // reflections invert K or act trivially; rotations trivially
        let action = [1, if invert { m - 1 } else { 1 }];
        let g = FiniteGroup::semidirect(m, Complement::Dihedral(n), &action).unwrap();
        let split = g.split().unwrap();
        // unions of G-orbits in K, placed on H-classes: satisfies both conditions
        let orbits = g.conjugation_orbits_on_k().unwrap();
        let classes = g.complement_classes().unwrap();
        let mut alpha = ColorFunction::zero(g.order());
        let mut bit = 0;
        for class in &classes {
            for orbit in &orbits {
                if mask >> (bit % 64) & 1 == 1 {
                    for &a in &class.members {
                        for &k in orbit {
                            alpha.set(g.mul(split.h[a], k), Complex64::new(1.0, 0.0));
                        }
                    }
                }
                bit += 1;
            }
        }
        let (ih, ik) = split_irreps(&g).unwrap();
        let opts = Thm31Options { eigenvectors: true, cross_check_representatives: true, ..Default::default() };
        let s = spectrum_thm31(&g, &alpha, &ih, &ik, opts).unwrap();
        prop_assert_eq!(s.total_multiplicity(), g.order());
        let report = verify_spectrum(&g, &alpha, &s, 1e-9).unwrap();
        prop_assert!(report.passed, "{}", report);
    }

    #[test]
    fn cyclic_character_sums((n, mask) in (1usize..=30, any::<u32>())) {
        let g = FiniteGroup::cyclic(n).unwrap();
        let set: Vec<usize> = (0..n).filter(|&x| mask >> (x % 32) & 1 == 1).collect();
        let alpha = ColorFunction::from_set(&g, &set);
        let s = spectrum_normal(&g, &alpha, &irreps_cyclic(n), false).unwrap();
        for (v, line) in s.lines.iter().enumerate() {
            let direct: Complex64 = set
                .iter()
                .map(|&x| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (v * x) as f64 / n as f64))
                .sum();
            prop_assert!((line.eigenvalue - direct).norm() < 1e-10);
        }
    }
}
