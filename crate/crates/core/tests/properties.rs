use groupwigner::catalog::{catalog, parse_spec};
use groupwigner::io::{from_json, state_from_json, state_to_json, to_json, GroupJson, WignerJson};
use groupwigner::repr::{compute_irreps, IrrepSet};
use groupwigner::wigner::{
    marginal_position, traciality, wigner, wigner_i, wigner_ii, StateVector, Variant,
};
use groupwigner::{build_group, GroupSpec};
use num_complex::Complex64 as C64;
use proptest::prelude::*;
use std::sync::OnceLock;

fn irreps_for(k: usize) -> &'static IrrepSet {
    static SETS: OnceLock<Vec<IrrepSet>> = OnceLock::new();
    &SETS.get_or_init(|| catalog().iter().map(|e| compute_irreps(&e.build()).unwrap()).collect())[k]
}

fn state_strategy(n: usize) -> impl Strategy<Value = StateVector> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n)
        .prop_filter("nonzero", |v| v.iter().map(|(a, b)| a * a + b * b).sum::<f64>() > 1e-3)
        .prop_map(|v| StateVector::normalized(v.into_iter().map(|(a, b)| C64::new(a, b)).collect()).unwrap())
}

fn group_and_states() -> impl Strategy<Value = (usize, StateVector, StateVector)> {
    (0..catalog().len()).prop_flat_map(|k| {
        let n = catalog()[k].order;
        (Just(k), state_strategy(n), state_strategy(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hermitian_with_exact_position_marginal((k, psi, _) in group_and_states()) {
        let irreps = irreps_for(k);
        for variant in [Variant::I, Variant::II] {
            let w = wigner(&psi, irreps, variant).unwrap();
            prop_assert!(w.hermiticity_residual() < 1e-9);
            for (p, z) in marginal_position(&w).iter().zip(&psi.psi) {
                prop_assert!((p - z.norm_sqr()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn overlap_from_phase_space((k, psi, phi) in group_and_states()) {
        let irreps = irreps_for(k);
        let overlap = psi.inner(&phi).norm_sqr();
        for variant in [Variant::I, Variant::II] {
            let t = traciality(&wigner(&phi, irreps, variant).unwrap(), &wigner(&psi, irreps, variant).unwrap()).unwrap();
            prop_assert!((t - overlap).abs() < 1e-9);
        }
    }

    #[test]
    fn wigner_json_round_trip((k, psi, _) in group_and_states()) {
        let irreps = irreps_for(k);
        for w in [wigner_i(&psi, irreps).unwrap(), wigner_ii(&psi, irreps).unwrap()] {
            let back = from_json::<WignerJson>(&to_json(&WignerJson::from_tensor(&w))).unwrap().into_tensor().unwrap();
            prop_assert_eq!(back, w);
        }
    }

    #[test]
    fn state_json_round_trip(v in prop::collection::vec((any::<f64>(), any::<f64>()), 0..30)) {
        let v: Vec<(f64, f64)> = v.into_iter().filter(|(a, b)| a.is_finite() && b.is_finite()).collect();
        let s = StateVector::new(v.iter().map(|&(a, b)| C64::new(a, b)).collect());
        let back = state_from_json(&from_json::<Vec<[f64; 2]>>(&to_json(&state_to_json(&s))).unwrap());
        prop_assert_eq!(back, s);
    }

    #[test]
    fn products_of_cyclic_groups(orders in prop::collection::vec(prop::sample::select(vec![1usize, 3, 5, 7]), 1..4)) {
        let expr = orders.iter().map(|n| format!("C{n}")).collect::<Vec<_>>().join("x");
        let g = build_group(&parse_spec(&expr).unwrap()).unwrap();
        prop_assert_eq!(g.order(), orders.iter().product::<usize>());
        prop_assert!(g.is_abelian() && g.is_odd());
        prop_assert!(groupwigner::verify_sqrt_properties(&g).unwrap().all_pass());
        let json = to_json(&GroupJson::from_group(&g));
        prop_assert_eq!(from_json::<GroupJson>(&json).unwrap().into_group().unwrap(), g);
    }

    #[test]
    fn cyclic_groups_have_linear_irreps(n in (0usize..12).prop_map(|k| 2 * k + 1)) {
        let irreps = compute_irreps(&build_group(&GroupSpec::cyclic(n)).unwrap()).unwrap();
        prop_assert_eq!(irreps.dims(), vec![1; n]);
        let r = groupwigner::repr::irrep_residuals(&irreps);
        prop_assert!(r.max() < 1e-12);
    }
}
