use proptest::prelude::*;
use roget_core::pearson;

/// Raw-sum formula: (nΣxy − ΣxΣy) / sqrt((nΣx² − (Σx)²)(nΣy² − (Σy)²)).
fn definitional(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let syy: f64 = ys.iter().map(|y| y * y).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    (n * sxy - sx * sy) / ((n * sxx - sx * sx) * (n * syy - sy * sy)).sqrt()
}

fn vectors() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (2usize..=100).prop_flat_map(|n| {
        (
            proptest::collection::vec(-100.0f64..100.0, n),
            proptest::collection::vec(-100.0f64..100.0, n),
        )
    })
}

#[test]
fn hand_computed_example() {
    // Σdxdy = 5.5, Σdx² = 5, Σdy² = 8.75
    let r = pearson(&[1.0, 2.0, 3.0, 4.0], &[1.0, 3.0, 2.0, 5.0]).unwrap();
    assert_eq!(format!("{r:.2}"), "0.83");
    assert!((r - definitional(&[1.0, 2.0, 3.0, 4.0], &[1.0, 3.0, 2.0, 5.0])).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn matches_definitional_formula((xs, ys) in vectors()) {
        let r = pearson(&xs, &ys).unwrap();
        prop_assert!((r - definitional(&xs, &ys)).abs() < 1e-9);
        prop_assert!((-1.0..=1.0).contains(&r));
        prop_assert!((r - pearson(&ys, &xs).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn affine_invariant((xs, ys) in vectors(), a in 0.1f64..10.0, b in -50.0f64..50.0) {
        let r = pearson(&xs, &ys).unwrap();
        let scaled: Vec<f64> = xs.iter().map(|x| a * x + b).collect();
        prop_assert!((pearson(&scaled, &ys).unwrap() - r).abs() < 1e-12);
    }
}
