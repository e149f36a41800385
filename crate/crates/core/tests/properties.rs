mod common;

use common::*;
use dynkin_witt::dynkin::{DynkinDiagram, Letter, Vertex, VertexSet};
use dynkin_witt::picard::ParabolicSubset;
use dynkin_witt::vanishing::{borel_classify, classify, criterion_witnesses};
use dynkin_witt::weights::Weight;
use proptest::prelude::*;

fn pool() -> Vec<DynkinDiagram> {
    let mut v: Vec<DynkinDiagram> = simple_types(8).into_iter().map(|t| diagram(&[t])).collect();
    v.push(diagram(&[(Letter::A, 1), (Letter::A, 1)]));
    v.push(diagram(&[(Letter::A, 2), (Letter::B, 2)]));
    v.push(diagram(&[(Letter::G, 2), (Letter::D, 4)]));
    v
}

/// A diagram plus a ternary decoration and two coefficient vectors.
fn decorated() -> impl Strategy<Value = (DynkinDiagram, VertexSet, VertexSet, Vec<i64>, Vec<i64>)> {
    let diagrams = pool();
    (0..diagrams.len()).prop_flat_map(move |k| {
        let d = diagrams[k].clone();
        let n = d.rank();
        (
            Just(d),
            prop::collection::vec(0u8..3, n),
            prop::collection::vec(-50i64..50, n),
            prop::collection::vec(-50i64..50, n),
        )
            .prop_map(|(d, tern, a, b)| {
                let pick = |t: u8| -> VertexSet {
                    tern.iter()
                        .enumerate()
                        .filter(|(_, &x)| x == t)
                        .map(|(i, _)| Vertex::new(i + 1))
                        .collect()
                };
                let (theta, lambda) = (pick(1), pick(2));
                (d, theta, lambda, a, b)
            })
    })
}

fn support_off(theta: VertexSet, mut c: Vec<i64>) -> Vec<i64> {
    for v in theta.iter() {
        c[v.slot()] = 0;
    }
    c
}

proptest! {
    #[test]
    fn adjacency_symmetric((d, _, _, _, _) in decorated()) {
        for i in d.vertices() {
            for j in d.vertices() {
                prop_assert_eq!(d.adjacent(i, j).unwrap(), d.adjacent(j, i).unwrap());
            }
            prop_assert!(!d.adjacent(i, i).unwrap());
        }
    }

    #[test]
    fn orthogonality_splits_over_unions((d, t1, t2, _, _) in decorated()) {
        for a in d.all_vertices().difference(t1.union(t2)).iter() {
            let whole = d.orthogonal_to_set(a, t1.union(t2)).unwrap();
            let parts = d.orthogonal_to_set(a, t1).unwrap() && d.orthogonal_to_set(a, t2).unwrap();
            prop_assert_eq!(whole, parts);
        }
    }

    #[test]
    fn pairing_is_linear((d, _, _, x, y) in decorated(), a in -20i64..20, b in -20i64..20) {
        let wx = Weight::new(&d, x).unwrap();
        let wy = Weight::new(&d, y).unwrap();
        let combo = wx.checked_scale(a).unwrap().checked_add(&wy.checked_scale(b).unwrap()).unwrap();
        for beta in d.vertices() {
            prop_assert_eq!(
                combo.pairing(beta).unwrap(),
                a * wx.pairing(beta).unwrap() + b * wy.pairing(beta).unwrap()
            );
        }
    }

    #[test]
    fn lambda_and_verdict_stable_mod_two((d, theta, _, x, mu) in decorated()) {
        let p = ParabolicSubset::new(&d, theta).unwrap();
        let l = p.line_bundle(Weight::new(&d, support_off(theta, x)).unwrap()).unwrap();
        let shift = Weight::new(&d, support_off(theta, mu)).unwrap().checked_scale(2).unwrap();
        let shifted = l.checked_add(&shift).unwrap();
        prop_assert_eq!(shifted.lambda(), l.lambda());
        prop_assert_eq!(classify(&shifted), classify(&l));
    }

    #[test]
    fn bijection_with_subsets((d, theta, lambda, _, _) in decorated()) {
        let p = ParabolicSubset::new(&d, theta).unwrap();
        let l = p.lambda_to_class(lambda.into()).unwrap();
        prop_assert_eq!(l.lambda().set(), lambda);
        prop_assert!(l.weight().coeffs().iter().all(|&c| c == 0 || c == 1));
        prop_assert_eq!(p.lambda_to_class(l.lambda()).unwrap(), l);
    }

    #[test]
    fn witnesses_sound_and_complete((d, theta, lambda, _, _) in decorated()) {
        let w = criterion_witnesses(&d, theta, lambda).unwrap();
        prop_assert!(w.is_subset(lambda));
        for a in lambda.iter() {
            let free = theta.iter().all(|b| d.cartan_matrix().entry(a, b) == 0);
            prop_assert_eq!(w.contains(a), free);
        }
        let verdict = classify(&ParabolicSubset::new(&d, theta).unwrap().lambda_to_class(lambda.into()).unwrap());
        if let Some(first) = w.first() {
            prop_assert_eq!(verdict.witness(), Some(first));
        }
    }

    #[test]
    fn witnesses_monotone_when_theta_shrinks((d, theta, lambda, x, _) in decorated()) {
        let w = criterion_witnesses(&d, theta, lambda).unwrap();
        // sub-theta chosen by the sign pattern of x
        let smaller: VertexSet = theta.iter().filter(|v| x[v.slot()] >= 0).collect();
        let w2 = criterion_witnesses(&d, smaller, lambda).unwrap();
        prop_assert!(w.is_subset(w2));
    }

    #[test]
    fn borel_agrees_with_classify((d, _, _, x, _) in decorated()) {
        let l = ParabolicSubset::borel(&d).line_bundle(Weight::new(&d, x).unwrap()).unwrap();
        let b = borel_classify(&l).unwrap();
        prop_assert_eq!(b, classify(&l));
        prop_assert_eq!(b.vanishes(), !l.lambda().is_empty());
    }
}

#[test]
fn witnesses_match_raw_realization_on_small_diagrams() {
    let mut cases: Vec<Vec<(Letter, usize)>> =
        simple_types(4).into_iter().map(|t| vec![t]).collect();
    cases.push(vec![(Letter::A, 1), (Letter::A, 1)]);
    for comps in cases {
        let d = diagram(&comps);
        let roots = realization(&comps);
        for (theta, lambda) in decorations(d.rank()) {
            let got: Vec<usize> = criterion_witnesses(&d, set(&theta), set(&lambda))
                .unwrap()
                .iter()
                .map(Vertex::index)
                .collect();
            assert_eq!(got, brute_witnesses(&roots, &theta, &lambda));
        }
    }
}
