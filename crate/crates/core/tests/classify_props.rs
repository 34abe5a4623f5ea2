use std::collections::HashMap;

use cmt_core::bigraph::BipartiteGraph;
use cmt_core::classify::{classify, disjoint_union_codim, verify_exhaustive};
use cmt_core::complex::independence_complex;
use cmt_core::enumerate::enumerate_unmixed;

fn unmixed_up_to(d: usize) -> Vec<BipartiteGraph> {
    (1..=d).flat_map(|k| enumerate_unmixed(k).unwrap()).collect()
}

#[test]
fn structural_and_homological_codims_agree() {
    for d in 2..=4 {
        let run = verify_exhaustive(d).unwrap();
        assert!(run.instances > 0);
        assert!(run.all_agree(), "d={d}: {:?}", run.counterexamples);
    }
}

#[test]
fn dimension_matches_the_complex() {
    for g in unmixed_up_to(4) {
        let c = classify(&g).unwrap();
        assert_eq!(c.dimension, Some(independence_complex(&g).dim().unwrap()));
        assert_eq!(c.d.unwrap() as i64 - 1, c.dimension.unwrap());
    }
}

#[test]
fn macaulay_witness_orders_every_edge() {
    let mut witnesses = 0;
    for g in unmixed_up_to(4) {
        let c = classify(&g).unwrap();
        let Some(order) = c.macaulay_order else { continue };
        witnesses += 1;
        let mut position: HashMap<&str, usize> = HashMap::new();
        for (p, x) in order.iter().enumerate() {
            let (_, y) = c.pure_order.as_ref().unwrap().iter().find(|(px, _)| px == x).unwrap();
            position.insert(x, p);
            position.insert(y, p);
        }
        for (i, j) in g.edges() {
            assert!(position[g.left()[i].as_str()] <= position[g.right()[j].as_str()], "{g:?}");
        }
        assert!(independence_complex(&g).is_cohen_macaulay());
        assert_eq!(c.t_sharp, Some(0));
    }
    assert!(witnesses > 0);
}

#[test]
fn buchsbaum_iff_complete_or_cohen_macaulay() {
    for g in unmixed_up_to(4) {
        let oracle_buchsbaum = independence_complex(&g).cm_codim().unwrap() <= 1;
        let c = classify(&g).unwrap();
        let complete = g.is_complete_bipartite() && g.left().len() >= 2;
        assert_eq!(oracle_buchsbaum, complete || c.macaulay_order.is_some(), "{g:?}");
    }
}

#[test]
fn disjoint_union_arithmetic_matches_oracle() {
    let graphs = unmixed_up_to(3);
    let mut sharp_cases = 0;
    for a in &graphs {
        for b in &graphs {
            let u = a.with_prefix("a").unwrap().disjoint_union(&b.with_prefix("b").unwrap()).unwrap();
            let (ca, cb) = (classify(a).unwrap(), classify(b).unwrap());
            let predicted = disjoint_union_codim(
                ca.d.unwrap() as i64,
                ca.t_sharp.unwrap() as i64,
                cb.d.unwrap() as i64,
                cb.t_sharp.unwrap() as i64,
            )
            .unwrap();
            let actual = independence_complex(&u).cm_codim().unwrap();
            if predicted.sharp {
                sharp_cases += 1;
                assert_eq!(actual, predicted.value, "{a:?} + {b:?}");
            } else {
                assert!(actual <= predicted.value, "{a:?} + {b:?}");
            }
            assert_eq!(classify(&u).unwrap().t_sharp, Some(actual));
        }
    }
    assert!(sharp_cases > 0);
}

#[test]
fn union_arithmetic_rejects_bad_input() {
    assert!(disjoint_union_codim(0, 0, 1, 0).is_err());
    assert!(disjoint_union_codim(1, -1, 1, 0).is_err());
    assert_eq!(disjoint_union_codim(1, 0, 2, 1).unwrap().value, 2);
}
