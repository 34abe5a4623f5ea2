use cmt_core::bigraph::{is_unmixed, BipartiteGraph};
use cmt_core::classify::classify;
use cmt_core::complex::independence_complex;
use cmt_core::construct::{contract, expand, expanded_codim, predicted_codim, Expansion};
use cmt_core::enumerate::{canonical_form, enumerate_cm, enumerate_unmixed};

/// All vectors in `{1..=max}^d`.
fn vectors(d: usize, max: usize) -> Vec<Vec<usize>> {
    (0..d).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                (1..=max).map(move |n| {
                    let mut w = v.clone();
                    w.push(n);
                    w
                })
            })
            .collect()
    })
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort();
    v
}

#[test]
fn expansion_of_unmixed_bases_stays_unmixed() {
    for d in 1..=3 {
        for base in enumerate_unmixed(d).unwrap() {
            for m in vectors(d, 3) {
                let g = expand(&Expansion::new(base.clone(), m.clone()).unwrap()).unwrap().graph;
                assert!(is_unmixed(&g).unwrap(), "{base:?} {m:?}");
            }
        }
    }
}

#[test]
fn contract_inverts_expand() {
    for dim in 0..=2 {
        for base in enumerate_cm(dim).unwrap() {
            for m in vectors(dim + 1, 3) {
                let e = Expansion::new(base.clone(), m.clone()).unwrap();
                let back = contract(&expand(&e).unwrap().graph).unwrap();
                assert_eq!(canonical_form(back.base()).unwrap(), canonical_form(&base).unwrap());
                assert_eq!(sorted(back.multiplicities().to_vec()), sorted(m.clone()));
                if e.total() > 8 {
                    continue;
                }
                let again = expand(&back).unwrap().graph;
                assert_eq!(canonical_form(&again).unwrap(), canonical_form(&expand(&e).unwrap().graph).unwrap());
            }
        }
    }
}

#[test]
fn predicted_codim_matches_both_paths() {
    let mut checked = 0;
    for dim in 0..=2 {
        for base in enumerate_cm(dim).unwrap() {
            for m in vectors(dim + 1, 4).into_iter().filter(|m| m.iter().sum::<usize>() <= 5) {
                let e = Expansion::new(base.clone(), m).unwrap();
                let g = expand(&e).unwrap().graph;
                let predicted = predicted_codim(&e).unwrap();
                assert_eq!(classify(&g).unwrap().t_sharp, Some(predicted));
                assert_eq!(independence_complex(&g).cm_codim(), Some(predicted));
                assert_eq!(expanded_codim(&e).unwrap(), predicted);
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn contraction_base_is_unique() {
    // contract compares representative choices itself and errors on a mismatch
    for d in 1..=4 {
        for g in enumerate_unmixed(d).unwrap() {
            let e = contract(&g).unwrap();
            assert!(independence_complex(e.base()).is_cohen_macaulay());
            assert_eq!(e.total(), d);
        }
    }
}

#[test]
fn expanded_names_follow_the_base() {
    let base = BipartiteGraph::indexed(2, [(0, 0), (0, 1), (1, 1)]).unwrap();
    let g = expand(&Expansion::new(base, vec![2, 1]).unwrap()).unwrap().graph;
    assert_eq!(g.left(), ["x1_1", "x1_2", "x2_1"]);
    assert_eq!(g.right(), ["y1_1", "y1_2", "y2_1"]);
    assert_eq!(g.num_edges(), 4 + 2 + 1);
}
