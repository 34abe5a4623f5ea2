use cmt_core::bigraph::{cross_blocks, find_pure_order, is_unmixed, parse_graph, write_graph, BipartiteGraph};
use cmt_core::complex::independence_complex;
use proptest::prelude::*;

fn names(prefix: char, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

fn graph(l: usize, r: usize, bits: u64) -> BipartiteGraph {
    let adj = (0..l).map(|i| bits >> (i * r) & ((1 << r) - 1)).collect();
    BipartiteGraph::from_adjacency(names('x', l), names('y', r), adj).unwrap()
}

fn arb_graph() -> impl Strategy<Value = BipartiteGraph> {
    (1..=4usize, 1..=4usize, any::<u64>()).prop_map(|(l, r, bits)| graph(l, r, bits))
}

/// Graphs with `d` pairs containing the matching `x_i y_i`, so isolated vertices never occur.
fn arb_matched() -> impl Strategy<Value = BipartiteGraph> {
    (1..=4usize, any::<u64>()).prop_map(|(d, bits)| {
        let adj = (0..d).map(|i| bits >> (i * d) & ((1 << d) - 1) | 1 << i).collect();
        BipartiteGraph::from_adjacency(names('x', d), names('y', d), adj).unwrap()
    })
}

/// Every labeled graph with `d` pairs and the identity matching.
fn all_matched(d: usize) -> impl Iterator<Item = BipartiteGraph> {
    (0u64..1 << (d * d)).map(move |bits| {
        let adj = (0..d).map(|i| bits >> (i * d) & ((1 << d) - 1) | 1 << i).collect();
        BipartiteGraph::from_adjacency(names('x', d), names('y', d), adj).unwrap()
    })
}

/// Both pure-order conditions, checked from scratch.
fn independently_valid(g: &BipartiteGraph, pairs: &[(usize, usize)]) -> bool {
    let d = pairs.len();
    let xs: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let ys: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    let mut sx = xs.clone();
    sx.sort();
    let mut sy = ys.clone();
    sy.sort();
    let matching = sx == (0..g.left().len()).collect::<Vec<_>>()
        && sy == (0..g.right().len()).collect::<Vec<_>>()
        && pairs.iter().all(|&(x, y)| g.has_edge(x, y));
    let e = |i: usize, j: usize| g.has_edge(xs[i], ys[j]);
    let transitive =
        (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| i == j || j == k || i == k || !(e(i, j) && e(j, k)) || e(i, k))));
    matching && transitive
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn pure_orders_pass_an_independent_check(g in arb_matched()) {
        if let Some(po) = find_pure_order(&g).unwrap() {
            prop_assert!(independently_valid(&g, po.pairs()));
        }
    }

    #[test]
    fn search_order_does_not_matter(g in arb_matched()) {
        prop_assert_eq!(
            find_pure_order(&g).unwrap().is_some(),
            find_pure_order(&g.reversed()).unwrap().is_some()
        );
        prop_assert_eq!(is_unmixed(&g).unwrap(), is_unmixed(&g.transpose()).unwrap());
    }

    #[test]
    fn blocks_are_maximal_complete_subgraphs(g in arb_matched()) {
        let Some(po) = find_pure_order(&g).unwrap() else { return Ok(()) };
        let pairs = po.pairs();
        let complete = |idx: &[usize]| idx.iter().all(|&i| idx.iter().all(|&j| g.has_edge(pairs[i].0, pairs[j].1)));
        let blocks = cross_blocks(&g, &po).unwrap();
        for block in blocks.blocks() {
            let edges = block.iter().flat_map(|&i| block.iter().map(move |&j| (i, j)))
                .filter(|&(i, j)| g.has_edge(pairs[i].0, pairs[j].1)).count();
            prop_assert_eq!(edges, block.len() * block.len());
            for extra in (0..pairs.len()).filter(|k| !block.contains(k)) {
                let mut grown = block.clone();
                grown.push(extra);
                prop_assert!(!complete(&grown));
            }
        }
        let mut covered: Vec<usize> = blocks.blocks().concat();
        covered.sort();
        prop_assert_eq!(covered, (0..pairs.len()).collect::<Vec<_>>());
    }

    #[test]
    fn link_is_independence_complex_of_deleted_neighbourhood(g in arb_graph(), pick in any::<prop::sample::Index>()) {
        let all: Vec<String> = g.left().iter().chain(g.right()).cloned().collect();
        let v = &all[pick.index(all.len())];
        let lhs = independence_complex(&g.delete_closed_neighborhood(v).unwrap());
        let rhs = independence_complex(&g).link(&[v.as_str()]).unwrap();
        prop_assert_eq!(lhs.facet_set(), rhs.facet_set());
    }

    #[test]
    fn text_round_trip(g in arb_graph()) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }
}

#[test]
fn unmixed_matches_oracle_purity_exhaustively() {
    for d in 1..=4 {
        for g in all_matched(d) {
            assert_eq!(is_unmixed(&g).unwrap(), independence_complex(&g).is_pure(), "{g:?}");
        }
    }
}

#[test]
fn unequal_sides_are_mixed() {
    let g = BipartiteGraph::new(["x1", "x2"], ["y1"], &[("x1", "y1"), ("x2", "y1")]).unwrap();
    assert!(!is_unmixed(&g).unwrap());
    assert!(!independence_complex(&g).is_pure());
}
