use cmt_core::bigraph::BipartiteGraph;
use cmt_core::complex::{independence_complex, SimplicialComplex};
use cmt_core::enumerate::{enumerate_cm, enumerate_unmixed};

fn named(facets: &[&[&str]]) -> SimplicialComplex {
    let mut vertices: Vec<&str> = facets.iter().flat_map(|f| f.iter().copied()).collect();
    vertices.sort();
    vertices.dedup();
    let facets: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_facets(vertices, &facets).unwrap()
}

fn ind(g: &BipartiteGraph, prefix: &str) -> SimplicialComplex {
    independence_complex(&g.with_prefix(prefix).unwrap())
}

/// Small complexes on at most four vertices, Cohen-Macaulay or not.
fn pool(prefix: &str) -> Vec<SimplicialComplex> {
    let mut out: Vec<SimplicialComplex> =
        [1, 2].into_iter().flat_map(|d| enumerate_unmixed(d).unwrap()).map(|g| ind(&g, prefix)).collect();
    let p = |s: &str| format!("{prefix}{s}");
    let (a, b, c, d) = (p("a"), p("b"), p("c"), p("d"));
    let (a, b, c, d) = (a.as_str(), b.as_str(), c.as_str(), d.as_str());
    out.push(named(&[&[a, b], &[b, c], &[a, c]]));
    out.push(named(&[&[a, b], &[c, d]]));
    out.push(named(&[&[a, b], &[c]]));
    out.push(named(&[&[a], &[b], &[c]]));
    out.push(named(&[&[a, b, c], &[c, d]]));
    out
}

fn dim_plus_one(c: &SimplicialComplex) -> usize {
    (c.dim().unwrap() + 1) as usize
}

#[test]
fn join_is_cohen_macaulay_iff_both_are() {
    for a in pool("p") {
        for b in pool("q") {
            let j = a.join(&b).unwrap();
            assert_eq!(j.is_cohen_macaulay(), a.is_cohen_macaulay() && b.is_cohen_macaulay(), "{a:?} * {b:?}");
        }
    }
}

#[test]
fn join_with_cohen_macaulay_factor_is_sharp() {
    let cm: Vec<SimplicialComplex> = pool("p").into_iter().filter(|c| c.is_cohen_macaulay()).collect();
    let strict: Vec<SimplicialComplex> = pool("q")
        .into_iter()
        .filter(|c| c.cm_codim().is_some_and(|r| r >= 1))
        .chain([ind(&BipartiteGraph::complete(2).unwrap(), "q")])
        .collect();
    assert!(!cm.is_empty() && !strict.is_empty());
    for a in &cm {
        for b in &strict {
            let r = b.cm_codim().unwrap();
            let j = a.join(b).unwrap();
            assert!(j.vertices().len() <= 8);
            assert_eq!(j.cm_codim(), Some(dim_plus_one(a) + r), "{a:?} * {b:?}");
        }
    }
}

#[test]
fn join_of_two_non_cohen_macaulay_factors_is_bounded() {
    let strict = |prefix: &str| -> Vec<SimplicialComplex> {
        pool(prefix).into_iter().filter(|c| c.cm_codim().is_some_and(|r| r >= 1)).collect()
    };
    let mut checked = 0;
    for a in strict("p") {
        for b in strict("q") {
            let (d, r) = (dim_plus_one(&a), a.cm_codim().unwrap());
            let (d2, r2) = (dim_plus_one(&b), b.cm_codim().unwrap());
            let t = a.join(&b).unwrap().cm_codim().unwrap();
            assert!(t <= (d + r2).max(d2 + r));
            assert!(r + d2 <= t && r2 + d <= t);
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn impure_factor_makes_an_impure_join() {
    let a = named(&[&["a", "b"], &["c"]]);
    let b = named(&[&["d"]]);
    assert_eq!(a.join(&b).unwrap().cm_codim(), None);
}

#[test]
fn euler_poincare_and_recursion_on_small_graphs() {
    let graphs =
        (1..=3).flat_map(|d| enumerate_unmixed(d).unwrap()).chain((0..=3).flat_map(|k| enumerate_cm(k).unwrap()));
    for g in graphs {
        let c = independence_complex(&g);
        assert_eq!(c.reduced_homology().euler_characteristic(), c.reduced_euler_characteristic());
        assert_eq!(c.cm_codim(), c.cm_codim_recursive(), "{g:?}");
        for v in c.vertices() {
            let l = c.link(&[v.as_str()]).unwrap();
            assert_eq!(l.reduced_homology().euler_characteristic(), l.reduced_euler_characteristic());
            assert_eq!(l.cm_codim(), l.cm_codim_recursive());
        }
    }
}
