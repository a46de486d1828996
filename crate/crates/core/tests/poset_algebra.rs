mod common;

use koszul_core::algebra::{Completeness, IncidenceAlgebra};
use koszul_core::builders::{boolean_lattice, divisor_window, Fixture};
use koszul_core::interval::{Axiom, IntervalEquivalence};
use koszul_core::poset::Poset;
use koszul_core::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn posets() -> impl Strategy<Value = Poset> {
    (any::<u64>(), 1usize..=7, 0.1f64..0.9).prop_map(|(seed, n, density)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::random_poset(&mut rng, n, density)
    })
}

/// Longest chain from `x` to `y` by dynamic programming over `leq`.
fn longest(p: &Poset, x: usize, y: usize) -> Option<usize> {
    if x == y {
        return Some(0);
    }
    (0..p.len())
        .filter(|&z| z != x && p.lt(x, z) && p.leq(z, y))
        .filter_map(|z| longest(p, z, y).map(|l| l + 1))
        .max()
}

fn is_chain(p: &Poset, elements: &[usize]) -> bool {
    elements
        .iter()
        .all(|&a| elements.iter().all(|&b| p.leq(a, b) || p.leq(b, a)))
}

proptest! {
    #[test]
    fn order_is_a_partial_order(p in posets()) {
        let n = p.len();
        for x in 0..n {
            prop_assert!(p.leq(x, x));
            for y in 0..n {
                if x != y {
                    prop_assert!(!(p.leq(x, y) && p.leq(y, x)));
                }
                for z in 0..n {
                    if p.leq(x, y) && p.leq(y, z) {
                        prop_assert!(p.leq(x, z));
                    }
                }
            }
        }
        let comparable = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| p.leq(x, y)).count();
        prop_assert_eq!(p.intervals().len(), comparable);
    }

    #[test]
    fn lengths_and_covers(p in posets()) {
        for iv in p.intervals() {
            prop_assert_eq!(Some(p.interval_length(iv.lo, iv.hi).unwrap()), longest(&p, iv.lo, iv.hi));
            let cover = iv.lo != iv.hi && p.open_elements(iv.lo, iv.hi).is_empty();
            prop_assert_eq!(p.covers(iv.lo, iv.hi), cover);
        }
    }

    #[test]
    fn order_complex_faces_are_chains(p in posets()) {
        let n = p.len();
        let delta = p.order_complex();
        for mask in 1u32..(1 << n) {
            let face: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            prop_assert_eq!(delta.contains(&face), is_chain(&p, &face));
        }
        for chain in p.maximal_chains() {
            prop_assert!(is_chain(&p, &chain));
            let extendable = (0..n).any(|z| !chain.contains(&z) && chain.iter().all(|&c| p.leq(c, z) || p.leq(z, c)));
            prop_assert!(!extendable);
        }
    }

    #[test]
    fn trivial_algebra_is_associative_and_graded_product_adds(p in posets()) {
        let rel = IntervalEquivalence::trivial(&p);
        prop_assert!(rel.validate_axioms().iter().all(|r| r.passed()));
        let a = IncidenceAlgebra::new(rel).unwrap();
        let c = a.num_classes();
        for x in 0..c {
            for y in 0..c {
                let xy = a.product(x, y);
                prop_assert_eq!(xy.is_some(), a.target(x) == a.source(y));
                let gr = a.gr_product(x, y);
                prop_assert_eq!(gr.is_some(), xy.is_some_and(|g| a.length(g) == a.length(x) + a.length(y)));
                for z in 0..c {
                    let left = xy.and_then(|g| a.product(g, z));
                    let right = a.product(y, z).and_then(|g| a.product(x, g));
                    prop_assert_eq!(left, right);
                }
            }
        }
    }
}

#[test]
fn unlabeled_and_complex_counts() {
    let mut by_size = [0; 7];
    for p in common::unlabeled_posets(6) {
        by_size[p.len()] += 1;
    }
    assert_eq!(by_size, [1, 1, 2, 5, 16, 63, 318]);
    let dedekind: Vec<usize> = (0..=5).map(|n| common::all_complexes(n).len()).collect();
    assert_eq!(dedekind, [2, 3, 6, 20, 168, 7581]);
}

#[test]
fn squarefree_window_is_boolean_lattice() {
    for n in 0..=4 {
        let window = divisor_window(&vec![1; n]);
        let b = boolean_lattice(n);
        assert_eq!(window.poset.len(), b.len());
        assert_eq!(window.poset.cover_relations().len(), b.cover_relations().len());
        let rel = window.relation();
        // classes are the differences, i.e. the squarefree monomials
        assert_eq!(rel.num_classes(), 1 << n);
    }
}

#[test]
fn windows_fail_only_concatenation() {
    let window = divisor_window(&[1, 1]);
    let reports = window.relation().validate_axioms();
    let failing: Vec<Axiom> = reports.iter().filter(|r| !r.passed()).map(|r| r.axiom).collect();
    assert_eq!(failing, [Axiom::A4]);
    assert!(matches!(IncidenceAlgebra::new(window.relation()), Err(Error::AxiomViolation(_))));
    let a = IncidenceAlgebra::semigroup_window(window.relation()).unwrap();
    assert_eq!(a.completeness(), Completeness::AmbientSemigroup);
    assert!(a.require_finite().is_err());
}

#[test]
fn fixtures_build_trivial_algebras() {
    for f in Fixture::ALL {
        let p = f.poset();
        assert!(p.height().is_some(), "{}", f.name());
        let a = IncidenceAlgebra::new(IntervalEquivalence::trivial(&p)).unwrap();
        assert_eq!(a.num_classes(), p.intervals().len());
    }
    // maximal chains of different lengths from bottom to top
    assert!(!Fixture::N5.poset().is_graded());
    assert!(!Fixture::Poset8.poset().is_graded());
    assert!(boolean_lattice(3).is_graded());
}
