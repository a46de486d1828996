//! Enumerators and random generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use koszul_core::algebra::IncidenceAlgebra;
use koszul_core::koszul::MonomialRightIdeal;
use koszul_core::poset::Poset;
use koszul_core::simplicial::SimplicialComplex;
use rand::Rng;

/// Strict order relation as a bitmask: bit `i * n + j` set when `i < j`.
type Relation = u64;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(rel: Relation, n: usize, perms: &[Vec<usize>]) -> Relation {
    perms
        .iter()
        .map(|p| {
            let mut r = 0;
            for i in 0..n {
                for j in 0..n {
                    if rel >> (i * n + j) & 1 == 1 {
                        r |= 1 << (p[i] * n + p[j]);
                    }
                }
            }
            r
        })
        .min()
        .unwrap_or(0)
}

/// Re-indexes a relation on `n` elements as one on `n + 1`.
fn widen(rel: Relation, n: usize) -> Relation {
    let mut r = 0;
    for i in 0..n {
        for j in 0..n {
            if rel >> (i * n + j) & 1 == 1 {
                r |= 1 << (i * (n + 1) + j);
            }
        }
    }
    r
}

/// One poset from each isomorphism class on `0..=max` elements (`max ≤ 8`),
/// built by repeatedly adding a maximal element above a down-set.
pub fn unlabeled_posets(max: usize) -> Vec<Poset> {
    assert!(max <= 8);
    let mut out = vec![poset_of(0, 0)];
    let mut level: BTreeSet<Relation> = BTreeSet::from([0]);
    for n in 0..max {
        let perms = permutations(n + 1);
        let mut next = BTreeSet::new();
        for &rel in &level {
            for below in 0u64..(1 << n) {
                let down_closed = (0..n).all(|j| {
                    below >> j & 1 == 0 || (0..n).all(|i| rel >> (i * n + j) & 1 == 0 || below >> i & 1 == 1)
                });
                if !down_closed {
                    continue;
                }
                let mut r = widen(rel, n);
                for i in 0..n {
                    if below >> i & 1 == 1 {
                        r |= 1 << (i * (n + 1) + n);
                    }
                }
                next.insert(canonical(r, n + 1, &perms));
            }
        }
        out.extend(next.iter().map(|&r| poset_of(r, n + 1)));
        level = next;
    }
    out
}

fn poset_of(rel: Relation, n: usize) -> Poset {
    let names = (1..=n).map(|i| i.to_string()).collect();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| rel >> (i * n + j) & 1 == 1)
        .collect();
    Poset::from_index_relations(names, &pairs).expect("acyclic")
}

/// A random poset on `n` elements: each pair `i < j` of a hidden linear
/// order is related with probability `density`, then closed transitively.
pub fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    let names = (1..=n).map(|i| i.to_string()).collect();
    Poset::from_index_relations(names, &pairs).expect("acyclic")
}

/// A random bounded poset on `n ≥ 2` elements: a bottom, a top, and the
/// rest spread over a few ranks, each covering something in the rank below.
/// Long open intervals make gallery disconnection likely.
pub fn random_layered_poset(rng: &mut impl Rng, n: usize) -> Poset {
    let depth = rng.gen_range(1..=3);
    let ranks: Vec<usize> = (1..n - 1).map(|_| rng.gen_range(1..=depth)).collect();
    let mut pairs = Vec::new();
    for (j, &rj) in ranks.iter().enumerate() {
        pairs.push((0, j + 1));
        pairs.push((j + 1, n - 1));
        let below: Vec<usize> = (0..ranks.len()).filter(|&i| ranks[i] + 1 == rj).collect();
        if below.is_empty() {
            continue;
        }
        pairs.push((below[rng.gen_range(0..below.len())] + 1, j + 1));
        for &i in &below {
            if rng.gen_bool(0.15) {
                pairs.push((i + 1, j + 1));
            }
        }
    }
    if n == 2 {
        pairs.push((0, 1));
    }
    let names = (1..=n).map(|i| i.to_string()).collect();
    Poset::from_index_relations(names, &pairs).expect("acyclic")
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn faces_of(masks: &[u32], n: usize) -> Vec<Vec<usize>> {
    masks
        .iter()
        .map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect()
}

/// Every simplicial complex on the vertex universe `1..=n`, including the
/// void complex and `{∅}`: one per antichain of subsets.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    fn go(next: u32, limit: u32, chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if next == limit {
            out.push(chosen.clone());
            return;
        }
        go(next + 1, limit, chosen, out);
        if chosen.iter().all(|&c| c & next != c && c & next != next) {
            chosen.push(next);
            go(next + 1, limit, chosen, out);
            chosen.pop();
        }
    }
    let mut antichains = Vec::new();
    go(0, 1 << n, &mut Vec::new(), &mut antichains);
    antichains
        .into_iter()
        .map(|a| {
            if a.is_empty() {
                SimplicialComplex::void(labels(n))
            } else {
                SimplicialComplex::new(labels(n), faces_of(&a, n))
            }
        })
        .collect()
}

/// A random complex on `1..=n` generated by a few random faces; never void.
pub fn random_complex(rng: &mut impl Rng, n: usize) -> SimplicialComplex {
    let count = rng.gen_range(1..=n.max(1) + 2);
    let masks: Vec<u32> = (0..count).map(|_| rng.gen_range(0..1u32 << n)).collect();
    SimplicialComplex::new(labels(n), faces_of(&masks, n))
}

/// A right ideal generated by a random nonempty set of positive classes, or
/// `None` when the algebra has none.
pub fn random_ideal(rng: &mut impl Rng, algebra: &IncidenceAlgebra) -> Option<MonomialRightIdeal> {
    let positive = algebra.positive_classes();
    if positive.is_empty() {
        return None;
    }
    let count = rng.gen_range(1..=positive.len().min(3));
    let gens: Vec<usize> = (0..count).map(|_| positive[rng.gen_range(0..positive.len())]).collect();
    Some(MonomialRightIdeal::from_generators(algebra, &gens).expect("positive generators"))
}
