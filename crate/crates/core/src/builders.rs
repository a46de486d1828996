//! Named fixture posets and intervals of pointed affine semigroups.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::interval::IntervalEquivalence;
use crate::poset::{Poset, BOTTOM, TOP};

/// The chain `1 < 2 < … < n`.
pub fn chain(n: usize) -> Poset {
    let names = (1..=n).map(|i| i.to_string()).collect();
    let relations: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Poset::from_index_relations(names, &relations).expect("a chain is acyclic")
}

/// Subsets of `{1..n}` as squarefree monomials, ordered by divisibility.
pub fn boolean_lattice(n: usize) -> Poset {
    divisor_window(&vec![1; n]).poset
}

/// The poset of monomials dividing `x^exponents`, with its coordinates.
pub fn divisor_window(exponents: &[i64]) -> SemigroupPoset {
    let n = exponents.len();
    let generators = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    SemigroupSpec::new(generators, exponents.to_vec())
        .expect("standard basis is pointed")
        .interval()
}

/// Fixture posets shipped with the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// Eight elements, twelve covers; its open interval `(1,8)` is a
    /// 4-cycle plus two isolated points.
    Poset8,
    /// The pentagon `0^ < a < b < 1^`, `0^ < c < 1^`.
    N5,
    /// `0^ < a, b < 1^`.
    Diamond,
    /// Two chains `0^ < a < b < 1^` and `0^ < c < d < 1^`.
    DoubleChain,
    /// Rank 4 with three elements in each middle rank and hexagonal cover
    /// graphs between them: every open interval is gallery connected, yet
    /// `Δ(0^,1^)` has one-dimensional homology in its top layer.
    QuadraticNotKoszul,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [
        Fixture::Poset8,
        Fixture::N5,
        Fixture::Diamond,
        Fixture::DoubleChain,
        Fixture::QuadraticNotKoszul,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Poset8 => "POSET8",
            Fixture::N5 => "N5",
            Fixture::Diamond => "DIAMOND",
            Fixture::DoubleChain => "DBLCHAIN",
            Fixture::QuadraticNotKoszul => "QUADNK",
        }
    }

    pub fn from_name(name: &str) -> Result<Fixture> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::UnknownFixture(name.to_string()))
    }

    pub fn poset(self) -> Poset {
        let (elements, covers): (&[&str], &[(&str, &str)]) = match self {
            Fixture::Poset8 => (
                &["1", "2", "3", "4", "5", "6", "7", "8"],
                &[
                    ("1", "2"), ("1", "3"), ("1", "6"), ("1", "7"),
                    ("2", "4"), ("2", "5"), ("3", "4"), ("3", "5"),
                    ("4", "8"), ("5", "8"), ("6", "8"), ("7", "8"),
                ],
            ),
            Fixture::N5 => (
                &[BOTTOM, "a", "b", "c", TOP],
                &[(BOTTOM, "a"), ("a", "b"), ("b", TOP), (BOTTOM, "c"), ("c", TOP)],
            ),
            Fixture::Diamond => (
                &[BOTTOM, "a", "b", TOP],
                &[(BOTTOM, "a"), (BOTTOM, "b"), ("a", TOP), ("b", TOP)],
            ),
            Fixture::DoubleChain => (
                &[BOTTOM, "a", "b", "c", "d", TOP],
                &[
                    (BOTTOM, "a"), ("a", "b"), ("b", TOP),
                    (BOTTOM, "c"), ("c", "d"), ("d", TOP),
                ],
            ),
            Fixture::QuadraticNotKoszul => (
                &[BOTTOM, "a1", "a2", "a3", "b1", "b2", "b3", "c1", "c2", "c3", TOP],
                &[
                    (BOTTOM, "a1"), (BOTTOM, "a2"), (BOTTOM, "a3"),
                    ("a1", "b2"), ("a1", "b3"), ("a2", "b1"),
                    ("a2", "b3"), ("a3", "b1"), ("a3", "b2"),
                    ("b1", "c1"), ("b1", "c2"), ("b2", "c1"),
                    ("b2", "c3"), ("b3", "c2"), ("b3", "c3"),
                    ("c1", TOP), ("c2", TOP), ("c3", TOP),
                ],
            ),
        };
        Poset::from_covers(elements, covers).expect("fixture is a valid poset")
    }
}

pub fn named_fixture(name: &str) -> Result<Poset> {
    Fixture::from_name(name).map(Fixture::poset)
}

/// Generators of a pointed affine semigroup, a top element, and a linear
/// functional strictly positive on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupSpec {
    generators: Vec<Vec<i64>>,
    top: Vec<i64>,
    // integer weights; any positive rational functional can be scaled to one
    functional: Vec<i64>,
}

impl SemigroupSpec {
    /// Uses the all-ones functional, which must be positive on every
    /// generator.
    pub fn new(generators: Vec<Vec<i64>>, top: Vec<i64>) -> Result<Self> {
        let ones = vec![1; top.len()];
        Self::with_functional(generators, top, ones)
    }

    pub fn with_functional(
        generators: Vec<Vec<i64>>,
        top: Vec<i64>,
        functional: Vec<i64>,
    ) -> Result<Self> {
        let dim = top.len();
        if functional.len() != dim || generators.iter().any(|g| g.len() != dim) {
            return Err(Error::CoordinateDimension);
        }
        let spec = SemigroupSpec {
            generators,
            top,
            functional,
        };
        if let Some(g) = spec.generators.iter().find(|g| spec.weight(g) <= 0) {
            return Err(Error::NotPointed(g.clone()));
        }
        Ok(spec)
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn top(&self) -> &[i64] {
        &self.top
    }

    fn weight(&self, v: &[i64]) -> i64 {
        v.iter().zip(&self.functional).map(|(a, b)| a * b).sum()
    }

    /// Semigroup elements of weight at most `bound`, by breadth-first sums.
    fn universe(&self, bound: i64) -> HashSet<Vec<i64>> {
        let zero = vec![0; self.top.len()];
        let mut seen = HashSet::from([zero.clone()]);
        let mut queue = VecDeque::from([zero]);
        while let Some(v) = queue.pop_front() {
            for g in &self.generators {
                let w: Vec<i64> = v.iter().zip(g).map(|(a, b)| a + b).collect();
                if self.weight(&w) <= bound && seen.insert(w.clone()) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Whether the functional takes the value 1 on every indecomposable
    /// generator (one that is not a sum of two or more generators).
    pub fn functional_is_grading(&self) -> bool {
        let bound = self.generators.iter().map(|g| self.weight(g)).max().unwrap_or(0);
        // sums of at least two generators
        let mut composite = HashSet::new();
        let mut frontier: HashSet<Vec<i64>> = self.generators.iter().cloned().collect();
        while !frontier.is_empty() {
            let mut next = HashSet::new();
            for v in &frontier {
                for g in &self.generators {
                    let w: Vec<i64> = v.iter().zip(g).map(|(a, b)| a + b).collect();
                    if self.weight(&w) <= bound && composite.insert(w.clone()) {
                        next.insert(w);
                    }
                }
            }
            frontier = next;
        }
        self.generators
            .iter()
            .filter(|g| !composite.contains(*g))
            .all(|g| self.weight(g) == 1)
    }

    /// The interval `[0, top]` of the semigroup order.
    pub fn interval(&self) -> SemigroupPoset {
        let universe = self.universe(self.weight(&self.top));
        let diff = |a: &[i64], b: &[i64]| -> Vec<i64> { a.iter().zip(b).map(|(x, y)| x - y).collect() };
        let mut points: Vec<Vec<i64>> = universe
            .iter()
            .filter(|s| universe.contains(&diff(&self.top, s)))
            .cloned()
            .collect();
        points.sort_by(|a, b| self.weight(a).cmp(&self.weight(b)).then_with(|| b.cmp(a)));
        let monomial = points.iter().flatten().all(|&c| c >= 0);
        let names: Vec<String> = points
            .iter()
            .map(|p| if monomial { monomial_name(p) } else { vector_name(p) })
            .collect();
        let mut relations = Vec::new();
        for (i, a) in points.iter().enumerate() {
            for (j, b) in points.iter().enumerate() {
                if i != j && universe.contains(&diff(b, a)) {
                    relations.push((i, j));
                }
            }
        }
        let poset = Poset::from_index_relations(names, &relations)
            .expect("a pointed semigroup order is antisymmetric");
        SemigroupPoset {
            poset,
            coordinates: points,
        }
    }
}

/// A poset whose elements carry lattice coordinates.
#[derive(Clone, Debug)]
pub struct SemigroupPoset {
    pub poset: Poset,
    pub coordinates: Vec<Vec<i64>>,
}

impl SemigroupPoset {
    /// Intervals grouped by coordinate difference.
    pub fn relation(&self) -> IntervalEquivalence {
        IntervalEquivalence::semigroup(&self.poset, self.coordinates.clone())
            .expect("coordinates are complete")
    }
}

/// `x1^2x3`, or `1` for the zero vector.
pub fn monomial_name(exponents: &[i64]) -> String {
    let mut s = String::new();
    for (i, &e) in exponents.iter().enumerate() {
        match e {
            0 => {}
            1 => s.push_str(&format!("x{}", i + 1)),
            _ => s.push_str(&format!("x{}^{}", i + 1, e)),
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

fn vector_name(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("v{}", parts.join("_"))
}
