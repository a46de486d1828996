//! Finite posets, intervals, chain lengths and order complexes.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::simplicial::SimplicialComplex;

/// A closed interval `[lo, hi]`, by element index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Self {
        Interval { lo, hi }
    }
}

/// A finite poset on named elements.
///
/// The order is stored as a dense reflexive-transitive relation over element
/// indices, together with the length of the longest chain in every interval.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<bool>,
    // longest chain length of [x,y], or u32::MAX when x is not below y
    lengths: Vec<u32>,
}

const INCOMPARABLE: u32 = u32::MAX;

impl Poset {
    /// The poset whose order is the reflexive-transitive closure of `covers`.
    pub fn from_covers<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let index = index_names(&names)?;
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnknownElement(name.to_string()))
        };
        let pairs = covers
            .iter()
            .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_index_relations(names, &pairs)
    }

    /// Builds a poset from relations `a < b` given by index.
    pub fn from_index_relations(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let index = index_names(&names)?;
        let n = names.len();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(a, b) in relations {
            if a == b {
                return Err(Error::Cycle(names[a].clone()));
            }
            leq[a * n + b] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for x in 0..n {
                if leq[x * n + k] {
                    for y in 0..n {
                        if leq[k * n + y] {
                            leq[x * n + y] = true;
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if leq[x * n + y] && leq[y * n + x] {
                    return Err(Error::Cycle(names[x].clone()));
                }
            }
        }
        Ok(Self::from_closed(names, index, leq))
    }

    fn from_closed(names: Vec<String>, index: HashMap<String, usize>, leq: Vec<bool>) -> Self {
        let n = names.len();
        // A linear extension: sort by the number of elements below.
        let mut order: Vec<usize> = (0..n).collect();
        let below = |x: usize| (0..n).filter(|&y| leq[y * n + x]).count();
        order.sort_by_key(|&x| (below(x), x));
        let mut lengths = vec![INCOMPARABLE; n * n];
        for (pos, &x) in order.iter().enumerate() {
            lengths[x * n + x] = 0;
            for &y in &order[pos + 1..] {
                if !leq[x * n + y] {
                    continue;
                }
                let mut best = 0;
                for &z in &order[pos..] {
                    if z == y {
                        break;
                    }
                    if leq[z * n + y] {
                        let l = lengths[x * n + z];
                        if l != INCOMPARABLE {
                            best = best.max(l + 1);
                        }
                    }
                }
                lengths[x * n + y] = best;
            }
        }
        Poset {
            names,
            index,
            leq,
            lengths,
        }
    }

    /// The poset with no elements.
    pub fn empty() -> Self {
        Self::from_closed(Vec::new(), HashMap::new(), Vec::new())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.len() + y]
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// Whether `y` covers `x`.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) && self.length_unchecked(x, y) == 1
    }

    /// All cover relations `(x, y)`, sorted by index.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.covers(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// All closed intervals, sorted by `(lo, hi)`.
    pub fn intervals(&self) -> Vec<Interval> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.leq(x, y) {
                    out.push(Interval::new(x, y));
                }
            }
        }
        out
    }

    pub fn check_interval(&self, x: usize, y: usize) -> Result<Interval> {
        if self.leq(x, y) {
            Ok(Interval::new(x, y))
        } else {
            Err(Error::NotComparable {
                lo: self.names[x].clone(),
                hi: self.names[y].clone(),
            })
        }
    }

    /// Elements of the closed interval `[x, y]`, in index order.
    pub fn closed_elements(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect()
    }

    /// Elements of the open interval `(x, y)`, in index order.
    pub fn open_elements(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&z| self.lt(x, z) && self.lt(z, y))
            .collect()
    }

    /// Induced subposet on `(x, y) = { z : x < z < y }`.
    pub fn open_interval(&self, x: usize, y: usize) -> Result<Poset> {
        self.check_interval(x, y)?;
        Ok(self.induced(&self.open_elements(x, y)))
    }

    /// Induced subposet on the given elements (kept in the given order).
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let names: Vec<String> = elements.iter().map(|&x| self.names[x].clone()).collect();
        let index = names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        let m = elements.len();
        let mut leq = vec![false; m * m];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                leq[i * m + j] = self.leq(a, b);
            }
        }
        Self::from_closed(names, index, leq)
    }

    fn length_unchecked(&self, x: usize, y: usize) -> u32 {
        self.lengths[x * self.len() + y]
    }

    /// Length of the longest chain from `x` to `y`.
    pub fn interval_length(&self, x: usize, y: usize) -> Result<usize> {
        self.check_interval(x, y)?;
        Ok(self.length_unchecked(x, y) as usize)
    }

    /// Length of a longest chain in the whole poset (`None` when empty).
    pub fn height(&self) -> Option<usize> {
        self.lengths
            .iter()
            .filter(|&&l| l != INCOMPARABLE)
            .max()
            .map(|&l| l as usize)
    }

    /// The least interval (by index) containing maximal chains of different
    /// lengths, or `None` if the poset is graded.
    pub fn grading_witness(&self) -> Option<Interval> {
        let n = self.len();
        // shortest maximal chain of [x,y]: walk the covers
        let mut shortest = vec![INCOMPARABLE; n * n];
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(self.height_below(x)));
        for y in 0..n {
            shortest[y * n + y] = 0;
        }
        // process x from top to bottom so [z,y] is known for covers x < z
        for &x in &order {
            for y in 0..n {
                if !self.lt(x, y) {
                    continue;
                }
                let best = (0..n)
                    .filter(|&z| self.covers(x, z) && self.leq(z, y))
                    .map(|z| shortest[z * n + y])
                    .min()
                    .expect("a proper interval has a cover");
                shortest[x * n + y] = best + 1;
            }
        }
        for x in 0..n {
            for y in 0..n {
                if self.leq(x, y) && shortest[x * n + y] != self.length_unchecked(x, y) {
                    return Some(Interval::new(x, y));
                }
            }
        }
        None
    }

    fn height_below(&self, x: usize) -> u32 {
        (0..self.len())
            .map(|y| self.length_unchecked(y, x))
            .filter(|&l| l != INCOMPARABLE)
            .max()
            .unwrap_or(0)
    }

    pub fn is_graded(&self) -> bool {
        self.grading_witness().is_none()
    }

    /// Adjoins a new minimum `0^` and maximum `1^`.
    pub fn bounded_extension(&self) -> Result<Poset> {
        self.bounded_extension_named(BOTTOM, TOP)
    }

    pub fn bounded_extension_named(&self, bottom: &str, top: &str) -> Result<Poset> {
        for fresh in [bottom, top] {
            if self.index.contains_key(fresh) {
                return Err(Error::IdentifierCollision(fresh.to_string()));
            }
        }
        if bottom == top {
            return Err(Error::IdentifierCollision(top.to_string()));
        }
        let n = self.len();
        let mut names = Vec::with_capacity(n + 2);
        names.push(bottom.to_string());
        names.extend(self.names.iter().cloned());
        names.push(top.to_string());
        let mut relations = vec![(0, n + 1)];
        for x in 0..n {
            relations.push((0, x + 1));
            relations.push((x + 1, n + 1));
        }
        for (x, y) in self.cover_relations() {
            relations.push((x + 1, y + 1));
        }
        Self::from_index_relations(names, &relations)
    }

    /// Maximal chains, each listed bottom to top, in lexicographic order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let minimal: Vec<usize> = (0..n)
            .filter(|&x| (0..n).all(|y| !self.lt(y, x)))
            .collect();
        let mut out = Vec::new();
        let mut chain = Vec::new();
        for x in minimal {
            chain.push(x);
            self.extend_chain(&mut chain, &mut out);
            chain.pop();
        }
        out
    }

    fn extend_chain(&self, chain: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *chain.last().expect("chain is nonempty");
        let mut extended = false;
        for y in 0..self.len() {
            if self.covers(last, y) {
                extended = true;
                chain.push(y);
                self.extend_chain(chain, out);
                chain.pop();
            }
        }
        if !extended {
            out.push(chain.clone());
        }
    }

    /// The complex of chains of `self`, on the elements as vertices.
    ///
    /// The empty poset gives the void complex.
    pub fn order_complex(&self) -> SimplicialComplex {
        SimplicialComplex::new(self.names.clone(), self.maximal_chains())
    }

    /// Order complex of the open interval `(x, y)`, with the convention used
    /// throughout the homological computations: for `x < y` the empty chain
    /// is always a face, so a cover gives `{∅}`; for `x = y` it is void.
    pub fn open_interval_complex(&self, x: usize, y: usize) -> Result<SimplicialComplex> {
        let sub = self.open_interval(x, y)?;
        Ok(chain_complex_with_empty(&sub, x != y))
    }
}

/// Order complex of `poset`, except that an empty poset yields `{∅}` rather
/// than the void complex when `nonvoid` is set.
pub(crate) fn chain_complex_with_empty(poset: &Poset, nonvoid: bool) -> SimplicialComplex {
    if poset.is_empty() && nonvoid {
        SimplicialComplex::empty_face(Vec::new())
    } else {
        poset.order_complex()
    }
}

/// Identifier used for an adjoined minimum.
pub const BOTTOM: &str = "0^";
/// Identifier used for an adjoined maximum.
pub const TOP: &str = "1^";

fn index_names(names: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateElement(name.clone()));
        }
    }
    Ok(index)
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .cover_relations()
            .into_iter()
            .map(|(x, y)| format!("{}<{}", self.names[x], self.names[y]))
            .collect();
        f.debug_struct("Poset")
            .field("elements", &self.names)
            .field("covers", &covers)
            .finish()
    }
}
