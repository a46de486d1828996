//! Equivalence relations on the intervals of a finite poset and the axioms
//! that make the reduced incidence algebra well behaved.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::poset::{Interval, Poset};

const NONE: usize = usize::MAX;

/// How a relation was produced; semigroup relations carry coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    Trivial,
    Classes,
    Semigroup,
}

/// One equivalence class of intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalClass {
    pub id: usize,
    /// Lexicographically least member, by element index.
    pub representative: Interval,
    pub members: Vec<Interval>,
    /// Length of the representative.
    pub length: usize,
    /// Class of the one-point interval at the representative's bottom.
    pub source: usize,
    /// Class of the one-point interval at the representative's top.
    pub target: usize,
}

/// A partition of the intervals of a poset.
///
/// Class ids are assigned in order of the representatives, so class `0`
/// contains the least interval `[x, x]`.
#[derive(Clone, Debug)]
pub struct IntervalEquivalence {
    poset: Poset,
    kind: RelationKind,
    class_of: Vec<usize>,
    classes: Vec<IntervalClass>,
    coordinates: Option<Vec<Vec<i64>>>,
}

impl IntervalEquivalence {
    /// Every interval in its own class.
    pub fn trivial(poset: &Poset) -> Self {
        Self::from_keys(poset, RelationKind::Trivial, None, |i| vec![i.lo as i64, i.hi as i64])
    }

    /// Groups the listed intervals; unlisted intervals become singletons.
    pub fn from_class_list(poset: &Poset, groups: &[Vec<Interval>]) -> Result<Self> {
        let mut group_of: HashMap<Interval, usize> = HashMap::new();
        for (g, group) in groups.iter().enumerate() {
            for &iv in group {
                poset.check_interval(iv.lo, iv.hi)?;
                if group_of.insert(iv, g).is_some() {
                    return Err(Error::IntervalListedTwice(
                        poset.name(iv.lo).to_string(),
                        poset.name(iv.hi).to_string(),
                    ));
                }
            }
        }
        Ok(Self::from_keys(poset, RelationKind::Classes, None, |iv| {
            match group_of.get(&iv) {
                Some(&g) => vec![0, g as i64],
                None => vec![1, iv.lo as i64, iv.hi as i64],
            }
        }))
    }

    /// Intervals grouped by coordinate difference `hi - lo`.
    pub fn semigroup(poset: &Poset, coordinates: Vec<Vec<i64>>) -> Result<Self> {
        if coordinates.len() != poset.len() {
            let missing = poset.names().get(coordinates.len()).cloned().unwrap_or_default();
            return Err(Error::MissingCoordinates(missing));
        }
        if let Some(first) = coordinates.first() {
            if coordinates.iter().any(|c| c.len() != first.len()) {
                return Err(Error::CoordinateDimension);
            }
        }
        let coords = coordinates.clone();
        Ok(Self::from_keys(poset, RelationKind::Semigroup, Some(coordinates), |iv| {
            coords[iv.hi]
                .iter()
                .zip(&coords[iv.lo])
                .map(|(b, a)| b - a)
                .collect()
        }))
    }

    fn from_keys(
        poset: &Poset,
        kind: RelationKind,
        coordinates: Option<Vec<Vec<i64>>>,
        key: impl Fn(Interval) -> Vec<i64>,
    ) -> Self {
        let n = poset.len();
        let mut class_of = vec![NONE; n * n];
        let mut ids: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut members: Vec<Vec<Interval>> = Vec::new();
        for iv in poset.intervals() {
            let id = *ids.entry(key(iv)).or_insert_with(|| {
                members.push(Vec::new());
                members.len() - 1
            });
            members[id].push(iv);
            class_of[iv.lo * n + iv.hi] = id;
        }
        let classes = members
            .into_iter()
            .enumerate()
            .map(|(id, members)| {
                let rep = members[0];
                IntervalClass {
                    id,
                    representative: rep,
                    length: poset.interval_length(rep.lo, rep.hi).expect("valid interval"),
                    source: class_of[rep.lo * n + rep.lo],
                    target: class_of[rep.hi * n + rep.hi],
                    members,
                }
            })
            .collect();
        IntervalEquivalence {
            poset: poset.clone(),
            kind,
            class_of,
            classes,
            coordinates,
        }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn kind(&self) -> RelationKind {
        self.kind
    }

    pub fn coordinates(&self) -> Option<&[Vec<i64>]> {
        self.coordinates.as_deref()
    }

    /// Class of `[x, y]`; panics unless `x ≤ y`.
    pub fn class_of(&self, x: usize, y: usize) -> usize {
        let c = self.class_of[x * self.poset.len() + y];
        assert!(c != NONE, "not an interval");
        c
    }

    pub fn try_class_of(&self, x: usize, y: usize) -> Option<usize> {
        let c = self.class_of[x * self.poset.len() + y];
        (c != NONE).then_some(c)
    }

    pub fn classes(&self) -> &[IntervalClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &IntervalClass {
        &self.classes[id]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Classes of one-point intervals, in id order.
    pub fn point_classes(&self) -> Vec<usize> {
        self.classes
            .iter()
            .filter(|c| c.representative.lo == c.representative.hi)
            .map(|c| c.id)
            .collect()
    }

    /// Class containing the interval with the given endpoint names.
    pub fn class_by_names(&self, lo: &str, hi: &str) -> Result<usize> {
        let x = self.poset.index_of(lo)?;
        let y = self.poset.index_of(hi)?;
        self.poset.check_interval(x, y)?;
        Ok(self.class_of(x, y))
    }

    /// `[lo,hi]` of the representative, by name.
    pub fn class_label(&self, id: usize) -> String {
        let r = self.classes[id].representative;
        format!("[{},{}]", self.poset.name(r.lo), self.poset.name(r.hi))
    }

    /// Point-class label: the name of its representative element.
    pub fn point_label(&self, id: usize) -> &str {
        self.poset.name(self.classes[id].representative.lo)
    }

    /// All triples `x ≤ y ≤ z`, in lexicographic order.
    pub fn triples(&self) -> Vec<(usize, usize, usize)> {
        let p = &self.poset;
        let n = p.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if !p.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if p.leq(y, z) {
                        out.push((x, y, z));
                    }
                }
            }
        }
        out
    }

    /// The class-pair map `z ↦ (class[x,z], class[z,y])` on `[x,y]`.
    pub fn interval_map(&self, iv: Interval) -> Vec<(usize, (usize, usize))> {
        self.poset
            .closed_elements(iv.lo, iv.hi)
            .into_iter()
            .map(|z| (z, (self.class_of(iv.lo, z), self.class_of(z, iv.hi))))
            .collect()
    }

    /// Runs the axiom checks in the order A1, A2a, A2b, A3, A3plus, A4.
    pub fn validate_axioms(&self) -> Vec<AxiomReport> {
        let a1 = self.check_order_compatibility();
        let (a2a, a2b) = if a1.verdict == Verdict::Pass {
            self.check_invariance()
        } else {
            (AxiomReport::skipped(Axiom::A2a), AxiomReport::skipped(Axiom::A2b))
        };
        vec![
            a1,
            a2a,
            a2b,
            // finitely many point classes: P is finite
            AxiomReport::pass(Axiom::A3),
            // finitely many classes of each length: P is finite
            AxiomReport::pass(Axiom::A3plus),
            self.check_concatenation(),
        ]
    }

    fn check_order_compatibility(&self) -> AxiomReport {
        let triples = self.triples();
        let mut by_key: HashMap<(usize, usize), Vec<(usize, usize, usize)>> = HashMap::new();
        for &(x, y, z) in &triples {
            by_key
                .entry((self.class_of(x, y), self.class_of(y, z)))
                .or_default()
                .push((x, y, z));
        }
        for &(x, y, z) in &triples {
            let outer = self.class_of(x, z);
            let peers = &by_key[&(self.class_of(x, y), self.class_of(y, z))];
            if let Some(&(a, b, c)) = peers.iter().find(|&&(a, _, c)| self.class_of(a, c) != outer) {
                return AxiomReport::fail(
                    Axiom::A1,
                    Witness::intervals(vec![
                        Interval::new(x, y),
                        Interval::new(y, z),
                        Interval::new(a, b),
                        Interval::new(b, c),
                    ]),
                );
            }
        }
        AxiomReport::pass(Axiom::A1)
    }

    /// For every ordered pair of equivalent intervals, counts the candidates
    /// for `τ(z)` at each `z`: existence needs one, uniqueness exactly one.
    fn check_invariance(&self) -> (AxiomReport, AxiomReport) {
        let mut missing: Option<Witness> = None;
        let mut repeated: Option<Witness> = None;
        let mut maps: HashMap<Interval, HashMap<(usize, usize), usize>> = HashMap::new();
        for iv in self.poset.intervals() {
            let mut counts = HashMap::new();
            for (_, pair) in self.interval_map(iv) {
                *counts.entry(pair).or_insert(0) += 1;
            }
            maps.insert(iv, counts);
        }
        let mut pairs: Vec<(Interval, Interval)> = Vec::new();
        for class in &self.classes {
            for &a in &class.members {
                for &b in &class.members {
                    pairs.push((a, b));
                }
            }
        }
        pairs.sort();
        for (a, b) in pairs {
            let target = &maps[&b];
            let counts: Vec<(usize, usize)> = self
                .interval_map(a)
                .into_iter()
                .map(|(z, pair)| (z, target.get(&pair).copied().unwrap_or(0)))
                .collect();
            let witness = |z| Witness {
                intervals: vec![a, b],
                element: Some(z),
            };
            if let Some(&(z, _)) = counts.iter().find(|&&(_, c)| c == 0) {
                missing.get_or_insert_with(|| witness(z));
            } else if let Some(&(z, _)) = counts.iter().find(|&&(_, c)| c > 1) {
                repeated.get_or_insert_with(|| witness(z));
            }
        }
        let report = |axiom, w: Option<Witness>| match w {
            Some(w) => AxiomReport::fail(axiom, w),
            None => AxiomReport::pass(axiom),
        };
        (report(Axiom::A2a, missing), report(Axiom::A2b, repeated))
    }

    fn check_concatenation(&self) -> AxiomReport {
        let realized: HashSet<(usize, usize)> = self
            .triples()
            .into_iter()
            .map(|(x, y, z)| (self.class_of(x, y), self.class_of(y, z)))
            .collect();
        let intervals = self.poset.intervals();
        for &first in &intervals {
            for &second in &intervals {
                if self.class_of(first.hi, first.hi) != self.class_of(second.lo, second.lo) {
                    continue;
                }
                let key = (
                    self.class_of(first.lo, first.hi),
                    self.class_of(second.lo, second.hi),
                );
                if !realized.contains(&key) {
                    return AxiomReport::fail(Axiom::A4, Witness::intervals(vec![first, second]));
                }
            }
        }
        AxiomReport::pass(Axiom::A4)
    }

    /// Checks that every class has members of a single length and that every
    /// interval map is injective.
    pub fn rigidity_violations(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        for class in &self.classes {
            for &m in &class.members {
                let len = self.poset.interval_length(m.lo, m.hi).expect("valid");
                let pairs: Vec<_> = self.interval_map(m).into_iter().map(|(_, p)| p).collect();
                let distinct: HashSet<_> = pairs.iter().collect();
                if len != class.length || distinct.len() != pairs.len() {
                    out.push(m);
                }
            }
        }
        out
    }

    /// Number of intervals per class, keyed by class id.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        self.classes.iter().map(|c| (c.id, c.members.len())).collect()
    }

    /// Formats a witness with element names.
    pub fn describe(&self, w: &Witness) -> String {
        let p = &self.poset;
        let mut parts: Vec<String> = w
            .intervals
            .iter()
            .map(|i| format!("[{},{}]", p.name(i.lo), p.name(i.hi)))
            .collect();
        if let Some(z) = w.element {
            parts.push(format!("at {}", p.name(z)));
        }
        parts.join(" ")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    A1,
    A2a,
    A2b,
    A3,
    A3plus,
    A4,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::A1 => "A1",
            Axiom::A2a => "A2a",
            Axiom::A2b => "A2b",
            Axiom::A3 => "A3",
            Axiom::A3plus => "A3plus",
            Axiom::A4 => "A4",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

/// The intervals (and possibly an element) exhibiting a failure.
///
/// * A1: `[x,y] [y,z] [x',y'] [y',z']` with matching pieces but different
///   concatenations;
/// * A2a/A2b: the pair of equivalent intervals and the element `z` with no
///   (resp. several) candidate images;
/// * A4: `[x,y1] [y2,z]` with no realizing chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub intervals: Vec<Interval>,
    pub element: Option<usize>,
}

impl Witness {
    fn intervals(intervals: Vec<Interval>) -> Self {
        Witness {
            intervals,
            element: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

impl AxiomReport {
    fn pass(axiom: Axiom) -> Self {
        AxiomReport {
            axiom,
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    fn skipped(axiom: Axiom) -> Self {
        AxiomReport {
            axiom,
            verdict: Verdict::Skipped,
            witness: None,
        }
    }

    fn fail(axiom: Axiom, witness: Witness) -> Self {
        AxiomReport {
            axiom,
            verdict: Verdict::Fail,
            witness: Some(witness),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}
