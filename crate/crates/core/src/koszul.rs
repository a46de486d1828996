//! Monomial right ideals, the two Tor backends, and the Koszul,
//! quadraticity and gallery-connectivity verdicts.
//!
//! The topological backend reads Tor off relative homology of sequential
//! layers of (restricted) open-interval order complexes. The bar backend
//! builds the normalized bar complex over the associated graded ring from
//! composable sequences of classes and computes its homology directly; it
//! shares nothing with the topological route beyond the product table.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::algebra::IncidenceAlgebra;
use crate::error::{Error, Result};
use crate::homology::{
    relative_homology, seq_acyclic_witness, seq_cm_witness,
};
use crate::linalg::{Field, Matrix};
use crate::poset::{chain_complex_with_empty, Poset};
use crate::simplicial::{Face, SimplicialComplex};

/// A set of classes closed under right multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialRightIdeal {
    members: Vec<bool>,
    generators: Vec<usize>,
}

impl MonomialRightIdeal {
    /// Closure of `generators` under right multiplication by all classes.
    pub fn from_generators(algebra: &IncidenceAlgebra, generators: &[usize]) -> Result<Self> {
        let c = algebra.num_classes();
        let mut members = vec![false; c];
        let mut queue = VecDeque::new();
        for &g in generators {
            if g >= c {
                return Err(Error::Precondition(format!("no class with id {g}")));
            }
            if algebra.length(g) == 0 {
                return Err(Error::Precondition(format!(
                    "generator {} has length 0 and lies outside the augmentation ideal",
                    algebra.relation().class_label(g)
                )));
            }
            if !members[g] {
                members[g] = true;
                queue.push_back(g);
            }
        }
        while let Some(a) = queue.pop_front() {
            for b in 0..c {
                if let Some(g) = algebra.product(a, b) {
                    if !members[g] {
                        members[g] = true;
                        queue.push_back(g);
                    }
                }
            }
        }
        let mut generators = generators.to_vec();
        generators.sort_unstable();
        generators.dedup();
        Ok(MonomialRightIdeal {
            members,
            generators,
        })
    }

    /// The augmentation ideal: every class of positive length.
    pub fn augmentation(algebra: &IncidenceAlgebra) -> Self {
        let members = (0..algebra.num_classes())
            .map(|c| algebra.length(c) > 0)
            .collect();
        MonomialRightIdeal {
            members,
            generators: algebra
                .positive_classes()
                .into_iter()
                .filter(|&c| algebra.length(c) == 1)
                .collect(),
        }
    }

    pub fn contains(&self, class: usize) -> bool {
        self.members.get(class).copied().unwrap_or(false)
    }

    /// Member classes in id order.
    pub fn members(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&c| self.members[c]).collect()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }
}

/// `(x,y)|_J`: elements `z` of the representative's open interval with
/// `class[x,z] ∈ J`.
pub fn restricted_subposet(
    algebra: &IncidenceAlgebra,
    ideal: &MonomialRightIdeal,
    class: usize,
) -> Result<Poset> {
    let rel = algebra.relation();
    if !ideal.contains(class) {
        return Err(Error::Precondition(format!(
            "class {} is not in the ideal",
            rel.class_label(class)
        )));
    }
    let r = rel.class(class).representative;
    let p = rel.poset();
    let keep: Vec<usize> = p
        .open_elements(r.lo, r.hi)
        .into_iter()
        .filter(|&z| ideal.contains(rel.class_of(r.lo, z)))
        .collect();
    Ok(p.induced(&keep))
}

/// Order complex of the restricted subposet; `{∅}` when it is empty.
pub fn restricted_complex(
    algebra: &IncidenceAlgebra,
    ideal: &MonomialRightIdeal,
    class: usize,
) -> Result<SimplicialComplex> {
    let sub = restricted_subposet(algebra, ideal, class)?;
    Ok(chain_complex_with_empty(&sub, true))
}

/// Order complex of the representative's open interval, `{∅}` for a cover
/// and void for a one-point class.
pub fn interval_complex(algebra: &IncidenceAlgebra, class: usize) -> SimplicialComplex {
    let r = algebra.relation().class(class).representative;
    algebra
        .relation()
        .poset()
        .open_interval_complex(r.lo, r.hi)
        .expect("representative is an interval")
}

/// Degrees of the members of `J` in `gr_I J`: one more than the dimension of
/// the restricted complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleGrading {
    degrees: Vec<Option<usize>>,
}

impl ModuleGrading {
    pub fn new(algebra: &IncidenceAlgebra, ideal: &MonomialRightIdeal) -> Self {
        let degrees = (0..algebra.num_classes())
            .map(|c| {
                ideal.contains(c).then(|| {
                    let d = restricted_complex(algebra, ideal, c)
                        .expect("member class")
                        .dim()
                        .expect("nonvoid");
                    (d + 1) as usize
                })
            })
            .collect();
        ModuleGrading { degrees }
    }

    pub fn degree(&self, class: usize) -> Option<usize> {
        self.degrees.get(class).copied().flatten()
    }
}

/// `ξ̂_β · ξ̄_α` in `gr_I J`: nonzero when the product lands in `J` and the
/// filtration degrees add.
pub fn module_action(
    algebra: &IncidenceAlgebra,
    grading: &ModuleGrading,
    member: usize,
    class: usize,
) -> Option<usize> {
    let g = algebra.product(member, class)?;
    let (db, dg) = (grading.degree(member)?, grading.degree(g)?);
    (db + algebra.length(class) == dg).then_some(g)
}

/// Triples `(β, α, γ)` with `ξ_β ξ_α = ξ_γ` in `J` where filtration-degree
/// additivity and length additivity give different answers.
pub fn action_disagreements(
    algebra: &IncidenceAlgebra,
    ideal: &MonomialRightIdeal,
) -> Vec<(usize, usize, usize)> {
    let grading = ModuleGrading::new(algebra, ideal);
    let mut out = Vec::new();
    for b in ideal.members() {
        for a in algebra.positive_classes() {
            let Some(g) = algebra.product(b, a) else {
                continue;
            };
            let by_filtration = module_action(algebra, &grading, b, a).is_some();
            let by_length = algebra.length(b) + algebra.length(a) == algebra.length(g);
            if by_filtration != by_length {
                out.push((b, a, g));
            }
        }
    }
    out
}

/// Which module's Tor against `A₀` a table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorModule {
    /// `Tor^R(k_x̃, k_ỹ)` for the residue ring `A₀`.
    Ring,
    /// `Tor^R(gr_I J, A₀)`.
    Ideal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Topological,
    Bar,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Topological => "topological",
            Backend::Bar => "bar",
        })
    }
}

/// Nonzero Tor dimensions keyed by (source point class, target point class,
/// homological degree, internal degree).
#[derive(Clone, Debug)]
pub struct TorTable {
    pub module: TorModule,
    pub field: Field,
    pub backend: Backend,
    entries: BTreeMap<(usize, usize, usize, usize), usize>,
}

impl TorTable {
    fn new(module: TorModule, field: Field, backend: Backend) -> Self {
        TorTable {
            module,
            field,
            backend,
            entries: BTreeMap::new(),
        }
    }

    fn add(&mut self, key: (usize, usize, usize, usize), dim: usize) {
        if dim > 0 {
            *self.entries.entry(key).or_insert(0) += dim;
        }
    }

    pub fn get(&self, source: usize, target: usize, i: usize, j: usize) -> usize {
        self.entries.get(&(source, target, i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize, usize, usize), usize> {
        &self.entries
    }

    /// Entries with homological degree at most `i_max`.
    pub fn truncated(&self, i_max: usize) -> BTreeMap<(usize, usize, usize, usize), usize> {
        self.entries
            .iter()
            .filter(|(k, _)| k.2 <= i_max)
            .map(|(&k, &v)| (k, v))
            .collect()
    }

    /// First entry with `i ≠ j`.
    pub fn off_diagonal(&self) -> Option<((usize, usize, usize, usize), usize)> {
        self.entries
            .iter()
            .find(|(k, _)| k.2 != k.3)
            .map(|(&k, &v)| (k, v))
    }

    /// Entries that differ between two tables, up to homological degree
    /// `i_max`.
    pub fn differences(
        &self,
        other: &TorTable,
        i_max: usize,
    ) -> Vec<((usize, usize, usize, usize), usize, usize)> {
        let a = self.truncated(i_max);
        let b = other.truncated(i_max);
        let mut keys: Vec<_> = a.keys().chain(b.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|k| {
                let (x, y) = (a.get(&k).copied().unwrap_or(0), b.get(&k).copied().unwrap_or(0));
                (x != y).then_some((k, x, y))
            })
            .collect()
    }
}

/// Tor from relative homology of sequential layers.
pub fn tor_topological(
    algebra: &IncidenceAlgebra,
    ideal: Option<&MonomialRightIdeal>,
    field: Field,
) -> TorTable {
    match ideal {
        None => {
            let mut table = TorTable::new(TorModule::Ring, field, Backend::Topological);
            for x in algebra.point_classes() {
                table.add((x, x, 0, 0), 1);
            }
            for a in algebra.positive_classes() {
                let delta = interval_complex(algebra, a);
                let key = (algebra.source(a), algebra.target(a));
                // H̃_{i-2}(Δ^⟨j-2⟩, Δ^⟨j-1⟩) contributes to Tor_i in degree j
                for (q, m, dim) in layer_homology(&delta, field) {
                    table.add((key.0, key.1, (q + 2) as usize, (m + 2) as usize), dim);
                }
            }
            table
        }
        Some(ideal) => {
            let mut table = TorTable::new(TorModule::Ideal, field, Backend::Topological);
            for a in ideal.members() {
                let delta = restricted_complex(algebra, ideal, a).expect("member class");
                let key = (algebra.source(a), algebra.target(a));
                // H̃_{i-1}(Δ^⟨j-1⟩, Δ^⟨j⟩) contributes to Tor_i in degree j
                for (q, m, dim) in layer_homology(&delta, field) {
                    table.add((key.0, key.1, (q + 1) as usize, (m + 1) as usize), dim);
                }
            }
            table
        }
    }
}

/// `(q, m, dim H̃_q(Δ^⟨m⟩, Δ^⟨m+1⟩))` for every nonzero group.
fn layer_homology(delta: &SimplicialComplex, field: Field) -> Vec<(i32, i32, usize)> {
    let Some(dim) = delta.dim() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for m in -1..=dim {
        let h = relative_homology(
            &delta.sequential_layer(m),
            &delta.sequential_layer(m + 1),
            field,
        )
        .expect("layers are nested");
        out.extend(h.nonzero().map(|(q, d)| (q, m, d)));
    }
    out
}

/// A bar-complex basis element: an optional module generator followed by
/// classes of positive length.
type Cell = (Option<usize>, Vec<usize>);

/// Tor from the normalized bar complex, in homological degrees `0..=i_max`
/// (default: the number of elements of the poset).
pub fn tor_bar(
    algebra: &IncidenceAlgebra,
    ideal: Option<&MonomialRightIdeal>,
    field: Field,
    i_max: Option<usize>,
) -> Result<TorTable> {
    algebra.require_finite()?;
    let poset = algebra.relation().poset();
    let i_max = i_max.unwrap_or(poset.len());
    let top_degree = poset.height().unwrap_or(0);
    let positive = algebra.positive_classes();
    let grading = ideal.map(|j| ModuleGrading::new(algebra, j));

    // basis cells grouped by (source, target, internal degree), then by i
    let mut groups: BTreeMap<(usize, usize, usize), Vec<Vec<Cell>>> = BTreeMap::new();
    let mut push = |key: (usize, usize, usize), i: usize, cell: Cell| {
        let slots = groups.entry(key).or_default();
        if slots.len() <= i {
            slots.resize(i + 1, Vec::new());
        }
        slots[i].push(cell);
    };

    // Depth-first extension of composable sequences; the realized length
    // Σℓ never exceeds the height of P under the axioms.
    let mut stack: Vec<(Option<usize>, Vec<usize>, usize, usize, usize)> = Vec::new();
    match (ideal, &grading) {
        (None, _) => {
            for x in algebra.point_classes() {
                stack.push((None, Vec::new(), x, x, 0));
            }
        }
        (Some(ideal), Some(grading)) => {
            for b in ideal.members() {
                stack.push((
                    Some(b),
                    Vec::new(),
                    algebra.source(b),
                    algebra.target(b),
                    grading.degree(b).expect("member"),
                ));
            }
        }
        (Some(_), None) => unreachable!(),
    }
    let realized_length = |head: Option<usize>, seq: &[usize]| {
        head.map_or(0, |b| algebra.length(b)) + seq.iter().map(|&a| algebra.length(a)).sum::<usize>()
    };
    while let Some((head, seq, source, target, degree)) = stack.pop() {
        let i = seq.len();
        if i <= i_max {
            for &a in &positive {
                if algebra.source(a) != target {
                    continue;
                }
                let mut next = seq.clone();
                next.push(a);
                if realized_length(head, &next) > top_degree {
                    continue;
                }
                stack.push((head, next, source, algebra.target(a), degree + algebra.length(a)));
            }
        }
        push((source, target, degree), i, (head, seq));
    }

    let module = if ideal.is_some() {
        TorModule::Ideal
    } else {
        TorModule::Ring
    };
    let mut table = TorTable::new(module, field, Backend::Bar);
    for ((source, target, degree), mut cells) in groups {
        for slot in &mut cells {
            slot.sort();
        }
        cells.resize(cells.len().max(i_max + 2), Vec::new());
        // ranks[i] = rank of d_i : C_i -> C_{i-1}
        let mut ranks = vec![0usize; cells.len() + 1];
        for i in 1..cells.len() {
            if cells[i].is_empty() || cells[i - 1].is_empty() {
                continue;
            }
            let index: HashMap<&Cell, usize> =
                cells[i - 1].iter().enumerate().map(|(k, c)| (c, k)).collect();
            let mut m = Matrix::zeros(cells[i].len(), cells[i - 1].len());
            for (row, cell) in cells[i].iter().enumerate() {
                for (image, sign) in bar_differential(algebra, grading.as_ref(), cell) {
                    let col = index[&image];
                    m.add(row, col, sign);
                }
            }
            ranks[i] = m.rank(field);
        }
        for i in 0..=i_max.min(cells.len() - 1) {
            let dim = cells[i].len() - ranks[i] - ranks[i + 1];
            table.add((source, target, i, degree), dim);
        }
    }
    Ok(table)
}

fn bar_differential(
    algebra: &IncidenceAlgebra,
    grading: Option<&ModuleGrading>,
    (head, seq): &Cell,
) -> Vec<(Cell, i64)> {
    let mut out = Vec::new();
    if let (Some(b), Some(grading), Some(&a)) = (*head, grading, seq.first()) {
        if let Some(g) = module_action(algebra, grading, b, a) {
            out.push(((Some(g), seq[1..].to_vec()), 1));
        }
    }
    for l in 1..seq.len() {
        if let Some(g) = algebra.gr_product(seq[l - 1], seq[l]) {
            let mut merged = seq[..l - 1].to_vec();
            merged.push(g);
            merged.extend_from_slice(&seq[l + 1..]);
            out.push(((*head, merged), if l % 2 == 0 { 1 } else { -1 }));
        }
    }
    out
}

/// A failing class with the face whose link is not sequentially acyclic and
/// the least `(i, j)` with `H̃_i(link^⟨j⟩) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulWitness {
    pub class: usize,
    pub face: Vec<String>,
    pub homology: (i32, i32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulVerdict {
    pub koszul: bool,
    pub witness: Option<KoszulWitness>,
}

/// Koszulness of `gr_I A` via sequential Cohen-Macaulayness of every open
/// interval, cross-checked against vanishing of off-diagonal Tor.
pub fn is_koszul_ring(algebra: &IncidenceAlgebra, field: Field) -> Result<KoszulVerdict> {
    let mut witness = None;
    for a in algebra.positive_classes() {
        let delta = interval_complex(algebra, a);
        if let Some((face, hom)) = seq_cm_witness(&delta, field) {
            witness = Some(KoszulWitness {
                class: a,
                face: delta.face_labels(&face),
                homology: hom,
            });
            break;
        }
    }
    let tor = tor_topological(algebra, None, field);
    let concentrated = tor.off_diagonal().is_none();
    if concentrated != witness.is_none() {
        return Err(Error::Inconsistent(format!(
            "open-interval verdict ({}) disagrees with Tor concentration ({})",
            witness.is_none(),
            concentrated
        )));
    }
    Ok(KoszulVerdict {
        koszul: witness.is_none(),
        witness,
    })
}

/// Koszulness of `gr_I J` via sequential acyclicity of every restricted
/// complex, cross-checked against vanishing of off-diagonal Tor.
pub fn is_koszul_ideal(
    algebra: &IncidenceAlgebra,
    ideal: &MonomialRightIdeal,
    field: Field,
) -> Result<KoszulVerdict> {
    if ideal.is_empty() {
        return Err(Error::Precondition("the ideal is empty".into()));
    }
    let mut witness = None;
    for a in ideal.members() {
        let delta = restricted_complex(algebra, ideal, a)?;
        if let Some(hom) = seq_acyclic_witness(&delta, field) {
            witness = Some(KoszulWitness {
                class: a,
                face: Vec::new(),
                homology: hom,
            });
            break;
        }
    }
    let tor = tor_topological(algebra, Some(ideal), field);
    let concentrated = tor.off_diagonal().is_none();
    if concentrated != witness.is_none() {
        return Err(Error::Inconsistent(format!(
            "restricted-interval verdict ({}) disagrees with Tor concentration ({})",
            witness.is_none(),
            concentrated
        )));
    }
    Ok(KoszulVerdict {
        koszul: witness.is_none(),
        witness,
    })
}

/// First dimension `d` whose `d`-faces are not gallery connected.
pub fn sgc_witness(complex: &SimplicialComplex) -> Option<i32> {
    let dim = complex.dim()?;
    (1..=dim).find(|&d| complex.gallery_components(d).len() > 1)
}

/// Every pair of faces of equal dimension is joined by a gallery.
pub fn is_sgc(complex: &SimplicialComplex) -> bool {
    sgc_witness(complex).is_none()
}

/// Whether a sequential gallery leads from `from` to `to`: steps either
/// replace one vertex (same dimension) or add one vertex.
pub fn sequential_gallery_exists(complex: &SimplicialComplex, from: &[usize], to: &[usize]) -> bool {
    let mut from = from.to_vec();
    let mut to = to.to_vec();
    from.sort_unstable();
    to.sort_unstable();
    if !complex.contains(&from) || !complex.contains(&to) || from.len() > to.len() {
        return false;
    }
    let faces: Vec<Face> = complex
        .faces_by_size()
        .into_iter()
        .skip(from.len())
        .take(to.len() - from.len() + 1)
        .flatten()
        .collect();
    let mut seen: std::collections::HashSet<Face> = std::collections::HashSet::from([from.clone()]);
    let mut queue = VecDeque::from([from]);
    while let Some(f) = queue.pop_front() {
        if f == to {
            return true;
        }
        for g in &faces {
            let step = match g.len() {
                l if l == f.len() => common(&f, g) + 1 == l,
                l if l == f.len() + 1 => common(&f, g) == f.len(),
                _ => false,
            };
            if step && seen.insert(g.clone()) {
                queue.push_back(g.clone());
            }
        }
    }
    false
}

fn common(a: &[usize], b: &[usize]) -> usize {
    a.iter().filter(|v| b.binary_search(v).is_ok()).count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticVerdict {
    pub quadratic: bool,
    /// First class whose open interval is not SGC, with the dimension of
    /// the disconnected faces.
    pub witness: Option<(usize, i32)>,
    /// First nonzero `Tor₂(k_x̃, k_ỹ)_j` with `j ≠ 2`.
    pub tor2_off_diagonal: Option<((usize, usize, usize, usize), usize)>,
}

/// Quadraticity via gallery connectivity of every open interval,
/// cross-checked against concentration of `Tor₂` in degree 2.
pub fn is_quadratic(algebra: &IncidenceAlgebra) -> Result<QuadraticVerdict> {
    let witness = algebra
        .positive_classes()
        .into_iter()
        .find_map(|a| sgc_witness(&interval_complex(algebra, a)).map(|d| (a, d)));
    let tor = tor_topological(algebra, None, Field::Rationals);
    let tor2 = tor
        .entries()
        .iter()
        .find(|(k, _)| k.2 == 2 && k.3 != 2)
        .map(|(&k, &v)| (k, v));
    if witness.is_none() != tor2.is_none() {
        return Err(Error::Inconsistent(format!(
            "gallery verdict ({}) disagrees with Tor2 concentration ({})",
            witness.is_none(),
            tor2.is_none()
        )));
    }
    Ok(QuadraticVerdict {
        quadratic: witness.is_none(),
        witness,
        tor2_off_diagonal: tor2,
    })
}
