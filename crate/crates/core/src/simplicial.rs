//! Finite abstract simplicial complexes stored by their facets.
//!
//! A complex lives on an ordered vertex universe of labels; faces are sorted
//! vectors of indices into that universe. Two degenerate complexes matter a
//! great deal here and are kept apart:
//!
//! * the *void* complex has no faces at all (not even the empty face), and
//!   all of its reduced homology vanishes;
//! * the complex `{∅}` has exactly one face, the empty one, and reduced
//!   homology `k` in degree `-1`.
//!
//! The void complex is the one with an empty facet list, `{∅}` is the one
//! whose only facet is the empty face.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// A face: strictly increasing vertex indices into the universe.
pub type Face = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces` on the given universe.
    ///
    /// Faces may be given in any order and need not be maximal; the stored
    /// facet list is pruned to the inclusion-maximal faces and sorted.
    pub fn new(vertices: Vec<String>, faces: impl IntoIterator<Item = Face>) -> Self {
        let n = vertices.len();
        let mut faces: Vec<Face> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                assert!(f.iter().all(|&v| v < n), "vertex index out of range");
                f
            })
            .collect();
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        faces.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for f in faces {
            if !facets.iter().any(|g| is_subset(&f, g)) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { vertices, facets }
    }

    /// The complex with no faces at all.
    pub fn void(vertices: Vec<String>) -> Self {
        SimplicialComplex {
            vertices,
            facets: Vec::new(),
        }
    }

    /// The complex `{∅}` whose only face is the empty face.
    pub fn empty_face(vertices: Vec<String>) -> Self {
        SimplicialComplex {
            vertices,
            facets: vec![Vec::new()],
        }
    }

    /// The full simplex on the universe.
    pub fn simplex(vertices: Vec<String>) -> Self {
        let all = (0..vertices.len()).collect();
        SimplicialComplex::new(vertices, [all])
    }

    /// Builds a complex from facets given by vertex label; the universe is
    /// the labels in order of first appearance.
    pub fn from_labelled_facets<S: AsRef<str>>(facets: &[Vec<S>]) -> Self {
        let mut vertices: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut faces = Vec::new();
        for facet in facets {
            let mut face = Vec::new();
            for v in facet {
                let v = v.as_ref();
                let i = *index.entry(v.to_string()).or_insert_with(|| {
                    vertices.push(v.to_string());
                    vertices.len() - 1
                });
                face.push(i);
            }
            faces.push(face);
        }
        SimplicialComplex::new(vertices, faces)
    }

    /// Re-expresses the complex on a larger universe (given by labels).
    pub fn with_universe(&self, universe: Vec<String>) -> Result<Self> {
        let index: HashMap<&str, usize> = universe
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        let mut facets = Vec::with_capacity(self.facets.len());
        for facet in &self.facets {
            let mut mapped = Vec::with_capacity(facet.len());
            for &v in facet {
                let label = &self.vertices[v];
                match index.get(label.as_str()) {
                    Some(&i) => mapped.push(i),
                    None => return Err(Error::UnknownElement(label.clone())),
                }
            }
            facets.push(mapped);
        }
        Ok(SimplicialComplex::new(universe, facets))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_empty_face(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Dimension; `None` for the void complex and `Some(-1)` for `{∅}`.
    pub fn dim(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.len() as i32 - 1).max()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut face = face.to_vec();
        face.sort_unstable();
        self.facets.iter().any(|f| is_subset(&face, f))
    }

    /// All faces grouped by cardinality: entry `c` holds the faces with `c`
    /// vertices, each list sorted. Entry 0 holds the empty face unless the
    /// complex is void.
    pub fn faces_by_size(&self) -> Vec<Vec<Face>> {
        let top = match self.dim() {
            None => return Vec::new(),
            Some(d) => (d + 1) as usize,
        };
        let mut sets: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); top + 1];
        for facet in &self.facets {
            let k = facet.len();
            for mask in 0u64..(1u64 << k) {
                let face: Face = (0..k)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| facet[b])
                    .collect();
                sets[face.len()].insert(face);
            }
        }
        sets.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Number of faces of each cardinality (entry 0 is the empty face).
    pub fn face_counts(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// Subcomplex generated by the faces of dimension at least `j`.
    pub fn sequential_layer(&self, j: i32) -> Self {
        let mut faces = Vec::new();
        for facet in &self.facets {
            let d = facet.len() as i32 - 1;
            if d >= j {
                faces.push(facet.clone());
            }
        }
        SimplicialComplex::new(self.vertices.clone(), faces)
    }

    /// Subcomplex generated by the faces of dimension exactly `d`.
    pub fn pure_skeleton(&self, d: i32) -> Self {
        if d < -1 {
            return SimplicialComplex::void(self.vertices.clone());
        }
        let size = (d + 1) as usize;
        let mut faces = BTreeSet::new();
        for facet in &self.facets {
            if facet.len() >= size {
                for sub in subsets_of_size(facet, size) {
                    faces.insert(sub);
                }
            }
        }
        SimplicialComplex::new(self.vertices.clone(), faces)
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    /// `link(F) = { G : F ∪ G ∈ Δ, F ∩ G = ∅ }`.
    pub fn link(&self, face: &[usize]) -> Result<Self> {
        let mut face = face.to_vec();
        face.sort_unstable();
        face.dedup();
        let faces: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| is_subset(&face, f))
            .map(|f| f.iter().copied().filter(|v| face.binary_search(v).is_err()).collect())
            .collect();
        if faces.is_empty() {
            return Err(Error::NotAFace(
                face.iter().map(|&v| self.vertices[v].clone()).collect(),
            ));
        }
        Ok(SimplicialComplex::new(self.vertices.clone(), faces))
    }

    /// Simplicial join on the disjoint union of the two universes.
    ///
    /// Fails if a vertex label occurs in both universes; use
    /// [`SimplicialComplex::join_tagged`] to force disjointness.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let mine: HashSet<&str> = self.vertices.iter().map(String::as_str).collect();
        if let Some(v) = other.vertices.iter().find(|v| mine.contains(v.as_str())) {
            return Err(Error::VertexCollision(v.clone()));
        }
        Ok(self.join_unchecked(other, self.vertices.clone(), other.vertices.clone()))
    }

    /// Join after prefixing the labels with `1:` and `2:`.
    pub fn join_tagged(&self, other: &SimplicialComplex) -> Self {
        let left = self.vertices.iter().map(|v| format!("1:{v}")).collect();
        let right = other.vertices.iter().map(|v| format!("2:{v}")).collect();
        self.join_unchecked(other, left, right)
    }

    fn join_unchecked(
        &self,
        other: &SimplicialComplex,
        left: Vec<String>,
        right: Vec<String>,
    ) -> Self {
        let shift = left.len();
        let mut vertices = left;
        vertices.extend(right);
        let mut faces = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                let mut face = f.clone();
                face.extend(g.iter().map(|v| v + shift));
                faces.push(face);
            }
        }
        SimplicialComplex::new(vertices, faces)
    }

    /// Minimal non-faces: sets that are not faces but all of whose proper
    /// subsets are. The empty set is a minimal non-face exactly when the
    /// complex is void.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        if self.is_void() {
            return vec![Vec::new()];
        }
        let faces: HashSet<Face> = self.faces_by_size().into_iter().flatten().collect();
        let mut out = BTreeSet::new();
        for face in &faces {
            for v in 0..self.vertices.len() {
                if face.binary_search(&v).is_ok() {
                    continue;
                }
                let mut cand = face.clone();
                cand.push(v);
                cand.sort_unstable();
                if faces.contains(&cand) {
                    continue;
                }
                let minimal = (0..cand.len()).all(|drop| {
                    let sub: Face = cand
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != drop)
                        .map(|(_, &x)| x)
                        .collect();
                    faces.contains(&sub)
                });
                if minimal {
                    out.insert(cand);
                }
            }
        }
        let mut out: Vec<Face> = out.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Alexander dual `{ [n] \ G : G ∉ Δ }` over this complex's universe.
    ///
    /// Its facets are the complements of the minimal non-faces.
    pub fn alexander_dual(&self) -> Self {
        let n = self.vertices.len();
        if self.facets.iter().any(|f| f.len() == n) {
            return SimplicialComplex::void(self.vertices.clone());
        }
        let facets = self
            .minimal_nonfaces()
            .into_iter()
            .map(|g| (0..n).filter(|v| g.binary_search(v).is_err()).collect::<Face>());
        SimplicialComplex::new(self.vertices.clone(), facets)
    }

    /// Order complex of the poset of nonempty faces ordered by inclusion.
    ///
    /// Vertices are labelled `{a,b,...}` by the face they stand for. The
    /// subdivision of `{∅}` is `{∅}` and that of the void complex is void.
    pub fn barycentric_subdivision(&self) -> Self {
        if self.is_void() {
            return SimplicialComplex::void(Vec::new());
        }
        let faces: Vec<Face> = self
            .faces_by_size()
            .into_iter()
            .skip(1)
            .flatten()
            .collect();
        let labels: Vec<String> = faces
            .iter()
            .map(|f| {
                let names: Vec<&str> = f.iter().map(|&v| self.vertices[v].as_str()).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        if faces.is_empty() {
            return SimplicialComplex::empty_face(labels);
        }
        let index: HashMap<&Face, usize> = faces.iter().enumerate().map(|(i, f)| (f, i)).collect();
        // Maximal chains of faces: full flags inside each facet.
        let mut chains = Vec::new();
        for facet in &self.facets {
            flags(facet, &index, &mut Vec::new(), &mut chains);
        }
        SimplicialComplex::new(labels, chains)
    }

    /// Reduced Euler characteristic `Σ (-1)^dim F` over all faces including ∅.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.face_counts()
            .iter()
            .enumerate()
            .map(|(c, &n)| if c % 2 == 1 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Whether every facet of `self` is a face of `other`, matching vertices
    /// by label.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        let index: HashMap<&str, usize> = other
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        self.facets.iter().all(|f| {
            let mapped: Option<Face> = f
                .iter()
                .map(|&v| index.get(self.vertices[v].as_str()).copied())
                .collect();
            mapped.is_some_and(|m| other.contains(&m))
        })
    }

    /// The refined face counts `f[i][j]` and their `h` transform.
    pub fn fh_triangle(&self) -> FhTriangle {
        let top = match self.dim() {
            None => return FhTriangle { f: Vec::new(), h: Vec::new() },
            Some(d) => (d + 1) as usize,
        };
        let mut f = (0..=top).map(|i| vec![0u64; i + 1]).collect::<Vec<_>>();
        for face in self.faces_by_size().into_iter().flatten() {
            let i = self
                .facets
                .iter()
                .filter(|g| is_subset(&face, g))
                .map(Vec::len)
                .max()
                .expect("every face lies in a facet");
            f[i][face.len()] += 1;
        }
        let h = (0..=top)
            .map(|i| {
                (0..=i)
                    .map(|j| {
                        (0..=j)
                            .map(|k| {
                                let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
                                sign * binomial(i - k, j - k) as i64 * f[i][k] as i64
                            })
                            .sum()
                    })
                    .collect()
            })
            .collect();
        FhTriangle { f, h }
    }

    /// `(f_{-1}, f_0, …, f_{dim})`.
    pub fn f_vector(&self) -> Result<Vec<u64>> {
        if self.is_void() {
            return Err(Error::Precondition("the void complex has no f-vector".into()));
        }
        Ok(self.face_counts().into_iter().map(|n| n as u64).collect())
    }

    /// `h_j = Σ_k (-1)^{j-k} C(d-k, j-k) f_{k-1}` with `d = 1 + dim`.
    pub fn h_vector(&self) -> Result<Vec<i64>> {
        let f = self.f_vector()?;
        let d = f.len() - 1;
        Ok((0..=d)
            .map(|j| {
                (0..=j)
                    .map(|k| {
                        let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
                        sign * binomial(d - k, j - k) as i64 * f[k] as i64
                    })
                    .sum()
            })
            .collect())
    }

    /// Faces of dimension `d` grouped into gallery-connected components,
    /// where two `d`-faces are adjacent when they share `d` vertices.
    pub fn gallery_components(&self, d: i32) -> Vec<Vec<Face>> {
        if d < -1 {
            return Vec::new();
        }
        let size = (d + 1) as usize;
        let faces: Vec<Face> = self
            .faces_by_size()
            .into_iter()
            .nth(size)
            .unwrap_or_default();
        let mut parent: Vec<usize> = (0..faces.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        // Adjacent faces share a ridge: bucket by ridge.
        let mut by_ridge: HashMap<Face, usize> = HashMap::new();
        for (i, f) in faces.iter().enumerate() {
            for drop in 0..f.len() {
                let ridge: Face = f
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != drop)
                    .map(|(_, &v)| v)
                    .collect();
                match by_ridge.get(&ridge) {
                    Some(&j) => {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                        parent[a] = b;
                    }
                    None => {
                        by_ridge.insert(ridge, i);
                    }
                }
            }
        }
        let mut groups: Vec<Vec<Face>> = Vec::new();
        let mut root_index: HashMap<usize, usize> = HashMap::new();
        for (i, f) in faces.into_iter().enumerate() {
            let r = find(&mut parent, i);
            let g = *root_index.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[g].push(f);
        }
        groups
    }

    /// Writes the facet list in the text format `a b; a c; b c`.
    ///
    /// The void complex prints as the empty string and `{∅}` as `{}`.
    pub fn to_facet_list(&self) -> String {
        self.facets
            .iter()
            .map(|f| {
                if f.is_empty() {
                    "{}".to_string()
                } else {
                    f.iter()
                        .map(|&v| self.vertices[v].as_str())
                        .collect::<Vec<_>>()
                        .join(" ")
                }
            })
            .collect::<Vec<_>>()
            .join("; ")
    }

    /// Labels of a face.
    pub fn face_labels(&self, face: &[usize]) -> Vec<String> {
        face.iter().map(|&v| self.vertices[v].clone()).collect()
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            f.write_str("void")
        } else {
            f.write_str(&self.to_facet_list())
        }
    }
}

/// Refined face numbers and their alternating-sum transform.
///
/// Row `i` has entries `0..=i`; `f[i][j]` counts faces with `j` vertices whose
/// largest containing face has `i` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FhTriangle {
    pub f: Vec<Vec<u64>>,
    pub h: Vec<Vec<i64>>,
}

impl FhTriangle {
    pub fn h_diagonal(&self, i: usize) -> i64 {
        self.h.get(i).map_or(0, |row| row[i])
    }
}

// Complete flags below `face`, walking down one vertex at a time.
fn flags(face: &[usize], index: &HashMap<&Face, usize>, chain: &mut Vec<usize>, out: &mut Vec<Face>) {
    if face.is_empty() {
        out.push(chain.clone());
        return;
    }
    chain.push(index[&face.to_vec()]);
    for drop in 0..face.len() {
        let sub: Face = face
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != drop)
            .map(|(_, &v)| v)
            .collect();
        flags(&sub, index, chain, out);
    }
    chain.pop();
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn subsets_of_size(set: &[usize], size: usize) -> Vec<Face> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(set: &[usize], start: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Face>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..set.len() {
            if set.len() - i < size - cur.len() {
                break;
            }
            cur.push(set[i]);
            rec(set, i + 1, size, cur, out);
            cur.pop();
        }
    }
    rec(set, 0, size, &mut current, &mut out);
    out
}

pub(crate) fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    fn complex(text: &[&[usize]], n: usize) -> SimplicialComplex {
        SimplicialComplex::new(
            labels(n),
            text.iter().map(|f| f.iter().map(|v| v - 1).collect()),
        )
    }

    fn delta_18() -> SimplicialComplex {
        // Order complex of the open interval (1,8) of POSET8, on 2..7.
        SimplicialComplex::from_labelled_facets(&[
            vec!["2", "4"],
            vec!["2", "5"],
            vec!["3", "4"],
            vec!["3", "5"],
            vec!["6"],
            vec!["7"],
        ])
    }

    #[test]
    fn void_and_empty_face_are_distinct() {
        let void = SimplicialComplex::void(labels(2));
        let empty = SimplicialComplex::empty_face(labels(2));
        assert!(void.is_void());
        assert!(!empty.is_void());
        assert!(empty.is_empty_face());
        assert_eq!(void.dim(), None);
        assert_eq!(empty.dim(), Some(-1));
        assert_ne!(void, empty);
        assert_eq!(empty.face_counts(), vec![1]);
        assert!(void.face_counts().is_empty());
    }

    #[test]
    fn facets_are_pruned_and_sorted() {
        let c = complex(&[&[2, 3], &[1], &[1, 2], &[2]], 3);
        assert_eq!(c.facets(), &[vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn sequential_layers_of_delta_18() {
        let d = delta_18();
        assert_eq!(d.sequential_layer(-1), d);
        assert_eq!(d.sequential_layer(0), d);
        let cycle = d.sequential_layer(1);
        assert_eq!(cycle.facets().len(), 4);
        assert!(cycle.is_pure());
        assert!(d.sequential_layer(2).is_void());
    }

    #[test]
    fn layer_zero_of_empty_face_is_void() {
        let e = SimplicialComplex::empty_face(vec![]);
        assert_eq!(e.sequential_layer(-1), e);
        assert!(e.sequential_layer(0).is_void());
    }

    #[test]
    fn layers_share_faces_above_index() {
        let d = delta_18();
        for j in -1..3 {
            let a = d.sequential_layer(j).faces_by_size();
            let b = d.sequential_layer(j + 1).faces_by_size();
            for size in (j + 2).max(0) as usize..a.len() {
                assert_eq!(a.get(size), b.get(size));
            }
        }
    }

    #[test]
    fn links() {
        let tri = complex(&[&[1, 2], &[1, 3], &[2, 3]], 3);
        assert_eq!(tri.link(&[]).unwrap(), tri);
        assert!(tri.link(&[0, 1]).unwrap().is_empty_face());
        let l = tri.link(&[0]).unwrap();
        assert_eq!(l.facets(), &[vec![1], vec![2]]);
        assert!(tri.link(&[0, 1, 2]).is_err());
    }

    #[test]
    fn joins() {
        let s0 = SimplicialComplex::from_labelled_facets(&[vec!["a"], vec!["b"]]);
        let t0 = SimplicialComplex::from_labelled_facets(&[vec!["c"], vec!["d"]]);
        let circle = s0.join(&t0).unwrap();
        assert_eq!(circle.facets().len(), 4);
        assert_eq!(circle.dim(), Some(1));
        assert!(s0.join(&s0).is_err());
        assert_eq!(s0.join_tagged(&s0).facets().len(), 4);

        let e = SimplicialComplex::empty_face(vec![]);
        assert_eq!(e.join(&s0).unwrap(), s0);
        let v = SimplicialComplex::void(vec![]);
        assert!(v.join(&s0).unwrap().is_void());
    }

    #[test]
    fn alexander_duals() {
        let boundary = complex(&[&[1, 2], &[1, 3], &[2, 3]], 3);
        assert!(boundary.alexander_dual().is_empty_face());
        let point = complex(&[&[1]], 2);
        assert_eq!(point.alexander_dual(), point);
        assert!(SimplicialComplex::simplex(labels(3)).alexander_dual().is_void());
        assert_eq!(
            SimplicialComplex::void(labels(3)).alexander_dual(),
            SimplicialComplex::simplex(labels(3))
        );
    }

    #[test]
    fn barycentric_subdivisions() {
        let edge = complex(&[&[1, 2]], 2);
        let sd = edge.barycentric_subdivision();
        assert_eq!(sd.vertices().len(), 3);
        assert_eq!(sd.facets().len(), 2);

        let boundary = complex(&[&[1, 2], &[1, 3], &[2, 3]], 3);
        let sd = boundary.barycentric_subdivision();
        assert_eq!(sd.face_counts(), vec![1, 6, 6]);

        assert!(SimplicialComplex::void(vec![]).barycentric_subdivision().is_void());
        assert!(SimplicialComplex::empty_face(vec![])
            .barycentric_subdivision()
            .is_empty_face());
    }

    #[test]
    fn skeleta_and_purity() {
        let d = delta_18();
        let sk = d.pure_skeleton(1);
        assert_eq!(sk, d.sequential_layer(1));
        assert!(!d.is_pure());
        let tri = SimplicialComplex::simplex(labels(3));
        assert_eq!(tri.pure_skeleton(2), tri);
        assert!(tri.is_pure());
    }

    #[test]
    fn fh_triangle_of_delta_18() {
        let t = delta_18().fh_triangle();
        assert_eq!(t.f, vec![vec![0], vec![0, 2], vec![1, 4, 4]]);
        assert_eq!(t.h_diagonal(0), 0);
        assert_eq!(t.h_diagonal(1), 2);
        assert_eq!(t.h_diagonal(2), 1);
    }

    #[test]
    fn f_and_h_vectors() {
        let edge = complex(&[&[1, 2]], 2);
        assert_eq!(edge.f_vector().unwrap(), vec![1, 2, 1]);
        assert_eq!(edge.h_vector().unwrap(), vec![1, 0, 0]);
        let boundary = complex(&[&[1, 2], &[1, 3], &[2, 3]], 3);
        assert_eq!(boundary.h_vector().unwrap(), vec![1, 1, 1]);
        assert!(SimplicialComplex::void(vec![]).f_vector().is_err());
    }

    #[test]
    fn gallery_components_count() {
        let two_edges = complex(&[&[1, 2], &[3, 4]], 4);
        assert_eq!(two_edges.gallery_components(1).len(), 2);
        assert_eq!(two_edges.gallery_components(0).len(), 1);
        assert_eq!(delta_18().gallery_components(1).len(), 1);
    }

    #[test]
    fn minimal_nonfaces_of_square() {
        let square = complex(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]], 4);
        assert_eq!(square.minimal_nonfaces(), vec![vec![0, 1], vec![2, 3]]);
    }
}
