//! Reduced and relative simplicial homology over a field, and the
//! Cohen-Macaulay style predicates built on it.
//!
//! Chain groups are augmented: a nonvoid complex has the empty face as its
//! single generator in degree `-1`. The void complex has no chains at all.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix};
use crate::simplicial::{Face, SimplicialComplex};

/// Dimensions of reduced homology groups, indexed by degree `i ≥ -1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiProfile {
    // entry k is degree k - 1
    dims: Vec<usize>,
}

impl BettiProfile {
    fn from_dims(mut dims: Vec<usize>) -> Self {
        while dims.last() == Some(&0) {
            dims.pop();
        }
        BettiProfile { dims }
    }

    pub fn get(&self, degree: i32) -> usize {
        if degree < -1 {
            return 0;
        }
        self.dims.get((degree + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// `(degree, dimension)` for every nonzero group.
    pub fn nonzero(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(k, &d)| (k as i32 - 1, d))
    }

    /// Least degree with nonzero homology.
    pub fn lowest(&self) -> Option<i32> {
        self.nonzero().next().map(|(i, _)| i)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(i, d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

impl fmt::Display for BettiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .nonzero()
            .map(|(i, d)| format!("H{i}={d}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Reduced homology of `complex`.
pub fn reduced_homology(complex: &SimplicialComplex, field: Field) -> BettiProfile {
    chain_homology(complex.faces_by_size(), field)
}

/// Homology of the pair `(complex, sub)`; `sub` may be void.
pub fn relative_homology(
    complex: &SimplicialComplex,
    sub: &SimplicialComplex,
    field: Field,
) -> Result<BettiProfile> {
    let sub = sub
        .with_universe(complex.vertices().to_vec())
        .map_err(|_| Error::NotASubcomplex)?;
    if !sub.facets().iter().all(|f| complex.contains(f)) {
        return Err(Error::NotASubcomplex);
    }
    let removed: HashSet<Face> = sub.faces_by_size().into_iter().flatten().collect();
    let faces = complex
        .faces_by_size()
        .into_iter()
        .map(|group| group.into_iter().filter(|f| !removed.contains(f)).collect())
        .collect();
    Ok(chain_homology(faces, field))
}

/// Homology of the chain complex spanned by `faces` (grouped by cardinality),
/// where boundary terms falling outside the listed faces are dropped.
fn chain_homology(faces: Vec<Vec<Face>>, field: Field) -> BettiProfile {
    let count = faces.len();
    if count == 0 {
        return BettiProfile::default();
    }
    // ranks[s] = rank of the boundary from faces of size s to size s-1
    let mut ranks = vec![0usize; count + 1];
    for s in 1..count {
        if faces[s].is_empty() || faces[s - 1].is_empty() {
            continue;
        }
        let lower: HashMap<&Face, usize> =
            faces[s - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut m = Matrix::zeros(faces[s].len(), faces[s - 1].len());
        for (row, face) in faces[s].iter().enumerate() {
            for drop in 0..face.len() {
                let sub: Face = face
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != drop)
                    .map(|(_, &v)| v)
                    .collect();
                if let Some(&col) = lower.get(&sub) {
                    m.set(row, col, if drop % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        ranks[s] = m.rank(field);
    }
    let dims = (0..count)
        .map(|s| faces[s].len() - ranks[s] - ranks[s + 1])
        .collect();
    BettiProfile::from_dims(dims)
}

/// Whether `H̃_i(link F) = 0` for all `i < dim link F` and every face `F`.
pub fn is_cm(complex: &SimplicialComplex, field: Field) -> bool {
    all_links(complex, |link| {
        let d = link.dim().unwrap_or(-1);
        reduced_homology(link, field)
            .lowest()
            .is_none_or(|i| i >= d)
    })
}

/// First `(i, j)` in lexicographic order with `H̃_i(Δ^⟨j⟩) ≠ 0` and
/// `-1 ≤ i < j ≤ dim Δ`, if any.
pub fn seq_acyclic_witness(complex: &SimplicialComplex, field: Field) -> Option<(i32, i32)> {
    let dim = complex.dim()?;
    let mut best: Option<(i32, i32)> = None;
    for j in 0..=dim {
        let h = reduced_homology(&complex.sequential_layer(j), field);
        let low = h.lowest().filter(|&i| i < j);
        if let Some(i) = low {
            if best.is_none_or(|b| (i, j) < b) {
                best = Some((i, j));
            }
        }
    }
    best
}

pub fn is_seq_acyclic(complex: &SimplicialComplex, field: Field) -> bool {
    seq_acyclic_witness(complex, field).is_none()
}

/// First `(i, j)` with `H̃_i(Δ^⟨j⟩, Δ^⟨j+1⟩) ≠ 0` and `-1 ≤ i < j`.
pub fn seq_acyclic_relative_witness(
    complex: &SimplicialComplex,
    field: Field,
) -> Option<(i32, i32)> {
    let dim = complex.dim()?;
    let mut best: Option<(i32, i32)> = None;
    for j in 0..=dim {
        let h = relative_homology(
            &complex.sequential_layer(j),
            &complex.sequential_layer(j + 1),
            field,
        )
        .expect("layers are nested");
        let low = h.lowest().filter(|&i| i < j);
        if let Some(i) = low {
            if best.is_none_or(|b| (i, j) < b) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Every link (including the link of ∅, the complex itself) is
/// sequentially acyclic.
pub fn is_seq_cm(complex: &SimplicialComplex, field: Field) -> bool {
    seq_cm_witness(complex, field).is_none()
}

/// A face whose link is not sequentially acyclic, with the failing `(i, j)`.
pub fn seq_cm_witness(
    complex: &SimplicialComplex,
    field: Field,
) -> Option<(Face, (i32, i32))> {
    for face in complex.faces_by_size().into_iter().flatten() {
        let link = complex.link(&face).expect("face of the complex");
        if let Some(w) = seq_acyclic_witness(&link, field) {
            return Some((face, w));
        }
    }
    None
}

fn all_links(complex: &SimplicialComplex, mut test: impl FnMut(&SimplicialComplex) -> bool) -> bool {
    complex
        .faces_by_size()
        .into_iter()
        .flatten()
        .all(|face| test(&complex.link(&face).expect("face of the complex")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    fn complex(facets: &[&[usize]], n: usize) -> SimplicialComplex {
        SimplicialComplex::new(
            labels(n),
            facets.iter().map(|f| f.iter().map(|v| v - 1).collect()),
        )
    }

    fn delta_18() -> SimplicialComplex {
        complex(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4], &[5], &[6]], 6)
    }

    fn rp2() -> SimplicialComplex {
        complex(
            &[
                &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
                &[2, 3, 5], &[2, 4, 5], &[2, 4, 6], &[3, 4, 6], &[3, 5, 6],
            ],
            6,
        )
    }

    #[test]
    fn degenerate_complexes() {
        let e = SimplicialComplex::empty_face(vec![]);
        let h = reduced_homology(&e, Field::Rationals);
        assert_eq!(h.get(-1), 1);
        assert_eq!(h.nonzero().count(), 1);
        let v = SimplicialComplex::void(vec![]);
        assert!(reduced_homology(&v, Field::Rationals).is_zero());
        assert!(reduced_homology(&v, Field::Prime(2)).is_zero());
    }

    #[test]
    fn circle_and_delta_18() {
        let c4 = complex(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]], 4);
        let h = reduced_homology(&c4, Field::Rationals);
        assert_eq!((h.get(0), h.get(1)), (0, 1));
        let h = reduced_homology(&delta_18(), Field::Rationals);
        assert_eq!((h.get(-1), h.get(0), h.get(1)), (0, 2, 1));
    }

    #[test]
    fn relative_groups_of_delta_18() {
        let d = delta_18();
        for field in [Field::Rationals, Field::Prime(2)] {
            let h = relative_homology(&d.sequential_layer(0), &d.sequential_layer(1), field).unwrap();
            assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(0, 2)]);
            let h = relative_homology(&d.sequential_layer(1), &d.sequential_layer(2), field).unwrap();
            assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(1, 1)]);
            assert!(relative_homology(&d, &d, field).unwrap().is_zero());
        }
    }

    #[test]
    fn relative_requires_subcomplex() {
        let edge = complex(&[&[1, 2]], 3);
        let other = complex(&[&[2, 3]], 3);
        assert!(matches!(
            relative_homology(&edge, &other, Field::Rationals),
            Err(Error::NotASubcomplex)
        ));
    }

    #[test]
    fn projective_plane_depends_on_field() {
        let p = rp2();
        assert!(reduced_homology(&p, Field::Rationals).is_zero());
        let h2 = reduced_homology(&p, Field::Prime(2));
        assert_eq!((h2.get(1), h2.get(2)), (1, 1));
        assert!(reduced_homology(&p, Field::Prime(3)).is_zero());
    }

    #[test]
    fn predicates() {
        let q = Field::Rationals;
        assert!(is_seq_acyclic(&delta_18(), q));
        let two_edges = complex(&[&[1, 2], &[3, 4]], 4);
        assert_eq!(seq_acyclic_witness(&two_edges, q), Some((0, 1)));
        assert!(!is_seq_cm(&two_edges, q));
        let hexagon = complex(&[&[1, 2], &[1, 3], &[2, 3]], 3).barycentric_subdivision();
        assert!(is_cm(&hexagon, q));
        for c in [
            SimplicialComplex::void(vec![]),
            SimplicialComplex::empty_face(vec![]),
        ] {
            assert!(is_cm(&c, q));
            assert!(is_seq_cm(&c, q));
        }
        // Edge plus isolated vertex: sequentially CM, not CM.
        let mixed = complex(&[&[1, 2], &[3]], 3);
        assert!(is_seq_cm(&mixed, q));
        assert!(!is_cm(&mixed, q));
        assert!(!is_cm(&two_edges, q));
    }

    #[test]
    fn euler_characteristic_matches_faces() {
        for c in [delta_18(), rp2(), complex(&[&[1, 2], &[3]], 3)] {
            let h = reduced_homology(&c, Field::Rationals);
            assert_eq!(h.euler_characteristic(), c.reduced_euler_characteristic());
        }
    }
}
