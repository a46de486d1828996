//! Hilbert and Poincaré matrices indexed by point classes, and the
//! identities relating them to Tor and to h-triangles.

use std::fmt;

use crate::algebra::IncidenceAlgebra;
use crate::error::{Error, Result};
use crate::homology::{is_seq_acyclic, relative_homology};
use crate::koszul::{interval_complex, tor_topological};
use crate::linalg::Field;
use crate::simplicial::SimplicialComplex;

/// Integer polynomial in `t`, coefficients by ascending degree, no trailing
/// zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly(Vec<i64>);

impl Poly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![1])
    }

    pub fn monomial(coeff: i64, degree: usize) -> Self {
        let mut c = vec![0; degree + 1];
        c[degree] = coeff;
        Poly::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.0.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, coeff: i64, degree: usize) {
        if self.0.len() <= degree {
            self.0.resize(degree + 1, 0);
        }
        self.0[degree] += coeff;
        *self = Poly::new(std::mem::take(&mut self.0));
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        Poly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    /// `p(-t)`.
    pub fn negate_variable(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .map(|(k, &c)| if k % 2 == 0 { c } else { -c })
                .collect(),
        )
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (k, &c) in self.0.iter().enumerate().filter(|(_, &c)| c != 0) {
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            match (k, a) {
                (0, _) => out.push_str(&a.to_string()),
                (_, 1) => {}
                _ => out.push_str(&a.to_string()),
            }
            match k {
                0 => {}
                1 => out.push('t'),
                _ => out.push_str(&format!("t^{k}")),
            }
        }
        f.write_str(&out)
    }
}

/// Square matrix of polynomials with rows and columns labelled by point
/// classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub labels: Vec<String>,
    pub entries: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    fn zeros(labels: Vec<String>) -> Self {
        let n = labels.len();
        PolyMatrix {
            labels,
            entries: vec![vec![Poly::zero(); n]; n],
        }
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly {
        &self.entries[row][col]
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        let n = self.size();
        let mut out = PolyMatrix::zeros(self.labels.clone());
        for i in 0..n {
            for j in 0..n {
                let mut acc = Poly::zero();
                for k in 0..n {
                    acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
                }
                out.entries[i][j] = acc;
            }
        }
        out
    }

    pub fn negate_variable(&self) -> PolyMatrix {
        PolyMatrix {
            labels: self.labels.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(Poly::negate_variable).collect())
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        (0..self.size()).all(|i| {
            (0..self.size()).all(|j| {
                let expected = if i == j { Poly::one() } else { Poly::zero() };
                self.entries[i][j] == expected
            })
        })
    }

    /// Row-major strings, one vector per row.
    pub fn rows(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(Poly::to_string).collect())
            .collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in rows {
            let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", cells.join("  "))?;
        }
        Ok(())
    }
}

fn labelled(algebra: &IncidenceAlgebra) -> (Vec<usize>, PolyMatrix) {
    let points = algebra.point_classes();
    let rel = algebra.relation();
    let labels = points.iter().map(|&p| rel.point_label(p).to_string()).collect();
    (points, PolyMatrix::zeros(labels))
}

fn position(points: &[usize], class: usize) -> usize {
    points.iter().position(|&p| p == class).expect("point class")
}

/// `P(t)`: entry `(x̃, ỹ)` is `Σ t^{ℓ(α)}` over classes from `x̃` to `ỹ`.
pub fn hilbert_matrix(algebra: &IncidenceAlgebra) -> PolyMatrix {
    let (points, mut m) = labelled(algebra);
    for a in 0..algebra.num_classes() {
        let (r, c) = (
            position(&points, algebra.source(a)),
            position(&points, algebra.target(a)),
        );
        m.entries[r][c].add_term(1, algebra.length(a));
    }
    m
}

/// `Q(t)`: entry `(x̃, ỹ)` is `Σ_i dim Tor_i(k_x̃, k_ỹ) t^i`.
pub fn poincare_matrix(algebra: &IncidenceAlgebra, field: Field) -> PolyMatrix {
    let (points, mut m) = labelled(algebra);
    let tor = tor_topological(algebra, None, field);
    for (&(s, t, i, _), &dim) in tor.entries() {
        m.entries[position(&points, s)][position(&points, t)].add_term(dim as i64, i);
    }
    m
}

/// `Q(t)` from h-triangle diagonals of the open intervals, valid when the
/// algebra is Koszul: `δ + Σ_α Σ_{i≥1} h_{i-1,i-1}(Δ_α) t^i`.
pub fn poincare_from_h_diagonals(algebra: &IncidenceAlgebra) -> PolyMatrix {
    let (points, mut m) = labelled(algebra);
    for (k, row) in m.entries.iter_mut().enumerate() {
        row[k] = Poly::one();
    }
    for a in algebra.positive_classes() {
        let delta = interval_complex(algebra, a);
        let tri = delta.fh_triangle();
        let (r, c) = (
            position(&points, algebra.source(a)),
            position(&points, algebra.target(a)),
        );
        for i in 1..=tri.h.len() {
            m.entries[r][c].add_term(tri.h_diagonal(i - 1), i);
        }
    }
    m
}

/// Whether `P(t)·Q(-t) = I`, together with the product.
pub fn verify_koszul_identity(algebra: &IncidenceAlgebra, field: Field) -> (bool, PolyMatrix) {
    let p = hilbert_matrix(algebra);
    let q = poincare_matrix(algebra, field);
    let product = p.mul(&q.negate_variable());
    (product.is_identity(), product)
}

/// `h_{i,i}(Δ) = dim H̃_{i-1}(Δ^⟨i-1⟩, Δ^⟨i⟩)` for every `i ≥ 0`; requires a
/// sequentially acyclic complex.
pub fn h_diagonal_check(complex: &SimplicialComplex, field: Field) -> Result<bool> {
    if !is_seq_acyclic(complex, field) {
        return Err(Error::Precondition(
            "the complex is not sequentially acyclic".into(),
        ));
    }
    let Some(dim) = complex.dim() else {
        return Ok(true);
    };
    let tri = complex.fh_triangle();
    Ok((0..=dim + 1).all(|i| {
        let h = relative_homology(
            &complex.sequential_layer(i - 1),
            &complex.sequential_layer(i),
            field,
        )
        .expect("layers are nested");
        tri.h_diagonal(i as usize) == h.get(i - 1) as i64
    }))
}
