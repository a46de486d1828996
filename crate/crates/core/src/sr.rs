//! Stanley-Reisner ideals as monomial right ideals of the squarefree divisor
//! poset, and componentwise linearity via sequential acyclicity.

use crate::algebra::IncidenceAlgebra;
use crate::builders::{divisor_window, monomial_name};
use crate::error::{Error, Result};
use crate::homology::{is_cm, is_seq_cm, reduced_homology, seq_acyclic_witness};
use crate::koszul::{restricted_complex, MonomialRightIdeal};
use crate::linalg::Field;
use crate::simplicial::{Face, SimplicialComplex};

/// A squarefree monomial ideal of `k[x_1..x_n]`, by its minimal generators
/// (vertex subsets, 0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeIdeal {
    n: usize,
    generators: Vec<Face>,
}

impl SquarefreeIdeal {
    /// `I_Δ`, generated by the minimal non-faces of `complex` over its own
    /// vertex universe.
    pub fn of_complex(complex: &SimplicialComplex) -> Self {
        SquarefreeIdeal {
            n: complex.vertices().len(),
            generators: complex.minimal_nonfaces(),
        }
    }

    pub fn num_variables(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Face] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(Vec::is_empty)
    }

    /// Whether every minimal generator has the same degree.
    pub fn is_equigenerated(&self) -> bool {
        self.generators.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| monomial_name(&self.exponents(g, 1)))
            .collect()
    }

    fn exponents(&self, support: &[usize], power: i64) -> Vec<i64> {
        let mut e = vec![0; self.n];
        for &v in support {
            e[v] = power;
        }
        e
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::Precondition("the ideal is zero".into()));
        }
        if self.is_unit() {
            return Err(Error::Precondition(
                "the ideal is the unit ideal (the complex is void)".into(),
            ));
        }
        Ok(())
    }

    /// The window algebra of `x_1⋯x_n` and the right ideal generated by the
    /// minimal generators inside it.
    fn embed(&self) -> Result<(IncidenceAlgebra, MonomialRightIdeal)> {
        self.require_proper()?;
        let window = divisor_window(&vec![1; self.n]);
        let algebra = IncidenceAlgebra::semigroup_window(window.relation())?;
        let rel = algebra.relation();
        let bottom = monomial_name(&vec![0; self.n]);
        let gens = self
            .generators
            .iter()
            .map(|g| rel.class_by_names(&bottom, &monomial_name(&self.exponents(g, 1))))
            .collect::<Result<Vec<_>>>()?;
        let ideal = MonomialRightIdeal::from_generators(&algebra, &gens)?;
        Ok((algebra, ideal))
    }
}

/// Verdict over the squarefree classes of the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearityVerdict {
    pub componentwise_linear: bool,
    /// First failing class (as a monomial) and the least `(i, j)` with
    /// `H̃_i` of its restricted complex's `j`-th layer nonzero.
    pub witness: Option<(String, (i32, i32))>,
    pub classes_checked: usize,
}

/// Componentwise linearity of `I`: every squarefree class of `I` has a
/// sequentially acyclic restricted complex. Classes with a repeated variable
/// are not examined; see [`non_squarefree_violations`].
pub fn is_componentwise_linear(ideal: &SquarefreeIdeal, field: Field) -> Result<LinearityVerdict> {
    let (algebra, j) = ideal.embed()?;
    let members = j.members();
    for &a in &members {
        let delta = restricted_complex(&algebra, &j, a)?;
        if let Some(w) = seq_acyclic_witness(&delta, field) {
            let rel = algebra.relation();
            let top = rel.class(a).representative;
            let lo = rel.poset().name(top.lo);
            let hi = rel.poset().name(top.hi);
            let label = if lo == "1" { hi.to_string() } else { rel.class_label(a) };
            return Ok(LinearityVerdict {
                componentwise_linear: false,
                witness: Some((label, w)),
                classes_checked: members.len(),
            });
        }
    }
    Ok(LinearityVerdict {
        componentwise_linear: true,
        witness: None,
        classes_checked: members.len(),
    })
}

/// Monomials `x^α ∈ I` with every exponent at most 2, some exponent equal to
/// 2 and total degree at most `max_degree`, whose restricted complex (taken
/// in the divisor window of `x^α`) has a sequential layer with nonzero
/// reduced homology. Expected empty.
pub fn non_squarefree_violations(
    ideal: &SquarefreeIdeal,
    field: Field,
    max_degree: usize,
) -> Result<Vec<String>> {
    ideal.require_proper()?;
    let n = ideal.n;
    let mut out = Vec::new();
    for code in 0..3usize.pow(n as u32) {
        let alpha: Vec<i64> = (0..n).map(|v| (code / 3usize.pow(v as u32) % 3) as i64).collect();
        if !alpha.contains(&2) || alpha.iter().sum::<i64>() as usize > max_degree {
            continue;
        }
        let dividing: Vec<&Face> = ideal
            .generators
            .iter()
            .filter(|g| g.iter().all(|&v| alpha[v] > 0))
            .collect();
        if dividing.is_empty() {
            continue;
        }
        let window = divisor_window(&alpha);
        let algebra = IncidenceAlgebra::semigroup_window(window.relation())?;
        let rel = algebra.relation();
        let bottom = monomial_name(&vec![0; n]);
        let gens = dividing
            .iter()
            .map(|g| rel.class_by_names(&bottom, &monomial_name(&ideal.exponents(g, 1))))
            .collect::<Result<Vec<_>>>()?;
        let j = MonomialRightIdeal::from_generators(&algebra, &gens)?;
        let top = rel.class_by_names(&bottom, &monomial_name(&alpha))?;
        let delta = restricted_complex(&algebra, &j, top)?;
        let dim = delta.dim().unwrap_or(-1);
        let bad = (-1..=dim + 1)
            .any(|m| !reduced_homology(&delta.sequential_layer(m), field).is_zero());
        if bad {
            out.push(monomial_name(&alpha));
        }
    }
    Ok(out)
}

/// Componentwise linearity of `I_Δ` set against sequential Cohen-Macaulayness
/// of the Alexander dual, and against Cohen-Macaulayness when the dual is
/// pure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub linearity: LinearityVerdict,
    pub dual: SimplicialComplex,
    pub dual_seq_cm: bool,
    pub dual_pure: bool,
    pub dual_cm: Option<bool>,
}

impl DualityReport {
    pub fn agreement(&self) -> bool {
        let v = self.linearity.componentwise_linear;
        v == self.dual_seq_cm && self.dual_cm.is_none_or(|cm| cm == v)
    }
}

pub fn duality_crosscheck(complex: &SimplicialComplex, field: Field) -> Result<DualityReport> {
    let ideal = SquarefreeIdeal::of_complex(complex);
    let linearity = is_componentwise_linear(&ideal, field)?;
    let dual = complex.alexander_dual();
    let dual_pure = dual.is_pure();
    Ok(DualityReport {
        linearity,
        dual_seq_cm: is_seq_cm(&dual, field),
        dual_pure,
        dual_cm: dual_pure.then(|| is_cm(&dual, field)),
        dual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn on(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::new(
            (1..=n).map(|i| i.to_string()).collect(),
            facets.iter().map(|f| f.iter().map(|v| v - 1).collect()),
        )
    }

    #[test]
    fn ideals_of_small_complexes() {
        let boundary = on(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(SquarefreeIdeal::of_complex(&boundary).generator_names(), ["x1x2x3"]);
        assert_eq!(SquarefreeIdeal::of_complex(&on(2, &[&[1]])).generator_names(), ["x2"]);
        let full = SquarefreeIdeal::of_complex(&on(3, &[&[1, 2, 3]]));
        assert!(full.is_zero());
        assert!(matches!(
            is_componentwise_linear(&full, Field::Rationals),
            Err(Error::Precondition(_))
        ));
        let void = SquarefreeIdeal::of_complex(&SimplicialComplex::void(vec!["1".into()]));
        assert!(void.is_unit());
        assert!(is_componentwise_linear(&void, Field::Rationals).is_err());
    }

    #[test]
    fn linearity_verdicts() {
        let q = Field::Rationals;
        let principal = SquarefreeIdeal::of_complex(&on(3, &[&[1, 2], &[1, 3], &[2, 3]]));
        assert!(is_componentwise_linear(&principal, q).unwrap().componentwise_linear);
        assert!(is_componentwise_linear(&SquarefreeIdeal::of_complex(&on(2, &[&[1]])), q)
            .unwrap()
            .componentwise_linear);

        // I_Δ = ⟨x1x2, x3x4⟩ for Δ = the square 1-3-2-4
        let square = on(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let ideal = SquarefreeIdeal::of_complex(&square);
        assert_eq!(ideal.generator_names(), ["x1x2", "x3x4"]);
        let v = is_componentwise_linear(&ideal, q).unwrap();
        assert!(!v.componentwise_linear);
        assert_eq!(v.witness.unwrap().0, "x1x2x3x4");

        let report = duality_crosscheck(&square, q).unwrap();
        assert!(!report.dual_seq_cm && report.agreement());
        assert_eq!(report.dual.facets().len(), 2);
    }

    #[test]
    fn repeated_variable_classes_are_acyclic() {
        let square = on(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let ideal = SquarefreeIdeal::of_complex(&square);
        assert!(non_squarefree_violations(&ideal, Field::Rationals, 6).unwrap().is_empty());
    }
}
