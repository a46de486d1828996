//! The reduced incidence algebra of a validated interval relation.

use crate::error::{Error, Result};
use crate::interval::{Axiom, IntervalEquivalence, RelationKind};

/// Whether the relation satisfies every axiom on its own, or is a finite
/// window `[0, top]` of an affine semigroup.
///
/// A window fails the concatenation axiom (products that leave the window
/// have no realizing chain), yet every interval `[0, σ]` of the window is an
/// interval of the ambient semigroup. Window algebras therefore support the
/// interval-local computations (restricted subposets, topological Tor,
/// Koszul verdicts) but not the bar complex, which needs all products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Completeness {
    Finite,
    AmbientSemigroup,
}

/// Product tables of `k[P]_red` and of its associated graded ring.
#[derive(Clone, Debug)]
pub struct IncidenceAlgebra {
    relation: IntervalEquivalence,
    completeness: Completeness,
    classes: usize,
    product: Vec<Option<usize>>,
}

impl IncidenceAlgebra {
    /// Validates all axioms and builds the multiplication table.
    pub fn new(relation: IntervalEquivalence) -> Result<Self> {
        if let Some(r) = relation.validate_axioms().into_iter().find(|r| !r.passed()) {
            return Err(Error::AxiomViolation(Box::new(r)));
        }
        Ok(Self::build(relation, Completeness::Finite))
    }

    /// Accepts a semigroup window, which must pass every axiom except
    /// concatenation.
    pub fn semigroup_window(relation: IntervalEquivalence) -> Result<Self> {
        if relation.kind() != RelationKind::Semigroup {
            return Err(Error::Precondition(
                "window algebras need a semigroup relation".into(),
            ));
        }
        let failing = relation
            .validate_axioms()
            .into_iter()
            .find(|r| !r.passed() && r.axiom != Axiom::A4);
        if let Some(r) = failing {
            return Err(Error::AxiomViolation(Box::new(r)));
        }
        Ok(Self::build(relation, Completeness::AmbientSemigroup))
    }

    fn build(relation: IntervalEquivalence, completeness: Completeness) -> Self {
        let c = relation.num_classes();
        let mut product = vec![None; c * c];
        for (x, y, z) in relation.triples() {
            let a = relation.class_of(x, y);
            let b = relation.class_of(y, z);
            product[a * c + b] = Some(relation.class_of(x, z));
        }
        IncidenceAlgebra {
            relation,
            completeness,
            classes: c,
            product,
        }
    }

    pub fn relation(&self) -> &IntervalEquivalence {
        &self.relation
    }

    pub fn completeness(&self) -> Completeness {
        self.completeness
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn length(&self, class: usize) -> usize {
        self.relation.class(class).length
    }

    pub fn source(&self, class: usize) -> usize {
        self.relation.class(class).source
    }

    pub fn target(&self, class: usize) -> usize {
        self.relation.class(class).target
    }

    /// `ξ_a ξ_b` in `k[P]_red`.
    pub fn product(&self, a: usize, b: usize) -> Option<usize> {
        self.product[a * self.classes + b]
    }

    /// `ξ_a ξ_b` in the associated graded ring: nonzero only when lengths
    /// add.
    pub fn gr_product(&self, a: usize, b: usize) -> Option<usize> {
        self.product(a, b)
            .filter(|&g| self.length(g) == self.length(a) + self.length(b))
    }

    /// Classes of positive length, in id order.
    pub fn positive_classes(&self) -> Vec<usize> {
        (0..self.classes).filter(|&c| self.length(c) > 0).collect()
    }

    pub fn point_classes(&self) -> Vec<usize> {
        self.relation.point_classes()
    }

    /// Fails unless every product of composable classes is realized.
    pub fn require_finite(&self) -> Result<()> {
        match self.completeness {
            Completeness::Finite => Ok(()),
            Completeness::AmbientSemigroup => Err(Error::Precondition(
                "the bar complex needs the concatenation axiom; a semigroup window does not satisfy it".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{chain, divisor_window, Fixture};

    #[test]
    fn chain_products() {
        let e = IntervalEquivalence::trivial(&chain(3));
        let a = IncidenceAlgebra::new(e).unwrap();
        let r = a.relation();
        let (c12, c23, c13) = (r.class_of(0, 1), r.class_of(1, 2), r.class_of(0, 2));
        assert_eq!(a.product(c12, c23), Some(c13));
        assert_eq!(a.gr_product(c12, c23), Some(c13));
        assert_eq!(a.product(c23, c12), None);
        assert_eq!(a.positive_classes().len(), 3);
    }

    #[test]
    fn poset8_gr_product_drops_short_paths() {
        let e = IntervalEquivalence::trivial(&Fixture::Poset8.poset());
        let a = IncidenceAlgebra::new(e).unwrap();
        let r = a.relation();
        let p = r.poset();
        let (one, six, eight) = (0, p.index_of("6").unwrap(), p.index_of("8").unwrap());
        let (a16, a68) = (r.class_of(one, six), r.class_of(six, eight));
        assert_eq!(a.product(a16, a68), Some(r.class_of(one, eight)));
        assert_eq!(a.gr_product(a16, a68), None);
    }

    #[test]
    fn semigroup_windows() {
        let w = divisor_window(&[1, 1]);
        assert!(matches!(
            IncidenceAlgebra::new(w.relation()),
            Err(Error::AxiomViolation(_))
        ));
        let a = IncidenceAlgebra::semigroup_window(w.relation()).unwrap();
        assert_eq!(a.completeness(), Completeness::AmbientSemigroup);
        assert!(a.require_finite().is_err());
        let trivial = IntervalEquivalence::trivial(&chain(2));
        assert!(IncidenceAlgebra::semigroup_window(trivial).is_err());
    }
}
