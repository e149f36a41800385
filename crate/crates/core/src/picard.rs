//! Flag varieties `X_theta = G/P_theta`, their Picard groups inside
//! `Pic(G/B)`, and the parity set `Lambda(L)` of a line bundle.

use crate::dynkin::{DynkinDiagram, VertexSet};
use crate::error::{Error, Result};
use crate::weights::Weight;

/// The subset `theta` of simple roots defining the standard parabolic
/// `P_theta`. `theta = {}` is the Borel case `G/B`; `theta = all` is a point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParabolicSubset {
    diagram: DynkinDiagram,
    theta: VertexSet,
}

impl ParabolicSubset {
    pub fn new(diagram: &DynkinDiagram, theta: VertexSet) -> Result<Self> {
        diagram.check_set(theta)?;
        Ok(ParabolicSubset {
            diagram: diagram.clone(),
            theta,
        })
    }

    pub fn borel(diagram: &DynkinDiagram) -> Self {
        ParabolicSubset {
            diagram: diagram.clone(),
            theta: VertexSet::EMPTY,
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn theta(&self) -> VertexSet {
        self.theta
    }

    pub fn is_borel(&self) -> bool {
        self.theta.is_empty()
    }

    /// Vertices whose fundamental weights generate `Pic(X_theta)`: the
    /// complement of `theta`, ascending.
    pub fn picard_basis(&self) -> VertexSet {
        self.diagram.all_vertices().difference(self.theta)
    }

    /// Wraps `weight` as a line bundle on `X_theta`, checking it lies in
    /// the image of `Pic(X_theta) -> Pic(G/B)`.
    pub fn line_bundle(&self, weight: Weight) -> Result<LineBundleClass> {
        if weight.diagram() != &self.diagram {
            return Err(Error::DiagramMismatch);
        }
        if let Some(beta) = self.theta.iter().find(|b| weight.coeffs()[b.slot()] != 0) {
            return Err(Error::NotInPicard(beta));
        }
        Ok(LineBundleClass {
            weight,
            parabolic: self.clone(),
        })
    }

    /// The class of `sum_{alpha in lambda} omega_alpha`.
    pub fn lambda_to_class(&self, lambda: LambdaSet) -> Result<LineBundleClass> {
        self.diagram.check_set(lambda.0)?;
        if let Some(v) = lambda.0.intersection(self.theta).first() {
            return Err(Error::LambdaMeetsTheta(v));
        }
        let mut coeffs = vec![0; self.diagram.rank()];
        for a in lambda.0.iter() {
            coeffs[a.slot()] = 1;
        }
        let weight = Weight::new(&self.diagram, coeffs)?;
        Ok(LineBundleClass {
            weight,
            parabolic: self.clone(),
        })
    }
}

/// A line bundle on `X_theta`, identified with its weight in `Pic(G/B)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineBundleClass {
    weight: Weight,
    parabolic: ParabolicSubset,
}

impl LineBundleClass {
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn parabolic(&self) -> &ParabolicSubset {
        &self.parabolic
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        self.parabolic.diagram()
    }

    pub fn theta(&self) -> VertexSet {
        self.parabolic.theta
    }

    /// Vertices outside `theta` whose coefficient is odd (`-3` is odd).
    pub fn lambda(&self) -> LambdaSet {
        let odd = self
            .parabolic
            .picard_basis()
            .iter()
            .filter(|a| self.weight.coeffs()[a.slot()].rem_euclid(2) == 1)
            .collect();
        LambdaSet(odd)
    }

    /// `self + other`, both on the same `X_theta`.
    pub fn checked_add(&self, other: &Weight) -> Result<LineBundleClass> {
        self.parabolic.line_bundle(self.weight.checked_add(other)?)
    }
}

/// `Lambda(L)`: the class of a line bundle in `Pic(X_theta)/2`, as a subset
/// of the vertices outside `theta`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LambdaSet(VertexSet);

impl LambdaSet {
    pub fn new(set: VertexSet) -> Self {
        LambdaSet(set)
    }

    pub fn set(self) -> VertexSet {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }
}

impl From<VertexSet> for LambdaSet {
    fn from(set: VertexSet) -> Self {
        LambdaSet(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{Letter, Vertex};

    fn set(ix: &[usize]) -> VertexSet {
        ix.iter().map(|&i| Vertex::new(i)).collect()
    }

    fn d4() -> DynkinDiagram {
        DynkinDiagram::simple(Letter::D, 4).unwrap()
    }

    #[test]
    fn picard_basis_examples() {
        let d = d4();
        let p = ParabolicSubset::new(&d, set(&[1, 4])).unwrap();
        assert_eq!(p.picard_basis(), set(&[2, 3]));
        assert_eq!(ParabolicSubset::borel(&d).picard_basis(), d.all_vertices());
        let point = ParabolicSubset::new(&d, d.all_vertices()).unwrap();
        assert!(point.picard_basis().is_empty());
        assert!(ParabolicSubset::new(&d, set(&[5])).is_err());
    }

    #[test]
    fn support_constraint() {
        let d = d4();
        let p = ParabolicSubset::new(&d, set(&[1, 4])).unwrap();
        let l = p
            .line_bundle(Weight::new(&d, vec![0, 1, 1, 0]).unwrap())
            .unwrap();
        assert_eq!(l.lambda().set(), set(&[2, 3]));
        assert_eq!(
            p.line_bundle(Weight::new(&d, vec![1, 0, 0, 0]).unwrap()),
            Err(Error::NotInPicard(Vertex::new(1)))
        );
        let borel = ParabolicSubset::borel(&d);
        assert!(borel
            .line_bundle(Weight::new(&d, vec![7, -3, 2, 1]).unwrap())
            .is_ok());
    }

    #[test]
    fn parity_read_off() {
        let a2 = DynkinDiagram::simple(Letter::A, 2).unwrap();
        let l = ParabolicSubset::borel(&a2)
            .line_bundle(Weight::new(&a2, vec![2, 3]).unwrap())
            .unwrap();
        assert_eq!(l.lambda().set(), set(&[2]));
        let l = ParabolicSubset::borel(&a2)
            .line_bundle(Weight::new(&a2, vec![-3, -4]).unwrap())
            .unwrap();
        assert_eq!(l.lambda().set(), set(&[1]));
        let p = ParabolicSubset::new(&a2, set(&[2])).unwrap();
        assert!(p
            .line_bundle(Weight::zero(&a2))
            .unwrap()
            .lambda()
            .is_empty());
    }

    #[test]
    fn lambda_to_class_examples() {
        let d = d4();
        let p = ParabolicSubset::new(&d, set(&[1, 4])).unwrap();
        let l = p.lambda_to_class(set(&[3]).into()).unwrap();
        assert_eq!(l.weight().coeffs(), &[0, 0, 1, 0]);
        assert!(p
            .lambda_to_class(LambdaSet::default())
            .unwrap()
            .weight()
            .is_zero());
        assert_eq!(
            p.lambda_to_class(set(&[2, 4]).into()),
            Err(Error::LambdaMeetsTheta(Vertex::new(4)))
        );
    }

    #[test]
    fn round_trip_d4_center() {
        let d = d4();
        let p = ParabolicSubset::new(&d, set(&[2])).unwrap();
        let subsets: Vec<_> = p.picard_basis().subsets().collect();
        assert_eq!(subsets.len(), 8);
        for s in subsets {
            let l = p.lambda_to_class(s.into()).unwrap();
            assert_eq!(l.lambda().set(), s);
            assert_eq!(p.lambda_to_class(l.lambda()).unwrap(), l);
        }
    }
}
