//! Integer weights in the fundamental-weight basis.
//!
//! A weight `sum c_a * omega_a` is stored as its coefficient vector. Via
//! `lambda -> [L_lambda]` the same vector is the class of a line bundle in
//! `Pic(G/B)`.

use std::fmt;

use crate::dynkin::{DynkinDiagram, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    diagram: DynkinDiagram,
    coeffs: Vec<i64>,
}

impl Weight {
    pub fn new(diagram: &DynkinDiagram, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != diagram.rank() {
            return Err(Error::LengthMismatch {
                expected: diagram.rank(),
                found: coeffs.len(),
            });
        }
        Ok(Weight {
            diagram: diagram.clone(),
            coeffs,
        })
    }

    pub fn zero(diagram: &DynkinDiagram) -> Self {
        Weight {
            diagram: diagram.clone(),
            coeffs: vec![0; diagram.rank()],
        }
    }

    /// `omega_alpha`, the basis vector at `alpha`.
    pub fn fundamental(diagram: &DynkinDiagram, alpha: Vertex) -> Result<Self> {
        diagram.check_vertex(alpha)?;
        let mut w = Self::zero(diagram);
        w.coeffs[alpha.slot()] = 1;
        Ok(w)
    }

    /// The simple root `alpha_j` in the fundamental-weight basis: column `j`
    /// of the Cartan matrix.
    pub fn simple_root(diagram: &DynkinDiagram, j: Vertex) -> Result<Self> {
        diagram.check_vertex(j)?;
        let c = diagram.cartan_matrix();
        let coeffs = (0..diagram.rank())
            .map(|i| c.get(i, j.slot()) as i64)
            .collect();
        Ok(Weight {
            diagram: diagram.clone(),
            coeffs,
        })
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `<lambda, beta^vee>`, which in this basis is the coefficient at `beta`.
    pub fn pairing(&self, beta: Vertex) -> Result<i64> {
        self.diagram.check_vertex(beta)?;
        Ok(self.coeffs[beta.slot()])
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        if self.diagram != other.diagram {
            return Err(Error::DiagramMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Weight {
            diagram: self.diagram.clone(),
            coeffs,
        })
    }

    pub fn checked_scale(&self, c: i64) -> Result<Weight> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(c).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Weight {
            diagram: self.diagram.clone(),
            coeffs,
        })
    }
}

/// Formats as a comma-separated coefficient vector, e.g. `0,1,1,0`.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
