//! The vanishing criteria for twisted Witt groups `W^i(X_theta, L)`.
//!
//! Two certification rules are implemented:
//!
//! * **Main theorem.** If some `alpha in Lambda(L)` has no edge to `theta`,
//!   then `X_theta` is a projectivized rank-2 bundle over
//!   `X_{theta + alpha}` whose twist is not pulled back from the base, and
//!   every `W^i(X_theta, L)` vanishes.
//! * **Grassmannian odd/odd.** For `A_n` with `theta` omitting exactly the
//!   `d`-th vertex, `X_theta = Gr(d, d + e)` with `e = n + 1 - d`; if `d` and
//!   `e` are both odd and `L` is odd on the generator, all Witt groups vanish.
//!
//! When neither rule applies the verdict is [`Status::Inconclusive`]. A
//! verdict never asserts nonvanishing. Every verdict carries the standing
//! hypothesis that the base field has characteristic different from 2.

use std::fmt;

use crate::dynkin::{DynkinDiagram, Letter, Vertex, VertexSet};
use crate::error::{Error, Result};
use crate::picard::{LambdaSet, LineBundleClass, ParabolicSubset};

/// Caveat text attached to every verdict.
pub const CHAR_CAVEAT: &str = "assumes char(k) ≠ 2";

/// Rank of the vector bundle whose projectivization realizes `X_theta`.
pub const FIBER_RANK: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    VanishesAllDegrees,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::VanishesAllDegrees => write!(f, "vanishes"),
            Status::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    MainTheorem { witness: Vertex },
    GrassmannianOddOdd { d: u32, e: u32 },
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::MainTheorem { .. } => write!(f, "main-theorem"),
            Rule::GrassmannianOddOdd { d, e } => write!(f, "grassmannian-odd-odd({d},{e})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Caveat {
    CharacteristicNotTwo,
}

impl fmt::Display for Caveat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Caveat::CharacteristicNotTwo => write!(f, "{CHAR_CAVEAT}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VanishingVerdict {
    rule: Option<Rule>,
    caveat: Caveat,
}

impl VanishingVerdict {
    pub fn vanishing(rule: Rule) -> Self {
        VanishingVerdict {
            rule: Some(rule),
            caveat: Caveat::CharacteristicNotTwo,
        }
    }

    pub fn inconclusive() -> Self {
        VanishingVerdict {
            rule: None,
            caveat: Caveat::CharacteristicNotTwo,
        }
    }

    pub fn status(&self) -> Status {
        match self.rule {
            Some(_) => Status::VanishesAllDegrees,
            None => Status::Inconclusive,
        }
    }

    pub fn vanishes(&self) -> bool {
        self.rule.is_some()
    }

    pub fn rule(&self) -> Option<Rule> {
        self.rule
    }

    pub fn witness(&self) -> Option<Vertex> {
        match self.rule {
            Some(Rule::MainTheorem { witness }) => Some(witness),
            _ => None,
        }
    }

    pub fn caveat(&self) -> Caveat {
        self.caveat
    }
}

/// `X_theta -> X_{theta'}` with `theta' = theta + {alpha}` as the
/// projectivization of a rank-2 vector bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BundleReduction {
    pub alpha: Vertex,
    pub theta: VertexSet,
    pub theta_prime: VertexSet,
    pub fiber_rank: u32,
}

fn check_decoration(d: &DynkinDiagram, theta: VertexSet, lambda: VertexSet) -> Result<()> {
    d.check_set(theta)?;
    d.check_set(lambda)?;
    match theta.intersection(lambda).first() {
        Some(v) => Err(Error::ThetaLambdaOverlap(v)),
        None => Ok(()),
    }
}

/// All `alpha in lambda` with no edge to `theta`, ascending.
pub fn criterion_witnesses(
    d: &DynkinDiagram,
    theta: VertexSet,
    lambda: VertexSet,
) -> Result<VertexSet> {
    check_decoration(d, theta, lambda)?;
    let mut out = VertexSet::EMPTY;
    for alpha in lambda.iter() {
        if d.orthogonal_to_set(alpha, theta)? {
            out.insert(alpha);
        }
    }
    Ok(out)
}

/// `Some((d, e))` when the decoration is `Gr(d, d + e)` with `d`, `e` odd and
/// `lambda = {d}`.
pub fn grassmannian_odd_odd(
    d: &DynkinDiagram,
    theta: VertexSet,
    lambda: VertexSet,
) -> Result<Option<(u32, u32)>> {
    check_decoration(d, theta, lambda)?;
    let [component] = d.components() else {
        return Ok(None);
    };
    if component.letter() != Letter::A {
        return Ok(None);
    }
    let n = component.rank();
    let outside = d.all_vertices().difference(theta);
    if outside.len() != 1 || lambda != outside {
        return Ok(None);
    }
    let dd = outside.first().map(Vertex::index).unwrap_or_default();
    let e = n + 1 - dd;
    if dd % 2 == 1 && e % 2 == 1 {
        Ok(Some((dd as u32, e as u32)))
    } else {
        Ok(None)
    }
}

/// Applies the main theorem, then the Grassmannian rule.
pub fn classify(l: &LineBundleClass) -> VanishingVerdict {
    let d = l.diagram();
    let theta = l.theta();
    let lambda = l.lambda().set();
    // a valid class has lambda inside the complement of theta
    let witnesses = criterion_witnesses(d, theta, lambda).expect("validated class");
    if let Some(witness) = witnesses.first() {
        return VanishingVerdict::vanishing(Rule::MainTheorem { witness });
    }
    match grassmannian_odd_odd(d, theta, lambda).expect("validated class") {
        Some((d, e)) => VanishingVerdict::vanishing(Rule::GrassmannianOddOdd { d, e }),
        None => VanishingVerdict::inconclusive(),
    }
}

/// [`classify`] on the class `sum_{alpha in lambda} omega_alpha` of `X_theta`.
pub fn classify_decoration(
    d: &DynkinDiagram,
    theta: VertexSet,
    lambda: VertexSet,
) -> Result<VanishingVerdict> {
    check_decoration(d, theta, lambda)?;
    let class = ParabolicSubset::new(d, theta)?.lambda_to_class(LambdaSet::new(lambda))?;
    Ok(classify(&class))
}

/// On `G/B` every twist outside `2 Pic(G/B)` has vanishing Witt groups.
pub fn borel_classify(l: &LineBundleClass) -> Result<VanishingVerdict> {
    if !l.parabolic().is_borel() {
        return Err(Error::NotBorel);
    }
    Ok(match l.lambda().set().first() {
        Some(witness) => VanishingVerdict::vanishing(Rule::MainTheorem { witness }),
        None => VanishingVerdict::inconclusive(),
    })
}

pub fn bundle_reduction(
    d: &DynkinDiagram,
    theta: VertexSet,
    alpha: Vertex,
) -> Result<BundleReduction> {
    d.check_set(theta)?;
    d.check_vertex(alpha)?;
    if theta.contains(alpha) {
        return Err(Error::AlphaInTheta(alpha));
    }
    if let Some(beta) = d.neighbours(alpha)?.intersection(theta).first() {
        return Err(Error::NotOrthogonal { alpha, beta });
    }
    Ok(BundleReduction {
        alpha,
        theta,
        theta_prime: theta.with(alpha),
        fiber_rank: FIBER_RANK,
    })
}
