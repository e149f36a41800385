//! Command-line surface: parsing of diagram and decoration specifications,
//! and the text, record, and DOT renderings used by the binary.

mod dot;
mod record;
mod report;
mod selfcheck;

use thiserror::Error;

use crate::dynkin::{DynkinDiagram, Letter, SimpleType, VertexSet};
use crate::error::Error;
use crate::picard::{LambdaSet, LineBundleClass, ParabolicSubset};
use crate::weights::Weight;

pub use dot::render_dot;
pub use record::{Record, RecordError};
pub use report::{enumeration_records, enumeration_text, Report};
pub use selfcheck::{selfcheck, CheckOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("cannot parse {what} '{token}': {reason}")]
    Parse {
        what: &'static str,
        token: String,
        reason: String,
    },

    #[error("{0}")]
    Domain(#[from] Error),
}

impl CliError {
    fn parse(what: &'static str, token: &str, reason: impl Into<String>) -> Self {
        CliError::Parse {
            what,
            token: token.to_string(),
            reason: reason.into(),
        }
    }
}

/// Parses `component ("x" component)*` with `component := letter rank`,
/// e.g. `D4` or `A3xB2`. The letter is case-insensitive.
pub fn parse_diagram(spec: &str) -> Result<DynkinDiagram, CliError> {
    if spec.is_empty() {
        return Err(CliError::parse("diagram", spec, "empty specification"));
    }
    if spec.chars().any(char::is_whitespace) {
        return Err(CliError::parse(
            "diagram",
            spec,
            "whitespace is not allowed",
        ));
    }
    let components = spec
        .split('x')
        .map(parse_component)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DynkinDiagram::build(&components)?)
}

fn parse_component(token: &str) -> Result<SimpleType, CliError> {
    let mut chars = token.chars();
    let head = chars
        .next()
        .ok_or_else(|| CliError::parse("component", token, "empty component"))?;
    let letter: Letter = head
        .to_string()
        .parse()
        .map_err(|()| CliError::parse("component", token, "type letter must be one of A..G"))?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CliError::parse(
            "component",
            token,
            "rank must be a decimal integer",
        ));
    }
    let rank: u32 = digits
        .parse()
        .map_err(|_| CliError::parse("component", token, "rank too large"))?;
    Ok(SimpleType::new(letter, rank)?)
}

/// Parses a comma-separated list of 1-based vertex indices. The empty string
/// is the empty set.
pub fn parse_vertex_list(d: &DynkinDiagram, list: &str) -> Result<VertexSet, CliError> {
    let mut set = VertexSet::EMPTY;
    if list.is_empty() {
        return Ok(set);
    }
    for token in list.split(',') {
        let index: usize = token
            .parse()
            .map_err(|_| CliError::parse("vertex", token, "not a vertex index"))?;
        let v = d.vertex(index)?;
        if !set.insert(v) {
            return Err(CliError::parse("vertex", token, "listed twice"));
        }
    }
    Ok(set)
}

/// Parses a comma-separated coefficient vector of length `rank`.
pub fn parse_bundle(d: &DynkinDiagram, list: &str) -> Result<Weight, CliError> {
    let coeffs = list
        .split(',')
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| CliError::parse("coefficient", t, "not an integer"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Weight::new(d, coeffs)?)
}

/// A decoration as given on the command line: `theta` plus either a
/// `Lambda` set or an explicit bundle.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecorationSpec {
    pub theta: Option<String>,
    pub lambda: Option<String>,
    pub bundle: Option<String>,
}

impl DecorationSpec {
    pub fn resolve(&self, d: &DynkinDiagram) -> Result<LineBundleClass, CliError> {
        let theta = parse_vertex_list(d, self.theta.as_deref().unwrap_or(""))?;
        let p = ParabolicSubset::new(d, theta)?;
        match (&self.lambda, &self.bundle) {
            (Some(_), Some(_)) => Err(CliError::parse(
                "decoration",
                "--bundle",
                "give either --lambda or --bundle, not both",
            )),
            (_, Some(b)) => Ok(p.line_bundle(parse_bundle(d, b)?)?),
            (l, None) => {
                let lambda = parse_vertex_list(d, l.as_deref().unwrap_or(""))?;
                if let Some(v) = lambda.intersection(theta).first() {
                    return Err(Error::ThetaLambdaOverlap(v).into());
                }
                Ok(p.lambda_to_class(LambdaSet::new(lambda))?)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::Vertex;

    #[test]
    fn diagram_grammar() {
        assert_eq!(parse_diagram("D4").unwrap().to_string(), "D4");
        assert_eq!(parse_diagram("a3xb2").unwrap().to_string(), "A3xB2");
        assert_eq!(parse_diagram("A1xA1").unwrap().rank(), 2);
        for bad in [
            "", "D 4", "H3", "A", "Ax2", "A3x", "xA3", "A3XB2", "A-1", "A3,B2",
        ] {
            assert!(parse_diagram(bad).is_err(), "{bad}");
        }
        assert_eq!(
            parse_diagram("D3"),
            Err(CliError::Domain(Error::InvalidRank {
                letter: Letter::D,
                rank: 3
            }))
        );
    }

    #[test]
    fn vertex_lists() {
        let d = parse_diagram("D4").unwrap();
        let s = parse_vertex_list(&d, "4,1").unwrap();
        assert_eq!(s.iter().map(Vertex::index).collect::<Vec<_>>(), vec![1, 4]);
        assert!(parse_vertex_list(&d, "").unwrap().is_empty());
        assert!(parse_vertex_list(&d, "1,1").is_err());
        assert!(parse_vertex_list(&d, "0").is_err());
        assert!(parse_vertex_list(&d, "5").is_err());
        assert!(parse_vertex_list(&d, "1,").is_err());
        let err = parse_vertex_list(&d, "x").unwrap_err();
        assert!(err.to_string().contains("'x'"));
    }

    #[test]
    fn decorations() {
        let d = parse_diagram("A2").unwrap();
        let dec = DecorationSpec {
            theta: Some("1".into()),
            bundle: Some("1,0".into()),
            ..Default::default()
        };
        let err = dec.resolve(&d).unwrap_err();
        assert_eq!(err, CliError::Domain(Error::NotInPicard(Vertex::new(1))));
        assert!(err.to_string().contains("NotInPicard(1)"));

        let dec = DecorationSpec {
            theta: Some("1".into()),
            lambda: Some("1".into()),
            ..Default::default()
        };
        assert!(dec.resolve(&d).is_err());

        let dec = DecorationSpec {
            bundle: Some("-3,2".into()),
            ..Default::default()
        };
        assert_eq!(dec.resolve(&d).unwrap().lambda().set().bits(), 0b01);
        let dec = DecorationSpec {
            bundle: Some("1".into()),
            ..Default::default()
        };
        assert!(dec.resolve(&d).is_err());
    }
}
