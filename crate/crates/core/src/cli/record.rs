//! Line-delimited classification records.
//!
//! One record per line, seven tab-separated (`\t`) `key=value` fields in
//! fixed order:
//!
//! ```text
//! diagram=D4\ttheta={1,4}\tlambda={3}\tstatus=vanishes\trule=main-theorem\twitness=3\tcaveat=assumes char(k) ≠ 2
//! ```
//!
//! `rule` and `witness` are `-` when not applicable. Lines starting with
//! `#` are comments.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::dynkin::{DynkinDiagram, Vertex, VertexSet};
use crate::vanishing::{Status, VanishingVerdict};

pub const FIELDS: [&str; 7] = [
    "diagram", "theta", "lambda", "status", "rule", "witness", "caveat",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad record: {0}")]
pub struct RecordError(String);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub diagram: String,
    pub theta: Vec<usize>,
    pub lambda: Vec<usize>,
    pub status: String,
    pub rule: Option<String>,
    pub witness: Option<usize>,
    pub caveat: String,
}

fn indices(s: VertexSet) -> Vec<usize> {
    s.iter().map(Vertex::index).collect()
}

impl Record {
    pub fn new(
        d: &DynkinDiagram,
        theta: VertexSet,
        lambda: VertexSet,
        verdict: &VanishingVerdict,
    ) -> Self {
        Record {
            diagram: d.to_string(),
            theta: indices(theta),
            lambda: indices(lambda),
            status: verdict.status().to_string(),
            rule: verdict.rule().map(|r| r.to_string()),
            witness: verdict.witness().map(Vertex::index),
            caveat: verdict.caveat().to_string(),
        }
    }

    pub fn vanishes(&self) -> bool {
        self.status == Status::VanishesAllDegrees.to_string()
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    write!(f, "{{")?;
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "}}")
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "diagram={}\ttheta=", self.diagram)?;
        write_set(f, &self.theta)?;
        write!(f, "\tlambda=")?;
        write_set(f, &self.lambda)?;
        write!(f, "\tstatus={}\trule=", self.status)?;
        match &self.rule {
            Some(r) => write!(f, "{r}")?,
            None => write!(f, "-")?,
        }
        write!(f, "\twitness=")?;
        match self.witness {
            Some(w) => write!(f, "{w}")?,
            None => write!(f, "-")?,
        }
        write!(f, "\tcaveat={}", self.caveat)
    }
}

fn parse_set(s: &str) -> Result<Vec<usize>, RecordError> {
    let inner = s
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| RecordError(format!("expected a braced set, got '{s}'")))?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.parse()
                .map_err(|_| RecordError(format!("bad vertex '{t}'")))
        })
        .collect()
}

fn optional(s: &str) -> Option<&str> {
    (s != "-").then_some(s)
}

impl FromStr for Record {
    type Err = RecordError;

    fn from_str(line: &str) -> Result<Self, RecordError> {
        let parts: Vec<&str> = line.split('\t').collect();
        if parts.len() != FIELDS.len() {
            return Err(RecordError(format!(
                "expected {} fields, got {}",
                FIELDS.len(),
                parts.len()
            )));
        }
        let mut values = Vec::with_capacity(FIELDS.len());
        for (part, key) in parts.iter().zip(FIELDS) {
            let value = part
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .ok_or_else(|| RecordError(format!("expected field '{key}', got '{part}'")))?;
            values.push(value);
        }
        let witness = optional(values[5])
            .map(|w| {
                w.parse()
                    .map_err(|_| RecordError(format!("bad witness '{w}'")))
            })
            .transpose()?;
        Ok(Record {
            diagram: values[0].to_string(),
            theta: parse_set(values[1])?,
            lambda: parse_set(values[2])?,
            status: values[3].to_string(),
            rule: optional(values[4]).map(str::to_string),
            witness,
            caveat: values[6].to_string(),
        })
    }
}
