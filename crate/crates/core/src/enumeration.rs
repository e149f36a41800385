//! Exhaustive classification of every `(theta, Lambda)` decoration.
//!
//! Each vertex is independently in `theta`, in `Lambda`, or in neither, so a
//! rank-`n` diagram has `3^n` decorations. Rows are ordered by `theta` as a
//! bitmask, then by `Lambda` as a bitmask.

use rayon::prelude::*;

use crate::dynkin::{DynkinDiagram, VertexSet};
use crate::error::{Error, Result};
use crate::picard::ParabolicSubset;
use crate::vanishing::{classify, Rule, VanishingVerdict};

pub const DEFAULT_RANK_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Row {
    pub theta: VertexSet,
    pub lambda: VertexSet,
    pub verdict: VanishingVerdict,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Totals {
    pub main_theorem: usize,
    pub grassmannian_odd_odd: usize,
    pub inconclusive: usize,
}

impl Totals {
    pub fn of(rows: &[Row]) -> Self {
        let mut t = Totals::default();
        for r in rows {
            match r.verdict.rule() {
                Some(Rule::MainTheorem { .. }) => t.main_theorem += 1,
                Some(Rule::GrassmannianOddOdd { .. }) => t.grassmannian_odd_odd += 1,
                None => t.inconclusive += 1,
            }
        }
        t
    }

    pub fn vanishes(&self) -> usize {
        self.main_theorem + self.grassmannian_odd_odd
    }

    pub fn rows(&self) -> usize {
        self.vanishes() + self.inconclusive
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationTable {
    diagram: DynkinDiagram,
    rows: Vec<Row>,
    totals: Totals,
}

impl ClassificationTable {
    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn totals(&self) -> Totals {
        self.totals
    }

    /// Sub-table of the rows matching `keep`, order preserved.
    pub fn filter_rows<F>(&self, mut keep: F) -> ClassificationTable
    where
        F: FnMut(&Row) -> bool,
    {
        let rows: Vec<Row> = self.rows.iter().filter(|r| keep(r)).copied().collect();
        let totals = Totals::of(&rows);
        ClassificationTable {
            diagram: self.diagram.clone(),
            rows,
            totals,
        }
    }
}

fn rows_for_theta(d: &DynkinDiagram, theta: VertexSet) -> Vec<Row> {
    let p = ParabolicSubset::new(d, theta).expect("theta within diagram");
    p.picard_basis()
        .subsets()
        .map(|lambda| {
            let class = p
                .lambda_to_class(lambda.into())
                .expect("lambda outside theta");
            Row {
                theta,
                lambda,
                verdict: classify(&class),
            }
        })
        .collect()
}

/// Classifies all `3^n` decorations of `d`.
pub fn enumerate(d: &DynkinDiagram, rank_limit: usize) -> Result<ClassificationTable> {
    let n = d.rank();
    if n > rank_limit {
        return Err(Error::RankLimitExceeded {
            rank: n,
            limit: rank_limit,
        });
    }
    let per_theta: Vec<Vec<Row>> = d
        .all_vertices()
        .subsets()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|theta| rows_for_theta(d, theta))
        .collect();
    let rows: Vec<Row> = per_theta.into_iter().flatten().collect();
    let totals = Totals::of(&rows);
    Ok(ClassificationTable {
        diagram: d.clone(),
        rows,
        totals,
    })
}
