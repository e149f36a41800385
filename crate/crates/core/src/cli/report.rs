use std::fmt::Write as _;

use crate::dynkin::{DynkinDiagram, VertexSet};
use crate::enumeration::{ClassificationTable, Totals};
use crate::picard::LineBundleClass;
use crate::vanishing::{bundle_reduction, classify, BundleReduction, VanishingVerdict};

use super::record::Record;

/// Everything `classify` reports about one decoration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub class: LineBundleClass,
    pub lambda: VertexSet,
    pub verdict: VanishingVerdict,
    pub reduction: Option<BundleReduction>,
}

impl Report {
    pub fn new(class: LineBundleClass) -> Self {
        let verdict = classify(&class);
        let lambda = class.lambda().set();
        let reduction = verdict.witness().map(|alpha| {
            bundle_reduction(class.diagram(), class.theta(), alpha)
                .expect("witness is orthogonal to theta")
        });
        Report {
            class,
            lambda,
            verdict,
            reduction,
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        self.class.diagram()
    }

    pub fn record(&self) -> Record {
        Record::new(
            self.diagram(),
            self.class.theta(),
            self.lambda,
            &self.verdict,
        )
    }

    pub fn to_records(&self) -> String {
        format!(
            "# numbering: {}\n{}\n",
            self.diagram().numbering_legend(),
            self.record()
        )
    }

    pub fn to_text(&self) -> String {
        let d = self.diagram();
        let dash = || "-".to_string();
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            let _ = writeln!(out, "{:<12}{}", format!("{k}:"), v);
        };
        line("diagram", d.to_string());
        line("numbering", d.numbering_legend());
        line("theta", self.class.theta().to_string());
        line("bundle", self.class.weight().to_string());
        line("lambda", self.lambda.to_string());
        line("status", self.verdict.status().to_string());
        line(
            "rule",
            self.verdict.rule().map_or_else(dash, |r| r.to_string()),
        );
        line(
            "witness",
            self.verdict.witness().map_or_else(dash, |w| w.to_string()),
        );
        line(
            "theta'",
            self.reduction
                .map_or_else(dash, |r| r.theta_prime.to_string()),
        );
        if let Some(r) = self.reduction {
            line(
                "reduction",
                format!(
                    "X_theta is the projective bundle of a rank-{} vector bundle over X_theta' (theta' = theta + {{{}}})",
                    r.fiber_rank, r.alpha
                ),
            );
        }
        line(
            "conclusion",
            if self.verdict.vanishes() {
                "W^i(X_theta, L) = 0 for all integers i".to_string()
            } else {
                "no vanishing rule applies; this is not a nonvanishing claim".to_string()
            },
        );
        line("caveat", self.verdict.caveat().to_string());
        out
    }
}

fn totals_line(t: Totals) -> String {
    format!(
        "# totals: rows={} vanishes={} main-theorem={} grassmannian-odd-odd={} inconclusive={}",
        t.rows(),
        t.vanishes(),
        t.main_theorem,
        t.grassmannian_odd_odd,
        t.inconclusive
    )
}

pub fn enumeration_records(t: &ClassificationTable) -> String {
    let mut out = format!("# numbering: {}\n", t.diagram().numbering_legend());
    for row in t.rows() {
        let r = Record::new(t.diagram(), row.theta, row.lambda, &row.verdict);
        let _ = writeln!(out, "{r}");
    }
    let _ = writeln!(out, "{}", totals_line(t.totals()));
    out
}

pub fn enumeration_text(t: &ClassificationTable) -> String {
    let d = t.diagram();
    let cells: Vec<[String; 5]> = t
        .rows()
        .iter()
        .map(|r| {
            [
                r.theta.to_string(),
                r.lambda.to_string(),
                r.verdict.status().to_string(),
                r.verdict.rule().map_or("-".into(), |x| x.to_string()),
                r.verdict.witness().map_or("-".into(), |x| x.to_string()),
            ]
        })
        .collect();
    let header = ["theta", "lambda", "status", "rule", "witness"];
    let mut width = header.map(str::len);
    for row in &cells {
        for (w, c) in width.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let fmt_row = |row: [&str; 5]| {
        let mut s = String::new();
        for (k, (c, w)) in row.iter().zip(width).enumerate() {
            if k + 1 == row.len() {
                s.push_str(c);
            } else {
                let _ = write!(s, "{c:<w$}  ");
            }
        }
        s
    };

    let mut out = String::new();
    let _ = writeln!(out, "# diagram: {d}");
    let _ = writeln!(out, "# numbering: {}", d.numbering_legend());
    let _ = writeln!(out, "{}", fmt_row(header));
    for row in &cells {
        let _ = writeln!(out, "{}", fmt_row(row.each_ref().map(String::as_str)));
    }
    let _ = writeln!(out, "{}", totals_line(t.totals()));
    let _ = writeln!(out, "# caveat: {}", crate::vanishing::CHAR_CAVEAT);
    out
}
