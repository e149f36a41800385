//! Built-in invariant suite behind `dynkin-witt selfcheck`.

use crate::dynkin::{DynkinDiagram, Letter, SimpleType, VertexSet};
use crate::enumeration::{enumerate, DEFAULT_RANK_LIMIT};
use crate::picard::ParabolicSubset;
use crate::vanishing::{classify, classify_decoration, criterion_witnesses, grassmannian_odd_odd};
use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

type Check = fn() -> Result<(), String>;

const CHECKS: [(&str, Check); 10] = [
    ("cartan matrix invariants", cartan_invariants),
    (
        "finite type (leading principal minors positive)",
        finite_type,
    ),
    ("fundamental weight pairing", fundamental_pairing),
    ("roots as weights match cartan columns", roots_as_columns),
    ("lambda bijection round trip", lambda_round_trip),
    ("lambda and verdict stable mod 2", mod_two_stability),
    ("witnesses agree with direct double loop", witness_oracle),
    ("borel completeness", borel_completeness),
    ("enumeration row count and d4 panel", enumeration_panel),
    ("grassmannian odd/odd rule", grassmannian),
];

pub fn selfcheck() -> Vec<CheckOutcome> {
    CHECKS
        .iter()
        .map(|(name, f)| CheckOutcome {
            name,
            failure: f().err(),
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn simple_diagrams(max_rank: u32) -> Vec<DynkinDiagram> {
    SimpleType::all_up_to(max_rank)
        .into_iter()
        .map(|t| DynkinDiagram::build(&[t]).expect("admissible"))
        .chain(products())
        .collect()
}

fn products() -> Vec<DynkinDiagram> {
    let t = |l, r| SimpleType::new(l, r).expect("admissible");
    vec![
        DynkinDiagram::build(&[t(Letter::A, 1), t(Letter::A, 1)]).expect("small"),
        DynkinDiagram::build(&[t(Letter::A, 2), t(Letter::B, 2)]).expect("small"),
    ]
}

fn cartan_invariants() -> Result<(), String> {
    for d in simple_diagrams(8) {
        let c = d.cartan_matrix();
        for i in d.vertices() {
            ensure(c.entry(i, i) == 2, || format!("{d}: diagonal at {i}"))?;
            for j in d.vertices().filter(|&j| j != i) {
                let (a, b) = (c.entry(i, j), c.entry(j, i));
                ensure(a <= 0, || format!("{d}: positive entry at ({i},{j})"))?;
                ensure((a == 0) == (b == 0), || {
                    format!("{d}: zero pattern at ({i},{j})")
                })?;
                let adj = d.adjacent(i, j).map_err(|e| e.to_string())?;
                ensure(adj == (a != 0), || {
                    format!("{d}: edge mismatch at ({i},{j})")
                })?;
                let same = d.locate(i).map(|x| x.0) == d.locate(j).map(|x| x.0);
                ensure(same || a == 0, || format!("{d}: edge across components"))?;
            }
        }
    }
    Ok(())
}

fn finite_type() -> Result<(), String> {
    for d in simple_diagrams(8) {
        for k in 1..=d.rank() {
            let det = d.cartan_matrix().leading_minor(k);
            ensure(det > 0, || format!("{d}: leading minor {k} is {det}"))?;
        }
    }
    Ok(())
}

fn fundamental_pairing() -> Result<(), String> {
    for d in simple_diagrams(8) {
        for a in d.vertices() {
            let w = Weight::fundamental(&d, a).map_err(|e| e.to_string())?;
            for b in d.vertices() {
                let p = w.pairing(b).map_err(|e| e.to_string())?;
                ensure(p == (a == b) as i64, || format!("{d}: <w_{a}, {b}> = {p}"))?;
            }
        }
    }
    Ok(())
}

fn roots_as_columns() -> Result<(), String> {
    for d in simple_diagrams(8) {
        for j in d.vertices() {
            let r = Weight::simple_root(&d, j).map_err(|e| e.to_string())?;
            for i in d.vertices() {
                let p = r.pairing(i).map_err(|e| e.to_string())?;
                let a = d.cartan_matrix().entry(i, j) as i64;
                ensure(p == a, || format!("{d}: <alpha_{j}, {i}> = {p} != {a}"))?;
            }
        }
    }
    Ok(())
}

fn lambda_round_trip() -> Result<(), String> {
    for d in simple_diagrams(6) {
        for theta in d.all_vertices().subsets() {
            let p = ParabolicSubset::new(&d, theta).map_err(|e| e.to_string())?;
            for lambda in p.picard_basis().subsets() {
                let l = p
                    .lambda_to_class(lambda.into())
                    .map_err(|e| e.to_string())?;
                ensure(l.lambda().set() == lambda, || {
                    format!("{d}: theta {theta} lambda {lambda}")
                })?;
                let back = p.lambda_to_class(l.lambda()).map_err(|e| e.to_string())?;
                ensure(back == l, || format!("{d}: class not fixed"))?;
            }
        }
    }
    Ok(())
}

/// Every shift `L + 2 mu` with `mu` in `{-1, 0, 1}` on the Picard basis.
fn mod_two_stability() -> Result<(), String> {
    let diagrams = [
        DynkinDiagram::simple(Letter::D, 4),
        DynkinDiagram::simple(Letter::A, 3),
        DynkinDiagram::simple(Letter::B, 3),
    ];
    for d in diagrams {
        let d = d.map_err(|e| e.to_string())?;
        for theta in d.all_vertices().subsets() {
            let p = ParabolicSubset::new(&d, theta).map_err(|e| e.to_string())?;
            let basis: Vec<_> = p.picard_basis().iter().collect();
            for lambda in p.picard_basis().subsets() {
                let l = p
                    .lambda_to_class(lambda.into())
                    .map_err(|e| e.to_string())?;
                let verdict = classify(&l);
                for code in 0..3usize.pow(basis.len() as u32) {
                    let mut mu = vec![0i64; d.rank()];
                    let mut c = code;
                    for v in &basis {
                        mu[v.slot()] = 2 * ((c % 3) as i64 - 1);
                        c /= 3;
                    }
                    let shift = Weight::new(&d, mu).map_err(|e| e.to_string())?;
                    let shifted = l.checked_add(&shift).map_err(|e| e.to_string())?;
                    ensure(shifted.lambda() == l.lambda(), || {
                        format!("{d}: lambda moved under {shift}")
                    })?;
                    ensure(classify(&shifted) == verdict, || {
                        format!("{d}: verdict moved under {shift}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn witness_oracle() -> Result<(), String> {
    for d in simple_diagrams(5) {
        let c = d.cartan_matrix();
        let n = d.rank();
        for theta in d.all_vertices().subsets() {
            for lambda in d.all_vertices().difference(theta).subsets() {
                let mut expected = VertexSet::EMPTY;
                for a in lambda.iter() {
                    if theta.iter().all(|b| c.get(a.slot(), b.slot()) == 0) {
                        expected.insert(a);
                    }
                }
                let got = criterion_witnesses(&d, theta, lambda).map_err(|e| e.to_string())?;
                ensure(got == expected, || {
                    format!("{d} (rank {n}): theta {theta} lambda {lambda}: {got} != {expected}")
                })?;
            }
        }
    }
    Ok(())
}

fn borel_completeness() -> Result<(), String> {
    for d in simple_diagrams(8) {
        for lambda in d.all_vertices().subsets() {
            let v = classify_decoration(&d, VertexSet::EMPTY, lambda).map_err(|e| e.to_string())?;
            ensure(v.vanishes() == !lambda.is_empty(), || {
                format!("{d}: lambda {lambda}")
            })?;
        }
    }
    Ok(())
}

fn enumeration_panel() -> Result<(), String> {
    for d in simple_diagrams(6) {
        let t = enumerate(&d, DEFAULT_RANK_LIMIT).map_err(|e| e.to_string())?;
        let expected = 3usize.pow(d.rank() as u32);
        ensure(t.rows().len() == expected, || {
            format!("{d}: {} rows", t.rows().len())
        })?;
    }
    let d4 = DynkinDiagram::simple(Letter::D, 4).map_err(|e| e.to_string())?;
    let set = |ix: &[usize]| -> Result<VertexSet, String> {
        ix.iter()
            .map(|&i| d4.vertex(i).map_err(|e| e.to_string()))
            .collect()
    };
    let legs = set(&[1, 4])?;
    for (lambda, witness) in [
        (&[2, 3][..], Some(3)),
        (&[2], None),
        (&[3], Some(3)),
        (&[], None),
    ] {
        let v = classify_decoration(&d4, legs, set(lambda)?).map_err(|e| e.to_string())?;
        ensure(v.witness().map(|w| w.index()) == witness, || {
            format!("D4 legs, lambda {lambda:?}")
        })?;
        ensure(v.vanishes() == witness.is_some(), || {
            format!("D4 legs, lambda {lambda:?}")
        })?;
    }
    let center = set(&[2])?;
    for lambda in d4.all_vertices().difference(center).subsets() {
        let v = classify_decoration(&d4, center, lambda).map_err(|e| e.to_string())?;
        ensure(!v.vanishes(), || format!("D4 center, lambda {lambda}"))?;
    }
    Ok(())
}

fn grassmannian() -> Result<(), String> {
    for n in 1..=9u32 {
        let d = DynkinDiagram::simple(Letter::A, n).map_err(|e| e.to_string())?;
        for v in d.vertices() {
            let only = VertexSet::singleton(v);
            let theta = d.all_vertices().difference(only);
            let got = grassmannian_odd_odd(&d, theta, only).map_err(|e| e.to_string())?;
            let (dd, e) = (v.index() as u32, n + 1 - v.index() as u32);
            let expected = (dd % 2 == 1 && e % 2 == 1).then_some((dd, e));
            ensure(got == expected, || format!("A{n}, d = {dd}"))?;
            let w = criterion_witnesses(&d, theta, only).map_err(|e| e.to_string())?;
            ensure(n < 2 || w.is_empty(), || {
                format!("A{n}, d = {dd}: witness {w}")
            })?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        for outcome in selfcheck() {
            assert!(outcome.passed(), "{}: {:?}", outcome.name, outcome.failure);
        }
    }
}
