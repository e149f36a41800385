//! Test oracles that do not go through the library's Cartan tables.
//!
//! Simple roots are realized as integer vectors in Euclidean space (half-
//! integer coordinates doubled), the Cartan matrix is recomputed from inner
//! products, determinants come from the Leibniz expansion, and edges come
//! from nonvanishing inner products.

#![allow(dead_code)]

use dynkin_witt::dynkin::{DynkinDiagram, Letter, SimpleType, Vertex, VertexSet};

pub type Vector = Vec<i64>;

fn e(m: usize, i: usize) -> Vector {
    let mut v = vec![0; m];
    v[i] = 1;
    v
}

fn lin(terms: &[(i64, &Vector)]) -> Vector {
    let m = terms[0].1.len();
    let mut out = vec![0; m];
    for (c, v) in terms {
        for k in 0..m {
            out[k] += c * v[k];
        }
    }
    out
}

/// Simple roots of one simple type, Bourbaki order.
pub fn simple_roots(letter: Letter, n: usize) -> Vec<Vector> {
    match letter {
        Letter::A => {
            let m = n + 1;
            (0..n)
                .map(|i| lin(&[(1, &e(m, i)), (-1, &e(m, i + 1))]))
                .collect()
        }
        Letter::B | Letter::C | Letter::D => {
            let m = n;
            let mut r: Vec<Vector> = (0..n - 1)
                .map(|i| lin(&[(1, &e(m, i)), (-1, &e(m, i + 1))]))
                .collect();
            r.push(match letter {
                Letter::B => e(m, n - 1),
                Letter::C => lin(&[(2, &e(m, n - 1))]),
                _ => lin(&[(1, &e(m, n - 2)), (1, &e(m, n - 1))]),
            });
            r
        }
        Letter::E => {
            let m = 8;
            let mut r = vec![vec![1, -1, -1, -1, -1, -1, -1, 1]];
            r.push(lin(&[(2, &e(m, 0)), (2, &e(m, 1))]));
            for i in 0..6 {
                r.push(lin(&[(2, &e(m, i + 1)), (-2, &e(m, i))]));
            }
            r.truncate(n);
            r
        }
        Letter::F => {
            let m = 4;
            vec![
                lin(&[(2, &e(m, 1)), (-2, &e(m, 2))]),
                lin(&[(2, &e(m, 2)), (-2, &e(m, 3))]),
                lin(&[(2, &e(m, 3))]),
                vec![1, -1, -1, -1],
            ]
        }
        Letter::G => vec![vec![1, -1, 0], vec![-2, 1, 1]],
    }
}

/// Roots of a product, each factor in its own block of coordinates.
pub fn realization(components: &[(Letter, usize)]) -> Vec<Vector> {
    let blocks: Vec<Vec<Vector>> = components
        .iter()
        .map(|&(l, n)| simple_roots(l, n))
        .collect();
    let total: usize = blocks.iter().map(|b| b[0].len()).sum();
    let mut out = Vec::new();
    let mut offset = 0;
    for b in blocks {
        let width = b[0].len();
        for v in b {
            let mut w = vec![0; total];
            w[offset..offset + width].copy_from_slice(&v);
            out.push(w);
        }
        offset += width;
    }
    out
}

pub fn dot(a: &Vector, b: &Vector) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `a[i][j] = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i)`.
pub fn oracle_cartan(roots: &[Vector]) -> Vec<Vec<i64>> {
    roots
        .iter()
        .map(|ai| {
            let norm = dot(ai, ai);
            roots
                .iter()
                .map(|aj| {
                    let num = 2 * dot(aj, ai);
                    assert_eq!(num % norm, 0, "non-integral Cartan entry");
                    num / norm
                })
                .collect()
        })
        .collect()
}

/// Leibniz expansion over all permutations.
pub fn leibniz_det(m: &[Vec<i64>]) -> i128 {
    fn go(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>, acc: &mut i128) {
        let n = m.len();
        if row == n {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if perm[i] > perm[j] {
                        inversions += 1;
                    }
                }
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            let prod: i128 = (0..n).map(|i| m[i][perm[i]] as i128).product();
            *acc += sign * prod;
            return;
        }
        for c in 0..n {
            if !used[c] && m[row][c] != 0 {
                used[c] = true;
                perm.push(c);
                go(m, row + 1, used, perm, acc);
                perm.pop();
                used[c] = false;
            }
        }
    }
    let mut acc = 0;
    go(m, 0, &mut vec![false; m.len()], &mut Vec::new(), &mut acc);
    acc
}

pub fn diagram(components: &[(Letter, usize)]) -> DynkinDiagram {
    let types: Vec<SimpleType> = components
        .iter()
        .map(|&(l, n)| SimpleType::new(l, n as u32).unwrap())
        .collect();
    DynkinDiagram::build(&types).unwrap()
}

/// Every admissible simple type of rank at most `max`.
pub fn simple_types(max: usize) -> Vec<(Letter, usize)> {
    SimpleType::all_up_to(max as u32)
        .into_iter()
        .map(|t| (t.letter(), t.rank()))
        .collect()
}

pub fn set(ix: &[usize]) -> VertexSet {
    ix.iter().map(|&i| Vertex::new(i)).collect()
}

/// Direct evaluation of the criterion: for each `alpha` in `lambda`, scan
/// `theta` for a non-orthogonal root.
pub fn brute_witnesses(roots: &[Vector], theta: &[usize], lambda: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for &a in lambda {
        let mut free = true;
        for &b in theta {
            if dot(&roots[a - 1], &roots[b - 1]) != 0 {
                free = false;
            }
        }
        if free {
            out.push(a);
        }
    }
    out.sort();
    out
}

/// All ternary decorations of `n` vertices as `(theta, lambda)` index lists.
pub fn decorations(n: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for code in 0..3usize.pow(n as u32) {
        let (mut theta, mut lambda) = (Vec::new(), Vec::new());
        let mut c = code;
        for v in 1..=n {
            match c % 3 {
                1 => theta.push(v),
                2 => lambda.push(v),
                _ => {}
            }
            c /= 3;
        }
        out.push((theta, lambda));
    }
    out
}
