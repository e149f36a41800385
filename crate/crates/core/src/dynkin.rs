//! Dynkin diagrams of split semi-simple groups.
//!
//! A diagram is an ordered product of simple components. Vertices carry
//! global 1-based indices obtained by concatenating the components in
//! declaration order, each component numbered in Bourbaki order.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported total rank; vertex sets are stored as `u64` bitmasks.
pub const MAX_RANK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub const ALL: [Letter; 7] = [
        Letter::A,
        Letter::B,
        Letter::C,
        Letter::D,
        Letter::E,
        Letter::F,
        Letter::G,
    ];

    pub fn admits(self, rank: u32) -> bool {
        match self {
            Letter::A => rank >= 1,
            Letter::B => rank >= 2,
            Letter::C => rank >= 3,
            Letter::D => rank >= 4,
            Letter::E => (6..=8).contains(&rank),
            Letter::F => rank == 4,
            Letter::G => rank == 2,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for Letter {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "A" | "a" => Ok(Letter::A),
            "B" | "b" => Ok(Letter::B),
            "C" | "c" => Ok(Letter::C),
            "D" | "d" => Ok(Letter::D),
            "E" | "e" => Ok(Letter::E),
            "F" | "f" => Ok(Letter::F),
            "G" | "g" => Ok(Letter::G),
            _ => Err(()),
        }
    }
}

/// A simple (connected) Dynkin type such as `D4`.
///
/// Low-rank aliases (`B1`, `C2`, `D3`, ...) are rejected rather than
/// normalized, so every diagram has exactly one spelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleType {
    letter: Letter,
    rank: u32,
}

impl SimpleType {
    pub fn new(letter: Letter, rank: u32) -> Result<Self> {
        if letter.admits(rank) {
            Ok(SimpleType { letter, rank })
        } else {
            Err(Error::InvalidRank { letter, rank })
        }
    }

    pub fn letter(&self) -> Letter {
        self.letter
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    /// Every admissible simple type of rank at most `max_rank`.
    pub fn all_up_to(max_rank: u32) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for letter in Letter::ALL {
            for rank in 1..=max_rank {
                if letter.admits(rank) {
                    out.push(SimpleType { letter, rank });
                }
            }
        }
        out
    }

    /// Nonzero off-diagonal Cartan entries as `(i, j, a_ij, a_ji)` with
    /// 0-based local indices and `i < j`.
    fn bonds(&self) -> Vec<(usize, usize, i32, i32)> {
        let n = self.rank();
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1, -1, -1));
        match self.letter {
            Letter::A => chain(n).collect(),
            // alpha_n short
            Letter::B => chain(n - 1).chain([(n - 2, n - 1, -1, -2)]).collect(),
            // alpha_n long
            Letter::C => chain(n - 1).chain([(n - 2, n - 1, -2, -1)]).collect(),
            // fork at n-2: vertices n-1 and n both attach to it
            Letter::D => chain(n - 1).chain([(n - 3, n - 1, -1, -1)]).collect(),
            // chain 1-3-4-...-n with 2 hanging off 4
            Letter::E => [(0, 2, -1, -1), (1, 3, -1, -1)]
                .into_iter()
                .chain((2..n - 1).map(|i| (i, i + 1, -1, -1)))
                .collect(),
            Letter::F => vec![(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)],
            // alpha_1 short, alpha_2 long
            Letter::G => vec![(0, 1, -3, -1)],
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter, self.rank)
    }
}

/// A vertex of a diagram, addressed by its 1-based global index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(usize);

impl Vertex {
    /// # Panics
    /// If `index` is zero or exceeds [`MAX_RANK`].
    pub fn new(index: usize) -> Self {
        assert!(
            (1..=MAX_RANK).contains(&index),
            "vertex index {index} outside 1..={MAX_RANK}"
        );
        Vertex(index)
    }

    pub fn index(self) -> usize {
        self.0
    }

    /// 0-based position in coefficient vectors.
    pub fn slot(self) -> usize {
        self.0 - 1
    }

    fn bit(self) -> u64 {
        1u64 << self.slot()
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of vertices stored as a bitmask (bit `i - 1` for vertex `i`).
///
/// The derived ordering compares bitmasks as integers, which is the
/// canonical order used for enumeration tables.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_RANK);
        if n == MAX_RANK {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(v.bit())
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 & v.bit() != 0
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        let fresh = !self.contains(v);
        self.0 |= v.bit();
        fresh
    }

    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | v.bit())
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Least vertex, if any.
    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| Vertex(self.0.trailing_zeros() as usize + 1))
    }

    /// Highest vertex index present, or 0 for the empty set.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let tz = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(Vertex(tz + 1))
        })
    }

    /// All subsets of `self` in ascending bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let set = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            let succ = cur.wrapping_sub(set) & set;
            next = (succ != 0).then_some(succ);
            Some(VertexSet(cur))
        })
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Cartan matrix with `a[i][j] = <alpha_j, alpha_i^vee>`, so column `j`
/// is `alpha_j` written in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i32>,
}

impl CartanMatrix {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> i32 {
        self.entries[row * self.n + col]
    }

    pub fn entry(&self, i: Vertex, j: Vertex) -> i32 {
        self.get(i.slot(), j.slot())
    }

    pub fn rows(&self) -> Vec<Vec<i32>> {
        self.entries.chunks(self.n).map(<[i32]>::to_vec).collect()
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> i128 {
        self.leading_minor(self.n)
    }

    /// Determinant of the top-left `k x k` block.
    pub fn leading_minor(&self, k: usize) -> i128 {
        assert!(k <= self.n);
        if k == 0 {
            return 1;
        }
        let mut m: Vec<Vec<i128>> = (0..k)
            .map(|i| (0..k).map(|j| self.get(i, j) as i128).collect())
            .collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for p in 0..k - 1 {
            if m[p][p] == 0 {
                match (p + 1..k).find(|&r| m[r][p] != 0) {
                    Some(r) => {
                        m.swap(p, r);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in p + 1..k {
                for j in p + 1..k {
                    m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
                }
                m[i][p] = 0;
            }
            prev = m[p][p];
        }
        sign * m[k - 1][k - 1]
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    components: Vec<SimpleType>,
    offsets: Vec<usize>,
    cartan: CartanMatrix,
}

/// A Dynkin diagram: a product of simple components with global numbering.
///
/// Cloning is cheap; the data is shared.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    inner: Arc<Inner>,
}

impl DynkinDiagram {
    pub fn build(components: &[SimpleType]) -> Result<Self> {
        let n: usize = components.iter().map(SimpleType::rank).sum();
        if n > MAX_RANK {
            return Err(Error::DiagramTooLarge {
                rank: n,
                max: MAX_RANK,
            });
        }
        let mut entries = vec![0i32; n * n];
        let mut offsets = Vec::with_capacity(components.len());
        let mut offset = 0;
        for c in components {
            offsets.push(offset);
            for i in 0..c.rank() {
                entries[(offset + i) * n + offset + i] = 2;
            }
            for (i, j, aij, aji) in c.bonds() {
                entries[(offset + i) * n + offset + j] = aij;
                entries[(offset + j) * n + offset + i] = aji;
            }
            offset += c.rank();
        }
        Ok(DynkinDiagram {
            inner: Arc::new(Inner {
                components: components.to_vec(),
                offsets,
                cartan: CartanMatrix { n, entries },
            }),
        })
    }

    pub fn simple(letter: Letter, rank: u32) -> Result<Self> {
        Self::build(&[SimpleType::new(letter, rank)?])
    }

    pub fn rank(&self) -> usize {
        self.inner.cartan.n
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.inner.components
    }

    pub fn cartan_matrix(&self) -> &CartanMatrix {
        &self.inner.cartan
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        (1..=self.rank()).map(Vertex)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.rank())
    }

    pub fn vertex(&self, index: usize) -> Result<Vertex> {
        if (1..=self.rank()).contains(&index) {
            Ok(Vertex(index))
        } else {
            Err(Error::VertexOutOfRange {
                vertex: index,
                rank: self.rank(),
            })
        }
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        self.vertex(v.index()).map(drop)
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.all_vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v.index(),
                rank: self.rank(),
            }),
            None => Ok(()),
        }
    }

    /// Component index and 1-based local (Bourbaki) index of `v`.
    pub fn locate(&self, v: Vertex) -> Result<(usize, usize)> {
        self.check_vertex(v)?;
        let slot = v.slot();
        let k = self.inner.offsets.partition_point(|&o| o <= slot) - 1;
        Ok((k, slot - self.inner.offsets[k] + 1))
    }

    /// `true` iff `i != j` and the simple roots are not orthogonal.
    pub fn adjacent(&self, i: Vertex, j: Vertex) -> Result<bool> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        Ok(i != j && self.inner.cartan.entry(i, j) != 0)
    }

    /// Number of lines drawn between `i` and `j` (0 when not adjacent).
    pub fn bond(&self, i: Vertex, j: Vertex) -> Result<u32> {
        if !self.adjacent(i, j)? {
            return Ok(0);
        }
        let c = &self.inner.cartan;
        Ok(c.entry(i, j)
            .unsigned_abs()
            .max(c.entry(j, i).unsigned_abs()))
    }

    /// Vertices adjacent to `v`.
    pub fn neighbours(&self, v: Vertex) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self
            .vertices()
            .filter(|&w| w != v && self.inner.cartan.entry(v, w) != 0)
            .collect())
    }

    /// Whether `alpha` has no edge to any vertex of `theta`.
    pub fn orthogonal_to_set(&self, alpha: Vertex, theta: VertexSet) -> Result<bool> {
        self.check_vertex(alpha)?;
        self.check_set(theta)?;
        if theta.contains(alpha) {
            return Err(Error::AlphaInTheta(alpha));
        }
        Ok(self.neighbours(alpha)?.intersection(theta).is_empty())
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let c = &self.inner.cartan;
        self.vertices()
            .flat_map(|i| self.vertices().filter(move |&j| i < j).map(move |j| (i, j)))
            .filter(|&(i, j)| c.entry(i, j) != 0)
            .collect()
    }

    /// Human-readable vertex numbering, e.g. `A3: 1..3, B2: 4..5`.
    pub fn numbering_legend(&self) -> String {
        let parts: Vec<String> = self
            .components()
            .iter()
            .zip(&self.inner.offsets)
            .map(|(c, &o)| {
                if c.rank() == 1 {
                    format!("{c}: {}", o + 1)
                } else {
                    format!("{c}: {}..{}", o + 1, o + c.rank())
                }
            })
            .collect();
        format!(
            "{} (Bourbaki order within each component)",
            parts.join(", ")
        )
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.components().iter().enumerate() {
            if k > 0 {
                write!(f, "x")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
