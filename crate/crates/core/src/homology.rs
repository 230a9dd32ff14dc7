//! Reduced simplicial homology of induced subcomplexes of a Stanley–Reisner
//! complex, over GF(2) or over the rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::DepthError;
use crate::graph::Bits;
use crate::ideal::MonomialIdeal;

/// Coefficient field for homology ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub enum FieldChoice {
    /// GF(2): elimination on packed bit rows.
    #[serde(rename = "2")]
    #[default]
    Char2,
    /// The rationals: exact fraction-free integer elimination.
    #[serde(rename = "0")]
    Char0,
}

impl FieldChoice {
    pub const ALL: [FieldChoice; 2] = [FieldChoice::Char2, FieldChoice::Char0];

    pub fn characteristic(self) -> u32 {
        match self {
            FieldChoice::Char2 => 2,
            FieldChoice::Char0 => 0,
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.characteristic())
    }
}

impl FromStr for FieldChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "2" => Ok(FieldChoice::Char2),
            "0" | "q" | "Q" => Ok(FieldChoice::Char0),
            other => Err(format!("unknown field {other:?}; expected 2, 0 or q")),
        }
    }
}

/// Stanley–Reisner complex of a squarefree monomial ideal: a set `W` of
/// vertices is a face iff it contains no nonface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexView {
    nvars: usize,
    nonfaces: Vec<u64>,
}

impl ComplexView {
    pub fn new(nvars: usize, nonfaces: Vec<u64>) -> Result<Self, DepthError> {
        if nvars > 64 {
            return Err(DepthError::TooManyVariables { got: nvars, cap: 64 });
        }
        Ok(ComplexView { nvars, nonfaces })
    }

    /// Complex whose minimal nonfaces are the generator supports of `ideal`.
    pub fn from_ideal(ideal: &MonomialIdeal) -> Result<Self, DepthError> {
        if !ideal.is_squarefree() {
            return Err(DepthError::NotSquarefree);
        }
        Self::new(ideal.nvars(), ideal.gens().iter().map(|g| g.support()).collect())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn nonfaces(&self) -> &[u64] {
        &self.nonfaces
    }

    pub fn is_face(&self, w: u64) -> bool {
        self.nonfaces.iter().all(|&nf| nf & !w != 0)
    }

    /// Faces of the subcomplex induced on `w`, grouped by cardinality
    /// (`levels[k]` holds faces with `k` vertices, sorted). Empty for the
    /// void complex.
    pub fn faces_within(&self, w: u64) -> Vec<Vec<u64>> {
        if self.nonfaces.contains(&0) {
            return Vec::new();
        }
        let local: Vec<u64> = self.nonfaces.iter().copied().filter(|&nf| nf & !w == 0).collect();
        let verts: Vec<usize> = Bits(w).collect();
        // nonfaces grouped by their highest vertex: adding vertex v to a face
        // built from lower vertices can only complete nonfaces whose top is v
        let mut by_top: Vec<Vec<u64>> = vec![Vec::new(); 64];
        for &nf in &local {
            by_top[63 - nf.leading_zeros() as usize].push(nf);
        }
        let mut levels: Vec<Vec<u64>> = vec![vec![0]];
        let mut stack: Vec<(u64, usize)> = vec![(0, 0)];
        while let Some((face, start)) = stack.pop() {
            for (k, &v) in verts.iter().enumerate().skip(start) {
                let next = face | 1u64 << v;
                if by_top[v].iter().any(|&nf| nf & !next == 0) {
                    continue;
                }
                let size = next.count_ones() as usize;
                if levels.len() <= size {
                    levels.push(Vec::new());
                }
                levels[size].push(next);
                stack.push((next, k + 1));
            }
        }
        for level in &mut levels {
            level.sort_unstable();
        }
        levels
    }
}

/// Reduced homology ranks of one complex; `ranks[k]` is the rank of the
/// reduced homology in dimension `k - 1`, so index 0 is dimension -1.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ReducedHomology {
    pub ranks: Vec<usize>,
}

impl ReducedHomology {
    pub fn get(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|k| self.ranks.get(k).copied())
            .unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// `(dimension, rank)` pairs with nonzero rank.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(k, &r)| (k as isize - 1, r))
    }
}

/// Reduced homology of the subcomplex of `complex` induced on `w`.
///
/// The complex `{∅}` has rank one in dimension -1; the void complex has no
/// homology at all.
pub fn reduced_homology_dims(complex: &ComplexView, w: u64, field: FieldChoice) -> ReducedHomology {
    let levels = complex.faces_within(w);
    if levels.is_empty() {
        return ReducedHomology::default();
    }
    // boundary_rank[k] = rank of the map from k-vertex faces to (k-1)-vertex faces
    let mut boundary_rank = vec![0usize; levels.len() + 1];
    for k in 1..levels.len() {
        boundary_rank[k] = boundary_matrix_rank(&levels[k], &levels[k - 1], field);
    }
    let ranks = (0..levels.len())
        .map(|k| levels[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect();
    ReducedHomology { ranks }
}

fn boundary_matrix_rank(faces: &[u64], lower: &[u64], field: FieldChoice) -> usize {
    let index = |f: u64| lower.binary_search(&f).expect("faces are closed under subsets");
    match field {
        FieldChoice::Char2 => {
            let words = lower.len().div_ceil(64);
            let mut basis = Gf2Basis::new(lower.len());
            for &f in faces {
                let mut row = vec![0u64; words];
                for v in Bits(f) {
                    let c = index(f & !(1u64 << v));
                    row[c / 64] |= 1u64 << (c % 64);
                }
                basis.insert(row);
            }
            basis.rank
        }
        FieldChoice::Char0 => {
            let rows: Vec<Vec<(u32, i64)>> = faces
                .iter()
                .map(|&f| {
                    let mut row: Vec<(u32, i64)> = Bits(f)
                        .enumerate()
                        .map(|(pos, v)| {
                            let sign = if pos % 2 == 0 { 1 } else { -1 };
                            (index(f & !(1u64 << v)) as u32, sign)
                        })
                        .collect();
                    row.sort_unstable_by_key(|e| e.0);
                    row
                })
                .collect();
            rational_rank(&rows, lower.len())
        }
    }
}

/// Incremental row echelon basis over GF(2); each stored row is keyed by its
/// lowest set column.
pub struct Gf2Basis {
    pivots: Vec<Option<Vec<u64>>>,
    pub rank: usize,
}

impl Gf2Basis {
    pub fn new(ncols: usize) -> Self {
        Gf2Basis {
            pivots: vec![None; ncols],
            rank: 0,
        }
    }

    /// Reduces `row` against the basis and stores it if independent.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        loop {
            let Some(lead) = lowest_bit(&row) else {
                return false;
            };
            match &self.pivots[lead] {
                Some(p) => {
                    for (a, b) in row.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    self.pivots[lead] = Some(row);
                    self.rank += 1;
                    return true;
                }
            }
        }
    }
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

/// Rank over the rationals of a sparse integer matrix given by rows of
/// `(column, value)` pairs sorted by column.
pub fn rational_rank(rows: &[Vec<(u32, i64)>], ncols: usize) -> usize {
    if let Some(r) = echelon_rank::<i64>(rows.iter().cloned(), ncols) {
        return r;
    }
    let big = rows
        .iter()
        .map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect::<Vec<_>>());
    echelon_rank::<BigInt>(big, ncols).expect("arbitrary precision cannot overflow")
}

trait ExactInt: Clone + PartialEq + Zero + One + Signed {
    fn checked_mul_(&self, other: &Self) -> Option<Self>;
    fn checked_sub_(&self, other: &Self) -> Option<Self>;
    fn gcd_(&self, other: &Self) -> Self;
}

impl ExactInt for i64 {
    fn checked_mul_(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn checked_sub_(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn gcd_(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
}

impl ExactInt for BigInt {
    fn checked_mul_(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub_(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd_(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
}

type SparseRow<T> = Vec<(u32, T)>;

/// Fraction-free elimination; every stored row is primitive with a positive
/// leading entry. Returns `None` on machine-integer overflow.
fn echelon_rank<T: ExactInt>(rows: impl Iterator<Item = SparseRow<T>>, ncols: usize) -> Option<usize> {
    let mut pivots: Vec<Option<SparseRow<T>>> = vec![None; ncols];
    let mut rank = 0;
    for mut row in rows {
        while let Some(&(lead, _)) = row.first() {
            let lead = lead as usize;
            match &pivots[lead] {
                None => {
                    normalize(&mut row);
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
                Some(p) => {
                    row = eliminate(&row, p)?;
                    normalize(&mut row);
                }
            }
        }
    }
    Some(rank)
}

/// `p_lead * row - row_lead * p`, which cancels the shared leading column.
fn eliminate<T: ExactInt>(row: &SparseRow<T>, p: &SparseRow<T>) -> Option<SparseRow<T>> {
    let a = &p[0].1;
    let b = &row[0].1;
    let mut out = Vec::with_capacity(row.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < p.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(u32::MAX);
        let cj = p.get(j).map(|e| e.0).unwrap_or(u32::MAX);
        let (col, val) = if ci < cj {
            i += 1;
            (ci, row[i - 1].1.checked_mul_(a)?)
        } else if cj < ci {
            j += 1;
            (cj, T::zero().checked_sub_(&p[j - 1].1.checked_mul_(b)?)?)
        } else {
            i += 1;
            j += 1;
            let x = row[i - 1].1.checked_mul_(a)?;
            let y = p[j - 1].1.checked_mul_(b)?;
            (ci, x.checked_sub_(&y)?)
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    Some(out)
}

fn normalize<T: ExactInt>(row: &mut SparseRow<T>) {
    let Some(first) = row.first() else { return };
    let mut g = first.1.abs();
    for (_, v) in row.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd_(v);
    }
    let flip = first.1.is_negative();
    if g.is_one() && !flip {
        return;
    }
    for (_, v) in row.iter_mut() {
        let mut q = if g.is_one() { v.clone() } else { div_exact(v, &g) };
        if flip {
            q = -q;
        }
        *v = q;
    }
}

fn div_exact<T: ExactInt>(v: &T, g: &T) -> T {
    // T implements Num through Signed
    v.clone() / g.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(c: &ComplexView, w: u64) -> ReducedHomology {
        let a = reduced_homology_dims(c, w, FieldChoice::Char2);
        let b = reduced_homology_dims(c, w, FieldChoice::Char0);
        assert_eq!(a, b);
        a
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        // nonface {0,1,2}: all edges present, no 2-face
        let c = ComplexView::new(3, vec![0b111]).unwrap();
        let h = both(&c, 0b111);
        assert_eq!(h.get(1), 1);
        assert_eq!(h.get(0), 0);
        assert_eq!(h.get(-1), 0);
        assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(1, 1)]);
    }

    #[test]
    fn full_simplex_is_acyclic() {
        let c = ComplexView::new(4, vec![]).unwrap();
        assert!(both(&c, 0b1111).is_acyclic());
        assert!(both(&c, 0b0101).is_acyclic());
    }

    #[test]
    fn two_points() {
        let c = ComplexView::new(2, vec![0b11]).unwrap();
        let h = both(&c, 0b11);
        assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn empty_and_void_conventions() {
        let c = ComplexView::new(2, vec![0b11]).unwrap();
        assert_eq!(both(&c, 0).nonzero().collect::<Vec<_>>(), vec![(-1, 1)]);
        // a vertex that is itself a nonface leaves {∅} on that vertex
        let c = ComplexView::new(1, vec![0b1]).unwrap();
        assert_eq!(both(&c, 0b1).get(-1), 1);
        let void = ComplexView::new(2, vec![0]).unwrap();
        assert!(both(&void, 0b11).is_acyclic());
    }

    #[test]
    fn projective_plane_sees_the_field() {
        // minimal 6-vertex triangulation of RP^2: H_1 = Z/2
        let tris = [
            [0, 1, 3],
            [1, 2, 3],
            [0, 2, 4],
            [1, 2, 4],
            [0, 3, 4],
            [0, 1, 5],
            [0, 2, 5],
            [2, 3, 5],
            [1, 4, 5],
            [3, 4, 5],
        ];
        let facets: Vec<u64> = tris.iter().map(|t| t.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        // minimal nonfaces: subsets not contained in any facet, all of whose
        // proper subsets are contained in one
        let in_facet = |s: u64| facets.iter().any(|&f| s & !f == 0);
        let nonfaces: Vec<u64> = (1u64..64)
            .filter(|&s| !in_facet(s) && Bits(s).all(|v| in_facet(s & !(1 << v))))
            .collect();
        let c = ComplexView::new(6, nonfaces).unwrap();
        let h2 = reduced_homology_dims(&c, 63, FieldChoice::Char2);
        let h0 = reduced_homology_dims(&c, 63, FieldChoice::Char0);
        assert_eq!((h2.get(1), h2.get(2)), (1, 1));
        assert!(h0.is_acyclic());
    }

    #[test]
    fn rational_rank_overflow_falls_back() {
        // rows with huge entries force the BigInt path
        let big = i64::MAX / 3;
        let rows = vec![vec![(0, big), (1, 7)], vec![(0, big - 1), (1, 5)], vec![(0, 1), (1, 1)]];
        assert_eq!(rational_rank(&rows, 2), 2);
        let dependent = vec![vec![(0, 2), (1, 4)], vec![(0, 3), (1, 6)]];
        assert_eq!(rational_rank(&dependent, 2), 1);
    }

    #[test]
    fn field_parsing() {
        assert_eq!("2".parse::<FieldChoice>().unwrap(), FieldChoice::Char2);
        assert_eq!("q".parse::<FieldChoice>().unwrap(), FieldChoice::Char0);
        assert!("3".parse::<FieldChoice>().is_err());
    }
}
