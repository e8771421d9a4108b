//! Exact sparse linear algebra over the rationals.
//!
//! Every routine here works on finite-dimensional coordinate spaces whose
//! basis labels are kept by the caller (see [`LabeledBasis`]). Elimination is
//! fraction-free: vectors are scaled to primitive integer rows before they
//! enter an echelon, and each elimination step is followed by a division by
//! the row content. This keeps coefficients small on the structured matrices
//! produced by Koszul differentials while never leaving exact arithmetic.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar (always in lowest terms with positive denominator).
pub type Rational = BigRational;

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// Errors raised by contract violations in this module.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("map does not descend: the image of subspace vector {index} leaves the target subspace")]
    DoesNotDescend { index: usize },
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for integral rationals.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

// ---------------------------------------------------------------------------
// Labeled bases
// ---------------------------------------------------------------------------

/// An ordered list of distinct labels with a reverse index.
#[derive(Debug, Clone)]
pub struct LabeledBasis<L: Clone + Eq + Hash> {
    labels: Vec<L>,
    index: HashMap<L, usize>,
}

impl<L: Clone + Eq + Hash> LabeledBasis<L> {
    /// Builds a basis; panics if labels repeat (callers enumerate distinct tags).
    pub fn new(labels: Vec<L>) -> Self {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            let prev = index.insert(l.clone(), i);
            assert!(prev.is_none(), "labeled basis with repeated label");
        }
        LabeledBasis { labels, index }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &L {
        &self.labels[i]
    }

    pub fn position(&self, l: &L) -> Option<usize> {
        self.index.get(l).copied()
    }
}

// ---------------------------------------------------------------------------
// Sparse matrices
// ---------------------------------------------------------------------------

/// Column-major sparse matrix with exact rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    /// The `nrows × ncols` zero matrix.
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, cols: vec![Vec::new(); ncols] }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let cols = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        SparseMatrix { nrows: n, ncols: n, cols }
    }

    /// Builds a matrix from its columns; entries are sorted, merged and zeros dropped.
    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        let ncols = cols.len();
        let cols = cols.into_iter().map(normalize_sparse).collect::<Vec<_>>();
        for c in &cols {
            if let Some(&(i, _)) = c.last() {
                assert!(i < nrows, "row index {i} out of range {nrows}");
            }
        }
        SparseMatrix { nrows, ncols, cols }
    }

    /// Builds a matrix from dense rows of small integers (test and example helper).
    pub fn from_rows_i64(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut cols = vec![Vec::new(); ncols];
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), ncols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                if x != 0 {
                    cols[j].push((i, int(x)));
                }
            }
        }
        SparseMatrix { nrows, ncols, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    /// Entry lookup (zero when absent).
    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.cols[j]
            .binary_search_by_key(&i, |e| e.0)
            .map(|k| self.cols[j][k].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Number of stored (nonzero) entries.
    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Applies the matrix to a sparse vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: HashMap<usize, Rational> = HashMap::new();
        for (j, x) in v {
            for (i, a) in &self.cols[*j] {
                *acc.entry(*i).or_insert_with(Rational::zero) += a * x;
            }
        }
        normalize_sparse(acc.into_iter().collect())
    }

    /// Applies the matrix to a dense vector.
    pub fn apply_dense(&self, x: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
        if x.len() != self.ncols {
            return Err(LinAlgError::DimensionMismatch { expected: self.ncols, got: x.len() });
        }
        let mut out = vec![Rational::zero(); self.nrows];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (i, a) in &self.cols[j] {
                out[*i] += a * xj;
            }
        }
        Ok(out)
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix, LinAlgError> {
        if self.ncols != rhs.nrows {
            return Err(LinAlgError::DimensionMismatch { expected: self.ncols, got: rhs.nrows });
        }
        let cols = rhs.cols.iter().map(|c| self.apply(c)).collect();
        Ok(SparseMatrix { nrows: self.nrows, ncols: rhs.ncols, cols })
    }

    /// Matrix sum.
    pub fn add(&self, rhs: &SparseMatrix) -> Result<SparseMatrix, LinAlgError> {
        if self.nrows != rhs.nrows || self.ncols != rhs.ncols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.nrows * self.ncols,
                got: rhs.nrows * rhs.ncols,
            });
        }
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| {
                let mut v = a.clone();
                v.extend(b.iter().cloned());
                normalize_sparse(v)
            })
            .collect();
        Ok(SparseMatrix { nrows: self.nrows, ncols: self.ncols, cols })
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Rational) -> SparseMatrix {
        if s.is_zero() {
            return SparseMatrix::zero(self.nrows, self.ncols);
        }
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(i, x)| (*i, x * s)).collect())
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, cols }
    }
}

/// Sorts a sparse vector by index, merges duplicates and drops zeros.
pub fn normalize_sparse(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, y)) if *j == i => *y += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

// ---------------------------------------------------------------------------
// Fraction-free echelon engine
// ---------------------------------------------------------------------------

type IntRow = Vec<(usize, BigInt)>;

fn to_int_row(v: &SparseVec) -> IntRow {
    let mut l = BigInt::one();
    for (_, x) in v {
        l = l.lcm(x.denom());
    }
    v.iter().map(|(i, x)| (*i, x.numer() * (&l / x.denom()))).collect()
}

fn row_content(row: &IntRow, extra: &IntRow) -> BigInt {
    let mut g = BigInt::zero();
    for (_, x) in row.iter().chain(extra.iter()) {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_row(row: &mut IntRow, g: &BigInt) {
    for (_, x) in row.iter_mut() {
        *x /= g;
    }
}

/// `a·v − b·w` for sorted integer rows.
fn combine(a: &BigInt, v: &IntRow, b: &BigInt, w: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut p, mut q) = (0, 0);
    while p < v.len() || q < w.len() {
        let take_v = q >= w.len() || (p < v.len() && v[p].0 < w[q].0);
        let take_w = p >= v.len() || (q < w.len() && w[q].0 < v[p].0);
        if take_v {
            out.push((v[p].0, a * &v[p].1));
            p += 1;
        } else if take_w {
            out.push((w[q].0, -(b * &w[q].1)));
            q += 1;
        } else {
            let x = a * &v[p].1 - b * &w[q].1;
            if !x.is_zero() {
                out.push((v[p].0, x));
            }
            p += 1;
            q += 1;
        }
    }
    out
}

/// Incremental semi-echelon form: each stored row has a distinct leading index.
/// Optionally tracks, for every row, its expression in terms of inserted inputs.
#[derive(Debug, Clone, Default)]
struct Echelon {
    rows: Vec<IntRow>,
    combos: Vec<IntRow>,
    by_pivot: HashMap<usize, usize>,
}

enum Inserted {
    /// The vector was independent and became the row with this leading index.
    Pivot,
    /// The vector reduced to zero; the tracked relation among inputs is returned.
    Dependent(IntRow),
}

impl Echelon {
    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `(v, combo)` by leading-entry elimination until the leading index
    /// is free or the vector vanishes.
    fn reduce(&self, mut v: IntRow, mut combo: IntRow) -> (IntRow, IntRow) {
        while let Some((lead, _)) = v.first() {
            let Some(&r) = self.by_pivot.get(lead) else { break };
            let row = &self.rows[r];
            let a = &row[0].1;
            let b = &v[0].1;
            let g = a.gcd(b);
            let (a, b) = (a / &g, b / &g);
            v = combine(&a, &v, &b, row);
            if !self.combos.is_empty() || !combo.is_empty() {
                let rc = self.combos.get(r).cloned().unwrap_or_default();
                combo = combine(&a, &combo, &b, &rc);
            }
            let c = row_content(&v, &combo);
            if !c.is_zero() && !c.is_one() {
                divide_row(&mut v, &c);
                divide_row(&mut combo, &c);
            }
        }
        (v, combo)
    }

    fn insert(&mut self, v: IntRow, combo: IntRow, track: bool) -> Inserted {
        let (mut v, mut combo) = self.reduce(v, combo);
        if v.is_empty() {
            return Inserted::Dependent(combo);
        }
        if v[0].1.is_negative() {
            for (_, x) in v.iter_mut() {
                *x = -x.clone();
            }
            for (_, x) in combo.iter_mut() {
                *x = -x.clone();
            }
        }
        let lead = v[0].0;
        self.by_pivot.insert(lead, self.rows.len());
        self.rows.push(v);
        if track {
            self.combos.push(combo);
        }
        Inserted::Pivot
    }

    fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(to_int_row(v), Vec::new()).0.is_empty()
    }
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

/// A subspace of a coordinate space, stored as a semi-echelon basis with
/// strictly increasing leading indices.
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    echelon: Echelon,
}

impl Subspace {
    /// The zero subspace.
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, echelon: Echelon::default() }
    }

    /// The whole ambient space.
    pub fn full(ambient: usize) -> Self {
        let vecs: Vec<SparseVec> = (0..ambient).map(|i| vec![(i, Rational::one())]).collect();
        Subspace::span(ambient, &vecs)
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vecs: &[SparseVec]) -> Self {
        let mut echelon = Echelon::default();
        for v in vecs {
            if let Some(&(i, _)) = v.last() {
                assert!(i < ambient, "vector index {i} outside ambient {ambient}");
            }
            echelon.insert(to_int_row(v), Vec::new(), false);
        }
        Subspace { ambient, echelon }
    }

    /// Column space of a matrix.
    pub fn image(m: &SparseMatrix) -> Self {
        Subspace::span(m.nrows, &m.cols)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Membership test.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.echelon.contains(v)
    }

    /// Leading indices of the basis, increasing.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.echelon.by_pivot.keys().copied().collect();
        p.sort_unstable();
        p
    }

    /// Canonical basis in reduced echelon form: pivots increase, each pivot
    /// entry is 1 and every other basis vector vanishes at that pivot.
    pub fn reduced_basis(&self) -> Vec<SparseVec> {
        let pivots = self.pivots();
        let mut basis: Vec<SparseVec> = pivots
            .iter()
            .map(|p| {
                let row = &self.echelon.rows[self.echelon.by_pivot[p]];
                let lead = Rational::from_integer(row[0].1.clone());
                row.iter().map(|(i, x)| (*i, Rational::from_integer(x.clone()) / &lead)).collect()
            })
            .collect();
        // Back substitution from the last pivot upwards.
        for k in (0..basis.len()).rev() {
            let p = pivots[k];
            let pivot_vec = basis[k].clone();
            for b in basis.iter_mut().take(k) {
                if let Ok(pos) = b.binary_search_by_key(&p, |e| e.0) {
                    let c = b[pos].1.clone();
                    let mut merged = b.clone();
                    merged.extend(pivot_vec.iter().map(|(i, x)| (*i, -(x * &c))));
                    *b = normalize_sparse(merged);
                }
            }
        }
        basis
    }

    /// Basis as a matrix whose columns are the reduced basis vectors.
    pub fn basis_matrix(&self) -> SparseMatrix {
        SparseMatrix::from_columns(self.ambient, self.reduced_basis())
    }

    /// Equality as subspaces.
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && self.reduced_basis() == other.reduced_basis()
    }

    /// Whether `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.reduced_basis().iter().all(|v| other.contains(v))
    }
}

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

/// Exact rank of a matrix.
pub fn rank(m: &SparseMatrix) -> usize {
    let mut e = Echelon::default();
    let mut r = 0;
    for c in &m.cols {
        if let Inserted::Pivot = e.insert(to_int_row(c), Vec::new(), false) {
            r += 1;
        }
    }
    r
}

/// Inserts the columns of `m` with relation tracking; returns the echelon and
/// the relations found (each an integer combination of column indices).
fn tracked_columns(m: &SparseMatrix) -> (Echelon, Vec<IntRow>) {
    let mut e = Echelon::default();
    let mut relations = Vec::new();
    for (j, c) in m.cols.iter().enumerate() {
        match e.insert(to_int_row(c), vec![(j, BigInt::one())], true) {
            Inserted::Pivot => {}
            Inserted::Dependent(rel) => relations.push(rel),
        }
    }
    (e, relations)
}

fn int_row_to_sparse(r: &IntRow) -> SparseVec {
    r.iter().map(|(i, x)| (*i, Rational::from_integer(x.clone()))).collect()
}

/// Kernel of a matrix as a subspace of its domain.
pub fn kernel(m: &SparseMatrix) -> Subspace {
    let (_, relations) = tracked_columns(m);
    let vecs: Vec<SparseVec> = relations.iter().map(int_row_to_sparse).collect();
    let k = Subspace::span(m.ncols, &vecs);
    debug_assert_eq!(k.dim(), relations.len());
    k
}

/// Outcome of [`solve_membership`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// A solution `x` with `M·x = b`.
    Solution(Vec<Rational>),
    /// `b` is not in the column space of `M`.
    NotInImage,
}

/// Solves `M·x = b` exactly, or reports that `b` is not in the image.
pub fn solve_membership(m: &SparseMatrix, b: &[Rational]) -> Result<Membership, LinAlgError> {
    if b.len() != m.nrows {
        return Err(LinAlgError::DimensionMismatch { expected: m.nrows, got: b.len() });
    }
    let (e, _) = tracked_columns(m);
    let bvec: SparseVec =
        b.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
    if bvec.is_empty() {
        return Ok(Membership::Solution(vec![Rational::zero(); m.ncols]));
    }
    let marker = m.ncols;
    let (rest, combo) = e.reduce(to_int_row(&bvec), vec![(marker, BigInt::one())]);
    if !rest.is_empty() {
        return Ok(Membership::NotInImage);
    }
    // combo encodes  s·b + Σ k_j M_j = 0  with s at index `marker`.
    let s = combo
        .iter()
        .find(|(i, _)| *i == marker)
        .map(|(_, x)| Rational::from_integer(x.clone()))
        .expect("relation keeps the right-hand side coefficient");
    let mut x = vec![Rational::zero(); m.ncols];
    for (j, k) in &combo {
        if *j != marker {
            x[*j] = -Rational::from_integer(k.clone()) / &s;
        }
    }
    Ok(Membership::Solution(x))
}

/// Rank and kernel dimension of the map `(domain/U) → (codomain/V)` induced by `m`.
pub fn induced_quotient_map(
    m: &SparseMatrix,
    u: &Subspace,
    v: &Subspace,
) -> Result<(usize, usize), LinAlgError> {
    if u.ambient != m.ncols {
        return Err(LinAlgError::AmbientMismatch { left: u.ambient, right: m.ncols });
    }
    if v.ambient != m.nrows {
        return Err(LinAlgError::AmbientMismatch { left: v.ambient, right: m.nrows });
    }
    for (k, row) in u.echelon.rows.iter().enumerate() {
        let image = m.apply(&int_row_to_sparse(row));
        if !v.contains(&image) {
            return Err(LinAlgError::DoesNotDescend { index: k });
        }
    }
    let u_pivots: std::collections::HashSet<usize> = u.echelon.by_pivot.keys().copied().collect();
    let mut e = v.echelon.clone();
    e.combos.clear();
    let mut rank = 0;
    for j in 0..m.ncols {
        if u_pivots.contains(&j) {
            continue;
        }
        if let Inserted::Pivot = e.insert(to_int_row(&m.cols[j]), Vec::new(), false) {
            rank += 1;
        }
    }
    Ok((rank, m.ncols - u.dim() - rank))
}

/// Intersection of two subspaces of the same ambient space.
pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace, LinAlgError> {
    if a.ambient != b.ambient {
        return Err(LinAlgError::AmbientMismatch { left: a.ambient, right: b.ambient });
    }
    let a_basis: Vec<IntRow> = a.echelon.rows.clone();
    let na = a_basis.len();
    let mut e = Echelon::default();
    for (k, r) in a_basis.iter().enumerate() {
        e.insert(r.clone(), vec![(k, BigInt::one())], true);
    }
    let mut vecs = Vec::new();
    for (k, r) in b.echelon.rows.iter().enumerate() {
        if let Inserted::Dependent(rel) = e.insert(r.clone(), vec![(na + k, BigInt::one())], true) {
            // rel: Σ α_i a_i + Σ β_j b_j = 0; the A-part is an element of A ∩ B.
            let mut acc: SparseVec = Vec::new();
            for (idx, coef) in rel.iter().filter(|(i, _)| *i < na) {
                let c = Rational::from_integer(coef.clone());
                acc.extend(a_basis[*idx].iter().map(|(i, x)| (*i, Rational::from_integer(x.clone()) * &c)));
            }
            vecs.push(normalize_sparse(acc));
        }
    }
    Ok(Subspace::span(a.ambient, &vecs))
}

/// Sum of two subspaces.
pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace, LinAlgError> {
    if a.ambient != b.ambient {
        return Err(LinAlgError::AmbientMismatch { left: a.ambient, right: b.ambient });
    }
    let mut vecs = a.reduced_basis();
    vecs.extend(b.reduced_basis());
    Ok(Subspace::span(a.ambient, &vecs))
}

/// Preimage `{x : M·x ∈ target}` as a subspace of the domain of `m`.
pub fn preimage(m: &SparseMatrix, target: &Subspace) -> Result<Subspace, LinAlgError> {
    if target.ambient != m.nrows {
        return Err(LinAlgError::AmbientMismatch { left: target.ambient, right: m.nrows });
    }
    let mut cols = m.cols.clone();
    cols.extend(target.echelon.rows.iter().map(int_row_to_sparse));
    let joint = SparseMatrix::from_columns(m.nrows, cols);
    let (_, relations) = tracked_columns(&joint);
    let vecs: Vec<SparseVec> = relations
        .iter()
        .map(|rel| int_row_to_sparse(rel).into_iter().filter(|(i, _)| *i < m.ncols).collect())
        .collect();
    Ok(Subspace::span(m.ncols, &vecs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preimage_examples() {
        let m = SparseMatrix::from_rows_i64(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(preimage(&m, &Subspace::zero(2)).unwrap().dim(), 1);
        assert_eq!(preimage(&m, &Subspace::full(2)).unwrap().dim(), 3);
        let line = Subspace::span(2, &[vec![(0, int(1)), (1, int(1))]]);
        let p = preimage(&m, &line).unwrap();
        assert_eq!(p.dim(), 2);
        assert!(p.contains(&vec![(0, int(1)), (1, int(1))]));
    }

    fn dense(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseMatrix::zero(3, 4)), 0);
        assert_eq!(rank(&SparseMatrix::identity(5)), 5);
        assert_eq!(rank(&SparseMatrix::from_rows_i64(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&SparseMatrix::zero(0, 4)), 0);
        assert_eq!(rank(&SparseMatrix::zero(4, 0)), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&SparseMatrix::identity(3)).dim(), 0);
        assert_eq!(kernel(&SparseMatrix::zero(2, 3)).dim(), 3);
        let k = kernel(&SparseMatrix::from_rows_i64(&[&[1, 1, 0]]));
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&vec![(0, int(1)), (1, int(-1))]));
    }

    #[test]
    fn membership_examples() {
        let id = SparseMatrix::identity(2);
        assert_eq!(solve_membership(&id, &dense(&[3, 5])).unwrap(), Membership::Solution(dense(&[3, 5])));
        let col = SparseMatrix::from_rows_i64(&[&[1], &[2]]);
        assert_eq!(solve_membership(&col, &dense(&[1, 3])).unwrap(), Membership::NotInImage);
        let m = SparseMatrix::from_rows_i64(&[&[2, 0], &[0, 0]]);
        assert_eq!(
            solve_membership(&m, &dense(&[1, 0])).unwrap(),
            Membership::Solution(vec![rat(1, 2), int(0)])
        );
        assert!(matches!(
            solve_membership(&m, &dense(&[1])),
            Err(LinAlgError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn induced_map_examples() {
        let m = SparseMatrix::from_rows_i64(&[&[1, 2, 0], &[0, 0, 1]]);
        let r = induced_quotient_map(&m, &Subspace::zero(3), &Subspace::zero(2)).unwrap();
        assert_eq!(r, (rank(&m), 3 - rank(&m)));
        let id = SparseMatrix::identity(3);
        assert_eq!(induced_quotient_map(&id, &Subspace::full(3), &Subspace::full(3)).unwrap(), (0, 0));
        // Hand computation: the map e0 ↦ e0, e1 ↦ 0 becomes zero modulo span{e0}.
        let m = SparseMatrix::from_rows_i64(&[&[1, 0], &[0, 0]]);
        let v = Subspace::span(2, &[vec![(0, int(1))]]);
        assert_eq!(induced_quotient_map(&m, &Subspace::zero(2), &v).unwrap(), (0, 2));
        let bad = induced_quotient_map(&id, &Subspace::full(3), &Subspace::zero(3));
        assert!(matches!(bad, Err(LinAlgError::DoesNotDescend { .. })));
    }

    #[test]
    fn intersect_examples() {
        let b = Subspace::span(3, &[vec![(0, int(1)), (2, int(3))]]);
        assert!(intersect(&Subspace::full(3), &b).unwrap().same_as(&b));
        let l1 = Subspace::span(2, &[vec![(0, int(1))]]);
        let l2 = Subspace::span(2, &[vec![(0, int(1)), (1, int(1))]]);
        assert_eq!(intersect(&l1, &l2).unwrap().dim(), 0);
        let a = Subspace::span(3, &[vec![(0, int(1))], vec![(1, int(1))]]);
        let b = Subspace::span(3, &[vec![(1, int(1))], vec![(2, int(1))]]);
        let c = intersect(&a, &b).unwrap();
        assert!(c.same_as(&Subspace::span(3, &[vec![(1, int(1))]])));
        assert!(intersect(&a, &Subspace::zero(2)).is_err());
    }

    #[test]
    fn reduced_basis_is_canonical() {
        let a = Subspace::span(3, &[vec![(0, int(2)), (1, int(4))], vec![(0, int(1)), (2, int(1))]]);
        let b = Subspace::span(3, &[vec![(1, int(2)), (2, int(-1))], vec![(0, int(3)), (1, int(6))]]);
        assert!(a.same_as(&b));
        let rb = a.reduced_basis();
        assert_eq!(rb[0], vec![(0, int(1)), (2, int(1))]);
        assert_eq!(rb[1], vec![(1, int(1)), (2, rat(-1, 2))]);
    }
}
