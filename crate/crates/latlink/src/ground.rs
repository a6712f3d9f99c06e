//! Vectors and matrices whose columns are indexed by labeled finite ground sets,
//! with exact rational linear algebra on top of them.

use crate::error::{Error, Result};
use crate::rat::{denominator_lcm, Int, Rat};
use num::{One, Zero};
use std::collections::HashMap;
use std::fmt;

/// An ordered set of distinct labels. The order defines column order and is
/// stable under every operation.
#[derive(Clone, Debug)]
pub struct GroundSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}
impl Eq for GroundSet {}

impl fmt::Display for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(","))
    }
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(GroundSet { labels, index })
    }

    pub fn empty() -> Self {
        GroundSet::new(Vec::<String>::new()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn contains_all<'a, I: IntoIterator<Item = &'a str>>(&self, labels: I) -> bool {
        labels.into_iter().all(|l| self.contains(l))
    }

    /// Disjoint union, first-operand order then second-operand order.
    pub fn union_disjoint(&self, other: &GroundSet) -> Result<GroundSet> {
        for l in &other.labels {
            if self.contains(l) {
                return Err(Error::DisjointnessViolation(l.clone()));
            }
        }
        GroundSet::new(self.labels.iter().chain(other.labels.iter()).cloned())
    }

    /// Union that merges shared labels: first-operand order, then the labels
    /// of `other` not already present, in their order.
    pub fn union_merge(&self, other: &GroundSet) -> GroundSet {
        let mut labels = self.labels.clone();
        for l in &other.labels {
            if !self.contains(l) {
                labels.push(l.clone());
            }
        }
        GroundSet::new(labels).unwrap()
    }

    /// Labels of `self` that are also in `other`, in `self` order.
    pub fn intersection(&self, other: &GroundSet) -> Vec<String> {
        self.labels
            .iter()
            .filter(|l| other.contains(l))
            .cloned()
            .collect()
    }

    /// Labels of `self` not in `keep`, in `self` order.
    pub fn difference<'a, I: IntoIterator<Item = &'a str>>(&self, drop: I) -> Vec<String> {
        let drop: Vec<&str> = drop.into_iter().collect();
        self.labels
            .iter()
            .filter(|l| !drop.contains(&l.as_str()))
            .cloned()
            .collect()
    }

    /// Sub-ground of the given labels, preserving `self` order.
    pub fn restricted<'a, I: IntoIterator<Item = &'a str>>(&self, keep: I) -> Result<GroundSet> {
        let keep: Vec<&str> = keep.into_iter().collect();
        for l in &keep {
            if !self.contains(l) {
                return Err(Error::UnknownLabel((*l).to_string()));
            }
        }
        GroundSet::new(
            self.labels
                .iter()
                .filter(|l| keep.contains(&l.as_str()))
                .cloned(),
        )
    }

    /// Renames every label through `f`, keeping the order.
    pub fn renamed<F: Fn(&str) -> String>(&self, f: F) -> Result<GroundSet> {
        GroundSet::new(self.labels.iter().map(|l| f(l)))
    }
}

/// Convenience constructor used pervasively in tests and examples.
pub fn ground<const N: usize>(labels: [&str; N]) -> GroundSet {
    GroundSet::new(labels).unwrap()
}

/// A vector on a ground set: one exact rational entry per label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledVector {
    ground: GroundSet,
    entries: Vec<Rat>,
}

impl LabeledVector {
    pub fn new(ground: GroundSet, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != ground.len() {
            return Err(Error::GroundMismatch(format!(
                "{} entries for ground of size {}",
                entries.len(),
                ground.len()
            )));
        }
        Ok(LabeledVector { ground, entries })
    }

    pub fn zero(ground: GroundSet) -> Self {
        let n = ground.len();
        LabeledVector {
            ground,
            entries: vec![Rat::zero(); n],
        }
    }

    pub fn from_i64(ground: GroundSet, vals: &[i64]) -> Result<Self> {
        LabeledVector::new(
            ground,
            vals.iter().map(|v| Rat::from_integer(Int::from(*v))).collect(),
        )
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn get(&self, label: &str) -> Result<&Rat> {
        let i = self
            .ground
            .position(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
        Ok(&self.entries[i])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn dot(&self, other: &LabeledVector) -> Result<Rat> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch(format!(
                "{} vs {}",
                self.ground, other.ground
            )));
        }
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, x| acc + x))
    }

    pub fn norm_sq(&self) -> Rat {
        self.entries
            .iter()
            .map(|a| a * a)
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    pub fn add(&self, other: &LabeledVector) -> Result<LabeledVector> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch("add".into()));
        }
        Ok(LabeledVector {
            ground: self.ground.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &LabeledVector) -> Result<LabeledVector> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch("sub".into()));
        }
        Ok(LabeledVector {
            ground: self.ground.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rat) -> LabeledVector {
        LabeledVector {
            ground: self.ground.clone(),
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// Restriction `f|_keep`, entries taken in `self` ground order.
    pub fn restrict<'a, I: IntoIterator<Item = &'a str>>(&self, keep: I) -> Result<LabeledVector> {
        let sub = self.ground.restricted(keep)?;
        let entries = sub
            .labels()
            .iter()
            .map(|l| self.entries[self.ground.position(l).unwrap()].clone())
            .collect();
        Ok(LabeledVector {
            ground: sub,
            entries,
        })
    }

    /// Zero-pads onto a superset ground. Labels of `self` must all occur in `sup`.
    pub fn pad_to(&self, sup: &GroundSet) -> Result<LabeledVector> {
        let mut entries = vec![Rat::zero(); sup.len()];
        for (i, l) in self.ground.labels().iter().enumerate() {
            let j = sup
                .position(l)
                .ok_or_else(|| Error::UnknownLabel(l.clone()))?;
            entries[j] = self.entries[i].clone();
        }
        Ok(LabeledVector {
            ground: sup.clone(),
            entries,
        })
    }

    /// Negates the entries on the labels in `on`.
    pub fn negate_on<'a, I: IntoIterator<Item = &'a str>>(&self, on: I) -> Result<LabeledVector> {
        let mut out = self.clone();
        for l in on {
            let i = self
                .ground
                .position(l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            out.entries[i] = -out.entries[i].clone();
        }
        Ok(out)
    }

    /// Rebuilds the vector on a ground with the same labels in another order.
    pub fn reordered(&self, new_ground: &GroundSet) -> Result<LabeledVector> {
        if new_ground.len() != self.ground.len() || !new_ground.contains_all(
            self.ground.labels().iter().map(|s| s.as_str()),
        ) {
            return Err(Error::GroundMismatch("reorder".into()));
        }
        let entries = new_ground
            .labels()
            .iter()
            .map(|l| self.entries[self.ground.position(l).unwrap()].clone())
            .collect();
        Ok(LabeledVector {
            ground: new_ground.clone(),
            entries,
        })
    }

    pub fn renamed<F: Fn(&str) -> String>(&self, f: F) -> Result<LabeledVector> {
        Ok(LabeledVector {
            ground: self.ground.renamed(f)?,
            entries: self.entries.clone(),
        })
    }
}

/// Concatenation `(f_X, g_Y)` of vectors on disjoint ground sets.
pub fn disjoint_concat(f: &LabeledVector, g: &LabeledVector) -> Result<LabeledVector> {
    let ground = f.ground.union_disjoint(&g.ground)?;
    let mut entries = f.entries.clone();
    entries.extend(g.entries.iter().cloned());
    Ok(LabeledVector { ground, entries })
}

/// A matrix whose columns are indexed by a ground set; rows are plain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledMatrix {
    ground: GroundSet,
    rows: Vec<Vec<Rat>>,
}

impl LabeledMatrix {
    pub fn new(ground: GroundSet, rows: Vec<Vec<Rat>>) -> Result<Self> {
        for r in &rows {
            if r.len() != ground.len() {
                return Err(Error::GroundMismatch(format!(
                    "row of length {} for ground of size {}",
                    r.len(),
                    ground.len()
                )));
            }
        }
        Ok(LabeledMatrix { ground, rows })
    }

    pub fn zero_rows(ground: GroundSet) -> Self {
        LabeledMatrix {
            ground,
            rows: Vec::new(),
        }
    }

    pub fn identity(ground: GroundSet) -> Self {
        let n = ground.len();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        LabeledMatrix { ground, rows }
    }

    pub fn from_i64(ground: GroundSet, rows: &[&[i64]]) -> Result<Self> {
        LabeledMatrix::new(
            ground,
            rows.iter()
                .map(|r| r.iter().map(|v| Rat::from_integer(Int::from(*v))).collect())
                .collect(),
        )
    }

    pub fn from_rows(rows: Vec<LabeledVector>) -> Result<Self> {
        let ground = match rows.first() {
            Some(r) => r.ground.clone(),
            None => GroundSet::empty(),
        };
        for r in &rows {
            if r.ground != ground {
                return Err(Error::GroundMismatch("rows on different grounds".into()));
            }
        }
        Ok(LabeledMatrix {
            ground,
            rows: rows.into_iter().map(|r| r.entries).collect(),
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ground.len()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> LabeledVector {
        LabeledVector {
            ground: self.ground.clone(),
            entries: self.rows[i].clone(),
        }
    }

    pub fn row_vectors(&self) -> Vec<LabeledVector> {
        (0..self.nrows()).map(|i| self.row(i)).collect()
    }

    pub fn push_row(&mut self, v: LabeledVector) -> Result<()> {
        if v.ground != self.ground {
            return Err(Error::GroundMismatch("push_row".into()));
        }
        self.rows.push(v.entries);
        Ok(())
    }

    /// Vertical stack; both operands must share the ground set.
    pub fn stacked(&self, other: &LabeledMatrix) -> Result<LabeledMatrix> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch("stack".into()));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(LabeledMatrix {
            ground: self.ground.clone(),
            rows,
        })
    }

    /// Keeps only the columns for `keep`, in `self` ground order.
    pub fn restrict_columns<'a, I: IntoIterator<Item = &'a str>>(
        &self,
        keep: I,
    ) -> Result<LabeledMatrix> {
        let sub = self.ground.restricted(keep)?;
        let idx: Vec<usize> = sub
            .labels()
            .iter()
            .map(|l| self.ground.position(l).unwrap())
            .collect();
        let rows = self
            .rows
            .iter()
            .map(|r| idx.iter().map(|&j| r[j].clone()).collect())
            .collect();
        Ok(LabeledMatrix { ground: sub, rows })
    }

    /// Zero-pads every row onto a superset ground.
    pub fn pad_to(&self, sup: &GroundSet) -> Result<LabeledMatrix> {
        let mut rows = Vec::with_capacity(self.nrows());
        for r in &self.rows {
            let mut padded = vec![Rat::zero(); sup.len()];
            for (i, l) in self.ground.labels().iter().enumerate() {
                let j = sup
                    .position(l)
                    .ok_or_else(|| Error::UnknownLabel(l.clone()))?;
                padded[j] = r[i].clone();
            }
            rows.push(padded);
        }
        Ok(LabeledMatrix {
            ground: sup.clone(),
            rows,
        })
    }

    /// Negates the columns for the labels in `on`; an involution.
    pub fn negate_on<'a, I: IntoIterator<Item = &'a str>>(&self, on: I) -> Result<LabeledMatrix> {
        let mut out = self.clone();
        for l in on {
            let j = self
                .ground
                .position(l)
                .ok_or_else(|| Error::UnknownLabel(l.to_string()))?;
            for r in &mut out.rows {
                r[j] = -r[j].clone();
            }
        }
        Ok(out)
    }

    /// Columns permuted to a ground carrying the same labels in another order.
    pub fn reordered(&self, new_ground: &GroundSet) -> Result<LabeledMatrix> {
        if new_ground.len() != self.ground.len()
            || !new_ground.contains_all(self.ground.labels().iter().map(|s| s.as_str()))
        {
            return Err(Error::GroundMismatch("reorder".into()));
        }
        let idx: Vec<usize> = new_ground
            .labels()
            .iter()
            .map(|l| self.ground.position(l).unwrap())
            .collect();
        let rows = self
            .rows
            .iter()
            .map(|r| idx.iter().map(|&j| r[j].clone()).collect())
            .collect();
        Ok(LabeledMatrix {
            ground: new_ground.clone(),
            rows,
        })
    }

    pub fn renamed<F: Fn(&str) -> String>(&self, f: F) -> Result<LabeledMatrix> {
        Ok(LabeledMatrix {
            ground: self.ground.renamed(f)?,
            rows: self.rows.clone(),
        })
    }

    /// `coeffs · self` where `coeffs` is a plain k×m coefficient matrix.
    pub fn left_mul(&self, coeffs: &[Vec<Rat>]) -> LabeledMatrix {
        let rows = coeffs
            .iter()
            .map(|c| {
                assert_eq!(c.len(), self.nrows());
                let mut acc = vec![Rat::zero(); self.ncols()];
                for (ci, row) in c.iter().zip(&self.rows) {
                    if ci.is_zero() {
                        continue;
                    }
                    for (a, b) in acc.iter_mut().zip(row) {
                        *a += ci * b;
                    }
                }
                acc
            })
            .collect();
        LabeledMatrix {
            ground: self.ground.clone(),
            rows,
        }
    }

    /// Gram matrix `self · selfᵀ` as a plain square matrix.
    pub fn gram(&self) -> Vec<Vec<Rat>> {
        let m = self.nrows();
        let mut g = vec![vec![Rat::zero(); m]; m];
        for i in 0..m {
            for j in 0..=i {
                let mut s = Rat::zero();
                for k in 0..self.ncols() {
                    s += &self.rows[i][k] * &self.rows[j][k];
                }
                g[i][j] = s.clone();
                g[j][i] = s;
            }
        }
        g
    }

    pub fn max_abs_numer_bits(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .map(|r| r.numer().bits() as usize)
            .max()
            .unwrap_or(0)
    }
}

// ---------------------------------------------------------------------------
// plain-matrix elimination kernel
// ---------------------------------------------------------------------------

/// Fraction-free (Bareiss) forward elimination on an integer matrix.
/// Returns (echelon rows, pivot column per step, determinant-of-pivots info).
fn bareiss_echelon(mut m: Vec<Vec<Int>>) -> (Vec<Vec<Int>>, Vec<usize>, i32) {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut sign = 1i32;
    let mut prev = Int::one();
    let mut r = 0;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
            m[i][c] = Int::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (m, pivots, sign)
}

/// Scales a rational matrix to an integer one by the global denominator lcm.
fn to_integer_scaled(rows: &[Vec<Rat>]) -> (Vec<Vec<Int>>, Int) {
    let k = denominator_lcm(rows.iter().flatten());
    let scaled = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let v = x * Rat::from_integer(k.clone());
                    debug_assert!(v.denom().is_one());
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    (scaled, k)
}

pub fn rank_rows(rows: &[Vec<Rat>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let (m, _) = to_integer_scaled(rows);
    let (_, pivots, _) = bareiss_echelon(m);
    pivots.len()
}

pub fn rank(m: &LabeledMatrix) -> usize {
    rank_rows(m.rows())
}

/// Exact determinant of a square rational matrix (Bareiss on the scaled copy).
pub fn determinant(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    if n == 0 {
        return Rat::one();
    }
    assert!(rows.iter().all(|r| r.len() == n), "determinant of non-square");
    let (m, k) = to_integer_scaled(rows);
    let (ech, pivots, sign) = bareiss_echelon(m);
    if pivots.len() < n {
        return Rat::zero();
    }
    // last Bareiss pivot is det of the scaled matrix
    let det_scaled = ech[n - 1][pivots[n - 1]].clone();
    let mut d = Rat::new(det_scaled, k.pow(n as u32));
    if sign < 0 {
        d = -d;
    }
    d
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r >= nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let inv = Rat::one() / rows[r][c].clone();
        for j in c..ncols {
            rows[r][j] = &rows[r][j] * &inv;
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    let sub = &f * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(pivots.len());
    pivots
}

/// Canonical basis (RREF rows) of the row space.
pub fn row_space_basis(m: &LabeledMatrix) -> LabeledMatrix {
    let mut rows = m.rows().to_vec();
    rref(&mut rows);
    LabeledMatrix {
        ground: m.ground().clone(),
        rows,
    }
}

/// Basis of `{ y : M yᵀ = 0 }`, i.e. the orthogonal complement of the row space.
pub fn kernel_basis(m: &LabeledMatrix) -> LabeledMatrix {
    let n = m.ncols();
    let mut rows = m.rows().to_vec();
    let pivots = rref(&mut rows);
    let mut basis = Vec::new();
    let piv_set: Vec<usize> = pivots.clone();
    for free in 0..n {
        if piv_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (ri, &pc) in piv_set.iter().enumerate() {
            v[pc] = -rows[ri][free].clone();
        }
        basis.push(v);
    }
    LabeledMatrix {
        ground: m.ground().clone(),
        rows: basis,
    }
}

/// True iff every row of `b` lies in the row space of `a`.
pub fn row_space_contains(a: &LabeledMatrix, b: &LabeledMatrix) -> Result<bool> {
    if a.ground() != b.ground() {
        return Err(Error::GroundMismatch("row_space_contains".into()));
    }
    let mut rows = a.rows().to_vec();
    let pivots = rref(&mut rows);
    'outer: for brow in b.rows() {
        let mut v = brow.clone();
        for (ri, &pc) in pivots.iter().enumerate() {
            if !v[pc].is_zero() {
                let f = v[pc].clone();
                for j in 0..v.len() {
                    let sub = &f * &rows[ri][j];
                    v[j] = &v[j] - &sub;
                }
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            continue 'outer;
        }
        return Ok(false);
    }
    Ok(true)
}

pub fn same_row_space(a: &LabeledMatrix, b: &LabeledMatrix) -> Result<bool> {
    Ok(row_space_contains(a, b)? && row_space_contains(b, a)?)
}

/// Solves `λᵀ B = v` exactly for a matrix with independent rows;
/// `None` when `v` is outside the row space.
pub fn solve_row_combination(b: &LabeledMatrix, v: &LabeledVector) -> Result<Option<Vec<Rat>>> {
    if b.ground() != v.ground() {
        return Err(Error::GroundMismatch("solve_row_combination".into()));
    }
    let m = b.nrows();
    if m == 0 {
        return Ok(if v.is_zero() { Some(vec![]) } else { None });
    }
    // augmented system on columns: reduce [Bᵀ | vᵀ]
    let n = b.ncols();
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let mut row: Vec<Rat> = (0..m).map(|i| b.rows()[i][j].clone()).collect();
            row.push(v.entries()[j].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    let mut lambda = vec![Rat::zero(); m];
    for (ri, &pc) in pivots.iter().enumerate() {
        if pc == m {
            return Ok(None); // inconsistent
        }
        lambda[pc] = aug[ri][m].clone();
    }
    // rows of B independent, so every unknown is pinned by a pivot
    if pivots.len() < m {
        return Err(Error::RankDeficient("dependent rows in solve".into()));
    }
    Ok(Some(lambda))
}

/// A particular solution of `λᵀ B = v` with free coordinates set to zero,
/// or `None` when `v` is outside the row space. `B` may have dependent rows.
pub fn solve_row_combination_any(
    b: &LabeledMatrix,
    v: &LabeledVector,
) -> Result<Option<Vec<Rat>>> {
    if b.ground() != v.ground() {
        return Err(Error::GroundMismatch("solve_row_combination_any".into()));
    }
    let m = b.nrows();
    if m == 0 {
        return Ok(if v.is_zero() { Some(vec![]) } else { None });
    }
    let n = b.ncols();
    let mut aug: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let mut row: Vec<Rat> = (0..m).map(|i| b.rows()[i][j].clone()).collect();
            row.push(v.entries()[j].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    let mut lambda = vec![Rat::zero(); m];
    for (ri, &pc) in pivots.iter().enumerate() {
        if pc == m {
            return Ok(None);
        }
        lambda[pc] = aug[ri][m].clone();
    }
    Ok(Some(lambda))
}

/// Inverse of a square nonsingular labeled matrix, exact.
/// Fraction-free forward elimination on the scaled integer copy, rational
/// back-substitution.
pub fn invert(m: &LabeledMatrix) -> Result<LabeledMatrix> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::GroundMismatch("invert of non-square matrix".into()));
    }
    if n == 0 {
        return Ok(m.clone());
    }
    let (a, k) = to_integer_scaled(m.rows());
    // augment with k·I so the result is directly the inverse of the rational m
    let mut aug: Vec<Vec<Int>> = a
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            let mut ext = vec![Int::zero(); n];
            ext[i] = k.clone();
            row.append(&mut ext);
            row
        })
        .collect();
    // fraction-free forward pass
    let mut prev = Int::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !aug[i][c].is_zero()) else {
            return Err(Error::SingularMatrix);
        };
        aug.swap(p, c);
        for i in c + 1..n {
            for j in c + 1..2 * n {
                let num = &aug[c][c] * &aug[i][j] - &aug[i][c] * &aug[c][j];
                debug_assert!((&num % &prev).is_zero());
                aug[i][j] = num / &prev;
            }
            aug[i][c] = Int::zero();
        }
        prev = aug[c][c].clone();
    }
    // rational back substitution on the upper-triangular system
    let mut inv = vec![vec![Rat::zero(); n]; n];
    for col in 0..n {
        for i in (0..n).rev() {
            let mut s = Rat::from_integer(aug[i][n + col].clone());
            for j in i + 1..n {
                s -= Rat::from_integer(aug[i][j].clone()) * &inv[j][col];
            }
            inv[i][col] = s / Rat::from_integer(aug[i][i].clone());
        }
    }
    LabeledMatrix::new(m.ground().clone(), inv)
}

/// `a · b` for plain square/rectangular coefficient matrices.
pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        assert_eq!(a[i].len(), k);
        for (l, brow) in b.iter().enumerate() {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &brow[j];
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Gram-Schmidt and projection
// ---------------------------------------------------------------------------

/// Exact Gram-Schmidt data for a basis matrix `B = K·B*`.
#[derive(Clone, Debug)]
pub struct GsoData {
    /// pairwise-orthogonal rows spanning the same space as the input
    pub b_star: LabeledMatrix,
    /// unit lower-triangular coefficients, `alpha[i][j]` for j < i
    pub alpha: Vec<Vec<Rat>>,
    /// squared norms ‖b_i*‖²; the diagonal matrix of true norms is carried
    /// implicitly through these squares so no radical is ever materialized
    pub norm_sq: Vec<Rat>,
}

impl GsoData {
    pub fn dim(&self) -> usize {
        self.norm_sq.len()
    }
}

/// Gram-Schmidt orthogonalization of the rows of `b`.
pub fn gram_schmidt(b: &LabeledMatrix) -> Result<GsoData> {
    let m = b.nrows();
    let mut star: Vec<LabeledVector> = Vec::with_capacity(m);
    let mut alpha = vec![vec![Rat::zero(); m]; m];
    let mut norm_sq: Vec<Rat> = Vec::with_capacity(m);
    for i in 0..m {
        let mut v = b.row(i);
        for j in 0..i {
            let a = b.row(i).dot(&star[j])? / norm_sq[j].clone();
            alpha[i][j] = a.clone();
            v = v.sub(&star[j].scale(&a))?;
        }
        let ns = v.norm_sq();
        if ns.is_zero() {
            return Err(Error::RankDeficient(format!(
                "row {i} is dependent on earlier rows"
            )));
        }
        alpha[i][i] = Rat::one();
        norm_sq.push(ns);
        star.push(v);
    }
    Ok(GsoData {
        b_star: LabeledMatrix::from_rows(star).unwrap_or_else(|_| unreachable!()),
        alpha,
        norm_sq,
    })
}

/// Splits `x` into its component in the row space of `v` and the orthogonal rest.
pub fn project(x: &LabeledVector, v: &LabeledMatrix) -> Result<(LabeledVector, LabeledVector)> {
    if x.ground() != v.ground() {
        return Err(Error::GroundMismatch("project".into()));
    }
    if v.nrows() == 0 {
        return Ok((LabeledVector::zero(x.ground().clone()), x.clone()));
    }
    let gso = gram_schmidt(&row_space_basis(v))?;
    let mut on = LabeledVector::zero(x.ground().clone());
    for (i, ns) in gso.norm_sq.iter().enumerate() {
        let s = gso.b_star.row(i);
        let c = x.dot(&s)? / ns.clone();
        on = on.add(&s.scale(&c))?;
    }
    let off = x.sub(&on)?;
    Ok((on, off))
}
