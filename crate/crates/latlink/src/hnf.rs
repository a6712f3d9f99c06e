//! Hermite normal form over the integers and rationals, basis extraction,
//! visibility forms, separator detection and integral-solution constructions.

use crate::error::{Error, Result};
use crate::ground::{kernel_basis, rank, GroundSet, LabeledMatrix, LabeledVector};
use crate::rat::{denominator_lcm, Int, Rat};
use num::{Integer, One, Signed, Zero};

/// Row HNF of a matrix together with its unimodular witness `H = U·A`.
#[derive(Clone, Debug)]
pub struct HnfResult {
    pub h: LabeledMatrix,
    /// unimodular row-operation witness; columns are indexed by input rows
    pub u: Vec<Vec<Int>>,
    pub pivot_columns: Vec<usize>,
}

impl HnfResult {
    pub fn rank(&self) -> usize {
        self.pivot_columns.len()
    }

    /// Nonzero rows of the HNF: the canonical basis of the row lattice.
    pub fn basis(&self) -> LabeledMatrix {
        LabeledMatrix::new(
            self.h.ground().clone(),
            self.h.rows()[..self.rank()].to_vec(),
        )
        .unwrap()
    }
}

/// Lexicographically earliest column basis: scanning left to right, keep each
/// column that is independent of the ones already kept.
pub fn lex_column_basis(a: &LabeledMatrix) -> Vec<usize> {
    let n = a.ncols();
    let m = a.nrows();
    let mut picked: Vec<usize> = Vec::new();
    // reduced copies of the picked columns, with their pivot row
    let mut reduced: Vec<(usize, Vec<Rat>)> = Vec::new();
    for c in 0..n {
        let mut col: Vec<Rat> = (0..m).map(|i| a.entry(i, c).clone()).collect();
        for (pivot_row, rc) in &reduced {
            if !col[*pivot_row].is_zero() {
                let f = col[*pivot_row].clone() / rc[*pivot_row].clone();
                for i in 0..m {
                    let sub = &f * &rc[i];
                    col[i] = &col[i] - &sub;
                }
            }
        }
        if let Some(pr) = (0..m).find(|&i| !col[i].is_zero()) {
            reduced.push((pr, col));
            picked.push(c);
        }
    }
    picked
}

fn hnf_integer(mut a: Vec<Vec<Int>>) -> (Vec<Vec<Int>>, Vec<Vec<Int>>, Vec<usize>) {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut u: Vec<Vec<Int>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { Int::one() } else { Int::zero() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r >= m {
            break;
        }
        if (r..m).all(|i| a[i][c].is_zero()) {
            continue;
        }
        // bring the gcd of the column tail to row r, top to bottom
        for i in r + 1..m {
            if a[i][c].is_zero() {
                continue;
            }
            if a[r][c].is_zero() {
                a.swap(r, i);
                u.swap(r, i);
                continue;
            }
            let x = a[r][c].clone();
            let y = a[i][c].clone();
            let eg = x.extended_gcd(&y);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let p = &x / &g;
            let q = &y / &g;
            // unimodular 2x2: [s t; -q p], det = s·p + t·q = 1
            for j in 0..n {
                let nr = &s * &a[r][j] + &t * &a[i][j];
                let ni = &p * &a[i][j] - &q * &a[r][j];
                a[r][j] = nr;
                a[i][j] = ni;
            }
            for j in 0..m {
                let nr = &s * &u[r][j] + &t * &u[i][j];
                let ni = &p * &u[i][j] - &q * &u[r][j];
                u[r][j] = nr;
                u[i][j] = ni;
            }
        }
        if a[r][c].is_negative() {
            for j in 0..n {
                a[r][j] = -a[r][j].clone();
            }
            for j in 0..m {
                u[r][j] = -u[r][j].clone();
            }
        }
        // entries above the pivot reduced into [0, pivot)
        let d = a[r][c].clone();
        for k in 0..r {
            if a[k][c].is_zero() {
                continue;
            }
            let q = a[k][c].div_floor(&d);
            if q.is_zero() {
                continue;
            }
            for j in 0..n {
                let sub = &q * &a[r][j];
                a[k][j] = &a[k][j] - &sub;
            }
            for j in 0..m {
                let sub = &q * &u[r][j];
                u[k][j] = &u[k][j] - &sub;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, u, pivots)
}

/// Row HNF. Rational input is scaled by the lcm `k` of its denominators,
/// reduced over the integers and divided back by `k`.
pub fn hnf(a: &LabeledMatrix) -> HnfResult {
    let k = denominator_lcm(a.rows().iter().flatten());
    let scaled: Vec<Vec<Int>> = a
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| (x * Rat::from_integer(k.clone())).to_integer())
                .collect()
        })
        .collect();
    let (h_int, u, pivots) = hnf_integer(scaled);
    let kq = Rat::from_integer(k);
    let rows = h_int
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| Rat::from_integer(x) / kq.clone())
                .collect()
        })
        .collect();
    HnfResult {
        h: LabeledMatrix::new(a.ground().clone(), rows).unwrap(),
        u,
        pivot_columns: pivots,
    }
}

/// Basis of the number lattice generated by the rows of `g`
/// (the nonzero rows of its HNF).
pub fn basis_from_generators(g: &LabeledMatrix) -> LabeledMatrix {
    hnf(g).basis()
}

/// True iff two generating matrices on the same ground generate the same lattice.
pub fn same_lattice(a: &LabeledMatrix, b: &LabeledMatrix) -> Result<bool> {
    if a.ground() != b.ground() {
        return Err(Error::GroundMismatch("same_lattice".into()));
    }
    Ok(basis_from_generators(a) == basis_from_generators(b))
}

/// Block form of a basis matrix making `L×S` and `L∘P` visible.
#[derive(Clone, Debug)]
pub struct VisibilityForm {
    /// basis of the contraction L×S, on the S labels
    pub cross_basis: LabeledMatrix,
    /// basis of the restriction L∘P, on the P labels
    pub restrict_basis: LabeledMatrix,
    /// the S-part of the mixed (bottom) block
    pub mixed_s: LabeledMatrix,
    /// whole transformed basis on the original ground, rows ordered
    /// cross block first, then mixed block
    pub full: LabeledMatrix,
}

/// Integral invertible row operations bringing a basis matrix of `L_{S⊎P}`
/// into the block form `[[C1S, 0], [C2S, C2P]]`.
pub fn visibility_form(b: &LabeledMatrix, s_labels: &[String]) -> Result<VisibilityForm> {
    for l in s_labels {
        if !b.ground().contains(l) {
            return Err(Error::UnknownLabel(l.clone()));
        }
    }
    let p_labels = b
        .ground()
        .difference(s_labels.iter().map(|s| s.as_str()));
    // HNF with the P columns first: rows with P pivots come out on top,
    // rows vanishing on P at the bottom
    let p_ground = b.ground().restricted(p_labels.iter().map(|s| s.as_str()))?;
    let s_ground = b.ground().restricted(s_labels.iter().map(|s| s.as_str()))?;
    let ps_ground = p_ground.union_disjoint(&s_ground)?;
    let reordered = b.reordered(&ps_ground)?;
    let res = hnf(&reordered);
    let np = p_ground.len();
    let top = res
        .pivot_columns
        .iter()
        .filter(|&&c| c < np)
        .count();
    let rank = res.rank();
    let h = res.h;
    let top_rows = LabeledMatrix::new(ps_ground.clone(), h.rows()[..top].to_vec())?;
    let bottom_rows = LabeledMatrix::new(ps_ground.clone(), h.rows()[top..rank].to_vec())?;
    let restrict_basis = top_rows.restrict_columns(p_labels.iter().map(|s| s.as_str()))?;
    let cross_basis = bottom_rows.restrict_columns(s_labels.iter().map(|s| s.as_str()))?;
    let mixed_s = top_rows.restrict_columns(s_labels.iter().map(|s| s.as_str()))?;
    let full = bottom_rows
        .stacked(&top_rows)?
        .reordered(b.ground())?;
    Ok(VisibilityForm {
        cross_basis,
        restrict_basis,
        mixed_s,
        full,
    })
}

/// A partition of the ground set into elementary separators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorPartition {
    pub blocks: Vec<Vec<String>>,
}

/// Elementary separators of the row lattice of `b`: connected components of
/// the support graph of its HNF.
pub fn separators(b: &LabeledMatrix) -> SeparatorPartition {
    let h = hnf(b);
    let n = b.ncols();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for row in &h.h.rows()[..h.rank()] {
        let support: Vec<usize> = (0..n).filter(|&j| !row[j].is_zero()).collect();
        for w in support.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut blocks: Vec<Vec<String>> = Vec::new();
    let mut root_block: Vec<Option<usize>> = vec![None; n];
    for j in 0..n {
        let r = find(&mut parent, j);
        match root_block[r] {
            Some(bi) => blocks[bi].push(b.ground().label(j).to_string()),
            None => {
                root_block[r] = Some(blocks.len());
                blocks.push(vec![b.ground().label(j).to_string()]);
            }
        }
    }
    SeparatorPartition { blocks }
}

/// Basis of `{ x integral : xᵀ M = 0 }` where the components of `x` are
/// indexed by the rows of `M`. Rows of the unimodular HNF witness that map to
/// zero rows form the basis.
fn integral_left_kernel(rows: &[Vec<Rat>], ground: &GroundSet) -> Vec<Vec<Int>> {
    let m = rows.len();
    if m == 0 {
        return Vec::new();
    }
    let mat = LabeledMatrix::new(ground.clone(), rows.to_vec()).unwrap();
    let res = hnf(&mat);
    res.u[res.rank()..m].to_vec()
}

/// The three integral-solution constructions.
pub enum IntegralMode<'a> {
    /// Basis of the integral solutions `x` of `xᵀ[A; B] = 0`; `A` must have
    /// full row rank and its rows must generate the rows of `B`. The result
    /// is indexed by the rows of the stack, labeled `r0, r1, …`.
    OrthogonalTo {
        a: &'a LabeledMatrix,
        b: &'a LabeledMatrix,
    },
    /// Basis of all integral vectors contained in the row space of `space_rep`.
    VectorsInSpace { space_rep: &'a LabeledMatrix },
    /// Basis of the intersection of the row lattice of `lattice_basis` with
    /// the row space of `space_rep`.
    LatticeIntersectSpace {
        lattice_basis: &'a LabeledMatrix,
        space_rep: &'a LabeledMatrix,
    },
}

pub fn integral_solutions(mode: IntegralMode) -> Result<LabeledMatrix> {
    match mode {
        IntegralMode::OrthogonalTo { a, b } => {
            if a.ground() != b.ground() {
                return Err(Error::GroundMismatch("integral_solutions".into()));
            }
            if rank(a) != a.nrows() {
                return Err(Error::RankDeficient("A does not have full row rank".into()));
            }
            let stack = a.stacked(b)?;
            if rank(&stack) != a.nrows() {
                return Err(Error::RankDeficient(
                    "rows of A do not generate the rows of B".into(),
                ));
            }
            let sol = integral_left_kernel(stack.rows(), stack.ground());
            let row_ground = GroundSet::new((0..stack.nrows()).map(|i| format!("r{i}")))?;
            LabeledMatrix::new(
                row_ground,
                sol.into_iter()
                    .map(|r| r.into_iter().map(Rat::from_integer).collect())
                    .collect(),
            )
        }
        IntegralMode::VectorsInSpace { space_rep } => {
            // x ∈ V  ⇔  x ⟂ every row of a representative matrix of V^⊥
            let q = kernel_basis(space_rep);
            let n = space_rep.ncols();
            let stack: Vec<Vec<Rat>> = (0..n)
                .map(|i| (0..q.nrows()).map(|r| q.entry(r, i).clone()).collect())
                .collect();
            let col_ground = GroundSet::new((0..q.nrows()).map(|i| format!("q{i}")))?;
            let sol = integral_left_kernel(&stack, &col_ground);
            LabeledMatrix::new(
                space_rep.ground().clone(),
                sol.into_iter()
                    .map(|r| r.into_iter().map(Rat::from_integer).collect())
                    .collect(),
            )
        }
        IntegralMode::LatticeIntersectSpace {
            lattice_basis,
            space_rep,
        } => {
            if lattice_basis.ground() != space_rep.ground() {
                return Err(Error::GroundMismatch("integral_solutions".into()));
            }
            if rank(lattice_basis) != lattice_basis.nrows() {
                return Err(Error::RankDeficient("lattice basis has dependent rows".into()));
            }
            let q = kernel_basis(space_rep);
            // λᵀ (C Qᵀ) = 0 with λ integral, answer λᵀ C
            let m = lattice_basis.nrows();
            let stack: Vec<Vec<Rat>> = (0..m)
                .map(|i| {
                    (0..q.nrows())
                        .map(|r| {
                            lattice_basis
                                .row(i)
                                .dot(&q.row(r))
                                .expect("same ground")
                        })
                        .collect()
                })
                .collect();
            let col_ground = GroundSet::new((0..q.nrows()).map(|i| format!("q{i}")))?;
            let coeffs = integral_left_kernel(&stack, &col_ground);
            let coeffs_rat: Vec<Vec<Rat>> = coeffs
                .into_iter()
                .map(|r| r.into_iter().map(Rat::from_integer).collect())
                .collect();
            Ok(basis_from_generators(&lattice_basis.left_mul(&coeffs_rat)))
        }
    }
}

/// Integral coordinates of `v` in the row lattice of the basis `b`,
/// or `None` when `v` is not a lattice member.
pub fn solve_integral_combination(
    b: &LabeledMatrix,
    v: &LabeledVector,
) -> Result<Option<Vec<Int>>> {
    match crate::ground::solve_row_combination(b, v)? {
        None => Ok(None),
        Some(lambda) => {
            if lambda.iter().all(|x| x.denom().is_one()) {
                Ok(Some(lambda.into_iter().map(|x| x.to_integer()).collect()))
            } else {
                Ok(None)
            }
        }
    }
}

/// Exact determinant check `|det U| = 1` for an integer witness.
pub fn is_unimodular(u: &[Vec<Int>]) -> bool {
    let n = u.len();
    if u.iter().any(|r| r.len() != n) {
        return false;
    }
    let rows: Vec<Vec<Rat>> = u
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let d = crate::ground::determinant(&rows);
    d == Rat::one() || d == -Rat::one()
}
