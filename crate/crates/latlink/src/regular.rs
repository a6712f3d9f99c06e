//! Regular (totally unimodular) vector spaces: graph coboundary construction,
//! exhaustive TU verification, priority-sequence standard representative
//! matrices and norm-bounded lifting across a linking space.

use crate::error::{Error, Result};
use crate::gnl::Gnl;
use crate::ground::{GroundSet, LabeledMatrix, LabeledVector};
use crate::rat::Rat;
use num::{One, Signed, Zero};

/// Hard cap for the exhaustive minor enumeration of [`is_totally_unimodular`].
pub const TU_CAP_ROWS: usize = 8;
pub const TU_CAP_COLS: usize = 12;

/// A directed edge of an input graph. The edge id becomes a ground label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphEdge {
    pub id: String,
    pub tail: String,
    pub head: String,
}

impl GraphEdge {
    pub fn new(id: &str, tail: &str, head: &str) -> Self {
        GraphEdge {
            id: id.into(),
            tail: tail.into(),
            head: head.into(),
        }
    }
}

/// A regular vector space carried as a standard representative matrix
/// `(I | K)` up to column permutation, together with the matroid base
/// holding the identity block and the priority sequence that picked it.
#[derive(Clone, Debug)]
pub struct RegularSpace {
    ground: GroundSet,
    std_rep: LabeledMatrix,
    /// base label of row `i` at position `i`; rows are ordered by the ground
    /// position of their base label
    base: Vec<String>,
    priority: Vec<Vec<String>>,
}

impl RegularSpace {
    /// Builds the space spanned by a user-supplied totally unimodular
    /// representative matrix. TU is verified exhaustively (desk scale).
    pub fn from_tu_rep(rep: &LabeledMatrix, priority: Option<Vec<Vec<String>>>) -> Result<Self> {
        if !is_totally_unimodular(rep)? {
            return Err(Error::PreconditionFailed(
                "representative matrix is not totally unimodular".into(),
            ));
        }
        let priority = match priority {
            Some(p) => p,
            None => vec![rep.ground().labels().to_vec()],
        };
        Self::build(rep, priority)
    }

    /// Coboundary space of a directed graph: the row space of its reduced
    /// incidence matrix (one reference node dropped per component).
    pub fn from_graph(edges: &[GraphEdge]) -> Result<Self> {
        let rep = reduced_incidence(edges)?;
        let priority = vec![rep.ground().labels().to_vec()];
        Self::build(&rep, priority)
    }

    /// Pivots an arbitrary full-row-space representative into standard form
    /// with the base picked greedily along `priority`. Every entry of the
    /// result is asserted to be 0, ±1.
    fn build(rep: &LabeledMatrix, priority: Vec<Vec<String>>) -> Result<Self> {
        validate_priority(rep.ground(), &priority)?;
        let rows = crate::ground::row_space_basis(rep);
        let base = greedy_base(&rows, &priority);
        let std_rep = pivot_to_base(&rows, &base)?;
        Ok(RegularSpace {
            ground: rep.ground().clone(),
            std_rep,
            base,
            priority,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn rep(&self) -> &LabeledMatrix {
        &self.std_rep
    }

    pub fn base(&self) -> &[String] {
        &self.base
    }

    pub fn priority(&self) -> &[Vec<String>] {
        &self.priority
    }

    pub fn dim(&self) -> usize {
        self.std_rep.nrows()
    }

    /// The space as a generalized number lattice (pure vector space part).
    pub fn as_gnl(&self) -> Gnl {
        Gnl::from_space(&self.std_rep).expect("std rep is consistent")
    }

    /// Standard representative matrix with respect to a base picked by a new
    /// priority sequence, reached one base exchange at a time. All
    /// intermediate entries stay 0, ±1 (asserted).
    pub fn std_rep_for_priority(&self, priority: Vec<Vec<String>>) -> Result<RegularSpace> {
        validate_priority(&self.ground, &priority)?;
        let target = greedy_base(&self.std_rep, &priority);
        let mut rep = self.std_rep.rows().to_vec();
        let mut base = self.base.clone();
        loop {
            let Some(enter) = target.iter().find(|l| !base.contains(l)) else {
                break;
            };
            let col = self.ground.position(enter).unwrap();
            // pivot on a row whose base element leaves the base
            let r = (0..rep.len())
                .find(|&i| !rep[i][col].is_zero() && !target.contains(&base[i]))
                .expect("matroid exchange guarantees a pivot row");
            let pivot = rep[r][col].clone();
            assert!(
                pivot.clone().abs().is_one(),
                "pivot entry of a standard representative matrix must be ±1"
            );
            for j in 0..rep[r].len() {
                rep[r][j] = &rep[r][j] / &pivot;
            }
            for i in 0..rep.len() {
                if i != r && !rep[i][col].is_zero() {
                    let f = rep[i][col].clone();
                    for j in 0..rep[i].len() {
                        let sub = &f * &rep[r][j];
                        rep[i][j] = &rep[i][j] - &sub;
                    }
                }
            }
            base[r] = enter.clone();
            assert_entries_unit(&rep);
        }
        let m = LabeledMatrix::new(self.ground.clone(), rep)?;
        let std_rep = pivot_to_base(&m, &base)?;
        let base = order_base(&self.ground, &base);
        Ok(RegularSpace {
            ground: self.ground.clone(),
            std_rep,
            base,
            priority,
        })
    }

    /// Standard representative matrix of the orthogonal complement:
    /// `(I | K)` becomes `(-Kᵀ | I)` on the complementary base.
    pub fn orthogonal_complement(&self) -> RegularSpace {
        let co_base: Vec<String> = self
            .ground
            .labels()
            .iter()
            .filter(|l| !self.base.contains(l))
            .cloned()
            .collect();
        let mut rows = Vec::with_capacity(co_base.len());
        for f in &co_base {
            let fj = self.ground.position(f).unwrap();
            let mut row = vec![Rat::zero(); self.ground.len()];
            row[fj] = Rat::one();
            for (i, b) in self.base.iter().enumerate() {
                let bj = self.ground.position(b).unwrap();
                row[bj] = -self.std_rep.entry(i, fj).clone();
            }
            rows.push(row);
        }
        let std_rep = LabeledMatrix::new(self.ground.clone(), rows).unwrap();
        assert_entries_unit(std_rep.rows());
        RegularSpace {
            ground: self.ground.clone(),
            std_rep,
            base: co_base,
            priority: vec![self.ground.labels().to_vec()],
        }
    }

    /// Copy with every label renamed through `f`; regularity is invariant.
    pub fn renamed<F: Fn(&str) -> String>(&self, f: F) -> Result<RegularSpace> {
        Ok(RegularSpace {
            ground: self.ground.renamed(&f)?,
            std_rep: self.std_rep.renamed(&f)?,
            base: self.base.iter().map(|l| f(l)).collect(),
            priority: self
                .priority
                .iter()
                .map(|c| c.iter().map(|l| f(l)).collect())
                .collect(),
        })
    }

    /// Direct sum on disjoint grounds: the block-diagonal standard
    /// representative matrix, which is again totally unimodular.
    pub fn direct_sum(&self, other: &RegularSpace) -> Result<RegularSpace> {
        let ground = self.ground.union_disjoint(&other.ground)?;
        let std_rep = self
            .std_rep
            .pad_to(&ground)?
            .stacked(&other.std_rep.pad_to(&ground)?)?;
        let mut base = self.base.clone();
        base.extend(other.base.iter().cloned());
        Ok(RegularSpace {
            priority: vec![ground.labels().to_vec()],
            ground,
            std_rep,
            base,
        })
    }

    /// Lifts `x_P ∈ V ∘ P` to `x_S` with `(x_S, x_P) ∈ V` by reading the
    /// priority-(P,S) standard representative matrix; the lift satisfies
    /// `‖x_S‖² ≤ |S|·|P|·‖x_P‖²`.
    pub fn lift(&self, x_p: &LabeledVector) -> Result<LabeledVector> {
        let p: Vec<String> = x_p.ground().labels().to_vec();
        if !self.ground.contains_all(p.iter().map(|s| s.as_str())) {
            return Err(Error::GroundMismatch("lift: x_P off the ground".into()));
        }
        let s: Vec<String> = self
            .ground
            .labels()
            .iter()
            .filter(|l| !p.contains(l))
            .cloned()
            .collect();
        let w = self.std_rep_for_priority(vec![p.clone(), s.clone()])?;
        // rows whose base element lies in P; their P-columns hold (I | Q_2P2)
        let mut x_s = LabeledVector::zero(self.ground.restricted(s.iter().map(|v| v.as_str()))?);
        let mut rebuilt = LabeledVector::zero(x_p.ground().clone());
        for (i, b) in w.base.iter().enumerate() {
            if !p.contains(b) {
                continue;
            }
            let coeff = x_p.get(b)?.clone();
            let row = w.std_rep.row(i);
            rebuilt = rebuilt.add(
                &row.restrict(p.iter().map(|v| v.as_str()))?
                    .reordered(x_p.ground())?
                    .scale(&coeff),
            )?;
            x_s = x_s.add(&row.restrict(s.iter().map(|v| v.as_str()))?.scale(&coeff))?;
        }
        if &rebuilt != x_p {
            return Err(Error::NotInRestriction);
        }
        Ok(x_s)
    }
}

fn validate_priority(ground: &GroundSet, priority: &[Vec<String>]) -> Result<()> {
    let mut seen = Vec::new();
    for class in priority {
        for l in class {
            if !ground.contains(l) {
                return Err(Error::UnknownLabel(l.clone()));
            }
            if seen.contains(l) {
                return Err(Error::BadParameter(format!(
                    "priority classes overlap at `{l}`"
                )));
            }
            seen.push(l.clone());
        }
    }
    if seen.len() != ground.len() {
        return Err(Error::BadParameter(
            "priority sequence does not cover the ground set".into(),
        ));
    }
    Ok(())
}

/// Greedy maximal independent column set respecting the priority order;
/// ties inside a class break by ground label order.
fn greedy_base(rep: &LabeledMatrix, priority: &[Vec<String>]) -> Vec<String> {
    let ground = rep.ground();
    let m = rep.nrows();
    let mut picked: Vec<String> = Vec::new();
    // running elimination of picked columns
    let mut reduced: Vec<(usize, Vec<Rat>)> = Vec::new();
    for class in priority {
        let mut ordered: Vec<&String> = class.iter().collect();
        ordered.sort_by_key(|l| ground.position(l).unwrap());
        for l in ordered {
            let c = ground.position(l).unwrap();
            let mut col: Vec<Rat> = (0..m).map(|i| rep.entry(i, c).clone()).collect();
            for (pr, rc) in &reduced {
                if !col[*pr].is_zero() {
                    let f = col[*pr].clone() / rc[*pr].clone();
                    for i in 0..m {
                        let sub = &f * &rc[i];
                        col[i] = &col[i] - &sub;
                    }
                }
            }
            if let Some(pr) = (0..m).find(|&i| !col[i].is_zero()) {
                reduced.push((pr, col));
                picked.push(l.clone());
            }
        }
    }
    order_base(ground, &picked)
}

fn order_base(ground: &GroundSet, base: &[String]) -> Vec<String> {
    let mut b = base.to_vec();
    b.sort_by_key(|l| ground.position(l).unwrap());
    b
}

/// Row-reduces to carry the identity block on `base`, rows in base order.
fn pivot_to_base(rep: &LabeledMatrix, base: &[String]) -> Result<LabeledMatrix> {
    let ground = rep.ground();
    let mut rows = rep.rows().to_vec();
    let base = order_base(ground, base);
    assert_eq!(rows.len(), base.len(), "base size must equal the dimension");
    let mut out: Vec<Vec<Rat>> = Vec::with_capacity(base.len());
    let mut used = vec![false; rows.len()];
    for b in &base {
        let c = ground.position(b).unwrap();
        let r = (0..rows.len())
            .find(|&i| !used[i] && !rows[i][c].is_zero())
            .ok_or_else(|| Error::RankDeficient(format!("no pivot for base label `{b}`")))?;
        used[r] = true;
        let pivot = rows[r][c].clone();
        for j in 0..rows[r].len() {
            rows[r][j] = &rows[r][j] / &pivot;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for j in 0..rows[i].len() {
                    let sub = &f * &pivot_row[j];
                    rows[i][j] = &rows[i][j] - &sub;
                }
            }
        }
        out.push(rows[r].clone());
    }
    let m = LabeledMatrix::new(ground.clone(), out)?;
    assert_entries_unit(m.rows());
    Ok(m)
}

fn assert_entries_unit(rows: &[Vec<Rat>]) {
    for row in rows {
        for e in row {
            assert!(
                e.is_zero() || e.clone().abs().is_one(),
                "standard representative matrix left the 0,±1 range: {e}"
            );
        }
    }
}

/// Reduced incidence matrix of a directed graph: rows are nodes minus one
/// reference node per connected component; +1 at the tail, -1 at the head,
/// 0 on self-loops.
pub fn reduced_incidence(edges: &[GraphEdge]) -> Result<LabeledMatrix> {
    if edges.is_empty() {
        return Err(Error::BadParameter("graph has no edges".into()));
    }
    let ground = GroundSet::new(edges.iter().map(|e| e.id.clone()))?;
    let mut nodes: Vec<String> = Vec::new();
    for e in edges {
        if !nodes.contains(&e.tail) {
            nodes.push(e.tail.clone());
        }
        if !nodes.contains(&e.head) {
            nodes.push(e.head.clone());
        }
    }
    // connected components by union-find over node indices
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn find(p: &mut Vec<usize>, i: usize) -> usize {
        if p[i] != i {
            let r = find(p, p[i]);
            p[i] = r;
        }
        p[i]
    }
    for e in edges {
        let t = nodes.iter().position(|n| n == &e.tail).unwrap();
        let h = nodes.iter().position(|n| n == &e.head).unwrap();
        let (rt, rh) = (find(&mut parent, t), find(&mut parent, h));
        if rt != rh {
            parent[rt] = rh;
        }
    }
    let mut seen_roots = Vec::new();
    let mut rows = Vec::new();
    for (i, node) in nodes.iter().enumerate() {
        let root = find(&mut parent, i);
        if !seen_roots.contains(&root) {
            seen_roots.push(root); // reference node: dropped
            continue;
        }
        let mut row = vec![Rat::zero(); ground.len()];
        for (j, e) in edges.iter().enumerate() {
            if e.tail == e.head {
                continue;
            }
            if &e.tail == node {
                row[j] = Rat::one();
            } else if &e.head == node {
                row[j] = -Rat::one();
            }
        }
        rows.push(row);
    }
    LabeledMatrix::new(ground, rows)
}

/// Exhaustively checks that every square subdeterminant is 0 or ±1.
pub fn is_totally_unimodular(m: &LabeledMatrix) -> Result<bool> {
    is_totally_unimodular_with_cap(m, TU_CAP_ROWS, TU_CAP_COLS)
}

pub fn is_totally_unimodular_with_cap(
    m: &LabeledMatrix,
    max_rows: usize,
    max_cols: usize,
) -> Result<bool> {
    if m.nrows() > max_rows || m.ncols() > max_cols {
        return Err(Error::TooLargeForExhaustiveCheck(format!(
            "{}x{} exceeds the {}x{} cap",
            m.nrows(),
            m.ncols(),
            max_rows,
            max_cols
        )));
    }
    // 1x1 minors: every entry 0, ±1 — also makes the i64 arithmetic safe
    let mut entries = vec![vec![0i64; m.ncols()]; m.nrows()];
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            let e = m.entry(i, j);
            if !e.denom().is_one() {
                return Ok(false);
            }
            let n = e.numer();
            if n.clone().abs() > num::BigInt::from(1) {
                return Ok(false);
            }
            entries[i][j] = if n.is_zero() {
                0
            } else if n.is_negative() {
                -1
            } else {
                1
            };
        }
    }
    let kmax = m.nrows().min(m.ncols());
    for k in 2..=kmax {
        let row_sets = combinations(m.nrows(), k);
        let col_sets = combinations(m.ncols(), k);
        for rs in &row_sets {
            for cs in &col_sets {
                let sub: Vec<Vec<i64>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| entries[i][j]).collect())
                    .collect();
                let d = int_det(sub);
                if d.abs() > 1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Fraction-free integer determinant; inputs are 0,±1 and at most 8x8, so
/// i64 never overflows (Hadamard bound 8^4).
fn int_det(mut m: Vec<Vec<i64>>) -> i64 {
    let n = m.len();
    let mut sign = 1i64;
    let mut prev = 1i64;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for i in c + 1..n {
            for j in c + 1..n {
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) / prev;
            }
            m[i][c] = 0;
        }
        prev = m[c][c];
    }
    sign * m[n - 1][n - 1]
}

/// Restriction `V ∘ keep` of a vector space given by a representative matrix:
/// the row space of the kept columns.
pub fn space_restrict(rep: &LabeledMatrix, keep: &[String]) -> Result<LabeledMatrix> {
    let cols = rep.restrict_columns(keep.iter().map(|s| s.as_str()))?;
    Ok(crate::ground::row_space_basis(&cols))
}

/// Contraction `V × keep`: members vanishing off `keep`, restricted to it.
pub fn space_contract(rep: &LabeledMatrix, keep: &[String]) -> Result<LabeledMatrix> {
    let other: Vec<String> = rep
        .ground()
        .labels()
        .iter()
        .filter(|l| !keep.contains(l))
        .cloned()
        .collect();
    // eliminate on the dropped columns first: rows with zero there survive
    let other_ground = rep.ground().restricted(other.iter().map(|s| s.as_str()))?;
    let keep_ground = rep.ground().restricted(keep.iter().map(|s| s.as_str()))?;
    let reord = rep.reordered(&other_ground.union_disjoint(&keep_ground)?)?;
    let mut rows = reord.rows().to_vec();
    let pivots = crate::ground::rref(&mut rows);
    let cut = pivots.iter().filter(|&&c| c < other.len()).count();
    let surviving: Vec<Vec<Rat>> = rows[cut..]
        .iter()
        .map(|r| r[other.len()..].to_vec())
        .collect();
    LabeledMatrix::new(keep_ground, surviving)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::{ground, same_row_space};
    use crate::rat::rat;

    #[test]
    fn single_edge_space() {
        let v = RegularSpace::from_graph(&[GraphEdge::new("e", "u", "v")]).unwrap();
        assert_eq!(v.dim(), 1);
        assert_eq!(v.rep().rows(), &[vec![rat(1)]]);
    }

    #[test]
    fn triangle_coboundary_and_cycle_space() {
        let edges = [
            GraphEdge::new("e1", "a", "b"),
            GraphEdge::new("e2", "b", "c"),
            GraphEdge::new("e3", "a", "c"),
        ];
        let v = RegularSpace::from_graph(&edges).unwrap();
        assert_eq!(v.dim(), 2);
        let cycle = v.orthogonal_complement();
        assert_eq!(cycle.dim(), 1);
        let expected =
            LabeledMatrix::from_i64(ground(["e1", "e2", "e3"]), &[&[1, 1, -1]]).unwrap();
        assert!(same_row_space(cycle.rep(), &expected).unwrap());
        assert!(is_totally_unimodular(v.rep()).unwrap());
    }

    #[test]
    fn path_graph_std_rep_is_identity() {
        let edges = [
            GraphEdge::new("e1", "a", "b"),
            GraphEdge::new("e2", "b", "c"),
        ];
        let v = RegularSpace::from_graph(&edges).unwrap();
        assert_eq!(v.rep(), &LabeledMatrix::identity(ground(["e1", "e2"])));
        assert_eq!(v.base(), &["e1".to_string(), "e2".to_string()]);
    }

    #[test]
    fn tu_check_examples() {
        assert!(is_totally_unimodular(&LabeledMatrix::identity(ground(["a", "b"]))).unwrap());
        let bad = LabeledMatrix::from_i64(ground(["a", "b"]), &[&[1, 1], &[-1, 1]]).unwrap();
        assert!(!is_totally_unimodular(&bad).unwrap());
        let big = LabeledMatrix::zero_rows(GroundSet::new((0..13).map(|i| format!("e{i}"))).unwrap());
        assert!(matches!(
            is_totally_unimodular(&big),
            Err(Error::TooLargeForExhaustiveCheck(_))
        ));
    }

    #[test]
    fn priority_pivot_keeps_row_space() {
        let edges = [
            GraphEdge::new("s", "a", "b"),
            GraphEdge::new("p", "b", "c"),
            GraphEdge::new("q", "a", "c"),
        ];
        let v = RegularSpace::from_graph(&edges).unwrap();
        let w = v
            .std_rep_for_priority(vec![
                vec!["q".to_string(), "p".to_string()],
                vec!["s".to_string()],
            ])
            .unwrap();
        assert!(same_row_space(v.rep(), w.rep()).unwrap());
        assert_eq!(w.base(), &["p".to_string(), "q".to_string()]);
        // priority equal to the current base keeps everything unchanged
        let same = v
            .std_rep_for_priority(vec![v.base().to_vec(), vec!["q".to_string()]])
            .unwrap();
        assert_eq!(same.rep(), v.rep());
    }

    #[test]
    fn lift_formula_example() {
        let rep = LabeledMatrix::from_i64(
            ground(["s1", "s2", "p1"]),
            &[&[1, 0, 0], &[0, 1, 1]],
        )
        .unwrap();
        let v = RegularSpace::from_tu_rep(&rep, None).unwrap();
        let x_p = LabeledVector::from_i64(ground(["p1"]), &[3]).unwrap();
        let x_s = v.lift(&x_p).unwrap();
        assert_eq!(x_s.entries(), &[rat(0), rat(3)]);
        // ‖x_S‖² ≤ |S|·|P|·‖x_P‖²
        assert!(x_s.norm_sq() <= rat(2) * x_p.norm_sq());

        let zero = v.lift(&LabeledVector::zero(ground(["p1"]))).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn lift_rejects_outside_restriction() {
        // parallel edges make V∘{e2,e3} the proper subspace span{(1,1)}
        let edges = [
            GraphEdge::new("e1", "a", "b"),
            GraphEdge::new("e2", "b", "c"),
            GraphEdge::new("e3", "b", "c"),
        ];
        let v = RegularSpace::from_graph(&edges).unwrap();
        let inside = LabeledVector::from_i64(ground(["e2", "e3"]), &[2, 2]).unwrap();
        let x_s = v.lift(&inside).unwrap();
        assert_eq!(x_s.ground().labels(), &["e1".to_string()]);
        let paired = crate::ground::disjoint_concat(&x_s, &inside)
            .unwrap()
            .reordered(v.ground())
            .unwrap();
        assert!(v.as_gnl().member(&paired).unwrap());
        let outside = LabeledVector::from_i64(ground(["e2", "e3"]), &[1, -1]).unwrap();
        assert!(matches!(v.lift(&outside), Err(Error::NotInRestriction)));
    }

    #[test]
    fn space_minor_helpers() {
        let rep = LabeledMatrix::from_i64(
            ground(["a", "b", "c"]),
            &[&[1, 0, 1], &[0, 1, 1]],
        )
        .unwrap();
        let r = space_restrict(&rep, &["a".to_string(), "b".to_string()]).unwrap();
        assert_eq!(r.nrows(), 2);
        let c = space_contract(&rep, &["a".to_string(), "b".to_string()]).unwrap();
        // members with zero c-entry: a+b with a = -b on column c: span{(1,-1)}
        let expected = LabeledMatrix::from_i64(ground(["a", "b"]), &[&[1, -1]]).unwrap();
        assert!(same_row_space(&c, &expected).unwrap());
    }
}
