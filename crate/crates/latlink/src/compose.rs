//! Matched and skewed composition of generalized number lattices, the
//! implicit-inversion machinery, and invertibly linked lattice bases.

use crate::error::{Error, Result};
use crate::gnl::Gnl;
use crate::ground::{
    disjoint_concat, project, rank, row_space_contains, solve_row_combination_any,
    LabeledMatrix, LabeledVector,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompositionKind {
    /// `K_SP ↔ K_PQ`: pairs admitting a common middle part.
    Matched,
    /// `K_SP ⇌ K_PQ`: the middle part negated in the second operand.
    Skewed,
}

/// Labels shared by both grounds, in first-operand order.
pub fn shared_labels(k1: &Gnl, k2: &Gnl) -> Vec<String> {
    k1.ground().intersection(k2.ground())
}

/// Matched or skewed composition over the shared labels.
pub fn compose(k1: &Gnl, k2: &Gnl, kind: CompositionKind) -> Result<Gnl> {
    let p = shared_labels(k1, k2);
    compose_over(k1, k2, kind, &p)
}

/// Composition with an explicit middle set `p`, which must be exactly the
/// set of shared labels (anything shared but not in `p` would end up on both
/// sides of the result).
pub fn compose_over(k1: &Gnl, k2: &Gnl, kind: CompositionKind, p: &[String]) -> Result<Gnl> {
    let shared = shared_labels(k1, k2);
    for l in &shared {
        if !p.contains(l) {
            return Err(Error::DisjointnessViolation(l.clone()));
        }
    }
    for l in p {
        if !shared.contains(l) {
            return Err(Error::UnknownLabel(l.clone()));
        }
    }
    let second = match kind {
        CompositionKind::Matched => k2.negate_on(p.iter().map(|s| s.as_str()))?,
        CompositionKind::Skewed => k2.clone(),
    };
    let total = k1.sum(&second)?;
    let keep: Vec<String> = total
        .ground()
        .labels()
        .iter()
        .filter(|l| !p.contains(l))
        .cloned()
        .collect();
    total.contract(keep.iter().map(|s| s.as_str()))
}

/// The other algebraic route: intersect, then restrict. Kept as an
/// independent checking path for the sum-then-contract implementation.
pub fn compose_via_intersection(k1: &Gnl, k2: &Gnl, kind: CompositionKind) -> Result<Gnl> {
    let p = shared_labels(k1, k2);
    let second = match kind {
        CompositionKind::Matched => k2.clone(),
        CompositionKind::Skewed => k2.negate_on(p.iter().map(|s| s.as_str()))?,
    };
    let total = k1.intersect(&second)?;
    let keep: Vec<String> = total
        .ground()
        .labels()
        .iter()
        .filter(|l| !p.contains(l))
        .cloned()
        .collect();
    total.restrict(keep.iter().map(|s| s.as_str()))
}

/// Feasibility and uniqueness report for `K_SP ↔ K_PQ = K_SQ`.
#[derive(Clone, Debug)]
pub struct IitReport {
    /// `K_SP ∘ S ⊇ K_SQ ∘ S`
    pub restriction_holds: bool,
    /// `K_SP × S ⊆ K_SQ × S`
    pub contraction_holds: bool,
    /// `K̂_PQ = K_SP ↔ K_SQ` when both containments hold
    pub solution: Option<Gnl>,
    /// `K_SP ∘ P ⊇ K̂_PQ ∘ P` — part of the uniqueness side condition
    pub uniqueness_restriction_holds: Option<bool>,
    /// `K_SP × P ⊆ K̂_PQ × P` — part of the uniqueness side condition
    pub uniqueness_contraction_holds: Option<bool>,
}

impl IitReport {
    pub fn feasible(&self) -> bool {
        self.restriction_holds && self.contraction_holds
    }

    pub fn solution_unique(&self) -> bool {
        self.uniqueness_restriction_holds == Some(true)
            && self.uniqueness_contraction_holds == Some(true)
    }
}

/// Solves `K_SP ↔ K_PQ = K_SQ` for the middle operand. Infeasibility is
/// reported, not raised.
pub fn iit_solve(k_sp: &Gnl, k_sq: &Gnl) -> Result<IitReport> {
    let s = shared_labels(k_sp, k_sq);
    let s_ref: Vec<&str> = s.iter().map(|x| x.as_str()).collect();
    let restriction_holds = k_sq
        .restrict(s_ref.iter().copied())?
        .is_subset(&k_sp.restrict(s_ref.iter().copied())?)?;
    let contraction_holds = k_sp
        .contract(s_ref.iter().copied())?
        .is_subset(&k_sq.contract(s_ref.iter().copied())?)?;
    if !(restriction_holds && contraction_holds) {
        return Ok(IitReport {
            restriction_holds,
            contraction_holds,
            solution: None,
            uniqueness_restriction_holds: None,
            uniqueness_contraction_holds: None,
        });
    }
    let solution = compose_over(k_sp, k_sq, CompositionKind::Matched, &s)?;
    let p: Vec<String> = k_sp
        .ground()
        .labels()
        .iter()
        .filter(|l| !s.contains(l))
        .cloned()
        .collect();
    let p_ref: Vec<&str> = p.iter().map(|x| x.as_str()).collect();
    let ur = solution
        .restrict(p_ref.iter().copied())?
        .is_subset(&k_sp.restrict(p_ref.iter().copied())?)?;
    let uc = k_sp
        .contract(p_ref.iter().copied())?
        .is_subset(&solution.contract(p_ref.iter().copied())?)?;
    Ok(IitReport {
        restriction_holds,
        contraction_holds,
        solution: Some(solution),
        uniqueness_restriction_holds: Some(ur),
        uniqueness_contraction_holds: Some(uc),
    })
}

/// Row-paired bases of two invertibly linked number lattices: row `i` of
/// `b_s` is the unique member of `L_S` pairing with row `i` of `b_p` inside
/// `V_SP`.
#[derive(Clone, Debug)]
pub struct LinkedBasisPair {
    pub b_s: LabeledMatrix,
    pub b_p: LabeledMatrix,
    /// the space part `V_S = V_SP ↔ V_P` of the linked lattice
    pub v_s: Gnl,
    /// the full linked lattice `K_S = V_SP ↔ K_P`
    pub k_s: Gnl,
}

/// Builds paired bases for `L_S` from a basis of `L_P`, lifting each row
/// through the linking space and canonicalizing the lift by projection onto
/// `(V_SP × S)^⊥` (which keeps the pairing intact).
///
/// Preconditions checked: `V_SP × P ⊆ V_P` and `V_SP ∘ P ⊇ K_P`.
pub fn invertibly_linked_basis(v_sp: &Gnl, k_p: &Gnl) -> Result<LinkedBasisPair> {
    if !v_sp.is_vector_space() {
        return Err(Error::PreconditionFailed(
            "linking object V_SP is not a vector space".into(),
        ));
    }
    let p: Vec<String> = k_p.ground().labels().to_vec();
    if !v_sp.ground().contains_all(p.iter().map(|s| s.as_str())) {
        return Err(Error::GroundMismatch(
            "K_P ground is not part of V_SP ground".into(),
        ));
    }
    let s: Vec<String> = v_sp
        .ground()
        .labels()
        .iter()
        .filter(|l| !p.contains(l))
        .cloned()
        .collect();
    let v_cross_p = v_sp.contract(p.iter().map(|x| x.as_str()))?;
    if !row_space_contains(k_p.space_basis(), v_cross_p.space_basis())? {
        return Err(Error::PreconditionFailed("V_SP × P ⊆ V_P fails".into()));
    }
    let v_restrict_p = v_sp.restrict(p.iter().map(|x| x.as_str()))?;
    if !k_p.is_subset(&v_restrict_p)? {
        return Err(Error::PreconditionFailed("V_SP ∘ P ⊇ K_P fails".into()));
    }

    let v_p = Gnl::from_space(k_p.space_basis())?;
    let v_s = compose(v_sp, &v_p, CompositionKind::Matched)?;
    let k_s = compose(v_sp, k_p, CompositionKind::Matched)?;
    let v_cross_s = v_sp.contract(s.iter().map(|x| x.as_str()))?;

    let q = v_sp.space_basis();
    let q_p = q.restrict_columns(p.iter().map(|x| x.as_str()))?;
    let q_s = q.restrict_columns(s.iter().map(|x| x.as_str()))?;
    let s_ground = q_s.ground().clone();

    let mut b_s = LabeledMatrix::zero_rows(s_ground);
    for i in 0..k_p.lattice_basis().nrows() {
        let x_p = k_p
            .lattice_basis()
            .row(i)
            .reordered(q_p.ground())?;
        let sigma = solve_row_combination_any(&q_p, &x_p)?
            .ok_or_else(|| Error::PreconditionFailed("lattice row not in V_SP ∘ P".into()))?;
        let lift = q_s.left_mul(&[sigma]).row(0);
        let (_, x_s) = project(&lift, v_cross_s.space_basis())?;
        b_s.push_row(x_s)?;
    }
    if rank(&b_s) != b_s.nrows() {
        return Err(Error::RankDeficient("linked rows came out dependent".into()));
    }
    // pairing invariant: (x_S, x_P) ∈ V_SP for every row
    for i in 0..b_s.nrows() {
        let pair = disjoint_concat(&b_s.row(i), &k_p.lattice_basis().row(i))?
            .reordered(v_sp.ground())?;
        if !v_sp.member(&pair)? {
            return Err(Error::PreconditionFailed(
                "constructed pair fell outside V_SP".into(),
            ));
        }
    }
    Ok(LinkedBasisPair {
        b_s,
        b_p: k_p.lattice_basis().clone(),
        v_s,
        k_s,
    })
}

/// The unique member of `L'_S` (rows of `basis`) pairing with `x` inside the
/// vector space `v_sp`; `None` when no basis combination pairs with `x`.
pub fn paired_vector(
    v_sp: &Gnl,
    basis: &LabeledMatrix,
    x: &LabeledVector,
) -> Result<Option<LabeledVector>> {
    // solve for a combination y of `basis` with (y, x) ∈ V_SP
    let p_labels: Vec<&str> = x.ground().labels().iter().map(|s| s.as_str()).collect();
    let q = v_sp.space_basis();
    let q_p = q.restrict_columns(p_labels.iter().copied())?;
    let sigma = match solve_row_combination_any(&q_p, &x.reordered(q_p.ground())?)? {
        Some(s) => s,
        None => return Ok(None),
    };
    let s_labels: Vec<&str> = v_sp
        .ground()
        .labels()
        .iter()
        .filter(|l| !p_labels.contains(&l.as_str()))
        .map(|s| s.as_str())
        .collect();
    let q_s = q.restrict_columns(s_labels.iter().copied())?;
    let candidate = q_s.left_mul(&[sigma]).row(0);
    // adjust by V_SP × S to land in the row space of `basis`
    let v_cross_s = v_sp.contract(s_labels.iter().copied())?;
    let stack = basis.stacked(v_cross_s.space_basis())?;
    let coeffs = match solve_row_combination_any(&stack, &candidate.reordered(stack.ground())?)? {
        Some(c) => c,
        None => return Ok(None),
    };
    let y = basis.left_mul(&[coeffs[..basis.nrows()].to_vec()]).row(0);
    Ok(Some(y))
}
