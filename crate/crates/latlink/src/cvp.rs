//! Babai nearest-plane approximation, an exact brute-force CVP oracle, and
//! the three shortest-vector reductions that turn restricted/projected/linked
//! shortest-vector questions into closest-vector computations.

use crate::error::{Error, Result};
use crate::ground::{
    disjoint_concat, gram_schmidt, kernel_basis, project, row_space_contains,
    solve_row_combination, solve_row_combination_any, LabeledMatrix, LabeledVector,
};
use crate::hnf::{hnf, visibility_form};
use crate::rat::{round_half_away, Int, Rat};
use crate::reduce::{default_delta, enumerate_within, is_lll_reduced, lll_reduce};
use crate::regular::{space_contract, space_restrict, RegularSpace};
use num::{One, Zero};

pub const CVP_DIM_CAP: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CvpMode {
    /// certified brute force
    Exact,
    /// Babai nearest plane, approximation factor 2^{m/2}
    NearestPlane,
}

/// A closest-vector answer: the lattice vector, its exact squared distance to
/// the target and, for the approximate mode, the squared factor bound 2^m.
#[derive(Clone, Debug)]
pub struct CvpResult {
    pub vector: LabeledVector,
    pub distance_sq: Rat,
    pub mode: CvpMode,
    pub approx_factor_sq_bound: Option<Rat>,
}

/// Babai nearest plane on an LLL-reduced basis: walk the GSO from the last
/// row down, rounding the residual coordinate at each plane. The target may
/// have a component outside `span(B)`; distances are ambient.
pub fn babai_nearest(b: &LabeledMatrix, x: &LabeledVector, delta: &Rat) -> Result<CvpResult> {
    if x.ground() != b.ground() {
        return Err(Error::GroundMismatch("babai_nearest".into()));
    }
    if !is_lll_reduced(b, delta)? {
        return Err(Error::PreconditionFailed(
            "Babai needs an LLL-reduced basis".into(),
        ));
    }
    let m = b.nrows();
    let gso = gram_schmidt(b)?;
    let mut residual = x.clone();
    let mut coeffs = vec![Int::zero(); m];
    for j in (0..m).rev() {
        let star = gso.b_star.row(j);
        let c = round_half_away(&(residual.dot(&star)? / gso.norm_sq[j].clone()));
        if !c.is_zero() {
            residual = residual.sub(&b.row(j).scale(&Rat::from_integer(c.clone())))?;
        }
        coeffs[j] = c;
    }
    let vector = x.sub(&residual)?;
    Ok(CvpResult {
        distance_sq: residual.norm_sq(),
        vector,
        mode: CvpMode::NearestPlane,
        approx_factor_sq_bound: Some(Rat::from_integer(Int::from(2).pow(m as u32))),
    })
}

/// Exact closest vector by exhaustive enumeration inside the ball certified
/// by a Babai starting point. Equidistant answers break ties toward the
/// lexicographically smallest coefficient vector with respect to `b`.
pub fn cvp_bruteforce(b: &LabeledMatrix, x: &LabeledVector) -> Result<CvpResult> {
    if x.ground() != b.ground() {
        return Err(Error::GroundMismatch("cvp_bruteforce".into()));
    }
    let m = b.nrows();
    if m > CVP_DIM_CAP {
        return Err(Error::TooLargeForExhaustiveCheck(format!(
            "lattice dimension {m} exceeds the CVP oracle cap {CVP_DIM_CAP}"
        )));
    }
    if m == 0 {
        return Ok(CvpResult {
            vector: LabeledVector::zero(b.ground().clone()),
            distance_sq: x.norm_sq(),
            mode: CvpMode::Exact,
            approx_factor_sq_bound: None,
        });
    }
    let reduced = lll_reduce(b, &default_delta())?;
    let start = babai_nearest(&reduced, x, &default_delta())?;
    let gso = gram_schmidt(&reduced)?;
    // split the target into its span component (via GSO coordinates) and the
    // constant off-span distance
    let mut t = Vec::with_capacity(m);
    let mut span_part = LabeledVector::zero(x.ground().clone());
    for i in 0..m {
        let star = gso.b_star.row(i);
        let ti = x.dot(&star)? / gso.norm_sq[i].clone();
        span_part = span_part.add(&star.scale(&ti))?;
        t.push(ti);
    }
    let off_sq = x.sub(&span_part)?.norm_sq();
    let budget = start.distance_sq.clone() - off_sq.clone();
    let mut best: Option<(Rat, Vec<Rat>, LabeledVector)> = None;
    for c in enumerate_within(&gso, &t, &budget) {
        let coeff_rat: Vec<Rat> = c.iter().map(|v| Rat::from_integer(v.clone())).collect();
        let v = reduced.left_mul(&[coeff_rat]).row(0);
        let dist = v.sub(x)?.norm_sq();
        // tie-break on the coefficients with respect to the input basis
        let orig_coeffs = solve_row_combination(b, &v)?
            .expect("candidate lies in the lattice");
        let better = match &best {
            None => true,
            Some((bd, bc, _)) => (&dist, &orig_coeffs) < (bd, bc),
        };
        if better {
            best = Some((dist, orig_coeffs, v));
        }
    }
    let (distance_sq, _, vector) = best.expect("the Babai point itself is in range");
    Ok(CvpResult {
        vector,
        distance_sq,
        mode: CvpMode::Exact,
        approx_factor_sq_bound: None,
    })
}

/// Closest vector in the given mode; the mode is recorded in the result.
pub fn closest(b: &LabeledMatrix, x: &LabeledVector, mode: CvpMode) -> Result<CvpResult> {
    match mode {
        CvpMode::Exact => cvp_bruteforce(b, x),
        CvpMode::NearestPlane => {
            let reduced = lll_reduce(b, &default_delta())?;
            babai_nearest(&reduced, x, &default_delta())
        }
    }
}

/// Integral particular solution of `λᵀ M = v` for a possibly dependent-row
/// matrix, through the HNF staircase.
pub fn solve_integral_any(m: &LabeledMatrix, v: &LabeledVector) -> Result<Option<Vec<Int>>> {
    if m.ground() != v.ground() {
        return Err(Error::GroundMismatch("solve_integral_any".into()));
    }
    let res = hnf(m);
    let mut mu = vec![Rat::zero(); m.nrows()];
    let mut remaining = v.clone();
    for (ri, &c) in res.pivot_columns.iter().enumerate() {
        let pivot = res.h.entry(ri, c);
        let q = remaining.entries()[c].clone() / pivot.clone();
        if !q.denom().is_one() {
            return Ok(None);
        }
        if !q.is_zero() {
            remaining = remaining.sub(&res.h.row(ri).scale(&q))?;
        }
        mu[ri] = q;
    }
    if !remaining.is_zero() {
        return Ok(None);
    }
    // λ = Uᵀ μ
    let mut lambda = vec![Int::zero(); m.nrows()];
    for (ri, q) in mu.iter().enumerate() {
        if q.is_zero() {
            continue;
        }
        let qi = q.to_integer();
        for (j, l) in lambda.iter_mut().enumerate() {
            *l += &qi * &res.u[ri][j];
        }
    }
    Ok(Some(lambda))
}

/// Question 1: shortest member of `L_PQ` whose restriction to `P` is `x_P`.
/// The answer is `(x_P, x_Q − x̂_Q)` where `x̂_Q` is (α-)closest to `x_Q` in
/// `L_PQ × Q`.
pub fn shortest_with_restriction(
    l_pq: &LabeledMatrix,
    x_p: &LabeledVector,
    mode: CvpMode,
) -> Result<LabeledVector> {
    let p: Vec<String> = x_p.ground().labels().to_vec();
    if !l_pq.ground().contains_all(p.iter().map(|s| s.as_str())) {
        return Err(Error::GroundMismatch("restriction labels off ground".into()));
    }
    let q: Vec<String> = l_pq
        .ground()
        .labels()
        .iter()
        .filter(|l| !p.contains(l))
        .cloned()
        .collect();
    let restricted = l_pq.restrict_columns(p.iter().map(|s| s.as_str()))?;
    let lambda = solve_integral_any(&restricted, &x_p.reordered(restricted.ground())?)?
        .ok_or(Error::NoPreimage)?;
    let lambda_rat: Vec<Rat> = lambda.into_iter().map(Rat::from_integer).collect();
    let particular = l_pq.left_mul(&[lambda_rat]).row(0);
    // closest vector to the particular Q-part inside L×Q
    let cross_q = visibility_form(l_pq, &q)?.cross_basis;
    let x_q = particular.restrict(q.iter().map(|s| s.as_str()))?;
    if cross_q.nrows() == 0 {
        return Ok(particular);
    }
    let hat = closest(&cross_q, &x_q.reordered(cross_q.ground())?, mode)?;
    let correction = hat.vector.pad_to(l_pq.ground())?;
    particular.sub(&correction)
}

fn primed(l: &str) -> String {
    format!("{l}'")
}

fn double_primed(l: &str) -> String {
    format!("{l}''")
}

/// Question 2: shortest member of `L_P` whose projection onto the row space
/// of `v_p` is `x_proj`. Doubles the ground into resolved copies
/// `(x' on P', x'' on P'')` and solves Question 1 there.
pub fn shortest_preimage_projection(
    l_p: &LabeledMatrix,
    v_p: &LabeledMatrix,
    x_proj: &LabeledVector,
    mode: CvpMode,
) -> Result<LabeledVector> {
    if l_p.ground() != v_p.ground() || l_p.ground() != x_proj.ground() {
        return Err(Error::GroundMismatch("shortest_preimage_projection".into()));
    }
    // x_proj must lie in the projection of the span; quick sanity via its own
    // projection (its P''-part must be zero)
    let (on, off) = project(x_proj, v_p)?;
    if !off.is_zero() {
        return Err(Error::NotInProjectionLattice);
    }
    let ground_p1 = l_p.ground().renamed(primed)?;
    let ground_p2 = l_p.ground().renamed(double_primed)?;
    let doubled_ground = ground_p1.union_disjoint(&ground_p2)?;
    let mut doubled = LabeledMatrix::zero_rows(doubled_ground.clone());
    for i in 0..l_p.nrows() {
        let (ri_on, ri_off) = project(&l_p.row(i), v_p)?;
        let row = disjoint_concat(&ri_on.renamed(primed)?, &ri_off.renamed(double_primed)?)?;
        doubled.push_row(row.reordered(&doubled_ground)?)?;
    }
    let target = on.renamed(primed)?;
    let answer = match shortest_with_restriction(&doubled, &target, mode) {
        Ok(a) => a,
        Err(Error::NoPreimage) => return Err(Error::NotInProjectionLattice),
        Err(e) => return Err(e),
    };
    // fold the two copies back together
    let mut out = LabeledVector::zero(l_p.ground().clone());
    for l in l_p.ground().labels() {
        let a = answer.get(&primed(l))?.clone() + answer.get(&double_primed(l))?.clone();
        let idx = LabeledVector::new(
            l_p.ground().clone(),
            l_p.ground()
                .labels()
                .iter()
                .map(|m| if m == l { Rat::one() } else { Rat::zero() })
                .collect(),
        )?;
        out = out.add(&idx.scale(&a))?;
    }
    Ok(out)
}

/// Question 3: given `x_S` in the lattice part of `V_SP ↔ L_P`, the shortest
/// `x_P ∈ L_P` with `(x_S, x_P) ∈ V_SP`. Finds the unique projected partner
/// `x'_P` and reduces to Question 2.
pub fn shortest_linked(
    v_sp: &RegularSpace,
    l_p: &LabeledMatrix,
    x_s: &LabeledVector,
    mode: CvpMode,
) -> Result<LabeledVector> {
    let p: Vec<String> = l_p.ground().labels().to_vec();
    if !v_sp.ground().contains_all(p.iter().map(|s| s.as_str())) {
        return Err(Error::GroundMismatch("L_P ground off V_SP".into()));
    }
    let s: Vec<String> = v_sp
        .ground()
        .labels()
        .iter()
        .filter(|l| !p.contains(l))
        .cloned()
        .collect();
    if x_s.ground().labels() != s.as_slice() {
        return Err(Error::GroundMismatch("x_S must live on S".into()));
    }
    let v_cross_p = space_contract(v_sp.rep(), &p)?;
    if !row_space_contains(l_p, &v_cross_p.reordered(l_p.ground())?)? {
        return Err(Error::PreconditionFailed(
            "span(L_P) ⊇ V_SP × P fails".into(),
        ));
    }
    let v_on_p = space_restrict(v_sp.rep(), &p)?;
    if !row_space_contains(&v_on_p, &l_p.reordered(v_on_p.ground())?)? {
        return Err(Error::PreconditionFailed("L_P ⊆ V_SP ∘ P fails".into()));
    }
    // K_S = V_SP ↔ L_P with lattice part L_S; membership of x_S in L_S
    let k_p = crate::gnl::Gnl::canonicalize(l_p, &v_cross_p.reordered(l_p.ground())?)?;
    let k_s = crate::compose::compose(
        &v_sp.as_gnl(),
        &k_p,
        crate::compose::CompositionKind::Matched,
    )?;
    let x_s_ordered = x_s.reordered(k_s.lattice_basis().ground())?;
    if crate::hnf::solve_integral_combination(k_s.lattice_basis(), &x_s_ordered)?.is_none() {
        return Err(Error::NotInLinkedLattice);
    }
    // any linked partner, then its projection onto (V×P)^⊥
    let q = v_sp.rep();
    let q_s = q.restrict_columns(s.iter().map(|l| l.as_str()))?;
    let q_p = q.restrict_columns(p.iter().map(|l| l.as_str()))?;
    let sigma = solve_row_combination_any(&q_s, &x_s.reordered(q_s.ground())?)?
        .ok_or(Error::NotInLinkedLattice)?;
    let partner = q_p.left_mul(&[sigma]).row(0).reordered(l_p.ground())?;
    let (_, x_proj) = project(&partner, &v_cross_p.reordered(l_p.ground())?)?;
    // Question 2 against the complement of V×P
    let proj_space = kernel_basis(&v_cross_p.reordered(l_p.ground())?);
    let x_p = shortest_preimage_projection(l_p, &proj_space, &x_proj, mode)?;
    // the answer must pair with x_S inside V_SP
    let pair = disjoint_concat(&x_s.clone(), &x_p)?.reordered(v_sp.ground())?;
    if !v_sp.as_gnl().member(&pair)? {
        return Err(Error::NotInLinkedLattice);
    }
    Ok(x_p)
}

/// Test oracle: enumerate members of `L` within `radius_sq` of `target`
/// (coefficient enumeration against an internally reduced basis).
pub fn members_within(
    l: &LabeledMatrix,
    target: &LabeledVector,
    radius_sq: &Rat,
) -> Result<Vec<LabeledVector>> {
    if l.nrows() == 0 {
        return Ok(vec![LabeledVector::zero(l.ground().clone())]);
    }
    let reduced = lll_reduce(l, &default_delta())?;
    let gso = gram_schmidt(&reduced)?;
    let mut t = Vec::with_capacity(reduced.nrows());
    let mut span_part = LabeledVector::zero(target.ground().clone());
    for i in 0..reduced.nrows() {
        let star = gso.b_star.row(i);
        let ti = target.dot(&star)? / gso.norm_sq[i].clone();
        span_part = span_part.add(&star.scale(&ti))?;
        t.push(ti);
    }
    let off_sq = target.sub(&span_part)?.norm_sq();
    if &off_sq > radius_sq {
        return Ok(vec![]);
    }
    let budget = radius_sq - &off_sq;
    let mut out = Vec::new();
    for c in enumerate_within(&gso, &t, &budget) {
        let coeff_rat: Vec<Rat> = c.iter().map(|v| Rat::from_integer(v.clone())).collect();
        out.push(reduced.left_mul(&[coeff_rat]).row(0));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::ground;
    use crate::rat::{rat, ratio};
    use crate::regular::GraphEdge;

    #[test]
    fn babai_rounds_coordinatewise_on_identity() {
        let b = LabeledMatrix::identity(ground(["x", "y"]));
        let x = LabeledVector::new(
            ground(["x", "y"]),
            vec![ratio(2, 5), ratio(13, 5)],
        )
        .unwrap();
        let res = babai_nearest(&b, &x, &default_delta()).unwrap();
        assert_eq!(res.vector.entries(), &[rat(0), rat(3)]);
        assert_eq!(res.approx_factor_sq_bound, Some(rat(4)));
    }

    #[test]
    fn babai_is_exact_on_lattice_points() {
        let b = LabeledMatrix::from_i64(ground(["x", "y"]), &[&[1, 1], &[-2, 1]]).unwrap();
        let x = LabeledVector::from_i64(ground(["x", "y"]), &[-1, 2]).unwrap();
        let res = babai_nearest(&b, &x, &default_delta()).unwrap();
        assert_eq!(res.vector, x);
        assert_eq!(res.distance_sq, rat(0));
    }

    #[test]
    fn babai_rejects_unreduced_basis() {
        let b = LabeledMatrix::from_i64(ground(["x", "y"]), &[&[1, 1], &[0, 3]]).unwrap();
        let x = LabeledVector::zero(ground(["x", "y"]));
        assert!(matches!(
            babai_nearest(&b, &x, &default_delta()),
            Err(Error::PreconditionFailed(_))
        ));
    }

    #[test]
    fn bruteforce_breaks_ties_lexicographically() {
        let b = LabeledMatrix::from_i64(ground(["x", "y"]), &[&[2, 0], &[0, 3]]).unwrap();
        let x = LabeledVector::from_i64(ground(["x", "y"]), &[1, 1]).unwrap();
        let res = cvp_bruteforce(&b, &x).unwrap();
        // (0,0) and (2,0) are both at squared distance 2; coefficients (0,0) win
        assert_eq!(res.vector.entries(), &[rat(0), rat(0)]);
        assert_eq!(res.distance_sq, rat(2));
    }

    #[test]
    fn bruteforce_trivial_targets() {
        let b = LabeledMatrix::from_i64(ground(["x", "y"]), &[&[1, 1], &[0, 3]]).unwrap();
        let zero = LabeledVector::zero(ground(["x", "y"]));
        assert_eq!(cvp_bruteforce(&b, &zero).unwrap().distance_sq, rat(0));
        let on = LabeledVector::from_i64(ground(["x", "y"]), &[2, -1]).unwrap();
        let res = cvp_bruteforce(&b, &on).unwrap();
        assert_eq!(res.vector, on);
        assert_eq!(res.distance_sq, rat(0));
    }

    #[test]
    fn bruteforce_handles_off_span_targets() {
        let b = LabeledMatrix::from_i64(ground(["x", "y"]), &[&[1, 0]]).unwrap();
        let x = LabeledVector::new(ground(["x", "y"]), vec![ratio(1, 2), rat(7)]).unwrap();
        let res = cvp_bruteforce(&b, &x).unwrap();
        // tie between (0,0) and (1,0); coefficient 0 wins
        assert_eq!(res.vector.entries(), &[rat(0), rat(0)]);
        assert_eq!(res.distance_sq, ratio(197, 4));
    }

    #[test]
    fn question1_example() {
        let l = LabeledMatrix::from_i64(ground(["p", "q"]), &[&[1, 3], &[0, 5]]).unwrap();
        let x_p = LabeledVector::from_i64(ground(["p"]), &[1]).unwrap();
        let ans = shortest_with_restriction(&l, &x_p, CvpMode::Exact).unwrap();
        assert_eq!(ans.entries(), &[rat(1), rat(-2)]);
        // zero restriction admits the zero vector
        let zero = LabeledVector::zero(ground(["p"]));
        let ans = shortest_with_restriction(&l, &zero, CvpMode::Exact).unwrap();
        assert!(ans.is_zero());
        // no integral preimage
        let half = LabeledVector::new(ground(["p"]), vec![ratio(1, 2)]).unwrap();
        assert!(matches!(
            shortest_with_restriction(&l, &half, CvpMode::Exact),
            Err(Error::NoPreimage)
        ));
    }

    #[test]
    fn question1_matches_direct_enumeration() {
        let l = LabeledMatrix::from_i64(ground(["p", "q1", "q2"]), &[&[1, 2, 1], &[0, 3, -1], &[0, 0, 4]])
            .unwrap();
        let x_p = LabeledVector::from_i64(ground(["p"]), &[2]).unwrap();
        let ans = shortest_with_restriction(&l, &x_p, CvpMode::Exact).unwrap();
        // independent check: enumerate members around the answer radius and
        // keep those with the right restriction
        let candidates = members_within(&l, &ans, &(ans.norm_sq() * rat(4))).unwrap();
        for c in candidates {
            if c.restrict(["p"]).unwrap() == x_p {
                assert!(ans.norm_sq() <= c.norm_sq());
            }
        }
        // approximate mode still satisfies the restriction contract
        let approx = shortest_with_restriction(&l, &x_p, CvpMode::NearestPlane).unwrap();
        assert_eq!(approx.restrict(["p"]).unwrap(), x_p);
    }

    #[test]
    fn question2_examples() {
        let g = ground(["x", "y"]);
        let l = LabeledMatrix::identity(g.clone());
        let v = LabeledMatrix::from_i64(g.clone(), &[&[1, 0]]).unwrap();
        let x_proj = LabeledVector::from_i64(g.clone(), &[1, 0]).unwrap();
        let ans = shortest_preimage_projection(&l, &v, &x_proj, CvpMode::Exact).unwrap();
        assert_eq!(ans.entries(), &[rat(1), rat(0)]);

        // full space: the answer is the target itself
        let full = LabeledMatrix::identity(g.clone());
        let t = LabeledVector::from_i64(g.clone(), &[2, -1]).unwrap();
        let ans = shortest_preimage_projection(&l, &full, &t, CvpMode::Exact).unwrap();
        assert_eq!(ans, t);

        // a target outside the projection lattice is rejected
        let bad = LabeledVector::new(g.clone(), vec![ratio(1, 2), rat(0)]).unwrap();
        assert!(matches!(
            shortest_preimage_projection(&l, &v, &bad, CvpMode::Exact),
            Err(Error::NotInProjectionLattice)
        ));
        // off the space entirely is rejected too
        let off = LabeledVector::from_i64(g, &[1, 1]).unwrap();
        assert!(matches!(
            shortest_preimage_projection(&l, &v, &off, CvpMode::Exact),
            Err(Error::NotInProjectionLattice)
        ));
    }

    #[test]
    fn question3_identity_linking_copies() {
        let rep = LabeledMatrix::from_i64(
            ground(["s1", "s2", "p1", "p2"]),
            &[&[1, 0, 1, 0], &[0, 1, 0, 1]],
        )
        .unwrap();
        let v = RegularSpace::from_tu_rep(&rep, None).unwrap();
        let l_p = LabeledMatrix::from_i64(ground(["p1", "p2"]), &[&[2, 1], &[0, 3]]).unwrap();
        let x_s = LabeledVector::from_i64(ground(["s1", "s2"]), &[2, 4]).unwrap();
        let ans = shortest_linked(&v, &l_p, &x_s, CvpMode::Exact).unwrap();
        assert_eq!(ans.entries(), &[rat(2), rat(4)]);
        // x_S outside L_S is rejected
        let bad = LabeledVector::from_i64(ground(["s1", "s2"]), &[1, 0]).unwrap();
        assert!(matches!(
            shortest_linked(&v, &l_p, &bad, CvpMode::Exact),
            Err(Error::NotInLinkedLattice)
        ));
    }

    #[test]
    fn question3_nontrivial_cross_space() {
        // V from a triangle, P = two edges so V×P ≠ 0
        let edges = [
            GraphEdge::new("s1", "a", "b"),
            GraphEdge::new("p1", "b", "c"),
            GraphEdge::new("p2", "a", "c"),
        ];
        let v = RegularSpace::from_graph(&edges).unwrap();
        let p = vec!["p1".to_string(), "p2".to_string()];
        let v_on_p = space_restrict(v.rep(), &p).unwrap();
        assert_eq!(v_on_p.nrows(), 2);
        let l_p = LabeledMatrix::identity(ground(["p1", "p2"]));
        let v_cross_p = space_contract(v.rep(), &p).unwrap();
        assert_eq!(v_cross_p.nrows(), 1);
        // K_S lattice: take x_S from the composed lattice part
        let k_p = crate::gnl::Gnl::canonicalize(&l_p, &v_cross_p).unwrap();
        let k_s = crate::compose::compose(
            &v.as_gnl(),
            &k_p,
            crate::compose::CompositionKind::Matched,
        )
        .unwrap();
        let x_s = k_s.lattice_basis().row(0).scale(&rat(2));
        let ans = shortest_linked(&v, &l_p, &x_s, CvpMode::Exact).unwrap();
        // contract: the pair is in V and the answer is a lattice member
        let pair = disjoint_concat(&x_s, &ans).unwrap().reordered(v.ground()).unwrap();
        assert!(v.as_gnl().member(&pair).unwrap());
        // optimality against direct enumeration over linked members
        let radius = ans.norm_sq();
        for cand in members_within(&l_p, &LabeledVector::zero(l_p.ground().clone()), &radius)
            .unwrap()
        {
            let p2 = disjoint_concat(&x_s, &cand).unwrap().reordered(v.ground()).unwrap();
            if v.as_gnl().member(&p2).unwrap() {
                assert!(ans.norm_sq() <= cand.norm_sq());
            }
        }
    }
}
