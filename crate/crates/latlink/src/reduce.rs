//! Basis reduction: exact-rational LLL, the swap-free construction of an
//! LLL-reduced dual basis from a reduced primal one, a certified brute-force
//! successive-minima oracle, αSM/βSM certification, and reduced bases of
//! lattices linked through regular vector spaces.
//!
//! Every norm comparison is done on squared norms, so the diagonal matrix
//! of true (irrational) norms never has to be materialized.

use crate::error::{Error, Result};
use crate::gnl::Gnl;
use crate::ground::{gram_schmidt, project, rank, same_row_space, GsoData, LabeledMatrix};
use crate::hnf::basis_from_generators;
use crate::rat::{rat, ratio, round_half_away, Int, Rat};
use crate::regular::{space_contract, space_restrict, RegularSpace};
use num::{One, Signed, Zero};

pub fn default_delta() -> Rat {
    ratio(3, 4)
}

fn check_delta(delta: &Rat) -> Result<()> {
    if *delta <= ratio(1, 4) || *delta >= rat(1) {
        return Err(Error::BadParameter(format!(
            "delta must lie in (1/4, 1), got {delta}"
        )));
    }
    Ok(())
}

/// Size reduction: `|α_ij| ≤ 1/2` for all `j < i`.
pub fn is_size_reduced(gso: &GsoData) -> bool {
    let half = ratio(1, 2);
    for i in 0..gso.dim() {
        for j in 0..i {
            if gso.alpha[i][j].clone().abs() > half {
                return false;
            }
        }
    }
    true
}

/// Lovász condition on squared quantities:
/// `α²_{(i+1)i}·‖b_i*‖² + ‖b_{i+1}*‖² ≥ δ·‖b_i*‖²`.
pub fn satisfies_lovasz(gso: &GsoData, delta: &Rat) -> bool {
    for i in 0..gso.dim().saturating_sub(1) {
        let a = &gso.alpha[i + 1][i];
        let lhs = a * a * &gso.norm_sq[i] + &gso.norm_sq[i + 1];
        let rhs = delta * &gso.norm_sq[i];
        if lhs < rhs {
            return false;
        }
    }
    true
}

pub fn is_lll_reduced(b: &LabeledMatrix, delta: &Rat) -> Result<bool> {
    check_delta(delta)?;
    if b.nrows() == 0 {
        return Ok(true);
    }
    let gso = gram_schmidt(b)?;
    Ok(is_size_reduced(&gso) && satisfies_lovasz(&gso, delta))
}

/// LLL reduction with exact rational arithmetic. Rational input is scaled to
/// integral by the lcm of its denominators and unscaled afterwards; the two
/// LLL conditions are invariant under the scaling.
pub fn lll_reduce(b: &LabeledMatrix, delta: &Rat) -> Result<LabeledMatrix> {
    check_delta(delta)?;
    if b.nrows() == 0 {
        return Ok(b.clone());
    }
    gram_schmidt(b)?; // rejects dependent rows up front
    let k = crate::rat::denominator_lcm(b.rows().iter().flatten());
    let kq = Rat::from_integer(k);
    let mut rows: Vec<Vec<Rat>> = b
        .rows()
        .iter()
        .map(|r| r.iter().map(|x| x * &kq).collect())
        .collect();
    let m = rows.len();
    let mut cur = 1usize;
    while cur < m {
        let work = LabeledMatrix::new(b.ground().clone(), rows.clone())?;
        let gso = gram_schmidt(&work)?;
        // size-reduce row `cur` against the rows below it
        let mut alphas = gso.alpha[cur].clone();
        for j in (0..cur).rev() {
            let c = round_half_away(&alphas[j]);
            if !c.is_zero() {
                let cq = Rat::from_integer(c);
                for t in 0..rows[cur].len() {
                    let sub = &cq * &rows[j][t];
                    rows[cur][t] = &rows[cur][t] - &sub;
                }
                for t in 0..j {
                    let sub = &cq * &gso.alpha[j][t];
                    alphas[t] = &alphas[t] - &sub;
                }
            }
        }
        // Lovász test between cur-1 and cur on the refreshed data
        let work = LabeledMatrix::new(b.ground().clone(), rows.clone())?;
        let gso = gram_schmidt(&work)?;
        let a = &gso.alpha[cur][cur - 1];
        let lhs = a * a * &gso.norm_sq[cur - 1] + &gso.norm_sq[cur];
        if lhs >= delta * &gso.norm_sq[cur - 1] {
            cur += 1;
        } else {
            rows.swap(cur - 1, cur);
            cur = cur.max(2) - 1;
        }
    }
    let out: Vec<Vec<Rat>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| x / &kq).collect())
        .collect();
    LabeledMatrix::new(b.ground().clone(), out)
}

/// The reversed and inverted triangular witnesses behind the dual basis:
/// `B^(2) = G·E·B* = H·E²·B*`, squared where a true norm would appear.
#[derive(Clone, Debug)]
pub struct DualGsoWitness {
    /// `H = T_m (K⁻¹)ᵀ T_m` — unit lower triangular
    pub h: Vec<Vec<Rat>>,
    /// diagonal of `E² = T_m D⁻² T_m`, i.e. `1/‖b*_{m-i+1}‖²`
    pub e_diag_sq: Vec<Rat>,
    /// `G_ii² = 1/‖b*_{m-i+1}‖²` for `G = T_m (F⁻¹)ᵀ T_m`
    pub g_diag_sq: Vec<Rat>,
    /// `G_{(i+1)i}² = α²_{(m-i+1)(m-i)} / ‖b*_{m-i+1}‖²`
    pub g_subdiag_sq: Vec<Rat>,
}

impl DualGsoWitness {
    /// Lovász condition read off the reversed triangle:
    /// `G²_{(i+1)i} + G²_{(i+1)(i+1)} ≥ δ·G²_{ii}`.
    pub fn lovasz_holds(&self, delta: &Rat) -> bool {
        let m = self.g_diag_sq.len();
        for i in 0..m.saturating_sub(1) {
            let lhs = &self.g_subdiag_sq[i] + &self.g_diag_sq[i + 1];
            if lhs < delta * &self.g_diag_sq[i] {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug)]
pub struct DualLllResult {
    /// LLL-reduced basis of the dual lattice `L^(2)`
    pub basis: LabeledMatrix,
    pub witness: DualGsoWitness,
    /// Lovász swaps performed while finishing the basis — always zero, the
    /// construction needs one swap-free size-reduction pass only
    pub swap_count: usize,
}

/// Builds an LLL-reduced basis of the dual lattice from an LLL-reduced primal
/// basis without any Lovász swap: reverse the rows of
/// `(K⁻¹)ᵀ D⁻² B*` and run one size-reduction pass.
pub fn dual_lll_from_primal(b: &LabeledMatrix, delta: &Rat) -> Result<DualLllResult> {
    check_delta(delta)?;
    let m = b.nrows();
    if m == 0 {
        return Ok(DualLllResult {
            basis: b.clone(),
            witness: DualGsoWitness {
                h: vec![],
                e_diag_sq: vec![],
                g_diag_sq: vec![],
                g_subdiag_sq: vec![],
            },
            swap_count: 0,
        });
    }
    let gso = gram_schmidt(b)?;
    if !is_size_reduced(&gso) || !satisfies_lovasz(&gso, delta) {
        return Err(Error::PreconditionFailed(
            "input basis is not LLL-reduced".into(),
        ));
    }
    // K⁻¹ by forward substitution on the unit lower triangle
    let mut k_inv = vec![vec![Rat::zero(); m]; m];
    for i in 0..m {
        k_inv[i][i] = Rat::one();
        for j in (0..i).rev() {
            let mut s = Rat::zero();
            for l in j..i {
                s += &gso.alpha[i][l] * &k_inv[l][j];
            }
            k_inv[i][j] = -s;
        }
    }
    // B^(2+) = (K⁻¹)ᵀ D⁻² B*, rows reversed afterwards
    let coeffs: Vec<Vec<Rat>> = (0..m)
        .map(|i| (0..m).map(|j| &k_inv[j][i] / &gso.norm_sq[j]).collect())
        .collect();
    let b2_plus = gso.b_star.left_mul(&coeffs);
    let reversed: Vec<Vec<Rat>> = b2_plus.rows().iter().rev().cloned().collect();
    let b2 = LabeledMatrix::new(b.ground().clone(), reversed)?;

    let witness = DualGsoWitness {
        h: (0..m)
            .map(|i| (0..m).map(|j| k_inv[m - 1 - j][m - 1 - i].clone()).collect())
            .collect(),
        e_diag_sq: (0..m).map(|i| Rat::one() / &gso.norm_sq[m - 1 - i]).collect(),
        g_diag_sq: (0..m).map(|i| Rat::one() / &gso.norm_sq[m - 1 - i]).collect(),
        g_subdiag_sq: (0..m - 1)
            .map(|i| {
                let a = &gso.alpha[m - 1 - i][m.saturating_sub(2) - i];
                a * a / &gso.norm_sq[m - 1 - i]
            })
            .collect(),
    };

    // one size-reduction pass; the Lovász condition already holds, so the
    // swap counter must stay at zero
    let mut rows = b2.rows().to_vec();
    let mut swap_count = 0usize;
    for i in 1..m {
        let work = LabeledMatrix::new(b.ground().clone(), rows.clone())?;
        let g2 = gram_schmidt(&work)?;
        let mut alphas = g2.alpha[i].clone();
        for j in (0..i).rev() {
            let c = round_half_away(&alphas[j]);
            if !c.is_zero() {
                let cq = Rat::from_integer(c);
                for t in 0..rows[i].len() {
                    let sub = &cq * &rows[j][t];
                    rows[i][t] = &rows[i][t] - &sub;
                }
                for t in 0..j {
                    let sub = &cq * &g2.alpha[j][t];
                    alphas[t] = &alphas[t] - &sub;
                }
            }
        }
    }
    let basis = LabeledMatrix::new(b.ground().clone(), rows)?;
    let final_gso = gram_schmidt(&basis)?;
    if !satisfies_lovasz(&final_gso, delta) {
        swap_count += 1;
    }
    assert_eq!(
        swap_count, 0,
        "dual construction from a reduced primal must never need a swap"
    );
    debug_assert!(is_size_reduced(&final_gso));
    Ok(DualLllResult {
        basis,
        witness,
        swap_count,
    })
}

/// Exact squared successive minima with independent witness vectors, plus the
/// HNF of the source lattice so certification can match provenance.
#[derive(Clone, Debug)]
pub struct SuccessiveMinima {
    pub lambdas_sq: Vec<Rat>,
    pub witnesses: LabeledMatrix,
    pub lattice_hnf: LabeledMatrix,
}

pub const MINIMA_DIM_CAP: usize = 6;

/// Every coefficient vector `c` with `‖Σ c_i b_i − x‖² ≤ radius_sq`, where
/// `x` is described by its GSO coordinates `t_i = ⟨x, b_i*⟩/‖b_i*‖²`.
/// The per-level interval is scanned outward from its rational center, so the
/// enumeration is exhaustive within the radius.
pub(crate) fn enumerate_within(gso: &GsoData, t: &[Rat], radius_sq: &Rat) -> Vec<Vec<Int>> {
    let m = gso.dim();
    let mut out = Vec::new();
    let mut coeffs = vec![Int::zero(); m];
    fn descend(
        gso: &GsoData,
        t: &[Rat],
        level: isize,
        budget: Rat,
        coeffs: &mut Vec<Int>,
        out: &mut Vec<Vec<Int>>,
    ) {
        if level < 0 {
            out.push(coeffs.clone());
            return;
        }
        let i = level as usize;
        // coordinate of the candidate along b_i*: c_i + Σ_{j>i} c_j α_{ji}
        let mut s = Rat::zero();
        for j in i + 1..gso.dim() {
            s += Rat::from_integer(coeffs[j].clone()) * &gso.alpha[j][i];
        }
        let center = &t[i] - &s;
        let contribution = |c: &Int| -> Rat {
            let r = Rat::from_integer(c.clone()) - &center;
            &r * &r * &gso.norm_sq[i]
        };
        let start = round_half_away(&center);
        if contribution(&start) > budget {
            return;
        }
        let mut c = start.clone();
        loop {
            let used = contribution(&c);
            if used > budget {
                break;
            }
            coeffs[i] = c.clone();
            descend(gso, t, level - 1, budget.clone() - used, coeffs, out);
            c += 1;
        }
        let mut c = start - 1;
        loop {
            let used = contribution(&c);
            if used > budget {
                break;
            }
            coeffs[i] = c.clone();
            descend(gso, t, level - 1, budget.clone() - used, coeffs, out);
            c -= 1;
        }
        coeffs[i] = Int::zero();
    }
    descend(gso, t, m as isize - 1, radius_sq.clone(), &mut coeffs, &mut out);
    out
}

/// Brute-force successive minima. The enumeration radius comes from an
/// internal LLL reduction: every λ_i is at most the largest reduced row, so
/// sweeping the ball of that radius is provably complete.
pub fn successive_minima_bruteforce(b: &LabeledMatrix) -> Result<SuccessiveMinima> {
    let m = b.nrows();
    if m > MINIMA_DIM_CAP {
        return Err(Error::TooLargeForExhaustiveCheck(format!(
            "lattice dimension {m} exceeds the oracle cap {MINIMA_DIM_CAP}"
        )));
    }
    let lattice_hnf = basis_from_generators(b);
    if m == 0 {
        return Ok(SuccessiveMinima {
            lambdas_sq: vec![],
            witnesses: LabeledMatrix::zero_rows(b.ground().clone()),
            lattice_hnf,
        });
    }
    let reduced = lll_reduce(b, &default_delta())?;
    let gso = gram_schmidt(&reduced)?;
    let radius_sq = reduced
        .row_vectors()
        .iter()
        .map(|r| r.norm_sq())
        .max()
        .unwrap();
    let zeros = vec![Rat::zero(); m];
    let mut candidates: Vec<(Rat, Vec<Rat>)> = Vec::new();
    for c in enumerate_within(&gso, &zeros, &radius_sq) {
        let coeff_rat: Vec<Rat> = c.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let v = reduced.left_mul(&[coeff_rat]).row(0);
        if v.is_zero() {
            continue;
        }
        // canonical sign: first nonzero entry positive, so witnesses are
        // deterministic among {v, -v}
        let mut entries = v.entries().to_vec();
        if let Some(first) = entries.iter().find(|e| !e.is_zero()) {
            if first.is_negative() {
                entries = entries.into_iter().map(|e| -e).collect();
            }
        }
        candidates.push((v.norm_sq(), entries));
    }
    candidates.sort();
    let mut witnesses = LabeledMatrix::zero_rows(b.ground().clone());
    let mut lambdas_sq = Vec::new();
    for (ns, entries) in candidates {
        if witnesses.nrows() == m {
            break;
        }
        let candidate = LabeledMatrix::new(b.ground().clone(), vec![entries.clone()])?;
        let trial = witnesses.stacked(&candidate)?;
        if rank(&trial) > witnesses.nrows() {
            witnesses = trial;
            lambdas_sq.push(ns);
        }
    }
    assert_eq!(lambdas_sq.len(), m, "enumeration radius must cover all minima");
    Ok(SuccessiveMinima {
        lambdas_sq,
        witnesses,
        lattice_hnf,
    })
}

/// Squared αSM factors of an LLL-reduced basis: `α_i² = 2^{m-1}`.
pub fn lll_alpha_sq(m: usize) -> Vec<Rat> {
    let f = Rat::from_integer(Int::from(2).pow(m.saturating_sub(1) as u32));
    vec![f; m]
}

/// Squared βSM factors for linked reduction: `β_i² = (|S|·|P|)²·2^{m-1}`.
pub fn linked_beta_sq(m: usize, s_size: usize, p_size: usize) -> Vec<Rat> {
    let sp = Int::from((s_size * p_size) as u64);
    let f = Rat::from_integer(&sp * &sp * Int::from(2).pow(m.saturating_sub(1) as u32));
    vec![f; m]
}

/// `‖row_i‖² ≤ α_i²·λ_i²` for every row, in exact rationals. The basis must
/// generate the same lattice the minima were computed for.
pub fn certify_alpha_sm(
    b: &LabeledMatrix,
    alpha_sq: &[Rat],
    minima: &SuccessiveMinima,
) -> Result<bool> {
    if basis_from_generators(b) != minima.lattice_hnf {
        return Err(Error::LatticeMismatch);
    }
    if b.nrows() != minima.lambdas_sq.len() || alpha_sq.len() != b.nrows() {
        return Err(Error::BadParameter(
            "row count does not match the minima".into(),
        ));
    }
    for i in 0..b.nrows() {
        if b.row(i).norm_sq() > &alpha_sq[i] * &minima.lambdas_sq[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A reduced basis of a linked lattice, together with the rows it was lifted
/// from and the GNL it generates the lattice part of.
#[derive(Clone, Debug)]
pub struct LinkedReduction {
    pub b_s: LabeledMatrix,
    pub lifted_rows: LabeledMatrix,
    pub target: Gnl,
    pub beta_sq: Vec<Rat>,
}

fn check_linking_preconditions(v_sp: &RegularSpace, k_p: &Gnl) -> Result<(Vec<String>, Vec<String>)> {
    let p: Vec<String> = k_p.ground().labels().to_vec();
    if !v_sp.ground().contains_all(p.iter().map(|s| s.as_str())) {
        return Err(Error::GroundMismatch("K_P ground off V_SP".into()));
    }
    let s: Vec<String> = v_sp
        .ground()
        .labels()
        .iter()
        .filter(|l| !p.contains(l))
        .cloned()
        .collect();
    let v_cross_p = space_contract(v_sp.rep(), &p)?;
    if !same_row_space(&v_cross_p, &k_p.space_basis().reordered(v_cross_p.ground())?)? {
        return Err(Error::PreconditionFailed(
            "V_SP × P = space part of K_P fails".into(),
        ));
    }
    let v_on_p = space_restrict(v_sp.rep(), &p)?;
    if !same_row_space(&v_on_p, &k_p.span_rep().reordered(v_on_p.ground())?)? {
        return Err(Error::PreconditionFailed(
            "V_SP ∘ P = span(K_P) fails".into(),
        ));
    }
    Ok((s, p))
}

fn lift_rows_through(
    space: &RegularSpace,
    rows: &LabeledMatrix,
    s: &[String],
) -> Result<LabeledMatrix> {
    let v_cross_s = space_contract(space.rep(), s)?;
    let s_ground = space.ground().restricted(s.iter().map(|x| x.as_str()))?;
    let mut b_s = LabeledMatrix::zero_rows(s_ground);
    for i in 0..rows.nrows() {
        let lifted = space.lift(&rows.row(i))?;
        let (_, off) = project(&lifted, &v_cross_s)?;
        b_s.push_row(off)?;
    }
    Ok(b_s)
}

/// βSM basis of the lattice part of `V_SP ↔ K_P`: each LLL-reduced row of
/// `b_p_reduced` is lifted through the regular space and projected onto
/// `(V_SP × S)^⊥`, which keeps the pairing and can only shrink the norm.
pub fn linked_reduced_basis(
    v_sp: &RegularSpace,
    k_p: &Gnl,
    b_p_reduced: &LabeledMatrix,
    delta: &Rat,
) -> Result<LinkedReduction> {
    let (s, _p) = check_linking_preconditions(v_sp, k_p)?;
    if basis_from_generators(b_p_reduced) != k_p.lattice_basis().clone() {
        return Err(Error::LatticeMismatch);
    }
    if !is_lll_reduced(b_p_reduced, delta)? {
        return Err(Error::PreconditionFailed(
            "primal basis is not LLL-reduced".into(),
        ));
    }
    let b_s = lift_rows_through(v_sp, b_p_reduced, &s)?;
    let target = crate::compose::compose(
        &v_sp.as_gnl(),
        k_p,
        crate::compose::CompositionKind::Matched,
    )?;
    let beta_sq = linked_beta_sq(b_p_reduced.nrows(), s.len(), k_p.ground().len());
    Ok(LinkedReduction {
        b_s,
        lifted_rows: b_p_reduced.clone(),
        target,
        beta_sq,
    })
}

/// βSM basis of the lattice part of `(V_SP ↔ K_P)^d`, built by reducing the
/// dual of `L_P` swap-free and lifting through `V_SP^⊥`.
pub fn dual_linked_reduced_basis(
    v_sp: &RegularSpace,
    k_p: &Gnl,
    b_p_reduced: &LabeledMatrix,
    delta: &Rat,
) -> Result<LinkedReduction> {
    let (s, p) = check_linking_preconditions(v_sp, k_p)?;
    if basis_from_generators(b_p_reduced) != k_p.lattice_basis().clone() {
        return Err(Error::LatticeMismatch);
    }
    let dual = dual_lll_from_primal(b_p_reduced, delta)?;
    let v_perp = v_sp.orthogonal_complement();
    // the dual-side preconditions follow from the primal ones; re-check
    let k_p_dual = k_p.dualize();
    let vp_cross = space_contract(v_perp.rep(), &p)?;
    if !same_row_space(&vp_cross, &k_p_dual.space_basis().reordered(vp_cross.ground())?)? {
        return Err(Error::PreconditionFailed(
            "V_SP^⊥ × P = space part of K_P^d fails".into(),
        ));
    }
    let b2_s = lift_rows_through(&v_perp, &dual.basis, &s)?;
    let target = crate::compose::compose(
        &v_sp.as_gnl(),
        k_p,
        crate::compose::CompositionKind::Matched,
    )?
    .dualize();
    let beta_sq = linked_beta_sq(b_p_reduced.nrows(), s.len(), k_p.ground().len());
    Ok(LinkedReduction {
        b_s: b2_s,
        lifted_rows: dual.basis,
        target,
        beta_sq,
    })
}
