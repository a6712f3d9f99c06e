//! Generalized number lattices: the sum `K = L + V` of a number lattice and a
//! vector space with trivial intersection, kept in the canonical orthogonal
//! decomposition, with dualization and the basic algebra.

use crate::error::{Error, Result};
use crate::ground::{
    invert, kernel_basis, project, row_space_basis, row_space_contains, same_row_space,
    GroundSet, LabeledMatrix, LabeledVector,
};
use crate::hnf::{basis_from_generators, solve_integral_combination};
use crate::rat::Rat;
use num::Zero;

/// A generalized number lattice in canonical form: the lattice part is the
/// rational HNF basis of `L`, the space part the RREF basis of `V`, and every
/// lattice row is orthogonal to every space row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gnl {
    ground: GroundSet,
    lattice_basis: LabeledMatrix,
    space_basis: LabeledMatrix,
}

/// The stacked dualization witness: `[B2;C2;D2]ᵀ = [B1;C1;D1]⁻¹`.
#[derive(Clone, Debug)]
pub struct DualizationWitness {
    pub b1: LabeledMatrix,
    pub c1: LabeledMatrix,
    pub d1: LabeledMatrix,
    pub b2: LabeledMatrix,
    pub c2: LabeledMatrix,
    pub d2: LabeledMatrix,
}

impl Gnl {
    /// Canonicalizes arbitrary generating sets: the space part becomes the row
    /// space of `gen_space`, the lattice part the lattice generated by the
    /// projections of `gen_lattice` rows onto its orthogonal complement.
    pub fn canonicalize(gen_lattice: &LabeledMatrix, gen_space: &LabeledMatrix) -> Result<Gnl> {
        if gen_lattice.ground() != gen_space.ground() {
            return Err(Error::GroundMismatch("canonicalize".into()));
        }
        let ground = gen_lattice.ground().clone();
        let space_basis = row_space_basis(gen_space);
        let mut projected = LabeledMatrix::zero_rows(ground.clone());
        for i in 0..gen_lattice.nrows() {
            let (_, off) = project(&gen_lattice.row(i), &space_basis)?;
            projected.push_row(off)?;
        }
        let lattice_basis = basis_from_generators(&projected);
        Ok(Gnl {
            ground,
            lattice_basis,
            space_basis,
        })
    }

    pub fn from_lattice(gen: &LabeledMatrix) -> Result<Gnl> {
        Gnl::canonicalize(gen, &LabeledMatrix::zero_rows(gen.ground().clone()))
    }

    pub fn from_space(rep: &LabeledMatrix) -> Result<Gnl> {
        Gnl::canonicalize(&LabeledMatrix::zero_rows(rep.ground().clone()), rep)
    }

    /// The zero lattice `{0}` on a ground set.
    pub fn zero(ground: GroundSet) -> Gnl {
        Gnl {
            lattice_basis: LabeledMatrix::zero_rows(ground.clone()),
            space_basis: LabeledMatrix::zero_rows(ground.clone()),
            ground,
        }
    }

    /// The full vector space `F_X`.
    pub fn full_space(ground: GroundSet) -> Gnl {
        Gnl {
            lattice_basis: LabeledMatrix::zero_rows(ground.clone()),
            space_basis: LabeledMatrix::identity(ground.clone()),
            ground,
        }
    }

    /// The standard integer lattice `ℤ^X`.
    pub fn standard_integer(ground: GroundSet) -> Gnl {
        Gnl {
            lattice_basis: LabeledMatrix::identity(ground.clone()),
            space_basis: LabeledMatrix::zero_rows(ground.clone()),
            ground,
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn lattice_basis(&self) -> &LabeledMatrix {
        &self.lattice_basis
    }

    pub fn space_basis(&self) -> &LabeledMatrix {
        &self.space_basis
    }

    pub fn is_number_lattice(&self) -> bool {
        self.space_basis.nrows() == 0
    }

    pub fn is_vector_space(&self) -> bool {
        self.lattice_basis.nrows() == 0
    }

    pub fn dim_span(&self) -> usize {
        self.lattice_basis.nrows() + self.space_basis.nrows()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim_span() == self.ground.len()
    }

    /// Representative matrix of `span(K)`.
    pub fn span_rep(&self) -> LabeledMatrix {
        self.lattice_basis
            .stacked(&self.space_basis)
            .expect("same ground")
    }

    /// Dual `K^d`: all vectors with integral dot products against `K`.
    pub fn dualize(&self) -> Gnl {
        self.dualize_with_witness().0
    }

    pub fn dualize_with_witness(&self) -> (Gnl, DualizationWitness) {
        let b1 = self.lattice_basis.clone();
        let c1 = self.space_basis.clone();
        let d1 = kernel_basis(&self.span_rep());
        let stack = b1.stacked(&c1).unwrap().stacked(&d1).unwrap();
        debug_assert_eq!(stack.nrows(), self.ground.len());
        let inv = invert(&stack).expect("canonical stack is nonsingular");
        // rows of (M⁻¹)ᵀ are the columns of M⁻¹
        let n = self.ground.len();
        let transposed: Vec<Vec<Rat>> = (0..n)
            .map(|j| (0..n).map(|i| inv.entry(i, j).clone()).collect())
            .collect();
        let nb = b1.nrows();
        let nc = c1.nrows();
        let b2 = LabeledMatrix::new(self.ground.clone(), transposed[..nb].to_vec()).unwrap();
        let c2 =
            LabeledMatrix::new(self.ground.clone(), transposed[nb..nb + nc].to_vec()).unwrap();
        let d2 = LabeledMatrix::new(self.ground.clone(), transposed[nb + nc..].to_vec()).unwrap();
        let dual = Gnl::canonicalize(&b2, &d2).expect("dual stack is consistent");
        (
            dual,
            DualizationWitness {
                b1,
                c1,
                d1,
                b2,
                c2,
                d2,
            },
        )
    }

    /// Sum of two generalized number lattices, allowing any ground overlap.
    pub fn sum(&self, other: &Gnl) -> Result<Gnl> {
        let ground = self.ground.union_merge(&other.ground);
        let lat = self
            .lattice_basis
            .pad_to(&ground)?
            .stacked(&other.lattice_basis.pad_to(&ground)?)?;
        let sp = self
            .space_basis
            .pad_to(&ground)?
            .stacked(&other.space_basis.pad_to(&ground)?)?;
        Gnl::canonicalize(&lat, &sp)
    }

    /// Intersection, computed through the duals.
    pub fn intersect(&self, other: &Gnl) -> Result<Gnl> {
        Ok(self.dualize().sum(&other.dualize())?.dualize())
    }

    /// Restriction `K ∘ keep`: projections of members onto the kept labels.
    pub fn restrict<'a, I: IntoIterator<Item = &'a str>>(&self, keep: I) -> Result<Gnl> {
        let keep: Vec<&str> = keep.into_iter().collect();
        let lat = self.lattice_basis.restrict_columns(keep.iter().copied())?;
        let sp = self.space_basis.restrict_columns(keep.iter().copied())?;
        Gnl::canonicalize(&lat, &sp)
    }

    /// Contraction `K × keep`: members vanishing off the kept labels,
    /// computed through dot-cross duality as `(K^d ∘ keep)^d`.
    pub fn contract<'a, I: IntoIterator<Item = &'a str>>(&self, keep: I) -> Result<Gnl> {
        Ok(self.dualize().restrict(keep)?.dualize())
    }

    pub fn minor<'a, I: IntoIterator<Item = &'a str>>(
        &self,
        keep: I,
        mode: MinorMode,
    ) -> Result<Gnl> {
        match mode {
            MinorMode::Restrict => self.restrict(keep),
            MinorMode::Contract => self.contract(keep),
        }
    }

    /// Membership: `x = λB + μC` with `λ` integral, `μ` rational.
    pub fn member(&self, x: &LabeledVector) -> Result<bool> {
        if x.ground() != &self.ground {
            return Err(Error::GroundMismatch("member".into()));
        }
        let (_, off) = project(x, &self.space_basis)?;
        Ok(solve_integral_combination(&self.lattice_basis, &off)?.is_some())
    }

    /// Exact equality of the two collections.
    pub fn equal(&self, other: &Gnl) -> Result<bool> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch("equal".into()));
        }
        Ok(self.lattice_basis == other.lattice_basis
            && same_row_space(&self.space_basis, &other.space_basis)?)
    }

    /// Equality of the collections when the grounds carry the same labels,
    /// possibly in a different order.
    pub fn equal_up_to_order(&self, other: &Gnl) -> Result<bool> {
        if self.ground == other.ground {
            return self.equal(other);
        }
        let reordered = Gnl::canonicalize(
            &other.lattice_basis.reordered(&self.ground)?,
            &other.space_basis.reordered(&self.ground)?,
        )?;
        self.equal(&reordered)
    }

    /// True iff every member of `self` is a member of `other`.
    pub fn is_subset(&self, other: &Gnl) -> Result<bool> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch("is_subset".into()));
        }
        for i in 0..self.lattice_basis.nrows() {
            if !other.member(&self.lattice_basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(row_space_contains(&other.space_basis, &self.space_basis)?)
    }

    /// Sign flip `K_{X(-Y)}` on the labels of `on`.
    pub fn negate_on<'a, I: IntoIterator<Item = &'a str> + Clone>(&self, on: I) -> Result<Gnl> {
        let lat = self.lattice_basis.negate_on(on.clone())?;
        let sp = self.space_basis.negate_on(on)?;
        Gnl::canonicalize(&lat, &sp)
    }

    /// Copy of `K` with every label renamed through `f` (order preserved).
    pub fn renamed<F: Fn(&str) -> String>(&self, f: F) -> Result<Gnl> {
        Ok(Gnl {
            ground: self.ground.renamed(&f)?,
            lattice_basis: self.lattice_basis.renamed(&f)?,
            space_basis: self.space_basis.renamed(&f)?,
        })
    }

    /// Canonical-form invariant check, used by `--verify` and the test suites.
    pub fn check_canonical(&self) -> Result<()> {
        for i in 0..self.lattice_basis.nrows() {
            for j in 0..self.space_basis.nrows() {
                if !self
                    .lattice_basis
                    .row(i)
                    .dot(&self.space_basis.row(j))?
                    .is_zero()
                {
                    return Err(Error::PreconditionFailed(
                        "lattice part not orthogonal to space part".into(),
                    ));
                }
            }
        }
        if crate::ground::rank(&self.span_rep()) != self.dim_span() {
            return Err(Error::PreconditionFailed("dependent canonical rows".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinorMode {
    Restrict,
    Contract,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::ground;
    use crate::hnf::{integral_solutions, IntegralMode};
    use crate::rat::{rat, ratio};

    fn lat(g: GroundSet, rows: &[&[i64]]) -> Gnl {
        Gnl::from_lattice(&LabeledMatrix::from_i64(g, rows).unwrap()).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let g = ground(["x", "y"]);
        let k = Gnl::canonicalize(
            &LabeledMatrix::from_i64(g.clone(), &[&[1, 0]]).unwrap(),
            &LabeledMatrix::from_i64(g.clone(), &[&[0, 1]]).unwrap(),
        )
        .unwrap();
        assert_eq!(k.lattice_basis().rows(), &[vec![rat(1), rat(0)]]);
        assert_eq!(k.space_basis().rows(), &[vec![rat(0), rat(1)]]);

        let k = Gnl::canonicalize(
            &LabeledMatrix::from_i64(g.clone(), &[&[1, 1]]).unwrap(),
            &LabeledMatrix::from_i64(g.clone(), &[&[1, 0]]).unwrap(),
        )
        .unwrap();
        assert_eq!(k.lattice_basis().rows(), &[vec![rat(0), rat(1)]]);
        assert_eq!(k.space_basis().rows(), &[vec![rat(1), rat(0)]]);

        let k = Gnl::from_lattice(
            &LabeledMatrix::from_i64(g, &[&[1, 0], &[2, 0]]).unwrap(),
        )
        .unwrap();
        assert_eq!(k.lattice_basis().rows(), &[vec![rat(1), rat(0)]]);
    }

    #[test]
    fn dualize_standard_lattice_is_self_dual() {
        let k = Gnl::standard_integer(ground(["a", "b", "c"]));
        assert!(k.dualize().equal(&k).unwrap());
    }

    #[test]
    fn dualize_full_rank_lattice() {
        let g = ground(["x", "y"]);
        let k = lat(g.clone(), &[&[1, 1], &[0, 3]]);
        let d = k.dualize();
        let expected = Gnl::from_lattice(
            &LabeledMatrix::new(
                g,
                vec![
                    vec![rat(1), rat(0)],
                    vec![ratio(-1, 3), ratio(1, 3)],
                ],
            )
            .unwrap(),
        )
        .unwrap();
        assert!(d.equal(&expected).unwrap());
        assert!(d.is_number_lattice());
        // pairwise products integral
        for i in 0..2 {
            for j in 0..2 {
                let p = k.lattice_basis().row(i).dot(&d.lattice_basis().row(j)).unwrap();
                assert!(p.denom() == &num::BigInt::from(1));
            }
        }
        // determinants are reciprocal
        let det_k = crate::ground::determinant(k.lattice_basis().rows());
        let det_d = crate::ground::determinant(d.lattice_basis().rows());
        assert_eq!(det_k * det_d, rat(1));
    }

    #[test]
    fn dualize_low_dimensional_lattice() {
        let g = ground(["x", "y"]);
        let k = lat(g.clone(), &[&[1, 1]]);
        let d = k.dualize();
        let expected = Gnl::canonicalize(
            &LabeledMatrix::new(g.clone(), vec![vec![ratio(1, 2), ratio(1, 2)]]).unwrap(),
            &LabeledMatrix::from_i64(g, &[&[1, -1]]).unwrap(),
        )
        .unwrap();
        assert!(d.equal(&expected).unwrap());
    }

    #[test]
    fn dual_of_space_is_orthogonal_complement() {
        let g = ground(["x", "y", "z"]);
        let v = Gnl::from_space(&LabeledMatrix::from_i64(g, &[&[1, 1, 0]]).unwrap()).unwrap();
        let d = v.dualize();
        assert!(d.is_vector_space());
        assert_eq!(d.space_basis().nrows(), 2);
        for i in 0..d.space_basis().nrows() {
            assert_eq!(
                d.space_basis().row(i).dot(&v.space_basis().row(0)).unwrap(),
                rat(0)
            );
        }
    }

    #[test]
    fn involution_holds_on_mixed_parts() {
        let g = ground(["x", "y", "z"]);
        let k = Gnl::canonicalize(
            &LabeledMatrix::from_i64(g.clone(), &[&[2, 1, 1]]).unwrap(),
            &LabeledMatrix::from_i64(g, &[&[1, -1, 0]]).unwrap(),
        )
        .unwrap();
        assert!(k.dualize().dualize().equal(&k).unwrap());
        k.check_canonical().unwrap();
        k.dualize().check_canonical().unwrap();
    }

    #[test]
    fn sum_examples() {
        let e = ground(["e"]);
        let two = lat(e.clone(), &[&[2]]);
        let three = lat(e.clone(), &[&[3]]);
        let s = two.sum(&three).unwrap();
        assert!(s.equal(&Gnl::standard_integer(e.clone())).unwrap());

        let k = lat(ground(["x"]), &[&[5]]);
        let z = Gnl::zero(ground(["q"]));
        let d = k.sum(&z).unwrap();
        assert_eq!(d.ground().labels(), &["x".to_string(), "q".to_string()]);
        assert_eq!(d.lattice_basis().rows(), &[vec![rat(5), rat(0)]]);

        let k0 = k.sum(&Gnl::zero(ground(["x"]))).unwrap();
        assert!(k0.equal(&k).unwrap());
    }

    #[test]
    fn intersect_examples() {
        let e = ground(["e"]);
        let two = lat(e.clone(), &[&[2]]);
        let three = lat(e.clone(), &[&[3]]);
        let i = two.intersect(&three).unwrap();
        assert!(i.equal(&lat(e.clone(), &[&[6]])).unwrap());
        assert!(two.intersect(&two).unwrap().equal(&two).unwrap());

        // ℤ² ∩ span{(1,1)} = ℤ·(1,1), cross-checked with the
        // integral-solutions construction
        let g = ground(["x", "y"]);
        let z2 = Gnl::standard_integer(g.clone());
        let span = Gnl::from_space(&LabeledMatrix::from_i64(g.clone(), &[&[1, 1]]).unwrap())
            .unwrap();
        let i = z2.intersect(&span).unwrap();
        let direct = integral_solutions(IntegralMode::LatticeIntersectSpace {
            lattice_basis: &LabeledMatrix::identity(g.clone()),
            space_rep: &LabeledMatrix::from_i64(g, &[&[1, 1]]).unwrap(),
        })
        .unwrap();
        assert!(i.equal(&Gnl::from_lattice(&direct).unwrap()).unwrap());
    }

    #[test]
    fn minor_examples() {
        let g = ground(["s", "p"]);
        let l = lat(g, &[&[1, 2]]);
        let restricted = l.restrict(["s"]).unwrap();
        assert!(restricted
            .equal(&Gnl::standard_integer(ground(["s"])))
            .unwrap());
        let contracted = l.contract(["s"]).unwrap();
        assert!(contracted.equal(&Gnl::zero(ground(["s"]))).unwrap());

        let full = l.restrict(["s", "p"]).unwrap();
        assert!(full.equal(&l).unwrap());
    }

    #[test]
    fn dot_cross_duality() {
        let g = ground(["s", "p", "q"]);
        let k = Gnl::canonicalize(
            &LabeledMatrix::from_i64(g.clone(), &[&[1, 2, 0], &[0, 0, 3]]).unwrap(),
            &LabeledMatrix::from_i64(g, &[&[2, -1, 0]]).unwrap(),
        )
        .unwrap();
        let lhs = k.restrict(["s", "p"]).unwrap().dualize();
        let rhs = k.dualize().contract(["s", "p"]).unwrap();
        assert!(lhs.equal(&rhs).unwrap());
    }

    #[test]
    fn contraction_agrees_with_visibility_form() {
        // two independent routes to L×S: the dual of the restricted dual,
        // and the zero-P block of the visibility form
        let g = ground(["s1", "s2", "p"]);
        for rows in [
            vec![vec![1i64, 2, 2], vec![0, 3, 1]],
            vec![vec![2, 0, 4], vec![1, 1, 1], vec![0, 0, 3]],
            vec![vec![1, 1, 0]],
        ] {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let b = LabeledMatrix::from_i64(g.clone(), &refs).unwrap();
            if crate::ground::rank(&b) != b.nrows() {
                continue;
            }
            let via_dual = Gnl::from_lattice(&b).unwrap().contract(["s1", "s2"]).unwrap();
            let vis = crate::hnf::visibility_form(&b, &["s1".into(), "s2".into()]).unwrap();
            let via_vis = Gnl::from_lattice(&vis.cross_basis).unwrap();
            assert!(via_dual.equal(&via_vis).unwrap());
        }
    }

    #[test]
    fn member_examples() {
        let g = ground(["x", "y"]);
        let k = lat(g.clone(), &[&[1, 1], &[0, 3]]);
        assert!(k.member(&LabeledVector::zero(g.clone())).unwrap());
        assert!(k
            .member(&LabeledVector::from_i64(g.clone(), &[1, 1]).unwrap())
            .unwrap());
        assert!(!k
            .member(&LabeledVector::from_i64(g.clone(), &[1, 0]).unwrap())
            .unwrap());
        // dualize-twice agreement
        let dd = k.dualize().dualize();
        for v in [[1i64, 1], [1, 0], [2, -1], [0, 3]] {
            let x = LabeledVector::from_i64(g.clone(), &v).unwrap();
            assert_eq!(k.member(&x).unwrap(), dd.member(&x).unwrap());
        }
    }

    #[test]
    fn equality_is_scramble_invariant() {
        let g = ground(["x", "y"]);
        let k1 = lat(g.clone(), &[&[1, 1], &[0, 3]]);
        // unimodular scramble of the same basis
        let k2 = lat(g.clone(), &[&[1, 4], &[1, 7]]);
        assert!(k1.equal(&k2).unwrap());
        let other = lat(g.clone(), &[&[2, 0], &[0, 3]]);
        assert!(!k1.equal(&other).unwrap());
        assert!(!lat(ground(["e"]), &[&[2]])
            .equal(&lat(ground(["e"]), &[&[3]]))
            .unwrap());
    }

    #[test]
    fn de_morgan_pair() {
        let g1 = ground(["s", "p"]);
        let g2 = ground(["p", "q"]);
        let k1 = lat(g1, &[&[2, 1], &[0, 2]]);
        let k2 = lat(g2, &[&[1, 3]]);
        let lhs = k1.sum(&k2).unwrap().dualize();
        let rhs = k1.dualize().intersect(&k2.dualize()).unwrap();
        assert!(lhs.equal(&rhs).unwrap());
    }

    #[test]
    fn full_dimensional_closure() {
        let g1 = ground(["s", "p"]);
        let g2 = ground(["p", "q"]);
        let k1 = lat(g1, &[&[1, 1], &[0, 2]]);
        let k2 = lat(g2, &[&[3, 0], &[1, 1]]);
        let s = k1.sum(&k2).unwrap();
        assert!(s.is_number_lattice() && s.is_full_dimensional());
        let i = k1.intersect(&k2).unwrap();
        assert!(i.is_number_lattice() && i.is_full_dimensional());
        let m = s.restrict(["s", "p"]).unwrap();
        assert!(m.is_number_lattice() && m.is_full_dimensional());
        let c = s.contract(["p", "q"]).unwrap();
        assert!(c.is_number_lattice() && c.is_full_dimensional());
    }
}
