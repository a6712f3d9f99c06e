//! Linking lattices: matched and skewed composition, the implicit duality
//! theorem, and solving `K_SP ↔ X = K_SQ` with the implicit inversion
//! machinery.
//!
//! Run with: `cargo run --example compose_and_invert`

use latlink::compose::{compose, invertibly_linked_basis, iit_solve, CompositionKind};
use latlink::ground::{ground, LabeledMatrix};
use latlink::rat::format_rat;
use latlink::Gnl;

fn main() {
    // a one-dimensional linking space: (t, 2t) couples s with p
    let v = Gnl::from_space(&LabeledMatrix::from_i64(ground(["s", "p"]), &[&[1, 2]]).unwrap())
        .unwrap();
    let z = Gnl::standard_integer(ground(["p"]));
    let linked = compose(&v, &z, CompositionKind::Matched).unwrap();
    println!(
        "span{{(1,2)}} ↔ ℤ = {}·ℤ on {{s}}",
        format_rat(linked.lattice_basis().entry(0, 0))
    );

    // implicit duality: (K1 ↔ K2)^d = K1^d ⇌ K2^d
    let k1 = Gnl::from_lattice(
        &LabeledMatrix::from_i64(ground(["s", "p"]), &[&[1, 2], &[0, 3]]).unwrap(),
    )
    .unwrap();
    let k2 = Gnl::from_lattice(
        &LabeledMatrix::from_i64(ground(["p", "q"]), &[&[2, 1], &[1, 1]]).unwrap(),
    )
    .unwrap();
    let lhs = compose(&k1, &k2, CompositionKind::Matched).unwrap().dualize();
    let rhs = compose(&k1.dualize(), &k2.dualize(), CompositionKind::Skewed).unwrap();
    println!("implicit duality holds: {}", lhs.equal(&rhs).unwrap());

    // implicit inversion: recover a middle operand from the outer two
    let v_sp = Gnl::from_space(
        &LabeledMatrix::from_i64(
            ground(["s1", "s2", "p1", "p2"]),
            &[&[1, 0, 1, 0], &[0, 1, 0, 1]],
        )
        .unwrap(),
    )
    .unwrap();
    let k_sq = Gnl::from_lattice(
        &LabeledMatrix::from_i64(ground(["s1", "s2", "q"]), &[&[1, 0, 2], &[0, 3, 1]]).unwrap(),
    )
    .unwrap();
    let report = iit_solve(&v_sp, &k_sq).unwrap();
    println!(
        "feasible: {} (restriction {}, contraction {})",
        report.feasible(),
        report.restriction_holds,
        report.contraction_holds
    );
    let solution = report.solution.clone().unwrap();
    println!("solution ground: {}", solution.ground());
    let back = compose(&v_sp, &solution, CompositionKind::Matched).unwrap();
    println!("compose-back equals K_SQ: {}", back.equal_up_to_order(&k_sq).unwrap());
    println!(
        "uniqueness side conditions: {:?} / {:?}",
        report.uniqueness_restriction_holds, report.uniqueness_contraction_holds
    );

    // invertibly linked bases: row i of B_S pairs with row i of B_P inside V
    let v_link = Gnl::from_space(
        &LabeledMatrix::from_i64(
            ground(["s1", "s2", "p1", "p2"]),
            &[&[1, 0, 1, 0], &[0, 1, 1, 1]],
        )
        .unwrap(),
    )
    .unwrap();
    let k_p = Gnl::standard_integer(ground(["p1", "p2"]));
    let pair = invertibly_linked_basis(&v_link, &k_p).unwrap();
    for i in 0..pair.b_s.nrows() {
        println!(
            "B_S row {i}: [{}]  pairs with  B_P row {i}: [{}]",
            pair.b_s.rows()[i].iter().map(format_rat).collect::<Vec<_>>().join(", "),
            pair.b_p.rows()[i].iter().map(format_rat).collect::<Vec<_>>().join(", ")
        );
    }
}
