//! Hermite normal form as the workhorse: canonical bases from generating
//! sets, visibility of restriction/contraction, and separator detection.
//!
//! Run with: `cargo run --example hnf_and_separators`

use latlink::ground::{ground, LabeledMatrix};
use latlink::hnf::{
    basis_from_generators, hnf, integral_solutions, is_unimodular, separators, visibility_form,
    IntegralMode,
};
use latlink::rat::format_rat;

fn print_matrix(name: &str, m: &LabeledMatrix) {
    println!("{name} (columns {}):", m.ground());
    for row in m.rows() {
        println!("  [{}]", row.iter().map(format_rat).collect::<Vec<_>>().join(", "));
    }
}

fn main() {
    let g = ground(["x", "y"]);
    let a = LabeledMatrix::from_i64(g, &[&[2, 3], &[4, 5]]).unwrap();
    let res = hnf(&a);
    print_matrix("H = hnf([[2,3],[4,5]])", &res.h);
    println!("pivot columns: {:?}", res.pivot_columns);
    println!("witness unimodular: {}", is_unimodular(&res.u));

    // dependent generators collapse to a basis with the same row lattice
    let gens = LabeledMatrix::from_i64(ground(["x", "y"]), &[&[1, 1], &[2, 2], &[0, 3]]).unwrap();
    print_matrix("basis from generators", &basis_from_generators(&gens));

    // visibility: bases of L×S and L∘P inside one transformed basis matrix
    let b = LabeledMatrix::from_i64(ground(["s", "p"]), &[&[1, 2]]).unwrap();
    let vis = visibility_form(&b, &["s".to_string()]).unwrap();
    print_matrix("C1S (basis of L×S)", &vis.cross_basis);
    print_matrix("C2P (basis of L∘P)", &vis.restrict_basis);

    // a block-diagonal structure survives any unimodular scramble
    let planted = LabeledMatrix::from_i64(
        ground(["e1", "e2", "e3"]),
        &[&[1, 1, 0], &[0, 2, 0], &[0, 0, 5]],
    )
    .unwrap();
    let scrambled = planted.left_mul(&[
        vec![latlink::rat::rat(1), latlink::rat::rat(2), latlink::rat::rat(-1)],
        vec![latlink::rat::rat(0), latlink::rat::rat(1), latlink::rat::rat(3)],
        vec![latlink::rat::rat(0), latlink::rat::rat(0), latlink::rat::rat(1)],
    ]);
    let parts = separators(&scrambled);
    println!("elementary separators: {:?}", parts.blocks);

    // integral solutions: all integral vectors inside span{(1,1)}
    let v = LabeledMatrix::from_i64(ground(["x", "y"]), &[&[1, 1]]).unwrap();
    let sol = integral_solutions(IntegralMode::VectorsInSpace { space_rep: &v }).unwrap();
    print_matrix("integral vectors in span{(1,1)}", &basis_from_generators(&sol));
}
