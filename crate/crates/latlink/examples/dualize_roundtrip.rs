//! Generalized number lattices and dualization.
//!
//! Builds a GNL from generators, extracts its canonical orthogonal
//! decomposition `K = L + V`, dualizes through the stacked transpose-inverse
//! and checks the involution `K^dd = K`.
//!
//! Run with: `cargo run --example dualize_roundtrip`

use latlink::ground::{ground, LabeledMatrix, LabeledVector};
use latlink::rat::format_rat;
use latlink::Gnl;

fn show(name: &str, k: &Gnl) {
    println!("{name} on {}", k.ground());
    for row in k.lattice_basis().rows() {
        println!("  lattice | {}", row.iter().map(format_rat).collect::<Vec<_>>().join("  "));
    }
    for row in k.space_basis().rows() {
        println!("  space   | {}", row.iter().map(format_rat).collect::<Vec<_>>().join("  "));
    }
}

fn main() {
    let g = ground(["a", "b", "c"]);

    // generators needn't be orthogonal or independent; canonicalize sorts
    // them into an HNF lattice basis orthogonal to the space part
    let gen_lattice = LabeledMatrix::from_i64(g.clone(), &[&[2, 1, 1], &[4, 2, 2]]).unwrap();
    let gen_space = LabeledMatrix::from_i64(g.clone(), &[&[1, -1, 0]]).unwrap();
    let k = Gnl::canonicalize(&gen_lattice, &gen_space).unwrap();
    show("K", &k);

    let (dual, witness) = k.dualize_with_witness();
    show("K^d", &dual);
    println!(
        "dualization stack: {} lattice rows, {} space rows, {} complement rows",
        witness.b1.nrows(),
        witness.c1.nrows(),
        witness.d1.nrows()
    );

    let back = dual.dualize();
    println!("K^dd = K: {}", back.equal(&k).unwrap());

    // membership: integral combinations of the lattice part plus anything
    // from the space part
    let member = k
        .lattice_basis()
        .row(0)
        .add(&k.space_basis().row(0).scale(&latlink::rat::ratio(7, 3)))
        .unwrap();
    println!("lattice row + (7/3)·space row ∈ K: {}", k.member(&member).unwrap());
    let outside = LabeledVector::from_i64(g, &[1, 0, 0]).unwrap();
    println!("(1,0,0) ∈ K: {}", k.member(&outside).unwrap());

    // every dual member has integral dot products against every K member
    let d0 = dual.lattice_basis().row(0);
    let p = d0.dot(&k.lattice_basis().row(0)).unwrap();
    println!("⟨dual row, lattice row⟩ = {} (integral)", format_rat(&p));
}
