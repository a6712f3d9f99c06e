//! Exact-rational LLL, the certified successive-minima oracle, and the
//! swap-free construction of a reduced dual basis from a reduced primal.
//!
//! Run with: `cargo run --example lll_and_dual_reduction`

use latlink::ground::{ground, LabeledMatrix};
use latlink::rat::format_rat;
use latlink::reduce::{
    certify_alpha_sm, default_delta, dual_lll_from_primal, lll_alpha_sq, lll_reduce,
    successive_minima_bruteforce,
};
use latlink::Gnl;

fn print_matrix(name: &str, m: &LabeledMatrix) {
    println!("{name}:");
    for row in m.rows() {
        println!("  [{}]", row.iter().map(format_rat).collect::<Vec<_>>().join(", "));
    }
}

fn main() {
    let g = ground(["x", "y", "z"]);
    let b = LabeledMatrix::from_i64(g, &[&[1, 1, 7], &[0, 3, 8], &[0, 0, 5]]).unwrap();
    print_matrix("input basis", &b);

    let delta = default_delta(); // 3/4
    let reduced = lll_reduce(&b, &delta).unwrap();
    print_matrix("LLL-reduced (δ = 3/4)", &reduced);

    // the brute-force oracle certifies the quality claim exactly
    let sm = successive_minima_bruteforce(&b).unwrap();
    println!(
        "squared successive minima: [{}]",
        sm.lambdas_sq.iter().map(format_rat).collect::<Vec<_>>().join(", ")
    );
    print_matrix("witnesses", &sm.witnesses);
    let ok = certify_alpha_sm(&reduced, &lll_alpha_sq(3), &sm).unwrap();
    println!("αSM with α_i² = 2^(m-1): {ok}");

    // the dual basis comes out LLL-reduced without a single Lovász swap
    let dual = dual_lll_from_primal(&reduced, &delta).unwrap();
    print_matrix("dual basis (row-reversed, size-reduced)", &dual.basis);
    println!("Lovász swaps performed: {}", dual.swap_count);
    println!(
        "dual witness Lovász condition: {}",
        dual.witness.lovasz_holds(&delta)
    );
    let same = Gnl::from_lattice(&dual.basis)
        .unwrap()
        .equal(&Gnl::from_lattice(&b).unwrap().dualize())
        .unwrap();
    println!("generates the dual lattice: {same}");
}
