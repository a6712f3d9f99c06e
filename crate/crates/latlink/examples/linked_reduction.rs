//! Regular vector spaces from graphs and reduced bases of linked lattices:
//! the lift is read off a priority-sequence standard representative matrix
//! and lands within √(|S|·|P|) of the source row's length.
//!
//! Run with: `cargo run --example linked_reduction`

use latlink::ground::LabeledVector;
use latlink::rat::{format_rat, rat};
use latlink::reduce::{
    default_delta, dual_linked_reduced_basis, linked_reduced_basis, lll_reduce,
};
use latlink::regular::{
    is_totally_unimodular, space_contract, space_restrict, GraphEdge, RegularSpace,
};
use latlink::Gnl;

fn main() {
    // a triangle with a chord: coboundary space on four edges
    let edges = [
        GraphEdge::new("s1", "a", "b"),
        GraphEdge::new("s2", "b", "c"),
        GraphEdge::new("p1", "a", "c"),
        GraphEdge::new("p2", "b", "c"),
    ];
    let v = RegularSpace::from_graph(&edges).unwrap();
    println!("coboundary space dimension: {}", v.dim());
    println!("standard representative TU: {}", is_totally_unimodular(v.rep()).unwrap());
    println!("base: {:?}", v.base());

    // re-pivot so the P edges get priority; entries stay 0,±1 throughout
    let p = vec!["p1".to_string(), "p2".to_string()];
    let s = vec!["s1".to_string(), "s2".to_string()];
    let w = v.std_rep_for_priority(vec![p.clone(), s.clone()]).unwrap();
    println!("base after (P,S) priority pivot: {:?}", w.base());

    // lift a vector of V∘P and watch the norm bound
    let v_on_p = space_restrict(v.rep(), &p).unwrap();
    let x_p = v_on_p.row(0).scale(&rat(3));
    let x_s = v.lift(&x_p).unwrap();
    println!(
        "lift of [{}] is [{}]",
        x_p.entries().iter().map(format_rat).collect::<Vec<_>>().join(", "),
        x_s.entries().iter().map(format_rat).collect::<Vec<_>>().join(", ")
    );
    println!(
        "‖x_S‖² = {} ≤ |S||P|·‖x_P‖² = {}",
        format_rat(&x_s.norm_sq()),
        format_rat(&(rat(4) * x_p.norm_sq()))
    );

    // a linked lattice K_P with V×P as its space part, reduced and lifted
    let v_cross_p = space_contract(v.rep(), &p).unwrap();
    let k_p = Gnl::canonicalize(&v_on_p, &v_cross_p).unwrap();
    let delta = default_delta();
    let reduced = lll_reduce(k_p.lattice_basis(), &delta).unwrap();
    let link = linked_reduced_basis(&v, &k_p, &reduced, &delta).unwrap();
    println!("linked βSM basis of L_S:");
    for (i, row) in link.b_s.rows().iter().enumerate() {
        println!(
            "  [{}]  (β_i² = {})",
            row.iter().map(format_rat).collect::<Vec<_>>().join(", "),
            format_rat(&link.beta_sq[i])
        );
    }

    let dual_link = dual_linked_reduced_basis(&v, &k_p, &reduced, &delta).unwrap();
    println!("dual-linked basis rows (lattice part of (V ↔ K_P)^d):");
    for row in dual_link.b_s.rows() {
        println!("  [{}]", row.iter().map(format_rat).collect::<Vec<_>>().join(", "));
    }

    let zero = v.lift(&LabeledVector::zero(x_p.ground().clone())).unwrap();
    println!("lift of 0 is 0: {}", zero.is_zero());
}
