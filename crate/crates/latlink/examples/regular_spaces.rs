//! Totally unimodular representative matrices: graph coboundary spaces,
//! exhaustive TU verification, base changes along priority sequences and
//! the orthogonal-complement form `(I|K) ↦ (-Kᵀ|I)`.
//!
//! Run with: `cargo run --example regular_spaces`

use latlink::ground::{ground, same_row_space, LabeledMatrix};
use latlink::rat::format_rat;
use latlink::regular::{is_totally_unimodular, GraphEdge, RegularSpace};

fn print_matrix(name: &str, m: &LabeledMatrix) {
    println!("{name} (columns {}):", m.ground());
    for row in m.rows() {
        println!("  [{}]", row.iter().map(format_rat).collect::<Vec<_>>().join(", "));
    }
}

fn main() {
    let edges = [
        GraphEdge::new("e1", "a", "b"),
        GraphEdge::new("e2", "b", "c"),
        GraphEdge::new("e3", "a", "c"),
        GraphEdge::new("e4", "c", "d"),
    ];
    let v = RegularSpace::from_graph(&edges).unwrap();
    print_matrix("standard representative", v.rep());
    println!("base: {:?}", v.base());
    println!("totally unimodular: {}", is_totally_unimodular(v.rep()).unwrap());

    // the complement swaps the roles of base and co-base
    let perp = v.orthogonal_complement();
    print_matrix("orthogonal complement", perp.rep());
    for i in 0..v.dim() {
        for j in 0..perp.dim() {
            assert!(v.rep().row(i).dot(&perp.rep().row(j)).unwrap() == latlink::rat::rat(0));
        }
    }
    println!("complement rows orthogonal to the space: checked");

    // base change along a priority sequence, one exchange at a time
    let w = v
        .std_rep_for_priority(vec![
            vec!["e3".to_string(), "e4".to_string()],
            vec!["e1".to_string(), "e2".to_string()],
        ])
        .unwrap();
    print_matrix("after priority (e3 e4 | e1 e2)", w.rep());
    println!("row space unchanged: {}", same_row_space(v.rep(), w.rep()).unwrap());

    // a handmade non-TU matrix is rejected by the exhaustive check
    let bad = LabeledMatrix::from_i64(ground(["x", "y"]), &[&[1, 1], &[-1, 1]]).unwrap();
    println!(
        "[[1,1],[-1,1]] totally unimodular: {}",
        is_totally_unimodular(&bad).unwrap()
    );
}
