//! The linkage expression language: parse, validate regularity, evaluate
//! against bindings, dualize syntactically and emit a DOT diagram.
//!
//! Run with: `cargo run --example linkage_expressions`

use latlink::dsl::{check_regular, dualize_expr, evaluate, parse, to_dot, Bindings};
use latlink::ground::{ground, LabeledMatrix};
use latlink::Gnl;

fn main() {
    let expr = parse("K1[S,P] <-> K2[P,Q]").unwrap();
    let report = check_regular(&expr);
    println!("expression: {expr}");
    println!("regular: {}, survivors: {:?}", report.is_regular(), report.survivors);

    // the two shapes the checker must reject
    for bad in [
        "KBC[B,C] <-> OAB[A,B] <-> OBQ[B,Q]",
        "(KAB[A,B] <-> KBC[B,C]) <-> KCA[C,A]",
    ] {
        let r = check_regular(&parse(bad).unwrap());
        println!("`{bad}` rejected: {}", r.diagnostic());
    }

    let mut bindings = Bindings::default();
    bindings.index_set("S", &["s1", "s2"]);
    bindings.index_set("P", &["p1", "p2"]);
    bindings.index_set("Q", &["q1"]);
    bindings.bind(
        "K1",
        Gnl::from_space(
            &LabeledMatrix::from_i64(
                ground(["s1", "s2", "p1", "p2"]),
                &[&[1, 0, 1, 0], &[0, 1, 0, 1]],
            )
            .unwrap(),
        )
        .unwrap(),
    );
    bindings.bind(
        "K2",
        Gnl::from_lattice(
            &LabeledMatrix::from_i64(ground(["p1", "p2", "q1"]), &[&[2, 1, 0], &[0, 3, 1]])
                .unwrap(),
        )
        .unwrap(),
    );

    let value = evaluate(&expr, &bindings).unwrap();
    println!("evaluates on {} with lattice rank {}", value.ground(), value.lattice_basis().nrows());

    // implicit duality as a commuting square over the whole expression
    let dual_expr = dualize_expr(&expr);
    println!("dual expression: {dual_expr}");
    let lhs = value.dualize();
    let rhs = evaluate(&dual_expr, &bindings).unwrap();
    println!("evaluate∘dualize = dualize∘evaluate: {}", lhs.equal(&rhs).unwrap());

    println!("\nDOT diagram (solid = matched, dashed = skewed):");
    print!("{}", to_dot(&expr, Some(&bindings)).unwrap());
}
