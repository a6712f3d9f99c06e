//! Self-dual lattices relative to an involution, and the two ways of
//! building new ones from old: composing self-dual pieces, and the port
//! construction `V_Z ⊕ V_{Z'}^⊥` over a graph (the lattice analogue of
//! building reciprocal electrical networks).
//!
//! Run with: `cargo run --example self_dual_lattices`

use latlink::ground::{ground, GroundSet, LabeledMatrix};
use latlink::rat::{rat, ratio, Rat};
use latlink::regular::GraphEdge;
use latlink::selfdual::{
    apply_permutation, build_port_space, compose_self_dual, is_self_dual, Involution,
};
use latlink::Gnl;

fn main() {
    // diag(2, 1/2) is self dual relative to the swap, not the identity
    let k = Gnl::from_lattice(
        &LabeledMatrix::new(
            ground(["e1", "e2"]),
            vec![vec![rat(2), rat(0)], vec![rat(0), ratio(1, 2)]],
        )
        .unwrap(),
    )
    .unwrap();
    let swap = Involution::from_pairs([("e1", "e2")]).unwrap();
    println!(
        "diag(2,1/2): self dual rel swap = {}, rel identity = {}",
        is_self_dual(&k, &swap).unwrap(),
        is_self_dual(&k, &Involution::identity()).unwrap()
    );
    let permuted = apply_permutation(&k, &swap).unwrap();
    let expected = Gnl::from_lattice(
        &LabeledMatrix::new(
            ground(["e1", "e2"]),
            vec![vec![ratio(1, 2), rat(0)], vec![rat(0), rat(2)]],
        )
        .unwrap(),
    )
    .unwrap();
    println!(
        "swap sends diag(2,1/2) to diag(1/2,2): {}",
        permuted.equal(&expected).unwrap()
    );

    // construction 1: a rotation lattice (B·Bᵀ = I) composed with ℤ on the
    // shared labels stays self dual
    let rot = Gnl::from_lattice(
        &LabeledMatrix::new(
            ground(["s", "p"]),
            vec![
                vec![ratio(3, 5), ratio(4, 5)],
                vec![ratio(-4, 5), ratio(3, 5)],
            ],
        )
        .unwrap(),
    )
    .unwrap();
    let z_p = Gnl::standard_integer(ground(["p"]));
    let out = compose_self_dual(&rot, &z_p, &Involution::identity()).unwrap();
    println!(
        "rotation ↔ ℤ: certified self dual = {}, ground = {}",
        out.certified_self_dual,
        out.result.ground()
    );

    // construction 2: ports of a triangle, doubled space V_Z ⊕ V_{Z'}^⊥
    let edges = [
        GraphEdge::new("e1", "a", "b"),
        GraphEdge::new("e2", "b", "c"),
        GraphEdge::new("e3", "c", "a"),
    ];
    let port = build_port_space(&edges, &["e2".to_string()]).unwrap();
    println!(
        "port space on {} (ports {:?})",
        port.space.ground(),
        port.port_labels
    );
    println!(
        "space self dual rel copy swap: {}",
        is_self_dual(&port.space.as_gnl(), &port.swap).unwrap()
    );

    // a self-dual lattice on the doubled inner edges: diag(d, 1/d) per pair
    let inner = GroundSet::new(port.inner_labels.clone()).unwrap();
    let mut rows = Vec::new();
    for l in &port.inner_labels {
        if l.ends_with('\'') {
            continue;
        }
        let d = rat(3);
        let mut row = vec![Rat::from_integer(0.into()); inner.len()];
        row[inner.position(l).unwrap()] = d.clone();
        rows.push(row);
        let mut row = vec![Rat::from_integer(0.into()); inner.len()];
        row[inner.position(&format!("{l}'")).unwrap()] = rat(1) / d;
        rows.push(row);
    }
    let l_ss = Gnl::from_lattice(&LabeledMatrix::new(inner, rows).unwrap()).unwrap();
    let composed = port.compose_with(&l_ss).unwrap();
    println!(
        "port composition: certified self dual = {}, number lattice = {}, on {}",
        composed.certified_self_dual,
        composed.result.is_number_lattice(),
        composed.result.ground()
    );
}
