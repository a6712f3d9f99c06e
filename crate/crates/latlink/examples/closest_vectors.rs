//! Closest and shortest vectors: Babai nearest plane against the certified
//! brute-force oracle, and the three reductions of restricted/projected/
//! linked shortest-vector questions to closest-vector computations.
//!
//! Run with: `cargo run --example closest_vectors`

use latlink::cvp::{
    babai_nearest, cvp_bruteforce, shortest_linked, shortest_preimage_projection,
    shortest_with_restriction, CvpMode,
};
use latlink::ground::{ground, LabeledMatrix, LabeledVector};
use latlink::rat::{format_rat, ratio};
use latlink::reduce::{default_delta, lll_reduce};
use latlink::regular::RegularSpace;

fn fmt(v: &LabeledVector) -> String {
    format!(
        "[{}]",
        v.entries().iter().map(format_rat).collect::<Vec<_>>().join(", ")
    )
}

fn main() {
    let g = ground(["x", "y"]);
    let b = LabeledMatrix::from_i64(g.clone(), &[&[1, 1], &[0, 3]]).unwrap();
    let reduced = lll_reduce(&b, &default_delta()).unwrap();
    let target = LabeledVector::new(g, vec![ratio(2, 5), ratio(13, 5)]).unwrap();

    let approx = babai_nearest(&reduced, &target, &default_delta()).unwrap();
    println!(
        "Babai: {} at squared distance {} (factor² bound {})",
        fmt(&approx.vector),
        format_rat(&approx.distance_sq),
        format_rat(&approx.approx_factor_sq_bound.unwrap())
    );
    let exact = cvp_bruteforce(&b, &target).unwrap();
    println!(
        "exact: {} at squared distance {}",
        fmt(&exact.vector),
        format_rat(&exact.distance_sq)
    );

    // Question 1: shortest member restricting to x_P on {p}
    let l_pq = LabeledMatrix::from_i64(ground(["p", "q"]), &[&[1, 3], &[0, 5]]).unwrap();
    let x_p = LabeledVector::from_i64(ground(["p"]), &[1]).unwrap();
    let q1 = shortest_with_restriction(&l_pq, &x_p, CvpMode::Exact).unwrap();
    println!("Q1: shortest member with p-part 1 is {}", fmt(&q1));

    // Question 2: shortest member projecting onto span{(1,0)} as (1,0)
    let l = LabeledMatrix::identity(ground(["x", "y"]));
    let axis = LabeledMatrix::from_i64(ground(["x", "y"]), &[&[1, 0]]).unwrap();
    let x_proj = LabeledVector::from_i64(ground(["x", "y"]), &[1, 0]).unwrap();
    let q2 = shortest_preimage_projection(&l, &axis, &x_proj, CvpMode::Exact).unwrap();
    println!("Q2: shortest preimage of the projection (1,0) is {}", fmt(&q2));

    // Question 3: shortest partner across a regular linking space
    let rep = LabeledMatrix::from_i64(
        ground(["s1", "s2", "p1", "p2"]),
        &[&[1, 0, 1, 0], &[0, 1, 0, 1]],
    )
    .unwrap();
    let v = RegularSpace::from_tu_rep(&rep, None).unwrap();
    let l_p = LabeledMatrix::from_i64(ground(["p1", "p2"]), &[&[2, 1], &[0, 3]]).unwrap();
    let x_s = LabeledVector::from_i64(ground(["s1", "s2"]), &[2, 4]).unwrap();
    let q3 = shortest_linked(&v, &l_p, &x_s, CvpMode::Exact).unwrap();
    println!("Q3: shortest x_P linked to (2,4) is {}", fmt(&q3));
    let q3_approx = shortest_linked(&v, &l_p, &x_s, CvpMode::NearestPlane).unwrap();
    println!("Q3 (Babai mode): {}", fmt(&q3_approx));
}
