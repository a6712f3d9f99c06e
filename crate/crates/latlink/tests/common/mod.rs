//! Shared random instance generators for the integration suites.
//! Everything is seeded; reruns are byte-identical.

#![allow(dead_code)]

use latlink::gnl::Gnl;
use latlink::ground::{rank, GroundSet, LabeledMatrix};
use latlink::rat::{Int, Rat};
use latlink::regular::GraphEdge;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_ground(prefix: &str, n: usize) -> GroundSet {
    GroundSet::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

pub fn rand_int_matrix(
    rng: &mut ChaCha8Rng,
    ground: &GroundSet,
    rows: usize,
    bound: i64,
) -> LabeledMatrix {
    let data: Vec<Vec<Rat>> = (0..rows)
        .map(|_| {
            (0..ground.len())
                .map(|_| Rat::from_integer(Int::from(rng.gen_range(-bound..=bound))))
                .collect()
        })
        .collect();
    LabeledMatrix::new(ground.clone(), data).unwrap()
}

/// Random basis matrix: resamples until the rows are independent.
pub fn rand_basis(
    rng: &mut ChaCha8Rng,
    ground: &GroundSet,
    rows: usize,
    bound: i64,
) -> LabeledMatrix {
    loop {
        let m = rand_int_matrix(rng, ground, rows, bound);
        if rank(&m) == rows {
            return m;
        }
    }
}

/// Random unimodular matrix as a short product of elementary operations;
/// entries stay desk-scale.
pub fn rand_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Rat>> {
    let mut u: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rat::from_integer(Int::from(1))
                    } else {
                        Rat::from_integer(Int::from(0))
                    }
                })
                .collect()
        })
        .collect();
    if n < 2 {
        return u;
    }
    for _ in 0..2 * n {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                while j == i {
                    j = rng.gen_range(0..n);
                }
                let c = Rat::from_integer(Int::from(*[-2i64, -1, 1, 2]
                    .get(rng.gen_range(0..4))
                    .unwrap()));
                for t in 0..n {
                    let add = &c * &u[j][t];
                    u[i][t] = &u[i][t] + &add;
                }
            }
            1 => {
                let i = rng.gen_range(0..n);
                let mut j = rng.gen_range(0..n);
                while j == i {
                    j = rng.gen_range(0..n);
                }
                u.swap(i, j);
            }
            _ => {
                let i = rng.gen_range(0..n);
                for t in 0..n {
                    u[i][t] = -u[i][t].clone();
                }
            }
        }
    }
    u
}

/// Random GNL mixing lattice and space parts (either may be empty).
pub fn rand_gnl(rng: &mut ChaCha8Rng, ground: &GroundSet) -> Gnl {
    let n = ground.len();
    let lat_rows = rng.gen_range(0..=n);
    let space_rows = rng.gen_range(0..=n.saturating_sub(lat_rows).min(2));
    let lat = rand_int_matrix(rng, ground, lat_rows, 4);
    let sp = rand_int_matrix(rng, ground, space_rows, 3);
    Gnl::canonicalize(&lat, &sp).unwrap()
}

/// Random GNL whose lattice part is nonempty.
pub fn rand_gnl_with_lattice(rng: &mut ChaCha8Rng, ground: &GroundSet) -> Gnl {
    loop {
        let k = rand_gnl(rng, ground);
        if k.lattice_basis().nrows() > 0 {
            return k;
        }
    }
}

/// Random connected multigraph: a spanning tree plus extra edges.
pub fn rand_connected_graph(
    rng: &mut ChaCha8Rng,
    nodes: usize,
    extra_edges: usize,
) -> Vec<GraphEdge> {
    let mut edges = Vec::new();
    let mut id = 0usize;
    for v in 1..nodes {
        let u = rng.gen_range(0..v);
        edges.push(GraphEdge::new(
            &format!("e{id}"),
            &format!("n{u}"),
            &format!("n{v}"),
        ));
        id += 1;
    }
    for _ in 0..extra_edges {
        let a = rng.gen_range(0..nodes);
        let mut b = rng.gen_range(0..nodes);
        while b == a {
            b = rng.gen_range(0..nodes);
        }
        edges.push(GraphEdge::new(
            &format!("e{id}"),
            &format!("n{a}"),
            &format!("n{b}"),
        ));
        id += 1;
    }
    edges
}

/// Applies a random unimodular row scramble to a basis.
pub fn scramble(rng: &mut ChaCha8Rng, b: &LabeledMatrix) -> LabeledMatrix {
    let u = rand_unimodular(rng, b.nrows());
    b.left_mul(&u)
}

pub fn rat_i(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}
