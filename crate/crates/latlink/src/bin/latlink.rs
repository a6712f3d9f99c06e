//! Command-line frontend: every library operation on JSON files, with
//! canonical (byte-stable) output, optional `--verify` certification and a
//! simple batch mode for commands taking one input file.

use clap::{Parser, Subcommand, ValueEnum};
use latlink::compose::{compose, compose_over, compose_via_intersection, iit_solve, CompositionKind};
use latlink::cvp::{
    babai_nearest, closest, cvp_bruteforce, shortest_linked, shortest_preimage_projection,
    shortest_with_restriction, CvpMode,
};
use latlink::dsl;
use latlink::error::Error;
use latlink::files::{
    format_vector, parse_vector_csv, read_json, write_canonical_json, BindingsFile, GraphFile,
    LatticeFile, PermFile,
};
use latlink::gnl::MinorMode;
use latlink::ground::{rank, LabeledMatrix};
use latlink::hnf::{basis_from_generators, hnf, is_unimodular, separators};
use latlink::rat::{format_rat, parse_rat, Rat};
use latlink::reduce::{
    dual_lll_from_primal, dual_linked_reduced_basis, is_lll_reduced, linked_reduced_basis,
    lll_reduce, successive_minima_bruteforce,
};
use latlink::regular::RegularSpace;
use latlink::selfdual::{apply_permutation, build_port_space, compose_self_dual, is_self_dual, Involution};
use latlink::Gnl;
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "latlink", version, about = "Exact lattice linking toolkit on JSON files")]
struct Cli {
    /// Re-check theorem pre/postconditions and print a certificate to stderr
    #[arg(long, global = true)]
    verify: bool,
    /// Batch mode: process independent input files with this many threads
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Output file (single input) or directory (batch); default: stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum MinorModeArg {
    Restrict,
    Contract,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Matched,
    Skewed,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hermite normal form of the lattice_basis rows, with the unimodular witness
    Hnf { inputs: Vec<PathBuf> },
    /// Basis of the lattice generated by the lattice_basis rows
    Basis { inputs: Vec<PathBuf> },
    /// Dual generalized number lattice
    Dual { inputs: Vec<PathBuf> },
    /// Sum of two GNLs (grounds may overlap)
    Sum { a: PathBuf, b: PathBuf },
    /// Intersection of two GNLs
    Intersect { a: PathBuf, b: PathBuf },
    /// Restriction or contraction to a label subset
    Minor {
        input: PathBuf,
        #[arg(long, value_delimiter = ',')]
        keep: Vec<String>,
        #[arg(long, value_enum)]
        mode: MinorModeArg,
    },
    /// Matched or skewed composition over the shared labels
    Compose {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// explicit middle label set (must equal the shared labels)
        #[arg(long, value_delimiter = ',')]
        shared: Option<Vec<String>>,
    },
    /// Solve K_SP <-> X = K_SQ for X, reporting feasibility and uniqueness
    IitSolve { a: PathBuf, b: PathBuf },
    /// Elementary separators of the row lattice
    Separators { inputs: Vec<PathBuf> },
    /// LLL reduction of the lattice_basis rows
    Lll {
        inputs: Vec<PathBuf>,
        #[arg(long, default_value = "3/4")]
        delta: String,
    },
    /// Swap-free LLL-reduced dual basis from a reduced primal basis
    DualLll {
        inputs: Vec<PathBuf>,
        #[arg(long, default_value = "3/4")]
        delta: String,
    },
    /// Brute-force successive minima (desk-scale oracle)
    Minima { inputs: Vec<PathBuf> },
    /// Reduced basis of the lattice linked through a regular space
    LinkedBasis {
        /// LatticeFile whose space_basis is a totally unimodular representative of V_SP
        space: PathBuf,
        /// the GNL K_P on the inner labels
        lattice: PathBuf,
        /// build the dual-linked basis instead
        #[arg(long)]
        dual: bool,
        #[arg(long, default_value = "3/4")]
        delta: String,
    },
    /// Babai nearest-plane vector for a target
    Babai {
        input: PathBuf,
        /// comma-separated rationals in ground order
        #[arg(long)]
        target: String,
    },
    /// Closest vector: Babai by default, certified brute force with --exact
    Cvp {
        input: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long)]
        exact: bool,
    },
    /// Shortest member with a prescribed restriction
    Q1 {
        input: PathBuf,
        /// target restriction, comma-separated rationals on the --on labels
        #[arg(long)]
        target: String,
        #[arg(long, value_delimiter = ',')]
        on: Vec<String>,
        #[arg(long)]
        exact: bool,
    },
    /// Shortest member with a prescribed projection onto a space
    Q2 {
        lattice: PathBuf,
        /// LatticeFile whose space_basis represents the projection space
        space: PathBuf,
        #[arg(long)]
        target: String,
        #[arg(long)]
        exact: bool,
    },
    /// Shortest linked partner of a vector across a regular space
    Q3 {
        /// LatticeFile whose space_basis is a TU representative of V_SP
        space: PathBuf,
        /// the number lattice L_P (lattice_basis rows)
        lattice: PathBuf,
        /// x_S, comma-separated rationals on the S labels in ground order
        #[arg(long)]
        target: String,
        #[arg(long)]
        exact: bool,
    },
    /// Check self-duality relative to an involution
    SelfdualCheck {
        input: PathBuf,
        /// JSON file {"pairs": [["a","b"], ...]}; identity if omitted
        #[arg(long)]
        perm: Option<PathBuf>,
    },
    /// Compose two self-dual GNLs into a certified self-dual one
    SelfdualCompose {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        perm: Option<PathBuf>,
    },
    /// V_Z ⊕ V_{Z'}^⊥ for a graph with a valid port edge set
    PortSpace {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',')]
        ports: Vec<String>,
    },
    /// Expression-language operations
    Expr {
        #[command(subcommand)]
        sub: ExprCmd,
    },
}

#[derive(Subcommand)]
enum ExprCmd {
    /// Evaluate an expression file against bindings
    Eval {
        expr_file: PathBuf,
        #[arg(long)]
        bindings: PathBuf,
    },
    /// Print the dual expression
    Dual { expr_file: PathBuf },
    /// Emit a DOT diagram (directed edges when bindings allow containment checks)
    Dot {
        expr_file: PathBuf,
        #[arg(long)]
        bindings: Option<PathBuf>,
    },
}

// ---------------------------------------------------------------------------
// output payloads
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct HnfOut {
    ground: Vec<String>,
    h: Vec<Vec<String>>,
    u: Vec<Vec<String>>,
    pivot_columns: Vec<usize>,
}

#[derive(Serialize)]
struct SeparatorsOut {
    blocks: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct MinimaOut {
    ground: Vec<String>,
    lambdas_sq: Vec<String>,
    witnesses: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct DualLllOut {
    basis: LatticeFile,
    swap_count: usize,
}

#[derive(Serialize)]
struct IitOut {
    restriction_holds: bool,
    contraction_holds: bool,
    feasible: bool,
    uniqueness_restriction_holds: Option<bool>,
    uniqueness_contraction_holds: Option<bool>,
    solution: Option<LatticeFile>,
}

#[derive(Serialize)]
struct VectorOut {
    ground: Vec<String>,
    entries: Vec<String>,
    distance_sq: Option<String>,
    mode: Option<String>,
}

#[derive(Serialize)]
struct SelfdualCheckOut {
    self_dual: bool,
}

#[derive(Serialize)]
struct SelfdualComposeOut {
    result: LatticeFile,
    certified_self_dual: bool,
}

// ---------------------------------------------------------------------------

fn read_file(path: &Path) -> std::result::Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

enum CliError {
    Io(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Lib(Error::Parse { .. }) => 1,
            CliError::Lib(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Io(m) => m.clone(),
            CliError::Lib(e) => e.to_string(),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn load_gnl(path: &Path) -> CliResult<Gnl> {
    let f: LatticeFile = read_json(&read_file(path)?)?;
    Ok(f.to_gnl()?)
}

fn load_matrix(path: &Path) -> CliResult<LabeledMatrix> {
    let f: LatticeFile = read_json(&read_file(path)?)?;
    Ok(f.matrix()?)
}

fn load_regular_space(path: &Path) -> CliResult<RegularSpace> {
    let f: LatticeFile = read_json(&read_file(path)?)?;
    Ok(RegularSpace::from_tu_rep(&f.space_matrix()?, None)?)
}

fn load_involution(path: &Option<PathBuf>) -> CliResult<Involution> {
    match path {
        None => Ok(Involution::identity()),
        Some(p) => {
            let f: PermFile = read_json(&read_file(p)?)?;
            Ok(f.to_involution()?)
        }
    }
}

fn parse_delta(s: &str) -> CliResult<Rat> {
    Ok(parse_rat(s)?)
}

struct Verifier {
    enabled: bool,
    failed: bool,
}

impl Verifier {
    fn new(enabled: bool) -> Self {
        Verifier {
            enabled,
            failed: false,
        }
    }

    fn check(&mut self, what: &str, ok: bool) {
        if !self.enabled {
            return;
        }
        if ok {
            eprintln!("verify {what}: ok");
        } else {
            eprintln!("verify {what}: FAIL");
            self.failed = true;
        }
    }
}

fn vector_out(v: &latlink::LabeledVector, distance_sq: Option<&Rat>, mode: Option<&str>) -> VectorOut {
    VectorOut {
        ground: v.ground().labels().to_vec(),
        entries: format_vector(v),
        distance_sq: distance_sq.map(format_rat),
        mode: mode.map(|m| m.to_string()),
    }
}

fn cvp_mode(exact: bool) -> CvpMode {
    if exact {
        CvpMode::Exact
    } else {
        CvpMode::NearestPlane
    }
}

fn mode_name(mode: CvpMode) -> &'static str {
    match mode {
        CvpMode::Exact => "exact",
        CvpMode::NearestPlane => "nearest-plane",
    }
}

// per-input-file commands usable in batch mode
fn unary(cmd: &Cmd) -> Option<&Vec<PathBuf>> {
    match cmd {
        Cmd::Hnf { inputs }
        | Cmd::Basis { inputs }
        | Cmd::Dual { inputs }
        | Cmd::Separators { inputs }
        | Cmd::Lll { inputs, .. }
        | Cmd::DualLll { inputs, .. }
        | Cmd::Minima { inputs } => Some(inputs),
        _ => None,
    }
}

fn run_unary(cmd: &Cmd, input: &Path, verifier: &mut Verifier) -> CliResult<String> {
    match cmd {
        Cmd::Hnf { .. } => {
            let m = load_matrix(input)?;
            let res = hnf(&m);
            verifier.check("unimodular witness |det U| = 1", is_unimodular(&res.u));
            let u_rat: Vec<Vec<Rat>> = res
                .u
                .iter()
                .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
                .collect();
            verifier.check("H = U·A", m.left_mul(&u_rat) == res.h);
            Ok(write_canonical_json(&HnfOut {
                ground: m.ground().labels().to_vec(),
                h: res
                    .h
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(format_rat).collect())
                    .collect(),
                u: res
                    .u
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect())
                    .collect(),
                pivot_columns: res.pivot_columns.clone(),
            }))
        }
        Cmd::Basis { .. } => {
            let m = load_matrix(input)?;
            let b = basis_from_generators(&m);
            verifier.check(
                "basis generates the same lattice",
                latlink::hnf::same_lattice(&m, &b)?,
            );
            Ok(write_canonical_json(&LatticeFile::from_matrix(&b)))
        }
        Cmd::Dual { .. } => {
            let k = load_gnl(input)?;
            let d = k.dualize();
            verifier.check("involution K^dd = K", d.dualize().equal(&k)?);
            verifier.check("canonical orthogonality", d.check_canonical().is_ok());
            Ok(write_canonical_json(&LatticeFile::from_gnl(&d)))
        }
        Cmd::Separators { .. } => {
            let m = load_matrix(input)?;
            let parts = separators(&m);
            if verifier.enabled {
                // direct-sum identity L = ⊕ L∘S_i, checked through HNFs
                let k = Gnl::from_lattice(&m)?;
                let mut rebuilt: Option<Gnl> = None;
                for block in &parts.blocks {
                    let piece = k.restrict(block.iter().map(|s| s.as_str()))?;
                    rebuilt = Some(match rebuilt {
                        None => piece,
                        Some(acc) => acc.sum(&piece)?,
                    });
                }
                let ok = match rebuilt {
                    Some(r) => r.equal_up_to_order(&k)?,
                    None => m.nrows() == 0,
                };
                verifier.check("direct-sum identity over the blocks", ok);
            }
            Ok(write_canonical_json(&SeparatorsOut {
                blocks: parts.blocks,
            }))
        }
        Cmd::Lll { delta, .. } => {
            let m = load_matrix(input)?;
            let delta = parse_delta(delta)?;
            let out = lll_reduce(&m, &delta)?;
            verifier.check("size reduction and Lovász hold", is_lll_reduced(&out, &delta)?);
            verifier.check(
                "output generates the same lattice",
                latlink::hnf::same_lattice(&m, &out)?,
            );
            Ok(write_canonical_json(&LatticeFile::from_matrix(&out)))
        }
        Cmd::DualLll { delta, .. } => {
            let m = load_matrix(input)?;
            let delta = parse_delta(delta)?;
            let res = dual_lll_from_primal(&m, &delta)?;
            verifier.check("zero Lovász swaps", res.swap_count == 0);
            verifier.check(
                "output is LLL-reduced",
                is_lll_reduced(&res.basis, &delta)?,
            );
            verifier.check(
                "output generates the dual lattice",
                Gnl::from_lattice(&res.basis)?.equal(&Gnl::from_lattice(&m)?.dualize())?,
            );
            Ok(write_canonical_json(&DualLllOut {
                basis: LatticeFile::from_matrix(&res.basis),
                swap_count: res.swap_count,
            }))
        }
        Cmd::Minima { .. } => {
            let m = load_matrix(input)?;
            let sm = successive_minima_bruteforce(&m)?;
            if verifier.enabled {
                let mut ok = rank(&sm.witnesses) == sm.witnesses.nrows();
                let k = Gnl::from_lattice(&m)?;
                for i in 0..sm.witnesses.nrows() {
                    ok &= sm.witnesses.row(i).norm_sq() == sm.lambdas_sq[i];
                    ok &= k.member(&sm.witnesses.row(i))?;
                }
                verifier.check("witnesses independent, members, norms = λ²", ok);
            }
            Ok(write_canonical_json(&MinimaOut {
                ground: m.ground().labels().to_vec(),
                lambdas_sq: sm.lambdas_sq.iter().map(format_rat).collect(),
                witnesses: sm
                    .witnesses
                    .rows()
                    .iter()
                    .map(|r| r.iter().map(format_rat).collect())
                    .collect(),
            }))
        }
        _ => unreachable!("not a unary command"),
    }
}

fn run_other(cli: &Cli, verifier: &mut Verifier) -> CliResult<String> {
    match &cli.cmd {
        Cmd::Sum { a, b } => {
            let (ka, kb) = (load_gnl(a)?, load_gnl(b)?);
            let s = ka.sum(&kb)?;
            verifier.check(
                "De Morgan: (K1+K2)^d = K1^d ∩ K2^d",
                s.dualize().equal(&ka.dualize().intersect(&kb.dualize())?)?,
            );
            Ok(write_canonical_json(&LatticeFile::from_gnl(&s)))
        }
        Cmd::Intersect { a, b } => {
            let (ka, kb) = (load_gnl(a)?, load_gnl(b)?);
            let s = ka.intersect(&kb)?;
            verifier.check(
                "De Morgan: (K1∩K2)^d = K1^d + K2^d",
                s.dualize().equal(&ka.dualize().sum(&kb.dualize())?)?,
            );
            Ok(write_canonical_json(&LatticeFile::from_gnl(&s)))
        }
        Cmd::Minor { input, keep, mode } => {
            let k = load_gnl(input)?;
            let mode = match mode {
                MinorModeArg::Restrict => MinorMode::Restrict,
                MinorModeArg::Contract => MinorMode::Contract,
            };
            let out = k.minor(keep.iter().map(|s| s.as_str()), mode)?;
            let dual_route = match mode {
                MinorMode::Restrict => k.dualize().contract(keep.iter().map(|s| s.as_str()))?,
                MinorMode::Contract => k.dualize().restrict(keep.iter().map(|s| s.as_str()))?,
            };
            verifier.check("dot-cross duality", out.dualize().equal(&dual_route)?);
            Ok(write_canonical_json(&LatticeFile::from_gnl(&out)))
        }
        Cmd::Compose { a, b, kind, shared } => {
            let (ka, kb) = (load_gnl(a)?, load_gnl(b)?);
            let kind = match kind {
                KindArg::Matched => CompositionKind::Matched,
                KindArg::Skewed => CompositionKind::Skewed,
            };
            let out = match shared {
                Some(p) => compose_over(&ka, &kb, kind, p)?,
                None => compose(&ka, &kb, kind)?,
            };
            verifier.check(
                "sum/contract route equals intersect/restrict route",
                out.equal(&compose_via_intersection(&ka, &kb, kind)?)?,
            );
            Ok(write_canonical_json(&LatticeFile::from_gnl(&out)))
        }
        Cmd::IitSolve { a, b } => {
            let (ka, kb) = (load_gnl(a)?, load_gnl(b)?);
            let rep = iit_solve(&ka, &kb)?;
            if let Some(sol) = &rep.solution {
                verifier.check(
                    "compose-back gives K_SQ",
                    compose(&ka, sol, CompositionKind::Matched)?.equal_up_to_order(&kb)?,
                );
            } else {
                verifier.check("infeasibility reported (no solution emitted)", true);
            }
            Ok(write_canonical_json(&IitOut {
                restriction_holds: rep.restriction_holds,
                contraction_holds: rep.contraction_holds,
                feasible: rep.feasible(),
                uniqueness_restriction_holds: rep.uniqueness_restriction_holds,
                uniqueness_contraction_holds: rep.uniqueness_contraction_holds,
                solution: rep.solution.as_ref().map(LatticeFile::from_gnl),
            }))
        }
        Cmd::LinkedBasis {
            space,
            lattice,
            dual,
            delta,
        } => {
            let v = load_regular_space(space)?;
            let k_p = load_gnl(lattice)?;
            let delta = parse_delta(delta)?;
            let reduced = lll_reduce(k_p.lattice_basis(), &delta)?;
            let link = if *dual {
                dual_linked_reduced_basis(&v, &k_p, &reduced, &delta)?
            } else {
                linked_reduced_basis(&v, &k_p, &reduced, &delta)?
            };
            verifier.check(
                "rows generate the target lattice part",
                latlink::hnf::same_lattice(&link.b_s, link.target.lattice_basis())?,
            );
            if verifier.enabled {
                let sp = Rat::from_integer(latlink::Int::from(
                    (link.b_s.ncols() * k_p.ground().len()) as u64,
                ));
                let ok = (0..link.b_s.nrows()).all(|i| {
                    link.b_s.row(i).norm_sq() <= sp.clone() * link.lifted_rows.row(i).norm_sq()
                });
                verifier.check("per-row norm chain ‖x_S‖² ≤ |S||P|·‖x_P‖²", ok);
            }
            Ok(write_canonical_json(&LatticeFile::from_matrix(&link.b_s)))
        }
        Cmd::Babai { input, target } => {
            let m = load_matrix(input)?;
            let x = parse_vector_csv(m.ground(), target)?;
            let res = babai_nearest(&m, &x, &latlink::reduce::default_delta())?;
            verifier.check(
                "result is a lattice member",
                Gnl::from_lattice(&m)?.member(&res.vector)?,
            );
            Ok(write_canonical_json(&vector_out(
                &res.vector,
                Some(&res.distance_sq),
                Some(mode_name(res.mode)),
            )))
        }
        Cmd::Cvp {
            input,
            target,
            exact,
        } => {
            let m = load_matrix(input)?;
            let x = parse_vector_csv(m.ground(), target)?;
            let res = if *exact {
                cvp_bruteforce(&m, &x)?
            } else {
                closest(&m, &x, CvpMode::NearestPlane)?
            };
            verifier.check(
                "result is a lattice member",
                Gnl::from_lattice(&m)?.member(&res.vector)?,
            );
            Ok(write_canonical_json(&vector_out(
                &res.vector,
                Some(&res.distance_sq),
                Some(mode_name(res.mode)),
            )))
        }
        Cmd::Q1 {
            input,
            target,
            on,
            exact,
        } => {
            let m = load_matrix(input)?;
            let p_ground = m.ground().restricted(on.iter().map(|s| s.as_str()))?;
            let x_p = parse_vector_csv(&p_ground, target)?;
            let ans = shortest_with_restriction(&m, &x_p, cvp_mode(*exact))?;
            verifier.check(
                "membership and restriction contract",
                Gnl::from_lattice(&m)?.member(&ans)?
                    && ans.restrict(on.iter().map(|s| s.as_str()))? == x_p,
            );
            Ok(write_canonical_json(&vector_out(
                &ans,
                None,
                Some(mode_name(cvp_mode(*exact))),
            )))
        }
        Cmd::Q2 {
            lattice,
            space,
            target,
            exact,
        } => {
            let m = load_matrix(lattice)?;
            let sf: LatticeFile = read_json(&read_file(space)?)?;
            let v = sf.space_matrix()?;
            let x_proj = parse_vector_csv(m.ground(), target)?;
            let ans = shortest_preimage_projection(&m, &v, &x_proj, cvp_mode(*exact))?;
            if verifier.enabled {
                let (on, _) = latlink::ground::project(&ans, &v)?;
                verifier.check(
                    "membership and projection contract",
                    Gnl::from_lattice(&m)?.member(&ans)? && on == x_proj,
                );
            }
            Ok(write_canonical_json(&vector_out(
                &ans,
                None,
                Some(mode_name(cvp_mode(*exact))),
            )))
        }
        Cmd::Q3 {
            space,
            lattice,
            target,
            exact,
        } => {
            let v = load_regular_space(space)?;
            let l_p = load_matrix(lattice)?;
            let s_labels: Vec<&str> = v
                .ground()
                .labels()
                .iter()
                .filter(|l| !l_p.ground().contains(l))
                .map(|s| s.as_str())
                .collect();
            let s_ground = v.ground().restricted(s_labels.iter().copied())?;
            let x_s = parse_vector_csv(&s_ground, target)?;
            let ans = shortest_linked(&v, &l_p, &x_s, cvp_mode(*exact))?;
            if verifier.enabled {
                let pair = latlink::ground::disjoint_concat(&x_s, &ans)?
                    .reordered(v.ground())?;
                verifier.check(
                    "linked-pair membership contract",
                    v.as_gnl().member(&pair)? && Gnl::from_lattice(&l_p)?.member(&ans)?,
                );
            }
            Ok(write_canonical_json(&vector_out(
                &ans,
                None,
                Some(mode_name(cvp_mode(*exact))),
            )))
        }
        Cmd::SelfdualCheck { input, perm } => {
            let k = load_gnl(input)?;
            let p = load_involution(perm)?;
            let ok = is_self_dual(&k, &p)?;
            verifier.check(
                "permutation commutes with dualization",
                apply_permutation(&k, &p)?.dualize().equal(&apply_permutation(&k.dualize(), &p)?)?,
            );
            Ok(write_canonical_json(&SelfdualCheckOut { self_dual: ok }))
        }
        Cmd::SelfdualCompose { a, b, perm } => {
            let (ka, kb) = (load_gnl(a)?, load_gnl(b)?);
            let p = load_involution(perm)?;
            let out = compose_self_dual(&ka, &kb, &p)?;
            verifier.check("output re-certified self dual", out.certified_self_dual);
            Ok(write_canonical_json(&SelfdualComposeOut {
                result: LatticeFile::from_gnl(&out.result),
                certified_self_dual: out.certified_self_dual,
            }))
        }
        Cmd::PortSpace { graph, ports } => {
            let gf: GraphFile = read_json(&read_file(graph)?)?;
            let port = build_port_space(&gf.to_edges(), ports)?;
            verifier.check(
                "space self dual relative to the copy swap",
                is_self_dual(&port.space.as_gnl(), &port.swap)?,
            );
            Ok(write_canonical_json(&LatticeFile::from_gnl(
                &port.space.as_gnl(),
            )))
        }
        Cmd::Expr { sub } => run_expr(sub, verifier),
        _ => unreachable!("unary commands handled elsewhere"),
    }
}

fn run_expr(sub: &ExprCmd, verifier: &mut Verifier) -> CliResult<String> {
    match sub {
        ExprCmd::Eval {
            expr_file,
            bindings,
        } => {
            let text = read_file(expr_file)?;
            let expr = dsl::parse(text.trim())?;
            let bf: BindingsFile = read_json(&read_file(bindings)?)?;
            let b = bf.to_bindings()?;
            let value = dsl::evaluate(&expr, &b)?;
            if verifier.enabled {
                let dual_value = dsl::evaluate(&dsl::dualize_expr(&expr), &b)?;
                verifier.check(
                    "implicit duality commuting square",
                    value.dualize().equal(&dual_value)?,
                );
            }
            Ok(write_canonical_json(&LatticeFile::from_gnl(&value)))
        }
        ExprCmd::Dual { expr_file } => {
            let text = read_file(expr_file)?;
            let expr = dsl::parse(text.trim())?;
            let dual = dsl::dualize_expr(&expr);
            verifier.check("double dual is the original", dsl::dualize_expr(&dual) == expr);
            Ok(format!("{dual}\n"))
        }
        ExprCmd::Dot {
            expr_file,
            bindings,
        } => {
            let text = read_file(expr_file)?;
            let expr = dsl::parse(text.trim())?;
            let b = match bindings {
                Some(p) => {
                    let bf: BindingsFile = read_json(&read_file(p)?)?;
                    Some(bf.to_bindings()?)
                }
                None => None,
            };
            Ok(dsl::to_dot(&expr, b.as_ref())?)
        }
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> CliResult<()> {
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
    }
}

fn batch_output_path(output: &Option<PathBuf>, input: &Path) -> PathBuf {
    let stem = input
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_else(|| "out".into());
    let name = format!("{stem}.out.json");
    match output {
        Some(dir) => dir.join(name),
        None => input.with_file_name(name),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.jobs.max(1);
    if let Some(inputs) = unary(&cli.cmd) {
        if inputs.is_empty() {
            eprintln!("error: no input files");
            return ExitCode::from(1);
        }
        if inputs.len() == 1 {
            let mut verifier = Verifier::new(cli.verify);
            return match run_unary(&cli.cmd, &inputs[0], &mut verifier) {
                Ok(text) => {
                    if verifier.failed {
                        return ExitCode::from(2);
                    }
                    match emit(&cli.output, &text) {
                        Ok(()) => ExitCode::SUCCESS,
                        Err(e) => {
                            eprintln!("error: {}", e.message());
                            ExitCode::from(e.code())
                        }
                    }
                }
                Err(e) => {
                    eprintln!("error: {}", e.message());
                    ExitCode::from(e.code())
                }
            };
        }
        // batch mode: independent files, independent outputs
        let results: Vec<(PathBuf, CliResult<String>)> = std::thread::scope(|scope| {
            let mut handles = Vec::new();
            for chunk in inputs.chunks(inputs.len().div_ceil(jobs)) {
                let cmd = &cli.cmd;
                let verify = cli.verify;
                handles.push(scope.spawn(move || {
                    chunk
                        .iter()
                        .map(|p| {
                            let mut v = Verifier::new(verify);
                            let r = run_unary(cmd, p, &mut v);
                            let r = if v.failed {
                                Err(CliError::Lib(Error::PreconditionFailed(
                                    "verification failed".into(),
                                )))
                            } else {
                                r
                            };
                            (p.clone(), r)
                        })
                        .collect::<Vec<_>>()
                }));
            }
            handles.into_iter().flat_map(|h| h.join().unwrap()).collect()
        });
        let mut worst = 0u8;
        for (input, res) in results {
            match res {
                Ok(text) => {
                    let out = batch_output_path(&cli.output, &input);
                    if let Err(e) = std::fs::write(&out, &text) {
                        eprintln!("error: {}: {e}", out.display());
                        worst = worst.max(1);
                    } else {
                        println!("{} -> {}", input.display(), out.display());
                    }
                }
                Err(e) => {
                    eprintln!("error: {}: {}", input.display(), e.message());
                    worst = worst.max(e.code());
                }
            }
        }
        return ExitCode::from(worst);
    }

    let mut verifier = Verifier::new(cli.verify);
    match run_other(&cli, &mut verifier) {
        Ok(text) => {
            if verifier.failed {
                return ExitCode::from(2);
            }
            match emit(&cli.output, &text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {}", e.message());
                    ExitCode::from(e.code())
                }
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
