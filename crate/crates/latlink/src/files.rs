//! JSON file formats shared by the CLI and the examples. Rationals are
//! serialized as `"p/q"` strings (`"n"` when integral) and output is
//! canonical: sorted keys, reduced rationals, LF line ends.

use crate::dsl::Bindings;
use crate::error::{Error, Result};
use crate::gnl::Gnl;
use crate::ground::{GroundSet, LabeledMatrix, LabeledVector};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::regular::GraphEdge;
use crate::selfdual::Involution;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// `{"ground": [...], "lattice_basis": [["p/q", ...]], "space_basis": [...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LatticeFile {
    pub ground: Vec<String>,
    #[serde(default)]
    pub lattice_basis: Vec<Vec<String>>,
    #[serde(default)]
    pub space_basis: Vec<Vec<String>>,
}

fn rows_to_strings(m: &LabeledMatrix) -> Vec<Vec<String>> {
    m.rows()
        .iter()
        .map(|r| r.iter().map(format_rat).collect())
        .collect()
}

fn rows_from_strings(ground: &GroundSet, rows: &[Vec<String>]) -> Result<LabeledMatrix> {
    let parsed: Result<Vec<Vec<Rat>>> = rows
        .iter()
        .map(|r| r.iter().map(|s| parse_rat(s)).collect())
        .collect();
    LabeledMatrix::new(ground.clone(), parsed?)
}

impl LatticeFile {
    pub fn from_gnl(k: &Gnl) -> Self {
        LatticeFile {
            ground: k.ground().labels().to_vec(),
            lattice_basis: rows_to_strings(k.lattice_basis()),
            space_basis: rows_to_strings(k.space_basis()),
        }
    }

    pub fn from_matrix(m: &LabeledMatrix) -> Self {
        LatticeFile {
            ground: m.ground().labels().to_vec(),
            lattice_basis: rows_to_strings(m),
            space_basis: vec![],
        }
    }

    pub fn ground_set(&self) -> Result<GroundSet> {
        GroundSet::new(self.ground.clone())
    }

    /// The lattice-basis rows as a labeled matrix.
    pub fn matrix(&self) -> Result<LabeledMatrix> {
        rows_from_strings(&self.ground_set()?, &self.lattice_basis)
    }

    /// The space-basis rows as a labeled matrix.
    pub fn space_matrix(&self) -> Result<LabeledMatrix> {
        rows_from_strings(&self.ground_set()?, &self.space_basis)
    }

    /// Canonicalizes the two generator blocks into a GNL.
    pub fn to_gnl(&self) -> Result<Gnl> {
        Gnl::canonicalize(&self.matrix()?, &self.space_matrix()?)
    }
}

/// `{"edges": [{"id": "e1", "tail": "u", "head": "v"}, ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphFile {
    pub edges: Vec<GraphEdgeFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphEdgeFile {
    pub id: String,
    pub tail: String,
    pub head: String,
}

impl GraphFile {
    pub fn to_edges(&self) -> Vec<GraphEdge> {
        self.edges
            .iter()
            .map(|e| GraphEdge::new(&e.id, &e.tail, &e.head))
            .collect()
    }
}

/// `{"pairs": [["e1", "e2"], ...]}` — unlisted labels stay fixed.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PermFile {
    pub pairs: Vec<(String, String)>,
}

impl PermFile {
    pub fn to_involution(&self) -> Result<Involution> {
        Involution::from_pairs(self.pairs.iter().cloned())
    }

    pub fn from_involution(p: &Involution) -> Self {
        PermFile {
            pairs: p.moved_pairs(),
        }
    }
}

/// Bindings for expression evaluation:
/// `{"index_sets": {"S": ["s1"]}, "bindings": {"K1": <LatticeFile>}}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BindingsFile {
    pub index_sets: BTreeMap<String, Vec<String>>,
    pub bindings: BTreeMap<String, LatticeFile>,
}

impl BindingsFile {
    pub fn to_bindings(&self) -> Result<Bindings> {
        let mut out = Bindings::default();
        for (name, labels) in &self.index_sets {
            out.index_sets.insert(name.clone(), labels.clone());
        }
        for (name, lf) in &self.bindings {
            out.gnls.insert(name.clone(), lf.to_gnl()?);
        }
        Ok(out)
    }
}

/// Canonical JSON: sorted keys (the default serde_json map is ordered),
/// pretty printing, trailing newline.
pub fn write_canonical_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("value is serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("value is serializable");
    s.push('\n');
    s
}

pub fn read_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        position: e.column(),
        message: e.to_string(),
    })
}

/// Parses an inline comma-separated rational vector against a ground set.
pub fn parse_vector_csv(ground: &GroundSet, csv: &str) -> Result<LabeledVector> {
    let entries: Result<Vec<Rat>> = csv.split(',').map(|s| parse_rat(s.trim())).collect();
    LabeledVector::new(ground.clone(), entries?)
}

pub fn format_vector(v: &LabeledVector) -> Vec<String> {
    v.entries().iter().map(format_rat).collect()
}
