//! JSON fixtures: diagrams, matrices, Lie bialgebras, Hopf algebras and Coxeter witnesses.
//!
//! Rationals are strings such as `"-1/3"`; q-scalars are maps from exponent to coefficient,
//! both as rational strings. Vertices are numbered from 1.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{format_rational, parse_rational, QMat, QScalar, QqMat, Rational};
use crate::bialgebra::{sl2_borel, LieAlgebra, LieBialgebra};
use crate::braid::{coxeter_labels_from_gcm, CoxeterLabel, LabelledDiagram};
use crate::coxeter::{quantum_witness, CoxeterWitness};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::hopf::{cyclic_group_algebra, sweedler, HopfAlgebra};
use crate::quantum::{fundamentals, QuantumGroupData};
use crate::realization::{counterexample, to_int_matrix};

pub type RatMatrix = Vec<Vec<String>>;
pub type QMatrix = Vec<Vec<QEntry>>;

/// A q-scalar: a Laurent map, or a quotient of two Laurent maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum QEntry {
    Laurent(BTreeMap<String, String>),
    Fraction { num: BTreeMap<String, String>, den: BTreeMap<String, String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFixture {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFixture {
    pub entries: RatMatrix,
}

/// `bracket[k]` is `ad(x_k)`; `cobracket[k][i][j]` is the coefficient of `x_i ⊗ x_j` in `δ(x_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BialgebraFixture {
    pub bracket: Vec<RatMatrix>,
    pub cobracket: Vec<RatMatrix>,
}

/// `mult[i][j]` is `e_i e_j` as a coefficient vector; `antipode` has columns `S(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFixture {
    pub mult: Vec<Vec<Vec<String>>>,
    pub comult: Vec<RatMatrix>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    pub antipode: RatMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelledEdge {
    pub i: usize,
    pub j: usize,
    /// An integer of at least 3, or `"inf"`.
    pub m: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessModule {
    pub name: String,
    /// One q-scalar matrix per vertex.
    pub operators: Vec<QMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessFixture {
    pub vertices: usize,
    pub edges: Vec<LabelledEdge>,
    pub modules: Vec<WitnessModule>,
}

/// A fixture file, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Fixture {
    Diagram(DiagramFixture),
    Matrix(MatrixFixture),
    Bialgebra(BialgebraFixture),
    Hopf(HopfFixture),
    Witness(WitnessFixture),
}

fn rat_matrix(m: &RatMatrix) -> Result<QMat> {
    let cols = m.first().map_or(0, Vec::len);
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse("ragged matrix".into()));
    }
    let rows = m.iter().map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
    Ok(QMat::from_entries(rows.len(), cols, rows.into_iter().enumerate().flat_map(|(i, r)| r.into_iter().enumerate().map(move |(j, x)| (i, j, x)))))
}

fn write_rat_matrix(m: &QMat) -> RatMatrix {
    m.to_dense().iter().map(|r| r.iter().map(format_rational).collect()).collect()
}

fn rat_vector(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|s| parse_rational(s)).collect()
}

/// Parses an exponent/coefficient map.
pub fn parse_qscalar(m: &BTreeMap<String, String>) -> Result<QScalar> {
    let terms = m.iter().map(|(e, c)| Ok((parse_rational(e)?, parse_rational(c)?))).collect::<Result<Vec<_>>>()?;
    Ok(QScalar::from_laurent(terms.iter().map(|(e, c)| (e, c))))
}

/// Exponent/coefficient map of a Laurent q-scalar.
pub fn write_qscalar(x: &QScalar) -> Result<BTreeMap<String, String>> {
    let l = x.to_laurent().ok_or_else(|| Error::Invalid(format!("{x} is not a Laurent polynomial")))?;
    Ok(l.iter().map(|(e, c)| (format_rational(e), format_rational(c))).collect())
}

pub fn parse_qentry(x: &QEntry) -> Result<QScalar> {
    match x {
        QEntry::Laurent(m) => parse_qscalar(m),
        QEntry::Fraction { num, den } => parse_qscalar(num)?.div(&parse_qscalar(den)?),
    }
}

pub fn write_qentry(x: &QScalar) -> Result<QEntry> {
    if x.is_laurent() {
        return Ok(QEntry::Laurent(write_qscalar(x)?));
    }
    let (num, den) = x.fraction();
    Ok(QEntry::Fraction { num: write_qscalar(&num)?, den: write_qscalar(&den)? })
}

fn q_matrix(m: &QMatrix) -> Result<QqMat> {
    let cols = m.first().map_or(0, Vec::len);
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse("ragged matrix".into()));
    }
    let mut out = QqMat::zeros(m.len(), cols);
    for (i, r) in m.iter().enumerate() {
        for (j, x) in r.iter().enumerate() {
            out.set(i, j, parse_qentry(x)?);
        }
    }
    Ok(out)
}

fn write_q_matrix(m: &QqMat) -> Result<QMatrix> {
    m.to_dense().iter().map(|r| r.iter().map(write_qentry).collect()).collect()
}

fn zero_based(v: usize, n: usize) -> Result<usize> {
    if v == 0 || v > n {
        return Err(Error::Parse(format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

impl Fixture {
    pub fn kind(&self) -> &'static str {
        match self {
            Fixture::Diagram(_) => "diagram",
            Fixture::Matrix(_) => "matrix",
            Fixture::Bialgebra(_) => "bialgebra",
            Fixture::Hopf(_) => "hopf",
            Fixture::Witness(_) => "witness",
        }
    }

    /// Parses and validates the payload against its kind.
    pub fn from_json(s: &str) -> Result<Fixture> {
        let f: Fixture = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        f.validate()?;
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixtures serialize")
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Fixture::Diagram(_) => self.diagram().map(|_| ()),
            Fixture::Matrix(_) => self.matrix().map(|_| ()),
            Fixture::Bialgebra(_) => self.bialgebra().map(|_| ()),
            Fixture::Hopf(_) => self.hopf().map(|_| ()),
            Fixture::Witness(_) => self.witness().map(|_| ()),
        }
    }

    fn wrong_kind(&self, want: &str) -> Error {
        Error::Invalid(format!("expected a {want} fixture, found {}", self.kind()))
    }

    pub fn diagram(&self) -> Result<Diagram> {
        let Fixture::Diagram(d) = self else { return Err(self.wrong_kind("diagram")) };
        if d.vertices > 64 {
            return Err(Error::Invalid("at most 64 vertices are supported".into()));
        }
        let edges = d.edges.iter().map(|[a, b]| Ok((zero_based(*a, d.vertices)?, zero_based(*b, d.vertices)?))).collect::<Result<Vec<_>>>()?;
        Diagram::new(d.vertices, &edges)
    }

    pub fn matrix(&self) -> Result<QMat> {
        let Fixture::Matrix(m) = self else { return Err(self.wrong_kind("matrix")) };
        rat_matrix(&m.entries)
    }

    pub fn bialgebra(&self) -> Result<LieBialgebra> {
        let Fixture::Bialgebra(b) = self else { return Err(self.wrong_kind("bialgebra")) };
        let ad = b.bracket.iter().map(rat_matrix).collect::<Result<Vec<_>>>()?;
        let cob = b.cobracket.iter().map(rat_matrix).collect::<Result<Vec<_>>>()?;
        LieBialgebra::new(LieAlgebra::from_ad(ad)?, cob)
    }

    pub fn hopf(&self) -> Result<HopfAlgebra> {
        let Fixture::Hopf(h) = self else { return Err(self.wrong_kind("hopf")) };
        let mult = h
            .mult
            .iter()
            .map(|row| row.iter().map(|v| Ok(QMat::column(rat_vector(v)?))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let comult = h.comult.iter().map(rat_matrix).collect::<Result<Vec<_>>>()?;
        HopfAlgebra::new(mult, comult, QMat::column(rat_vector(&h.unit)?), rat_vector(&h.counit)?, rat_matrix(&h.antipode)?)
    }

    pub fn witness(&self) -> Result<CoxeterWitness<QScalar>> {
        let Fixture::Witness(w) = self else { return Err(self.wrong_kind("witness")) };
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for e in &w.edges {
            let (a, b) = (zero_based(e.i, w.vertices)?, zero_based(e.j, w.vertices)?);
            let m = if e.m == "inf" {
                CoxeterLabel::Infinity
            } else {
                CoxeterLabel::Finite(e.m.parse().map_err(|_| Error::Parse(format!("bad label `{}`", e.m)))?)
            };
            edges.push((a, b));
            labels.push(((a, b), m));
        }
        let labels = LabelledDiagram::new(Diagram::new(w.vertices, &edges)?, &labels)?;
        let modules = w
            .modules
            .iter()
            .map(|m| Ok((m.name.clone(), m.operators.iter().map(q_matrix).collect::<Result<Vec<_>>>()?)))
            .collect::<Result<Vec<_>>>()?;
        CoxeterWitness::new(labels, modules)
    }

    pub fn from_diagram(d: &Diagram) -> Fixture {
        Fixture::Diagram(DiagramFixture { vertices: d.vertex_count(), edges: d.edges().iter().map(|&(a, b)| [a + 1, b + 1]).collect() })
    }

    pub fn from_matrix(m: &QMat) -> Fixture {
        Fixture::Matrix(MatrixFixture { entries: write_rat_matrix(m) })
    }

    pub fn from_bialgebra(b: &LieBialgebra) -> Fixture {
        Fixture::Bialgebra(BialgebraFixture {
            bracket: (0..b.dim()).map(|k| write_rat_matrix(b.lie.ad(k))).collect(),
            cobracket: b.cobracket.iter().map(write_rat_matrix).collect(),
        })
    }

    pub fn from_hopf(h: &HopfAlgebra) -> Fixture {
        let col = |c: &QMat| (0..c.rows()).map(|i| format_rational(&c.get(i, 0))).collect::<Vec<_>>();
        Fixture::Hopf(HopfFixture {
            mult: h.mult.iter().map(|r| r.iter().map(col).collect()).collect(),
            comult: h.comult.iter().map(write_rat_matrix).collect(),
            unit: col(&h.unit),
            counit: h.counit.iter().map(format_rational).collect(),
            antipode: write_rat_matrix(&h.antipode),
        })
    }

    pub fn from_witness(w: &CoxeterWitness<QScalar>) -> Result<Fixture> {
        let d = &w.labels.diagram;
        let edges = d
            .edges()
            .into_iter()
            .map(|(a, b)| LabelledEdge { i: a + 1, j: b + 1, m: w.labels.label(a, b).to_string() })
            .collect();
        let modules = w
            .modules
            .iter()
            .map(|(name, ops)| Ok(WitnessModule { name: name.clone(), operators: ops.iter().map(write_q_matrix).collect::<Result<Vec<_>>>()? }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Fixture::Witness(WitnessFixture { vertices: d.vertex_count(), edges, modules }))
    }
}

/// Names accepted by [`named`].
pub const NAMED: [&str; 11] = [
    "a3",
    "counterexample-1",
    "counterexample-2",
    "counterexample-3",
    "zero-3",
    "sl2-borel",
    "z2",
    "z3",
    "sweedler",
    "a2-witness",
    "b2-witness",
];

/// Bundled fixtures.
pub fn named(name: &str) -> Result<Fixture> {
    let gcm_witness = |data: QuantumGroupData| -> Result<Fixture> {
        let (v, w) = fundamentals(&data)?;
        let (nv, nw) = (v.dim.to_string(), w.dim.to_string());
        Fixture::from_witness(&quantum_witness(&data, &[(nv, v), (nw, w)])?)
    };
    match name {
        "a3" => Ok(Fixture::from_diagram(&Diagram::type_a(3))),
        "counterexample-1" | "counterexample-2" | "counterexample-3" => {
            let k = name.trim_start_matches("counterexample-").parse().expect("digit");
            Ok(Fixture::from_matrix(&counterexample(k).expect("bundled")))
        }
        "zero-3" => Ok(Fixture::from_matrix(&QMat::zeros(3, 3))),
        "sl2-borel" => Ok(Fixture::from_bialgebra(&sl2_borel(1))),
        "z2" => Ok(Fixture::from_hopf(&cyclic_group_algebra(2))),
        "z3" => Ok(Fixture::from_hopf(&cyclic_group_algebra(3))),
        "sweedler" => Ok(Fixture::from_hopf(&sweedler())),
        "a2-witness" => gcm_witness(QuantumGroupData::a2()),
        "b2-witness" => gcm_witness(QuantumGroupData::b2()),
        _ => Err(Error::NotFound(format!("no bundled fixture `{name}`"))),
    }
}

/// Labelled diagram of an integer GCM fixture.
pub fn labels_of_matrix(m: &QMat) -> Result<LabelledDiagram> {
    let a = to_int_matrix(m).ok_or_else(|| Error::Invalid("matrix is not integral".into()))?;
    coxeter_labels_from_gcm(&a)
}
