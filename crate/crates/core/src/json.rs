//! JSON wire formats. Rationals travel as strings `"p/q"` (or `"p"`),
//! matrices as arrays of row arrays.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, BimoduleAction, Element, WmData};
use crate::error::{Error, Result};
use crate::factor::FactorizationCertificate;
use crate::linalg::{format_rational, parse_rational, Matrix, Rational};
use crate::multitrace::Multitrace;
use crate::sylvester::{BimoduleProblem, SylvesterSolution};

pub type RatStr = String;
pub type MatrixJson = Vec<Vec<RatStr>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dim: usize,
    pub labels: Vec<String>,
    pub unit: Vec<RatStr>,
    pub structure: Vec<Vec<Vec<RatStr>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wm: Option<WmJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WmJson {
    pub blocks: Vec<usize>,
    /// `matrix_units[k][p][q]` is the coordinate vector of `E^{(k)}_{pq}`.
    pub matrix_units: Vec<Vec<Vec<Vec<RatStr>>>>,
    pub radical: Vec<Vec<RatStr>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementJson {
    pub coords: Vec<RatStr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub x: ElementJson,
    pub y: ElementJson,
    pub target: ElementJson,
    pub verified: bool,
    pub lambda_shifts: Vec<RatStr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleProblemJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m_dim: Option<usize>,
    pub left_op: MatrixJson,
    pub right_op: MatrixJson,
    pub rhs: Vec<RatStr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SylvesterJson {
    /// `unique`, `non_unique` or `no_solution`
    pub status: String,
    pub x: Vec<RatStr>,
    pub kernel: Vec<Vec<RatStr>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleActionJson {
    pub dim: usize,
    pub left: Vec<MatrixJson>,
    pub right: Vec<MatrixJson>,
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}

pub fn rat_to_json(x: &Rational) -> RatStr {
    format_rational(x)
}

pub fn rat_from_json(s: &str) -> Result<Rational> {
    parse_rational(s).ok_or_else(|| schema(format!("not a rational: {s:?}")))
}

pub fn vec_to_json(v: &[Rational]) -> Vec<RatStr> {
    v.iter().map(rat_to_json).collect()
}

pub fn vec_from_json(v: &[RatStr]) -> Result<Vec<Rational>> {
    v.iter().map(|s| rat_from_json(s)).collect()
}

pub fn matrix_to_json(m: &Matrix) -> MatrixJson {
    m.to_rows().iter().map(|r| vec_to_json(r)).collect()
}

pub fn matrix_from_json(m: &MatrixJson) -> Result<Matrix> {
    let rows = m.iter().map(|r| vec_from_json(r)).collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows).map_err(|_| schema("ragged matrix"))
}

pub fn element_to_json(e: &Element) -> ElementJson {
    ElementJson {
        coords: vec_to_json(e.coords()),
    }
}

pub fn element_from_json(e: &ElementJson) -> Result<Element> {
    Ok(Element::new(vec_from_json(&e.coords)?))
}

fn coords_of(dim: usize, v: &[RatStr]) -> Result<Element> {
    if v.len() != dim {
        return Err(schema(format!("coordinate vector of length {} in dimension {dim}", v.len())));
    }
    Ok(Element::new(vec_from_json(v)?))
}

pub fn wm_to_json(wm: &WmData) -> WmJson {
    WmJson {
        blocks: wm.block_sizes().to_vec(),
        matrix_units: (0..wm.block_count())
            .map(|k| {
                wm.block_units(k)
                    .iter()
                    .map(|row| row.iter().map(|u| vec_to_json(u.coords())).collect())
                    .collect()
            })
            .collect(),
        radical: wm.radical_basis().iter().map(|v| vec_to_json(v.coords())).collect(),
    }
}

pub fn algebra_to_json(alg: &Algebra, wm: Option<&WmData>) -> AlgebraJson {
    let n = alg.dim();
    AlgebraJson {
        dim: n,
        labels: alg.labels().to_vec(),
        unit: vec_to_json(alg.unit().coords()),
        structure: (0..n)
            .map(|i| (0..n).map(|j| vec_to_json(alg.structure_constant(i, j).coords())).collect())
            .collect(),
        wm: wm.map(wm_to_json),
    }
}

/// Parses and validates an algebra: associativity and unit laws are checked,
/// decomposition shapes are checked (not its algebraic relations).
pub fn algebra_from_json(j: &AlgebraJson) -> Result<(Algebra, Option<WmData>)> {
    let n = j.dim;
    if j.labels.len() != n {
        return Err(schema(format!("{} labels for dimension {n}", j.labels.len())));
    }
    if j.structure.len() != n || j.structure.iter().any(|row| row.len() != n) {
        return Err(schema(format!("structure must be a {n}x{n} table of coordinate vectors")));
    }
    let structure = j
        .structure
        .iter()
        .map(|row| row.iter().map(|v| coords_of(n, v)).collect())
        .collect::<Result<Vec<Vec<Element>>>>()?;
    let unit = coords_of(n, &j.unit)?;
    let alg = Algebra::new(j.labels.clone(), structure, unit)?;
    let wm = match &j.wm {
        None => None,
        Some(w) => {
            let units = w
                .matrix_units
                .iter()
                .map(|grid| {
                    grid.iter()
                        .map(|row| row.iter().map(|v| coords_of(n, v)).collect())
                        .collect()
                })
                .collect::<Result<Vec<Vec<Vec<Element>>>>>()?;
            let rad = w.radical.iter().map(|v| coords_of(n, v)).collect::<Result<Vec<_>>>()?;
            Some(WmData::new(w.blocks.clone(), units, rad)?)
        }
    };
    Ok((alg, wm))
}

pub fn certificate_to_json(c: &FactorizationCertificate) -> CertificateJson {
    CertificateJson {
        x: element_to_json(&c.x),
        y: element_to_json(&c.y),
        target: element_to_json(&c.target),
        verified: c.verified,
        lambda_shifts: vec_to_json(&c.lambda_shifts),
    }
}

pub fn certificate_from_json(c: &CertificateJson) -> Result<FactorizationCertificate> {
    Ok(FactorizationCertificate {
        x: element_from_json(&c.x)?,
        y: element_from_json(&c.y)?,
        target: element_from_json(&c.target)?,
        verified: c.verified,
        lambda_shifts: vec_from_json(&c.lambda_shifts)?,
    })
}

pub fn problem_to_json(p: &BimoduleProblem) -> BimoduleProblemJson {
    BimoduleProblemJson {
        m_dim: Some(p.m_dim()),
        left_op: matrix_to_json(p.left_op()),
        right_op: matrix_to_json(p.right_op()),
        rhs: vec_to_json(p.rhs()),
    }
}

pub fn problem_from_json(j: &BimoduleProblemJson) -> Result<BimoduleProblem> {
    let rhs = vec_from_json(&j.rhs)?;
    if let Some(m) = j.m_dim {
        if m != rhs.len() {
            return Err(schema(format!("m_dim {m} but rhs has length {}", rhs.len())));
        }
    }
    BimoduleProblem::new(matrix_from_json(&j.left_op)?, matrix_from_json(&j.right_op)?, rhs)
}

pub fn solution_to_json(s: &SylvesterSolution) -> SylvesterJson {
    let (status, x, kernel) = match s {
        SylvesterSolution::Unique(x) => ("unique", vec_to_json(x), Vec::new()),
        SylvesterSolution::NonUnique { x, kernel } => (
            "non_unique",
            vec_to_json(x),
            kernel.iter().map(|k| vec_to_json(k)).collect(),
        ),
        SylvesterSolution::NoSolution => ("no_solution", Vec::new(), Vec::new()),
    };
    SylvesterJson {
        status: status.to_string(),
        x,
        kernel,
    }
}

pub fn action_from_json(j: &BimoduleActionJson) -> Result<BimoduleAction> {
    Ok(BimoduleAction {
        dim: j.dim,
        left: j.left.iter().map(matrix_from_json).collect::<Result<_>>()?,
        right: j.right.iter().map(matrix_from_json).collect::<Result<_>>()?,
    })
}

pub fn action_to_json(a: &BimoduleAction) -> BimoduleActionJson {
    BimoduleActionJson {
        dim: a.dim,
        left: a.left.iter().map(matrix_to_json).collect(),
        right: a.right.iter().map(matrix_to_json).collect(),
    }
}

pub fn multitrace_to_json(m: &Multitrace) -> Vec<RatStr> {
    vec_to_json(m.values())
}
