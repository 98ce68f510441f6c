//! JSON and CSV file formats.
//!
//! - matrix: `{"n": 3, "rows": [[...], ...]}`, row-major;
//! - polynomial: `{"coeffs": [c_d, ..., c_0]}`, descending powers;
//! - spectrum: `{"values": [[re, im], ...]}`;
//! - form matrix: `{"n": .., "m": .., "kind": "psi", "entries": [[...]]}`, or dense CSV.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forms::{FormKind, FormMatrix};
use crate::linalg::{Matrix, RealPoly};
use crate::spectrum::Spectrum;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyFile {
    pub coeffs: Vec<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumFile {
    pub values: Vec<[f64; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FormFile {
    pub n: usize,
    pub m: usize,
    pub kind: FormKind,
    pub entries: Vec<Vec<f64>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::input("json", e.to_string())
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(json_error)?;
    if file.rows.len() != file.n {
        return Err(Error::input(
            "rows",
            format!("n = {} but {} rows given", file.n, file.rows.len()),
        ));
    }
    Matrix::from_rows(&file.rows)
}

pub fn matrix_to_json(a: &Matrix) -> String {
    serde_json::to_string(&MatrixFile {
        n: a.order(),
        rows: a.to_rows(),
    })
    .expect("finite matrix serializes")
}

pub fn parse_poly(text: &str) -> Result<RealPoly> {
    let file: PolyFile = serde_json::from_str(text).map_err(json_error)?;
    RealPoly::new(file.coeffs)
}

pub fn parse_spectrum(text: &str) -> Result<Spectrum> {
    let file: SpectrumFile = serde_json::from_str(text).map_err(json_error)?;
    Spectrum::new(
        file.values
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect(),
    )
}

pub fn spectrum_to_json(s: &Spectrum) -> String {
    serde_json::to_string(&SpectrumFile {
        values: s.values().iter().map(|z| [z.re, z.im]).collect(),
    })
    .expect("finite spectrum serializes")
}

pub fn form_to_json(f: &FormMatrix) -> String {
    serde_json::to_string(&FormFile {
        n: f.n,
        m: f.m,
        kind: f.kind,
        entries: f.matrix.to_rows(),
    })
    .expect("finite form serializes")
}

/// Dense CSV, one matrix row per line, shortest round-trip float formatting.
pub fn form_to_csv(f: &FormMatrix) -> String {
    let mut out = String::new();
    for i in 0..f.dim() {
        let line: Vec<String> = f.matrix.row(i).iter().map(|x| format!("{x:?}")).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}
