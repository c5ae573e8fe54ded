//! JSON algebra files.
//!
//! Schema: `field` ({"kind":"rational"} or {"kind":"cyclotomic","order":n}),
//! `dimension`, `basis_labels`, `unit` (scalar strings), `structure` (sparse
//! [i, j, k, scalar-string] quadruples, 0-based), optional `form` (the values
//! of a linear form on the basis).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Algebra, AlgebraError};
use crate::scalar::{format_scalar, parse_scalar, FieldSpec, Scalar};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpecFile {
    Rational,
    Cyclotomic { order: u32 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldSpecFile,
    pub dimension: usize,
    pub basis_labels: Vec<String>,
    pub unit: Vec<String>,
    pub structure: Vec<(usize, usize, usize, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<String>>,
}

impl TryFrom<&FieldSpecFile> for FieldSpec {
    type Error = AlgebraError;
    fn try_from(f: &FieldSpecFile) -> Result<FieldSpec, AlgebraError> {
        match f {
            FieldSpecFile::Rational => Ok(FieldSpec::Rational),
            FieldSpecFile::Cyclotomic { order } => Ok(FieldSpec::cyclotomic(*order)?),
        }
    }
}

/// Parses and fully validates an algebra file; also returns the optional form.
pub fn algebra_from_json(text: &str) -> Result<(Arc<Algebra>, Option<Vec<Scalar>>), AlgebraError> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| AlgebraError::File(e.to_string()))?;
    let field = FieldSpec::try_from(&file.field)?;
    if file.basis_labels.len() != file.dimension {
        return Err(AlgebraError::File(format!(
            "dimension {} but {} basis labels",
            file.dimension,
            file.basis_labels.len()
        )));
    }
    let parse = |s: &str| parse_scalar(s, field).map_err(AlgebraError::Scalar);
    let unit: Vec<Scalar> = file.unit.iter().map(|s| parse(s)).collect::<Result<_, _>>()?;
    let structure: Vec<(usize, usize, usize, Scalar)> = file
        .structure
        .iter()
        .map(|(i, j, k, s)| Ok((*i, *j, *k, parse(s)?)))
        .collect::<Result<_, AlgebraError>>()?;
    let algebra = Algebra::new(field, file.basis_labels, &structure, unit)?;
    let form = match file.form {
        None => None,
        Some(values) => {
            if values.len() != algebra.dim() {
                return Err(AlgebraError::File(format!(
                    "form has {} entries for dimension {}",
                    values.len(),
                    algebra.dim()
                )));
            }
            Some(values.iter().map(|s| parse(s)).collect::<Result<_, _>>()?)
        }
    };
    Ok((algebra, form))
}

pub fn algebra_to_json(algebra: &Algebra, form: Option<&[Scalar]>) -> String {
    let field = match algebra.field() {
        FieldSpec::Rational => FieldSpecFile::Rational,
        FieldSpec::Cyclotomic { order } => FieldSpecFile::Cyclotomic { order },
    };
    let mut structure = Vec::new();
    for i in 0..algebra.dim() {
        for j in 0..algebra.dim() {
            for (k, c) in algebra.product_coeffs(i, j) {
                structure.push((i, j, *k, format_scalar(c)));
            }
        }
    }
    let file = AlgebraFile {
        field,
        dimension: algebra.dim(),
        basis_labels: algebra.labels().to_vec(),
        unit: algebra.unit_coeffs().iter().map(format_scalar).collect(),
        structure,
        form: form.map(|f| f.iter().map(format_scalar).collect()),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{
            "field": {"kind": "rational"},
            "dimension": 2,
            "basis_labels": ["e", "x"],
            "unit": ["1", "0"],
            "structure": [[0,0,0,"1"], [0,1,1,"1"], [1,0,1,"1"], [1,1,0,"1"]],
            "form": ["1", "1/2"]
        }"#;
        let (alg, form) = algebra_from_json(text).unwrap();
        assert_eq!(alg.dim(), 2);
        let form = form.unwrap();
        assert_eq!(format_scalar(&form[1]), "1/2");
        let back = algebra_to_json(&alg, Some(&form));
        let (alg2, form2) = algebra_from_json(&back).unwrap();
        assert_eq!(*alg, *alg2);
        assert_eq!(form, form2.unwrap());
    }

    #[test]
    fn bad_files_rejected() {
        assert!(algebra_from_json("not json").is_err());
        // unit vector that fails the unit law
        let text = r#"{
            "field": {"kind": "rational"},
            "dimension": 1,
            "basis_labels": ["e"],
            "unit": ["2"],
            "structure": [[0,0,0,"1"]]
        }"#;
        assert!(matches!(
            algebra_from_json(text),
            Err(AlgebraError::BadUnit(_))
        ));
    }
}
