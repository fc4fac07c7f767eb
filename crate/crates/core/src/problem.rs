//! JSON problem and complex files.
//!
//! A problem file names a product of projective spaces and either an ideal
//! (the module is `S/I`) or a presentation matrix given by columns:
//!
//! ```json
//! {"factors": [1, 1], "characteristic": 32003,
//!  "ideal": ["x_(0,0)*x_(1,0)", "x_(0,1)*x_(1,1)"]}
//! ```

use serde::{Deserialize, Serialize};

use crate::complex::ChainComplex;
use crate::error::{AlgebraError, Result};
use crate::field::PrimeField;
use crate::ideal::Ideal;
use crate::module::{FreeModule, Matrix};
use crate::multidegree::Multidegree;
use crate::parse::parse_homogeneous;
use crate::poly::Polynomial;
use crate::ring::MultigradedRing;
use crate::submodule::Presentation;

pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub factors: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u32>,
    #[serde(default)]
    pub ideal: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
}

/// `coker` of the matrix whose columns are `columns`, with target degrees `degrees`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub degrees: Vec<Multidegree>,
    pub columns: Vec<Vec<String>>,
}

fn parse_all(ring: &MultigradedRing, texts: &[String]) -> Result<Vec<Polynomial>> {
    texts.iter().map(|t| parse_homogeneous(t, ring)).collect()
}

fn matrix_from_strings(target: FreeModule, columns: &[Vec<String>]) -> Result<Matrix> {
    let ring = target.ring().clone();
    let cols = columns
        .iter()
        .map(|c| {
            if c.len() != target.rank() {
                return Err(AlgebraError::RankMismatch { expected: target.rank(), got: c.len() });
            }
            parse_all(&ring, c)
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(target, cols)
}

fn show(p: &Polynomial) -> String {
    p.to_string()
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AlgebraError::invalid(format!("problem file: {e}")))
    }

    pub fn from_ideal(i: &Ideal) -> Self {
        ProblemFile {
            factors: i.ring().factor_dims().to_vec(),
            characteristic: Some(i.ring().field().characteristic()),
            ideal: i.gens().iter().map(show).collect(),
            module: None,
        }
    }

    /// The ring, with `fallback` as characteristic when the file names none.
    pub fn ring(&self, fallback: u32) -> Result<MultigradedRing> {
        let field = PrimeField::new(self.characteristic.unwrap_or(fallback))?;
        MultigradedRing::new(field, &self.factors)
    }

    pub fn ideal(&self, ring: &MultigradedRing) -> Result<Ideal> {
        Ideal::new(ring, parse_all(ring, &self.ideal)?)
    }

    /// The module presentation if given, else `S/I`.
    pub fn presentation(&self, ring: &MultigradedRing) -> Result<Presentation> {
        match &self.module {
            Some(m) => {
                if !self.ideal.is_empty() {
                    return Err(AlgebraError::invalid("give either an ideal or a module, not both"));
                }
                let target = FreeModule::new(ring.clone(), m.degrees.clone())?;
                Ok(Presentation::new(matrix_from_strings(target, &m.columns)?))
            }
            None => Ok(Presentation::quotient_ring(&self.ideal(ring)?)),
        }
    }
}

/// A chain complex of free modules: generator degrees of each `F_i` and the
/// columns of each `φ_i : F_i -> F_{i-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub factors: Vec<usize>,
    pub characteristic: u32,
    pub modules: Vec<Vec<Multidegree>>,
    pub differentials: Vec<Vec<Vec<String>>>,
}

impl ComplexFile {
    pub fn from_complex(c: &ChainComplex) -> Self {
        let ring = c.ring();
        ComplexFile {
            factors: ring.factor_dims().to_vec(),
            characteristic: ring.field().characteristic(),
            modules: c.modules().iter().map(|m| m.degrees().to_vec()).collect(),
            differentials: c
                .differentials()
                .iter()
                .map(|d| d.columns().iter().map(|col| col.iter().map(show).collect()).collect())
                .collect(),
        }
    }

    pub fn to_complex(&self) -> Result<ChainComplex> {
        let ring = MultigradedRing::new(PrimeField::new(self.characteristic)?, &self.factors)?;
        if self.modules.is_empty() || self.differentials.len() + 1 != self.modules.len() {
            return Err(AlgebraError::invalid("a complex needs one more module than differentials"));
        }
        let modules =
            self.modules.iter().map(|d| FreeModule::new(ring.clone(), d.clone())).collect::<Result<Vec<_>>>()?;
        let mut maps = Vec::with_capacity(self.differentials.len());
        for (i, cols) in self.differentials.iter().enumerate() {
            let (target, source) = (&modules[i], &modules[i + 1]);
            if cols.len() != source.rank() {
                return Err(AlgebraError::RankMismatch { expected: source.rank(), got: cols.len() });
            }
            let m = matrix_from_strings(target.clone(), cols)?;
            maps.push(Matrix::new(target.clone(), source.clone(), m.into_columns())?);
        }
        ChainComplex::new(modules, maps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::free_resolution;

    const THREE_POINTS: &str = r#"{"factors": [1, 1], "characteristic": 32003,
        "ideal": ["x_(0,0)*x_(1,0)", "x_(0,1)*x_(1,1)"]}"#;

    #[test]
    fn round_trips() {
        let pf = ProblemFile::from_json(THREE_POINTS).unwrap();
        let s = pf.ring(DEFAULT_CHARACTERISTIC).unwrap();
        let i = pf.ideal(&s).unwrap();
        let again = ProblemFile::from_ideal(&i);
        assert!(again.ideal(&s).unwrap().same_ideal(&i));

        let c = free_resolution(&pf.presentation(&s).unwrap());
        let back = ComplexFile::from_complex(&c).to_complex().unwrap();
        assert_eq!(back.betti(), c.betti());
        assert!(back.is_complex());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ProblemFile::from_json(r#"{"factors": [1], "ideal": ["x_(9,9)"]}"#)
            .unwrap()
            .ideal(&MultigradedRing::new(PrimeField::new(7).unwrap(), &[1]).unwrap())
            .is_err());
        assert!(ProblemFile::from_json(r#"{"factors": [1], "extra": 1}"#).is_err());
        let pf = ProblemFile::from_json(r#"{"factors": [1], "characteristic": 12}"#).unwrap();
        assert!(pf.ring(DEFAULT_CHARACTERISTIC).is_err());
    }

    #[test]
    fn module_presentation() {
        let pf = ProblemFile::from_json(
            r#"{"factors": [1], "module": {"degrees": [[0], [1]], "columns": [["x_(0,0)", "0"]]}}"#,
        )
        .unwrap();
        let s = pf.ring(101).unwrap();
        let p = pf.presentation(&s).unwrap();
        assert_eq!(p.hilbert_function(&Multidegree::from(vec![1])), 2 + 1 - 1);
    }
}
