//! The `.code.json` code descriptor.
//!
//! ```json
//! { "field": {"p": 2, "r": 1}, "n": 5, "construction": "circulant",
//!   "first_row": [0, 0, 1, 1, 0], "C": "zero-sum", "k": 1 }
//! ```
//!
//! `matrixL` descriptors give `L` and optionally `D` (default: the upper split of `L`);
//! `generic` descriptors give `pairs` (`{"a": [..], "b": [..]}`) and `phases`.
//! `C` defaults to `"zero-sum"` and may also be an explicit list of basis rows.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx, PhaseExp};
use crate::pauli::SympPair;
use crate::stabcode::{build_from_ld, build_generic, PhaseRule, StabilizerCode};
use crate::veclin::{circulant, split_upper, FqMat, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u32,
    #[serde(default = "one")]
    pub r: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

fn one() -> u32 {
    1
}

impl FieldSpec {
    pub fn of(field: &FieldCtx) -> FieldSpec {
        FieldSpec { p: field.p(), r: field.r(), modulus: field.modulus().map(<[u32]>::to_vec) }
    }

    pub fn to_field(&self) -> Result<FieldCtx> {
        FieldCtx::new(self.p, self.r, self.modulus.as_deref())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Construction {
    #[serde(rename = "circulant")]
    Circulant,
    #[serde(rename = "matrixL")]
    MatrixL,
    #[serde(rename = "generic")]
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CSpec {
    Named(String),
    Basis(Vec<Vec<u64>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairSpec {
    pub a: Vec<u64>,
    pub b: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeDescriptor {
    pub field: FieldSpec,
    pub n: usize,
    pub construction: Construction,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_row: Option<Vec<u64>>,
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<Vec<u64>>>,
    #[serde(rename = "D", default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phases: Option<Vec<u64>>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<CSpec>,
    /// Declared dimension, checked against the built code.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

fn require<T>(v: &Option<T>, name: &str, construction: &str) -> Result<T>
where
    T: Clone,
{
    v.clone().ok_or_else(|| Error::Parse(format!("{construction} descriptor needs `{name}`")))
}

fn elems(field: &FieldCtx, v: &[u64]) -> Result<Vec<Elem>> {
    v.iter().map(|&x| field.check(x)).collect()
}

fn matrix(field: &FieldCtx, rows: &[Vec<u64>], n: usize, name: &str) -> Result<FqMat> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("{name} must be {n}x{n}")));
    }
    FqMat::from_rows(field, rows)
}

impl CodeDescriptor {
    pub fn parse(text: &str) -> Result<CodeDescriptor> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<CodeDescriptor> {
        CodeDescriptor::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes") + "\n"
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        Ok(std::fs::write(path, self.to_json())?)
    }

    fn subspace(&self, field: &FieldCtx) -> Result<Subspace> {
        match &self.c {
            None => Subspace::zero_sum(field, self.n),
            Some(CSpec::Named(s)) if s == "zero-sum" => Subspace::zero_sum(field, self.n),
            Some(CSpec::Named(s)) => Err(Error::Parse(format!("unknown subspace {s:?}"))),
            Some(CSpec::Basis(rows)) => {
                let vs = rows
                    .iter()
                    .map(|r| {
                        if r.len() != self.n {
                            return Err(Error::LengthMismatch { left: r.len(), right: self.n });
                        }
                        elems(field, r)
                    })
                    .collect::<Result<Vec<_>>>()?;
                let c = Subspace::span(field, self.n, &vs);
                if c.dim() != vs.len() {
                    return Err(Error::DependentGenerators);
                }
                Ok(c)
            }
        }
    }

    /// Builds and validates the described code.
    pub fn to_code(&self) -> Result<StabilizerCode> {
        let field = self.field.to_field()?;
        let n = self.n;
        let code = match self.construction {
            Construction::Circulant => {
                let row = elems(&field, &require(&self.first_row, "first_row", "circulant")?)?;
                if row.len() != n {
                    return Err(Error::LengthMismatch { left: row.len(), right: n });
                }
                let l = circulant(&field, &row);
                let d = split_upper(&l)?;
                build_from_ld(&l, &d, &self.subspace(&field)?)?
            }
            Construction::MatrixL => {
                let l = matrix(&field, &require(&self.l, "L", "matrixL")?, n, "L")?;
                let d = match &self.d {
                    Some(rows) => matrix(&field, rows, n, "D")?,
                    None => split_upper(&l)?,
                };
                if !l.is_symmetric() {
                    return Err(Error::NotSymmetric);
                }
                build_from_ld(&l, &d, &self.subspace(&field)?)?
            }
            Construction::Generic => {
                let pairs = require(&self.pairs, "pairs", "generic")?
                    .iter()
                    .map(|pr| SympPair::new(elems(&field, &pr.a)?, elems(&field, &pr.b)?))
                    .collect::<Result<Vec<_>>>()?;
                let phases = self
                    .phases
                    .clone()
                    .unwrap_or_else(|| vec![0; pairs.len()])
                    .iter()
                    .map(|&ph| {
                        u8::try_from(ph)
                            .map(PhaseExp)
                            .map_err(|_| Error::InconsistentPhases(format!("phase exponent {ph} out of range")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                build_generic(&field, n, &pairs, &phases)?
            }
        };
        if let Some(k) = self.k {
            if k != code.k() {
                return Err(Error::DimensionMismatch(format!("declared k = {k}, built code has k = {}", code.k())));
            }
        }
        Ok(code)
    }

    /// A descriptor that rebuilds `code` (as `matrixL` or `generic`), with `k` filled in.
    pub fn from_code(code: &StabilizerCode) -> CodeDescriptor {
        let field = code.field();
        let rows = |m: &FqMat| -> Vec<Vec<u64>> {
            m.to_rows().iter().map(|r| r.iter().map(|&x| x as u64).collect()).collect()
        };
        let widen = |v: &[Elem]| -> Vec<u64> { v.iter().map(|&x| x as u64).collect() };
        let mut desc = CodeDescriptor {
            field: FieldSpec::of(field),
            n: code.n(),
            construction: Construction::Generic,
            first_row: None,
            l: None,
            d: None,
            pairs: None,
            phases: None,
            c: None,
            k: Some(code.k()),
        };
        match code.phase_rule() {
            PhaseRule::Quadratic { l, d, c } => {
                desc.construction = Construction::MatrixL;
                desc.l = Some(rows(l));
                desc.d = Some(rows(d));
                desc.c = Some(if c.is_zero_sum() {
                    CSpec::Named("zero-sum".into())
                } else {
                    CSpec::Basis(c.basis().iter().map(|v| widen(v)).collect())
                });
            }
            PhaseRule::Generic { phases } => {
                desc.pairs =
                    Some(code.generators().iter().map(|g| PairSpec { a: widen(&g.a), b: widen(&g.b) }).collect());
                desc.phases = Some(phases.iter().map(|ph| ph.0 as u64).collect());
            }
        }
        desc
    }
}
