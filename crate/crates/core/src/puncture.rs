//! Puncturing a pure `[[n,k,d]]` code to an `[[n−1,k+1,d−1]]` code.
//!
//! The dual `S^⊥s` is restricted to the remaining coordinates and the new stabilizer
//! is the symplectic dual of that restriction. The result carries no phase matrix and
//! is returned as a generic code with zero phases on its generators.

use crate::error::{Error, Result};
use crate::gf::{Elem, PhaseExp};
use crate::pauli::SympPair;
use crate::stabcode::{build_generic, min_distance, DistanceMode, DistanceOptions, StabilizerCode};
use crate::veclin::FqMat;

/// Punctures `code` at `coord`. The input must be pure with pure distance at least 2;
/// purity is checked by enumeration with `opts` (its mode is ignored).
pub fn puncture(code: &StabilizerCode, coord: usize, opts: &DistanceOptions) -> Result<StabilizerCode> {
    let n = code.n();
    if coord >= n {
        return Err(Error::IndexOutOfRange { index: coord, len: n });
    }
    let standard = min_distance(code, &DistanceOptions { mode: DistanceMode::Standard, early_exit: None, ..opts.clone() })?;
    let pure = min_distance(code, &DistanceOptions { mode: DistanceMode::Pure, early_exit: None, ..opts.clone() })?;
    if standard.undefined || pure.d < standard.d {
        return Err(Error::NotPure { pure_d: pure.d, d: standard.d });
    }
    if pure.d < 2 {
        return Err(Error::DistanceTooSmall(pure.d));
    }

    let field = code.field();
    let drop = |v: &[Elem]| -> Vec<Elem> {
        v.iter().enumerate().filter(|&(i, _)| i != coord).map(|(_, &x)| x).collect()
    };
    let punctured: Vec<SympPair> =
        code.dual_basis().iter().map(|v| SympPair { a: drop(&v.a), b: drop(&v.b) }).collect();
    let m = n - 1;
    let rows: Vec<Vec<Elem>> = punctured.iter().map(SympPair::concat).collect();
    let rank = FqMat::from_elem_rows(field, &rows, 2 * m).rank();
    if rank != n + code.k() {
        return Err(Error::IsotropyLost(format!(
            "punctured dual has dimension {rank}, expected {}",
            n + code.k()
        )));
    }

    // symplectic dual of the punctured space: kernel of the rows (b, −a)
    let constraints: Vec<Vec<Elem>> = punctured
        .iter()
        .map(|v| {
            let mut r = v.b.clone();
            r.extend(field.vneg(&v.a));
            r
        })
        .collect();
    let kernel = FqMat::from_elem_rows(field, &constraints, 2 * m).kernel();
    let generators: Vec<SympPair> = kernel.basis().iter().map(|v| SympPair::from_concat(v)).collect();
    let phases = vec![PhaseExp::ONE; generators.len()];
    let out = build_generic(field, m, &generators, &phases).map_err(|e| match e {
        Error::NotIsotropic(i, j) => Error::IsotropyLost(format!("generators {i} and {j} do not commute")),
        other => other,
    })?;
    if out.k() != code.k() + 1 {
        return Err(Error::IsotropyLost(format!("punctured code has k = {}, expected {}", out.k(), code.k() + 1)));
    }
    Ok(out)
}
