//! Codeword state vectors, the code projection and Knill–Laflamme checks.
//!
//! Kets are indexed big-endian: `x ↦ Σ x_i q^{n-1-i}`.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx, PhaseExp};
use crate::par::first_in_blocks;
use crate::pauli::{labels_up_to_weight, state_dim, ErrorElement, MonomialOp, SympPair};
use crate::stabcode::StabilizerCode;

pub use crate::pauli::DEFAULT_DENSE_LIMIT;

/// Largest state dimension for which [`projection`] builds a dense matrix.
pub const DEFAULT_PROJECTION_LIMIT: usize = 1 << 10;

pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct StateVector {
    pub field: FieldCtx,
    pub n: usize,
    /// Coset representative for codewords of `(L, D, C)` codes.
    pub rep: Option<Vec<Elem>>,
    pub amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `⟨self|other⟩`
    pub fn inner(&self, other: &[Complex64]) -> Complex64 {
        self.amplitudes.iter().zip(other).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.amplitudes.len()).filter(|&i| self.amplitudes[i].norm() > TOLERANCE).collect()
    }

    /// Header `p r n k rep`, then `index re im` for each nonzero amplitude.
    pub fn dump(&self, k: usize) -> String {
        let entries = self.support().into_iter().map(|i| (i as u64, self.amplitudes[i]));
        dump_lines(&self.field, self.n, k, self.rep.as_deref(), entries)
    }
}

/// Canonical coset representatives of `C` in `F_q^n`: `c·e_1` for the zero-sum
/// subspace, otherwise the lexicographically least vector of each coset.
pub fn coset_reps(code: &StabilizerCode) -> Result<Vec<Vec<Elem>>> {
    let (_, _, c) = code.quadratic_data().ok_or(Error::NoPhaseMatrix)?;
    let field = code.field();
    let n = code.n();
    let q = field.q();
    if c.is_zero_sum() {
        return Ok((0..q)
            .map(|v| {
                let mut x = vec![0; n];
                x[0] = v as Elem;
                x
            })
            .collect());
    }
    let pivots = c.pivots();
    let free: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let total = q.checked_pow(free.len() as u32).ok_or(Error::DimensionLimitExceeded {
        dim: u128::MAX,
        limit: DEFAULT_DENSE_LIMIT,
    })?;
    let mut reps: Vec<Vec<Elem>> = (0..total)
        .map(|mut idx| {
            let mut x = vec![0; n];
            for &pos in free.iter().rev() {
                x[pos] = (idx % q) as Elem;
                idx /= q;
            }
            x
        })
        .collect();
    reps.sort();
    Ok(reps)
}

/// `ψ_{C+x}`: amplitude `|C|^{-1/2} · w(aᵀDa + aᵀLx)` at ket `a + x` for `a ∈ C`.
pub fn codeword(code: &StabilizerCode, x: &[Elem], limit: usize) -> Result<StateVector> {
    let dim = state_dim(code.field(), code.n(), limit)?;
    let sparse = sparse_codeword(code, x)?;
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
    for (idx, amp) in sparse.entries {
        amplitudes[idx as usize] = amp;
    }
    Ok(StateVector { field: code.field().clone(), n: code.n(), rep: Some(x.to_vec()), amplitudes })
}

/// A state stored by its nonzero amplitudes, sorted by ket index.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseState {
    pub n: usize,
    pub rep: Option<Vec<Elem>>,
    pub entries: Vec<(u64, Complex64)>,
}

impl SparseState {
    pub fn norm(&self) -> f64 {
        self.entries.iter().map(|(_, a)| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `⟨self|other⟩` by merging the sorted supports.
    pub fn inner(&self, other: &SparseState) -> Complex64 {
        let (mut i, mut j) = (0, 0);
        let mut acc = Complex64::new(0.0, 0.0);
        while i < self.entries.len() && j < other.entries.len() {
            let (x, a) = self.entries[i];
            let (y, b) = other.entries[j];
            match x.cmp(&y) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    acc += a.conj() * b;
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// `ω^φ U_a V_b` applied entry by entry.
    pub fn apply(&self, field: &FieldCtx, e: &ErrorElement) -> SparseState {
        let q = field.q() as u64;
        let p = field.p();
        let mut word = vec![0; self.n];
        let mut entries: Vec<(u64, Complex64)> = self
            .entries
            .iter()
            .map(|&(idx, amp)| {
                let mut rest = idx;
                for x in word.iter_mut().rev() {
                    *x = (rest % q) as Elem;
                    rest /= q;
                }
                let phase = e.phase.add(field.char_exp(field.dot(&e.pair.b, &word)), p);
                let target = word.iter().zip(&e.pair.a).fold(0, |acc, (&x, &y)| acc * q + field.add(x, y) as u64);
                (target, phase.to_complex(p) * amp)
            })
            .collect();
        entries.sort_unstable_by_key(|&(idx, _)| idx);
        SparseState { n: self.n, rep: self.rep.clone(), entries }
    }

    /// Largest amplitude difference, treating missing entries as zero.
    pub fn distance(&self, other: &SparseState) -> f64 {
        let (xs, ys) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut worst: f64 = 0.0;
        while i < xs.len() || j < ys.len() {
            let diff = match (xs.get(i), ys.get(j)) {
                (Some(&(x, a)), Some(&(y, b))) if x == y => {
                    i += 1;
                    j += 1;
                    a - b
                }
                (Some(&(x, a)), Some(&(y, _))) if x < y => {
                    i += 1;
                    a
                }
                (Some(&(_, a)), None) => {
                    i += 1;
                    a
                }
                (_, Some(&(_, b))) => {
                    j += 1;
                    -b
                }
                (None, None) => unreachable!(),
            };
            worst = worst.max(diff.norm());
        }
        worst
    }

    pub fn dump(&self, field: &FieldCtx, k: usize) -> String {
        dump_lines(field, self.n, k, self.rep.as_deref(), self.entries.iter().copied())
    }
}

fn dump_lines(
    field: &FieldCtx,
    n: usize,
    k: usize,
    rep: Option<&[Elem]>,
    entries: impl Iterator<Item = (u64, Complex64)>,
) -> String {
    let rep = match rep {
        Some(r) => r.iter().map(u8::to_string).collect::<Vec<_>>().join(","),
        None => "-".to_string(),
    };
    let mut out = format!("{} {} {} {} {}\n", field.p(), field.r(), n, k, rep);
    for (i, a) in entries {
        out.push_str(&format!("{} {:.15e} {:.15e}\n", i, a.re, a.im));
    }
    out
}

/// [`codeword`] without a dense vector; only `|C|` amplitudes are stored.
///
/// `C` is walked by an odometer on an `F_p`-basis of `C` (the products `β_i g_j`), so each
/// step adds one generator `g` and the quadratic form is updated as `q(a + g) = q(a) + (La)·g + q(g)`.
pub fn sparse_codeword(code: &StabilizerCode, x: &[Elem]) -> Result<SparseState> {
    let (l, d, c) = code.quadratic_data().ok_or(Error::NoPhaseMatrix)?;
    let field = code.field();
    let n = code.n();
    if x.len() != n {
        return Err(Error::LengthMismatch { left: x.len(), right: n });
    }
    let q = field.q();
    let p = field.p();
    let dim = state_dim(field, n, usize::MAX)? as u64;
    let basis = c.basis();
    let size = (q as u64).checked_pow(basis.len() as u32).filter(|&s| s <= dim).ok_or(
        Error::DimensionLimitExceeded { dim: dim as u128, limit: usize::MAX },
    )?;
    let steps: Vec<Vec<Elem>> = basis
        .iter()
        .flat_map(|g| (0..field.r()).map(move |i| field.scale(field.basis_element(i), g)))
        .collect();
    let lg: Vec<Vec<Elem>> = steps.iter().map(|g| l.mul_vec(g)).collect();
    let qg: Vec<Elem> = steps.iter().map(|g| d.bilinear(g, g)).collect();
    let scale = 1.0 / (size as f64).sqrt();
    let phases: Vec<Complex64> = (0..p).map(|e| PhaseExp(e as u8).to_complex(p)).collect();

    let mut digits = vec![0u32; steps.len()];
    let mut a = vec![0 as Elem; n];
    let mut la = vec![0 as Elem; n];
    let mut qa: Elem = 0;
    let mut entries = Vec::with_capacity(size as usize);
    for step in 0..size {
        if step > 0 {
            for (j, digit) in digits.iter_mut().enumerate() {
                qa = field.add(qa, field.add(field.dot(&la, &steps[j]), qg[j]));
                field.axpy(&mut a, 1, &steps[j]);
                field.axpy(&mut la, 1, &lg[j]);
                *digit += 1;
                if *digit < p {
                    break;
                }
                *digit = 0;
            }
        }
        let exp = field.trace(field.add(qa, field.dot(&la, x)));
        let idx = a.iter().zip(x).fold(0u64, |acc, (&ai, &xi)| acc * q as u64 + field.add(ai, xi) as u64);
        entries.push((idx, phases[exp as usize] * scale));
    }
    entries.sort_by_key(|&(idx, _)| idx);
    Ok(SparseState { n, rep: Some(x.to_vec()), entries })
}

/// One sparse codeword per coset representative.
pub fn all_sparse_codewords(code: &StabilizerCode) -> Result<Vec<SparseState>> {
    coset_reps(code)?.iter().map(|x| sparse_codeword(code, x)).collect()
}

/// One codeword per coset representative.
pub fn all_codewords(code: &StabilizerCode, limit: usize) -> Result<Vec<StateVector>> {
    coset_reps(code)?.iter().map(|x| codeword(code, x, limit)).collect()
}

/// An orthonormal basis of the code space. Codes with phase data use
/// [`all_codewords`]; generic codes are orthonormalized from columns of `P`.
pub fn code_space_basis(code: &StabilizerCode, limit: usize) -> Result<Vec<StateVector>> {
    if code.quadratic_data().is_some() {
        return all_codewords(code, limit);
    }
    let field = code.field();
    let n = code.n();
    let dim = state_dim(field, n, limit)?;
    let ops = stabilizer_ops(code, limit)?;
    let target = field.q().pow(code.k() as u32);
    let mut basis: Vec<StateVector> = Vec::new();
    for x in 0..dim {
        if basis.len() == target {
            break;
        }
        let mut v = projected_basis_ket(&ops, dim, x);
        for b in &basis {
            let c = b.inner(&v);
            for (vi, bi) in v.iter_mut().zip(&b.amplitudes) {
                *vi -= c * bi;
            }
        }
        let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            v.iter_mut().for_each(|a| *a /= norm);
            basis.push(StateVector { field: field.clone(), n, rep: None, amplitudes: v });
        }
    }
    if basis.len() != target {
        return Err(Error::ProjectionInvalid(format!("code space has dimension {}, expected {target}", basis.len())));
    }
    Ok(basis)
}

fn stabilizer_ops(code: &StabilizerCode, limit: usize) -> Result<Vec<MonomialOp>> {
    code.stabilizer_elements().iter().map(|e| MonomialOp::weyl(code.field(), e, limit)).collect()
}

/// Column `x` of `P = |S|^{-1} Σ U`.
fn projected_basis_ket(ops: &[MonomialOp], dim: usize, x: usize) -> Vec<Complex64> {
    let mut e = vec![Complex64::new(0.0, 0.0); dim];
    e[x] = Complex64::new(1.0, 0.0);
    let mut col = vec![Complex64::new(0.0, 0.0); dim];
    for op in ops {
        for (c, v) in col.iter_mut().zip(op.apply(&e)) {
            *c += v;
        }
    }
    let s = ops.len() as f64;
    col.iter_mut().for_each(|c| *c /= s);
    col
}

/// `P = |S|^{-1} Σ_{U ∈ S} U`, checked for `P² = P`, `P† = P` and `Tr P = q^n/|S|`.
pub fn projection(code: &StabilizerCode, limit: usize) -> Result<Array2<Complex64>> {
    let field = code.field();
    let dim = state_dim(field, code.n(), limit)?;
    let elements = code.stabilizer_elements();
    let mut p = Array2::<Complex64>::zeros((dim, dim));
    for e in &elements {
        let op = MonomialOp::weyl(field, e, limit)?;
        p += &op.to_dense();
    }
    p /= Complex64::new(elements.len() as f64, 0.0);

    let max_dev = |m: &Array2<Complex64>| m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let idem = max_dev(&(p.dot(&p) - &p));
    if idem > TOLERANCE {
        return Err(Error::ProjectionInvalid(format!("|P^2 - P| = {idem:e}")));
    }
    let herm = max_dev(&(p.t().mapv(|z| z.conj()) - &p));
    if herm > TOLERANCE {
        return Err(Error::ProjectionInvalid(format!("|P^H - P| = {herm:e}")));
    }
    let trace: Complex64 = p.diag().sum();
    let expected = dim as f64 / elements.len() as f64;
    if (trace - expected).norm() > TOLERANCE {
        return Err(Error::ProjectionInvalid(format!("Tr P = {trace}, expected {expected}")));
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq)]
pub struct KLFailure {
    pub pair: SympPair,
    pub i: usize,
    pub j: usize,
    pub observed: Complex64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KLReport {
    pub t: usize,
    pub passed: bool,
    /// Error labels examined, in canonical order, up to and including a failure.
    pub checked: usize,
    pub failure: Option<KLFailure>,
}

impl KLReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("t={}\npassed={}\nchecked={}\n", self.t, self.passed, self.checked);
        if let Some(f) = &self.failure {
            let join = |v: &[Elem]| v.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
            out.push_str(&format!(
                "witness_a={}\nwitness_b={}\ni={}\nj={}\nobserved={:.12e} {:.12e}\n",
                join(&f.pair.a),
                join(&f.pair.b),
                f.i,
                f.j,
                f.observed.re,
                f.observed.im
            ));
        }
        out
    }
}

const LABELS_PER_BLOCK: usize = 32;

/// Checks `⟨ψ_i|U_a V_b|ψ_j⟩ = λ(a,b)·δ_ij` for every label of weight `≤ 2t`.
pub fn check_kl(code: &StabilizerCode, t: usize, limit: usize, workers: usize) -> Result<KLReport> {
    let field = code.field();
    let basis = code_space_basis(code, limit)?;
    let labels = labels_up_to_weight(field, code.n(), 2 * t);
    let blocks = labels.len().div_ceil(LABELS_PER_BLOCK);
    let hit = first_in_blocks(blocks, workers, |b, cutoff| {
        let start = b * LABELS_PER_BLOCK;
        for (idx, pair) in labels.iter().enumerate().skip(start).take(LABELS_PER_BLOCK) {
            if cutoff.superseded(b) {
                return None;
            }
            let op = MonomialOp::weyl(field, &ErrorElement::new(PhaseExp::ONE, pair.clone()), limit).expect("dimension checked");
            let images: Vec<Vec<Complex64>> = basis.iter().map(|psi| op.apply(&psi.amplitudes)).collect();
            let lambda = basis[0].inner(&images[0]);
            for (i, psi) in basis.iter().enumerate() {
                for (j, img) in images.iter().enumerate() {
                    let m = psi.inner(img);
                    let expected = if i == j { lambda } else { Complex64::new(0.0, 0.0) };
                    if (m - expected).norm() > TOLERANCE {
                        return Some((idx, KLFailure { pair: pair.clone(), i, j, observed: m }));
                    }
                }
            }
        }
        None
    });
    Ok(match hit {
        Some((_, (idx, failure))) => KLReport { t, passed: false, checked: idx + 1, failure: Some(failure) },
        None => KLReport { t, passed: true, checked: labels.len(), failure: None },
    })
}

/// Applies `ω^φ U_a V_b` to a state.
pub fn apply_element(field: &FieldCtx, e: &ErrorElement, psi: &StateVector, limit: usize) -> Result<Vec<Complex64>> {
    Ok(MonomialOp::weyl(field, e, limit)?.apply(&psi.amplitudes))
}

/// Largest entrywise deviation of the Gram matrix from the identity.
pub fn orthonormality_defect(states: &[StateVector]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, a) in states.iter().enumerate() {
        for (j, b) in states.iter().enumerate() {
            let expected = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((a.inner(&b.amplitudes) - expected).norm());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::word_to_index;
    use crate::stabcode::{build_generic, circulant_code};
    use crate::veclin::{FqMat, Subspace};

    fn l5(p: u32) -> StabilizerCode {
        circulant_code(&FieldCtx::prime(p).unwrap(), &[0, 0, 1, 1, 0]).unwrap()
    }

    #[test]
    fn codeword_examples() {
        let code = l5(2);
        let psi0 = codeword(&code, &[0; 5], DEFAULT_DENSE_LIMIT).unwrap();
        assert!((psi0.amplitudes[0] - Complex64::new(0.25, 0.0)).norm() < TOLERANCE);
        assert!((psi0.norm() - 1.0).abs() < TOLERANCE);
        let (_, _, c) = code.quadratic_data().unwrap();
        let support: Vec<usize> = c.elements().iter().map(|a| word_to_index(a, 2)).collect();
        let mut sorted = support.clone();
        sorted.sort();
        assert_eq!(psi0.support(), sorted);
        let psi1 = codeword(&code, &[1, 0, 0, 0, 0], DEFAULT_DENSE_LIMIT).unwrap();
        assert!(psi0.inner(&psi1.amplitudes).norm() < TOLERANCE);
    }

    #[test]
    fn codewords_are_orthonormal_and_stabilized() {
        for p in [2, 3] {
            let code = l5(p);
            let words = all_codewords(&code, DEFAULT_DENSE_LIMIT).unwrap();
            assert_eq!(words.len(), p as usize);
            assert!(orthonormality_defect(&words) < TOLERANCE);
            for g in code.generator_elements() {
                for psi in &words {
                    let img = apply_element(code.field(), &g, psi, DEFAULT_DENSE_LIMIT).unwrap();
                    let dev = img.iter().zip(&psi.amplitudes).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
                    assert!(dev < TOLERANCE);
                }
            }
        }
    }

    #[test]
    fn projection_examples() {
        let code = l5(2);
        let p = projection(&code, DEFAULT_PROJECTION_LIMIT).unwrap();
        let tr: Complex64 = p.diag().sum();
        assert!((tr - 2.0).norm() < TOLERANCE);
        for psi in all_codewords(&code, DEFAULT_DENSE_LIMIT).unwrap() {
            let v = ndarray::Array1::from(psi.amplitudes.clone());
            let pv = p.dot(&v);
            assert!(pv.iter().zip(v.iter()).all(|(a, b)| (a - b).norm() < TOLERANCE));
        }
        let f2 = FieldCtx::prime(2).unwrap();
        let trivial = build_generic(&f2, 2, &[], &[]).unwrap();
        let p = projection(&trivial, DEFAULT_PROJECTION_LIMIT).unwrap();
        assert!(p.iter().zip(Array2::<Complex64>::eye(4).iter()).all(|(a, b)| (a - b).norm() < TOLERANCE));
    }

    #[test]
    fn lexicographic_reps_for_general_c() {
        let f2 = FieldCtx::prime(2).unwrap();
        let l = FqMat::zeros(&f2, 3, 3);
        let c = Subspace::span(&f2, 3, &[vec![0, 1, 1]]);
        let code = crate::stabcode::build_from_ld(&l, &l, &c).unwrap();
        let reps = coset_reps(&code).unwrap();
        assert_eq!(reps, vec![vec![0, 0, 0], vec![0, 0, 1], vec![1, 0, 0], vec![1, 0, 1]]);
        let words = all_codewords(&code, DEFAULT_DENSE_LIMIT).unwrap();
        assert!(orthonormality_defect(&words) < TOLERANCE);
    }

    #[test]
    fn kl_examples() {
        let code = l5(2);
        let ok = check_kl(&code, 1, DEFAULT_DENSE_LIMIT, 1).unwrap();
        assert!(ok.passed);
        assert_eq!(ok.checked, 106);
        let bad = check_kl(&code, 2, DEFAULT_DENSE_LIMIT, 1).unwrap();
        assert!(!bad.passed);
        let w = bad.failure.as_ref().unwrap().pair.weight();
        assert!(w == 3 || w == 4);
        assert_eq!(check_kl(&code, 2, DEFAULT_DENSE_LIMIT, 4).unwrap(), bad);
        let zero = check_kl(&code, 0, DEFAULT_DENSE_LIMIT, 1).unwrap();
        assert!(zero.passed && zero.checked == 1);
    }

    #[test]
    fn generic_basis_spans_code_space() {
        let code = l5(2);
        let gens = code.generator_elements();
        let pairs: Vec<SympPair> = gens.iter().map(|g| g.pair.clone()).collect();
        let phases: Vec<PhaseExp> = gens.iter().map(|g| g.phase).collect();
        let generic = build_generic(code.field(), 5, &pairs, &phases).unwrap();
        let basis = code_space_basis(&generic, DEFAULT_DENSE_LIMIT).unwrap();
        assert_eq!(basis.len(), 2);
        assert!(orthonormality_defect(&basis) < TOLERANCE);
        let words = all_codewords(&code, DEFAULT_DENSE_LIMIT).unwrap();
        for b in &basis {
            let captured: f64 = words.iter().map(|w| w.inner(&b.amplitudes).norm_sqr()).sum();
            assert!((captured - 1.0).abs() < TOLERANCE);
        }
        assert!(check_kl(&generic, 1, DEFAULT_DENSE_LIMIT, 1).unwrap().passed);
        assert_eq!(all_codewords(&generic, DEFAULT_DENSE_LIMIT).unwrap_err(), Error::NoPhaseMatrix);
    }

    #[test]
    fn dimension_limit() {
        let code = l5(3);
        assert!(matches!(codeword(&code, &[0; 5], 100), Err(Error::DimensionLimitExceeded { .. })));
    }

    #[test]
    fn sparse_matches_dense() {
        for p in [2, 3] {
            let code = l5(p);
            let sparse = all_sparse_codewords(&code).unwrap();
            let dense = all_codewords(&code, DEFAULT_DENSE_LIMIT).unwrap();
            for (s, d) in sparse.iter().zip(&dense) {
                assert_eq!(s.dump(code.field(), 1), d.dump(1));
                for t in &sparse {
                    let want = d.inner(&dense[sparse.iter().position(|u| u == t).unwrap()].amplitudes);
                    assert!((s.inner(t) - want).norm() < TOLERANCE);
                }
                for g in code.generator_elements() {
                    assert!(s.apply(code.field(), &g).distance(s) < TOLERANCE);
                }
            }
        }
    }

    #[test]
    fn extension_field_codewords_cover_c() {
        let f4 = FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let code = circulant_code(&f4, &[0, 1, 1]).unwrap();
        let words = all_sparse_codewords(&code).unwrap();
        assert_eq!(words.len(), 4);
        for (i, s) in words.iter().enumerate() {
            assert_eq!(s.entries.len(), 16);
            for (j, t) in words.iter().enumerate() {
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((s.inner(t) - want).norm() < TOLERANCE);
            }
            for g in code.generator_elements() {
                assert!(s.apply(&f4, &g).distance(s) < TOLERANCE);
            }
        }
    }

    #[test]
    fn dump_format() {
        let code = l5(2);
        let psi = codeword(&code, &[1, 0, 0, 0, 0], DEFAULT_DENSE_LIMIT).unwrap();
        let text = psi.dump(1);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("2 1 5 1 1,0,0,0,0"));
        let idx: Vec<usize> = lines.map(|l| l.split(' ').next().unwrap().parse().unwrap()).collect();
        assert_eq!(idx.len(), 16);
        assert!(idx.windows(2).all(|w| w[0] < w[1]));
    }
}
