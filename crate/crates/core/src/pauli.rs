//! Weyl operator labels `ω^i U_a V_b` and their algebra.
//!
//! Phases are tracked as exponents in `Z_p`, so group identities hold exactly.
//! Complex numbers appear only when an operator is applied to a state or densified.
//! Basis kets are indexed big-endian: word `(x_1, …, x_n)` ↦ `Σ x_i q^{n-i}`.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gf::{phase_value, Elem, FieldCtx, PhaseExp};

/// Default cap on the number of amplitudes `q^n` for dense objects.
pub const DEFAULT_DENSE_LIMIT: usize = 1 << 14;

/// Label `(a, b) ∈ F_q^n × F_q^n` of the operator `U_a V_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SympPair {
    pub a: Vec<Elem>,
    pub b: Vec<Elem>,
}

impl SympPair {
    pub fn new(a: Vec<Elem>, b: Vec<Elem>) -> Result<SympPair> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch { left: a.len(), right: b.len() });
        }
        Ok(SympPair { a, b })
    }

    pub fn zero(n: usize) -> SympPair {
        SympPair { a: vec![0; n], b: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().chain(&self.b).all(|&x| x == 0)
    }

    /// Number of positions `i` with `(a_i, b_i) ≠ (0, 0)`.
    pub fn weight(&self) -> usize {
        self.a.iter().zip(&self.b).filter(|(&x, &y)| x != 0 || y != 0).count()
    }

    /// `(a | b)` as one vector of length `2n`.
    pub fn concat(&self) -> Vec<Elem> {
        let mut v = self.a.clone();
        v.extend_from_slice(&self.b);
        v
    }

    pub fn from_concat(v: &[Elem]) -> SympPair {
        let n = v.len() / 2;
        SympPair { a: v[..n].to_vec(), b: v[n..].to_vec() }
    }

    pub fn add(&self, field: &FieldCtx, other: &SympPair) -> SympPair {
        SympPair { a: field.vadd(&self.a, &other.a), b: field.vadd(&self.b, &other.b) }
    }

    pub fn scale(&self, field: &FieldCtx, s: Elem) -> SympPair {
        SympPair { a: field.scale(s, &self.a), b: field.scale(s, &self.b) }
    }
}

/// Symplectic form `x.a·y.b − x.b·y.a`.
pub fn symp_form(field: &FieldCtx, x: &SympPair, y: &SympPair) -> Result<Elem> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    Ok(field.sub(field.dot(&x.a, &y.b), field.dot(&x.b, &y.a)))
}

/// An element `ω^phase U_a V_b` of the error group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ErrorElement {
    pub phase: PhaseExp,
    pub pair: SympPair,
}

impl ErrorElement {
    pub fn new(phase: PhaseExp, pair: SympPair) -> ErrorElement {
        ErrorElement { phase, pair }
    }

    pub fn identity(n: usize) -> ErrorElement {
        ErrorElement { phase: PhaseExp::ONE, pair: SympPair::zero(n) }
    }
}

/// Operator product `(ω^i U_a V_b)(ω^j U_c V_d) = ω^{i+j+Tr(b·c)} U_{a+c} V_{b+d}`.
pub fn compose(field: &FieldCtx, e1: &ErrorElement, e2: &ErrorElement) -> Result<ErrorElement> {
    if e1.pair.len() != e2.pair.len() {
        return Err(Error::LengthMismatch { left: e1.pair.len(), right: e2.pair.len() });
    }
    let p = field.p();
    let cocycle = field.char_exp(field.dot(&e1.pair.b, &e2.pair.a));
    Ok(ErrorElement {
        phase: e1.phase.add(e2.phase, p).add(cocycle, p),
        pair: e1.pair.add(field, &e2.pair),
    })
}

/// Group inverse: `ω^{-i + Tr(a·b)} U_{-a} V_{-b}`.
pub fn inverse(field: &FieldCtx, e: &ErrorElement) -> ErrorElement {
    let p = field.p();
    let ab = field.char_exp(field.dot(&e.pair.a, &e.pair.b));
    ErrorElement {
        phase: e.phase.neg(p).add(ab, p),
        pair: SympPair { a: field.vneg(&e.pair.a), b: field.vneg(&e.pair.b) },
    }
}

/// `q^n`, or an error if it exceeds `limit`.
pub fn state_dim(field: &FieldCtx, n: usize, limit: usize) -> Result<usize> {
    let dim = (field.q() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if dim > limit as u128 {
        return Err(Error::DimensionLimitExceeded { dim, limit });
    }
    Ok(dim as usize)
}

pub fn word_to_index(word: &[Elem], q: usize) -> usize {
    word.iter().fold(0, |acc, &x| acc * q + x as usize)
}

pub fn index_to_word(mut index: usize, q: usize, n: usize) -> Vec<Elem> {
    let mut w = vec![0; n];
    for i in (0..n).rev() {
        w[i] = (index % q) as Elem;
        index /= q;
    }
    w
}

/// A Weyl operator as a phased permutation: ket `x` ↦ `ω^{exps[x]}` ket `target[x]`.
#[derive(Clone, Debug)]
pub struct MonomialOp {
    p: u32,
    target: Vec<u32>,
    exps: Vec<u8>,
}

impl MonomialOp {
    /// `ket x ↦ ω^i · w(b·x) · ket(x + a)`.
    pub fn weyl(field: &FieldCtx, e: &ErrorElement, limit: usize) -> Result<MonomialOp> {
        let n = e.pair.len();
        let q = field.q();
        let dim = state_dim(field, n, limit)?;
        let p = field.p();
        let mut target = Vec::with_capacity(dim);
        let mut exps = Vec::with_capacity(dim);
        for x in 0..dim {
            let word = index_to_word(x, q, n);
            let shifted = field.vadd(&word, &e.pair.a);
            target.push(word_to_index(&shifted, q) as u32);
            let ph = e.phase.add(field.char_exp(field.dot(&e.pair.b, &word)), p);
            exps.push(ph.0);
        }
        Ok(MonomialOp { p, target, exps })
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    pub fn apply(&self, psi: &[Complex64]) -> Vec<Complex64> {
        let phases: Vec<Complex64> = (0..self.p).map(|e| phase_value(e, self.p)).collect();
        let mut out = vec![Complex64::new(0.0, 0.0); psi.len()];
        for (x, &amp) in psi.iter().enumerate() {
            out[self.target[x] as usize] += phases[self.exps[x] as usize] * amp;
        }
        out
    }

    pub fn to_dense(&self) -> Array2<Complex64> {
        let dim = self.dim();
        let mut m = Array2::zeros((dim, dim));
        for x in 0..dim {
            m[[self.target[x] as usize, x]] = phase_value(self.exps[x] as u32, self.p);
        }
        m
    }
}

/// Dense unitary of `e` on `L²(F_q)^{⊗n}`.
pub fn weyl_matrix(field: &FieldCtx, e: &ErrorElement, limit: usize) -> Result<Array2<Complex64>> {
    Ok(MonomialOp::weyl(field, e, limit)?.to_dense())
}

/// All labels of weight `≤ max_weight` in canonical order: weight ascending, then
/// support lexicographic, then the nonzero `(a_i, b_i)` values in mixed radix.
pub fn labels_up_to_weight(field: &FieldCtx, n: usize, max_weight: usize) -> Vec<SympPair> {
    let q = field.q();
    let nonzero_pairs: Vec<(Elem, Elem)> = (0..q * q)
        .skip(1)
        .map(|v| ((v / q) as Elem, (v % q) as Elem))
        .collect();
    let m = nonzero_pairs.len();
    let mut out = vec![SympPair::zero(n)];
    for w in 1..=max_weight.min(n) {
        for support in combinations(n, w) {
            let mut digits = vec![0usize; w];
            'values: loop {
                let mut pr = SympPair::zero(n);
                for (&pos, &d) in support.iter().zip(&digits) {
                    (pr.a[pos], pr.b[pos]) = nonzero_pairs[d];
                }
                out.push(pr);
                let mut k = w;
                loop {
                    if k == 0 {
                        break 'values;
                    }
                    k -= 1;
                    digits[k] += 1;
                    if digits[k] < m {
                        break;
                    }
                    digits[k] = 0;
                }
            }
        }
    }
    out
}

/// All `w`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, w: usize) -> Vec<Vec<usize>> {
    Combinations::new(n, w).collect()
}

/// Lazy `w`-subsets of `0..n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: usize,
    next: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, w: usize) -> Combinations {
        Combinations { n, next: (w <= n).then(|| (0..w).collect()) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let w = cur.len();
        let mut c = cur.clone();
        let mut i = w;
        while i > 0 && c[i - 1] == self.n - w + i - 1 {
            i -= 1;
        }
        if i > 0 {
            c[i - 1] += 1;
            for j in i..w {
                c[j] = c[j - 1] + 1;
            }
            self.next = Some(c);
        }
        Some(cur)
    }
}
