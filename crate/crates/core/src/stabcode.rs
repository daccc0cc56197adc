//! Stabilizer codes, their symplectic dual and exact minimum distance.
//!
//! A code is stored by its generator labels plus a rule that assigns each element of
//! the label group `S` its phase. Codes built from `(L, D, C)` use the quadratic rule
//! `a ↦ Tr(aᵀDa)` with labels `(a, La)`; generic codes carry one phase per `F_p`
//! generator and extend it through the Weyl cocycle.
//!
//! The dual basis is kept as `[generators of S | 2k completion vectors]`, so an
//! element of `S^⊥s` lies in `S` iff its last `2k` coefficients vanish.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx, PhaseExp};
use crate::par::{map_blocks, FirstHit};
use crate::pauli::{compose, symp_form, ErrorElement, SympPair};
use crate::veclin::{circulant, extend_basis, split_upper, FqMat, Subspace};

/// Default cap on the number of dual elements enumerated by [`min_distance`].
pub const DEFAULT_BUDGET: u128 = 1 << 26;

/// How the phase of each element of `S` is determined.
#[derive(Clone, Debug)]
pub enum PhaseRule {
    /// `S = { w(aᵀDa) U_a V_{La} : a ∈ C }` with `L = D + Dᵀ`.
    Quadratic { l: FqMat, d: FqMat, c: Subspace },
    /// One phase per `F_p` generator `x^j·g_i` (index `i·r + j`).
    Generic { phases: Vec<PhaseExp> },
}

#[derive(Clone, Debug)]
pub struct StabilizerCode {
    field: FieldCtx,
    n: usize,
    generators: Vec<SympPair>,
    rule: PhaseRule,
    dual: Vec<SympPair>,
}

/// Builds the code `{ w(aᵀDa) U_a V_{La} : a ∈ C }`.
pub fn build_from_ld(l: &FqMat, d: &FqMat, c: &Subspace) -> Result<StabilizerCode> {
    let field = l.field().clone();
    let n = l.rows();
    if !l.is_square() || d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "L is {}x{}, D is {}x{}",
            l.rows(),
            l.cols(),
            d.rows(),
            d.cols()
        )));
    }
    if c.ambient() != n {
        return Err(Error::DimensionMismatch(format!("C lives in F_q^{}, L is {n}x{n}", c.ambient())));
    }
    if d.field() != &field || c.field() != &field {
        return Err(Error::DimensionMismatch("L, D and C are over different fields".into()));
    }
    if d.add(&d.transpose())? != *l {
        return Err(Error::PhaseSplitInvalid);
    }
    let generators: Vec<SympPair> =
        c.basis().iter().map(|a| SympPair { a: a.clone(), b: l.mul_vec(a) }).collect();
    check_isotropic(&field, &generators)?;
    let rule = PhaseRule::Quadratic { l: l.clone(), d: d.clone(), c: c.clone() };
    StabilizerCode::assemble(field, n, generators, rule)
}

/// Circulant code: `L = circulant(first_row)`, `D` its upper split, `C` zero-sum.
pub fn circulant_code(field: &FieldCtx, first_row: &[Elem]) -> Result<StabilizerCode> {
    let l = circulant(field, first_row);
    let d = split_upper(&l)?;
    let c = Subspace::zero_sum(field, first_row.len())?;
    build_from_ld(&l, &d, &c)
}

/// Builds a code from explicit generator labels and phases. `phases` holds either one
/// entry per generator (multiples `x^j·g_i` with `j ≥ 1` get phase 0) or one entry
/// per `F_p` generator `x^j·g_i`, ordered `i`-major.
pub fn build_generic(
    field: &FieldCtx,
    n: usize,
    pairs: &[SympPair],
    phases: &[PhaseExp],
) -> Result<StabilizerCode> {
    for pr in pairs {
        if pr.a.len() != n || pr.b.len() != n {
            return Err(Error::LengthMismatch { left: pr.a.len().max(pr.b.len()), right: n });
        }
    }
    check_isotropic(field, pairs)?;
    let concat: Vec<Vec<Elem>> = pairs.iter().map(SympPair::concat).collect();
    if FqMat::from_elem_rows(field, &concat, 2 * n).rank() != pairs.len() {
        return Err(Error::DependentGenerators);
    }
    let r = field.r() as usize;
    let p = field.p();
    let full: Vec<PhaseExp> = if phases.len() == pairs.len() * r {
        phases.to_vec()
    } else if phases.len() == pairs.len() {
        phases.iter().flat_map(|&ph| std::iter::once(ph).chain(std::iter::repeat_n(PhaseExp::ONE, r - 1))).collect()
    } else {
        return Err(Error::InconsistentPhases(format!(
            "expected {} or {} phases, got {}",
            pairs.len(),
            pairs.len() * r,
            phases.len()
        )));
    };
    if let Some(ph) = full.iter().find(|ph| ph.0 as u32 >= p) {
        return Err(Error::InconsistentPhases(format!("phase exponent {} not below {p}", ph.0)));
    }

    let fp_gens = fp_generators(field, pairs, &full);
    // h^p must be the identity and generators must commute as group elements
    for (i, h) in fp_gens.iter().enumerate() {
        let mut acc = ErrorElement::identity(n);
        for _ in 0..p {
            acc = compose(field, &acc, h)?;
        }
        if acc.phase != PhaseExp::ONE {
            return Err(Error::InconsistentPhases(format!(
                "F_p generator {i} has order 2p (its p-th power is a nontrivial scalar)"
            )));
        }
        for (j, h2) in fp_gens.iter().enumerate().skip(i + 1) {
            if compose(field, h, h2)? != compose(field, h2, h)? {
                return Err(Error::InconsistentPhases(format!("F_p generators {i} and {j} do not commute")));
            }
        }
    }
    StabilizerCode::assemble(field.clone(), n, pairs.to_vec(), PhaseRule::Generic { phases: full })
}

fn check_isotropic(field: &FieldCtx, gens: &[SympPair]) -> Result<()> {
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate().skip(i) {
            if symp_form(field, x, y)? != 0 {
                return Err(Error::NotIsotropic(i, j));
            }
        }
    }
    Ok(())
}

fn fp_generators(field: &FieldCtx, pairs: &[SympPair], phases: &[PhaseExp]) -> Vec<ErrorElement> {
    let r = field.r();
    pairs
        .iter()
        .flat_map(|g| (0..r).map(move |j| g.scale(field, field.basis_element(j))))
        .zip(phases)
        .map(|(pair, &phase)| ErrorElement::new(phase, pair))
        .collect()
}

impl StabilizerCode {
    fn assemble(field: FieldCtx, n: usize, generators: Vec<SympPair>, rule: PhaseRule) -> Result<StabilizerCode> {
        let dual = compute_dual(&field, n, &generators);
        let code = StabilizerCode { field, n, generators, rule, dual };
        debug_assert_eq!(code.dual.len() + code.generators.len(), 2 * n);
        Ok(code)
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `k = n − dim S`.
    pub fn k(&self) -> usize {
        self.n - self.generators.len()
    }

    pub fn params(&self) -> (usize, usize) {
        (self.n, self.k())
    }

    pub fn stabilizer_dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[SympPair] {
        &self.generators
    }

    pub fn phase_rule(&self) -> &PhaseRule {
        &self.rule
    }

    /// `(L, D, C)` for codes built by [`build_from_ld`].
    pub fn quadratic_data(&self) -> Option<(&FqMat, &FqMat, &Subspace)> {
        match &self.rule {
            PhaseRule::Quadratic { l, d, c } => Some((l, d, c)),
            PhaseRule::Generic { .. } => None,
        }
    }

    /// Ordered basis of `S^⊥s`: the generators of `S` first, then `2k` completion vectors.
    pub fn dual_basis(&self) -> &[SympPair] {
        &self.dual
    }

    /// `S^⊥s` as a subspace of `F_q^{2n}` (vectors `(a | b)`).
    pub fn symplectic_dual(&self) -> Subspace {
        let v: Vec<Vec<Elem>> = self.dual.iter().map(SympPair::concat).collect();
        Subspace::span(&self.field, 2 * self.n, &v)
    }

    /// The element of `S` with `F_q` coefficients `coeffs` on the generators.
    pub fn stabilizer_element(&self, coeffs: &[Elem]) -> ErrorElement {
        let f = &self.field;
        match &self.rule {
            PhaseRule::Quadratic { l, d, c } => {
                let a = c.combine(coeffs);
                let phase = f.char_exp(d.bilinear(&a, &a));
                let b = l.mul_vec(&a);
                ErrorElement::new(phase, SympPair { a, b })
            }
            PhaseRule::Generic { phases } => {
                let fp = fp_generators(f, &self.generators, phases);
                let p = f.p() as usize;
                let r = f.r() as usize;
                let mut acc = ErrorElement::identity(self.n);
                for (i, &lam) in coeffs.iter().enumerate() {
                    // base-p digits of the encoding are the power-basis coordinates
                    let mut rest = lam as usize;
                    for j in 0..r {
                        for _ in 0..rest % p {
                            acc = compose(f, &acc, &fp[i * r + j]).expect("same length");
                        }
                        rest /= p;
                    }
                }
                acc
            }
        }
    }

    /// The phased generators (coefficient vectors `e_i`).
    pub fn generator_elements(&self) -> Vec<ErrorElement> {
        let m = self.generators.len();
        (0..m)
            .map(|i| {
                let mut e = vec![0; m];
                e[i] = 1;
                self.stabilizer_element(&e)
            })
            .collect()
    }

    /// Every element of `S` with its phase (`q^{n-k}` of them).
    pub fn stabilizer_elements(&self) -> Vec<ErrorElement> {
        let m = self.generators.len();
        let q = self.field.q();
        let total = q.pow(m as u32);
        let mut coeffs = vec![0 as Elem; m];
        let mut out = Vec::with_capacity(total);
        for _ in 0..total {
            out.push(self.stabilizer_element(&coeffs));
            for c in coeffs.iter_mut() {
                *c += 1;
                if (*c as usize) < q {
                    break;
                }
                *c = 0;
            }
        }
        out
    }

    /// Membership of a label in `S` (not its phase).
    pub fn contains_label(&self, pr: &SympPair) -> bool {
        let gens: Vec<Vec<Elem>> = self.generators.iter().map(SympPair::concat).collect();
        extend_basis(&self.field, &gens, &[pr.concat()]).is_empty()
    }
}

/// Kernel of the constraint rows `(d, −c)` for each generator `(c, d)`, completed so
/// the generators come first.
fn compute_dual(field: &FieldCtx, n: usize, gens: &[SympPair]) -> Vec<SympPair> {
    let rows: Vec<Vec<Elem>> = gens
        .iter()
        .map(|g| {
            let mut r = g.b.clone();
            r.extend(field.vneg(&g.a));
            r
        })
        .collect();
    let kernel = FqMat::from_elem_rows(field, &rows, 2 * n).kernel();
    let gen_vecs: Vec<Vec<Elem>> = gens.iter().map(SympPair::concat).collect();
    let completion = extend_basis(field, &gen_vecs, kernel.basis());
    gens.iter().cloned().chain(completion.iter().map(|v| SympPair::from_concat(v))).collect()
}

/// Which set the minimum weight is taken over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DistanceMode {
    /// `S^⊥s \ S`
    #[default]
    Standard,
    /// `S^⊥s \ {0}`
    Pure,
}

#[derive(Clone, Debug)]
pub struct DistanceOptions {
    pub mode: DistanceMode,
    /// Stop at the first element (in enumeration order) of weight `≤ early_exit`.
    pub early_exit: Option<usize>,
    /// Worker threads; `1` is the sequential reference, `0` uses every core.
    pub workers: usize,
    pub budget: u128,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions { mode: DistanceMode::Standard, early_exit: None, workers: 1, budget: DEFAULT_BUDGET }
    }
}

impl DistanceOptions {
    pub fn pure() -> Self {
        DistanceOptions { mode: DistanceMode::Pure, ..Default::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Complete,
    /// An element of weight `≤ early_exit` was found; `d` is that element's weight.
    LowerBoundFailed,
}

#[derive(Clone, Debug)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    /// Minimum distance in the requested mode; `n + 1` when `undefined`.
    pub d: usize,
    /// Every nonzero element of `S^⊥s` has weight `≥` the standard distance.
    pub pure: bool,
    pub witness: Option<SympPair>,
    pub mode: DistanceMode,
    pub status: SearchStatus,
    /// Standard mode over an empty set (`k = 0`).
    pub undefined: bool,
    /// `S` is trivial (`k = n`).
    pub trivial_stabilizer: bool,
    /// Dual elements visited, counted in canonical order.
    pub enumerated: u128,
    pub elapsed: Duration,
}

impl CodeReport {
    /// `key=value` lines in a fixed order.
    pub fn to_text(&self) -> String {
        let join = |v: &[Elem]| v.iter().map(u8::to_string).collect::<Vec<_>>().join(",");
        let (wa, wb) = match &self.witness {
            Some(w) => (join(&w.a), join(&w.b)),
            None => ("-".to_string(), "-".to_string()),
        };
        let status = match self.status {
            SearchStatus::Complete if self.undefined => "undefined",
            SearchStatus::Complete => "complete",
            SearchStatus::LowerBoundFailed => "lower-bound-failed",
        };
        let mode = match self.mode {
            DistanceMode::Standard => "standard",
            DistanceMode::Pure => "pure",
        };
        format!(
            "n={}\nk={}\nd={}\npure={}\nwitness_a={}\nwitness_b={}\nelapsed_ms={}\nenumerated={}\nmode={}\nstatus={}\n",
            self.n,
            self.k,
            self.d,
            self.pure,
            wa,
            wb,
            self.elapsed.as_millis(),
            self.enumerated,
            mode,
            status
        )
    }
}

/// Best element of one block: (weight, position in block).
type Best = Option<(usize, u64)>;

#[derive(Default)]
struct BlockResult {
    std: Best,
    pure: Best,
    hit: Best,
}

fn better(best: &mut Best, w: usize, pos: u64) {
    if best.is_none_or(|(bw, _)| w < bw) {
        *best = Some((w, pos));
    }
}

fn pick(blocks: &[BlockResult], sel: impl Fn(&BlockResult) -> Best) -> Option<(usize, usize, u64)> {
    blocks
        .iter()
        .enumerate()
        .filter_map(|(b, r)| sel(r).map(|(w, pos)| (w, b, pos)))
        .min()
}

const PREFIX_TARGET: u128 = 256;
const CHECK_INTERVAL: u64 = 1 << 14;

/// Fixed split of `N` coefficients into `w` leading (block) and `N − w` trailing ones.
struct Layout {
    total_coeffs: usize,
    block_coeffs: usize,
    q: u128,
}

impl Layout {
    fn new(q: usize, total_coeffs: usize) -> Layout {
        let q = q as u128;
        let mut w = 0;
        while w < total_coeffs && q.pow(w as u32 + 1) <= PREFIX_TARGET {
            w += 1;
        }
        Layout { total_coeffs, block_coeffs: w, q }
    }

    fn low(&self) -> usize {
        self.total_coeffs - self.block_coeffs
    }

    fn blocks(&self) -> usize {
        self.q.pow(self.block_coeffs as u32) as usize
    }

    fn block_size(&self) -> u128 {
        self.q.pow(self.low() as u32)
    }
}

/// Exact minimum distance by enumerating `S^⊥s`.
///
/// The coefficient space is split into blocks by the leading coefficients. Over `F_2`
/// each block is walked in Gray-code order (one XOR per step, weight by popcount);
/// otherwise trailing coefficients are counted in mixed radix. The block layout does
/// not depend on `workers`, and ties are broken by canonical position, so reports are
/// identical for every worker count.
pub fn min_distance(code: &StabilizerCode, opts: &DistanceOptions) -> Result<CodeReport> {
    let start = Instant::now();
    let field = &code.field;
    let n = code.n;
    let m = code.generators.len();
    let total_coeffs = code.dual.len();
    let needed = (field.q() as u128).checked_pow(total_coeffs as u32).unwrap_or(u128::MAX);
    if needed > opts.budget || needed > u64::MAX as u128 {
        return Err(Error::BudgetExceeded { needed, budget: opts.budget });
    }
    let layout = Layout::new(field.q(), total_coeffs);
    let threshold = opts.early_exit;
    let cutoff = FirstHit::default();

    let results: Vec<BlockResult> = if field.is_binary() && n <= 64 {
        let basis: Vec<(u64, u64)> = code.dual.iter().map(|v| (pack(&v.a), pack(&v.b))).collect();
        map_blocks(layout.blocks(), opts.workers, |blk| {
            walk_binary(&basis, m, &layout, blk, opts.mode, threshold, &cutoff)
        })
    } else {
        map_blocks(layout.blocks(), opts.workers, |blk| {
            walk_general(code, &layout, blk, opts.mode, threshold, &cutoff)
        })
    };

    let block_size = layout.block_size();
    let std = pick(&results, |r| r.std);
    let pure = pick(&results, |r| r.pure);
    let first_hit = results
        .iter()
        .enumerate()
        .find_map(|(b, r)| r.hit.map(|(w, pos)| (w, b, pos)));

    let coeffs_at = |b: usize, pos: u64| coefficients(field, &layout, b, pos);
    let element = |b: usize, pos: u64| -> SympPair {
        let coeffs = coeffs_at(b, pos);
        let mut v = vec![0; 2 * n];
        for (basis, &c) in code.dual.iter().zip(&coeffs) {
            field.axpy(&mut v, c, &basis.concat());
        }
        SympPair::from_concat(&v)
    };

    let k = code.k();
    let mut report = CodeReport {
        n,
        k,
        d: n + 1,
        pure: false,
        witness: None,
        mode: opts.mode,
        status: SearchStatus::Complete,
        undefined: false,
        trivial_stabilizer: m == 0,
        enumerated: needed,
        elapsed: Duration::ZERO,
    };

    if let Some((w, b, pos)) = first_hit {
        report.d = w;
        report.witness = Some(element(b, pos));
        report.status = SearchStatus::LowerBoundFailed;
        report.enumerated = b as u128 * block_size + pos as u128 + 1;
    } else {
        report.pure = match (std, pure) {
            (Some((sw, _, _)), Some((pw, _, _))) => pw >= sw,
            _ => false,
        };
        let chosen = match opts.mode {
            DistanceMode::Standard => std,
            DistanceMode::Pure => pure,
        };
        match chosen {
            Some((w, b, pos)) => {
                report.d = w;
                report.witness = Some(element(b, pos));
            }
            None => report.undefined = true,
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

fn pack(v: &[Elem]) -> u64 {
    v.iter().enumerate().fold(0u64, |acc, (i, &x)| acc | ((x as u64 & 1) << i))
}

/// Coefficients (over `F_q`) of the element at `pos` within block `b`.
fn coefficients(field: &FieldCtx, layout: &Layout, b: usize, pos: u64) -> Vec<Elem> {
    let q = field.q() as u64;
    let low = layout.low();
    let mut c = vec![0 as Elem; layout.total_coeffs];
    if field.is_binary() {
        let gray = pos ^ (pos >> 1);
        for (i, ci) in c.iter_mut().enumerate().take(low) {
            *ci = ((gray >> i) & 1) as Elem;
        }
    } else {
        let mut rest = pos;
        for ci in c.iter_mut().take(low) {
            *ci = (rest % q) as Elem;
            rest /= q;
        }
    }
    let mut rest = b as u64;
    for ci in c.iter_mut().skip(low) {
        *ci = (rest % q) as Elem;
        rest /= q;
    }
    c
}

fn walk_binary(
    basis: &[(u64, u64)],
    m: usize,
    layout: &Layout,
    blk: usize,
    mode: DistanceMode,
    threshold: Option<usize>,
    cutoff: &FirstHit,
) -> BlockResult {
    let mut res = BlockResult::default();
    if cutoff.superseded(blk) {
        return res;
    }
    let low = layout.low();
    let (mut ea, mut eb) = (0u64, 0u64);
    for j in 0..layout.block_coeffs {
        if (blk >> j) & 1 == 1 {
            ea ^= basis[low + j].0;
            eb ^= basis[low + j].1;
        }
    }
    let coeff_high = (blk as u64) << low;
    let mut gray = 0u64;
    let size = 1u64 << low;
    for i in 0..size {
        if i > 0 {
            let bit = i.trailing_zeros() as usize;
            ea ^= basis[bit].0;
            eb ^= basis[bit].1;
            gray ^= 1 << bit;
            if i % CHECK_INTERVAL == 0 && cutoff.superseded(blk) {
                return BlockResult::default();
            }
        } else if blk == 0 {
            continue;
        }
        let w = (ea | eb).count_ones() as usize;
        better(&mut res.pure, w, i);
        // completion coefficients sit at indices ≥ m
        let in_s = ((coeff_high | gray) >> m) == 0;
        if !in_s {
            better(&mut res.std, w, i);
        }
        if let Some(t) = threshold {
            let counts = match mode {
                DistanceMode::Standard => !in_s,
                DistanceMode::Pure => true,
            };
            if counts && w <= t {
                res.hit = Some((w, i));
                cutoff.record(blk);
                return res;
            }
        }
    }
    res
}

fn walk_general(
    code: &StabilizerCode,
    layout: &Layout,
    blk: usize,
    mode: DistanceMode,
    threshold: Option<usize>,
    cutoff: &FirstHit,
) -> BlockResult {
    let mut res = BlockResult::default();
    if cutoff.superseded(blk) {
        return res;
    }
    let field = &code.field;
    let q = field.q();
    let n = code.n;
    let m = code.generators.len();
    let low = layout.low();
    let basis: Vec<Vec<Elem>> = code.dual.iter().map(SympPair::concat).collect();
    let mut digits = coefficients(field, layout, blk, 0);
    let mut e = vec![0 as Elem; 2 * n];
    for (j, &c) in digits.iter().enumerate() {
        field.axpy(&mut e, c, &basis[j]);
    }
    let mut completion_nonzero = digits.iter().skip(m).filter(|&&c| c != 0).count();
    let size = layout.block_size() as u64;
    for i in 0..size {
        if i > 0 {
            // odometer step on the trailing digits, first digit fastest
            for (k, d) in digits.iter_mut().enumerate().take(low) {
                let old = *d;
                let new = if (old as usize) + 1 == q { 0 } else { old + 1 };
                *d = new;
                field.axpy(&mut e, field.sub(new, old), &basis[k]);
                if k >= m {
                    if old == 0 {
                        completion_nonzero += 1;
                    } else if new == 0 {
                        completion_nonzero -= 1;
                    }
                }
                if new != 0 {
                    break;
                }
            }
            if i % CHECK_INTERVAL == 0 && cutoff.superseded(blk) {
                return BlockResult::default();
            }
        } else if blk == 0 {
            continue;
        }
        let w = (0..n).filter(|&t| e[t] != 0 || e[n + t] != 0).count();
        better(&mut res.pure, w, i);
        let in_s = completion_nonzero == 0;
        if !in_s {
            better(&mut res.std, w, i);
        }
        if let Some(t) = threshold {
            let counts = match mode {
                DistanceMode::Standard => !in_s,
                DistanceMode::Pure => true,
            };
            if counts && w <= t {
                res.hit = Some((w, i));
                cutoff.record(blk);
                return res;
            }
        }
    }
    res
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::veclin::FqMat;

    fn f(p: u32) -> FieldCtx {
        FieldCtx::prime(p).unwrap()
    }

    fn l5_code(field: &FieldCtx) -> StabilizerCode {
        circulant_code(field, &[0, 0, 1, 1, 0]).unwrap()
    }

    #[test]
    fn five_qubit_code_parameters() {
        let code = l5_code(&f(2));
        assert_eq!(code.params(), (5, 1));
        assert_eq!(code.dual_basis().len(), 6);
        let r = min_distance(&code, &DistanceOptions::default()).unwrap();
        assert_eq!(r.d, 3);
        assert!(r.pure);
        assert_eq!(r.witness.as_ref().unwrap().weight(), 3);
        assert_eq!(r.enumerated, 64);
        let rp = min_distance(&code, &DistanceOptions::pure()).unwrap();
        assert_eq!(rp.d, 3);
    }

    #[test]
    fn zero_l_gives_all_u_stabilizer() {
        for n in [2, 3, 6] {
            let f2 = f(2);
            let z = FqMat::zeros(&f2, n, n);
            let code = build_from_ld(&z, &z, &Subspace::zero_sum(&f2, n).unwrap()).unwrap();
            assert_eq!(code.params(), (n, 1));
            let r = min_distance(&code, &DistanceOptions::default()).unwrap();
            assert_eq!(r.d, 1);
        }
    }

    #[test]
    fn phase_split_checked() {
        let f2 = f(2);
        let mut l = circulant(&f2, &[0, 0, 1, 1, 0]);
        let d = l.strict_upper();
        l.set(2, 2, 1);
        let c = Subspace::zero_sum(&f2, 5).unwrap();
        assert_eq!(build_from_ld(&l, &d, &c).unwrap_err(), Error::PhaseSplitInvalid);
    }

    #[test]
    fn generic_examples() {
        let f2 = f(2);
        let rep = SympPair::new(vec![1, 1], vec![0, 0]).unwrap();
        let code = build_generic(&f2, 2, &[rep], &[PhaseExp(0)]).unwrap();
        assert_eq!(code.params(), (2, 1));
        let x = SympPair::new(vec![1], vec![0]).unwrap();
        let z = SympPair::new(vec![0], vec![1]).unwrap();
        assert_eq!(build_generic(&f2, 1, &[x.clone(), z], &[PhaseExp(0); 2]).unwrap_err(), Error::NotIsotropic(0, 1));
        assert_eq!(
            build_generic(&f2, 1, &[x.clone(), x.clone()], &[PhaseExp(0); 2]).unwrap_err(),
            Error::DependentGenerators
        );
        // Y-type label squares to −I with real phases
        let y = SympPair::new(vec![1], vec![1]).unwrap();
        assert!(matches!(build_generic(&f2, 1, &[y], &[PhaseExp(0)]), Err(Error::InconsistentPhases(_))));
        assert!(matches!(build_generic(&f2, 1, &[x], &[PhaseExp(0); 3]), Err(Error::InconsistentPhases(_))));
    }

    #[test]
    fn generic_matches_ld_construction() {
        let f2 = f(2);
        let ld = l5_code(&f2);
        let gens = ld.generator_elements();
        let pairs: Vec<SympPair> = gens.iter().map(|g| g.pair.clone()).collect();
        let phases: Vec<PhaseExp> = gens.iter().map(|g| g.phase).collect();
        let generic = build_generic(&f2, 5, &pairs, &phases).unwrap();
        assert_eq!(generic.symplectic_dual(), ld.symplectic_dual());
        let a = min_distance(&ld, &DistanceOptions::default()).unwrap();
        let b = min_distance(&generic, &DistanceOptions::default()).unwrap();
        assert_eq!((a.d, a.pure, a.witness), (b.d, b.pure, b.witness));
        // the cocycle extension reproduces every quadratic phase
        let mut lhs = ld.stabilizer_elements();
        let mut rhs = generic.stabilizer_elements();
        lhs.sort_by(|x, y| x.pair.cmp(&y.pair));
        rhs.sort_by(|x, y| x.pair.cmp(&y.pair));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dual_examples() {
        let f2 = f(2);
        let code = build_generic(&f2, 3, &[], &[]).unwrap();
        assert_eq!(code.params(), (3, 3));
        assert_eq!(code.symplectic_dual().dim(), 6);
        // self-dual: n independent commuting generators
        let gens: Vec<SympPair> = (0..3)
            .map(|i| {
                let mut b = vec![0; 3];
                b[i] = 1;
                SympPair::new(vec![0; 3], b).unwrap()
            })
            .collect();
        let code = build_generic(&f2, 3, &gens, &[PhaseExp(0); 3]).unwrap();
        assert_eq!(code.params(), (3, 0));
        assert_eq!(code.symplectic_dual(), Subspace::span(&f2, 6, &gens.iter().map(SympPair::concat).collect::<Vec<_>>()));
        let r = min_distance(&code, &DistanceOptions::default()).unwrap();
        assert!(r.undefined);
        assert_eq!(r.d, 4);
        assert!(r.witness.is_none());
        let rp = min_distance(&code, &DistanceOptions::pure()).unwrap();
        assert_eq!(rp.d, 1);
    }

    #[test]
    fn dual_contains_stabilizer_and_has_right_size() {
        for (p, row) in [(2u32, vec![0u8, 1, 1, 0, 0, 1, 1]), (3, vec![0, 0, 1, 1, 0]), (5, vec![2, 1, 0, 0, 1])] {
            let field = f(p);
            let code = circulant_code(&field, &row).unwrap();
            let dual = code.symplectic_dual();
            for g in code.generators() {
                assert!(dual.contains(&g.concat()));
            }
            assert_eq!(dual.dim() + code.stabilizer_dim(), 2 * code.n());
            for v in code.dual_basis() {
                for g in code.generators() {
                    assert_eq!(symp_form(&field, v, g).unwrap(), 0);
                }
            }
        }
    }

    #[test]
    fn early_exit_reports_first_hit() {
        let code = l5_code(&f(2));
        let opts = DistanceOptions { early_exit: Some(3), ..Default::default() };
        let r = min_distance(&code, &opts).unwrap();
        assert_eq!(r.status, SearchStatus::LowerBoundFailed);
        assert!(r.d <= 3);
        assert!(r.enumerated <= 64);
        let opts = DistanceOptions { early_exit: Some(2), ..Default::default() };
        let r = min_distance(&code, &opts).unwrap();
        assert_eq!(r.status, SearchStatus::Complete);
        assert_eq!(r.d, 3);
    }

    #[test]
    fn budget_is_enforced() {
        let code = l5_code(&f(2));
        let opts = DistanceOptions { budget: 63, ..Default::default() };
        assert_eq!(min_distance(&code, &opts).unwrap_err(), Error::BudgetExceeded { needed: 64, budget: 63 });
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let f2 = f(2);
        let code = circulant_code(&f2, &[0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0]).unwrap();
        let base = min_distance(&code, &DistanceOptions::default()).unwrap();
        for w in [2, 4] {
            let r = min_distance(&code, &DistanceOptions { workers: w, ..Default::default() }).unwrap();
            assert_eq!((r.d, r.pure, &r.witness), (base.d, base.pure, &base.witness));
            let e = DistanceOptions { workers: w, early_exit: Some(5), ..Default::default() };
            let e1 = DistanceOptions { early_exit: Some(5), ..Default::default() };
            let (a, b) = (min_distance(&code, &e).unwrap(), min_distance(&code, &e1).unwrap());
            assert_eq!((a.d, &a.witness, a.enumerated), (b.d, &b.witness, b.enumerated));
        }
    }

    #[test]
    fn extension_field_code() {
        let f4 = FieldCtx::new(2, 2, Some(&[1, 1, 1])).unwrap();
        let code = l5_code(&f4);
        let r = min_distance(&code, &DistanceOptions::default()).unwrap();
        assert_eq!((r.n, r.k, r.d), (5, 1, 3));
    }
}
