//! Circulant first-row scans and the α-good block construction.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};
use crate::par::{first_in_blocks, map_blocks};
use crate::pauli::Combinations;
use crate::stabcode::{build_from_ld, circulant_code, min_distance, CodeReport, DistanceOptions, StabilizerCode};
use crate::veclin::{FqMat, Subspace};

/// Default cap on the number of subsets examined by [`is_alpha_good`].
pub const DEFAULT_SUBSET_BUDGET: u128 = 1 << 24;

/// An exact rational `α = num/den` with `0 < α < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alpha {
    num: u64,
    den: u64,
}

impl Alpha {
    pub fn new(num: u64, den: u64) -> Result<Alpha> {
        if num == 0 || den == 0 || num >= den {
            return Err(Error::DomainError(format!("alpha = {num}/{den} is not in (0,1)")));
        }
        Ok(Alpha { num, den })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// `⌊αn⌋`
    pub fn floor_times(self, n: usize) -> usize {
        (self.num as u128 * n as u128 / self.den as u128) as usize
    }

    /// `w < αn`
    fn below(self, w: usize, n: usize) -> bool {
        (w as u128) * (self.den as u128) < (self.num as u128) * (n as u128)
    }

    /// `w > (1−α)n`
    fn above(self, w: usize, n: usize) -> bool {
        (w as u128) * (self.den as u128) > ((self.den - self.num) as u128) * (n as u128)
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Alpha> {
        let bad = || Error::Parse(format!("expected NUM/DEN, got {s:?}"));
        let (a, b) = s.trim().split_once('/').ok_or_else(bad)?;
        let num = a.trim().parse().map_err(|_| bad())?;
        let den = b.trim().parse().map_err(|_| bad())?;
        Alpha::new(num, den)
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub workers: usize,
    /// Applies both to the number of candidate rows and to each distance search.
    pub budget: u128,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { workers: 1, budget: crate::stabcode::DEFAULT_BUDGET }
    }
}

#[derive(Clone, Debug)]
pub struct ScanHit {
    pub first_row: Vec<Elem>,
    pub report: CodeReport,
}

impl ScanHit {
    /// `first_row, d, pure, elapsed_ms`
    pub fn to_line(&self) -> String {
        let row: String = self.first_row.iter().map(|c| c.to_string()).collect();
        format!("{}, {}, {}, {}", row, self.report.d, self.report.pure, self.report.elapsed.as_millis())
    }
}

/// Scans binary circulant first rows and returns those whose code reaches `d_target`,
/// sorted by distance (descending) then row.
///
/// With `require_symmetric` only palindromic rows with zero diagonal are generated
/// (`2^⌊n/2⌋` of them); otherwise all `2^n` binary rows are tried and rows whose
/// circulant admits no phase split are skipped.
pub fn circulant_scan(
    n: usize,
    field: &FieldCtx,
    d_target: usize,
    require_symmetric: bool,
    opts: &ScanOptions,
) -> Result<Vec<ScanHit>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall { min: 2, got: n });
    }
    let free = if require_symmetric { n / 2 } else { n };
    let candidates = 1u128.checked_shl(free as u32).unwrap_or(u128::MAX);
    if free >= 64 || candidates > opts.budget {
        return Err(Error::BudgetExceeded { needed: candidates, budget: opts.budget });
    }
    let row_of = |bits: u64| -> Vec<Elem> {
        if require_symmetric {
            let mut row = vec![0; n];
            for i in 1..=free {
                let c = ((bits >> (i - 1)) & 1) as Elem;
                row[i] = c;
                row[n - i] = c;
            }
            row
        } else {
            (0..n).map(|i| ((bits >> i) & 1) as Elem).collect()
        }
    };
    let dopts = DistanceOptions { early_exit: d_target.checked_sub(1), workers: 1, budget: opts.budget, ..Default::default() };
    let results = map_blocks(candidates as usize, opts.workers, |bits| -> Result<Option<ScanHit>> {
        let row = row_of(bits as u64);
        let code = match circulant_code(field, &row) {
            Ok(c) => c,
            Err(Error::NotSymmetric | Error::OddDiagonalInCharTwo(_)) if !require_symmetric => return Ok(None),
            Err(e) => return Err(e),
        };
        let report = min_distance(&code, &dopts)?;
        Ok((report.d >= d_target && report.status == crate::stabcode::SearchStatus::Complete)
            .then_some(ScanHit { first_row: row, report }))
    });
    let mut hits = Vec::new();
    for r in results {
        if let Some(h) = r? {
            hits.push(h);
        }
    }
    hits.sort_by(|x, y| y.report.d.cmp(&x.report.d).then_with(|| x.first_row.cmp(&y.first_row)));
    Ok(hits)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    ColLow,
    ColHigh,
    RowLow,
    RowHigh,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::ColLow => "colLow",
            ViolationKind::ColHigh => "colHigh",
            ViolationKind::RowLow => "rowLow",
            ViolationKind::RowHigh => "rowHigh",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub subset: Vec<usize>,
    pub weight: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodnessReport {
    pub alpha: Alpha,
    pub good: bool,
    pub violation: Option<Violation>,
}

/// Bit-packed rows of a square binary matrix.
struct BitRows {
    words: usize,
    rows: Vec<Vec<u64>>,
}

impl BitRows {
    fn from_mat(m: &FqMat) -> BitRows {
        let n = m.cols();
        let words = n.div_ceil(64).max(1);
        let rows = (0..m.rows())
            .map(|i| {
                let mut w = vec![0u64; words];
                for j in 0..n {
                    if m.get(i, j) != 0 {
                        w[j / 64] |= 1 << (j % 64);
                    }
                }
                w
            })
            .collect();
        BitRows { words, rows }
    }

    fn sum_weight(&self, subset: &[usize], acc: &mut [u64]) -> usize {
        acc.iter_mut().for_each(|w| *w = 0);
        for &i in subset {
            for (a, r) in acc.iter_mut().zip(&self.rows[i]) {
                *a ^= r;
            }
        }
        acc.iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn subset_count(n: usize, max_size: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    for s in 1..=max_size.min(n) {
        binom = binom * (n - s + 1) as u128 / s as u128;
        total = total.saturating_add(binom);
    }
    total
}

/// Checks the α-good conditions for every row and column subset of size
/// `1..=⌊αn⌋`, reporting the first violation in (size, lexicographic) order.
pub fn is_alpha_good(r: &FqMat, alpha: Alpha, workers: usize, budget: u128) -> Result<GoodnessReport> {
    if !r.field().is_binary() || r.field().r() != 1 || !r.is_square() {
        return Err(Error::DimensionMismatch("α-goodness needs a square matrix over F_2".into()));
    }
    let n = r.rows();
    let max_size = alpha.floor_times(n);
    let needed = subset_count(n, max_size);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    // column subset sums are sums of rows of Rᵀ
    let cols = BitRows::from_mat(&r.transpose());
    let rows = BitRows::from_mat(r);
    let blocks: Vec<(usize, usize)> = (1..=max_size).flat_map(|s| (0..=n - s).map(move |lead| (s, lead))).collect();
    let hit = first_in_blocks(blocks.len(), workers, |b, cutoff| {
        let (s, lead) = blocks[b];
        let mut acc = vec![0u64; cols.words];
        let mut subset = Vec::with_capacity(s);
        for (count, rest) in Combinations::new(n - lead - 1, s - 1).enumerate() {
            if count % 4096 == 4095 && cutoff.superseded(b) {
                return None;
            }
            subset.clear();
            subset.push(lead);
            subset.extend(rest.iter().map(|&j| j + lead + 1));
            for (bits, low, high) in
                [(&cols, ViolationKind::ColLow, ViolationKind::ColHigh), (&rows, ViolationKind::RowLow, ViolationKind::RowHigh)]
            {
                let w = bits.sum_weight(&subset, &mut acc);
                let kind = if alpha.below(w, n) {
                    low
                } else if alpha.above(w, n) {
                    high
                } else {
                    continue;
                };
                return Some(Violation { kind, subset: subset.clone(), weight: w });
            }
        }
        None
    });
    let violation = hit.map(|(_, v)| v);
    Ok(GoodnessReport { alpha, good: violation.is_none(), violation })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SampleOutcome {
    Found { r: FqMat, tries: u64 },
    Failure { tries: u64 },
}

/// The fair-coin matrix drawn on trial `trial` (1-based) for `seed`.
pub fn trial_matrix(n: usize, seed: u64, trial: u64) -> FqMat {
    let f2 = FieldCtx::prime(2).expect("2 is prime");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let rows: Vec<Vec<Elem>> = (0..n).map(|_| (0..n).map(|_| rng.random::<bool>() as Elem).collect()).collect();
    FqMat::from_elem_rows(&f2, &rows, n)
}

const TRIALS_PER_BLOCK: u64 = 64;

/// Draws i.i.d. fair-coin `n×n` matrices until one is α-good. Trial `t` uses the
/// ChaCha8 stream `t` of `seed`, so the result does not depend on `workers`.
pub fn sample_good(n: usize, alpha: Alpha, seed: u64, max_tries: u64, workers: usize) -> Result<SampleOutcome> {
    if n == 0 || max_tries == 0 {
        return Err(Error::DomainError("n and max_tries must be at least 1".into()));
    }
    let needed = subset_count(n, alpha.floor_times(n));
    if needed > DEFAULT_SUBSET_BUDGET {
        return Err(Error::BudgetExceeded { needed, budget: DEFAULT_SUBSET_BUDGET });
    }
    let blocks = max_tries.div_ceil(TRIALS_PER_BLOCK) as usize;
    let hit = first_in_blocks(blocks, workers, |b, cutoff| {
        let start = b as u64 * TRIALS_PER_BLOCK + 1;
        let end = (start + TRIALS_PER_BLOCK).min(max_tries + 1);
        for t in start..end {
            if cutoff.superseded(b) {
                return None;
            }
            let r = trial_matrix(n, seed, t);
            let report = is_alpha_good(&r, alpha, 1, DEFAULT_SUBSET_BUDGET).expect("budget checked");
            if report.good {
                return Some((r, t));
            }
        }
        None
    });
    Ok(match hit {
        Some((_, (r, tries))) => SampleOutcome::Found { r, tries },
        None => SampleOutcome::Failure { tries: max_tries },
    })
}

/// The `[[2n, 1]]` code with `L = [[0, R], [Rᵀ, 0]]`, `D` its strict upper triangle and
/// `C` the zero-sum subspace of `F_2^{2n}`.
pub fn block_code_from_r(r: &FqMat) -> Result<StabilizerCode> {
    if !r.field().is_binary() || r.field().r() != 1 || !r.is_square() {
        return Err(Error::DimensionMismatch("block construction needs a square matrix over F_2".into()));
    }
    let n = r.rows();
    let f2 = r.field().clone();
    let mut l = FqMat::zeros(&f2, 2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let v = r.get(i, j);
            l.set(i, n + j, v);
            l.set(n + j, i, v);
        }
    }
    let d = l.strict_upper();
    let c = Subspace::zero_sum(&f2, 2 * n)?;
    build_from_ld(&l, &d, &c)
}

/// `exp(−μδ²/2)` with `μ = n·p`, an upper bound on `Pr[X < (1−δ)μ]` for a binomial `X`.
///
/// `δ = 1` is accepted as the limiting case of the open interval.
pub fn chernoff_bound(n: u64, p: f64, delta: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::DomainError(format!("success probability {p} is not in (0,1)")));
    }
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::DomainError(format!("delta {delta} is not in (0,1]")));
    }
    let mu = n as f64 * p;
    Ok((-mu * delta * delta / 2.0).exp())
}

/// Fraction of `trials` seeded binomial draws `X ~ Bin(n, p)` with `X < threshold`.
pub fn binomial_tail_frequency(n: u64, p: f64, threshold: u64, trials: u64, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut below = 0u64;
    for _ in 0..trials {
        let x = (0..n).filter(|_| rng.random_bool(p)).count() as u64;
        if x < threshold {
            below += 1;
        }
    }
    below as f64 / trials as f64
}
