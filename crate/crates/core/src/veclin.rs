//! Vectors, matrices and subspaces over `F_q`.
//!
//! Vectors are plain `Vec<Elem>`. [`FqMat`] stores rows densely, except over `F_2`
//! where each row is a packed bitset and elimination works a machine word at a time.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf::{Elem, FieldCtx};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Storage {
    Dense(Vec<Elem>),
    Packed { words: usize, data: Vec<u64> },
}

/// A `rows × cols` matrix over `F_q`.
#[derive(Clone, Debug)]
pub struct FqMat {
    field: FieldCtx,
    rows: usize,
    cols: usize,
    storage: Storage,
}

impl PartialEq for FqMat {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.storage == other.storage
    }
}

impl Eq for FqMat {}

/// Result of [`FqMat::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub reduced: FqMat,
    pub pivots: Vec<usize>,
}

impl FqMat {
    pub fn zeros(field: &FieldCtx, rows: usize, cols: usize) -> FqMat {
        let storage = if field.is_binary() {
            let words = cols.div_ceil(64).max(1);
            Storage::Packed { words, data: vec![0; rows * words] }
        } else {
            Storage::Dense(vec![0; rows * cols])
        };
        FqMat { field: field.clone(), rows, cols, storage }
    }

    pub fn identity(field: &FieldCtx, n: usize) -> FqMat {
        let mut m = FqMat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of integers, checking that each lies in `[0, q)`.
    pub fn from_rows<R: AsRef<[u64]>>(field: &FieldCtx, rows: &[R]) -> Result<FqMat> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = FqMat::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.check(v)?);
            }
        }
        Ok(m)
    }

    pub fn from_elem_rows(field: &FieldCtx, rows: &[Vec<Elem>], cols: usize) -> FqMat {
        let mut m = FqMat::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            debug_assert_eq!(row.len(), cols);
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        debug_assert!(i < self.rows && j < self.cols);
        match &self.storage {
            Storage::Dense(v) => v[i * self.cols + j],
            Storage::Packed { words, data } => ((data[i * words + j / 64] >> (j % 64)) & 1) as Elem,
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        debug_assert!(i < self.rows && j < self.cols);
        match &mut self.storage {
            Storage::Dense(d) => d[i * self.cols + j] = v,
            Storage::Packed { words, data } => {
                let w = &mut data[i * *words + j / 64];
                let bit = 1u64 << (j % 64);
                if v & 1 == 1 {
                    *w |= bit;
                } else {
                    *w &= !bit;
                }
            }
        }
    }

    pub fn row(&self, i: usize) -> Vec<Elem> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Packed words of row `i` (binary matrices only).
    pub fn packed_row(&self, i: usize) -> Option<&[u64]> {
        match &self.storage {
            Storage::Packed { words, data } => Some(&data[i * words..(i + 1) * words]),
            Storage::Dense(_) => None,
        }
    }

    pub fn transpose(&self) -> FqMat {
        let mut t = FqMat::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Elem]) -> Vec<Elem> {
        debug_assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).fold(0, |acc, j| self.field.add(acc, self.field.mul(self.get(i, j), x[j]))))
            .collect()
    }

    /// `xᵀ·M·y`.
    pub fn bilinear(&self, x: &[Elem], y: &[Elem]) -> Elem {
        self.field.dot(x, &self.mul_vec(y))
    }

    pub fn add(&self, other: &FqMat) -> Result<FqMat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut s = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                s.set(i, j, self.field.add(self.get(i, j), other.get(i, j)));
            }
        }
        Ok(s)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        match &self.storage {
            Storage::Dense(v) => v.iter().all(|&x| x == 0),
            Storage::Packed { data, .. } => data.iter().all(|&w| w == 0),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        match &mut self.storage {
            Storage::Dense(v) => {
                for j in 0..self.cols {
                    v.swap(a * self.cols + j, b * self.cols + j);
                }
            }
            Storage::Packed { words, data } => {
                for w in 0..*words {
                    data.swap(a * *words + w, b * *words + w);
                }
            }
        }
    }

    /// Reduced row echelon form: leftmost pivot column, first nonzero row as pivot,
    /// pivot entries normalized to 1.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        match m.storage {
            Storage::Packed { words, ref mut data } => {
                for col in 0..self.cols {
                    if rank == self.rows {
                        break;
                    }
                    let (w, bit) = (col / 64, 1u64 << (col % 64));
                    let Some(pr) = (rank..self.rows).find(|&r| data[r * words + w] & bit != 0) else {
                        continue;
                    };
                    if pr != rank {
                        for k in 0..words {
                            data.swap(pr * words + k, rank * words + k);
                        }
                    }
                    for r in 0..self.rows {
                        if r != rank && data[r * words + w] & bit != 0 {
                            for k in 0..words {
                                data[r * words + k] ^= data[rank * words + k];
                            }
                        }
                    }
                    pivots.push(col);
                    rank += 1;
                }
            }
            Storage::Dense(_) => {
                let f = self.field.clone();
                for col in 0..self.cols {
                    if rank == self.rows {
                        break;
                    }
                    let Some(pr) = (rank..self.rows).find(|&r| m.get(r, col) != 0) else {
                        continue;
                    };
                    m.swap_rows(pr, rank);
                    let inv = f.inv(m.get(rank, col)).unwrap();
                    for j in 0..self.cols {
                        let v = f.mul(inv, m.get(rank, j));
                        m.set(rank, j, v);
                    }
                    for r in 0..self.rows {
                        let factor = m.get(r, col);
                        if r != rank && factor != 0 {
                            for j in col..self.cols {
                                let v = f.sub(m.get(r, j), f.mul(factor, m.get(rank, j)));
                                m.set(r, j, v);
                            }
                        }
                    }
                    pivots.push(col);
                    rank += 1;
                }
            }
        }
        Rref { rank, reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// `{x : M·x = 0}` in reduced echelon form.
    pub fn kernel(&self) -> Subspace {
        let Rref { rank, reduced, pivots } = self.rref();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vectors: Vec<Vec<Elem>> = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![0; self.cols];
                x[free] = 1;
                for (i, &p) in pivots.iter().enumerate().take(rank) {
                    x[p] = f.neg(reduced.get(i, free));
                }
                x
            })
            .collect();
        Subspace::span(f, self.cols, &vectors)
    }

    /// Strict upper triangle (diagonal and below set to zero).
    pub fn strict_upper(&self) -> FqMat {
        let mut d = FqMat::zeros(&self.field, self.rows, self.cols);
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                d.set(i, j, self.get(i, j));
            }
        }
        d
    }

    /// Parses the `.fqm` text format.
    pub fn parse_fqm(text: &str) -> Result<FqMat> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let ints = |line: &str| -> Result<Vec<u64>> {
            line.split_whitespace()
                .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("not an integer: {t:?}"))))
                .collect()
        };
        let header = ints(lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?)?;
        let [p, r, rows, cols] = header[..] else {
            return Err(Error::Parse("header must be `p r rows cols`".into()));
        };
        let modulus = if r > 1 {
            let m = ints(lines.next().ok_or_else(|| Error::Parse("missing modulus line".into()))?)?;
            Some(m.iter().map(|&c| c as u32).collect::<Vec<_>>())
        } else {
            None
        };
        let field = FieldCtx::new(p as u32, r as u32, modulus.as_deref())?;
        let mut data = Vec::with_capacity(rows as usize);
        for i in 0..rows {
            let line = lines.next().ok_or_else(|| Error::Parse(format!("missing row {i}")))?;
            let row = ints(line)?;
            if row.len() != cols as usize {
                return Err(Error::Parse(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            data.push(row);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("unexpected content after the last row".into()));
        }
        let mut m = FqMat::zeros(&field, rows as usize, cols as usize);
        for (i, row) in data.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, field.check(v)?);
            }
        }
        Ok(m)
    }

    pub fn to_fqm(&self) -> String {
        let f = &self.field;
        let mut s = format!("{} {} {} {}\n", f.p(), f.r(), self.rows, self.cols);
        if let Some(m) = f.modulus() {
            let line: Vec<String> = m.iter().map(u32::to_string).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(u8::to_string).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }
}

/// Circulant matrix: row `i` is the first row cyclically shifted right by `i`.
pub fn circulant(field: &FieldCtx, first_row: &[Elem]) -> FqMat {
    let n = first_row.len();
    let mut m = FqMat::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, first_row[(j + n - i) % n]);
        }
    }
    m
}

/// Splits a symmetric `L` as `D + Dᵀ`, with `D` the strict upper triangle of `L` plus
/// `diag(L)/2` in odd characteristic.
pub fn split_upper(l: &FqMat) -> Result<FqMat> {
    if !l.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let f = l.field();
    let mut d = l.strict_upper();
    match f.half() {
        Some(h) => {
            for i in 0..l.rows() {
                d.set(i, i, f.mul(h, l.get(i, i)));
            }
        }
        None => {
            if let Some(i) = (0..l.rows()).find(|&i| l.get(i, i) != 0) {
                return Err(Error::OddDiagonalInCharTwo(i));
            }
        }
    }
    Ok(d)
}

/// Greedily picks candidates that extend the span of `base`, in candidate order.
pub fn extend_basis(field: &FieldCtx, base: &[Vec<Elem>], candidates: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    // rows kept fully reduced against each other's leading positions
    let mut rows: Vec<(usize, Vec<Elem>)> = Vec::new();
    let insert = |v: &[Elem], rows: &mut Vec<(usize, Vec<Elem>)>| -> bool {
        let mut v = v.to_vec();
        for (lead, r) in rows.iter() {
            if v[*lead] != 0 {
                let s = field.neg(v[*lead]);
                field.axpy(&mut v, s, r);
            }
        }
        let Some(lead) = leading(&v) else {
            return false;
        };
        let inv = field.inv(v[lead]).unwrap();
        let v = field.scale(inv, &v);
        for (_, r) in rows.iter_mut() {
            if r[lead] != 0 {
                let s = field.neg(r[lead]);
                field.axpy(r, s, &v);
            }
        }
        rows.push((lead, v));
        true
    };
    for b in base {
        insert(b, &mut rows);
    }
    candidates.iter().filter(|c| insert(c, &mut rows)).cloned().collect()
}

/// A subspace of `F_q^n` given by an echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldCtx,
    n: usize,
    basis: Vec<Vec<Elem>>,
}

fn leading(v: &[Elem]) -> Option<usize> {
    v.iter().position(|&x| x != 0)
}

impl Subspace {
    /// Wraps an explicit basis. The vectors must be in echelon form (strictly
    /// increasing leading positions), which also makes them independent.
    pub fn new(field: &FieldCtx, n: usize, basis: Vec<Vec<Elem>>) -> Result<Subspace> {
        let mut last: Option<usize> = None;
        for (i, v) in basis.iter().enumerate() {
            if v.len() != n {
                return Err(Error::LengthMismatch { left: v.len(), right: n });
            }
            let lead = leading(v).ok_or(Error::DependentGenerators)?;
            if last.is_some_and(|l| lead <= l) {
                return Err(Error::DimensionMismatch(format!("basis vector {i} breaks echelon order")));
            }
            last = Some(lead);
        }
        Ok(Subspace { field: field.clone(), n, basis })
    }

    /// The span of arbitrary vectors, as a reduced echelon basis.
    pub fn span(field: &FieldCtx, n: usize, vectors: &[Vec<Elem>]) -> Subspace {
        let m = FqMat::from_elem_rows(field, vectors, n);
        let r = m.rref();
        let basis = (0..r.rank).map(|i| r.reduced.row(i)).collect();
        Subspace { field: field.clone(), n, basis }
    }

    pub fn whole(field: &FieldCtx, n: usize) -> Subspace {
        let basis = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        Subspace { field: field.clone(), n, basis }
    }

    /// `{a : Σ a_i = 0}` with the canonical basis `e_i − e_{i+1}`.
    pub fn zero_sum(field: &FieldCtx, n: usize) -> Result<Subspace> {
        if n < 2 {
            return Err(Error::DimensionTooSmall { min: 2, got: n });
        }
        let minus_one = field.neg(1);
        let basis = (0..n - 1)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v[i + 1] = minus_one;
                v
            })
            .collect();
        Ok(Subspace { field: field.clone(), n, basis })
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    /// True if this is the zero-sum subspace.
    pub fn is_zero_sum(&self) -> bool {
        self.n >= 2
            && self.dim() == self.n - 1
            && self.basis.iter().all(|v| v.iter().fold(0, |s, &x| self.field.add(s, x)) == 0)
    }

    /// Reduces `v` modulo the subspace; the result is zero on every leading position
    /// and is the lexicographically least vector of the coset `v + C`.
    pub fn reduce(&self, v: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut out = v.to_vec();
        for b in &self.basis {
            let lead = leading(b).unwrap();
            if out[lead] != 0 {
                let s = f.neg(f.mul(out[lead], f.inv(b[lead]).unwrap()));
                f.axpy(&mut out, s, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        v.len() == self.n && self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Leading positions of the basis vectors.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|b| leading(b).unwrap()).collect()
    }

    /// `Σ λ_i b_i`.
    pub fn combine(&self, coeffs: &[Elem]) -> Vec<Elem> {
        let mut v = vec![0; self.n];
        for (b, &c) in self.basis.iter().zip(coeffs) {
            self.field.axpy(&mut v, c, b);
        }
        v
    }

    /// All `q^dim` elements, in mixed-radix order of the coefficients (first fastest).
    pub fn elements(&self) -> Vec<Vec<Elem>> {
        let q = self.field.q();
        let total = q.pow(self.dim() as u32);
        let mut coeffs = vec![0 as Elem; self.dim()];
        let mut out = Vec::with_capacity(total);
        for _ in 0..total {
            out.push(self.combine(&coeffs));
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
}
