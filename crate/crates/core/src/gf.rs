//! Arithmetic in `F_q = F_{p^r}` for `q ≤ 256`.
//!
//! Elements are encoded as integers `Σ c_i p^i` in `[0, q)` where `(c_0, …, c_{r-1})`
//! are the coordinates in the power basis of the modulus polynomial. All operations
//! are table lookups, so a [`FieldCtx`] is cheap to clone and share between threads.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A field element, encoded as described in the module docs.
pub type Elem = u8;

/// Exponent `e` of a phase `ω^e` with `ω = exp(2πi/p)`. Always in `[0, p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhaseExp(pub u8);

impl PhaseExp {
    pub const ONE: PhaseExp = PhaseExp(0);

    pub fn add(self, other: PhaseExp, p: u32) -> PhaseExp {
        PhaseExp(((self.0 as u32 + other.0 as u32) % p) as u8)
    }

    pub fn neg(self, p: u32) -> PhaseExp {
        PhaseExp(((p - self.0 as u32 % p) % p) as u8)
    }

    /// The complex number `exp(2πi·e/p)`.
    pub fn to_complex(self, p: u32) -> Complex64 {
        phase_value(self.0 as u32, p)
    }
}

/// `exp(2πi·e/p)`, with exact values for the real cases.
pub fn phase_value(e: u32, p: u32) -> Complex64 {
    let e = e % p;
    if e == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if 2 * e == p {
        return Complex64::new(-1.0, 0.0);
    }
    Complex64::from_polar(1.0, 2.0 * PI * e as f64 / p as f64)
}

struct Tables {
    p: u32,
    r: u32,
    q: usize,
    modulus: Option<Vec<u32>>,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
    trace: Vec<u8>,
}

/// The finite field `F_{p^r}` with precomputed operation tables.
#[derive(Clone)]
pub struct FieldCtx {
    t: Arc<Tables>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.t.modulus {
            Some(m) => write!(f, "F_{}^{} mod {:?}", self.t.p, self.t.r, m),
            None => write!(f, "F_{}", self.t.p),
        }
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t)
            || (self.t.p == other.t.p && self.t.r == other.t.r && self.t.modulus == other.t.modulus)
    }
}

impl Eq for FieldCtx {}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

// Polynomials over F_p: coefficient vectors, lowest degree first.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    // m is monic
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let idx = shift + i;
                r[idx] = (r[idx] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    poly_trim(r)
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(out)
}

/// Exhaustive trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut f = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                f.push((c % p as u64) as u32);
                c /= p as u64;
            }
            f.push(1);
            if poly_rem(m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldCtx {
    /// Builds `F_{p^r}`. A monic modulus `c_0 + c_1 x + … + c_r x^r` is required iff `r > 1`.
    pub fn new(p: u32, r: u32, modulus: Option<&[u32]>) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::NonPrimeP(p));
        }
        if r == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(r).unwrap_or(u64::MAX);
        if q > 256 {
            return Err(Error::FieldTooLarge(q));
        }
        let q = q as usize;
        let modulus = match (r, modulus) {
            (1, None) => None,
            (1, Some(_)) => {
                return Err(Error::InvalidModulus("prime fields take no modulus".into()));
            }
            (_, None) => return Err(Error::MissingModulus(r)),
            (_, Some(m)) => {
                if m.len() != r as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        r + 1,
                        m.len()
                    )));
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(Error::InvalidModulus(format!("coefficient {c} not in F_{p}")));
                }
                if m[r as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if !is_irreducible(m, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                Some(m.to_vec())
            }
        };

        let to_poly = |x: usize| -> Vec<u32> {
            let mut v = Vec::with_capacity(r as usize);
            let mut x = x as u32;
            for _ in 0..r {
                v.push(x % p);
                x /= p;
            }
            poly_trim(v)
        };
        let from_poly = |v: &[u32]| -> Elem {
            v.iter().rev().fold(0u32, |acc, &c| acc * p + c) as Elem
        };

        let polys: Vec<Vec<u32>> = (0..q).map(to_poly).collect();
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for x in 0..q {
            for y in 0..q {
                let mut s = vec![0u32; r as usize];
                for (i, c) in polys[x].iter().enumerate() {
                    s[i] += c;
                }
                for (i, c) in polys[y].iter().enumerate() {
                    s[i] = (s[i] + c) % p;
                }
                add[x * q + y] = from_poly(&poly_trim(s));
                let prod = poly_mul(&polys[x], &polys[y], p);
                let red = match &modulus {
                    Some(m) => poly_rem(&prod, m, p),
                    None => prod,
                };
                mul[x * q + y] = from_poly(&red);
            }
        }
        let mut neg = vec![0; q];
        let mut inv = vec![0; q];
        for x in 0..q {
            neg[x] = (0..q).find(|&y| add[x * q + y] == 0).unwrap() as Elem;
            if x != 0 {
                inv[x] = (0..q).find(|&y| mul[x * q + y] == 1).unwrap() as Elem;
            }
        }
        let mut trace = vec![0u8; q];
        for x in 0..q {
            // x + x^p + … + x^{p^{r-1}}
            let mut acc: usize = 0;
            let mut pow = x;
            for _ in 0..r {
                acc = add[acc * q + pow] as usize;
                let mut next = 1usize;
                for _ in 0..p {
                    next = mul[next * q + pow] as usize;
                }
                pow = next;
            }
            debug_assert!(acc < p as usize, "trace must land in the prime subfield");
            trace[x] = acc as u8;
        }

        Ok(FieldCtx {
            t: Arc::new(Tables { p, r, q, modulus, add, mul, neg, inv, trace }),
        })
    }

    pub fn prime(p: u32) -> Result<FieldCtx> {
        FieldCtx::new(p, 1, None)
    }

    pub fn p(&self) -> u32 {
        self.t.p
    }

    pub fn r(&self) -> u32 {
        self.t.r
    }

    pub fn q(&self) -> usize {
        self.t.q
    }

    pub fn modulus(&self) -> Option<&[u32]> {
        self.t.modulus.as_deref()
    }

    pub fn is_binary(&self) -> bool {
        self.t.q == 2
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.t.add[x as usize * self.t.q + y as usize]
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.t.mul[x as usize * self.t.q + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.t.neg[x as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, x: Elem) -> Option<Elem> {
        (x != 0).then(|| self.t.inv[x as usize])
    }

    /// The image of the integer `k` under `Z → F_p ⊆ F_q`.
    pub fn from_int(&self, k: i64) -> Elem {
        k.rem_euclid(self.t.p as i64) as Elem
    }

    /// `1/2`, defined for odd characteristic only.
    pub fn half(&self) -> Option<Elem> {
        self.inv(self.from_int(2))
    }

    /// Absolute trace `Tr(x) = x + x^p + … + x^{p^{r-1}}`, an element of `F_p`.
    #[inline]
    pub fn trace(&self, x: Elem) -> u8 {
        self.t.trace[x as usize]
    }

    /// Exponent of the additive character `w(x) = ω^{Tr(x)}`.
    #[inline]
    pub fn char_exp(&self, x: Elem) -> PhaseExp {
        PhaseExp(self.trace(x))
    }

    pub fn contains(&self, x: u64) -> bool {
        x < self.t.q as u64
    }

    pub fn check(&self, x: u64) -> Result<Elem> {
        if self.contains(x) {
            Ok(x as Elem)
        } else {
            Err(Error::ElementOutOfRange { value: x, q: self.t.q })
        }
    }

    /// `Σ a_i b_i`.
    pub fn dot(&self, a: &[Elem], b: &[Elem]) -> Elem {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// `y ← y + s·x`.
    pub fn axpy(&self, y: &mut [Elem], s: Elem, x: &[Elem]) {
        if s == 0 {
            return;
        }
        for (yi, &xi) in y.iter_mut().zip(x) {
            *yi = self.add(*yi, self.mul(s, xi));
        }
    }

    pub fn scale(&self, s: Elem, x: &[Elem]) -> Vec<Elem> {
        x.iter().map(|&v| self.mul(s, v)).collect()
    }

    pub fn vadd(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        x.iter().zip(y).map(|(&a, &b)| self.add(a, b)).collect()
    }

    pub fn vneg(&self, x: &[Elem]) -> Vec<Elem> {
        x.iter().map(|&v| self.neg(v)).collect()
    }

    /// Power-basis element `x^j`, encoded `p^j`; these span `F_q` over `F_p`.
    pub fn basis_element(&self, j: u32) -> Elem {
        (self.t.p.pow(j)) as Elem
    }
}
