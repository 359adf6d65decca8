//! Exact scalars: roots of unity and elements of the ring of cyclotomic integers.
//!
//! A [`Root`] is `ζ_m^k` stored as a reduced fraction `k/m` of a full turn.
//! A [`Cyclotomic`] is an element of `Z[ζ_N]` stored in the power basis
//! `1, ζ_N, …, ζ_N^{φ(N)-1}` after reduction modulo the cyclotomic polynomial
//! `Φ_N`, so two values of the same conductor are equal iff their coefficient
//! vectors are. Values of different conductors are compared after lifting both
//! to the least common multiple.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// The root of unity `ζ_order^exponent`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    exponent: u64,
    order: u64,
}

impl Root {
    pub const ONE: Root = Root {
        exponent: 0,
        order: 1,
    };

    /// `ζ_order^exponent`. Panics if `order == 0`.
    pub fn new(exponent: i64, order: u64) -> Self {
        assert!(order > 0, "root of unity of order zero");
        let k = exponent.rem_euclid(order as i64) as u64;
        let g = gcd(k, order);
        Root {
            exponent: k / g,
            order: order / g,
        }
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    pub fn inv(self) -> Self {
        Root::new(-(self.exponent as i64), self.order)
    }

    pub fn pow(self, e: i64) -> Self {
        let k = (self.exponent as i128 * e as i128).rem_euclid(self.order as i128);
        Root::new(k as i64, self.order)
    }

    /// Some square root; `ζ_m^k ↦ ζ_{2m}^k`.
    pub fn sqrt(self) -> Self {
        Root::new(self.exponent as i64, self.order * 2)
    }

    pub fn to_cyclotomic(self) -> Cyclotomic {
        Cyclotomic::root(self)
    }
}

impl Mul for Root {
    type Output = Root;
    fn mul(self, rhs: Root) -> Root {
        let m = lcm(self.order, rhs.order);
        let k = self.exponent * (m / self.order) + rhs.exponent * (m / rhs.order);
        Root::new((k % m) as i64, m)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            f.write_str("1")
        } else {
            write!(f, "z{}^{}", self.order, self.exponent)
        }
    }
}

/// Integer polynomial helpers; coefficients are little-endian.
mod poly {
    use alloc::vec;
    use alloc::vec::Vec;

    fn trim(p: &mut Vec<i64>) {
        while p.last() == Some(&0) {
            p.pop();
        }
    }

    /// Exact quotient of `num` by the monic polynomial `den`.
    fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
        let mut rem = num.to_vec();
        trim(&mut rem);
        let dd = den.len() - 1;
        if rem.len() < den.len() {
            return vec![];
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            quot[i] = c;
            if c != 0 {
                for (j, &d) in den.iter().enumerate() {
                    rem[i + j] -= c * d;
                }
            }
        }
        debug_assert!(rem.iter().all(|&c| c == 0));
        quot
    }

    /// `Φ_n`, computed from `x^n - 1 = ∏_{d | n} Φ_d`.
    pub fn cyclotomic(n: u64) -> Vec<i64> {
        let n = n as usize;
        let mut p = vec![0i64; n + 1];
        p[0] = -1;
        p[n] = 1;
        for d in 1..n {
            if n.is_multiple_of(d) {
                p = div_exact(&p, &cyclotomic(d as u64));
            }
        }
        p
    }

    /// Remainder of `p` modulo the monic polynomial `m`, padded to `deg m`.
    pub fn reduce(mut p: Vec<i64>, m: &[i64]) -> Vec<i64> {
        let d = m.len() - 1;
        for i in (d..p.len()).rev() {
            let c = p[i];
            if c != 0 {
                for (j, &mj) in m.iter().enumerate() {
                    p[i - d + j] -= c * mj;
                }
            }
        }
        p.resize(d, 0);
        p
    }
}

/// An element of `Z[ζ_N]`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    fn from_poly(conductor: u64, p: Vec<i64>) -> Self {
        let m = poly::cyclotomic(conductor);
        Cyclotomic {
            conductor,
            coeffs: poly::reduce(p, &m),
        }
    }

    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![0],
        }
    }

    pub fn one() -> Self {
        Self::integer(1)
    }

    pub fn integer(n: i64) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![n],
        }
    }

    pub fn root(r: Root) -> Self {
        let mut p = vec![0i64; r.exponent as usize + 1];
        p[r.exponent as usize] = 1;
        Self::from_poly(r.order, p)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Re-express in `Z[ζ_n]` for a multiple `n` of the conductor.
    fn lift(&self, n: u64) -> Cyclotomic {
        if n == self.conductor {
            return self.clone();
        }
        debug_assert_eq!(n % self.conductor, 0);
        let step = (n / self.conductor) as usize;
        let mut p = vec![0i64; (self.coeffs.len().max(1) - 1) * step + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            p[i * step] = c;
        }
        Self::from_poly(n, p)
    }

    fn common(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let n = lcm(self.conductor, other.conductor);
        (self.lift(n), other.lift(n))
    }

    /// Returns the root of unity this value equals, if any.
    pub fn as_root(&self) -> Option<Root> {
        let n = self.conductor;
        // Every root of unity in Q(ζ_n) has order dividing lcm(2, n).
        let m = lcm(2, n);
        (0..m)
            .map(|k| Root::new(k as i64, m))
            .find(|r| Cyclotomic::root(*r) == *self)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Cyclotomic) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(rhs);
        let mut p = vec![0i64; a.coeffs.len() + b.coeffs.len()];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                p[i + j] += x * y;
            }
        }
        Cyclotomic::from_poly(a.conductor, p)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_root() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => write!(f, "{c}*z{}^{i}", self.conductor)?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Square matrix over `Z[ζ]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycMatrix {
    dim: usize,
    entries: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn zero(dim: usize) -> Self {
        CycMatrix {
            dim,
            entries: vec![Cyclotomic::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, Cyclotomic::one());
        }
        m
    }

    pub fn diagonal(diag: &[Root]) -> Self {
        let mut m = Self::zero(diag.len());
        for (i, r) in diag.iter().enumerate() {
            m.set(i, i, r.to_cyclotomic());
        }
        m
    }

    /// The matrix sending basis vector `i` to `coeff[i] · e_{perm[i]}`.
    pub fn monomial(perm: &[usize], coeff: &[Root]) -> Self {
        let mut m = Self::zero(perm.len());
        for (i, (&p, c)) in perm.iter().zip(coeff).enumerate() {
            m.set(p, i, c.to_cyclotomic());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Cyclotomic {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Cyclotomic) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, rhs: &CycMatrix) -> CycMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let s = out.get(i, j) + &(a * b);
                    out.set(i, j, s);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> CycMatrix {
        (0..e).fold(Self::identity(self.dim), |acc, _| acc.mul(self))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }
}
