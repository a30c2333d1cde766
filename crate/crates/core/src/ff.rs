//! Prime fields `F_p` and the quadratic extension `L = F_p[t]/(t^2 - n)`.
//!
//! Every element lives in `L`; elements of `F_p` are those with a zero
//! `t`-coefficient. An element carries its [`FieldParams`] so the usual
//! arithmetic operators work directly on values. Mixing elements of different
//! fields is a logic error and trips a debug assertion.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &b in &BASES {
        let mut x = pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Euler's criterion in `F_p`. Zero counts as a square.
fn is_residue(x: u64, p: u64) -> bool {
    let x = x % p;
    x == 0 || pow_mod(x, (p - 1) / 2, p) == 1
}

/// Tonelli-Shanks in `F_p`; `x` must be a residue.
fn sqrt_mod_p(x: u64, p: u64, nonresidue: u64) -> u64 {
    let x = x % p;
    if x == 0 {
        return 0;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut m = s;
    let mut c = pow_mod(nonresidue, q, p);
    let mut t = pow_mod(x, q, p);
    let mut r = pow_mod(x, q.div_ceil(2), p);
    while t != 1 {
        // least i with t^(2^i) = 1
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let mut b = c;
        for _ in 0..(m - i - 1) {
            b = mul_mod(b, b, p);
        }
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    r
}

/// The modulus `p` and the non-residue `n` defining `L = F_p[t]/(t^2 - n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldParams {
    p: u64,
    nonresidue: u64,
}

impl FieldParams {
    /// Builds the tower for `p`, picking the smallest positive non-residue.
    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 63).contains(&p) || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        let nonresidue = (2..p)
            .find(|&n| !is_residue(n, p))
            .expect("odd primes have non-residues");
        Ok(FieldParams { p, nonresidue })
    }

    pub fn with_nonresidue(p: u64, nonresidue: u64) -> Result<Self> {
        if !(3..1 << 63).contains(&p) || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        if is_residue(nonresidue, p) {
            return Err(Error::BadNonResidue(nonresidue, p));
        }
        Ok(FieldParams {
            p,
            nonresidue: nonresidue % p,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn nonresidue(&self) -> u64 {
        self.nonresidue
    }

    /// `p^2`, the size of `L`.
    pub fn order(&self) -> u128 {
        self.p as u128 * self.p as u128
    }

    pub fn zero(&self) -> Fe {
        self.elem(0, 0)
    }

    pub fn one(&self) -> Fe {
        self.elem(1, 0)
    }

    /// The adjoined square root `t` of the non-residue.
    pub fn gen(&self) -> Fe {
        self.elem(0, 1)
    }

    /// `c0 + c1 t`, both coefficients reduced mod `p`.
    pub fn elem(&self, c0: u64, c1: u64) -> Fe {
        Fe {
            c0: c0 % self.p,
            c1: c1 % self.p,
            field: *self,
        }
    }

    pub fn from_u64(&self, c: u64) -> Fe {
        self.elem(c, 0)
    }

    pub fn from_i64(&self, c: i64) -> Fe {
        let r = (c as i128).rem_euclid(self.p as i128) as u64;
        self.elem(r, 0)
    }

    /// Signed pair, each coordinate reduced into `[0, p)`.
    pub fn elem_signed(&self, c0: i64, c1: i64) -> Fe {
        let p = self.p as i128;
        let r0 = (c0 as i128).rem_euclid(p) as u64;
        let r1 = (c1 as i128).rem_euclid(p) as u64;
        self.elem(r0, r1)
    }

    /// Euler's criterion applied inside `F_p`.
    pub fn is_square_in_prime_subfield(&self, c: u64) -> bool {
        is_residue(c, self.p)
    }

    /// All of `F_p` in increasing order.
    pub fn prime_elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.p).map(move |c| self.from_u64(c))
    }

    /// All of `L`, ordered by `(c1, c0)`.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.p).flat_map(move |c1| (0..self.p).map(move |c0| self.elem(c0, c1)))
    }
}

/// An element `c0 + c1 t` of `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fe {
    c0: u64,
    c1: u64,
    field: FieldParams,
}

impl Fe {
    pub fn c0(&self) -> u64 {
        self.c0
    }

    pub fn c1(&self) -> u64 {
        self.c1
    }

    pub fn field(&self) -> FieldParams {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    pub fn is_one(&self) -> bool {
        self.c0 == 1 && self.c1 == 0
    }

    /// True when the element lies in `F_p`.
    pub fn is_rational(&self) -> bool {
        self.c1 == 0
    }

    pub fn square(self) -> Fe {
        self * self
    }

    pub fn double(self) -> Fe {
        self + self
    }

    /// Field norm `c0^2 - n c1^2` down to `F_p`.
    pub fn norm(&self) -> u64 {
        let p = self.field.p;
        sub_mod(
            mul_mod(self.c0, self.c0, p),
            mul_mod(self.field.nonresidue, mul_mod(self.c1, self.c1, p), p),
            p,
        )
    }

    /// Conjugate `c0 - c1 t` (the `p`-power Frobenius).
    pub fn conjugate(self) -> Fe {
        Fe {
            c0: self.c0,
            c1: sub_mod(0, self.c1, self.field.p),
            field: self.field,
        }
    }

    pub fn pow(self, mut exp: u128) -> Fe {
        let mut acc = self.field.one();
        let mut base = self;
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            base = base.square();
            exp >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Result<Fe> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.field.p;
        let n_inv = pow_mod(self.norm(), p - 2, p);
        let c = self.conjugate();
        Ok(Fe {
            c0: mul_mod(c.c0, n_inv, p),
            c1: mul_mod(c.c1, n_inv, p),
            field: self.field,
        })
    }

    pub fn checked_div(self, rhs: Fe) -> Result<Fe> {
        Ok(self * rhs.inv()?)
    }

    /// Halving in odd characteristic.
    pub fn halve(self) -> Fe {
        let two_inv = self.field.p.div_ceil(2);
        Fe {
            c0: mul_mod(self.c0, two_inv, self.field.p),
            c1: mul_mod(self.c1, two_inv, self.field.p),
            field: self.field,
        }
    }

    /// Squareness in `L` by Euler's criterion `x^((p^2-1)/2) = 1`.
    pub fn is_square(&self) -> bool {
        self.is_zero() || self.pow((self.field.order() - 1) / 2).is_one()
    }

    /// Squareness of an `F_p` element judged inside `F_p`; false off the subfield.
    pub fn is_square_in_prime_subfield(&self) -> bool {
        self.is_rational() && is_residue(self.c0, self.field.p)
    }

    /// The two square roots `(y, -y)` of `self` in `L`, canonical one first.
    ///
    /// The canonical root is the one with the smaller `(c1, c0)` pair.
    pub fn sqrt(self) -> Result<(Fe, Fe)> {
        let y = self.sqrt_any()?;
        if y.square() != self {
            return Err(Error::InternalInconsistency(format!("sqrt({self}) produced {y}")));
        }
        let z = -y;
        Ok(if y <= z { (y, z) } else { (z, y) })
    }

    pub fn canonical_sqrt(self) -> Result<Fe> {
        Ok(self.sqrt()?.0)
    }

    fn sqrt_any(self) -> Result<Fe> {
        let FieldParams { p, nonresidue } = self.field;
        if self.is_zero() {
            return Ok(self);
        }
        if self.c1 == 0 {
            return Ok(if is_residue(self.c0, p) {
                self.field.from_u64(sqrt_mod_p(self.c0, p, nonresidue))
            } else {
                // x = n * (x/n) with x/n a residue, so sqrt(x) = sqrt(x/n) t
                let n_inv = pow_mod(nonresidue, p - 2, p);
                let s = sqrt_mod_p(mul_mod(self.c0, n_inv, p), p, nonresidue);
                self.field.elem(0, s)
            });
        }
        let norm = self.norm();
        if !is_residue(norm, p) {
            return Err(Error::NonSquare(self.to_string()));
        }
        let s = sqrt_mod_p(norm, p, nonresidue);
        let two_inv = p.div_ceil(2);
        // exactly one of (c0 +- s)/2 is a residue because their product is n c1^2 / 4
        let mut h = mul_mod(add_mod(self.c0, s, p), two_inv, p);
        if !is_residue(h, p) {
            h = mul_mod(sub_mod(self.c0, s, p), two_inv, p);
        }
        let y0 = sqrt_mod_p(h, p, nonresidue);
        let y1 = mul_mod(self.c1, pow_mod(mul_mod(2, y0, p), p - 2, p), p);
        Ok(self.field.elem(y0, y1))
    }

    /// Sort key matching the canonical-root convention.
    pub fn key(&self) -> (u64, u64) {
        (self.c1, self.c0)
    }
}

impl PartialOrd for Fe {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fe {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c0, self.c1) {
            (c0, 0) => write!(f, "{c0}"),
            (0, c1) => write!(f, "{c1}t"),
            (c0, c1) => write!(f, "{c0}+{c1}t"),
        }
    }
}

impl Add for Fe {
    type Output = Fe;

    #[inline]
    fn add(self, rhs: Fe) -> Fe {
        debug_assert_eq!(self.field, rhs.field);
        let p = self.field.p;
        Fe {
            c0: add_mod(self.c0, rhs.c0, p),
            c1: add_mod(self.c1, rhs.c1, p),
            field: self.field,
        }
    }
}

impl Sub for Fe {
    type Output = Fe;

    #[inline]
    fn sub(self, rhs: Fe) -> Fe {
        debug_assert_eq!(self.field, rhs.field);
        let p = self.field.p;
        Fe {
            c0: sub_mod(self.c0, rhs.c0, p),
            c1: sub_mod(self.c1, rhs.c1, p),
            field: self.field,
        }
    }
}

impl Neg for Fe {
    type Output = Fe;

    #[inline]
    fn neg(self) -> Fe {
        let p = self.field.p;
        Fe {
            c0: sub_mod(0, self.c0, p),
            c1: sub_mod(0, self.c1, p),
            field: self.field,
        }
    }
}

impl Mul for Fe {
    type Output = Fe;

    #[inline]
    fn mul(self, rhs: Fe) -> Fe {
        debug_assert_eq!(self.field, rhs.field);
        let FieldParams { p, nonresidue } = self.field;
        // (a0 + a1 t)(b0 + b1 t) = a0 b0 + n a1 b1 + (a0 b1 + a1 b0) t
        let c0 = add_mod(
            mul_mod(self.c0, rhs.c0, p),
            mul_mod(nonresidue, mul_mod(self.c1, rhs.c1, p), p),
            p,
        );
        let c1 = add_mod(mul_mod(self.c0, rhs.c1, p), mul_mod(self.c1, rhs.c0, p), p);
        Fe {
            c0,
            c1,
            field: self.field,
        }
    }
}

impl AddAssign for Fe {
    fn add_assign(&mut self, rhs: Fe) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fe {
    fn sub_assign(&mut self, rhs: Fe) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fe {
    fn mul_assign(&mut self, rhs: Fe) {
        *self = *self * rhs;
    }
}

impl core::iter::Product for Fe {
    fn product<I: Iterator<Item = Fe>>(mut iter: I) -> Fe {
        let first = iter.next().expect("product of an empty iterator has no field");
        iter.fold(first, |acc, x| acc * x)
    }
}
