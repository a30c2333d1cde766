//! Dense univariate polynomials over [`Fe`].

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ff::{Fe, FieldParams};

/// `coeffs[i]` is the coefficient of `x^i`; trailing zeros are always stripped,
/// so the zero polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: FieldParams,
    coeffs: Vec<Fe>,
}

impl Poly {
    pub fn new(field: FieldParams, mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().is_some_and(Fe::is_zero) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldParams) -> Poly {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: FieldParams) -> Poly {
        Poly::constant(field.one())
    }

    pub fn constant(c: Fe) -> Poly {
        Poly::new(c.field(), vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: FieldParams) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `x - c`.
    pub fn linear(c: Fe) -> Poly {
        let field = c.field();
        Poly::new(field, vec![-c, field.one()])
    }

    pub fn field(&self) -> FieldParams {
        self.field
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.field.zero())
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `-1` for zero; handy in comparisons.
    pub fn deg(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn leading(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    pub fn scale(&self, c: Fe) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, at: Fe) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, &c| acc * at + c)
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * self.field.from_u64(i as u64))
            .collect();
        Poly::new(self.field, coeffs)
    }

    pub fn monic(&self) -> Result<Poly> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(lead.inv()?))
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut acc = Poly::one(self.field);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let lead_inv = divisor.leading().ok_or(Error::ZeroPolynomial)?.inv()?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Poly::zero(self.field), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] * lead_inv;
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(self.field, quot), Poly::new(self.field, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Quotient of a division expected to be exact.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::InternalInconsistency(format!(
                "{divisor} does not divide {self}"
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        Ok(self.xgcd(other)?.0)
    }

    /// `(d, s, t)` with `d = s * self + t * other` and `d` monic.
    pub fn xgcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let field = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(field), Poly::zero(field));
        let (mut t0, mut t1) = (Poly::zero(field), Poly::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lead_inv = r0.leading().expect("nonzero gcd").inv()?;
        Ok((r0.scale(lead_inv), s0.scale(lead_inv), t0.scale(lead_inv)))
    }

    /// The monic polynomial `prod (x - r)`.
    pub fn from_roots(field: FieldParams, roots: &[Fe]) -> Poly {
        roots
            .iter()
            .fold(Poly::one(field), |acc, &r| &acc * &Poly::linear(r))
    }
}

/// `[e_1, ..., e_n]` of the inputs, read off the coefficients of `prod (T + v_i)`.
pub fn elementary_symmetric(field: FieldParams, values: &[Fe]) -> Vec<Fe> {
    // e[k] accumulates e_k of the values seen so far
    let mut e = vec![field.zero(); values.len() + 1];
    e[0] = field.one();
    for (seen, &v) in values.iter().enumerate() {
        for k in (1..=seen + 1).rev() {
            let prev = e[k - 1];
            e[k] += prev * v;
        }
    }
    e.remove(0);
    e
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coef = if c.is_rational() {
                c.to_string()
            } else {
                format!("({c})")
            };
            match i {
                0 => write!(f, "{coef}")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "{coef}*x")?,
                _ if c.is_one() => write!(f, "x^{i}")?,
                _ => write!(f, "{coef}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(self.field, out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|&c| -c).collect())
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;

            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;

            fn $method(self, rhs: &'a Poly) -> Poly {
                (&self).$method(rhs)
            }
        }

        impl $tr<Poly> for &Poly {
            type Output = Poly;

            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f11() -> FieldParams {
        FieldParams::new(11).unwrap()
    }

    fn p(field: FieldParams, cs: &[i64]) -> Poly {
        Poly::new(field, cs.iter().map(|&c| field.from_i64(c)).collect())
    }

    #[test]
    fn ring_examples() {
        let f = f11();
        assert_eq!(p(f, &[1, 0, 1]).eval(f.zero()), f.one());
        assert_eq!(p(f, &[-2, 1]) * p(f, &[2, 1]), p(f, &[-4, 0, 1]));
        assert_eq!(p(f, &[0, 0, 0, 1]).derivative(), p(f, &[0, 0, 3]));
        assert_eq!(p(f, &[0, 0, 0]).degree(), None);
        assert_eq!(p(f, &[3, 0, 0]).degree(), Some(0));
        assert_eq!(Poly::zero(f).monic(), Err(Error::ZeroPolynomial));
        assert!(p(f, &[4, 3]).monic().unwrap().is_monic());
    }

    #[test]
    fn divrem_examples() {
        let f = f11();
        assert_eq!(
            p(f, &[-1, 0, 1]).divrem(&p(f, &[-1, 1])).unwrap(),
            (p(f, &[1, 1]), Poly::zero(f))
        );
        assert_eq!(
            p(f, &[0, 1]).divrem(&p(f, &[0, 0, 1])).unwrap(),
            (Poly::zero(f), p(f, &[0, 1]))
        );
        assert_eq!(
            p(f, &[1, 0, 0, 1]).divrem(&p(f, &[1, 1])).unwrap(),
            (p(f, &[1, -1, 1]), Poly::zero(f))
        );
        assert_eq!(p(f, &[1]).divrem(&Poly::zero(f)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn gcd_examples() {
        let f = f11();
        assert_eq!(p(f, &[0, 0, 1]).gcd(&p(f, &[0, 1])).unwrap(), p(f, &[0, 1]));
        assert_eq!(p(f, &[-1, 1]).gcd(&p(f, &[-2, 1])).unwrap(), Poly::one(f));
        let roots: Vec<Fe> = [0, 1, 3, 7, 9].iter().map(|&c| f.from_u64(c)).collect();
        let sf = Poly::from_roots(f, &roots);
        assert!(sf.gcd(&sf.derivative()).unwrap().is_one());
        let square = &sf * &Poly::linear(f.from_u64(3));
        assert_eq!(square.gcd(&square.derivative()).unwrap(), Poly::linear(f.from_u64(3)));
        assert_eq!(Poly::zero(f).gcd(&Poly::zero(f)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn from_roots_examples() {
        let f = f11();
        assert_eq!(Poly::from_roots(f, &[]), Poly::one(f));
        let r: Vec<Fe> = (0..3).map(|c| f.from_u64(c)).collect();
        let poly = Poly::from_roots(f, &r);
        assert_eq!(poly, p(f, &[0, 2, -3, 1]));
        for x in f.prime_elements() {
            assert_eq!(poly.eval(x).is_zero(), r.contains(&x));
        }
    }

    #[test]
    fn symmetric_examples() {
        let f = f11();
        let z = f.zero();
        assert_eq!(elementary_symmetric(f, &[z, z, z]), vec![z, z, z]);
        let v: Vec<Fe> = [1, 2, 3].iter().map(|&c| f.from_u64(c)).collect();
        let six = f.from_u64(6);
        assert_eq!(elementary_symmetric(f, &v), vec![six, z, six]);
        let w: Vec<Fe> = [3, 1, 2].iter().map(|&c| f.from_u64(c)).collect();
        assert_eq!(elementary_symmetric(f, &w), elementary_symmetric(f, &v));
        assert!(elementary_symmetric(f, &[]).is_empty());
    }

    /// Subset-sum oracle for `e_k`.
    fn symmetric_by_subsets(field: FieldParams, values: &[Fe]) -> Vec<Fe> {
        let n = values.len();
        let mut e = vec![field.zero(); n];
        for mask in 1u32..(1 << n) {
            let term = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .fold(field.one(), |acc, i| acc * values[i]);
            e[mask.count_ones() as usize - 1] += term;
        }
        e
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Poly> {
        let f = FieldParams::new(13).unwrap();
        proptest::collection::vec((0u64..13, 0u64..13), 0..max_len)
            .prop_map(move |cs| Poly::new(f, cs.into_iter().map(|(a, b)| f.elem(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn divrem_roundtrip(a in arb_poly(12), b in arb_poly(7)) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.deg() < b.deg());
        }

        #[test]
        fn xgcd_bezout(a in arb_poly(8), b in arb_poly(8)) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let (d, s, t) = a.xgcd(&b).unwrap();
            prop_assert!(d.is_monic());
            prop_assert_eq!(&(&s * &a) + &(&t * &b), d.clone());
            prop_assert!(d.divides(&a).unwrap() && d.divides(&b).unwrap());
        }

        #[test]
        fn symmetric_matches_subsets(cs in proptest::collection::vec((0u64..13, 0u64..13), 0..=7)) {
            let f = FieldParams::new(13).unwrap();
            let v: Vec<Fe> = cs.into_iter().map(|(a, b)| f.elem(a, b)).collect();
            prop_assert_eq!(elementary_symmetric(f, &v), symmetric_by_subsets(f, &v));
        }

        #[test]
        fn from_roots_vanishes_exactly(rs in proptest::collection::btree_set(0u64..13, 0..8)) {
            let f = FieldParams::new(13).unwrap();
            let roots: Vec<Fe> = rs.iter().map(|&c| f.from_u64(c)).collect();
            let poly = Poly::from_roots(f, &roots);
            prop_assert!(poly.is_monic());
            prop_assert_eq!(poly.degree(), Some(roots.len()));
            for x in f.prime_elements() {
                prop_assert_eq!(poly.eval(x).is_zero(), roots.contains(&x));
            }
        }
    }
}
