//! Odd-degree hyperelliptic curves `y^2 = f(x)`, Mumford divisors and the
//! Cantor group law on the Jacobian over `L`.

use core::fmt;

use crate::error::{Error, Result};
use crate::ff::{Fe, FieldParams};
use crate::poly::Poly;

/// `y^2 = prod (x - alpha)` over the root set `R`, with `|R| = 2g + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curve {
    field: FieldParams,
    genus: usize,
    roots: Vec<Fe>,
    f: Poly,
}

impl Curve {
    /// Validates the root set and builds `f`. Roots keep the given order.
    pub fn new(field: FieldParams, genus: usize, roots: Vec<Fe>) -> Result<Curve> {
        if genus == 0 {
            return Err(Error::BadGenus);
        }
        if roots.len() != 2 * genus + 1 {
            return Err(Error::WrongRootCount {
                expected: 2 * genus + 1,
                got: roots.len(),
            });
        }
        for (i, r) in roots.iter().enumerate() {
            if !r.is_rational() {
                return Err(Error::RootNotRational(r.to_string()));
            }
            if roots[..i].contains(r) {
                return Err(Error::RepeatedRoot(r.to_string()));
            }
        }
        let f = Poly::from_roots(field, &roots);
        Ok(Curve {
            field,
            genus,
            roots,
            f,
        })
    }

    /// Convenience constructor from a prime and integer roots.
    pub fn from_ints(p: u64, genus: usize, roots: &[i64]) -> Result<Curve> {
        let field = FieldParams::new(p)?;
        let roots = roots.iter().map(|&r| field.from_i64(r)).collect();
        Curve::new(field, genus, roots)
    }

    pub fn field(&self) -> FieldParams {
        self.field
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn roots(&self) -> &[Fe] {
        &self.roots
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn root_index(&self, beta: Fe) -> Option<usize> {
        self.roots.iter().position(|&r| r == beta)
    }

    pub fn point_on_curve(&self, point: &AffinePoint) -> bool {
        match *point {
            AffinePoint::Infinity => true,
            AffinePoint::Finite { a, b } => b.square() == self.f.eval(a),
        }
    }

    /// `(a, b)` with `b` the canonical square root of `f(a)` in `L`.
    pub fn point_with_canonical_b(&self, a: Fe) -> Result<AffinePoint> {
        let b = self.f.eval(a).canonical_sqrt()?;
        Ok(AffinePoint::Finite { a, b })
    }

    /// The Weierstrass point `(alpha_i, 0)`.
    pub fn weierstrass_point(&self, index: usize) -> AffinePoint {
        AffinePoint::Finite {
            a: self.roots[index],
            b: self.field.zero(),
        }
    }

    pub fn identity(&self) -> MumfordDivisor {
        MumfordDivisor {
            u: Poly::one(self.field),
            v: Poly::zero(self.field),
        }
    }

    /// Checks monicity, `deg V < deg U <= g` and `U | V^2 - f`.
    pub fn mumford_validate(&self, d: &MumfordDivisor) -> bool {
        self.check_mumford(&d.u, &d.v).is_ok()
    }

    fn check_mumford(&self, u: &Poly, v: &Poly) -> Result<()> {
        if !u.is_monic() {
            return Err(Error::InvalidDivisor(format!("U = {u} is not monic")));
        }
        if u.deg() > self.genus as isize {
            return Err(Error::InvalidDivisor(format!("deg U = {} exceeds the genus", u.deg())));
        }
        if v.deg() >= u.deg() {
            return Err(Error::InvalidDivisor(format!("deg V = {} >= deg U", v.deg())));
        }
        if !u.divides(&(v * v - &self.f))? {
            return Err(Error::InvalidDivisor(format!("U = {u} does not divide V^2 - f")));
        }
        Ok(())
    }

    /// Validated constructor.
    pub fn divisor(&self, u: Poly, v: Poly) -> Result<MumfordDivisor> {
        self.check_mumford(&u, &v)?;
        Ok(MumfordDivisor { u, v })
    }

    /// The class of `(P) - (inf)`.
    pub fn point_to_mumford(&self, point: &AffinePoint) -> MumfordDivisor {
        match *point {
            AffinePoint::Infinity => self.identity(),
            AffinePoint::Finite { a, b } => MumfordDivisor {
                u: Poly::linear(a),
                v: Poly::constant(b),
            },
        }
    }

    /// Hyperelliptic involution: `(U, -V)`.
    pub fn neg(&self, d: &MumfordDivisor) -> MumfordDivisor {
        MumfordDivisor {
            u: d.u.clone(),
            v: -&d.v,
        }
    }

    /// Cantor composition followed by reduction.
    pub fn cantor_add(&self, d1: &MumfordDivisor, d2: &MumfordDivisor) -> MumfordDivisor {
        let (u1, v1) = (&d1.u, &d1.v);
        let (u2, v2) = (&d2.u, &d2.v);

        // d0 = e1 u1 + e2 u2, d = c1 d0 + c2 (v1 + v2)
        let (d0, e1, e2) = u1.xgcd(u2).expect("U is monic, never zero");
        let (d, c1, c2) = d0.xgcd(&(v1 + v2)).expect("d0 is monic, never zero");
        let s1 = &c1 * &e1;
        let s2 = &c1 * &e2;
        let s3 = c2;

        let u = (u1 * u2)
            .div_exact(&(&d * &d))
            .expect("d^2 divides u1 u2");
        let numerator = &(&(&s1 * u1) * v2) + &(&(&s2 * u2) * v1);
        let numerator = &numerator + &(&s3 * &(&(v1 * v2) + &self.f));
        let v = numerator
            .div_exact(&d)
            .expect("d divides the composition numerator")
            .rem(&u)
            .expect("u is monic");
        self.reduce(u, v)
    }

    /// Reduction of a semi-reduced pair: `U' = (f - V^2)/U`, `V' = -V mod U'`
    /// until `deg U <= g`.
    fn reduce(&self, mut u: Poly, mut v: Poly) -> MumfordDivisor {
        while u.deg() > self.genus as isize {
            let u_next = (&self.f - &(&v * &v))
                .div_exact(&u)
                .expect("U divides f - V^2");
            v = (-&v).rem(&u_next).expect("reduction step leaves U nonzero");
            u = u_next.monic().expect("reduction step leaves U nonzero");
        }
        let u = u.monic().expect("U nonzero");
        let v = v.rem(&u).expect("U nonzero");
        MumfordDivisor { u, v }
    }

    pub fn cantor_double(&self, d: &MumfordDivisor) -> MumfordDivisor {
        self.cantor_add(d, d)
    }

    /// Double-and-add.
    pub fn scalar_mul(&self, k: u64, d: &MumfordDivisor) -> MumfordDivisor {
        let mut acc = self.identity();
        for bit in (0..64 - k.leading_zeros()).rev() {
            acc = self.cantor_double(&acc);
            if k >> bit & 1 == 1 {
                acc = self.cantor_add(&acc, d);
            }
        }
        acc
    }

    /// The 2-torsion point `sum_{alpha in S} W_alpha` for an even set `S` of
    /// root indices, in closed form: `(prod_{alpha in S'} (x - alpha), 0)`
    /// with `S'` the smaller of `S` and its complement.
    pub fn two_torsion_point(&self, support: &[usize]) -> Result<MumfordDivisor> {
        let n = self.roots.len();
        let mut mask = vec![false; n];
        for &i in support {
            if i >= n {
                return Err(Error::RootNotInR(format!("index {i}")));
            }
            if mask[i] {
                return Err(Error::RepeatedRoot(self.roots[i].to_string()));
            }
            mask[i] = true;
        }
        if support.len() % 2 == 1 {
            return Err(Error::OddSupport(support.len()));
        }
        let take_support = support.len() <= self.genus;
        let chosen: Vec<Fe> = (0..n)
            .filter(|&i| mask[i] == take_support)
            .map(|i| self.roots[i])
            .collect();
        Ok(MumfordDivisor {
            u: Poly::from_roots(self.field, &chosen),
            v: Poly::zero(self.field),
        })
    }

    /// All of `J[2]`, indexed by even-weight root masks in increasing order.
    pub fn enumerate_two_torsion(&self) -> Vec<MumfordDivisor> {
        even_masks(self.roots.len())
            .map(|mask| {
                let support = mask_support(mask, self.roots.len());
                self.two_torsion_point(&support)
                    .expect("even masks give even supports")
            })
            .collect()
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {} over F_{}", self.f, self.field.p())
    }
}

/// Even-weight bitmasks on `n` bits, increasing.
pub fn even_masks(n: usize) -> impl Iterator<Item = u64> {
    assert!(n < 64);
    (0u64..1 << n).filter(|m| m.count_ones() % 2 == 0)
}

pub fn mask_support(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// A point of the curve; `Infinity` is the identity of the Jacobian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AffinePoint {
    Infinity,
    Finite { a: Fe, b: Fe },
}

impl AffinePoint {
    pub fn coords(&self) -> Option<(Fe, Fe)> {
        match *self {
            AffinePoint::Infinity => None,
            AffinePoint::Finite { a, b } => Some((a, b)),
        }
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffinePoint::Infinity => write!(f, "inf"),
            AffinePoint::Finite { a, b } => write!(f, "({a}, {b})"),
        }
    }
}

/// Weight, then U and V coefficient keys from the top down.
pub type DivisorKey = (usize, Vec<(u64, u64)>, Vec<(u64, u64)>);

/// Mumford pair `(U, V)`. Reduced pairs are canonical, so equality of classes
/// is equality of pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MumfordDivisor {
    u: Poly,
    v: Poly,
}

impl MumfordDivisor {
    /// No validation; see [`Curve::divisor`].
    pub fn new_unchecked(u: Poly, v: Poly) -> MumfordDivisor {
        MumfordDivisor { u, v }
    }

    pub fn u(&self) -> &Poly {
        &self.u
    }

    pub fn v(&self) -> &Poly {
        &self.v
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    /// Number of finite points in the support, counted with multiplicity.
    pub fn weight(&self) -> usize {
        self.u.degree().unwrap_or(0)
    }

    /// Total order used to print divisor sets canonically.
    pub fn sort_key(&self) -> DivisorKey {
        (
            self.weight(),
            self.u.coeffs().iter().rev().map(Fe::key).collect(),
            self.v.coeffs().iter().rev().map(Fe::key).collect(),
        )
    }
}

impl fmt::Display for MumfordDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.u, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve_11() -> Curve {
        Curve::from_ints(11, 1, &[0, 1, 3]).unwrap()
    }

    #[test]
    fn construction() {
        let c = curve_11();
        let f = c.field();
        assert_eq!(c.f().coeffs(), &[f.zero(), f.from_u64(3), f.from_i64(-4), f.one()]);
        assert_eq!(
            Curve::from_ints(11, 1, &[0, 0, 3]),
            Err(Error::RepeatedRoot("0".into()))
        );
        assert!(Curve::from_ints(5, 2, &[0, 1, 2, 3, 4]).is_ok());
        assert!(matches!(
            Curve::from_ints(11, 2, &[0, 1, 3]),
            Err(Error::WrongRootCount { expected: 5, got: 3 })
        ));
        assert_eq!(Curve::from_ints(9, 1, &[0, 1, 3]), Err(Error::BadModulus(9)));
        assert_eq!(Curve::from_ints(2, 1, &[0, 1, 3]), Err(Error::BadModulus(2)));
        assert_eq!(Curve::from_ints(11, 0, &[0]), Err(Error::BadGenus));
        let fp = FieldParams::new(11).unwrap();
        assert!(matches!(
            Curve::new(fp, 1, vec![fp.zero(), fp.one(), fp.gen()]),
            Err(Error::RootNotRational(_))
        ));
    }

    #[test]
    fn points() {
        let c = curve_11();
        let f = c.field();
        assert!(c.point_on_curve(&c.weierstrass_point(2)));
        assert!(c.point_on_curve(&AffinePoint::Infinity));
        // f(2) = 2 * 1 * (-1) = -2 = 9, and 3^2 = 9
        let good = AffinePoint::Finite { a: f.from_u64(2), b: f.from_u64(3) };
        let bad = AffinePoint::Finite { a: f.from_u64(2), b: f.from_u64(4) };
        assert!(c.point_on_curve(&good));
        assert!(!c.point_on_curve(&bad));
        // f(5) = 5 * 4 * 2 = 40 = 7, a non-residue mod 11, so b lives in L
        let p5 = c.point_with_canonical_b(f.from_u64(5)).unwrap();
        assert!(c.point_on_curve(&p5));
        assert!(!p5.coords().unwrap().1.is_rational());
    }

    #[test]
    fn mumford_validation_examples() {
        let c = curve_11();
        let f = c.field();
        assert!(c.mumford_validate(&c.identity()));
        for i in 0..3 {
            let w = c.point_to_mumford(&c.weierstrass_point(i));
            assert!(c.mumford_validate(&w));
            assert_eq!(c.neg(&w), w);
            assert!(c.cantor_double(&w).is_identity());
        }
        let q = c.point_to_mumford(&AffinePoint::Finite { a: f.from_u64(2), b: f.from_u64(3) });
        assert!(c.mumford_validate(&q));
        assert_eq!(c.neg(&c.neg(&q)), q);
        assert!(!c.mumford_validate(&MumfordDivisor::new_unchecked(
            Poly::linear(f.from_u64(2)),
            Poly::constant(f.from_u64(4)),
        )));
        assert!(matches!(
            c.divisor(Poly::constant(f.from_u64(2)), Poly::zero(f)),
            Err(Error::InvalidDivisor(_))
        ));
        assert_eq!(c.point_to_mumford(&AffinePoint::Infinity), c.identity());
    }

    #[test]
    fn cantor_examples() {
        let c = Curve::from_ints(13, 2, &[1, 2, 5, 7, 11]).unwrap();
        let f = c.field();
        let pts: Vec<MumfordDivisor> = f
            .prime_elements()
            .map(|a| c.point_to_mumford(&c.point_with_canonical_b(a).unwrap()))
            .collect();
        for d in &pts {
            assert_eq!(&c.cantor_add(d, &c.identity()), d);
            assert_eq!(&c.cantor_add(&c.identity(), d), d);
            assert!(c.cantor_add(d, &c.neg(d)).is_identity());
            assert_eq!(c.scalar_mul(0, d), c.identity());
            assert_eq!(&c.scalar_mul(1, d), d);
            assert_eq!(c.scalar_mul(2, d), c.cantor_double(d));
            assert_eq!(c.scalar_mul(5, d), {
                let d2 = c.cantor_double(d);
                c.cantor_add(&c.cantor_double(&d2), d)
            });
        }
        for x in &pts {
            for y in &pts {
                let s = c.cantor_add(x, y);
                assert!(c.mumford_validate(&s));
                assert_eq!(s, c.cantor_add(y, x));
                for z in pts.iter().take(4) {
                    assert_eq!(
                        c.cantor_add(&s, z),
                        c.cantor_add(x, &c.cantor_add(y, z))
                    );
                }
            }
        }
    }

    #[test]
    fn two_torsion() {
        let c = curve_11();
        assert!(c.two_torsion_point(&[]).unwrap().is_identity());
        assert_eq!(
            c.two_torsion_point(&[0, 1]).unwrap(),
            c.point_to_mumford(&c.weierstrass_point(2))
        );
        assert_eq!(c.two_torsion_point(&[0]), Err(Error::OddSupport(1)));
        assert!(matches!(c.two_torsion_point(&[0, 5]), Err(Error::RootNotInR(_))));
        let all = c.enumerate_two_torsion();
        assert_eq!(all.len(), 4);
        assert!(all[0].is_identity());
        for (i, t) in all.iter().enumerate() {
            assert!(c.cantor_double(t).is_identity());
            assert!(all[..i].iter().all(|s| s != t));
        }
        let c2 = Curve::from_ints(7, 2, &[0, 1, 2, 4, 6]).unwrap();
        assert_eq!(c2.enumerate_two_torsion().len(), 16);
    }
}
