//! Halves of a curve point from square roots of `a - alpha`.
//!
//! For `P = (a, b)` a square-root profile is a choice `r(alpha)` with
//! `r(alpha)^2 = a - alpha` for every root and `prod r(alpha) = -b`. With
//! `s_k` the elementary symmetric functions of the `r(alpha)` and `w = a - x`,
//!
//! ```text
//! U_r = (-1)^g [ w^g + sum_{j=1..g} s_{2j} w^{g-j} ]
//! V_r = sum_{j=1..g} (s_{2j+1} - s_1 s_{2j}) w^{g-j}
//! ```
//!
//! is the Mumford pair of a class `a_r` with `2 a_r = P`, and `r -> a_r` is a
//! bijection onto the `2^(2g)` halves of `P`. Negating `r` on an even set `S`
//! of roots moves `a_r` by the 2-torsion point `sum_{alpha in S} W_alpha`.

use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::ff::Fe;
use crate::jacobian::{even_masks, AffinePoint, Curve, MumfordDivisor};
use crate::poly::{elementary_symmetric, Poly};

/// An even-weight function `R -> F_2`; bit `i` set means `r(alpha_i)` is negated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    bits: Vec<bool>,
}

impl SignVector {
    pub fn new(bits: Vec<bool>) -> Result<SignVector> {
        let weight = bits.iter().filter(|&&b| b).count();
        if weight % 2 == 1 {
            return Err(Error::OddSupport(weight));
        }
        Ok(SignVector { bits })
    }

    pub fn zero(len: usize) -> SignVector {
        SignVector {
            bits: vec![false; len],
        }
    }

    /// Low bit of `mask` is the first root.
    pub fn from_mask(mask: u64, len: usize) -> Result<SignVector> {
        SignVector::new((0..len).map(|i| mask >> i & 1 == 1).collect())
    }

    /// `psi_beta`: support is every root except `beta`. Only valid for odd `len`.
    pub fn all_but(beta: usize, len: usize) -> SignVector {
        assert!(len % 2 == 1 && beta < len);
        SignVector {
            bits: (0..len).map(|i| i != beta).collect(),
        }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_zero(&self) -> bool {
        self.weight() == 0
    }

    pub fn mask(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .fold(0, |m, (i, &b)| m | (b as u64) << i)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&i| self.bits[i]).collect()
    }

    /// The group law of `(F_2^R)^0`.
    pub fn xor(&self, other: &SignVector) -> SignVector {
        assert_eq!(self.len(), other.len());
        SignVector {
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        }
    }

    /// `Some(beta)` when this is `psi_beta`.
    pub fn single_root(&self) -> Option<usize> {
        let zeros: Vec<usize> = (0..self.len()).filter(|&i| !self.bits[i]).collect();
        match zeros[..] {
            [beta] if self.len() > 1 => Some(beta),
            _ => None,
        }
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<SignVector> {
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::BadSignVector(s.to_string())),
            })
            .collect::<Result<Vec<bool>>>()?;
        SignVector::new(bits)
    }
}

/// A point of `R_{1/2,P}`: square roots of `a - alpha_i` in root order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SqrtProfile {
    a: Fe,
    b: Fe,
    values: Vec<Fe>,
}

impl SqrtProfile {
    pub fn point(&self) -> AffinePoint {
        AffinePoint::Finite {
            a: self.a,
            b: self.b,
        }
    }

    pub fn values(&self) -> &[Fe] {
        &self.values
    }

    /// Negates the values on the support of `phi`.
    pub fn flip(&self, phi: &SignVector) -> SqrtProfile {
        assert_eq!(phi.len(), self.values.len(), "sign vector length");
        let values = self
            .values
            .iter()
            .zip(phi.bits())
            .map(|(&r, &neg)| if neg { -r } else { r })
            .collect();
        SqrtProfile {
            a: self.a,
            b: self.b,
            values,
        }
    }

    /// `-r`, whose half is `-a_r`.
    pub fn negate(&self) -> SqrtProfile {
        SqrtProfile {
            a: self.a,
            b: self.b,
            values: self.values.iter().map(|&r| -r).collect(),
        }
    }
}

/// Finite, on the curve, with `a` in the prime field.
fn finite_point(curve: &Curve, point: &AffinePoint) -> Result<(Fe, Fe)> {
    let (a, b) = point.coords().ok_or(Error::InfinitePoint)?;
    if !a.is_rational() {
        return Err(Error::AbscissaNotRational(a.to_string()));
    }
    if !curve.point_on_curve(point) {
        return Err(Error::PointNotOnCurve(a.to_string(), b.to_string()));
    }
    Ok((a, b))
}

pub fn profile_new(curve: &Curve, point: &AffinePoint, values: Vec<Fe>) -> Result<SqrtProfile> {
    let (a, b) = finite_point(curve, point)?;
    if values.len() != curve.roots().len() {
        return Err(Error::WrongRootCount {
            expected: curve.roots().len(),
            got: values.len(),
        });
    }
    for (index, (&r, &alpha)) in values.iter().zip(curve.roots()).enumerate() {
        if r.square() != a - alpha {
            return Err(Error::BadSquareRoot { index });
        }
    }
    if values.iter().copied().product::<Fe>() != -b {
        return Err(Error::BadProduct);
    }
    Ok(SqrtProfile { a, b, values })
}

/// Canonical square roots, with the first nonzero one negated if the product
/// comes out as `b` instead of `-b`.
pub fn base_profile(curve: &Curve, point: &AffinePoint) -> Result<SqrtProfile> {
    let (a, b) = finite_point(curve, point)?;
    let mut values = curve
        .roots()
        .iter()
        .map(|&alpha| (a - alpha).canonical_sqrt())
        .collect::<Result<Vec<Fe>>>()?;
    if values.iter().copied().product::<Fe>() != -b {
        let first = values
            .iter()
            .position(|r| !r.is_zero())
            .expect("a nonzero product has nonzero factors");
        values[first] = -values[first];
    }
    profile_new(curve, point, values)
}

/// Builds `(U_r, V_r)` without any postcondition checks.
pub fn assemble_half(curve: &Curve, profile: &SqrtProfile) -> MumfordDivisor {
    let field = curve.field();
    let g = curve.genus();
    let s = elementary_symmetric(field, &profile.values);
    // s_k for k >= 1, with s_0 = 1
    let sym = |k: usize| if k == 0 { field.one() } else { s[k - 1] };

    let w = Poly::new(field, vec![profile.a, -field.one()]);
    let mut w_pows = vec![Poly::one(field)];
    for i in 1..=g {
        let next = &w_pows[i - 1] * &w;
        w_pows.push(next);
    }

    let mut u = Poly::zero(field);
    for j in 0..=g {
        u = &u + &w_pows[g - j].scale(sym(2 * j));
    }
    if g % 2 == 1 {
        u = -u;
    }
    let mut v = Poly::zero(field);
    for j in 1..=g {
        let c = sym(2 * j + 1) - sym(1) * sym(2 * j);
        v = &v + &w_pows[g - j].scale(c);
    }
    MumfordDivisor::new_unchecked(u, v)
}

/// `a_r` with its guarantees checked: reduced, `deg U = g`, no root of `f`
/// among the roots of `U`, and doubling to `P`.
pub fn half_from_profile(curve: &Curve, profile: &SqrtProfile) -> Result<MumfordDivisor> {
    let d = assemble_half(curve, profile);
    let fail = |what: &str| Err(Error::InternalInconsistency(format!("{what} for half {d}")));
    if !curve.mumford_validate(&d) {
        return fail("not a reduced Mumford pair");
    }
    if d.u().degree() != Some(curve.genus()) {
        return fail("deg U != g");
    }
    if curve.roots().iter().any(|&alpha| d.u().eval(alpha).is_zero()) {
        return fail("U vanishes at a root of f");
    }
    if curve.cantor_double(&d) != curve.point_to_mumford(&profile.point()) {
        return fail("2D != P");
    }
    Ok(d)
}

/// Recovers `r` from `(U, V)`: `r(alpha) = s_1 + (-1)^g rho(alpha)` with
/// `rho = V/U`, and `s_1` from the first two roots `beta, gamma`:
///
/// ```text
/// s_1 = (-1)^g / 2 * ((beta + rho_beta^2) - (gamma + rho_gamma^2)) / (rho_gamma - rho_beta)
/// ```
pub fn profile_from_half(
    curve: &Curve,
    point: &AffinePoint,
    d: &MumfordDivisor,
) -> Result<SqrtProfile> {
    finite_point(curve, point)?;
    let g = curve.genus();
    if !curve.mumford_validate(d) {
        return Err(Error::NotAHalf(format!("{d} is not a reduced Mumford pair")));
    }
    if d.u().degree() != Some(g) {
        return Err(Error::NotAHalf(format!("deg U of {d} is not {g}")));
    }
    let rho = curve
        .roots()
        .iter()
        .map(|&alpha| {
            let u_at = d.u().eval(alpha);
            if u_at.is_zero() {
                return Err(Error::NotAHalf(format!("U of {d} vanishes at {alpha}")));
            }
            d.v().eval(alpha).checked_div(u_at)
        })
        .collect::<Result<Vec<Fe>>>()?;
    if curve.cantor_double(d) != curve.point_to_mumford(point) {
        return Err(Error::NotAHalf(format!("2 * {d} != {point}")));
    }

    let sign = if g.is_multiple_of(2) { curve.field().one() } else { -curve.field().one() };
    let (beta, gamma) = (curve.roots()[0], curve.roots()[1]);
    let denom = rho[1] - rho[0];
    if denom.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    let numer = (beta + rho[0].square()) - (gamma + rho[1].square());
    let s1 = (sign * numer).checked_div(denom)?.halve();
    let values = rho.iter().map(|&q| s1 + sign * q).collect();
    profile_new(curve, point, values).map_err(|e| {
        Error::InternalInconsistency(format!("recovered profile of {d} is invalid: {e}"))
    })
}

/// Closed form for `D + W_beta` when `deg U = g` and `U(beta) != 0`:
///
/// ```text
/// lambda  = V(beta) / U(beta)
/// U'      = (f - (V - lambda U)^2) / ((x - beta) U)
/// V'      = -V + lambda (U - U')
/// ```
pub fn weierstrass_translate(curve: &Curve, d: &MumfordDivisor, beta: Fe) -> Result<MumfordDivisor> {
    if curve.root_index(beta).is_none() {
        return Err(Error::RootNotInR(beta.to_string()));
    }
    if !curve.mumford_validate(d) {
        return Err(Error::InvalidDivisor(d.to_string()));
    }
    if d.u().degree() != Some(curve.genus()) {
        return Err(Error::ThetaDegenerate);
    }
    let (u, v) = (d.u(), d.v());
    let u_beta = u.eval(beta);
    if u_beta.is_zero() {
        return Err(Error::WeierstrassInSupport(beta.to_string()));
    }
    let lambda = v.eval(beta).checked_div(u_beta)?;
    let v1 = v - &u.scale(lambda);
    let u1 = &Poly::linear(beta) * u;
    let u_new = (curve.f() - &(&v1 * &v1)).div_exact(&u1)?;
    if !u_new.is_monic() || u_new.degree() != Some(curve.genus()) {
        return Err(Error::InternalInconsistency(format!(
            "translated U = {u_new} is not monic of degree g"
        )));
    }
    let v_new = &(-v) + &(u - &u_new).scale(lambda);
    Ok(MumfordDivisor::new_unchecked(u_new, v_new))
}

/// One half of `P` with the sign vector that produced it from the base profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Half {
    pub phi: SignVector,
    pub profile: SqrtProfile,
    pub divisor: MumfordDivisor,
}

/// All `2^(2g)` halves of `P`, one per even sign vector applied to
/// [`base_profile`], in increasing mask order. With `verify` each half is
/// checked by [`half_from_profile`] and the set for distinctness.
pub fn enumerate_halves(curve: &Curve, point: &AffinePoint, verify: bool) -> Result<Vec<Half>> {
    let base = base_profile(curve, point)?;
    let n = curve.roots().len();
    let halves = even_masks(n)
        .map(|mask| {
            let phi = SignVector::from_mask(mask, n)?;
            let profile = base.flip(&phi);
            let divisor = if verify {
                half_from_profile(curve, &profile)?
            } else {
                assemble_half(curve, &profile)
            };
            Ok(Half {
                phi,
                profile,
                divisor,
            })
        })
        .collect::<Result<Vec<Half>>>()?;
    if verify {
        for (i, h) in halves.iter().enumerate() {
            if halves[..i].iter().any(|o| o.divisor == h.divisor) {
                return Err(Error::InternalInconsistency(format!(
                    "half {} repeats",
                    h.divisor
                )));
            }
        }
    }
    Ok(halves)
}

/// Both sides of `a_{r^(phi)} = a_r + T_phi`.
pub fn torsor_sides(
    curve: &Curve,
    profile: &SqrtProfile,
    phi: &SignVector,
) -> Result<(MumfordDivisor, MumfordDivisor)> {
    let flipped = assemble_half(curve, &profile.flip(phi));
    let shift = curve.two_torsion_point(&phi.support())?;
    let moved = curve.cantor_add(&assemble_half(curve, profile), &shift);
    Ok((flipped, moved))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCheck {
    /// Sign vector of `r` relative to the base profile.
    pub profile_phi: SignVector,
    pub phi: SignVector,
    /// `Some(beta)` when `phi = psi_beta`, i.e. the single-root case.
    pub root: Option<usize>,
    /// `(a_{r^(phi)}, a_r + T_phi)` when they differ.
    pub mismatch: Option<(MumfordDivisor, MumfordDivisor)>,
}

impl SignCheck {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SignTheoremReport {
    pub checks: Vec<SignCheck>,
}

impl SignTheoremReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(SignCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SignCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// The `phi = psi_beta` entries.
    pub fn single_root_checks(&self) -> impl Iterator<Item = &SignCheck> {
        self.checks.iter().filter(|c| c.root.is_some())
    }
}

/// Checks `a_{r^(phi)} = a_r + T_phi` for every profile `r` of `P` and every
/// even `phi`.
pub fn verify_sign_theorem(curve: &Curve, point: &AffinePoint) -> Result<SignTheoremReport> {
    let base = base_profile(curve, point)?;
    let n = curve.roots().len();
    let phis = even_masks(n)
        .map(|m| SignVector::from_mask(m, n))
        .collect::<Result<Vec<_>>>()?;
    let shifts = phis
        .iter()
        .map(|phi| curve.two_torsion_point(&phi.support()))
        .collect::<Result<Vec<_>>>()?;
    let mut checks = Vec::with_capacity(phis.len() * phis.len());
    for profile_phi in &phis {
        let profile = base.flip(profile_phi);
        let half = assemble_half(curve, &profile);
        for (phi, shift) in phis.iter().zip(&shifts) {
            let lhs = assemble_half(curve, &profile.flip(phi));
            let rhs = curve.cantor_add(&half, shift);
            checks.push(SignCheck {
                profile_phi: profile_phi.clone(),
                phi: phi.clone(),
                root: phi.single_root(),
                mismatch: (lhs != rhs).then_some((lhs, rhs)),
            });
        }
    }
    Ok(SignTheoremReport { checks })
}
