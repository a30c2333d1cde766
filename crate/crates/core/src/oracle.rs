//! Independent verifiers: exhaustive search over Mumford pairs on tiny fields
//! and the grid sweep that cross-checks every halving formula against Cantor
//! arithmetic.

use std::collections::BTreeMap;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ff::{Fe, FieldParams};
use crate::halving::{
    assemble_half, base_profile, profile_from_half, weierstrass_translate, SignVector,
};
use crate::jacobian::{even_masks, mask_support, AffinePoint, Curve, MumfordDivisor};
use crate::json;
use crate::par::{self, Execution};
use crate::poly::Poly;

/// Hard cap on the number of `(U, V)` candidates exhaustive search may visit.
pub const CANDIDATE_LIMIT: u128 = 2_000_000;

/// Largest group [`exhaustive_group_check`] will cube.
pub const GROUP_CHECK_LIMIT: usize = 64;

/// Number of `(U, V)` pairs with `U` monic, `deg V < deg U <= g` over `L`.
pub fn candidate_count(curve: &Curve) -> u128 {
    let q = curve.field().order();
    (0..=curve.genus() as u32)
        .map(|m| q.saturating_pow(2 * m))
        .fold(0u128, u128::saturating_add)
}

fn check_brute_force_bounds(curve: &Curve) -> Result<()> {
    let q = curve.field().order();
    if q > 200 || curve.genus() > 2 {
        return Err(Error::TooLarge(format!(
            "brute force needs p^2 <= 200 and g <= 2, got p = {}, g = {}",
            curve.field().p(),
            curve.genus()
        )));
    }
    let n = candidate_count(curve);
    if n > CANDIDATE_LIMIT {
        return Err(Error::TooLarge(format!("{n} candidates exceed {CANDIDATE_LIMIT}")));
    }
    Ok(())
}

pub fn brute_force_feasible(curve: &Curve) -> bool {
    check_brute_force_bounds(curve).is_ok()
}

/// Visits every reduced Mumford pair over `L`, by increasing `deg U` and then
/// lexicographically over `(U, V)` coefficient tuples.
fn for_each_reduced_divisor(curve: &Curve, mut visit: impl FnMut(MumfordDivisor)) {
    let field = curve.field();
    let elements: Vec<Fe> = field.elements().collect();
    let q = elements.len();
    for m in 0..=curve.genus() {
        // digits[..m] are U's coefficients from x^(m-1) down, digits[m..] are V's
        let mut digits = vec![0usize; 2 * m];
        loop {
            let mut u_coeffs: Vec<Fe> = digits[..m].iter().rev().map(|&i| elements[i]).collect();
            u_coeffs.push(field.one());
            let v_coeffs: Vec<Fe> = digits[m..].iter().rev().map(|&i| elements[i]).collect();
            let u = Poly::new(field, u_coeffs);
            let v = Poly::new(field, v_coeffs);
            let residue = (&(&v * &v) - curve.f()).rem(&u).expect("U is monic");
            if residue.is_zero() {
                visit(MumfordDivisor::new_unchecked(u, v));
            }
            // odometer
            let mut k = digits.len();
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < q {
                    break;
                }
                digits[k] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
}

/// Every element of `J(L)`, in enumeration order.
pub fn enumerate_group(curve: &Curve) -> Result<Vec<MumfordDivisor>> {
    check_brute_force_bounds(curve)?;
    let mut out = Vec::new();
    for_each_reduced_divisor(curve, |d| out.push(d));
    Ok(out)
}

/// All `D` in `J(L)` with `2D = P`, found by exhaustive search.
/// For `P = Infinity` this is `J[2]`.
pub fn brute_force_halves(curve: &Curve, point: &AffinePoint) -> Result<Vec<MumfordDivisor>> {
    check_brute_force_bounds(curve)?;
    if !curve.point_on_curve(point) {
        let (a, b) = point.coords().expect("infinity is on every curve");
        return Err(Error::PointNotOnCurve(a.to_string(), b.to_string()));
    }
    let target = curve.point_to_mumford(point);
    let mut out = Vec::new();
    for_each_reduced_divisor(curve, |d| {
        if curve.cantor_double(&d) == target {
            out.push(d);
        }
    });
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GroupCheckReport {
    pub order: usize,
    pub identity_failures: usize,
    pub inverse_failures: usize,
    pub closure_failures: usize,
    pub commutativity_failures: usize,
    pub associativity_failures: usize,
}

impl GroupCheckReport {
    pub fn passed(&self) -> bool {
        self.identity_failures
            + self.inverse_failures
            + self.closure_failures
            + self.commutativity_failures
            + self.associativity_failures
            == 0
    }
}

/// Group axioms over all of `J(L)`; only for groups of at most
/// [`GROUP_CHECK_LIMIT`] elements (in practice `p = 3, g = 1`).
pub fn exhaustive_group_check(curve: &Curve) -> Result<GroupCheckReport> {
    let group = enumerate_group(curve)?;
    if group.len() > GROUP_CHECK_LIMIT {
        return Err(Error::TooLarge(format!(
            "group of order {} exceeds {GROUP_CHECK_LIMIT}",
            group.len()
        )));
    }
    let mut report = GroupCheckReport {
        order: group.len(),
        ..Default::default()
    };
    let id = curve.identity();
    for x in &group {
        if &curve.cantor_add(x, &id) != x || &curve.cantor_add(&id, x) != x {
            report.identity_failures += 1;
        }
        if !curve.cantor_add(x, &curve.neg(x)).is_identity() {
            report.inverse_failures += 1;
        }
        for y in &group {
            let xy = curve.cantor_add(x, y);
            if !group.contains(&xy) {
                report.closure_failures += 1;
            }
            if xy != curve.cantor_add(y, x) {
                report.commutativity_failures += 1;
            }
            for z in &group {
                if curve.cantor_add(&xy, z) != curve.cantor_add(x, &curve.cantor_add(y, z)) {
                    report.associativity_failures += 1;
                }
            }
        }
    }
    Ok(report)
}

/// The named checks a sweep runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// `2^(2g)` halves returned.
    HalfCount,
    /// Halves pairwise distinct.
    Distinct,
    /// Each half is a valid Mumford pair doubling to `P`.
    Doubling,
    /// `a_{r^(phi)} = a_r + T_phi` for all profiles and even `phi`.
    SignTorsor,
    /// The `phi = psi_beta` subset of `SignTorsor`.
    SingleRootFlip,
    /// Closed-form `D + W_beta` equals Cantor, with `deg U = g`.
    Translation,
    /// Profile recovered from `(U_r, V_r)` equals `r`.
    RoundTrip,
    /// `deg U = g` and `U(alpha) != 0` for every half.
    ThetaAvoidance,
    /// Halves equal the exhaustive solution set of `2X = P`.
    BruteForce,
    /// `J[2]` has `2^(2g)` distinct self-inverse elements and the closed form
    /// of `T_S` matches the iterated sum.
    TwoTorsion,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: u64,
    pub failed: u64,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub suite: Suite,
    pub message: String,
    /// Curve, point and whatever else reproduces the failure.
    pub payload: Value,
}

/// Accumulates tallies and failures for one case.
#[derive(Default)]
struct Recorder {
    tallies: BTreeMap<Suite, Tally>,
    failures: Vec<Failure>,
}

impl Recorder {
    fn record(&mut self, suite: Suite, ok: bool, failure: impl FnOnce() -> (String, Value)) {
        let t = self.tallies.entry(suite).or_default();
        t.checked += 1;
        if !ok {
            t.failed += 1;
            let (message, payload) = failure();
            self.failures.push(Failure {
                suite,
                message,
                payload,
            });
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseReport {
    pub p: u64,
    pub g: usize,
    pub roots: Vec<u64>,
    pub point: Value,
    pub halves: usize,
    pub tallies: BTreeMap<Suite, Tally>,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveReport {
    pub p: u64,
    pub g: usize,
    pub roots: Vec<u64>,
    pub tallies: BTreeMap<Suite, Tally>,
    pub failures: Vec<Failure>,
}

fn root_ints(curve: &Curve) -> Vec<u64> {
    curve.roots().iter().map(Fe::c0).collect()
}

/// Runs every per-point suite for one `(curve, P)`. With `brute_force` the
/// exhaustive comparison is added when the curve is small enough.
pub fn check_point(curve: &Curve, point: &AffinePoint, brute_force: bool) -> CaseReport {
    let mut rec = Recorder::default();
    let g = curve.genus();
    let n = curve.roots().len();
    let target = curve.point_to_mumford(point);
    let ctx = json!({ "curve": json::curve(curve), "point": json::point(point) });
    let with = |extra: Value| {
        let mut v = ctx.clone();
        if let (Some(obj), Value::Object(more)) = (v.as_object_mut(), extra) {
            obj.extend(more);
        }
        v
    };

    let base = match base_profile(curve, point) {
        Ok(b) => b,
        Err(e) => {
            rec.record(Suite::HalfCount, false, || (e.to_string(), ctx.clone()));
            return case_report(curve, point, 0, rec);
        }
    };
    let phis: Vec<SignVector> = even_masks(n)
        .map(|m| SignVector::from_mask(m, n).expect("even mask"))
        .collect();
    let shifts: Vec<MumfordDivisor> = phis
        .iter()
        .map(|phi| curve.two_torsion_point(&phi.support()).expect("even support"))
        .collect();
    let profiles: Vec<_> = phis.iter().map(|phi| base.flip(phi)).collect();
    let halves: Vec<MumfordDivisor> = profiles.iter().map(|r| assemble_half(curve, r)).collect();

    let expected = 1usize << (2 * g);
    rec.record(Suite::HalfCount, halves.len() == expected, || {
        (format!("{} halves, expected {expected}", halves.len()), ctx.clone())
    });
    let mut sorted: Vec<_> = halves.iter().map(MumfordDivisor::sort_key).collect();
    sorted.sort();
    sorted.dedup();
    rec.record(Suite::Distinct, sorted.len() == halves.len(), || {
        (format!("only {} distinct halves", sorted.len()), ctx.clone())
    });

    for ((phi, r), d) in phis.iter().zip(&profiles).zip(&halves) {
        let payload = |extra: Value| {
            let mut v = with(json!({
                "phi": phi.to_string(),
                "profile": json::profile(r),
                "half": json::divisor(d),
            }));
            if let (Some(obj), Value::Object(more)) = (v.as_object_mut(), extra) {
                obj.extend(more);
            }
            v
        };

        let doubled = curve.cantor_double(d);
        rec.record(
            Suite::Doubling,
            curve.mumford_validate(d) && doubled == target,
            || ("2D != P".into(), payload(json!({ "doubled": json::divisor(&doubled) }))),
        );

        let theta_ok = d.u().degree() == Some(g)
            && curve.roots().iter().all(|&alpha| !d.u().eval(alpha).is_zero());
        rec.record(Suite::ThetaAvoidance, theta_ok, || {
            ("deg U < g or U vanishes on R".into(), payload(json!({})))
        });

        let recovered = profile_from_half(curve, point, d);
        rec.record(Suite::RoundTrip, recovered.as_ref() == Ok(r), || {
            let got = match &recovered {
                Ok(x) => json::profile(x),
                Err(e) => json!({ "error": e.code(), "detail": e.to_string() }),
            };
            ("profile not recovered".into(), payload(json!({ "recovered": got })))
        });

        for (i, &beta) in curve.roots().iter().enumerate() {
            let cantor = curve.cantor_add(d, &curve.point_to_mumford(&curve.weierstrass_point(i)));
            let closed = weierstrass_translate(curve, d, beta);
            let ok = matches!(&closed, Ok(t) if *t == cantor && t.u().degree() == Some(g));
            rec.record(Suite::Translation, ok, || {
                let lhs = match &closed {
                    Ok(t) => json::divisor(t),
                    Err(e) => json!({ "error": e.code(), "detail": e.to_string() }),
                };
                (
                    format!("closed form != Cantor at beta = {beta}"),
                    payload(json!({ "beta": json::fe(beta), "lhs": lhs, "rhs": json::divisor(&cantor) })),
                )
            });
        }

        for (psi, shift) in phis.iter().zip(&shifts) {
            let lhs = assemble_half(curve, &r.flip(psi));
            let rhs = curve.cantor_add(d, shift);
            let ok = lhs == rhs;
            let fail = || {
                (
                    format!("half(flip(r, {psi})) != a_r + T_phi"),
                    payload(json!({
                        "flip": psi.to_string(),
                        "lhs": json::divisor(&lhs),
                        "rhs": json::divisor(&rhs),
                    })),
                )
            };
            if psi.single_root().is_some() {
                rec.record(Suite::SingleRootFlip, ok, fail);
            }
            rec.record(Suite::SignTorsor, ok, fail);
        }
    }

    if brute_force && brute_force_feasible(curve) {
        match brute_force_halves(curve, point) {
            Ok(mut oracle) => {
                let mut mine = halves.clone();
                oracle.sort_by_key(MumfordDivisor::sort_key);
                mine.sort_by_key(MumfordDivisor::sort_key);
                rec.record(Suite::BruteForce, oracle == mine, || {
                    (
                        format!("oracle found {} halves, formula {}", oracle.len(), mine.len()),
                        with(json!({
                            "oracle": oracle.iter().map(json::divisor).collect::<Vec<_>>(),
                            "formula": mine.iter().map(json::divisor).collect::<Vec<_>>(),
                        })),
                    )
                });
            }
            Err(e) => rec.record(Suite::BruteForce, false, || (e.to_string(), ctx.clone())),
        }
    }

    case_report(curve, point, halves.len(), rec)
}

fn case_report(curve: &Curve, point: &AffinePoint, halves: usize, rec: Recorder) -> CaseReport {
    CaseReport {
        p: curve.field().p(),
        g: curve.genus(),
        roots: root_ints(curve),
        point: json::point(point),
        halves,
        tallies: rec.tallies,
        failures: rec.failures,
    }
}

/// `J[2]` checks for one curve.
pub fn check_two_torsion(curve: &Curve) -> CurveReport {
    let mut rec = Recorder::default();
    let n = curve.roots().len();
    let ctx = json!({ "curve": json::curve(curve) });
    let all = curve.enumerate_two_torsion();
    let expected = 1usize << (2 * curve.genus());
    let mut keys: Vec<_> = all.iter().map(MumfordDivisor::sort_key).collect();
    keys.sort();
    keys.dedup();
    rec.record(Suite::TwoTorsion, all.len() == expected && keys.len() == expected, || {
        (format!("{} elements, {} distinct", all.len(), keys.len()), ctx.clone())
    });
    let weierstrass: Vec<MumfordDivisor> = (0..n)
        .map(|i| curve.point_to_mumford(&curve.weierstrass_point(i)))
        .collect();
    for (mask, t) in even_masks(n).zip(&all) {
        let support = mask_support(mask, n);
        let iterated = support
            .iter()
            .fold(curve.identity(), |acc, &i| curve.cantor_add(&acc, &weierstrass[i]));
        let ok = curve.cantor_double(t).is_identity() && &curve.neg(t) == t && &iterated == t;
        rec.record(Suite::TwoTorsion, ok, || {
            (
                format!("T_S for S = {support:?} is wrong"),
                json!({
                    "curve": json::curve(curve),
                    "support": support,
                    "closed_form": json::divisor(t),
                    "iterated": json::divisor(&iterated),
                }),
            )
        });
    }
    CurveReport {
        p: curve.field().p(),
        g: curve.genus(),
        roots: root_ints(curve),
        tallies: rec.tallies,
        failures: rec.failures,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub primes: Vec<u64>,
    pub genera: Vec<usize>,
    pub seed: u64,
    /// Root sets per `(p, g)`; all of them when there are no more than this.
    pub max_root_sets: usize,
    /// Points per curve; all `a` in `F_p` when `None`.
    pub max_points: Option<usize>,
    pub brute_force: bool,
    pub execution: Execution,
}

impl SweepConfig {
    pub fn new(primes: Vec<u64>, genera: Vec<usize>, seed: u64) -> SweepConfig {
        SweepConfig {
            primes,
            genera,
            seed,
            max_root_sets: 20,
            max_points: None,
            brute_force: false,
            execution: Execution::default(),
        }
    }
}

/// Parses `"5,7,11,13x1,2"` into primes and genera.
pub fn parse_grid(s: &str) -> Result<(Vec<u64>, Vec<usize>)> {
    let bad = || Error::InvalidGrid(format!("{s:?} is not of the form \"p,p,...xg,g,...\""));
    let (ps, gs) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    let list = |t: &str| -> Result<Vec<u64>> {
        t.split(',')
            .map(|x| x.trim().parse::<u64>().map_err(|_| bad()))
            .collect()
    };
    let primes = list(ps)?;
    let genera = list(gs)?.into_iter().map(|g| g as usize).collect();
    Ok((primes, genera))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CellSummary {
    pub p: u64,
    pub g: usize,
    pub root_sets: usize,
    pub points: usize,
    pub tallies: BTreeMap<Suite, Tally>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub brute_force: bool,
    pub cells: Vec<CellSummary>,
    pub curves: Vec<CurveReport>,
    pub cases: Vec<CaseReport>,
    pub checks: u64,
    pub failures: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    /// Totals per suite over the whole grid.
    pub fn totals(&self) -> BTreeMap<Suite, Tally> {
        let mut out: BTreeMap<Suite, Tally> = BTreeMap::new();
        for cell in &self.cells {
            for (&s, &t) in &cell.tallies {
                out.entry(s).or_default().merge(t);
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn mix_seed(seed: u64, p: u64, g: usize, salt: u64) -> u64 {
    seed ^ p.rotate_left(17) ^ (g as u64).rotate_left(41) ^ salt.rotate_left(53)
}

/// Root sets for one grid cell: all `(2g+1)`-subsets of `F_p` in lexicographic
/// order if there are at most `max`, otherwise `max` distinct seeded samples.
pub fn root_sets(p: u64, g: usize, seed: u64, max: usize) -> Vec<Vec<u64>> {
    let k = 2 * g as u64 + 1;
    if binomial(p, k) <= max as u128 {
        let mut out = Vec::new();
        let mut cur: Vec<u64> = (0..k).collect();
        loop {
            out.push(cur.clone());
            // next combination
            let Some(i) = (0..k as usize).rev().find(|&i| cur[i] < p - k + i as u64) else {
                break;
            };
            cur[i] += 1;
            for j in i + 1..k as usize {
                cur[j] = cur[j - 1] + 1;
            }
        }
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, p, g, 1));
    let mut out: Vec<Vec<u64>> = Vec::with_capacity(max);
    while out.len() < max {
        let mut s: Vec<u64> = index::sample(&mut rng, p as usize, k as usize)
            .into_iter()
            .map(|i| i as u64)
            .collect();
        s.sort_unstable();
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

fn abscissas(p: u64, g: usize, seed: u64, max: Option<usize>) -> Vec<u64> {
    match max {
        Some(m) if (m as u64) < p => {
            let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, p, g, 2));
            let mut a: Vec<u64> = index::sample(&mut rng, p as usize, m)
                .into_iter()
                .map(|i| i as u64)
                .collect();
            a.sort_unstable();
            a
        }
        _ => (0..p).collect(),
    }
}

/// Runs the point and curve suites over the whole grid. Cases are independent
/// and may run in parallel; the report order is fixed by the grid.
pub fn sweep(config: &SweepConfig) -> Result<SweepReport> {
    let mut curves = Vec::new();
    let mut cells = Vec::new();
    for &p in &config.primes {
        let field = FieldParams::new(p).map_err(|e| Error::InvalidGrid(e.to_string()))?;
        for &g in &config.genera {
            if g == 0 || p < 2 * g as u64 + 1 {
                return Err(Error::InvalidGrid(format!(
                    "F_{p} has no {} distinct roots for genus {g}",
                    2 * g + 1
                )));
            }
            let sets = root_sets(p, g, config.seed, config.max_root_sets);
            let points = abscissas(p, g, config.seed, config.max_points);
            cells.push((p, g, sets.len(), points.len()));
            for set in sets {
                let roots = set.iter().map(|&r| field.from_u64(r)).collect();
                let curve = Curve::new(field, g, roots)?;
                curves.push((curve, points.clone()));
            }
        }
    }

    let cases: Vec<(usize, u64)> = curves
        .iter()
        .enumerate()
        .flat_map(|(i, (_, pts))| pts.iter().map(move |&a| (i, a)))
        .collect();
    let case_reports = par::map(&cases, config.execution, |&(i, a)| {
        let curve = &curves[i].0;
        let point = curve
            .point_with_canonical_b(curve.field().from_u64(a))
            .expect("f(a) is in F_p, hence a square in L");
        check_point(curve, &point, config.brute_force)
    });
    let curve_reports = par::map(&curves, config.execution, |(c, _)| check_two_torsion(c));

    let cells = cells
        .into_iter()
        .map(|(p, g, root_sets, points)| {
            let mut tallies: BTreeMap<Suite, Tally> = BTreeMap::new();
            let same = |q: u64, h: usize| q == p && h == g;
            for t in case_reports
                .iter()
                .filter(|c| same(c.p, c.g))
                .map(|c| &c.tallies)
                .chain(curve_reports.iter().filter(|c| same(c.p, c.g)).map(|c| &c.tallies))
            {
                for (&s, &x) in t {
                    tallies.entry(s).or_default().merge(x);
                }
            }
            CellSummary {
                p,
                g,
                root_sets,
                points,
                tallies,
            }
        })
        .collect::<Vec<_>>();
    let (checks, failures) = cells
        .iter()
        .flat_map(|c| c.tallies.values())
        .fold((0, 0), |(c, f), t| (c + t.checked, f + t.failed));
    Ok(SweepReport {
        seed: config.seed,
        brute_force: config.brute_force,
        cells,
        curves: curve_reports,
        cases: case_reports,
        checks,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_parsing() {
        assert_eq!(
            parse_grid("5,7,11,13x1,2").unwrap(),
            (vec![5, 7, 11, 13], vec![1, 2])
        );
        assert_eq!(parse_grid("11x3").unwrap(), (vec![11], vec![3]));
        for bad in ["", "5,7", "x1", "5x", "5,ax1"] {
            assert!(matches!(parse_grid(bad), Err(Error::InvalidGrid(_))), "{bad}");
        }
    }

    #[test]
    fn grid_validation() {
        let cfg = SweepConfig::new(vec![5], vec![3], 0);
        assert!(matches!(sweep(&cfg), Err(Error::InvalidGrid(_))));
        let cfg = SweepConfig::new(vec![9], vec![1], 0);
        assert!(matches!(sweep(&cfg), Err(Error::InvalidGrid(_))));
        let empty = sweep(&SweepConfig::new(vec![], vec![], 0)).unwrap();
        assert!(empty.cases.is_empty() && empty.cells.is_empty() && empty.passed());
    }

    #[test]
    fn root_set_selection() {
        assert_eq!(root_sets(5, 2, 0, 20), vec![vec![0, 1, 2, 3, 4]]);
        let all = root_sets(5, 1, 0, 20);
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[9], vec![2, 3, 4]);
        let sampled = root_sets(13, 2, 7, 20);
        assert_eq!(sampled.len(), 20);
        assert_eq!(sampled, root_sets(13, 2, 7, 20));
        assert_ne!(sampled, root_sets(13, 2, 8, 20));
        for s in &sampled {
            assert!(s.windows(2).all(|w| w[0] < w[1]) && s.len() == 5);
        }
    }

    #[test]
    fn brute_force_bounds() {
        let big = Curve::from_ints(13, 2, &[0, 1, 2, 3, 4]).unwrap();
        assert!(matches!(
            brute_force_halves(&big, &AffinePoint::Infinity),
            Err(Error::TooLarge(_))
        ));
        let g3 = Curve::from_ints(7, 3, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
        assert!(matches!(enumerate_group(&g3), Err(Error::TooLarge(_))));
    }

    #[test]
    fn halves_of_identity_are_two_torsion() {
        let c = Curve::from_ints(7, 1, &[1, 2, 4]).unwrap();
        let mut bf = brute_force_halves(&c, &AffinePoint::Infinity).unwrap();
        let mut tt = c.enumerate_two_torsion();
        bf.sort_by_key(MumfordDivisor::sort_key);
        tt.sort_by_key(MumfordDivisor::sort_key);
        assert_eq!(bf, tt);
    }

    #[test]
    fn group_check_p3() {
        let c = Curve::from_ints(3, 1, &[0, 1, 2]).unwrap();
        let report = exhaustive_group_check(&c).unwrap();
        assert!(report.passed(), "{report:?}");
        // y^2 = x^3 - x over F_9 is supersingular with 16 points
        assert_eq!(report.order, 16);
    }

    #[test]
    fn two_torsion_closed_form_matches_iterated_sum() {
        for (p, g, roots) in [(7u64, 1usize, vec![0i64, 3, 5]), (11, 2, vec![1, 2, 3, 5, 8]), (11, 3, vec![0, 1, 2, 3, 5, 7, 10])] {
            let c = Curve::from_ints(p, g, &roots).unwrap();
            let r = check_two_torsion(&c);
            assert!(r.failures.is_empty(), "{:?}", r.failures);
            assert_eq!(r.tallies[&Suite::TwoTorsion].checked, 1 + (1 << (2 * g)));
        }
    }
}
