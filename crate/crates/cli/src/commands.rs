use std::fmt;
use std::io::Read;
use std::path::Path;

use jacsplit_core::halving::{assemble_half, enumerate_halves, weierstrass_translate};
use jacsplit_core::json::{self, CurveRepr, DivisorRepr, HalveDocument};
use jacsplit_core::oracle::{self, SweepConfig};
use jacsplit_core::{AffinePoint, Curve, Error, Execution, FieldParams, MumfordDivisor, SignVector};
use serde_json::{json, Value};

use crate::{HalveArgs, Toggle, TorsorArgs, TranslateArgs, VerifyArgs};

pub enum CliError {
    Core(Error),
    Io(String),
    Usage(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Io(_) => "Io",
            CliError::Usage(_) => "Usage",
        }
    }

    /// A failed self-check means an identity did not hold, not bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::InternalInconsistency(_)) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Io(s) | CliError::Usage(s) => f.write_str(s),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn emit(value: &Value) {
    print!("{}", json::to_canonical_string(value));
}

fn read_input(path: Option<&Path>) -> Result<String> {
    let mut s = String::new();
    match path {
        Some(p) => {
            s = std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        }
    }
    Ok(s)
}

/// The genus follows from the number of roots.
fn curve_from_flags(p: u64, roots: &str) -> Result<Curve> {
    let field = FieldParams::new(p)?;
    let roots = json::parse_elem_list(roots, field)?;
    if roots.len() % 2 == 0 {
        return Err(Error::WrongRootCount {
            expected: roots.len() + 1,
            got: roots.len(),
        }
        .into());
    }
    Ok(Curve::new(field, roots.len() / 2, roots)?)
}

fn parse_point(curve: &Curve, s: &str) -> Result<AffinePoint> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("point {s:?} is not of the form a,b")))?;
    let a = json::parse_elem(a, curve.field())?;
    if !a.is_rational() {
        return Err(Error::AbscissaNotRational(a.to_string()).into());
    }
    let point = if b.trim() == "auto" {
        curve.point_with_canonical_b(a)?
    } else {
        AffinePoint::Finite {
            a,
            b: json::parse_elem(b, curve.field())?,
        }
    };
    if !curve.point_on_curve(&point) {
        let (a, b) = point.coords().expect("finite");
        return Err(Error::PointNotOnCurve(a.to_string(), b.to_string()).into());
    }
    Ok(point)
}

pub fn halve(args: HalveArgs) -> Result<u8> {
    let curve = curve_from_flags(args.curve.p, &args.curve.roots)?;
    let point = parse_point(&curve, &args.point)?;
    let halves = enumerate_halves(&curve, &point, !args.no_verify)?;
    let halves: Vec<Value> = halves
        .iter()
        .map(|h| {
            let mut entry = json!({
                "phi": h.phi.to_string(),
                "profile": json::profile(&h.profile),
            });
            if !args.profile_only {
                entry["U"] = json::poly(h.divisor.u());
                entry["V"] = json::poly(h.divisor.v());
            }
            entry
        })
        .collect();
    emit(&json!({
        "curve": json::curve(&curve),
        "point": json::point(&point),
        "halves": halves,
    }));
    Ok(0)
}

pub fn torsor(args: TorsorArgs) -> Result<u8> {
    let doc: HalveDocument = json::parse(&read_input(args.input.as_deref())?)?;
    let curve = doc.curve.to_curve()?;
    let point = doc.point.to_point(curve.field())?;
    let phi: SignVector = args.phi.parse()?;
    if phi.len() != curve.roots().len() {
        return Err(Error::BadSignVector(format!(
            "{} has {} bits for {} roots",
            args.phi,
            phi.len(),
            curve.roots().len()
        ))
        .into());
    }
    let selected: Vec<_> = match args.index {
        Some(i) => vec![doc.halves.get(i).ok_or_else(|| {
            CliError::Usage(format!("index {i} out of range ({} halves)", doc.halves.len()))
        })?],
        None => doc.halves.iter().collect(),
    };
    let shift = curve.two_torsion_point(&phi.support())?;
    let mut all_equal = true;
    let mut out = Vec::new();
    for half in selected {
        let profile = half.profile.to_profile(&curve)?;
        if profile.point() != point {
            return Err(Error::NotAHalf("profile belongs to a different point".into()).into());
        }
        let a_r = match half.divisor(&curve)? {
            Some(d) => d,
            None => assemble_half(&curve, &profile),
        };
        let flipped = profile.flip(&phi);
        let recomputed = assemble_half(&curve, &flipped);
        let cantor = curve.cantor_add(&a_r, &shift);
        let equal = recomputed == cantor;
        all_equal &= equal;
        out.push(json!({
            "phi": half.phi()?.xor(&phi).to_string(),
            "profile": json::profile(&flipped),
            "U": json::poly(recomputed.u()),
            "V": json::poly(recomputed.v()),
            "cantor": json::divisor(&cantor),
            "equal": equal,
        }));
    }
    emit(&json!({
        "curve": json::curve(&curve),
        "point": json::point(&point),
        "applied": phi.to_string(),
        "halves": out,
        "equal": all_equal,
    }));
    Ok(if all_equal { 0 } else { 1 })
}

fn translate_input(args: &TranslateArgs) -> Result<(Curve, MumfordDivisor)> {
    match (args.p, &args.roots, &args.u, &args.v) {
        (Some(p), Some(roots), Some(u), Some(v)) => {
            let curve = curve_from_flags(p, roots)?;
            let field = curve.field();
            let u = jacsplit_core::Poly::new(field, json::parse_elem_list(u, field)?);
            let v = jacsplit_core::Poly::new(field, json::parse_elem_list(v, field)?);
            let d = curve.divisor(u, v)?;
            Ok((curve, d))
        }
        (None, None, None, None) => {
            let value: Value = json::parse(&read_input(args.input.as_deref())?)?;
            let field = |k: &str| value.get(k).cloned().ok_or_else(|| Error::Parse(format!("missing {k:?}")));
            let curve: CurveRepr = serde_json::from_value(field("curve")?).map_err(|e| Error::Parse(e.to_string()))?;
            let curve = curve.to_curve()?;
            let pair = match value.get("halves") {
                Some(halves) => halves
                    .get(args.index)
                    .cloned()
                    .ok_or_else(|| CliError::Usage(format!("no half at index {}", args.index)))?,
                None => value.clone(),
            };
            let pair: DivisorRepr = serde_json::from_value(pair).map_err(|e| Error::Parse(e.to_string()))?;
            let d = pair.to_divisor(&curve)?;
            Ok((curve, d))
        }
        _ => Err(CliError::Usage(
            "give all of --p, --roots, --U, --V or none of them (JSON input)".into(),
        )),
    }
}

pub fn translate(args: TranslateArgs) -> Result<u8> {
    let (curve, d) = translate_input(&args)?;
    let beta = json::parse_elem(&args.beta, curve.field())?;
    let index = curve
        .root_index(beta)
        .ok_or_else(|| Error::RootNotInR(beta.to_string()))?;
    let closed = weierstrass_translate(&curve, &d, beta)?;
    let cantor = curve.cantor_add(&d, &curve.point_to_mumford(&curve.weierstrass_point(index)));
    let equal = closed == cantor;
    emit(&json!({
        "curve": json::curve(&curve),
        "beta": json::fe(beta),
        "input": json::divisor(&d),
        "U": json::poly(closed.u()),
        "V": json::poly(closed.v()),
        "cantor": json::divisor(&cantor),
        "equal": equal,
    }));
    Ok(if equal { 0 } else { 1 })
}

pub fn verify(args: VerifyArgs) -> Result<u8> {
    let (primes, genera) = oracle::parse_grid(&args.grid)?;
    let mut config = SweepConfig::new(primes, genera, args.seed);
    config.brute_force = matches!(args.brute_force, Toggle::On);
    config.max_root_sets = args.max_curves;
    config.max_points = args.max_points;
    if args.sequential {
        config.execution = Execution::Sequential;
    }
    let report = oracle::sweep(&config)?;
    if report.cells.is_empty() {
        return Err(Error::InvalidGrid(format!("{:?} selects no curves", args.grid)).into());
    }
    let mut value = report.to_json();
    if args.summary {
        if let Some(map) = value.as_object_mut() {
            map.remove("curves");
            map.remove("cases");
        }
    }
    let text = json::to_canonical_string(&value);
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(if report.passed() { 0 } else { 1 })
}
