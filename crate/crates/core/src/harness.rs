//! Job specifications, the classification pipeline and report rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::exact::{commutant_dim, ExactMatrix, HalfInt, Rational};
use crate::infinitesimal::{build_vogan_variety, conjugate_point, dominant_sort, VoganVariety};
use crate::lfactor::{adjoint_exponents, pole_order_at_1};
use crate::lie::{bracket, GroupType};
use crate::orbits::{
    enumerate_orbits, hasse_edges, is_open, is_strongly_regular, mw_involution, orbit_dimension, pyasetskii_dual,
    rank_invariants, triangle_to_multisegment, OrbitRecord, RankTriangle,
};
use crate::params::{
    arthur_to_point, discrete_from_partition, is_arthur_type, is_discrete, is_tempered, parameter_to_point,
    phi_of_psi, ArthurParameterData, Ladder, StructuredParameter, Summand,
};
use crate::Error;

/// How the parameter is described in a job.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParameterSpec {
    Segments(Vec<Summand>),
    DiscretePartition(Vec<usize>),
    Arthur(Vec<Ladder>),
    /// Exponents in any order, optionally with a point given in that order.
    Explicit {
        raw_exponents: Vec<HalfInt>,
        point: Option<ExactMatrix>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub group: GroupType,
    pub parameter: ParameterSpec,
    pub seed: u64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn to_rational(&self) -> Result<Rational, Error> {
        match self {
            Entry::Int(v) => Ok(Rational::from_integer((*v).into())),
            Entry::Text(s) => s
                .trim()
                .parse::<Rational>()
                .map_err(|_| Error::Parse(format!("point entry {s:?} is not a rational number"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    group: GroupType,
    segments: Option<Vec<Summand>>,
    discrete_partition: Option<Vec<usize>>,
    arthur: Option<Vec<Ladder>>,
    raw_exponents: Option<Vec<HalfInt>>,
    point: Option<Vec<Vec<Entry>>>,
    #[serde(default)]
    seed: u64,
}

/// Parses a JSON job. Exactly one of `segments`, `discrete_partition`,
/// `arthur` or `raw_exponents` (with an optional `point`) must be present,
/// and its totals must fit the group.
pub fn parse_spec(text: &str) -> Result<JobSpec, Error> {
    let raw: RawSpec = serde_json::from_str(text).map_err(|e| Error::Parse(format!("job spec: {e}")))?;
    let given = [
        raw.segments.is_some(),
        raw.discrete_partition.is_some(),
        raw.arthur.is_some(),
        raw.raw_exponents.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if given != 1 {
        return Err(Error::Parse(format!(
            "job spec: expected exactly one of segments, discrete_partition, arthur, raw_exponents; found {given}"
        )));
    }
    if raw.point.is_some() && raw.raw_exponents.is_none() {
        return Err(Error::Parse("job spec: point requires raw_exponents".into()));
    }
    let parameter = if let Some(s) = raw.segments {
        StructuredParameter::new(raw.group, s.clone())?;
        ParameterSpec::Segments(s)
    } else if let Some(p) = raw.discrete_partition {
        discrete_from_partition(raw.group, &p)?;
        ParameterSpec::DiscretePartition(p)
    } else if let Some(l) = raw.arthur {
        ArthurParameterData::new(raw.group, l.clone())?;
        ParameterSpec::Arthur(l)
    } else {
        let raw_exponents = raw.raw_exponents.expect("counted above");
        dominant_sort(raw.group, &raw_exponents)?;
        let point = match raw.point {
            None => None,
            Some(rows) => {
                let rows = rows
                    .iter()
                    .map(|r| r.iter().map(Entry::to_rational).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                let m = ExactMatrix::from_rows(rows)?;
                if m.rows() != raw_exponents.len() || m.cols() != raw_exponents.len() {
                    return Err(Error::DimensionMismatch(format!(
                        "point is {}x{} but there are {} exponents",
                        m.rows(),
                        m.cols(),
                        raw_exponents.len()
                    )));
                }
                Some(m)
            }
        };
        ParameterSpec::Explicit { raw_exponents, point }
    };
    Ok(JobSpec {
        group: raw.group,
        parameter,
        seed: raw.seed,
    })
}

/// A job resolved to concrete data.
#[derive(Clone, Debug)]
pub struct ResolvedJob {
    pub parameter: StructuredParameter,
    pub arthur: Option<ArthurParameterData>,
    pub variety: VoganVariety,
    pub x: ExactMatrix,
    pub y: Option<ExactMatrix>,
}

/// Langlands parameter of the type A orbit through `x`, read off from the
/// rank triangle of `x` in the standard representation.
fn parameter_of_point(group: GroupType, vv: &VoganVariety, x: &ExactMatrix) -> Result<StructuredParameter, Error> {
    let m = triangle_to_multisegment(&rank_invariants(vv, x)?)?;
    let summands = m
        .segments()
        .iter()
        .map(|s| Summand::new(HalfInt::from_twice((s.start.twice() + s.end.twice()) / 2), s.len()))
        .collect();
    StructuredParameter::new(group, summands)
}

pub fn resolve(spec: &JobSpec) -> Result<ResolvedJob, Error> {
    let (parameter, arthur, lambda, x, y) = match &spec.parameter {
        ParameterSpec::Segments(s) => {
            let p = StructuredParameter::new(spec.group, s.clone())?;
            let pt = parameter_to_point(&p)?;
            (p, None, pt.lambda, pt.n, None)
        }
        ParameterSpec::DiscretePartition(parts) => {
            let p = discrete_from_partition(spec.group, parts)?;
            let pt = parameter_to_point(&p)?;
            (p, None, pt.lambda, pt.n, None)
        }
        ParameterSpec::Arthur(l) => {
            let psi = ArthurParameterData::new(spec.group, l.clone())?;
            let pt = arthur_to_point(&psi)?;
            (phi_of_psi(&psi), Some(psi), pt.lambda, pt.n, pt.y)
        }
        ParameterSpec::Explicit { raw_exponents, point } => {
            let (lambda, perm) = dominant_sort(spec.group, raw_exponents)?;
            let n = raw_exponents.len();
            let x = match point {
                Some(p) => conjugate_point(p, &perm),
                None => ExactMatrix::zeros(n, n),
            };
            let vv = build_vogan_variety(&lambda);
            vv.require_v(&x)?;
            let p = parameter_of_point(spec.group, &vv, &x)?;
            return Ok(ResolvedJob {
                parameter: p,
                arthur: None,
                variety: vv,
                x,
                y: None,
            });
        }
    };
    let variety = build_vogan_variety(&lambda);
    variety.require_v(&x)?;
    Ok(ResolvedJob {
        parameter,
        arthur,
        variety,
        x,
        y,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub open: bool,
    pub closed: bool,
    pub tempered: bool,
    pub arthur: bool,
    pub discrete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualInvariant {
    pub dimension: usize,
    pub open: bool,
    pub closed: bool,
    pub multisegment: Option<String>,
    pub triangle: RankTriangle,
}

impl DualInvariant {
    fn from_record(r: &OrbitRecord) -> Self {
        DualInvariant {
            dimension: r.dimension,
            open: r.open,
            closed: r.closed,
            multisegment: r.multisegment.as_ref().map(ToString::to_string),
            triangle: r.triangle.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The statement being checked, in words.
    pub statement: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub group: GroupType,
    /// Dominant exponents as twice-values.
    pub exponents: Vec<i64>,
    pub summands: Vec<Summand>,
    #[serde(rename = "dimV")]
    pub dim_v: usize,
    pub orbit_dim: usize,
    /// Nonzero positions of `x_φ`, 1-indexed.
    pub x_support: Vec<(usize, usize)>,
    pub flags: Flags,
    pub arthur_witness: Option<Vec<Ladder>>,
    pub dual_invariant: DualInvariant,
    pub adjoint_exponents: Vec<(i64, usize)>,
    pub l_factor: String,
    pub pole_order: usize,
    /// Whether the packet is expected to contain a generic member, which is
    /// predicted exactly for open parameters.
    pub generic_expected: bool,
    /// For Arthur input: whether `(x_ψ, y_ψ)` is strongly regular.
    pub strongly_regular: Option<bool>,
    pub checks: Vec<Check>,
    pub seed: u64,
}

impl Report {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn check(name: &str, statement: &str, pass: bool) -> Check {
    Check {
        name: name.into(),
        statement: statement.into(),
        pass,
    }
}

/// Full classification of one parameter, including runtime checks of the
/// relations between the computed flags.
pub fn cmd_classify(spec: &JobSpec) -> Result<Report, Error> {
    let job = resolve(spec)?;
    if matches!(&spec.parameter, ParameterSpec::Explicit { point: None, .. }) {
        return Err(Error::Parse("classify needs a point: add \"point\" next to \"raw_exponents\"".into()));
    }
    let vv = &job.variety;
    let x = &job.x;
    let open = is_open(vv, x)?;
    let orbit_dim = orbit_dimension(vv, x)?;
    let ae = adjoint_exponents(vv, x)?;
    let pole_order = pole_order_at_1(&ae)?;
    let dual = pyasetskii_dual(vv, x, spec.seed)?;
    let fiber = commutant_dim(vv.basis_vstar(), &[x])?;
    let tempered = is_tempered(&job.parameter);
    let witness = is_arthur_type(&job.parameter);
    let arthur = witness.is_some();
    let discrete = is_discrete(&job.parameter);
    let closed = orbit_dim == 0;

    let mut checks = vec![
        check("open-iff-regular", "open ⟺ L(s, φ, Ad) is regular at s = 1", open == (pole_order == 0)),
        check(
            "conormal-dimension",
            "dim {y ∈ V* : [x, y] = 0} = dim V − dim C",
            fiber == vv.dim_v() - orbit_dim,
        ),
        check(
            "tempered-implies-open-arthur",
            "tempered ⟹ open and of Arthur type",
            !tempered || (open && arthur),
        ),
        check(
            "tempered-iff-open-and-arthur",
            "tempered ⟺ open and of Arthur type",
            tempered == (open && arthur),
        ),
        check("discrete-implies-tempered", "discrete ⟹ tempered", !discrete || tempered),
        check("discrete-implies-open", "discrete ⟹ open", !discrete || open),
        check(
            "dual-exchanges-open-closed",
            "the dual of the open orbit is the zero orbit, and the dual of the zero orbit is open",
            (!open || dual.closed) && (!closed || dual.open),
        ),
    ];
    if let Some(m) = dual.multisegment.as_ref() {
        let own = triangle_to_multisegment(&rank_invariants(vv, x)?)?;
        checks.push(check(
            "dual-matches-mw",
            "the conormal dual orbit is named by the Mœglin–Waldspurger involution",
            *m == mw_involution(&own),
        ));
    }
    let mut strongly_regular = None;
    if let Some(y) = &job.y {
        checks.push(check("arthur-points-commute", "[x_ψ, y_ψ] = 0", bracket(x, y)?.is_zero()));
        let sreg = is_strongly_regular(vv, x, y)?;
        strongly_regular = Some(sreg);
        let psi_tempered = job.arthur.as_ref().is_some_and(ArthurParameterData::is_tempered);
        if psi_tempered {
            checks.push(check(
                "tempered-psi-strongly-regular",
                "for tempered ψ, y_ψ = 0 and (x_ψ, y_ψ) is strongly regular",
                y.is_zero() && sreg,
            ));
        }
    }

    Ok(Report {
        group: spec.group,
        exponents: vv.lambda().twice_values(),
        summands: job.parameter.summands().to_vec(),
        dim_v: vv.dim_v(),
        orbit_dim,
        x_support: x.support().into_iter().map(|(i, j)| (i + 1, j + 1)).collect(),
        flags: Flags {
            open,
            closed,
            tempered,
            arthur,
            discrete,
        },
        arthur_witness: witness.map(|w| w.ladders().to_vec()),
        dual_invariant: DualInvariant::from_record(&dual),
        adjoint_exponents: ae.as_pairs(),
        l_factor: ae.to_string(),
        pole_order,
        generic_expected: open,
        strongly_regular,
        checks,
        seed: spec.seed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format {other:?}; use table or json"))),
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn twice_to_string(t: i64) -> String {
    HalfInt::from_twice(t).to_string()
}

pub fn render_report(r: &Report, format: Format) -> String {
    if format == Format::Json {
        return serde_json::to_string_pretty(r).expect("report serializes") + "\n";
    }
    let mut s = String::new();
    let yn = |b: bool| if b { "true" } else { "false" };
    let exps: Vec<String> = r.exponents.iter().map(|&t| twice_to_string(t)).collect();
    let _ = writeln!(s, "group: {}", r.group);
    let _ = writeln!(s, "λ (dominant): {}", exps.join(", "));
    let _ = writeln!(s, "summands (center, length): {}", join(&r.summands));
    if r.dim_v == 0 {
        let _ = writeln!(s, "V = 0; orbit open = closed = true");
    } else {
        let _ = writeln!(s, "dim V: {}", r.dim_v);
        let support: Vec<String> = r.x_support.iter().map(|(i, j)| format!("({i},{j})")).collect();
        let _ = writeln!(s, "x_φ support: {}", support.join(","));
        let _ = writeln!(s, "orbit dimension: {}", r.orbit_dim);
        let _ = writeln!(s, "open: {}  closed: {}", yn(r.flags.open), yn(r.flags.closed));
    }
    let _ = writeln!(
        s,
        "tempered: {}  arthur type: {}  discrete: {}",
        yn(r.flags.tempered),
        yn(r.flags.arthur),
        yn(r.flags.discrete)
    );
    if let Some(w) = &r.arthur_witness {
        let _ = writeln!(s, "arthur witness: {}", join(w));
    }
    if let Some(sreg) = r.strongly_regular {
        let _ = writeln!(s, "(x_ψ, y_ψ) strongly regular: {}", yn(sreg));
    }
    let d = &r.dual_invariant;
    let name = d.multisegment.as_deref().map(|m| format!(" {m}")).unwrap_or_default();
    let _ = writeln!(
        s,
        "dual orbit in V*:{name} dimension {} (open: {}, closed: {})",
        d.dimension,
        yn(d.open),
        yn(d.closed)
    );
    let _ = writeln!(s, "L(s, φ, Ad) = {}", r.l_factor);
    let _ = writeln!(s, "pole order at s = 1: {}", r.pole_order);
    let _ = writeln!(
        s,
        "generic member expected in the packet: {} (predicted exactly when the parameter is open)",
        yn(r.generic_expected)
    );
    let _ = writeln!(s, "checks:");
    for c in &r.checks {
        let _ = writeln!(s, "  [{}] {}: {}", if c.pass { "pass" } else { "FAIL" }, c.name, c.statement);
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitRow {
    pub multisegment: String,
    pub dimension: usize,
    pub open: bool,
    pub closed: bool,
    /// Conormal dual, computed geometrically.
    pub dual: String,
    /// Mœglin–Waldspurger involution of the multisegment.
    pub mw: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTable {
    pub group: GroupType,
    pub exponents: Vec<i64>,
    #[serde(rename = "dimV")]
    pub dim_v: usize,
    pub rows: Vec<OrbitRow>,
    /// Covering relations of the closure order as `(lower, upper)` row indices.
    pub hasse: Vec<(usize, usize)>,
}

/// All orbits of a type A variety with their duals and closure order.
pub fn cmd_orbits(spec: &JobSpec) -> Result<OrbitTable, Error> {
    if !spec.group.is_gl() {
        return Err(Error::Unsupported(format!(
            "orbit tables are only available for GL, not {}",
            spec.group
        )));
    }
    let job = resolve(spec)?;
    let vv = &job.variety;
    let records = enumerate_orbits(vv)?;
    let rows = records
        .iter()
        .map(|r| {
            let m = r.multisegment.clone().expect("type A");
            let dual = pyasetskii_dual(vv, &r.point, spec.seed)?;
            Ok(OrbitRow {
                multisegment: m.to_string(),
                dimension: r.dimension,
                open: r.open,
                closed: r.closed,
                dual: dual.multisegment.expect("type A").to_string(),
                mw: mw_involution(&m).to_string(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(OrbitTable {
        group: spec.group,
        exponents: vv.lambda().twice_values(),
        dim_v: vv.dim_v(),
        rows,
        hasse: hasse_edges(&records)?,
    })
}

pub fn render_orbits(t: &OrbitTable, format: Format) -> String {
    if format == Format::Json {
        return serde_json::to_string_pretty(t).expect("table serializes") + "\n";
    }
    let mut s = String::new();
    let exps: Vec<String> = t.exponents.iter().map(|&e| twice_to_string(e)).collect();
    let _ = writeln!(s, "group: {}", t.group);
    let _ = writeln!(s, "λ (dominant): {}", exps.join(", "));
    let _ = writeln!(s, "dim V: {}; {} orbits", t.dim_v, t.rows.len());
    let _ = writeln!(s, "{:>3}  {:<28} {:>4}  {:<6} {:<28} {}", "#", "multisegment", "dim", "flags", "dual", "mw");
    for (i, r) in t.rows.iter().enumerate() {
        let flags = match (r.open, r.closed) {
            (true, true) => "open,closed",
            (true, false) => "open",
            (false, true) => "closed",
            _ => "",
        };
        let _ = writeln!(
            s,
            "{:>3}  {:<28} {:>4}  {:<6} {:<28} {}",
            i, r.multisegment, r.dimension, flags, r.dual, r.mw
        );
    }
    let edges: Vec<String> = t.hasse.iter().map(|(a, b)| format!("{a}<{b}")).collect();
    let _ = writeln!(s, "closure order (covering relations): {}", edges.join(" "));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let so7 = parse_spec(r#"{"group":{"kind":"SO_odd","n":7},"discrete_partition":[2,4]}"#).unwrap();
        assert_eq!(so7.parameter, ParameterSpec::DiscretePartition(vec![2, 4]));
        assert_eq!(so7.seed, 0);
        let st = parse_spec(r#"{"group":{"kind":"GL","n":2},"segments":[{"center":0,"length":2}]}"#).unwrap();
        assert_eq!(st.parameter, ParameterSpec::Segments(vec![Summand::new(HalfInt::ZERO, 2)]));
        let bad = parse_spec(r#"{"group":{"kind":"SO_odd","n":7},"discrete_partition":[3,3]}"#).unwrap_err();
        assert!(bad.to_string().contains("parts must be distinct even integers"), "{bad}");
    }

    #[test]
    fn parse_rejects_malformed_jobs() {
        assert!(parse_spec(r#"{"group":{"kind":"GL","n":2}}"#).is_err());
        assert!(parse_spec(r#"{"group":{"kind":"GL","n":2},"segments":[],"arthur":[]}"#).is_err());
        assert!(parse_spec(r#"{"group":{"kind":"GL","n":2},"segments":[{"center":0,"length":2}],"bogus":1}"#).is_err());
        assert!(parse_spec(r#"{"group":{"kind":"SO_odd","n":4},"discrete_partition":[4]}"#).is_err());
        let e = parse_spec(r#"{"group":{"kind":"GL","n":2},"raw_exponents":["1/2","-1/2"],"point":[[0,1]]}"#);
        assert!(e.is_err());
        let ok = parse_spec(r#"{"group":{"kind":"GL","n":2},"raw_exponents":["-1/2","1/2"],"point":[[0,0],[1,0]]}"#)
            .unwrap();
        let r = cmd_classify(&ok).unwrap();
        assert!(r.flags.open && r.flags.tempered);
        assert_eq!(r.summands, vec![Summand::new(HalfInt::ZERO, 2)]);
    }

    #[test]
    fn classify_examples() {
        let r = cmd_classify(&parse_spec(r#"{"group":{"kind":"SO_odd","n":7},"discrete_partition":[2,4]}"#).unwrap())
            .unwrap();
        assert!(r.flags.open && r.flags.tempered && r.flags.discrete);
        assert_eq!(r.pole_order, 0);
        assert!(r.all_checks_pass());
        let table = render_report(&r, Format::Table);
        assert!(table.contains("x_φ support: (1,2),(2,5),(3,4),(5,6)"), "{table}");

        let r = cmd_classify(&parse_spec(r#"{"group":{"kind":"GL","n":1},"segments":[{"center":1,"length":1}]}"#).unwrap())
            .unwrap();
        assert!(r.flags.open && !r.flags.tempered && !r.flags.arthur);
        assert!(r.all_checks_pass());
        assert!(render_report(&r, Format::Table).contains("V = 0; orbit open = closed = true"));

        let r = cmd_classify(
            &parse_spec(r#"{"group":{"kind":"GL","n":2},"segments":[{"center":"1/2","length":1},{"center":"-1/2","length":1}]}"#)
                .unwrap(),
        )
        .unwrap();
        assert!(!r.flags.open && r.flags.arthur && !r.flags.tempered);
        assert_eq!(r.pole_order, 1);
        assert!(r.all_checks_pass());
    }

    #[test]
    fn arthur_job() {
        let r = cmd_classify(
            &parse_spec(r#"{"group":{"kind":"GL","n":4},"arthur":[{"center":0,"a":2,"b":2}]}"#).unwrap(),
        )
        .unwrap();
        assert_eq!(r.strongly_regular, Some(true));
        assert!(r.all_checks_pass());
    }

    #[test]
    fn json_round_trip_and_determinism() {
        let spec = parse_spec(r#"{"group":{"kind":"Sp","n":14},"discrete_partition":[7,5,3],"seed":3}"#).unwrap();
        let a = render_report(&cmd_classify(&spec).unwrap(), Format::Json);
        let b = render_report(&cmd_classify(&spec).unwrap(), Format::Json);
        assert_eq!(a, b);
        let back: Report = serde_json::from_str(&a).unwrap();
        assert_eq!(render_report(&back, Format::Json), a);
    }

    #[test]
    fn orbit_tables() {
        let t = cmd_orbits(&parse_spec(r#"{"group":{"kind":"GL","n":3},"raw_exponents":[1,0,-1]}"#).unwrap()).unwrap();
        assert_eq!(t.rows.len(), 4);
        assert!(t.rows.iter().all(|r| r.dual == r.mw));
        assert!(t.rows[0].closed && t.rows[3].open);
        let t = cmd_orbits(&parse_spec(r#"{"group":{"kind":"GL","n":2},"raw_exponents":[0,0]}"#).unwrap()).unwrap();
        assert_eq!(t.rows.len(), 1);
        let t = cmd_orbits(&parse_spec(r#"{"group":{"kind":"GL","n":4},"raw_exponents":["3/2","1/2","-1/2","-3/2"]}"#).unwrap())
            .unwrap();
        assert_eq!(t.rows.len(), 8);
        assert!(cmd_orbits(&parse_spec(r#"{"group":{"kind":"SO_odd","n":7},"discrete_partition":[2,4]}"#).unwrap()).is_err());
    }
}
