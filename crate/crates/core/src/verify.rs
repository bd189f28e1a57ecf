//! Exhaustive verification suites over small instances.
//!
//! Each suite enumerates a finite family, checks named properties on every
//! instance and reports per-property counts. Instances may run in parallel;
//! results are collected in enumeration order so output never depends on
//! scheduling.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{commutant_dim, ExactMatrix, HalfInt};
use crate::infinitesimal::{build_vogan_variety, InfinitesimalParameter, VoganVariety};
use crate::lfactor::{adjoint_exponents, is_regular_at_1};
use crate::lie::{FormKind, GroupType};
use crate::orbits::{
    enumerate_orbits, is_open, is_strongly_regular, mw_involution, pyasetskii_dual, pyasetskii_dual_of_vstar,
    OrbitRecord,
};
use crate::params::{
    arthur_to_point, discrete_from_partition, is_arthur_type, is_tempered, parameter_to_point, phi_of_psi,
    ArthurParameterData, Ladder, StructuredParameter, Summand,
};
use crate::Error;

pub const SUITES: &[&str] = &[
    "fiber-dimension",
    "open-equals-regular",
    "duality-involution",
    "tempered-iff-open-and-arthur",
    "discrete-implies-open",
    "tempered-union-open",
];

/// Size limits of the enumerated families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    /// Largest `N̂` for type A infinitesimal parameters.
    pub gl_size: usize,
    /// Largest exponent spread (max − min) for type A, in whole units.
    pub gl_spread: usize,
    /// Type A instances with a larger `V_λ` are skipped by the duality suite.
    pub max_dim_v: usize,
    /// Number of sampler seeds compared by the duality suite.
    pub seeds: u64,
    /// Largest `N̂` for orthogonal and symplectic duals.
    pub classical_size: usize,
    /// Largest `Σ a·b` for Arthur data.
    pub arthur_size: usize,
    /// Largest combined `N̂` for unions of tempered parameters.
    pub union_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            gl_size: 6,
            gl_spread: 5,
            max_dim_v: 12,
            seeds: 8,
            classical_size: 15,
            arthur_size: 8,
            union_size: 8,
        }
    }
}

impl std::str::FromStr for Bounds {
    type Err = Error;

    /// `key=value` pairs separated by commas, e.g. `gl_size=5,seeds=4`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut b = Bounds::default();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bound {item:?} is not key=value")))?;
            let v: u64 = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bound {k} needs a non-negative integer")))?;
            let u = v as usize;
            match k.trim() {
                "gl_size" => b.gl_size = u,
                "gl_spread" => b.gl_spread = u,
                "max_dim_v" => b.max_dim_v = u,
                "seeds" => b.seeds = v,
                "classical_size" => b.classical_size = u,
                "arthur_size" => b.arthur_size = u,
                "union_size" => b.union_size = u,
                other => return Err(Error::Parse(format!("unknown bound {other:?}"))),
            }
        }
        Ok(b)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub bounds: Bounds,
    pub seed: u64,
    pub instances: usize,
    pub properties: BTreeMap<String, Counts>,
    /// Full description of every failing instance.
    pub failures: Vec<String>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}: {} instances", self.suite, self.instances)?;
        for (name, c) in &self.properties {
            writeln!(f, "  {name}: {} pass, {} fail", c.pass, c.fail)?;
        }
        for fail in &self.failures {
            writeln!(f, "  FAIL {fail}")?;
        }
        write!(f, "{}", if self.passed() { "result: pass" } else { "result: FAIL" })
    }
}

struct Outcome {
    property: &'static str,
    failure: Option<String>,
}

fn outcome(property: &'static str, pass: bool, instance: impl FnOnce() -> String) -> Outcome {
    Outcome {
        property,
        failure: (!pass).then(|| format!("{property}: {}", instance())),
    }
}

fn errored(property: &'static str, instance: &str, e: Error) -> Outcome {
    Outcome {
        property,
        failure: Some(format!("{property}: {instance}: error: {e}")),
    }
}

// ---------------------------------------------------------------------------
// families

/// Non-increasing partitions of `n`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            acc.push(p);
            go(n - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Dominant type A exponents (as twice-values) with smallest value 0, at most
/// `size` entries and spread at most `spread`. Translating λ by a scalar does
/// not change `V_λ`, so this covers every λ in the bounds up to translation.
pub fn gl_family(size: usize, spread: usize) -> Vec<Vec<i64>> {
    let top = 2 * spread as i64;
    let mut out = Vec::new();
    fn go(len: usize, from: i64, top: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if acc.len() == len {
            let mut v = acc.clone();
            v.reverse();
            out.push(v);
            return;
        }
        for t in from..=top {
            acc.push(t);
            go(len, t, top, acc, out);
            acc.pop();
        }
    }
    for len in 1..=size {
        go(len, 0, top, &mut vec![0], &mut out);
    }
    out
}

fn gl_variety(twice: &[i64]) -> VoganVariety {
    let raw: Vec<HalfInt> = twice.iter().map(|&t| HalfInt::from_twice(t)).collect();
    let lambda = InfinitesimalParameter::new(GroupType::gl(raw.len()), &raw).expect("type A λ is always valid");
    build_vogan_variety(&lambda)
}

/// The three families of orthogonal and symplectic duals, with their `N̂`.
fn classical_groups(max_size: usize) -> Vec<GroupType> {
    let mut out = Vec::new();
    for size in 2..=max_size {
        for form in [FormKind::Alternating, FormKind::Symmetric] {
            if let Ok(g) = GroupType::from_dual(form, size) {
                out.push(g);
            }
        }
    }
    out
}

/// Parts of the dual form's wrong parity must come in pairs.
fn is_classical_partition(form: FormKind, parts: &[usize]) -> bool {
    let wrong_parity = |p: usize| match form {
        FormKind::Alternating => p % 2 == 1,
        FormKind::Symmetric => p % 2 == 0,
    };
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_insert(0) += 1;
    }
    counts.iter().all(|(&p, &k)| !wrong_parity(p) || k % 2 == 0)
}

fn tempered_parameters(group: GroupType) -> Vec<StructuredParameter> {
    partitions(group.dual_size())
        .into_iter()
        .filter(|parts| group.dual_form().map_or(true, |f| is_classical_partition(f, parts)))
        .map(|parts| {
            let summands = parts.into_iter().map(|l| Summand::new(HalfInt::ZERO, l)).collect();
            StructuredParameter::new(group, summands).expect("tempered partitions are valid")
        })
        .collect()
}

fn discrete_partitions(group: GroupType) -> Vec<Vec<usize>> {
    partitions(group.dual_size())
        .into_iter()
        .filter(|parts| discrete_from_partition(group, parts).is_ok())
        .collect()
}

/// Multisets of `(a, b)` with `Σ a·b = n`, as non-increasing lists.
fn ladder_shapes(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut shapes: Vec<(usize, usize)> = Vec::new();
    for a in 1..=n {
        for b in 1..=n / a {
            shapes.push((a, b));
        }
    }
    shapes.sort_by(|x, y| y.cmp(x));
    fn go(
        left: usize,
        from: usize,
        shapes: &[(usize, usize)],
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for i in from..shapes.len() {
            let (a, b) = shapes[i];
            if a * b <= left {
                acc.push((a, b));
                go(left - a * b, i, shapes, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 0, &shapes, &mut Vec::new(), &mut out);
    out
}

fn arthur_family(group: GroupType) -> Vec<ArthurParameterData> {
    ladder_shapes(group.dual_size())
        .into_iter()
        .filter_map(|shape| {
            let ladders = shape.into_iter().map(|(a, b)| Ladder::new(HalfInt::ZERO, a, b)).collect();
            let psi = ArthurParameterData::new(group, ladders).ok()?;
            // wrong-type ladders without a partner cannot be embedded
            arthur_to_point(&psi).ok().map(|_| psi)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// per-instance checks

fn describe_orbit(twice: &[i64], o: &OrbitRecord) -> String {
    let m = o.multisegment.as_ref().map(ToString::to_string).unwrap_or_default();
    format!("GL λ(twice) = {twice:?}, orbit {m} (dim {})", o.dimension)
}

fn fiber_dimension_gl(twice: &[i64]) -> Vec<Outcome> {
    let vv = gl_variety(twice);
    let orbits = match enumerate_orbits(&vv) {
        Ok(o) => o,
        Err(e) => return vec![errored("conormal-fiber-dim", &format!("{twice:?}"), e)],
    };
    orbits
        .iter()
        .map(|o| match commutant_dim(vv.basis_vstar(), &[&o.point]) {
            Ok(fiber) => outcome("conormal-fiber-dim", fiber == vv.dim_v() - o.dimension, || {
                format!("{}: fiber {fiber}, dim V {}", describe_orbit(twice, o), vv.dim_v())
            }),
            Err(e) => errored("conormal-fiber-dim", &describe_orbit(twice, o), e),
        })
        .collect()
}

fn fiber_dimension_point(p: &StructuredParameter) -> Vec<Outcome> {
    let run = || -> Result<(usize, usize, usize), Error> {
        let pt = parameter_to_point(p)?;
        let vv = build_vogan_variety(&pt.lambda);
        let fiber = commutant_dim(vv.basis_vstar(), &[&pt.n])?;
        let dim = crate::orbits::orbit_dimension(&vv, &pt.n)?;
        Ok((fiber, vv.dim_v(), dim))
    };
    match run() {
        Ok((fiber, dim_v, dim)) => vec![outcome("classical-conormal-fiber-dim", fiber == dim_v - dim, || {
            format!("{p}: fiber {fiber}, dim V {dim_v}, dim C {dim}")
        })],
        Err(e) => vec![errored("classical-conormal-fiber-dim", &p.to_string(), e)],
    }
}

fn open_regular(vv: &VoganVariety, x: &ExactMatrix, property: &'static str, what: impl Fn() -> String) -> Outcome {
    let run = || -> Result<(bool, bool), Error> {
        let open = is_open(vv, x)?;
        let regular = is_regular_at_1(&adjoint_exponents(vv, x)?)?;
        Ok((open, regular))
    };
    match run() {
        Ok((open, regular)) => outcome(property, open == regular, || format!("{}: open {open}, regular {regular}", what())),
        Err(e) => errored(property, &what(), e),
    }
}

fn open_regular_gl(twice: &[i64]) -> Vec<Outcome> {
    let vv = gl_variety(twice);
    match enumerate_orbits(&vv) {
        Ok(orbits) => orbits
            .iter()
            .map(|o| open_regular(&vv, &o.point, "gl-open-iff-regular", || describe_orbit(twice, o)))
            .collect(),
        Err(e) => vec![errored("gl-open-iff-regular", &format!("{twice:?}"), e)],
    }
}

fn open_regular_point(p: &StructuredParameter) -> Vec<Outcome> {
    match parameter_to_point(p) {
        Ok(pt) => {
            let vv = build_vogan_variety(&pt.lambda);
            vec![open_regular(&vv, &pt.n, "classical-open-iff-regular", || p.to_string())]
        }
        Err(e) => vec![errored("classical-open-iff-regular", &p.to_string(), e)],
    }
}

fn duality_gl(twice: &[i64], seed: u64, seeds: u64) -> Vec<Outcome> {
    let vv = gl_variety(twice);
    let orbits = match enumerate_orbits(&vv) {
        Ok(o) => o,
        Err(e) => return vec![errored("dual-matches-mw", &format!("{twice:?}"), e)],
    };
    let mut out = Vec::new();
    for o in &orbits {
        let what = || describe_orbit(twice, o);
        let m = o.multisegment.clone().expect("type A");
        let mut names = Vec::new();
        for s in 0..seeds {
            let run = || -> Result<(OrbitRecord, OrbitRecord), Error> {
                let d = pyasetskii_dual(&vv, &o.point, seed + s)?;
                let back = pyasetskii_dual_of_vstar(&vv, &d.point, seed + s)?;
                Ok((d, back))
            };
            let (d, back) = match run() {
                Ok(r) => r,
                Err(e) => {
                    out.push(errored("dual-matches-mw", &what(), e));
                    continue;
                }
            };
            let dm = d.multisegment.clone().expect("type A");
            if s == 0 {
                out.push(outcome("dual-matches-mw", dm == mw_involution(&m), || {
                    format!("{}: dual {dm}, mw {}", what(), mw_involution(&m))
                }));
                out.push(outcome("dual-is-involution", back.same_orbit(o), || {
                    format!("{}: dual of dual has dim {}", what(), back.dimension)
                }));
                out.push(outcome(
                    "dual-exchanges-open-closed",
                    (!o.open || d.closed) && (!o.closed || d.open),
                    || format!("{}: dual {dm} (dim {})", what(), d.dimension),
                ));
            }
            names.push(dm);
        }
        out.push(outcome("dual-seed-stable", names.windows(2).all(|w| w[0] == w[1]), || {
            let names: Vec<String> = names.iter().map(ToString::to_string).collect();
            format!("{}: duals by seed {}", what(), names.join(" | "))
        }));
    }
    out
}

/// `tempered ⟺ open ∧ Arthur type` for one Langlands parameter with its point.
fn tempered_iff(p: &StructuredParameter, vv: &VoganVariety, x: &ExactMatrix) -> Outcome {
    match is_open(vv, x) {
        Ok(open) => {
            let tempered = is_tempered(p);
            let arthur = is_arthur_type(p).is_some();
            outcome("tempered-iff-open-and-arthur", tempered == (open && arthur), || {
                format!("{p}: tempered {tempered}, open {open}, arthur {arthur}")
            })
        }
        Err(e) => errored("tempered-iff-open-and-arthur", &p.to_string(), e),
    }
}

fn tempered_arthur_psi(psi: &ArthurParameterData) -> Vec<Outcome> {
    let what = || format!("{} ψ = {:?}", psi.group(), psi.ladders());
    let pt = match arthur_to_point(psi) {
        Ok(pt) => pt,
        Err(e) => return vec![errored("arthur-point", &what(), e)],
    };
    let vv = build_vogan_variety(&pt.lambda);
    let phi = phi_of_psi(psi);
    let y = pt.y.clone().expect("arthur points carry y");
    let mut out = vec![tempered_iff(&phi, &vv, &pt.n)];
    let round_trip = is_arthur_type(&phi).is_some_and(|w| {
        phi_of_psi(&w).canonical_summands() == phi.canonical_summands()
    });
    out.push(outcome("arthur-round-trip", round_trip, what));
    if psi.is_tempered() {
        match is_strongly_regular(&vv, &pt.n, &y) {
            Ok(sreg) => out.push(outcome("tempered-psi-strongly-regular", y.is_zero() && sreg, || {
                format!("{}: y zero {}, strongly regular {sreg}", what(), y.is_zero())
            })),
            Err(e) => out.push(errored("tempered-psi-strongly-regular", &what(), e)),
        }
    }
    out
}

fn tempered_iff_gl_orbits(twice: &[i64]) -> Vec<Outcome> {
    let vv = gl_variety(twice);
    let orbits = match enumerate_orbits(&vv) {
        Ok(o) => o,
        Err(e) => return vec![errored("tempered-iff-open-and-arthur", &format!("{twice:?}"), e)],
    };
    orbits
        .iter()
        .map(|o| {
            let summands = o
                .multisegment
                .as_ref()
                .expect("type A")
                .segments()
                .iter()
                .map(|s| Summand::new(HalfInt::from_twice((s.start.twice() + s.end.twice()) / 2), s.len()))
                .collect();
            match StructuredParameter::new(vv.lambda().group(), summands) {
                Ok(p) => tempered_iff(&p, &vv, &o.point),
                Err(e) => errored("tempered-iff-open-and-arthur", &describe_orbit(twice, o), e),
            }
        })
        .collect()
}

fn discrete_open(group: GroupType, parts: &[usize]) -> Vec<Outcome> {
    let what = || format!("{group} parts {parts:?}");
    let run = || -> Result<(StructuredParameter, bool), Error> {
        let p = discrete_from_partition(group, parts)?;
        let pt = parameter_to_point(&p)?;
        let vv = build_vogan_variety(&pt.lambda);
        Ok((p, is_open(&vv, &pt.n)?))
    };
    match run() {
        Ok((p, open)) => {
            let mut out = vec![outcome("discrete-implies-open", open, what)];
            let arthur = is_arthur_type(&p).is_some();
            out.push(outcome("discrete-tempered-open-arthur", is_tempered(&p) && open && arthur, what));
            out
        }
        Err(e) => vec![errored("discrete-implies-open", &what(), e)],
    }
}

fn union_open(a: &StructuredParameter, b: &StructuredParameter) -> Vec<Outcome> {
    let what = || format!("{a} ∪ {b}");
    let run = || -> Result<(bool, bool, bool), Error> {
        let open_of = |p: &StructuredParameter| -> Result<bool, Error> {
            let pt = parameter_to_point(p)?;
            is_open(&build_vogan_variety(&pt.lambda), &pt.n)
        };
        let group = match a.group().dual_form() {
            None => GroupType::gl(a.group().dual_size() + b.group().dual_size()),
            Some(f) => GroupType::from_dual(f, a.group().dual_size() + b.group().dual_size())?,
        };
        let mut summands = a.summands().to_vec();
        summands.extend_from_slice(b.summands());
        let union = StructuredParameter::new(group, summands)?;
        Ok((open_of(a)?, open_of(b)?, open_of(&union)?))
    };
    match run() {
        Ok((oa, ob, ou)) => vec![outcome("tempered-union-open", !(oa && ob) || ou, || {
            format!("{}: parts open {oa}/{ob}, union open {ou}", what())
        })],
        Err(e) => vec![errored("tempered-union-open", &what(), e)],
    }
}

// ---------------------------------------------------------------------------
// suites

type Task = Box<dyn Fn() -> Vec<Outcome> + Send + Sync>;

fn tasks_for(suite: &str, b: &Bounds, seed: u64) -> Result<Vec<Task>, Error> {
    let gl = || gl_family(b.gl_size, b.gl_spread);
    let classical_tempered = || {
        classical_groups(b.classical_size)
            .into_iter()
            .flat_map(tempered_parameters)
            .collect::<Vec<_>>()
    };
    let mut tasks: Vec<Task> = Vec::new();
    match suite {
        "fiber-dimension" => {
            for t in gl() {
                tasks.push(Box::new(move || fiber_dimension_gl(&t)));
            }
            for p in classical_tempered() {
                tasks.push(Box::new(move || fiber_dimension_point(&p)));
            }
        }
        "open-equals-regular" => {
            for t in gl() {
                tasks.push(Box::new(move || open_regular_gl(&t)));
            }
            for p in classical_tempered() {
                tasks.push(Box::new(move || open_regular_point(&p)));
            }
        }
        "duality-involution" => {
            let seeds = b.seeds.max(1);
            for t in gl() {
                if gl_variety(&t).dim_v() <= b.max_dim_v {
                    tasks.push(Box::new(move || duality_gl(&t, seed, seeds)));
                }
            }
        }
        "tempered-iff-open-and-arthur" => {
            for n in 1..=b.arthur_size {
                for psi in arthur_family(GroupType::gl(n)) {
                    tasks.push(Box::new(move || tempered_arthur_psi(&psi)));
                }
            }
            for g in classical_groups(b.arthur_size) {
                for psi in arthur_family(g) {
                    tasks.push(Box::new(move || tempered_arthur_psi(&psi)));
                }
            }
            for g in classical_groups(b.classical_size) {
                for parts in discrete_partitions(g) {
                    tasks.push(Box::new(move || {
                        let run = || -> Result<Outcome, Error> {
                            let p = discrete_from_partition(g, &parts)?;
                            let pt = parameter_to_point(&p)?;
                            Ok(tempered_iff(&p, &build_vogan_variety(&pt.lambda), &pt.n))
                        };
                        vec![run().unwrap_or_else(|e| errored("tempered-iff-open-and-arthur", &format!("{g} {parts:?}"), e))]
                    }));
                }
            }
            for t in gl() {
                tasks.push(Box::new(move || tempered_iff_gl_orbits(&t)));
            }
        }
        "discrete-implies-open" => {
            for g in classical_groups(b.classical_size) {
                for parts in discrete_partitions(g) {
                    tasks.push(Box::new(move || discrete_open(g, &parts)));
                }
            }
        }
        "tempered-union-open" => {
            let mut by_form: BTreeMap<Option<FormKind>, Vec<StructuredParameter>> = BTreeMap::new();
            for n in 1..b.union_size {
                by_form.entry(None).or_default().extend(tempered_parameters(GroupType::gl(n)));
            }
            for g in classical_groups(b.union_size) {
                by_form.entry(g.dual_form()).or_default().extend(tempered_parameters(g));
            }
            for params in by_form.values() {
                for (i, a) in params.iter().enumerate() {
                    for bp in &params[i..] {
                        if a.group().dual_size() + bp.group().dual_size() <= b.union_size {
                            let (a, bp) = (a.clone(), bp.clone());
                            tasks.push(Box::new(move || union_open(&a, &bp)));
                        }
                    }
                }
            }
        }
        other => return Err(Error::UnknownSuite(format!("{other:?}; known suites: {}", SUITES.join(", ")))),
    }
    Ok(tasks)
}

/// Runs one suite with `jobs` worker threads (0 = rayon's default).
pub fn run_suite(suite: &str, bounds: &Bounds, seed: u64, jobs: usize) -> Result<SuiteSummary, Error> {
    let tasks = tasks_for(suite, bounds, seed)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let results: Vec<Vec<Outcome>> = pool.install(|| tasks.par_iter().map(|t| t()).collect());
    let mut properties: BTreeMap<String, Counts> = BTreeMap::new();
    let mut failures = Vec::new();
    for o in results.into_iter().flatten() {
        let c = properties.entry(o.property.to_string()).or_default();
        match o.failure {
            None => c.pass += 1,
            Some(f) => {
                c.fail += 1;
                failures.push(f);
            }
        }
    }
    Ok(SuiteSummary {
        suite: suite.to_string(),
        bounds: bounds.clone(),
        seed,
        instances: tasks.len(),
        properties,
        failures,
    })
}
