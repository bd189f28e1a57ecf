//! `H_λ`-orbits on `V_λ` and `V*_λ`.
//!
//! In type A an orbit is named by a multisegment, or equivalently by its rank
//! triangle. For orthogonal and symplectic duals orbits are fingerprinted by
//! the `gl` rank triangle of the point together with the orbit dimension.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::exact::{combine, commutant_dim, rank, rat, solve_commutant, ExactMatrix, HalfInt};
use crate::infinitesimal::VoganVariety;
use crate::lie::bracket;
use crate::Error;

/// Number of random fiber elements tried when looking for a generic one.
pub const SAMPLE_BUDGET: usize = 32;

/// `[start, end]` with unit steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub start: HalfInt,
    pub end: HalfInt,
}

impl Segment {
    pub fn new(start: HalfInt, end: HalfInt) -> Result<Self, Error> {
        if end < start || !start.same_coset(end) {
            return Err(Error::Parameter(format!("[{start}, {end}] is not a segment")));
        }
        Ok(Segment { start, end })
    }

    pub fn singleton(e: HalfInt) -> Self {
        Segment { start: e, end: e }
    }

    pub fn len(&self) -> usize {
        ((self.end - self.start).twice() / 2) as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn exponents(&self) -> impl Iterator<Item = HalfInt> + '_ {
        (0..self.len()).map(move |k| self.start + HalfInt::from_int(k as i64))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.start == self.end {
            write!(f, "[{}]", self.start)
        } else {
            write!(f, "[{},{}]", self.start, self.end)
        }
    }
}

/// A multiset of segments, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Multisegment {
    segments: Vec<Segment>,
}

impl Multisegment {
    pub fn new(mut segments: Vec<Segment>) -> Self {
        segments.sort();
        Multisegment { segments }
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn exponent_multiplicities(&self) -> BTreeMap<HalfInt, usize> {
        let mut out = BTreeMap::new();
        for s in &self.segments {
            for e in s.exponents() {
                *out.entry(e).or_insert(0) += 1;
            }
        }
        out
    }

    pub fn triangle(&self) -> RankTriangle {
        let mut ranks = BTreeMap::new();
        for s in &self.segments {
            for (k, e) in s.exponents().enumerate() {
                for l in 0..s.len() - k {
                    *ranks.entry((e, l)).or_insert(0) += 1;
                }
            }
        }
        RankTriangle { ranks }
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.segments.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `ranks[(e, ℓ)]` is the rank of the composite `E_e → E_{e+ℓ}`; `ℓ = 0` gives
/// the multiplicity of `e`. Zero entries are not stored.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RankTriangle {
    ranks: BTreeMap<(HalfInt, usize), usize>,
}

impl RankTriangle {
    pub fn get(&self, e: HalfInt, len: usize) -> usize {
        self.ranks.get(&(e, len)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((HalfInt, usize), usize)> + '_ {
        self.ranks.iter().map(|(&k, &v)| (k, v))
    }

    pub fn multiplicities(&self) -> BTreeMap<HalfInt, usize> {
        self.ranks
            .iter()
            .filter(|((_, l), _)| *l == 0)
            .map(|(&(e, _), &d)| (e, d))
            .collect()
    }

    fn set(&mut self, e: HalfInt, len: usize, r: usize) {
        if r > 0 {
            self.ranks.insert((e, len), r);
        }
    }
}

impl Serialize for RankTriangle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.ranks.iter().map(|(&(e, l), &r)| (e.twice(), l, r)))
    }
}

impl<'de> Deserialize<'de> for RankTriangle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<(i64, usize, usize)> = Vec::deserialize(d)?;
        let mut t = RankTriangle::default();
        for (e2, l, r) in raw {
            t.set(HalfInt::from_twice(e2), l, r);
        }
        Ok(t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    V,
    VStar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub side: Side,
    /// For `V*` points, the triangle of the transpose (which lies in `V`).
    pub triangle: RankTriangle,
    /// Type A only.
    pub multisegment: Option<Multisegment>,
    pub dimension: usize,
    pub stabilizer_dim: usize,
    pub open: bool,
    pub closed: bool,
    pub point: ExactMatrix,
}

impl OrbitRecord {
    /// Whether two records name the same orbit.
    pub fn same_orbit(&self, other: &OrbitRecord) -> bool {
        self.side == other.side && self.triangle == other.triangle && self.dimension == other.dimension
    }
}

fn ranks_of_raising(vv: &VoganVariety, x: &ExactMatrix) -> RankTriangle {
    let dec = vv.decomposition();
    let mut t = RankTriangle::default();
    for (&e, &d) in dec.pieces() {
        t.set(e, 0, d);
    }
    let mut power = x.clone();
    let max_len = dec.pieces().len();
    for len in 1..max_len {
        let mut any = false;
        for (e, src) in dec.blocks() {
            let Some(dst) = dec.block(*e + HalfInt::from_int(len as i64)) else { continue };
            let rows: Vec<usize> = dst.collect();
            let cols: Vec<usize> = src.clone().collect();
            let r = rank(&power.submatrix(&rows, &cols));
            any |= r > 0;
            t.set(*e, len, r);
        }
        if !any {
            break;
        }
        power = power.try_mul(x).expect("square");
    }
    t
}

/// Composite ranks of `x ∈ V_λ` between graded pieces.
pub fn rank_invariants(vv: &VoganVariety, x: &ExactMatrix) -> Result<RankTriangle, Error> {
    vv.require_v(x)?;
    Ok(ranks_of_raising(vv, x))
}

/// Composite ranks of `y ∈ V*_λ`, read through its transpose.
pub fn rank_invariants_vstar(vv: &VoganVariety, y: &ExactMatrix) -> Result<RankTriangle, Error> {
    if !vv.contains_vstar(y) {
        return Err(Error::NotInVariety("point is not in V*".into()));
    }
    Ok(ranks_of_raising(vv, &y.transpose()))
}

/// Inclusion–exclusion inverse of [`Multisegment::triangle`].
pub fn triangle_to_multisegment(t: &RankTriangle) -> Result<Multisegment, Error> {
    let mut segments = Vec::new();
    for (&e, _) in t.multiplicities().iter() {
        let below = e - HalfInt::ONE;
        for len in 0.. {
            let r = |a: HalfInt, l: usize| t.get(a, l) as i64;
            let contained = r(e, len);
            if contained == 0 {
                break;
            }
            let m = contained - r(below, len + 1) - r(e, len + 1) + r(below, len + 2);
            if m < 0 {
                return Err(Error::InconsistentTriangle(format!(
                    "segment starting at {e} of length {} has multiplicity {m}",
                    len + 1
                )));
            }
            let seg = Segment {
                start: e,
                end: e + HalfInt::from_int(len as i64),
            };
            segments.extend(std::iter::repeat(seg).take(m as usize));
        }
    }
    let m = Multisegment::new(segments);
    if m.triangle() != *t {
        return Err(Error::InconsistentTriangle("triangle is not realized by any multisegment".into()));
    }
    Ok(m)
}

/// All multisegments with the given exponent multiplicities.
pub fn enumerate_multisegments(mult: &BTreeMap<HalfInt, usize>) -> Vec<Multisegment> {
    fn go(remaining: &mut BTreeMap<HalfInt, usize>, acc: &mut Vec<Segment>, out: &mut Vec<Multisegment>) {
        let Some((&low, &count)) = remaining.iter().find(|(_, &c)| c > 0) else {
            out.push(Multisegment::new(acc.clone()));
            return;
        };
        // every remaining copy of the lowest exponent starts a segment; choose
        // their lengths as a non-increasing sequence
        let mut lens = Vec::with_capacity(count);
        choose(remaining, low, count, usize::MAX, &mut lens, acc, out);
    }

    fn choose(
        remaining: &mut BTreeMap<HalfInt, usize>,
        low: HalfInt,
        count: usize,
        cap: usize,
        lens: &mut Vec<usize>,
        acc: &mut Vec<Segment>,
        out: &mut Vec<Multisegment>,
    ) {
        if lens.len() == count {
            go(remaining, acc, out);
            return;
        }
        let mut len = 1;
        while len <= cap {
            let e = low + HalfInt::from_int(len as i64 - 1);
            // the copy of `low` itself was reserved when the run started
            if len > 1 && remaining.get(&e).copied().unwrap_or(0) == 0 {
                break;
            }
            len += 1;
        }
        let longest = len - 1;
        for l in (1..=longest).rev() {
            for k in 0..l {
                *remaining.get_mut(&(low + HalfInt::from_int(k as i64))).unwrap() -= 1;
            }
            acc.push(Segment {
                start: low,
                end: low + HalfInt::from_int(l as i64 - 1),
            });
            lens.push(l);
            choose(remaining, low, count, l, lens, acc, out);
            lens.pop();
            acc.pop();
            for k in 0..l {
                *remaining.get_mut(&(low + HalfInt::from_int(k as i64))).unwrap() += 1;
            }
        }
    }

    let mut remaining = mult.clone();
    let mut out = Vec::new();
    go(&mut remaining, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Sum of segment Jordan matrices in the dominant layout: segments in sorted
/// order each take the next free index of every exponent block they cross.
pub fn multisegment_point(vv: &VoganVariety, m: &Multisegment) -> Result<ExactMatrix, Error> {
    let dec = vv.decomposition();
    if m.exponent_multiplicities() != *dec.pieces() {
        return Err(Error::Parameter(format!("{m} does not match the exponents of λ")));
    }
    let mut next: BTreeMap<HalfInt, usize> = BTreeMap::new();
    let mut take = |e: HalfInt| {
        let k = next.entry(e).or_insert(0);
        let idx = dec.block(e).expect("exponent present").start + *k;
        *k += 1;
        idx
    };
    let mut x = ExactMatrix::zeros(vv.size(), vv.size());
    for s in m.segments() {
        let idx: Vec<usize> = s.exponents().map(&mut take).collect();
        for w in idx.windows(2) {
            x[(w[1], w[0])] = rat(1);
        }
    }
    Ok(x)
}

/// `dim H_λ − dim Z_{Lie H_λ}(x)`.
pub fn orbit_dimension(vv: &VoganVariety, x: &ExactMatrix) -> Result<usize, Error> {
    Ok(vv.dim_h() - commutant_dim(vv.basis_lieh(), &[x])?)
}

/// Openness of the orbit of `x`, decided twice: by dimension count and by the
/// absence of a nonzero `y ∈ V*` commuting with `x`.
pub fn is_open(vv: &VoganVariety, x: &ExactMatrix) -> Result<bool, Error> {
    vv.require_v(x)?;
    let by_dimension = orbit_dimension(vv, x)? == vv.dim_v();
    let by_conormal = commutant_dim(vv.basis_vstar(), &[x])? == 0;
    if by_dimension != by_conormal {
        return Err(Error::Invariant(format!(
            "openness criteria disagree: dimension count says {by_dimension}, conormal fiber says {by_conormal}"
        )));
    }
    Ok(by_dimension)
}

fn record(vv: &VoganVariety, side: Side, point: ExactMatrix, triangle: RankTriangle) -> Result<OrbitRecord, Error> {
    let dimension = orbit_dimension(vv, &point)?;
    let multisegment = if vv.lambda().group().is_gl() {
        Some(triangle_to_multisegment(&triangle)?)
    } else {
        None
    };
    Ok(OrbitRecord {
        side,
        triangle,
        multisegment,
        dimension,
        stabilizer_dim: vv.dim_h() - dimension,
        open: dimension == vv.dim_v(),
        closed: dimension == 0,
        point,
    })
}

pub fn orbit_record(vv: &VoganVariety, x: &ExactMatrix) -> Result<OrbitRecord, Error> {
    let t = rank_invariants(vv, x)?;
    record(vv, Side::V, x.clone(), t)
}

pub fn orbit_record_vstar(vv: &VoganVariety, y: &ExactMatrix) -> Result<OrbitRecord, Error> {
    let t = rank_invariants_vstar(vv, y)?;
    record(vv, Side::VStar, y.clone(), t)
}

/// All orbits of a type A Vogan variety, ordered by dimension then name.
pub fn enumerate_orbits(vv: &VoganVariety) -> Result<Vec<OrbitRecord>, Error> {
    if !vv.lambda().group().is_gl() {
        return Err(Error::Unsupported(format!(
            "orbit enumeration is only implemented for GL, not {}",
            vv.lambda().group()
        )));
    }
    let mut out = enumerate_multisegments(vv.decomposition().pieces())
        .iter()
        .map(|m| orbit_record(vv, &multisegment_point(vv, m)?))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_by(|a, b| (a.dimension, &a.multisegment).cmp(&(b.dimension, &b.multisegment)));
    Ok(out)
}

/// Rank criterion for closure order in type A: `a ⊆ closure(b)` iff every
/// composite rank of `a` is at most that of `b`.
pub fn closure_leq(a: &RankTriangle, b: &RankTriangle) -> Result<bool, Error> {
    if a.multiplicities() != b.multiplicities() {
        return Err(Error::DimensionMismatch("rank triangles over different exponents".into()));
    }
    Ok(a.ranks.iter().all(|(&(e, l), &r)| l == 0 || r <= b.get(e, l)))
}

/// Covering relations `(lower, upper)` of the closure order among `records`.
pub fn hasse_edges(records: &[OrbitRecord]) -> Result<Vec<(usize, usize)>, Error> {
    let n = records.len();
    let mut less = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            less[i][j] = i != j && closure_leq(&records[i].triangle, &records[j].triangle)?;
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if less[i][j] && !(0..n).any(|k| less[i][k] && less[k][j]) {
                edges.push((i, j));
            }
        }
    }
    Ok(edges)
}

/// Most generic of `budget` seeded random combinations of `fiber`, measured by
/// orbit dimension. Stops early once an open orbit is reached.
fn generic_element(vv: &VoganVariety, fiber: &[ExactMatrix], seed: u64) -> Result<ExactMatrix, Error> {
    let size = vv.size();
    if fiber.is_empty() {
        return Ok(ExactMatrix::zeros(size, size));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut best: Option<(usize, ExactMatrix)> = None;
    for _ in 0..SAMPLE_BUDGET {
        let coeffs: Vec<_> = fiber
            .iter()
            .map(|_| {
                let v: i64 = rng.gen_range(1..=8);
                rat(if rng.gen::<bool>() { v } else { -v })
            })
            .collect();
        let y = combine(fiber, &coeffs);
        let dim = orbit_dimension(vv, &y)?;
        if best.as_ref().map_or(true, |(d, _)| dim > *d) {
            best = Some((dim, y));
        }
        if dim == vv.dim_v() {
            break;
        }
    }
    Ok(best.expect("budget is positive").1)
}

/// `C ↦ C*`: the orbit of a generic `y ∈ V*` commuting with `x`.
pub fn pyasetskii_dual(vv: &VoganVariety, x: &ExactMatrix, seed: u64) -> Result<OrbitRecord, Error> {
    vv.require_v(x)?;
    let fiber = solve_commutant(vv.basis_vstar(), x)?;
    let y = generic_element(vv, &fiber, seed)?;
    orbit_record_vstar(vv, &y)
}

/// The inverse direction, from an orbit of `V*` back to `V`.
pub fn pyasetskii_dual_of_vstar(vv: &VoganVariety, y: &ExactMatrix, seed: u64) -> Result<OrbitRecord, Error> {
    if !vv.contains_vstar(y) {
        return Err(Error::NotInVariety("point is not in V*".into()));
    }
    let fiber = solve_commutant(vv.basis_v(), y)?;
    let x = generic_element(vv, &fiber, seed)?;
    orbit_record(vv, &x)
}

/// Mœglin–Waldspurger algorithm: repeatedly peel off the chain of segment ends
/// starting from the largest end, each step taking the segment with the
/// largest start that still precedes the previous one.
pub fn mw_involution(m: &Multisegment) -> Multisegment {
    let mut segs: Vec<Option<Segment>> = m.segments().iter().copied().map(Some).collect();
    let mut out = Vec::new();
    loop {
        let Some(top) = segs.iter().flatten().map(|s| s.end).max() else { break };
        let pick = |segs: &[Option<Segment>], end: HalfInt, below: Option<HalfInt>| {
            segs.iter()
                .enumerate()
                .filter_map(|(i, s)| s.map(|s| (i, s)))
                .filter(|(_, s)| s.end == end && below.map_or(true, |b| s.start < b))
                .max_by_key(|&(i, s)| (s.start, std::cmp::Reverse(i)))
                .map(|(i, _)| i)
        };
        let mut chain = vec![pick(&segs, top, None).expect("top end exists")];
        loop {
            let last = segs[*chain.last().unwrap()].unwrap();
            match pick(&segs, last.end - HalfInt::ONE, Some(last.start)) {
                Some(i) => chain.push(i),
                None => break,
            }
        }
        out.push(Segment {
            start: top - HalfInt::from_int(chain.len() as i64 - 1),
            end: top,
        });
        for i in chain {
            let s = segs[i].unwrap();
            segs[i] = (s.start < s.end).then(|| Segment {
                start: s.start,
                end: s.end - HalfInt::ONE,
            });
        }
    }
    Multisegment::new(out)
}

/// Whether the `H_λ`-orbit of the commuting pair `(x, y)` has dimension
/// `dim V_λ`, i.e. is dense in its conormal component.
pub fn is_strongly_regular(vv: &VoganVariety, x: &ExactMatrix, y: &ExactMatrix) -> Result<bool, Error> {
    vv.require_v(x)?;
    if !vv.contains_vstar(y) {
        return Err(Error::NotInVariety("y is not in V*".into()));
    }
    if !bracket(x, y)?.is_zero() {
        return Err(Error::Parameter("x and y do not commute".into()));
    }
    let stab = commutant_dim(vv.basis_lieh(), &[x, y])?;
    Ok(vv.dim_h() - stab == vv.dim_v())
}
