//! Unramified Langlands and Arthur parameters and their points in `V_λ`.
//!
//! A Langlands parameter is a multiset of summands `|·|^c ⊗ Sym^{ℓ−1}`, each
//! contributing the exponent string `c + (ℓ−1)/2, …, c − (ℓ−1)/2`. An Arthur
//! parameter is a multiset of ladders `|·|^c ⊗ Sym^{a−1} ⊗ Sym^{b−1}`.
//!
//! For classical groups the standard representation is assembled from
//! self-dual pieces (with their invariant form) and hyperbolic pairs, then
//! moved into the antidiagonal-form model of `ĝ` by an explicit graded
//! isometry. The result is checked with [`contains`], never assumed.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::{inverse, rank, rat, ExactMatrix, HalfInt, Rational};
use crate::infinitesimal::{conjugate_point, dominant_sort, InfinitesimalParameter};
use crate::lie::{bracket, build_dual_lie_algebra, contains, FormKind, GroupType};
use crate::Error;

/// `|·|^center ⊗ Sym^{length−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Summand {
    pub center: HalfInt,
    pub length: usize,
}

impl Summand {
    pub fn new(center: HalfInt, length: usize) -> Self {
        Summand { center, length }
    }

    /// Exponents from the top of the segment down.
    pub fn exponents(&self) -> Vec<HalfInt> {
        let top = self.center + HalfInt::segment_top(self.length);
        (0..self.length).map(|k| top - HalfInt::from_int(k as i64)).collect()
    }

    pub fn dual(&self) -> Summand {
        Summand::new(-self.center, self.length)
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.center, self.length)
    }
}

/// `|·|^center ⊗ Sym^{a−1} ⊗ Sym^{b−1}`: `a` for the Deligne `SL_2`, `b` for the Arthur `SL_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ladder {
    pub center: HalfInt,
    pub a: usize,
    pub b: usize,
}

impl Ladder {
    pub fn new(center: HalfInt, a: usize, b: usize) -> Self {
        Ladder { center, a, b }
    }

    pub fn dual(&self) -> Ladder {
        Ladder::new(-self.center, self.a, self.b)
    }
}

impl fmt::Display for Ladder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, a={}, b={})", self.center, self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StructuredParameter {
    group: GroupType,
    summands: Vec<Summand>,
}

impl StructuredParameter {
    pub fn new(group: GroupType, summands: Vec<Summand>) -> Result<Self, Error> {
        if summands.iter().any(|s| s.length == 0) {
            return Err(Error::Parameter("summand lengths must be positive".into()));
        }
        let total: usize = summands.iter().map(|s| s.length).sum();
        if total != group.dual_size() {
            return Err(Error::Parameter(format!(
                "summand lengths sum to {total}, but {group} needs {}",
                group.dual_size()
            )));
        }
        if !group.is_gl() {
            check_negation_closed(summands.iter().map(|s| (s.center, (s.length, 0))))?;
        }
        Ok(StructuredParameter { group, summands })
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    /// Concatenation of the summands' exponent strings.
    pub fn raw_exponents(&self) -> Vec<HalfInt> {
        self.summands.iter().flat_map(Summand::exponents).collect()
    }

    pub fn infinitesimal(&self) -> Result<InfinitesimalParameter, Error> {
        InfinitesimalParameter::new(self.group, &self.raw_exponents())
    }

    /// Summands as a sorted multiset, for order-insensitive comparison.
    pub fn canonical_summands(&self) -> Vec<Summand> {
        let mut s = self.summands.clone();
        s.sort();
        s
    }
}

impl fmt::Display for StructuredParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(ToString::to_string).collect();
        write!(f, "{} {{{}}}", self.group, parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArthurParameterData {
    group: GroupType,
    ladders: Vec<Ladder>,
}

impl ArthurParameterData {
    pub fn new(group: GroupType, ladders: Vec<Ladder>) -> Result<Self, Error> {
        if ladders.iter().any(|l| l.a == 0 || l.b == 0) {
            return Err(Error::Parameter("ladder dimensions must be positive".into()));
        }
        let total: usize = ladders.iter().map(|l| l.a * l.b).sum();
        if total != group.dual_size() {
            return Err(Error::Parameter(format!(
                "Σ a·b = {total}, but {group} needs {}",
                group.dual_size()
            )));
        }
        if !group.is_gl() {
            check_negation_closed(ladders.iter().map(|l| (l.center, (l.a, l.b))))?;
        }
        Ok(ArthurParameterData { group, ladders })
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn ladders(&self) -> &[Ladder] {
        &self.ladders
    }

    pub fn is_tempered(&self) -> bool {
        self.ladders.iter().all(|l| l.b == 1)
    }
}

fn check_negation_closed(items: impl Iterator<Item = (HalfInt, (usize, usize))>) -> Result<(), Error> {
    let mut counts: BTreeMap<(HalfInt, (usize, usize)), i64> = BTreeMap::new();
    for (c, shape) in items {
        *counts.entry((c, shape)).or_insert(0) += 1;
    }
    for (&(c, shape), &k) in &counts {
        let dual = counts.get(&(-c, shape)).copied().unwrap_or(0);
        if dual != k {
            return Err(Error::Symmetry(format!(
                "center {c} of shape {shape:?} occurs {k} times but {} occurs {dual} times",
                -c
            )));
        }
    }
    Ok(())
}

/// `(λ, x, y)`: `x ∈ V_λ` is the point of the Langlands parameter and `y ∈ V*_λ`,
/// when present, the point of the Arthur `SL_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterPoint {
    pub lambda: InfinitesimalParameter,
    pub n: ExactMatrix,
    pub y: Option<ExactMatrix>,
}

/// Graded piece of the standard representation with its nilpotent operators
/// and the partner map of its invariant form (empty for `GL`).
#[derive(Clone, Debug)]
struct Block {
    exps: Vec<HalfInt>,
    x: ExactMatrix,
    y: ExactMatrix,
    /// `partner[i] = (j, g)` means `B(v_i, v_j) = g` and `B(v_i, v_k) = 0` for `k ≠ j`.
    partner: Vec<(usize, i64)>,
}

/// `Sym^{a−1} ⊗ Sym^{b−1}` twisted by `|·|^c`, basis `v_k ⊗ u_m` at index
/// `k·b + m`, both factors listed from the top exponent down.
fn ladder_block(l: Ladder) -> Block {
    let (a, b) = (l.a, l.b);
    let top = l.center + HalfInt::segment_top(a) + HalfInt::segment_top(b);
    let idx = |k: usize, m: usize| k * b + m;
    let mut exps = Vec::with_capacity(a * b);
    for k in 0..a {
        for m in 0..b {
            exps.push(top - HalfInt::from_int((k + m) as i64));
        }
    }
    let dim = a * b;
    let mut x = ExactMatrix::zeros(dim, dim);
    let mut y = ExactMatrix::zeros(dim, dim);
    for k in 0..a {
        for m in 0..b {
            if k + 1 < a {
                x[(idx(k, m), idx(k + 1, m))] = rat(1);
            }
            if m + 1 < b {
                y[(idx(k, m + 1), idx(k, m))] = rat(1);
            }
        }
    }
    let sign = |v: usize| if v % 2 == 0 { 1 } else { -1 };
    let partner = (0..a)
        .flat_map(|k| (0..b).map(move |m| (k, m)))
        .map(|(k, m)| (idx(a - 1 - k, b - 1 - m), sign(a - 1 - k) * sign(b - 1 - m)))
        .collect();
    Block { exps, x, y, partner }
}

/// Form type of the invariant form on a self-dual ladder.
fn ladder_form(a: usize, b: usize) -> FormKind {
    if (a + b) % 2 == 0 {
        FormKind::Symmetric
    } else {
        FormKind::Alternating
    }
}

/// `W ⊕ W*` with `B(w_i, ξ_i) = 1` and `B(ξ_i, w_i) = ε`.
fn hyperbolic(w: Block, form: FormKind) -> Block {
    let d = w.exps.len();
    let eps = if form == FormKind::Symmetric { 1 } else { -1 };
    let mut exps = w.exps.clone();
    exps.extend(w.exps.iter().map(|&e| -e));
    let embed = |m: &ExactMatrix| {
        let mut out = ExactMatrix::zeros(2 * d, 2 * d);
        let t = m.transpose();
        for i in 0..d {
            for j in 0..d {
                out[(i, j)] = m[(i, j)].clone();
                out[(d + i, d + j)] = -t[(i, j)].clone();
            }
        }
        out
    };
    let partner = (0..d).map(|i| (d + i, 1)).chain((0..d).map(|i| (i, eps))).collect();
    Block {
        exps,
        x: embed(&w.x),
        y: embed(&w.y),
        partner,
    }
}

/// Pairs ladders into self-dual blocks and hyperbolic pairs.
fn classical_blocks(form: FormKind, ladders: &[Ladder]) -> Result<Vec<Block>, Error> {
    let mut used = vec![false; ladders.len()];
    let mut blocks = Vec::new();
    for i in 0..ladders.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let l = ladders[i];
        if l.center == HalfInt::ZERO && ladder_form(l.a, l.b) == form {
            blocks.push(ladder_block(l));
            continue;
        }
        let Some(j) = (i + 1..ladders.len()).find(|&j| !used[j] && ladders[j] == l.dual()) else {
            return Err(if l.center == HalfInt::ZERO {
                Error::Parity(format!(
                    "{l} carries a {:?} form, so it must occur an even number of times",
                    ladder_form(l.a, l.b)
                ))
            } else {
                Error::Symmetry(format!("{l} has no dual partner"))
            });
        };
        used[j] = true;
        blocks.push(hyperbolic(ladder_block(l), form));
    }
    Ok(blocks)
}

fn direct_sum(blocks: &[Block]) -> Block {
    let dim: usize = blocks.iter().map(|b| b.exps.len()).sum();
    let mut out = Block {
        exps: Vec::with_capacity(dim),
        x: ExactMatrix::zeros(dim, dim),
        y: ExactMatrix::zeros(dim, dim),
        partner: Vec::with_capacity(dim),
    };
    let mut off = 0;
    for b in blocks {
        let d = b.exps.len();
        out.exps.extend_from_slice(&b.exps);
        for i in 0..d {
            for j in 0..d {
                out.x[(off + i, off + j)] = b.x[(i, j)].clone();
                out.y[(off + i, off + j)] = b.y[(i, j)].clone();
            }
        }
        out.partner.extend(b.partner.iter().map(|&(j, g)| (off + j, g)));
        off += d;
    }
    out
}

/// Graded isometry from the assembled block space onto the antidiagonal model.
/// Column `v` of the result is the image of basis vector `v`.
fn isometry(group: GroupType, lambda: &InfinitesimalParameter, space: &Block) -> Result<ExactMatrix, Error> {
    let n = space.exps.len();
    let model = build_dual_lie_algebra(group);
    let s = model.form_signs();
    let mirror = |i: usize| n - 1 - i;
    let mut block_start: BTreeMap<HalfInt, usize> = BTreeMap::new();
    for (i, &e) in lambda.exponents().iter().enumerate() {
        block_start.entry(e).or_insert(i);
    }
    // Self-partnered vectors may have their block's form rescaled; record the
    // factor per vector (only the zero-exponent part depends on it).
    let mut scale: Vec<Rational> = vec![rat(1); n];
    let mut t = ExactMatrix::zeros(n, n);
    let mut slot_of = vec![usize::MAX; n];
    let mut next: BTreeMap<HalfInt, usize> = BTreeMap::new();
    for v in 0..n {
        let e = space.exps[v];
        if e > HalfInt::ZERO {
            let k = next.entry(e).or_insert(0);
            let slot = block_start[&e] + *k;
            *k += 1;
            slot_of[v] = slot;
            t[(slot, v)] = rat(1);
        }
    }
    // zero block: hyperbolic pairs first, then anisotropic vectors
    let zero: Vec<usize> = (0..n).filter(|&v| space.exps[v] == HalfInt::ZERO).collect();
    let z0 = block_start.get(&HalfInt::ZERO).copied().unwrap_or(0);
    let mut pair_slots = (0..zero.len() / 2).map(|k| z0 + k);
    let mut aniso = Vec::new();
    let mut zero_pairs = Vec::new();
    let mut done = vec![false; n];
    for &v in &zero {
        if done[v] {
            continue;
        }
        let (w, g) = space.partner[v];
        if w == v {
            aniso.push((v, g));
            continue;
        }
        let i = pair_slots.next().ok_or_else(|| Error::Invariant("zero block too small".into()))?;
        t[(i, v)] = rat(1);
        zero_pairs.push((i, w, g));
        done[v] = true;
        done[w] = true;
    }
    let mut aniso_iter = aniso.into_iter();
    loop {
        let Some((u1, g1)) = aniso_iter.next() else { break };
        match pair_slots.next() {
            Some(i) => {
                let (u2, g2) = aniso_iter
                    .next()
                    .ok_or_else(|| Error::Invariant("unpaired anisotropic vector".into()))?;
                // e_i + e_i' has norm 2, e_i − e_i' has norm −2
                t[(i, u1)] = rat(1);
                t[(mirror(i), u1)] = rat(1);
                t[(i, u2)] = rat(1);
                t[(mirror(i), u2)] = rat(-1);
                scale[u1] = Rational::new(2.into(), g1.into());
                scale[u2] = Rational::new((-2).into(), g2.into());
            }
            None => {
                let mid = n / 2;
                if mirror(mid) != mid {
                    return Err(Error::Invariant("anisotropic vector without a middle slot".into()));
                }
                t[(mid, u1)] = rat(1);
                scale[u1] = Rational::new(s[mid].into(), g1.into());
            }
        }
    }
    // Propagate the rescaling of each self-partnered vector to its whole block.
    let block_scale = block_scales(space, &scale);
    for (i, w, g) in zero_pairs {
        t[(mirror(i), w)] = Rational::from_integer((g * s[i]).into()) * &block_scale[w];
    }
    let eps = if group.dual_form() == Some(FormKind::Symmetric) { 1 } else { -1 };
    for v in 0..n {
        if space.exps[v] < HalfInt::ZERO {
            // the partner p sits at e_slot; ⟨e_slot, c·e_slot'⟩ = c·s_slot must equal B(p, v) = ε·B(v, p)
            let (p, g) = space.partner[v];
            let slot = slot_of[p];
            t[(mirror(slot), v)] = Rational::from_integer((eps * g * s[slot]).into()) * &block_scale[v];
        }
    }
    Ok(t)
}

/// Connected components of the partner/operator structure are the original
/// blocks; every vector of a block shares the block's form scale.
fn block_scales(space: &Block, scale: &[Rational]) -> Vec<Rational> {
    let n = space.exps.len();
    let mut comp: Vec<usize> = (0..n).collect();
    fn find(c: &mut Vec<usize>, i: usize) -> usize {
        let mut r = i;
        while c[r] != r {
            r = c[r];
        }
        c[i] = r;
        r
    }
    let union = |c: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(c, a), find(c, b));
        if ra != rb {
            c[ra] = rb;
        }
    };
    for i in 0..n {
        union(&mut comp, i, space.partner[i].0);
        for j in 0..n {
            if !space.x[(i, j)].is_zero() || !space.y[(i, j)].is_zero() {
                union(&mut comp, i, j);
            }
        }
    }
    let mut per_root: BTreeMap<usize, Rational> = BTreeMap::new();
    for (v, c) in scale.iter().enumerate() {
        if *c != rat(1) {
            let r = find(&mut comp, v);
            per_root.insert(r, c.clone());
        }
    }
    (0..n)
        .map(|v| {
            let r = find(&mut comp, v);
            per_root.get(&r).cloned().unwrap_or_else(|| rat(1))
        })
        .collect()
}

fn assemble(group: GroupType, ladders: &[Ladder]) -> Result<ParameterPoint, Error> {
    let (lambda, x, y) = match group.dual_form() {
        None => {
            let blocks: Vec<Block> = ladders.iter().map(|&l| ladder_block(l)).collect();
            let space = direct_sum(&blocks);
            let (lambda, perm) = dominant_sort(group, &space.exps)?;
            (lambda, conjugate_point(&space.x, &perm), conjugate_point(&space.y, &perm))
        }
        Some(form) => {
            let blocks = classical_blocks(form, ladders)?;
            let space = direct_sum(&blocks);
            let lambda = InfinitesimalParameter::new(group, &space.exps)?;
            let t = isometry(group, &lambda, &space)?;
            let t_inv = inverse(&t)?;
            let conj = |m: &ExactMatrix| -> Result<ExactMatrix, Error> { t.try_mul(m)?.try_mul(&t_inv) };
            (lambda, conj(&space.x)?, conj(&space.y)?)
        }
    };
    let model = build_dual_lie_algebra(group);
    if !contains(&model, &x) || !contains(&model, &y) {
        return Err(Error::Invariant(format!("embedded point of {group} left the dual Lie algebra")));
    }
    Ok(ParameterPoint {
        lambda,
        n: x,
        y: Some(y),
    })
}

/// `(λ, x_φ)` for a Langlands parameter.
pub fn parameter_to_point(p: &StructuredParameter) -> Result<ParameterPoint, Error> {
    let ladders: Vec<Ladder> = p.summands.iter().map(|s| Ladder::new(s.center, s.length, 1)).collect();
    let mut pt = assemble(p.group, &ladders)?;
    pt.y = None;
    Ok(pt)
}

/// `(λ_ψ, x_ψ, y_ψ)` for an Arthur parameter.
pub fn arthur_to_point(psi: &ArthurParameterData) -> Result<ParameterPoint, Error> {
    let pt = assemble(psi.group, &psi.ladders)?;
    if let Some(y) = &pt.y {
        if !bracket(&pt.n, y)?.is_zero() {
            return Err(Error::Invariant("x_ψ and y_ψ do not commute".into()));
        }
    }
    Ok(pt)
}

/// Jordan form of the raw summands (one upper Jordan block per summand) in the
/// input layout, moved to the dominant layout by the dominance permutation.
/// For `GL` this is exactly `x_φ`; for classical groups it is the same
/// `GL`-orbit before the form is imposed.
pub fn permuted_jordan_point(p: &StructuredParameter) -> Result<ExactMatrix, Error> {
    let raw = p.raw_exponents();
    let n = raw.len();
    let mut x = ExactMatrix::zeros(n, n);
    let mut off = 0;
    for s in &p.summands {
        for k in 0..s.length.saturating_sub(1) {
            x[(off + k, off + k + 1)] = rat(1);
        }
        off += s.length;
    }
    let (_, perm) = dominant_sort(p.group, &raw)?;
    Ok(conjugate_point(&x, &perm))
}

/// Parts of a discrete parameter: residual segments `(0, i)` for each part `i`,
/// listed from the largest part down.
pub fn discrete_from_partition(group: GroupType, parts: &[usize]) -> Result<StructuredParameter, Error> {
    let mut sorted = parts.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
    let total: usize = sorted.iter().sum();
    if sorted.iter().any(|&p| p == 0) {
        return Err(Error::Partition("parts must be positive".into()));
    }
    match group.dual_form() {
        None => {
            if sorted.len() != 1 {
                return Err(Error::Partition(
                    "a discrete GL parameter is a single segment; give one part equal to n".into(),
                ));
            }
        }
        Some(form) => {
            let (want_even, word) = match form {
                FormKind::Alternating => (true, "even"),
                FormKind::Symmetric => (false, "odd"),
            };
            if !distinct || sorted.iter().any(|&p| (p % 2 == 0) != want_even) {
                return Err(Error::Partition(format!("parts must be distinct {word} integers")));
            }
        }
    }
    if total != group.dual_size() {
        return Err(Error::Partition(format!(
            "parts must sum to {} for {group}, got {total}",
            group.dual_size()
        )));
    }
    StructuredParameter::new(group, sorted.into_iter().map(|i| Summand::new(HalfInt::ZERO, i)).collect())
}

/// `φ_ψ(w, x) = ψ(w, x, d_w)`: each ladder becomes `b` summands of length `a`.
pub fn phi_of_psi(psi: &ArthurParameterData) -> StructuredParameter {
    let summands = psi
        .ladders
        .iter()
        .flat_map(|l| {
            let top = l.center + HalfInt::segment_top(l.b);
            (0..l.b).map(move |j| Summand::new(top - HalfInt::from_int(j as i64), l.a))
        })
        .collect();
    StructuredParameter {
        group: psi.group,
        summands,
    }
}

/// Bounded on `W_F`: with positive real unramified twists, every center is 0.
pub fn is_tempered(p: &StructuredParameter) -> bool {
    p.summands.iter().all(|s| s.center == HalfInt::ZERO)
}

/// A bounded Arthur parameter `ψ` with `φ_ψ = p`, if one exists.
///
/// Boundedness forces every ladder to be centered at 0, so for each length
/// `a` the centers must split into strings `(b−1)/2, …, −(b−1)/2`. The
/// largest remaining center fixes `b`, so the split is unique; the search
/// still proceeds largest `b` first. For classical groups every ladder whose
/// invariant form has the wrong type must occur an even number of times.
pub fn is_arthur_type(p: &StructuredParameter) -> Option<ArthurParameterData> {
    let mut by_len: BTreeMap<usize, Vec<HalfInt>> = BTreeMap::new();
    for s in &p.summands {
        by_len.entry(s.length).or_default().push(s.center);
    }
    let mut ladders = Vec::new();
    for (&a, centers) in by_len.iter().rev() {
        let mut pool: BTreeMap<HalfInt, usize> = BTreeMap::new();
        for &c in centers {
            *pool.entry(c).or_insert(0) += 1;
        }
        while let Some((&top, _)) = pool.iter().next_back() {
            if top < HalfInt::ZERO {
                return None;
            }
            let b = (top.twice() + 1) as usize;
            for j in 0..b {
                let c = top - HalfInt::from_int(j as i64);
                let slot = pool.get_mut(&c)?;
                *slot -= 1;
                if *slot == 0 {
                    pool.remove(&c);
                }
            }
            ladders.push(Ladder::new(HalfInt::ZERO, a, b));
        }
    }
    if let Some(form) = p.group.dual_form() {
        let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for l in &ladders {
            *counts.entry((l.a, l.b)).or_insert(0) += 1;
        }
        if counts
            .iter()
            .any(|(&(a, b), &k)| ladder_form(a, b) != form && k % 2 == 1)
        {
            return None;
        }
    }
    ladders.sort_by(|x, y| (y.b, y.a).cmp(&(x.b, x.a)));
    Some(ArthurParameterData {
        group: p.group,
        ladders,
    })
}

/// Discrete: for classical groups, centers 0 and distinct lengths of the
/// parity of the dual form; for `GL`, a single segment centered at 0.
pub fn is_discrete(p: &StructuredParameter) -> bool {
    if !is_tempered(p) {
        return false;
    }
    match p.group.dual_form() {
        None => p.summands.len() == 1,
        Some(form) => {
            let mut lens: Vec<usize> = p.summands.iter().map(|s| s.length).collect();
            lens.sort_unstable();
            let distinct = lens.windows(2).all(|w| w[0] != w[1]);
            let want_even = form == FormKind::Alternating;
            distinct && lens.iter().all(|&l| (l % 2 == 0) == want_even)
        }
    }
}

/// Sizes of the Jordan blocks of a nilpotent matrix, largest first, read off
/// from the ranks of its powers.
pub fn jordan_type(n: &ExactMatrix) -> Vec<usize> {
    let size = n.rows();
    let mut ranks = vec![size];
    let mut power = ExactMatrix::identity(size);
    while *ranks.last().unwrap() > 0 {
        power = power.try_mul(n).expect("square");
        let r = rank(&power);
        if r == *ranks.last().unwrap() {
            // not nilpotent
            break;
        }
        ranks.push(r);
    }
    // number of blocks of size ≥ k is rank(N^{k−1}) − rank(N^k)
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut out = Vec::new();
    for k in (1..=at_least.len()).rev() {
        let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        out.extend(std::iter::repeat(k).take(exactly));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinitesimal::build_vogan_variety;

    fn hi(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn sp(group: GroupType, s: &[(i64, usize)]) -> StructuredParameter {
        StructuredParameter::new(group, s.iter().map(|&(c, l)| Summand::new(hi(c), l)).collect()).unwrap()
    }

    #[test]
    fn so7_point_matches_the_worked_example() {
        let p = discrete_from_partition(GroupType::so_odd(7), &[2, 4]).unwrap();
        assert_eq!(
            p.canonical_summands(),
            vec![Summand::new(HalfInt::ZERO, 2), Summand::new(HalfInt::ZERO, 4)]
        );
        let pt = parameter_to_point(&p).unwrap();
        assert_eq!(pt.lambda.twice_values(), vec![3, 1, 1, -1, -1, -3]);
        assert_eq!(pt.n.support(), vec![(0, 1), (1, 4), (2, 3), (4, 5)]);
        for (i, j) in pt.n.support() {
            assert!(pt.n[(i, j)] == rat(1) || pt.n[(i, j)] == rat(-1));
        }
        assert_eq!(permuted_jordan_point(&p).unwrap().support(), pt.n.support());
        let vv = build_vogan_variety(&pt.lambda);
        assert!(vv.contains_v(&pt.n));
    }

    #[test]
    fn gl2_steinberg_and_principal_series() {
        let st = parameter_to_point(&sp(GroupType::gl(2), &[(0, 2)])).unwrap();
        assert_eq!(st.lambda.twice_values(), vec![1, -1]);
        assert_eq!(st.n, ExactMatrix::unit(2, 0, 1));
        let ps = parameter_to_point(&sp(GroupType::gl(2), &[(1, 1), (-1, 1)])).unwrap();
        assert_eq!(ps.lambda, st.lambda);
        assert!(ps.n.is_zero());
    }

    #[test]
    fn discrete_partition_errors() {
        assert!(matches!(
            discrete_from_partition(GroupType::so_odd(7), &[3, 3]),
            Err(Error::Partition(m)) if m == "parts must be distinct even integers"
        ));
        assert!(discrete_from_partition(GroupType::so_odd(7), &[2, 2, 2]).is_err());
        assert!(discrete_from_partition(GroupType::so_odd(7), &[2]).is_err());
        assert!(discrete_from_partition(GroupType::sp(4), &[4, 1]).is_err());
        let p = discrete_from_partition(GroupType::sp(14), &[7, 5, 3]).unwrap();
        let lam = p.infinitesimal().unwrap();
        assert_eq!(lam.twice_values(), vec![6, 4, 4, 2, 2, 2, 0, 0, 0, -2, -2, -2, -4, -4, -6]);
    }

    #[test]
    fn sp14_point_lies_in_so15() {
        let p = discrete_from_partition(GroupType::sp(14), &[7, 5, 3]).unwrap();
        let pt = parameter_to_point(&p).unwrap();
        let vv = build_vogan_variety(&pt.lambda);
        assert!(vv.contains_v(&pt.n));
        assert_eq!(jordan_type(&pt.n), vec![7, 5, 3]);
    }

    #[test]
    fn arthur_points() {
        let g2 = GroupType::gl(2);
        let st = arthur_to_point(&ArthurParameterData::new(g2, vec![Ladder::new(HalfInt::ZERO, 2, 1)]).unwrap()).unwrap();
        assert_eq!(st.n, ExactMatrix::unit(2, 0, 1));
        assert!(st.y.as_ref().unwrap().is_zero());

        let mirror =
            arthur_to_point(&ArthurParameterData::new(g2, vec![Ladder::new(HalfInt::ZERO, 1, 2)]).unwrap()).unwrap();
        assert!(mirror.n.is_zero());
        assert!(!mirror.y.as_ref().unwrap().is_zero());

        let g4 = arthur_to_point(
            &ArthurParameterData::new(GroupType::gl(4), vec![Ladder::new(HalfInt::ZERO, 2, 2)]).unwrap(),
        )
        .unwrap();
        assert_eq!(g4.lambda.twice_values(), vec![2, 0, 0, -2]);
        let y = g4.y.unwrap();
        assert!(!g4.n.is_zero() && !y.is_zero());
        assert!(bracket(&g4.n, &y).unwrap().is_zero());
        let vv = build_vogan_variety(&g4.lambda);
        assert!(vv.contains_v(&g4.n) && vv.contains_vstar(&y));
    }

    #[test]
    fn classical_arthur_points_commute() {
        let cases = vec![
            (GroupType::so_odd(7), vec![Ladder::new(HalfInt::ZERO, 2, 3)]),
            (GroupType::sp(8), vec![Ladder::new(HalfInt::ZERO, 3, 3)]),
            (GroupType::sp(6), vec![Ladder::new(HalfInt::ZERO, 2, 2), Ladder::new(HalfInt::ZERO, 3, 1)]),
            (
                GroupType::so_even(8),
                vec![Ladder::new(hi(1), 1, 2), Ladder::new(hi(-1), 1, 2), Ladder::new(HalfInt::ZERO, 2, 2)],
            ),
        ];
        for (g, ladders) in cases {
            let psi = ArthurParameterData::new(g, ladders).unwrap();
            let pt = arthur_to_point(&psi).unwrap();
            let vv = build_vogan_variety(&pt.lambda);
            assert!(vv.contains_v(&pt.n), "{g}");
            assert!(vv.contains_vstar(pt.y.as_ref().unwrap()), "{g}");
            let phi = phi_of_psi(&psi);
            assert_eq!(phi.infinitesimal().unwrap(), pt.lambda);
        }
    }

    #[test]
    fn phi_of_psi_expansions() {
        let g = GroupType::gl(6);
        let one = |a, b| ArthurParameterData {
            group: g,
            ladders: vec![Ladder::new(HalfInt::ZERO, a, b)],
        };
        assert_eq!(phi_of_psi(&one(1, 2)).summands(), &[Summand::new(hi(1), 1), Summand::new(hi(-1), 1)]);
        assert_eq!(phi_of_psi(&one(3, 1)).summands(), &[Summand::new(HalfInt::ZERO, 3)]);
        assert_eq!(
            phi_of_psi(&one(2, 3)).summands(),
            &[Summand::new(hi(2), 2), Summand::new(hi(0), 2), Summand::new(hi(-2), 2)]
        );
    }

    #[test]
    fn tempered_arthur_discrete_examples() {
        assert!(is_tempered(&sp(GroupType::gl(2), &[(0, 2)])));
        let gl1 = sp(GroupType::gl(1), &[(2, 1)]);
        assert!(!is_tempered(&gl1));
        assert!(is_arthur_type(&gl1).is_none());
        let ps = sp(GroupType::gl(2), &[(1, 1), (-1, 1)]);
        assert!(!is_tempered(&ps));
        assert_eq!(is_arthur_type(&ps).unwrap().ladders(), &[Ladder::new(HalfInt::ZERO, 1, 2)]);
        assert_eq!(
            is_arthur_type(&sp(GroupType::gl(3), &[(0, 3)])).unwrap().ladders(),
            &[Ladder::new(HalfInt::ZERO, 3, 1)]
        );

        assert!(is_discrete(&sp(GroupType::so_odd(7), &[(0, 2), (0, 4)])));
        assert!(is_discrete(&sp(GroupType::sp(14), &[(0, 7), (0, 5), (0, 3)])));
        assert!(!is_discrete(&sp(GroupType::so_odd(7), &[(0, 2), (0, 2), (0, 2)])));
        assert!(is_discrete(&sp(GroupType::gl(3), &[(0, 3)])));
        assert!(!is_discrete(&sp(GroupType::gl(3), &[(0, 2), (0, 1)])));
    }

    #[test]
    fn classical_arthur_form_condition() {
        // a single trivial ladder cannot be symplectic
        let p = sp(GroupType::so_odd(3), &[(1, 1), (-1, 1)]);
        assert_eq!(is_arthur_type(&p).unwrap().ladders(), &[Ladder::new(HalfInt::ZERO, 1, 2)]);
        let p = sp(GroupType::sp(2), &[(0, 1), (2, 1), (-2, 1)]);
        assert_eq!(is_arthur_type(&p).unwrap().ladders(), &[Ladder::new(HalfInt::ZERO, 1, 3)]);
        let p = sp(GroupType::so_odd(5), &[(0, 1), (0, 1), (0, 2)]);
        assert!(is_arthur_type(&p).is_some());
    }

    #[test]
    fn parity_obstruction() {
        // a single Sym^2 has a symmetric form; Sp_2 × ... dual sp_4 cannot hold it with Sym^0
        let err = StructuredParameter::new(GroupType::so_odd(5), vec![Summand::new(HalfInt::ZERO, 3), Summand::new(HalfInt::ZERO, 1)])
            .and_then(|p| parameter_to_point(&p));
        assert!(matches!(err, Err(Error::Parity(_))));
        let err = StructuredParameter::new(GroupType::so_odd(5), vec![Summand::new(hi(1), 4)]);
        assert!(matches!(err, Err(Error::Symmetry(_))));
    }

    #[test]
    fn jordan_types() {
        let p = sp(GroupType::gl(6), &[(0, 3), (2, 2), (-1, 1)]);
        let pt = parameter_to_point(&p).unwrap();
        assert_eq!(jordan_type(&pt.n), vec![3, 2, 1]);
        assert_eq!(jordan_type(&ExactMatrix::zeros(2, 2)), vec![1, 1]);
    }

    #[test]
    fn hyperbolic_and_zero_block_embeddings() {
        let cases = vec![
            sp(GroupType::so_odd(7), &[(0, 3), (0, 3)]),
            sp(GroupType::so_odd(7), &[(1, 2), (-1, 2), (0, 2)]),
            sp(GroupType::sp(6), &[(0, 3), (0, 1), (0, 3)]),
            sp(GroupType::sp(6), &[(0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]),
            sp(GroupType::so_even(6), &[(0, 3), (0, 1), (0, 1), (0, 1)]),
            sp(GroupType::so_even(6), &[(0, 2), (0, 1), (0, 2), (0, 1)]),
            sp(GroupType::so_even(8), &[(2, 3), (0, 1), (-2, 3), (0, 1)]),
            sp(GroupType::sp(8), &[(1, 4), (-1, 4), (0, 1)]),
        ];
        for p in cases {
            let pt = parameter_to_point(&p).unwrap();
            let vv = build_vogan_variety(&pt.lambda);
            assert!(vv.contains_v(&pt.n), "{p}");
            let mut lens: Vec<usize> = p.summands().iter().map(|s| s.length).collect();
            lens.sort_unstable_by(|a, b| b.cmp(a));
            assert_eq!(jordan_type(&pt.n), lens, "{p}");
        }
    }
}
