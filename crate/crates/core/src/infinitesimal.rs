//! Infinitesimal parameters and the graded pieces of `ĝ` they cut out.
//!
//! Conventions: an infinitesimal parameter is stored by the exponents of
//! `λ(Fr)` on the standard representation, in non-increasing order. `V_λ` is
//! the degree +1 piece (`E_{q^e} → E_{q^{e+1}}`, strictly upper triangular in
//! the dominant layout), `V*_λ` the degree −1 piece and `Lie H_λ` the degree 0
//! piece. `q` is formal: `q^a = q^b` only when `a = b`.

use std::collections::BTreeMap;
use std::ops::Range;

use num_traits::Zero;

use crate::exact::{ExactMatrix, HalfInt};
use crate::lie::{build_dual_lie_algebra, contains, GroupType, LieAlgebraModel};
use crate::Error;

/// Dominant infinitesimal parameter together with the permutation from the
/// caller's input order: `exponents[i] = input[input_order[i]]`.
/// Equality and hashing only look at the group and the dominant exponents.
#[derive(Clone, Debug)]
pub struct InfinitesimalParameter {
    group: GroupType,
    exponents: Vec<HalfInt>,
    input_order: Vec<usize>,
}

impl PartialEq for InfinitesimalParameter {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.exponents == other.exponents
    }
}

impl Eq for InfinitesimalParameter {}

impl std::hash::Hash for InfinitesimalParameter {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.exponents.hash(state);
    }
}

impl InfinitesimalParameter {
    pub fn new(group: GroupType, raw: &[HalfInt]) -> Result<Self, Error> {
        dominant_sort(group, raw).map(|(p, _)| p)
    }

    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn exponents(&self) -> &[HalfInt] {
        &self.exponents
    }

    pub fn input_order(&self) -> &[usize] {
        &self.input_order
    }

    pub fn twice_values(&self) -> Vec<i64> {
        self.exponents.iter().map(|e| e.twice()).collect()
    }
}

fn multiplicities(exps: &[HalfInt]) -> BTreeMap<HalfInt, usize> {
    let mut m = BTreeMap::new();
    for &e in exps {
        *m.entry(e).or_insert(0) += 1;
    }
    m
}

fn check_classical_symmetry(group: GroupType, raw: &[HalfInt]) -> Result<(), Error> {
    if raw.len() != group.dual_size() {
        return Err(Error::Parameter(format!(
            "{group} needs {} exponents, got {}",
            group.dual_size(),
            raw.len()
        )));
    }
    if group.is_gl() {
        return Ok(());
    }
    let mult = multiplicities(raw);
    for (&e, &k) in &mult {
        let dual = mult.get(&-e).copied().unwrap_or(0);
        if dual != k {
            return Err(Error::Symmetry(format!(
                "exponent {e} has multiplicity {k} but {} has multiplicity {dual}",
                -e
            )));
        }
    }
    Ok(())
}

/// Sorts exponents into non-increasing order and records the permutation.
///
/// For `GL` the sort is stable. For classical groups the `k`-th occurrence of
/// a positive exponent `e` takes the `k`-th slot of the `e` block and the
/// `k`-th occurrence of `−e` takes the mirror image of that slot, so a Jordan
/// string that is symmetric in the input stays symmetric under `i ↦ N̂−1−i`.
pub fn dominant_sort(group: GroupType, raw: &[HalfInt]) -> Result<(InfinitesimalParameter, Vec<usize>), Error> {
    check_classical_symmetry(group, raw)?;
    let n = raw.len();
    let mut sorted: Vec<HalfInt> = raw.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let perm: Vec<usize> = if group.is_gl() {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| raw[b].cmp(&raw[a]));
        idx
    } else {
        let mut block_start: BTreeMap<HalfInt, usize> = BTreeMap::new();
        for (i, &e) in sorted.iter().enumerate() {
            block_start.entry(e).or_insert(i);
        }
        let mut seen: BTreeMap<HalfInt, usize> = BTreeMap::new();
        let mut perm = vec![usize::MAX; n];
        for (pos, &e) in raw.iter().enumerate() {
            let k = seen.entry(e).or_insert(0);
            let slot = if e >= HalfInt::ZERO {
                block_start[&e] + *k
            } else {
                n - 1 - (block_start[&-e] + *k)
            };
            *k += 1;
            perm[slot] = pos;
        }
        perm
    };
    let param = InfinitesimalParameter {
        group,
        exponents: sorted,
        input_order: perm.clone(),
    };
    Ok((param, perm))
}

/// `P x P⁻¹`, moving the entry at input positions `(perm[i], perm[j])` to `(i, j)`.
pub fn conjugate_point(x: &ExactMatrix, perm: &[usize]) -> ExactMatrix {
    x.permute_symmetric(perm)
}

/// Multiplicities `d_e` and the contiguous index block of each exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDecomposition {
    pieces: BTreeMap<HalfInt, usize>,
    blocks: Vec<(HalfInt, Range<usize>)>,
}

impl GradedDecomposition {
    pub fn pieces(&self) -> &BTreeMap<HalfInt, usize> {
        &self.pieces
    }

    /// Blocks in dominant (decreasing exponent) order.
    pub fn blocks(&self) -> &[(HalfInt, Range<usize>)] {
        &self.blocks
    }

    pub fn multiplicity(&self, e: HalfInt) -> usize {
        self.pieces.get(&e).copied().unwrap_or(0)
    }

    pub fn block(&self, e: HalfInt) -> Option<Range<usize>> {
        self.blocks.iter().find(|(x, _)| *x == e).map(|(_, r)| r.clone())
    }

    pub fn total(&self) -> usize {
        self.pieces.values().sum()
    }
}

pub fn graded_pieces(lambda: &InfinitesimalParameter) -> GradedDecomposition {
    let pieces = multiplicities(&lambda.exponents);
    let mut blocks: Vec<(HalfInt, Range<usize>)> = Vec::new();
    for (i, &e) in lambda.exponents.iter().enumerate() {
        match blocks.last_mut() {
            Some((x, r)) if *x == e => r.end = i + 1,
            _ => blocks.push((e, i..i + 1)),
        }
    }
    GradedDecomposition { pieces, blocks }
}

/// The graded pieces of `ĝ` attached to a dominant infinitesimal parameter.
#[derive(Clone, Debug)]
pub struct VoganVariety {
    lambda: InfinitesimalParameter,
    model: LieAlgebraModel,
    decomposition: GradedDecomposition,
    /// Indices into the model basis, grouped by grading degree.
    by_degree: BTreeMap<HalfInt, Vec<usize>>,
    basis_v: Vec<ExactMatrix>,
    basis_vstar: Vec<ExactMatrix>,
    basis_lieh: Vec<ExactMatrix>,
}

impl VoganVariety {
    pub fn lambda(&self) -> &InfinitesimalParameter {
        &self.lambda
    }

    pub fn model(&self) -> &LieAlgebraModel {
        &self.model
    }

    pub fn decomposition(&self) -> &GradedDecomposition {
        &self.decomposition
    }

    pub fn basis_v(&self) -> &[ExactMatrix] {
        &self.basis_v
    }

    pub fn basis_vstar(&self) -> &[ExactMatrix] {
        &self.basis_vstar
    }

    pub fn basis_lieh(&self) -> &[ExactMatrix] {
        &self.basis_lieh
    }

    pub fn dim_v(&self) -> usize {
        self.basis_v.len()
    }

    pub fn dim_h(&self) -> usize {
        self.basis_lieh.len()
    }

    pub fn size(&self) -> usize {
        self.lambda.exponents.len()
    }

    /// Grading degrees of `ĝ` with the basis elements of each degree.
    pub fn graded_basis(&self) -> impl Iterator<Item = (HalfInt, Vec<ExactMatrix>)> + '_ {
        self.by_degree
            .iter()
            .map(|(&d, idx)| (d, idx.iter().map(|&i| self.model.basis()[i].clone()).collect()))
    }

    pub fn degree_dim(&self, degree: HalfInt) -> usize {
        self.by_degree.get(&degree).map_or(0, Vec::len)
    }

    /// Exponent of the `i`-th standard basis vector.
    pub fn exponent(&self, i: usize) -> HalfInt {
        self.lambda.exponents[i]
    }

    /// Whether every nonzero entry of `x` raises the exponent by `degree`.
    pub fn is_homogeneous(&self, x: &ExactMatrix, degree: HalfInt) -> bool {
        x.rows() == self.size()
            && x.cols() == self.size()
            && x
                .support()
                .into_iter()
                .all(|(a, b)| self.exponent(a) - self.exponent(b) == degree)
    }

    pub fn contains_v(&self, x: &ExactMatrix) -> bool {
        self.is_homogeneous(x, HalfInt::ONE) && contains(&self.model, x)
    }

    pub fn contains_vstar(&self, y: &ExactMatrix) -> bool {
        self.is_homogeneous(y, -HalfInt::ONE) && contains(&self.model, y)
    }

    pub fn require_v(&self, x: &ExactMatrix) -> Result<(), Error> {
        if self.contains_v(x) {
            Ok(())
        } else {
            Err(Error::NotInVariety("expected a degree +1 element of the dual Lie algebra".into()))
        }
    }
}

pub fn build_vogan_variety(lambda: &InfinitesimalParameter) -> VoganVariety {
    let model = build_dual_lie_algebra(lambda.group);
    build_vogan_variety_in(model, lambda)
}

/// As [`build_vogan_variety`], reusing an already built model of `ĝ`.
pub fn build_vogan_variety_in(model: LieAlgebraModel, lambda: &InfinitesimalParameter) -> VoganVariety {
    assert_eq!(model.group(), lambda.group, "model built for a different group");
    let e = &lambda.exponents;
    let mut by_degree: BTreeMap<HalfInt, Vec<usize>> = BTreeMap::new();
    for (k, &(a, b)) in model.anchors().iter().enumerate() {
        let deg = e[a] - e[b];
        debug_assert!(model.basis()[k]
            .support()
            .iter()
            .all(|&(i, j)| e[i] - e[j] == deg && !model.basis()[k][(i, j)].is_zero()));
        by_degree.entry(deg).or_default().push(k);
    }
    let pick = |d: HalfInt| -> Vec<ExactMatrix> {
        by_degree
            .get(&d)
            .map(|idx| idx.iter().map(|&i| model.basis()[i].clone()).collect())
            .unwrap_or_default()
    };
    let basis_v = pick(HalfInt::ONE);
    let basis_vstar = pick(-HalfInt::ONE);
    let basis_lieh = pick(HalfInt::ZERO);
    VoganVariety {
        lambda: lambda.clone(),
        decomposition: graded_pieces(lambda),
        model,
        by_degree,
        basis_v,
        basis_vstar,
        basis_lieh,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{span_rank, ExactMatrix};

    fn h(tw: &[i64]) -> Vec<HalfInt> {
        tw.iter().map(|&t| HalfInt::from_twice(t)).collect()
    }

    #[test]
    fn graded_pieces_examples() {
        let so7 = InfinitesimalParameter::new(GroupType::so_odd(7), &h(&[3, 1, -1, -3, 1, -1])).unwrap();
        let d = graded_pieces(&so7);
        let expect: BTreeMap<HalfInt, usize> = h(&[3, 1, -1, -3]).into_iter().zip([1, 2, 2, 1]).collect();
        assert_eq!(d.pieces(), &expect);

        let gl1 = InfinitesimalParameter::new(GroupType::gl(1), &h(&[0])).unwrap();
        assert_eq!(graded_pieces(&gl1).pieces().len(), 1);

        let raw = h(&[6, 4, 2, 0, -2, -4, -6, 4, 2, 0, -2, -4, 2, 0, -2]);
        let sp14 = InfinitesimalParameter::new(GroupType::sp(14), &raw).unwrap();
        let d = graded_pieces(&sp14);
        let mult: Vec<usize> = d.pieces().values().copied().collect();
        assert_eq!(mult, vec![1, 2, 3, 3, 3, 2, 1]);
        assert_eq!(sp14.twice_values(), vec![6, 4, 4, 2, 2, 2, 0, 0, 0, -2, -2, -2, -4, -4, -6]);
    }

    #[test]
    fn symmetry_violation_is_reported() {
        let err = InfinitesimalParameter::new(GroupType::so_odd(5), &h(&[2, 0, 0, -2])).map(|_| ());
        assert!(err.is_ok());
        let err = InfinitesimalParameter::new(GroupType::so_odd(5), &h(&[2, 2, 0, -2]));
        assert!(matches!(err, Err(Error::Symmetry(_))));
        let err = InfinitesimalParameter::new(GroupType::gl(2), &h(&[2]));
        assert!(matches!(err, Err(Error::Parameter(_))));
    }

    #[test]
    fn dominant_sort_so7_permutation() {
        let (lam, perm) = dominant_sort(GroupType::so_odd(7), &h(&[3, 1, -1, -3, 1, -1])).unwrap();
        assert_eq!(lam.twice_values(), vec![3, 1, 1, -1, -1, -3]);
        // positions 3↔5 and 4↔6 (1-indexed) are exchanged
        assert_eq!(perm, vec![0, 1, 4, 5, 2, 3]);

        let (_, id) = dominant_sort(GroupType::gl(3), &h(&[2, 0, -2])).unwrap();
        assert_eq!(id, vec![0, 1, 2]);
    }

    #[test]
    fn conjugate_point_so7() {
        // Jordan form of Sym^3 ⊕ Sym^1 in the input order
        let mut x = ExactMatrix::zeros(6, 6);
        for (i, j) in [(0, 1), (1, 2), (2, 3), (4, 5)] {
            x[(i, j)] = crate::exact::rat(1);
        }
        let (lam, perm) = dominant_sort(GroupType::so_odd(7), &h(&[3, 1, -1, -3, 1, -1])).unwrap();
        let y = conjugate_point(&x, &perm);
        assert_eq!(y.support(), vec![(0, 1), (1, 4), (2, 3), (4, 5)]);
        let vv = build_vogan_variety(&lam);
        assert!(vv.is_homogeneous(&y, HalfInt::ONE));
        assert_eq!(conjugate_point(&x, &[0, 1, 2, 3, 4, 5]), x);
    }

    #[test]
    fn vogan_variety_dimensions() {
        let gl2 = build_vogan_variety(&InfinitesimalParameter::new(GroupType::gl(2), &h(&[1, -1])).unwrap());
        assert_eq!((gl2.dim_v(), gl2.basis_vstar().len(), gl2.dim_h()), (1, 1, 2));
        let gl3 = build_vogan_variety(&InfinitesimalParameter::new(GroupType::gl(3), &h(&[2, 0, -2])).unwrap());
        assert_eq!(gl3.dim_v(), 2);

        let raw = h(&[6, 4, 2, 0, -2, -4, -6, 4, 2, 0, -2, -4, 2, 0, -2]);
        let sp14 = build_vogan_variety(&InfinitesimalParameter::new(GroupType::sp(14), &raw).unwrap());
        // w (1×2) + X (2×3) + Z (3×3)
        assert_eq!(sp14.dim_v(), 2 + 6 + 9);
        assert_eq!(sp14.basis_vstar().len(), 17);
    }

    #[test]
    fn graded_piece_accounting() {
        let cases: Vec<(GroupType, Vec<i64>)> = vec![
            (GroupType::gl(4), vec![2, 0, 0, -1]),
            (GroupType::gl(5), vec![4, 2, 1, 0, -2]),
            (GroupType::so_odd(7), vec![3, 1, -1, -3, 1, -1]),
            (GroupType::sp(6), vec![4, 2, 0, 0, -2, -4, 0]),
            (GroupType::so_even(6), vec![2, 2, 0, 0, -2, -2]),
        ];
        for (g, tw) in cases {
            let vv = build_vogan_variety(&InfinitesimalParameter::new(g, &h(&tw)).unwrap());
            let other: usize = vv
                .graded_basis()
                .filter(|(d, _)| ![-HalfInt::ONE, HalfInt::ZERO, HalfInt::ONE].contains(d))
                .map(|(_, b)| b.len())
                .sum();
            assert_eq!(vv.dim_h() + 2 * vv.dim_v() + other, g.dual_dim(), "{g}");
            assert_eq!(vv.dim_v(), vv.basis_vstar().len());
            // transpose maps V onto V*
            let t: Vec<ExactMatrix> = vv.basis_v().iter().map(ExactMatrix::transpose).collect();
            for y in &t {
                assert!(vv.contains_vstar(y));
            }
            assert_eq!(span_rank(&t), vv.basis_vstar().len());
        }
    }

    #[test]
    fn gl_hom_chain_shape() {
        let lam = InfinitesimalParameter::new(GroupType::gl(6), &h(&[2, 2, 0, 0, 0, -2])).unwrap();
        let vv = build_vogan_variety(&lam);
        let d = vv.decomposition();
        let expected: usize = d
            .pieces()
            .iter()
            .map(|(&e, &k)| k * d.multiplicity(e + HalfInt::ONE))
            .sum();
        assert_eq!(vv.dim_v(), expected);
        assert_eq!(vv.dim_v(), 2 * 3 + 3);
    }
}
