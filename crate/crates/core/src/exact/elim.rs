//! Fraction-free elimination and the linear-algebra kernels built on it.
//!
//! Rational rows are first cleared of denominators; elimination then runs on
//! integers with Bareiss-style exact divisions, so every intermediate entry is
//! a minor of the cleared matrix. Small systems run on checked `i128` and fall
//! back to big integers on the first overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{ExactMatrix, Rational};
use crate::Error;

trait Scalar: Clone + PartialEq + Sized {
    fn ff_zero() -> Self;
    fn ff_one() -> Self;
    fn ff_is_zero(&self) -> bool;
    /// `(p·a − c·b) / prev`, or `None` if the representation overflows.
    fn cross(p: &Self, a: &Self, c: &Self, b: &Self, prev: &Self) -> Option<Self>;
}

impl Scalar for i128 {
    fn ff_zero() -> Self {
        0
    }
    fn ff_one() -> Self {
        1
    }
    fn ff_is_zero(&self) -> bool {
        *self == 0
    }
    fn cross(p: &i128, a: &i128, c: &i128, b: &i128, prev: &i128) -> Option<i128> {
        let lhs = p.checked_mul(*a)?;
        let rhs = c.checked_mul(*b)?;
        let num = lhs.checked_sub(rhs)?;
        debug_assert_eq!(num % prev, 0, "inexact fraction-free division");
        Some(num / prev)
    }
}

impl Scalar for BigInt {
    fn ff_zero() -> Self {
        Zero::zero()
    }
    fn ff_one() -> Self {
        One::one()
    }
    fn ff_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cross(p: &BigInt, a: &BigInt, c: &BigInt, b: &BigInt, prev: &BigInt) -> Option<BigInt> {
        let num = p * a - c * b;
        if prev.is_one() {
            return Some(num);
        }
        let (q, r) = num.div_rem(prev);
        debug_assert!(Zero::is_zero(&r), "inexact fraction-free division");
        Some(q)
    }
}

struct Reduced<T> {
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
    /// Common value of every pivot entry once a Gauss–Jordan pass finishes.
    pivot_value: T,
}

/// Fraction-free elimination. Pivots are searched in columns `< pivot_limit`.
/// With `jordan` set, rows above each pivot are cleared too.
fn reduce<T: Scalar>(mut rows: Vec<Vec<T>>, pivot_limit: usize, jordan: bool) -> Option<Reduced<T>> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = T::ff_one();
    let mut pivots = Vec::new();
    for col in 0..pivot_limit.min(ncols) {
        let r = pivots.len();
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][col].ff_is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r].clone();
        let pv = pivot_row[col].clone();
        let start = if jordan { 0 } else { r + 1 };
        for (i, row) in rows.iter_mut().enumerate().skip(start) {
            if i == r {
                continue;
            }
            let c = row[col].clone();
            if c.ff_is_zero() && pv == prev {
                continue;
            }
            for j in 0..ncols {
                if j == col {
                    continue;
                }
                row[j] = T::cross(&pv, &row[j], &c, &pivot_row[j], &prev)?;
            }
            row[col] = T::ff_zero();
        }
        prev = pv;
        pivots.push(col);
    }
    Some(Reduced {
        rows,
        pivots,
        pivot_value: prev,
    })
}

/// Clears denominators row by row.
fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let lcm = row
                .iter()
                .filter(|v| !v.is_zero())
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .map(|v| {
                    if v.is_zero() {
                        BigInt::zero()
                    } else {
                        v.numer() * (&lcm / v.denom())
                    }
                })
                .collect()
        })
        .collect()
}

fn small_rows(rows: &[Vec<BigInt>]) -> Option<Vec<Vec<i128>>> {
    rows.iter()
        .map(|row| row.iter().map(|v| v.to_i64().map(i128::from)).collect())
        .collect()
}

/// Elimination producing rational output: (pivot columns, rows divided by the pivot value).
fn reduce_rational(rows: &[Vec<Rational>], pivot_limit: usize, jordan: bool) -> (Vec<usize>, Vec<Vec<Rational>>) {
    let ints = integer_rows(rows);
    if let Some(small) = small_rows(&ints) {
        if let Some(red) = reduce(small, pivot_limit, jordan) {
            let d = BigInt::from(red.pivot_value);
            let out = red
                .rows
                .into_iter()
                .map(|row| row.into_iter().map(|v| Rational::new(BigInt::from(v), d.clone())).collect())
                .collect();
            return (red.pivots, out);
        }
    }
    let red = reduce(ints, pivot_limit, jordan).expect("big integers do not overflow");
    let d = red.pivot_value;
    let out = red
        .rows
        .into_iter()
        .map(|row| row.into_iter().map(|v| Rational::new(v, d.clone())).collect())
        .collect();
    (red.pivots, out)
}

fn rank_of_rows(rows: &[Vec<Rational>]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let ints = integer_rows(rows);
    if let Some(small) = small_rows(&ints) {
        if let Some(red) = reduce(small, ncols, false) {
            return red.pivots.len();
        }
    }
    reduce(ints, ncols, false).expect("big integers do not overflow").pivots.len()
}

fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Rank over ℚ.
pub fn rank(m: &ExactMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    rank_of_rows(&matrix_rows(m))
}

/// Basis of the right nullspace in reduced-echelon normal form: one vector per
/// free column, with a 1 in that column and 0 in the other free columns.
pub fn kernel_basis(m: &ExactMatrix) -> Vec<Vec<Rational>> {
    kernel_of_rows(&matrix_rows(m), m.cols())
}

fn kernel_of_rows(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (pivots, reduced) = if rows.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        reduce_rational(rows, ncols, true)
    };
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -reduced[r][f].clone();
            }
            v
        })
        .collect()
}

/// Exact inverse of a square matrix.
pub fn inverse(m: &ExactMatrix) -> Result<ExactMatrix, Error> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let n = m.rows();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    if n == 0 {
        return Ok(ExactMatrix::zeros(0, 0));
    }
    let (pivots, reduced) = reduce_rational(&rows, n, true);
    if pivots.len() != n {
        return Err(Error::Singular);
    }
    let out = reduced.into_iter().map(|row| row[n..].to_vec()).collect();
    ExactMatrix::from_rows(out)
}

/// Rank of a family of matrices viewed as vectors.
pub fn span_rank(mats: &[ExactMatrix]) -> usize {
    if mats.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<Rational>> = mats.iter().map(|m| m.entries().to_vec()).collect();
    if rows[0].is_empty() {
        return 0;
    }
    rank_of_rows(&rows)
}

fn commutator(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a.try_mul(b)
        .and_then(|ab| b.try_mul(a).and_then(|ba| ab.try_sub(&ba)))
        .expect("shapes checked by caller")
}

/// Linear system whose kernel is `{c : [Σ cᵢ bᵢ, x] = 0 for every x}`; one
/// column per basis element, zero rows dropped.
fn commutant_system(space_basis: &[ExactMatrix], xs: &[&ExactMatrix]) -> Result<Vec<Vec<Rational>>, Error> {
    let Some(first) = space_basis.first().or(xs.first().copied()) else {
        return Ok(Vec::new());
    };
    let n = first.rows();
    for m in space_basis.iter().chain(xs.iter().copied()) {
        if !m.is_square() || m.rows() != n {
            return Err(Error::DimensionMismatch(format!(
                "commutant inputs must all be {n}x{n}, found {}x{}",
                m.rows(),
                m.cols()
            )));
        }
    }
    let k = space_basis.len();
    let mut rows = Vec::new();
    for x in xs {
        let brackets: Vec<ExactMatrix> = space_basis.iter().map(|b| commutator(b, x)).collect();
        for pos in 0..n * n {
            if brackets.iter().all(|c| c.entries()[pos].is_zero()) {
                continue;
            }
            rows.push((0..k).map(|i| brackets[i].entries()[pos].clone()).collect());
        }
    }
    Ok(rows)
}

/// Basis of `{z ∈ span(space_basis) : zx = xz}`.
pub fn solve_commutant(space_basis: &[ExactMatrix], x: &ExactMatrix) -> Result<Vec<ExactMatrix>, Error> {
    solve_joint_commutant(space_basis, &[x])
}

/// Basis of the elements of `span(space_basis)` commuting with every `x` in `xs`.
pub fn solve_joint_commutant(space_basis: &[ExactMatrix], xs: &[&ExactMatrix]) -> Result<Vec<ExactMatrix>, Error> {
    let rows = commutant_system(space_basis, xs)?;
    let kernel = kernel_of_rows(&rows, space_basis.len());
    Ok(kernel
        .into_iter()
        .map(|coeffs| combine(space_basis, &coeffs))
        .collect())
}

/// `|solve_joint_commutant(space_basis, xs)|`, computed from a rank alone.
///
/// `space_basis` is assumed linearly independent.
pub fn commutant_dim(space_basis: &[ExactMatrix], xs: &[&ExactMatrix]) -> Result<usize, Error> {
    let rows = commutant_system(space_basis, xs)?;
    if rows.is_empty() {
        return Ok(space_basis.len());
    }
    Ok(space_basis.len() - rank_of_rows(&rows))
}

/// `Σ cᵢ bᵢ`.
pub fn combine(basis: &[ExactMatrix], coeffs: &[Rational]) -> ExactMatrix {
    assert_eq!(basis.len(), coeffs.len());
    let mut out = ExactMatrix::zeros(basis[0].rows(), basis[0].cols());
    for (b, c) in basis.iter().zip(coeffs) {
        out.add_scaled(c, b);
    }
    out
}

/// Whether `v` lies in the span of `basis` (all viewed as flat vectors).
pub fn in_span(basis: &[ExactMatrix], v: &ExactMatrix) -> bool {
    if v.is_zero() {
        return true;
    }
    let mut all = basis.to_vec();
    let r = span_rank(&all);
    all.push(v.clone());
    span_rank(&all) == r
}
