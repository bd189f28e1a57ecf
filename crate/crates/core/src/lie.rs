//! Matrix models of the complex dual Lie algebras `gl_n`, `sp_2n` and `so_m`.
//!
//! Orthogonal and symplectic algebras are realized with an antidiagonal form
//! `J` (`J_{i,N+1-i} = 1` for `so`, `+1` on the upper half and `-1` on the lower
//! half for `sp`). With this choice the diagonal torus
//! `diag(q^{e_1}, …, q^{e_N})` with `e_i = -e_{N+1-i}` lies in the dual group,
//! and every basis element below is homogeneous for the grading by any such
//! torus element.
//!
//! `so_{2n}` is modelled by the connected group: orbits that are conjugate
//! under `O_{2n}` but not under `SO_{2n}` are not told apart.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exact::{in_span, rat, ExactMatrix};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    #[serde(rename = "GL")]
    Gl,
    #[serde(rename = "SO_odd")]
    SoOdd,
    #[serde(rename = "Sp")]
    Sp,
    #[serde(rename = "SO_even")]
    SoEven,
}

/// Bilinear form preserved by the dual group on its standard representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FormKind {
    Symmetric,
    Alternating,
}

/// A split group `G` given by its kind and the size of its defining matrices,
/// e.g. `SO_odd` with `n = 7` is `SO_7` (dual `Sp_6`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "GroupDesc", into = "GroupDesc")]
pub struct GroupType {
    kind: GroupKind,
    n: usize,
}

#[derive(Serialize, Deserialize)]
struct GroupDesc {
    kind: GroupKind,
    n: usize,
}

impl TryFrom<GroupDesc> for GroupType {
    type Error = Error;
    fn try_from(d: GroupDesc) -> Result<Self, Error> {
        GroupType::new(d.kind, d.n)
    }
}

impl From<GroupType> for GroupDesc {
    fn from(g: GroupType) -> Self {
        GroupDesc { kind: g.kind, n: g.n }
    }
}

impl GroupType {
    pub fn new(kind: GroupKind, n: usize) -> Result<Self, Error> {
        let ok = match kind {
            GroupKind::Gl => n >= 1,
            GroupKind::SoOdd => n >= 3 && n % 2 == 1,
            GroupKind::Sp | GroupKind::SoEven => n >= 2 && n % 2 == 0,
        };
        if !ok {
            return Err(Error::Unsupported(format!("{kind:?} with n = {n}")));
        }
        Ok(GroupType { kind, n })
    }

    pub fn gl(n: usize) -> Self {
        Self::new(GroupKind::Gl, n).expect("valid GL rank")
    }

    pub fn so_odd(n: usize) -> Self {
        Self::new(GroupKind::SoOdd, n).expect("valid SO_odd size")
    }

    pub fn sp(n: usize) -> Self {
        Self::new(GroupKind::Sp, n).expect("valid Sp size")
    }

    pub fn so_even(n: usize) -> Self {
        Self::new(GroupKind::SoEven, n).expect("valid SO_even size")
    }

    /// The classical group whose dual has a standard representation of size
    /// `dual_size` preserving a form of the given kind.
    pub fn from_dual(form: FormKind, dual_size: usize) -> Result<Self, Error> {
        match form {
            FormKind::Alternating if dual_size % 2 == 0 => Self::new(GroupKind::SoOdd, dual_size + 1),
            FormKind::Symmetric if dual_size % 2 == 1 => Self::new(GroupKind::Sp, dual_size - 1),
            FormKind::Symmetric => Self::new(GroupKind::SoEven, dual_size),
            FormKind::Alternating => Err(Error::Unsupported(format!("odd symplectic size {dual_size}"))),
        }
    }

    pub fn kind(self) -> GroupKind {
        self.kind
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn is_gl(self) -> bool {
        self.kind == GroupKind::Gl
    }

    /// Size `N̂` of the standard representation of the dual group.
    pub fn dual_size(self) -> usize {
        match self.kind {
            GroupKind::Gl | GroupKind::SoEven => self.n,
            GroupKind::SoOdd => self.n - 1,
            GroupKind::Sp => self.n + 1,
        }
    }

    pub fn dual_form(self) -> Option<FormKind> {
        match self.kind {
            GroupKind::Gl => None,
            GroupKind::SoOdd => Some(FormKind::Alternating),
            GroupKind::Sp | GroupKind::SoEven => Some(FormKind::Symmetric),
        }
    }

    /// `dim ĝ` by the classical formulas.
    pub fn dual_dim(self) -> usize {
        let m = self.dual_size();
        match self.dual_form() {
            None => m * m,
            Some(FormKind::Alternating) => (m / 2) * (m + 1),
            Some(FormKind::Symmetric) => m * (m - 1) / 2,
        }
    }

    pub fn dual_name(self) -> String {
        let m = self.dual_size();
        match self.dual_form() {
            None => format!("gl_{m}"),
            Some(FormKind::Alternating) => format!("sp_{m}"),
            Some(FormKind::Symmetric) => format!("so_{m}"),
        }
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GroupKind::Gl => write!(f, "GL_{}", self.n),
            GroupKind::SoOdd | GroupKind::SoEven => write!(f, "SO_{}", self.n),
            GroupKind::Sp => write!(f, "Sp_{}", self.n),
        }
    }
}

/// Explicit basis of `ĝ`.
#[derive(Clone, Debug)]
pub struct LieAlgebraModel {
    group: GroupType,
    form: Option<ExactMatrix>,
    signs: Vec<i64>,
    basis: Vec<ExactMatrix>,
    anchors: Vec<(usize, usize)>,
}

impl LieAlgebraModel {
    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn ambient_size(&self) -> usize {
        self.group.dual_size()
    }

    pub fn form(&self) -> Option<&ExactMatrix> {
        self.form.as_ref()
    }

    /// `J_{i, N-1-i}` (0-indexed); all ones for `gl`.
    pub fn form_signs(&self) -> &[i64] {
        &self.signs
    }

    pub fn basis(&self) -> &[ExactMatrix] {
        &self.basis
    }

    /// For each basis element, one position `(row, col)` of its support. All
    /// positions of an element have the same grading degree.
    pub fn anchors(&self) -> &[(usize, usize)] {
        &self.anchors
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Builds `ĝ` with the antidiagonal form convention.
pub fn build_dual_lie_algebra(group: GroupType) -> LieAlgebraModel {
    let m = group.dual_size();
    let mirror = |i: usize| m - 1 - i;
    let signs: Vec<i64> = match group.dual_form() {
        Some(FormKind::Alternating) => (0..m).map(|i| if i < m / 2 { 1 } else { -1 }).collect(),
        _ => vec![1; m],
    };
    let mut basis = Vec::new();
    let mut anchors = Vec::new();
    match group.dual_form() {
        None => {
            for a in 0..m {
                for b in 0..m {
                    basis.push(ExactMatrix::unit(m, a, b));
                    anchors.push((a, b));
                }
            }
        }
        Some(_) => {
            // z ∈ ĝ  ⟺  z_{b',a'} = −s_a s_b z_{a,b}
            for a in 0..m {
                for b in 0..m {
                    let partner = (mirror(b), mirror(a));
                    let c = -signs[a] * signs[b];
                    if partner == (a, b) {
                        if c == 1 {
                            basis.push(ExactMatrix::unit(m, a, b));
                            anchors.push((a, b));
                        }
                    } else if (a, b) < partner {
                        let mut z = ExactMatrix::unit(m, a, b);
                        z[partner] = rat(c);
                        basis.push(z);
                        anchors.push((a, b));
                    }
                }
            }
        }
    }
    let form = group.dual_form().map(|_| {
        let mut j = ExactMatrix::zeros(m, m);
        for i in 0..m {
            j[(i, mirror(i))] = rat(signs[i]);
        }
        j
    });
    LieAlgebraModel {
        group,
        form,
        signs,
        basis,
        anchors,
    }
}

/// `[a, b] = ab − ba`.
pub fn bracket(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix, Error> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "bracket of {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    a.try_mul(b)?.try_sub(&b.try_mul(a)?)
}

/// Membership in `ĝ`, by the form condition `zᵀJ + Jz = 0` (or shape alone for `gl`).
pub fn contains(model: &LieAlgebraModel, z: &ExactMatrix) -> bool {
    let m = model.ambient_size();
    if z.rows() != m || z.cols() != m {
        return false;
    }
    match &model.form {
        None => true,
        Some(j) => {
            let lhs = z.transpose().try_mul(j).expect("square");
            let rhs = j.try_mul(z).expect("square");
            lhs.try_add(&rhs).expect("square").entries().iter().all(Zero::is_zero)
        }
    }
}

/// Membership in `ĝ` decided by span of the explicit basis.
pub fn contains_by_span(model: &LieAlgebraModel, z: &ExactMatrix) -> bool {
    let m = model.ambient_size();
    z.rows() == m && z.cols() == m && in_span(&model.basis, z)
}
