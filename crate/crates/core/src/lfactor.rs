//! Adjoint L-factor `L(s, φ, Ad) = ∏_m (1 − q^{−m−s})^{−1}`, where `m` runs over
//! the grading degrees of `ker(ad x) ⊆ ĝ` for the point `x ∈ V_λ`.
//!
//! With `V_λ` in degree `+1`, kernel vectors of degree `−1` (those in `V*_λ`)
//! contribute `(1 − q^{1−s})^{−1}` and hence the pole at `s = 1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{commutant_dim, ExactMatrix, HalfInt};
use crate::infinitesimal::VoganVariety;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointExponents {
    exponents: BTreeMap<HalfInt, usize>,
    /// `dim {y ∈ V* : [x, y] = 0}`, computed separately from the graded kernel.
    conormal_fiber_dim: usize,
}

impl AdjointExponents {
    pub fn exponents(&self) -> &BTreeMap<HalfInt, usize> {
        &self.exponents
    }

    pub fn multiplicity(&self, m: HalfInt) -> usize {
        self.exponents.get(&m).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.exponents.values().sum()
    }

    /// `(twice m, multiplicity)` pairs in increasing `m`.
    pub fn as_pairs(&self) -> Vec<(i64, usize)> {
        self.exponents.iter().map(|(m, &k)| (m.twice(), k)).collect()
    }

    /// Whether the exponent multiset is closed under `m ↦ −m`. Recorded, not assumed.
    pub fn is_symmetric(&self) -> bool {
        self.exponents.iter().all(|(&m, &k)| self.multiplicity(-m) == k)
    }
}

impl Serialize for AdjointExponents {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.as_pairs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for AdjointExponents {
    /// The conormal fiber dimension is not serialized; it is restored from the
    /// exponent `−1` multiplicity.
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i64, usize)> = Vec::deserialize(d)?;
        let exponents: BTreeMap<HalfInt, usize> =
            pairs.into_iter().map(|(t, k)| (HalfInt::from_twice(t), k)).collect();
        let conormal_fiber_dim = exponents.get(&-HalfInt::ONE).copied().unwrap_or(0);
        Ok(AdjointExponents {
            exponents,
            conormal_fiber_dim,
        })
    }
}

fn power_of_q(m: HalfInt) -> String {
    // q^{−m−s}
    if m == HalfInt::ZERO {
        "−s".to_string()
    } else if m > HalfInt::ZERO {
        format!("−{m}−s")
    } else {
        format!("{}−s", -m)
    }
}

impl fmt::Display for AdjointExponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        for (&m, &k) in &self.exponents {
            let outer = if k == 1 { "−1".to_string() } else { format!("−{k}") };
            write!(f, "(1 − q^{{{}}})^{{{outer}}}", power_of_q(m))?;
        }
        Ok(())
    }
}

/// Graded dimensions of `ker(ad x)` in `ĝ`. The sum is checked against a single
/// solve over the whole of `ĝ`, and the degree `−1` part against the conormal
/// fiber computed from the `V*` basis.
pub fn adjoint_exponents(vv: &VoganVariety, x: &ExactMatrix) -> Result<AdjointExponents, Error> {
    vv.require_v(x)?;
    let mut exponents = BTreeMap::new();
    for (degree, basis) in vv.graded_basis() {
        let k = commutant_dim(&basis, &[x])?;
        if k > 0 {
            exponents.insert(degree, k);
        }
    }
    let whole = commutant_dim(vv.model().basis(), &[x])?;
    let graded: usize = exponents.values().sum();
    if whole != graded {
        return Err(Error::Invariant(format!(
            "ker(ad x) has dimension {whole} but its graded pieces add to {graded}"
        )));
    }
    let conormal_fiber_dim = commutant_dim(vv.basis_vstar(), &[x])?;
    Ok(AdjointExponents {
        exponents,
        conormal_fiber_dim,
    })
}

/// Multiplicity of the exponent `−1`; must equal the conormal fiber dimension.
pub fn pole_order_at_1(ae: &AdjointExponents) -> Result<usize, Error> {
    let order = ae.multiplicity(-HalfInt::ONE);
    if order != ae.conormal_fiber_dim {
        return Err(Error::Invariant(format!(
            "pole order {order} differs from conormal fiber dimension {}",
            ae.conormal_fiber_dim
        )));
    }
    Ok(order)
}

pub fn is_regular_at_1(ae: &AdjointExponents) -> Result<bool, Error> {
    Ok(pole_order_at_1(ae)? == 0)
}
