//! The Randic index `R(G) = sum over edges uv of 1/sqrt(deg(u) deg(v))`,
//! exact and floating, together with the closed-form values of the extremal
//! families. The exact and signature-based routes are implemented
//! independently and asserted equal in tests.

use thiserror::Error;

use crate::graph::{EdgeTypeSignature, Graph};
use crate::radical::RadicalValue;

/// Exact Randic index as a direct sum over edges.
pub fn randic_exact(g: &Graph) -> RadicalValue {
    let degs = g.degrees();
    let mut total = RadicalValue::zero();
    for (u, v) in g.edges() {
        let p = (degs[u] * degs[v]) as u64;
        total = total.add(&RadicalValue::reciprocal_sqrt(p).expect("degrees are positive"));
    }
    total
}

/// Floating Randic index, for fast screening. Deterministic edge order.
pub fn randic_float(g: &Graph) -> f64 {
    let degs = g.degrees();
    g.edges()
        .iter()
        .map(|&(u, v)| 1.0 / ((degs[u] * degs[v]) as f64).sqrt())
        .sum()
}

/// Randic index from the edge-type counts alone:
/// `sum m_{i,j} / sqrt(i*j)`.
pub fn randic_of_signature(sig: &EdgeTypeSignature) -> RadicalValue {
    let mut total = RadicalValue::zero();
    for (&(i, j), &count) in &sig.counts {
        let term = RadicalValue::reciprocal_sqrt((i * j) as u64)
            .expect("signature degrees are positive")
            .scale_int(count as i64);
        total = total.add(&term);
    }
    total
}

/// Families with a closed-form Randic value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyValueId {
    /// First maximum at cyclomatic number `k >= 3`, `n >= 2k-1`.
    Lambda1,
    /// Runner-up with a pendant vertex, `k >= 3`, `n >= 2k+1`.
    Gamma1,
    /// `k >= 4`, `n >= 2k`.
    Lambda2,
    /// Second maximum at `k >= 4`, `n >= 2k-2`.
    Gamma2,
    /// 3-regular graphs at `n = 2k-2`.
    Regular3,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyValueError {
    #[error("family requires k >= {required}, got {got}")]
    KTooSmall { required: usize, got: usize },
    #[error("family at k={k} requires n >= {required}, got {got}")]
    NTooSmall {
        k: usize,
        required: usize,
        got: usize,
    },
    #[error("3-regular case requires n = 2k-2, got n={n}, k={k}")]
    NotCubicOrder { n: usize, k: usize },
}

/// Minimal feasible order for a family value at cyclomatic number `k`.
pub fn minimal_order(id: FamilyValueId, k: usize) -> Result<usize, FamilyValueError> {
    let min_k = match id {
        FamilyValueId::Lambda1 | FamilyValueId::Gamma1 => 3,
        FamilyValueId::Lambda2 | FamilyValueId::Gamma2 => 4,
        FamilyValueId::Regular3 => 3,
    };
    if k < min_k {
        return Err(FamilyValueError::KTooSmall {
            required: min_k,
            got: k,
        });
    }
    Ok(match id {
        FamilyValueId::Lambda1 => 2 * k - 1,
        FamilyValueId::Gamma1 => 2 * k + 1,
        FamilyValueId::Lambda2 => 2 * k,
        FamilyValueId::Gamma2 => 2 * k - 2,
        FamilyValueId::Regular3 => 2 * k - 2,
    })
}

/// Closed-form Randic value of a family member on `n` vertices. Built from
/// the printed constants, not from the signature, so that the two routes can
/// be compared.
pub fn family_value(
    id: FamilyValueId,
    n: usize,
    k: usize,
) -> Result<RadicalValue, FamilyValueError> {
    let min_n = minimal_order(id, k)?;
    if id == FamilyValueId::Regular3 {
        if n != 2 * k - 2 {
            return Err(FamilyValueError::NotCubicOrder { n, k });
        }
    } else if n < min_n {
        return Err(FamilyValueError::NTooSmall {
            k,
            required: min_n,
            got: n,
        });
    }
    let half_n = RadicalValue::from_ratio(n as i64, 2);
    let sqrt = |c: (i64, i64), s: u64| {
        RadicalValue::from_term(num_rational::BigRational::new(c.0.into(), c.1.into()), s)
            .expect("positive radicand")
    };
    let value = match id {
        // n/2 - (5 - 2*sqrt(6))/6
        FamilyValueId::Lambda1 => half_n
            .add(&RadicalValue::from_ratio(-5, 6))
            .add(&sqrt((1, 3), 6)),
        // n/2 - (7 - (sqrt(6) + 3*sqrt(2)))/6
        FamilyValueId::Gamma1 => half_n
            .add(&RadicalValue::from_ratio(-7, 6))
            .add(&sqrt((1, 6), 6))
            .add(&sqrt((1, 2), 2)),
        // n/2 - (5 - 2*sqrt(6))/3
        FamilyValueId::Lambda2 => half_n
            .add(&RadicalValue::from_ratio(-5, 3))
            .add(&sqrt((2, 3), 6)),
        // n/2 - (6 - (2*sqrt(3) + sqrt(6)))/3
        FamilyValueId::Gamma2 => half_n
            .add(&RadicalValue::from_integer(-2))
            .add(&sqrt((2, 3), 3))
            .add(&sqrt((1, 3), 6)),
        // n/2 exactly
        FamilyValueId::Regular3 => half_n,
    };
    Ok(value)
}
