//! Cohomology dimensions on `A × P¹` and `p_g` of members of `|L ⊠ O(n)|`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sections::{invariant_dimension, WeightConfig};
use crate::surface::CohTriple;

/// `(h⁰, h¹)` of `O(m)` on `P¹`.
pub fn p1_cohomology(m: i64) -> (u64, u64) {
    if m >= 0 {
        (m as u64 + 1, 0)
    } else {
        (0, (-m - 1) as u64)
    }
}

/// Cohomology dimensions of a line bundle on the surface factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundleShadow {
    pub name: String,
    pub coh: CohTriple,
}

impl LineBundleShadow {
    pub fn new(name: impl Into<String>, h0: u64, h1: u64, h2: u64) -> Self {
        LineBundleShadow {
            name: name.into(),
            coh: CohTriple::new(h0, h1, h2),
        }
    }
}

/// `h⁰..h²` of `A ⊠ O(m)` by Künneth: `h^k = Σ_{i+j=k} h^i(A)·h^j(O(m))`.
///
/// `h³` of the threefold is not recorded.
pub fn product_cohomology(a: &LineBundleShadow, m: i64) -> CohTriple {
    let (p0, p1) = p1_cohomology(m);
    let c = a.coh;
    CohTriple {
        h0: c.h0 * p0,
        h1: c.h0 * p1 + c.h1 * p0,
        h2: c.h1 * p1 + c.h2 * p0,
    }
}

/// `p_g` of a smooth member of `|L ⊠ O(n)|` on `A × P¹` from the residue
/// sequence `0 → K_P → K_P(X) → K_X → 0`.
///
/// `adjoint` is the shadow of `K_A ⊗ L` on `A`, so that `K_P(X)` is
/// `adjoint ⊠ O(n-2)`; `canonical` is the shadow of `K_A`, so that
/// `K_P = canonical ⊠ O(-2)`. Requires `h¹(K_P(X)) = 0`, which is checked.
pub fn member_pg(adjoint: &LineBundleShadow, canonical: &LineBundleShadow, n: i64) -> Result<i64> {
    let adj = product_cohomology(adjoint, n - 2);
    if adj.h1 != 0 {
        return Err(Error::VanishingFailure { h1: adj.h1 });
    }
    let kp = product_cohomology(canonical, -2);
    Ok(adj.h0 as i64 - kp.h0 as i64 + kp.h1 as i64)
}

/// `p_g` of a `Z/3` quotient: invariant sections of the adjoint bundle plus
/// the invariant part of `h¹(K_P)`, supplied as `h1_correction`.
pub fn equivariant_member_pg(adjoint: &WeightConfig, h1_correction: i64) -> i64 {
    invariant_dimension(adjoint) as i64 + h1_correction
}
