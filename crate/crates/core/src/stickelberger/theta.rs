use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::curve::{CurveData, ReductionKind};
use crate::error::{Error, Result};
use crate::groupring::{GaloisGroup, GroupRingElement};
use crate::maninsym::RationalPeriodMap;

/// `Theta_M = sum_{a in (Z/M)^* / ±1} [a/M] sigma_a` for one curve.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaElement {
    pub curve_key: String,
    pub label: String,
    pub modulus: u64,
    pub group: GaloisGroup,
    pub element: GroupRingElement,
    pub normalization_id: &'static str,
    /// Primes `p | M` of split multiplicative reduction.
    pub split_primes: Vec<u64>,
}

impl ThetaElement {
    pub fn split_count(&self) -> usize {
        self.split_primes.len()
    }

    /// `(Theta^MT)^∨`, which agrees with the adelic element up to the factor 2;
    /// the functional equation and the special-value formula hold for it as written.
    pub fn bridged(&self) -> GroupRingElement {
        self.element.involution()
    }

    pub fn dump(&self) -> String {
        self.group.dump(&self.element)
    }
}

pub fn theta(curve: &CurveData, map: &RationalPeriodMap, modulus: u64) -> Result<ThetaElement> {
    if map.curve_key() != curve.key() {
        return Err(Error::InconsistentInput("period map belongs to a different curve".into()));
    }
    let group = GaloisGroup::new(modulus)?;
    let element = theta_element(map, &group);
    Ok(ThetaElement {
        curve_key: curve.key(),
        label: curve.label().into(),
        modulus,
        element,
        group,
        normalization_id: map.normalization_id(),
        split_primes: s_m_set(curve, modulus)?,
    })
}

/// The element `sum [a/M] sigma_a` in `Z[G]` for `G = G_M`.
pub fn theta_element(map: &RationalPeriodMap, group: &GaloisGroup) -> GroupRingElement {
    let m = group.modulus() as i64;
    let coeffs: Vec<BigInt> = group
        .representatives()
        .iter()
        .map(|&a| BigInt::from(map.value_at(a as i64, m)))
        .collect();
    GroupRingElement::from_integers(group.group(), coeffs)
}

/// `S_M`: the primes dividing `M` at which the curve has split multiplicative reduction.
pub fn s_m_set(curve: &CurveData, modulus: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for (p, _) in crate::arith::factor(modulus) {
        if curve.conductor() % p == 0 && curve.reduce_mod_p(p)?.kind == ReductionKind::SplitMultiplicative {
            out.push(p);
        }
    }
    Ok(out)
}
