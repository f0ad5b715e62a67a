use std::sync::Arc;

use super::{Elem, FiniteRing};
use crate::error::{Result, RingError};

/// A unital ring endomorphism given by its full index map.
#[derive(Clone, Debug)]
pub struct RingEndomorphism {
    name: String,
    map: Arc<Vec<Elem>>,
}

impl RingEndomorphism {
    /// Validates `map` exhaustively: it must fix 0 and 1 and preserve `+` and `·`.
    pub fn new(ring: &FiniteRing, name: impl Into<String>, map: Vec<Elem>) -> Result<Self> {
        let name = name.into();
        if map.len() != ring.size() {
            return Err(RingError::NotEndomorphism(format!(
                "{name}: map has {} entries, ring has {}",
                map.len(),
                ring.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= ring.size()) {
            return Err(RingError::NotEndomorphism(format!(
                "{name}: image {bad} out of range"
            )));
        }
        if map[ring.zero()] != ring.zero() {
            return Err(RingError::NotEndomorphism(format!("{name}: 0 not fixed")));
        }
        if map[ring.one()] != ring.one() {
            return Err(RingError::NotEndomorphism(format!("{name}: 1 not fixed")));
        }
        for a in ring.elements() {
            for b in ring.elements() {
                if map[ring.add(a, b)] != ring.add(map[a], map[b]) {
                    return Err(RingError::NotEndomorphism(format!(
                        "{name}: not additive at ({a}, {b})"
                    )));
                }
                if map[ring.mul(a, b)] != ring.mul(map[a], map[b]) {
                    return Err(RingError::NotEndomorphism(format!(
                        "{name}: not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Self {
            name,
            map: Arc::new(map),
        })
    }

    pub fn identity(ring: &FiniteRing) -> Self {
        Self {
            name: "identity".into(),
            map: Arc::new(ring.elements().collect()),
        }
    }

    /// `x ↦ x^p` where `p` is the characteristic of the ring.
    pub fn frobenius(ring: &FiniteRing) -> Result<Self> {
        let p = ring.characteristic() as u64;
        let map = ring.elements().map(|a| ring.pow(a, p)).collect();
        Self::new(ring, "frobenius", map)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a]
    }

    /// The `k`-fold composite, with `k = 0` giving the identity.
    pub fn power(&self, k: usize) -> Vec<Elem> {
        let mut out: Vec<Elem> = (0..self.map.len()).collect();
        for _ in 0..k {
            for x in out.iter_mut() {
                *x = self.map[*x];
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Smallest `k ≥ 1` with `α^k = id`.
    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.power(1);
        while cur.iter().enumerate().any(|(i, &x)| i != x) {
            cur = cur.iter().map(|&x| self.map[x]).collect();
            k += 1;
        }
        k
    }
}
