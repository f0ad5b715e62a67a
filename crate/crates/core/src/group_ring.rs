//! Group rings `RG` with the augmentation map and augmentation ideal.

use std::sync::Arc;

use crate::error::{Result, RingError};
use crate::group::{FiniteGroup, GroupElem};
use crate::ring::{check_cap, checked_pow, ClosureOps, Digits, Elem, FiniteRing, Radix};
use crate::subsets::ElementSet;

/// `RG` with coefficient vectors indexed by group elements, the coefficient
/// of group element 0 being the most significant digit.
#[derive(Clone, Debug)]
pub struct GroupRing {
    ring: Arc<FiniteRing>,
    coefficients: Arc<FiniteRing>,
    group: FiniteGroup,
    radix: Radix,
}

pub fn group_ring(coeffs: &Arc<FiniteRing>, group: &FiniteGroup) -> Result<GroupRing> {
    let n = group.size();
    let size = check_cap(checked_pow(coeffs.size(), n))?;
    let radix = Radix::new(coeffs.size(), n);
    let (c1, r1) = (coeffs.clone(), radix.clone());
    let add = move |a: Elem, b: Elem| {
        let (x, y) = (r1.decode(a), r1.decode(b));
        let s: Digits = x.iter().zip(&y).map(|(&u, &v)| c1.add(u, v)).collect();
        r1.encode(&s)
    };
    let (c2, r2) = (coeffs.clone(), radix.clone());
    let neg = move |a: Elem| {
        let s: Digits = r2.decode(a).iter().map(|&u| c2.neg(u)).collect();
        r2.encode(&s)
    };
    let (c3, r3, g3) = (coeffs.clone(), radix.clone(), group.clone());
    let mul = move |a: Elem, b: Elem| {
        let (x, y) = (r3.decode(a), r3.decode(b));
        let mut out: Digits = smallvec::smallvec![c3.zero(); n];
        for (g, &xg) in x.iter().enumerate() {
            if xg == c3.zero() {
                continue;
            }
            for (h, &yh) in y.iter().enumerate() {
                let gh = g3.compose(g, h);
                out[gh] = c3.add(out[gh], c3.mul(xg, yh));
            }
        }
        r3.encode(&out)
    };
    let embed = |r: Elem| {
        let mut d = vec![coeffs.zero(); n];
        d[group.identity()] = r;
        radix.encode(&d)
    };
    let (zero, one) = (embed(coeffs.zero()), embed(coeffs.one()));
    let (c4, r4, g4) = (coeffs.clone(), radix.clone(), group.clone());
    let ring = FiniteRing::from_ops(
        format!("GR({}, {})", coeffs.label(), group.label()),
        size,
        zero,
        one,
        Arc::new(ClosureOps::new(add, mul, neg)),
    )
    .with_radices(vec![coeffs.size(); n])
    .with_describe(move |a| {
        let terms: Vec<String> = r4
            .decode(a)
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != c4.zero())
            .map(|(g, &c)| {
                let coef = c4.describe(c);
                match (g == g4.identity(), c == c4.one()) {
                    (true, _) => coef,
                    (false, true) => g4.name(g).to_string(),
                    (false, false) => format!("{coef}{}", g4.name(g)),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    })
    .into_arc();
    Ok(GroupRing {
        ring,
        coefficients: coeffs.clone(),
        group: group.clone(),
        radix,
    })
}

impl GroupRing {
    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn coefficient_ring(&self) -> &Arc<FiniteRing> {
        &self.coefficients
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn coefficients(&self, x: Elem) -> Vec<Elem> {
        self.radix.decode(x).to_vec()
    }

    pub fn from_coefficients(&self, coeffs: &[Elem]) -> Result<Elem> {
        if coeffs.len() != self.group.size() || coeffs.iter().any(|&c| c >= self.coefficients.size()) {
            return Err(RingError::InvalidArgument("bad coefficient vector".into()));
        }
        Ok(self.radix.encode(coeffs))
    }

    /// `r·1_G`, the canonical section `R → RG`.
    pub fn embed(&self, r: Elem) -> Elem {
        let mut d = vec![self.coefficients.zero(); self.group.size()];
        d[self.group.identity()] = r;
        self.radix.encode(&d)
    }

    /// The group element `g` as a ring element.
    pub fn group_element(&self, g: GroupElem) -> Elem {
        let mut d = vec![self.coefficients.zero(); self.group.size()];
        d[g] = self.coefficients.one();
        self.radix.encode(&d)
    }

    /// Sum of coefficients.
    pub fn augmentation(&self, x: Elem) -> Elem {
        let c = &self.coefficients;
        self.radix
            .decode(x)
            .iter()
            .fold(c.zero(), |acc, &d| c.add(acc, d))
    }

    pub fn augmentation_ideal(&self) -> ElementSet {
        let zero = self.coefficients.zero();
        ElementSet::from_mask(
            self.ring
                .elements()
                .map(|x| self.augmentation(x) == zero)
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_quaternion8};
    use crate::ring::{check_axioms, make_zmod, quotient_map};
    use crate::ring::validate_ideal;
    use crate::subsets::{idempotents, is_nil_ideal};

    #[test]
    fn z2c2_basics() {
        let z2 = make_zmod(2).unwrap();
        let rg = group_ring(&z2, &make_cyclic(2).unwrap()).unwrap();
        let r = rg.ring();
        assert_eq!(r.size(), 4);
        check_axioms(r, 0).unwrap();
        let x = r.add(r.one(), rg.group_element(1));
        assert_eq!(r.mul(x, x), r.zero());
        assert_eq!(rg.augmentation(x), 0);
        assert_eq!(rg.augmentation(r.one()), 1);
        let delta = rg.augmentation_ideal();
        assert_eq!(delta.members(), &[r.zero(), x]);
        assert!(is_nil_ideal(r, &delta).unwrap());
    }

    #[test]
    fn augmentation_in_z4c2() {
        let z4 = make_zmod(4).unwrap();
        let rg = group_ring(&z4, &make_cyclic(2).unwrap()).unwrap();
        let x = rg.from_coefficients(&[2, 3]).unwrap();
        assert_eq!(rg.augmentation(x), 1);
        assert_eq!(rg.augmentation_ideal().len(), 4);
    }

    #[test]
    fn augmentation_ideal_is_ideal_with_quotient_r() {
        let z3 = make_zmod(3).unwrap();
        let rg = group_ring(&z3, &make_cyclic(3).unwrap()).unwrap();
        let delta = rg.augmentation_ideal();
        assert_eq!(delta.len(), 9);
        validate_ideal(rg.ring(), &delta).unwrap();
        let q = quotient_map(rg.ring(), &delta).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let (pa, pb) = (q.projection[rg.embed(a)], q.projection[rg.embed(b)]);
                assert_eq!(q.ring.mul(pa, pb), q.projection[rg.embed(z3.mul(a, b))]);
            }
        }
    }

    #[test]
    fn z2c3_has_idempotent_in_delta() {
        let z2 = make_zmod(2).unwrap();
        let rg = group_ring(&z2, &make_cyclic(3).unwrap()).unwrap();
        let e = rg.from_coefficients(&[0, 1, 1]).unwrap();
        let inter = rg.augmentation_ideal().intersection(idempotents(rg.ring()));
        assert!(inter.contains(e));
        assert_eq!(inter.len(), 2);
    }

    #[test]
    fn quaternion_group_ring_axioms() {
        let z2 = make_zmod(2).unwrap();
        let rg = group_ring(&z2, &make_quaternion8().unwrap()).unwrap();
        assert_eq!(rg.ring().size(), 256);
        check_axioms(rg.ring(), 7).unwrap();
    }
}
