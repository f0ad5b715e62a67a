//! Distinguished subsets of a finite ring: units, idempotents, nilpotents,
//! center, Jacobson radical, ideal closures and the prime radical.
//!
//! Results are memoized on the ring, so repeated predicate evaluation over
//! the same ring only pays for each scan once.

use serde::Serialize;

use crate::error::{Result, RingError};
use crate::ring::{Elem, FiniteRing};

/// A subset of the elements of one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet {
    mask: Vec<bool>,
    members: Vec<Elem>,
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.members.serialize(s)
    }
}

impl ElementSet {
    pub fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Self { mask, members }
    }

    pub fn from_members(universe: usize, members: impl IntoIterator<Item = Elem>) -> Self {
        let mut mask = vec![false; universe];
        for m in members {
            mask[m] = true;
        }
        Self::from_mask(mask)
    }

    pub fn full(universe: usize) -> Self {
        Self::from_mask(vec![true; universe])
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.mask[a]
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.members.iter().all(|&a| other.contains(a))
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        Self::from_mask(
            self.mask
                .iter()
                .zip(&other.mask)
                .map(|(&a, &b)| a && b)
                .collect(),
        )
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        Self::from_mask(
            self.mask
                .iter()
                .zip(&other.mask)
                .map(|(&a, &b)| a || b)
                .collect(),
        )
    }

    pub fn complement(&self) -> ElementSet {
        Self::from_mask(self.mask.iter().map(|&a| !a).collect())
    }
}

/// `element^exponent = 0` with `exponent` minimal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NilWitness {
    pub element: Elem,
    pub exponent: u32,
}

/// Two-sided inverses, found by scanning each row of the multiplication table.
pub fn inverses(r: &FiniteRing) -> &[Option<Elem>] {
    r.cache.inverses.get_or_init(|| {
        let mut inv = vec![None; r.size()];
        for a in r.elements() {
            if inv[a].is_some() {
                continue;
            }
            if let Some(b) = r
                .elements()
                .find(|&b| r.mul(a, b) == r.one() && r.mul(b, a) == r.one())
            {
                inv[a] = Some(b);
                inv[b] = Some(a);
            }
        }
        inv
    })
}

pub fn inverse(r: &FiniteRing, a: Elem) -> Option<Elem> {
    inverses(r)[a]
}

pub fn units(r: &FiniteRing) -> &ElementSet {
    r.cache
        .units
        .get_or_init(|| ElementSet::from_mask(inverses(r).iter().map(Option::is_some).collect()))
}

pub fn is_unit(r: &FiniteRing, a: Elem) -> bool {
    units(r).contains(a)
}

pub fn idempotents(r: &FiniteRing) -> &ElementSet {
    r.cache
        .idempotents
        .get_or_init(|| ElementSet::from_mask(r.elements().map(|a| r.mul(a, a) == a).collect()))
}

pub fn is_idempotent(r: &FiniteRing, a: Elem) -> bool {
    idempotents(r).contains(a)
}

/// Nilpotency index by iterating powers until zero or a repeat.
fn nil_exponent_of(r: &FiniteRing, a: Elem) -> Option<u32> {
    if a == r.zero() {
        return Some(1);
    }
    let mut seen = std::collections::HashSet::new();
    let mut x = a;
    let mut k = 1u32;
    while x != r.zero() {
        if !seen.insert(x) {
            return None;
        }
        x = r.mul(x, a);
        k += 1;
    }
    Some(k)
}

/// Per-element nilpotency index, `None` for non-nilpotent elements.
pub fn nil_exponents(r: &FiniteRing) -> &[Option<u32>] {
    r.cache
        .nil_exponents
        .get_or_init(|| r.elements().map(|a| nil_exponent_of(r, a)).collect())
}

#[inline]
pub fn is_nilpotent(r: &FiniteRing, a: Elem) -> bool {
    nil_exponents(r)[a].is_some()
}

pub fn nilpotents(r: &FiniteRing) -> Vec<NilWitness> {
    nil_exponents(r)
        .iter()
        .enumerate()
        .filter_map(|(element, e)| e.map(|exponent| NilWitness { element, exponent }))
        .collect()
}

pub fn nilpotent_set(r: &FiniteRing) -> ElementSet {
    ElementSet::from_mask(nil_exponents(r).iter().map(Option::is_some).collect())
}

pub fn center(r: &FiniteRing) -> &ElementSet {
    r.cache.center.get_or_init(|| {
        ElementSet::from_mask(
            r.elements()
                .map(|a| r.elements().all(|b| r.commutes(a, b)))
                .collect(),
        )
    })
}

/// `{x : 1 − r·x ∈ U(R) for all r}`.
pub fn left_quasi_regular_radical(r: &FiniteRing) -> ElementSet {
    let u = units(r);
    ElementSet::from_mask(
        r.elements()
            .map(|x| r.elements().all(|y| u.contains(r.sub(r.one(), r.mul(y, x)))))
            .collect(),
    )
}

/// `{x : 1 − x·r ∈ U(R) for all r}`.
pub fn right_quasi_regular_radical(r: &FiniteRing) -> ElementSet {
    let u = units(r);
    ElementSet::from_mask(
        r.elements()
            .map(|x| r.elements().all(|y| u.contains(r.sub(r.one(), r.mul(x, y)))))
            .collect(),
    )
}

/// The Jacobson radical via left quasi-regularity. The right-sided variant is
/// computed too, and a mismatch is reported as an inconsistency.
pub fn try_jacobson_radical(r: &FiniteRing) -> Result<&ElementSet> {
    if let Some(j) = r.cache.jacobson.get() {
        return Ok(j);
    }
    let left = left_quasi_regular_radical(r);
    let right = right_quasi_regular_radical(r);
    if left != right {
        return Err(RingError::Inconsistent(format!(
            "{}: left and right quasi-regular radicals differ",
            r.label()
        )));
    }
    Ok(r.cache.jacobson.get_or_init(|| left))
}

pub fn jacobson_radical(r: &FiniteRing) -> &ElementSet {
    try_jacobson_radical(r).expect("Jacobson radical is two-sided")
}

/// Closes `seeds` under addition and two-sided multiplication by the ring,
/// stopping early once `abort` returns true for a newly added element.
fn closure_until(
    r: &FiniteRing,
    seeds: impl IntoIterator<Item = Elem>,
    mut abort: impl FnMut(Elem) -> bool,
) -> Option<ElementSet> {
    let mut mask = vec![false; r.size()];
    let mut members: Vec<Elem> = Vec::new();
    let mut queue: Vec<Elem> = Vec::new();
    let mut push = |x: Elem, mask: &mut Vec<bool>, queue: &mut Vec<Elem>| -> bool {
        if !mask[x] {
            mask[x] = true;
            queue.push(x);
            if abort(x) {
                return false;
            }
        }
        true
    };
    if !push(r.zero(), &mut mask, &mut queue) {
        return None;
    }
    for g in seeds {
        if !push(g, &mut mask, &mut queue) {
            return None;
        }
    }
    while let Some(x) = queue.pop() {
        for y in r.elements() {
            if !push(r.mul(y, x), &mut mask, &mut queue) || !push(r.mul(x, y), &mut mask, &mut queue)
            {
                return None;
            }
        }
        for i in 0..members.len() {
            let s = r.add(x, members[i]);
            if !push(s, &mut mask, &mut queue) {
                return None;
            }
        }
        let d = r.add(x, x);
        if !push(d, &mut mask, &mut queue) {
            return None;
        }
        members.push(x);
    }
    Some(ElementSet::from_mask(mask))
}

/// The smallest two-sided ideal containing `gens`.
pub fn ideal_closure(r: &FiniteRing, gens: &[Elem]) -> ElementSet {
    closure_until(r, gens.iter().copied(), |_| false).expect("closure without abort")
}

pub fn is_ideal(r: &FiniteRing, set: &ElementSet) -> bool {
    crate::ring::validate_ideal(r, set).is_ok()
}

/// True iff every member of the ideal `set` is nilpotent.
pub fn is_nil_ideal(r: &FiniteRing, set: &ElementSet) -> Result<bool> {
    crate::ring::validate_ideal(r, set)?;
    Ok(set.iter().all(|a| is_nilpotent(r, a)))
}

/// The largest nilpotent ideal, grown greedily: an element joins when the
/// ideal it generates together with the current radical is still nil.
pub fn prime_radical(r: &FiniteRing) -> &ElementSet {
    r.cache.prime_radical.get_or_init(|| {
        let exps = nil_exponents(r);
        let mut current = ElementSet::from_members(r.size(), [r.zero()]);
        for a in r.elements() {
            if exps[a].is_none() || current.contains(a) {
                continue;
            }
            // (a) nil forces y·a nilpotent for every y
            if !r.elements().all(|y| exps[r.mul(y, a)].is_some()) {
                continue;
            }
            let seeds: Vec<Elem> = current.iter().chain([a]).collect();
            if let Some(grown) = closure_until(r, seeds, |x| exps[x].is_none()) {
                current = grown;
            }
        }
        current
    })
}

/// `eRe` as a set, for an idempotent `e`.
pub fn corner_set(r: &FiniteRing, e: Elem) -> ElementSet {
    ElementSet::from_members(r.size(), r.elements().map(|a| r.mul(e, r.mul(a, e))))
}
