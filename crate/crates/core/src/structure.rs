//! Structural comparisons between rings: corner rings, explicit
//! isomorphisms, isomorphism search for small rings, and matrix-unit systems.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Result, RingError};
use crate::ring::{ClosureOps, Elem, FiniteRing};
use crate::subsets::{center, corner_set, idempotents, is_idempotent, nil_exponents, units};

/// `eRe` as a ring in its own right, with identity `e`. Element `i` of the
/// corner is the `i`-th smallest member of `eRe` in `r`.
pub fn corner_ring(r: &Arc<FiniteRing>, e: Elem) -> Result<CornerRing> {
    r.check_index(e)?;
    if !is_idempotent(r, e) {
        return Err(RingError::InvalidArgument(format!("{e} is not idempotent")));
    }
    let set = corner_set(r, e);
    let embedding: Arc<Vec<Elem>> = Arc::new(set.members().to_vec());
    let mut index = vec![usize::MAX; r.size()];
    for (i, &x) in embedding.iter().enumerate() {
        index[x] = i;
    }
    let index = Arc::new(index);
    let op = |f: fn(&FiniteRing, Elem, Elem) -> Elem| {
        let (r, emb, idx) = (r.clone(), embedding.clone(), index.clone());
        move |a: Elem, b: Elem| idx[f(&r, emb[a], emb[b])]
    };
    let add = op(|r, a, b| r.add(a, b));
    let mul = op(|r, a, b| r.mul(a, b));
    let (r2, emb, idx) = (r.clone(), embedding.clone(), index.clone());
    let neg = move |a: Elem| idx[r2.neg(emb[a])];
    let (r3, emb3) = (r.clone(), embedding.clone());
    let ring = FiniteRing::from_ops(
        format!("{}e{}", r.label(), e),
        embedding.len(),
        index[r.zero()],
        index[e],
        Arc::new(ClosureOps::new(add, mul, neg)),
    )
    .with_describe(move |a| r3.describe(emb3[a]))
    .into_arc();
    Ok(CornerRing { ring, embedding })
}

#[derive(Clone, Debug)]
pub struct CornerRing {
    pub ring: Arc<FiniteRing>,
    /// `embedding[i]` is the element of the ambient ring.
    pub embedding: Arc<Vec<Elem>>,
}

/// Checks that `map` is a unital ring isomorphism `r → s`, exhaustively.
pub fn is_isomorphism(r: &FiniteRing, s: &FiniteRing, map: &[Elem]) -> bool {
    if r.size() != s.size() || map.len() != r.size() || map.iter().any(|&x| x >= s.size()) {
        return false;
    }
    let mut seen = vec![false; s.size()];
    for &x in map {
        if std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    if map[r.one()] != s.one() {
        return false;
    }
    r.elements().all(|a| {
        r.elements().all(|b| {
            map[r.add(a, b)] == s.add(map[a], map[b]) && map[r.mul(a, b)] == s.mul(map[a], map[b])
        })
    })
}

/// Cheap isomorphism invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub size: usize,
    pub units: usize,
    pub idempotents: usize,
    pub nilpotents: usize,
    pub center: usize,
    pub characteristic: usize,
}

pub fn fingerprint(r: &FiniteRing) -> Fingerprint {
    Fingerprint {
        size: r.size(),
        units: units(r).len(),
        idempotents: idempotents(r).len(),
        nilpotents: nil_exponents(r).iter().filter(|e| e.is_some()).count(),
        center: center(r).len(),
        characteristic: r.characteristic(),
    }
}

/// Largest ring size for which [`find_isomorphism`] will search.
pub const ISOMORPHISM_SEARCH_LIMIT: usize = 81;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic(Vec<Elem>),
    FingerprintMismatch,
    /// Fingerprints agree but no isomorphism exists.
    NotIsomorphic,
}

/// Decides isomorphism of two small rings: fingerprint gate, then a
/// backtracking search over images of a ring-generating set.
pub fn find_isomorphism(r: &FiniteRing, s: &FiniteRing) -> Result<IsoOutcome> {
    if fingerprint(r) != fingerprint(s) {
        return Ok(IsoOutcome::FingerprintMismatch);
    }
    if r.size() > ISOMORPHISM_SEARCH_LIMIT {
        return Err(RingError::InvalidArgument(format!(
            "isomorphism search is limited to {ISOMORPHISM_SEARCH_LIMIT} elements, got {}",
            r.size()
        )));
    }
    let gens = ring_generators(r);
    let (inv_r, inv_s) = (invariants(r), invariants(s));
    let mut by_invariant: HashMap<ElemInvariant, Vec<Elem>> = HashMap::new();
    for x in s.elements() {
        by_invariant.entry(inv_s[x]).or_default().push(x);
    }
    let candidates: Vec<&[Elem]> = gens
        .iter()
        .map(|&g| by_invariant.get(&inv_r[g]).map_or(&[][..], |v| v.as_slice()))
        .collect();
    let mut partial = PartialMap::new(r, s);
    if !partial.assign(r.zero(), s.zero()) || !partial.assign(r.one(), s.one()) {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    match search(&mut partial, &gens, &candidates) {
        Some(map) if is_isomorphism(r, s, &map) => Ok(IsoOutcome::Isomorphic(map)),
        Some(_) => Err(RingError::Inconsistent(
            "isomorphism search produced a map that fails the table check".into(),
        )),
        None => Ok(IsoOutcome::NotIsomorphic),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct ElemInvariant {
    additive_order: usize,
    nil_exponent: Option<u32>,
    idempotent: bool,
    unit: bool,
    central: bool,
    /// Tail length and period of the sequence of powers.
    power_shape: (usize, usize),
}

fn invariants(r: &FiniteRing) -> Vec<ElemInvariant> {
    let exps = nil_exponents(r);
    let (u, z) = (units(r), center(r));
    r.elements()
        .map(|a| ElemInvariant {
            additive_order: r.additive_order(a),
            nil_exponent: exps[a],
            idempotent: r.square(a) == a,
            unit: u.contains(a),
            central: z.contains(a),
            power_shape: power_shape(r, a),
        })
        .collect()
}

fn power_shape(r: &FiniteRing, a: Elem) -> (usize, usize) {
    let mut first_seen = HashMap::new();
    let mut x = a;
    for step in 1.. {
        if let Some(prev) = first_seen.insert(x, step) {
            return (prev, step - prev);
        }
        x = r.mul(x, a);
    }
    unreachable!()
}

/// A small set whose generated subring is all of `r`, greedily chosen in
/// index order.
fn ring_generators(r: &FiniteRing) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut inside = subring(r, &gens);
    while let Some(x) = r.elements().find(|&x| !inside[x]) {
        gens.push(x);
        inside = subring(r, &gens);
    }
    gens
}

fn subring(r: &FiniteRing, gens: &[Elem]) -> Vec<bool> {
    let mut inside = vec![false; r.size()];
    let mut members = Vec::new();
    for x in [r.zero(), r.one()].into_iter().chain(gens.iter().copied()) {
        if !inside[x] {
            inside[x] = true;
            members.push(x);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let x = members[i];
        for j in 0..=i {
            let y = members[j];
            for z in [r.add(x, y), r.mul(x, y), r.mul(y, x)] {
                if !inside[z] {
                    inside[z] = true;
                    members.push(z);
                }
            }
        }
        i += 1;
    }
    inside
}

struct PartialMap<'a> {
    r: &'a FiniteRing,
    s: &'a FiniteRing,
    forward: Vec<Option<Elem>>,
    backward: Vec<Option<Elem>>,
    assigned: Vec<Elem>,
}

impl<'a> PartialMap<'a> {
    fn new(r: &'a FiniteRing, s: &'a FiniteRing) -> Self {
        Self {
            r,
            s,
            forward: vec![None; r.size()],
            backward: vec![None; s.size()],
            assigned: Vec::new(),
        }
    }

    /// Records `x ↦ y` and closes under sums and products of assigned
    /// elements. Returns false on a conflict.
    fn assign(&mut self, x: Elem, y: Elem) -> bool {
        let mut queue = vec![(x, y)];
        while let Some((x, y)) = queue.pop() {
            match (self.forward[x], self.backward[y]) {
                (Some(fx), _) if fx != y => return false,
                (_, Some(by)) if by != x => return false,
                (Some(_), _) => continue,
                _ => {}
            }
            self.forward[x] = Some(y);
            self.backward[y] = Some(x);
            self.assigned.push(x);
            let (r, s) = (self.r, self.s);
            for k in 0..self.assigned.len() {
                let a = self.assigned[k];
                let fa = self.forward[a].unwrap();
                queue.push((r.add(x, a), s.add(y, fa)));
                queue.push((r.mul(x, a), s.mul(y, fa)));
                queue.push((r.mul(a, x), s.mul(fa, y)));
            }
        }
        true
    }

    fn snapshot(&self) -> usize {
        self.assigned.len()
    }

    fn rollback(&mut self, mark: usize) {
        for x in self.assigned.drain(mark..) {
            let y = self.forward[x].take().unwrap();
            self.backward[y] = None;
        }
    }
}

fn search(partial: &mut PartialMap<'_>, gens: &[Elem], candidates: &[&[Elem]]) -> Option<Vec<Elem>> {
    let Some((&g, rest)) = gens.split_first() else {
        return partial.forward.iter().copied().collect();
    };
    if partial.forward[g].is_some() {
        return search(partial, rest, &candidates[1..]);
    }
    for &y in candidates[0] {
        let mark = partial.snapshot();
        if partial.assign(g, y) {
            if let Some(map) = search(partial, rest, &candidates[1..]) {
                return Some(map);
            }
        }
        partial.rollback(mark);
    }
    None
}

/// A full set of `3 × 3` matrix units `e_ij`, stored row-major.
pub type MatrixUnits = [Elem; 9];

/// Finds nonzero `e_ij` (1 ≤ i, j ≤ 3) with `e_ij e_kl = δ_jk e_il`, the
/// first in index order. Their existence is equivalent to some corner `fRf`
/// being a `3 × 3` matrix ring, and any `n × n` system with `n ≥ 3`
/// contains one.
pub fn find_matrix_units_3(r: &FiniteRing) -> Option<MatrixUnits> {
    if r.is_zero_ring() {
        return None;
    }
    let idem = idempotents(r);
    // pairs (x, y) with xy = f, yx = g nonzero orthogonal idempotents,
    // x ∈ fRg and y ∈ gRf, grouped by f
    let mut pairs: HashMap<Elem, Vec<(Elem, Elem, Elem)>> = HashMap::new();
    let mut order = Vec::new();
    for x in r.elements() {
        if x == r.zero() {
            continue;
        }
        for y in r.elements() {
            let f = r.mul(x, y);
            let g = r.mul(y, x);
            if f == r.zero() || g == r.zero() || !idem.contains(f) || !idem.contains(g) {
                continue;
            }
            if r.mul(f, g) != r.zero() || r.mul(g, f) != r.zero() {
                continue;
            }
            if r.mul(f, r.mul(x, g)) != x || r.mul(g, r.mul(y, f)) != y {
                continue;
            }
            let list = pairs.entry(f).or_insert_with(|| {
                order.push(f);
                Vec::new()
            });
            list.push((x, y, g));
        }
    }
    for f in order {
        let list = &pairs[&f];
        for &(x12, x21, g) in list {
            for &(x13, x31, h) in list {
                if r.mul(g, h) != r.zero() || r.mul(h, g) != r.zero() {
                    continue;
                }
                let x23 = r.mul(x21, x13);
                let x32 = r.mul(x31, x12);
                let units = [f, x12, x13, x21, g, x23, x31, x32, h];
                if is_matrix_unit_system(r, &units) {
                    return Some(units);
                }
            }
        }
    }
    None
}

fn is_matrix_unit_system(r: &FiniteRing, e: &MatrixUnits) -> bool {
    (0..3).all(|i| {
        (0..3).all(|j| {
            e[3 * i + j] != r.zero()
                && (0..3).all(|k| {
                    (0..3).all(|l| {
                        let expect = if j == k { e[3 * i + l] } else { r.zero() };
                        r.mul(e[3 * i + j], e[3 * k + l]) == expect
                    })
                })
        })
    })
}
