//! Element decompositions and ring-class predicates.
//!
//! Predicates with a closed-form criterion (`a ± a²` nilpotent, `a − a²`
//! nilpotent) are evaluated twice: once by the criterion and once by an
//! explicit decomposition search. The two must agree element by element.

use serde::Serialize;

use crate::error::{Result, RingError};
use crate::ring::{validate_ideal, Elem, FiniteRing};
use crate::subsets::{
    center, idempotents, is_idempotent, is_nilpotent, is_unit, nilpotent_set, prime_radical, units,
    ElementSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    /// `a = q + e`, `eq = qe`
    StronglyNilClean,
    /// `a = q ± e`, no commutation required
    WeaklyNilClean,
    /// `a = q ± e`, `eq = qe`
    StronglyWeaklyNilClean,
    /// `a = u ± e`, `ue = eu`, `u` a unit
    StronglyWeaklyClean,
}

/// A witnessed decomposition `a = first ± second` or `a = second ± first`.
///
/// For the nil-clean kinds `first_part` is the idempotent `e` and
/// `nil_or_idem_part` the nilpotent `q`, with `a = q + sign·e`. For the clean
/// kind `first_part` is the unit `u` and `nil_or_idem_part` the idempotent `e`,
/// with `a = u + sign·e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    pub sign: i8,
    pub first_part: Elem,
    pub nil_or_idem_part: Elem,
    pub commuting: bool,
}

impl Decomposition {
    /// Recomputes the decomposition from scratch.
    pub fn verify(&self, r: &FiniteRing, a: Elem) -> bool {
        let signed = |x: Elem| if self.sign > 0 { x } else { r.neg(x) };
        let commuting = r.commutes(self.first_part, self.nil_or_idem_part);
        if commuting != self.commuting {
            return false;
        }
        match self.kind {
            DecompositionKind::StronglyWeaklyClean => {
                let (u, e) = (self.first_part, self.nil_or_idem_part);
                is_unit(r, u) && is_idempotent(r, e) && commuting && r.add(u, signed(e)) == a
            }
            kind => {
                let (e, q) = (self.first_part, self.nil_or_idem_part);
                let needs_commuting = kind != DecompositionKind::WeaklyNilClean;
                let sign_ok = kind != DecompositionKind::StronglyNilClean || self.sign > 0;
                is_idempotent(r, e)
                    && is_nilpotent(r, q)
                    && sign_ok
                    && (commuting || !needs_commuting)
                    && r.add(q, signed(e)) == a
            }
        }
    }
}

fn nil_clean_search(
    r: &FiniteRing,
    a: Elem,
    kind: DecompositionKind,
    signs: &[i8],
    needs_commuting: bool,
) -> Option<Decomposition> {
    for &sign in signs {
        for e in idempotents(r).iter() {
            // a = q + sign·e
            let q = if sign > 0 { r.sub(a, e) } else { r.add(a, e) };
            if !is_nilpotent(r, q) {
                continue;
            }
            let commuting = r.commutes(e, q);
            if needs_commuting && !commuting {
                continue;
            }
            return Some(Decomposition {
                kind,
                sign,
                first_part: e,
                nil_or_idem_part: q,
                commuting,
            });
        }
    }
    None
}

/// First `a = q ± e` with `eq = qe`: sign `+` before `−`, then idempotents in
/// ascending index order.
pub fn swnc_decompose(r: &FiniteRing, a: Elem) -> Option<Decomposition> {
    nil_clean_search(r, a, DecompositionKind::StronglyWeaklyNilClean, &[1, -1], true)
}

pub fn snc_decompose(r: &FiniteRing, a: Elem) -> Option<Decomposition> {
    nil_clean_search(r, a, DecompositionKind::StronglyNilClean, &[1], true)
}

pub fn wnc_decompose(r: &FiniteRing, a: Elem) -> Option<Decomposition> {
    nil_clean_search(r, a, DecompositionKind::WeaklyNilClean, &[1, -1], false)
}

/// First `a = u ± e` with `ue = eu`: units in ascending index order, and for
/// each unit sign `+` before `−`.
pub fn swc_decompose(r: &FiniteRing, a: Elem) -> Option<Decomposition> {
    for u in units(r).iter() {
        for sign in [1i8, -1] {
            let diff = r.sub(a, u);
            let e = if sign > 0 { diff } else { r.neg(diff) };
            if is_idempotent(r, e) && r.commutes(u, e) {
                return Some(Decomposition {
                    kind: DecompositionKind::StronglyWeaklyClean,
                    sign,
                    first_part: u,
                    nil_or_idem_part: e,
                    commuting: true,
                });
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Decomposition(Decomposition),
    Element(Elem),
    Elements(Vec<Elem>),
}

/// Outcome of a ring predicate. A false universally-quantified predicate
/// always names a counterexample element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Elem>,
}

impl Verdict {
    pub fn yes() -> Self {
        Self {
            holds: true,
            witness: None,
            counterexample: None,
        }
    }

    pub fn yes_with(w: Witness) -> Self {
        Self {
            holds: true,
            witness: Some(w),
            counterexample: None,
        }
    }

    pub fn no(counterexample: Elem) -> Self {
        Self {
            holds: false,
            witness: None,
            counterexample: Some(counterexample),
        }
    }

    pub fn no_with(counterexample: Elem, w: Witness) -> Self {
        Self {
            holds: false,
            witness: Some(w),
            counterexample: Some(counterexample),
        }
    }

    fn from_first_failure(first: Option<Elem>) -> Self {
        first.map_or_else(Self::yes, Self::no)
    }
}

/// `a + a²` or `a − a²` nilpotent.
pub fn plus_minus_criterion(r: &FiniteRing, a: Elem) -> bool {
    let sq = r.mul(a, a);
    is_nilpotent(r, r.add(a, sq)) || is_nilpotent(r, r.sub(a, sq))
}

/// Runs the criterion and the search over `domain` and insists they agree.
fn two_path(
    r: &FiniteRing,
    name: &str,
    domain: impl Iterator<Item = Elem>,
    criterion: impl Fn(Elem) -> bool,
    search: impl Fn(Elem) -> Option<Decomposition>,
) -> Result<Verdict> {
    let mut first_failure = None;
    for a in domain {
        let fast = criterion(a);
        let found = search(a);
        if let Some(d) = &found {
            if !d.verify(r, a) {
                return Err(RingError::Inconsistent(format!(
                    "{}: {name} search returned an invalid decomposition for {a}",
                    r.label()
                )));
            }
        }
        if fast != found.is_some() {
            return Err(RingError::Inconsistent(format!(
                "{}: {name} criterion says {fast} but search says {} at element {a}",
                r.label(),
                found.is_some()
            )));
        }
        if !fast && first_failure.is_none() {
            first_failure = Some(a);
        }
    }
    Ok(Verdict::from_first_failure(first_failure))
}

fn non_units(r: &FiniteRing) -> impl Iterator<Item = Elem> + '_ {
    let u = units(r);
    r.elements().filter(move |&a| !u.contains(a))
}

/// Every non-unit is strongly weakly nil-clean.
pub fn is_gswnc(r: &FiniteRing) -> Result<Verdict> {
    two_path(r, "GSWNC", non_units(r), |a| plus_minus_criterion(r, a), |a| swnc_decompose(r, a))
}

/// Every element is strongly weakly nil-clean.
pub fn is_swnc_ring(r: &FiniteRing) -> Result<Verdict> {
    two_path(r, "SWNC", r.elements(), |a| plus_minus_criterion(r, a), |a| swnc_decompose(r, a))
}

fn snc_criterion(r: &FiniteRing, a: Elem) -> bool {
    is_nilpotent(r, r.sub(a, r.mul(a, a)))
}

/// Every non-unit is strongly nil-clean.
pub fn is_gsnc(r: &FiniteRing) -> Result<Verdict> {
    two_path(r, "GSNC", non_units(r), |a| snc_criterion(r, a), |a| snc_decompose(r, a))
}

/// Every element is strongly nil-clean.
pub fn is_snc_ring(r: &FiniteRing) -> Result<Verdict> {
    two_path(r, "SNC", r.elements(), |a| snc_criterion(r, a), |a| snc_decompose(r, a))
}

/// Every element is strongly weakly clean.
pub fn is_strongly_weakly_clean(r: &FiniteRing) -> Verdict {
    Verdict::from_first_failure(r.elements().find(|&a| swc_decompose(r, a).is_none()))
}

/// Every element is weakly nil-clean (no commutation required).
pub fn is_weakly_nil_clean(r: &FiniteRing) -> Verdict {
    Verdict::from_first_failure(r.elements().find(|&a| wnc_decompose(r, a).is_none()))
}

/// `U(R) ⊆ 1 + Nil(R)`.
pub fn is_uu(r: &FiniteRing) -> Verdict {
    let one = r.one();
    Verdict::from_first_failure(units(r).iter().find(|&u| !is_nilpotent(r, r.sub(u, one))))
}

/// `U(R) = Nil(R) ± 1`.
pub fn is_wuu(r: &FiniteRing) -> Verdict {
    let one = r.one();
    Verdict::from_first_failure(units(r).iter().find(|&u| {
        !is_nilpotent(r, r.sub(u, one)) && !is_nilpotent(r, r.add(u, one))
    }))
}

/// The non-units are closed under addition; cross-checked against the
/// non-unit set forming a two-sided ideal.
pub fn is_local(r: &FiniteRing) -> Result<Verdict> {
    if r.is_zero_ring() {
        return Ok(Verdict::yes());
    }
    let nu: Vec<Elem> = non_units(r).collect();
    let u = units(r);
    let mut failure = None;
    'outer: for (i, &a) in nu.iter().enumerate() {
        for &b in &nu[i..] {
            if u.contains(r.add(a, b)) {
                failure = Some((a, b));
                break 'outer;
            }
        }
    }
    let as_ideal = validate_ideal(r, &ElementSet::from_members(r.size(), nu.iter().copied())).is_ok();
    if as_ideal != failure.is_none() {
        return Err(RingError::Inconsistent(format!(
            "{}: non-units additively closed = {} but ideal = {as_ideal}",
            r.label(),
            failure.is_none()
        )));
    }
    Ok(match failure {
        None => Verdict::yes(),
        Some((a, b)) => Verdict::no_with(a, Witness::Element(b)),
    })
}

pub fn has_only_trivial_idempotents(r: &FiniteRing) -> Verdict {
    Verdict::from_first_failure(idempotents(r).iter().find(|&e| e != r.zero() && e != r.one()))
}

/// Every idempotent is central.
pub fn is_abelian(r: &FiniteRing) -> Verdict {
    let z = center(r);
    Verdict::from_first_failure(idempotents(r).iter().find(|&e| !z.contains(e)))
}

/// `ab = 1 ⇒ ba = 1`.
pub fn is_dedekind_finite(r: &FiniteRing) -> Verdict {
    for a in r.elements() {
        for b in r.elements() {
            if r.mul(a, b) == r.one() && r.mul(b, a) != r.one() {
                return Verdict::no_with(a, Witness::Element(b));
            }
        }
    }
    Verdict::yes()
}

/// Smallest `n` with `a^n ∈ a^{n+1}R`, together with the multiplier `r`.
pub fn pi_regular_index(r: &FiniteRing, a: Elem) -> Option<(u64, Elem)> {
    let mut an = a;
    for n in 1..=r.size() as u64 {
        let an1 = r.mul(an, a);
        if let Some(x) = r.elements().find(|&x| r.mul(an1, x) == an) {
            return Some((n, x));
        }
        an = an1;
    }
    None
}

pub fn is_strongly_pi_regular(r: &FiniteRing) -> Verdict {
    Verdict::from_first_failure(r.elements().find(|&a| pi_regular_index(r, a).is_none()))
}

/// The prime radical equals the set of nilpotents.
pub fn is_2_primal(r: &FiniteRing) -> Verdict {
    let pr = prime_radical(r);
    Verdict::from_first_failure(nilpotent_set(r).iter().find(|&q| !pr.contains(q)))
}

pub fn is_commutative(r: &FiniteRing) -> Verdict {
    for a in r.elements() {
        for b in a + 1..r.size() {
            if !r.commutes(a, b) {
                return Verdict::no_with(a, Witness::Element(b));
            }
        }
    }
    Verdict::yes()
}

/// Nonzero ring in which every nonzero element is a unit.
pub fn is_division_ring(r: &FiniteRing) -> Verdict {
    if r.is_zero_ring() {
        return Verdict::no(r.zero());
    }
    Verdict::from_first_failure(r.elements().find(|&a| a != r.zero() && !is_unit(r, a)))
}

/// Predicate names in report order.
pub const PREDICATES: &[&str] = &[
    "gswnc",
    "swnc",
    "gsnc",
    "snc",
    "strongly_weakly_clean",
    "weakly_nil_clean",
    "uu",
    "wuu",
    "local",
    "trivial_idempotents",
    "abelian",
    "dedekind_finite",
    "strongly_pi_regular",
    "two_primal",
    "commutative",
];

#[derive(Clone, Debug, Serialize)]
pub struct PredicateResult {
    pub name: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationReport {
    pub ring: String,
    pub size: usize,
    pub predicates: Vec<PredicateResult>,
}

impl ClassificationReport {
    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.predicates
            .iter()
            .find(|p| p.name == name)
            .map(|p| &p.verdict)
    }

    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|v| v.holds)
    }
}

pub fn evaluate(r: &FiniteRing, name: &str) -> Result<Verdict> {
    Ok(match name {
        "gswnc" => is_gswnc(r)?,
        "swnc" => is_swnc_ring(r)?,
        "gsnc" => is_gsnc(r)?,
        "snc" => is_snc_ring(r)?,
        "strongly_weakly_clean" => is_strongly_weakly_clean(r),
        "weakly_nil_clean" => is_weakly_nil_clean(r),
        "uu" => is_uu(r),
        "wuu" => is_wuu(r),
        "local" => is_local(r)?,
        "trivial_idempotents" => has_only_trivial_idempotents(r),
        "abelian" => is_abelian(r),
        "dedekind_finite" => is_dedekind_finite(r),
        "strongly_pi_regular" => is_strongly_pi_regular(r),
        "two_primal" => is_2_primal(r),
        "commutative" => is_commutative(r),
        other => return Err(RingError::InvalidArgument(format!("unknown predicate {other}"))),
    })
}

pub fn classify(r: &FiniteRing) -> Result<ClassificationReport> {
    let predicates = PREDICATES
        .iter()
        .map(|&name| {
            Ok(PredicateResult {
                name: name.to_string(),
                verdict: evaluate(r, name)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassificationReport {
        ring: r.label().to_string(),
        size: r.size(),
        predicates,
    })
}
