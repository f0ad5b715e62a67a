use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{Elem, FiniteRing};
use crate::error::{Result, RingError};

/// Rings up to this size get every triple checked.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 256;
/// Random triples tested for larger rings.
pub const SAMPLED_TRIPLES: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub exhaustive: bool,
    pub triples_checked: usize,
}

fn check_triple(r: &FiniteRing, a: Elem, b: Elem, c: Elem) -> Result<()> {
    let fail = |what: &str| {
        Err(RingError::Inconsistent(format!(
            "{}: {what} fails at ({a}, {b}, {c})",
            r.label()
        )))
    };
    if r.add(r.add(a, b), c) != r.add(a, r.add(b, c)) {
        return fail("additive associativity");
    }
    if r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)) {
        return fail("multiplicative associativity");
    }
    if r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) {
        return fail("left distributivity");
    }
    if r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)) {
        return fail("right distributivity");
    }
    Ok(())
}

fn check_single(r: &FiniteRing, a: Elem) -> Result<()> {
    let fail = |what: &str| {
        Err(RingError::Inconsistent(format!(
            "{}: {what} fails at {a}",
            r.label()
        )))
    };
    if r.add(a, r.zero()) != a || r.add(r.zero(), a) != a {
        return fail("additive identity");
    }
    if r.add(a, r.neg(a)) != r.zero() {
        return fail("additive inverse");
    }
    if r.mul(a, r.one()) != a || r.mul(r.one(), a) != a {
        return fail("multiplicative identity");
    }
    Ok(())
}

/// Verifies the ring axioms: exhaustively up to [`EXHAUSTIVE_AXIOM_LIMIT`]
/// elements, otherwise on [`SAMPLED_TRIPLES`] random triples drawn from `seed`.
pub fn check_axioms(r: &FiniteRing, seed: u64) -> Result<AxiomCheck> {
    let n = r.size();
    if (r.zero() == r.one()) != (n == 1) {
        return Err(RingError::Inconsistent(format!(
            "{}: zero = one only allowed in the zero ring",
            r.label()
        )));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let exhaustive = n <= EXHAUSTIVE_AXIOM_LIMIT;
    if exhaustive {
        for a in 0..n {
            check_single(r, a)?;
            for b in 0..n {
                if r.add(a, b) != r.add(b, a) {
                    return Err(RingError::Inconsistent(format!(
                        "{}: addition not commutative at ({a}, {b})",
                        r.label()
                    )));
                }
                for c in 0..n {
                    check_triple(r, a, b, c)?;
                }
            }
        }
        return Ok(AxiomCheck {
            exhaustive,
            triples_checked: n * n * n,
        });
    }
    for a in 0..n {
        check_single(r, a)?;
    }
    for _ in 0..SAMPLED_TRIPLES {
        let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        if r.add(a, b) != r.add(b, a) {
            return Err(RingError::Inconsistent(format!(
                "{}: addition not commutative at ({a}, {b})",
                r.label()
            )));
        }
        check_triple(r, a, b, c)?;
    }
    Ok(AxiomCheck {
        exhaustive,
        triples_checked: SAMPLED_TRIPLES,
    })
}
