use std::sync::Arc;

use super::morita::{
    extra_trivial_extensions, formal_triangular_zmod, trivial_morita_square, trivial_morita_zmod,
};
use super::{Catalog, CheckDef, Dir, Node, Obs};
use crate::classify::{self, is_gswnc, is_snc_ring, is_swnc_ring, swc_decompose, swnc_decompose};
use crate::error::Result;
use crate::expr::RingExpr;
use crate::group::{group_center, is_nilpotent_group, is_p_group, FiniteGroup};
use crate::group_ring::GroupRing;
use crate::ring::{quotient, quotient_map, Elem, FiniteRing};
use crate::structure::{corner_ring, find_isomorphism, find_matrix_units_3, is_isomorphism, IsoOutcome};
use crate::subsets::{
    idempotents, ideal_closure, is_nilpotent, jacobson_radical, nil_exponents, prime_radical,
    units, ElementSet,
};

use Dir::{Fwd, Rev};

macro_rules! check {
    ($id:expr, $dir:expr, $f:expr, $s:expr) => {
        CheckDef {
            id: $id,
            statement: $s,
            dir: $dir,
            observe: $f,
        }
    };
}

pub(crate) static REGISTRY: &[CheckDef] = &[
    check!("Lemma-2.2", Fwd, lemma_2_2, "if a is strongly weakly nil-clean then -a is strongly weakly clean"),
    check!("Cor-2.3", Fwd, cor_2_3, "GSWNC rings are strongly weakly clean"),
    check!("Lemma-2.4", Fwd, lemma_2_4, "factors of a GSWNC finite product are GSWNC"),
    check!("Prop-2.5", Fwd, prop_2_5, "if R x S is GSWNC then R and S are strongly weakly nil-clean"),
    check!("Prop-2.6-fwd", Fwd, prop_2_6, "a GSWNC product of n >= 3 rings has strongly weakly nil-clean factors, all but at most one strongly nil-clean"),
    check!("Prop-2.6-rev", Rev, prop_2_6, "a product of n >= 3 strongly weakly nil-clean rings, all but at most one strongly nil-clean, is GSWNC"),
    check!("Ex-2.6a", Fwd, ex_z3_z3, "Z3 x Z3 is GSWNC but not strongly weakly nil-clean"),
    check!("Cor-2.8-fwd", Fwd, cor_2_8, "R^n (n >= 3) GSWNC implies R^n GSNC and R strongly nil-clean"),
    check!("Cor-2.8-rev", Rev, cor_2_8, "R strongly nil-clean implies R^n (n >= 3) GSWNC and GSNC"),
    check!("Prop-2.9", Fwd, prop_2_9, "bounded instance (n <= 3): R strongly nil-clean iff T_n(R) strongly weakly nil-clean iff T_3(R) GSWNC"),
    check!("Ex-2.9a", Fwd, ex_t2_z3, "T2(Z3) is GSWNC although Z3 is not strongly nil-clean"),
    check!("Lemma-2.10", Fwd, lemma_2_10, "a GSWNC ring has nil Jacobson radical"),
    check!("Prop-2.11", Fwd, prop_2_11, "GSWNC iff a + a^2 or a - a^2 is nilpotent for every non-unit a (criterion and decomposition search agree)"),
    check!("Cor-2.12", Fwd, cor_2_12, "GSWNC rings are strongly pi-regular"),
    check!("Prop-2.13(i)-fwd", Fwd, prop_2_13_i, "for a nil ideal I, R GSWNC implies R/I GSWNC"),
    check!("Prop-2.13(i)-rev", Rev, prop_2_13_i, "for a nil ideal I, R/I GSWNC implies R GSWNC"),
    check!("Prop-2.13(ii)-fwd", Fwd, prop_2_13_ii, "R GSWNC implies J(R) nil and R/J(R) GSWNC"),
    check!("Prop-2.13(ii)-rev", Rev, prop_2_13_ii, "J(R) nil and R/J(R) GSWNC imply R GSWNC"),
    check!("Lemma-2.14", Fwd, lemma_2_14, "corners eRe (e a nonzero idempotent) of a GSWNC ring are GSWNC"),
    check!("Cor-2.17-fwd", Fwd, cor_2_17, "R GSWNC implies the trivial extension T(R, M) GSWNC"),
    check!("Cor-2.17-rev", Rev, cor_2_17, "T(R, M) GSWNC implies R GSWNC"),
    check!("Cor-2.20-fwd", Fwd, cor_2_20, "R GSWNC implies the skew triangular ring T_n(R, alpha) GSWNC"),
    check!("Cor-2.20-rev", Rev, cor_2_20, "T_n(R, alpha) GSWNC implies R GSWNC"),
    check!("Cor-2.57-fwd", Fwd, cor_2_57, "R GSWNC implies S_n(R) GSWNC"),
    check!("Cor-2.57-rev", Rev, cor_2_57, "S_n(R) GSWNC implies R GSWNC"),
    check!("Ex-2.24", Fwd, ex_2_24, "M2(Z2) is the union of its units, idempotents and nilpotents; GSWNC but not strongly weakly nil-clean"),
    check!("Ex-2.24a", Fwd, ex_2_24a, "M2(Z_{2^k}) is GSWNC"),
    check!("Thm-2.25", Fwd, thm_2_25, "M_n(R) is not GSWNC for R nonzero and n >= 3"),
    check!("Cor-2.35", Fwd, cor_2_35, "a GSWNC ring has no nonzero corner isomorphic to an n x n matrix ring with n >= 3"),
    check!("Cor-2.36", Fwd, cor_2_36, "GSWNC rings are Dedekind-finite"),
    check!("Lemma-2.26", Fwd, lemma_2_26, "M2(R) GSWNC implies R strongly weakly nil-clean"),
    check!("Lemma-2.27", Fwd, lemma_2_27, "local rings with nil J(R) are GSWNC"),
    check!("Cor-2.50-fwd", Fwd, cor_2_50, "with only trivial idempotents, GSWNC implies local with nil J(R)"),
    check!("Cor-2.50-rev", Rev, cor_2_50, "with only trivial idempotents, local with nil J(R) implies GSWNC"),
    check!("Lemma-2.55", Fwd, lemma_2_55, "GSWNC with 2 not a unit implies 2 or 6 is nilpotent"),
    check!("Lemma-2.29-fwd", Fwd, lemma_2_29, "with 2 in J(R), GSWNC implies GSNC"),
    check!("Lemma-2.29-rev", Rev, lemma_2_29, "with 2 in J(R), GSNC implies GSWNC"),
    check!("Lemma-2.56-fwd", Fwd, lemma_2_56, "with 2 not a unit, GSWNC implies GSNC or strongly weakly nil-clean"),
    check!("Lemma-2.56-rev", Rev, lemma_2_56, "with 2 not a unit, GSNC or strongly weakly nil-clean implies GSWNC"),
    check!("Lemma-2.30-fwd", Fwd, lemma_2_30, "strongly weakly nil-clean implies WUU and GSWNC"),
    check!("Lemma-2.30-rev", Rev, lemma_2_30, "WUU and GSWNC imply strongly weakly nil-clean"),
    check!("Lemma-2.31-fwd", Fwd, lemma_2_31, "strongly nil-clean implies GSWNC and UU"),
    check!("Lemma-2.31-rev", Rev, lemma_2_31, "GSWNC and UU imply strongly nil-clean"),
    check!("Thm-2.38", Fwd, thm_2_38, "R 2-primal, local and strongly weakly nil-clean implies M2(R) GSWNC"),
    check!("Thm-2.36-fwd", Fwd, thm_2_36, "a GSWNC finite ring is local with nil J, or R/J is M2(Z2), M2(Z3) or Z3 x Z3 with nil J, or strongly weakly nil-clean"),
    check!("Thm-2.36-rev", Rev, thm_2_36, "each of the five branches implies GSWNC"),
    check!("Cor-2.39-fwd", Fwd, cor_2_39, "a GSWNC semisimple ring is a division ring, M2(Z2), M2(Z3), Z3 x Z3, or strongly weakly nil-clean"),
    check!("Cor-2.39-rev", Rev, cor_2_39, "a semisimple ring of one of those shapes is GSWNC"),
    check!("Lemma-2.49", Fwd, lemma_2_49, "GSWNC with 2 a unit and u^2 = 1 for all units implies commutative"),
    check!("Prop-2.41-fwd", Fwd, prop_2_41, "a GSWNC Morita context with nilpotent MN, NM has strongly weakly nil-clean corners"),
    check!("Prop-2.41-conv", Rev, prop_2_41, "corners one strongly nil-clean and the other strongly weakly nil-clean give a GSWNC Morita context"),
    check!("Cor-2.42-fwd", Fwd, cor_2_42, "T(R, S, M) GSWNC implies R, S strongly weakly nil-clean"),
    check!("Cor-2.42-conv", Rev, cor_2_42, "R strongly nil-clean and S strongly weakly nil-clean (or vice versa) imply T(R, S, M) GSWNC"),
    check!("Cor-2.43-fwd", Fwd, cor_2_43, "for central nilpotent s, K_s(R) GSWNC implies R strongly weakly nil-clean"),
    check!("Cor-2.43-conv", Rev, cor_2_43, "for central nilpotent s and R strongly nil-clean, K_s(R) is GSWNC"),
    check!("Cor-2.44-fwd", Fwd, cor_2_44, "for central nilpotent s, M_n(R; s) GSWNC implies R strongly weakly nil-clean"),
    check!("Cor-2.44-conv", Rev, cor_2_44, "for central nilpotent s and R strongly nil-clean, M_n(R; s) is GSWNC"),
    check!("Cor-2.44-tables", Fwd, cor_2_44_tables, "M2(R; s) and K_{s^2}(R) have identical tables"),
    check!("Cor-2.45-fwd", Fwd, cor_2_45, "a GSWNC trivial Morita context has strongly weakly nil-clean corners"),
    check!("Cor-2.45-conv", Rev, cor_2_45, "corners one strongly nil-clean and the other strongly weakly nil-clean give a GSWNC trivial Morita context"),
    check!("Lemma-3.1", Fwd, lemma_3_1, "RG GSWNC implies R GSWNC"),
    check!("Lemma-3.2", Fwd, lemma_3_2, "R GSWNC, p nilpotent in R and G a p-group imply RG GSWNC"),
    check!("Lemma-3.5-fwd", Fwd, lemma_3_5, "for an epimorphism R -> S whose kernel meets Id(R) only in 0, R GSWNC implies S GSWNC and the kernel nil"),
    check!("Lemma-3.5-rev", Rev, lemma_3_5, "for such an epimorphism, S GSWNC and a nil kernel imply R GSWNC"),
    check!("Cor-3.6-fwd", Fwd, cor_3_6, "if the augmentation ideal has no nonzero idempotents, RG GSWNC implies R GSWNC and the augmentation ideal nil"),
    check!("Cor-3.6-rev", Rev, cor_3_6, "if the augmentation ideal has no nonzero idempotents, R GSWNC and a nil augmentation ideal imply RG GSWNC"),
    check!("Lemma-3.7", Fwd, lemma_3_7, "p in J(R) and G a p-group imply the augmentation ideal lies in J(RG)"),
    check!("Lemma-3.8-fwd", Fwd, lemma_3_8, "p in J(R), G a p-group: RG GSWNC implies R GSWNC and the augmentation ideal nil"),
    check!("Lemma-3.8-rev", Rev, lemma_3_8, "p in J(R), G a p-group: R GSWNC and a nil augmentation ideal imply RG GSWNC"),
    check!("Lemma-RG/J", Fwd, lemma_rg_j, "R GSWNC and augmentation ideal inside J(RG) imply RG/J(RG) GSWNC"),
    check!("Thm-3.3", Fwd, thm_3_3, "2 not a unit of R, G nontrivial, RG GSWNC imply G a 2-group and 2 nilpotent in R"),
    check!("Ex-3.4-fwd", Fwd, ex_3_4, "for m even and G nontrivial, Z_m G GSWNC implies m a power of 2 and G a 2-group"),
    check!("Ex-3.4-rev", Rev, ex_3_4, "m a power of 2 and G a nontrivial 2-group imply Z_m G GSWNC"),
    check!("Lemma-3.9", Fwd, lemma_3_9, "2 not a unit of R and RG GSNC imply Z(G) a 2-group"),
    check!("Lemma-3.11-fwd", Fwd, lemma_3_11, "2 not a unit, G nilpotent: RG GSNC implies R GSNC and G a 2-group"),
    check!("Lemma-3.11-rev", Rev, lemma_3_11, "2 not a unit, G nilpotent: R GSNC and G a 2-group imply RG GSNC"),
    check!("Thm-3.12-fwd", Fwd, thm_3_12, "2 not a unit, G nontrivial nilpotent: RG GSWNC implies R GSNC and G a 2-group"),
    check!("Thm-3.12-rev", Rev, thm_3_12, "2 not a unit, G nontrivial nilpotent: R GSNC and G a 2-group imply RG GSWNC"),
    check!("Aug-quotient", Fwd, aug_quotient, "RG modulo its augmentation ideal is isomorphic to R through r -> r.1"),
];

// ---- helpers ----

/// Largest ring for which checks build quotients by many ideals.
const IDEAL_SCAN_LIMIT: usize = 256;
/// Distinct nil ideals tried per ring.
const IDEALS_PER_RING: usize = 6;

fn all(cat: &Catalog) -> Vec<Arc<Node>> {
    cat.nodes()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn product_parts(e: &RingExpr) -> Option<&[RingExpr]> {
    match e {
        RingExpr::Product(parts) => Some(parts),
        _ => None,
    }
}

fn product_of(parts: &[RingExpr]) -> RingExpr {
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        RingExpr::Product(parts.to_vec())
    }
}

fn nodes_of(cat: &Catalog, parts: &[RingExpr]) -> Vec<Arc<Node>> {
    parts.iter().map(|p| cat.node(p)).collect()
}

fn two(node: &Node) -> Result<Elem> {
    Ok(node.ring()?.int(2))
}

fn ideal_is_nil(r: &FiniteRing, i: &ElementSet) -> bool {
    let exps = nil_exponents(r);
    i.iter().all(|a| exps[a].is_some())
}

fn meets_idempotents_trivially(r: &FiniteRing, i: &ElementSet) -> bool {
    idempotents(r).iter().all(|e| e == r.zero() || !i.contains(e))
}

/// Nonzero nil ideals: the prime radical, then principal ideals of
/// nilpotents in index order, deduplicated and capped.
fn nil_ideals(r: &FiniteRing) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = Vec::new();
    let push = |i: ElementSet, out: &mut Vec<ElementSet>| {
        if i.len() > 1 && !out.contains(&i) {
            out.push(i);
        }
    };
    push(prime_radical(r).clone(), &mut out);
    let exps = nil_exponents(r);
    for q in r.elements() {
        if out.len() >= IDEALS_PER_RING {
            break;
        }
        if q == r.zero() || exps[q].is_none() {
            continue;
        }
        let i = ideal_closure(r, &[q]);
        if ideal_is_nil(r, &i) {
            push(i, &mut out);
        }
    }
    out
}

fn quotient_gswnc(r: &Arc<FiniteRing>, i: &ElementSet) -> Result<bool> {
    Ok(is_gswnc(&*quotient(r, i)?)?.holds)
}

struct GroupRingCase {
    label: String,
    node: Arc<Node>,
    base: Arc<Node>,
    group: FiniteGroup,
}

impl GroupRingCase {
    fn gr(&self) -> Result<&GroupRing> {
        Ok(self.node.group_ring()?.expect("group ring entry"))
    }

    fn base_expr(&self) -> &RingExpr {
        &self.base.expr
    }
}

fn group_rings(cat: &Catalog) -> Result<Vec<GroupRingCase>> {
    let mut out = Vec::new();
    for e in cat.entries() {
        if let RingExpr::GroupRing(base, g) = e {
            out.push(GroupRingCase {
                label: e.to_string(),
                node: cat.node(e),
                base: cat.node(base),
                group: g.build()?,
            });
        }
    }
    Ok(out)
}

/// The prime `p` with `G` a `p`-group, for nontrivial `G`.
fn group_prime(g: &FiniteGroup) -> Option<usize> {
    let n = g.size();
    let p = (2..=n).find(|d| n % d == 0)?;
    is_p_group(g, p).then_some(p)
}

fn delta_in_jacobson(case: &GroupRingCase) -> Result<bool> {
    let gr = case.gr()?;
    Ok(gr.augmentation_ideal().is_subset(jacobson_radical(gr.ring())))
}

// ---- section 2 ----

fn lemma_2_2(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let r = n.ring()?;
        let mut checked = 0;
        let mut failure = None;
        for a in r.elements() {
            if swnc_decompose(r, a).is_none() {
                continue;
            }
            checked += 1;
            if swc_decompose(r, r.neg(a)).is_none() {
                failure = Some(a);
                break;
            }
        }
        if checked == 0 {
            continue;
        }
        out.push(
            Obs::new(&n.label, true, failure.is_none())
                .detail(format!("{checked} strongly weakly nil-clean elements"))
                .witness(failure.into_iter().collect()),
        );
    }
    Ok(out)
}

fn cor_2_3(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    all(cat)
        .iter()
        .map(|n| {
            let v = classify::is_strongly_weakly_clean(n.ring()?);
            Ok(Obs::new(&n.label, n.gswnc()?, v.holds).witness(v.counterexample.into_iter().collect()))
        })
        .collect()
}

fn lemma_2_4(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let Some(parts) = product_parts(&n.expr) else { continue };
        let mut bad = Vec::new();
        for f in nodes_of(cat, parts) {
            if !f.gswnc()? {
                bad.push(f.label.clone());
            }
        }
        out.push(Obs::new(&n.label, n.gswnc()?, bad.is_empty()).detail(if bad.is_empty() {
            "every factor GSWNC".to_string()
        } else {
            format!("not GSWNC: {}", bad.join(", "))
        }));
    }
    Ok(out)
}

fn prop_2_5(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let Some(parts) = product_parts(&n.expr) else { continue };
        for k in 1..parts.len() {
            let (left, right) = (cat.node(&product_of(&parts[..k])), cat.node(&product_of(&parts[k..])));
            if left.ring()?.is_zero_ring() || right.ring()?.is_zero_ring() {
                continue;
            }
            out.push(
                Obs::new(
                    format!("({}) x ({})", left.label, right.label),
                    n.gswnc()?,
                    left.swnc()? && right.swnc()?,
                )
                .detail(format!("SWNC: {}, {}", yes_no(left.swnc()?), yes_no(right.swnc()?))),
            );
        }
    }
    Ok(out)
}

fn prop_2_6(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let Some(parts) = product_parts(&n.expr) else { continue };
        if parts.len() < 3 {
            continue;
        }
        let factors = nodes_of(cat, parts);
        let mut all_swnc = true;
        let mut non_snc = 0;
        for f in &factors {
            all_swnc &= f.swnc()?;
            non_snc += usize::from(!f.snc()?);
        }
        let rhs = all_swnc && non_snc <= 1;
        out.push(
            Obs::iff(&n.label, dir, n.gswnc()?, rhs)
                .detail(format!("all factors SWNC: {all_swnc}; factors not SNC: {non_snc}")),
        );
    }
    Ok(out)
}

fn ex_z3_z3(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let n = cat.node(&"Z3 x Z3".parse()?);
    let swnc = is_swnc_ring(n.ring()?)?;
    Ok(vec![Obs::new(&n.label, true, n.gswnc()? && !swnc.holds)
        .detail("GSWNC true, SWNC false")
        .witness(swnc.counterexample.into_iter().collect())])
}

fn cor_2_8(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let Some(parts) = product_parts(&n.expr) else { continue };
        if parts.len() < 3 || parts.iter().any(|p| p != &parts[0]) {
            continue;
        }
        let base = cat.node(&parts[0]);
        let (gswnc, gsnc, snc_power, snc_base) = (n.gswnc()?, n.gsnc()?, n.snc()?, base.snc()?);
        let detail = format!("GSWNC {gswnc}, GSNC {gsnc}, SNC(R^n) {snc_power}, SNC(R) {snc_base}");
        let o = match dir {
            Fwd => Obs::new(&n.label, gswnc, gsnc && snc_power && snc_base),
            Rev => Obs::new(&n.label, snc_base, gswnc && gsnc && snc_power),
        };
        out.push(o.detail(detail));
    }
    Ok(out)
}

fn prop_2_9(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut bases: Vec<RingExpr> = Vec::new();
    for e in cat.entries() {
        if let RingExpr::Upper(_, b) = e {
            if !bases.contains(b) {
                bases.push((**b).clone());
            }
        }
    }
    let mut out = Vec::new();
    for b in bases {
        let base = cat.node(&b);
        let snc = base.snc()?;
        let mut swnc_tn = Vec::new();
        for n in 1..=3 {
            swnc_tn.push(cat.node(&RingExpr::Upper(n, Box::new(b.clone()))).swnc()?);
        }
        let t3 = cat.node(&RingExpr::Upper(3, Box::new(b.clone())));
        let gswnc_t3 = t3.gswnc()?;
        let ii = swnc_tn.iter().all(|&x| x);
        let consistent = snc == ii && snc == swnc_tn[2] && snc == gswnc_t3;
        out.push(Obs::new(format!("R = {}", base.label), true, consistent).detail(format!(
            "SNC(R) {snc}; SWNC(T_n(R)) for n = 1,2,3: {swnc_tn:?}; GSWNC(T3(R)) {gswnc_t3}"
        )));
    }
    Ok(out)
}

fn ex_t2_z3(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let t = cat.node(&"T2(Z3)".parse()?);
    let z3 = cat.node(&"Z3".parse()?);
    let snc = is_snc_ring(z3.ring()?)?;
    Ok(vec![Obs::new(&t.label, true, t.gswnc()? && !snc.holds)
        .detail("T2(Z3) GSWNC, Z3 not SNC")
        .witness(snc.counterexample.into_iter().collect())])
}

fn lemma_2_10(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    all(cat)
        .iter()
        .map(|n| {
            let r = n.ring()?;
            let j = jacobson_radical(r);
            let bad: Vec<Elem> = j.iter().filter(|&a| !is_nilpotent(r, a)).take(1).collect();
            Ok(Obs::new(&n.label, n.gswnc()?, bad.is_empty())
                .detail(format!("|J| = {}", j.len()))
                .witness(bad))
        })
        .collect()
}

fn prop_2_11(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    all(cat)
        .iter()
        .map(|n| {
            let o = match n.gswnc_verdict() {
                Ok(v) => Obs::new(&n.label, true, true)
                    .detail(format!("both paths: GSWNC {}", v.holds))
                    .witness(v.counterexample.into_iter().collect()),
                Err(e) => Obs::new(&n.label, true, false).detail(e.to_string()),
            };
            Ok(o)
        })
        .collect()
}

fn cor_2_12(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if !n.gswnc()? {
            out.push(Obs::new(&n.label, false, false));
            continue;
        }
        let v = classify::is_strongly_pi_regular(n.ring()?);
        out.push(Obs::new(&n.label, true, v.holds).witness(v.counterexample.into_iter().collect()));
    }
    Ok(out)
}

fn prop_2_13_i(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let r = n.ring()?;
        if r.size() > IDEAL_SCAN_LIMIT {
            continue;
        }
        for i in nil_ideals(r) {
            let q = quotient_gswnc(r, &i)?;
            let gen = i.members()[1];
            out.push(
                Obs::iff(format!("{} / <{}>", n.label, r.describe(gen)), dir, n.gswnc()?, q)
                    .detail(format!("|I| = {}", i.len()))
                    .witness(vec![gen]),
            );
        }
    }
    Ok(out)
}

fn prop_2_13_ii(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let r = n.ring()?;
        let j = jacobson_radical(r);
        let j_nil = ideal_is_nil(r, j);
        let q = if j.len() == 1 { n.gswnc()? } else { quotient_gswnc(r, j)? };
        out.push(
            Obs::iff(&n.label, dir, n.gswnc()?, j_nil && q)
                .detail(format!("|J| = {}, J nil {j_nil}, R/J GSWNC {q}", j.len())),
        );
    }
    Ok(out)
}

fn lemma_2_14(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if !n.gswnc()? {
            out.push(Obs::new(&n.label, false, false));
            continue;
        }
        let r = n.ring()?;
        let mut corners = 0;
        let mut failure = None;
        for e in idempotents(r).iter() {
            if e == r.zero() {
                continue;
            }
            corners += 1;
            if !is_gswnc(&corner_ring(r, e)?.ring)?.holds {
                failure = Some(e);
                break;
            }
        }
        out.push(
            Obs::new(&n.label, true, failure.is_none())
                .detail(format!("{corners} corners"))
                .witness(failure.into_iter().collect()),
        );
    }
    Ok(out)
}

fn cor_2_17(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if let RingExpr::TrivialExt(b) = &n.expr {
            let base = cat.node(b);
            out.push(Obs::iff(&n.label, dir, base.gswnc()?, n.gswnc()?));
        }
    }
    for (label, base, te) in extra_trivial_extensions()? {
        out.push(Obs::iff(label, dir, is_gswnc(&base)?.holds, is_gswnc(&te)?.holds));
    }
    Ok(out)
}

fn cor_2_20(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if let RingExpr::Skew(_, b, _) = &n.expr {
            out.push(Obs::iff(&n.label, dir, cat.node(b).gswnc()?, n.gswnc()?));
        }
    }
    Ok(out)
}

fn cor_2_57(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if let RingExpr::EqualDiag(_, b) = &n.expr {
            out.push(Obs::iff(&n.label, dir, cat.node(b).gswnc()?, n.gswnc()?));
        }
    }
    Ok(out)
}

fn ex_2_24(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let n = cat.node(&"M2(Z2)".parse()?);
    let r = n.ring()?;
    let (u, id) = (units(r), idempotents(r));
    let uncovered: Vec<Elem> = r
        .elements()
        .filter(|&a| !u.contains(a) && !id.contains(a) && !is_nilpotent(r, a))
        .collect();
    let swnc = n.swnc()?;
    Ok(vec![Obs::new(&n.label, true, uncovered.is_empty() && n.gswnc()? && !swnc)
        .detail(format!("uncovered elements: {}, SWNC {swnc}", uncovered.len()))
        .witness(uncovered)])
}

fn ex_2_24a(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if let RingExpr::Matrix(2, b) = &n.expr {
            if let RingExpr::Zmod(m) = **b {
                if m > 1 && m.is_power_of_two() {
                    out.push(Obs::new(&n.label, true, n.gswnc()?));
                }
            }
        }
    }
    Ok(out)
}

fn thm_2_25(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let RingExpr::Matrix(dim, _) = n.expr else { continue };
        if dim < 3 {
            continue;
        }
        let r = n.ring()?;
        if r.is_zero_ring() {
            continue;
        }
        // A = E11 + E12 + E21
        let radix_base: Vec<Elem> = (0..dim * dim)
            .map(|k| match (k / dim, k % dim) {
                (0, 0) | (0, 1) | (1, 0) => 1,
                _ => 0,
            })
            .collect();
        let base = match &n.expr {
            RingExpr::Matrix(_, b) => cat.node(b),
            _ => unreachable!(),
        };
        let br = base.ring()?;
        let comps: Vec<Elem> = radix_base.iter().map(|&x| if x == 1 { br.one() } else { br.zero() }).collect();
        let a = r.from_components(&comps)?;
        let sq = r.square(a);
        let fails = !units(r).contains(a)
            && !is_nilpotent(r, r.add(a, sq))
            && !is_nilpotent(r, r.sub(a, sq));
        let first = n.gswnc_verdict()?.counterexample;
        out.push(
            Obs::new(&n.label, true, fails && !n.gswnc()?)
                .detail(format!(
                    "A = {} is a non-unit with A + A^2 and A - A^2 not nilpotent: {fails}; first counterexample {}",
                    r.describe(a),
                    first.map_or("none".into(), |c| r.describe(c))
                ))
                .witness([a].into_iter().chain(first).collect()),
        );
    }
    Ok(out)
}

fn cor_2_35(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if !n.gswnc()? {
            out.push(Obs::new(&n.label, false, false));
            continue;
        }
        let units3 = find_matrix_units_3(n.ring()?);
        out.push(
            Obs::new(&n.label, true, units3.is_none())
                .detail(if units3.is_none() { "no 3x3 matrix units" } else { "3x3 matrix units found" })
                .witness(units3.map(|u| u.to_vec()).unwrap_or_default()),
        );
    }
    Ok(out)
}

fn cor_2_36(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if !n.gswnc()? {
            out.push(Obs::new(&n.label, false, false));
            continue;
        }
        let v = classify::is_dedekind_finite(n.ring()?);
        out.push(Obs::new(&n.label, true, v.holds).witness(v.counterexample.into_iter().collect()));
    }
    Ok(out)
}

fn lemma_2_26(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if let RingExpr::Matrix(2, b) = &n.expr {
            let base = cat.node(b);
            out.push(Obs::new(&n.label, n.gswnc()?, base.swnc()?));
        }
    }
    Ok(out)
}

fn lemma_2_27(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    all(cat)
        .iter()
        .map(|n| Ok(Obs::new(&n.label, n.local()? && n.j_nil()?, n.gswnc()?)))
        .collect()
}

fn cor_2_50(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if !classify::has_only_trivial_idempotents(n.ring()?).holds {
            continue;
        }
        out.push(Obs::iff(&n.label, dir, n.gswnc()?, n.local()? && n.j_nil()?));
    }
    Ok(out)
}

fn lemma_2_55(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    all(cat)
        .iter()
        .map(|n| {
            let premise = n.gswnc()? && !n.int_is_unit(2)?;
            let (two, six) = (n.int_is_nilpotent(2)?, n.int_is_nilpotent(6)?);
            Ok(Obs::new(&n.label, premise, two || six)
                .detail(format!("2 nilpotent {two}, 6 nilpotent {six}")))
        })
        .collect()
}

fn lemma_2_29(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if !n.contains_in_jacobson(two(&n)?)? {
            continue;
        }
        out.push(Obs::iff(&n.label, dir, n.gswnc()?, n.gsnc()?));
    }
    Ok(out)
}

fn lemma_2_56(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if n.int_is_unit(2)? {
            continue;
        }
        let (gsnc, swnc) = (n.gsnc()?, n.swnc()?);
        out.push(
            Obs::iff(&n.label, dir, n.gswnc()?, gsnc || swnc)
                .detail(format!("GSNC {gsnc}, SWNC {swnc}")),
        );
    }
    Ok(out)
}

fn lemma_2_30(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    all(cat)
        .iter()
        .map(|n| {
            let wuu = classify::is_wuu(n.ring()?).holds;
            Ok(Obs::iff(&n.label, dir, n.swnc()?, wuu && n.gswnc()?).detail(format!("WUU {wuu}")))
        })
        .collect()
}

fn lemma_2_31(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    all(cat)
        .iter()
        .map(|n| {
            let uu = classify::is_uu(n.ring()?).holds;
            Ok(Obs::iff(&n.label, dir, n.snc()?, uu && n.gswnc()?).detail(format!("UU {uu}")))
        })
        .collect()
}

fn thm_2_38(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if let RingExpr::Matrix(2, b) = &n.expr {
            let base = cat.node(b);
            let premise = classify::is_2_primal(base.ring()?).holds && base.local()? && base.swnc()?;
            out.push(Obs::new(&n.label, premise, n.gswnc()?));
        }
    }
    Ok(out)
}

/// Which of the five branches hold for `n`, plus notes on fingerprint
/// collisions that turned out not to be isomorphisms.
fn branches(cat: &Catalog, n: &Node) -> Result<(Vec<&'static str>, Vec<String>)> {
    let r = n.ring()?;
    let mut held = Vec::new();
    let mut notes = Vec::new();
    let j_nil = n.j_nil()?;
    if n.local()? && j_nil {
        held.push("local with nil J");
    }
    let j = jacobson_radical(r);
    let quot = if j.len() == 1 { r.clone() } else { quotient(r, j)? };
    for (name, target) in [("R/J = M2(Z2)", "M2(Z2)"), ("R/J = M2(Z3)", "M2(Z3)"), ("R/J = Z3 x Z3", "Z3 x Z3")] {
        let t = cat.node(&target.parse()?);
        match find_isomorphism(&quot, t.ring()?)? {
            IsoOutcome::Isomorphic(_) if j_nil => held.push(name),
            IsoOutcome::Isomorphic(_) | IsoOutcome::FingerprintMismatch => {}
            IsoOutcome::NotIsomorphic => notes.push(format!("fingerprint collision with {target}, not isomorphic")),
        }
    }
    if n.swnc()? {
        held.push("strongly weakly nil-clean");
    }
    Ok((held, notes))
}

fn thm_2_36(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let (held, notes) = branches(cat, &n)?;
        let mut detail = if held.is_empty() { "no branch".to_string() } else { held.join("; ") };
        for note in notes {
            detail.push_str("; ");
            detail.push_str(&note);
        }
        out.push(Obs::iff(&n.label, dir, n.gswnc()?, !held.is_empty()).detail(detail));
    }
    Ok(out)
}

fn cor_2_39(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let r = n.ring()?;
        if r.is_zero_ring() || jacobson_radical(r).len() != 1 {
            continue;
        }
        let mut shapes = Vec::new();
        if classify::is_division_ring(r).holds {
            shapes.push("division ring".to_string());
        }
        for target in ["M2(Z2)", "M2(Z3)", "Z3 x Z3"] {
            let t = cat.node(&target.parse()?);
            if let IsoOutcome::Isomorphic(_) = find_isomorphism(r, t.ring()?)? {
                shapes.push(format!("isomorphic to {target}"));
            }
        }
        if n.swnc()? {
            shapes.push("strongly weakly nil-clean".into());
        }
        let detail = if shapes.is_empty() { "no shape".into() } else { shapes.join("; ") };
        out.push(Obs::iff(&n.label, dir, n.gswnc()?, !shapes.is_empty()).detail(detail));
    }
    Ok(out)
}

fn lemma_2_49(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    all(cat)
        .iter()
        .map(|n| {
            let r = n.ring()?;
            let involutive = units(r).iter().all(|u| r.square(u) == r.one());
            let premise = n.gswnc()? && n.int_is_unit(2)? && involutive;
            Ok(Obs::new(&n.label, premise, premise && classify::is_commutative(r).holds))
        })
        .collect()
}

/// `K_s(R)` entries with `s` central and nilpotent, as Morita contexts
/// `[[R, R], [R, R]]` with `MN = NM = sR`.
fn ks_entries(cat: &Catalog) -> Result<Vec<(Arc<Node>, Arc<Node>)>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if let RingExpr::Ks(b, s) = &n.expr {
            let base = cat.node(b);
            let br = base.ring()?;
            let s = s.resolve(br)?;
            if crate::subsets::center(br).contains(s) && is_nilpotent(br, s) {
                out.push((n, base));
            }
        }
    }
    Ok(out)
}

/// Shared shape of the Morita-context results: forward, GSWNC implies both
/// corners SWNC; converse, one corner SNC and the other SWNC implies GSWNC.
fn morita_obs(label: &str, dir: Dir, gswnc: bool, a: &Node, b: &Node) -> Result<Obs> {
    let (a_sw, b_sw, a_snc, b_snc) = (a.swnc()?, b.swnc()?, a.snc()?, b.snc()?);
    let detail = format!(
        "{}: SWNC {a_sw}, SNC {a_snc}; {}: SWNC {b_sw}, SNC {b_snc}",
        a.label, b.label
    );
    Ok(match dir {
        Fwd => Obs::new(label, gswnc, a_sw && b_sw),
        Rev => Obs::new(label, (a_snc && b_sw) || (b_snc && a_sw), gswnc),
    }
    .detail(detail))
}

fn prop_2_41(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for (n, base) in ks_entries(cat)? {
        out.push(morita_obs(&n.label, dir, n.gswnc()?, &base, &base)?);
    }
    for (a, b, k) in [(4, 2, 2), (3, 3, 3), (2, 6, 2)] {
        let r = trivial_morita_zmod(a, b, k)?;
        let (na, nb) = (cat.node(&RingExpr::Zmod(a)), cat.node(&RingExpr::Zmod(b)));
        out.push(morita_obs(r.label(), dir, is_gswnc(&r)?.holds, &na, &nb)?);
    }
    Ok(out)
}

fn cor_2_42(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        if let RingExpr::Upper(2, b) = &n.expr {
            let base = cat.node(b);
            out.push(morita_obs(&n.label, dir, n.gswnc()?, &base, &base)?);
        }
    }
    for (a, b, k) in [(4, 2, 2), (2, 4, 2), (4, 8, 4), (3, 6, 3), (2, 6, 2), (3, 9, 3)] {
        let r = formal_triangular_zmod(a, b, k)?;
        let (na, nb) = (cat.node(&RingExpr::Zmod(a)), cat.node(&RingExpr::Zmod(b)));
        out.push(morita_obs(r.label(), dir, is_gswnc(&r)?.holds, &na, &nb)?);
    }
    Ok(out)
}

fn cor_2_43(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for (n, base) in ks_entries(cat)? {
        let o = match dir {
            Fwd => Obs::new(&n.label, n.gswnc()?, base.swnc()?),
            Rev => Obs::new(&n.label, base.snc()?, n.gswnc()?),
        };
        out.push(o);
    }
    Ok(out)
}

fn cor_2_44(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let RingExpr::Mns(_, b, s) = &n.expr else { continue };
        let base = cat.node(b);
        let br = base.ring()?;
        let s = s.resolve(br)?;
        if !crate::subsets::center(br).contains(s) || !is_nilpotent(br, s) {
            continue;
        }
        let o = match dir {
            Fwd => Obs::new(&n.label, n.gswnc()?, base.swnc()?),
            Rev => Obs::new(&n.label, base.snc()?, n.gswnc()?),
        };
        out.push(o);
    }
    Ok(out)
}

fn cor_2_44_tables(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for n in all(cat) {
        let RingExpr::Mns(2, b, s) = &n.expr else { continue };
        let br = cat.node(b).ring()?.clone();
        let s2 = br.square(s.resolve(&br)?);
        let k = crate::ring::formal_matrix_ks(&br, s2)?;
        let r = n.ring()?;
        let identity: Vec<Elem> = r.elements().collect();
        out.push(
            Obs::new(format!("{} vs {}", n.label, k.label()), true, is_isomorphism(r, &k, &identity))
                .detail("identity map on row-major entries"),
        );
    }
    Ok(out)
}

fn cor_2_45(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for m in [2, 3, 4] {
        let base = cat.node(&RingExpr::Zmod(m));
        let (te, k0, map) = trivial_morita_square(base.ring()?)?;
        let iso = is_isomorphism(&k0, &te, &map);
        let mut o = morita_obs(te.label(), dir, is_gswnc(&te)?.holds, &base, &base)?;
        if !iso {
            o.conclusion = false;
        }
        o.detail = format!("{}; isomorphic to K(Z{m}, 0): {iso}", o.detail);
        out.push(o);
    }
    for (a, b, k) in [(4, 2, 2), (3, 6, 3), (9, 3, 3)] {
        let r = trivial_morita_zmod(a, b, k)?;
        let (na, nb) = (cat.node(&RingExpr::Zmod(a)), cat.node(&RingExpr::Zmod(b)));
        out.push(morita_obs(r.label(), dir, is_gswnc(&r)?.holds, &na, &nb)?);
    }
    Ok(out)
}

// ---- group rings ----

fn lemma_3_1(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    group_rings(cat)?
        .iter()
        .map(|c| Ok(Obs::new(&c.label, c.node.gswnc()?, c.base.gswnc()?)))
        .collect()
}

fn lemma_3_2(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        let Some(p) = group_prime(&c.group) else { continue };
        let premise = c.base.gswnc()? && c.base.int_is_nilpotent(p as i64)?;
        out.push(Obs::new(&c.label, premise, c.node.gswnc()?).detail(format!("p = {p}")));
    }
    Ok(out)
}

fn lemma_3_5(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        let gr = c.gr()?;
        let r = gr.ring();
        let delta = gr.augmentation_ideal();
        if !meets_idempotents_trivially(r, &delta) {
            continue;
        }
        let nil = ideal_is_nil(r, &delta);
        out.push(
            Obs::iff(format!("augmentation {} -> {}", c.label, c.base.label), dir, c.node.gswnc()?, c.base.gswnc()? && nil)
                .detail(format!("kernel nil {nil}")),
        );
    }
    for n in all(cat) {
        let r = n.ring()?;
        if r.size() > IDEAL_SCAN_LIMIT || r.is_zero_ring() {
            continue;
        }
        for i in nil_ideals(r) {
            if i.len() == r.size() || !meets_idempotents_trivially(r, &i) {
                continue;
            }
            let nil = ideal_is_nil(r, &i);
            let gen = i.members()[1];
            out.push(
                Obs::iff(format!("{} -> {} / <{}>", n.label, n.label, r.describe(gen)), dir, n.gswnc()?, quotient_gswnc(r, &i)? && nil)
                    .detail(format!("|kernel| = {}, nil {nil}", i.len()))
                    .witness(vec![gen]),
            );
        }
    }
    Ok(out)
}

fn cor_3_6(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        let gr = c.gr()?;
        let delta = gr.augmentation_ideal();
        if !meets_idempotents_trivially(gr.ring(), &delta) {
            continue;
        }
        let nil = ideal_is_nil(gr.ring(), &delta);
        out.push(
            Obs::iff(&c.label, dir, c.node.gswnc()?, c.base.gswnc()? && nil)
                .detail(format!("augmentation ideal nil {nil}")),
        );
    }
    Ok(out)
}

fn lemma_3_7(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        let Some(p) = group_prime(&c.group) else { continue };
        let br = c.base.ring()?;
        let premise = jacobson_radical(br).contains(br.int(p as i64));
        out.push(Obs::new(&c.label, premise, delta_in_jacobson(&c)?).detail(format!("p = {p}")));
    }
    Ok(out)
}

fn lemma_3_8(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        let Some(p) = group_prime(&c.group) else { continue };
        let br = c.base.ring()?;
        if !jacobson_radical(br).contains(br.int(p as i64)) {
            continue;
        }
        let gr = c.gr()?;
        let nil = ideal_is_nil(gr.ring(), &gr.augmentation_ideal());
        out.push(
            Obs::iff(&c.label, dir, c.node.gswnc()?, c.base.gswnc()? && nil)
                .detail(format!("p = {p}, augmentation ideal nil {nil}")),
        );
    }
    Ok(out)
}

fn lemma_rg_j(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        let premise = c.base.gswnc()? && delta_in_jacobson(&c)?;
        if !premise {
            out.push(Obs::new(&c.label, false, false));
            continue;
        }
        let r = c.node.ring()?;
        let j = jacobson_radical(r);
        out.push(Obs::new(&c.label, true, quotient_gswnc(r, j)?).detail(format!("|J(RG)| = {}", j.len())));
    }
    Ok(out)
}

fn thm_3_3(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        if c.group.is_trivial() {
            continue;
        }
        let premise = !c.base.int_is_unit(2)? && c.node.gswnc()?;
        let two_group = is_p_group(&c.group, 2);
        let two_nil = c.base.int_is_nilpotent(2)?;
        out.push(
            Obs::new(&c.label, premise, two_group && two_nil)
                .detail(format!("G a 2-group {two_group}, 2 nilpotent in R {two_nil}")),
        );
    }
    Ok(out)
}

fn ex_3_4(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        let RingExpr::Zmod(m) = *c.base_expr() else { continue };
        if c.group.is_trivial() || m % 2 != 0 {
            continue;
        }
        let rhs = m.is_power_of_two() && is_p_group(&c.group, 2);
        out.push(Obs::iff(&c.label, dir, c.node.gswnc()?, rhs).detail(format!(
            "m = {m}, G a 2-group {}",
            is_p_group(&c.group, 2)
        )));
    }
    Ok(out)
}

fn lemma_3_9(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        let premise = !c.base.int_is_unit(2)? && c.node.gsnc()?;
        let z = group_center(&c.group);
        let two = z.iter().all(|&g| c.group.order_of(g).is_power_of_two());
        out.push(Obs::new(&c.label, premise, two).detail(format!("|Z(G)| = {}", z.len())));
    }
    Ok(out)
}

fn nilpotent_two_nonunit(c: &GroupRingCase) -> Result<bool> {
    Ok(!c.group.is_trivial() && !c.base.int_is_unit(2)? && is_nilpotent_group(&c.group))
}

fn lemma_3_11(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        if !nilpotent_two_nonunit(&c)? {
            continue;
        }
        let rhs = c.base.gsnc()? && is_p_group(&c.group, 2);
        out.push(Obs::iff(&c.label, dir, c.node.gsnc()?, rhs));
    }
    Ok(out)
}

fn thm_3_12(cat: &Catalog, dir: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        if !nilpotent_two_nonunit(&c)? {
            continue;
        }
        let (gsnc, two) = (c.base.gsnc()?, is_p_group(&c.group, 2));
        out.push(
            Obs::iff(&c.label, dir, c.node.gswnc()?, gsnc && two)
                .detail(format!("R GSNC {gsnc}, G a 2-group {two}")),
        );
    }
    Ok(out)
}

fn aug_quotient(cat: &Catalog, _: Dir) -> Result<Vec<Obs>> {
    let mut out = Vec::new();
    for c in group_rings(cat)? {
        let gr = c.gr()?;
        let q = quotient_map(gr.ring(), &gr.augmentation_ideal())?;
        let base = c.base.ring()?;
        let map: Vec<Elem> = base.elements().map(|r| q.projection[gr.embed(r)]).collect();
        out.push(Obs::new(&c.label, true, is_isomorphism(base, &q.ring, &map)));
    }
    Ok(out)
}
