//! Acceptance criteria. Each criterion prints one PASS/FAIL line; any FAIL
//! makes the target exit non-zero.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use common::{
    base_ring, generalized_matrices, group_ring, ks, matrices, skew_truncated, trivial_extension, Base, Brute, Shape,
};
use ringlab::classify::{self, is_gswnc, plus_minus_criterion, swnc_decompose};
use ringlab::expr::build;
use ringlab::harness::{self, default_catalog, Status};
use ringlab::ring::quotient_map;
use ringlab::structure::is_isomorphism;
use ringlab::subsets::{idempotents, is_nilpotent, is_unit, nilpotent_set, units};
use ringlab::FiniteRing;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn ring(text: &str) -> Result<std::sync::Arc<FiniteRing>, String> {
    build(text).map(|b| b.ring).map_err(|e| format!("{text}: {e}"))
}

fn gswnc(r: &FiniteRing) -> Result<bool, String> {
    is_gswnc(r).map(|v| v.holds).map_err(|e| e.to_string())
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:.2?}, limit {limit:?}");
    Ok(took)
}

fn c01_m2z2() -> Outcome {
    let t = Instant::now();
    let r = ring("M2(Z2)")?;
    let report = classify::classify(&r).map_err(|e| e.to_string())?;
    let covered = r
        .elements()
        .filter(|&a| units(&r).contains(a) || idempotents(&r).contains(a) || is_nilpotent(&r, a))
        .count();
    let took = within(t, Duration::from_secs(1), "classify M2(Z2)")?;
    ensure!(report.holds("gswnc"), "M2(Z2) not GSWNC");
    ensure!(!report.holds("swnc"), "M2(Z2) reported strongly weakly nil-clean");
    ensure!(covered == 16, "U, Id, Nil cover {covered} of 16");

    let o = matrices(&Base::zmod(2), 2, Shape::Full);
    let o_cov = o
        .elems
        .iter()
        .filter(|a| o.is_unit(a) || o.is_idempotent(a) || o.is_nilpotent(a))
        .count();
    ensure!(o.gswnc() && !o.swnc() && o_cov == 16, "oracle disagrees on M2(Z2)");
    ensure!(
        units(&r).len() == o.units().len()
            && idempotents(&r).len() == o.idempotents().len()
            && nilpotent_set(&r).len() == o.nilpotents().len(),
        "subset sizes differ from oracle"
    );
    Ok(format!("GSWNC, not SWNC, |U ∪ Id ∪ Nil| = 16 ({took:.0?})"))
}

fn c02_m3z2() -> Outcome {
    let t = Instant::now();
    let r = ring("M3(Z2)")?;
    let verdict = is_gswnc(&r).map_err(|e| e.to_string())?;
    let comps = [1, 1, 0, 1, 0, 0, 0, 0, 0];
    let a = r.from_components(&comps).map_err(|e| e.to_string())?;
    let sq = r.square(a);
    let a_fails = !is_unit(&r, a) && !is_nilpotent(&r, r.add(a, sq)) && !is_nilpotent(&r, r.sub(a, sq));
    let check = harness::run_check("Thm-2.25", &default_catalog()).map_err(|e| e.to_string())?;
    let took = within(t, Duration::from_secs(1), "M3(Z2)")?;
    ensure!(!verdict.holds && verdict.counterexample.is_some(), "M3(Z2) reported GSWNC");
    ensure!(a_fails, "A does not fail both tests");
    ensure!(
        check.status == Status::Pass && check.instances.iter().any(|i| i.witness.first() == Some(&a)),
        "harness did not record A"
    );

    let o = matrices(&Base::zmod(2), 3, Shape::Full);
    let av: Vec<u64> = comps.iter().map(|&c| c as u64).collect();
    let asq = o.mul(&av, &av);
    ensure!(
        !o.is_unit(&av) && !o.is_nilpotent(&o.add(&av, &asq)) && !o.is_nilpotent(&o.sub(&av, &asq)),
        "oracle: A is not a counterexample"
    );
    ensure!(!o.gswnc(), "oracle finds M3(Z2) GSWNC");
    Ok(format!("not GSWNC, A = {} fails A ± A² nilpotent ({took:.0?})", r.describe(a)))
}

fn c03_section_examples() -> Outcome {
    let z = Base::zmod;
    let cases: [(&str, Brute, bool); 5] = [
        ("M2(Z3)", matrices(&z(3), 2, Shape::Full), true),
        ("Z3 x Z3", base_ring(&Base::zmod_product(&[3, 3])), true),
        ("Z2 x Z3", base_ring(&Base::zmod_product(&[2, 3])), true),
        ("M2(Z4)", matrices(&z(4), 2, Shape::Full), false),
        ("M2(Z8)", matrices(&z(8), 2, Shape::Full), false),
    ];
    let mut slowest = Duration::ZERO;
    for (label, oracle, check_gsnc) in cases {
        let t = Instant::now();
        let r = ring(label)?;
        let g = gswnc(&r)?;
        let gsnc = if check_gsnc {
            Some(classify::is_gsnc(&r).map_err(|e| e.to_string())?.holds)
        } else {
            None
        };
        slowest = slowest.max(within(t, Duration::from_secs(10), label)?);
        ensure!(g, "{label} not GSWNC");
        ensure!(oracle.gswnc(), "oracle: {label} not GSWNC");
        if let Some(gsnc) = gsnc {
            ensure!(!gsnc && !oracle.gsnc(), "{label} GSNC");
        }
    }
    Ok(format!("M2(Z3), Z3 x Z3, Z2 x Z3 GSWNC not GSNC; M2(Z4), M2(Z8) GSWNC (slowest {slowest:.0?})"))
}

fn c04_two_path() -> Outcome {
    let t = Instant::now();
    let cat = default_catalog();
    let mut elements = 0;
    for node in cat.nodes() {
        let r = node.ring().map_err(|e| e.to_string())?;
        for a in r.elements().filter(|&a| !is_unit(r, a)) {
            elements += 1;
            ensure!(
                plus_minus_criterion(r, a) == swnc_decompose(r, a).is_some(),
                "{}: paths disagree at {}",
                node.label,
                r.describe(a)
            );
        }
        is_gswnc(r).map_err(|e| format!("{}: {e}", node.label))?;
    }
    let took = within(t, Duration::from_secs(60), "two-path sweep")?;
    Ok(format!("{} rings, {elements} non-units agree ({took:.1?})", cat.entries().len()))
}

fn c05_implications() -> Outcome {
    let ids = [
        "Cor-2.3", "Cor-2.12", "Cor-2.36", "Lemma-2.10", "Lemma-2.30-fwd", "Lemma-2.30-rev",
        "Lemma-2.31-fwd", "Lemma-2.31-rev", "Lemma-2.55", "Prop-2.5", "Cor-2.50-fwd",
        "Cor-2.50-rev", "Lemma-2.49", "Lemma-2.2", "Lemma-2.14",
    ];
    let results = harness::run_checks(&ids, &default_catalog(), false).map_err(|e| e.to_string())?;
    let mut instances = 0;
    for r in &results {
        ensure!(r.status == Status::Pass, "{} is {}", r.id, r.status.as_str());
        instances += r.applicable;
    }
    Ok(format!("{} checks, {instances} instances, no violations", ids.len()))
}

fn c06_triple_products() -> Outcome {
    for (label, mods, expected) in [("Z2 x Z2 x Z3", [2, 2, 3], true), ("Z2 x Z3 x Z3", [2, 3, 3], false)] {
        let r = ring(label)?;
        let lib = gswnc(&r)?;
        let oracle = base_ring(&Base::zmod_product(&mods)).gswnc();
        ensure!(lib == expected && oracle == expected, "{label}: library {lib}, oracle {oracle}");
    }
    Ok("Z2 x Z2 x Z3 GSWNC, Z2 x Z3 x Z3 not".into())
}

fn c07_constructions() -> Outcome {
    let pairs: Vec<(&str, &str, Brute, Brute)> = vec![
        ("Z4", "TE(Z4)", base_ring(&Base::zmod(4)), trivial_extension(&Base::zmod(4))),
        (
            "Z3 x Z3",
            "TE(Z3 x Z3)",
            base_ring(&Base::zmod_product(&[3, 3])),
            trivial_extension(&Base::zmod_product(&[3, 3])),
        ),
        (
            "GF(2,2)",
            "Tskew2(GF(2,2), frobenius)",
            base_ring(&Base::gf4()),
            skew_truncated(&Base::gf4_frobenius(), 2),
        ),
        ("Z4", "Tskew2(Z4, identity)", base_ring(&Base::zmod(4)), skew_truncated(&Base::zmod(4), 2)),
        ("Z3", "S2(Z3)", base_ring(&Base::zmod(3)), matrices(&Base::zmod(3), 2, Shape::EqualDiag)),
        ("Z4", "S2(Z4)", base_ring(&Base::zmod(4)), matrices(&Base::zmod(4), 2, Shape::EqualDiag)),
    ];
    for (base, built, ob, oc) in pairs {
        let (lb, lc) = (gswnc(&*ring(base)?)?, gswnc(&*ring(built)?)?);
        let (vb, vc) = (ob.gswnc(), oc.gswnc());
        ensure!(lb == lc, "{base} GSWNC {lb} but {built} GSWNC {lc}");
        ensure!(lb == vb && lc == vc, "{built}: oracle ({vb}, {vc}) vs library ({lb}, {lc})");
    }

    let k = ring("K(Z4, 2)")?;
    ensure!(gswnc(&k)? && ks(&Base::zmod(4), &[2]).gswnc(), "K(Z4, 2) not GSWNC");

    let (mf, k0) = (ring("MF2(Z4, 2)")?, ring("K(Z4, 0)")?);
    let identity: Vec<usize> = mf.elements().collect();
    ensure!(is_isomorphism(&mf, &k0, &identity), "MF2(Z4, 2) and K(Z4, 0) tables differ");
    let (om, ok0) = (generalized_matrices(&Base::zmod(4), 2, &[2]), ks(&Base::zmod(4), &[0]));
    for a in &om.elems {
        for b in &om.elems {
            ensure!(om.mul(a, b) == ok0.mul(a, b), "oracle tables differ at {a:?} {b:?}");
        }
    }
    Ok("TE, Tskew2, S2 preserve GSWNC both ways; K(Z4, 2) GSWNC; MF2(Z4, 2) = K(Z4, 0)".into())
}

fn c08_upper_triangular() -> Outcome {
    let t = Instant::now();
    let (t2, t3) = (ring("T3(Z2)")?, ring("T3(Z3)")?);
    let (g2, g3) = (gswnc(&t2)?, gswnc(&t3)?);
    let took = within(t, Duration::from_secs(5), "T3 rings")?;
    ensure!(g2 && !g3, "T3(Z2) {g2}, T3(Z3) {g3}");
    ensure!(
        matrices(&Base::zmod(2), 3, Shape::Upper).gswnc() && !matrices(&Base::zmod(3), 3, Shape::Upper).gswnc(),
        "oracle disagrees on T3"
    );
    ensure!(
        base_ring(&Base::zmod(2)).snc() && !base_ring(&Base::zmod(3)).snc(),
        "oracle: strong nil-cleanness of Z2, Z3"
    );
    Ok(format!("T3(Z2) GSWNC, T3(Z3) not ({took:.0?})"))
}

fn c09_branches() -> Outcome {
    let cat = default_catalog();
    let check = harness::run_check("Thm-2.36-fwd", &cat).map_err(|e| e.to_string())?;
    ensure!(check.status == Status::Pass, "branch check {}", check.status.as_str());
    let mut gswnc_rings = 0;
    for node in cat.nodes() {
        gswnc_rings += usize::from(node.gswnc().map_err(|e| e.to_string())?);
    }
    ensure!(check.applicable == gswnc_rings, "{} instances for {gswnc_rings} GSWNC rings", check.applicable);
    let by_iso = check
        .instances
        .iter()
        .filter(|i| i.detail.contains("R/J = "))
        .count();
    let t2z3 = check.instances.iter().find(|i| i.label == "T2(Z3)");
    ensure!(
        t2z3.is_some_and(|i| i.detail.contains("R/J = Z3 x Z3")),
        "T2(Z3) not matched to Z3 x Z3"
    );
    Ok(format!("{gswnc_rings} GSWNC rings covered, {by_iso} through a certified isomorphism"))
}

fn c10_group_rings() -> Outcome {
    let t = Instant::now();
    let cases = [
        ("GR(Z2, C2)", 2, common::cyclic_table(2), true),
        ("GR(Z4, C2)", 4, common::cyclic_table(2), true),
        ("GR(Z2, C2 x C2)", 2, common::klein_table(), true),
        ("GR(Z2, C3)", 2, common::cyclic_table(3), false),
        ("GR(Z6, C2)", 6, common::cyclic_table(2), false),
        ("GR(Z3, C3)", 3, common::cyclic_table(3), true),
    ];
    for (i, (label, m, table, expected)) in cases.iter().enumerate() {
        let built = build(label).map_err(|e| e.to_string())?;
        let gr = built.group_ring.as_ref().expect("group ring");
        let r = gr.ring();
        let g = gswnc(r)?;
        let oracle = group_ring(*m, table);
        ensure!(g == *expected && oracle.gswnc() == *expected, "{label}: library {g}, expected {expected}");

        let two_unit = is_unit(gr.coefficient_ring(), gr.coefficient_ring().int(2));
        let two_nil = is_nilpotent(gr.coefficient_ring(), gr.coefficient_ring().int(2));
        let two_group = table.len().is_power_of_two();
        if i < 5 {
            if !two_unit && g {
                ensure!(two_group && two_nil, "{label} contradicts the 2-group conclusion");
            }
            if m % 2 == 0 {
                ensure!(g == (m.is_power_of_two() && two_group), "{label} contradicts the Z_m G characterization");
            }
        }

        let delta = gr.augmentation_ideal();
        if *label == "GR(Z2, C2)" || *label == "GR(Z4, C2)" {
            ensure!(delta.iter().all(|x| is_nilpotent(r, x)), "augmentation ideal of {label} not nil");
            let kernel: Vec<_> = oracle.elems.iter().filter(|x| x.iter().sum::<u64>() % m == 0).collect();
            ensure!(kernel.iter().all(|x| oracle.is_nilpotent(x)), "oracle: augmentation ideal of {label} not nil");
        }
        let q = quotient_map(r, &delta).map_err(|e| e.to_string())?;
        let base = gr.coefficient_ring();
        let map: Vec<usize> = base.elements().map(|x| q.projection[gr.embed(x)]).collect();
        ensure!(is_isomorphism(base, &q.ring, &map), "{label}: RG/Δ is not R");
    }
    let took = within(t, Duration::from_secs(5), "group rings")?;
    Ok(format!("six verdicts match, augmentation checks hold ({took:.0?})"))
}

fn c11_harness_gate() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_ringlab");
    let t = Instant::now();
    let run = || {
        Command::new(exe)
            .args(["verify", "--check", "all", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let first = run()?;
    let took = within(t, Duration::from_secs(300), "verify all")?;
    let second = run()?;
    ensure!(first.status.code() == Some(0), "exit status {:?}", first.status.code());
    ensure!(first.stdout == second.stdout, "reports differ between runs");
    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).map_err(|e| e.to_string())?;
    ensure!(doc["schema_version"] == 1, "schema version {}", doc["schema_version"]);
    let checks = doc["checks"].as_array().ok_or("no checks array")?;
    let count = |s: &str| checks.iter().filter(|c| c["status"] == s).count();
    ensure!(count("FAIL") == 0 && count("VACUOUS") == 0, "{} FAIL, {} VACUOUS", count("FAIL"), count("VACUOUS"));
    Ok(format!("{} checks PASS, byte-stable report ({took:.1?})", checks.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("M2(Z2) classification", c01_m2z2),
        ("M3(Z2) counterexample", c02_m3z2),
        ("GSWNC but not GSNC examples", c03_section_examples),
        ("two-path agreement over the catalog", c04_two_path),
        ("implication suite", c05_implications),
        ("triple products", c06_triple_products),
        ("construction equivalences", c07_constructions),
        ("T3 over Z2 and Z3", c08_upper_triangular),
        ("branch coverage", c09_branches),
        ("group rings", c10_group_rings),
        ("harness gate", c11_harness_gate),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS  criterion {:>2}  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {:>2}  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
