//! Rings assembled from bimodules: formal triangular rings `[[R, M], [0, S]]`
//! and trivial Morita contexts `[[A, M], [N, B]]` with `MN = 0 = NM`, both
//! realized as trivial extensions of `R × S` (resp. `A × B`).

use std::sync::Arc;

use crate::error::Result;
use crate::ring::{
    direct_product, formal_matrix_ks, make_zmod, trivial_extension_with, Bimodule, Elem, FiniteRing,
};

/// `Z_k` as a module over `Z_n` (requires `k | n`), through reduction.
fn cyclic_action(k: usize) -> impl Fn(Elem, Elem) -> Elem + Send + Sync + Clone {
    move |r, m| (r % k) * m % k
}

/// `[[Z_a, Z_k], [0, Z_b]]` with `k | a` and `k | b`.
pub fn formal_triangular_zmod(a: usize, b: usize, k: usize) -> Result<Arc<FiniteRing>> {
    debug_assert!(a % k == 0 && b % k == 0);
    let base = direct_product(&[make_zmod(a)?, make_zmod(b)?])?;
    let act = cyclic_action(k);
    let (l, r) = (act.clone(), act);
    let module = Bimodule {
        size: k,
        zero: 0,
        add: Arc::new(move |x, y| (x + y) % k),
        neg: Arc::new(move |x| (k - x) % k),
        // (r, s)·m = r m and m·(r, s) = m s
        left: Arc::new(move |rs, m| l(rs / b, m)),
        right: Arc::new(move |m, rs| r(rs % b, m)),
        describe: Arc::new(|m| m.to_string()),
    };
    trivial_extension_with(format!("[[Z{a}, Z{k}], [0, Z{b}]]"), &base, module)
}

/// `[[Z_a, Z_k], [Z_k, Z_b]]` with zero pairings.
pub fn trivial_morita_zmod(a: usize, b: usize, k: usize) -> Result<Arc<FiniteRing>> {
    debug_assert!(a % k == 0 && b % k == 0);
    let base = direct_product(&[make_zmod(a)?, make_zmod(b)?])?;
    let act = cyclic_action(k);
    let (l, r) = (act.clone(), act);
    // module element (m, n) has index m·k + n
    let module = Bimodule {
        size: k * k,
        zero: 0,
        add: Arc::new(move |x, y| ((x / k + y / k) % k) * k + (x % k + y % k) % k),
        neg: Arc::new(move |x| ((k - x / k) % k) * k + (k - x % k) % k),
        // (a, b)(m, n) = (am, bn), (m, n)(a, b) = (mb, na)
        left: Arc::new(move |ab, mn| l(ab / b, mn / k) * k + l(ab % b, mn % k)),
        right: Arc::new(move |mn, ab| r(ab % b, mn / k) * k + r(ab / b, mn % k)),
        describe: Arc::new(move |x| format!("({},{})", x / k, x % k)),
    };
    trivial_extension_with(format!("[[Z{a}, Z{k}], [Z{k}, Z{b}]]"), &base, module)
}

/// The trivial Morita context over `R` with `M = N = R`, as a trivial
/// extension of `R × R`, together with `K_0(R)` and the map `K_0(R) → T`
/// sending `[[a, x], [y, b]]` to `((a, b), (x, y))`.
pub fn trivial_morita_square(
    ring: &Arc<FiniteRing>,
) -> Result<(Arc<FiniteRing>, Arc<FiniteRing>, Vec<Elem>)> {
    let n = ring.size();
    let base = direct_product(&[ring.clone(), ring.clone()])?;
    let (r1, r2, r3, r4, r5) = (ring.clone(), ring.clone(), ring.clone(), ring.clone(), ring.clone());
    let module = Bimodule {
        size: n * n,
        zero: ring.zero() * n + ring.zero(),
        add: Arc::new(move |x, y| r1.add(x / n, y / n) * n + r1.add(x % n, y % n)),
        neg: Arc::new(move |x| r2.neg(x / n) * n + r2.neg(x % n)),
        left: Arc::new(move |ab, mn| r3.mul(ab / n, mn / n) * n + r3.mul(ab % n, mn % n)),
        right: Arc::new(move |mn, ab| r4.mul(mn / n, ab % n) * n + r4.mul(mn % n, ab / n)),
        describe: Arc::new(move |x| format!("({},{})", r5.describe(x / n), r5.describe(x % n))),
    };
    let label = format!("[[{0}, {0}], [{0}, {0}]]0", ring.label());
    let te = trivial_extension_with(label, &base, module)?;
    let k0 = formal_matrix_ks(ring, ring.zero())?;
    let map = k0
        .elements()
        .map(|x| {
            let d = k0.components(x).expect("matrix components");
            let (a, xx, y, b) = (d[0], d[1], d[2], d[3]);
            (a * n + b) * (n * n) + xx * n + y
        })
        .collect();
    Ok((te, k0, map))
}

/// `T(R, M)` for a few modules other than `M = R`.
pub fn extra_trivial_extensions() -> Result<Vec<(String, Arc<FiniteRing>, Arc<FiniteRing>)>> {
    let mut out = Vec::new();
    // Z4 acting on Z2 by reduction
    let z4 = make_zmod(4)?;
    let act = cyclic_action(2);
    let (l, r) = (act.clone(), act);
    let m = Bimodule {
        size: 2,
        zero: 0,
        add: Arc::new(|x, y| x ^ y),
        neg: Arc::new(|x| x),
        left: Arc::new(move |s, x| l(s, x)),
        right: Arc::new(move |x, s| r(s, x)),
        describe: Arc::new(|x| x.to_string()),
    };
    out.push(("T(Z4, Z2)".into(), z4.clone(), trivial_extension_with("T(Z4, Z2)".into(), &z4, m)?));
    // Z2 acting on Z2 x Z2
    let z2 = make_zmod(2)?;
    let scalar = |r: Elem, x: Elem| if r == 1 { x } else { 0 };
    let m = Bimodule {
        size: 4,
        zero: 0,
        add: Arc::new(|x, y| x ^ y),
        neg: Arc::new(|x| x),
        left: Arc::new(scalar),
        right: Arc::new(move |x, r| scalar(r, x)),
        describe: Arc::new(|x| format!("({},{})", x / 2, x % 2)),
    };
    out.push((
        "T(Z2, Z2 x Z2)".into(),
        z2.clone(),
        trivial_extension_with("T(Z2, Z2 x Z2)".into(), &z2, m)?,
    ));
    // Z3 x Z3 acting on Z3 through the first factor on the left and the
    // second on the right
    let z33 = direct_product(&[make_zmod(3)?, make_zmod(3)?])?;
    let m = Bimodule {
        size: 3,
        zero: 0,
        add: Arc::new(|x, y| (x + y) % 3),
        neg: Arc::new(|x| (3 - x) % 3),
        left: Arc::new(|rs, x| (rs / 3) * x % 3),
        right: Arc::new(|x, rs| x * (rs % 3) % 3),
        describe: Arc::new(|x| x.to_string()),
    };
    out.push((
        "T(Z3 x Z3, Z3)".into(),
        z33.clone(),
        trivial_extension_with("T(Z3 x Z3, Z3)".into(), &z33, m)?,
    ));
    Ok(out)
}
