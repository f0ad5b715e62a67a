//! Constructors for the ring families used throughout the crate.
//!
//! Index layouts (most significant component first, last component fastest):
//! - `Z/nZ`: index `i` is the residue `i`.
//! - `GF(p^k)`: index `Σ c_i p^i` for the polynomial `Σ c_i x^i`.
//! - products: mixed radix over the factor sizes.
//! - matrix-like rings: row-major entries, each a base-ring index.
//! - `T_n(R)`: the upper entries `(i, j)`, `i ≤ j`, row-major.
//! - `S_n(R)`: the shared diagonal entry, then the strictly upper entries row-major.
//! - `T_n(R, α)`: the tuple `(a_0, …, a_{n-1})`.
//! - `K_s(R)`: `(a, x, y, b)` for the matrix `[[a, x], [y, b]]`.
//! - trivial extension: `(r, m)`.

use std::sync::Arc;

use super::{check_cap, checked_pow, ClosureOps, Digits, Elem, FiniteRing, Radix, RingEndomorphism};
use crate::error::{Result, RingError};
use crate::subsets::ElementSet;

pub fn make_zmod(n: usize) -> Result<Arc<FiniteRing>> {
    if n == 0 {
        return Err(RingError::InvalidArgument("Z0 is not a finite ring".into()));
    }
    check_cap(n as u128)?;
    let ops = ClosureOps::new(
        move |a, b| (a + b) % n,
        move |a, b| ((a as u64 * b as u64) % n as u64) as usize,
        move |a| (n - a) % n,
    );
    Ok(FiniteRing::from_ops(format!("Z{n}"), n, 0, 1 % n, Arc::new(ops))
        .with_describe(|a| a.to_string())
        .with_radices(vec![n])
        .into_arc())
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Coefficients `c_0..c_{k-1}` of the monic modulus `x^k + Σ c_i x^i`.
fn fixed_modulus(p: usize, k: usize) -> Option<Vec<usize>> {
    match (p, k) {
        (2, 2) => Some(vec![1, 1]),    // x^2 + x + 1
        (2, 3) => Some(vec![1, 1, 0]), // x^3 + x + 1
        (3, 2) => Some(vec![1, 0]),    // x^2 + 1
        _ => None,
    }
}

/// Remainder of `num` modulo the monic `den` over `Z/p`, coefficients low-degree first.
fn poly_rem(num: &[usize], den: &[usize], p: usize) -> Vec<usize> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dd;
            for (i, &d) in den[..dd].iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * d) % p) % p;
            }
        }
    }
    r
}

fn is_irreducible(low: &[usize], p: usize) -> bool {
    let k = low.len();
    let mut f = low.to_vec();
    f.push(1);
    for d in 1..=k / 2 {
        for m in 0..p.pow(d as u32) {
            let mut g: Vec<usize> = (0..d).map(|i| (m / p.pow(i as u32)) % p).collect();
            g.push(1);
            if poly_rem(&f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible modulus used for `GF(p^k)`: a fixed polynomial for
/// the common small fields, otherwise the first irreducible in index order.
pub(crate) fn gf_modulus(p: usize, k: usize) -> Vec<usize> {
    if let Some(m) = fixed_modulus(p, k) {
        return m;
    }
    (0..p.pow(k as u32))
        .map(|m| (0..k).map(|i| (m / p.pow(i as u32)) % p).collect::<Vec<_>>())
        .find(|low| is_irreducible(low, p))
        .expect("irreducible polynomials exist in every degree")
}

fn describe_poly(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// The field with `p^k` elements. Its Frobenius is available through
/// [`RingEndomorphism::frobenius`].
pub fn make_gf(p: u64, k: u32) -> Result<Arc<FiniteRing>> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    if k == 0 {
        return Err(RingError::InvalidArgument("GF degree must be positive".into()));
    }
    let size = check_cap(checked_pow(p as usize, k as usize))?;
    let (p, k) = (p as usize, k as usize);
    let modulus = Arc::new(gf_modulus(p, k));
    let decode = move |mut a: usize| -> Vec<usize> {
        (0..k)
            .map(|_| {
                let c = a % p;
                a /= p;
                c
            })
            .collect()
    };
    let encode = move |c: &[usize]| -> usize { c.iter().rev().fold(0, |acc, &d| acc * p + d) };
    let add = move |a: usize, b: usize| {
        let (x, y) = (decode(a), decode(b));
        let s: Vec<usize> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
        encode(&s)
    };
    let neg = move |a: usize| {
        let s: Vec<usize> = decode(a).iter().map(|u| (p - u) % p).collect();
        encode(&s)
    };
    let m = Arc::clone(&modulus);
    let mul = move |a: usize, b: usize| {
        let (x, y) = (decode(a), decode(b));
        let mut prod = vec![0; 2 * k - 1];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u * v) % p;
            }
        }
        let mut f = m.to_vec();
        f.push(1);
        let mut r = poly_rem(&prod, &f, p);
        r.resize(k, 0);
        encode(&r)
    };
    let ring = FiniteRing::from_ops(format!("GF({p},{k})"), size, 0, 1, Arc::new(ClosureOps::new(add, mul, neg)))
        .with_radices(vec![p; k]);
    let ring = if k == 1 {
        ring.with_describe(|a| a.to_string())
    } else {
        ring.with_describe(move |a| describe_poly(&decode(a)))
    };
    Ok(ring.into_arc())
}

pub fn direct_product(rings: &[Arc<FiniteRing>]) -> Result<Arc<FiniteRing>> {
    if rings.is_empty() {
        return Err(RingError::InvalidArgument("empty direct product".into()));
    }
    let requested = rings
        .iter()
        .fold(1u128, |acc, r| acc.saturating_mul(r.size() as u128));
    let size = check_cap(requested)?;
    let factors: Arc<Vec<Arc<FiniteRing>>> = Arc::new(rings.to_vec());
    let radices: Vec<usize> = rings.iter().map(|r| r.size()).collect();
    let strides: Arc<Vec<usize>> = Arc::new({
        let mut s = vec![1; radices.len()];
        for i in (0..radices.len().saturating_sub(1)).rev() {
            s[i] = s[i + 1] * radices[i + 1];
        }
        s
    });
    let zip = |f: Arc<Vec<Arc<FiniteRing>>>, st: Arc<Vec<usize>>, op: fn(&FiniteRing, Elem, Elem) -> Elem| {
        move |a: Elem, b: Elem| {
            f.iter()
                .zip(st.iter())
                .map(|(r, &s)| op(r, (a / s) % r.size(), (b / s) % r.size()) * s)
                .sum()
        }
    };
    let add = zip(factors.clone(), strides.clone(), FiniteRing::add);
    let mul = zip(factors.clone(), strides.clone(), FiniteRing::mul);
    let (f, st) = (factors.clone(), strides.clone());
    let neg = move |a: Elem| {
        f.iter()
            .zip(st.iter())
            .map(|(r, &s)| r.neg((a / s) % r.size()) * s)
            .sum()
    };
    let zero = factors.iter().zip(strides.iter()).map(|(r, &s)| r.zero() * s).sum();
    let one = factors.iter().zip(strides.iter()).map(|(r, &s)| r.one() * s).sum();
    let label = rings.iter().map(|r| r.label().to_string()).collect::<Vec<_>>().join(" x ");
    let (f, st) = (factors, strides);
    Ok(
        FiniteRing::from_ops(label, size, zero, one, Arc::new(ClosureOps::new(add, mul, neg)))
            .with_radices(radices)
            .with_describe(move |a| {
                let parts: Vec<String> = f
                    .iter()
                    .zip(st.iter())
                    .map(|(r, &s)| r.describe((a / s) % r.size()))
                    .collect();
                format!("({})", parts.join(", "))
            })
            .into_arc(),
    )
}

type Product = dyn Fn(&FiniteRing, &[Elem], &[Elem], &mut [Elem]) + Send + Sync;

/// A ring whose elements are `len`-tuples over `base`, added componentwise
/// and multiplied by `product`.
fn tuple_ring(
    label: String,
    base: &Arc<FiniteRing>,
    len: usize,
    one: &[Elem],
    product: Arc<Product>,
    describe: impl Fn(&FiniteRing, &[Elem]) -> String + Send + Sync + 'static,
) -> Result<Arc<FiniteRing>> {
    let size = check_cap(checked_pow(base.size(), len))?;
    let radix = Radix::new(base.size(), len);
    let (b1, r1) = (base.clone(), radix.clone());
    let add = move |a: Elem, b: Elem| {
        let (x, y) = (r1.decode(a), r1.decode(b));
        let s: Digits = x.iter().zip(&y).map(|(&u, &v)| b1.add(u, v)).collect();
        r1.encode(&s)
    };
    let (b2, r2) = (base.clone(), radix.clone());
    let neg = move |a: Elem| {
        let s: Digits = r2.decode(a).iter().map(|&u| b2.neg(u)).collect();
        r2.encode(&s)
    };
    let (b3, r3) = (base.clone(), radix.clone());
    let mul = move |a: Elem, b: Elem| {
        let (x, y) = (r3.decode(a), r3.decode(b));
        let mut out: Digits = smallvec::smallvec![b3.zero(); r3.len()];
        product(&b3, &x, &y, &mut out);
        r3.encode(&out)
    };
    let one = radix.encode(one);
    let zero = radix.encode(&vec![base.zero(); len]);
    let (b4, r4) = (base.clone(), radix);
    Ok(
        FiniteRing::from_ops(label, size, zero, one, Arc::new(ClosureOps::new(add, mul, neg)))
            .with_radices(vec![base.size(); len])
            .with_describe(move |a| describe(&b4, &r4.decode(a)))
            .into_arc(),
    )
}

fn describe_matrix(base: &FiniteRing, full: &[Elem], n: usize) -> String {
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let row: Vec<String> = (0..n).map(|j| base.describe(full[i * n + j])).collect();
            format!("[{}]", row.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

fn mat_mul(base: &FiniteRing, n: usize, a: &[Elem], b: &[Elem], out: &mut [Elem]) {
    for i in 0..n {
        for j in 0..n {
            let mut acc = base.zero();
            for k in 0..n {
                acc = base.add(acc, base.mul(a[i * n + k], b[k * n + j]));
            }
            out[i * n + j] = acc;
        }
    }
}

fn identity_matrix(base: &FiniteRing, n: usize) -> Vec<Elem> {
    (0..n * n)
        .map(|p| if p / n == p % n { base.one() } else { base.zero() })
        .collect()
}

pub fn matrix_ring(base: &Arc<FiniteRing>, n: usize) -> Result<Arc<FiniteRing>> {
    if n == 0 {
        return Err(RingError::InvalidArgument("matrix size must be positive".into()));
    }
    let product: Arc<Product> = Arc::new(move |r, a, b, out| mat_mul(r, n, a, b, out));
    tuple_ring(
        format!("M{n}({})", base.label()),
        base,
        n * n,
        &identity_matrix(base, n),
        product,
        move |r, d| describe_matrix(r, d, n),
    )
}

/// Positions stored by a triangular layout, row-major.
fn upper_positions(n: usize, strict: bool) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !strict || i < j)
        .collect()
}

pub fn upper_triangular(base: &Arc<FiniteRing>, n: usize) -> Result<Arc<FiniteRing>> {
    if n == 0 {
        return Err(RingError::InvalidArgument("matrix size must be positive".into()));
    }
    let pos = Arc::new(upper_positions(n, false));
    let expand = {
        let pos = pos.clone();
        move |r: &FiniteRing, d: &[Elem]| {
            let mut full = vec![r.zero(); n * n];
            for (&(i, j), &v) in pos.iter().zip(d) {
                full[i * n + j] = v;
            }
            full
        }
    };
    let ex = expand.clone();
    let p2 = pos.clone();
    let product: Arc<Product> = Arc::new(move |r, a, b, out| {
        let (fa, fb) = (ex(r, a), ex(r, b));
        let mut fc = vec![r.zero(); n * n];
        mat_mul(r, n, &fa, &fb, &mut fc);
        for (slot, &(i, j)) in out.iter_mut().zip(p2.iter()) {
            *slot = fc[i * n + j];
        }
    });
    let one: Vec<Elem> = pos
        .iter()
        .map(|&(i, j)| if i == j { base.one() } else { base.zero() })
        .collect();
    tuple_ring(
        format!("T{n}({})", base.label()),
        base,
        pos.len(),
        &one,
        product,
        move |r, d| describe_matrix(r, &expand(r, d), n),
    )
}

/// `S_n(R)`: upper triangular matrices with a constant diagonal.
pub fn equal_diag_triangular(base: &Arc<FiniteRing>, n: usize) -> Result<Arc<FiniteRing>> {
    if n == 0 {
        return Err(RingError::InvalidArgument("matrix size must be positive".into()));
    }
    let strict = Arc::new(upper_positions(n, true));
    let expand = {
        let strict = strict.clone();
        move |r: &FiniteRing, d: &[Elem]| {
            let mut full = vec![r.zero(); n * n];
            for i in 0..n {
                full[i * n + i] = d[0];
            }
            for (&(i, j), &v) in strict.iter().zip(&d[1..]) {
                full[i * n + j] = v;
            }
            full
        }
    };
    let ex = expand.clone();
    let s2 = strict.clone();
    let product: Arc<Product> = Arc::new(move |r, a, b, out| {
        let (fa, fb) = (ex(r, a), ex(r, b));
        let mut fc = vec![r.zero(); n * n];
        mat_mul(r, n, &fa, &fb, &mut fc);
        out[0] = fc[0];
        for (slot, &(i, j)) in out[1..].iter_mut().zip(s2.iter()) {
            *slot = fc[i * n + j];
        }
    });
    let mut one = vec![base.zero(); 1 + strict.len()];
    one[0] = base.one();
    tuple_ring(
        format!("S{n}({})", base.label()),
        base,
        1 + strict.len(),
        &one,
        product,
        move |r, d| describe_matrix(r, &expand(r, d), n),
    )
}

/// `T_n(R, α)`, realized as `R[x; α]/(x^n)`: `(a_0, …, a_{n-1})` multiplies by
/// `c_i = Σ_{k ≤ i} a_k α^k(b_{i-k})`.
pub fn skew_triangular(
    base: &Arc<FiniteRing>,
    alpha: &RingEndomorphism,
    n: usize,
) -> Result<Arc<FiniteRing>> {
    if n == 0 {
        return Err(RingError::InvalidArgument("skew triangular size must be positive".into()));
    }
    if alpha.power(0).len() != base.size() {
        return Err(RingError::NotEndomorphism(format!(
            "{} is not defined on {}",
            alpha.name(),
            base.label()
        )));
    }
    let powers: Arc<Vec<Vec<Elem>>> = Arc::new((0..n).map(|k| alpha.power(k)).collect());
    let product: Arc<Product> = Arc::new(move |r, a, b, out| {
        for i in 0..n {
            let mut acc = r.zero();
            for k in 0..=i {
                acc = r.add(acc, r.mul(a[k], powers[k][b[i - k]]));
            }
            out[i] = acc;
        }
    });
    let mut one = vec![base.zero(); n];
    one[0] = base.one();
    tuple_ring(
        format!("Tskew{n}({}, {})", base.label(), alpha.name()),
        base,
        n,
        &one,
        product,
        |r, d| {
            let parts: Vec<String> = d.iter().map(|&x| r.describe(x)).collect();
            format!("({})", parts.join(","))
        },
    )
}

fn require_central(base: &FiniteRing, s: Elem) -> Result<()> {
    base.check_index(s)?;
    if base.elements().all(|r| base.commutes(r, s)) {
        Ok(())
    } else {
        Err(RingError::NotCentral { element: s })
    }
}

/// `K_s(R)`: 2×2 matrices whose off-diagonal products pick up a factor `s`.
pub fn formal_matrix_ks(base: &Arc<FiniteRing>, s: Elem) -> Result<Arc<FiniteRing>> {
    require_central(base, s)?;
    let product: Arc<Product> = Arc::new(move |r, a, b, out| {
        let (a1, x1, y1, b1) = (a[0], a[1], a[2], a[3]);
        let (a2, x2, y2, b2) = (b[0], b[1], b[2], b[3]);
        out[0] = r.add(r.mul(a1, a2), r.mul(s, r.mul(x1, y2)));
        out[1] = r.add(r.mul(a1, x2), r.mul(x1, b2));
        out[2] = r.add(r.mul(y1, a2), r.mul(b1, y2));
        out[3] = r.add(r.mul(s, r.mul(y1, x2)), r.mul(b1, b2));
    });
    tuple_ring(
        format!("K({}, {})", base.label(), base.describe(s)),
        base,
        4,
        &identity_matrix(base, 2),
        product,
        |r, d| describe_matrix(r, d, 2),
    )
}

/// `M_n(R; s)`: `c_ij = Σ_k s^{δ(i,k,j)} a_ik b_kj` with
/// `δ(i,k,j) = 1 + [i=j] − [i=k] − [k=j]`.
pub fn formal_matrix_ns(base: &Arc<FiniteRing>, n: usize, s: Elem) -> Result<Arc<FiniteRing>> {
    if n == 0 {
        return Err(RingError::InvalidArgument("matrix size must be positive".into()));
    }
    require_central(base, s)?;
    let s_pow = [base.one(), s, base.mul(s, s)];
    let product: Arc<Product> = Arc::new(move |r, a, b, out| {
        for i in 0..n {
            for j in 0..n {
                let mut acc = r.zero();
                for k in 0..n {
                    let delta = 1 + usize::from(i == j) - usize::from(i == k) - usize::from(k == j);
                    let term = r.mul(a[i * n + k], b[k * n + j]);
                    acc = r.add(acc, r.mul(s_pow[delta], term));
                }
                out[i * n + j] = acc;
            }
        }
    });
    tuple_ring(
        format!("MF{n}({}, {})", base.label(), base.describe(s)),
        base,
        n * n,
        &identity_matrix(base, n),
        product,
        move |r, d| describe_matrix(r, d, n),
    )
}

type Action = Arc<dyn Fn(Elem, Elem) -> Elem + Send + Sync>;

/// A finite bimodule over a ring, given by its additive group and both actions.
#[derive(Clone)]
pub(crate) struct Bimodule {
    pub size: usize,
    pub zero: Elem,
    pub add: Action,
    pub neg: Arc<dyn Fn(Elem) -> Elem + Send + Sync>,
    /// `(r, m) ↦ r·m`
    pub left: Action,
    /// `(m, r) ↦ m·r`
    pub right: Action,
    pub describe: Arc<dyn Fn(Elem) -> String + Send + Sync>,
}

impl Bimodule {
    pub fn regular(ring: &Arc<FiniteRing>) -> Self {
        let (r1, r2, r3, r4, r5) = (ring.clone(), ring.clone(), ring.clone(), ring.clone(), ring.clone());
        Self {
            size: ring.size(),
            zero: ring.zero(),
            add: Arc::new(move |a, b| r1.add(a, b)),
            neg: Arc::new(move |a| r2.neg(a)),
            left: Arc::new(move |r, m| r3.mul(r, m)),
            right: Arc::new(move |m, r| r4.mul(m, r)),
            describe: Arc::new(move |m| r5.describe(m)),
        }
    }
}

pub(crate) fn trivial_extension_with(
    label: String,
    base: &Arc<FiniteRing>,
    module: Bimodule,
) -> Result<Arc<FiniteRing>> {
    let m = module.size;
    let size = check_cap((base.size() as u128).saturating_mul(m as u128))?;
    let (b1, md1) = (base.clone(), module.clone());
    let add = move |x: Elem, y: Elem| {
        let (r, mm) = (x / m, x % m);
        let (s, nn) = (y / m, y % m);
        b1.add(r, s) * m + (md1.add)(mm, nn)
    };
    let (b2, md2) = (base.clone(), module.clone());
    let mul = move |x: Elem, y: Elem| {
        let (r, mm) = (x / m, x % m);
        let (s, nn) = (y / m, y % m);
        b2.mul(r, s) * m + (md2.add)((md2.left)(r, nn), (md2.right)(mm, s))
    };
    let (b3, md3) = (base.clone(), module.clone());
    let neg = move |x: Elem| b3.neg(x / m) * m + (md3.neg)(x % m);
    let zero = base.zero() * m + module.zero;
    let one = base.one() * m + module.zero;
    let (b4, md4) = (base.clone(), module);
    Ok(
        FiniteRing::from_ops(label, size, zero, one, Arc::new(ClosureOps::new(add, mul, neg)))
            .with_radices(vec![base.size(), m])
            .with_describe(move |x| format!("({}|{})", b4.describe(x / m), (md4.describe)(x % m)))
            .into_arc(),
    )
}

/// `T(R, R)`: pairs `(r, m)` with `(r, m)(s, n) = (rs, rn + ms)`.
pub fn trivial_extension(base: &Arc<FiniteRing>) -> Result<Arc<FiniteRing>> {
    trivial_extension_with(format!("TE({})", base.label()), base, Bimodule::regular(base))
}

/// A quotient ring together with the canonical projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub ring: Arc<FiniteRing>,
    /// `projection[x]` is the coset index of `x`.
    pub projection: Arc<Vec<Elem>>,
    /// Least element of each coset, in coset-index order.
    pub representatives: Arc<Vec<Elem>>,
}

pub(crate) fn validate_ideal(ring: &FiniteRing, ideal: &ElementSet) -> Result<()> {
    if ideal.universe() != ring.size() {
        return Err(RingError::NotIdeal("subset belongs to a different ring".into()));
    }
    if !ideal.contains(ring.zero()) {
        return Err(RingError::NotIdeal("missing zero".into()));
    }
    for &a in ideal.members() {
        if !ideal.contains(ring.neg(a)) {
            return Err(RingError::NotIdeal(format!("not closed under negation at {a}")));
        }
        for &b in ideal.members() {
            if !ideal.contains(ring.add(a, b)) {
                return Err(RingError::NotIdeal(format!("not closed under addition at ({a}, {b})")));
            }
        }
        for r in ring.elements() {
            if !ideal.contains(ring.mul(r, a)) || !ideal.contains(ring.mul(a, r)) {
                return Err(RingError::NotIdeal(format!("does not absorb {r} at {a}")));
            }
        }
    }
    Ok(())
}

/// Builds `R/I`. Cosets are indexed in order of their least element, which is
/// also the representative used for the induced operations.
pub fn quotient_map(ring: &Arc<FiniteRing>, ideal: &ElementSet) -> Result<Quotient> {
    validate_ideal(ring, ideal)?;
    let mut projection = vec![usize::MAX; ring.size()];
    let mut reps = Vec::new();
    for x in ring.elements() {
        if projection[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &i in ideal.members() {
            projection[ring.add(x, i)] = c;
        }
    }
    let projection = Arc::new(projection);
    let reps = Arc::new(reps);
    let size = reps.len();
    let op = |f: fn(&FiniteRing, Elem, Elem) -> Elem| {
        let (r, p, q) = (ring.clone(), projection.clone(), reps.clone());
        move |a: Elem, b: Elem| p[f(&r, q[a], q[b])]
    };
    let add = op(FiniteRing::add);
    let mul = op(FiniteRing::mul);
    let (r, p, q) = (ring.clone(), projection.clone(), reps.clone());
    let neg = move |a: Elem| p[r.neg(q[a])];
    let (r, q) = (ring.clone(), reps.clone());
    let label = format!("{}/I{}", ring.label(), ideal.len());
    let q_ring = FiniteRing::from_ops(
        label,
        size,
        projection[ring.zero()],
        projection[ring.one()],
        Arc::new(ClosureOps::new(add, mul, neg)),
    )
    .with_describe(move |a| format!("[{}]", r.describe(q[a])))
    .into_arc();
    Ok(Quotient {
        ring: q_ring,
        projection,
        representatives: reps,
    })
}

pub fn quotient(ring: &Arc<FiniteRing>, ideal: &ElementSet) -> Result<Arc<FiniteRing>> {
    Ok(quotient_map(ring, ideal)?.ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::check_axioms;

    #[test]
    fn zmod_basics() {
        let z1 = make_zmod(1).unwrap();
        assert_eq!(z1.size(), 1);
        assert_eq!(z1.zero(), z1.one());
        let z4 = make_zmod(4).unwrap();
        assert_eq!(z4.mul(2, 2), 0);
        assert!(matches!(make_zmod(0), Err(RingError::InvalidArgument(_))));
    }

    #[test]
    fn gf_moduli_match_fixed_choices() {
        assert_eq!(gf_modulus(2, 2), vec![1, 1]);
        assert_eq!(gf_modulus(2, 3), vec![1, 1, 0]);
        assert_eq!(gf_modulus(3, 2), vec![1, 0]);
        // the generic search agrees with the fixed table
        for (p, k) in [(2usize, 2usize), (2, 3), (3, 2)] {
            let found = (0..p.pow(k as u32))
                .map(|m| (0..k).map(|i| (m / p.pow(i as u32)) % p).collect::<Vec<_>>())
                .find(|low| is_irreducible(low, p))
                .unwrap();
            assert_eq!(found, gf_modulus(p, k));
        }
    }

    #[test]
    fn gf_rejects_composite_characteristic() {
        assert_eq!(make_gf(4, 1).unwrap_err(), RingError::NotPrime(4));
    }

    #[test]
    fn gf21_equals_z2() {
        let f = make_gf(2, 1).unwrap();
        let z = make_zmod(2).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(f.add(a, b), z.add(a, b));
                assert_eq!(f.mul(a, b), z.mul(a, b));
            }
        }
    }

    #[test]
    fn gf4_field_and_frobenius() {
        let f = make_gf(2, 2).unwrap();
        check_axioms(&f, 0).unwrap();
        // every nonzero element has an inverse
        for a in 1..4 {
            assert!((1..4).any(|b| f.mul(a, b) == f.one()));
        }
        let frob = RingEndomorphism::frobenius(&f).unwrap();
        assert_eq!(frob.order(), 2);
        assert!(!frob.is_identity());
        // x·x = x + 1 under x^2 + x + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.describe(3), "x+1");
    }

    #[test]
    fn gf9_and_gf8_axioms() {
        for (p, k) in [(3, 2), (2, 3), (3, 3)] {
            let f = make_gf(p, k).unwrap();
            check_axioms(&f, 1).unwrap();
            assert!(f.elements().skip(1).all(|a| f.elements().any(|b| f.mul(a, b) == f.one())));
        }
    }

    #[test]
    fn products_and_matrices_satisfy_axioms() {
        let z2 = make_zmod(2).unwrap();
        let z3 = make_zmod(3).unwrap();
        let p = direct_product(&[z2.clone(), z3.clone()]).unwrap();
        assert_eq!(p.size(), 6);
        check_axioms(&p, 0).unwrap();
        let m = matrix_ring(&z2, 2).unwrap();
        check_axioms(&m, 0).unwrap();
        let m3 = matrix_ring(&z2, 3).unwrap();
        assert_eq!(m3.size(), 512);
        check_axioms(&m3, 0).unwrap();
    }

    #[test]
    fn singleton_product_and_one_by_one_matrices_copy_the_base() {
        let z2 = make_zmod(2).unwrap();
        for r in [direct_product(&[z2.clone()]).unwrap(), matrix_ring(&z2, 1).unwrap()] {
            for a in 0..2 {
                for b in 0..2 {
                    assert_eq!(r.add(a, b), z2.add(a, b));
                    assert_eq!(r.mul(a, b), z2.mul(a, b));
                }
            }
        }
    }

    #[test]
    fn triangular_sizes() {
        let z2 = make_zmod(2).unwrap();
        assert_eq!(upper_triangular(&z2, 3).unwrap().size(), 64);
        let s2 = equal_diag_triangular(&z2, 2).unwrap();
        assert_eq!(s2.size(), 4);
        check_axioms(&s2, 0).unwrap();
        check_axioms(&equal_diag_triangular(&z2, 3).unwrap(), 0).unwrap();
        check_axioms(&upper_triangular(&make_zmod(3).unwrap(), 2).unwrap(), 0).unwrap();
    }

    #[test]
    fn skew_products_follow_the_twisted_rule() {
        let f = make_gf(2, 2).unwrap();
        let frob = RingEndomorphism::frobenius(&f).unwrap();
        let t = skew_triangular(&f, &frob, 2).unwrap();
        check_axioms(&t, 0).unwrap();
        for a in 0..4 {
            for c in 0..4 {
                let a0 = t.from_components(&[a, 0]).unwrap();
                let c1 = t.from_components(&[0, c]).unwrap();
                assert_eq!(t.components(t.mul(a0, c1)).unwrap(), vec![0, f.mul(a, c)]);
                assert_eq!(
                    t.components(t.mul(c1, a0)).unwrap(),
                    vec![0, f.mul(c, frob.apply(a))]
                );
                assert_eq!(t.mul(c1, c1), t.zero());
            }
        }
        let z2 = make_zmod(2).unwrap();
        let t2 = skew_triangular(&z2, &RingEndomorphism::identity(&z2), 2).unwrap();
        assert_eq!(t2.size(), 4);
        let x = t2.from_components(&[0, 1]).unwrap();
        assert_eq!(t2.mul(x, x), t2.zero());
    }

    #[test]
    fn skew_with_identity_embeds_in_upper_triangular() {
        let z3 = make_zmod(3).unwrap();
        let n = 3;
        let t = skew_triangular(&z3, &RingEndomorphism::identity(&z3), n).unwrap();
        let up = upper_triangular(&z3, n).unwrap();
        let pos = upper_positions(n, false);
        // (a_0, …, a_{n-1}) goes to the Toeplitz matrix with a_{j-i} at (i, j)
        let embed = |x: Elem| {
            let c = t.components(x).unwrap();
            let d: Vec<usize> = pos.iter().map(|&(i, j)| c[j - i]).collect();
            up.from_components(&d).unwrap()
        };
        for a in t.elements() {
            for b in t.elements() {
                assert_eq!(embed(t.mul(a, b)), up.mul(embed(a), embed(b)));
                assert_eq!(embed(t.add(a, b)), up.add(embed(a), embed(b)));
            }
        }
        assert_eq!(embed(t.one()), up.one());
    }

    #[test]
    fn ks_with_unit_is_the_full_matrix_ring() {
        let z3 = make_zmod(3).unwrap();
        let k = formal_matrix_ks(&z3, 1).unwrap();
        let m = matrix_ring(&z3, 2).unwrap();
        for a in k.elements() {
            for b in k.elements() {
                assert_eq!(k.mul(a, b), m.mul(a, b));
            }
        }
        let z4 = make_zmod(4).unwrap();
        check_axioms(&formal_matrix_ks(&z4, 2).unwrap(), 3).unwrap();
    }

    #[test]
    fn formal_matrix_ns_identities() {
        let z4 = make_zmod(4).unwrap();
        for s in 0..4 {
            let ns = formal_matrix_ns(&z4, 2, s).unwrap();
            let ks = formal_matrix_ks(&z4, z4.mul(s, s)).unwrap();
            for a in ns.elements() {
                for b in ns.elements() {
                    assert_eq!(ns.mul(a, b), ks.mul(a, b));
                }
            }
            let n1 = formal_matrix_ns(&z4, 1, s).unwrap();
            for a in 0..4 {
                for b in 0..4 {
                    assert_eq!(n1.mul(a, b), z4.mul(a, b));
                }
            }
        }
        let z2 = make_zmod(2).unwrap();
        let m = matrix_ring(&z2, 2).unwrap();
        let f = formal_matrix_ns(&z2, 2, 1).unwrap();
        assert!(m.elements().all(|a| m.elements().all(|b| m.mul(a, b) == f.mul(a, b))));
        // three distinct indices pick up one factor of s
        let f3 = formal_matrix_ns(&make_zmod(2).unwrap(), 3, 0).unwrap();
        check_axioms(&f3, 5).unwrap();
    }

    #[test]
    fn non_central_s_is_rejected() {
        let z2 = make_zmod(2).unwrap();
        let m = matrix_ring(&z2, 2).unwrap();
        let e11 = m.from_components(&[1, 0, 0, 0]).unwrap();
        assert_eq!(
            formal_matrix_ks(&m, e11).unwrap_err(),
            RingError::NotCentral { element: e11 }
        );
        assert!(formal_matrix_ns(&m, 2, e11).is_err());
    }

    #[test]
    fn trivial_extension_squares_module_to_zero() {
        let z2 = make_zmod(2).unwrap();
        let t = trivial_extension(&z2).unwrap();
        assert_eq!(t.size(), 4);
        let m = t.from_components(&[0, 1]).unwrap();
        assert_eq!(t.mul(m, m), t.zero());
        check_axioms(&trivial_extension(&make_zmod(4).unwrap()).unwrap(), 0).unwrap();
    }

    #[test]
    fn quotients() {
        let z4 = make_zmod(4).unwrap();
        let q = quotient(&z4, &ElementSet::from_members(4, [0, 2])).unwrap();
        assert_eq!(q.size(), 2);
        assert_eq!(q.mul(1, 1), 1);
        assert_eq!(q.add(1, 1), 0);
        let triv = quotient(&z4, &ElementSet::from_members(4, [0])).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(triv.mul(a, b), z4.mul(a, b));
            }
        }
        assert!(matches!(
            quotient(&z4, &ElementSet::from_members(4, [0, 1])),
            Err(RingError::NotIdeal(_))
        ));
    }

    #[test]
    fn size_cap_is_enforced() {
        let z4 = make_zmod(4).unwrap();
        assert!(matches!(matrix_ring(&z4, 4), Err(RingError::SizeCap { .. })));
    }
}
