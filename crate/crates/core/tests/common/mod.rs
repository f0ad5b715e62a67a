//! Brute-force reference rings for cross-checking the library.
//!
//! Elements are coordinate vectors; addition is coordinate-wise modulo a
//! fixed modulus per coordinate, and multiplication is an explicit closure.
//! Nothing here goes through the library's tables.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

pub type V = Vec<u64>;
type MulFn = Arc<dyn Fn(&[u64], &[u64]) -> V + Send + Sync>;

/// A coefficient ring for the matrix-style constructions below.
#[derive(Clone)]
pub struct Base {
    pub mods: Vec<u64>,
    pub one: V,
    pub mul: MulFn,
    /// A ring endomorphism, used by skew constructions.
    pub alpha: Arc<dyn Fn(&[u64]) -> V + Send + Sync>,
}

impl Base {
    pub fn zmod(m: u64) -> Self {
        Self::zmod_product(&[m])
    }

    pub fn zmod_product(ms: &[u64]) -> Self {
        let mods = ms.to_vec();
        let m2 = mods.clone();
        Base {
            one: ms.iter().map(|&m| 1 % m).collect(),
            mods,
            mul: Arc::new(move |a, b| a.iter().zip(b).zip(&m2).map(|((x, y), m)| x * y % m).collect()),
            alpha: Arc::new(|a| a.to_vec()),
        }
    }

    /// GF(4) as `a + b t` with `t^2 = t + 1`.
    pub fn gf4() -> Self {
        Base {
            mods: vec![2, 2],
            one: vec![1, 0],
            mul: Arc::new(|x, y| {
                let (a, b, c, d) = (x[0], x[1], y[0], y[1]);
                // (a + bt)(c + dt) = ac + (ad + bc)t + bd(t + 1)
                vec![(a * c + b * d) % 2, (a * d + b * c + b * d) % 2]
            }),
            alpha: Arc::new(|x| x.to_vec()),
        }
    }

    pub fn gf4_frobenius() -> Self {
        let mut b = Self::gf4();
        let mul = b.mul.clone();
        b.alpha = Arc::new(move |x| mul(x, x));
        b
    }

    pub fn width(&self) -> usize {
        self.mods.len()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> V {
        a.iter().zip(b).zip(&self.mods).map(|((x, y), m)| (x + y) % m).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> V {
        (self.mul)(a, b)
    }

    pub fn zero(&self) -> V {
        vec![0; self.width()]
    }

    pub fn pow(&self, a: &[u64], k: u32) -> V {
        let mut acc = self.one.clone();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

pub struct Brute {
    pub mods: Vec<u64>,
    pub elems: Vec<V>,
    pub one: V,
    mul: MulFn,
    facts: OnceLock<Facts>,
}

struct Facts {
    units: HashSet<V>,
    idempotents: Vec<V>,
    nilpotents: HashSet<V>,
}

fn cartesian(mods: &[u64]) -> Vec<V> {
    let mut out = vec![vec![]];
    for &m in mods {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..m).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

impl Brute {
    pub fn new(mods: Vec<u64>, one: V, mul: MulFn, keep: impl Fn(&[u64]) -> bool) -> Self {
        let elems = cartesian(&mods).into_iter().filter(|v| keep(v)).collect();
        Brute {
            mods,
            elems,
            one,
            mul,
            facts: OnceLock::new(),
        }
    }

    fn facts(&self) -> &Facts {
        self.facts.get_or_init(|| Facts {
            units: self
                .elems
                .iter()
                .filter(|a| self.elems.iter().any(|b| self.mul(a, b) == self.one && self.mul(b, a) == self.one))
                .cloned()
                .collect(),
            idempotents: self.elems.iter().filter(|e| self.mul(e, e) == **e).cloned().collect(),
            nilpotents: self.elems.iter().filter(|q| self.nil_by_powers(q)).cloned().collect(),
        })
    }

    /// `q^(2^t) = 0` with `2^t >= |R|`, which bounds any nilpotency index.
    fn nil_by_powers(&self, q: &[u64]) -> bool {
        let mut p = q.to_vec();
        let mut reach = 1;
        while reach < self.size() {
            p = self.mul(&p, &p);
            reach *= 2;
        }
        p == self.zero()
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn zero(&self) -> V {
        vec![0; self.mods.len()]
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> V {
        a.iter().zip(b).zip(&self.mods).map(|((x, y), m)| (x + y) % m).collect()
    }

    pub fn neg(&self, a: &[u64]) -> V {
        a.iter().zip(&self.mods).map(|(x, m)| (m - x) % m).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> V {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> V {
        (self.mul)(a, b)
    }

    pub fn is_unit(&self, a: &[u64]) -> bool {
        self.facts().units.contains(a)
    }

    pub fn is_idempotent(&self, e: &[u64]) -> bool {
        self.mul(e, e) == e
    }

    pub fn is_nilpotent(&self, q: &[u64]) -> bool {
        self.facts().nilpotents.contains(q)
    }

    pub fn units(&self) -> Vec<V> {
        self.elems.iter().filter(|a| self.is_unit(a)).cloned().collect()
    }

    pub fn idempotents(&self) -> Vec<V> {
        self.facts().idempotents.clone()
    }

    pub fn nilpotents(&self) -> Vec<V> {
        self.elems.iter().filter(|a| self.is_nilpotent(a)).cloned().collect()
    }

    /// `a = q + s e` with `q` nilpotent, `e` idempotent, `eq = qe`, for some
    /// sign `s` in `signs`.
    fn has_decomposition(&self, a: &[u64], idem: &[V], signs: &[i8]) -> bool {
        idem.iter().any(|e| {
            signs.iter().any(|&s| {
                let q = if s > 0 { self.sub(a, e) } else { self.add(a, e) };
                self.is_nilpotent(&q) && self.mul(e, &q) == self.mul(&q, e)
            })
        })
    }

    fn all_decompose(&self, only_non_units: bool, signs: &[i8]) -> bool {
        let idem = self.idempotents();
        self.elems
            .iter()
            .filter(|a| !(only_non_units && self.is_unit(a)))
            .all(|a| self.has_decomposition(a, &idem, signs))
    }

    pub fn gswnc(&self) -> bool {
        self.all_decompose(true, &[1, -1])
    }

    pub fn gsnc(&self) -> bool {
        self.all_decompose(true, &[1])
    }

    pub fn swnc(&self) -> bool {
        self.all_decompose(false, &[1, -1])
    }

    pub fn snc(&self) -> bool {
        self.all_decompose(false, &[1])
    }

    /// Non-units closed under addition.
    pub fn is_local(&self) -> bool {
        let non: Vec<&V> = self.elems.iter().filter(|a| !self.is_unit(a)).collect();
        !non.is_empty()
            && self.one != self.zero()
            && non.iter().all(|a| non.iter().all(|b| !self.is_unit(&self.add(a, b))))
    }

    /// `x` with `1 - r x` a unit for every `r`.
    pub fn jacobson(&self) -> Vec<V> {
        self.elems
            .iter()
            .filter(|x| self.elems.iter().all(|r| self.is_unit(&self.sub(&self.one, &self.mul(r, x)))))
            .cloned()
            .collect()
    }
}

pub fn base_ring(b: &Base) -> Brute {
    Brute::new(b.mods.clone(), b.one.clone(), b.mul.clone(), |_| true)
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Full,
    Upper,
    /// Upper triangular with all diagonal entries equal.
    EqualDiag,
}

/// `n x n` matrices over `b`.
pub fn matrices(b: &Base, n: usize, shape: Shape) -> Brute {
    let w = b.width();
    let mods: Vec<u64> = (0..n * n).flat_map(|_| b.mods.clone()).collect();
    let mut one = vec![0; n * n * w];
    for i in 0..n {
        one[(i * n + i) * w..(i * n + i + 1) * w].copy_from_slice(&b.one);
    }
    let bb = b.clone();
    let scalar = w == 1;
    let modulus = b.mods[0];
    let mul: MulFn = Arc::new(move |x, y| {
        if scalar {
            let mut out = vec![0; n * n];
            for i in 0..n {
                for k in 0..n {
                    let a = x[i * n + k];
                    if a != 0 {
                        for j in 0..n {
                            out[i * n + j] = (out[i * n + j] + a * y[k * n + j]) % modulus;
                        }
                    }
                }
            }
            return out;
        }
        let at = |v: &[u64], i: usize, j: usize| v[(i * n + j) * w..(i * n + j + 1) * w].to_vec();
        let mut out = Vec::with_capacity(n * n * w);
        for i in 0..n {
            for j in 0..n {
                let mut acc = bb.zero();
                for k in 0..n {
                    acc = bb.add(&acc, &bb.mul(&at(x, i, k), &at(y, k, j)));
                }
                out.extend(acc);
            }
        }
        out
    });
    let keep = move |v: &[u64]| {
        let block = |i: usize, j: usize| &v[(i * n + j) * w..(i * n + j + 1) * w];
        match shape {
            Shape::Full => true,
            Shape::Upper | Shape::EqualDiag => {
                let lower_zero = (0..n).all(|i| (0..i).all(|j| block(i, j).iter().all(|&c| c == 0)));
                lower_zero && (shape == Shape::Upper || (1..n).all(|i| block(i, i) == block(0, 0)))
            }
        }
    };
    Brute::new(mods, one, mul, keep)
}

/// `R[x, alpha] / (x^n)` as coefficient tuples `(a_0, ..., a_(n-1))`, with
/// `x r = alpha(r) x`.
pub fn skew_truncated(b: &Base, n: usize) -> Brute {
    let w = b.width();
    let mods: Vec<u64> = (0..n).flat_map(|_| b.mods.clone()).collect();
    let mut one = vec![0; n * w];
    one[..w].copy_from_slice(&b.one);
    let bb = b.clone();
    let mul: MulFn = Arc::new(move |x, y| {
        let at = |v: &[u64], i: usize| v[i * w..(i + 1) * w].to_vec();
        let mut out = Vec::with_capacity(n * w);
        for i in 0..n {
            let mut acc = bb.zero();
            // a_j x^j b_(i-j) x^(i-j) = a_j alpha^j(b_(i-j)) x^i
            for j in 0..=i {
                let mut rhs = at(y, i - j);
                for _ in 0..j {
                    rhs = (bb.alpha)(&rhs);
                }
                acc = bb.add(&acc, &bb.mul(&at(x, j), &rhs));
            }
            out.extend(acc);
        }
        out
    });
    Brute::new(mods, one, mul, |_| true)
}

/// `M_n(R; s)`: `c_ij = sum_k s^(1 + d_ij - d_ik - d_kj) a_ik b_kj`.
pub fn generalized_matrices(b: &Base, n: usize, s: &[u64]) -> Brute {
    let w = b.width();
    let mods: Vec<u64> = (0..n * n).flat_map(|_| b.mods.clone()).collect();
    let mut one = vec![0; n * n * w];
    for i in 0..n {
        one[(i * n + i) * w..(i * n + i + 1) * w].copy_from_slice(&b.one);
    }
    let (bb, s) = (b.clone(), s.to_vec());
    let d = |i: usize, j: usize| u32::from(i == j);
    let mul: MulFn = Arc::new(move |x, y| {
        let at = |v: &[u64], i: usize, j: usize| v[(i * n + j) * w..(i * n + j + 1) * w].to_vec();
        let mut out = Vec::with_capacity(n * n * w);
        for i in 0..n {
            for j in 0..n {
                let mut acc = bb.zero();
                for k in 0..n {
                    let e = 1 + d(i, j) - d(i, k) - d(k, j);
                    let term = bb.mul(&bb.pow(&s, e), &bb.mul(&at(x, i, k), &at(y, k, j)));
                    acc = bb.add(&acc, &term);
                }
                out.extend(acc);
            }
        }
        out
    });
    Brute::new(mods, one, mul, |_| true)
}

/// `K_s(R)`, laid out as `(a, x, y, b)` for `[[a, x], [y, b]]`.
pub fn ks(b: &Base, s: &[u64]) -> Brute {
    let w = b.width();
    let mods: Vec<u64> = (0..4).flat_map(|_| b.mods.clone()).collect();
    let mut one = vec![0; 4 * w];
    one[..w].copy_from_slice(&b.one);
    one[3 * w..].copy_from_slice(&b.one);
    let (bb, s) = (b.clone(), s.to_vec());
    let mul: MulFn = Arc::new(move |p, q| {
        let part = |v: &[u64], k: usize| v[k * w..(k + 1) * w].to_vec();
        let (a1, x1, y1, b1) = (part(p, 0), part(p, 1), part(p, 2), part(p, 3));
        let (a2, x2, y2, b2) = (part(q, 0), part(q, 1), part(q, 2), part(q, 3));
        let m = |u: &[u64], v: &[u64]| bb.mul(u, v);
        let mut out = bb.add(&m(&a1, &a2), &m(&s, &m(&x1, &y2)));
        out.extend(bb.add(&m(&a1, &x2), &m(&x1, &b2)));
        out.extend(bb.add(&m(&y1, &a2), &m(&b1, &y2)));
        out.extend(bb.add(&m(&s, &m(&y1, &x2)), &m(&b1, &b2)));
        out
    });
    Brute::new(mods, one, mul, |_| true)
}

/// `T(R, R)`: `(r, m)(s, n) = (rs, rn + ms)`.
pub fn trivial_extension(b: &Base) -> Brute {
    let w = b.width();
    let mods: Vec<u64> = b.mods.iter().chain(&b.mods).copied().collect();
    let mut one = b.one.clone();
    one.extend(b.zero());
    let bb = b.clone();
    let mul: MulFn = Arc::new(move |p, q| {
        let (r, m) = p.split_at(w);
        let (s, n) = q.split_at(w);
        let mut out = bb.mul(r, s);
        out.extend(bb.add(&bb.mul(r, n), &bb.mul(m, s)));
        out
    });
    Brute::new(mods, one, mul, |_| true)
}

/// `RG` over `Z_m` with `G` given by its multiplication table.
pub fn group_ring(m: u64, table: &[Vec<usize>]) -> Brute {
    let g = table.len();
    let t = table.to_vec();
    let mut one = vec![0; g];
    one[0] = 1 % m;
    let mul: MulFn = Arc::new(move |x, y| {
        let mut out = vec![0; g];
        for a in 0..g {
            for b in 0..g {
                let c = t[a][b];
                out[c] = (out[c] + x[a] * y[b]) % m;
            }
        }
        out
    });
    Brute::new(vec![m; g], one, mul, |_| true)
}

pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

pub fn klein_table() -> Vec<Vec<usize>> {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}
