//! Finite groups given by composition tables, plus the handful of standard
//! families needed for group rings.

use std::sync::Arc;

use crate::error::{Result, RingError};
use crate::ring::check_cap;

pub type GroupElem = usize;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    label: String,
    size: usize,
    table: Arc<Vec<GroupElem>>,
    identity: GroupElem,
    inverse: Vec<GroupElem>,
    names: Vec<String>,
}

impl FiniteGroup {
    /// Builds a group from its full table, validating the group axioms.
    pub fn from_table(
        label: impl Into<String>,
        size: usize,
        table: Vec<GroupElem>,
        names: Vec<String>,
    ) -> Result<Self> {
        let label = label.into();
        let bad = |msg: String| Err(RingError::InvalidArgument(format!("{label}: {msg}")));
        if size == 0 || table.len() != size * size || names.len() != size {
            return bad("malformed table".into());
        }
        if table.iter().any(|&x| x >= size) {
            return bad("table entry out of range".into());
        }
        let op = |a: usize, b: usize| table[a * size + b];
        let Some(identity) = (0..size).find(|&e| (0..size).all(|a| op(e, a) == a && op(a, e) == a))
        else {
            return bad("no identity".into());
        };
        let mut inverse = vec![0; size];
        for a in 0..size {
            match (0..size).find(|&b| op(a, b) == identity && op(b, a) == identity) {
                Some(b) => inverse[a] = b,
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if op(op(a, b), c) != op(a, op(b, c)) {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(Self {
            label,
            size,
            table: Arc::new(table),
            identity,
            inverse,
            names,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> GroupElem {
        self.identity
    }

    #[inline]
    pub fn compose(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        self.table[a * self.size + b]
    }

    pub fn inverse(&self, a: GroupElem) -> GroupElem {
        self.inverse[a]
    }

    pub fn name(&self, a: GroupElem) -> &str {
        &self.names[a]
    }

    pub fn elements(&self) -> std::ops::Range<GroupElem> {
        0..self.size
    }

    pub fn order_of(&self, a: GroupElem) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.compose(x, a);
            n += 1;
        }
        n
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }
}

pub fn make_cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(RingError::InvalidArgument("cyclic group of order 0".into()));
    }
    check_cap(n as u128)?;
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            k => format!("g^{k}"),
        })
        .collect();
    FiniteGroup::from_table(format!("C{n}"), n, table, names)
}

/// `G × H`, index `g·|H| + h`.
pub fn make_group_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let size = check_cap(g.size() as u128 * h.size() as u128)?;
    let m = h.size();
    let mut table = Vec::with_capacity(size * size);
    for a in 0..size {
        for b in 0..size {
            table.push(g.compose(a / m, b / m) * m + h.compose(a % m, b % m));
        }
    }
    let names = (0..size)
        .map(|a| format!("({},{})", g.name(a / m), h.name(a % m)))
        .collect();
    FiniteGroup::from_table(format!("{} x {}", g.label(), h.label()), size, table, names)
}

/// Dihedral group of order `2n`: index `j·n + i` stands for `r^i s^j`.
pub fn make_dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(RingError::InvalidArgument("dihedral group needs n ≥ 1".into()));
    }
    let size = check_cap(2 * n as u128)?;
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        for y in 0..size {
            let (i, a) = (x % n, x / n);
            let (k, b) = (y % n, y / n);
            // r^i s^a r^k s^b = r^{i ± k} s^{a+b}
            let rot = if a == 0 { (i + k) % n } else { (i + n - k) % n };
            table.push(((a + b) % 2) * n + rot);
        }
    }
    let names = (0..size)
        .map(|x| {
            let (i, a) = (x % n, x / n);
            let r = match i {
                0 => String::new(),
                1 => "r".into(),
                i => format!("r^{i}"),
            };
            match (r.is_empty(), a) {
                (true, 0) => "1".into(),
                (true, _) => "s".into(),
                (false, 0) => r,
                (false, _) => format!("{r}s"),
            }
        })
        .collect();
    FiniteGroup::from_table(format!("D{n}"), size, table, names)
}

/// Quaternion group: index `2·u + sign`, `u ∈ {1, i, j, k}`, sign bit for `−`.
pub fn make_quaternion8() -> Result<FiniteGroup> {
    // unit products: (result unit, negated)
    const MUL: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let mut table = Vec::with_capacity(64);
    for x in 0..8 {
        for y in 0..8 {
            let (u, su) = (x / 2, x % 2 == 1);
            let (v, sv) = (y / 2, y % 2 == 1);
            let (w, sw) = MUL[u][v];
            table.push(2 * w + usize::from(su ^ sv ^ sw));
        }
    }
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FiniteGroup::from_table("Q8", 8, table, names)
}

/// Symmetric group on three letters, permutations in lexicographic order.
pub fn make_symmetric3() -> Result<FiniteGroup> {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let mut table = Vec::with_capacity(36);
    for p in &perms {
        for q in &perms {
            // (p ∘ q)(i) = p(q(i))
            table.push(index([p[q[0]], p[q[1]], p[q[2]]]));
        }
    }
    let names = perms
        .iter()
        .map(|p| format!("[{}{}{}]", p[0] + 1, p[1] + 1, p[2] + 1))
        .collect();
    FiniteGroup::from_table("S3", 6, table, names)
}

/// Every element has order a power of `p`.
pub fn is_p_group(g: &FiniteGroup, p: usize) -> bool {
    g.elements().all(|a| {
        let mut n = g.order_of(a);
        while n % p == 0 {
            n /= p;
        }
        n == 1
    })
}

pub fn group_center(g: &FiniteGroup) -> Vec<GroupElem> {
    g.elements()
        .filter(|&a| g.elements().all(|b| g.compose(a, b) == g.compose(b, a)))
        .collect()
}

/// Terms of the upper central series until it stabilizes.
pub fn upper_central_series(g: &FiniteGroup) -> Vec<Vec<GroupElem>> {
    let mut series = vec![vec![g.identity()]];
    loop {
        let prev = series.last().unwrap();
        let mut in_prev = vec![false; g.size()];
        for &x in prev {
            in_prev[x] = true;
        }
        // x·Z_i is central in G/Z_i iff every commutator [x, y] lies in Z_i
        let next: Vec<GroupElem> = g
            .elements()
            .filter(|&x| {
                g.elements().all(|y| {
                    let c = g.compose(
                        g.compose(x, y),
                        g.compose(g.inverse(x), g.inverse(y)),
                    );
                    in_prev[c]
                })
            })
            .collect();
        if next.len() == prev.len() {
            return series;
        }
        series.push(next);
    }
}

pub fn is_nilpotent_group(g: &FiniteGroup) -> bool {
    upper_central_series(g).last().unwrap().len() == g.size()
}
