//! Finite rings with elements encoded as indices `0..size`.
//!
//! Every construction documents its index layout. Consumers outside this
//! module only go through [`FiniteRing::add`], [`FiniteRing::mul`],
//! [`FiniteRing::neg`] and the distinguished `zero`/`one`, so classifiers
//! never depend on how a ring was built.

mod axioms;
mod construct;
mod endo;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use smallvec::SmallVec;

use crate::error::{Result, RingError};
use crate::subsets::ElementSet;

pub use axioms::{check_axioms, AxiomCheck, EXHAUSTIVE_AXIOM_LIMIT, SAMPLED_TRIPLES};
pub use construct::{
    direct_product, equal_diag_triangular, formal_matrix_ks, formal_matrix_ns, make_gf, make_zmod,
    matrix_ring, quotient, quotient_map, skew_triangular, trivial_extension, upper_triangular,
    Quotient,
};
pub(crate) use construct::{is_prime, trivial_extension_with, validate_ideal, Bimodule};
pub use endo::RingEndomorphism;

/// Element of a finite ring, identified by its index.
pub type Elem = usize;

/// Rings up to this many elements get materialized Cayley tables.
pub const TABLE_LIMIT: usize = 4096;

/// Default cap on the number of elements any construction may produce.
pub const DEFAULT_MAX_SIZE: usize = 1 << 16;

static MAX_SIZE: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_SIZE);

pub fn max_size() -> usize {
    MAX_SIZE.load(Ordering::Relaxed)
}

/// Changes the process-wide size cap used by every constructor.
pub fn set_max_size(cap: usize) {
    MAX_SIZE.store(cap.max(1), Ordering::Relaxed);
}

pub(crate) fn check_cap(requested: u128) -> Result<usize> {
    let cap = max_size();
    if requested > cap as u128 {
        return Err(RingError::SizeCap { requested, cap });
    }
    Ok(requested as usize)
}

/// Computes `base^exp` as a `u128`, saturating instead of overflowing.
pub(crate) fn checked_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

/// Ring operations over element indices.
pub trait RingOps: Send + Sync {
    fn add(&self, a: Elem, b: Elem) -> Elem;
    fn mul(&self, a: Elem, b: Elem) -> Elem;
    fn neg(&self, a: Elem) -> Elem;
}

type BinFn = Box<dyn Fn(Elem, Elem) -> Elem + Send + Sync>;
type UnFn = Box<dyn Fn(Elem) -> Elem + Send + Sync>;

/// `RingOps` backed by closures.
pub struct ClosureOps {
    add: BinFn,
    mul: BinFn,
    neg: UnFn,
}

impl ClosureOps {
    pub fn new(
        add: impl Fn(Elem, Elem) -> Elem + Send + Sync + 'static,
        mul: impl Fn(Elem, Elem) -> Elem + Send + Sync + 'static,
        neg: impl Fn(Elem) -> Elem + Send + Sync + 'static,
    ) -> Self {
        Self {
            add: Box::new(add),
            mul: Box::new(mul),
            neg: Box::new(neg),
        }
    }
}

impl RingOps for ClosureOps {
    fn add(&self, a: Elem, b: Elem) -> Elem {
        (self.add)(a, b)
    }
    fn mul(&self, a: Elem, b: Elem) -> Elem {
        (self.mul)(a, b)
    }
    fn neg(&self, a: Elem) -> Elem {
        (self.neg)(a)
    }
}

struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

enum Backend {
    Tables(Tables),
    Lazy(Arc<dyn RingOps>),
}

type Describer = Arc<dyn Fn(Elem) -> String + Send + Sync>;

/// Memoized subsets, filled on first use by the `subsets` module.
#[derive(Default)]
pub(crate) struct Cache {
    pub inverses: OnceLock<Vec<Option<Elem>>>,
    pub units: OnceLock<ElementSet>,
    pub idempotents: OnceLock<ElementSet>,
    pub nil_exponents: OnceLock<Vec<Option<u32>>>,
    pub center: OnceLock<ElementSet>,
    pub jacobson: OnceLock<ElementSet>,
    pub prime_radical: OnceLock<ElementSet>,
}

/// An immutable finite ring with identity.
pub struct FiniteRing {
    label: String,
    size: usize,
    zero: Elem,
    one: Elem,
    backend: Backend,
    describe: Option<Describer>,
    radices: Option<Vec<usize>>,
    commutative_hint: OnceLock<bool>,
    pub(crate) cache: Cache,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("size", &self.size)
            .field("tabulated", &self.is_tabulated())
            .finish()
    }
}

impl FiniteRing {
    /// Wraps `ops` into a ring, materializing Cayley tables when the ring is
    /// small enough.
    pub fn from_ops(
        label: impl Into<String>,
        size: usize,
        zero: Elem,
        one: Elem,
        ops: Arc<dyn RingOps>,
    ) -> Self {
        assert!(size >= 1, "a ring has at least one element");
        assert!(zero < size && one < size);
        let backend = if size <= TABLE_LIMIT {
            let mut add = Vec::with_capacity(size * size);
            let mut mul = Vec::with_capacity(size * size);
            for a in 0..size {
                for b in 0..size {
                    add.push(ops.add(a, b) as u16);
                    mul.push(ops.mul(a, b) as u16);
                }
            }
            let neg = (0..size).map(|a| ops.neg(a) as u16).collect();
            Backend::Tables(Tables { add, mul, neg })
        } else {
            Backend::Lazy(ops)
        };
        Self {
            label: label.into(),
            size,
            zero,
            one,
            backend,
            describe: None,
            radices: None,
            commutative_hint: OnceLock::new(),
            cache: Cache::default(),
        }
    }

    pub fn with_describe(mut self, f: impl Fn(Elem) -> String + Send + Sync + 'static) -> Self {
        self.describe = Some(Arc::new(f));
        self
    }

    /// Records the mixed-radix layout (most significant component first).
    pub fn with_radices(mut self, radices: Vec<usize>) -> Self {
        debug_assert_eq!(radices.iter().product::<usize>(), self.size);
        self.radices = Some(radices);
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn is_zero_ring(&self) -> bool {
        self.size == 1
    }

    pub fn is_tabulated(&self) -> bool {
        matches!(self.backend, Backend::Tables(_))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.backend {
            Backend::Tables(t) => t.add[a * self.size + b] as Elem,
            Backend::Lazy(ops) => ops.add(a, b),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.backend {
            Backend::Tables(t) => t.mul[a * self.size + b] as Elem,
            Backend::Lazy(ops) => ops.mul(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.backend {
            Backend::Tables(t) => t.neg[a] as Elem,
            Backend::Lazy(ops) => ops.neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    /// `a^exp`, with `a^0 = 1`.
    pub fn pow(&self, a: Elem, mut exp: u64) -> Elem {
        let mut base = a;
        let mut acc = self.one;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// `k · a` for an integer `k`.
    pub fn scale(&self, k: i64, a: Elem) -> Elem {
        let mut acc = self.zero;
        let mut base = if k < 0 { self.neg(a) } else { a };
        let mut n = k.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            n >>= 1;
        }
        acc
    }

    /// The image of the integer `k` in the ring, `k · 1`.
    pub fn int(&self, k: i64) -> Elem {
        self.scale(k, self.one)
    }

    pub fn additive_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.zero {
            x = self.add(x, a);
            n += 1;
        }
        n
    }

    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    pub fn is_commutative(&self) -> bool {
        *self.commutative_hint.get_or_init(|| {
            self.elements()
                .all(|a| (a + 1..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
        })
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn check_index(&self, index: Elem) -> Result<Elem> {
        if index < self.size {
            Ok(index)
        } else {
            Err(RingError::ElementOutOfRange {
                index,
                size: self.size,
            })
        }
    }

    pub fn radices(&self) -> Option<&[usize]> {
        self.radices.as_deref()
    }

    /// Splits an index into its layout components.
    pub fn components(&self, a: Elem) -> Option<Vec<usize>> {
        let radices = self.radices.as_ref()?;
        let mut out = vec![0; radices.len()];
        let mut rest = a;
        for (slot, &r) in out.iter_mut().zip(radices).rev() {
            *slot = rest % r;
            rest /= r;
        }
        Some(out)
    }

    /// Inverse of [`components`](Self::components).
    pub fn from_components(&self, comps: &[usize]) -> Result<Elem> {
        let radices = self.radices.as_ref().ok_or_else(|| {
            RingError::InvalidArgument(format!("{} has no component layout", self.label))
        })?;
        if comps.len() != radices.len() {
            return Err(RingError::InvalidArgument(format!(
                "{} expects {} components, got {}",
                self.label,
                radices.len(),
                comps.len()
            )));
        }
        let mut idx = 0;
        for (&c, &r) in comps.iter().zip(radices) {
            if c >= r {
                return Err(RingError::InvalidArgument(format!(
                    "component {c} out of range 0..{r}"
                )));
            }
            idx = idx * r + c;
        }
        Ok(idx)
    }

    pub fn describe(&self, a: Elem) -> String {
        match &self.describe {
            Some(f) => f(a),
            None => format!("#{a}"),
        }
    }
}

/// Mixed-radix codec for rings whose elements are tuples over one base ring.
#[derive(Clone, Debug)]
pub(crate) struct Radix {
    base: usize,
    len: usize,
}

pub(crate) type Digits = SmallVec<[Elem; 16]>;

impl Radix {
    pub fn new(base: usize, len: usize) -> Self {
        Self { base, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn decode(&self, mut index: Elem) -> Digits {
        let mut out: Digits = SmallVec::from_elem(0, self.len);
        for slot in out.iter_mut().rev() {
            *slot = index % self.base;
            index /= self.base;
        }
        out
    }

    pub fn encode(&self, digits: &[Elem]) -> Elem {
        digits.iter().fold(0, |acc, &d| acc * self.base + d)
    }
}
