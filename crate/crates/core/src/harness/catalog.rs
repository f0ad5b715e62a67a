use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::classify;
use crate::error::{Result, RingError};
use crate::expr::{parse, Built, RingExpr};
use crate::group_ring::GroupRing;
use crate::ring::{Elem, FiniteRing};
use crate::subsets::{is_nilpotent, is_unit, jacobson_radical, nil_exponents};

/// The rings the harness checks against. Every label is the canonical
/// expression of its entry.
pub const DEFAULT_ENTRIES: &[&str] = &[
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12", "Z16", "Z27",
    "GF(2,2)", "GF(2,3)", "GF(3,2)",
    "Z2 x Z2", "Z2 x Z3", "Z3 x Z3", "Z2 x Z2 x Z3", "Z2 x Z3 x Z3",
    "Z2 x Z2 x Z2", "Z3 x Z3 x Z3", "Z4 x Z2 x Z2",
    "M2(Z2)", "M2(Z3)", "M2(Z4)", "M2(Z8)", "M3(Z2)",
    "T2(Z2)", "T2(Z3)", "T2(Z4)", "T3(Z2)", "T3(Z3)",
    "S2(Z3)", "S2(Z4)", "S3(Z2)",
    "Tskew2(GF(2,2), frobenius)", "Tskew2(GF(2,2), identity)", "Tskew2(Z4, identity)",
    "Tskew3(Z3, identity)",
    "K(Z4, 2)", "K(Z8, 2)", "K(Z4, 0)", "K(Z3, 0)",
    "MF2(Z4, 2)", "MF2(Z3, 0)", "MF3(Z2, 0)",
    "TE(Z2)", "TE(Z3)", "TE(Z4)", "TE(Z3 x Z3)",
    "Q(Z16, [4])", "Q(T2(Z4), [2])",
    "GR(Z2, C2)", "GR(Z4, C2)", "GR(Z2, C2 x C2)", "GR(Z2, C3)", "GR(Z6, C2)", "GR(Z3, C3)",
    "GR(Z3, C2)", "GR(Z2, C4)", "GR(Z4, C4)", "GR(Z2, D4)", "GR(Z2, Q8)", "GR(Z2, S3)",
];

/// A named list of ring expressions, built lazily and shared between checks.
pub struct Catalog {
    entries: Vec<RingExpr>,
    nodes: Mutex<HashMap<RingExpr, Arc<Node>>>,
}

impl Catalog {
    pub fn new(entries: Vec<RingExpr>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for e in &entries {
            if !seen.insert(e.to_string()) {
                return Err(RingError::InvalidArgument(format!("duplicate catalog label `{e}`")));
            }
        }
        Ok(Self {
            entries,
            nodes: Mutex::new(HashMap::new()),
        })
    }

    pub fn from_labels(labels: &[&str]) -> Result<Self> {
        Self::new(labels.iter().map(|l| parse(l)).collect::<Result<_>>()?)
    }

    pub fn entries(&self) -> &[RingExpr] {
        &self.entries
    }

    pub fn labels(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.to_string()).collect()
    }

    /// The shared node for `expr`, which need not be a catalog entry.
    pub fn node(&self, expr: &RingExpr) -> Arc<Node> {
        let mut nodes = self.nodes.lock().expect("catalog lock");
        nodes
            .entry(expr.clone())
            .or_insert_with(|| Arc::new(Node::new(expr.clone())))
            .clone()
    }

    /// Nodes for every entry, in catalog order.
    pub fn nodes(&self) -> Vec<Arc<Node>> {
        self.entries.iter().map(|e| self.node(e)).collect()
    }
}

pub fn default_catalog() -> Catalog {
    Catalog::from_labels(DEFAULT_ENTRIES).expect("default catalog parses")
}

/// A ring together with memoized ring-level facts.
pub struct Node {
    pub expr: RingExpr,
    pub label: String,
    built: OnceLock<Result<Built>>,
    gswnc: OnceLock<Result<classify::Verdict>>,
    swnc: OnceLock<Result<classify::Verdict>>,
    gsnc: OnceLock<Result<classify::Verdict>>,
    snc: OnceLock<Result<classify::Verdict>>,
    local: OnceLock<Result<classify::Verdict>>,
}

impl Node {
    fn new(expr: RingExpr) -> Self {
        Self {
            label: expr.to_string(),
            expr,
            built: OnceLock::new(),
            gswnc: OnceLock::new(),
            swnc: OnceLock::new(),
            gsnc: OnceLock::new(),
            snc: OnceLock::new(),
            local: OnceLock::new(),
        }
    }

    fn built(&self) -> Result<&Built> {
        self.built.get_or_init(|| self.expr.build()).as_ref().map_err(Clone::clone)
    }

    pub fn ring(&self) -> Result<&Arc<FiniteRing>> {
        Ok(&self.built()?.ring)
    }

    pub fn group_ring(&self) -> Result<Option<&GroupRing>> {
        Ok(self.built()?.group_ring.as_ref())
    }

    fn memo(
        &self,
        cell: &OnceLock<Result<classify::Verdict>>,
        f: fn(&FiniteRing) -> Result<classify::Verdict>,
    ) -> Result<classify::Verdict> {
        let r = self.ring()?;
        cell.get_or_init(|| f(r)).clone()
    }

    pub fn gswnc(&self) -> Result<bool> {
        Ok(self.gswnc_verdict()?.holds)
    }

    pub fn gswnc_verdict(&self) -> Result<classify::Verdict> {
        self.memo(&self.gswnc, classify::is_gswnc)
    }

    pub fn swnc(&self) -> Result<bool> {
        Ok(self.memo(&self.swnc, classify::is_swnc_ring)?.holds)
    }

    pub fn gsnc(&self) -> Result<bool> {
        Ok(self.memo(&self.gsnc, classify::is_gsnc)?.holds)
    }

    pub fn snc(&self) -> Result<bool> {
        Ok(self.memo(&self.snc, classify::is_snc_ring)?.holds)
    }

    pub fn local(&self) -> Result<bool> {
        Ok(self.memo(&self.local, classify::is_local)?.holds)
    }

    pub fn j_nil(&self) -> Result<bool> {
        let r = self.ring()?;
        Ok(jacobson_radical(r).iter().all(|a| is_nilpotent(r, a)))
    }

    pub fn int_is_unit(&self, k: i64) -> Result<bool> {
        let r = self.ring()?;
        Ok(is_unit(r, r.int(k)))
    }

    pub fn int_is_nilpotent(&self, k: i64) -> Result<bool> {
        let r = self.ring()?;
        Ok(nil_exponents(r)[r.int(k)].is_some())
    }

    pub fn contains_in_jacobson(&self, a: Elem) -> Result<bool> {
        Ok(jacobson_radical(self.ring()?).contains(a))
    }
}
