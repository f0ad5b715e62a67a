//! Python bindings: build rings from expressions, classify them, decompose
//! elements, list distinguished subsets and run the harness.

use std::collections::BTreeMap;
use std::sync::Arc;

use pyo3::exceptions::{PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ringlab::classify::{self, DecompositionKind};
use ringlab::expr;
use ringlab::group_ring::GroupRing;
use ringlab::harness::{self, Format, Status};
use ringlab::subsets;
use ringlab::{Elem, FiniteRing, RingError};

fn to_py(e: RingError) -> PyErr {
    match e {
        RingError::Inconsistent(_) => PyRuntimeError::new_err(e.to_string()),
        RingError::UnknownCheck(_) => PyKeyError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[derive(FromPyObject)]
enum ElementArg {
    Index(usize),
    Text(String),
}

/// A witnessed decomposition `a = x ± y`.
#[pyclass(frozen, name = "Decomposition", module = "ringlab")]
struct PyDecomposition {
    #[pyo3(get)]
    kind: String,
    #[pyo3(get)]
    sign: i8,
    /// Idempotent for the nil-clean kinds, unit for strongly weakly clean.
    #[pyo3(get)]
    first: Elem,
    /// Nilpotent for the nil-clean kinds, idempotent for strongly weakly clean.
    #[pyo3(get)]
    second: Elem,
    #[pyo3(get)]
    commuting: bool,
}

#[pymethods]
impl PyDecomposition {
    fn __repr__(&self) -> String {
        let sign = if self.sign > 0 { '+' } else { '-' };
        let commuting = if self.commuting { "True" } else { "False" };
        format!(
            "Decomposition(kind='{}', sign='{sign}', first={}, second={}, commuting={commuting})",
            self.kind, self.first, self.second
        )
    }
}

/// A finite ring built from an expression such as `"M2(Z3)"`.
#[pyclass(frozen, name = "Ring", module = "ringlab")]
struct PyRing {
    ring: Arc<FiniteRing>,
    group_ring: Option<GroupRing>,
}

impl PyRing {
    fn element(&self, a: ElementArg) -> PyResult<Elem> {
        match a {
            ElementArg::Index(i) => self.ring.check_index(i).map_err(to_py),
            ElementArg::Text(t) => expr::parse_element(&self.ring, &t).map_err(to_py),
        }
    }
}

#[pymethods]
impl PyRing {
    #[new]
    fn new(expression: &str) -> PyResult<Self> {
        let built = expr::build(expression).map_err(to_py)?;
        Ok(PyRing {
            ring: built.ring,
            group_ring: built.group_ring,
        })
    }

    #[getter]
    fn label(&self) -> String {
        self.ring.label().to_string()
    }

    #[getter]
    fn size(&self) -> usize {
        self.ring.size()
    }

    #[getter]
    fn zero(&self) -> Elem {
        self.ring.zero()
    }

    #[getter]
    fn one(&self) -> Elem {
        self.ring.one()
    }

    fn __len__(&self) -> usize {
        self.ring.size()
    }

    fn __repr__(&self) -> String {
        format!("Ring('{}')", self.ring.label())
    }

    fn describe(&self, a: ElementArg) -> PyResult<String> {
        Ok(self.ring.describe(self.element(a)?))
    }

    fn element_index(&self, a: ElementArg) -> PyResult<Elem> {
        self.element(a)
    }

    fn add(&self, a: ElementArg, b: ElementArg) -> PyResult<Elem> {
        Ok(self.ring.add(self.element(a)?, self.element(b)?))
    }

    fn mul(&self, a: ElementArg, b: ElementArg) -> PyResult<Elem> {
        Ok(self.ring.mul(self.element(a)?, self.element(b)?))
    }

    fn neg(&self, a: ElementArg) -> PyResult<Elem> {
        Ok(self.ring.neg(self.element(a)?))
    }

    /// Every predicate, by name.
    fn classify(&self) -> PyResult<BTreeMap<String, bool>> {
        let report = classify::classify(&self.ring).map_err(to_py)?;
        Ok(report.predicates.into_iter().map(|p| (p.name, p.verdict.holds)).collect())
    }

    /// One predicate as `(holds, counterexample)`.
    fn check(&self, predicate: &str) -> PyResult<(bool, Option<Elem>)> {
        let v = classify::evaluate(&self.ring, predicate).map_err(to_py)?;
        Ok((v.holds, v.counterexample))
    }

    fn is_gswnc(&self) -> PyResult<bool> {
        Ok(classify::is_gswnc(&self.ring).map_err(to_py)?.holds)
    }

    /// The first decomposition of each kind, or `None`.
    fn decompose(&self, a: ElementArg) -> PyResult<BTreeMap<&'static str, Option<PyDecomposition>>> {
        let a = self.element(a)?;
        let r = &self.ring;
        let found = [
            ("snc", classify::snc_decompose(r, a)),
            ("wnc", classify::wnc_decompose(r, a)),
            ("swnc", classify::swnc_decompose(r, a)),
            ("swc", classify::swc_decompose(r, a)),
        ];
        Ok(found
            .into_iter()
            .map(|(name, d)| {
                let d = d.map(|d| PyDecomposition {
                    kind: match d.kind {
                        DecompositionKind::StronglyNilClean => "strongly-nil-clean",
                        DecompositionKind::WeaklyNilClean => "weakly-nil-clean",
                        DecompositionKind::StronglyWeaklyNilClean => "strongly-weakly-nil-clean",
                        DecompositionKind::StronglyWeaklyClean => "strongly-weakly-clean",
                    }
                    .to_string(),
                    sign: d.sign,
                    first: d.first_part,
                    second: d.nil_or_idem_part,
                    commuting: d.commuting,
                });
                (name, d)
            })
            .collect())
    }

    fn units(&self) -> Vec<Elem> {
        subsets::units(&self.ring).members().to_vec()
    }

    fn idempotents(&self) -> Vec<Elem> {
        subsets::idempotents(&self.ring).members().to_vec()
    }

    fn nilpotents(&self) -> Vec<Elem> {
        subsets::nilpotent_set(&self.ring).members().to_vec()
    }

    fn jacobson_radical(&self) -> Vec<Elem> {
        subsets::jacobson_radical(&self.ring).members().to_vec()
    }

    fn center(&self) -> Vec<Elem> {
        subsets::center(&self.ring).members().to_vec()
    }

    /// Units, idempotents, nilpotents, Jacobson radical and center.
    fn subsets(&self) -> BTreeMap<&'static str, Vec<Elem>> {
        BTreeMap::from([
            ("units", self.units()),
            ("idempotents", self.idempotents()),
            ("nilpotents", self.nilpotents()),
            ("jacobson_radical", self.jacobson_radical()),
            ("center", self.center()),
        ])
    }

    #[getter]
    fn is_group_ring(&self) -> bool {
        self.group_ring.is_some()
    }

    /// Coefficient sum; only for group rings.
    fn augmentation(&self, a: ElementArg) -> PyResult<Elem> {
        let gr = self
            .group_ring
            .as_ref()
            .ok_or_else(|| PyValueError::new_err(format!("{} is not a group ring", self.ring.label())))?;
        Ok(gr.augmentation(self.element(a)?))
    }
}

/// Canonical text of an expression.
#[pyfunction]
fn parse(expression: &str) -> PyResult<String> {
    Ok(expr::parse(expression).map_err(to_py)?.to_string())
}

#[pyfunction]
fn set_max_size(cap: usize) {
    ringlab::ring::set_max_size(cap);
}

#[pyfunction]
fn check_ids() -> Vec<&'static str> {
    harness::check_ids()
}

#[pyfunction]
fn catalog() -> Vec<String> {
    harness::default_catalog().labels()
}

/// Runs checks over the default catalog. Returns `(passed, report)`, where
/// `passed` is false if any check failed and `report` is the JSON document.
#[pyfunction]
#[pyo3(signature = (checks = None, format = "json"))]
fn verify(py: Python<'_>, checks: Option<Vec<String>>, format: &str) -> PyResult<(bool, String)> {
    let format: Format = format.parse().map_err(to_py)?;
    py.detach(|| {
        let catalog = harness::default_catalog();
        let ids: Vec<&str> = match &checks {
            Some(c) => c.iter().map(String::as_str).collect(),
            None => harness::check_ids(),
        };
        let results = harness::run_checks(&ids, &catalog, false).map_err(to_py)?;
        let passed = results.iter().all(|r| r.status != Status::Fail);
        Ok((passed, harness::report(&results, format)))
    })
}

#[pymodule]
#[pyo3(name = "ringlab")]
fn ringlab_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PyDecomposition>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(set_max_size, m)?)?;
    m.add_function(wrap_pyfunction!(check_ids, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("SCHEMA_VERSION", harness::SCHEMA_VERSION)?;
    Ok(())
}
