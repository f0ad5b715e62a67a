//! Executable checks of structural results about GSWNC rings, run over a
//! catalog of small rings and group rings.

mod catalog;
mod checks;
mod morita;

use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, RingError};
use crate::ring::Elem;

pub use catalog::{default_catalog, Catalog, Node, DEFAULT_ENTRIES};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Vacuous => "VACUOUS",
        }
    }
}

/// One applicable instance of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub label: String,
    pub verdict: Status,
    pub detail: String,
    /// Element indices backing the verdict, in the instance's ring.
    pub witness: Vec<Elem>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremCheck {
    pub id: String,
    pub location: String,
    pub statement: String,
    pub status: Status,
    pub examined: usize,
    pub applicable: usize,
    pub instances: Vec<InstanceResult>,
    /// Absent from canonical reports.
    pub wall_time_ms: Option<f64>,
}

impl TheoremCheck {
    pub fn failures(&self) -> impl Iterator<Item = &InstanceResult> {
        self.instances.iter().filter(|i| i.verdict == Status::Fail)
    }
}

/// Which way an equivalence is being checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Dir {
    Fwd,
    Rev,
}

/// What a check saw on one catalog instance.
#[derive(Clone, Debug)]
pub(crate) struct Obs {
    pub label: String,
    pub premise: bool,
    pub conclusion: bool,
    pub detail: String,
    pub witness: Vec<Elem>,
}

impl Obs {
    pub fn new(label: impl Into<String>, premise: bool, conclusion: bool) -> Self {
        Self {
            label: label.into(),
            premise,
            conclusion,
            detail: String::new(),
            witness: Vec::new(),
        }
    }

    /// `lhs ⇔ rhs`, oriented by `dir`.
    pub fn iff(label: impl Into<String>, dir: Dir, lhs: bool, rhs: bool) -> Self {
        match dir {
            Dir::Fwd => Self::new(label, lhs, rhs),
            Dir::Rev => Self::new(label, rhs, lhs),
        }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = d.into();
        self
    }

    pub fn witness(mut self, w: Vec<Elem>) -> Self {
        self.witness = w;
        self
    }
}

type Observe = fn(&Catalog, Dir) -> Result<Vec<Obs>>;

pub(crate) struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
    pub dir: Dir,
    pub observe: Observe,
}

/// All registered check ids, in report order.
pub fn check_ids() -> Vec<&'static str> {
    checks::REGISTRY.iter().map(|c| c.id).collect()
}

fn location(id: &str) -> String {
    let (kind, rest) = id.split_once('-').unwrap_or((id, ""));
    let kind = match kind {
        "Lemma" => "Lemma",
        "Prop" => "Proposition",
        "Cor" => "Corollary",
        "Thm" => "Theorem",
        "Ex" => "Example",
        other => other,
    };
    let number = rest
        .trim_end_matches("-fwd")
        .trim_end_matches("-rev")
        .trim_end_matches("-conv");
    if number.is_empty() {
        kind.to_string()
    } else {
        format!("{kind} {number}")
    }
}

fn execute(def: &CheckDef, catalog: &Catalog, timed: bool) -> TheoremCheck {
    let start = Instant::now();
    let mut instances = Vec::new();
    let mut examined = 0;
    match (def.observe)(catalog, def.dir) {
        Ok(observations) => {
            examined = observations.len();
            for o in observations.into_iter().filter(|o| o.premise) {
                instances.push(InstanceResult {
                    label: o.label,
                    verdict: if o.conclusion { Status::Pass } else { Status::Fail },
                    detail: o.detail,
                    witness: o.witness,
                });
            }
        }
        Err(e) => instances.push(InstanceResult {
            label: "<error>".into(),
            verdict: Status::Fail,
            detail: e.to_string(),
            witness: Vec::new(),
        }),
    }
    let status = if instances.iter().any(|i| i.verdict == Status::Fail) {
        Status::Fail
    } else if instances.is_empty() {
        Status::Vacuous
    } else {
        Status::Pass
    };
    TheoremCheck {
        id: def.id.to_string(),
        location: location(def.id),
        statement: def.statement.to_string(),
        status,
        examined,
        applicable: instances.len(),
        instances,
        wall_time_ms: timed.then(|| start.elapsed().as_secs_f64() * 1e3),
    }
}

fn lookup(id: &str) -> Result<&'static CheckDef> {
    checks::REGISTRY
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| RingError::UnknownCheck(id.to_string()))
}

pub fn run_check(id: &str, catalog: &Catalog) -> Result<TheoremCheck> {
    Ok(execute(lookup(id)?, catalog, false))
}

/// Runs the named checks concurrently; results come back in the order given.
pub fn run_checks(ids: &[&str], catalog: &Catalog, timed: bool) -> Result<Vec<TheoremCheck>> {
    let defs = ids.iter().map(|id| lookup(id)).collect::<Result<Vec<_>>>()?;
    Ok(defs.par_iter().map(|d| execute(d, catalog, timed)).collect())
}

pub fn run_all(catalog: &Catalog) -> Vec<TheoremCheck> {
    run_checks(&check_ids(), catalog, false).expect("registered ids")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

impl std::str::FromStr for Format {
    type Err = RingError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            _ => Err(RingError::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Serialize)]
struct Report<'a> {
    schema_version: u32,
    checks: &'a [TheoremCheck],
}

pub fn report(results: &[TheoremCheck], format: Format) -> String {
    match format {
        Format::Json => {
            let doc = Report {
                schema_version: SCHEMA_VERSION,
                checks: results,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut s = String::new();
            let width = results.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
            let _ = writeln!(s, "{:<width$}  {:<7}  {:>10}  detail", "id", "status", "instances");
            for r in results {
                let detail = match r.status {
                    Status::Fail => r
                        .failures()
                        .next()
                        .map(|f| format!("{}: {}", f.label, f.detail))
                        .unwrap_or_default(),
                    _ => r.statement.clone(),
                };
                let _ = writeln!(
                    s,
                    "{:<width$}  {:<7}  {:>4}/{:<5}  {}",
                    r.id,
                    r.status.as_str(),
                    r.applicable,
                    r.examined,
                    detail
                );
            }
            let count = |st: Status| results.iter().filter(|r| r.status == st).count();
            let _ = writeln!(
                s,
                "{} checks: {} pass, {} fail, {} vacuous",
                results.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Vacuous)
            );
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn location_strips_direction() {
        assert_eq!(location("Prop-2.13(i)-fwd"), "Proposition 2.13(i)");
        assert_eq!(location("Cor-2.42-conv"), "Corollary 2.42");
        assert_eq!(location("Ex-2.6a"), "Example 2.6a");
    }

    fn failing(_: &Catalog, _: Dir) -> Result<Vec<Obs>> {
        Ok(vec![Obs::new("a", true, true), Obs::new("b", true, false), Obs::new("c", false, false)])
    }

    fn vacuous(_: &Catalog, _: Dir) -> Result<Vec<Obs>> {
        Ok(vec![Obs::new("a", false, false)])
    }

    fn erroring(_: &Catalog, _: Dir) -> Result<Vec<Obs>> {
        Err(RingError::Inconsistent("boom".into()))
    }

    fn def(observe: Observe) -> CheckDef {
        CheckDef {
            id: "Lemma-0.1",
            statement: "test",
            dir: Dir::Fwd,
            observe,
        }
    }

    #[test]
    fn statuses() {
        let cat = Catalog::from_labels(&["Z2"]).unwrap();
        let r = execute(&def(failing), &cat, false);
        assert_eq!(r.status, Status::Fail);
        assert_eq!((r.examined, r.applicable), (3, 2));
        assert_eq!(r.failures().map(|f| f.label.as_str()).collect::<Vec<_>>(), ["b"]);

        let r = execute(&def(vacuous), &cat, false);
        assert_eq!(r.status, Status::Vacuous);
        assert!(r.instances.is_empty());

        let r = execute(&def(erroring), &cat, false);
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.instances[0].label, "<error>");
    }

    #[test]
    fn iff_orientation() {
        let o = Obs::iff("x", Dir::Rev, true, false);
        assert!(!o.premise && o.conclusion);
    }

    #[test]
    fn reports() {
        assert_eq!(report(&[], Format::Json), "{\n  \"schema_version\": 1,\n  \"checks\": []\n}\n");
        let cat = Catalog::from_labels(&["Z2"]).unwrap();
        let table = report(&[execute(&def(failing), &cat, false)], Format::Table);
        assert!(table.contains("FAIL") && table.contains("b: "));
        assert!(table.ends_with("1 checks: 0 pass, 1 fail, 0 vacuous\n"));
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn registry_ids_are_unique() {
        let ids = check_ids();
        let set: std::collections::HashSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
        assert!(run_check("nope", &default_catalog()).is_err());
    }

    #[test]
    fn catalog_rejects_duplicates() {
        assert!(Catalog::from_labels(&["Z2", "z2"]).is_err());
    }
}
