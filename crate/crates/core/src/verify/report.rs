use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::enumerate::Merge;
use crate::error::Result;
use crate::graph::{canonical_form, graph6_decode, graph6_encode, Graph, Member, MAX_ISO_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Partial,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::Partial => "PARTIAL",
        })
    }
}

/// One isomorphism class of recorded graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionEntry {
    /// Canonical graph6 of the class.
    pub graph6: String,
    /// Matched family member, if any.
    pub family: Option<String>,
    /// Labeled graphs in the class that were seen.
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub n: [usize; 2],
    pub scanned: u64,
    pub filters: Vec<String>,
    pub exceptions: Vec<ExceptionEntry>,
    pub violations: Vec<String>,
    pub values: BTreeMap<String, f64>,
    pub notes: Vec<String>,
    pub tolerances: BTreeMap<String, f64>,
    pub verdict: Verdict,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(check_id: &str, n: [usize; 2]) -> Self {
        Self {
            check_id: check_id.to_string(),
            n,
            scanned: 0,
            filters: Vec::new(),
            exceptions: Vec::new(),
            violations: Vec::new(),
            values: BTreeMap::new(),
            notes: Vec::new(),
            tolerances: BTreeMap::new(),
            verdict: Verdict::Pass,
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Family names of the recorded exception classes, in report order.
    pub fn families(&self) -> Vec<Option<String>> {
        self.exceptions.iter().map(|e| e.family.clone()).collect()
    }

    pub(crate) fn finish(mut self, started: Instant) -> Self {
        if !self.violations.is_empty() {
            self.verdict = Verdict::Fail;
        }
        self.violations.sort();
        self.violations.dedup();
        self.elapsed_ms = started.elapsed().as_millis() as u64;
        self
    }

    /// The report with timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        Self {
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Checks that every exception decodes and matches its named member.
    pub fn exceptions_consistent(&self, members: &[Member]) -> Result<bool> {
        for e in &self.exceptions {
            let Some(name) = &e.family else { continue };
            let g = graph6_decode(&e.graph6)?;
            let Some(m) = members.iter().find(|m| &m.spec.to_string() == name) else {
                return Ok(false);
            };
            if !m.matches(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Graphs recorded during a scan, grouped by canonical form, plus named counters.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub hits: BTreeMap<String, u64>,
    pub counters: BTreeMap<&'static str, u64>,
}

impl Tally {
    /// Keys by canonical form up to [`MAX_ISO_ORDER`] vertices, by the
    /// labeled encoding above it.
    pub fn record(&mut self, g: &Graph) {
        let key = match g.order() {
            n if n <= MAX_ISO_ORDER => graph6_encode(&canonical_form(g).expect("order within the isomorphism limit")),
            _ => graph6_encode(g),
        };
        *self.hits.entry(key).or_default() += 1;
    }

    pub fn bump(&mut self, name: &'static str) {
        *self.counters.entry(name).or_default() += 1;
    }

    pub fn count(&self, name: &str) -> u64 {
        self.counters.get(name).copied().unwrap_or(0)
    }

    /// Sorts hits into matched exceptions and violations.
    pub(crate) fn classify(&self, members: &[Member], report: &mut VerificationReport) -> Result<()> {
        for (g6, &count) in &self.hits {
            let g = graph6_decode(g6)?;
            let mut family = None;
            for m in members {
                if m.matches(&g)? {
                    family = Some(m.spec.to_string());
                    break;
                }
            }
            match family {
                Some(_) => report.exceptions.push(ExceptionEntry {
                    graph6: g6.clone(),
                    family,
                    count,
                }),
                None => report.violations.push(g6.clone()),
            }
        }
        Ok(())
    }

    /// Lists every hit as an exception, naming a member where one matches.
    pub(crate) fn list(&self, members: &[Member], report: &mut VerificationReport) -> Result<()> {
        for (g6, &count) in &self.hits {
            let g = graph6_decode(g6)?;
            let mut family = None;
            for m in members {
                if m.matches(&g)? {
                    family = Some(m.spec.to_string());
                    break;
                }
            }
            report.exceptions.push(ExceptionEntry {
                graph6: g6.clone(),
                family,
                count,
            });
        }
        Ok(())
    }

    pub(crate) fn counters_into(&self, report: &mut VerificationReport) {
        for (name, value) in &self.counters {
            report.notes.push(format!("{name}: {value}"));
        }
    }
}

impl Merge for Tally {
    fn merge(&mut self, other: Self) {
        for (k, v) in other.hits {
            *self.hits.entry(k).or_default() += v;
        }
        for (k, v) in other.counters {
            *self.counters.entry(k).or_default() += v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_path, FamilySpec};

    #[test]
    fn tally_groups_isomorphic_graphs() {
        let mut a = Tally::default();
        let p = make_path(4).unwrap();
        a.record(&p);
        let mut b = Tally::default();
        b.record(&p.relabel(&[2, 0, 3, 1]).unwrap());
        b.bump("x");
        a.merge(b);
        assert_eq!(a.hits.len(), 1);
        assert_eq!(*a.hits.values().next().unwrap(), 2);
        assert_eq!(a.count("x"), 1);
        assert_eq!(a.count("y"), 0);
    }

    #[test]
    fn classification_and_json_shape() {
        let mut t = Tally::default();
        let g1 = FamilySpec::G1(5).realize().unwrap();
        t.record(&g1);
        t.record(&make_path(5).unwrap());
        let members = vec![Member {
            spec: FamilySpec::G1(5),
            graph: g1,
        }];
        let mut r = VerificationReport::new("demo", [5, 5]);
        t.classify(&members, &mut r).unwrap();
        assert_eq!(r.exceptions.len(), 1);
        assert_eq!(r.violations.len(), 1);
        assert!(r.exceptions_consistent(&members).unwrap());
        let r = r.finish(Instant::now());
        assert_eq!(r.verdict, Verdict::Fail);
        let json = r.to_json();
        let keys = [
            "check_id", "\"n\"", "scanned", "filters", "exceptions", "violations", "values", "notes", "tolerances",
            "verdict", "elapsed_ms",
        ];
        let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{json}");
        assert!(json.contains("\"FAIL\""));
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
