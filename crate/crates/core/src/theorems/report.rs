use std::collections::BTreeMap;

use crate::braid::BraidWord;

/// Outcome of one verifier run.
///
/// JSON shape: `{claim, parameters, checked, violations: [{word, detail}],
/// findings: [{label, word, crossing_number, sigma, count}]}` with
/// parameters and findings sorted by key.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Report {
    pub claim: String,
    pub parameters: BTreeMap<String, i64>,
    pub checked: u64,
    pub violations: Vec<Violation>,
    pub findings: Vec<Finding>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub struct Violation {
    pub word: String,
    pub detail: String,
}

/// A class of words the verifier identified, with its least representative.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Finding {
    pub label: String,
    pub word: BraidWord,
    pub crossing_number: i64,
    pub sigma: i64,
    pub count: u64,
}

fn word_key(w: &BraidWord) -> (usize, &[i32]) {
    (w.len(), w.letters())
}

impl Report {
    pub fn new(claim: &str, parameters: &[(&str, i64)]) -> Report {
        Report {
            claim: claim.to_string(),
            parameters: parameters.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            checked: 0,
            violations: Vec::new(),
            findings: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&mut self, word: impl ToString, detail: impl Into<String>) {
        self.violations.push(Violation { word: word.to_string(), detail: detail.into() });
    }

    pub fn finding(&mut self, finding: Finding) {
        if let Some(f) = self.findings.iter_mut().find(|f| f.label == finding.label) {
            f.count += finding.count;
            if word_key(&finding.word) < word_key(&f.word) {
                f.word = finding.word;
            }
        } else {
            self.findings.push(finding);
        }
    }

    pub fn finding_count(&self, label: &str) -> u64 {
        self.findings.iter().find(|f| f.label == label).map_or(0, |f| f.count)
    }

    /// Puts violations and findings in canonical order.
    pub fn normalize(mut self) -> Report {
        self.violations.sort();
        self.findings.sort_by(|a, b| a.label.cmp(&b.label));
        self
    }

    /// Combines shard reports of the same claim: counts add, violations and
    /// findings are unioned.
    pub fn merge(reports: Vec<Report>) -> Option<Report> {
        let mut iter = reports.into_iter();
        let mut out = iter.next()?;
        for r in iter {
            out.checked += r.checked;
            out.violations.extend(r.violations);
            for f in r.findings {
                out.finding(f);
            }
        }
        Some(out.normalize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finding(label: &str, letters: &[i32]) -> Finding {
        Finding {
            label: label.into(),
            word: BraidWord::new(3, letters.to_vec()).unwrap(),
            crossing_number: 6,
            sigma: -4,
            count: 1,
        }
    }

    #[test]
    fn merge_adds_counts_and_keeps_least_word() {
        let mut a = Report::new("main", &[("max_crossings", 6)]);
        a.checked = 3;
        a.finding(finding("(i)", &[2, 1, 1, 2, 1, 1]));
        let mut b = Report::new("main", &[("max_crossings", 6)]);
        b.checked = 4;
        b.finding(finding("(i)", &[1, 1, 2, 1, 1, 2]));
        b.violation("B3: 1", "boom");
        let m = Report::merge(vec![a, b]).unwrap();
        assert_eq!(m.checked, 7);
        assert_eq!(m.findings.len(), 1);
        assert_eq!(m.findings[0].count, 2);
        assert_eq!(m.findings[0].word.letters(), &[1, 1, 2, 1, 1, 2]);
        assert!(!m.ok());
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.starts_with(r#"{"claim":"main","parameters":{"max_crossings":6},"checked":7,"#));
    }
}
