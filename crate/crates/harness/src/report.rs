//! Tab-separated report records.
//!
//! Each record is one line with the fields `claim_id`, `instance`,
//! `expected`, `computed`, `status`, `runtime_ms` and `witness`, the last
//! URL-encoded. Lines starting with `#` are header comments.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;

use pebblab_core::{Error, Result};

use crate::witness::Witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    /// A checked statement disagrees with brute force.
    Disagreement,
    SkippedBudget,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Disagreement => "DISAGREEMENT",
            Status::SkippedBudget => "SKIPPED-budget",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Status {
    type Err = Error;

    fn from_str(s: &str) -> Result<Status> {
        Ok(match s {
            "PASS" => Status::Pass,
            "FAIL" => Status::Fail,
            "DISAGREEMENT" => Status::Disagreement,
            "SKIPPED-budget" => Status::SkippedBudget,
            _ => return Err(Error::Parse { line: 1, message: format!("unknown status {s:?}") }),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub claim_id: String,
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub runtime_ms: u64,
    pub witness: Witness,
}

impl Record {
    /// The computed field as an integer, when it is one.
    pub fn computed_value(&self) -> Option<u64> {
        self.computed.parse().ok()
    }

    pub fn to_line(&self) -> String {
        let witness = self.witness.to_string();
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.claim_id,
            self.instance,
            self.expected,
            self.computed,
            self.status,
            self.runtime_ms,
            urlencoding::encode(&witness)
        )
    }

    pub fn parse_line(line: &str, line_no: usize) -> Result<Record> {
        let bad = |m: String| Error::Parse { line: line_no, message: m };
        let parts: Vec<&str> = line.split('\t').collect();
        let [claim_id, instance, expected, computed, status, runtime_ms, witness] = parts[..] else {
            return Err(bad(format!("expected 7 tab-separated fields, found {}", parts.len())));
        };
        let witness = urlencoding::decode(witness).map_err(|e| bad(e.to_string()))?;
        Ok(Record {
            claim_id: claim_id.into(),
            instance: instance.into(),
            expected: expected.into(),
            computed: computed.into(),
            status: status.parse().map_err(|e: Error| bad(e.to_string()))?,
            runtime_ms: runtime_ms.parse().map_err(|_| bad(format!("bad runtime {runtime_ms:?}")))?,
            witness: witness.parse().map_err(|e: Error| bad(e.to_string()))?,
        })
    }
}

/// Header lines plus records, in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub header: Vec<String>,
    pub records: Vec<Record>,
}

/// Counts per status.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub disagreement: usize,
    pub skipped: usize,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "PASS {} FAIL {} DISAGREEMENT {} SKIPPED-budget {}",
            self.pass, self.fail, self.disagreement, self.skipped
        )
    }
}

impl Report {
    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.records {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Disagreement => s.disagreement += 1,
                Status::SkippedBudget => s.skipped += 1,
            }
        }
        s
    }

    pub fn write_to(&self, mut out: impl Write) -> io::Result<()> {
        for h in &self.header {
            writeln!(out, "# {h}")?;
        }
        for r in &self.records {
            writeln!(out, "{}", r.to_line())?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("records are UTF-8")
    }

    pub fn parse(text: &str) -> Result<Report> {
        let mut report = Report::default();
        for (i, line) in text.lines().enumerate() {
            if let Some(h) = line.strip_prefix('#') {
                report.header.push(h.trim_start().to_string());
            } else if !line.trim().is_empty() {
                report.records.push(Record::parse_line(line, i + 1)?);
            }
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::Item;

    #[test]
    fn line_round_trip() {
        let r = Record {
            claim_id: "pi2-paths".into(),
            instance: "path:6".into(),
            expected: "4".into(),
            computed: "4".into(),
            status: Status::Pass,
            runtime_ms: 3,
            witness: Witness::one("solvable:t=2:0 2 0 0 2 0".parse::<Item>().unwrap()),
        };
        let line = r.to_line();
        assert_eq!(line.split('\t').count(), 7);
        assert!(line.ends_with("solvable%3At%3D2%3A0%202%200%200%202%200"));
        assert_eq!(Record::parse_line(&line, 1).unwrap(), r);
        let report = Report { header: vec!["suite=roman".into()], records: vec![r] };
        let text = report.to_text();
        assert!(text.starts_with("# suite=roman\n"));
        assert_eq!(Report::parse(&text).unwrap(), report);
        assert_eq!(report.summary().pass, 1);
    }

    #[test]
    fn malformed_lines() {
        assert!(Record::parse_line("a\tb", 1).is_err());
        assert!(Record::parse_line("a\tb\tc\td\tMAYBE\t1\t-", 1).is_err());
        assert!(Record::parse_line("a\tb\tc\td\tPASS\tx\t-", 1).is_err());
    }
}
