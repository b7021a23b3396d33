use std::fmt;

/// Outcome of one exact check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Match,
    /// Both sides, verbatim.
    Mismatch { expected: String, actual: String },
    /// Recorded but not part of pass/fail (open conjectures).
    Informational(bool),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub index: u64,
    pub claim: String,
    pub verdict: Verdict,
}

impl CheckEntry {
    pub fn compare<T: PartialEq + fmt::Display>(
        index: u64,
        claim: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> Self {
        let verdict = if expected == actual {
            Verdict::Match
        } else {
            Verdict::Mismatch {
                expected: expected.to_string(),
                actual: actual.to_string(),
            }
        };
        Self {
            index,
            claim: claim.into(),
            verdict,
        }
    }

    pub fn holds(index: u64, claim: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        let verdict = if ok {
            Verdict::Match
        } else {
            Verdict::Mismatch {
                expected: "true".into(),
                actual: detail(),
            }
        };
        Self {
            index,
            claim: claim.into(),
            verdict,
        }
    }

    pub fn informational(index: u64, claim: impl Into<String>, outcome: bool) -> Self {
        Self {
            index,
            claim: claim.into(),
            verdict: Verdict::Informational(outcome),
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self.verdict, Verdict::Mismatch { .. })
    }
}

/// Result of a verification suite: one entry per checked claim and index.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub subject: String,
    pub entries: Vec<CheckEntry>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            ..Self::default()
        }
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
        for n in other.notes {
            if !self.notes.contains(&n) {
                self.notes.push(n);
            }
        }
    }

    /// True when no exact check failed; informational entries never fail a report.
    pub fn passed(&self) -> bool {
        !self.entries.iter().any(CheckEntry::is_failure)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.is_failure())
    }

    pub fn count_exact(&self) -> usize {
        self.entries
            .iter()
            .filter(|e| !matches!(e.verdict, Verdict::Informational(_)))
            .count()
    }

    pub fn informational(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries
            .iter()
            .filter(|e| matches!(e.verdict, Verdict::Informational(_)))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        writeln!(
            f,
            "{}: {} exact checks, {} failed",
            self.subject,
            self.count_exact(),
            failed
        )?;
        for e in self.failures() {
            if let Verdict::Mismatch { expected, actual } = &e.verdict {
                writeln!(f, "  MISMATCH n={} {}: expected {expected}, got {actual}", e.index, e.claim)?;
            }
        }
        for e in self.informational() {
            if let Verdict::Informational(v) = e.verdict {
                writeln!(f, "  info n={} {}: {v}", e.index, e.claim)?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
