//! Serializable command outputs and their plain-text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

fn tuple(values: &[String]) -> String {
    format!("({})", values.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderOutput {
    pub braid: String,
    pub strands: usize,
    pub delta: String,
}

impl AlexanderOutput {
    pub fn render_text(&self) -> String {
        format!("{}\n", self.delta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Independent kernel vectors of `φ(w) - I` over `Λ`.
    KernelVectors { vectors: Vec<Vec<String>> },
    Coloring { modulus: String, values: Vec<String>, verified: bool },
    TrivialOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOutput {
    pub braid: String,
    pub strands: usize,
    pub delta: String,
    pub verdict: String,
    pub certificate: Certificate,
}

impl ClassifyOutput {
    pub fn passed(&self) -> bool {
        !matches!(self.certificate, Certificate::Coloring { verified: false, .. })
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("delta: {}\nverdict: {}\n", self.delta, self.verdict);
        match &self.certificate {
            Certificate::KernelVectors { vectors } => {
                s.push_str("kernel vectors over Z[t, t^-1]:\n");
                for v in vectors {
                    let _ = writeln!(s, "  {}", tuple(v));
                }
            }
            Certificate::Coloring { modulus, values, verified } => {
                let status = if *verified { "verified" } else { "NOT verified" };
                let _ = writeln!(s, "coloring mod {modulus}: {} [{status}]", tuple(values));
            }
            Certificate::TrivialOnly => s.push_str("trivial only\n"),
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorOutput {
    pub braid: String,
    pub strands: usize,
    pub modulus: String,
    pub values: Vec<String>,
    pub verified: bool,
    pub nontrivial: bool,
    pub rank_mod_f: usize,
    pub generated_by_one: bool,
}

impl ColorOutput {
    pub fn passed(&self) -> bool {
        self.verified && self.nontrivial
    }

    pub fn render_text(&self) -> String {
        let mut s = format!("{}\n", tuple(&self.values));
        let _ = writeln!(s, "modulus: {}", self.modulus);
        let _ = writeln!(s, "verified: {}, non-trivial: {}", self.verified, self.nontrivial);
        let _ = writeln!(s, "rank of phi(w) - I mod f: {} (of {} strands)", self.rank_mod_f, self.strands);
        if self.generated_by_one {
            s.push_str("every coloring is a combination of this one and the constant coloring\n");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountOutput {
    pub braid: String,
    pub strands: usize,
    pub m: u64,
    pub t: u64,
    pub enumerated: u64,
    pub kernel_count: u64,
}

impl CountOutput {
    pub fn passed(&self) -> bool {
        self.enumerated == self.kernel_count
    }

    pub fn render_text(&self) -> String {
        if self.passed() {
            format!("{}\n", self.enumerated)
        } else {
            format!("{}\nmismatch: kernel count mod {} is {}\n", self.enumerated, self.m, self.kernel_count)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub label: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructedReport {
    pub modulus: String,
    pub values: Vec<String>,
    pub verified: bool,
    pub nontrivial: bool,
    pub rank_mod_f: usize,
    pub generated_by_one: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowReport {
    pub name: String,
    pub line: usize,
    pub braid: String,
    pub strands: usize,
    pub delta: String,
    pub verdict: String,
    pub checks: Vec<CheckReport>,
    pub constructed: Vec<ConstructedReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_vectors: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSummary {
    pub source: String,
    pub rows: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub summary: TableSummary,
    pub rows: Vec<RowReport>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let status = if row.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{status} {} (B_{}) delta = {} [{}]", row.name, row.strands, row.delta, row.verdict);
            for c in row.checks.iter().filter(|c| !c.passed) {
                let _ = writeln!(s, "  failed {}: {}", c.label, c.detail.as_deref().unwrap_or("check failed"));
            }
            if let Some(note) = &row.note {
                let _ = writeln!(s, "  note: {note}");
            }
        }
        let _ = writeln!(s, "{}", serde_json::to_string(&self.summary).expect("summary serializes"));
        s
    }
}
