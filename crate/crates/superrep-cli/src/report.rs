//! Structured reports and their text rendering. Text is produced from the
//! same values that are serialized, so both forms carry the same numbers.

use std::fmt::Write;

use serde::Serialize;
use superrep::kring::GroupPresentation;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Group {
    pub text: String,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl From<&GroupPresentation> for Group {
    fn from(g: &GroupPresentation) -> Self {
        let (free_rank, torsion) = g.invariants();
        Group { text: g.to_string(), free_rank, torsion }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub context: String,
    pub passed: bool,
    #[serde(flatten)]
    pub body: Body,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Body {
    Validate(ValidateBody),
    Classify(ClassifyBody),
    Kgroups(KgroupsBody),
    Exactseq(ExactseqBody),
    AbsTable(AbsTableBody),
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidateBody {
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Tag {
    pub kind: String,
    pub real_division: String,
    pub self_dual: bool,
    pub involution: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_square: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Factor {
    pub dim: String,
    pub multiplicity: usize,
    pub certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tag: Option<Tag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tag_error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleEntry {
    pub name: String,
    pub dim: String,
    pub factors: Vec<Factor>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyBody {
    pub seed: u64,
    pub modules: Vec<ModuleEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeEntry {
    pub degree: String,
    pub irreducibles: usize,
    pub graded: Group,
    pub plus: Group,
    pub minus: Group,
    pub sr: Group,
    /// `R₊` at this degree modulo `i*` of the next one.
    pub restriction_cokernel: Group,
}

#[derive(Clone, Debug, Serialize)]
pub struct KgroupsBody {
    pub degrees: Vec<DegreeEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeEntry {
    pub label: String,
    pub group: Group,
    /// Absent at the two ends of an open sequence.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub composite_zero: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub image_vs_kernel: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrowEntry {
    pub label: String,
    pub from: String,
    pub to: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitEntry {
    pub from: String,
    pub to: String,
    pub surjective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceEntry {
    pub variant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<String>,
    pub cyclic: bool,
    pub exact_nodes: usize,
    pub checked_nodes: usize,
    pub nodes: Vec<NodeEntry>,
    pub arrows: Vec<ArrowEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub split: Vec<SplitEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExactseqBody {
    pub sequences: Vec<SequenceEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AbsRow {
    pub n: usize,
    pub group: Group,
}

#[derive(Clone, Debug, Serialize)]
pub struct AbsTableBody {
    pub field: String,
    pub rows: Vec<AbsRow>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned columns separated by two spaces.
fn table(out: &mut String, rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c + 1 == r.len() {
                line.push_str(cell);
            } else {
                let pad = widths[c] - cell.chars().count();
                line.push_str(cell);
                line.push_str(&" ".repeat(pad + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

impl Report {
    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} ({})", self.command, self.context).unwrap();
        match &self.body {
            Body::Validate(b) => {
                for c in &b.checks {
                    match &c.message {
                        Some(m) => writeln!(out, "  {}: {} ({m})", c.name, if c.ok { "ok" } else { "FAIL" }),
                        None => writeln!(out, "  {}: {}", c.name, if c.ok { "ok" } else { "FAIL" }),
                    }
                    .unwrap();
                }
            }
            Body::Classify(b) => {
                writeln!(out, "  seed {}", b.seed).unwrap();
                for m in &b.modules {
                    writeln!(out, "  {} ({})", m.name, m.dim).unwrap();
                    for f in &m.factors {
                        let cert = if f.certified { "irreducible" } else { "presumed irreducible" };
                        let mut line = format!("    {} x{} {cert}", f.dim, f.multiplicity);
                        if let Some(t) = &f.tag {
                            write!(
                                line,
                                ", type {}, division {}, self-dual {}, involution {}",
                                t.kind,
                                t.real_division,
                                yes_no(t.self_dual),
                                t.involution
                            )
                            .unwrap();
                            if let Some(a) = &t.alpha_square {
                                write!(line, ", alpha^2 = {a}").unwrap();
                            }
                        }
                        if let Some(e) = &f.tag_error {
                            write!(line, ", tag: {e}").unwrap();
                        }
                        writeln!(out, "{line}").unwrap();
                    }
                }
            }
            Body::Kgroups(b) => {
                let mut rows = vec![vec![
                    "degree".to_string(),
                    "irreps".into(),
                    "RZ2".into(),
                    "R+".into(),
                    "R-".into(),
                    "SR".into(),
                    "R+/i*".into(),
                ]];
                for d in &b.degrees {
                    rows.push(vec![
                        d.degree.clone(),
                        d.irreducibles.to_string(),
                        d.graded.text.clone(),
                        d.plus.text.clone(),
                        d.minus.text.clone(),
                        d.sr.text.clone(),
                        d.restriction_cokernel.text.clone(),
                    ]);
                }
                table(&mut out, &rows);
            }
            Body::Exactseq(b) => {
                for s in &b.sequences {
                    match &s.degree {
                        Some(d) => writeln!(out, "{} at degree {d}", s.variant),
                        None => writeln!(out, "{}", s.variant),
                    }
                    .unwrap();
                    let mut rows = Vec::new();
                    for (k, n) in s.nodes.iter().enumerate() {
                        let verdict = match n.exact {
                            Some(true) => "exact".to_string(),
                            Some(false) => format!(
                                "NOT EXACT (composite zero: {}, image vs kernel: {})",
                                yes_no(n.composite_zero.unwrap_or(false)),
                                n.image_vs_kernel.clone().unwrap_or_default()
                            ),
                            None => "end".into(),
                        };
                        rows.push(vec![format!("  {k}"), n.label.clone(), n.group.text.clone(), verdict]);
                    }
                    table(&mut out, &rows);
                    for a in &s.arrows {
                        let m: Vec<String> = a.matrix.iter().map(|r| format!("[{}]", r.join(" "))).collect();
                        writeln!(out, "  {}: {} -> {}  {}", a.label, a.from, a.to, m.join(" ")).unwrap();
                    }
                    for sp in &s.split {
                        writeln!(out, "  i*: {} -> {} onto: {}", sp.from, sp.to, yes_no(sp.surjective)).unwrap();
                    }
                    writeln!(out, "  {}/{} nodes exact", s.exact_nodes, s.checked_nodes).unwrap();
                }
            }
            Body::AbsTable(b) => {
                let mut rows = vec![vec!["n".to_string(), format!("SR^-n({})", b.field)]];
                rows.extend(b.rows.iter().map(|r| vec![r.n.to_string(), r.group.text.clone()]));
                table(&mut out, &rows);
            }
        }
        writeln!(out, "{}", if self.passed { "PASS" } else { "FAIL" }).unwrap();
        out
    }
}
