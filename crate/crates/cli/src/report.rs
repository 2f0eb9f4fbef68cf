//! Report records and their json / csv / text renderings.
//!
//! Field order in each struct is the key order of the JSON output. φ values
//! are the integers 0 and 1, never booleans.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub trait Render: Serialize {
    fn csv_header(&self) -> &'static [&'static str];
    fn csv_rows(&self) -> Vec<Vec<String>>;
    fn text(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(self.csv_header()).expect("in-memory write");
                for row in self.csv_rows() {
                    w.write_record(&row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
            }
            Format::Text => self.text(),
        }
    }
}

pub fn bit(b: bool) -> u8 {
    b as u8
}

/// Space-separated list for a single csv field.
fn spaced<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn tuple<T: ToString>(v: &[T]) -> String {
    format!("({})", v.iter().map(T::to_string).collect::<Vec<_>>().join(","))
}

fn braces<T: ToString>(v: &[T]) -> String {
    format!("{{{}}}", v.iter().map(T::to_string).collect::<Vec<_>>().join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneReport {
    pub n: u32,
    pub generic: bool,
    /// Genes with elements in decreasing order.
    pub code: Vec<Vec<u32>>,
    pub monogenic: bool,
    pub a: Option<Vec<u32>>,
}

impl Render for GeneReport {
    fn csv_header(&self) -> &'static [&'static str] {
        &["n", "generic", "monogenic", "a", "code"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let code: Vec<String> = self.code.iter().map(|g| spaced(g)).collect();
        vec![vec![
            self.n.to_string(),
            bit(self.generic).to_string(),
            bit(self.monogenic).to_string(),
            self.a.as_deref().map(spaced).unwrap_or_default(),
            code.join("|"),
        ]]
    }

    fn text(&self) -> String {
        let genes: Vec<String> = self.code.iter().map(|g| braces(g)).collect();
        let mut s = format!("n = {}\ngeneric: yes\ncode: {{{}}}\n", self.n, genes.join(", "));
        match &self.a {
            Some(a) => writeln!(s, "monogenic: yes, a = {}", tuple(a)).unwrap(),
            None => writeln!(s, "monogenic: no ({} genes)", self.code.len()).unwrap(),
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(rename = "B")]
    pub b: Vec<u32>,
    pub term: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiReport {
    pub a: Vec<u32>,
    pub n: u32,
    #[serde(rename = "J")]
    pub j: Vec<u32>,
    pub r_exponent: u32,
    /// Absent when some subscript lies beyond the gee.
    pub theta: Option<Vec<u32>>,
    pub subgee: bool,
    pub phi: u8,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub terms: Option<Vec<Term>>,
}

impl Render for PhiReport {
    fn csv_header(&self) -> &'static [&'static str] {
        &["a", "n", "J", "theta", "subgee", "phi"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            spaced(&self.a),
            self.n.to_string(),
            spaced(&self.j),
            self.theta.as_deref().map(spaced).unwrap_or_default(),
            bit(self.subgee).to_string(),
            self.phi.to_string(),
        ]]
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let mono = if self.j.is_empty() {
            format!("R^{}", self.r_exponent)
        } else {
            let vs: Vec<String> = self.j.iter().map(|j| format!("V{j}")).collect();
            format!("R^{} {}", self.r_exponent, vs.join(" "))
        };
        writeln!(s, "a = {}, n = {}", tuple(&self.a), self.n).unwrap();
        writeln!(s, "monomial: {mono}").unwrap();
        match &self.theta {
            Some(t) => writeln!(s, "theta: {}", tuple(t)).unwrap(),
            None => writeln!(s, "theta: undefined (subscript beyond the gee)").unwrap(),
        }
        writeln!(s, "subgee: {}", if self.subgee { "yes" } else { "no" }).unwrap();
        if let Some(terms) = &self.terms {
            writeln!(s, "admissible B ({}):", terms.len()).unwrap();
            for t in terms {
                writeln!(s, "  {} -> {}", tuple(&t.b), t.term).unwrap();
            }
        }
        writeln!(s, "phi = {}", self.phi).unwrap();
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub theta: Vec<u32>,
    pub phi: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub a: Vec<u32>,
    pub rows: Vec<TableRow>,
}

impl Render for TableReport {
    fn csv_header(&self) -> &'static [&'static str] {
        &["theta", "phi"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| vec![spaced(&r.theta), r.phi.to_string()])
            .collect()
    }

    fn text(&self) -> String {
        let mut s = format!("a = {}\n", tuple(&self.a));
        for r in &self.rows {
            writeln!(s, "phi(Y{}) = {}", tuple(&r.theta), r.phi).unwrap();
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub a: Vec<u32>,
    pub subgees: usize,
    pub relations: usize,
    /// Relation indices `I` the formula does not annihilate.
    pub failures: Vec<Vec<u32>>,
    pub ok: bool,
}

impl Render for VerifyReport {
    fn csv_header(&self) -> &'static [&'static str] {
        &["a", "subgees", "relations", "failures", "ok"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        let failures: Vec<String> = self.failures.iter().map(|f| spaced(f)).collect();
        vec![vec![
            spaced(&self.a),
            self.subgees.to_string(),
            self.relations.to_string(),
            failures.join("|"),
            bit(self.ok).to_string(),
        ]]
    }

    fn text(&self) -> String {
        if self.ok {
            format!("a = {}: all {} relations annihilated\n", tuple(&self.a), self.relations)
        } else {
            let mut s = format!(
                "a = {}: {} of {} relations not annihilated\n",
                tuple(&self.a),
                self.failures.len(),
                self.relations
            );
            for f in &self.failures {
                writeln!(s, "  R_{}", braces(f)).unwrap();
            }
            s
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleValue {
    #[serde(rename = "J")]
    pub j: Vec<u32>,
    pub theta: Vec<u32>,
    pub oracle: Option<u8>,
    pub formula: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub a: Vec<u32>,
    pub basis: usize,
    pub rank: usize,
    pub nullspace_dimension: usize,
    pub agree: bool,
    pub values: Vec<OracleValue>,
    /// Wall time, shown in the text rendering only.
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl Render for OracleReport {
    fn csv_header(&self) -> &'static [&'static str] {
        &["J", "theta", "oracle", "formula"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        self.values
            .iter()
            .map(|v| {
                vec![
                    spaced(&v.j),
                    spaced(&v.theta),
                    v.oracle.map(|b| b.to_string()).unwrap_or_default(),
                    v.formula.to_string(),
                ]
            })
            .collect()
    }

    fn text(&self) -> String {
        let mut s = format!(
            "a = {}\nbasis: {}\nrank: {}\nnullspace dimension: {}\nagree: {}\n",
            tuple(&self.a),
            self.basis,
            self.rank,
            self.nullspace_dimension,
            self.agree
        );
        if self.nullspace_dimension != 1 {
            writeln!(s, "FALSIFIED: relations do not determine a unique functional").unwrap();
        }
        for v in self.values.iter().filter(|v| v.oracle != Some(v.formula)) {
            writeln!(s, "  mismatch at J = {}", braces(&v.j)).unwrap();
        }
        writeln!(s, "elapsed: {} ms", self.elapsed_ms).unwrap();
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizeReport {
    pub a: Vec<u32>,
    pub bound: u64,
    pub n: u32,
    pub lengths: Vec<i64>,
}

impl Render for RealizeReport {
    fn csv_header(&self) -> &'static [&'static str] {
        &["a", "n", "lengths"]
    }

    fn csv_rows(&self) -> Vec<Vec<String>> {
        vec![vec![spaced(&self.a), self.n.to_string(), spaced(&self.lengths)]]
    }

    fn text(&self) -> String {
        let ls: Vec<String> = self.lengths.iter().map(i64::to_string).collect();
        format!("a = {}\nn = {}\nlengths: {}\n", tuple(&self.a), self.n, ls.join(","))
    }
}
