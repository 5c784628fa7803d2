//! On-disk forms of computed tables: JSON, CSV and aligned text.

use ebr_core::{CycloValue, ExtBurnsideRing, SubgroupClassTable};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub schema_version: String,
    pub group_spec: String,
    /// Every value lies in `Q(ζ_conductor)`.
    pub conductor: u32,
    pub basis: Vec<BasisRecord>,
    pub homs: Vec<HomRecord>,
    pub values: Vec<Vec<CellValue>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub label: String,
    pub generators: Vec<String>,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub invariant_factors: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle_orbit: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomRecord {
    pub label: String,
    pub subgroup: String,
    pub character: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CellValue {
    Integer(i64),
    /// Power-basis coordinates in `Q(ζ_conductor)`, as `p` or `p/q` strings.
    Cyclotomic { conductor: u32, coeffs: Vec<String> },
}

impl CellValue {
    pub fn from_cyclo(v: &CycloValue) -> CellValue {
        if v.conductor() <= 2 {
            if let Some(i) = v.to_integer().and_then(|i| i64::try_from(i).ok()) {
                return CellValue::Integer(i);
            }
        }
        CellValue::Cyclotomic {
            conductor: v.conductor(),
            coeffs: v
                .coeffs()
                .iter()
                .map(|c| {
                    if c.is_integer() {
                        c.numer().to_string()
                    } else {
                        format!("{}/{}", c.numer(), c.denom())
                    }
                })
                .collect(),
        }
    }

    pub fn render(&self) -> String {
        match self {
            CellValue::Integer(i) => i.to_string(),
            CellValue::Cyclotomic { conductor, coeffs } => format!("[{}]@{}", coeffs.join(", "), conductor),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

fn generators(table: &SubgroupClassTable, class: usize) -> Vec<String> {
    table.class(class).rep.generators().iter().map(|g| g.to_string()).collect()
}

/// Extended table of marks, with `m` recorded on every basis class.
pub fn ext_document(spec: &str, ring: &ExtBurnsideRing, values: &[Vec<CycloValue>]) -> TableDocument {
    let table = ring.subgroup_table();
    let basis = ring
        .ext_basis()
        .iter()
        .map(|b| BasisRecord {
            label: b.label.clone(),
            generators: generators(table, b.subgroup),
            order: table.class(b.subgroup).order(),
            invariant_factors: Some(ring.multiplier(b.subgroup).multiplier.invariant_factors().to_vec()),
            cocycle_orbit: Some(b.orbit),
            m: Some(b.m),
        })
        .collect();
    let homs = ring
        .mark_homomorphisms()
        .iter()
        .map(|h| HomRecord {
            label: h.label.clone(),
            subgroup: table.class(h.subgroup).label.clone(),
            character: h.character.exponents().to_vec(),
        })
        .collect();
    TableDocument {
        schema_version: SCHEMA_VERSION.into(),
        group_spec: spec.into(),
        conductor: ring.conductor(),
        basis,
        homs,
        values: values.iter().map(|row| row.iter().map(CellValue::from_cyclo).collect()).collect(),
    }
}

/// Classical table of marks: rows and columns are subgroup classes.
pub fn marks_document(spec: &str, table: &SubgroupClassTable, marks: &[Vec<i64>]) -> TableDocument {
    let basis = (0..table.len())
        .map(|i| BasisRecord {
            label: table.class(i).label.clone(),
            generators: generators(table, i),
            order: table.class(i).order(),
            invariant_factors: None,
            cocycle_orbit: None,
            m: None,
        })
        .collect();
    let homs = table
        .classes()
        .iter()
        .map(|c| HomRecord {
            label: c.label.clone(),
            subgroup: c.label.clone(),
            character: Vec::new(),
        })
        .collect();
    TableDocument {
        schema_version: SCHEMA_VERSION.into(),
        group_spec: spec.into(),
        conductor: 1,
        basis,
        homs,
        values: marks
            .iter()
            .map(|row| row.iter().map(|&v| CellValue::Integer(v)).collect())
            .collect(),
    }
}

impl TableDocument {
    pub fn without_m(mut self) -> TableDocument {
        for b in &mut self.basis {
            b.m = None;
        }
        self
    }

    fn has_m(&self) -> bool {
        self.basis.iter().any(|b| b.m.is_some())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialisable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<TableDocument> {
        serde_json::from_str(text)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![String::from("label")];
        header.extend(self.homs.iter().map(|h| h.label.clone()));
        if self.has_m() {
            header.push("m".into());
        }
        w.write_record(&header).expect("in-memory write");
        for (b, row) in self.basis.iter().zip(&self.values) {
            let mut rec = vec![b.label.clone()];
            rec.extend(row.iter().map(CellValue::render));
            if let Some(m) = b.m {
                rec.push(m.to_string());
            }
            w.write_record(&rec).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_table(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .values
            .iter()
            .map(|row| row.iter().map(CellValue::render).collect())
            .collect();
        let label_width = self.basis.iter().map(|b| b.label.len()).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.homs.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].len())
                    .chain([self.homs[j].label.len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = format!("{:label_width$}", "");
        for (h, w) in self.homs.iter().zip(&widths) {
            out.push_str(&format!(" {:>w$}", h.label));
        }
        if self.has_m() {
            out.push_str(" |  m");
        }
        out.push('\n');
        for (b, row) in self.basis.iter().zip(&cells) {
            out.push_str(&format!("{:label_width$}", b.label));
            for (c, w) in row.iter().zip(&widths) {
                out.push_str(&format!(" {c:>w$}"));
            }
            if let Some(m) = b.m {
                out.push_str(&format!(" | {m:>2}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }
}
