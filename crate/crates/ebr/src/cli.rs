use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use ebr_core::{group_from_spec, ExtBurnsideRing, Group, SchurMultiplier, SubgroupClassTable};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cache::{Cache, Kind};
use crate::document::{ext_document, marks_document, Format, TableDocument};
use crate::expr::{parse_element, ExprError};
use crate::{compute, verify};

#[derive(Debug, Parser)]
#[command(name = "ebr", version, about = "Extended Burnside rings and extended tables of marks")]
struct Cli {
    /// Cache directory (falls back to $EBR_CACHE)
    #[arg(long, global = true, value_name = "DIR")]
    cache: Option<PathBuf>,
    /// Ignore any configured cache
    #[arg(long, global = true)]
    no_cache: bool,
    /// Worker threads for table construction
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, degree and generators of a group
    Group { spec: String },
    /// Conjugacy classes of subgroups
    Subgroups { spec: String },
    /// Invariant factors of the Schur multiplier
    Multiplier {
        spec: String,
        /// Label of a subgroup class instead of the whole group
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Classical table of marks
    Marks {
        spec: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Extended table of marks
    ExtMarks {
        spec: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Append the number of simple objects
        #[arg(long)]
        with_m: bool,
    },
    /// Product of two elements of the extended Burnside ring
    Multiply {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long)]
        with_m: bool,
    },
    /// Number of simple objects of an element
    M {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Run property checks
    Verify {
        spec: String,
        #[command(flatten)]
        suites: Suites,
    },
}

#[derive(Debug, Args)]
struct Suites {
    #[arg(long)]
    all: bool,
    /// Marks are multiplicative on all basis products
    #[arg(long)]
    hom: bool,
    /// As many marks as basis classes, mark matrix of full rank
    #[arg(long)]
    rank: bool,
    /// Mark matrix determinant is nonzero
    #[arg(long)]
    det: bool,
    /// Sign relation between primed marks for odd-index pairs
    #[arg(long)]
    lemma_sign: bool,
    /// Classes with m(M*M) = 5 and the accompanying dichotomy
    #[arg(long)]
    bfo: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] ebr_core::Error),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRecord {
    pub label: String,
    pub order: usize,
    pub conjugates: usize,
    pub normalizer_order: usize,
    pub generators: Vec<String>,
}

struct Session {
    cache: Cache,
}

impl Session {
    fn group(&self, spec: &str) -> Result<Arc<Group>, CliError> {
        Ok(Arc::new(group_from_spec(spec)?))
    }

    fn ring(&self, spec: &str) -> Result<ExtBurnsideRing, CliError> {
        Ok(compute::build_ring(self.group(spec)?)?)
    }

    /// Full extended table document, `m` included.
    fn ext_document(&self, spec: &str) -> Result<TableDocument, CliError> {
        let g = self.group(spec)?;
        self.cache.get_or_compute(Kind::ExtTable, &g, "", || {
            let ring = compute::build_ring(g.clone())?;
            let values = compute::extended_table(&ring)?;
            Ok(ext_document(spec, &ring, &values))
        })
    }
}

/// Runs the command line `argv` (program name first); returns the exit status.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let cache = if cli.no_cache {
        Cache::disabled()
    } else if let Some(dir) = cli.cache.clone() {
        Cache::at(dir)
    } else if let Some(dir) = std::env::var_os("EBR_CACHE").filter(|d| !d.is_empty()) {
        Cache::at(PathBuf::from(dir))
    } else {
        Cache::disabled()
    };
    let session = Session { cache };
    let result = match cli.threads {
        Some(0) => Err(CliError::Usage("--threads must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&session, cli.command)),
            Err(e) => Err(CliError::Failed(e.to_string())),
        },
        None => execute(&session, cli.command),
    };
    match result {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(CliError::Failed(text)) => {
            let _ = write!(out, "{text}");
            1
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(session: &Session, command: Command) -> Result<String, CliError> {
    match command {
        Command::Group { spec } => {
            let g = session.group(&spec)?;
            let gens: Vec<String> = g.generators().iter().map(|p| p.to_string()).collect();
            Ok(format!(
                "group: {spec}\ndegree: {}\norder: {}\ngenerators: {}\nconjugacy classes: {}\nexponent: {}\n",
                g.degree(),
                g.order(),
                gens.join(", "),
                g.conjugacy_classes().len(),
                g.exponent()
            ))
        }
        Command::Subgroups { spec } => {
            let g = session.group(&spec)?;
            let records: Vec<SubgroupRecord> = session.cache.get_or_compute(Kind::SubgroupTable, &g, "", || {
                let table = SubgroupClassTable::new(g.clone());
                Ok::<_, CliError>(
                    table
                        .classes()
                        .iter()
                        .map(|c| SubgroupRecord {
                            label: c.label.clone(),
                            order: c.order(),
                            conjugates: c.class_size(g.order()),
                            normalizer_order: c.normalizer.order(),
                            generators: c.rep.generators().iter().map(|p| p.to_string()).collect(),
                        })
                        .collect(),
                )
            })?;
            let width = records.iter().map(|r| r.label.len()).max().unwrap_or(5).max(5);
            let mut text = format!("{:width$}  order  conjugates  normalizer  generators\n", "label");
            for r in &records {
                text.push_str(&format!(
                    "{:width$}  {:>5}  {:>10}  {:>10}  {}\n",
                    r.label,
                    r.order,
                    r.conjugates,
                    r.normalizer_order,
                    r.generators.join(", ")
                ));
            }
            Ok(text)
        }
        Command::Multiplier { spec, subgroup } => {
            let g = session.group(&spec)?;
            let key = subgroup.clone().unwrap_or_default();
            let factors: Vec<u32> = session.cache.get_or_compute(Kind::Multiplier, &g, &key, || {
                let host = match &subgroup {
                    None => g.clone(),
                    Some(label) => {
                        let table = SubgroupClassTable::new(g.clone());
                        let i = table.index_by_label(label).ok_or_else(|| {
                            let valid: Vec<&str> = table.classes().iter().map(|c| c.label.as_str()).collect();
                            CliError::Usage(format!("unknown subgroup `{label}`; valid labels: {}", valid.join(", ")))
                        })?;
                        table.class(i).rep.clone()
                    }
                };
                Ok::<_, CliError>(SchurMultiplier::new(host)?.invariant_factors().to_vec())
            })?;
            let parts: Vec<String> = factors.iter().map(u32::to_string).collect();
            Ok(format!("[{}]\n", parts.join(", ")))
        }
        Command::Marks { spec, format } => {
            let g = session.group(&spec)?;
            let table = SubgroupClassTable::new(g);
            let marks = ebr_core::burnside::table_of_marks(&table)?;
            Ok(marks_document(&spec, &table, &marks).render(format))
        }
        Command::ExtMarks { spec, format, with_m } => {
            let doc = session.ext_document(&spec)?;
            let doc = if with_m { doc } else { doc.without_m() };
            Ok(doc.render(format))
        }
        Command::Multiply { spec, left, right, with_m } => {
            let ring = session.ring(&spec)?;
            let labels: Vec<String> = ring.ext_basis().iter().map(|b| b.label.clone()).collect();
            let x = parse_element(&left, &labels)?;
            let y = parse_element(&right, &labels)?;
            let p = ring.product(&x, &y)?;
            let mut text = format!("{}\n", ring.format_element(&p));
            if with_m {
                text.push_str(&format!("m={}\n", ring.m_of(&p)));
            }
            Ok(text)
        }
        Command::M { spec, expr } => {
            let ring = session.ring(&spec)?;
            let labels: Vec<String> = ring.ext_basis().iter().map(|b| b.label.clone()).collect();
            let x = parse_element(&expr, &labels)?;
            Ok(format!("{}\n", ring.m_of(&x)))
        }
        Command::Verify { spec, suites } => {
            let ring = session.ring(&spec)?;
            let table = compute::extended_table(&ring)?;
            let any = suites.hom || suites.rank || suites.det || suites.lemma_sign || suites.bfo;
            let all = suites.all || !any;
            let needs_products = all || suites.hom || suites.bfo;
            let products = if needs_products { Some(compute::product_table(&ring)?) } else { None };
            let products = products.as_deref().unwrap_or(&[]);
            let mut checks = Vec::new();
            if all || suites.hom {
                checks.push(verify::homomorphism(&ring, &table, products));
            }
            if all || suites.rank {
                checks.push(verify::full_rank(&ring, &table));
            }
            if all || suites.det {
                checks.push(verify::nonzero_det(&ring, &table));
            }
            if all || suites.lemma_sign {
                checks.push(verify::sign_lemma(&ring, &table));
            }
            if all || suites.bfo {
                checks.push(verify::bfo(&ring, products));
            }
            if all {
                checks.push(verify::ordinary_marks(&ring, &table));
                checks.push(verify::unit_law(&ring, products));
                checks.push(verify::commutative(&ring, products));
            }
            let text: String = checks.iter().map(|c| c.line() + "\n").collect();
            if checks.iter().all(|c| c.passed) {
                Ok(text)
            } else {
                Err(CliError::Failed(text))
            }
        }
    }
}
