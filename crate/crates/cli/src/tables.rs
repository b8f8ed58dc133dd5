//! Table export. Every table is a header row plus string cells; scalars use
//! their canonical rendering.

use mv_core::characters::char_table;
use mv_core::partitions::enumerate_up_to;
use mv_core::vertex::{free_energy, operator_amplitude, qdim, w_two, Diagram, FreeEnergyTable};
use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum TableKind {
    Characters,
    Qdim,
    W,
    FreeEnergy,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum TableFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Variant {
    #[default]
    A,
    B,
}

impl From<Variant> for Diagram {
    fn from(v: Variant) -> Self {
        match v {
            Variant::A => Diagram::A,
            Variant::B => Diagram::B,
        }
    }
}

#[derive(Clone, Debug)]
pub struct TableOptions {
    /// symmetric-group degree of the character table
    pub n: u32,
    /// largest partition size for `qdim` and `w`
    pub max_size: u32,
    pub framing: i32,
    pub variant: Variant,
    pub max_degree: u32,
    pub q_order: u32,
    /// highest power of `λ` emitted
    pub lambda_order: i32,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            n: 4,
            max_size: 3,
            framing: 0,
            variant: Variant::A,
            max_degree: 3,
            q_order: 2,
            lambda_order: 3,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("cells are UTF-8"))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("tables serialize");
        s.push('\n');
        s
    }

    pub fn render(&self, format: TableFormat) -> Result<String, CliError> {
        match format {
            TableFormat::Csv => self.to_csv(),
            TableFormat::Json => Ok(self.to_json()),
        }
    }
}

fn cols(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn build(kind: TableKind, opts: &TableOptions) -> Result<Table, CliError> {
    match kind {
        TableKind::Characters => {
            let t = char_table(opts.n)?;
            let mut columns = vec!["nu".to_string()];
            columns.extend(t.partitions().iter().map(|mu| mu.to_string()));
            let rows = t
                .partitions()
                .iter()
                .zip(t.values())
                .map(|(nu, row)| {
                    std::iter::once(nu.to_string())
                        .chain(row.iter().map(|v| v.to_string()))
                        .collect()
                })
                .collect();
            Ok(Table { columns, rows })
        }
        TableKind::Qdim => Ok(Table {
            columns: cols(&["mu", "qdim"]),
            rows: enumerate_up_to(opts.max_size)
                .into_iter()
                .map(|mu| vec![mu.to_string(), qdim(&mu).render()])
                .collect(),
        }),
        TableKind::W => {
            let all = enumerate_up_to(opts.max_size);
            let mut rows = Vec::new();
            for mu in &all {
                for nu in &all {
                    rows.push(vec![
                        mu.to_string(),
                        nu.to_string(),
                        w_two(mu, nu)?.render(),
                    ]);
                }
            }
            Ok(Table {
                columns: cols(&["mu", "nu", "w"]),
                rows,
            })
        }
        TableKind::FreeEnergy => free_energy_table(opts),
    }
}

fn free_energy_table(opts: &TableOptions) -> Result<Table, CliError> {
    let z = operator_amplitude(
        opts.framing,
        opts.variant.into(),
        opts.max_degree,
        opts.q_order,
    )?;
    // λ^{2g−2+l(μ)} ≤ L for l(μ) = 1 needs g ≤ (L + 1)/2
    let max_genus = ((opts.lambda_order + 2) / 2).max(0) as u32;
    let table = FreeEnergyTable::from_log(&free_energy(&z)?, max_genus)?;
    let rows = table
        .entries
        .iter()
        .filter(|e| e.lambda_power <= opts.lambda_order)
        .map(|e| {
            vec![
                e.mu.to_string(),
                e.k.to_string(),
                e.genus.map(|g| g.to_string()).unwrap_or_default(),
                e.lambda_power.to_string(),
                e.value.to_string(),
            ]
        })
        .collect();
    Ok(Table {
        columns: cols(&["mu", "k", "genus", "lambda_power", "value"]),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn character_table_of_s3() {
        let opts = TableOptions {
            n: 3,
            ..TableOptions::default()
        };
        let csv = build(TableKind::Characters, &opts)
            .unwrap()
            .to_csv()
            .unwrap();
        assert_eq!(
            csv,
            "nu,[3],\"[2,1]\",\"[1,1,1]\"\n[3],1,1,1\n\"[2,1]\",-1,0,2\n\"[1,1,1]\",1,-1,1\n"
        );
    }

    #[test]
    fn quantum_dimension_rows() {
        let opts = TableOptions {
            max_size: 1,
            ..TableOptions::default()
        };
        let t = build(TableKind::Qdim, &opts).unwrap();
        assert_eq!(t.rows[1], vec!["[1]", "(u^-1 - u) * (z - z^-1)^-1"]);
        let opts = TableOptions {
            max_size: 0,
            ..TableOptions::default()
        };
        assert_eq!(
            build(TableKind::Qdim, &opts).unwrap().rows,
            vec![vec!["[]", "1"]]
        );
    }

    #[test]
    fn free_energy_rows() {
        let opts = TableOptions {
            max_degree: 1,
            q_order: 1,
            lambda_order: 1,
            ..TableOptions::default()
        };
        let t = build(TableKind::FreeEnergy, &opts).unwrap();
        assert!(t.rows.contains(&vec![
            "[1]".into(),
            "0".into(),
            "0".into(),
            "-1".into(),
            "-1".into()
        ]));
        assert!(t.rows.iter().all(|r| r[3].parse::<i32>().unwrap() <= 1));
    }
}
