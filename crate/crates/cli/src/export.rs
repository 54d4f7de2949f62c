//! Data export. Every output is a pure function of the inputs, so repeated
//! exports are byte-identical.

use std::path::Path;

use clap::ValueEnum;
use k3_core::fibsearch;
use k3_core::leech::{encode_cache, vectors_json};
use k3_core::lorentz::{attached_leg, complement_gram, root_records, LorentzVector, RootRecord};

use crate::context::{Context, Shared};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Octads,
    Minvecs,
    Roots42,
    Roots168,
    Gram,
    Incidence,
    Configs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Bin,
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn json<T: serde::Serialize>(v: &T) -> Shared<Vec<u8>> {
    let mut s = serde_json::to_string_pretty(v).map_err(err)?;
    s.push('\n');
    Ok(s.into_bytes())
}

fn csv_rows<T: std::fmt::Display>(header: Option<&[String]>, rows: &[Vec<T>]) -> Shared<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(h) = header {
        w.write_record(h).map_err(err)?;
    }
    for r in rows {
        w.write_record(r.iter().map(|c| c.to_string())).map_err(err)?;
    }
    w.into_inner().map_err(err)
}

fn roots_csv(records: &[RootRecord]) -> Shared<Vec<u8>> {
    let mut header: Vec<String> = (0..24).map(|i| format!("l{i}")).collect();
    header.extend(["m", "n", "family"].map(String::from));
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let mut row: Vec<String> = r.lambda.iter().map(|x| x.to_string()).collect();
            row.extend([r.m.to_string(), r.n.to_string(), r.family.map(String::from).unwrap_or_default()]);
            row
        })
        .collect();
    csv_rows(Some(&header), &rows)
}

/// Bytes of the requested export.
pub fn render(ctx: &Context, kind: Kind, format: Format) -> Shared<Vec<u8>> {
    let unsupported = || Err(format!("{kind:?} cannot be exported as {format:?}").to_lowercase());
    match (kind, format) {
        (Kind::Octads, Format::Json) => {
            let mut s = ctx.code()?.octads_json().map_err(err)?;
            s.push('\n');
            Ok(s.into_bytes())
        }
        (Kind::Octads, Format::Csv) => {
            let rows: Vec<Vec<&str>> = ctx.code()?.octads().iter().map(|o| o.labels()).collect();
            csv_rows::<&str>(None, &rows)
        }
        (Kind::Minvecs, Format::Json) => {
            let mut s = vectors_json(&ctx.minvecs()?.vectors).map_err(err)?;
            s.push('\n');
            Ok(s.into_bytes())
        }
        (Kind::Minvecs, Format::Bin) => encode_cache(&ctx.minvecs()?.vectors).map_err(err),
        (Kind::Roots42 | Kind::Roots168, Format::Json | Format::Csv) => {
            let records = if kind == Kind::Roots42 {
                let curves = ctx.curves()?;
                root_records(&curves.roots, |i| Some(if curves.graph.part(i) == 0 { 'A' } else { 'B' }))
            } else {
                let e = ctx.embedding()?;
                let roots = ctx.roots168()?;
                root_records(roots, |i| attached_leg(e, &roots[i]))
            };
            if format == Format::Json {
                json(&records)
            } else {
                roots_csv(&records)
            }
        }
        (Kind::Gram, Format::Json | Format::Csv) => {
            let sub: Vec<LorentzVector> = ctx.embedding()?.roots().map(|r| r.vector()).to_vec();
            let g = complement_gram(ctx.basis()?, &sub).map_err(err)?;
            let rows = g.matrix().to_i64_rows().map_err(err)?;
            if format == Format::Json {
                json(&rows)
            } else {
                csv_rows(None, &rows)
            }
        }
        (Kind::Incidence, Format::Json | Format::Csv) => {
            let g = ctx.curve_graph()?;
            let rows: Vec<Vec<u8>> =
                (0..g.len()).map(|u| (0..g.len()).map(|v| g.has_edge(u, v) as u8).collect()).collect();
            if format == Format::Json {
                json(&serde_json::json!({ "labels": g.labels(), "matrix": rows }))
            } else {
                let mut header = vec![String::from("vertex")];
                header.extend(g.labels().iter().cloned());
                let labelled: Vec<Vec<String>> = rows
                    .iter()
                    .enumerate()
                    .map(|(i, r)| {
                        std::iter::once(g.label(i).to_string()).chain(r.iter().map(|x| x.to_string())).collect()
                    })
                    .collect();
                csv_rows(Some(&header), &labelled)
            }
        }
        (Kind::Configs, Format::Json) => {
            let g = ctx.curve_graph()?;
            let d4 = fibsearch::find_d4_configuration(g).map_err(err)?;
            let a5 = fibsearch::find_a5_configuration(g).map_err(err)?;
            json(&serde_json::json!({
                "d4": fibsearch::config_json(g, &d4).map_err(err)?,
                "a5": fibsearch::config_json(g, &a5).map_err(err)?,
            }))
        }
        _ => unsupported(),
    }
}

pub fn export_data(ctx: &Context, kind: Kind, format: Format, path: &Path) -> Shared<()> {
    let bytes = render(ctx, kind, format)?;
    std::fs::write(path, bytes).map_err(|e| format!("{}: {e}", path.display()))
}
