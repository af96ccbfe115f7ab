use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::{prove_source, ProveOptions};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub path: PathBuf,
    pub source: String,
}

/// One line of the benchmark table. Times are in milliseconds; the Wu
/// phases are blank for Groebner runs.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub name: String,
    pub verdict: String,
    pub final_remainder_ms: Option<f64>,
    pub triangulation_ms: Option<f64>,
    pub total_ms: Option<f64>,
}

/// The `.gp` files of `dir`, sorted by file name.
pub fn read_corpus(dir: &Path) -> std::io::Result<Vec<CorpusEntry>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "gp"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let source = std::fs::read_to_string(&path)?;
            let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            Ok(CorpusEntry { name, path, source })
        })
        .collect()
}

/// Proves every entry in turn. Input errors become rows with verdict
/// "error" and the run carries on.
pub fn bench(entries: &[CorpusEntry], opts: &ProveOptions) -> Vec<BenchRow> {
    entries
        .iter()
        .map(|e| match prove_source(&e.source, opts) {
            Ok(r) => {
                let st = &r.result.stats;
                BenchRow {
                    name: e.name.clone(),
                    verdict: r.result.verdict.label().to_string(),
                    final_remainder_ms: st.phase_ms("final_remainder"),
                    triangulation_ms: st.phase_ms("triangulation"),
                    total_ms: Some(st.total_ms()),
                }
            }
            Err(err) => BenchRow {
                name: e.name.clone(),
                verdict: format!("error: {err}"),
                final_remainder_ms: None,
                triangulation_ms: None,
                total_ms: None,
            },
        })
        .collect()
}

impl BenchRow {
    pub fn to_csv(rows: &[BenchRow]) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        if rows.is_empty() {
            w.write_record(["name", "verdict", "final_remainder_ms", "triangulation_ms", "total_ms"])
                .expect("in-memory write");
        }
        for r in rows {
            w.serialize(r).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
    }

    pub fn to_table(rows: &[BenchRow]) -> String {
        let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
        let ms = |x: Option<f64>| x.map(|v| format!("{v:.3}")).unwrap_or_else(|| "-".into());
        let mut s = String::new();
        let _ = writeln!(s, "{:<width$}  {:<12}  {:>12}  {:>12}  {:>12}", "name", "verdict", "remainder ms", "triang. ms", "total ms");
        for r in rows {
            let _ = writeln!(
                s,
                "{:<width$}  {:<12}  {:>12}  {:>12}  {:>12}",
                r.name,
                r.verdict,
                ms(r.final_remainder_ms),
                ms(r.triangulation_ms),
                ms(r.total_ms)
            );
        }
        s
    }
}
