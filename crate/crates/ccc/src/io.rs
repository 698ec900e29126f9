//! CSV schemas for scores, curves, ensemble summaries, and orderings.
//!
//! Floats are written with 17 significant digits so every value
//! round-trips exactly; identical inputs produce byte-identical files.

use std::io::{BufRead, Write};

use crate::centrality::ScoreVector;
use crate::curve::CccCurve;
use crate::ensemble::EnsembleSummary;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ordering::InducedOrder;

/// 17 significant digits; round-trips any f64.
pub fn format_g17(v: f64) -> String {
    format!("{v:.16e}")
}

/// `vertex,score` with original vertex ids.
pub fn write_scores_csv<W: Write>(w: &mut W, graph: &Graph, scores: &ScoreVector) -> Result<()> {
    if scores.len() != graph.n() {
        return Err(Error::LengthMismatch {
            left: graph.n(),
            right: scores.len(),
        });
    }
    writeln!(w, "vertex,score")?;
    for (v, s) in scores.scores().iter().enumerate() {
        writeln!(w, "{},{}", graph.original_id(v), format_g17(*s))?;
    }
    Ok(())
}

/// `x,ccc` on the full `k/n` grid.
pub fn write_curve_csv<W: Write>(w: &mut W, curve: &CccCurve) -> Result<()> {
    writeln!(w, "x,ccc")?;
    for (i, v) in curve.values().iter().enumerate() {
        writeln!(w, "{},{}", format_g17(curve.x(i + 1)), format_g17(*v))?;
    }
    Ok(())
}

/// `x,mean,std` on the full `k/n` grid.
pub fn write_summary_csv<W: Write>(w: &mut W, summary: &EnsembleSummary) -> Result<()> {
    writeln!(w, "x,mean,std")?;
    for (i, (m, s)) in summary.mean.iter().zip(&summary.std).enumerate() {
        writeln!(
            w,
            "{},{},{}",
            format_g17(summary.x(i + 1)),
            format_g17(*m),
            format_g17(*s)
        )?;
    }
    Ok(())
}

/// `rank,vertex` (debug export of an ordering), ranks starting at 1.
pub fn write_order_csv<W: Write>(w: &mut W, order: &InducedOrder) -> Result<()> {
    writeln!(w, "rank,vertex")?;
    for (rank, v) in order.permutation().iter().enumerate() {
        writeln!(w, "{},{}", rank + 1, v)?;
    }
    Ok(())
}

/// A re-ingested curve or summary file, as used by the plot command.
#[derive(Debug, Clone)]
pub enum PlotInput {
    /// `(x, y)` rows of a curve file.
    Curve(Vec<(f64, f64)>),
    /// `(x, mean, std)` rows of a summary file.
    Summary(Vec<(f64, f64, f64)>),
}

/// Reads back a `x,ccc` or `x,mean,std` CSV.
pub fn read_plot_csv<R: BufRead>(reader: R) -> Result<PlotInput> {
    let mut lines = reader.lines().enumerate();
    let header = match lines.next() {
        Some((_, line)) => line?,
        None => {
            return Err(Error::Parse {
                line: 1,
                message: "empty file".into(),
            })
        }
    };
    let parse_f64 = |line_no: usize, s: &str| {
        s.parse::<f64>().map_err(|_| Error::Parse {
            line: line_no,
            message: format!("invalid number {s:?}"),
        })
    };
    match header.trim() {
        "x,ccc" => {
            let mut rows = Vec::new();
            for (idx, line) in lines {
                let line = line?;
                let line_no = idx + 1;
                let mut fields = line.trim().split(',');
                let (Some(x), Some(y), None) = (fields.next(), fields.next(), fields.next())
                else {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected two columns".into(),
                    });
                };
                rows.push((parse_f64(line_no, x)?, parse_f64(line_no, y)?));
            }
            Ok(PlotInput::Curve(rows))
        }
        "x,mean,std" => {
            let mut rows = Vec::new();
            for (idx, line) in lines {
                let line = line?;
                let line_no = idx + 1;
                let mut fields = line.trim().split(',');
                let (Some(x), Some(m), Some(s), None) = (
                    fields.next(),
                    fields.next(),
                    fields.next(),
                    fields.next(),
                ) else {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected three columns".into(),
                    });
                };
                rows.push((
                    parse_f64(line_no, x)?,
                    parse_f64(line_no, m)?,
                    parse_f64(line_no, s)?,
                ));
            }
            Ok(PlotInput::Summary(rows))
        }
        other => Err(Error::Parse {
            line: 1,
            message: format!("unrecognized header {other:?}"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::Measure;
    use crate::curve::ccc;

    #[test]
    fn g17_round_trips() {
        for v in [0.0, 1.0 / 3.0, 0.1 + 0.2, f64::MIN_POSITIVE, 12345.6789] {
            let s = format_g17(v);
            let back: f64 = s.parse().unwrap();
            assert_eq!(v.to_bits(), back.to_bits(), "{s}");
        }
    }

    #[test]
    fn scores_csv_uses_original_ids() {
        let g = Graph::from_edge_list(&[(10, 20), (20, 30)], false);
        let s = Measure::Degree(crate::graph::DegreeMode::Total)
            .compute(&g)
            .unwrap();
        let mut buf = Vec::new();
        write_scores_csv(&mut buf, &g, &s).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("vertex,score\n10,"));
        assert!(text.contains("\n20,"));
    }

    #[test]
    fn curve_csv_round_trips_through_plot_reader() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (2, 0), (0, 3)], false);
        let a = Measure::Degree(crate::graph::DegreeMode::Total)
            .compute(&g)
            .unwrap();
        let b = Measure::pagerank(0.85).compute(&g).unwrap();
        let curve = ccc(&a, &b, 4).unwrap();
        let mut buf = Vec::new();
        write_curve_csv(&mut buf, &curve).unwrap();
        match read_plot_csv(buf.as_slice()).unwrap() {
            PlotInput::Curve(rows) => {
                assert_eq!(rows.len(), curve.n());
                for (i, (x, y)) in rows.iter().enumerate() {
                    assert_eq!(x.to_bits(), curve.x(i + 1).to_bits());
                    assert_eq!(y.to_bits(), curve.values()[i].to_bits());
                }
            }
            other => panic!("expected curve rows, got {other:?}"),
        }
    }

    #[test]
    fn plot_reader_rejects_unknown_headers() {
        assert!(read_plot_csv("a,b\n1,2\n".as_bytes()).is_err());
        assert!(read_plot_csv("".as_bytes()).is_err());
    }

    #[test]
    fn order_csv_lists_ranks_from_most_central() {
        let r = ScoreVector::new("r", 0, vec![0.1, 0.5, 0.3]).unwrap();
        let s = ScoreVector::new("s", 0, vec![0.0, 0.0, 0.0]).unwrap();
        let u = crate::ordering::shared_uniforms(3, 1);
        let order = crate::ordering::induced_order(&r, &s, &u).unwrap();
        let mut buf = Vec::new();
        write_order_csv(&mut buf, &order).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "rank,vertex\n1,1\n2,2\n3,0\n");
    }
}
