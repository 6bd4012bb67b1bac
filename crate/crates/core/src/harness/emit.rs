use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::svg::render_svg;
use super::sweep::{CellStatus, SweepResult};

pub const CSV_HEADER: [&str; 8] = [
    "experiment",
    "method",
    "M",
    "param",
    "error",
    "cpu_weights_s",
    "cpu_solve_s",
    "status",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Svg,
}

fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "NaN".to_string()
    } else {
        // shortest representation that parses back to the same bits
        format!("{x:?}")
    }
}

fn parse_f64(s: &str, field: &str) -> Result<f64> {
    s.parse().map_err(|_| Error::Parse(format!("{field}: '{s}' is not a number")))
}

fn csv_error(e: csv::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn write_csv<W: Write>(results: &[SweepResult], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(csv_error)?;
    for r in results {
        w.write_record([
            r.experiment.name().to_string(),
            r.method.name().to_string(),
            r.m.to_string(),
            r.param.map(fmt_f64).unwrap_or_default(),
            fmt_f64(r.error),
            fmt_f64(r.cpu_weights_s),
            fmt_f64(r.cpu_solve_s),
            r.status.name().to_string(),
        ])
        .map_err(csv_error)?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<SweepResult>> {
    let mut rd = csv::Reader::from_reader(input);
    let header = rd.headers().map_err(csv_error)?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Parse(format!("unexpected header {:?}", header)));
    }
    rd.records()
        .map(|rec| {
            let rec = rec.map_err(csv_error)?;
            if rec.len() != CSV_HEADER.len() {
                return Err(Error::Parse(format!("expected 8 fields, got {}", rec.len())));
            }
            let param = match &rec[3] {
                "" => None,
                s => Some(parse_f64(s, "param")?),
            };
            let status: CellStatus = rec[7].parse()?;
            Ok(SweepResult {
                experiment: rec[0].parse()?,
                method: rec[1].parse()?,
                m: rec[2].parse().map_err(|_| Error::Parse(format!("M: '{}'", &rec[2])))?,
                param,
                error: parse_f64(&rec[4], "error")?,
                cpu_weights_s: parse_f64(&rec[5], "cpu_weights_s")?,
                cpu_solve_s: parse_f64(&rec[6], "cpu_solve_s")?,
                status,
            })
        })
        .collect()
}

/// Writes `results` to `path` as CSV or as a log-error line chart.
pub fn emit(results: &[SweepResult], format: Format, path: &Path) -> Result<()> {
    if results.is_empty() {
        return Err(Error::InvalidParameter("no results to write".into()));
    }
    let io = |source: std::io::Error| Error::Io { path: path.to_path_buf(), source };
    let file = File::create(path).map_err(io)?;
    let mut out = BufWriter::new(file);
    match format {
        Format::Csv => write_csv(results, &mut out)?,
        Format::Svg => out.write_all(render_svg(results).as_bytes()).map_err(io)?,
    }
    out.flush().map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::Experiment;
    use crate::stencils::Method;

    fn row(method: Method, m: usize, error: f64, status: CellStatus) -> SweepResult {
        SweepResult {
            experiment: Experiment::HelmConst,
            method,
            m,
            param: if method == Method::DscRsk { Some(42.3) } else { None },
            error,
            cpu_weights_s: 0.125,
            cpu_solve_s: 1.0 / 3.0,
            status,
        }
    }

    #[test]
    fn single_row_gives_header_and_one_line() {
        let mut buf = Vec::new();
        write_csv(&[row(Method::Fd, 50, 0.25, CellStatus::Ok)], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], "experiment,method,M,param,error,cpu_weights_s,cpu_solve_s,status");
        assert!(lines[1].starts_with("helm-const,FD,50,,0.25,0.125,"));
        assert!(lines[1].ends_with(",ok"));
    }

    #[test]
    fn nan_rows_use_literal_token() {
        let mut buf = Vec::new();
        write_csv(&[row(Method::Fd, 450, f64::NAN, CellStatus::Nan)], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let fields: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(fields[4], "NaN");
        assert_eq!(fields[7], "nan");
    }

    #[test]
    fn csv_round_trips_exactly() {
        let rows = vec![
            row(Method::DscRsk, 250, 7.34e-10, CellStatus::Ok),
            row(Method::Euler, 500, 1.05e149, CellStatus::Ok),
            row(Method::Fd, 450, f64::NAN, CellStatus::Nan),
            row(Method::Sech, 300, f64::NAN, CellStatus::NoConverge),
            row(Method::DscRsk, 7, f64::NAN, CellStatus::Skipped),
            row(Method::Sinc, 1, 0.1 + 0.2, CellStatus::Ok),
        ];
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let back = read_csv(buf.as_slice()).unwrap();
        assert_eq!(back, rows);
    }

    #[test]
    fn malformed_input_is_rejected() {
        assert!(read_csv("a,b\n1,2\n".as_bytes()).is_err());
        let bad = "experiment,method,M,param,error,cpu_weights_s,cpu_solve_s,status\nhelm-const,FD,x,,1,0,0,ok\n";
        assert!(read_csv(bad.as_bytes()).is_err());
    }

    #[test]
    fn emit_reports_path_on_failure() {
        let rows = [row(Method::Fd, 50, 0.25, CellStatus::Ok)];
        let path = Path::new("/nonexistent-dir/out.csv");
        let err = emit(&rows, Format::Csv, path).unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/out.csv"));
        assert!(emit(&[], Format::Csv, Path::new("unused.csv")).is_err());
    }

    #[test]
    fn emit_writes_both_formats() {
        let dir = std::env::temp_dir().join(format!("stencil-emit-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let rows = [row(Method::Fd, 50, 0.25, CellStatus::Ok), row(Method::Fd, 100, 0.5, CellStatus::Ok)];
        let csv_path = dir.join("r.csv");
        emit(&rows, Format::Csv, &csv_path).unwrap();
        assert_eq!(read_csv(File::open(&csv_path).unwrap()).unwrap(), rows);
        let svg_path = dir.join("r.svg");
        emit(&rows, Format::Svg, &svg_path).unwrap();
        assert!(std::fs::read_to_string(&svg_path).unwrap().starts_with("<svg"));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
