use std::path::Path;

use osdual::C64;

use crate::CliError;

pub fn parse_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<f64>().map_err(|_| CliError::Usage(format!("not a number: {s}"))))
        .collect()
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn records(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let text = read(path)?;
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).flexible(true).trim(csv::Trim::All).from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        if rec.iter().all(|f| f.is_empty()) {
            continue;
        }
        // skip a header line
        if out.is_empty() && rec.iter().any(|f| f.parse::<f64>().is_err()) {
            continue;
        }
        let row = rec
            .iter()
            .map(|f| f.parse::<f64>().map_err(|_| CliError::Usage(format!("{}: not a number: {f}", path.display()))))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(row);
    }
    Ok(out)
}

/// One real per line.
pub fn read_times(path: &Path) -> Result<Vec<f64>, CliError> {
    records(path)?
        .into_iter()
        .map(|r| r.first().copied().ok_or_else(|| CliError::Usage("empty row".into())))
        .collect()
}

/// Rows (node, re, im); a missing im is zero.
pub fn read_samples(path: &Path) -> Result<(Vec<f64>, Vec<C64>), CliError> {
    let rows = records(path)?;
    if rows.iter().any(|r| r.len() < 2) {
        return Err(CliError::Usage(format!("{}: expected node,re[,im]", path.display())));
    }
    let nodes = rows.iter().map(|r| r[0]).collect::<Vec<_>>();
    if nodes.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(CliError::Usage(format!("{}: nodes must increase", path.display())));
    }
    Ok((nodes, rows.iter().map(|r| C64::new(r[1], r.get(2).copied().unwrap_or(0.0))).collect()))
}

/// Rows (re, im) of coefficients.
pub fn read_coefficients(path: &Path) -> Result<Vec<C64>, CliError> {
    Ok(records(path)?.into_iter().map(|r| C64::new(r[0], r.get(1).copied().unwrap_or(0.0))).collect())
}

/// Berrut's barycentric rational interpolant through the samples, zero
/// outside their range.
pub fn barycentric_interpolant(nodes: Vec<f64>, values: Vec<C64>) -> impl Fn(f64) -> C64 {
    move |x| {
        let (Some(&lo), Some(&hi)) = (nodes.first(), nodes.last()) else {
            return C64::new(0.0, 0.0);
        };
        if x < lo || x > hi {
            return C64::new(0.0, 0.0);
        }
        let mut num = C64::new(0.0, 0.0);
        let mut den = 0.0;
        for (j, (&xj, &fj)) in nodes.iter().zip(&values).enumerate() {
            let d = x - xj;
            if d == 0.0 {
                return fj;
            }
            let w = if j % 2 == 0 { 1.0 } else { -1.0 } / d;
            num += fj * w;
            den += w;
        }
        num / den
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    read(path)
}

/// JSON matrix as rows of [re, im] pairs.
pub fn read_matrix(path: &Path) -> Result<osdual::CMat, CliError> {
    let doc: Vec<Vec<[f64; 2]>> =
        serde_json::from_str(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let rows = doc.len();
    let cols = doc.first().map_or(0, |r| r.len());
    if doc.iter().any(|r| r.len() != cols) {
        return Err(CliError::Usage(format!("{}: ragged matrix", path.display())));
    }
    Ok(osdual::CMat::from_fn(rows, cols, |i, j| C64::new(doc[i][j][0], doc[i][j][1])))
}
