use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::numerics::HermitianMatrix;
use crate::os_core::{OsSystem, Semigroup};
use crate::{CMat, Error, Result};

type MatrixDoc = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Serialize, Deserialize)]
struct SampleDoc {
    t: f64,
    matrix: MatrixDoc,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum SemigroupDoc {
    Generator {
        data: MatrixDoc,
    },
    Samples {
        data: Vec<SampleDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        generator: Option<MatrixDoc>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
struct SystemDoc {
    ambient_gram: MatrixDoc,
    reflection: MatrixDoc,
    subspace: MatrixDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    semigroup: Option<SemigroupDoc>,
}

fn to_matrix(doc: &MatrixDoc) -> Result<CMat> {
    let rows = doc.len();
    let cols = doc.first().map_or(0, |r| r.len());
    if doc.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidInput("ragged matrix rows".into()));
    }
    Ok(CMat::from_fn(rows, cols, |i, j| Complex::new(doc[i][j][0], doc[i][j][1])))
}

fn from_matrix(m: &CMat) -> MatrixDoc {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

/// Parses {ambient_gram, reflection, subspace, semigroup: {kind, data}} with
/// row-major [re, im] entries.
pub fn system_from_json(text: &str) -> Result<OsSystem<f64>> {
    let doc: SystemDoc =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("system JSON: {e}")))?;
    let samples = |data: &Vec<SampleDoc>| -> Result<Vec<(f64, CMat)>> {
        data.iter().map(|s| Ok((s.t, to_matrix(&s.matrix)?))).collect()
    };
    let semigroup = match &doc.semigroup {
        None => None,
        Some(SemigroupDoc::Generator { data }) => Some(Semigroup::Generator(to_matrix(data)?)),
        Some(SemigroupDoc::Samples { data, generator: None }) => Some(Semigroup::Samples(samples(data)?)),
        Some(SemigroupDoc::Samples { data, generator: Some(g) }) => Some(Semigroup::Both {
            generator: to_matrix(g)?,
            samples: samples(data)?,
        }),
    };
    OsSystem::new(
        HermitianMatrix::new(to_matrix(&doc.ambient_gram)?)?,
        to_matrix(&doc.reflection)?,
        to_matrix(&doc.subspace)?,
        semigroup,
    )
}

pub fn system_to_json(system: &OsSystem<f64>) -> String {
    let sample_docs = |s: &[(f64, CMat)]| {
        s.iter().map(|(t, m)| SampleDoc { t: *t, matrix: from_matrix(m) }).collect()
    };
    let semigroup = system.semigroup().map(|sg| match sg {
        Semigroup::Generator(a) => SemigroupDoc::Generator { data: from_matrix(a) },
        Semigroup::Samples(s) => SemigroupDoc::Samples { data: sample_docs(s), generator: None },
        Semigroup::Both { generator, samples } => SemigroupDoc::Samples {
            data: sample_docs(samples),
            generator: Some(from_matrix(generator)),
        },
    });
    let doc = SystemDoc {
        ambient_gram: from_matrix(system.ambient_gram().matrix()),
        reflection: from_matrix(system.reflection()),
        subspace: from_matrix(system.subspace()),
        semigroup,
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}
