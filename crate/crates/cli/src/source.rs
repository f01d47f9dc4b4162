use std::path::Path;
use std::sync::Arc;

use pinquad::scx::{catalog, parse_complex, write_complex, ComplexPair, ManifoldPair, OrderedComplex, ScxError};
use sha2::{Digest, Sha256};

use crate::args::Source;
use crate::CliError;

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// A loaded complex with the identity of its input.
pub struct Loaded {
    /// `fixture:<name>` or the file path.
    pub source: String,
    pub sha256: String,
    pub complex: Arc<OrderedComplex>,
    /// The pair the cohomological commands act on.
    pub pair: ComplexPair,
    /// `None` when no `dim` line was given.
    pub manifold: Option<Result<ManifoldPair, ScxError>>,
}

impl Loaded {
    pub fn load(src: &Source) -> Result<Self, CliError> {
        if let Some(name) = &src.fixture {
            let m = catalog(name).map_err(|e| CliError::Input {
                input: format!("fixture:{name}"),
                message: e.to_string(),
            })?;
            let text = write_complex(m.complex(), Some(&m));
            return Ok(Loaded {
                source: format!("fixture:{name}"),
                sha256: sha256_hex(text.as_bytes()),
                complex: m.complex().clone(),
                pair: m.pair().clone(),
                manifold: Some(Ok(m)),
            });
        }
        let (path, relative) = match (&src.complex, &src.pair) {
            (Some(p), _) => (p, false),
            (None, Some(p)) => (p, true),
            (None, None) => return Err(CliError::Usage("one of --fixture, --complex, --pair is required".into())),
        };
        let text = read_file(path)?;
        let file = parse_complex(&text).map_err(|e| CliError::Input {
            input: path.display().to_string(),
            message: e.to_string(),
        })?;
        let pair = if relative {
            file.pair.clone()
        } else {
            ComplexPair::absolute(file.complex.clone())
        };
        Ok(Loaded {
            source: path.display().to_string(),
            sha256: sha256_hex(text.as_bytes()),
            complex: file.complex,
            pair,
            manifold: file.manifold,
        })
    }

    pub fn manifold(&self) -> Result<&ManifoldPair, CliError> {
        match &self.manifold {
            Some(Ok(m)) => Ok(m),
            Some(Err(e)) => Err(CliError::Input {
                input: self.source.clone(),
                message: format!("not a manifold: {e}"),
            }),
            None => Err(CliError::Input {
                input: self.source.clone(),
                message: "no `dim` line, so no manifold structure".into(),
            }),
        }
    }
}
