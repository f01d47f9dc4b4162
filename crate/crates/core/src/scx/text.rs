//! Line-oriented complex files.
//!
//! ```text
//! # comment
//! dim 2
//! rank 3 -1          # optional, default rank = vertex id
//! label 3 apex       # optional
//! simplex 0 1 2      # maximal simplices
//! boundary auto      # or: boundary 0 1   (one boundary simplex per line)
//! orient 0 1 2 +1    # optional; `orient auto` orients when possible
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use super::{build_complex, ComplexPair, ManifoldOptions, ManifoldPair, OrderedComplex, ScxError, Vertex};

/// A parsed complex file.
#[derive(Clone, Debug)]
pub struct ComplexFile {
    pub complex: Arc<OrderedComplex>,
    pub dim: Option<usize>,
    /// Complex with the declared (or computed) boundary as subcomplex.
    pub pair: ComplexPair,
    /// Present when a `dim` line was given; holds the validation outcome.
    pub manifold: Option<Result<ManifoldPair, ScxError>>,
}

impl ComplexFile {
    pub fn manifold(&self) -> Result<&ManifoldPair, ScxError> {
        match &self.manifold {
            Some(Ok(m)) => Ok(m),
            Some(Err(e)) => Err(e.clone()),
            None => Err(ScxError::Parse {
                line: 0,
                message: "no `dim` line, so no manifold structure".into(),
            }),
        }
    }
}

enum Boundary {
    Absent,
    Auto,
    Explicit(Vec<Vec<Vertex>>),
}

fn parse_vertices(words: &[&str], line: usize) -> Result<Vec<Vertex>, ScxError> {
    words
        .iter()
        .map(|w| {
            w.parse::<Vertex>().map_err(|_| ScxError::Parse {
                line,
                message: format!("expected a vertex id, found {w:?}"),
            })
        })
        .collect()
}

pub fn parse_complex(text: &str) -> Result<ComplexFile, ScxError> {
    let mut dim = None;
    let mut ranks: BTreeMap<Vertex, i64> = BTreeMap::new();
    let mut labels = BTreeMap::new();
    let mut maximal: Vec<Vec<Vertex>> = Vec::new();
    let mut boundary = Boundary::Absent;
    let mut orient: Option<Vec<(Vec<Vertex>, i8)>> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let err = |message: String| ScxError::Parse { line, message };
        match words[0] {
            "dim" => {
                let [_, d] = words[..] else {
                    return Err(err("usage: dim <n>".into()));
                };
                dim = Some(d.parse().map_err(|_| err(format!("bad dimension {d:?}")))?);
            }
            "rank" => {
                let [_, v, r] = words[..] else {
                    return Err(err("usage: rank <vertex> <rank>".into()));
                };
                let v = parse_vertices(&[v], line)?[0];
                let r = r.parse().map_err(|_| err(format!("bad rank {r:?}")))?;
                ranks.insert(v, r);
            }
            "label" => {
                if words.len() < 3 {
                    return Err(err("usage: label <vertex> <text>".into()));
                }
                let v = parse_vertices(&words[1..2], line)?[0];
                labels.insert(v, words[2..].join(" "));
            }
            "simplex" => {
                let s = parse_vertices(&words[1..], line)?;
                if s.is_empty() {
                    return Err(err("empty simplex".into()));
                }
                maximal.push(s);
            }
            "boundary" => match (&mut boundary, &words[1..]) {
                (Boundary::Absent, ["auto"]) => boundary = Boundary::Auto,
                (Boundary::Absent, rest) => {
                    boundary = Boundary::Explicit(vec![parse_vertices(rest, line)?])
                }
                (Boundary::Explicit(list), rest) if rest != ["auto"] => {
                    list.push(parse_vertices(rest, line)?)
                }
                _ => return Err(err("`boundary auto` cannot be mixed with other boundary lines".into())),
            },
            "orient" => {
                if words[1..] == ["auto"] {
                    continue;
                }
                let Some((sign, simplex)) = words[1..].split_last() else {
                    return Err(err("usage: orient <v0> ... <+1|-1>".into()));
                };
                let sign = match *sign {
                    "+1" | "1" => 1,
                    "-1" => -1,
                    s => return Err(err(format!("orientation sign must be +1 or -1, found {s:?}"))),
                };
                orient
                    .get_or_insert_with(Vec::new)
                    .push((parse_vertices(simplex, line)?, sign));
            }
            w => return Err(err(format!("unknown directive {w:?}"))),
        }
    }
    let complex = build_complex(&maximal, |v| ranks.get(&v).copied().unwrap_or(v as i64))
        .map_err(|e| ScxError::Parse {
            line: 0,
            message: e.to_string(),
        })?
        .with_labels(labels);
    let complex = Arc::new(complex);
    let explicit = match &boundary {
        Boundary::Explicit(list) => Some(list.clone()),
        _ => None,
    };
    let manifold = dim.map(|n| {
        let opts = ManifoldOptions {
            boundary: explicit.clone(),
            orientation: orient.clone(),
        };
        ManifoldPair::validate_with(complex.clone(), n, &opts)
    });
    let pair = match (&boundary, &manifold) {
        (Boundary::Explicit(list), _) => ComplexPair::new(complex.clone(), list)?,
        (Boundary::Auto, Some(Ok(m))) => m.pair().clone(),
        (Boundary::Auto, Some(Err(e))) => return Err(e.clone()),
        (Boundary::Auto, None) => {
            return Err(ScxError::Parse {
                line: 0,
                message: "`boundary auto` needs a `dim` line".into(),
            })
        }
        (Boundary::Absent, _) => ComplexPair::absolute(complex.clone()),
    };
    Ok(ComplexFile {
        complex,
        dim,
        pair,
        manifold,
    })
}

/// Serializes a complex (and optionally its manifold data) in the format
/// read by [`parse_complex`].
pub fn write_complex(x: &OrderedComplex, manifold: Option<&ManifoldPair>) -> String {
    let mut out = String::new();
    if let Some(m) = manifold {
        let _ = writeln!(out, "dim {}", m.n());
    }
    for v in x.vertices() {
        if x.rank(v) != v as i64 {
            let _ = writeln!(out, "rank {v} {}", x.rank(v));
        }
    }
    for (v, l) in x.labels() {
        let _ = writeln!(out, "label {v} {l}");
    }
    for s in x.maximal_simplices() {
        let _ = writeln!(out, "simplex {}", join(&s));
    }
    if let Some(m) = manifold {
        if !m.is_closed() {
            let _ = writeln!(out, "boundary auto");
        }
        if let Some(signs) = m.orientation() {
            for (j, e) in signs.iter().enumerate() {
                let s = x.simplex(m.n(), j);
                let _ = writeln!(out, "orient {} {}", join(s), if *e > 0 { "+1" } else { "-1" });
            }
        }
    }
    out
}

fn join(s: &[Vertex]) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}
