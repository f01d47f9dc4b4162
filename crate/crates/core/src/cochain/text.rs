//! Cochain files: a `cochain <ring> <degree>` header, then one
//! `v0 v1 … -> value` line per nonzero entry. Vertices may be listed in
//! any order; `#` starts a comment.

use std::fmt::Write as _;
use std::sync::Arc;

use num_rational::Ratio;

use super::{Cochain, CochainError, Int, QmodZ, Ring, RingTag, Z2, Z4};
use crate::scx::{OrderedComplex, Vertex};

/// A cochain with its ring decided at run time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyCochain {
    Int(Cochain<Int>),
    Z2(Cochain<Z2>),
    Z4(Cochain<Z4>),
    QmodZ(Cochain<QmodZ>),
}

impl AnyCochain {
    pub fn tag(&self) -> RingTag {
        match self {
            AnyCochain::Int(_) => RingTag::Int,
            AnyCochain::Z2(_) => RingTag::Z2,
            AnyCochain::Z4(_) => RingTag::Z4,
            AnyCochain::QmodZ(_) => RingTag::QmodZ,
        }
    }

    pub fn into_z2(self) -> Result<Cochain<Z2>, CochainError> {
        match self {
            AnyCochain::Z2(c) => Ok(c),
            other => Err(CochainError::RingMismatch {
                expected: RingTag::Z2,
                found: other.tag(),
            }),
        }
    }
}

fn parse_value(tag: RingTag, s: &str) -> Option<AnyValue> {
    Some(match tag {
        RingTag::Int => AnyValue::Int(Int(s.parse().ok()?)),
        RingTag::Z2 => match s {
            "0" => AnyValue::Z2(Z2::ZERO),
            "1" => AnyValue::Z2(Z2::ONE),
            _ => return None,
        },
        RingTag::Z4 => {
            let v: u8 = s.parse().ok()?;
            (v < 4).then(|| AnyValue::Z4(Z4::new(v as i64)))?
        }
        RingTag::QmodZ => {
            let (n, d) = s.split_once('/').unwrap_or((s, "1"));
            let (n, d): (i64, i64) = (n.parse().ok()?, d.parse().ok()?);
            if d <= 0 {
                return None;
            }
            let r = Ratio::new(n, d);
            if r < Ratio::from_integer(0) || r >= Ratio::from_integer(1) {
                return None;
            }
            AnyValue::QmodZ(QmodZ::new(n, d))
        }
    })
}

enum AnyValue {
    Int(Int),
    Z2(Z2),
    Z4(Z4),
    QmodZ(QmodZ),
}

pub fn parse_cochain(
    complex: &Arc<OrderedComplex>,
    text: &str,
) -> Result<AnyCochain, CochainError> {
    let mut header: Option<(RingTag, usize)> = None;
    let mut out: Option<AnyCochain> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let err = |message: String| CochainError::Parse { line, message };
        let Some((tag, degree)) = header else {
            let words: Vec<&str> = content.split_whitespace().collect();
            let ["cochain", ring, deg] = words[..] else {
                return Err(err("expected `cochain <ring> <degree>`".into()));
            };
            let tag = RingTag::parse(ring).ok_or_else(|| err(format!("unknown ring {ring:?}")))?;
            let degree: usize = deg.parse().map_err(|_| err(format!("bad degree {deg:?}")))?;
            header = Some((tag, degree));
            let cx = complex.clone();
            out = Some(match tag {
                RingTag::Int => AnyCochain::Int(Cochain::zero(cx, degree)),
                RingTag::Z2 => AnyCochain::Z2(Cochain::zero(cx, degree)),
                RingTag::Z4 => AnyCochain::Z4(Cochain::zero(cx, degree)),
                RingTag::QmodZ => AnyCochain::QmodZ(Cochain::zero(cx, degree)),
            });
            continue;
        };
        let (lhs, rhs) = content
            .split_once("->")
            .ok_or_else(|| err("expected `<vertices> -> <value>`".into()))?;
        let verts: Vec<Vertex> = lhs
            .split_whitespace()
            .map(|w| w.parse().map_err(|_| err(format!("bad vertex {w:?}"))))
            .collect::<Result<_, _>>()?;
        if verts.len() != degree + 1 {
            return Err(err(format!("a {degree}-simplex needs {} vertices", degree + 1)));
        }
        let sorted = complex.order(&verts).map_err(|e| err(e.to_string()))?;
        let j = complex
            .index_of(&sorted)
            .ok_or_else(|| err(format!("{verts:?} is not a simplex")))?;
        let value = parse_value(tag, rhs.trim())
            .ok_or_else(|| err(format!("bad {tag} value {:?}", rhs.trim())))?;
        match (out.as_mut().expect("header seen"), value) {
            (AnyCochain::Int(c), AnyValue::Int(v)) => c.set(j, v),
            (AnyCochain::Z2(c), AnyValue::Z2(v)) => c.set(j, v),
            (AnyCochain::Z4(c), AnyValue::Z4(v)) => c.set(j, v),
            (AnyCochain::QmodZ(c), AnyValue::QmodZ(v)) => c.set(j, v),
            _ => unreachable!("value parsed for the header ring"),
        }
    }
    out.ok_or(CochainError::Parse {
        line: 0,
        message: "missing `cochain` header".into(),
    })
}

pub fn write_cochain<R: Ring>(c: &Cochain<R>) -> String {
    let mut out = format!("cochain {} {}\n", R::TAG, c.degree());
    for (s, v) in c.support() {
        let verts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{} -> {v}", verts.join(" "));
    }
    out
}
