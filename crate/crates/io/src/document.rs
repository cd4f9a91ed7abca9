//! JSON documents for point sets and witnesses. Every rational is a
//! string such as `"-3/7"` or `"2"`; floats never appear.

use std::fmt;

use serde::{Deserialize, Serialize};
use tverberg_core::reduction::{AttemptRecord, ReductionTrace};
use tverberg_core::tverberg::{verify_witness, TverbergWitness};
use tverberg_core::vkf::{verify_vkf, VkfWitness};
use tverberg_core::{IntersectionCertificate, PointConfig, Rat, RatVector};

/// A parse failure with the place it happened: a line and column for
/// malformed JSON, a field path for malformed content.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{location}: {message}")]
pub struct ParseError {
    pub location: String,
    pub message: String,
}

impl ParseError {
    fn at(location: impl Into<String>, message: impl fmt::Display) -> Self {
        ParseError {
            location: location.into(),
            message: message.to_string(),
        }
    }

    fn json(e: serde_json::Error) -> Self {
        ParseError::at(format!("line {}, column {}", e.line(), e.column()), e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSetDocument {
    pub dim: usize,
    pub points: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn parse_rat(text: &str, location: impl FnOnce() -> String) -> Result<Rat, ParseError> {
    text.parse::<Rat>().map_err(|e| ParseError::at(location(), e))
}

fn rat_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(Rat::to_string).collect()
}

impl PointSetDocument {
    pub fn from_config(config: &PointConfig) -> Self {
        let defaults = (0..config.len()).all(|i| config.label(i) == format!("P{i}"));
        PointSetDocument {
            dim: config.dim(),
            points: config.points().iter().map(|p| rat_strings(p.coords())).collect(),
            labels: (!defaults).then(|| config.labels().to_vec()),
        }
    }

    pub fn to_config(&self) -> Result<PointConfig, ParseError> {
        let mut pts = Vec::with_capacity(self.points.len());
        for (i, row) in self.points.iter().enumerate() {
            if row.len() != self.dim {
                return Err(ParseError::at(
                    format!("points[{i}]"),
                    format!("{} coordinates, expected {}", row.len(), self.dim),
                ));
            }
            let coords = row
                .iter()
                .enumerate()
                .map(|(j, s)| parse_rat(s, || format!("points[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()?;
            pts.push(RatVector::new(coords));
        }
        let config = match &self.labels {
            Some(labels) => {
                if labels.len() != pts.len() {
                    return Err(ParseError::at(
                        "labels",
                        format!("{} labels for {} points", labels.len(), pts.len()),
                    ));
                }
                if let Some(j) = (0..labels.len()).find(|&j| labels[..j].contains(&labels[j])) {
                    return Err(ParseError::at(format!("labels[{j}]"), format!("duplicate label {:?}", labels[j])));
                }
                PointConfig::with_labels(self.dim, pts, labels.clone())
            }
            None => PointConfig::new(self.dim, pts),
        };
        config.map_err(|e| ParseError::at("dim", e))
    }
}

pub fn parse_pointset(text: &str) -> Result<PointConfig, ParseError> {
    let doc: PointSetDocument = serde_json::from_str(text).map_err(ParseError::json)?;
    doc.to_config()
}

pub fn serialize_pointset(config: &PointConfig) -> String {
    to_json(&PointSetDocument::from_config(config))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Tverberg,
    Vkf,
    ReductionTrace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AttemptDocument {
    pub mast_heights: Option<Vec<String>>,
    pub seed_parts: Option<Vec<Vec<usize>>>,
    pub descent_parts: Option<Vec<Vec<usize>>>,
    pub case_tag: Option<u8>,
    pub failure: Option<String>,
}

/// The intermediate objects of a reduction. Lifted indices: the working
/// base first (original index `order[i]` at position `i`), then the masts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TraceDocument {
    pub k: usize,
    pub order: Vec<usize>,
    pub mast_heights: Vec<String>,
    pub epsilon: String,
    pub delta: String,
    pub vkf_parts: Vec<Vec<usize>>,
    pub descent_parts: Vec<Vec<usize>>,
    pub z_prime: Vec<String>,
    pub unused_special: Vec<usize>,
    pub case_tag: u8,
    pub highest_vertices: Option<Vec<usize>>,
    pub projected_parts: Vec<Vec<usize>>,
    pub retries: usize,
    pub attempts: Vec<AttemptDocument>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDocument {
    pub kind: WitnessKind,
    pub parts: Vec<Vec<usize>>,
    pub common_point: Vec<String>,
    pub coefficients: Vec<Vec<(usize, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceDocument>,
}

fn parts_vec(parts: &[Vec<usize>; 3]) -> Vec<Vec<usize>> {
    parts.to_vec()
}

fn coefficient_strings(cert: &IntersectionCertificate) -> Vec<Vec<(usize, String)>> {
    cert.coefficients
        .iter()
        .map(|c| c.iter().map(|(i, w)| (*i, w.to_string())).collect())
        .collect()
}

fn attempt_document(a: &AttemptRecord) -> AttemptDocument {
    AttemptDocument {
        mast_heights: a.instance.as_ref().map(|i| rat_strings(&i.mast_heights)),
        seed_parts: a.seed.as_ref().map(|s| parts_vec(&s.parts)),
        descent_parts: a.descent.as_ref().map(|d| parts_vec(&d.parts)),
        case_tag: a.case_tag,
        failure: a.failure.clone(),
    }
}

impl WitnessDocument {
    pub fn from_tverberg(w: &TverbergWitness) -> Self {
        WitnessDocument {
            kind: WitnessKind::Tverberg,
            parts: parts_vec(&w.parts),
            common_point: rat_strings(w.cert.common_point.coords()),
            coefficients: coefficient_strings(&w.cert),
            trace: None,
        }
    }

    pub fn from_vkf(w: &VkfWitness) -> Self {
        WitnessDocument {
            kind: WitnessKind::Vkf,
            parts: parts_vec(&w.parts),
            common_point: rat_strings(w.cert.common_point.coords()),
            coefficients: coefficient_strings(&w.cert),
            trace: None,
        }
    }

    pub fn from_trace(t: &ReductionTrace) -> Self {
        let inst = &t.instance;
        let trace = TraceDocument {
            k: inst.k,
            order: t.order.clone(),
            mast_heights: rat_strings(&inst.mast_heights),
            epsilon: inst.epsilon.to_string(),
            delta: inst.delta.to_string(),
            vkf_parts: parts_vec(&t.vkf_witness.parts),
            descent_parts: parts_vec(&t.descent.parts),
            z_prime: rat_strings(t.descent.z_prime.coords()),
            unused_special: t.descent.unused_special.clone(),
            case_tag: t.case_tag,
            highest_vertices: t.highest_vertices.map(|h| h.to_vec()),
            projected_parts: parts_vec(&t.projected_parts),
            retries: t.retries,
            attempts: t.attempts.iter().map(attempt_document).collect(),
        };
        WitnessDocument {
            kind: WitnessKind::ReductionTrace,
            trace: Some(trace),
            ..WitnessDocument::from_tverberg(&t.final_witness)
        }
    }

    /// The three parts and the certificate, exactly as written.
    pub fn certificate(&self) -> Result<([Vec<usize>; 3], IntersectionCertificate), ParseError> {
        let three = |n: usize, what: &str| {
            if n == 3 {
                Ok(())
            } else {
                Err(ParseError::at(what, format!("expected 3 entries, got {n}")))
            }
        };
        three(self.parts.len(), "parts")?;
        three(self.coefficients.len(), "coefficients")?;
        let common = self
            .common_point
            .iter()
            .enumerate()
            .map(|(j, s)| parse_rat(s, || format!("common_point[{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let mut coefficients: [Vec<(usize, Rat)>; 3] = Default::default();
        for (p, list) in self.coefficients.iter().enumerate() {
            for (t, (i, w)) in list.iter().enumerate() {
                coefficients[p].push((*i, parse_rat(w, || format!("coefficients[{p}][{t}]"))?));
            }
        }
        let parts = [self.parts[0].clone(), self.parts[1].clone(), self.parts[2].clone()];
        Ok((
            parts,
            IntersectionCertificate {
                common_point: RatVector::new(common),
                coefficients,
            },
        ))
    }

    /// Exact re-verification against the point set alone.
    pub fn verify(&self, config: &PointConfig) -> Result<bool, ParseError> {
        let (parts, cert) = self.certificate()?;
        Ok(match self.kind {
            WitnessKind::Tverberg | WitnessKind::ReductionTrace => verify_witness(config, &TverbergWitness { parts, cert }),
            WitnessKind::Vkf => {
                let k = parts[0].len() / 2;
                verify_vkf(config, &VkfWitness { k, parts, cert })
            }
        })
    }
}

pub fn parse_witness(text: &str) -> Result<WitnessDocument, ParseError> {
    serde_json::from_str(text).map_err(ParseError::json)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}
