use std::path::Path;

use serde::Serialize;
use serde_json::value::RawValue;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Representable,
    NotRepresentable,
    Verified,
    Failed,
    Completed,
}

/// A command's product: JSON text or plain text (SVG).
pub enum Artifact {
    Json(String),
    Text(String),
}

impl Artifact {
    pub fn json(value: &impl Serialize) -> Artifact {
        Artifact::Json(serde_json::to_string(value).expect("artifact serializes"))
    }

    pub fn bytes(&self) -> String {
        match self {
            Artifact::Json(s) | Artifact::Text(s) => format!("{s}\n"),
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum ArtifactField {
    Path { path: String },
    Json(Box<RawValue>),
    Text(String),
}

#[derive(Serialize)]
pub struct RunReport {
    command: String,
    input_digest: Option<String>,
    outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    artifact: Option<ArtifactField>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    details: Value,
    timing_ms: f64,
}

impl RunReport {
    pub fn new(command: &str, digest: Option<String>, outcome: Outcome, details: Value, timing_ms: f64) -> Self {
        RunReport {
            command: command.to_string(),
            input_digest: digest,
            outcome,
            artifact: None,
            error: None,
            details,
            timing_ms: timing_ms.max(0.0),
        }
    }

    pub fn with_artifact(mut self, artifact: &Artifact, written_to: Option<&Path>) -> Self {
        self.artifact = Some(match (written_to, artifact) {
            (Some(p), _) => ArtifactField::Path {
                path: p.display().to_string(),
            },
            (None, Artifact::Json(s)) => ArtifactField::Json(RawValue::from_string(s.clone()).expect("artifact is JSON")),
            (None, Artifact::Text(s)) => ArtifactField::Text(s.clone()),
        });
        self
    }

    pub fn with_error(mut self, message: String) -> Self {
        self.error = Some(message);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for chunk in inputs {
        h.update(chunk);
    }
    let hex: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}
