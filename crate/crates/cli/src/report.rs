//! The JSON report document every command can emit.

use std::io;

use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const SCHEMA_VERSION: &str = "1";
pub const COMMANDS: [&str; 4] = ["analyze", "construct", "solve", "compare"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WarningClass {
    Marginal,
    NonContraction,
    InvalidInput,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Warning {
    pub class: WarningClass,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDigest {
    pub role: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(role: &str, bytes: &[u8]) -> Self {
        Self { role: role.to_owned(), sha256: hex::encode(Sha256::digest(bytes)) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub payload: serde_json::Value,
    pub warnings: Vec<Warning>,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("malformed report: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema_version {0:?}")]
    Schema(String),
    #[error("unknown command {0:?}")]
    Command(String),
    #[error("input {role:?} has a malformed digest")]
    Digest { role: String },
    #[error("payload must be an object")]
    Payload,
}

/// Pretty printing with every float written as `d.dddddddddddddddde±x`.
struct Fixed17(PrettyFormatter<'static>);

impl Formatter for Fixed17 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{value:.16e}")
    }
    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
    fn begin_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_array(writer)
    }
    fn end_array<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array(writer)
    }
    fn begin_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(writer, first)
    }
    fn end_array_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array_value(writer)
    }
    fn begin_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object(writer)
    }
    fn end_object<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object(writer)
    }
    fn begin_object_key<W: ?Sized + io::Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(writer, first)
    }
    fn begin_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object_value(writer)
    }
    fn end_object_value<W: ?Sized + io::Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object_value(writer)
    }
}

impl ReportDocument {
    pub fn new(command: &str, inputs: Vec<InputDigest>, payload: serde_json::Value, warnings: Vec<Warning>) -> Self {
        Self { schema_version: SCHEMA_VERSION.to_owned(), command: command.to_owned(), inputs, payload, warnings }
    }

    pub fn has_warning(&self, class: WarningClass) -> bool {
        self.warnings.iter().any(|w| w.class == class)
    }

    /// Pretty JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut out = Vec::new();
        let mut ser = serde_json::Serializer::with_formatter(&mut out, Fixed17(PrettyFormatter::new()));
        self.serialize(&mut ser).expect("report values serialize");
        out.push(b'\n');
        String::from_utf8(out).expect("serde_json writes UTF-8")
    }

    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        let doc: Self = serde_json::from_str(text)?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn validate(&self) -> Result<(), ReportError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(ReportError::Schema(self.schema_version.clone()));
        }
        if !COMMANDS.contains(&self.command.as_str()) {
            return Err(ReportError::Command(self.command.clone()));
        }
        for input in &self.inputs {
            let hex_ok = input.sha256.len() == 64 && input.sha256.bytes().all(|b| matches!(b, b'0'..=b'9' | b'a'..=b'f'));
            if !hex_ok {
                return Err(ReportError::Digest { role: input.role.clone() });
            }
        }
        if !self.payload.is_object() {
            return Err(ReportError::Payload);
        }
        Ok(())
    }
}
