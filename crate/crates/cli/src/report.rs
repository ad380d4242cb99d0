use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Found,
    NotFound,
    Unsat,
    UnsupportedClass,
    Error,
    Agree,
    Disagree,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Found | Status::Agree => 0,
            Status::NotFound | Status::Unsat | Status::Disagree => 1,
            Status::Error => 2,
            Status::UnsupportedClass => 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Found => "found",
            Status::NotFound => "not-found",
            Status::Unsat => "unsat",
            Status::UnsupportedClass => "unsupported-class",
            Status::Error => "error",
            Status::Agree => "AGREE",
            Status::Disagree => "DISAGREE",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    pub num_vars: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub elapsed_ms: u64,
    pub branches: u64,
    pub guesses: u64,
}

/// Machine-readable outcome of one command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub status: Status,
    pub distance: Option<u64>,
    pub alpha1: Option<String>,
    pub alpha2: Option<String>,
    pub params: Params,
    pub stats: Stats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tuple: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl RunReport {
    pub fn new(status: Status, params: Params) -> Self {
        Self {
            status,
            distance: None,
            alpha1: None,
            alpha2: None,
            params,
            stats: Stats::default(),
            tuple: None,
            message: None,
        }
    }

    pub fn with_message(mut self, message: impl Into<String>) -> Self {
        self.message = Some(message.into());
        self
    }

    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }
}

impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.status.label())?;
        if let Some(class) = &self.params.class {
            write!(f, " class={class}")?;
        }
        if let Some(d) = self.distance {
            let key = if self.tuple.is_some() {
                "objective"
            } else {
                "distance"
            };
            write!(f, " {key}={d}")?;
        }
        if let (Some(a1), Some(a2)) = (&self.alpha1, &self.alpha2) {
            write!(f, " alpha1={a1} alpha2={a2}")?;
        }
        if let Some(tuple) = &self.tuple {
            write!(f, " tuple={}", tuple.join(","))?;
        }
        if let Some(msg) = &self.message {
            write!(f, " ({msg})")?;
        }
        Ok(())
    }
}
