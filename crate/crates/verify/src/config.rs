use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("invalid value for `{key}`: {value}")]
    BadValue { key: String, value: String },
    #[error("{0}")]
    Invalid(String),
    #[error("cannot read config file: {0}")]
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    ClosedForms,
    Theorems,
    GIdentities,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "closed-forms" => Ok(Suite::ClosedForms),
            "theorems" => Ok(Suite::Theorems),
            "g-identities" => Ok(Suite::GIdentities),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Markdown,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "markdown" | "md" => Ok(OutputFormat::Markdown),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

/// Settings for one harness run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Overrides every per-check default tolerance when set.
    pub tol: Option<f64>,
    /// Terms summed before the tail fit.
    pub max_terms: usize,
    pub contour_step: f64,
    /// Fixed contour truncation height instead of the scanned one.
    pub t_max: Option<f64>,
    pub output_format: OutputFormat,
    pub workers: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            suite: Suite::All,
            tol: None,
            max_terms: 2000,
            contour_step: 0.05,
            t_max: None,
            output_format: OutputFormat::Json,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// Settings as read from a file or flags, each one optional.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigOverrides {
    pub suite: Option<Suite>,
    pub tol: Option<f64>,
    pub max_terms: Option<usize>,
    pub contour_step: Option<f64>,
    pub t_max: Option<f64>,
    pub output_format: Option<OutputFormat>,
    pub workers: Option<usize>,
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError> {
    value.parse().map_err(|_| ConfigError::BadValue { key: key.into(), value: value.into() })
}

impl ConfigOverrides {
    /// Parses `key = value` lines; `#` starts a comment. Keys mirror the
    /// command-line flags (`max-terms` and `max_terms` are both accepted).
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut out = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| ConfigError::Syntax {
                line: i + 1,
                message: format!("expected key = value, got `{line}`"),
            })?;
            let key = key.trim().replace('_', "-");
            let value = value.trim();
            match key.as_str() {
                "suite" => out.suite = Some(parse_value(&key, value)?),
                "tol" => out.tol = Some(parse_value(&key, value)?),
                "max-terms" => out.max_terms = Some(parse_value(&key, value)?),
                "contour-step" => out.contour_step = Some(parse_value(&key, value)?),
                "t-max" => out.t_max = Some(parse_value(&key, value)?),
                "format" | "output-format" => out.output_format = Some(parse_value(&key, value)?),
                "workers" => out.workers = Some(parse_value(&key, value)?),
                _ => return Err(ConfigError::UnknownKey(key)),
            }
        }
        Ok(out)
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Values set in `other` win.
    pub fn merge(self, other: Self) -> Self {
        Self {
            suite: other.suite.or(self.suite),
            tol: other.tol.or(self.tol),
            max_terms: other.max_terms.or(self.max_terms),
            contour_step: other.contour_step.or(self.contour_step),
            t_max: other.t_max.or(self.t_max),
            output_format: other.output_format.or(self.output_format),
            workers: other.workers.or(self.workers),
        }
    }

    pub fn resolve(self) -> Result<SuiteConfig, ConfigError> {
        let d = SuiteConfig::default();
        let config = SuiteConfig {
            suite: self.suite.unwrap_or(d.suite),
            tol: self.tol,
            max_terms: self.max_terms.unwrap_or(d.max_terms),
            contour_step: self.contour_step.unwrap_or(d.contour_step),
            t_max: self.t_max,
            output_format: self.output_format.unwrap_or(d.output_format),
            workers: self.workers.unwrap_or(d.workers),
        };
        config.validate()?;
        Ok(config)
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if let Some(tol) = self.tol {
            if !(tol > 0.0) {
                return Err(ConfigError::Invalid(format!("tol must be positive, got {tol}")));
            }
        }
        if self.max_terms < 100 {
            return Err(ConfigError::Invalid(format!("max-terms must be at least 100, got {}", self.max_terms)));
        }
        if !(self.contour_step > 0.0) {
            return Err(ConfigError::Invalid(format!("contour-step must be positive, got {}", self.contour_step)));
        }
        if let Some(t) = self.t_max {
            if !(t > 0.0) {
                return Err(ConfigError::Invalid(format!("t-max must be positive, got {t}")));
            }
        }
        if self.workers == 0 {
            return Err(ConfigError::Invalid("workers must be at least 1".into()));
        }
        Ok(())
    }

    /// The configured tolerance, or `default` when none was given.
    pub fn tol_or(&self, default: f64) -> f64 {
        self.tol.unwrap_or(default)
    }
}
