//! Run configuration: defaults, `key = value` files and flag overrides.

use std::path::PathBuf;
use std::str::FromStr;

use serde::Serialize;

use crate::CliError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(CliError::Config(format!("unknown format `{s}`"))),
        }
    }
}

/// Parameters shared by every check. Only the fields that influence results
/// are serialized into reports.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CheckConfig {
    pub max_degree: u32,
    pub q_order: u32,
    pub framings: Vec<i32>,
    pub char_n_max: u32,
    pub seed: u64,
    pub suites: Vec<String>,
    #[serde(skip)]
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub timings: bool,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            max_degree: 5,
            q_order: 3,
            framings: (-2..=2).collect(),
            char_n_max: 8,
            seed: 0,
            suites: Vec::new(),
            format: Format::Json,
            out: None,
            timings: false,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("bad value `{value}` for `{key}`")))
}

fn parse_list<T: FromStr>(key: &str, value: &str) -> Result<Vec<T>, CliError> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse(key, s))
        .collect()
}

impl CheckConfig {
    /// Applies a `key = value` file on top of `self`. Blank lines and lines
    /// starting with `#` are ignored; lists are comma separated.
    pub fn apply_file(&mut self, text: &str) -> Result<(), CliError> {
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Config(format!("line {}: expected key = value", lineno + 1))
            })?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "max_degree" => self.max_degree = parse(key, value)?,
            "q_order" => self.q_order = parse(key, value)?,
            "framings" => self.framings = parse_list(key, value)?,
            "char_n_max" => self.char_n_max = parse(key, value)?,
            "seed" => self.seed = parse(key, value)?,
            "suites" => self.suites = parse_list(key, value)?,
            "format" => self.format = value.parse()?,
            "out" => self.out = Some(PathBuf::from(value)),
            "timings" => self.timings = parse(key, value)?,
            _ => return Err(CliError::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let max = mv_core::symfun::MAX_DEGREE;
        if self.max_degree == 0 || self.max_degree > max {
            return Err(CliError::Config(format!("max_degree must be in 1..={max}")));
        }
        if self.char_n_max > max {
            return Err(CliError::Config(format!(
                "char_n_max must be at most {max}"
            )));
        }
        if self.q_order > max {
            return Err(CliError::Config(format!("q_order must be at most {max}")));
        }
        Ok(())
    }
}
