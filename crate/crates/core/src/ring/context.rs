use std::fmt;

use crate::error::{Error, Result};

/// Names and count of the variables of `S = K[x_1, ..., x_l]`.
///
/// Declaration order fixes `x_1 > x_2 > ... > x_l` for every term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Vec<String>,
}

const SHORT_NAMES: [&str; 4] = ["x", "y", "z", "w"];

impl RingContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, name) in names.iter().enumerate() {
            let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!("invalid variable name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(Self { names })
    }

    /// `x1, ..., xl`.
    pub fn standard(num_vars: usize) -> Result<Self> {
        Self::new((1..=num_vars).map(|i| format!("x{i}")))
    }

    /// `x, y, z, w` truncated to `num_vars` (at most four), otherwise `x1..xl`.
    pub fn short(num_vars: usize) -> Result<Self> {
        if (1..=SHORT_NAMES.len()).contains(&num_vars) {
            Self::new(SHORT_NAMES[..num_vars].iter().copied())
        } else {
            Self::standard(num_vars)
        }
    }

    /// Chooses a ring for a set of identifiers seen in some input text:
    /// the shortest prefix of `x,y,z,w` covering them, or `x1..xN` if they
    /// are all of that form.
    pub fn infer<'a>(identifiers: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let identifiers: Vec<&str> = identifiers.into_iter().collect();
        if let Some(max) = identifiers.iter().map(|s| SHORT_NAMES.iter().position(|n| n == s)).try_fold(0, |acc, p| p.map(|p| acc.max(p + 1))) {
            return Self::short(max.max(1));
        }
        let indexed: Option<Vec<usize>> = identifiers
            .iter()
            .map(|s| s.strip_prefix('x').and_then(|rest| rest.parse::<usize>().ok()).filter(|&i| i >= 1))
            .collect();
        match indexed {
            Some(ix) => Self::standard(ix.into_iter().max().unwrap_or(1)),
            None => Err(Error::InvalidRing(format!(
                "cannot infer variable order from {{{}}}; declare it explicitly",
                identifiers.join(", ")
            ))),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The ring on the first `num_vars` variables.
    pub fn prefix(&self, num_vars: usize) -> Result<Self> {
        if num_vars == 0 || num_vars > self.num_vars() {
            return Err(Error::VariableOutOfRange { index: num_vars, num_vars: self.num_vars() });
        }
        Ok(Self { names: self.names[..num_vars].to_vec() })
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}]", self.names.join(","))
    }
}
