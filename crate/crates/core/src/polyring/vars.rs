use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Variable names, space variables first, then deformation parameters.
///
/// When a deformation is attached, `s_vars[0]` is the distinguished
/// parameter `u` paired with the basis element `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarTable {
    x_vars: Vec<String>,
    s_vars: Vec<String>,
}

impl VarTable {
    pub fn new<S: AsRef<str>>(x_vars: &[S], s_vars: &[S]) -> Result<Arc<Self>> {
        let x_vars: Vec<String> = x_vars.iter().map(|s| s.as_ref().to_string()).collect();
        let s_vars: Vec<String> = s_vars.iter().map(|s| s.as_ref().to_string()).collect();
        if x_vars.is_empty() {
            return Err(Error::VarTable("no space variables".into()));
        }
        let mut seen = HashSet::new();
        for name in x_vars.iter().chain(&s_vars) {
            if !valid_name(name) {
                return Err(Error::VarTable(format!("invalid variable name `{name}`")));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::VarTable(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Arc::new(VarTable { x_vars, s_vars }))
    }

    pub fn x_vars(&self) -> &[String] {
        &self.x_vars
    }

    pub fn s_vars(&self) -> &[String] {
        &self.s_vars
    }

    pub fn n_x(&self) -> usize {
        self.x_vars.len()
    }

    pub fn n_s(&self) -> usize {
        self.s_vars.len()
    }

    pub fn len(&self) -> usize {
        self.x_vars.len() + self.s_vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn name(&self, idx: usize) -> &str {
        if idx < self.x_vars.len() {
            &self.x_vars[idx]
        } else {
            &self.s_vars[idx - self.x_vars.len()]
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.x_vars
            .iter()
            .chain(&self.s_vars)
            .position(|v| v == name)
    }

    /// Global index of parameter `j`.
    pub fn s_index(&self, j: usize) -> usize {
        self.x_vars.len() + j
    }

    pub fn is_x(&self, idx: usize) -> bool {
        idx < self.x_vars.len()
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
