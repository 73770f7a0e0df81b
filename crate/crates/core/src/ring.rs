//! Ambient ring descriptors: S = k[x_1..x_n] with named variables.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::CoefficientField;

/// Descriptor of the ambient polynomial ring S = k[x_1..x_n].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingDescriptor {
    variables: Vec<String>,
    field: CoefficientField,
}

fn valid_var_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingDescriptor {
    pub fn new<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        field: CoefficientField,
    ) -> Result<Arc<Self>> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::InvalidRing("no variables declared".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if !valid_var_name(v) {
                return Err(Error::InvalidRing(format!("invalid variable name `{v}`")));
            }
            if variables[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(RingDescriptor { variables, field }))
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    /// A ring with `count` fresh variables prepended, named `t_0`, `t_1`, ...
    /// (renamed until they avoid every existing variable). Fresh variables
    /// come first so a block order can eliminate them.
    pub fn extended(self: &Arc<Self>, count: usize) -> Arc<RingDescriptor> {
        let mut fresh = Vec::with_capacity(count);
        let mut next = 0usize;
        while fresh.len() < count {
            let candidate = format!("t_{next}");
            next += 1;
            if self.variables.contains(&candidate) {
                continue;
            }
            fresh.push(candidate);
        }
        fresh.extend(self.variables.iter().cloned());
        Arc::new(RingDescriptor {
            variables: fresh,
            field: self.field.clone(),
        })
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.variables.join(","))
    }
}
