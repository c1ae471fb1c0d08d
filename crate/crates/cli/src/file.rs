//! The JSON interchange format for algebras and pairs.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use lieschur::{Algebra, Pair, Rational, Scalar, Subspace};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    /// Coefficients `label -> "p/q"`; labels absent from the map are zero.
    pub value: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub even: Vec<String>,
    pub odd: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ideal: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement: Option<Vec<String>>,
}

/// A parsed file: the algebra and, when an ideal is named, the pair.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub name: String,
    pub algebra: Algebra,
    pub ideal: Option<Subspace>,
    pub complement: Option<Subspace>,
}

impl Loaded {
    /// The pair named by the file, with `complement` overriding the file's.
    pub fn pair(&self, complement: Option<&[String]>) -> Result<Pair, CliError> {
        let ideal = self.ideal.clone().ok_or_else(|| CliError::Input("the file names no ideal".into()))?;
        let complement = match complement {
            Some(labels) => Some(subspace(&self.algebra, labels, "--complement")?),
            None => self.complement.clone(),
        };
        Pair::new(self.algebra.clone(), ideal, complement).map_err(|e| CliError::Invalid(format!("ideal: {e}")))
    }
}

fn is_zero<T: Scalar>(v: &T) -> bool {
    v.is_zero()
}

/// Accepts `"p"` or `"p/q"` with `q != 0`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((_, q)) = s.split_once('/') {
        if q.trim().parse::<i64>().ok() == Some(0) {
            return None;
        }
    }
    s.parse::<Rational>().ok()
}

fn subspace(alg: &Algebra, labels: &[String], what: &str) -> Result<Subspace, CliError> {
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    if let Some(bad) = refs.iter().find(|l| alg.index_of(l).is_none()) {
        return Err(CliError::Input(format!("{what}: unknown label {bad:?}")));
    }
    alg.span_of_labels(&refs).ok_or_else(|| CliError::Input(format!("{what}: bad label list")))
}

impl AlgebraFile {
    /// Brackets with `left <= right` in basis order, nonzero ones only.
    pub fn from_algebra(name: &str, alg: &Algebra) -> Self {
        let mut brackets = Vec::new();
        for i in 0..alg.dim() {
            for j in i..alg.dim() {
                let value: BTreeMap<String, String> = alg
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !is_zero(*c))
                    .map(|(k, c)| (alg.name(k).to_string(), c.to_frac_string()))
                    .collect();
                if !value.is_empty() {
                    brackets.push(BracketEntry { left: alg.name(i).into(), right: alg.name(j).into(), value });
                }
            }
        }
        AlgebraFile {
            name: name.to_string(),
            even: alg.even_names().to_vec(),
            odd: alg.odd_names().to_vec(),
            brackets,
            ideal: None,
            complement: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("malformed algebra file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Loaded, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)?.resolve()
    }

    /// Checks labels and brackets and builds the algebra. Each unordered
    /// pair of labels may appear in at most one bracket entry.
    pub fn resolve(&self) -> Result<Loaded, CliError> {
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (i, label) in self.even.iter().chain(&self.odd).enumerate() {
            if index.insert(label.as_str(), i).is_some() {
                return Err(CliError::Input(format!("label {label:?} is used twice")));
            }
        }
        let d = index.len();
        let lookup = |label: &str, at: &str| {
            index.get(label).copied().ok_or_else(|| CliError::Input(format!("{at}: unknown label {label:?}")))
        };
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut entries = Vec::with_capacity(self.brackets.len());
        for (n, b) in self.brackets.iter().enumerate() {
            let at = format!("brackets[{n}]");
            let i = lookup(&b.left, &at)?;
            let j = lookup(&b.right, &at)?;
            if let Some(first) = seen.insert((i.min(j), i.max(j)), n) {
                return Err(CliError::Input(format!(
                    "bracket of {:?} and {:?} is given twice, at brackets[{first}] and {at}",
                    b.left, b.right
                )));
            }
            let mut value = vec![Rational::from_i64(0); d];
            for (label, coeff) in &b.value {
                let k = lookup(label, &at)?;
                value[k] = parse_rational(coeff)
                    .ok_or_else(|| CliError::Input(format!("{at}: {label:?}: bad rational {coeff:?}")))?;
            }
            entries.push((i, j, value));
        }
        let algebra = Algebra::from_brackets(self.even.clone(), self.odd.clone(), entries)
            .map_err(|e| CliError::Input(e.to_string()))?;
        let ideal = self.ideal.as_deref().map(|l| subspace(&algebra, l, "ideal")).transpose()?;
        let complement = self.complement.as_deref().map(|l| subspace(&algebra, l, "complement")).transpose()?;
        Ok(Loaded { name: self.name.clone(), algebra, ideal, complement })
    }
}
