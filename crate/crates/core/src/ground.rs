use std::collections::HashSet;
use std::fmt;

use crate::bits::{self, Mask, MAX_GROUND};
use crate::error::{Error, Result};

/// Ordered list of distinct element labels. Position `i` corresponds to bit `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Ground {
    labels: Vec<String>,
}

impl Ground {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Ground> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND {
            return Err(Error::GroundTooLarge(labels.len()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        Ok(Ground { labels })
    }

    /// Labels `1..=n`.
    pub fn numbered(n: usize) -> Ground {
        assert!(n <= MAX_GROUND);
        Ground { labels: (1..=n).map(|i| i.to_string()).collect() }
    }

    pub fn empty() -> Ground {
        Ground::default()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn full(&self) -> Mask {
        bits::full(self.len())
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<Mask> {
        labels
            .into_iter()
            .try_fold(0, |m, l| Ok(m | bits::bit(self.index_of(l.as_ref())?)))
    }

    pub fn labels_in(&self, m: Mask) -> Vec<&str> {
        bits::ones(m & self.full()).map(|i| self.label(i)).collect()
    }

    /// Error unless `m` only uses positions of this ground set.
    pub fn check(&self, m: Mask) -> Result<()> {
        if m & !self.full() != 0 {
            Err(Error::NotASubset)
        } else {
            Ok(())
        }
    }

    /// The ground set with the positions in `m` kept, in order.
    pub fn restrict(&self, m: Mask) -> Ground {
        Ground { labels: bits::ones(m & self.full()).map(|i| self.labels[i].clone()).collect() }
    }

    pub fn without(&self, i: usize) -> Ground {
        let mut labels = self.labels.clone();
        labels.remove(i);
        Ground { labels }
    }

    /// `{a b c}` style rendering; `{}` for the empty set.
    pub fn format_set(&self, m: Mask) -> String {
        format!("{{{}}}", self.labels_in(m).join(" "))
    }

    /// Space-separated labels, `-` for the empty set.
    pub fn format_list(&self, m: Mask) -> String {
        if m == 0 {
            "-".to_string()
        } else {
            self.labels_in(m).join(" ")
        }
    }
}

impl fmt::Display for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.labels.join(" "))
    }
}
