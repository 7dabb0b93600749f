use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

/// A finite set of event (or forward transition) names.
pub type Configuration = BTreeSet<String>;

/// A set of configurations, kept in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ConfigurationSet(BTreeSet<Configuration>);

impl ConfigurationSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, configuration: Configuration) -> bool {
        self.0.insert(configuration)
    }

    pub fn contains(&self, configuration: &Configuration) -> bool {
        self.0.contains(configuration)
    }

    /// Convenience lookup by a list of names.
    pub fn contains_names(&self, names: &[&str]) -> bool {
        self.0.contains(&names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Configuration> {
        self.0.iter()
    }

    /// Configurations present in `self` but not in `other`.
    pub fn difference<'a>(&'a self, other: &'a ConfigurationSet) -> impl Iterator<Item = &'a Configuration> {
        self.0.difference(&other.0)
    }

    /// First configuration on which the two sets disagree, if any.
    pub fn first_difference(&self, other: &ConfigurationSet) -> Option<Configuration> {
        self.difference(other).chain(other.difference(self)).min().cloned()
    }
}

impl FromIterator<Configuration> for ConfigurationSet {
    fn from_iter<I: IntoIterator<Item = Configuration>>(iter: I) -> Self {
        ConfigurationSet(iter.into_iter().collect())
    }
}

impl IntoIterator for ConfigurationSet {
    type Item = Configuration;
    type IntoIter = std::collections::btree_set::IntoIter<Configuration>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

pub(crate) fn fmt_set<'a>(f: &mut fmt::Formatter<'_>, items: impl IntoIterator<Item = &'a String>) -> fmt::Result {
    write!(f, "{{")?;
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{item}")?;
    }
    write!(f, "}}")
}

/// Render a name set as `{a, b}`.
pub fn show_set<'a>(items: impl IntoIterator<Item = &'a String>) -> String {
    struct Show<'a>(Vec<&'a String>);
    impl fmt::Display for Show<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            fmt_set(f, self.0.iter().copied())
        }
    }
    Show(items.into_iter().collect()).to_string()
}

impl fmt::Display for ConfigurationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            fmt_set(f, c)?;
        }
        write!(f, "}}")
    }
}
