//! Word/phrase index over semicolon-group entries.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::taxonomy::Thesaurus;

/// Lookup key for an entry: trimmed, inner whitespace collapsed, lowercased.
/// No stemming.
pub fn normalize(text: &str) -> String {
    let mut key = String::with_capacity(text.len());
    for word in text.split_whitespace() {
        if !key.is_empty() {
            key.push(' ');
        }
        key.push_str(word);
    }
    key.to_lowercase()
}

/// Maps normalized entry text to entry positions, each list in document order.
/// Multi-word entries are indexed whole.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Index {
    keys: BTreeMap<String, Vec<u32>>,
}

impl Index {
    pub fn build(thesaurus: &Thesaurus) -> Index {
        let mut keys: BTreeMap<String, Vec<u32>> = BTreeMap::new();
        for (r, entry) in thesaurus.entries() {
            keys.entry(normalize(entry.text())).or_default().push(r.entry_index() as u32);
        }
        Index { keys }
    }

    /// Entry positions for an already-normalized key.
    pub fn get(&self, key: &str) -> &[u32] {
        self.keys.get(key).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> + '_ {
        self.keys.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }
}
