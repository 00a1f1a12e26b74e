use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{Property, Tier};

const CORPUS: &str = include_str!("../../data/corpus.json");

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Literature,
    Derived,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Bool(bool),
    Count(u64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expectation {
    /// `order`, `max_cyclics`, `cyc`, `omega` or a property name.
    pub key: String,
    pub value: Value,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub spec: String,
    pub tier: Tier,
    pub anchor: String,
    pub expect: Vec<Expectation>,
}

impl CorpusEntry {
    pub fn count(&self, key: &str) -> Option<u64> {
        self.expect.iter().find_map(|e| match e.value {
            Value::Count(n) if e.key == key => Some(n),
            _ => None,
        })
    }

    pub fn property(&self, p: Property) -> Option<bool> {
        self.expect.iter().find_map(|e| match e.value {
            Value::Bool(b) if e.key == p.name() => Some(b),
            _ => None,
        })
    }
}

#[derive(Deserialize)]
struct File {
    entries: Vec<CorpusEntry>,
}

/// The registered corpus, in file order.
pub fn corpus() -> &'static [CorpusEntry] {
    static C: OnceLock<Vec<CorpusEntry>> = OnceLock::new();
    C.get_or_init(|| {
        serde_json::from_str::<File>(CORPUS)
            .expect("embedded corpus parses")
            .entries
    })
}

/// Entries at or below `tier`.
pub fn entries_up_to(tier: Tier) -> impl Iterator<Item = &'static CorpusEntry> {
    corpus().iter().filter(move |e| e.tier <= tier)
}
