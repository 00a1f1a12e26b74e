//! Verification suites over a registered corpus of groups, with
//! graph-side and group-side answers compared wherever both exist.

mod classify;
mod corpus;
mod report;
mod suites;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use classify::{
    classify, classify_group, cross_validate, Analysis, ClassificationReport, Options,
    PropertyResult, WitnessSummary,
};
pub use corpus::{corpus, entries_up_to, CorpusEntry, Expectation, Source, Value};
pub use report::{write_report, Check, CheckRoute, EntryReport, Environment, SuiteReport};
pub use suites::{run_suite, SUITES};

/// The graph classes decided for every group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Cograph,
    Chordal,
    C4free,
    Diamond,
    Block,
    Qthreshold,
    Threshold,
    Eppo,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::Cograph,
        Property::Chordal,
        Property::C4free,
        Property::Diamond,
        Property::Block,
        Property::Qthreshold,
        Property::Threshold,
        Property::Eppo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Cograph => "cograph",
            Property::Chordal => "chordal",
            Property::C4free => "c4free",
            Property::Diamond => "diamond",
            Property::Block => "block",
            Property::Qthreshold => "qthreshold",
            Property::Threshold => "threshold",
            Property::Eppo => "eppo",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Semantic(format!("unknown property `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Graph,
    Group,
    Both,
}

impl Route {
    fn graph(self) -> bool {
        self != Route::Group
    }

    fn group(self) -> bool {
        self != Route::Graph
    }
}

/// Size classes; a group is only built when its order fits the tier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    Fast,
    Standard,
    Extended,
}

impl Tier {
    /// Largest group order built in this tier.
    pub fn limit(self) -> usize {
        match self {
            Tier::Fast => 10_000,
            // PSL(3,5) has order 372000
            Tier::Standard => 400_000,
            Tier::Extended => crate::group::DEFAULT_CAP,
        }
    }
}

impl FromStr for Tier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "fast" => Ok(Tier::Fast),
            "standard" => Ok(Tier::Standard),
            "extended" => Ok(Tier::Extended),
            _ => Err(Error::Semantic(format!("unknown tier `{s}`"))),
        }
    }
}
