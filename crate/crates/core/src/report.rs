use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

/// Named verdicts plus descriptive facts about the instance they concern.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub instance: BTreeMap<String, Value>,
    pub verdicts: BTreeMap<String, Verdict>,
}

impl PropertyReport {
    pub fn describe(&mut self, key: &str, value: Value) {
        self.instance.insert(key.to_string(), value);
    }

    pub fn record(&mut self, name: &str, holds: bool, witness: Option<Value>) {
        self.verdicts.insert(name.to_string(), Verdict { holds, witness });
    }

    pub fn holds(&self, name: &str) -> Option<bool> {
        self.verdicts.get(name).map(|v| v.holds)
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.values().all(|v| v.holds)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.verdicts.iter().filter(|(_, v)| !v.holds).map(|(k, _)| k.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}
