//! The published JSON schemas, embedded and compiled on first use.

use std::sync::OnceLock;

use jsonschema::{Resource, Validator};
use serde_json::Value;

const FAMILY_SCHEMA: &str = include_str!("../../../docs/schemas/family.v1.schema.json");
const REPORT_SCHEMA: &str = include_str!("../../../docs/schemas/report.v1.schema.json");
const FAMILY_ID: &str = "https://blueprint-forge.invalid/schemas/family.v1.schema.json";

fn parsed(text: &str) -> Value {
    serde_json::from_str(text).expect("embedded schema is JSON")
}

fn family() -> &'static Validator {
    static V: OnceLock<Validator> = OnceLock::new();
    V.get_or_init(|| jsonschema::validator_for(&parsed(FAMILY_SCHEMA)).expect("family schema compiles"))
}

pub fn report() -> &'static Validator {
    static V: OnceLock<Validator> = OnceLock::new();
    V.get_or_init(|| {
        let resource = Resource::from_contents(parsed(FAMILY_SCHEMA)).expect("family schema is a resource");
        jsonschema::options().with_resource(FAMILY_ID, resource).build(&parsed(REPORT_SCHEMA)).expect("report schema compiles")
    })
}

/// All violations of `validator` by `instance`, one line each.
pub fn violations(validator: &Validator, instance: &Value) -> Vec<String> {
    validator
        .iter_errors(instance)
        .map(|e| {
            let at = e.instance_path.to_string();
            format!("{}: {e}", if at.is_empty() { "document" } else { &at })
        })
        .collect()
}

pub fn check_family(instance: &Value) -> Result<(), String> {
    let errors = violations(family(), instance);
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors.join("; "))
    }
}
