//! Fixtures shipped in the repository's `fixtures/` directory, embedded so the
//! binary can resolve them from any working directory.

use std::fs;
use std::path::Path;

use crate::error::CliError;

pub const FIXTURES: &[(&str, &str)] = &[
    ("rp5-counterexample", include_str!("../../../fixtures/rp5-counterexample.json")),
    ("rp5-standard-morse", include_str!("../../../fixtures/rp5-standard-morse.json")),
    ("s1-moebius", include_str!("../../../fixtures/s1-moebius.json")),
    ("s2-height", include_str!("../../../fixtures/s2-height.json")),
    ("torus-perfect", include_str!("../../../fixtures/torus-perfect.json")),
];

pub fn embedded(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// Reads `arg` as a path, then as a path with `.json` appended, then as the
/// name of an embedded fixture (a leading `fixtures/` and trailing `.json`
/// are ignored for that lookup).
pub fn load(arg: &str) -> Result<String, CliError> {
    let read = |p: &Path| fs::read_to_string(p).map_err(|e| CliError::parse(format!("{}: {e}", p.display())));
    let path = Path::new(arg);
    if path.is_file() {
        return read(path);
    }
    let with_ext = format!("{arg}.json");
    if Path::new(&with_ext).is_file() {
        return read(Path::new(&with_ext));
    }
    let name = arg.strip_prefix("fixtures/").unwrap_or(arg);
    let name = name.strip_suffix(".json").unwrap_or(name);
    embedded(name)
        .map(str::to_owned)
        .ok_or_else(|| CliError::parse(format!("no such file or fixture: {arg}")))
}
