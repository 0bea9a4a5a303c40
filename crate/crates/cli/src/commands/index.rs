use harmonica::catalog::{registry, IndexEntry};

use crate::args::IndexArgs;
use crate::exit::{json, CliResult, Output};

pub fn run(args: &IndexArgs) -> CliResult {
    let entries: Vec<IndexEntry> = registry()
        .list(args.family)
        .into_iter()
        .map(IndexEntry::from)
        .collect();
    Ok(Output::ok(json(&entries)?))
}
