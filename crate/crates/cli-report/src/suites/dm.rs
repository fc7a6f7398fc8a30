use dm_weights::{builtin_tables, classify, parse_weights};

use crate::runner::{spec, CheckSpec, Outcome};
use crate::Options;

/// One check per built-in weight system: reclassify and compare against
/// the transcribed verdict. 42 checks, 36 Eisenstein and 6 Gaussian.
pub fn specs(_options: &Options) -> Vec<CheckSpec> {
    builtin_tables()
        .into_iter()
        .enumerate()
        .map(|(index, row)| {
            let id = format!("dm/{:02}", index + 1);
            let description = format!("{} over {}", row.input, row.ring);
            spec(id, description, move || {
                let weights = match parse_weights(row.input) {
                    Ok(w) => w,
                    Err(e) => return Outcome::fail(format!("parse error: {e}")),
                };
                let got = match classify(&weights) {
                    Ok(c) => c,
                    Err(e) => return Outcome::fail(format!("classification error: {e}")),
                };
                let detail = format!("expected {}, got {}", row.expected, got);
                if got == row.expected {
                    Outcome::pass(detail)
                } else {
                    Outcome::fail(detail)
                }
            })
        })
        .collect()
}
