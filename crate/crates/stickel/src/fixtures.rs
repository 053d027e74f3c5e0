use std::path::Path;

use stickel_core::curve::{fixtures, parse_fixtures, CurveData};

use crate::error::{CliError, Context};

/// Reads a fixture file of `label;a1,a2,a3,a4,a6;N;rank` lines.
pub fn parse_curve_file(path: &Path) -> Result<Vec<CurveData>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_fixtures(&text).context(|| path.display().to_string())
}

/// The built-in battery: 11a1, 37a1, 389a1.
pub fn builtin() -> Vec<CurveData> {
    fixtures::battery().into()
}

/// Picks the curves to run on: one label, or all of them.
pub fn select(curves: Vec<CurveData>, label: Option<&str>, all: bool) -> Result<Vec<CurveData>, CliError> {
    match label {
        Some(l) => {
            let found: Vec<_> = curves.into_iter().filter(|c| c.label() == l).collect();
            if found.is_empty() {
                return Err(CliError::Usage(format!("no curve labelled {l}")));
            }
            Ok(found)
        }
        None if all || curves.len() == 1 => Ok(curves),
        None => Err(CliError::Usage("choose a curve with --curve LABEL or pass --all".into())),
    }
}
