//! Shared CSV formatting.

/// Columns appended to a CSV row when a shot estimate is present.
pub const MEASUREMENT_COLUMNS: &str = "e_shots,stderr,shots,seed,flip";

/// 17 significant digits, enough to round-trip any `f64`.
pub fn csv_float(x: f64) -> String {
    format!("{x:.16e}")
}
