//! Plain-text number formatting shared by spectra, certificates and reports.

/// Values smaller than this in magnitude print as `0`.
const PRINT_ZERO: f64 = 1e-10;

/// Formats with 12 significant digits, dropping trailing zeros; `-0` prints as `0`.
pub fn fmt_num(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x.abs() < PRINT_ZERO {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&exp) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}
