/// Format `v` with `sig` significant digits, trimming trailing zeros, in the
/// style of printf `%g`. Infinities print as `inf`/`-inf` so they survive a
/// round trip through the CLI's own parsers.
pub fn fmt_sig(v: f64, sig: usize) -> String {
    debug_assert!(sig >= 1);
    if v == 0.0 {
        return "0".to_string();
    }
    if v.is_nan() {
        return "nan".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if exp >= -4 && exp < sig as i32 {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_fixed(format!("{:.*}", decimals, v))
    } else {
        let s = format!("{:.*e}", sig - 1, v);
        match s.split_once('e') {
            Some((mantissa, exponent)) => {
                format!("{}e{}", trim_fixed(mantissa.to_string()), exponent)
            }
            None => s,
        }
    }
}

fn trim_fixed(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
