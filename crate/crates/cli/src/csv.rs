//! Correlation profiles as `tau,real,imag,magnitude` CSV.

use gzcz::correlation::CorrelationProfile;
use gzcz::seqcore::ComplexValue;

pub const HEADER: &str = "tau,real,imag,magnitude";

fn fixed(x: f64) -> String {
    // Avoid "-0.000000000000".
    let s = format!("{x:.12}");
    if s.trim_start_matches('-')
        .bytes()
        .all(|b| b == b'0' || b == b'.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

fn exact_magnitude(re: i64, im: i64) -> String {
    let norm = (re * re + im * im) as u64;
    let root = (norm as f64).sqrt().round() as u64;
    if root * root == norm {
        root.to_string()
    } else {
        fixed((norm as f64).sqrt())
    }
}

fn row(tau: isize, v: ComplexValue) -> String {
    match v {
        ComplexValue::Exact(z) => {
            format!("{tau},{},{},{}", z.re, z.im, exact_magnitude(z.re, z.im))
        }
        ComplexValue::Float(z) => {
            format!("{tau},{},{},{}", fixed(z.re), fixed(z.im), fixed(z.norm()))
        }
    }
}

/// One line per stored shift, in increasing `τ`.
pub fn render(profile: &CorrelationProfile) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for (tau, v) in profile.iter() {
        out.push_str(&row(tau, v));
        out.push('\n');
    }
    out
}
