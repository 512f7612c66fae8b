//! Deterministic text renderings: CSV cells, JSON documents and the SVG plot.

use serde::Serialize;

/// Decimal rendering with 12 significant digits and no exponent.
///
/// Uses Rust's formatter, which never consults the locale.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // round in scientific form first so that 9.9999999999996 -> 10.0000000000
    let sci = format!("{:.11e}", x);
    let exp: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    let decimals = (11 - exp).max(0) as usize;
    format!("{:.*}", decimals, x)
}

/// CSV document with LF line endings. Cells are numeric or bare words, so no
/// quoting is needed.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types always serialise");
    s.push('\n');
    s
}

/// One curve `(n, k_n)` with the asymptote drawn at `asymptote`.
pub struct Plot<'a> {
    pub points: &'a [(f64, f64)],
    pub asymptote: f64,
    pub x_max: f64,
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 20.0;
const BOTTOM: f64 = 50.0;
const Y_MAX: f64 = 1.5;

impl Plot<'_> {
    fn sx(&self, x: f64) -> f64 {
        LEFT + (WIDTH - LEFT - RIGHT) * x / self.x_max
    }

    fn sy(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - (HEIGHT - TOP - BOTTOM) * y / Y_MAX
    }

    pub fn to_svg(&self) -> String {
        let mut s = String::new();
        s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        s.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
        ));
        s.push_str("<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

        // axes
        let (x0, y0) = (self.sx(0.0), self.sy(0.0));
        let (x1, y1) = (self.sx(self.x_max), self.sy(Y_MAX));
        s.push_str(&format!(
            "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x1:.2}\" y2=\"{y0:.2}\"/>\n<line x1=\"{x0:.2}\" y1=\"{y0:.2}\" x2=\"{x0:.2}\" y2=\"{y1:.2}\"/>\n</g>\n"
        ));
        s.push_str("<g id=\"ticks\" font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n");
        for i in 0..=5 {
            let v = self.x_max * i as f64 / 5.0;
            let x = self.sx(v);
            s.push_str(&format!(
                "<line x1=\"{x:.2}\" y1=\"{y0:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n<text x=\"{x:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>\n",
                y0 + 5.0,
                y0 + 18.0,
                trim(v)
            ));
        }
        for i in 0..=6 {
            let v = Y_MAX * i as f64 / 6.0;
            let y = self.sy(v);
            s.push_str(&format!(
                "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{x0:.2}\" y2=\"{y:.2}\" stroke=\"black\"/>\n<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{}</text>\n",
                x0 - 5.0,
                x0 - 8.0,
                y + 4.0,
                trim(v)
            ));
        }
        s.push_str("</g>\n");

        let ya = self.sy(self.asymptote);
        s.push_str(&format!(
            "<line id=\"asymptote\" x1=\"{x0:.2}\" y1=\"{ya:.4}\" x2=\"{x1:.2}\" y2=\"{ya:.4}\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6 4\" data-value=\"{:.5}\"/>\n",
            self.asymptote
        ));
        s.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\" fill=\"gray\" text-anchor=\"end\">√2 ≈ {:.5}</text>\n",
            x1 - 4.0,
            ya - 5.0,
            self.asymptote
        ));

        let pts: Vec<String> = self
            .points
            .iter()
            .map(|&(x, y)| format!("{:.3},{:.3}", self.sx(x), self.sy(y)))
            .collect();
        s.push_str(&format!(
            "<polyline id=\"curve\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"{}\"/>\n",
            pts.join(" ")
        ));

        s.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">dimension n</text>\n",
            0.5 * (x0 + x1),
            HEIGHT - 12.0
        ));
        s.push_str(&format!(
            "<text x=\"18\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.2})\">tether ratio k</text>\n",
            0.5 * (y0 + y1),
            0.5 * (y0 + y1)
        ));
        s.push_str("</svg>\n");
        s
    }
}

fn trim(v: f64) -> String {
    let s = format!("{:.2}", v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() || s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}
