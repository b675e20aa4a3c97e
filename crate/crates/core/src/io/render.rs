//! Figure-style drawings of a set of lattice points in a window: members are
//! filled markers, non-members open ones, the second coordinate grows upward.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::lattice::{Box, IdealRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RenderFormat {
    #[default]
    Text,
    Svg,
}

impl FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(RenderFormat::Text),
            "svg" => Ok(RenderFormat::Svg),
            other => Err(format!("unknown format `{other}` (expected text or svg)")),
        }
    }
}

const FILLED: char = '*';
const OPEN: char = 'o';
const CELL: i64 = 24;
const PAD: i64 = 32;

/// Draws `e` on `window`. More than two branches fall back to a listing of
/// the members in the window.
pub fn render_grid(e: &IdealRep, window: &Box, format: RenderFormat) -> String {
    if window.branches() > 2 {
        return listing(e, window);
    }
    let (xs, ys) = axis_ranges(window);
    let member = |x: i64, y: i64| {
        if window.branches() == 1 {
            e.contains_coords(&[x])
        } else {
            e.contains_coords(&[x, y])
        }
    };
    match format {
        RenderFormat::Text => text_grid(xs, ys, window.branches() == 2, member),
        RenderFormat::Svg => svg_grid(xs, ys, member),
    }
}

fn axis_ranges(window: &Box) -> ((i64, i64), (i64, i64)) {
    let lo = window.lo().coords();
    let hi = window.hi().coords();
    let xs = (lo[0], hi[0]);
    let ys = if lo.len() == 2 {
        (lo[1], hi[1])
    } else {
        (0, 0)
    };
    (xs, ys)
}

fn text_grid(
    xs: (i64, i64),
    ys: (i64, i64),
    labelled_rows: bool,
    member: impl Fn(i64, i64) -> bool,
) -> String {
    let width = [xs.0, xs.1]
        .iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap();
    let margin = if labelled_rows {
        [ys.0, ys.1]
            .iter()
            .map(|v| v.to_string().len())
            .max()
            .unwrap()
    } else {
        0
    };
    let mut out = String::new();
    for y in (ys.0..=ys.1).rev() {
        let mut line = if labelled_rows {
            format!("{y:>margin$} |")
        } else {
            "|".to_string()
        };
        for x in xs.0..=xs.1 {
            let mark = if member(x, y) { FILLED } else { OPEN };
            write!(line, " {mark:>width$}").unwrap();
        }
        writeln!(out, "{line}").unwrap();
    }
    let cols = (xs.1 - xs.0 + 1) as usize;
    let indent = if labelled_rows { margin + 1 } else { 0 };
    writeln!(out, "{:indent$}+{}", "", "-".repeat(cols * (width + 1))).unwrap();
    let mut labels = format!("{:indent$} ", "");
    for x in xs.0..=xs.1 {
        write!(labels, " {x:>width$}").unwrap();
    }
    writeln!(out, "{}", labels.trim_end()).unwrap();
    out
}

fn svg_grid(xs: (i64, i64), ys: (i64, i64), member: impl Fn(i64, i64) -> bool) -> String {
    let cols = xs.1 - xs.0 + 1;
    let rows = ys.1 - ys.0 + 1;
    let w = 2 * PAD + (cols - 1) * CELL;
    let h = 2 * PAD + (rows - 1) * CELL;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
    let base = h - PAD;
    writeln!(
        out,
        r#"<line x1="{}" y1="{base}" x2="{}" y2="{base}" stroke="gray"/>"#,
        PAD / 2,
        w - PAD / 2
    )
    .unwrap();
    for x in xs.0..=xs.1 {
        let cx = PAD + (x - xs.0) * CELL;
        writeln!(
            out,
            r#"<text x="{cx}" y="{}" font-size="10" text-anchor="middle">{x}</text>"#,
            h - PAD / 4
        )
        .unwrap();
    }
    if rows > 1 {
        for y in ys.0..=ys.1 {
            let cy = base - (y - ys.0) * CELL;
            writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="10" text-anchor="end">{y}</text>"#,
                PAD / 2,
                cy + 3
            )
            .unwrap();
        }
    }
    for y in ys.0..=ys.1 {
        for x in xs.0..=xs.1 {
            let cx = PAD + (x - xs.0) * CELL;
            let cy = base - (y - ys.0) * CELL;
            let fill = if member(x, y) { "black" } else { "white" };
            writeln!(
                out,
                r#"<circle cx="{cx}" cy="{cy}" r="5" fill="{fill}" stroke="black"/>"#
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

fn listing(e: &IdealRep, window: &Box) -> String {
    let mut out = format!("members in {window}:\n");
    for p in window.points().filter(|p| e.contains(p)) {
        writeln!(out, "{p}").unwrap();
    }
    out
}
