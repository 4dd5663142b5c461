//! ASCII and SVG drawings of a path on its `n x n` grid, with the diagonal
//! and the peaks marked.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::path::{peak_coordinates, Step, StepWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl fmt::Display for RenderFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RenderFormat::Ascii => "ascii",
            RenderFormat::Svg => "svg",
        })
    }
}

impl FromStr for RenderFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ascii" => Ok(RenderFormat::Ascii),
            "svg" => Ok(RenderFormat::Svg),
            _ => Err(format!("unknown render format {s:?}")),
        }
    }
}

pub fn render(path: &StepWord, format: RenderFormat) -> String {
    match format {
        RenderFormat::Ascii => render_ascii(path),
        RenderFormat::Svg => render_svg(path),
    }
}

/// One text row per unit band `y..y+1`, top band first. Column `2x` holds
/// the up step leaving `(x, y)` as `|`, column `2x+1` the right step as `_`.
/// Empty cells on the diagonal show `/`, other empty cells `.`, and peaks
/// are `*` at the peak vertex.
pub fn render_ascii(path: &StepWord) -> String {
    let n = path.semilength();
    let width = 2 * n + 1;
    let mut rows = vec![vec![' '; width]; n + 1];
    for (y, row) in rows.iter_mut().enumerate().take(n) {
        for x in 0..n {
            row[2 * x + 1] = if x == y { '/' } else { '.' };
        }
    }
    let (mut x, mut y) = (0usize, 0usize);
    for step in path.steps() {
        match step {
            Step::Up => {
                rows[y][2 * x] = '|';
                y += 1;
            }
            Step::Down => {
                rows[y][2 * x + 1] = '_';
                x += 1;
            }
        }
    }
    for p in peak_coordinates(path).points() {
        rows[p.y][2 * p.x] = '*';
    }
    let mut out = String::new();
    for row in rows.iter().rev() {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

const CELL: usize = 20;
const MARGIN: usize = 10;

pub fn render_svg(path: &StepWord) -> String {
    let n = path.semilength();
    let size = n * CELL + 2 * MARGIN;
    let px = |x: usize| MARGIN + x * CELL;
    let py = |y: usize| MARGIN + (n - y) * CELL;
    let mut out = String::new();
    // writing to a String cannot fail
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(out, r##"<g stroke="#bbbbbb" stroke-width="1">"##);
    for i in 0..=n {
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(i),
            py(0),
            px(i),
            py(n)
        );
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(0),
            py(i),
            px(n),
            py(i)
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#777777" stroke-width="1" stroke-dasharray="4 3"/>"##,
        px(0),
        py(0),
        px(n),
        py(n)
    );
    let points: Vec<String> = path
        .vertices()
        .iter()
        .map(|v| format!("{},{}", px(v.x), py(v.y)))
        .collect();
    let _ = writeln!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#000000" stroke-width="3" stroke-linejoin="round"/>"##,
        points.join(" ")
    );
    for p in peak_coordinates(path).points() {
        let _ = writeln!(
            out,
            r##"<circle cx="{}" cy="{}" r="4" fill="#000000"/>"##,
            px(p.x),
            py(p.y)
        );
    }
    out.push_str("</svg>\n");
    out
}
