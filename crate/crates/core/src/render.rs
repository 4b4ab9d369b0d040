//! Fixed-grid SVG drawing of a braid word, one row per letter, read bottom to
//! top.

use std::fmt::Write;

use crate::numbering::{integer_numbering, CrossingKind, Parity};
use crate::word::{BraidWord, Sign};

pub const COLUMN_WIDTH: usize = 80;
pub const ROW_HEIGHT: usize = 60;
const MARGIN: usize = 20;
const GAP: f64 = 0.18;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Print the integer number of every arc at the bottom of each row and at the top.
    pub numbers: bool,
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#7f7f7f",
];

fn colour(strand: usize) -> &'static str {
    PALETTE[(strand - 1) % PALETTE.len()]
}

fn x_of(position: usize) -> f64 {
    (COLUMN_WIDTH * (position - 1) + COLUMN_WIDTH / 2) as f64
}

fn line(out: &mut String, (x1, y1): (f64, f64), (x2, y2): (f64, f64), stroke: &str) {
    let _ = writeln!(
        out,
        r#"  <line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="{stroke}" stroke-width="3" stroke-linecap="round"/>"#
    );
}

/// Draws the segment with a gap around its midpoint, for the under strand.
fn broken_line(out: &mut String, from: (f64, f64), to: (f64, f64), stroke: &str) {
    let lerp = |t: f64| (from.0 + (to.0 - from.0) * t, from.1 + (to.1 - from.1) * t);
    line(out, from, lerp(0.5 - GAP), stroke);
    line(out, lerp(0.5 + GAP), to, stroke);
}

fn label(out: &mut String, x: f64, y: f64, text: impl std::fmt::Display) {
    let _ = writeln!(
        out,
        r#"  <text x="{:.1}" y="{:.1}" font-family="monospace" font-size="12" fill="black">{text}</text>"#,
        x + 6.0,
        y - 4.0
    );
}

pub fn render_svg(w: &BraidWord, options: RenderOptions) -> String {
    let n = w.strands();
    let numbering = integer_numbering(w);
    let rows = w.len().max(1);
    let width = COLUMN_WIDTH * n;
    let height = ROW_HEIGHT * rows + 2 * MARGIN;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        "  <title>{}</title>",
        if w.is_empty() {
            "identity".to_string()
        } else {
            w.to_string()
        }
    );

    // (strand, number) per position as the sweep climbs
    let mut state: Vec<(usize, i64)> = (1..=n).map(|i| (i, i as i64)).collect();
    let bottom = |row: usize| (height - MARGIN - ROW_HEIGHT * row) as f64;

    if w.is_empty() {
        for (p, &(strand, _)) in state.iter().enumerate() {
            let x = x_of(p + 1);
            line(&mut out, (x, bottom(0)), (x, bottom(1)), colour(strand));
        }
    }

    for (row, crossing) in numbering.crossings.iter().enumerate() {
        let (y0, y1) = (bottom(row), bottom(row + 1));
        if options.numbers {
            for (p, &(_, number)) in state.iter().enumerate() {
                label(&mut out, x_of(p + 1), y0, number);
            }
        }
        let i = crossing.position;
        for (p, &(strand, _)) in state.iter().enumerate() {
            if p + 1 != i && p + 1 != i + 1 {
                let x = x_of(p + 1);
                line(&mut out, (x, y0), (x, y1), colour(strand));
            }
        }
        let rising = ((x_of(i), y0), (x_of(i + 1), y1));
        let falling = ((x_of(i + 1), y0), (x_of(i), y1));
        let (left, right) = (
            colour(crossing.left_in_strand),
            colour(crossing.right_in_strand),
        );
        let centre = ((x_of(i) + x_of(i + 1)) / 2.0, (y0 + y1) / 2.0);
        match crossing.kind {
            CrossingKind::Virtual => {
                line(&mut out, rising.0, rising.1, left);
                line(&mut out, falling.0, falling.1, right);
                let _ = writeln!(
                    out,
                    r#"  <circle cx="{:.1}" cy="{:.1}" r="7" fill="none" stroke="black" stroke-width="1.5"/>"#,
                    centre.0, centre.1
                );
                state.swap(i - 1, i);
            }
            CrossingKind::Classical { sign, lambda, mu } => {
                match sign {
                    Sign::Pos => {
                        broken_line(&mut out, falling.0, falling.1, right);
                        line(&mut out, rising.0, rising.1, left);
                    }
                    Sign::Neg => {
                        broken_line(&mut out, rising.0, rising.1, left);
                        line(&mut out, falling.0, falling.1, right);
                    }
                }
                if crossing.parity() == Some(Parity::Odd) {
                    let _ = writeln!(
                        out,
                        r#"  <circle cx="{:.1}" cy="{:.1}" r="12" fill="none" stroke="red" stroke-width="1" stroke-dasharray="3 2"/>"#,
                        centre.0, centre.1
                    );
                }
                let (ls, rs) = (state[i - 1].0, state[i].0);
                state[i - 1] = (rs, mu - 1);
                state[i] = (ls, lambda + 1);
            }
        }
    }
    if options.numbers {
        let y = bottom(rows);
        for (p, &(_, number)) in state.iter().enumerate() {
            label(&mut out, x_of(p + 1), y + 14.0, number);
        }
    }
    out.push_str("</svg>\n");
    out
}
