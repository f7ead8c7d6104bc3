//! Text and SVG pictures of the weight plane `b + qσ`, shaded by region.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use crate::degrees::{MotivicBidegree, Region};
use crate::motivic::motivic_group_r;

/// Window of weights to draw, and an optional `(a, p)` whose group dimensions label the cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionMap {
    pub b_range: RangeInclusive<i64>,
    pub q_range: RangeInclusive<i64>,
    pub annotate: Option<(i64, i64)>,
}

impl Default for RegionMap {
    fn default() -> Self {
        RegionMap { b_range: -6..=6, q_range: -6..=6, annotate: None }
    }
}

fn letter(region: Region) -> char {
    match region {
        Region::Point => 'P',
        Region::Borel => 'E',
        Region::Tilde => 'T',
        Region::Zero => '.',
    }
}

fn marker(b: i64, q: i64) -> Option<char> {
    match (b, q) {
        (0, 0) => Some('1'),
        (-1, 1) => Some('k'),
        _ => None,
    }
}

const LEGEND: [&str; 6] = [
    "P  point region: b >= 0, b+q >= 0",
    "E  Borel region: b < 0, b+q >= 0",
    "T  negative-cone region: b >= 1, b+q < 0",
    ".  zero region: b <= 0, b+q < 0",
    "1  unit, weight 0",
    "k  kappa2, weight -1+sigma",
];

impl RegionMap {
    fn cell(&self, b: i64, q: i64) -> String {
        let c = marker(b, q).unwrap_or_else(|| letter(Region::of_weight(b, q)));
        match self.annotate {
            None => c.to_string(),
            Some((a, p)) => {
                let dim = motivic_group_r(MotivicBidegree::new(a, p, b, q)).dimension;
                format!("{c}{dim}")
            }
        }
    }

    /// Rows run from the largest `q` down; columns from the smallest `b` right.
    pub fn to_ascii(&self) -> String {
        let width = if self.annotate.is_some() { 5 } else { 3 };
        let mut out = String::new();
        match self.annotate {
            Some((a, p)) => writeln!(out, "weights b+q*sigma, dimensions at a+p*sigma = {a}{p:+}*sigma").unwrap(),
            None => writeln!(out, "weights b+q*sigma").unwrap(),
        }
        write!(out, "q\\b ").unwrap();
        for b in self.b_range.clone() {
            write!(out, "{b:>width$}").unwrap();
        }
        out.push('\n');
        for q in self.q_range.clone().rev() {
            write!(out, "{q:>3} ").unwrap();
            for b in self.b_range.clone() {
                write!(out, "{:>width$}", self.cell(b, q)).unwrap();
            }
            out.push('\n');
        }
        out.push('\n');
        for line in LEGEND {
            writeln!(out, "{line}").unwrap();
        }
        out
    }

    pub fn to_svg(&self) -> String {
        const CELL: i64 = 28;
        const MARGIN: i64 = 40;
        let cols = self.b_range.clone().count() as i64;
        let rows = self.q_range.clone().count() as i64;
        let (w, h) = (2 * MARGIN + cols * CELL, 2 * MARGIN + rows * CELL);
        let mut out = String::new();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="monospace" font-size="12">"#
        )
        .unwrap();
        for (row, q) in self.q_range.clone().rev().enumerate() {
            let y = MARGIN + row as i64 * CELL;
            writeln!(out, r#"<text x="{}" y="{}" text-anchor="end">{q}</text>"#, MARGIN - 6, y + CELL / 2 + 4).unwrap();
            for (col, b) in self.b_range.clone().enumerate() {
                let x = MARGIN + col as i64 * CELL;
                let fill = match Region::of_weight(b, q) {
                    Region::Point => "#9ecae1",
                    Region::Borel => "#a1d99b",
                    Region::Tilde => "#fdae6b",
                    Region::Zero => "#f0f0f0",
                };
                writeln!(
                    out,
                    r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{fill}" stroke="#ffffff"/>"##
                )
                .unwrap();
                let label = self.cell(b, q);
                let label = label.trim_start_matches(['P', 'E', 'T', '.']);
                if !label.is_empty() {
                    writeln!(
                        out,
                        r#"<text x="{}" y="{}" text-anchor="middle">{label}</text>"#,
                        x + CELL / 2,
                        y + CELL / 2 + 4
                    )
                    .unwrap();
                }
            }
        }
        for (col, b) in self.b_range.clone().enumerate() {
            let x = MARGIN + col as i64 * CELL + CELL / 2;
            writeln!(out, r#"<text x="{x}" y="{}" text-anchor="middle">{b}</text>"#, MARGIN + rows * CELL + 16).unwrap();
        }
        writeln!(out, r#"<text x="{}" y="{}" text-anchor="middle">b</text>"#, w / 2, h - 6).unwrap();
        writeln!(out, r#"<text x="12" y="{}" text-anchor="middle">q</text>"#, h / 2).unwrap();
        out.push_str("</svg>\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells() {
        let map = RegionMap::default();
        assert_eq!(map.cell(-1, 0), ".");
        assert_eq!(map.cell(1, -3), "T");
        assert_eq!(map.cell(-1, 1), "k");
        let annotated = RegionMap { annotate: Some((0, 0)), ..RegionMap::default() };
        assert_eq!(annotated.cell(0, 0), "11");
    }

    #[test]
    fn svg_is_closed() {
        let svg = RegionMap { b_range: -1..=1, q_range: -1..=1, annotate: None }.to_svg();
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<rect").count(), 9);
    }
}
