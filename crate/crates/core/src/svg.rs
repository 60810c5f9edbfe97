//! SVG rendering of planar instances. Output depends only on the input.

use std::fmt::Write;

use crate::error::Result;
use crate::projection::PlanarInstance;
use crate::representation::Representation;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 20.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

pub fn class_color(class: usize) -> &'static str {
    PALETTE[class.saturating_sub(1) % PALETTE.len()]
}

struct Frame {
    min: [f64; 2],
    max: [f64; 2],
    scale: f64,
}

impl Frame {
    fn fit(points: &[[i128; 2]]) -> Frame {
        let mut min = [f64::INFINITY; 2];
        let mut max = [f64::NEG_INFINITY; 2];
        for p in points {
            for a in 0..2 {
                min[a] = min[a].min(p[a] as f64);
                max[a] = max[a].max(p[a] as f64);
            }
        }
        let span = (max[0] - min[0]).max(max[1] - min[1]);
        let pad = if span > 0.0 { span * 0.1 } else { 1.0 };
        for a in 0..2 {
            min[a] -= pad;
            max[a] += pad;
        }
        let extent = (max[0] - min[0]).max(max[1] - min[1]);
        Frame {
            min,
            max,
            scale: (SIZE - 2.0 * MARGIN) / extent,
        }
    }

    fn to_screen(&self, p: [f64; 2]) -> [f64; 2] {
        [
            MARGIN + (p[0] - self.min[0]) * self.scale,
            SIZE - MARGIN - (p[1] - self.min[1]) * self.scale,
        ]
    }

    /// Liang–Barsky clip of the infinite line `through + t * dir`.
    fn clip(&self, through: [f64; 2], dir: [f64; 2]) -> Option<([f64; 2], [f64; 2])> {
        let mut lo = f64::NEG_INFINITY;
        let mut hi = f64::INFINITY;
        for a in 0..2 {
            if dir[a] == 0.0 {
                if through[a] < self.min[a] || through[a] > self.max[a] {
                    return None;
                }
                continue;
            }
            let t0 = (self.min[a] - through[a]) / dir[a];
            let t1 = (self.max[a] - through[a]) / dir[a];
            lo = lo.max(t0.min(t1));
            hi = hi.min(t0.max(t1));
        }
        if lo > hi {
            return None;
        }
        let at = |t: f64| [through[0] + t * dir[0], through[1] + t * dir[1]];
        Some((at(lo), at(hi)))
    }
}

pub fn emit_svg(inst: &PlanarInstance) -> String {
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    if !inst.points.is_empty() {
        let frame = Frame::fit(&inst.points);
        for line in &inst.lines {
            let through = [line.through[0] as f64, line.through[1] as f64];
            let dir = [line.dir[0] as f64, line.dir[1] as f64];
            if let Some((a, b)) = frame.clip(through, dir) {
                let (a, b) = (frame.to_screen(a), frame.to_screen(b));
                writeln!(
                    out,
                    r#"  <line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{}" stroke-width="1.5" data-class="{}"/>"#,
                    a[0],
                    a[1],
                    b[0],
                    b[1],
                    class_color(line.class),
                    line.class
                )
                .unwrap();
            }
        }
        for p in &inst.points {
            let s = frame.to_screen([p[0] as f64, p[1] as f64]);
            writeln!(out, r#"  <circle cx="{:.3}" cy="{:.3}" r="4" fill="black"/>"#, s[0], s[1]).unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

pub fn emit_representation_svg(rep: &Representation) -> Result<String> {
    Ok(emit_svg(&PlanarInstance::from_representation(rep)?))
}
