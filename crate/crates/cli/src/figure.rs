//! SVG drawing of a job: the polygon, its lattice points, the divisor
//! support with its shaded hull, the barycenter and the point Q.

use std::fmt::Write as _;
use std::path::Path;

use logfutaki::{convex_hull, int, RatPoint, Rational};
use num_traits::ToPrimitive;

use crate::error::CliError;
use crate::job::JobSpec;
use crate::report::{run_job, Report};

/// Every styling constant used by the renderer.
#[derive(Clone, Debug, PartialEq)]
pub struct SvgStyle {
    /// Pixels per lattice unit.
    pub scale: i64,
    /// Blank lattice units around the polygon's bounding box.
    pub margin: i64,
    pub grid_stroke: &'static str,
    pub axis_stroke: &'static str,
    pub polytope_stroke: &'static str,
    pub hull_fill: &'static str,
    pub hull_opacity: &'static str,
    pub support_fill: &'static str,
    pub excluded_fill: &'static str,
    pub marker_fill: &'static str,
    pub support_radius: i64,
    pub excluded_radius: i64,
    pub marker_radius: i64,
    pub font_size: i64,
}

pub const STYLE: SvgStyle = SvgStyle {
    scale: 40,
    margin: 1,
    grid_stroke: "#dddddd",
    axis_stroke: "#999999",
    polytope_stroke: "#000000",
    hull_fill: "#4a7fb5",
    hull_opacity: "0.3",
    support_fill: "#1f3b5a",
    excluded_fill: "#c0392b",
    marker_fill: "#000000",
    support_radius: 6,
    excluded_radius: 2,
    marker_radius: 3,
    font_size: 14,
};

/// Maps lattice coordinates to pixels, y pointing down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureLayout {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
    pub scale: i64,
}

impl FigureLayout {
    /// Integer box around `points` widened by the style margin.
    pub fn around(points: &[RatPoint], style: &SvgStyle) -> Self {
        let floor = |r: &Rational| {
            r.floor()
                .to_integer()
                .to_i64()
                .expect("coordinate fits in i64")
        };
        let ceil = |r: &Rational| {
            r.ceil()
                .to_integer()
                .to_i64()
                .expect("coordinate fits in i64")
        };
        let x_min = points.iter().map(|p| floor(&p.x)).min().unwrap_or(0) - style.margin;
        let x_max = points.iter().map(|p| ceil(&p.x)).max().unwrap_or(0) + style.margin;
        let y_min = points.iter().map(|p| floor(&p.y)).min().unwrap_or(0) - style.margin;
        let y_max = points.iter().map(|p| ceil(&p.y)).max().unwrap_or(0) + style.margin;
        Self {
            x_min,
            x_max,
            y_min,
            y_max,
            scale: style.scale,
        }
    }

    pub fn width(&self) -> i64 {
        (self.x_max - self.x_min) * self.scale
    }

    pub fn height(&self) -> i64 {
        (self.y_max - self.y_min) * self.scale
    }

    pub fn to_screen(&self, p: &RatPoint) -> (Rational, Rational) {
        let s = int(self.scale);
        ((&p.x - int(self.x_min)) * &s, (int(self.y_max) - &p.y) * &s)
    }
}

/// Pixel coordinate text: integers verbatim, otherwise three decimals.
pub fn coord(r: &Rational) -> String {
    if r.is_integer() {
        return r.to_integer().to_string();
    }
    let thousandths = (r * int(1000)).round().to_integer();
    let text = format!("{:.3}", thousandths.to_f64().unwrap() / 1000.0);
    text.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn points_attr(layout: &FigureLayout, pts: &[RatPoint]) -> String {
    pts.iter()
        .map(|p| {
            let (x, y) = layout.to_screen(p);
            format!("{},{}", coord(&x), coord(&y))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn circle(out: &mut String, layout: &FigureLayout, p: &RatPoint, class: &str, r: i64, fill: &str) {
    let (x, y) = layout.to_screen(p);
    writeln!(
        out,
        r#"  <circle class="{class}" cx="{}" cy="{}" r="{r}" fill="{fill}"/>"#,
        coord(&x),
        coord(&y)
    )
    .unwrap();
}

fn label(
    out: &mut String,
    layout: &FigureLayout,
    p: &RatPoint,
    class: &str,
    text: &str,
    style: &SvgStyle,
) {
    let (x, y) = layout.to_screen(p);
    let dx = int(style.marker_radius + 4);
    writeln!(
        out,
        r#"  <text class="{class}" x="{}" y="{}" font-size="{}" font-family="serif">{text}</text>"#,
        coord(&(x + &dx)),
        coord(&(y - dx)),
        style.font_size
    )
    .unwrap();
}

pub fn render_figure(report: &Report, style: &SvgStyle) -> Result<String, CliError> {
    let layout = FigureLayout::around(&report.vertices, style);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = layout.width(),
        h = layout.height()
    )
    .unwrap();
    writeln!(out, "  <title>{} m={}</title>", report.polytope, report.m).unwrap();
    out.push_str(
        r##"  <rect class="background" x="0" y="0" width="100%" height="100%" fill="#ffffff"/>"##,
    );
    out.push('\n');

    for x in layout.x_min..=layout.x_max {
        let sx = (x - layout.x_min) * layout.scale;
        let stroke = if x == 0 {
            style.axis_stroke
        } else {
            style.grid_stroke
        };
        let class = if x == 0 { "axis" } else { "grid" };
        writeln!(
            out,
            r#"  <line class="{class}" x1="{sx}" y1="0" x2="{sx}" y2="{}" stroke="{stroke}" stroke-width="1"/>"#,
            layout.height()
        )
        .unwrap();
    }
    for y in layout.y_min..=layout.y_max {
        let sy = (layout.y_max - y) * layout.scale;
        let stroke = if y == 0 {
            style.axis_stroke
        } else {
            style.grid_stroke
        };
        let class = if y == 0 { "axis" } else { "grid" };
        writeln!(
            out,
            r#"  <line class="{class}" x1="0" y1="{sy}" x2="{}" y2="{sy}" stroke="{stroke}" stroke-width="1"/>"#,
            layout.width()
        )
        .unwrap();
    }

    let hull = convex_hull(&report.support).map_err(CliError::engine("support hull"))?;
    writeln!(
        out,
        r#"  <polygon class="support-hull" points="{}" fill="{}" fill-opacity="{}" stroke="{}" stroke-width="1"/>"#,
        points_attr(&layout, &hull.vertices()),
        style.hull_fill,
        style.hull_opacity,
        style.hull_fill
    )
    .unwrap();
    writeln!(
        out,
        r#"  <polygon class="polytope" points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
        points_attr(&layout, &report.vertices),
        style.polytope_stroke
    )
    .unwrap();

    for p in &report.support {
        circle(
            &mut out,
            &layout,
            p,
            "support",
            style.support_radius,
            style.support_fill,
        );
    }
    for p in &report.excluded {
        circle(
            &mut out,
            &layout,
            p,
            "excluded",
            style.excluded_radius,
            style.excluded_fill,
        );
    }
    if let [p] = report.excluded.as_slice() {
        if report.vertices.contains(p) {
            label(&mut out, &layout, p, "excluded-label", "p", style);
        }
    }

    circle(
        &mut out,
        &layout,
        &report.barycenter,
        "barycenter",
        style.marker_radius,
        style.marker_fill,
    );
    label(
        &mut out,
        &layout,
        &report.barycenter,
        "barycenter-label",
        "P<tspan baseline-shift=\"sub\">c</tspan>",
        style,
    );
    if let Some(q) = &report.q_point {
        circle(
            &mut out,
            &layout,
            q,
            "q-point",
            style.marker_radius,
            style.marker_fill,
        );
        label(&mut out, &layout, q, "q-label", "Q", style);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Runs the job, writes its figure to `out`, and returns the SVG text.
pub fn emit_figure(job: &JobSpec, out: &Path) -> Result<String, CliError> {
    let report = run_job(job)?;
    let svg = render_figure(&report, &STYLE)?;
    std::fs::write(out, &svg).map_err(|source| CliError::Io {
        path: out.to_path_buf(),
        source,
    })?;
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::job::parse_job;
    use logfutaki::rat;

    fn svg(text: &str) -> String {
        render_figure(&run_job(&parse_job(text).unwrap()).unwrap(), &STYLE).unwrap()
    }

    #[test]
    fn layout_flips_y() {
        let layout = FigureLayout::around(
            &[RatPoint::from_ints(-1, -1), RatPoint::from_ints(2, 2)],
            &STYLE,
        );
        assert_eq!((layout.width(), layout.height()), (200, 200));
        assert_eq!(
            layout.to_screen(&RatPoint::from_ints(0, 0)),
            (int(80), int(120))
        );
        assert_eq!(
            layout.to_screen(&RatPoint::new(rat(-1, 2), rat(-1, 2))),
            (int(60), int(140))
        );
    }

    #[test]
    fn coordinates() {
        assert_eq!(coord(&int(-40)), "-40");
        assert_eq!(coord(&rat(10, 3)), "3.333");
        assert_eq!(coord(&rat(1, 2)), "0.5");
    }

    #[test]
    fn marker_counts() {
        let doc = svg(r#"{"polytope":"BL1","support":{"exclude":[[-1,0]]}}"#);
        assert_eq!(doc.matches(r#"class="support""#).count(), 8);
        assert_eq!(doc.matches(r#"class="excluded""#).count(), 1);
        assert!(doc.contains(">p</text>"));
        assert!(doc.contains(">Q</text>"));
    }

    #[test]
    fn generic_square_hull_is_the_polygon() {
        let doc = svg(r#"{"polytope":"P1xP1"}"#);
        let attr = |class: &str| {
            let start =
                doc.find(&format!(r#"class="{class}" points=""#)).unwrap() + class.len() + 17;
            doc[start..].split('"').next().unwrap().to_string()
        };
        assert_eq!(attr("support-hull"), attr("polytope"));
        assert!(!doc.contains("q-point"));
    }
}
