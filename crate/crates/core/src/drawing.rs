//! Grid drawings: integer points per node plus optional apex points.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Point {
        Point { x, y }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DrawingKind {
    #[serde(rename = "LR")]
    Lr,
    #[serde(rename = "BELL_LIKE")]
    BellLike,
    #[serde(rename = "FLAT")]
    Flat,
    #[serde(rename = "OUTERPLANAR")]
    Outerplanar,
}

/// Axis-parallel box in grid units, inclusive on both ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BBox {
    pub min_x: i64,
    pub max_x: i64,
    pub min_y: i64,
    pub max_y: i64,
}

impl BBox {
    pub fn of(points: impl IntoIterator<Item = Point>) -> Option<BBox> {
        let mut it = points.into_iter();
        let p = it.next()?;
        let mut b = BBox { min_x: p.x, max_x: p.x, min_y: p.y, max_y: p.y };
        for p in it {
            b.include(p);
        }
        Some(b)
    }

    pub fn include(&mut self, p: Point) {
        self.min_x = self.min_x.min(p.x);
        self.max_x = self.max_x.max(p.x);
        self.min_y = self.min_y.min(p.y);
        self.max_y = self.max_y.max(p.y);
    }

    pub fn width(&self) -> i64 {
        self.max_x - self.min_x + 1
    }

    pub fn height(&self) -> i64 {
        self.max_y - self.min_y + 1
    }

    pub fn area(&self) -> i64 {
        self.width() * self.height()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridDrawing {
    pub kind: DrawingKind,
    /// Indexed by node id.
    pub points: Vec<Point>,
    pub apexes: Option<[Point; 2]>,
}

impl GridDrawing {
    pub fn new(kind: DrawingKind, points: Vec<Point>) -> GridDrawing {
        GridDrawing { kind, points, apexes: None }
    }

    pub fn bbox(&self) -> BBox {
        BBox::of(self.points.iter().copied()).expect("drawings are non-empty")
    }

    /// Box of the points together with the apexes.
    pub fn full_bbox(&self) -> BBox {
        let mut b = self.bbox();
        for p in self.apexes.iter().flatten() {
            b.include(*p);
        }
        b
    }

    pub fn width(&self) -> i64 {
        self.bbox().width()
    }

    pub fn height(&self) -> i64 {
        self.bbox().height()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DrawingJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<GridDrawing, DrawingParseError> {
        let raw: DrawingJson = serde_json::from_str(text)?;
        raw.try_into()
    }

    /// SVG with the y axis flipped, 24 px per grid unit.
    pub fn to_svg(&self, edges: &[(usize, usize)], dashed: &[(usize, usize)]) -> String {
        const S: i64 = 24;
        const PAD: i64 = 24;
        let b = self.full_bbox();
        let w = (b.max_x - b.min_x) * S + 2 * PAD;
        let h = (b.max_y - b.min_y) * S + 2 * PAD;
        let sx = |x: i64| (x - b.min_x) * S + PAD;
        let sy = |y: i64| (b.max_y - y) * S + PAD;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        );
        let _ = writeln!(out, r#"<g stroke="black" stroke-width="1.5">"#);
        for &(a, c) in edges {
            let (p, q) = (self.points[a], self.points[c]);
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                sx(p.x),
                sy(p.y),
                sx(q.x),
                sy(q.y)
            );
        }
        for &(a, c) in dashed {
            let (p, q) = (self.points[a], self.points[c]);
            let _ = writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="gray" stroke-dasharray="4 3"/>"#,
                sx(p.x),
                sy(p.y),
                sx(q.x),
                sy(q.y)
            );
        }
        let _ = writeln!(out, "</g>");
        for (id, p) in self.points.iter().enumerate() {
            let _ = writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="5" fill="white" stroke="black"><title>{id}</title></circle>"#,
                sx(p.x),
                sy(p.y)
            );
        }
        for p in self.apexes.iter().flatten() {
            let _ = writeln!(
                out,
                r#"<rect x="{}" y="{}" width="10" height="10" fill="white" stroke="black"/>"#,
                sx(p.x) - 5,
                sy(p.y) - 5
            );
        }
        out.push_str("</svg>\n");
        out
    }
}

#[derive(Debug, thiserror::Error)]
pub enum DrawingParseError {
    #[error("invalid drawing JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid drawing: {0}")]
    Shape(String),
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    id: usize,
    x: i64,
    y: i64,
}

#[derive(Serialize, Deserialize)]
struct DrawingJson {
    kind: DrawingKind,
    points: Vec<PointJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    apexes: Option<[[i64; 2]; 2]>,
}

impl From<&GridDrawing> for DrawingJson {
    fn from(d: &GridDrawing) -> Self {
        DrawingJson {
            kind: d.kind,
            points: d.points.iter().enumerate().map(|(id, p)| PointJson { id, x: p.x, y: p.y }).collect(),
            apexes: d.apexes.map(|[a, b]| [[a.x, a.y], [b.x, b.y]]),
        }
    }
}

impl TryFrom<DrawingJson> for GridDrawing {
    type Error = DrawingParseError;
    fn try_from(raw: DrawingJson) -> Result<Self, Self::Error> {
        let n = raw.points.len();
        let mut pts: Vec<Option<Point>> = vec![None; n];
        for p in raw.points {
            if p.id >= n {
                return Err(DrawingParseError::Shape(format!("id {} out of range", p.id)));
            }
            if pts[p.id].replace(Point::new(p.x, p.y)).is_some() {
                return Err(DrawingParseError::Shape(format!("duplicate id {}", p.id)));
            }
        }
        let points = pts.into_iter().map(|p| p.expect("ids are a permutation")).collect();
        Ok(GridDrawing {
            kind: raw.kind,
            points,
            apexes: raw.apexes.map(|[a, b]| [Point::new(a[0], a[1]), Point::new(b[0], b[1])]),
        })
    }
}
