//! Deterministic ASCII and SVG drawings of watermelons and plane partitions.

use std::fmt::Write;

use schurpaths::{PlanePartition, Watermelon};

pub enum Figure {
    Watermelon(Watermelon),
    PlanePartition(PlanePartition),
}

const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

impl Figure {
    /// Watermelons are recognised by their `lambda` field, plane partitions
    /// by `parts`.
    pub fn parse(text: &str) -> Result<Figure, String> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| format!("malformed JSON: {e}"))?;
        let obj = value.as_object().ok_or("expected a JSON object")?;
        if obj.contains_key("lambda") {
            serde_json::from_value(value).map(Figure::Watermelon).map_err(|e| format!("invalid watermelon: {e}"))
        } else if obj.contains_key("parts") {
            serde_json::from_value(value)
                .map(Figure::PlanePartition)
                .map_err(|e| format!("invalid plane partition: {e}"))
        } else {
            Err("expected a watermelon (with `lambda`) or a plane partition (with `parts`)".into())
        }
    }

    pub fn ascii(&self) -> String {
        match self {
            Figure::Watermelon(w) => watermelon_ascii(w),
            Figure::PlanePartition(pp) => plane_partition_ascii(pp),
        }
    }

    pub fn svg(&self) -> String {
        match self {
            Figure::Watermelon(w) => watermelon_svg(w),
            Figure::PlanePartition(pp) => plane_partition_svg(pp),
        }
    }
}

fn watermelon_header(w: &Watermelon) -> String {
    format!("watermelon N={} M={} k={} volume={} lambda={}", w.n(), w.m(), w.k(), w.volume(), w.lambda())
}

/// Lattice points are `.`, path vertices `o`; the C-nest occupies the left
/// half and the B-nest the right half, with line labels `x_j` underneath.
fn watermelon_ascii(w: &Watermelon) -> String {
    let n = w.n() as i64;
    let height = n + w.m() as i64;
    let width = 2 * n;
    let (rows, cols) = ((2 * height + 1) as usize, (4 * (width - 1) + 1).max(1) as usize);
    let mut grid = vec![vec![' '; cols]; rows];
    let at = |x: i64, y: i64| ((2 * (height - y)) as usize, (4 * (x - 1)) as usize);
    for x in 1..=width {
        for y in 0..=height {
            let (r, c) = at(x, y);
            grid[r][c] = '.';
        }
    }
    for path in w.lattice_paths() {
        for pair in path.windows(2) {
            let ((x0, y0), (x1, y1)) = (pair[0], pair[1]);
            let (r, c) = at(x0, y0);
            if x1 > x0 {
                grid[r][c + 1..c + 4].fill('-');
            } else if y1 > y0 {
                grid[r - 1][c] = '|';
            }
        }
        for &(x, y) in &path {
            let (r, c) = at(x, y);
            grid[r][c] = 'o';
        }
    }
    let mut s = watermelon_header(w);
    s.push('\n');
    for row in grid {
        let line: String = row.into_iter().collect();
        s.push_str(line.trim_end());
        s.push('\n');
    }
    let mut labels = vec![' '; cols + 4];
    for x in 1..=width {
        let j = if x <= n { n + 1 - x } else { x - n };
        for (off, ch) in j.to_string().chars().enumerate() {
            labels[(4 * (x - 1)) as usize + off] = ch;
        }
    }
    let labels: String = labels.into_iter().collect();
    let _ = writeln!(s, "{}", labels.trim_end());
    s
}

fn watermelon_svg(w: &Watermelon) -> String {
    const UNIT: i64 = 24;
    const MARGIN: i64 = 20;
    let n = w.n() as i64;
    let height = n + w.m() as i64;
    let width = 2 * n;
    let px = |x: i64| MARGIN + (x - 1) * UNIT;
    let py = |y: i64| MARGIN + (height - y) * UNIT;
    let (vw, vh) = (2 * MARGIN + (width - 1).max(0) * UNIT, 2 * MARGIN + height * UNIT);
    let mut s = String::new();
    let _ =
        writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{vw}" height="{vh}" viewBox="0 0 {vw} {vh}">"#);
    let _ = writeln!(s, "<title>{}</title>", watermelon_header(w));
    let _ = writeln!(s, r##"<rect width="{vw}" height="{vh}" fill="#ffffff"/>"##);
    for x in 1..=width {
        for y in 0..=height {
            let _ = writeln!(s, r##"<circle cx="{}" cy="{}" r="1.5" fill="#bbbbbb"/>"##, px(x), py(y));
        }
    }
    if n > 0 {
        let sep = px(n) + UNIT / 2;
        let _ = writeln!(
            s,
            r##"<line x1="{sep}" y1="{}" x2="{sep}" y2="{}" stroke="#999999" stroke-dasharray="4 3"/>"##,
            py(height),
            py(0)
        );
    }
    for (i, path) in w.lattice_paths().iter().enumerate() {
        let pts: Vec<String> = path.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="3" stroke-linejoin="round"/>"#,
            pts.join(" ")
        );
        for &(x, y) in [path[0], path[path.len() - 1]].iter() {
            let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="4" fill="{color}"/>"#, px(x), py(y));
        }
    }
    s.push_str("</svg>\n");
    s
}

fn plane_partition_header(pp: &PlanePartition) -> String {
    format!("plane partition N={} L={} M={} volume={}", pp.n(), pp.l(), pp.m(), pp.volume())
}

fn plane_partition_ascii(pp: &PlanePartition) -> String {
    let mut s = plane_partition_header(pp);
    s.push('\n');
    if pp.parts().is_empty() || pp.n() == 0 {
        s.push_str("(empty box)\n");
        return s;
    }
    let w = pp.m().to_string().len();
    for row in pp.parts() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>w$}")).collect();
        let _ = writeln!(s, "{}", cells.join(" "));
    }
    s
}

/// Isometric stack of unit cubes inside the outline of the box.
fn plane_partition_svg(pp: &PlanePartition) -> String {
    const S: f64 = 20.0;
    const MARGIN: f64 = 20.0;
    let cos30 = 3f64.sqrt() / 2.0;
    let (n, l, m) = (pp.n() as f64, pp.l() as f64, pp.m() as f64);
    let ox = MARGIN + l * S * cos30;
    let oy = MARGIN + m * S;
    let proj = |x: f64, y: f64, z: f64| (ox + (x - y) * S * cos30, oy + (x + y) * S * 0.5 - z * S);
    let poly = |pts: &[(f64, f64, f64)]| {
        pts.iter()
            .map(|&(x, y, z)| {
                let (a, b) = proj(x, y, z);
                format!("{a:.1},{b:.1}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    };
    let vw = 2.0 * MARGIN + (n + l) * S * cos30;
    let vh = 2.0 * MARGIN + m * S + (n + l) * S * 0.5;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{vw:.1}" height="{vh:.1}" viewBox="0 0 {vw:.1} {vh:.1}">"#
    );
    let _ = writeln!(s, "<title>{}</title>", plane_partition_header(pp));
    let _ = writeln!(s, r##"<rect width="{vw:.1}" height="{vh:.1}" fill="#ffffff"/>"##);
    let frame = r##"fill="#f4f4f4" stroke="#999999" stroke-width="1""##;
    let _ =
        writeln!(s, r#"<polygon points="{}" {frame}/>"#, poly(&[(0., 0., 0.), (n, 0., 0.), (n, l, 0.), (0., l, 0.)]));
    let _ =
        writeln!(s, r#"<polygon points="{}" {frame}/>"#, poly(&[(0., 0., 0.), (0., l, 0.), (0., l, m), (0., 0., m)]));
    let _ =
        writeln!(s, r#"<polygon points="{}" {frame}/>"#, poly(&[(0., 0., 0.), (n, 0., 0.), (n, 0., m), (0., 0., m)]));
    let mut cubes = Vec::new();
    for (i, row) in pp.parts().iter().enumerate() {
        for (j, &h) in row.iter().enumerate() {
            for z in 0..h as usize {
                cubes.push((i + j + z, i, j, z));
            }
        }
    }
    cubes.sort();
    let stroke = r##"stroke="#333333" stroke-width="1""##;
    for (_, i, j, z) in cubes {
        let (x, y, z) = (j as f64, i as f64, z as f64);
        let top = [(x, y, z + 1.), (x + 1., y, z + 1.), (x + 1., y + 1., z + 1.), (x, y + 1., z + 1.)];
        let front_y = [(x, y + 1., z), (x + 1., y + 1., z), (x + 1., y + 1., z + 1.), (x, y + 1., z + 1.)];
        let front_x = [(x + 1., y, z), (x + 1., y + 1., z), (x + 1., y + 1., z + 1.), (x + 1., y, z + 1.)];
        let _ = writeln!(s, r##"<polygon points="{}" fill="#e8c170" {stroke}/>"##, poly(&top));
        let _ = writeln!(s, r##"<polygon points="{}" fill="#b5651d" {stroke}/>"##, poly(&front_y));
        let _ = writeln!(s, r##"<polygon points="{}" fill="#8b4513" {stroke}/>"##, poly(&front_x));
    }
    s.push_str("</svg>\n");
    s
}
