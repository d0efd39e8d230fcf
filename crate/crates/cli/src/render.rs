//! ASCII and SVG pictures of grid sets.

use std::fmt::Write;

use gridperim_core::grid::{boundary_by_direction, edge_boundary_size, EdgeClass};
use gridperim_core::{Cell, GridSet};

/// Rows from the top down, `#` for members and `.` for holes inside the
/// bounding box. Trailing holes are trimmed so each row is left-aligned.
pub fn ascii(set: &GridSet) -> String {
    let (Some(mx), Some(my)) = (set.max_x(), set.max_y()) else {
        return String::new();
    };
    let mut out = String::new();
    for y in (0..=my).rev() {
        let row: String = (0..=mx)
            .map(|x| if set.contains(Cell::new(x, y)) { '#' } else { '.' })
            .collect();
        out.push_str(row.trim_end_matches('.'));
        out.push('\n');
    }
    out
}

pub fn summary(set: &GridSet) -> String {
    let d = boundary_by_direction(set);
    format!(
        "volume {} boundary {} (horizontal {}, vertical {}, diagonal {}, anti-diagonal {})",
        set.volume(),
        edge_boundary_size(set),
        d.horizontal,
        d.vertical,
        d.diagonal,
        d.anti_diagonal
    )
}

const UNIT: u32 = 24;
const MARGIN: u32 = 1;

fn colour(class: EdgeClass) -> &'static str {
    match class {
        EdgeClass::Horizontal => "#d62728",
        EdgeClass::Vertical => "#1f77b4",
        EdgeClass::Diagonal => "#2ca02c",
        EdgeClass::AntiDiagonal => "#9467bd",
    }
}

/// Unit squares with the origin at the bottom left. With `edges`, each
/// boundary edge is drawn between cell centres, coloured by direction.
pub fn svg(set: &GridSet, edges: bool) -> String {
    let cols = set.max_x().map_or(0, |x| x + 1) + 2 * MARGIN;
    let rows = set.max_y().map_or(0, |y| y + 1) + 2 * MARGIN;
    let (w, h) = (cols * UNIT, rows * UNIT);
    // Top-left corner of the square for cell (x, y).
    let corner = |x: u32, y: u32| ((x + MARGIN) * UNIT, h - (y + MARGIN + 1) * UNIT);
    let centre = |x: u32, y: u32| {
        let (cx, cy) = corner(x, y);
        (cx + UNIT / 2, cy + UNIT / 2)
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    );
    let _ = writeln!(out, "<title>{}</title>", summary(set));
    let (ox, oy) = corner(0, 0);
    let _ = writeln!(
        out,
        r##"<path d="M {ox} {} V {} H {w}" fill="none" stroke="#444" stroke-width="1"/>"##,
        0,
        oy + UNIT
    );
    for &c in set.cells() {
        let (x, y) = corner(c.x, c.y);
        let _ = writeln!(
            out,
            r##"<rect x="{x}" y="{y}" width="{UNIT}" height="{UNIT}" fill="#cfd8e3" stroke="#333" stroke-width="1"/>"##
        );
    }
    if edges {
        for &c in set.cells() {
            for nb in c.neighbors().filter(|&nb| !set.contains(nb)) {
                let class = EdgeClass::of_step(
                    i64::from(nb.x) - i64::from(c.x),
                    i64::from(nb.y) - i64::from(c.y),
                );
                let (x1, y1) = centre(c.x, c.y);
                let (x2, y2) = centre(nb.x, nb.y);
                let _ = writeln!(
                    out,
                    r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{}" stroke-width="2"/>"#,
                    colour(class)
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use gridperim_core::grid::profile_to_set;
    use gridperim_core::ColumnProfile;

    #[test]
    fn ascii_of_a_small_profile() {
        let set = profile_to_set(&ColumnProfile::new(vec![3, 3, 2, 1]).unwrap());
        assert_eq!(ascii(&set), "##\n###\n####\n");
    }

    #[test]
    fn svg_draws_every_edge() {
        let set = profile_to_set(&ColumnProfile::new(vec![3, 3, 2, 1]).unwrap());
        let svg = svg(&set, true);
        assert_eq!(svg.matches("<rect").count(), 9);
        assert_eq!(svg.matches("<line").count(), 14);
    }
}
