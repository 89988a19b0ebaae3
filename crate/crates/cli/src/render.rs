//! Static figure output for enumerated regions: SVG with one unit cell per
//! member, or a binary PGM raster over the region's bounding box.

use gaussphi::phi::w;
use gaussphi::region::RegionSet;

/// Half-side of the drawing box for a level: the octagon's coordinate bound.
fn coord_bound(level: u32) -> i64 {
    (w(level) - 2)
        .try_into()
        .expect("level too large to render")
}

/// One `cell_px`-sized square per member, origin marked with a disc. The
/// output is deterministic: elements are already sorted.
pub fn render_svg(set: &RegionSet, cell_px: u32) -> String {
    let r = coord_bound(set.query.level);
    let cell = cell_px as i64;
    let side = (2 * r + 1) * cell;
    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{side}\" height=\"{side}\" \
         viewBox=\"0 0 {side} {side}\">\n"
    ));
    for x in &set.elements {
        let px = (x.re + r) * cell;
        let py = (r - x.im) * cell;
        svg.push_str(&format!(
            "<rect x=\"{px}\" y=\"{py}\" width=\"{cell}\" height=\"{cell}\" \
             fill=\"#33658a\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n"
        ));
    }
    let ox = r * cell + cell / 2;
    svg.push_str(&format!(
        "<circle cx=\"{ox}\" cy=\"{ox}\" r=\"{}\" fill=\"#d1495b\"/>\n",
        (cell / 4).max(1)
    ));
    svg.push_str("</svg>\n");
    svg
}

/// Binary PGM (P5): members white on black, one pixel per lattice point,
/// row `0` at the top of the box (largest imaginary part).
pub fn render_pgm(set: &RegionSet) -> Vec<u8> {
    let r = coord_bound(set.query.level);
    let side = (2 * r + 1) as usize;
    let mut pixels = vec![0u8; side * side];
    for x in &set.elements {
        let col = (x.re + r) as usize;
        let row = (r - x.im) as usize;
        pixels[row * side + col] = 255;
    }
    let mut out = format!("P5\n{side} {side}\n255\n").into_bytes();
    out.extend_from_slice(&pixels);
    out
}
