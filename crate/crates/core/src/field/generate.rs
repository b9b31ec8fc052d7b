//! Synthetic binary test images and inpainting masks.

use super::{Field2D, Mask2D};
use crate::error::{Error, Result};

/// Vertical 0/1 stripes. Column `x` is white when `x mod period < period / 2`.
pub fn generate_stripes(width: usize, height: usize, stripe_period: usize) -> Result<Field2D> {
    check_size(width, height)?;
    if stripe_period < 2 {
        return Err(Error::InvalidGeometry(format!(
            "stripe period must be at least 2, got {stripe_period}"
        )));
    }
    Ok(Field2D::from_fn(width, height, |x, _| {
        if 2 * (x % stripe_period) < stripe_period {
            1.0
        } else {
            0.0
        }
    }))
}

/// A white cross of the given arm thickness centered on a black background.
/// Arms occupy columns/rows `(n - thickness) / 2 ..` for `thickness` pixels.
pub fn generate_cross(width: usize, height: usize, arm_thickness: usize) -> Result<Field2D> {
    check_size(width, height)?;
    if arm_thickness == 0 || arm_thickness >= width.min(height) {
        return Err(Error::InvalidGeometry(format!(
            "arm thickness {arm_thickness} must be in 1..{}",
            width.min(height)
        )));
    }
    let x0 = (width - arm_thickness) / 2;
    let y0 = (height - arm_thickness) / 2;
    let on_arm = |v: usize, start: usize| v >= start && v < start + arm_thickness;
    Ok(Field2D::from_fn(width, height, |x, y| {
        if on_arm(x, x0) || on_arm(y, y0) {
            1.0
        } else {
            0.0
        }
    }))
}

/// Rectangle `[x0, x0 + w) x [y0, y0 + h)` marked as inside.
pub fn generate_mask_rect(
    width: usize,
    height: usize,
    x0: usize,
    y0: usize,
    w: usize,
    h: usize,
) -> Result<Mask2D> {
    check_size(width, height)?;
    if x0 + w > width || y0 + h > height {
        return Err(Error::InvalidGeometry(format!(
            "rectangle ({x0},{y0},{w},{h}) exceeds the {width}x{height} grid"
        )));
    }
    Ok(Mask2D::from_fn(width, height, |x, y| {
        x >= x0 && x < x0 + w && y >= y0 && y < y0 + h
    }))
}

/// Filled flat-top regular hexagon with circumradius `radius` around the pixel
/// `center`. Pixels on the boundary count as inside; radius 0 selects only the center.
pub fn generate_mask_hexagon(
    width: usize,
    height: usize,
    center: (usize, usize),
    radius: f64,
) -> Result<Mask2D> {
    check_size(width, height)?;
    if !(radius >= 0.0 && radius.is_finite()) {
        return Err(Error::InvalidGeometry(format!(
            "hexagon radius must be nonnegative, got {radius}"
        )));
    }
    let (cx, cy) = (center.0 as f64, center.1 as f64);
    let half_height = radius * 3f64.sqrt() / 2.0;
    if cx - radius < 0.0
        || cx + radius > (width - 1) as f64
        || cy - half_height < 0.0
        || cy + half_height > (height - 1) as f64
    {
        return Err(Error::InvalidGeometry(format!(
            "hexagon at ({}, {}) with radius {radius} does not fit in {width}x{height}",
            center.0, center.1
        )));
    }
    const TOL: f64 = 1e-9;
    let sqrt3 = 3f64.sqrt();
    Ok(Mask2D::from_fn(width, height, |x, y| {
        let dx = (x as f64 - cx).abs();
        let dy = (y as f64 - cy).abs();
        dy <= half_height + TOL && sqrt3 * dx + dy <= sqrt3 * radius + TOL
    }))
}

fn check_size(width: usize, height: usize) -> Result<()> {
    if width == 0 || height == 0 {
        return Err(Error::InvalidGeometry(format!(
            "grid size {width}x{height} must be positive"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(f: &Field2D, y: usize) -> Vec<f64> {
        (0..f.width()).map(|x| f.get(x, y)).collect()
    }

    #[test]
    fn stripes_columns() {
        let f = generate_stripes(4, 3, 2).unwrap();
        for y in 0..3 {
            assert_eq!(row(&f, y), vec![1.0, 0.0, 1.0, 0.0]);
        }
        let f = generate_stripes(8, 1, 4).unwrap();
        assert_eq!(row(&f, 0), vec![1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0]);
        assert!(generate_stripes(8, 1, 1).is_err());
    }

    #[test]
    fn cross_geometry() {
        let f = generate_cross(8, 8, 2).unwrap();
        for i in 0..8 {
            assert_eq!(f.get(3, i), 1.0);
            assert_eq!(f.get(4, i), 1.0);
            assert_eq!(f.get(i, 3), 1.0);
            assert_eq!(f.get(i, 4), 1.0);
        }
        for (x, y) in [(0, 0), (7, 0), (0, 7), (7, 7), (2, 2), (5, 5)] {
            assert_eq!(f.get(x, y), 0.0);
        }
        assert_eq!(f.get(4, 4), 1.0);
        let odd = generate_cross(9, 9, 3).unwrap();
        assert_eq!(odd.get(4, 4), 1.0);
        assert!(generate_cross(8, 8, 8).is_err());
        assert!(generate_cross(8, 8, 0).is_err());
    }

    #[test]
    fn rect_masks() {
        assert_eq!(generate_mask_rect(5, 4, 0, 0, 5, 4).unwrap(), Mask2D::full(5, 4));
        let m = generate_mask_rect(64, 64, 16, 24, 32, 16).unwrap();
        assert_eq!(m.count_inside(), 512);
        assert!(m.is_inside(16, 24) && m.is_inside(47, 39));
        assert!(!m.is_inside(48, 24) && !m.is_inside(16, 40));
        assert!(generate_mask_rect(64, 64, 40, 0, 32, 4).is_err());
    }

    #[test]
    fn hexagon_masks() {
        let m = generate_mask_hexagon(9, 9, (4, 4), 0.0).unwrap();
        assert_eq!(m.count_inside(), 1);
        assert!(m.is_inside(4, 4));

        // flat-top: vertices at (cx +- r, cy) are included, the top edge spans |dx| <= r/2
        let m = generate_mask_hexagon(21, 21, (10, 10), 4.0).unwrap();
        assert!(m.is_inside(14, 10) && m.is_inside(6, 10));
        assert!(!m.is_inside(15, 10));
        assert!(m.is_inside(12, 13) && m.is_inside(8, 7));
        assert!(!m.is_inside(10, 14));
        assert!(!m.is_inside(14, 11));

        assert!(generate_mask_hexagon(8, 8, (1, 4), 3.0).is_err());
    }

    #[test]
    fn zero_size_is_rejected() {
        assert!(generate_stripes(0, 4, 2).is_err());
        assert!(generate_mask_rect(4, 0, 0, 0, 0, 0).is_err());
    }
}
