//! Grid-sampled scalar fields, inpainting masks, and error metrics.
//!
//! Samples are stored row-major: index `y * width + x`.

mod generate;
mod io;

pub use generate::{generate_cross, generate_mask_hexagon, generate_mask_rect, generate_stripes};
pub use io::{load_grayscale, load_mask, save_grayscale, save_mask};

use crate::error::{Error, Result};

/// A real scalar field on a uniform periodic `width x height` grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Field2D {
    width: usize,
    height: usize,
    spacing: f64,
    data: Vec<f64>,
}

impl Field2D {
    pub fn zeros(width: usize, height: usize) -> Self {
        Self::constant(width, height, 0.0)
    }

    pub fn constant(width: usize, height: usize, value: f64) -> Self {
        assert!(width > 0 && height > 0, "field dimensions must be positive");
        Field2D {
            width,
            height,
            spacing: 1.0,
            data: vec![value; width * height],
        }
    }

    /// Wraps row-major samples. Fails if the length is wrong or a sample is not finite.
    pub fn from_vec(width: usize, height: usize, data: Vec<f64>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidGeometry(format!(
                "zero-sized field {width}x{height}"
            )));
        }
        if data.len() != width * height {
            return Err(Error::InvalidParameter(format!(
                "expected {} samples for a {width}x{height} field, got {}",
                width * height,
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("field data"));
        }
        Ok(Field2D {
            width,
            height,
            spacing: 1.0,
            data,
        })
    }

    /// Builds a field by evaluating `f(x, y)` at every grid index.
    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                data.push(f(x, y));
            }
        }
        Field2D {
            width,
            height,
            spacing: 1.0,
            data,
        }
    }

    pub fn with_spacing(mut self, spacing: f64) -> Self {
        assert!(spacing > 0.0 && spacing.is_finite(), "spacing must be positive");
        self.spacing = spacing;
        self
    }

    /// Internal constructor for results of field arithmetic; skips the finiteness scan.
    pub(crate) fn from_parts(width: usize, height: usize, spacing: f64, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), width * height);
        Field2D {
            width,
            height,
            spacing,
            data,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn into_data(self) -> Vec<f64> {
        self.data
    }

    pub fn get(&self, x: usize, y: usize) -> f64 {
        self.data[y * self.width + x]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> Field2D {
        Field2D::from_parts(
            self.width,
            self.height,
            self.spacing,
            self.data.iter().map(|&v| f(v)).collect(),
        )
    }

    /// Discrete L2 norm, `sqrt(spacing^2 * sum v^2)`.
    pub fn l2_norm(&self) -> f64 {
        (self.spacing * self.spacing * self.data.iter().map(|v| v * v).sum::<f64>()).sqrt()
    }

    pub fn max_abs_diff(&self, other: &Field2D) -> Result<f64> {
        ensure_same_dims(self.dims(), other.dims())?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }

    /// Circular shift by `(dx, dy)`: output at `(x + dx, y + dy)` is input at `(x, y)`.
    pub fn shifted(&self, dx: usize, dy: usize) -> Field2D {
        let (w, h) = self.dims();
        let mut out = vec![0.0; w * h];
        for y in 0..h {
            for x in 0..w {
                out[((y + dy) % h) * w + (x + dx) % w] = self.data[y * w + x];
            }
        }
        Field2D::from_parts(w, h, self.spacing, out)
    }
}

pub(crate) fn ensure_same_dims(expected: (usize, usize), actual: (usize, usize)) -> Result<()> {
    if expected != actual {
        return Err(Error::DimensionMismatch { expected, actual });
    }
    Ok(())
}

/// Per-pixel membership in the inpainting domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mask2D {
    width: usize,
    height: usize,
    inside: Vec<bool>,
}

impl Mask2D {
    /// A mask with no damaged pixels.
    pub fn empty(width: usize, height: usize) -> Self {
        Mask2D {
            width,
            height,
            inside: vec![false; width * height],
        }
    }

    pub fn full(width: usize, height: usize) -> Self {
        Mask2D {
            width,
            height,
            inside: vec![true; width * height],
        }
    }

    pub fn from_vec(width: usize, height: usize, inside: Vec<bool>) -> Result<Self> {
        if inside.len() != width * height {
            return Err(Error::InvalidParameter(format!(
                "expected {} mask entries for a {width}x{height} mask, got {}",
                width * height,
                inside.len()
            )));
        }
        Ok(Mask2D {
            width,
            height,
            inside,
        })
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut inside = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                inside.push(f(x, y));
            }
        }
        Mask2D {
            width,
            height,
            inside,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn inside(&self) -> &[bool] {
        &self.inside
    }

    pub fn is_inside(&self, x: usize, y: usize) -> bool {
        self.inside[y * self.width + x]
    }

    pub fn count_inside(&self) -> usize {
        self.inside.iter().filter(|&&b| b).count()
    }
}

/// Everything needed to pose an inpainting run: the damaged image, the
/// inpainting domain, and the fidelity strength outside it.
#[derive(Debug, Clone)]
pub struct InpaintProblem {
    u0: Field2D,
    mask: Mask2D,
    lambda0: f64,
}

impl InpaintProblem {
    /// `lambda0 = 0` is accepted and turns the run into a pure gradient flow.
    pub fn new(u0: Field2D, mask: Mask2D, lambda0: f64) -> Result<Self> {
        ensure_same_dims(u0.dims(), mask.dims())?;
        if u0.data().iter().any(|v| !(0.0..=1.0).contains(v)) {
            return Err(Error::InvalidParameter(
                "image intensities must lie in [0, 1]".into(),
            ));
        }
        if !(lambda0 >= 0.0 && lambda0.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "lambda0 must be a nonnegative finite number, got {lambda0}"
            )));
        }
        Ok(InpaintProblem { u0, mask, lambda0 })
    }

    pub fn u0(&self) -> &Field2D {
        &self.u0
    }

    pub fn mask(&self) -> &Mask2D {
        &self.mask
    }

    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    pub fn dims(&self) -> (usize, usize) {
        self.u0.dims()
    }
}

/// Fidelity weight: `lambda0` on known pixels, zero inside the inpainting domain.
pub fn build_lambda_field(problem: &InpaintProblem) -> Field2D {
    let (w, h) = problem.dims();
    let data = problem
        .mask
        .inside
        .iter()
        .map(|&inside| if inside { 0.0 } else { problem.lambda0 })
        .collect();
    Field2D::from_parts(w, h, problem.u0.spacing, data)
}

/// Copy of `u` with every pixel inside `mask` set to `value`.
pub fn fill_region(u: &Field2D, mask: &Mask2D, value: f64) -> Result<Field2D> {
    ensure_same_dims(u.dims(), mask.dims())?;
    let data = u
        .data
        .iter()
        .zip(&mask.inside)
        .map(|(&v, &inside)| if inside { value } else { v })
        .collect();
    Ok(Field2D::from_parts(u.width, u.height, u.spacing, data))
}

/// Pixel selection for [`mse`].
#[derive(Debug, Clone, Copy)]
pub enum Region<'a> {
    All,
    /// Pixels inside the inpainting domain.
    Inside(&'a Mask2D),
    /// Known pixels, outside the inpainting domain.
    Outside(&'a Mask2D),
}

impl Region<'_> {
    fn selects(&self, idx: usize) -> bool {
        match self {
            Region::All => true,
            Region::Inside(m) => m.inside[idx],
            Region::Outside(m) => !m.inside[idx],
        }
    }
}

/// Mean squared difference over the selected pixels. An empty selection gives 0.
pub fn mse(a: &Field2D, b: &Field2D, region: Region<'_>) -> Result<f64> {
    ensure_same_dims(a.dims(), b.dims())?;
    match region {
        Region::Inside(m) | Region::Outside(m) => ensure_same_dims(a.dims(), m.dims())?,
        Region::All => {}
    }
    let (sum, count) = a
        .data
        .iter()
        .zip(&b.data)
        .enumerate()
        .filter(|(i, _)| region.selects(*i))
        .fold((0.0, 0usize), |(s, n), (_, (x, y))| (s + (x - y) * (x - y), n + 1));
    Ok(if count == 0 { 0.0 } else { sum / count as f64 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(w: usize, h: usize, v: &[f64]) -> Field2D {
        Field2D::from_vec(w, h, v.to_vec()).unwrap()
    }

    #[test]
    fn lambda_field_follows_mask() {
        let u0 = Field2D::zeros(2, 2);
        let mask = Mask2D::from_vec(2, 2, vec![false, false, true, true]).unwrap();
        let p = InpaintProblem::new(u0, mask, 1e4).unwrap();
        assert_eq!(build_lambda_field(&p).data(), &[1e4, 1e4, 0.0, 0.0]);
    }

    #[test]
    fn lambda_field_extremes() {
        let p = InpaintProblem::new(Field2D::zeros(3, 2), Mask2D::empty(3, 2), 7.0).unwrap();
        assert!(build_lambda_field(&p).data().iter().all(|&v| v == 7.0));
        let p = InpaintProblem::new(Field2D::zeros(3, 2), Mask2D::full(3, 2), 7.0).unwrap();
        assert!(build_lambda_field(&p).data().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn mse_examples() {
        let a = field(2, 2, &[0.0, 0.0, 1.0, 1.0]);
        let b = field(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        assert_eq!(mse(&a, &a, Region::All).unwrap(), 0.0);
        assert_eq!(mse(&a, &b, Region::All).unwrap(), 0.5);
        let empty = Mask2D::empty(2, 2);
        assert_eq!(mse(&a, &b, Region::Inside(&empty)).unwrap(), 0.0);
        assert_eq!(mse(&a, &b, Region::Outside(&empty)).unwrap(), 0.5);
        let m = Mask2D::from_vec(2, 2, vec![false, true, false, false]).unwrap();
        assert_eq!(mse(&a, &b, Region::Inside(&m)).unwrap(), 1.0);
        assert!((mse(&a, &b, Region::Outside(&m)).unwrap() - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn mse_rejects_mismatch() {
        let a = Field2D::zeros(2, 2);
        let b = Field2D::zeros(3, 2);
        assert!(matches!(
            mse(&a, &b, Region::All),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn problem_validation() {
        let bad = field(1, 2, &[0.5, 1.5]);
        assert!(InpaintProblem::new(bad, Mask2D::empty(1, 2), 1.0).is_err());
        assert!(InpaintProblem::new(Field2D::zeros(2, 2), Mask2D::empty(3, 2), 1.0).is_err());
        assert!(InpaintProblem::new(Field2D::zeros(2, 2), Mask2D::empty(2, 2), -1.0).is_err());
    }

    #[test]
    fn from_vec_rejects_nan_and_bad_length() {
        assert!(Field2D::from_vec(2, 1, vec![0.0, f64::NAN]).is_err());
        assert!(Field2D::from_vec(2, 2, vec![0.0; 3]).is_err());
        assert!(Field2D::from_vec(0, 2, vec![]).is_err());
    }

    #[test]
    fn shift_wraps_around() {
        let f = field(3, 1, &[1.0, 2.0, 3.0]);
        assert_eq!(f.shifted(1, 0).data(), &[3.0, 1.0, 2.0]);
    }
}
