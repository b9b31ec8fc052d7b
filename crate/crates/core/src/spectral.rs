//! Discrete Fourier transforms on the periodic grid and the spectral
//! differential operators built on them.
//!
//! Convention: the forward transform is unnormalized and the inverse carries
//! the `1 / (W H)` factor, so `inverse(forward(f)) == f`.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use rustfft::num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::field::Field2D;

/// Fourier coefficients of a `W x H` field, row-major like [`Field2D`].
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    width: usize,
    height: usize,
    data: Vec<Complex64>,
}

impl Spectrum {
    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    /// Coefficient of the mode with column index `k` and row index `l`.
    pub fn get(&self, k: usize, l: usize) -> Complex64 {
        self.data[l * self.width + k]
    }
}

/// Precomputed wavenumbers, operator symbols and FFT plans for one grid size.
///
/// `K = -(kx^2 + ky^2)` is the exact symbol of the continuous Laplacian, so
/// `K <= 0` everywhere and `K = 0` only for the mean mode.
#[derive(Clone)]
pub struct SpectralWorkspace {
    width: usize,
    height: usize,
    spacing: f64,
    kx: Vec<f64>,
    ky: Vec<f64>,
    // first-derivative wavenumbers; the Nyquist entry of an even axis is zeroed
    // so that odd-order derivatives of real fields stay real
    dkx: Vec<f64>,
    dky: Vec<f64>,
    lap_symbol: Vec<f64>,
    bilap_symbol: Vec<f64>,
    row_fwd: Arc<dyn Fft<f64>>,
    row_inv: Arc<dyn Fft<f64>>,
    col_fwd: Arc<dyn Fft<f64>>,
    col_inv: Arc<dyn Fft<f64>>,
}

impl fmt::Debug for SpectralWorkspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpectralWorkspace")
            .field("width", &self.width)
            .field("height", &self.height)
            .field("spacing", &self.spacing)
            .finish_non_exhaustive()
    }
}

/// Signed frequency of DFT index `k` on an `n`-point axis, in `(-n/2, n/2]`.
pub fn signed_frequency(k: usize, n: usize) -> f64 {
    if 2 * k <= n {
        k as f64
    } else {
        k as f64 - n as f64
    }
}

fn wavenumbers(n: usize, spacing: f64) -> Vec<f64> {
    (0..n)
        .map(|k| 2.0 * PI * signed_frequency(k, n) / (n as f64 * spacing))
        .collect()
}

impl SpectralWorkspace {
    pub fn new(width: usize, height: usize, spacing: f64) -> Result<Self> {
        if width < 2 || height < 2 {
            return Err(Error::InvalidGeometry(format!(
                "spectral grid must be at least 2x2, got {width}x{height}"
            )));
        }
        if !(spacing > 0.0 && spacing.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "grid spacing must be positive, got {spacing}"
            )));
        }
        let kx = wavenumbers(width, spacing);
        let ky = wavenumbers(height, spacing);
        let strip_nyquist = |k: &[f64]| {
            let mut d = k.to_vec();
            if k.len() % 2 == 0 {
                d[k.len() / 2] = 0.0;
            }
            d
        };
        let dkx = strip_nyquist(&kx);
        let dky = strip_nyquist(&ky);

        let mut lap_symbol = Vec::with_capacity(width * height);
        for &ly in &ky {
            for &lx in &kx {
                lap_symbol.push(-(lx * lx + ly * ly));
            }
        }
        let bilap_symbol = lap_symbol.iter().map(|k| k * k).collect();

        let mut planner = FftPlanner::new();
        Ok(SpectralWorkspace {
            width,
            height,
            spacing,
            kx,
            ky,
            dkx,
            dky,
            lap_symbol,
            bilap_symbol,
            row_fwd: planner.plan_fft_forward(width),
            row_inv: planner.plan_fft_inverse(width),
            col_fwd: planner.plan_fft_forward(height),
            col_inv: planner.plan_fft_inverse(height),
        })
    }

    pub fn for_field(field: &Field2D) -> Result<Self> {
        Self::new(field.width(), field.height(), field.spacing())
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Angular wavenumber per column index.
    pub fn kx(&self) -> &[f64] {
        &self.kx
    }

    /// Angular wavenumber per row index.
    pub fn ky(&self) -> &[f64] {
        &self.ky
    }

    /// Laplacian symbol `K` per mode, row-major.
    pub fn lap_symbol(&self) -> &[f64] {
        &self.lap_symbol
    }

    /// Bilaplacian symbol `K^2` per mode, row-major.
    pub fn bilap_symbol(&self) -> &[f64] {
        &self.bilap_symbol
    }

    fn check(&self, dims: (usize, usize)) -> Result<()> {
        crate::field::ensure_same_dims((self.width, self.height), dims)
    }

    pub fn forward(&self, field: &Field2D) -> Result<Spectrum> {
        self.check(field.dims())?;
        Ok(Spectrum {
            width: self.width,
            height: self.height,
            data: self.forward_real(field.data()),
        })
    }

    /// Inverse transform, keeping the real part.
    pub fn inverse(&self, spectrum: &Spectrum) -> Result<Field2D> {
        self.check(spectrum.dims())?;
        let mut data = spectrum.data.clone();
        self.inverse_in_place(&mut data);
        Ok(self.field(data.into_iter().map(|c| c.re).collect()))
    }

    /// Normalized inverse transform with the imaginary part retained.
    pub fn inverse_complex(&self, spectrum: &Spectrum) -> Result<Vec<Complex64>> {
        self.check(spectrum.dims())?;
        let mut data = spectrum.data.clone();
        self.inverse_in_place(&mut data);
        Ok(data)
    }

    pub(crate) fn field(&self, data: Vec<f64>) -> Field2D {
        Field2D::from_parts(self.width, self.height, self.spacing, data)
    }

    pub(crate) fn forward_real(&self, values: &[f64]) -> Vec<Complex64> {
        let mut data: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
        self.transform(&mut data, &self.row_fwd, &self.col_fwd);
        data
    }

    /// Transforms two real arrays with a single complex FFT of `a + i b`,
    /// separated through conjugate symmetry.
    pub(crate) fn forward_real_pair(&self, a: &[f64], b: &[f64]) -> (Vec<Complex64>, Vec<Complex64>) {
        let mut z: Vec<Complex64> = a
            .iter()
            .zip(b)
            .map(|(&x, &y)| Complex64::new(x, y))
            .collect();
        self.transform(&mut z, &self.row_fwd, &self.col_fwd);
        let (w, h) = (self.width, self.height);
        let mut fa = vec![Complex64::new(0.0, 0.0); w * h];
        let mut fb = vec![Complex64::new(0.0, 0.0); w * h];
        for l in 0..h {
            let nl = (h - l) % h;
            for k in 0..w {
                let i = l * w + k;
                let zc = z[nl * w + (w - k) % w].conj();
                fa[i] = (z[i] + zc) * 0.5;
                // (z - zc) / 2i
                let d = z[i] - zc;
                fb[i] = Complex64::new(0.5 * d.im, -0.5 * d.re);
            }
        }
        (fa, fb)
    }

    pub(crate) fn inverse_in_place(&self, data: &mut [Complex64]) {
        self.transform(data, &self.row_inv, &self.col_inv);
        let scale = 1.0 / (self.width * self.height) as f64;
        for c in data.iter_mut() {
            *c *= scale;
        }
    }

    /// Inverse of a spectrum known to be conjugate-symmetric.
    pub(crate) fn inverse_to_real(&self, mut data: Vec<Complex64>) -> Vec<f64> {
        self.inverse_in_place(&mut data);
        debug_assert!(
            {
                let peak = data.iter().map(|c| c.re.abs()).fold(1.0, f64::max);
                data.iter().all(|c| c.im.abs() <= 1e-10 * peak)
            },
            "spectrum lost conjugate symmetry"
        );
        data.into_iter().map(|c| c.re).collect()
    }

    fn transform(&self, data: &mut [Complex64], rows: &Arc<dyn Fft<f64>>, cols: &Arc<dyn Fft<f64>>) {
        let (w, h) = (self.width, self.height);
        let scratch_len = rows
            .get_inplace_scratch_len()
            .max(cols.get_inplace_scratch_len());
        let mut scratch = vec![Complex64::new(0.0, 0.0); scratch_len];
        rows.process_with_scratch(data, &mut scratch);

        let mut transposed = vec![Complex64::new(0.0, 0.0); w * h];
        for y in 0..h {
            for x in 0..w {
                transposed[x * h + y] = data[y * w + x];
            }
        }
        cols.process_with_scratch(&mut transposed, &mut scratch);
        for x in 0..w {
            for y in 0..h {
                data[y * w + x] = transposed[x * h + y];
            }
        }
    }

    /// Multiplies every mode by a real symbol and transforms back.
    pub(crate) fn apply_symbol(&self, spectrum: &[Complex64], symbol: &[f64]) -> Field2D {
        let scaled = spectrum.iter().zip(symbol).map(|(c, s)| c * s).collect();
        self.field(self.inverse_to_real(scaled))
    }

    pub(crate) fn laplacian_of(&self, spectrum: &[Complex64]) -> Field2D {
        self.apply_symbol(spectrum, &self.lap_symbol)
    }

    /// Both gradient components from one inverse FFT of `(i kx + i (i ky)) u_hat`,
    /// whose real and imaginary parts are `du/dx` and `du/dy`.
    pub(crate) fn gradient_of(&self, spectrum: &[Complex64]) -> (Field2D, Field2D) {
        let (w, h) = (self.width, self.height);
        let mut packed = vec![Complex64::new(0.0, 0.0); w * h];
        for l in 0..h {
            for k in 0..w {
                let i = l * w + k;
                let c = spectrum[i];
                // i kx c - ky c
                packed[i] = Complex64::new(-c.im * self.dkx[k], c.re * self.dkx[k]) - c * self.dky[l];
            }
        }
        self.inverse_in_place(&mut packed);
        let gx = packed.iter().map(|c| c.re).collect();
        let gy = packed.iter().map(|c| c.im).collect();
        (self.field(gx), self.field(gy))
    }
}

/// Spectral Laplacian: each mode scaled by `K`.
pub fn laplacian(field: &Field2D, ws: &SpectralWorkspace) -> Result<Field2D> {
    Ok(ws.laplacian_of(ws.forward(field)?.data()))
}

/// Spectral bilaplacian: each mode scaled by `K^2`.
pub fn bilaplacian(field: &Field2D, ws: &SpectralWorkspace) -> Result<Field2D> {
    Ok(ws.apply_symbol(ws.forward(field)?.data(), &ws.bilap_symbol))
}

/// Spectral gradient `(du/dx, du/dy)`.
pub fn gradient(field: &Field2D, ws: &SpectralWorkspace) -> Result<(Field2D, Field2D)> {
    Ok(ws.gradient_of(ws.forward(field)?.data()))
}
