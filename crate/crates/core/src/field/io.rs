//! Grayscale image and mask files: binary PGM (P5, maxval 255) and 8-bit grayscale PNG.
//!
//! Loading detects the format from the file signature; saving picks it from
//! the path extension.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use super::{Field2D, Mask2D};
use crate::error::{Error, Result};

const PNG_SIGNATURE: &[u8] = &[0x89, b'P', b'N', b'G', b'\r', b'\n', 0x1a, b'\n'];

/// A decoded 8-bit grayscale raster.
struct Gray8 {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Pgm,
    Png,
}

fn format_for_path(path: &Path) -> Result<Format> {
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    match ext.as_deref() {
        Some("pgm") => Ok(Format::Pgm),
        Some("png") => Ok(Format::Png),
        _ => Err(Error::UnsupportedFormat(format!(
            "cannot infer image format from {}; use .pgm or .png",
            path.display()
        ))),
    }
}

/// Loads a grayscale image, mapping each 8-bit pixel `p` to `p / 255`.
pub fn load_grayscale(path: impl AsRef<Path>) -> Result<Field2D> {
    let img = read_gray8(path.as_ref())?;
    let data = img.pixels.iter().map(|&p| f64::from(p) / 255.0).collect();
    Field2D::from_vec(img.width, img.height, data)
}

/// Loads an inpainting mask: pixels `>= 128` are inside the inpainting domain.
pub fn load_mask(path: impl AsRef<Path>) -> Result<Mask2D> {
    let img = read_gray8(path.as_ref())?;
    Mask2D::from_vec(
        img.width,
        img.height,
        img.pixels.iter().map(|&p| p >= 128).collect(),
    )
}

/// Clamps to `[0, 1]`, quantizes with `floor(255 v + 0.5)` and writes the file.
pub fn save_grayscale(field: &Field2D, path: impl AsRef<Path>) -> Result<()> {
    if !field.is_finite() {
        return Err(Error::NonFinite("image to save"));
    }
    let pixels = field.data().iter().map(|&v| quantize(v)).collect();
    write_gray8(
        path.as_ref(),
        &Gray8 {
            width: field.width(),
            height: field.height(),
            pixels,
        },
    )
}

/// Writes a mask as 255 (inside) / 0 (outside).
pub fn save_mask(mask: &Mask2D, path: impl AsRef<Path>) -> Result<()> {
    let pixels = mask.inside().iter().map(|&b| if b { 255 } else { 0 }).collect();
    write_gray8(
        path.as_ref(),
        &Gray8 {
            width: mask.width(),
            height: mask.height(),
            pixels,
        },
    )
}

pub(crate) fn quantize(v: f64) -> u8 {
    (255.0 * v.clamp(0.0, 1.0) + 0.5).floor() as u8
}

fn read_gray8(path: &Path) -> Result<Gray8> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    if bytes.starts_with(b"P5") {
        decode_pgm(&bytes)
    } else if bytes.starts_with(PNG_SIGNATURE) {
        decode_png(&bytes)
    } else {
        Err(Error::UnsupportedFormat(format!(
            "{} is neither a binary PGM nor a PNG",
            path.display()
        )))
    }
}

fn write_gray8(path: &Path, img: &Gray8) -> Result<()> {
    let format = format_for_path(path)?;
    let bytes = match format {
        Format::Pgm => encode_pgm(img),
        Format::Png => encode_png(img)?,
    };
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut out = BufWriter::new(file);
    out.write_all(&bytes)
        .and_then(|_| out.flush())
        .map_err(|e| Error::io(path, e))
}

/// Cursor over the ASCII header of a netpbm file.
struct HeaderReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl HeaderReader<'_> {
    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn next_uint(&mut self, what: &str) -> Result<usize> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::CorruptImage(format!("missing PGM {what}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::CorruptImage(format!("bad PGM {what}")))
    }
}

fn decode_pgm(bytes: &[u8]) -> Result<Gray8> {
    let mut header = HeaderReader { bytes, pos: 2 };
    let width = header.next_uint("width")?;
    let height = header.next_uint("height")?;
    let maxval = header.next_uint("maxval")?;
    if width == 0 || height == 0 {
        return Err(Error::CorruptImage(format!(
            "zero image dimensions {width}x{height}"
        )));
    }
    if maxval != 255 {
        return Err(Error::UnsupportedFormat(format!(
            "PGM maxval {maxval}; only 255 is supported"
        )));
    }
    // exactly one whitespace byte separates the header from the raster
    match bytes.get(header.pos) {
        Some(b) if b.is_ascii_whitespace() => header.pos += 1,
        _ => return Err(Error::CorruptImage("PGM header not terminated".into())),
    }
    let n = width
        .checked_mul(height)
        .ok_or_else(|| Error::CorruptImage("PGM dimensions overflow".into()))?;
    let raster = &bytes[header.pos..];
    if raster.len() < n {
        return Err(Error::CorruptImage(format!(
            "PGM payload truncated: expected {n} bytes, found {}",
            raster.len()
        )));
    }
    Ok(Gray8 {
        width,
        height,
        pixels: raster[..n].to_vec(),
    })
}

fn encode_pgm(img: &Gray8) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width, img.height).into_bytes();
    out.extend_from_slice(&img.pixels);
    out
}

fn decode_png(bytes: &[u8]) -> Result<Gray8> {
    let decoder = png::Decoder::new(std::io::Cursor::new(bytes));
    let mut reader = decoder
        .read_info()
        .map_err(|e| Error::CorruptImage(format!("PNG: {e}")))?;
    let (color, depth) = reader.output_color_type();
    if color != png::ColorType::Grayscale || depth != png::BitDepth::Eight {
        return Err(Error::UnsupportedFormat(format!(
            "PNG must be 8-bit grayscale, found {color:?} at {depth:?}"
        )));
    }
    let mut buf = vec![0; reader.output_buffer_size().unwrap_or(0)];
    let info = reader
        .next_frame(&mut buf)
        .map_err(|e| Error::CorruptImage(format!("PNG: {e}")))?;
    let (width, height) = (info.width as usize, info.height as usize);
    if width == 0 || height == 0 {
        return Err(Error::CorruptImage("zero image dimensions".into()));
    }
    let mut pixels = Vec::with_capacity(width * height);
    for row in buf[..info.buffer_size()].chunks(info.line_size) {
        pixels.extend_from_slice(&row[..width]);
    }
    Ok(Gray8 {
        width,
        height,
        pixels,
    })
}

fn encode_png(img: &Gray8) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    {
        let mut encoder = png::Encoder::new(&mut out, img.width as u32, img.height as u32);
        encoder.set_color(png::ColorType::Grayscale);
        encoder.set_depth(png::BitDepth::Eight);
        let mut writer = encoder
            .write_header()
            .map_err(|e| Error::CorruptImage(format!("PNG encode: {e}")))?;
        writer
            .write_image_data(&img.pixels)
            .map_err(|e| Error::CorruptImage(format!("PNG encode: {e}")))?;
    }
    Ok(out)
}
