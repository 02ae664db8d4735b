//! Escape-time image synthesis for alternated Julia sets plus a classic
//! Mandelbrot view, with deterministic binary PPM output.
//!
//! Rendering is parallelized over rows; every pixel is an independent
//! pure computation, so output bytes are identical for any thread count.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::complex_dynamics::AlternatedParams;
use crate::error::{Error, Result};

/// Default cap on width·height, guarding against absurd allocations.
pub const DEFAULT_PIXEL_CAP: u64 = 100_000_000;

/// A pixel grid over the complex plane. `zoom` is complex units per
/// pixel; the pixel (width/2, height/2) lands on (center_x, center_y)
/// and row 0 is the top of the image.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ViewPort {
    pub width: u32,
    pub height: u32,
    pub zoom: f64,
    pub center_x: f64,
    pub center_y: f64,
    /// Maximum admissible width·height for this view.
    pub pixel_cap: u64,
}

impl ViewPort {
    pub fn new(width: u32, height: u32, zoom: f64, center_x: f64, center_y: f64) -> Self {
        Self {
            width,
            height,
            zoom,
            center_x,
            center_y,
            pixel_cap: DEFAULT_PIXEL_CAP,
        }
    }

    pub fn pixel_count(&self) -> u64 {
        self.width as u64 * self.height as u64
    }

    fn check_size(&self) -> Result<()> {
        if self.pixel_count() > self.pixel_cap {
            return Err(Error::ViewTooLarge {
                pixels: self.pixel_count(),
                cap: self.pixel_cap,
            });
        }
        Ok(())
    }

    /// Complex seed of the pixel at column x, row y.
    fn seed(&self, x: u32, y: u32) -> Complex64 {
        Complex64::new(
            (x as f64 - self.width as f64 / 2.0) * self.zoom + self.center_x,
            (y as f64 - self.height as f64 / 2.0) * self.zoom + self.center_y,
        )
    }
}

/// Escape-iteration counts for a rendered view, row-major, top row first.
/// An entry equal to `max_iter` means the point never left the threshold
/// disk within budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EscapeImage {
    width: u32,
    height: u32,
    max_iter: u32,
    iterations: Vec<u32>,
}

impl EscapeImage {
    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn max_iter(&self) -> u32 {
        self.max_iter
    }

    pub fn iterations(&self) -> &[u32] {
        &self.iterations
    }

    pub fn get(&self, x: u32, y: u32) -> u32 {
        self.iterations[(y * self.width + x) as usize]
    }

    /// Fraction of pixels that escaped within budget.
    pub fn escaped_fraction(&self) -> f64 {
        if self.iterations.is_empty() {
            return 0.0;
        }
        let escaped = self.iterations.iter().filter(|&&n| n < self.max_iter).count();
        escaped as f64 / self.iterations.len() as f64
    }

    /// Fraction of pixels that stayed inside for the whole budget.
    pub fn interior_fraction(&self) -> f64 {
        if self.iterations.is_empty() {
            return 0.0;
        }
        1.0 - self.escaped_fraction()
    }
}

/// Renders the per-row body of an image with a pure per-pixel function.
fn render_grid<F>(view: &ViewPort, max_iter: u32, per_pixel: F) -> Result<EscapeImage>
where
    F: Fn(Complex64) -> u32 + Sync,
{
    view.check_size()?;
    let width = view.width as usize;
    let mut iterations = vec![0u32; view.pixel_count() as usize];
    if width > 0 {
        iterations
            .par_chunks_mut(width)
            .enumerate()
            .for_each(|(y, row)| {
                for (x, out) in row.iter_mut().enumerate() {
                    *out = per_pixel(view.seed(x as u32, y as u32));
                }
            });
    }
    Ok(EscapeImage {
        width: view.width,
        height: view.height,
        max_iter,
        iterations,
    })
}

/// Escape-time render of the alternated system: each pixel seeds the
/// orbit, the maps alternate (F1 first unless `swap_order`), and the
/// recorded value is the number of completed iterations when |z| first
/// reaches the threshold, or `max_iter`.
pub fn render_alternated(
    view: &ViewPort,
    params: AlternatedParams,
    max_iter: u32,
    threshold: f64,
    swap_order: bool,
) -> Result<EscapeImage> {
    let params = if swap_order { params.swapped() } else { params };
    let threshold_sq = threshold * threshold;
    render_grid(view, max_iter, move |seed| {
        let mut z = seed;
        let mut iter = 0u32;
        while iter < max_iter && z.norm_sqr() < threshold_sq {
            let c = if iter.is_multiple_of(2) { params.c1 } else { params.c2 };
            z = z * z + c;
            iter += 1;
        }
        iter
    })
}

/// Classic Mandelbrot escape-time render: each pixel is a parameter c
/// and the orbit of 0 under z^2 + c is timed against the threshold.
pub fn render_mandelbrot(view: &ViewPort, max_iter: u32, threshold: f64) -> Result<EscapeImage> {
    let threshold_sq = threshold * threshold;
    render_grid(view, max_iter, move |c| {
        let mut z = Complex64::new(0.0, 0.0);
        let mut iter = 0u32;
        while iter < max_iter && z.norm_sqr() < threshold_sq {
            z = z * z + c;
            iter += 1;
        }
        iter
    })
}

/// Serializes the image as binary PPM (P6) with the grayscale palette:
/// interior pixels (count = max_iter) are black, others map to
/// g = floor(255·count/max_iter). Byte-exact across platforms.
pub fn ppm_bytes(image: &EscapeImage) -> Vec<u8> {
    let header = format!("P6\n{} {}\n255\n", image.width, image.height);
    let mut bytes = Vec::with_capacity(header.len() + image.iterations.len() * 3);
    bytes.extend_from_slice(header.as_bytes());
    for &count in &image.iterations {
        let g = if count == image.max_iter {
            0
        } else {
            (255 * count as u64 / image.max_iter as u64) as u8
        };
        bytes.extend_from_slice(&[g, g, g]);
    }
    bytes
}

/// Writes the PPM serialization of `image` to `path`.
pub fn write_ppm(image: &EscapeImage, path: &Path) -> Result<()> {
    let file = File::create(path)?;
    let mut writer = BufWriter::new(file);
    writer.write_all(&ppm_bytes(image))?;
    writer.flush()?;
    Ok(())
}
