//! 8-bit PNG persistence for images, mattes, and masks.
//!
//! Images are written as RGB or grayscale PNG; mattes and masks as
//! single-channel PNG where pixel value `v` maps to `v / 255`.

use std::path::Path;

use image::{DynamicImage, GrayImage, RgbImage};

use crate::buffer::{AlphaMatte, ImageBuffer, MotifMask, RangeTag};
use crate::error::{ImagingError, Result};

#[inline]
fn to_u8(v: f64) -> u8 {
    (v * 255.0).round().clamp(0.0, 255.0) as u8
}

/// Write a unit-range buffer as an 8-bit PNG. Signed buffers are converted
/// to unit range first.
pub fn write_image_png(path: &Path, img: &ImageBuffer) -> Result<()> {
    let img = img.to_unit();
    let (h, w, c) = img.dims();
    let wrap = |source| ImagingError::Write { path: path.to_path_buf(), source };
    match c {
        1 => {
            let mut out = GrayImage::new(w as u32, h as u32);
            for (i, p) in out.pixels_mut().enumerate() {
                p.0[0] = to_u8(img.data()[i]);
            }
            out.save(path).map_err(wrap)
        }
        3 => {
            let mut out = RgbImage::new(w as u32, h as u32);
            for (i, p) in out.pixels_mut().enumerate() {
                for ch in 0..3 {
                    p.0[ch] = to_u8(img.data()[i * 3 + ch]);
                }
            }
            out.save(path).map_err(wrap)
        }
        other => Err(ImagingError::UnsupportedChannels(other)),
    }
}

/// Read an 8-bit PNG (or JPEG) into a unit-range buffer, preserving a
/// grayscale layout when the file has a single channel.
pub fn read_image_png(path: &Path) -> Result<ImageBuffer> {
    let img = image::open(path).map_err(|source| ImagingError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(match img {
        DynamicImage::ImageLuma8(g) => {
            let (w, h) = (g.width() as usize, g.height() as usize);
            let data = g.into_raw().into_iter().map(|v| v as f64 / 255.0).collect();
            ImageBuffer::from_vec(h, w, 1, RangeTag::Unit, data)?
        }
        other => {
            let rgb = other.into_rgb8();
            let (w, h) = (rgb.width() as usize, rgb.height() as usize);
            let data = rgb.into_raw().into_iter().map(|v| v as f64 / 255.0).collect();
            ImageBuffer::from_vec(h, w, 3, RangeTag::Unit, data)?
        }
    })
}

/// Read any PNG/JPEG as a 3-channel unit-range buffer (backgrounds ingestion).
pub fn read_image_rgb(path: &Path) -> Result<ImageBuffer> {
    let img = image::open(path).map_err(|source| ImagingError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    let rgb = img.into_rgb8();
    let (w, h) = (rgb.width() as usize, rgb.height() as usize);
    let data = rgb.into_raw().into_iter().map(|v| v as f64 / 255.0).collect();
    ImageBuffer::from_vec(h, w, 3, RangeTag::Unit, data)
}

pub fn write_matte_png(path: &Path, matte: &AlphaMatte) -> Result<()> {
    let mut out = GrayImage::new(matte.width() as u32, matte.height() as u32);
    for (i, p) in out.pixels_mut().enumerate() {
        p.0[0] = to_u8(matte.data()[i]);
    }
    out.save(path).map_err(|source| ImagingError::Write {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_matte_png(path: &Path) -> Result<AlphaMatte> {
    let img = image::open(path)
        .map_err(|source| ImagingError::Read {
            path: path.to_path_buf(),
            source,
        })?
        .into_luma8();
    let (w, h) = (img.width() as usize, img.height() as usize);
    let data = img.into_raw().into_iter().map(|v| v as f64 / 255.0).collect();
    AlphaMatte::from_vec(h, w, data)
}

pub fn write_mask_png(path: &Path, mask: &MotifMask) -> Result<()> {
    let mut out = GrayImage::new(mask.width() as u32, mask.height() as u32);
    for (i, p) in out.pixels_mut().enumerate() {
        p.0[0] = to_u8(mask.data()[i]);
    }
    out.save(path).map_err(|source| ImagingError::Write {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_mask_png(path: &Path) -> Result<MotifMask> {
    let img = image::open(path)
        .map_err(|source| ImagingError::Read {
            path: path.to_path_buf(),
            source,
        })?
        .into_luma8();
    let (w, h) = (img.width() as usize, img.height() as usize);
    let data = img.into_raw().into_iter().map(|v| v as f64 / 255.0).collect();
    MotifMask::from_vec(h, w, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn png_roundtrip_quantizes_to_8bit() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("img.png");
        let data: Vec<f64> = (0..48).map(|i| (i as f64) / 47.0).collect();
        let img = ImageBuffer::from_vec(4, 4, 3, RangeTag::Unit, data).unwrap();
        write_image_png(&path, &img).unwrap();
        let back = read_image_png(&path).unwrap();
        assert_eq!(back.dims(), (4, 4, 3));
        for (a, b) in img.data().iter().zip(back.data()) {
            assert!((a - b).abs() <= 0.5 / 255.0 + 1e-12);
        }
    }

    #[test]
    fn matte_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("alpha.png");
        let m = AlphaMatte::from_vec(2, 2, vec![0.0, 0.25, 0.5, 1.0]).unwrap();
        write_matte_png(&path, &m).unwrap();
        let back = read_matte_png(&path).unwrap();
        for (a, b) in m.data().iter().zip(back.data()) {
            assert!((a - b).abs() <= 0.5 / 255.0 + 1e-12);
        }
    }
}
