use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, ImagingError>;

#[derive(Debug, thiserror::Error)]
pub enum ImagingError {
    #[error("{context}: shape mismatch, expected {expected_h}x{expected_w}x{expected_c}, got {got_h}x{got_w}x{got_c}")]
    ShapeMismatch {
        context: &'static str,
        expected_h: usize,
        expected_w: usize,
        expected_c: usize,
        got_h: usize,
        got_w: usize,
        got_c: usize,
    },

    #[error("buffer data length {got} does not match {h}x{w}x{c} = {expected}")]
    LengthMismatch {
        h: usize,
        w: usize,
        c: usize,
        expected: usize,
        got: usize,
    },

    #[error("value {value} at index {index} outside declared range [{lo}, {hi}]")]
    ValueOutOfRange {
        index: usize,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("unsupported channel count {0} (expected 1 or 3)")]
    UnsupportedChannels(usize),

    #[error("alpha matte is singular: max alpha {max_alpha} exceeds limit {limit}")]
    SingularAlpha { max_alpha: f64, limit: f64 },

    #[error("threshold {0} outside (0, 1)")]
    ThresholdOutOfRange(f64),

    #[error("mask is not binary: value {value} at index {index}")]
    NonBinaryMask { index: usize, value: f64 },

    #[error("image {h}x{w} smaller than the {window}x{window} SSIM window")]
    WindowTooLarge { h: usize, w: usize, window: usize },

    #[error("range tags differ: {a:?} vs {b:?}")]
    RangeTagMismatch {
        a: crate::buffer::RangeTag,
        b: crate::buffer::RangeTag,
    },

    #[error("failed to read {path}: {source}")]
    Read {
        path: PathBuf,
        source: image::ImageError,
    },

    #[error("failed to write {path}: {source}")]
    Write {
        path: PathBuf,
        source: image::ImageError,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
