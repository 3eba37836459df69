//! Carrier types: images, alpha mattes, and motif masks.

use crate::error::{ImagingError, Result};

/// Declared value range of an [`ImageBuffer`].
///
/// Dataset files are 8-bit and load into `Unit`; network heads with a tanh
/// activation produce `Signed` buffers. Metrics always convert to `Unit`
/// before comparing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RangeTag {
    /// Values in `[0, 1]`.
    Unit,
    /// Values in `[-1, 1]`.
    Signed,
}

impl RangeTag {
    pub fn bounds(self) -> (f64, f64) {
        match self {
            RangeTag::Unit => (0.0, 1.0),
            RangeTag::Signed => (-1.0, 1.0),
        }
    }
}

/// An H×W×C raster of real values in a declared range, stored row-major with
/// interleaved channels. Compositing arithmetic is done in f64.
#[derive(Debug, Clone, PartialEq)]
pub struct ImageBuffer {
    height: usize,
    width: usize,
    channels: usize,
    range: RangeTag,
    data: Vec<f64>,
}

impl ImageBuffer {
    /// Zero-filled buffer. Zero is inside both declared ranges.
    pub fn new(height: usize, width: usize, channels: usize, range: RangeTag) -> Result<Self> {
        if channels != 1 && channels != 3 {
            return Err(ImagingError::UnsupportedChannels(channels));
        }
        Ok(Self {
            height,
            width,
            channels,
            range,
            data: vec![0.0; height * width * channels],
        })
    }

    /// Build from raw data, validating length and range bounds.
    pub fn from_vec(
        height: usize,
        width: usize,
        channels: usize,
        range: RangeTag,
        data: Vec<f64>,
    ) -> Result<Self> {
        if channels != 1 && channels != 3 {
            return Err(ImagingError::UnsupportedChannels(channels));
        }
        let expected = height * width * channels;
        if data.len() != expected {
            return Err(ImagingError::LengthMismatch {
                h: height,
                w: width,
                c: channels,
                expected,
                got: data.len(),
            });
        }
        let buf = Self {
            height,
            width,
            channels,
            range,
            data,
        };
        buf.validate()?;
        Ok(buf)
    }

    /// Check every value against the declared range bounds.
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.range.bounds();
        for (i, &v) in self.data.iter().enumerate() {
            if !v.is_finite() || v < lo || v > hi {
                return Err(ImagingError::ValueOutOfRange { index: i, value: v, lo, hi });
            }
        }
        Ok(())
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn channels(&self) -> usize {
        self.channels
    }

    pub fn range(&self) -> RangeTag {
        self.range
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.height, self.width, self.channels)
    }

    pub fn pixel_count(&self) -> usize {
        self.height * self.width
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize, c: usize) -> f64 {
        self.data[(y * self.width + x) * self.channels + c]
    }

    #[inline]
    pub fn set(&mut self, y: usize, x: usize, c: usize, v: f64) {
        self.data[(y * self.width + x) * self.channels + c] = v;
    }

    /// Convert to unit range. Signed values map through `(x + 1) / 2`.
    pub fn to_unit(&self) -> ImageBuffer {
        match self.range {
            RangeTag::Unit => self.clone(),
            RangeTag::Signed => {
                let data = self.data.iter().map(|&v| (v + 1.0) * 0.5).collect();
                ImageBuffer {
                    range: RangeTag::Unit,
                    data,
                    ..*self
                }
            }
        }
    }

    /// Convert to signed range. Unit values map through `2x - 1`.
    pub fn to_signed(&self) -> ImageBuffer {
        match self.range {
            RangeTag::Signed => self.clone(),
            RangeTag::Unit => {
                let data = self.data.iter().map(|&v| 2.0 * v - 1.0).collect();
                ImageBuffer {
                    range: RangeTag::Signed,
                    data,
                    ..*self
                }
            }
        }
    }

    /// Crop a window; all callers guarantee the window fits.
    pub fn crop(&self, top: usize, left: usize, h: usize, w: usize) -> Result<ImageBuffer> {
        if top + h > self.height || left + w > self.width {
            return Err(ImagingError::ShapeMismatch {
                context: "crop window",
                expected_h: self.height,
                expected_w: self.width,
                expected_c: self.channels,
                got_h: top + h,
                got_w: left + w,
                got_c: self.channels,
            });
        }
        let mut data = Vec::with_capacity(h * w * self.channels);
        for y in 0..h {
            let row = ((top + y) * self.width + left) * self.channels;
            data.extend_from_slice(&self.data[row..row + w * self.channels]);
        }
        Ok(ImageBuffer {
            height: h,
            width: w,
            channels: self.channels,
            range: self.range,
            data,
        })
    }

    pub(crate) fn same_shape(&self, other: &ImageBuffer, context: &'static str) -> Result<()> {
        if self.dims() != other.dims() {
            let (gh, gw, gc) = other.dims();
            return Err(ImagingError::ShapeMismatch {
                context,
                expected_h: self.height,
                expected_w: self.width,
                expected_c: self.channels,
                got_h: gh,
                got_w: gw,
                got_c: gc,
            });
        }
        Ok(())
    }
}

/// Per-pixel transparency field controlling the blend of motif over
/// background. Values lie in `[0, 1]`; full opacity (`α = 1`) is the
/// inpainting regime in which [`crate::recover_latent`] refuses to divide.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaMatte {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

impl AlphaMatte {
    pub fn new(height: usize, width: usize) -> Self {
        Self {
            height,
            width,
            data: vec![0.0; height * width],
        }
    }

    pub fn from_vec(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != height * width {
            return Err(ImagingError::LengthMismatch {
                h: height,
                w: width,
                c: 1,
                expected: height * width,
                got: data.len(),
            });
        }
        for (i, &v) in data.iter().enumerate() {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(ImagingError::ValueOutOfRange {
                    index: i,
                    value: v,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
        }
        Ok(Self { height, width, data })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize) -> f64 {
        self.data[y * self.width + x]
    }

    pub fn max_value(&self) -> f64 {
        self.data.iter().cloned().fold(0.0, f64::max)
    }

    pub fn crop(&self, top: usize, left: usize, h: usize, w: usize) -> Result<AlphaMatte> {
        let mut data = Vec::with_capacity(h * w);
        if top + h > self.height || left + w > self.width {
            return Err(ImagingError::ShapeMismatch {
                context: "crop window",
                expected_h: self.height,
                expected_w: self.width,
                expected_c: 1,
                got_h: top + h,
                got_w: left + w,
                got_c: 1,
            });
        }
        for y in 0..h {
            let row = (top + y) * self.width + left;
            data.extend_from_slice(&self.data[row..row + w]);
        }
        Ok(AlphaMatte {
            height: h,
            width: w,
            data,
        })
    }
}

/// Binary indicator of motif pixels (`α > 0`), or its soft network estimate.
///
/// Ground-truth masks contain only `{0, 1}`; estimates lie in `(0, 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MotifMask {
    height: usize,
    width: usize,
    data: Vec<f64>,
}

impl MotifMask {
    pub fn new(height: usize, width: usize) -> Self {
        Self {
            height,
            width,
            data: vec![0.0; height * width],
        }
    }

    pub fn from_vec(height: usize, width: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != height * width {
            return Err(ImagingError::LengthMismatch {
                h: height,
                w: width,
                c: 1,
                expected: height * width,
                got: data.len(),
            });
        }
        for (i, &v) in data.iter().enumerate() {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(ImagingError::ValueOutOfRange {
                    index: i,
                    value: v,
                    lo: 0.0,
                    hi: 1.0,
                });
            }
        }
        Ok(Self { height, width, data })
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize) -> f64 {
        self.data[y * self.width + x]
    }

    /// True when every value is exactly 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|&v| v == 0.0 || v == 1.0)
    }

    /// Reject non-binary masks; used where a ground-truth mask is required.
    pub fn require_binary(&self) -> Result<()> {
        for (i, &v) in self.data.iter().enumerate() {
            if v != 0.0 && v != 1.0 {
                return Err(ImagingError::NonBinaryMask { index: i, value: v });
            }
        }
        Ok(())
    }

    /// `|Ma|`: the size of the mask in pixels.
    pub fn count_ones(&self) -> usize {
        self.data.iter().filter(|&&v| v > 0.0).count()
    }

    pub fn crop(&self, top: usize, left: usize, h: usize, w: usize) -> Result<MotifMask> {
        if top + h > self.height || left + w > self.width {
            return Err(ImagingError::ShapeMismatch {
                context: "crop window",
                expected_h: self.height,
                expected_w: self.width,
                expected_c: 1,
                got_h: top + h,
                got_w: left + w,
                got_c: 1,
            });
        }
        let mut data = Vec::with_capacity(h * w);
        for y in 0..h {
            let row = (top + y) * self.width + left;
            data.extend_from_slice(&self.data[row..row + w]);
        }
        Ok(MotifMask {
            height: h,
            width: w,
            data,
        })
    }
}
