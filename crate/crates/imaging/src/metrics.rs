//! PSNR and SSIM image quality metrics, whole-image and mask-restricted.
//!
//! Both metrics convert their inputs to unit range first, so signed buffers
//! from tanh network heads compare correctly against 8-bit ground truth.
//! PSNR is capped at 100 dB to keep reports finite and comparable. SSIM uses
//! the standard formulation: an 11×11 Gaussian window with σ = 1.5,
//! K1 = 0.01, K2 = 0.03 and dynamic range L = 1, averaged over all window
//! positions where the full window fits.

use crate::buffer::{ImageBuffer, MotifMask};
use crate::error::{ImagingError, Result};

pub const SSIM_WINDOW: usize = 11;
const SSIM_SIGMA: f64 = 1.5;
const SSIM_K1: f64 = 0.01;
const SSIM_K2: f64 = 0.03;
/// MSE below this counts as "identical" and reports the 100 dB cap.
const PSNR_MSE_FLOOR: f64 = 1e-10;
pub const PSNR_CAP_DB: f64 = 100.0;

/// Quality summary for one image pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricReport {
    pub psnr_db: f64,
    pub ssim: f64,
    /// Number of pixels the metrics were computed over.
    pub pixel_count: usize,
}

impl MetricReport {
    pub fn compute(a: &ImageBuffer, b: &ImageBuffer) -> Result<MetricReport> {
        Ok(MetricReport {
            psnr_db: psnr(a, b)?,
            ssim: ssim(a, b)?,
            pixel_count: a.pixel_count(),
        })
    }
}

fn check_pair(a: &ImageBuffer, b: &ImageBuffer, context: &'static str) -> Result<()> {
    a.same_shape(b, context)?;
    if a.range() != b.range() {
        return Err(ImagingError::RangeTagMismatch {
            a: a.range(),
            b: b.range(),
        });
    }
    Ok(())
}

/// Peak signal-to-noise ratio in dB with peak value 1.0, capped at 100 dB.
pub fn psnr(a: &ImageBuffer, b: &ImageBuffer) -> Result<f64> {
    check_pair(a, b, "psnr")?;
    let a = a.to_unit();
    let b = b.to_unit();
    let mse = a
        .data()
        .iter()
        .zip(b.data())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        / a.data().len() as f64;
    Ok(psnr_from_mse(mse))
}

/// PSNR restricted to ground-truth mask pixels. `None` when the mask is empty.
pub fn psnr_masked(a: &ImageBuffer, b: &ImageBuffer, mask: &MotifMask) -> Result<Option<f64>> {
    check_pair(a, b, "psnr_masked")?;
    mask.require_binary()?;
    if a.height() != mask.height() || a.width() != mask.width() {
        return Err(ImagingError::ShapeMismatch {
            context: "psnr_masked(mask)",
            expected_h: a.height(),
            expected_w: a.width(),
            expected_c: 1,
            got_h: mask.height(),
            got_w: mask.width(),
            got_c: 1,
        });
    }
    let a = a.to_unit();
    let b = b.to_unit();
    let c = a.channels();
    let mut se = 0.0;
    let mut n = 0usize;
    for (i, &m) in mask.data().iter().enumerate() {
        if m > 0.0 {
            for ch in 0..c {
                let d = a.data()[i * c + ch] - b.data()[i * c + ch];
                se += d * d;
            }
            n += 1;
        }
    }
    if n == 0 {
        return Ok(None);
    }
    Ok(Some(psnr_from_mse(se / (n * c) as f64)))
}

fn psnr_from_mse(mse: f64) -> f64 {
    if mse < PSNR_MSE_FLOOR {
        PSNR_CAP_DB
    } else {
        (10.0 * (1.0 / mse).log10()).min(PSNR_CAP_DB)
    }
}

fn gaussian_kernel() -> [f64; SSIM_WINDOW] {
    let mut k = [0.0; SSIM_WINDOW];
    let c = (SSIM_WINDOW / 2) as f64;
    let mut sum = 0.0;
    for (i, v) in k.iter_mut().enumerate() {
        let d = i as f64 - c;
        *v = (-d * d / (2.0 * SSIM_SIGMA * SSIM_SIGMA)).exp();
        sum += *v;
    }
    for v in k.iter_mut() {
        *v /= sum;
    }
    k
}

/// Separable Gaussian filtering restricted to positions where the full
/// window fits. Output is (h − 10) × (w − 10).
fn filter_valid(plane: &[f64], h: usize, w: usize, k: &[f64; SSIM_WINDOW]) -> Vec<f64> {
    let vw = w - SSIM_WINDOW + 1;
    let vh = h - SSIM_WINDOW + 1;
    let mut horiz = vec![0.0; h * vw];
    for y in 0..h {
        let row = &plane[y * w..(y + 1) * w];
        let out = &mut horiz[y * vw..(y + 1) * vw];
        for (u, o) in out.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (t, &kv) in k.iter().enumerate() {
                acc += kv * row[u + t];
            }
            *o = acc;
        }
    }
    let mut out = vec![0.0; vh * vw];
    for v in 0..vh {
        for u in 0..vw {
            let mut acc = 0.0;
            for (t, &kv) in k.iter().enumerate() {
                acc += kv * horiz[(v + t) * vw + u];
            }
            out[v * vw + u] = acc;
        }
    }
    out
}

/// Local SSIM map for one channel plane pair, over valid window positions.
fn ssim_map(pa: &[f64], pb: &[f64], h: usize, w: usize) -> Vec<f64> {
    let k = gaussian_kernel();
    let n = pa.len();
    let mut aa = vec![0.0; n];
    let mut bb = vec![0.0; n];
    let mut ab = vec![0.0; n];
    for i in 0..n {
        aa[i] = pa[i] * pa[i];
        bb[i] = pb[i] * pb[i];
        ab[i] = pa[i] * pb[i];
    }
    let mu_a = filter_valid(pa, h, w, &k);
    let mu_b = filter_valid(pb, h, w, &k);
    let m_aa = filter_valid(&aa, h, w, &k);
    let m_bb = filter_valid(&bb, h, w, &k);
    let m_ab = filter_valid(&ab, h, w, &k);

    let c1 = (SSIM_K1 * 1.0_f64).powi(2);
    let c2 = (SSIM_K2 * 1.0_f64).powi(2);
    let mut map = vec![0.0; mu_a.len()];
    for i in 0..map.len() {
        let (ma, mb) = (mu_a[i], mu_b[i]);
        let var_a = (m_aa[i] - ma * ma).max(0.0);
        let var_b = (m_bb[i] - mb * mb).max(0.0);
        let cov = m_ab[i] - ma * mb;
        map[i] = ((2.0 * ma * mb + c1) * (2.0 * cov + c2))
            / ((ma * ma + mb * mb + c1) * (var_a + var_b + c2));
    }
    map
}

fn channel_planes(img: &ImageBuffer) -> Vec<Vec<f64>> {
    let c = img.channels();
    let n = img.pixel_count();
    let mut planes = vec![vec![0.0; n]; c];
    for i in 0..n {
        for ch in 0..c {
            planes[ch][i] = img.data()[i * c + ch];
        }
    }
    planes
}

/// Mean structural similarity over the image, averaged across channels.
/// Symmetric in its arguments; `ssim(x, x) = 1`.
pub fn ssim(a: &ImageBuffer, b: &ImageBuffer) -> Result<f64> {
    check_pair(a, b, "ssim")?;
    let (h, w, _) = a.dims();
    if h < SSIM_WINDOW || w < SSIM_WINDOW {
        return Err(ImagingError::WindowTooLarge { h, w, window: SSIM_WINDOW });
    }
    let a = a.to_unit();
    let b = b.to_unit();
    let pa = channel_planes(&a);
    let pb = channel_planes(&b);
    let mut total = 0.0;
    for ch in 0..a.channels() {
        let map = ssim_map(&pa[ch], &pb[ch], h, w);
        total += map.iter().sum::<f64>() / map.len() as f64;
    }
    Ok(total / a.channels() as f64)
}

/// SSIM averaged over windows centered on mask pixels. `None` when no valid
/// window center lies inside the mask.
pub fn ssim_masked(a: &ImageBuffer, b: &ImageBuffer, mask: &MotifMask) -> Result<Option<f64>> {
    check_pair(a, b, "ssim_masked")?;
    mask.require_binary()?;
    let (h, w, _) = a.dims();
    if h < SSIM_WINDOW || w < SSIM_WINDOW {
        return Err(ImagingError::WindowTooLarge { h, w, window: SSIM_WINDOW });
    }
    let a = a.to_unit();
    let b = b.to_unit();
    let pa = channel_planes(&a);
    let pb = channel_planes(&b);
    let half = SSIM_WINDOW / 2;
    let vw = w - SSIM_WINDOW + 1;
    let vh = h - SSIM_WINDOW + 1;
    let mut total = 0.0;
    let mut count = 0usize;
    for ch in 0..a.channels() {
        let map = ssim_map(&pa[ch], &pb[ch], h, w);
        for v in 0..vh {
            for u in 0..vw {
                if mask.get(v + half, u + half) > 0.0 {
                    total += map[v * vw + u];
                    count += 1;
                }
            }
        }
    }
    if count == 0 {
        return Ok(None);
    }
    Ok(Some(total / count as f64))
}

/// Intersection-over-union of two binary masks. Both empty counts as 1.
pub fn mask_iou(pred: &MotifMask, truth: &MotifMask) -> Result<f64> {
    pred.require_binary()?;
    truth.require_binary()?;
    if pred.height() != truth.height() || pred.width() != truth.width() {
        return Err(ImagingError::ShapeMismatch {
            context: "mask_iou",
            expected_h: truth.height(),
            expected_w: truth.width(),
            expected_c: 1,
            got_h: pred.height(),
            got_w: pred.width(),
            got_c: 1,
        });
    }
    let mut inter = 0usize;
    let mut union = 0usize;
    for (&p, &t) in pred.data().iter().zip(truth.data()) {
        let p = p > 0.0;
        let t = t > 0.0;
        if p && t {
            inter += 1;
        }
        if p || t {
            union += 1;
        }
    }
    if union == 0 {
        return Ok(1.0);
    }
    Ok(inter as f64 / union as f64)
}
