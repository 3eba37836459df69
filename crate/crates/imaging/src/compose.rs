//! The compositing equations: motif embedding, latent recovery, and
//! mask-gated recomposition.

use crate::buffer::{AlphaMatte, ImageBuffer, MotifMask};
use crate::error::{ImagingError, Result};

/// Refuse latent recovery when `α > 1 − EPS_SINGULAR`. Near full opacity the
/// division blows up, and fully opaque motifs are the inpainting regime where
/// the inverse is undefined.
pub const EPS_SINGULAR: f64 = 1e-3;

fn check_alpha_shape(im: &ImageBuffer, alpha: &AlphaMatte, context: &'static str) -> Result<()> {
    if im.height() != alpha.height() || im.width() != alpha.width() {
        return Err(ImagingError::ShapeMismatch {
            context,
            expected_h: im.height(),
            expected_w: im.width(),
            expected_c: 1,
            got_h: alpha.height(),
            got_w: alpha.width(),
            got_c: 1,
        });
    }
    Ok(())
}

fn check_mask_shape(im: &ImageBuffer, mask: &MotifMask, context: &'static str) -> Result<()> {
    if im.height() != mask.height() || im.width() != mask.width() {
        return Err(ImagingError::ShapeMismatch {
            context,
            expected_h: im.height(),
            expected_w: im.width(),
            expected_c: 1,
            got_h: mask.height(),
            got_w: mask.width(),
            got_c: 1,
        });
    }
    Ok(())
}

/// Matte a motif onto an image: `Cr_i = α_i·Vm_i + (1 − α_i)·Im_i` per pixel
/// and channel, with the alpha value broadcast across channels.
pub fn embed_motif(im: &ImageBuffer, vm: &ImageBuffer, alpha: &AlphaMatte) -> Result<ImageBuffer> {
    im.same_shape(vm, "embed_motif(im, vm)")?;
    check_alpha_shape(im, alpha, "embed_motif(im, alpha)")?;
    if im.range() != vm.range() {
        return Err(ImagingError::RangeTagMismatch {
            a: im.range(),
            b: vm.range(),
        });
    }

    let c = im.channels();
    let mut out = im.clone();
    let a = alpha.data();
    let vm_d = vm.data();
    let im_d = im.data();
    for (i, px) in out.data_mut().chunks_mut(c).enumerate() {
        let al = a[i];
        for (ch, v) in px.iter_mut().enumerate() {
            *v = al * vm_d[i * c + ch] + (1.0 - al) * im_d[i * c + ch];
        }
    }
    Ok(out)
}

/// Invert [`embed_motif`]: `Im_i = (Cr_i − α_i·Vm_i) / (1 − α_i)`.
///
/// Requires `α ≤ 1 − EPS_SINGULAR` everywhere. The output is clamped to the
/// declared range, absorbing floating-point residue at high opacity.
pub fn recover_latent(cr: &ImageBuffer, vm: &ImageBuffer, alpha: &AlphaMatte) -> Result<ImageBuffer> {
    cr.same_shape(vm, "recover_latent(cr, vm)")?;
    check_alpha_shape(cr, alpha, "recover_latent(cr, alpha)")?;

    let limit = 1.0 - EPS_SINGULAR;
    let max_alpha = alpha.max_value();
    if max_alpha > limit {
        return Err(ImagingError::SingularAlpha { max_alpha, limit });
    }

    let (lo, hi) = cr.range().bounds();
    let c = cr.channels();
    let mut out = cr.clone();
    let a = alpha.data();
    let vm_d = vm.data();
    let cr_d = cr.data();
    for (i, px) in out.data_mut().chunks_mut(c).enumerate() {
        let al = a[i];
        let inv = 1.0 / (1.0 - al);
        for (ch, v) in px.iter_mut().enumerate() {
            let idx = i * c + ch;
            *v = ((cr_d[idx] - al * vm_d[idx]) * inv).clamp(lo, hi);
        }
    }
    Ok(out)
}

/// Mask-gated recomposition: `Im_final = (1 − Ma_hat) ∘ Cr + Ma_hat ∘ Im_hat`.
///
/// The soft estimate is applied directly; pixels with `Ma_hat = 0` are
/// bit-identical to the input.
pub fn compose_final(cr: &ImageBuffer, im_hat: &ImageBuffer, ma_hat: &MotifMask) -> Result<ImageBuffer> {
    cr.same_shape(im_hat, "compose_final(cr, im_hat)")?;
    check_mask_shape(cr, ma_hat, "compose_final(cr, ma_hat)")?;

    let c = cr.channels();
    let mut out = cr.clone();
    let m = ma_hat.data();
    let hat = im_hat.data();
    let cr_d = cr.data();
    for (i, px) in out.data_mut().chunks_mut(c).enumerate() {
        let w = m[i];
        if w == 0.0 {
            continue; // keep Cr bytes untouched
        }
        for (ch, v) in px.iter_mut().enumerate() {
            let idx = i * c + ch;
            *v = (1.0 - w) * cr_d[idx] + w * hat[idx];
        }
    }
    Ok(out)
}

/// Threshold a soft mask: `out_i = 1` iff `ma_hat_i ≥ threshold`.
pub fn binarize_mask(ma_hat: &MotifMask, threshold: f64) -> Result<MotifMask> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(ImagingError::ThresholdOutOfRange(threshold));
    }
    let data = ma_hat
        .data()
        .iter()
        .map(|&v| if v >= threshold { 1.0 } else { 0.0 })
        .collect();
    MotifMask::from_vec(ma_hat.height(), ma_hat.width(), data)
}
