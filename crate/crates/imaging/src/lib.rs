//! Pixel-level compositing of overlaid visual motifs and image quality metrics.
//!
//! A *visual motif* is an object (text, logo, drawing) matted onto a host
//! image with a spatially varying transparency field. This crate provides the
//! carrier types for that math — [`ImageBuffer`], [`AlphaMatte`],
//! [`MotifMask`] — together with the three compositing operations:
//!
//! * [`embed_motif`]: `Cr = α ∘ Vm + (1 − α) ∘ Im`
//! * [`recover_latent`]: `Im = (Cr − α ∘ Vm) / (1 − α)`, the exact inverse
//!   when `α` stays away from full opacity
//! * [`compose_final`]: `Im_final = (1 − Ma) ∘ Cr + Ma ∘ Im_hat`, the
//!   mask-gated recomposition used when removing a motif
//!
//! plus PSNR/SSIM quality metrics (whole-image and mask-restricted) and 8-bit
//! PNG persistence. All operations are pure functions on immutable inputs and
//! may be called concurrently from any number of threads.

pub mod buffer;
pub mod compose;
pub mod error;
pub mod io;
pub mod metrics;
pub mod par;

pub use buffer::{AlphaMatte, ImageBuffer, MotifMask, RangeTag};
pub use compose::{binarize_mask, compose_final, embed_motif, recover_latent, EPS_SINGULAR};
pub use error::{ImagingError, Result};
pub use metrics::{mask_iou, psnr, psnr_masked, ssim, ssim_masked, MetricReport};
