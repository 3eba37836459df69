//! Property tests for the compositing equations.

use demotif_imaging::{
    compose_final, embed_motif, recover_latent, AlphaMatte, ImageBuffer, MotifMask, RangeTag,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_triple(rng: &mut ChaCha8Rng, h: usize, w: usize) -> (ImageBuffer, ImageBuffer, AlphaMatte) {
    let n = h * w;
    let im: Vec<f64> = (0..n * 3).map(|_| rng.random_range(0.0..=1.0)).collect();
    let vm: Vec<f64> = (0..n * 3).map(|_| rng.random_range(0.0..=1.0)).collect();
    let al: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..=0.9)).collect();
    (
        ImageBuffer::from_vec(h, w, 3, RangeTag::Unit, im).unwrap(),
        ImageBuffer::from_vec(h, w, 3, RangeTag::Unit, vm).unwrap(),
        AlphaMatte::from_vec(h, w, al).unwrap(),
    )
}

/// Embed-then-recover is the identity to within 1e-5 sup-norm for
/// alpha in [0, 0.9], over 1000 randomized trials.
#[test]
fn roundtrip_recovery_1000_trials() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..1000 {
        let (im, vm, alpha) = random_triple(&mut rng, 12, 17);
        let cr = embed_motif(&im, &vm, &alpha).unwrap();
        let rec = recover_latent(&cr, &vm, &alpha).unwrap();
        let sup = im
            .data()
            .iter()
            .zip(rec.data())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(sup < 1e-5, "trial {trial}: sup-norm {sup}");
    }
}

proptest! {
    /// Cr is a convex combination: min(Im, Vm) <= Cr <= max(Im, Vm) pixelwise.
    #[test]
    fn embed_is_convex(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (im, vm, alpha) = random_triple(&mut rng, 6, 6);
        let cr = embed_motif(&im, &vm, &alpha).unwrap();
        for i in 0..cr.data().len() {
            let (a, b) = (im.data()[i], vm.data()[i]);
            let (lo, hi) = (a.min(b), a.max(b));
            prop_assert!(cr.data()[i] >= lo - 1e-12 && cr.data()[i] <= hi + 1e-12);
        }
    }

    /// Pixels with Ma_hat = 0 stay bit-identical through compose_final.
    #[test]
    fn compose_final_locality(seed in 0u64..1000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (cr, im_hat, _) = random_triple(&mut rng, 6, 6);
        let mask_vals: Vec<f64> = (0..36)
            .map(|_| if rng.random_bool(0.5) { rng.random_range(0.0f64..=1.0) } else { 0.0 })
            .collect();
        let ma = MotifMask::from_vec(6, 6, mask_vals).unwrap();
        let out = compose_final(&cr, &im_hat, &ma).unwrap();
        for i in 0..36 {
            if ma.data()[i] == 0.0 {
                for ch in 0..3 {
                    prop_assert_eq!(
                        out.data()[i * 3 + ch].to_bits(),
                        cr.data()[i * 3 + ch].to_bits()
                    );
                }
            }
        }
    }

    /// recover_latent clamps to range but stays the exact inverse inside it.
    #[test]
    fn recovery_inverse_random_sizes(seed in 0u64..200, h in 4usize..16, w in 4usize..16) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (im, vm, alpha) = random_triple(&mut rng, h, w);
        let cr = embed_motif(&im, &vm, &alpha).unwrap();
        let rec = recover_latent(&cr, &vm, &alpha).unwrap();
        for (a, b) in im.data().iter().zip(rec.data()) {
            prop_assert!((a - b).abs() < 1e-5);
        }
    }
}

#[test]
fn ssim_symmetry_100_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..100 {
        let (a, b, _) = random_triple(&mut rng, 16, 16);
        let f = demotif_imaging::ssim(&a, &b).unwrap();
        let r = demotif_imaging::ssim(&b, &a).unwrap();
        assert!((f - r).abs() < 1e-12);
        assert!((-1.0..=1.0).contains(&f));
    }
}
