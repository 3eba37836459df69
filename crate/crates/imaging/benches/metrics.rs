//! Compositing and metric throughput. Run with and without the default
//! `parallel` feature to compare against the sequential fallback:
//!
//! ```text
//! cargo bench -p demotif-imaging
//! cargo bench -p demotif-imaging --no-default-features
//! ```

use criterion::{criterion_group, criterion_main, Criterion};
use demotif_imaging::{embed_motif, psnr, recover_latent, ssim, AlphaMatte, ImageBuffer, RangeTag};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::hint::black_box;

fn fixtures(h: usize, w: usize) -> (ImageBuffer, ImageBuffer, AlphaMatte) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
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

fn bench_metrics(c: &mut Criterion) {
    let (im, vm, alpha) = fixtures(512, 512);
    let cr = embed_motif(&im, &vm, &alpha).unwrap();

    c.bench_function("embed_motif_512", |b| {
        b.iter(|| black_box(embed_motif(&im, &vm, &alpha).unwrap()))
    });
    c.bench_function("recover_latent_512", |b| {
        b.iter(|| black_box(recover_latent(&cr, &vm, &alpha).unwrap()))
    });
    c.bench_function("psnr_512", |b| b.iter(|| black_box(psnr(&cr, &im).unwrap())));
    c.bench_function("ssim_512", |b| b.iter(|| black_box(ssim(&cr, &im).unwrap())));
}

criterion_group!(benches, bench_metrics);
criterion_main!(benches);
