//! Data-parallel loop helpers with a sequential fallback.
//!
//! Every parallel loop in the workspace goes through these three functions.
//! Work is split into chunks whose boundaries depend only on the data size,
//! never on the worker count, and chunk-local results are combined in index
//! order. Outputs are therefore bit-identical for any number of threads, and
//! identical between the `parallel` feature and the sequential fallback.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Apply `f` to consecutive chunks of `data` of length `chunk_len` (the last
/// chunk may be shorter). `f` receives the chunk index and the chunk.
pub fn chunks_mut<T, F>(data: &mut [T], chunk_len: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    assert!(chunk_len > 0, "chunk_len must be positive");
    #[cfg(feature = "parallel")]
    {
        data.par_chunks_mut(chunk_len)
            .enumerate()
            .for_each(|(i, c)| f(i, c));
    }
    #[cfg(not(feature = "parallel"))]
    {
        data.chunks_mut(chunk_len).enumerate().for_each(|(i, c)| f(i, c));
    }
}

/// Apply `f` to paired chunks of a mutable output and a read-only companion
/// slice. `out` is split every `out_chunk` elements and `aux` every
/// `aux_chunk`; both must produce the same number of chunks.
pub fn zip_chunks_mut<T, U, F>(out: &mut [T], out_chunk: usize, aux: &[U], aux_chunk: usize, f: F)
where
    T: Send,
    U: Sync,
    F: Fn(usize, &mut [T], &[U]) + Sync,
{
    assert!(out_chunk > 0 && aux_chunk > 0);
    assert_eq!(
        out.len().div_ceil(out_chunk),
        aux.len().div_ceil(aux_chunk),
        "chunk counts differ"
    );
    #[cfg(feature = "parallel")]
    {
        out.par_chunks_mut(out_chunk)
            .zip(aux.par_chunks(aux_chunk))
            .enumerate()
            .for_each(|(i, (o, a))| f(i, o, a));
    }
    #[cfg(not(feature = "parallel"))]
    {
        out.chunks_mut(out_chunk)
            .zip(aux.chunks(aux_chunk))
            .enumerate()
            .for_each(|(i, (o, a))| f(i, o, a));
    }
}

/// Map chunk indices `0..n` to values, collected in index order.
pub fn map_indexed<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_everything() {
        let mut v = vec![0usize; 103];
        chunks_mut(&mut v, 10, |i, c| {
            for (j, x) in c.iter_mut().enumerate() {
                *x = i * 10 + j;
            }
        });
        for (i, x) in v.iter().enumerate() {
            assert_eq!(*x, i);
        }
    }

    #[test]
    fn zip_chunks_align() {
        let aux: Vec<usize> = (0..40).collect();
        let mut out = vec![0usize; 20];
        zip_chunks_mut(&mut out, 5, &aux, 10, |_, o, a| {
            for (x, pair) in o.iter_mut().zip(a.chunks(2)) {
                *x = pair[0] + pair[1];
            }
        });
        for (i, x) in out.iter().enumerate() {
            assert_eq!(*x, 4 * i + 1);
        }
    }

    #[test]
    fn map_indexed_ordered() {
        let v = map_indexed(17, |i| i * i);
        assert_eq!(v[16], 256);
        assert_eq!(v.len(), 17);
    }
}
