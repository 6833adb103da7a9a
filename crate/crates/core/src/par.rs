//! Order-preserving data-parallel helpers. With the `parallel` feature they
//! run on the rayon pool; without it they fall back to plain iterators.
//! Output order always matches input order.

pub fn map_sequential<A, B>(items: &[A], f: impl Fn(&A) -> B) -> Vec<B> {
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map<A: Sync, B: Send>(items: &[A], f: impl Fn(&A) -> B + Sync + Send) -> Vec<B> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<A: Sync, B: Send>(items: &[A], f: impl Fn(&A) -> B + Sync + Send) -> Vec<B> {
    map_sequential(items, f)
}

/// `f(0), f(1), …, f(n − 1)`.
pub fn map_range<B: Send>(n: usize, f: impl Fn(usize) -> B + Sync + Send) -> Vec<B> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

pub fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
