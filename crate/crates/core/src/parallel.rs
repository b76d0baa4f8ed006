use rayon::prelude::*;

/// Maps `f` over `items` on `jobs` worker threads, keeping input order.
/// Each result is paired with its input.
pub(crate) fn par_map<T, U, F>(items: Vec<T>, jobs: usize, f: F) -> Vec<(T, U)>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Send + Sync,
{
    if jobs <= 1 || items.len() <= 1 {
        return items.into_iter().map(|x| {
            let y = f(&x);
            (x, y)
        }).collect();
    }
    let results: Vec<U> = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
        Err(_) => items.par_iter().map(&f).collect(),
    };
    items.into_iter().zip(results).collect()
}
