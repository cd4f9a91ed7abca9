//! Ordered scans over candidate lists. With the `parallel` feature the
//! work inside each batch is spread over rayon's pool, but results are
//! always reported as if the scan were sequential.

use alloc::vec::Vec;

use crate::error::Result;

#[cfg(feature = "parallel")]
const BATCH: usize = 512;

/// First `Some` produced by `f` in iteration order, with the position of
/// the item that produced it. An error before that position is returned.
pub(crate) fn first_some<I, T, R, F>(iter: I, f: F) -> Result<Option<(usize, R)>>
where
    I: Iterator<Item = T>,
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> Result<Option<R>> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let mut iter = iter;
        let mut base = 0;
        loop {
            let batch: Vec<T> = iter.by_ref().take(BATCH).collect();
            if batch.is_empty() {
                return Ok(None);
            }
            let hit = batch
                .par_iter()
                .enumerate()
                .find_map_first(|(k, t)| match f(t) {
                    Ok(None) => None,
                    Ok(Some(r)) => Some(Ok((k, r))),
                    Err(e) => Some(Err(e)),
                });
            match hit {
                Some(Ok((k, r))) => return Ok(Some((base + k, r))),
                Some(Err(e)) => return Err(e),
                None => base += batch.len(),
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        for (k, t) in iter.enumerate() {
            if let Some(r) = f(&t)? {
                return Ok(Some((k, r)));
            }
        }
        Ok(None)
    }
}

/// Any `Some` produced by `f`; which one is unspecified under `parallel`.
pub(crate) fn any_some<I, T, R, F>(iter: I, f: F) -> Result<Option<R>>
where
    I: Iterator<Item = T>,
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> Result<Option<R>> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        let mut iter = iter;
        loop {
            let batch: Vec<T> = iter.by_ref().take(BATCH).collect();
            if batch.is_empty() {
                return Ok(None);
            }
            let hit = batch.par_iter().find_map_any(|t| match f(t) {
                Ok(None) => None,
                Ok(Some(r)) => Some(Ok(r)),
                Err(e) => Some(Err(e)),
            });
            if let Some(h) = hit {
                return h.map(Some);
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok(first_some(iter, f)?.map(|(_, r)| r))
    }
}

/// `f` applied to every item, in order.
pub(crate) fn map_all<T, R, F>(items: &[T], f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}
