//! Minimal worker-pool helpers for the exhaustive scans.
//!
//! Results are combined with order-independent reductions (logical
//! and/or, sums), so outputs are identical for any worker count.  The
//! count defaults to 1 and can be raised globally (the CLI wires its
//! `--jobs` flag here).

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

static JOBS: AtomicUsize = AtomicUsize::new(1);

/// Sets the global worker count (clamped to at least 1).
pub fn set_jobs(n: usize) {
    JOBS.store(n.max(1), Ordering::Relaxed);
}

pub fn jobs() -> usize {
    JOBS.load(Ordering::Relaxed)
}

/// `items.iter().all(pred)` over disjoint chunks, with early exit.
pub fn all<T: Sync, F: Fn(&T) -> bool + Sync>(items: &[T], pred: F) -> bool {
    let workers = jobs().min(items.len().max(1));
    if workers <= 1 {
        return items.iter().all(pred);
    }
    let failed = AtomicBool::new(false);
    let chunk = items.len().div_ceil(workers);
    std::thread::scope(|scope| {
        for part in items.chunks(chunk) {
            let failed = &failed;
            let pred = &pred;
            scope.spawn(move || {
                for item in part {
                    if failed.load(Ordering::Relaxed) {
                        return;
                    }
                    if !pred(item) {
                        failed.store(true, Ordering::Relaxed);
                        return;
                    }
                }
            });
        }
    });
    !failed.load(Ordering::Relaxed)
}

/// `(0..total).all(pred)` over disjoint index ranges, with early exit.
pub fn all_indices<F: Fn(u64) -> bool + Sync>(total: u64, pred: F) -> bool {
    let workers = jobs().min(total.max(1) as usize);
    if workers <= 1 {
        return (0..total).all(pred);
    }
    let failed = AtomicBool::new(false);
    let chunk = total.div_ceil(workers as u64);
    std::thread::scope(|scope| {
        for w in 0..workers as u64 {
            let failed = &failed;
            let pred = &pred;
            scope.spawn(move || {
                let end = ((w + 1) * chunk).min(total);
                for idx in (w * chunk)..end {
                    if failed.load(Ordering::Relaxed) {
                        return;
                    }
                    if !pred(idx) {
                        failed.store(true, Ordering::Relaxed);
                        return;
                    }
                }
            });
        }
    });
    !failed.load(Ordering::Relaxed)
}

/// Sum of `f` over all items, combined across disjoint chunks.
pub fn sum<T: Sync, F: Fn(&T) -> u64 + Sync>(items: &[T], f: F) -> u64 {
    let workers = jobs().min(items.len().max(1));
    if workers <= 1 {
        return items.iter().map(f).sum();
    }
    let chunk = items.len().div_ceil(workers);
    let mut totals = vec![0u64; items.chunks(chunk).len()];
    std::thread::scope(|scope| {
        for (part, slot) in items.chunks(chunk).zip(totals.iter_mut()) {
            let f = &f;
            scope.spawn(move || {
                *slot = part.iter().map(f).sum();
            });
        }
    });
    totals.into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_and_sum_agree_with_serial() {
        let items: Vec<u64> = (0..1000).collect();
        set_jobs(4);
        assert!(all(&items, |&x| x < 1000));
        assert!(!all(&items, |&x| x < 999));
        assert_eq!(sum(&items, |&x| x), 499_500);
        set_jobs(1);
        assert_eq!(sum(&items, |&x| x), 499_500);
    }
}
