//! Sizes of bounded design universes by recurrence, without building designs.

fn multinomial(parts: &[usize]) -> u128 {
    let mut acc = 1u128;
    let mut n = 0u128;
    for &p in parts {
        for j in 1..=p as u128 {
            n += 1;
            acc = acc * n / j;
        }
    }
    acc
}

/// All ways to write `n` as an ordered sum of `slots` naturals.
fn compositions(n: usize, slots: usize) -> Vec<Vec<usize>> {
    if slots == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            compositions(n - first, slots - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Designs on `⊢ Γ` with `|Γ| = k`, depth at most `d`, ramifications of the
/// given sizes.
pub fn positive_count(k: usize, d: usize, pool: &[usize]) -> u128 {
    if d == 0 {
        return 0;
    }
    let mut total = 2;
    if k == 0 {
        return total;
    }
    for &s in pool {
        // the other k - 1 addresses go to one of the s premises or are dropped
        for comp in compositions(k - 1, s + 1) {
            let kids: u128 = comp[..s].iter().map(|&c| negative_count(c, d - 1, pool)).product();
            total += k as u128 * multinomial(&comp) * kids;
        }
    }
    total
}

/// Designs on `ξ ⊢ Γ` with `|Γ| = m`; every branch keeps the whole context.
pub fn negative_count(m: usize, d: usize, pool: &[usize]) -> u128 {
    if d == 0 {
        return 0;
    }
    pool.iter().map(|&s| 1 + positive_count(m + s, d - 1, pool)).product()
}
