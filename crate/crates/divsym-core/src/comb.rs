//! Shared combinatorial helpers: factorials and binomials over big integers,
//! composition/subset enumeration, and lexicographic permutation stepping.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Pascal triangle rows 0..=n, as big integers.
pub fn binomial_table(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
    for r in 0..=n {
        let mut row = vec![BigUint::one(); r + 1];
        for k in 1..r {
            row[k] = &rows[r - 1][k - 1] + &rows[r - 1][k];
        }
        rows.push(row);
    }
    rows
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// All compositions of `total` into exactly `parts` nonnegative parts,
/// in lexicographic order.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; parts];
    fn rec(total: u32, idx: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if idx + 1 == current.len() {
            current[idx] = total;
            out.push(current.clone());
            return;
        }
        for v in 0..=total {
            current[idx] = v;
            rec(total - v, idx + 1, current, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, 0, &mut current, &mut out);
    out
}

/// All size-`k` subsets of `0..m`, each sorted, in lexicographic order.
pub fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for v in start..=m.saturating_sub(needed) {
            current.push(v);
            rec(v + 1, m, k, current, out);
            current.pop();
        }
    }
    if k <= m {
        rec(0, m, k, &mut current, &mut out);
    }
    out
}

/// Advance `perm` to the next permutation in lexicographic order.
/// Returns false (leaving `perm` sorted ascending) when it was the last one.
pub fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        perm.reverse();
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// The `k`-th (0-based) permutation of `0..m` in lexicographic order,
/// via the factorial number system. `k` must be less than `m!`.
pub fn kth_permutation(m: usize, mut k: u64) -> Vec<usize> {
    let mut factorials = vec![1u64; m.max(1)];
    for i in 1..m {
        factorials[i] = factorials[i - 1] * i as u64;
    }
    let mut pool: Vec<usize> = (0..m).collect();
    let mut out = Vec::with_capacity(m);
    for i in (0..m).rev() {
        let f = factorials[i];
        let d = (k / f) as usize;
        k %= f;
        out.push(pool.remove(d));
    }
    out
}

/// `m!` as u64 if it fits, used to size permutation chunks.
pub fn factorial_u64(m: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for k in 2..=m as u64 {
        acc = acc.checked_mul(k)?;
    }
    Some(acc)
}
