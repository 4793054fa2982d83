use super::GradedPoset;
use crate::Result;

/// `μ(0̂, 1̂)` from the recursion `μ(0̂, x) = -Σ_{0̂ ≤ y < x} μ(0̂, y)`,
/// evaluated once per element in rank order.
pub fn mobius_number(p: &GradedPoset) -> Result<i64> {
    let (bottom, top) = p.bounds()?;
    let mut mu = vec![0i64; p.len()];
    for x in p.rank_order() {
        mu[x] = if x == bottom {
            1
        } else {
            -p.strictly_below(x).map(|y| mu[y]).sum::<i64>()
        };
    }
    Ok(mu[top])
}

/// `c[k]` is the number of chains with `k` elements, `k = 0..=rank length`;
/// `c[0] = 1` counts the empty chain.
pub fn order_complex_face_counts(p: &GradedPoset) -> Vec<u64> {
    let order = p.rank_order();
    let levels = p.rank_sizes().iter().filter(|&&s| s > 0).count();
    // ending[x][k]: chains with k+1 elements whose top is x
    let mut ending = vec![vec![0u64; levels]; p.len()];
    let mut counts = vec![0u64; levels + 1];
    counts[0] = 1;
    for &x in &order {
        let mut row = vec![0u64; levels];
        row[0] = 1;
        for y in p.strictly_below(x) {
            for k in 1..levels {
                row[k] += ending[y][k - 1];
            }
        }
        for (k, c) in row.iter().enumerate() {
            counts[k + 1] += c;
        }
        ending[x] = row;
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

/// `Σ_{j ≥ -1} (-1)^j c_j` over faces of the order complex (a face of
/// dimension `j` is a chain with `j+1` elements).
pub fn reduced_euler_characteristic(p: &GradedPoset) -> i64 {
    order_complex_face_counts(p)
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { -(c as i64) } else { c as i64 })
        .sum()
}

/// Every nonempty chain, grouped by number of elements: entry `k` holds the
/// chains with `k + 1` elements, each listed bottom to top. Chains of the
/// same size are in lexicographic order of their rank-ordered positions.
pub fn order_complex_chains(p: &GradedPoset) -> Vec<Vec<Vec<usize>>> {
    let order = p.rank_order();
    let mut by_size: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut current: Vec<Vec<usize>> = order.iter().map(|&x| vec![x]).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for c in &current {
            let last = *c.last().expect("nonempty chain");
            for &y in &order {
                if p.lt(last, y) {
                    let mut d = c.clone();
                    d.push(y);
                    next.push(d);
                }
            }
        }
        by_size.push(std::mem::replace(&mut current, next));
    }
    by_size
}
