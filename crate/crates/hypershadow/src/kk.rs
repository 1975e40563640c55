//! Antilexicographic order machinery: rank/unrank, initial segments, family
//! compression, and both the discrete and real-valued minimum-shadow bounds.

use std::sync::OnceLock;

use crate::binomial::gen_binomial;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::set::{VertexSet, MAX_VERTICES};

/// Position of a k-set in the antilexicographic order, 0-based.
///
/// Rank 0 is {1, ..., k}; ranking is a bijection between k-sets of the
/// positive integers and the naturals.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct AntilexRank(pub u64);

const TABLE_DIM: usize = MAX_VERTICES + 4;

fn pascal() -> &'static Vec<Vec<u128>> {
    static TABLE: OnceLock<Vec<Vec<u128>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = vec![vec![0u128; TABLE_DIM]; TABLE_DIM];
        for n in 0..TABLE_DIM {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1] + if k <= n - 1 { t[n - 1][k] } else { 0 };
            }
        }
        t
    })
}

fn choose(n: usize, k: usize) -> u128 {
    if k > n || n >= TABLE_DIM {
        if k > n {
            return 0;
        }
        panic!("choose({n},{k}) outside the supported table");
    }
    pascal()[n][k]
}

/// Rank of a k-set in antilex order: sum of C(a_i - 1, i) over the sorted
/// elements a_1 < ... < a_k.
pub fn antilex_rank(a: VertexSet) -> Result<AntilexRank> {
    if a.is_empty() {
        return Err(Error::InvalidInput(
            "cannot rank the empty set".to_string(),
        ));
    }
    let mut rank: u128 = 0;
    for (i, v) in a.iter().enumerate() {
        rank += choose(v - 1, i + 1);
    }
    Ok(AntilexRank(rank as u64))
}

/// Inverse of [`antilex_rank`]: the k-set at the given position.
pub fn antilex_unrank(rank: AntilexRank, k: usize) -> Result<VertexSet> {
    if k == 0 {
        return Err(Error::InvalidInput(
            "cannot unrank with k = 0".to_string(),
        ));
    }
    let mut rem = rank.0 as u128;
    let mut out = VertexSet::EMPTY;
    for i in (1..=k).rev() {
        // Largest c with C(c - 1, i) <= rem.
        let mut c = i;
        while c < TABLE_DIM - 1 && choose(c, i) <= rem {
            c += 1;
        }
        if c > MAX_VERTICES {
            return Err(Error::LabelOverflow);
        }
        rem -= choose(c - 1, i);
        out = out.with(c);
    }
    debug_assert_eq!(rem, 0);
    Ok(out)
}

/// The m antilex-smallest k-sets.
pub fn initial_segment(m: usize, k: usize) -> Result<SetFamily> {
    if k == 0 {
        return match m {
            0 => Ok(SetFamily::new(0)),
            1 => SetFamily::from_sets(0, [VertexSet::EMPTY]),
            _ => Err(Error::InvalidInput(
                "only one 0-set exists".to_string(),
            )),
        };
    }
    let mut fam = SetFamily::new(k);
    for i in 0..m {
        fam.insert(antilex_unrank(AntilexRank(i as u64), k)?)?;
    }
    Ok(fam)
}

/// Exact Kruskal-Katona minimum: the size of the s-shadow of the antilex
/// initial segment of m k-sets, which is minimal over all families of m k-sets.
pub fn kk_min_shadow(m: usize, k: usize, s: usize) -> Result<usize> {
    if k == 0 || s == 0 || s > k {
        return Err(Error::InvalidTarget {
            target: s,
            uniformity: k,
        });
    }
    if m == 0 {
        return Ok(0);
    }
    Ok(initial_segment(m, k)?.shadow(s)?.len())
}

/// Antilexicographic compression: the initial segment with the same
/// cardinality and uniformity as the input. Shadow sizes never increase.
pub fn compress(f: &SetFamily) -> Result<SetFamily> {
    initial_segment(f.len(), f.k())
}

/// The unique real x >= k with C(x, k) = m, found by bisection.
///
/// C(., k) is strictly increasing on [k-1, oo), so the bracket [k, k+m]
/// pins the root; the residual |C(x, k) - m| ends below 1e-9.
pub fn lovasz_x(m: u64, k: usize) -> Result<f64> {
    if m < 1 {
        return Err(Error::InvalidInput(format!("lovasz_x needs m >= 1, got {m}")));
    }
    if k < 1 {
        return Err(Error::InvalidInput("lovasz_x needs k >= 1".to_string()));
    }
    if m >= (1u64 << 52) {
        return Err(Error::LimitExceeded(format!(
            "m = {m} is too large for an accurate f64 bisection"
        )));
    }
    let target = m as f64;
    let mut lo = k as f64;
    let mut hi = (k as u64 + m) as f64;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if gen_binomial(mid, k) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let x = 0.5 * (lo + hi);
    debug_assert!((gen_binomial(x, k) - target).abs() <= 1e-9);
    Ok(x)
}
