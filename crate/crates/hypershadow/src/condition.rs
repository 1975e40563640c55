//! The per-vertex clique-degree condition and the exact bounds around it:
//! the handshake lower bound, the excess-degree bound, and the complete-link
//! characterization of clique extensions.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{BigUint, One, Signed, ToPrimitive, Zero};

use crate::binomial::{binomial, gen_binomial_rational};
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::hypergraph::UniformHypergraph;
use crate::kk::kk_min_shadow;
use crate::set::VertexSet;

/// The instance parameters (n, t, k, ell): n vertices, ell-uniform edges,
/// every vertex required to lie in at least ceil(C(t, k-1)) complete k-sets.
///
/// t may be any rational >= k - 1 and is stored exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Parameters {
    n: usize,
    t: BigRational,
    k: usize,
    ell: usize,
}

impl Parameters {
    pub fn new(n: usize, t: BigRational, k: usize, ell: usize) -> Result<Self> {
        if ell < 2 {
            return Err(Error::Parameter(format!("ell must be at least 2, got {ell}")));
        }
        if k <= ell {
            return Err(Error::Parameter(format!(
                "k must exceed ell, got k={k}, ell={ell}"
            )));
        }
        if n < 1 {
            return Err(Error::Parameter("n must be positive".to_string()));
        }
        let k_minus_1 = BigRational::from(BigInt::from(k as i64 - 1));
        if t < k_minus_1 {
            return Err(Error::Parameter(format!(
                "t must be at least k - 1 = {}, got {t}",
                k - 1
            )));
        }
        Ok(Parameters { n, t, k, ell })
    }

    pub fn from_integers(n: usize, t: i64, k: usize, ell: usize) -> Result<Self> {
        Self::new(n, BigRational::from(BigInt::from(t)), k, ell)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> &BigRational {
        &self.t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Same parameters on a different vertex count.
    pub fn with_n(&self, n: usize) -> Result<Self> {
        Self::new(n, self.t.clone(), self.k, self.ell)
    }

    pub fn t_as_integer(&self) -> Option<i64> {
        if self.t.is_integer() {
            self.t.to_integer().to_i64()
        } else {
            None
        }
    }

    /// t + 1 as the clique order of the target component, integer t only.
    pub fn clique_order(&self) -> Result<usize> {
        let t = self.t_as_integer().ok_or_else(|| {
            Error::Parameter(format!("integer t required, got t = {}", self.t))
        })?;
        Ok(t as usize + 1)
    }

    /// The required per-vertex count of complete k-sets: ceil(C(t, k-1)).
    ///
    /// Counts are integers, so for non-integer t the rational threshold is
    /// rounded up.
    pub fn clique_threshold(&self) -> u64 {
        let c = gen_binomial_rational(&self.t, self.k - 1);
        rational_ceil_u64(&c).expect("threshold is >= 1 at desk scale")
    }

    /// Smallest integer degree whose link can host `clique_threshold` copies
    /// of the complete (k-1)-set family: the minimum shadow of that many
    /// (k-1)-sets at uniformity ell-1. Coincides with C(t, ell-1) at integer t.
    pub fn degree_bound(&self) -> u64 {
        let m = self.clique_threshold() as usize;
        kk_min_shadow(m, self.k - 1, self.ell - 1).expect("valid uniformities") as u64
    }
}

fn rational_ceil_u64(r: &BigRational) -> Option<u64> {
    if r.is_negative() {
        return Some(0);
    }
    r.ceil().to_integer().to_u64()
}

/// Per-vertex counts of complete k-sets against a fixed threshold.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliqueDegreeProfile {
    pub counts: Vec<u64>,
    pub threshold: u64,
}

impl CliqueDegreeProfile {
    pub fn satisfied(&self) -> bool {
        self.counts.iter().all(|&c| c >= self.threshold)
    }

    pub fn min_count(&self) -> u64 {
        self.counts.iter().copied().min().unwrap_or(0)
    }

    /// 1-based labels of vertices below the threshold.
    pub fn failing_vertices(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c < self.threshold)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Whether every vertex of H lies in at least ceil(C(t, k-1)) complete k-sets.
pub fn check_condition(
    h: &UniformHypergraph,
    params: &Parameters,
) -> Result<(bool, CliqueDegreeProfile)> {
    if h.uniformity() != params.ell() {
        return Err(Error::Uniformity(format!(
            "graph is {}-uniform but ell = {}",
            h.uniformity(),
            params.ell()
        )));
    }
    if h.vertex_count() != params.n() {
        return Err(Error::Parameter(format!(
            "graph has {} vertices but n = {}",
            h.vertex_count(),
            params.n()
        )));
    }
    let threshold = params.clique_threshold();
    let mut counts = vec![0u64; h.vertex_count()];
    for clique in h.cliques_of_size(params.k()).iter() {
        for v in clique.iter() {
            counts[v - 1] += 1;
        }
    }
    let profile = CliqueDegreeProfile { counts, threshold };
    Ok((profile.satisfied(), profile))
}

/// The handshake lower bound (n / ell) * C(t, ell - 1), exact.
pub fn edge_lower_bound(n: usize, t: &BigRational, ell: usize) -> Result<BigRational> {
    check_t_range(t, ell)?;
    let per_vertex = gen_binomial_rational(t, ell - 1);
    Ok(per_vertex * BigRational::new(BigInt::from(n), BigInt::from(ell)))
}

/// Sum over vertices of deg(v) - C(t, ell - 1), exact. Equals
/// ell * |E| - n * C(t, ell - 1) by the handshake identity.
pub fn excess_degree_sum(h: &UniformHypergraph, t: &BigRational) -> Result<BigRational> {
    let ell = h.uniformity();
    check_t_range(t, ell)?;
    let per_vertex = gen_binomial_rational(t, ell - 1);
    let mut sum = BigRational::zero();
    for d in h.degrees() {
        sum += BigRational::from(BigInt::from(d)) - per_vertex.clone();
    }
    Ok(sum)
}

/// Upper bound (1/4)(t+1)^2 C(t-1, ell-2) on the excess degree sum of an
/// edge-minimal graph, exact.
pub fn excess_bound(t: &BigRational, ell: usize) -> Result<BigRational> {
    check_t_range(t, ell)?;
    let one = BigRational::one();
    let t1 = t + one.clone();
    let quarter = BigRational::new(BigInt::from(1), BigInt::from(4));
    Ok(quarter * t1.clone() * t1 * gen_binomial_rational(&(t - one), ell - 2))
}

fn check_t_range(t: &BigRational, ell: usize) -> Result<()> {
    let min = BigRational::from(BigInt::from(ell as i64 - 1));
    if *t < min {
        return Err(Error::Parameter(format!(
            "t must be at least ell - 1 = {}, got {t}",
            ell - 1
        )));
    }
    Ok(())
}

/// Sum of C(N - i, k - 1) for i = 1..=r, checked against the telescoping
/// identity C(N, k) - C(N - r, k).
pub fn binomial_telescope(n: usize, k: usize, r: usize) -> Result<BigUint> {
    if k < 1 {
        return Err(Error::InvalidInput("k must be at least 1".to_string()));
    }
    if r > n {
        return Err(Error::InvalidInput(format!("r = {r} exceeds N = {n}")));
    }
    let mut sum = BigUint::zero();
    for i in 1..=r {
        sum += binomial(n - i, k - 1);
    }
    let difference = binomial(n, k) - binomial(n - r, k);
    assert_eq!(sum, difference, "telescoping identity must hold");
    Ok(sum)
}

/// Result of a complete-link scan: the qualifying sets plus a flag raised
/// when the requested size cannot host a complete link at all.
#[derive(Clone, Debug)]
pub struct LinkCliqueScan {
    pub sets: SetFamily,
    pub undersized: bool,
}

/// All size-`size` subsets S of `ground` whose link under Y is the complete
/// (ell - |Y|)-graph on S. Sizes below ell - |Y| yield an empty family with
/// the `undersized` flag set instead of an error.
pub fn complete_link_sets(
    h: &UniformHypergraph,
    y: VertexSet,
    ground: VertexSet,
    size: usize,
) -> Result<LinkCliqueScan> {
    if !y.is_disjoint(ground) {
        return Err(Error::Overlap(y, ground));
    }
    let ell = h.uniformity();
    if y.len() >= ell {
        return Err(Error::Uniformity(format!(
            "link set of size {} must be smaller than the uniformity {ell}",
            y.len()
        )));
    }
    let sub = ell - y.len();
    if size < sub {
        return Ok(LinkCliqueScan {
            sets: SetFamily::new(size),
            undersized: true,
        });
    }
    let mut fam = SetFamily::new(size);
    for s in ground.subsets_of_size(size) {
        let complete = s.subsets_of_size(sub).all(|a| h.has_edge(a | y));
        if complete {
            fam.insert(s)?;
        }
    }
    Ok(LinkCliqueScan {
        sets: fam,
        undersized: false,
    })
}

/// All (k - |X|)-subsets T of `ground` such that T union X induces a complete
/// k-set in H.
pub fn clique_extensions(
    h: &UniformHypergraph,
    x: VertexSet,
    ground: VertexSet,
    k: usize,
) -> Result<SetFamily> {
    if x.len() > k {
        return Err(Error::InvalidInput(format!(
            "extension core of size {} exceeds the clique order {k}",
            x.len()
        )));
    }
    if !x.is_disjoint(ground) {
        return Err(Error::Overlap(x, ground));
    }
    let want = k - x.len();
    let mut fam = SetFamily::new(want);
    for t in ground.subsets_of_size(want) {
        if h.is_clique(t | x) {
            fam.insert(t)?;
        }
    }
    Ok(fam)
}

/// Splits vertices into those at the minimum admissible degree and the rest.
///
/// For integer t the split degree is C(t, ell-1); for rational t it is the
/// smallest degree whose link can host the required clique count, computed
/// through the minimum-shadow machinery.
pub fn degree_partition(
    h: &UniformHypergraph,
    params: &Parameters,
) -> Result<(VertexSet, VertexSet)> {
    if h.uniformity() != params.ell() {
        return Err(Error::Uniformity(format!(
            "graph is {}-uniform but ell = {}",
            h.uniformity(),
            params.ell()
        )));
    }
    let split = params.degree_bound();
    let mut v1 = VertexSet::EMPTY;
    let mut v2 = VertexSet::EMPTY;
    for (i, d) in h.degrees().into_iter().enumerate() {
        if d as u64 == split {
            v1 = v1.with(i + 1);
        } else {
            v2 = v2.with(i + 1);
        }
    }
    Ok((v1, v2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(labels: &[usize]) -> VertexSet {
        VertexSet::from_labels(labels.iter().copied()).unwrap()
    }

    fn graph(n: usize, r: usize, edges: &[&[usize]]) -> UniformHypergraph {
        UniformHypergraph::new(n, r, edges.iter().map(|e| vs(e))).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Triangle component on {1,2,3} plus two triangles sharing {5,6}.
    fn extremal7() -> UniformHypergraph {
        graph(
            7,
            2,
            &[
                &[1, 2],
                &[1, 3],
                &[2, 3],
                &[4, 5],
                &[4, 6],
                &[5, 6],
                &[5, 7],
                &[6, 7],
            ],
        )
    }

    #[test]
    fn parameter_validation() {
        assert!(Parameters::from_integers(6, 2, 3, 2).is_ok());
        assert!(Parameters::from_integers(6, 1, 3, 2).is_err());
        assert!(Parameters::from_integers(6, 2, 2, 2).is_err());
        assert!(Parameters::from_integers(6, 3, 4, 1).is_err());
        assert!(Parameters::new(6, rat(16, 5), 3, 2).is_ok());
    }

    #[test]
    fn thresholds() {
        assert_eq!(
            Parameters::from_integers(6, 2, 3, 2).unwrap().clique_threshold(),
            1
        );
        assert_eq!(
            Parameters::from_integers(6, 4, 3, 2).unwrap().clique_threshold(),
            6
        );
        // ceil(C(16/5, 2)) = ceil(3.52) = 4.
        assert_eq!(
            Parameters::new(6, rat(16, 5), 3, 2).unwrap().clique_threshold(),
            4
        );
    }

    #[test]
    fn degree_bounds() {
        // Integer t: C(t, ell-1).
        assert_eq!(Parameters::from_integers(6, 2, 3, 2).unwrap().degree_bound(), 2);
        assert_eq!(Parameters::from_integers(9, 3, 4, 2).unwrap().degree_bound(), 3);
        // t = 16/5: a link with 4 two-cliques needs at least 4 vertices covered.
        assert_eq!(
            Parameters::new(6, rat(16, 5), 3, 2).unwrap().degree_bound(),
            4
        );
    }

    #[test]
    fn condition_examples() {
        let k4 = UniformHypergraph::complete(4, 2).unwrap();
        let p = Parameters::from_integers(4, 2, 3, 2).unwrap();
        let (ok, profile) = check_condition(&k4, &p).unwrap();
        assert!(ok);
        assert_eq!(profile.counts, vec![3, 3, 3, 3]);

        let path = graph(3, 2, &[&[1, 2], &[2, 3]]);
        let p3 = Parameters::from_integers(3, 2, 3, 2).unwrap();
        let (ok, profile) = check_condition(&path, &p3).unwrap();
        assert!(!ok);
        assert_eq!(profile.failing_vertices(), vec![1, 2, 3]);

        // K6 minus a perfect matching: every vertex in 4 triangles >= ceil(3.52).
        let k6mm = graph(
            6,
            2,
            &[
                &[1, 3],
                &[1, 4],
                &[1, 5],
                &[1, 6],
                &[2, 3],
                &[2, 4],
                &[2, 5],
                &[2, 6],
                &[3, 5],
                &[3, 6],
                &[4, 5],
                &[4, 6],
            ],
        );
        let preal = Parameters::new(6, rat(16, 5), 3, 2).unwrap();
        let (ok, profile) = check_condition(&k6mm, &preal).unwrap();
        assert!(ok);
        assert_eq!(profile.counts, vec![4; 6]);

        let tri3 = graph(3, 3, &[&[1, 2, 3]]);
        assert!(check_condition(&tri3, &p3).is_err());
    }

    #[test]
    fn lower_bound_values() {
        assert_eq!(edge_lower_bound(6, &rat(2, 1), 2).unwrap(), rat(6, 1));
        assert_eq!(edge_lower_bound(7, &rat(2, 1), 2).unwrap(), rat(7, 1));
        // q disjoint complete blocks attain the bound exactly.
        for q in 1..4usize {
            let t = 3i64;
            let n = (t as usize + 1) * q;
            let bound = edge_lower_bound(n, &rat(t, 1), 2).unwrap();
            let edges_per_block = binomial(t as usize + 1, 2).to_u64().unwrap();
            assert_eq!(bound, rat((q as u64 * edges_per_block) as i64, 1));
        }
    }

    #[test]
    fn excess_values() {
        let two_triangles = graph(6, 2, &[&[1, 2], &[1, 3], &[2, 3], &[4, 5], &[4, 6], &[5, 6]]);
        assert_eq!(excess_degree_sum(&two_triangles, &rat(2, 1)).unwrap(), rat(0, 1));

        let k4 = UniformHypergraph::complete(4, 2).unwrap();
        assert_eq!(excess_degree_sum(&k4, &rat(2, 1)).unwrap(), rat(4, 1));

        assert_eq!(excess_degree_sum(&extremal7(), &rat(2, 1)).unwrap(), rat(2, 1));
    }

    #[test]
    fn excess_bound_values() {
        assert_eq!(excess_bound(&rat(2, 1), 2).unwrap(), rat(9, 4));
        assert_eq!(excess_bound(&rat(7, 2), 2).unwrap(), rat(81, 16));
        assert_eq!(excess_bound(&rat(4, 1), 3).unwrap(), rat(75, 4));
    }

    #[test]
    fn telescope_identity() {
        assert_eq!(binomial_telescope(5, 2, 0).unwrap(), BigUint::zero());
        assert_eq!(binomial_telescope(4, 2, 2).unwrap(), BigUint::from(5u32));
        assert_eq!(binomial_telescope(6, 3, 3).unwrap(), BigUint::from(19u32));
    }

    #[test]
    fn complete_link_scan() {
        // Two triangles sharing the edge {1,2}.
        let h = graph(4, 2, &[&[1, 2], &[1, 3], &[2, 3], &[1, 4], &[2, 4]]);
        let scan = complete_link_sets(&h, vs(&[3]), vs(&[1, 2, 4]), 1).unwrap();
        assert!(!scan.undersized);
        assert_eq!(scan.sets.sets(), &[vs(&[1]), vs(&[2])]);

        // Y empty collapses to plain cliques.
        let scan = complete_link_sets(&h, VertexSet::EMPTY, vs(&[1, 2, 3, 4]), 3).unwrap();
        assert_eq!(scan.sets.sets(), &[vs(&[1, 2, 3]), vs(&[1, 2, 4])]);

        // Complete host: every subset qualifies.
        let k5 = UniformHypergraph::complete(5, 2).unwrap();
        let scan = complete_link_sets(&k5, vs(&[5]), vs(&[1, 2, 3, 4]), 2).unwrap();
        assert_eq!(scan.sets.len(), 6);

        // Undersized request flags instead of erroring.
        let h3 = graph(5, 3, &[&[1, 2, 3]]);
        let scan = complete_link_sets(&h3, VertexSet::EMPTY, vs(&[1, 2]), 1).unwrap();
        assert!(scan.undersized);
        assert!(scan.sets.is_empty());

        assert!(complete_link_sets(&h, vs(&[1]), vs(&[1, 2]), 1).is_err());
    }

    #[test]
    fn extension_scan() {
        let k5 = UniformHypergraph::complete(5, 2).unwrap();
        let ext = clique_extensions(&k5, vs(&[5]), vs(&[1, 2, 3, 4]), 3).unwrap();
        assert_eq!(ext.len(), 6);

        let h = extremal7();
        let ext = clique_extensions(&h, VertexSet::EMPTY, vs(&[4, 5, 6, 7]), 3).unwrap();
        assert_eq!(ext.sets(), &[vs(&[4, 5, 6]), vs(&[5, 6, 7])]);

        assert!(clique_extensions(&k5, vs(&[1, 2, 3, 4]), vs(&[5]), 3).is_err());
    }

    #[test]
    fn partition_by_degree() {
        let p6 = Parameters::from_integers(6, 2, 3, 2).unwrap();
        let two_triangles = graph(6, 2, &[&[1, 2], &[1, 3], &[2, 3], &[4, 5], &[4, 6], &[5, 6]]);
        let (v1, v2) = degree_partition(&two_triangles, &p6).unwrap();
        assert_eq!(v1, VertexSet::full(6).unwrap());
        assert!(v2.is_empty());

        let p7 = Parameters::from_integers(7, 2, 3, 2).unwrap();
        let (_, v2) = degree_partition(&extremal7(), &p7).unwrap();
        assert_eq!(v2, vs(&[5, 6]));

        let p4 = Parameters::from_integers(4, 2, 3, 2).unwrap();
        let k4 = UniformHypergraph::complete(4, 2).unwrap();
        let (v1, v2) = degree_partition(&k4, &p4).unwrap();
        assert!(v1.is_empty());
        assert_eq!(v2, VertexSet::full(4).unwrap());
    }
}
