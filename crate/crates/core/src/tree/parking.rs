use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::Dag;
use crate::QTPolynomial;

/// `G`-parking function `P: {1..n} -> Z_{>=0}` on a host with sink `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction {
    values: Vec<u32>,
}

/// Every nonempty `S ⊆ {1..n}` has some `i ∈ S` with
/// `P(i) < #{j ∉ S : j ~ i}`.
fn satisfies_subsets(masks: &[u64], values: &[u32]) -> bool {
    let n = values.len();
    (1u64..1 << n).all(|s| {
        let set = s << 1; // vertex i lives at bit i
        (0..n).any(|k| {
            let i = k + 1;
            set >> i & 1 == 1 && values[k] < (masks[i] & !set).count_ones()
        })
    })
}

impl ParkingFunction {
    pub fn new(host: &Dag, values: &[u32]) -> Result<Self> {
        if values.len() != host.n() || !satisfies_subsets(&host.adjacency_masks(), values) {
            return Err(Error::NotParking(format!("{values:?}")));
        }
        Ok(Self { values: values.to_vec() })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `P(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn degree(&self) -> u64 {
        self.values.iter().map(|&v| v as u64).sum()
    }

    /// `g - deg P` with genus `g = |E| - |V| + 1`.
    pub fn codeg(&self, host: &Dag) -> u64 {
        let genus = host.edge_count() + 1 - host.vertex_count();
        genus as u64 - self.degree()
    }

    /// Coordinatewise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `G`-parking functions, in lexicographic order. Candidates are bounded
/// by `P(i) < deg(i)` (the singleton condition) and filtered by the full
/// subset condition.
pub fn enumerate_parking_functions(host: &Dag) -> Vec<ParkingFunction> {
    let n = host.n();
    let masks = host.adjacency_masks();
    let bounds: Vec<u32> = (1..=n).map(|i| masks[i].count_ones()).collect();
    let mut out = Vec::new();
    if bounds.contains(&0) {
        return out;
    }
    let mut cur = vec![0u32; n];
    loop {
        if satisfies_subsets(&masks, &cur) {
            out.push(ParkingFunction { values: cur.clone() });
        }
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < bounds[k] {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// Parking functions with no parking function strictly above them.
///
/// The parking functions form a down-set, so it suffices to test single
/// increments.
pub fn maximal_parking_functions(host: &Dag) -> Vec<ParkingFunction> {
    let masks = host.adjacency_masks();
    enumerate_parking_functions(host)
        .into_iter()
        .filter(|p| {
            (0..p.n()).all(|k| {
                let mut up = p.values.clone();
                up[k] += 1;
                !satisfies_subsets(&masks, &up)
            })
        })
        .collect()
}

fn require_complete(host: &Dag) -> Result<()> {
    if host.edge_count() != host.n() * (host.n() + 1) / 2 {
        return Err(Error::NotComplete);
    }
    Ok(())
}

/// `pmaj` of a maximal parking function on `K_{n+1}`, i.e. a bijection
/// `Q: [n] -> {0..n-1}`. Reads the cars in parking-spot order,
/// `σ_k = Q^{-1}(k-1)`, and sums `n - k` over the ascents `σ_k < σ_{k+1}`.
fn pmaj_maximal(q: &[u32]) -> u64 {
    let n = q.len();
    let mut sigma = vec![0usize; n];
    for (k, &v) in q.iter().enumerate() {
        sigma[v as usize] = k + 1;
    }
    (1..n).filter(|&k| sigma[k - 1] < sigma[k]).map(|k| (n - k) as u64).sum()
}

/// `pmaj(P)`: the ascent formula on maximal elements, and otherwise the least
/// `pmaj` of a maximal parking function above `P`.
pub fn pmaj(host: &Dag, p: &ParkingFunction) -> Result<u64> {
    require_complete(host)?;
    let mut sorted = p.values.clone();
    sorted.sort_unstable();
    if sorted.iter().enumerate().all(|(k, &v)| v as usize == k) {
        return Ok(pmaj_maximal(&p.values));
    }
    Ok(maximal_parking_functions(host)
        .iter()
        .filter(|m| p.le(m))
        .map(|m| pmaj_maximal(&m.values))
        .min()
        .expect("every parking function lies below a maximal one"))
}

/// `Σ_P q^{codeg P} t^{pmaj P}` over the parking functions of `K_{n+1}`.
pub fn codeg_pmaj_series(host: &Dag) -> Result<QTPolynomial> {
    require_complete(host)?;
    let maximal: Vec<(ParkingFunction, u64)> = maximal_parking_functions(host)
        .into_iter()
        .map(|m| {
            let s = pmaj_maximal(&m.values);
            (m, s)
        })
        .collect();
    let mut out = QTPolynomial::zero();
    for p in enumerate_parking_functions(host) {
        let s = maximal.iter().filter(|(m, _)| p.le(m)).map(|&(_, s)| s).min().expect("nonempty");
        out.add_term((p.codeg(host) as u32, s as u32), BigInt::from(1));
    }
    Ok(out)
}
