use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::flow::NetflowVector;
use crate::graph::ThresholdGraph;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed_0001;

/// A graph together with a netflow in its canonical labelling.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: ThresholdGraph,
    pub a: NetflowVector,
}

/// Ordered list of instances plus the seed that produced it, if any.
#[derive(Clone, Debug)]
pub struct Plan {
    pub instances: Vec<Instance>,
    pub seed: Option<u64>,
}

fn all_vectors(n: usize, a_max: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..=a_max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

impl Plan {
    /// Every connected threshold graph with `n <= n_max`, netflow all ones.
    pub fn unit(n_max: usize) -> Self {
        Self::exhaustive(n_max, 1)
    }

    /// Every connected threshold graph with `n <= n_max` and every netflow with
    /// entries in `1..=a_max`.
    pub fn exhaustive(n_max: usize, a_max: u64) -> Self {
        let mut instances = Vec::new();
        for n in 1..=n_max {
            for g in ThresholdGraph::all_connected(n) {
                for a in all_vectors(n, a_max) {
                    let a = NetflowVector::from_positive(&a).expect("entries start at 1");
                    instances.push(Instance { graph: g.clone(), a });
                }
            }
        }
        Self { instances, seed: None }
    }

    /// `count` seeded draws: `n` uniform in `1..=n_max`, a uniform connected
    /// graph on `n + 1` vertices, entries uniform in `1..=a_max`.
    pub fn random(n_max: usize, a_max: u64, count: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let instances = (0..count)
            .map(|_| {
                let n = rng.gen_range(1..=n_max);
                let mut beta = vec![1u8; n];
                for b in beta.iter_mut().skip(1) {
                    *b = rng.gen_range(0..=1);
                }
                let graph = ThresholdGraph::from_binary(&beta).expect("nonempty");
                let a: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=a_max)).collect();
                let a = NetflowVector::from_positive(&a).expect("entries start at 1");
                Instance { graph, a }
            })
            .collect();
        Self { instances, seed: Some(seed) }
    }

    /// Default plan for the command line: exhaustive when entries are at most
    /// 2 and `n <= 4`, otherwise every graph with all-ones netflow plus
    /// `samples` seeded random instances.
    pub fn standard(n_max: usize, a_max: u64, samples: usize, seed: u64) -> Self {
        if a_max <= 2 && n_max <= 4 {
            return Self::exhaustive(n_max, a_max);
        }
        let mut plan = Self::unit(n_max);
        if a_max > 1 {
            plan.instances.extend(Self::random(n_max, a_max, samples, seed).instances);
            plan.seed = Some(seed);
        }
        plan
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }
}
