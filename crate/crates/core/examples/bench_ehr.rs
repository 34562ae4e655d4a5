use std::time::Instant;

use qtflows::{ehrhart_qt, Dag, NetflowVector};

fn main() {
    for (n, a) in [(5, 3), (6, 1), (6, 2), (7, 1), (8, 1), (9, 1)] {
        let start = Instant::now();
        let e = ehrhart_qt(&Dag::complete(n), &NetflowVector::from_positive(&vec![a; n]).unwrap()).unwrap();
        println!("K_{} a={a}: {} terms in {:.3} s", n + 1, e.len(), start.elapsed().as_secs_f64());
    }
}
