use num_bigint::BigInt;

use super::{run, Failure, VerificationReport};
use crate::flow::weak_compositions;
use crate::poly::{q_bracket, qt_weight_at_qinv};
use crate::{QLaurent, QTPolynomial};

fn failure(label: Vec<u64>, lhs: impl ToString, rhs: impl ToString) -> Failure {
    Failure { beta: Vec::new(), a: label, lhs: lhs.to_string(), rhs: rhs.to_string() }
}

/// Direct sum over the lattice points `B = (b_0, ..., b_{k-1})` of the
/// simplex `Σ b_i = c` of `q^{Σ i b_i} (q-1)^{#nonzero - 1} Π wt_{q,0}(b_i)`.
pub fn lemma_t0_sum(k: usize, c: u64) -> QTPolynomial {
    let q_minus_one = QTPolynomial::q() - QTPolynomial::one();
    weak_compositions(c, k)
        .map(|b| {
            let nz = b.iter().filter(|&&x| x > 0).count() as u32;
            let exp: u64 = b.iter().enumerate().map(|(i, &x)| i as u64 * x + x.saturating_sub(1)).sum();
            q_minus_one.pow(nz - 1).mul_monomial(exp as u32, 0)
        })
        .sum()
}

/// `Σ_B ... = q^{k(c-1)} [k]_q` for `1 <= k <= k_max`, `1 <= c <= c_max`.
pub fn verify_lemma_t0(k_max: usize, c_max: u64) -> VerificationReport {
    let cases: Vec<(usize, u64)> =
        (1..=k_max).flat_map(|k| (1..=c_max).map(move |c| (k, c))).collect();
    run("lemma-t0", None, &cases, |&(k, c)| {
        let lhs = lemma_t0_sum(k, c);
        let rhs = q_bracket::<BigInt>(k as u32, 1).mul_monomial(k as u32 * (c as u32 - 1), 0);
        if lhs == rhs { Vec::new() } else { vec![failure(vec![k as u64, c], lhs, rhs)] }
    })
}

fn bracket(k: u32, base: u32) -> QLaurent {
    QLaurent::from(&q_bracket::<BigInt>(k, base))
}

/// Both sides of
///
/// ```text
/// [a]_{q^{d+1}} [d]_q [z+a]_q
///   = q^a [a]_{q^d} [d-1]_q [z]_q + q^{a-1} wt(a) [z+da]_q
///     - q^a (1-q)(1-q^-1) Σ_{k=1}^{a-1} wt(k) [a-k]_{q^d} [d-1]_q [z+dk]_q
/// ```
///
/// with `wt = wt_{q,q^-1}`, as Laurent polynomials.
pub fn lemma_q_sides(a: u32, d: u32, z: u32) -> (QLaurent, QLaurent) {
    let lhs = &(&bracket(a, d + 1) * &bracket(d, 1)) * &bracket(z + a, 1);
    let mut rhs = (&(&bracket(a, d) * &bracket(d - 1, 1)) * &bracket(z, 1)).shift(a as i64);
    rhs += (&qt_weight_at_qinv::<BigInt>(a) * &bracket(z + d * a, 1)).shift(a as i64 - 1);
    let one = QLaurent::one();
    let mixed = &(&one - &QLaurent::q_pow(1)) * &(&one - &QLaurent::q_pow(-1));
    let mut tail = QLaurent::zero();
    for k in 1..a {
        let term = &(&qt_weight_at_qinv::<BigInt>(k) * &bracket(a - k, d)) * &bracket(d - 1, 1);
        tail += &term * &bracket(z + d * k, 1);
    }
    rhs -= &(&mixed * &tail).shift(a as i64);
    (lhs, rhs)
}

/// The identity above for `1 <= a <= a_max`, `1 <= d <= d_max`,
/// `0 <= z <= z_max`, compared after multiplying both sides by the power of
/// `q` that makes them polynomials.
pub fn verify_lemma_q(a_max: u32, d_max: u32, z_max: u32) -> VerificationReport {
    let mut cases = Vec::new();
    for a in 1..=a_max {
        for d in 1..=d_max {
            for z in 0..=z_max {
                cases.push((a, d, z));
            }
        }
    }
    run("lemma-q", None, &cases, |&(a, d, z)| {
        let (lhs, rhs) = lemma_q_sides(a, d, z);
        let low = lhs.min_exponent().into_iter().chain(rhs.min_exponent()).min().unwrap_or(0);
        let clear = |p: &QLaurent| p.shift(-low.min(0)).to_poly().expect("cleared");
        let (l, r) = (clear(&lhs), clear(&rhs));
        if l == r {
            Vec::new()
        } else {
            vec![failure(vec![a as u64, d as u64, z as u64], l, r)]
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_t0_small_cases() {
        assert_eq!(lemma_t0_sum(1, 4), QTPolynomial::q_pow(3));
        assert_eq!(weak_compositions(2, 3).count(), 6);
        assert_eq!(lemma_t0_sum(3, 2), q_bracket::<BigInt>(3, 1).mul_monomial(3, 0));
        assert_eq!(lemma_t0_sum(4, 1), q_bracket(4, 1));
    }

    #[test]
    fn lemma_q_unit_a() {
        // a = 1: [d]_q [z+1]_q = q [d-1]_q [z]_q + [z+d]_q
        for d in 1..5 {
            for z in 0..5 {
                let (l, r) = lemma_q_sides(1, d, z);
                assert_eq!(l, r, "d={d} z={z}");
            }
        }
    }
}
