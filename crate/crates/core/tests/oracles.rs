//! Self-checks and frozen expected values for the independent oracles.
//!
//! These pin the closed-form rank-one behavior and the by-hand S3
//! multiplicities before the main modules are compared against them.

mod common;

use cherednik::scalar::{rat, rat_i, Rat};
use common::*;
use num::Zero;

#[test]
fn z2_dunkl_closed_form() {
    // W = Z/2, one parameter k: T(x) = (1 + 2k) x^0.
    let k = rat(1, 3);
    let o = RankOneOracle::new(2, vec![k.clone()]);
    assert_eq!(o.dunkl_coeff(1), rat_i(1) + rat_i(2) * k.clone());
    // Even degrees feel no correction: T(x^2) = 2x.
    assert_eq!(o.dunkl_coeff(2), rat_i(2));
    assert_eq!(o.dunkl_coeff(3), rat_i(3) + rat_i(2) * k);
}

#[test]
fn z2_c_values() {
    let k = rat(1, 2);
    let o = RankOneOracle::new(2, vec![k]);
    assert_eq!(o.c_value(0), rat_i(0));
    assert_eq!(o.c_value(1), rat_i(1)); // c_sgn = 2k = 1
}

#[test]
fn z2_block_at_minus_half() {
    // k = -1/2: Delta(triv) has a singular vector in degree 1 = c_triv - c_sgn,
    // L(triv) is one dimensional, Delta(sgn) stays simple.
    let k = rat(-1, 2);
    let o = RankOneOracle::new(2, vec![k]);
    assert_eq!(o.c_value(0) - o.c_value(1), rat_i(1));
    assert!(o.lowering_coeff(0, 1).is_zero());
    assert_eq!(o.simple_dims(0, 8), vec![1, 0, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(o.simple_dims(1, 8), vec![1; 9]);
    // Degreewise this is exactly [Delta(triv)] = [L(triv)] + [L(sgn)<1>],
    // i.e. the block decomposition matrix [[1, 1], [0, 1]].
}

#[test]
fn z3_lowering_structure() {
    // Unequal parameters on Z/3 to exercise the index arithmetic.
    let o = RankOneOracle::new(3, vec![rat(1, 5), rat(2, 7)]);
    // m = 0: coefficients t + 3 k[t mod 3].
    assert_eq!(o.dunkl_coeff(1), rat_i(1) + rat_i(3) * rat(1, 5));
    assert_eq!(o.dunkl_coeff(2), rat_i(2) + rat_i(3) * rat(2, 7));
    assert_eq!(o.dunkl_coeff(3), rat_i(3));
    // m = 1: shift by k[(t-1) mod 3] - k[2].
    let c1 = o.lowering_coeff(1, 1); // 1 + 3(k0 - k2) = 1 - 6/7
    assert_eq!(c1, rat_i(1) - rat_i(3) * rat(2, 7));
    let c2 = o.lowering_coeff(1, 2); // 2 + 3(k1 - k2)
    assert_eq!(c2, rat_i(2) + rat_i(3) * (rat(1, 5) - rat(2, 7)));
    // c-values: c_{det^m} = 3 k[(-m) mod 3].
    assert_eq!(o.c_value(1), rat_i(3) * rat(2, 7));
    assert_eq!(o.c_value(2), rat_i(3) * rat(1, 5));
    assert_eq!(o.c_value(0), Rat::zero());
}

#[test]
fn z2_generic_k_semisimple() {
    // Generic k: no lowering coefficient vanishes, so both simples stay full.
    let o = RankOneOracle::new(2, vec![rat(1, 7)]);
    for m in 0..2 {
        assert_eq!(o.simple_dims(m, 8), vec![1; 9]);
    }
}

#[test]
fn bareiss_oracle_known_ranks() {
    assert_eq!(bareiss_rank_int(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]), 2);
    assert_eq!(bareiss_rank_int(2, 2, &[2, 1, 1, 1]), 2);
    assert_eq!(bareiss_rank_int(3, 2, &[1, 2, 2, 4, 3, 6]), 1);
    assert_eq!(bareiss_rank_int(2, 3, &[0, 0, 0, 0, 0, 0]), 0);
}

#[test]
fn s3_hand_multiplicities() {
    let std = S3_CHAR_TABLE[2];
    // std (x) std = triv + sgn + std.
    for f in 0..3 {
        assert_eq!(s3_product_multiplicity(std, std, f), 1);
    }
    // sgn (x) std = std.
    assert_eq!(s3_product_multiplicity(S3_CHAR_TABLE[1], std, 2), 1);
    assert_eq!(s3_product_multiplicity(S3_CHAR_TABLE[1], std, 0), 0);
}
