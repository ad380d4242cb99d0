mod common;

use common::{caps, gen_cnf};
use divsat::diverse::{
    chain_objective, chain_uncross, diverse_pair_double_horn, diverse_pair_xp,
    k_diverse_double_horn, sum_pairwise_distance, uncross_to_chain,
};
use divsat::formula::{eval, Assignment};
use divsat::oracle::{best_k_tuple_bruteforce, enumerate_solutions, max_hamming_pair};
use divsat::reductions::{GenParams, InstanceKind};
use divsat::sat::double_horn_bounds;
use proptest::prelude::*;
use proptest::sample::select;

fn xp_kind() -> impl Strategy<Value = InstanceKind> {
    select(vec![
        InstanceKind::TwoCnf,
        InstanceKind::Horn,
        InstanceKind::DualHorn,
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn xp_matches_oracle(kind in xp_kind(), seed in any::<u64>(), n in 1usize..=14, m in 0usize..=18) {
        let phi = gen_cnf(kind, GenParams::new(n, m).planted(), seed);
        let best = max_hamming_pair(&phi, &caps()).unwrap().map(|(_, d)| d);
        for d in 0..=n {
            let r = diverse_pair_xp(&phi, d).unwrap();
            prop_assert_eq!(r.found(), best.is_some_and(|b| b >= d), "d = {}", d);
            if let Some((a, b)) = &r.pair {
                prop_assert!(eval(&phi, a).unwrap() && eval(&phi, b).unwrap());
                prop_assert_eq!(a.hamming(b).unwrap(), r.distance);
                prop_assert!(r.distance >= d);
            }
        }
    }

    #[test]
    fn uncrossing_keeps_objective(seed in any::<u64>(), n in 1usize..=8, m in 0usize..=8, picks in prop::collection::vec(any::<prop::sample::Index>(), 2..=5)) {
        let phi = gen_cnf(InstanceKind::DoubleHorn, GenParams::new(n, m), seed);
        let sols = enumerate_solutions(&phi, &caps()).unwrap();
        prop_assume!(!sols.is_empty());
        let tuple: Vec<Assignment> = picks.iter().map(|ix| ix.get(&sols).clone()).collect();
        let f = sum_pairwise_distance(&tuple).unwrap();
        for i in 0..tuple.len() {
            for j in i + 1..tuple.len() {
                let next = chain_uncross(&tuple, i, j).unwrap();
                prop_assert_eq!(sum_pairwise_distance(&next).unwrap(), f);
                prop_assert!(sols.contains(&next[i]) && sols.contains(&next[j]));
            }
        }
        let chain = uncross_to_chain(&tuple).unwrap();
        prop_assert_eq!(chain_objective(&chain).unwrap(), f);
    }

    #[test]
    fn k_tuple_closed_form(seed in any::<u64>(), n in 1usize..=10, m in 0usize..=12, k in 1usize..=4) {
        let phi = gen_cnf(InstanceKind::DoubleHorn, GenParams::new(n, m), seed);
        let Some((lo, hi)) = double_horn_bounds(&phi).unwrap() else {
            prop_assert!(k_diverse_double_horn(&phi, k).is_err());
            return Ok(());
        };
        let r = k_diverse_double_horn(&phi, k).unwrap();
        let spread = (hi.weight() - lo.weight()) as u64;
        prop_assert_eq!(r.objective, (k / 2 * k.div_ceil(2)) as u64 * spread);
        prop_assert_eq!(r.assignments.len(), k);
        for pair in r.assignments.windows(2) {
            prop_assert!(pair[0].is_below(&pair[1]).unwrap());
        }
        prop_assert_eq!(sum_pairwise_distance(&r.assignments).unwrap(), r.objective);
        if let Ok((_, best)) = best_k_tuple_bruteforce(&phi, k, &caps()) {
            prop_assert_eq!(r.objective, best);
        }
    }

    #[test]
    fn double_horn_pair_is_bounds(seed in any::<u64>(), n in 1usize..=10, m in 0usize..=12) {
        let phi = gen_cnf(InstanceKind::DoubleHorn, GenParams::new(n, m), seed);
        let best = max_hamming_pair(&phi, &caps()).unwrap().map(|(_, d)| d);
        match double_horn_bounds(&phi).unwrap() {
            None => prop_assert!(best.is_none()),
            Some((lo, hi)) => {
                let r = diverse_pair_double_horn(&phi, 0).unwrap();
                prop_assert_eq!(r.distance, hi.weight() - lo.weight());
                prop_assert_eq!(Some(r.distance), best);
                prop_assert!(!diverse_pair_double_horn(&phi, r.distance + 1).unwrap().found());
            }
        }
    }
}
