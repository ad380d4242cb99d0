mod common;

use common::{arb_cnf, arb_xor, caps, gen_cnf};
use divsat::formula::{classify, Assignment};
use divsat::oracle::enumerate_solutions;
use divsat::reductions::{GenParams, InstanceKind};
use divsat::sat::{
    double_horn_bounds, gauss_solve, restrict, solve_2sat, solve_dual_horn, solve_horn,
    PartialAssignment, Restriction,
};
use divsat::xor::xor_to_system;
use proptest::prelude::*;

fn span(particular: &Assignment, basis: &[Assignment]) -> Vec<String> {
    let mut out: Vec<String> = (0u64..1 << basis.len())
        .map(|mask| {
            let mut v = particular.clone();
            for (i, b) in basis.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    v.xor_assign(b);
                }
            }
            v.to_string()
        })
        .collect();
    out.sort();
    out
}

proptest! {
    #[test]
    fn horn_model_is_minimum(seed in any::<u64>(), n in 1usize..=10, m in 0usize..=14) {
        let phi = gen_cnf(InstanceKind::Horn, GenParams::new(n, m), seed);
        let sols = enumerate_solutions(&phi, &caps()).unwrap();
        match solve_horn(&phi).unwrap() {
            None => prop_assert!(sols.is_empty()),
            Some(model) => {
                prop_assert!(sols.contains(&model));
                prop_assert!(sols.iter().all(|b| model.is_below(b).unwrap()));
            }
        }
    }

    #[test]
    fn dual_horn_model_is_maximum(seed in any::<u64>(), n in 1usize..=10, m in 0usize..=14) {
        let phi = gen_cnf(InstanceKind::DualHorn, GenParams::new(n, m), seed);
        let sols = enumerate_solutions(&phi, &caps()).unwrap();
        match solve_dual_horn(&phi).unwrap() {
            None => prop_assert!(sols.is_empty()),
            Some(model) => {
                prop_assert!(sols.contains(&model));
                prop_assert!(sols.iter().all(|b| b.is_below(&model).unwrap()));
            }
        }
    }

    #[test]
    fn double_horn_lattice(seed in any::<u64>(), n in 1usize..=8, m in 0usize..=10) {
        let phi = gen_cnf(InstanceKind::DoubleHorn, GenParams::new(n, m), seed);
        let sols = enumerate_solutions(&phi, &caps()).unwrap();
        match double_horn_bounds(&phi).unwrap() {
            None => prop_assert!(sols.is_empty()),
            Some((lo, hi)) => {
                for a in &sols {
                    prop_assert!(lo.is_below(a).unwrap() && a.is_below(&hi).unwrap());
                    for b in &sols {
                        prop_assert!(sols.contains(&a.and(b).unwrap()));
                        prop_assert!(sols.contains(&a.or(b).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn gauss_matches_enumeration(phi in arb_xor(12, 10)) {
        let sys = xor_to_system(&phi);
        let sol = gauss_solve(&sys);
        let enumerated: Vec<String> = {
            let mut v: Vec<String> = enumerate_solutions(&phi, &caps())
                .unwrap()
                .iter()
                .map(ToString::to_string)
                .collect();
            v.sort();
            v
        };
        let zero = vec![false; sys.num_rows()];
        for v in &sol.kernel_basis {
            prop_assert_eq!(sys.apply(v).unwrap(), zero.clone());
        }
        match &sol.particular {
            None => prop_assert!(enumerated.is_empty()),
            Some(p) => {
                prop_assert!(sys.is_solution(p).unwrap());
                prop_assert_eq!(sol.rank + sol.kernel_basis.len(), phi.num_vars());
                prop_assert_eq!(span(p, &sol.kernel_basis), enumerated);
            }
        }
    }

    #[test]
    fn restrict_keeps_class_flags(
        (phi, fixed) in arb_cnf(8, 10, 3).prop_flat_map(|phi| {
            let n = phi.num_vars();
            (Just(phi), prop::collection::vec(prop::option::of(any::<bool>()), n))
        })
    ) {
        let pa = PartialAssignment::from_pairs(
            phi.num_vars(),
            fixed.iter().enumerate().filter_map(|(i, v)| v.map(|b| (i + 1, b))),
        );
        let before = classify(&phi);
        if let Restriction::Formula(rest) = restrict(&phi, &pa) {
            let after = classify(&rest);
            prop_assert!(!before.horn || after.horn);
            prop_assert!(!before.dual_horn || after.dual_horn);
            prop_assert!(!before.is_2cnf() || after.is_2cnf());
            prop_assert!(rest.clauses().iter().all(|c| c.literals().iter().all(|l| pa.get(l.var()).is_none())));
        }
    }
}

#[test]
fn two_sat_agrees_with_enumeration() {
    for seed in 0..600u64 {
        let n = 2 + (seed % 15) as usize;
        let m = (seed % 23) as usize + n / 2;
        let phi = gen_cnf(InstanceKind::TwoCnf, GenParams::new(n, m), seed);
        let sols = enumerate_solutions(&phi, &caps()).unwrap();
        let model = solve_2sat(&phi).unwrap();
        assert_eq!(model.is_some(), !sols.is_empty(), "seed {seed}");
        if let Some(a) = model {
            assert!(sols.contains(&a));
        }
    }
}
