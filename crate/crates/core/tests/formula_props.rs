mod common;

use common::{arb_cnf, arb_xor};
use divsat::formula::dimacs::{emit_dimacs, emit_xdimacs, parse_dimacs, parse_xdimacs};
use divsat::formula::{classify, eval, hamming, Assignment, CnfFormula};
use proptest::prelude::*;

fn arb_pair(n: usize) -> impl Strategy<Value = (Assignment, Assignment)> {
    let bits = move || prop::collection::vec(any::<bool>(), n).prop_map(Assignment::from_bools);
    (bits(), bits())
}

fn naive_eval(phi: &CnfFormula, alpha: &Assignment) -> bool {
    phi.clauses().iter().all(|c| {
        c.literals()
            .iter()
            .any(|l| alpha.get(l.var() - 1) != l.is_negated())
    })
}

proptest! {
    #[test]
    fn classify_is_consistent(phi in arb_cnf(8, 10, 4)) {
        let c = classify(&phi);
        prop_assert!(!c.antimonotone || c.horn);
        prop_assert!(!c.monotone || c.dual_horn);
        prop_assert_eq!(c.double_horn, c.horn && c.dual_horn);
        prop_assert_eq!(c.is_2cnf(), c.max_clause_width <= 2);
        prop_assert_eq!(phi.classify(), c);
    }

    #[test]
    fn hamming_identities((a, b) in (0usize..70).prop_flat_map(arb_pair)) {
        let n = a.len();
        let d = hamming(&a, &b).unwrap();
        prop_assert_eq!(d, a.xor(&b).unwrap().weight());
        prop_assert_eq!(hamming(&a, &b.complement()).unwrap(), n - d);
        prop_assert_eq!(hamming(&b, &a).unwrap(), d);
        prop_assert_eq!(a.hamming(&a).unwrap(), 0);
    }

    #[test]
    fn dimacs_round_trip(phi in arb_cnf(12, 12, 4)) {
        let text = emit_dimacs(&phi);
        let back = parse_dimacs(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &phi);
        prop_assert_eq!(emit_dimacs(&back), text);
    }

    #[test]
    fn xdimacs_round_trip(phi in arb_xor(12, 10)) {
        let text = emit_xdimacs(&phi);
        let back = parse_xdimacs(text.as_bytes()).unwrap();
        prop_assert_eq!(&back, &phi);
        prop_assert_eq!(emit_xdimacs(&back), text);
    }

    #[test]
    fn eval_matches_naive(
        (phi, alpha) in arb_cnf(10, 12, 3).prop_flat_map(|phi| {
            let n = phi.num_vars();
            (Just(phi), prop::collection::vec(any::<bool>(), n).prop_map(Assignment::from_bools))
        })
    ) {
        prop_assert_eq!(eval(&phi, &alpha).unwrap(), naive_eval(&phi, &alpha));
    }
}

#[test]
fn eval_rejects_wrong_length() {
    let phi = CnfFormula::from_dimacs_clauses(3, &[&[1, 2]]).unwrap();
    assert!(eval(&phi, &Assignment::zeros(2)).is_err());
}
