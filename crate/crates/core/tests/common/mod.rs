#![allow(dead_code)]

use divsat::formula::{Clause, CnfFormula, Literal, XorClause, XorFormula};
use divsat::graph::Graph;
use divsat::oracle::OracleCaps;
use divsat::reductions::{random_instance, GenParams, Instance, InstanceKind};
use proptest::prelude::*;

pub fn caps() -> OracleCaps {
    OracleCaps::default()
}

pub fn gen_cnf(kind: InstanceKind, params: GenParams, seed: u64) -> CnfFormula {
    match random_instance(kind, params, seed).unwrap() {
        Instance::Cnf(phi) => phi,
        other => panic!("expected cnf, got {other:?}"),
    }
}

pub fn gen_xor(params: GenParams, seed: u64) -> XorFormula {
    match random_instance(InstanceKind::Xor, params, seed).unwrap() {
        Instance::Xor(phi) => phi,
        other => panic!("expected xor, got {other:?}"),
    }
}

fn arb_literal(n: usize) -> impl Strategy<Value = Literal> {
    (1..=n, any::<bool>()).prop_map(|(v, neg)| Literal::new(v, neg))
}

/// Clauses of width `1..=max_width` over `1..=max_n` variables.
pub fn arb_cnf(max_n: usize, max_m: usize, max_width: usize) -> impl Strategy<Value = CnfFormula> {
    (1..=max_n).prop_flat_map(move |n| {
        let clause = prop::collection::vec(arb_literal(n), 1..=max_width)
            .prop_map(|lits| Clause::new(lits).unwrap());
        prop::collection::vec(clause, 0..=max_m).prop_map(move |cs| CnfFormula::new(n, cs).unwrap())
    })
}

pub fn arb_xor(max_n: usize, max_m: usize) -> impl Strategy<Value = XorFormula> {
    (1..=max_n).prop_flat_map(move |n| {
        let clause = (
            prop::collection::btree_set(1..=n, 1..=n.min(4)),
            any::<bool>(),
        )
            .prop_map(|(vars, rhs)| XorClause::new(vars, rhs).unwrap());
        prop::collection::vec(clause, 0..=max_m).prop_map(move |cs| XorFormula::new(n, cs).unwrap())
    })
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::new(n, edges).unwrap()
        })
    })
}
