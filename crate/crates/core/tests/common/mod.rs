//! Random subresiduated lattices for property tests.

#![allow(dead_code)]

use proptest::prelude::*;
use snalab_core::{make_srl, ElemSet, FiniteLattice, Srl};

/// Product of chains with `lengths[i]` elements each, ordered coordinatewise.
pub fn chain_product(lengths: &[usize]) -> FiniteLattice {
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for &k in lengths {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                (0..k).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    let names = tuples
        .iter()
        .map(|t| t.iter().map(|i| i.to_string()).collect::<String>())
        .collect();
    let n = tuples.len();
    let leq = (0..n * n)
        .map(|i| tuples[i / n].iter().zip(&tuples[i % n]).all(|(a, b)| a <= b))
        .collect();
    FiniteLattice::from_leq(names, leq).expect("products of chains are lattices")
}

/// The bounded sublattice generated by `seed` together with 0 and 1.
pub fn close_bounded(l: &FiniteLattice, seed: &[bool]) -> ElemSet {
    let n = l.size();
    let mut s = ElemSet::from_elems(n, (0..n).filter(|&x| seed[x % seed.len()]));
    s.insert(l.bottom());
    s.insert(l.top());
    loop {
        let members = s.to_vec();
        let mut grew = false;
        for &x in &members {
            for &y in &members {
                grew |= s.insert(l.meet(x, y));
                grew |= s.insert(l.join(x, y));
            }
        }
        if !grew {
            return s;
        }
    }
}

/// Sr-lattices on products of at most two chains of length 2 or 3.
pub fn arb_srl() -> impl Strategy<Value = Srl> {
    (
        prop::collection::vec(2usize..=3, 1..=2),
        prop::collection::vec(any::<bool>(), 9),
    )
        .prop_map(|(lengths, seed)| {
            let l = chain_product(&lengths);
            let d = close_bounded(&l, &seed);
            make_srl(l, d).expect("a bounded sublattice gives an sr-lattice")
        })
}

/// `max{d in D : a ^ d <= b}` by direct search.
pub fn imp_oracle(s: &Srl, a: usize, b: usize) -> usize {
    let candidates: Vec<usize> = s.d_set().iter().filter(|&d| s.leq(s.meet(a, d), b)).collect();
    *candidates
        .iter()
        .find(|&&m| candidates.iter().all(|&d| s.leq(d, m)))
        .expect("the maximum exists")
}
