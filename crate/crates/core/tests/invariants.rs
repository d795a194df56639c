use gpc_core::constructions::{circular_complete, complete, cycle, kneser, petersen};
use gpc_core::invariants::{
    chromatic_number, circular_chromatic_number, f_closed_form, f_parameter, spectral_check,
};
use gpc_core::powers::{fractional_power, power, subdivide};
use gpc_core::{are_isomorphic, exists_hom, Graph, OddFraction, OddGirth, RationalValue};
use proptest::prelude::*;

fn og(g: &Graph) -> u64 {
    match g.odd_girth() {
        OddGirth::Finite(n) => n as u64,
        other => panic!("odd girth {other}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// χ(C_{2n+1}^{(2r+1)/(2s+1)}) = ⌈N/(⌊N/2⌋ - r)⌉ with N = (2n+1)(2s+1).
    #[test]
    fn chromatic_number_of_cycle_powers(n in 1u32..=4, s in 0u32..=2, r in 0u32..12) {
        let big = (2 * n + 1) * (2 * s + 1);
        prop_assume!(2 * r + 1 < big);
        let p = fractional_power(&cycle(2 * n as usize + 1), OddFraction::new(r, s)).unwrap();
        let expected = big.div_ceil(big / 2 - r) as usize;
        prop_assert_eq!(chromatic_number(&p).unwrap(), expected);
    }

    /// A fractional power has |V| + 2s|E| vertices and is a walk power of
    /// the subdivision.
    #[test]
    fn fractional_power_shape(n in 1usize..=4, s in 0u32..=2, r in 0u32..=4) {
        let g = cycle(2 * n + 1);
        prop_assume!(((2 * r + 1) as usize) < (2 * n + 1) * (2 * s as usize + 1));
        let p = fractional_power(&g, OddFraction::new(r, s)).unwrap();
        prop_assert_eq!(p.vertex_count(), g.vertex_count() + 2 * s as usize * g.edge_count());
        let q = power(&subdivide(&g, 2 * s as usize + 1).unwrap(), 2 * r as usize + 1).unwrap();
        prop_assert!(are_isomorphic(&p, &q));
    }

    /// Odd powers below the odd girth only grow along the exponent order.
    #[test]
    fn powers_are_monotone(n in 2usize..=4, a in 0u32..4, b in 0u32..4) {
        let g = cycle(2 * n + 1);
        let (lo, hi) = (a.min(b), a.max(b));
        prop_assume!((2 * hi as usize + 1) < 2 * n + 1);
        let pl = power(&g, 2 * lo as usize + 1).unwrap();
        let ph = power(&g, 2 * hi as usize + 1).unwrap();
        prop_assert!(exists_hom(&pl, &ph).unwrap().exists());
    }

    /// The circular clique K_{p/q} has χ_c = p/q.
    #[test]
    fn circular_clique_chi_c(q in 1usize..=3, extra in 0usize..=4) {
        let p = 2 * q + 1 + extra;
        let k = circular_complete(p, q).unwrap();
        let c = circular_chromatic_number(&k).unwrap();
        prop_assert_eq!(c, RationalValue::new(p as u64, q as u64));
        prop_assert_eq!(chromatic_number(&k).unwrap(), p.div_ceil(q));
    }
}

#[test]
fn f_parameter_matches_closed_form() {
    let graphs = [
        ("C5", cycle(5)),
        ("C7", cycle(7)),
        ("K4", complete(4)),
        ("K7/2", circular_complete(7, 2).unwrap()),
        ("Petersen", petersen()),
    ];
    for (name, g) in graphs {
        let chi_c = circular_chromatic_number(&g).unwrap();
        for t in 0..=2u32 {
            let max_n = ((2 * t as u64 + 1) * og(&g) - 1) / 2;
            let expected = f_closed_form(chi_c, t as u64).unwrap();
            match f_parameter(&g, t, max_n as u32) {
                Ok(f) => assert_eq!(f, expected, "{name}, t = {t}"),
                // A value of 1 means no odd cycle is a target at all.
                Err(e) => assert_eq!(expected, 1, "{name}, t = {t}: {e}"),
            }
        }
    }
}

#[test]
fn spectral_bound_never_contradicts_a_map() {
    let graphs = [
        cycle(5),
        cycle(7),
        cycle(9),
        petersen(),
        kneser(6, 2).unwrap(),
        circular_complete(7, 2).unwrap(),
        circular_complete(11, 4).unwrap(),
        complete(3),
    ];
    for g in &graphs {
        for n in 1..=5 {
            let report = spectral_check(g, n).unwrap();
            if exists_hom(g, &cycle(2 * n + 1)).unwrap().exists() {
                assert!(report.bound_satisfied, "{g:?} -> C{}", 2 * n + 1);
            }
        }
    }
}
