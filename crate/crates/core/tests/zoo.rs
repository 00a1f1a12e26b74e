use epg::expr::{parse, GroupExpr};
use epg::group::DEFAULT_CAP;
use epg::zoo::{build_named, expected_order, k_a7, psl3_witnesses};
use proptest::prelude::*;

fn order(s: &str) -> usize {
    build_named(&parse(s).unwrap(), DEFAULT_CAP).unwrap().group.order()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// |PSL(n,q)| = q^(n(n-1)/2) * prod_{i=2..n} (q^i - 1) / gcd(n, q-1).
fn psl_order(n: u32, q: usize) -> usize {
    let mut o = q.pow(n * (n - 1) / 2);
    for i in 2..=n {
        o *= q.pow(i) - 1;
    }
    o / gcd(n as usize, q - 1)
}

#[test]
fn closed_form_orders() {
    for q in [2usize, 3, 4, 5, 7, 8, 9, 11, 13] {
        assert_eq!(order(&format!("PSL(2,{q})")), psl_order(2, q), "PSL(2,{q})");
    }
    for q in [3usize, 4, 5] {
        assert_eq!(order(&format!("PSL(3,{q})")), psl_order(3, q), "PSL(3,{q})");
    }
    assert_eq!(order("SL(2,3)"), 24);
    // q^3 (q^3 + 1)(q^2 - 1) / gcd(3, q + 1)
    assert_eq!(order("PSU(3,3)"), 27 * 28 * 8);
    // q^2 (q - 1)(q^2 + 1)
    assert_eq!(order("Sz(8)"), 64 * 7 * 65);
    for (s, o) in [("M11", 7920), ("M12", 95040), ("M22", 443520), ("J1", 175560)] {
        assert_eq!(order(s), o, "{s}");
    }
    assert_eq!(order("A8"), 20160);
    assert_eq!(order("S6"), 720);
    assert_eq!(order("D12"), 12);
    assert_eq!(order("CP(SL(2,3),Q8)"), 24 * 8 / 2);
    assert_eq!(order("Quo(Q8 x C3,Cyc)"), 4);
}

#[test]
fn expected_orders_match_builds() {
    for s in ["C30", "E3^3", "D20", "A6 x C2", "PSL(3,3)", "Sz(8)", "K_A7", "SL(2,3) x Q8"] {
        let e = parse(s).unwrap();
        assert_eq!(expected_order(&e), Some(order(s) as u128), "{s}");
    }
}

#[test]
fn k_is_c3_by_d8() {
    let (k, w) = k_a7().unwrap();
    assert_eq!(k.order(), 24);
    let a = w.get("a").unwrap();
    let n = k.subgroup_closure(&[a]);
    assert_eq!(n.len(), 3);
    assert!(k.is_normal(&n));
    // the complement <x, y> is dihedral of order 8: five involutions
    let h = k.subgroup_handle(&[w.get("x").unwrap(), w.get("y").unwrap()]).unwrap();
    assert_eq!(h.order(), 8);
    assert_eq!(h.ids().filter(|&z| h.element_order(z) == 2).count(), 5);
    // and acts faithfully: x inverts a
    let x = w.get("x").unwrap();
    assert_eq!(k.conj(a, x), k.inv(a));
}

#[test]
fn psl3_labelled_orders() {
    for (q, x_order) in [(3u32, 2usize), (5, 4)] {
        let (g, w) = psl3_witnesses(q).unwrap();
        let (a, x) = (w.get("a").unwrap(), w.get("x").unwrap());
        assert_eq!(g.element_order(a), q as usize);
        assert_eq!(g.element_order(x), x_order);
        let ax = g.two_generated_cyclic(a, x);
        assert!(ax.cyclic);
        assert_eq!(g.element_order(ax.generator.unwrap()), q as usize * x_order);
    }
}

fn atom() -> impl Strategy<Value = String> {
    prop_oneof![
        (1u32..40).prop_map(|n| format!("C{n}")),
        (prop_oneof![Just(2u32), Just(3), Just(5)], 1u32..4).prop_map(|(p, k)| format!("E{p}^{k}")),
        (2u32..12).prop_map(|n| format!("D{}", 2 * n)),
        Just("Q8".to_string()),
        (3u32..8).prop_map(|n| format!("A{n}")),
        (2u32..7).prop_map(|n| format!("S{n}")),
        prop_oneof![Just(3u32), Just(4), Just(5), Just(7)].prop_map(|q| format!("PSL(2,{q})")),
        Just("SL(2,3)".to_string()),
        Just("Sz(8)".to_string()),
        Just("M11".to_string()),
        Just("K_A7".to_string()),
    ]
}

fn expression() -> impl Strategy<Value = String> {
    atom().prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a}) x ({b})")),
            inner.prop_map(|a| format!("Quo({a},Cyc)")),
        ]
    })
}

proptest! {
    #[test]
    fn parse_print_round_trip(s in expression()) {
        let e: GroupExpr = parse(&s).unwrap();
        let printed = e.to_string();
        prop_assert_eq!(parse(&printed).unwrap(), e.clone());
        prop_assert_eq!(parse(&printed).unwrap().to_string(), printed);
    }
}
