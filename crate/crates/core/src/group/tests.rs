use super::*;

fn perm(degree: usize, cycles: &[&[usize]]) -> Vec<u16> {
    cycles_to_images(degree, cycles)
}

fn sym(n: usize) -> GroupHandle {
    let c: Vec<usize> = (0..n).collect();
    GroupHandle::enumerate(
        Backend::Perm { degree: n },
        &[perm(n, &[&c]), perm(n, &[&[0, 1]])],
        DEFAULT_CAP,
    )
    .unwrap()
}

fn cyclic(n: usize) -> GroupHandle {
    let c: Vec<usize> = (0..n).collect();
    GroupHandle::enumerate(Backend::Perm { degree: n }, &[perm(n, &[&c])], DEFAULT_CAP).unwrap()
}

fn q8() -> GroupHandle {
    // regular representation on {1, i, j, k, -1, -i, -j, -k}
    let i = perm(8, &[&[0, 1, 4, 5], &[2, 7, 6, 3]]);
    let j = perm(8, &[&[0, 2, 4, 6], &[1, 3, 5, 7]]);
    GroupHandle::enumerate(Backend::Perm { degree: 8 }, &[i, j], 100).unwrap()
}

#[test]
fn s5_has_order_120() {
    let g = sym(5);
    assert_eq!(g.order(), 120);
    assert_eq!(g.max_element_order(), 6);
}

#[test]
fn identity_group() {
    let g = GroupHandle::enumerate(Backend::Perm { degree: 3 }, &[vec![0, 1, 2]], 10).unwrap();
    assert_eq!(g.order(), 1);
    assert_eq!(g.element_order(0), 1);
    assert!(g.is_cyclic());
}

#[test]
fn cap_and_degree_errors() {
    let c: Vec<usize> = (0..5).collect();
    let err = GroupHandle::enumerate(
        Backend::Perm { degree: 5 },
        &[perm(5, &[&c]), perm(5, &[&[0, 1]])],
        50,
    )
    .unwrap_err();
    assert_eq!(err, Error::CapExceeded { cap: 50 });
    let err = GroupHandle::enumerate(
        Backend::Perm { degree: 5 },
        &[perm(5, &[&c]), vec![1, 0, 2]],
        50,
    )
    .unwrap_err();
    assert_eq!(err, Error::MixedDegree);
    assert_eq!(
        GroupHandle::enumerate(Backend::Perm { degree: 2 }, &[], 5).unwrap_err(),
        Error::NoGenerators
    );
    assert!(GroupHandle::enumerate(Backend::Perm { degree: 3 }, &[vec![0, 0, 1]], 5).is_err());
}

#[test]
fn orders_are_cycle_lcms() {
    let g = sym(6);
    for x in g.ids() {
        let raw = g.element(x);
        let mut seen = [false; 6];
        let mut l = 1;
        for s in 0..6 {
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = raw[i] as usize;
                len += 1;
            }
            if len > 0 {
                l = lcm(l, len);
            }
        }
        assert_eq!(g.element_order(x), l);
        assert_eq!(g.order() % l, 0);
    }
}

#[test]
fn inverse_and_identity_laws() {
    let g = sym(5);
    for x in g.ids() {
        assert_eq!(g.mul(0, x), x);
        assert_eq!(g.mul(x, g.inv(x)), 0);
        assert_eq!(g.pow(x, g.element_order(x) as i64), 0);
    }
}

#[test]
fn associativity_sample() {
    use rand::{Rng, SeedableRng};
    let g = sym(6);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = g.order() as u32;
        let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        assert_eq!(g.inv(g.mul(a, b)), g.mul(g.inv(b), g.inv(a)));
    }
}

#[test]
fn commuting_examples() {
    let g = GroupHandle::enumerate(
        Backend::Perm { degree: 7 },
        &[
            perm(7, &[&[0, 1, 2, 3, 4, 5, 6]]),
            perm(7, &[&[0, 1, 2]]),
        ],
        DEFAULT_CAP,
    )
    .unwrap();
    assert_eq!(g.order(), 2520);
    let a = g.id_of(&perm(7, &[&[4, 5, 6]])).unwrap();
    let x = g.id_of(&perm(7, &[&[0, 1, 2, 3], &[4, 5]])).unwrap();
    let t = g.id_of(&perm(7, &[&[0, 1, 2]])).unwrap();
    let u = g.id_of(&perm(7, &[&[3, 4, 5]])).unwrap();
    assert!(g.commutes(x, x));
    assert!(!g.commutes(a, x));
    assert_eq!(g.conj(a, x), g.inv(a));
    assert!(g.commutes(t, u));
    let v = g.id_of(&perm(7, &[&[2, 3, 4]])).unwrap();
    assert!(!g.commutes(t, v));
}

/// `<x, y>` cyclic iff its closure has an element whose order is its size.
fn cyclic_oracle(g: &GroupHandle, x: Id, y: Id) -> bool {
    let s = g.subgroup_closure(&[x, y]);
    s.members().iter().any(|&z| g.element_order(z) == s.len())
}

#[test]
fn two_generated_matches_oracle() {
    let groups = vec![sym(4), q8(), cyclic(12), {
        let a = perm(7, &[&[0, 1]]);
        let b = perm(7, &[&[2, 3]]);
        let c = perm(7, &[&[4, 5, 6]]);
        GroupHandle::enumerate(Backend::Perm { degree: 7 }, &[a, b, c], 100).unwrap()
    }];
    for g in &groups {
        for x in g.ids() {
            for y in g.ids() {
                let r = g.two_generated_cyclic(x, y);
                assert_eq!(r.cyclic, cyclic_oracle(g, x, y), "{x} {y}");
                if let Some(z) = r.generator {
                    let s = g.subgroup_closure(&[x, y]);
                    assert_eq!(g.cyclic_subgroup(z).members, s);
                }
            }
        }
    }
}

#[test]
fn c2_c2_c3_pairs() {
    let g = GroupHandle::enumerate(
        Backend::Perm { degree: 7 },
        &[perm(7, &[&[0, 1]]), perm(7, &[&[2, 3]]), perm(7, &[&[4, 5, 6]])],
        100,
    )
    .unwrap();
    let a = g.id_of(&perm(7, &[&[0, 1]])).unwrap();
    let b = g.id_of(&perm(7, &[&[2, 3]])).unwrap();
    let c = g.id_of(&perm(7, &[&[4, 5, 6]])).unwrap();
    assert!(!g.two_generated_cyclic(a, b).cyclic);
    let r = g.two_generated_cyclic(a, c);
    assert!(r.cyclic);
    assert_eq!(g.element_order(r.generator.unwrap()), 6);
    assert!(g.two_generated_cyclic(c, g.pow(c, 2)).cyclic);
}

#[test]
fn closures_and_normality() {
    let s3 = sym(3);
    let r = s3.id_of(&perm(3, &[&[0, 1, 2]])).unwrap();
    let t = s3.id_of(&perm(3, &[&[0, 1]])).unwrap();
    assert_eq!(s3.subgroup_closure(&[0]).members(), &[0]);
    let rot = s3.subgroup_closure(&[r]);
    assert_eq!(rot.len(), 3);
    assert!(s3.is_normal(&rot));
    assert!(!s3.is_normal(&s3.subgroup_closure(&[t])));
    let all = SubgroupSet::from_ids(s3.ids().collect());
    assert!(s3.is_normal(&all));
}

#[test]
fn q8_mod_centre_is_klein() {
    let g = q8();
    assert_eq!(g.order(), 8);
    let z = g.central_involution().unwrap();
    let n = g.subgroup_closure(&[z]);
    let (q, proj) = g.quotient(&n).unwrap();
    assert_eq!(q.order(), 4);
    assert_eq!(q.max_element_order(), 2);
    for x in g.ids() {
        for y in g.ids() {
            assert_eq!(proj[g.mul(x, y) as usize], q.mul(proj[x as usize], proj[y as usize]));
        }
    }
}

#[test]
fn trivial_quotient_keeps_order() {
    let g = sym(4);
    let (q, proj) = g.quotient(&SubgroupSet::trivial()).unwrap();
    assert_eq!(q.order(), 24);
    let mut seen = proj.clone();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), 24);
}

#[test]
fn quotient_rejects_non_normal() {
    let s3 = sym(3);
    let t = s3.id_of(&perm(3, &[&[0, 1]])).unwrap();
    let n = s3.subgroup_closure(&[t]);
    assert_eq!(s3.quotient(&n).unwrap_err(), Error::NotNormal);
}

#[test]
fn products() {
    let c2 = cyclic(2);
    let c3 = cyclic(3);
    let p = c2.direct_product(&c3).unwrap();
    assert_eq!(p.order(), 6);
    assert!(p.is_cyclic());

    let a4 = GroupHandle::enumerate(
        Backend::Perm { degree: 4 },
        &[perm(4, &[&[0, 1, 2]]), perm(4, &[&[1, 2, 3]])],
        100,
    )
    .unwrap();
    assert_eq!(a4.direct_product(&sym(3)).unwrap().order(), 72);

    let q = q8();
    let qq = q.central_product(&q, q.central_involution().unwrap(), q.central_involution().unwrap());
    assert_eq!(qq.unwrap().order(), 32);
    assert_eq!(
        q.central_product(&q, 0, q.central_involution().unwrap())
            .unwrap_err(),
        Error::CentralElementMismatch
    );
}

#[test]
fn rendering() {
    let g = sym(4);
    let x = g.id_of(&perm(4, &[&[0, 1, 2, 3]])).unwrap();
    assert_eq!(g.render(x), "(1,2,3,4)");
    assert_eq!(g.render(0), "()");
}

#[test]
fn matrix_backend_gl2_3() {
    use crate::field::FieldTable;
    use std::sync::Arc;
    let f = Arc::new(FieldTable::new(3, 1).unwrap());
    let b = Backend::Matrix { dim: 2, field: f };
    // generators of GL(2,3)
    let g = GroupHandle::enumerate(b, &[vec![2, 0, 0, 1], vec![2, 1, 2, 0]], 1000).unwrap();
    assert_eq!(g.order(), 48);
    assert_eq!(g.permutation_degree(), 8);
    // the action on nonzero vectors is faithful
    let images: std::collections::HashSet<Vec<u16>> =
        g.ids().map(|x| g.permutation_image(x)).collect();
    assert_eq!(images.len(), 48);
    assert!(g.backend().validate(&[1, 1, 1, 1]).is_err());
}
