use liecohom::catalog::all_rings;
use liecohom::cohomology::{coboundary_from, h2};
use liecohom::extensions::{
    are_equivalent, are_equivalent_in, brute_equivalent, classify_extensions,
    cocycle_from_extension, extension_from_cocycle, find_equivalence, is_split, section_of,
    Section,
};
use liecohom::liering::LieRing;
use liecohom::{Error, FinAbGroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn coefficient_groups() -> Vec<FinAbGroup> {
    vec![FinAbGroup::cyclic(2), FinAbGroup::cyclic(3)]
}

fn random_coboundary(l: &LieRing, a: &FinAbGroup, rng: &mut ChaCha8Rng) -> liecohom::Cocycle {
    let n = l.size().unwrap();
    let mut t: Vec<Vec<i64>> = (0..n)
        .map(|_| {
            a.moduli()
                .iter()
                .map(|&m| rng.random_range(0..m) as i64)
                .collect()
        })
        .collect();
    t[0] = vec![0; a.rank()];
    coboundary_from(l, a, &t).unwrap()
}

#[test]
fn cocycle_extension_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cases = [
        (LieRing::abelian(&[2]).unwrap(), FinAbGroup::cyclic(2)),
        (LieRing::abelian(&[2, 2]).unwrap(), FinAbGroup::cyclic(4)),
        (LieRing::heisenberg(2).unwrap(), FinAbGroup::cyclic(2)),
        (
            LieRing::abelian(&[3]).unwrap(),
            FinAbGroup::new(&[3, 3]).unwrap(),
        ),
        (
            LieRing::new(&[4, 2], &[((0, 1), vec![2, 0])]).unwrap(),
            FinAbGroup::cyclic(2),
        ),
    ];
    for (l, a) in cases {
        let h = h2(&l, &a).unwrap();
        for class in h.group().elements() {
            let rep = h.representative(&class).unwrap();
            let ext = extension_from_cocycle(&rep).unwrap();
            let order = |g: &FinAbGroup| g.order();
            assert_eq!(
                order(ext.total().additive()),
                order(l.additive()) * order(&a)
            );
            let back = cocycle_from_extension(&ext, &section_of(&ext).unwrap()).unwrap();
            assert_eq!(h.class_of(&back).unwrap(), class);

            // a different section changes the cocycle by a coboundary only
            let lam = section_of(&ext).unwrap();
            let b = ext.total().additive();
            let values: Vec<Vec<u64>> = lam
                .values()
                .iter()
                .enumerate()
                .map(|(x, v)| {
                    if x == 0 {
                        return v.clone();
                    }
                    let s: Vec<i64> = a
                        .moduli()
                        .iter()
                        .map(|&m| rng.random_range(0..m) as i64)
                        .collect();
                    let shift = ext.iota().apply(a.element(&s).unwrap().coeffs());
                    let sum = b
                        .element_raw(v.clone())
                        .unwrap()
                        .add(&b.element_raw(shift).unwrap())
                        .unwrap();
                    sum.into_coeffs()
                })
                .collect();
            let mu = Section::new(&ext, values).unwrap();
            let twisted = cocycle_from_extension(&ext, &mu).unwrap();
            assert!(twisted.is_cocycle().unwrap());
            assert_eq!(h.class_of(&twisted).unwrap(), class);
        }
    }
}

#[test]
fn equivalence_agrees_with_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut pairs = 0;
    for l in all_rings(4) {
        for a in coefficient_groups() {
            let h = h2(&l, &a).unwrap();
            let classes = classify_extensions(&l, &a).unwrap();
            assert_eq!(
                classes.len() as u64,
                h.group().order().try_into().unwrap_or(u64::MAX)
            );
            for e in &classes {
                for f in &classes {
                    let fast = are_equivalent_in(&h, &e.extension, &f.extension).unwrap();
                    assert_eq!(fast, brute_equivalent(&e.extension, &f.extension).unwrap());
                    assert_eq!(fast, e.class == f.class);
                    pairs += 1;
                }
            }
            for _ in 0..10 {
                let k = rng.random_range(0..classes.len());
                let rep = h.representative(&classes[k].class).unwrap();
                let twisted = rep.add(&random_coboundary(&l, &a, &mut rng)).unwrap();
                let ext = extension_from_cocycle(&twisted).unwrap();
                for (j, other) in classes.iter().enumerate() {
                    let fast = are_equivalent(&ext, &other.extension).unwrap();
                    assert_eq!(fast, j == k);
                    assert_eq!(fast, brute_equivalent(&ext, &other.extension).unwrap());
                    if let Some(gamma) = find_equivalence(&ext, &other.extension).unwrap() {
                        assert!(gamma.map().is_injective());
                    }
                    pairs += 1;
                }
            }
        }
    }
    assert!(pairs > 100);
}

#[test]
fn exactly_one_split_class() {
    for l in all_rings(4) {
        for a in coefficient_groups() {
            let classes = classify_extensions(&l, &a).unwrap();
            let split: Vec<_> = classes.iter().filter(|c| c.split).collect();
            assert_eq!(split.len(), 1);
            assert!(split[0].class.iter().all(|&c| c == 0));
            let ext = &split[0].extension;
            let mu = is_split(ext).unwrap().expect("split class has a section");
            let total = ext.total();
            let t = l.tables().unwrap();
            let b = total.additive();
            let n = l.size().unwrap();
            let el = |v: &[u64]| b.element_raw(v.to_vec()).unwrap();
            for x in 0..n {
                for y in 0..n {
                    let sum = el(mu.value(x)).add(&el(mu.value(y))).unwrap();
                    assert_eq!(sum.coeffs(), mu.value(t.add(x, y)));
                    assert_eq!(
                        total.bracket_raw(mu.value(x), mu.value(y)),
                        mu.value(t.bracket(x, y))
                    );
                }
            }
            for c in classes.iter().filter(|c| !c.split) {
                assert!(is_split(&c.extension).unwrap().is_none());
            }
        }
    }
}

#[test]
fn mismatched_extensions_are_rejected() {
    let l = LieRing::abelian(&[2]).unwrap();
    let e = &classify_extensions(&l, &FinAbGroup::cyclic(2)).unwrap()[0].extension;
    let f = &classify_extensions(&l, &FinAbGroup::cyclic(3)).unwrap()[0].extension;
    assert!(matches!(are_equivalent(e, f), Err(Error::ParentMismatch)));
    let bad = Section::new(e, vec![vec![0; e.total().rank()]; 2]);
    assert!(bad.is_err());
}
