use liecohom::catalog::{all_rings, central_ideals};
use liecohom::liering::LieRing;
use liecohom::Error;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn fixtures() -> Vec<LieRing> {
    let mut v = all_rings(8);
    v.push(LieRing::heisenberg(3).unwrap());
    v.push(LieRing::heisenberg(5).unwrap());
    v.push(LieRing::new(&[4, 2], &[((0, 1), vec![2, 0])]).unwrap());
    v.push(
        LieRing::heisenberg(2)
            .unwrap()
            .direct_sum(&LieRing::abelian(&[4]).unwrap()),
    );
    v
}

fn random_elem(ring: &LieRing, rng: &mut ChaCha8Rng) -> Vec<u64> {
    ring.moduli()
        .iter()
        .map(|&d| rng.random_range(0..d))
        .collect()
}

#[test]
fn random_axiom_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for ring in fixtures() {
        let g = ring.additive();
        for _ in 0..1000 {
            let x = random_elem(&ring, &mut rng);
            let y = random_elem(&ring, &mut rng);
            let z = random_elem(&ring, &mut rng);
            assert!(ring.jacobiator(&x, &y, &z).iter().all(|&c| c == 0));
            assert!(ring.bracket_raw(&x, &x).iter().all(|&c| c == 0));
            let lhs = ring.bracket_raw(&g.element_at(g.index_of(&x)), &y);
            let xy = ring.bracket_raw(&x, &y);
            assert_eq!(lhs, xy);
            let sum: Vec<u64> = x
                .iter()
                .zip(&y)
                .zip(g.moduli())
                .map(|((a, b), m)| (a + b) % m)
                .collect();
            let left = ring.bracket_raw(&sum, &z);
            let right: Vec<u64> = ring
                .bracket_raw(&x, &z)
                .iter()
                .zip(ring.bracket_raw(&y, &z))
                .zip(g.moduli())
                .map(|((a, b), m)| (a + b) % m)
                .collect();
            assert_eq!(left, right);
        }
    }
}

#[test]
fn center_matches_brute_force() {
    for ring in fixtures() {
        let z = ring.center().subgroup;
        for x in ring.additive().elements() {
            let central = ring
                .additive()
                .elements()
                .all(|y| ring.bracket_raw(&x, &y).iter().all(|&c| c == 0));
            assert_eq!(z.contains_raw(&x), central, "{ring:?}");
        }
        for h in central_ideals(&ring).unwrap() {
            let q = ring.quotient(&h).unwrap();
            assert_eq!(
                q.ring.additive().order() * h.subgroup.order(),
                ring.additive().order()
            );
        }
    }
}

#[test]
fn derived_is_span_of_brackets() {
    for ring in fixtures() {
        let d = ring.derived().subgroup;
        let g = ring.additive();
        for x in g.elements() {
            for y in g.elements().step_by(3) {
                assert!(d.contains_raw(&ring.bracket_raw(&x, &y)));
            }
        }
        let abel = ring.quotient(&ring.derived()).unwrap();
        assert!(abel.ring.is_abelian());
    }
}

#[test]
fn validation_errors() {
    assert_eq!(
        LieRing::new(&[2, 4], &[((0, 1), vec![0, 1])]).unwrap_err(),
        Error::OrderIncompatible {
            i: 0,
            j: 1,
            killer: 0
        }
    );
    assert!(matches!(
        LieRing::new(&[2, 2], &[((0, 1), vec![1])]),
        Err(Error::DimensionMismatch { .. })
    ));
    assert!(matches!(
        LieRing::new(&[2, 2], &[((0, 2), vec![1, 0])]),
        Err(Error::BracketIndex { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_tables_validate_iff_jacobi(c in prop::collection::vec(0i64..2, 9)) {
        let entries = vec![
            ((0, 1), c[0..3].to_vec()),
            ((0, 2), c[3..6].to_vec()),
            ((1, 2), c[6..9].to_vec()),
        ];
        let res = LieRing::new(&[2, 2, 2], &entries);
        match res {
            Ok(ring) => {
                for x in ring.additive().elements() {
                    for y in ring.additive().elements() {
                        for z in ring.additive().elements() {
                            prop_assert!(ring.jacobiator(&x, &y, &z).iter().all(|&v| v == 0));
                        }
                    }
                }
            }
            Err(e) => {
                let jacobi = matches!(e, Error::JacobiFailure { .. });
                prop_assert!(jacobi);
            }
        }
    }
}
