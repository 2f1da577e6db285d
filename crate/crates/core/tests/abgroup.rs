use std::collections::BTreeSet;

use liecohom::abgroup::{hom_group, quotient, solve_congruences};
use liecohom::snf::{snf, IntMatrix};
use liecohom::{AbHom, FinAbGroup, Subgroup};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

fn moduli() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(2u64..7, 0..4)
}

fn group_and_elems(max_gens: usize) -> impl Strategy<Value = (Vec<u64>, Vec<Vec<u64>>)> {
    moduli().prop_flat_map(move |m| {
        let elem: Vec<_> = m.iter().map(|&d| 0..d).collect();
        (Just(m), prop::collection::vec(elem, 0..=max_gens))
    })
}

fn span(g: &FinAbGroup, gens: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    seen.insert(vec![0; g.rank()]);
    let mut frontier = vec![vec![0; g.rank()]];
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y: Vec<u64> = x
                .iter()
                .zip(s)
                .zip(g.moduli())
                .map(|((a, b), m)| (a + b) % m)
                .collect();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

fn big_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..13, 1usize..13)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-50i64..=50, c), r))
}

/// Integer-lift route: kernel of `[A | diag(r)]` over Z, projected to the
/// unknowns and reduced mod the column moduli.
fn congruence_oracle(rows: &[Vec<i64>], row_moduli: &[u64], col_moduli: &[u64]) -> Subgroup {
    let k = col_moduli.len();
    let width = k + rows.len();
    let lifted: Vec<Vec<i64>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..rows.len()).map(|j| if i == j { row_moduli[i] as i64 } else { 0 }));
            v
        })
        .collect();
    let m = IntMatrix::from_rows(&lifted, width);
    let s = snf(&m);
    let rank = s.rank();
    let mut gens = Vec::new();
    for t in rank..width {
        let g: Vec<u64> = (0..k)
            .map(|i| {
                let c = BigInt::from(col_moduli[i]);
                let v = ((s.v.get(i, t) % &c) + &c) % &c;
                v.to_u64().unwrap()
            })
            .collect();
        gens.push(g);
    }
    // columns of the lifted relation kernel miss the c_j e_j directions
    let parent = FinAbGroup::from_moduli(col_moduli.to_vec()).unwrap();
    Subgroup::from_raw(parent, gens)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn snf_postconditions(rows in big_matrix()) {
        let cols = rows[0].len();
        let m = IntMatrix::from_rows(&rows, cols);
        let s = snf(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.s.clone());
        prop_assert!(s.s.is_diagonal());
        let d = s.diagonal();
        for w in d.windows(2) {
            if !w[1].is_zero() {
                prop_assert!(!w[0].is_zero());
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
        prop_assert!(d.iter().all(|x| !x.is_negative()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn subgroup_order_matches_span((m, gens) in group_and_elems(3)) {
        let g = FinAbGroup::from_moduli(m).unwrap();
        let s = Subgroup::from_raw(g.clone(), gens.clone());
        let brute = span(&g, &gens);
        prop_assert_eq!(s.order().to_usize().unwrap(), brute.len());
        for x in g.elements() {
            prop_assert_eq!(s.contains_raw(&x), brute.contains(&x));
        }
    }

    #[test]
    fn quotient_kernel_is_subgroup((m, gens) in group_and_elems(3)) {
        let g = FinAbGroup::from_moduli(m).unwrap();
        let s = Subgroup::from_raw(g.clone(), gens);
        let (q, proj, _) = quotient(&g, &s).unwrap();
        prop_assert_eq!(proj.kernel(), s.clone());
        prop_assert!(proj.is_surjective());
        prop_assert_eq!(q.order() * s.order(), g.order());
    }

    #[test]
    fn kernel_image_orders(
        (m, imgs) in group_and_elems(3),
        dom in moduli(),
    ) {
        let cod = FinAbGroup::from_moduli(m).unwrap();
        let dom = FinAbGroup::from_moduli(dom).unwrap();
        // scale arbitrary images so the map is well defined
        let images: Vec<Vec<u64>> = (0..dom.rank())
            .map(|i| {
                let base = imgs.get(i).cloned().unwrap_or_else(|| vec![0; cod.rank()]);
                let d = dom.moduli()[i];
                base.iter()
                    .zip(cod.moduli())
                    .map(|(&x, &c)| (x * (c / num_integer::gcd(c, d))) % c)
                    .collect()
            })
            .collect();
        let h = AbHom::new(dom.clone(), cod, images).unwrap();
        prop_assert_eq!(h.kernel().order() * h.image().order(), dom.order());
        let brute_kernel = dom.elements().filter(|x| h.apply(x).iter().all(|&c| c == 0)).count();
        prop_assert_eq!(h.kernel().order().to_usize().unwrap(), brute_kernel);
    }

    #[test]
    fn hom_group_counts(a in moduli(), b in moduli()) {
        let ga = FinAbGroup::from_moduli(a).unwrap();
        let gb = FinAbGroup::from_moduli(b).unwrap();
        let hg = hom_group(&ga, &gb);
        // brute force: assignments of generator images killed by the orders
        let mut count = 1usize;
        for &d in ga.moduli() {
            count *= gb.elements().filter(|y| y.iter().zip(gb.moduli()).all(|(&c, &m)| (c * d) % m == 0)).count();
        }
        prop_assert_eq!(hg.group().order().to_usize().unwrap(), count);
        for e in hg.group().elements().take(50) {
            prop_assert_eq!(hg.from_hom(&hg.to_hom(&e)).unwrap(), e);
        }
    }

    #[test]
    fn congruences_against_brute_force_and_lift(
        cols in prop::collection::vec(2u64..7, 1..4),
        rows in prop::collection::vec((prop::collection::vec(-6i64..7, 3), 2u64..7), 0..4),
    ) {
        let k = cols.len();
        let mut a = Vec::new();
        let mut rm = Vec::new();
        for (r, m) in rows {
            // make each row well defined: scale coefficient j by m / gcd(m, c_j)
            let row: Vec<i64> = (0..k)
                .map(|j| r[j] * (m / num_integer::gcd(m, cols[j])) as i64)
                .collect();
            a.push(row);
            rm.push(m);
        }
        let s = solve_congruences(&a, &rm, &cols).unwrap();
        let g = FinAbGroup::from_moduli(cols.clone()).unwrap();
        let brute: Vec<Vec<u64>> = g
            .elements()
            .filter(|x| {
                a.iter().zip(&rm).all(|(r, &m)| {
                    let v: i64 = r.iter().zip(x).map(|(&c, &xi)| c * xi as i64).sum();
                    v.rem_euclid(m as i64) == 0
                })
            })
            .collect();
        prop_assert_eq!(s.order().to_usize().unwrap(), brute.len());
        for x in &brute {
            prop_assert!(s.contains_raw(x));
        }
        prop_assert_eq!(congruence_oracle(&a, &rm, &cols), s);
    }
}

#[test]
fn spec_examples() {
    let g = FinAbGroup::new(&[2, 12]).unwrap();
    assert_eq!(g.invariant_factors(), vec![2, 12]);
    assert_eq!(
        FinAbGroup::new(&[4, 6]).unwrap().invariant_factors(),
        vec![2, 12]
    );
    assert_eq!(
        FinAbGroup::new(&[2, 3]).unwrap().invariant_factors(),
        vec![6]
    );
    let z = solve_congruences(&[vec![2]], &[4], &[4]).unwrap();
    assert_eq!(z.order(), 2u32.into());
}
