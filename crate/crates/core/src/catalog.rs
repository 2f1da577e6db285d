//! Small Lie rings: abelian types, exhaustive structure-constant search, and
//! the subgroups of the center.

use crate::abgroup::{killed_by, AbHom, FinAbGroup, Subgroup};
use crate::error::Result;
use crate::liering::{LieIdeal, LieRing};

/// Invariant-factor lists `d_1 | d_2 | ...` (all `d_i > 1`) of every abelian
/// group of order at most `max_order`, the trivial group first.
pub fn abelian_types(max_order: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, order: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        let last = prefix.last().copied();
        let start = last.unwrap_or(2);
        let mut d = start;
        while order * d <= max {
            if last.is_none_or(|l| d % l == 0) {
                prefix.push(d);
                extend(prefix, order * d, max, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut out);
    out.sort_by_key(|t| (t.iter().product::<u64>(), t.clone()));
    out
}

/// Additive bijections `a -> b` preserving brackets, found by search.
pub fn find_isomorphism(a: &LieRing, b: &LieRing) -> Option<AbHom> {
    let (ga, gb) = (a.additive(), b.additive());
    if ga.invariant_factors() != gb.invariant_factors() {
        return None;
    }
    let elems: Vec<Vec<u64>> = gb.elements().collect();
    let r = ga.rank();
    let options: Vec<Vec<usize>> = ga
        .moduli()
        .iter()
        .map(|&d| {
            (0..elems.len())
                .filter(|&i| gb.element_order(&elems[i]) == d)
                .collect()
        })
        .collect();
    let mut pick = vec![0usize; r];
    loop {
        if options.iter().any(Vec::is_empty) {
            return None;
        }
        let images: Vec<Vec<u64>> = (0..r).map(|i| elems[options[i][pick[i]]].clone()).collect();
        if (0..r).all(|i| killed_by(gb, &images[i], ga.moduli()[i])) {
            let h = AbHom::new(ga.clone(), gb.clone(), images.clone()).expect("checked");
            let brackets = (0..r).all(|i| {
                (i + 1..r).all(|j| {
                    h.apply(&a.structure_constant(i, j)) == b.bracket_raw(&images[i], &images[j])
                })
            });
            if brackets && h.is_injective() {
                return Some(h);
            }
        }
        let mut i = r;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < options[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

/// Every valid bracket table on the given additive group, up to
/// isomorphism. The abelian ring comes first.
pub fn rings_on(moduli: &[u64]) -> Vec<LieRing> {
    let group = FinAbGroup::from_moduli(moduli.to_vec()).expect("valid moduli");
    let r = group.rank();
    let pairs: Vec<(usize, usize)> = (0..r)
        .flat_map(|i| (i + 1..r).map(move |j| (i, j)))
        .collect();
    let choices: Vec<Vec<Vec<u64>>> = pairs
        .iter()
        .map(|&(i, j)| {
            group
                .elements()
                .filter(|x| killed_by(&group, x, moduli[i]) && killed_by(&group, x, moduli[j]))
                .collect()
        })
        .collect();
    let mut classes: Vec<LieRing> = Vec::new();
    let mut pick = vec![0usize; pairs.len()];
    loop {
        let entries: Vec<((usize, usize), Vec<i64>)> = pairs
            .iter()
            .zip(&pick)
            .enumerate()
            .map(|(p, (&ij, &k))| (ij, choices[p][k].iter().map(|&x| x as i64).collect()))
            .collect();
        let signed: Vec<i64> = moduli.iter().map(|&m| m as i64).collect();
        if let Ok(ring) = LieRing::new(&signed, &entries) {
            if !classes.iter().any(|c| find_isomorphism(c, &ring).is_some()) {
                classes.push(ring);
            }
        }
        let mut p = pick.len();
        loop {
            if p == 0 {
                return classes;
            }
            p -= 1;
            pick[p] += 1;
            if pick[p] < choices[p].len() {
                break;
            }
            pick[p] = 0;
        }
    }
}

/// All Lie rings of order at most `max_order` up to isomorphism, by
/// exhaustive search over structure constants on each abelian type.
pub fn all_rings(max_order: u64) -> Vec<LieRing> {
    abelian_types(max_order)
        .iter()
        .flat_map(|t| rings_on(t))
        .collect()
}

/// Every subgroup of the center, each as a central ideal.
pub fn central_ideals(ring: &LieRing) -> Result<Vec<LieIdeal>> {
    let z = ring.center().subgroup;
    let elems = z.elements();
    let g = ring.additive();
    let mut found: Vec<Subgroup> = vec![Subgroup::trivial(g)];
    let mut frontier = found.clone();
    while let Some(s) = frontier.pop() {
        for e in &elems {
            if s.contains_raw(e) {
                continue;
            }
            let t = s.join(&Subgroup::from_raw(g.clone(), vec![e.clone()]))?;
            if !found.contains(&t) {
                found.push(t.clone());
                frontier.push(t);
            }
        }
    }
    found.sort_by_key(|s| s.order());
    found.into_iter().map(|s| ring.central_ideal(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_type_counts() {
        let t = abelian_types(16);
        assert_eq!(t[0], Vec::<u64>::new());
        let of_order = |n: u64| t.iter().filter(|x| x.iter().product::<u64>() == n).count();
        assert_eq!(of_order(8), 3);
        assert_eq!(of_order(16), 5);
        assert_eq!(of_order(12), 2);
        assert!(t.contains(&vec![2, 4]));
    }

    #[test]
    fn small_ring_counts() {
        // up to isomorphism: on (Z/2)^2 one nonabelian ring
        assert_eq!(rings_on(&[2, 2]).len(), 2);
        assert_eq!(rings_on(&[4]).len(), 1);
        assert_eq!(all_rings(4).len(), 6);
        let eight = rings_on(&[2, 2, 2]);
        assert!(eight
            .iter()
            .any(|r| find_isomorphism(r, &LieRing::heisenberg(2).unwrap()).is_some()));
    }

    #[test]
    fn central_subgroups() {
        let a = LieRing::abelian(&[2, 2]).unwrap();
        assert_eq!(central_ideals(&a).unwrap().len(), 5);
        let h = LieRing::heisenberg(2).unwrap();
        assert_eq!(central_ideals(&h).unwrap().len(), 2);
    }
}
