//! Central extensions `0 -> A -> B -> L -> 0` and their cocycles.

use crate::abgroup::{killed_by, quotient, AbHom, FinAbGroup, Subgroup};
use crate::cohomology::{coboundary_preimage, h2_with, Cocycle, H2Group, Limits};
use crate::error::{Error, Result};
use crate::liering::{LieHom, LieRing};
use crate::par;

/// A central extension of `base` by the trivial module `coeff`.
#[derive(Debug, Clone)]
pub struct CentralExtension {
    coeff: FinAbGroup,
    total: LieRing,
    base: LieRing,
    iota: AbHom,
    beta: LieHom,
}

impl CentralExtension {
    /// Validate exactness and centrality.
    pub fn new(
        coeff: FinAbGroup,
        total: LieRing,
        base: LieRing,
        iota: AbHom,
        beta: LieHom,
    ) -> Result<Self> {
        if iota.domain() != &coeff
            || iota.codomain() != total.additive()
            || beta.domain() != &total
            || beta.codomain() != &base
        {
            return Err(Error::ParentMismatch);
        }
        if !iota.is_injective() {
            return Err(Error::InvalidExtension("iota is not injective".into()));
        }
        if !beta.map().is_surjective() {
            return Err(Error::InvalidExtension("beta is not surjective".into()));
        }
        if iota.image() != beta.map().kernel() {
            return Err(Error::InvalidExtension(
                "image of iota differs from kernel of beta".into(),
            ));
        }
        for (k, a) in iota.images().iter().enumerate() {
            for j in 0..total.rank() {
                let gj = total.generator(j);
                if total.bracket_raw(a, gj.coeffs()).iter().any(|&x| x != 0) {
                    return Err(Error::InvalidExtension(format!(
                        "iota of generator {} does not commute with generator {} of B",
                        k + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(CentralExtension {
            coeff,
            total,
            base,
            iota,
            beta,
        })
    }

    pub fn coeff(&self) -> &FinAbGroup {
        &self.coeff
    }

    pub fn total(&self) -> &LieRing {
        &self.total
    }

    pub fn base(&self) -> &LieRing {
        &self.base
    }

    pub fn iota(&self) -> &AbHom {
        &self.iota
    }

    pub fn beta(&self) -> &LieHom {
        &self.beta
    }
}

/// A set-theoretic section `L -> B` of `beta` with `lambda(0) = 0`, stored
/// as one element of `B` per element of `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    values: Vec<Vec<u64>>,
}

impl Section {
    /// Check `beta(lambda(x)) = x` everywhere and `lambda(0) = 0`.
    pub fn new(ext: &CentralExtension, values: Vec<Vec<u64>>) -> Result<Self> {
        let l = ext.base.additive();
        let n = l.size().ok_or(Error::Overflow("ring order"))?;
        if values.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: values.len(),
            });
        }
        let b = ext.total.additive();
        let values: Vec<Vec<u64>> = values.iter().map(|v| b.reduce(v)).collect();
        for (x, v) in values.iter().enumerate() {
            if v.len() != b.rank() || l.index_of(&ext.beta.apply(v)) != x {
                return Err(Error::InvalidExtension(format!(
                    "section value at element {x} is not a lift"
                )));
            }
        }
        if values.first().is_some_and(|v| v.iter().any(|&c| c != 0)) {
            return Err(Error::NotPointed);
        }
        Ok(Section { values })
    }

    pub fn values(&self) -> &[Vec<u64>] {
        &self.values
    }

    pub fn value(&self, x: usize) -> &[u64] {
        &self.values[x]
    }
}

/// Pair arithmetic on `A x L` twisted by a cocycle.
struct Twisted<'a> {
    c: &'a Cocycle,
    l: &'a LieRing,
    a: &'a FinAbGroup,
}

impl Twisted<'_> {
    fn add(&self, p: &(Vec<u64>, usize), q: &(Vec<u64>, usize)) -> Result<(Vec<u64>, usize)> {
        let t = self.l.tables()?;
        let a = self
            .a
            .add_raw(&self.a.add_raw(&p.0, &q.0), self.c.g(p.1, q.1));
        Ok((a, t.add(p.1, q.1)))
    }
}

/// The extension carried by `A x L` with
/// `(a,x) + (b,y) = (a + b + g(x,y), x + y)` and `[(a,x),(b,y)] = (f(x,y), [x,y])`,
/// re-presented on generators.
pub fn extension_from_cocycle(c: &Cocycle) -> Result<CentralExtension> {
    c.require_cocycle()?;
    let (l, a) = (c.ring(), c.coeff());
    let lg = l.additive();
    let n = lg.size().ok_or(Error::Overflow("ring order"))?;
    let tw = Twisted { c, l, a };
    let (ra, rl) = (a.rank(), l.rank());
    let exp_a = a.exponent()?;

    // ambient group: A (+) one cyclic summand per generator of L, large
    // enough for the order of its lift
    let mut moduli = a.moduli().to_vec();
    for &d in l.moduli() {
        moduli.push(
            d.checked_mul(exp_a)
                .ok_or(Error::Overflow("extension order"))?,
        );
    }
    let ambient = FinAbGroup::from_moduli(moduli)?;
    let lift = |j: usize| (vec![0u64; ra], lg.index_of(lg.generator(j).coeffs()));

    let mut relations = Vec::with_capacity(rl);
    let mut shifts = Vec::with_capacity(rl);
    for (j, &d) in l.moduli().iter().enumerate() {
        let mut acc = (vec![0u64; ra], 0usize);
        for _ in 0..d {
            acc = tw.add(&acc, &lift(j))?;
        }
        debug_assert_eq!(acc.1, 0);
        let mut rel = a.neg_raw(&acc.0);
        rel.extend((0..rl).map(|i| if i == j { d } else { 0 }));
        relations.push(rel);
        shifts.push(acc.0);
    }
    let (bgrp, proj, sq) = quotient(&ambient, &Subgroup::from_raw(ambient.clone(), relations))?;
    if bgrp.order() != a.order() * lg.order() {
        return Err(Error::Internal(
            "twisted product has the wrong order".into(),
        ));
    }

    // lifted[x] = sum_j m_j * lift_j computed in the twisted product
    let mut lifted: Vec<(Vec<u64>, usize)> = vec![(vec![0u64; ra], 0); n];
    for idx in 1..n {
        let mut m = lg.element_at(idx);
        let j = (0..rl).rev().find(|&j| m[j] != 0).expect("nonzero element");
        m[j] -= 1;
        let prev = lg.index_of(&m);
        lifted[idx] = tw.add(&lifted[prev], &lift(j))?;
        debug_assert_eq!(lifted[idx].1, idx);
    }
    let to_b = |p: &(Vec<u64>, usize)| -> Vec<u64> {
        let mut v = a.sub_raw(&p.0, &lifted[p.1].0);
        v.extend(lg.element_at(p.1));
        proj.apply(&v)
    };
    let from_b = |b: &[u64]| -> (Vec<u64>, usize) {
        let v = sq.lift_coords(b);
        let mut alpha = v[..ra].to_vec();
        let mut m = Vec::with_capacity(rl);
        for (j, &d) in l.moduli().iter().enumerate() {
            let mj = v[ra + j];
            alpha = a.add_raw(&alpha, &a.scale_raw(&shifts[j], mj / d));
            m.push(mj % d);
        }
        let x = lg.index_of(&m);
        (a.add_raw(&alpha, &lifted[x].0), x)
    };

    let t = l.tables()?;
    let r = bgrp.rank();
    let gens: Vec<(Vec<u64>, usize)> = (0..r).map(|i| from_b(bgrp.generator(i).coeffs())).collect();
    let mut brackets = Vec::with_capacity(r * r.saturating_sub(1) / 2);
    for i in 0..r {
        for j in i + 1..r {
            let (x, y) = (gens[i].1, gens[j].1);
            brackets.push(to_b(&(c.f(x, y).to_vec(), t.bracket(x, y))));
        }
    }
    let total = LieRing::from_parts(bgrp.clone(), brackets)?;
    let iota = AbHom::new(
        a.clone(),
        bgrp.clone(),
        (0..ra)
            .map(|k| to_b(&(a.generator(k).into_coeffs(), 0)))
            .collect(),
    )?;
    let beta_map = AbHom::new(
        bgrp.clone(),
        lg.clone(),
        gens.iter().map(|p| lg.element_at(p.1)).collect(),
    )?;
    let beta = LieHom::new(total.clone(), l.clone(), beta_map)?;
    CentralExtension::new(a.clone(), total, l.clone(), iota, beta)
}

/// The section picking, for each `x`, the first element of `B` in
/// enumeration order lying over `x`.
pub fn section_of(ext: &CentralExtension) -> Result<Section> {
    let l = ext.base.additive();
    let b = ext.total.additive();
    let n = l.size().ok_or(Error::Overflow("ring order"))?;
    let mut values: Vec<Option<Vec<u64>>> = vec![None; n];
    let mut left = n;
    for v in b.elements() {
        let x = l.index_of(&ext.beta.apply(&v));
        if values[x].is_none() {
            values[x] = Some(v);
            left -= 1;
            if left == 0 {
                break;
            }
        }
    }
    let values = values
        .into_iter()
        .map(|v| v.ok_or_else(|| Error::InvalidExtension("beta is not surjective".into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(Section { values })
}

/// `f(x,y) = [lx, ly] - l[x,y]`, `g(x,y) = lx + ly - l(x+y)`, pulled back
/// along `iota`.
pub fn cocycle_from_extension(ext: &CentralExtension, s: &Section) -> Result<Cocycle> {
    let l = &ext.base;
    let t = l.tables()?;
    let n = t.n;
    if s.values.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: s.values.len(),
        });
    }
    let b = ext.total.additive();
    let solver = ext.iota.preimage_solver()?;
    type RowPair = (Vec<Vec<u64>>, Vec<Vec<u64>>);
    let rows = par::map_range(n, |x| -> Result<RowPair> {
        let mut fs = Vec::with_capacity(n);
        let mut gs = Vec::with_capacity(n);
        for y in 0..n {
            let (lx, ly) = (&s.values[x], &s.values[y]);
            let fb = b.sub_raw(&ext.total.bracket_raw(lx, ly), &s.values[t.bracket(x, y)]);
            let gb = b.sub_raw(&b.add_raw(lx, ly), &s.values[t.add(x, y)]);
            let pull = |v: &[u64], what: &str| {
                solver.solve(v).ok_or_else(|| {
                    Error::InvalidExtension(format!(
                        "{what}({x},{y}) lies outside the image of iota"
                    ))
                })
            };
            fs.push(pull(&fb, "f")?);
            gs.push(pull(&gb, "g")?);
        }
        Ok((fs, gs))
    });
    let mut data = Vec::with_capacity(2 * n * n * ext.coeff.rank());
    let mut gdata = Vec::with_capacity(n * n * ext.coeff.rank());
    for row in rows {
        let (fs, gs) = row?;
        fs.into_iter().for_each(|v| data.extend(v));
        gs.into_iter().for_each(|v| gdata.extend(v));
    }
    data.extend(gdata);
    Cocycle::from_vector(l, &ext.coeff, &data)
}

fn same_data(e: &CentralExtension, f: &CentralExtension) -> Result<()> {
    if e.coeff != f.coeff || e.base != f.base {
        return Err(Error::ParentMismatch);
    }
    Ok(())
}

fn cocycle_of(e: &CentralExtension) -> Result<Cocycle> {
    cocycle_from_extension(e, &section_of(e)?)
}

/// Equivalence through the cohomology classes of the two extensions.
pub fn are_equivalent(e: &CentralExtension, f: &CentralExtension) -> Result<bool> {
    same_data(e, f)?;
    let h = h2_with(&e.base, &e.coeff, &Limits::default())?;
    are_equivalent_in(&h, e, f)
}

/// As [`are_equivalent`] with a precomputed `H^2(L, A)`.
pub fn are_equivalent_in(h: &H2Group, e: &CentralExtension, f: &CentralExtension) -> Result<bool> {
    same_data(e, f)?;
    if h.ring() != &e.base || h.coeff() != &e.coeff {
        return Err(Error::ParentMismatch);
    }
    let diff = cocycle_of(e)?.sub(&cocycle_of(f)?)?;
    Ok(h.class_of(&diff)?.iter().all(|&x| x == 0))
}

/// Largest total order accepted by the exhaustive equivalence search.
pub const BRUTE_LIMIT: usize = 64;

/// Exhaustive search for `gamma : B -> B'` with `gamma o iota = iota'` and
/// `beta' o gamma = beta`. A returned map is checked to be bijective.
pub fn find_equivalence(e: &CentralExtension, f: &CentralExtension) -> Result<Option<LieHom>> {
    same_data(e, f)?;
    let (bg, bf) = (e.total.additive(), f.total.additive());
    for b in [bg, bf] {
        if b.size().is_none_or(|s| s > BRUTE_LIMIT) {
            return Err(Error::ResourceLimit {
                what: "equivalence search",
                order: b.order_u128().unwrap_or(u128::MAX),
                limit: BRUTE_LIMIT as u128,
            });
        }
    }
    let l = e.base.additive();
    let a = &e.coeff;
    let fiber: Vec<Vec<u64>> = a.elements().map(|x| f.iota.apply(&x)).collect();
    let lam = section_of(f)?;
    let r = bg.rank();
    let bases: Vec<Vec<u64>> = (0..r)
        .map(|i| {
            let x = l.index_of(&e.beta.apply(bg.generator(i).coeffs()));
            lam.values[x].clone()
        })
        .collect();
    let q = fiber.len() as u64;
    let total = (0..r).try_fold(1u64, |acc, _| acc.checked_mul(q));
    let total = total.ok_or(Error::Overflow("search space"))?;

    let candidate = |mut idx: u64| -> Vec<Vec<u64>> {
        let mut images = vec![Vec::new(); r];
        for i in (0..r).rev() {
            let k = (idx % q) as usize;
            idx /= q;
            images[i] = bf.add_raw(&bases[i], &fiber[k]);
        }
        images
    };
    let accepts = |images: &[Vec<u64>]| -> bool {
        for (i, img) in images.iter().enumerate() {
            if !killed_by(bf, img, bg.moduli()[i]) {
                return false;
            }
        }
        let gamma = AbHom::new(bg.clone(), bf.clone(), images.to_vec()).expect("checked");
        for (k, ia) in e.iota.images().iter().enumerate() {
            if gamma.apply(ia) != f.iota.images()[k] {
                return false;
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                let lhs = gamma.apply(&e.total.structure_constant(i, j));
                if lhs != f.total.bracket_raw(&images[i], &images[j]) {
                    return false;
                }
            }
        }
        true
    };
    let Some(idx) = par::find_first(total, |idx| accepts(&candidate(idx))) else {
        return Ok(None);
    };
    let gamma = AbHom::new(bg.clone(), bf.clone(), candidate(idx))?;
    if !gamma.is_injective() {
        return Err(Error::Internal(
            "equivalence of extensions is not bijective".into(),
        ));
    }
    LieHom::new(e.total.clone(), f.total.clone(), gamma).map(Some)
}

/// Oracle for [`are_equivalent`] by exhaustive search.
pub fn brute_equivalent(e: &CentralExtension, f: &CentralExtension) -> Result<bool> {
    Ok(find_equivalence(e, f)?.is_some())
}

/// A homomorphic section when the extension splits.
pub fn is_split(ext: &CentralExtension) -> Result<Option<Section>> {
    let lam = section_of(ext)?;
    let c = cocycle_from_extension(ext, &lam)?;
    let Some(t) = coboundary_preimage(&c)? else {
        return Ok(None);
    };
    let b = ext.total.additive();
    let values = lam
        .values
        .iter()
        .zip(&t)
        .map(|(v, tx)| b.sub_raw(v, &ext.iota.apply(tx)))
        .collect();
    let mu = Section::new(ext, values)?;
    debug_assert!(cocycle_from_extension(ext, &mu)?.is_zero());
    Ok(Some(mu))
}

/// One class of `H^2(L, A)` with a representative extension.
#[derive(Debug, Clone)]
pub struct ExtensionClass {
    pub class: Vec<u64>,
    pub extension: CentralExtension,
    /// Invariant factors of the additive group of `B`.
    pub invariants: Vec<u64>,
    pub split: bool,
}

/// Every central extension of `L` by `A` up to equivalence, one per class.
pub fn classify_extensions(l: &LieRing, a: &FinAbGroup) -> Result<Vec<ExtensionClass>> {
    classify_extensions_with(l, a, &Limits::default())
}

pub fn classify_extensions_with(
    l: &LieRing,
    a: &FinAbGroup,
    limits: &Limits,
) -> Result<Vec<ExtensionClass>> {
    let h = h2_with(l, a, limits)?;
    let order = h.group().order_u128().unwrap_or(u128::MAX);
    if order > limits.class_budget {
        return Err(Error::ResourceLimit {
            what: "extension classification",
            order,
            limit: limits.class_budget,
        });
    }
    let classes: Vec<Vec<u64>> = h.group().elements().collect();
    par::map_slice(&classes, |class| {
        let rep = h.representative(class)?;
        let extension = extension_from_cocycle(&rep)?;
        Ok(ExtensionClass {
            class: class.clone(),
            invariants: extension.total.additive().invariant_factors(),
            split: class.iter().all(|&x| x == 0),
            extension,
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{coboundary_from, h2};

    fn z4_over_z2() -> (Cocycle, CentralExtension) {
        let l = LieRing::abelian(&[2]).unwrap();
        let a = FinAbGroup::cyclic(2);
        let mut g = vec![vec![0]; 4];
        g[3] = vec![1];
        let c = Cocycle::from_tables(&l, &a, &vec![vec![0]; 4], &g).unwrap();
        let e = extension_from_cocycle(&c).unwrap();
        (c, e)
    }

    #[test]
    fn cyclic_extension() {
        let (c, e) = z4_over_z2();
        assert_eq!(e.total().additive().invariant_factors(), vec![4]);
        let lam = section_of(&e).unwrap();
        assert_eq!(lam.value(0), &[0]);
        assert_eq!(lam.value(1), &[1]);
        let back = cocycle_from_extension(&e, &lam).unwrap();
        assert_eq!(back.g(1, 1), &[1]);
        let h = h2(c.ring(), c.coeff()).unwrap();
        assert_eq!(h.class_of(&back).unwrap(), h.class_of(&c).unwrap());
        assert!(is_split(&e).unwrap().is_none());

        let other = Section::new(&e, vec![vec![0], vec![3]]).unwrap();
        let c2 = cocycle_from_extension(&e, &other).unwrap();
        assert_eq!(h.class_of(&c2).unwrap(), vec![1]);
        assert!(Section::new(&e, vec![vec![0], vec![2]]).is_err());
    }

    #[test]
    fn split_extension() {
        let l = LieRing::heisenberg(2).unwrap();
        let a = FinAbGroup::cyclic(3);
        let zero = Cocycle::zero(&l, &a).unwrap();
        let e = extension_from_cocycle(&zero).unwrap();
        assert_eq!(e.total().size(), Some(24));
        let mu = is_split(&e).unwrap().unwrap();
        assert!(cocycle_from_extension(&e, &mu).unwrap().is_zero());
        assert!(are_equivalent(&e, &e).unwrap());
    }

    #[test]
    fn equivalence_fast_and_brute() {
        let (c, e) = z4_over_z2();
        let split = extension_from_cocycle(&Cocycle::zero(c.ring(), c.coeff()).unwrap()).unwrap();
        assert!(!are_equivalent(&e, &split).unwrap());
        assert!(!brute_equivalent(&e, &split).unwrap());
        assert!(brute_equivalent(&e, &e).unwrap());

        let l3 = LieRing::abelian(&[3]).unwrap();
        let a3 = FinAbGroup::cyclic(3);
        let h = h2(&l3, &a3).unwrap();
        let rep = h.reps()[0].clone();
        let b = coboundary_from(&l3, &a3, &[vec![0], vec![2], vec![2]]).unwrap();
        let e1 = extension_from_cocycle(&rep).unwrap();
        let e2 = extension_from_cocycle(&rep.add(&b).unwrap()).unwrap();
        let e3 = extension_from_cocycle(&rep.scale(2)).unwrap();
        assert!(are_equivalent(&e1, &e2).unwrap());
        assert!(brute_equivalent(&e1, &e2).unwrap());
        assert!(!are_equivalent(&e1, &e3).unwrap());
        assert!(!brute_equivalent(&e1, &e3).unwrap());
        assert_eq!(brute_equivalent(&e1, &e), Err(Error::ParentMismatch));
    }

    #[test]
    fn bracket_matches_twisted_product() {
        let l = LieRing::heisenberg(2).unwrap();
        let a = FinAbGroup::cyclic(2);
        let h = h2(&l, &a).unwrap();
        for rep in h.reps() {
            let e = extension_from_cocycle(rep).unwrap();
            assert_eq!(e.total().size(), Some(16));
            let lam = section_of(&e).unwrap();
            let back = cocycle_from_extension(&e, &lam).unwrap();
            assert_eq!(h.class_of(&back).unwrap(), h.class_of(rep).unwrap());
        }
    }

    #[test]
    fn classification() {
        for p in [2u64, 3] {
            let l = LieRing::abelian(&[p as i64]).unwrap();
            let classes = classify_extensions(&l, &FinAbGroup::cyclic(p)).unwrap();
            assert_eq!(classes.len(), p as usize);
            assert_eq!(classes.iter().filter(|c| c.split).count(), 1);
            for c in &classes {
                let want = if c.split { vec![p, p] } else { vec![p * p] };
                assert_eq!(c.invariants, want);
            }
        }
        let tight = Limits {
            class_budget: 1,
            ..Limits::default()
        };
        let l = LieRing::abelian(&[2]).unwrap();
        assert!(matches!(
            classify_extensions_with(&l, &FinAbGroup::cyclic(2), &tight),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
