use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use super::{AbHom, FinAbGroup, GroupElement};
use crate::arith::{add_mod, lcm_all, mul_mod, reduce_i128};
use crate::error::{Error, Result};
use crate::snf::{snf, IntMatrix};
use crate::zmod::{diagonalize, negate, Howell};

/// A subgroup of a [`FinAbGroup`], given by generators. Its canonical basis
/// (Howell form of the preimage lattice) is computed on first use; equality
/// and containment always go through it.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: FinAbGroup,
    generators: Vec<Vec<u64>>,
    basis: OnceLock<Howell>,
}

impl Subgroup {
    pub fn new(parent: &FinAbGroup, generators: &[GroupElement]) -> Result<Self> {
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.group() != parent {
                return Err(Error::NotASubgroup);
            }
            gens.push(g.coeffs().to_vec());
        }
        Ok(Self::from_raw(parent.clone(), gens))
    }

    /// Generators as raw coefficient vectors; they are reduced here.
    pub fn from_raw(parent: FinAbGroup, generators: Vec<Vec<u64>>) -> Self {
        let generators = generators
            .into_iter()
            .map(|g| {
                assert_eq!(g.len(), parent.rank(), "generator length mismatch");
                parent.reduce(&g)
            })
            .collect();
        Subgroup {
            parent,
            generators,
            basis: OnceLock::new(),
        }
    }

    pub fn trivial(parent: &FinAbGroup) -> Self {
        Self::from_raw(parent.clone(), Vec::new())
    }

    pub fn whole(parent: &FinAbGroup) -> Self {
        let gens = (0..parent.rank())
            .map(|i| parent.generator(i).into_coeffs())
            .collect();
        Self::from_raw(parent.clone(), gens)
    }

    pub fn parent(&self) -> &FinAbGroup {
        &self.parent
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub(crate) fn canonical(&self) -> &Howell {
        self.basis.get_or_init(|| {
            let n = self.parent.exponent().expect("parent exponent fits");
            let mut h = Howell::new(self.parent.rank(), n);
            for g in &self.generators {
                h.insert(g.clone());
            }
            for (j, &m) in self.parent.moduli().iter().enumerate() {
                if m < n {
                    let mut r = vec![0; self.parent.rank()];
                    r[j] = m;
                    h.insert(r);
                }
            }
            h
        })
    }

    /// Canonical generators (the Howell rows), reduced into the parent.
    pub fn canonical_generators(&self) -> Vec<Vec<u64>> {
        self.canonical()
            .rows()
            .map(|(_, r)| self.parent.reduce(r))
            .filter(|r| r.iter().any(|&x| x != 0))
            .collect()
    }

    pub fn order(&self) -> BigUint {
        let pivots = self.canonical().pivot_values();
        let index = pivots.iter().fold(BigUint::one(), |acc, &h| acc * h);
        self.parent.order() / index
    }

    pub fn is_trivial(&self) -> bool {
        self.order().is_one()
    }

    pub fn contains_raw(&self, x: &[u64]) -> bool {
        self.canonical().contains(x)
    }

    pub fn contains_element(&self, x: &GroupElement) -> Result<bool> {
        if x.group() != &self.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(self.contains_raw(x.coeffs()))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subgroup) -> Result<bool> {
        if other.parent != self.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(other.generators.iter().all(|g| self.contains_raw(g)))
    }

    pub fn equals(&self, other: &Subgroup) -> Result<bool> {
        if other.parent != self.parent {
            return Err(Error::ParentMismatch);
        }
        Ok(self.canonical() == other.canonical())
    }

    /// Sum of two subgroups of the same parent.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        if other.parent != self.parent {
            return Err(Error::ParentMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ok(Self::from_raw(self.parent.clone(), gens))
    }

    /// Elements in parent enumeration order. Cost is `|S|`, not the order
    /// of the parent.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let abs = self.as_group().expect("subgroup presentation");
        let incl = abs.inclusion().expect("inclusion of a subgroup");
        let mut out: Vec<Vec<u64>> = abs.group().elements().map(|c| incl.apply(&c)).collect();
        out.sort();
        out
    }

    /// The subgroup as an abstract group together with its inclusion.
    pub fn as_group(&self) -> Result<SubgroupQuotient> {
        SubgroupQuotient::new(&self.parent, self.generators.clone(), Vec::new())
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.canonical() == other.canonical()
    }
}

impl Eq for Subgroup {}

/// Expresses elements as combinations of a fixed generator list modulo a
/// relation subgroup, via one augmented Howell form `[s_i | e_i]`.
#[derive(Debug, Clone)]
pub struct Combiner {
    parent: FinAbGroup,
    gens: Vec<Vec<u64>>,
    echelon: Howell,
}

impl Combiner {
    pub fn new(parent: &FinAbGroup, gens: Vec<Vec<u64>>, relations: &[Vec<u64>]) -> Result<Self> {
        let n = lcm_all(parent.moduli().iter().copied())?;
        let width = parent.rank();
        let k = gens.len();
        let mut echelon = Howell::new(width + k, n);
        for (i, g) in gens.iter().enumerate() {
            let mut row = vec![0u64; width + k];
            row[..width].copy_from_slice(&parent.reduce(g));
            row[width + i] = 1 % n;
            echelon.insert(row);
        }
        for t in relations {
            let mut row = vec![0u64; width + k];
            row[..width].copy_from_slice(&parent.reduce(t));
            echelon.insert(row);
        }
        for (j, &m) in parent.moduli().iter().enumerate() {
            if m < n {
                let mut row = vec![0u64; width + k];
                row[j] = m;
                echelon.insert(row);
            }
        }
        Ok(Combiner {
            parent: parent.clone(),
            gens,
            echelon,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.echelon.modulus()
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.gens
    }

    /// Coefficients `c` (mod the lcm `N`) with `sum c_i s_i ≡ z` modulo the
    /// relations, or `None` if `z` is outside the span.
    pub fn combination(&self, z: &[u64]) -> Option<Vec<u64>> {
        let width = self.parent.rank();
        let n = self.modulus();
        let mut row = vec![0u64; width + self.gens.len()];
        row[..width].copy_from_slice(&self.parent.reduce(z));
        if !self.echelon.reduce(&mut row, width) {
            return None;
        }
        let mut c = row.split_off(width);
        negate(&mut c, n);
        Some(c)
    }

    /// Right-hand parts of the Howell rows with zero left part: they
    /// generate every relation among the generators.
    pub(crate) fn relation_rows(&self) -> Vec<Vec<u64>> {
        let width = self.parent.rank();
        self.echelon
            .rows()
            .filter(|(j, _)| *j >= width)
            .map(|(_, r)| r[width..].to_vec())
            .collect()
    }
}

/// The quotient `S / T` of two subgroups of a common parent (with `T` taken
/// modulo `S` implicitly), in invariant-factor form, with coordinates and
/// lifts.
#[derive(Debug, Clone)]
pub struct SubgroupQuotient {
    combiner: Combiner,
    group: FinAbGroup,
    /// `k x r`: coordinates of a combination `c` are `c * proj` mod `q_i`.
    proj: Vec<Vec<u64>>,
    lift_combos: Vec<Vec<u64>>,
    lifts: Vec<Vec<u64>>,
}

impl SubgroupQuotient {
    pub fn new(parent: &FinAbGroup, gens: Vec<Vec<u64>>, relations: Vec<Vec<u64>>) -> Result<Self> {
        let combiner = Combiner::new(parent, gens, &relations)?;
        let n = combiner.modulus();
        let k = combiner.gens.len();
        let kernel = combiner.relation_rows();
        let d = diagonalize(kernel, k, n, true);
        let v_inv = d.v_inv.as_ref().expect("inverse requested");

        let orders: Vec<u64> = (0..k).map(|t| d.quotient_order(t)).collect();
        let live: Vec<usize> = (0..k).filter(|&t| orders[t] > 1).collect();
        let r = live.len();
        let mut dm = IntMatrix::zeros(r, r);
        for (i, &t) in live.iter().enumerate() {
            dm.set(i, i, BigInt::from(orders[t]));
        }
        let s = snf(&dm);
        let to_res = |x: &BigInt| -> u64 {
            let m = BigInt::from(n);
            let r = ((x % &m) + &m) % &m;
            r.to_u64().expect("residue fits")
        };
        let factors: Vec<u64> = s
            .diagonal()
            .iter()
            .map(|x| x.to_u64().expect("factor divides N"))
            .collect();
        let keep: Vec<usize> = (0..r).filter(|&i| factors[i] > 1).collect();
        let group = FinAbGroup::from_moduli(keep.iter().map(|&i| factors[i]).collect())?;

        let mut proj = vec![vec![0u64; keep.len()]; k];
        for (c, row) in proj.iter_mut().enumerate() {
            for (out, &i) in row.iter_mut().zip(&keep) {
                let mut acc = 0u64;
                for (tp, &t) in live.iter().enumerate() {
                    acc = add_mod(acc, mul_mod(d.v[c][t], to_res(s.v.get(tp, i)), n), n);
                }
                *out = acc % factors[i];
            }
        }
        let mut lift_combos = Vec::with_capacity(keep.len());
        for &i in &keep {
            let mut combo = vec![0u64; k];
            for (tp, &t) in live.iter().enumerate() {
                let w = to_res(s.v_inv.get(i, tp));
                if w == 0 {
                    continue;
                }
                for (slot, &x) in combo.iter_mut().zip(&v_inv[t]) {
                    *slot = add_mod(*slot, mul_mod(w, x, n), n);
                }
            }
            lift_combos.push(combo);
        }
        let lifts = lift_combos
            .iter()
            .map(|combo| combine(parent, &combiner.gens, combo))
            .collect();
        Ok(SubgroupQuotient {
            combiner,
            group,
            proj,
            lift_combos,
            lifts,
        })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn parent(&self) -> &FinAbGroup {
        &self.combiner.parent
    }

    pub fn combiner(&self) -> &Combiner {
        &self.combiner
    }

    /// Quotient coordinates of a generator combination.
    pub fn coords_of_combination(&self, c: &[u64]) -> Vec<u64> {
        let n = self.combiner.modulus();
        let q = self.group.moduli();
        (0..q.len())
            .map(|i| {
                let mut acc = 0u64;
                for (ci, row) in c.iter().zip(&self.proj) {
                    if *ci != 0 {
                        acc = add_mod(acc, mul_mod(*ci, row[i], n), n);
                    }
                }
                acc % q[i]
            })
            .collect()
    }

    /// Quotient coordinates of a parent element, or `None` if it lies
    /// outside `S + T`.
    pub fn coords(&self, z: &[u64]) -> Option<Vec<u64>> {
        self.combiner
            .combination(z)
            .map(|c| self.coords_of_combination(&c))
    }

    /// Parent element representing quotient generator `i`.
    pub fn lift(&self, i: usize) -> &[u64] {
        &self.lifts[i]
    }

    pub fn lifts(&self) -> &[Vec<u64>] {
        &self.lifts
    }

    /// Generator combination representing quotient generator `i`.
    pub fn lift_combination(&self, i: usize) -> &[u64] {
        &self.lift_combos[i]
    }

    /// Parent element representing arbitrary quotient coordinates.
    pub fn lift_coords(&self, q: &[u64]) -> Vec<u64> {
        let parent = &self.combiner.parent;
        let mut acc = vec![0u64; parent.rank()];
        for (&qi, l) in q.iter().zip(&self.lifts) {
            if qi != 0 {
                parent.add_assign_raw(&mut acc, &parent.scale_raw(l, qi));
            }
        }
        acc
    }

    /// Inclusion of the abstract quotient group back into the parent, valid
    /// when the relation subgroup is trivial.
    pub fn inclusion(&self) -> Result<AbHom> {
        AbHom::new(
            self.group.clone(),
            self.combiner.parent.clone(),
            self.lifts.clone(),
        )
    }
}

pub(crate) fn combine(parent: &FinAbGroup, gens: &[Vec<u64>], c: &[u64]) -> Vec<u64> {
    let mut acc = vec![0u64; parent.rank()];
    for (&ci, g) in c.iter().zip(gens) {
        if ci != 0 {
            parent.add_assign_raw(&mut acc, &parent.scale_raw(g, ci));
        }
    }
    acc
}

/// Quotient `G / S` in invariant-factor form with its projection.
pub fn quotient(g: &FinAbGroup, s: &Subgroup) -> Result<(FinAbGroup, AbHom, SubgroupQuotient)> {
    if s.parent() != g {
        return Err(Error::NotASubgroup);
    }
    let gens = (0..g.rank())
        .map(|i| g.generator(i).into_coeffs())
        .collect();
    let sq = SubgroupQuotient::new(g, gens, s.generators().to_vec())?;
    let images = (0..g.rank())
        .map(|i| sq.coords(g.generator(i).coeffs()).expect("generator in G"))
        .collect();
    let proj = AbHom::new(g.clone(), sq.group().clone(), images)?;
    Ok((sq.group().clone(), proj, sq))
}

/// Solutions of `rows * x ≡ 0`, row `i` taken modulo `row_moduli[i]` and
/// unknown `j` living in `Z/col_moduli[j]`.
///
/// The system must describe a well-defined homomorphism
/// `(+) Z/col_moduli -> (+) Z/row_moduli`.
pub fn solve_congruences(
    rows: &[Vec<i64>],
    row_moduli: &[u64],
    col_moduli: &[u64],
) -> Result<Subgroup> {
    if rows.len() != row_moduli.len() {
        return Err(Error::DimensionMismatch {
            expected: rows.len(),
            found: row_moduli.len(),
        });
    }
    let cols = col_moduli.len();
    for r in rows {
        if r.len() != cols {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: r.len(),
            });
        }
    }
    let parent = FinAbGroup::from_moduli(col_moduli.to_vec())?;
    for (r, &rm) in rows.iter().zip(row_moduli) {
        if rm == 0 {
            return Err(Error::InvalidModulus { index: 0, value: 0 });
        }
        for (j, (&x, &m)) in r.iter().zip(col_moduli).enumerate() {
            if reduce_i128(x as i128 * m as i128, rm) != 0 {
                return Err(Error::NotWellDefined {
                    generator: j,
                    order: m,
                });
            }
        }
    }
    let n = lcm_all(row_moduli.iter().chain(col_moduli).copied())?;
    let mut h = Howell::new(cols, n);
    for (r, &rm) in rows.iter().zip(row_moduli) {
        let scale = n / rm;
        let v: Vec<u64> = r
            .iter()
            .map(|&x| mul_mod(reduce_i128(x as i128, n), scale, n))
            .collect();
        h.insert(v);
    }
    Ok(Subgroup::from_raw(parent, h.kernel()))
}

/// Whether `x` has order dividing `m` in `g`.
pub fn killed_by(g: &FinAbGroup, x: &[u64], m: u64) -> bool {
    x.iter()
        .zip(g.moduli())
        .all(|(&c, &d)| mul_mod(c, m % d, d) == 0)
}
