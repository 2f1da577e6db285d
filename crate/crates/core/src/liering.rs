//! Finite Lie rings given by structure constants on the generators of their
//! additive group.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::abgroup::{
    hom_group, quotient, AbHom, FinAbGroup, HomGroup, Subgroup, SubgroupQuotient,
};
use crate::arith::reduce_i128;
use crate::error::{Error, Result};

/// Hard cap on the element count for which addition/bracket tables are
/// materialized.
pub const TABLE_LIMIT: usize = 4096;

/// A finite Lie ring. Structure constants `[g_i, g_j]` are stored for
/// `i < j` only; `[g_j, g_i]` is the negative and `[g_i, g_i] = 0`, so the
/// bracket is alternating by construction.
///
/// Cheap to clone (shared, immutable).
#[derive(Clone)]
pub struct LieRing(Arc<Inner>);

struct Inner {
    additive: FinAbGroup,
    brackets: Vec<Vec<u64>>,
    tables: OnceLock<Tables>,
    system: crate::cohomology::SystemCache,
}

/// Element-index tables in enumeration order.
#[derive(Debug)]
pub struct Tables {
    pub n: usize,
    pub add: Vec<u32>,
    pub neg: Vec<u32>,
    pub bracket: Vec<u32>,
}

impl Tables {
    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.n + y] as usize
    }

    #[inline]
    pub fn bracket(&self, x: usize, y: usize) -> usize {
        self.bracket[x * self.n + y] as usize
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x] as usize
    }
}

fn pair_index(i: usize, j: usize, r: usize) -> usize {
    debug_assert!(i < j && j < r);
    i * r - i * (i + 1) / 2 + (j - i - 1)
}

impl LieRing {
    /// Validate and build a Lie ring from generator orders and the nonzero
    /// structure constants `[g_i, g_j]` (`i < j`, zero-based).
    pub fn new(moduli: &[i64], entries: &[((usize, usize), Vec<i64>)]) -> Result<Self> {
        let additive = FinAbGroup::new(moduli)?;
        let r = additive.rank();
        let mut brackets = vec![vec![0u64; r]; r * r.saturating_sub(1) / 2];
        let mut seen = vec![false; brackets.len()];
        for ((i, j), coeffs) in entries {
            let (i, j) = (*i, *j);
            if i >= j || j >= r {
                return Err(Error::BracketIndex { i, j, rank: r });
            }
            let p = pair_index(i, j, r);
            if seen[p] {
                return Err(Error::BracketIndex { i, j, rank: r });
            }
            seen[p] = true;
            if coeffs.len() != r {
                return Err(Error::DimensionMismatch {
                    expected: r,
                    found: coeffs.len(),
                });
            }
            brackets[p] = additive.reduce_signed(coeffs);
        }
        Self::from_parts(additive, brackets)
    }

    /// Validating constructor from reduced structure constants in pair order.
    pub(crate) fn from_parts(additive: FinAbGroup, brackets: Vec<Vec<u64>>) -> Result<Self> {
        let r = additive.rank();
        let d = additive.moduli();
        for i in 0..r {
            for j in i + 1..r {
                let c = &brackets[pair_index(i, j, r)];
                for killer in [i, j] {
                    if !crate::abgroup::killed_by(&additive, c, d[killer]) {
                        return Err(Error::OrderIncompatible { i, j, killer });
                    }
                }
            }
        }
        let ring = LieRing::wrap(additive, brackets);
        for i in 0..r {
            for j in i + 1..r {
                for k in j + 1..r {
                    if !ring.jacobiator_gens(i, j, k).iter().all(|&x| x == 0) {
                        return Err(Error::JacobiFailure { i, j, k });
                    }
                }
            }
        }
        Ok(ring)
    }

    fn wrap(additive: FinAbGroup, brackets: Vec<Vec<u64>>) -> Self {
        LieRing(Arc::new(Inner {
            additive,
            brackets,
            tables: OnceLock::new(),
            system: Default::default(),
        }))
    }

    pub(crate) fn system_cache(&self) -> &crate::cohomology::SystemCache {
        &self.0.system
    }

    pub fn abelian(moduli: &[i64]) -> Result<Self> {
        Self::new(moduli, &[])
    }

    /// Abelian Lie ring on a given group.
    pub fn abelian_on(group: &FinAbGroup) -> Self {
        let r = group.rank();
        LieRing::wrap(group.clone(), vec![vec![0; r]; r * r.saturating_sub(1) / 2])
    }

    /// Heisenberg ring over `Z/p`: `[g1, g2] = g3`.
    pub fn heisenberg(p: i64) -> Result<Self> {
        Self::new(&[p, p, p], &[((0, 1), vec![0, 0, 1])])
    }

    pub fn additive(&self) -> &FinAbGroup {
        &self.0.additive
    }

    pub fn rank(&self) -> usize {
        self.0.additive.rank()
    }

    pub fn moduli(&self) -> &[u64] {
        self.0.additive.moduli()
    }

    /// Element count, if it fits a `usize`.
    pub fn size(&self) -> Option<usize> {
        self.0.additive.size()
    }

    /// `[g_i, g_j]` for any pair of generator indices.
    pub fn structure_constant(&self, i: usize, j: usize) -> Vec<u64> {
        let r = self.rank();
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => vec![0; r],
            std::cmp::Ordering::Less => self.0.brackets[pair_index(i, j, r)].clone(),
            std::cmp::Ordering::Greater => self
                .0
                .additive
                .neg_raw(&self.0.brackets[pair_index(j, i, r)]),
        }
    }

    /// Nonzero structure constants `((i, j), [g_i, g_j])` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<((usize, usize), Vec<u64>)> {
        let r = self.rank();
        let mut out = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                let c = &self.0.brackets[pair_index(i, j, r)];
                if c.iter().any(|&x| x != 0) {
                    out.push(((i, j), c.clone()));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.0.brackets.iter().all(|c| c.iter().all(|&x| x == 0))
    }

    /// Bilinear expansion of the bracket on coefficient vectors.
    pub fn bracket_raw(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let r = self.rank();
        let g = &self.0.additive;
        let mut acc = vec![0u64; r];
        for i in 0..r {
            if x[i] == 0 && y[i] == 0 {
                continue;
            }
            for j in i + 1..r {
                let c = &self.0.brackets[pair_index(i, j, r)];
                if c.iter().all(|&v| v == 0) {
                    continue;
                }
                let s = x[i] as i128 * y[j] as i128 - x[j] as i128 * y[i] as i128;
                if s == 0 {
                    continue;
                }
                for (k, (&ck, &m)) in c.iter().zip(g.moduli()).enumerate() {
                    if ck != 0 {
                        let t = reduce_i128(s, m) as u128 * ck as u128 % m as u128;
                        acc[k] = crate::arith::add_mod(acc[k], t as u64, m);
                    }
                }
            }
        }
        acc
    }

    pub fn element(&self, coeffs: &[i64]) -> Result<LieElement> {
        let e = self.0.additive.element(coeffs)?;
        Ok(LieElement {
            ring: self.clone(),
            coeffs: e.into_coeffs(),
        })
    }

    pub fn generator(&self, i: usize) -> LieElement {
        LieElement {
            ring: self.clone(),
            coeffs: self.0.additive.generator(i).into_coeffs(),
        }
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        if x.ring != *self || y.ring != *self {
            return Err(Error::ParentMismatch);
        }
        Ok(LieElement {
            ring: self.clone(),
            coeffs: self.bracket_raw(&x.coeffs, &y.coeffs),
        })
    }

    fn jacobiator_gens(&self, i: usize, j: usize, k: usize) -> Vec<u64> {
        let g = |t: usize| self.0.additive.generator(t).into_coeffs();
        self.jacobiator(&g(i), &g(j), &g(k))
    }

    /// `[x,[y,z]] + [z,[x,y]] + [y,[z,x]]`.
    pub fn jacobiator(&self, x: &[u64], y: &[u64], z: &[u64]) -> Vec<u64> {
        let a = self.bracket_raw(x, &self.bracket_raw(y, z));
        let b = self.bracket_raw(z, &self.bracket_raw(x, y));
        let c = self.bracket_raw(y, &self.bracket_raw(z, x));
        let g = &self.0.additive;
        g.add_raw(&g.add_raw(&a, &b), &c)
    }

    /// Addition, negation and bracket tables over the element enumeration.
    pub fn tables(&self) -> Result<&Tables> {
        let n = self
            .size()
            .filter(|&n| n <= TABLE_LIMIT)
            .ok_or_else(|| Error::ResourceLimit {
                what: "element tables",
                order: self.0.additive.order_u128().unwrap_or(u128::MAX),
                limit: TABLE_LIMIT as u128,
            })?;
        Ok(self.0.tables.get_or_init(|| {
            let g = &self.0.additive;
            let elems: Vec<Vec<u64>> = g.elements().collect();
            let rows = crate::par::map_range(n, |x| {
                let mut add = Vec::with_capacity(n);
                let mut br = Vec::with_capacity(n);
                for y in 0..n {
                    add.push(g.index_of(&g.add_raw(&elems[x], &elems[y])) as u32);
                    br.push(g.index_of(&self.bracket_raw(&elems[x], &elems[y])) as u32);
                }
                (add, br)
            });
            let mut add = Vec::with_capacity(n * n);
            let mut bracket = Vec::with_capacity(n * n);
            for (a, b) in rows {
                add.extend(a);
                bracket.extend(b);
            }
            let neg = elems
                .iter()
                .map(|e| g.index_of(&g.neg_raw(e)) as u32)
                .collect();
            Tables {
                n,
                add,
                neg,
                bracket,
            }
        }))
    }

    /// Whether a subgroup of the additive group is an ideal; on failure the
    /// offending generator index.
    fn ideal_violation(&self, s: &Subgroup, central: bool) -> Option<usize> {
        let basis = s.canonical_generators();
        for j in 0..self.rank() {
            let gj = self.0.additive.generator(j).into_coeffs();
            for b in &basis {
                let c = self.bracket_raw(b, &gj);
                let bad = if central {
                    c.iter().any(|&x| x != 0)
                } else {
                    !s.contains_raw(&c)
                };
                if bad {
                    return Some(j);
                }
            }
        }
        None
    }

    /// Check that `s` is an ideal and wrap it.
    pub fn ideal(&self, s: Subgroup) -> Result<LieIdeal> {
        if s.parent() != self.additive() {
            return Err(Error::NotASubgroup);
        }
        if let Some(generator) = self.ideal_violation(&s, false) {
            return Err(Error::NotAnIdeal { generator });
        }
        let central = self.ideal_violation(&s, true).is_none();
        Ok(LieIdeal {
            subgroup: s,
            central,
        })
    }

    /// Check that `s` is central (hence an ideal) and wrap it.
    pub fn central_ideal(&self, s: Subgroup) -> Result<LieIdeal> {
        if s.parent() != self.additive() {
            return Err(Error::NotASubgroup);
        }
        if let Some(generator) = self.ideal_violation(&s, true) {
            return Err(Error::NotCentral { generator });
        }
        Ok(LieIdeal {
            subgroup: s,
            central: true,
        })
    }

    /// `Z(L)`: solutions of `[x, g_j] = 0` for every generator `g_j`.
    pub fn center(&self) -> LieIdeal {
        let r = self.rank();
        let d = self.moduli();
        let mut rows = Vec::with_capacity(r * r);
        let mut row_moduli = Vec::with_capacity(r * r);
        for j in 0..r {
            let cols: Vec<Vec<u64>> = (0..r).map(|i| self.structure_constant(i, j)).collect();
            for k in 0..r {
                rows.push(cols.iter().map(|c| c[k] as i64).collect());
                row_moduli.push(d[k]);
            }
        }
        let subgroup = crate::abgroup::solve_congruences(&rows, &row_moduli, d)
            .expect("bracket with a generator is a well-defined map");
        LieIdeal {
            subgroup,
            central: true,
        }
    }

    /// `L² = [L, L]`, the additive span of the structure constants.
    pub fn derived(&self) -> LieIdeal {
        let subgroup = Subgroup::from_raw(self.additive().clone(), self.0.brackets.clone());
        let central = self.ideal_violation(&subgroup, true).is_none();
        LieIdeal { subgroup, central }
    }

    /// `L / I` with the induced bracket and the projection.
    pub fn quotient(&self, ideal: &LieIdeal) -> Result<LieQuotient> {
        if ideal.subgroup.parent() != self.additive() {
            return Err(Error::NotASubgroup);
        }
        if let Some(generator) = self.ideal_violation(&ideal.subgroup, false) {
            return Err(Error::NotAnIdeal { generator });
        }
        let (group, proj, sq) = quotient(self.additive(), &ideal.subgroup)?;
        let r = group.rank();
        let mut brackets = Vec::with_capacity(r * r.saturating_sub(1) / 2);
        for a in 0..r {
            for b in a + 1..r {
                brackets.push(proj.apply(&self.bracket_raw(sq.lift(a), sq.lift(b))));
            }
        }
        let ring = LieRing::from_parts(group, brackets)?;
        let projection = LieHom::new(self.clone(), ring.clone(), proj)?;
        Ok(LieQuotient {
            ring,
            projection,
            presentation: sq,
        })
    }

    /// `Hom(L, A)` for an abelian coefficient group, realized as
    /// `Hom(L/L², A)`.
    pub fn hom_to_abelian(&self, coeff: &FinAbGroup) -> LieHomGroup {
        let (abel, proj, sq) =
            quotient(self.additive(), &self.derived().subgroup).expect("L² lies in L");
        LieHomGroup {
            ring: self.clone(),
            coeff: coeff.clone(),
            projection: proj,
            presentation: sq,
            homs: hom_group(&abel, coeff),
        }
    }

    pub fn direct_sum(&self, other: &LieRing) -> LieRing {
        let (r1, r2) = (self.rank(), other.rank());
        let r = r1 + r2;
        let moduli: Vec<u64> = self
            .moduli()
            .iter()
            .chain(other.moduli())
            .copied()
            .collect();
        let additive = FinAbGroup::from_moduli(moduli).expect("moduli already valid");
        let mut brackets = vec![vec![0u64; r]; r * r.saturating_sub(1) / 2];
        for ((i, j), c) in self.nonzero_brackets() {
            let mut v = c.clone();
            v.resize(r, 0);
            brackets[pair_index(i, j, r)] = v;
        }
        for ((i, j), c) in other.nonzero_brackets() {
            let mut v = vec![0u64; r1];
            v.extend(c);
            brackets[pair_index(i + r1, j + r1, r)] = v;
        }
        LieRing::wrap(additive, brackets)
    }
}

impl PartialEq for LieRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.additive == other.0.additive && self.0.brackets == other.0.brackets)
    }
}

impl Eq for LieRing {}

impl fmt::Debug for LieRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieRing")
            .field("moduli", &self.moduli())
            .field("brackets", &self.nonzero_brackets())
            .finish()
    }
}

/// An element of a Lie ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement {
    ring: LieRing,
    coeffs: Vec<u64>,
}

impl LieElement {
    pub fn ring(&self) -> &LieRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn add(&self, other: &LieElement) -> Result<LieElement> {
        if self.ring != other.ring {
            return Err(Error::ParentMismatch);
        }
        Ok(LieElement {
            ring: self.ring.clone(),
            coeffs: self.ring.additive().add_raw(&self.coeffs, &other.coeffs),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// A subgroup known to be an ideal, flagged when it is central.
#[derive(Debug, Clone)]
pub struct LieIdeal {
    pub subgroup: Subgroup,
    pub central: bool,
}

/// A homomorphism of Lie rings (additive map preserving brackets).
#[derive(Debug, Clone)]
pub struct LieHom {
    domain: LieRing,
    codomain: LieRing,
    map: AbHom,
}

impl LieHom {
    pub fn new(domain: LieRing, codomain: LieRing, map: AbHom) -> Result<Self> {
        if map.domain() != domain.additive() || map.codomain() != codomain.additive() {
            return Err(Error::ParentMismatch);
        }
        let r = domain.rank();
        for i in 0..r {
            for j in i + 1..r {
                let lhs = map.apply(&domain.structure_constant(i, j));
                let rhs = codomain.bracket_raw(&map.images()[i], &map.images()[j]);
                if lhs != rhs {
                    return Err(Error::NotLieHom(format!(
                        "bracket of generators {} and {} is not preserved",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(LieHom {
            domain,
            codomain,
            map,
        })
    }

    pub fn domain(&self) -> &LieRing {
        &self.domain
    }

    pub fn codomain(&self) -> &LieRing {
        &self.codomain
    }

    pub fn map(&self) -> &AbHom {
        &self.map
    }

    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        self.map.apply(x)
    }
}

/// Result of [`LieRing::quotient`].
#[derive(Debug, Clone)]
pub struct LieQuotient {
    pub ring: LieRing,
    pub projection: LieHom,
    /// Coordinates and lifts for the additive quotient.
    pub presentation: SubgroupQuotient,
}

/// `Hom(L, A)` with the correspondence between group elements and maps.
#[derive(Debug, Clone)]
pub struct LieHomGroup {
    ring: LieRing,
    coeff: FinAbGroup,
    projection: AbHom,
    presentation: SubgroupQuotient,
    homs: HomGroup,
}

impl LieHomGroup {
    pub fn group(&self) -> &FinAbGroup {
        self.homs.group()
    }

    pub fn ring(&self) -> &LieRing {
        &self.ring
    }

    pub fn coeff(&self) -> &FinAbGroup {
        &self.coeff
    }

    /// The additive map `L -> A` for a group element.
    pub fn to_hom(&self, element: &[u64]) -> AbHom {
        self.homs
            .to_hom(element)
            .compose(&self.projection)
            .expect("projection lands in L/L²")
    }

    /// Group element of a map `L -> A`; the map must kill `L²`.
    pub fn from_hom(&self, chi: &AbHom) -> Result<Vec<u64>> {
        if chi.domain() != self.ring.additive() || chi.codomain() != &self.coeff {
            return Err(Error::ParentMismatch);
        }
        for ((i, j), c) in self.ring.nonzero_brackets() {
            if chi.apply(&c).iter().any(|&x| x != 0) {
                return Err(Error::NotLieHom(format!(
                    "map does not kill [g{}, g{}]",
                    i + 1,
                    j + 1
                )));
            }
        }
        let images = self
            .presentation
            .lifts()
            .iter()
            .map(|l| chi.apply(l))
            .collect();
        let on_quotient = AbHom::new(self.homs.domain().clone(), self.coeff.clone(), images)?;
        self.homs.from_hom(&on_quotient)
    }
}
