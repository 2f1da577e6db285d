//! Second cohomology of a Lie ring with coefficients in a trivial module.
//!
//! A cocycle is a pair of tables `f, g : L x L -> A`. Both tables are stored
//! flattened into one vector over the table group `A^(2 |L|^2)`: all
//! `f(x, y)` coordinates first (row-major over the element enumeration, then
//! the coordinate of `A`), then all `g(x, y)` coordinates.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;

use crate::abgroup::{AbHom, Combiner, FinAbGroup, Subgroup, SubgroupQuotient};
use crate::arith::{add_mod, mul_mod, neg_mod, reduce_i128};
use crate::error::{Error, Result};
use crate::liering::{LieHom, LieRing, Tables};
use crate::par;
use crate::zmod::Howell;

/// Size limits shared by the computations built on the cocycle system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `|L|` the cocycle system is assembled for.
    pub max_order: usize,
    /// Largest `|H^2|` that may be enumerated class by class.
    pub class_budget: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 32,
            class_budget: 10_000,
        }
    }
}

impl Limits {
    /// `|L|` if it is within `max_order`.
    pub fn check_ring(&self, ring: &LieRing) -> Result<usize> {
        match ring.size() {
            Some(n) if n <= self.max_order => Ok(n),
            _ => Err(Error::ResourceLimit {
                what: "cocycle system",
                order: ring.additive().order_u128().unwrap_or(u128::MAX),
                limit: self.max_order as u128,
            }),
        }
    }
}

/// A failed cocycle condition and the first element tuple (in enumeration
/// order) where it fails. Unused witness slots are zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub condition: u8,
    pub witness: (usize, usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y, z) = self.witness;
        match self.condition {
            2 => write!(f, "condition (2) fails at x={x}"),
            5 => write!(f, "condition (5) fails at x={x}, y={y}"),
            c => write!(f, "condition ({c}) fails at x={x}, y={y}, z={z}"),
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::NotACocycle {
            condition: v.condition,
            witness: v.witness,
        }
    }
}

/// A pair of tables `(f, g)`. Not necessarily a cocycle; see [`Cocycle::check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cocycle {
    ring: LieRing,
    coeff: FinAbGroup,
    n: usize,
    data: Vec<u64>,
}

fn table_group(n: usize, coeff: &FinAbGroup) -> FinAbGroup {
    let mut moduli = Vec::with_capacity(2 * n * n * coeff.rank());
    for _ in 0..2 * n * n {
        moduli.extend_from_slice(coeff.moduli());
    }
    FinAbGroup::from_moduli(moduli).expect("moduli of a valid group")
}

impl Cocycle {
    pub fn zero(ring: &LieRing, coeff: &FinAbGroup) -> Result<Self> {
        let n = ring.size().ok_or(Error::Overflow("ring order"))?;
        Ok(Cocycle {
            ring: ring.clone(),
            coeff: coeff.clone(),
            n,
            data: vec![0; 2 * n * n * coeff.rank()],
        })
    }

    /// Build from row-major `|L| x |L|` tables of coefficient vectors.
    pub fn from_tables(
        ring: &LieRing,
        coeff: &FinAbGroup,
        f: &[Vec<i64>],
        g: &[Vec<i64>],
    ) -> Result<Self> {
        let mut c = Self::zero(ring, coeff)?;
        let (n, r) = (c.n, coeff.rank());
        for table in [f, g] {
            if table.len() != n * n {
                return Err(Error::DimensionMismatch {
                    expected: n * n,
                    found: table.len(),
                });
            }
        }
        for (block, table) in [f, g].into_iter().enumerate() {
            for (p, v) in table.iter().enumerate() {
                if v.len() != r {
                    return Err(Error::DimensionMismatch {
                        expected: r,
                        found: v.len(),
                    });
                }
                let at = (block * n * n + p) * r;
                c.data[at..at + r].copy_from_slice(&coeff.reduce_signed(v));
            }
        }
        Ok(c)
    }

    /// Build from a vector in the persisted layout.
    pub fn from_vector(ring: &LieRing, coeff: &FinAbGroup, data: &[u64]) -> Result<Self> {
        let mut c = Self::zero(ring, coeff)?;
        if data.len() != c.data.len() {
            return Err(Error::DimensionMismatch {
                expected: c.data.len(),
                found: data.len(),
            });
        }
        c.data = table_group(c.n, coeff).reduce(data);
        Ok(c)
    }

    pub fn ring(&self) -> &LieRing {
        &self.ring
    }

    pub fn coeff(&self) -> &FinAbGroup {
        &self.coeff
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn as_vector(&self) -> &[u64] {
        &self.data
    }

    pub fn f(&self, x: usize, y: usize) -> &[u64] {
        let r = self.coeff.rank();
        let at = (x * self.n + y) * r;
        &self.data[at..at + r]
    }

    pub fn g(&self, x: usize, y: usize) -> &[u64] {
        let r = self.coeff.rank();
        let at = (self.n * self.n + x * self.n + y) * r;
        &self.data[at..at + r]
    }

    /// Row-major `f` table.
    pub fn f_table(&self) -> Vec<Vec<u64>> {
        let r = self.coeff.rank().max(1);
        let half = self.n * self.n * self.coeff.rank();
        if self.coeff.rank() == 0 {
            return vec![Vec::new(); self.n * self.n];
        }
        self.data[..half].chunks(r).map(<[u64]>::to_vec).collect()
    }

    /// Row-major `g` table.
    pub fn g_table(&self) -> Vec<Vec<u64>> {
        let r = self.coeff.rank().max(1);
        let half = self.n * self.n * self.coeff.rank();
        if self.coeff.rank() == 0 {
            return vec![Vec::new(); self.n * self.n];
        }
        self.data[half..].chunks(r).map(<[u64]>::to_vec).collect()
    }

    fn same_shape(&self, other: &Cocycle) -> Result<()> {
        if self.ring != other.ring || self.coeff != other.coeff {
            return Err(Error::ParentMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Cocycle) -> Result<Cocycle> {
        self.same_shape(other)?;
        let t = table_group(self.n, &self.coeff);
        Ok(Cocycle {
            data: t.add_raw(&self.data, &other.data),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Cocycle) -> Result<Cocycle> {
        self.same_shape(other)?;
        let t = table_group(self.n, &self.coeff);
        Ok(Cocycle {
            data: t.sub_raw(&self.data, &other.data),
            ..self.clone()
        })
    }

    pub fn scale(&self, q: u64) -> Cocycle {
        let t = table_group(self.n, &self.coeff);
        Cocycle {
            data: t.scale_raw(&self.data, q),
            ..self.clone()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `(f o (b x b), g o (b x b))` for a Lie homomorphism `b : K -> L`.
    pub fn pull_back(&self, beta: &LieHom) -> Result<Cocycle> {
        if beta.codomain() != &self.ring {
            return Err(Error::ParentMismatch);
        }
        let k = beta.domain();
        let n = k.size().ok_or(Error::Overflow("ring order"))?;
        let src = k.additive();
        let dst = self.ring.additive();
        let image: Vec<usize> = src
            .elements()
            .map(|x| dst.index_of(&beta.apply(&x)))
            .collect();
        let r = self.coeff.rank();
        let mut data = vec![0u64; 2 * n * n * r];
        for x in 0..n {
            for y in 0..n {
                let at = (x * n + y) * r;
                data[at..at + r].copy_from_slice(self.f(image[x], image[y]));
                let at = (n * n + x * n + y) * r;
                data[at..at + r].copy_from_slice(self.g(image[x], image[y]));
            }
        }
        Ok(Cocycle {
            ring: k.clone(),
            coeff: self.coeff.clone(),
            n,
            data,
        })
    }

    /// Compose both tables with an additive map `A -> A'`.
    pub fn push_forward(&self, phi: &AbHom) -> Result<Cocycle> {
        if phi.domain() != &self.coeff {
            return Err(Error::ParentMismatch);
        }
        let r = self.coeff.rank();
        let out = phi.codomain().clone();
        let mut data = Vec::with_capacity(2 * self.n * self.n * out.rank());
        if r == 0 {
            data.resize(2 * self.n * self.n * out.rank(), 0);
        } else {
            for v in self.data.chunks(r) {
                data.extend(phi.apply(v));
            }
        }
        Ok(Cocycle {
            ring: self.ring.clone(),
            coeff: out,
            n: self.n,
            data,
        })
    }

    /// First violated condition, if any. Conditions are tried in order
    /// (1), (2), (3), (4), (5); within a condition, witnesses are scanned in
    /// lexicographic order of element indices.
    pub fn check(&self) -> Result<Option<Violation>> {
        let t = self.ring.tables()?;
        Ok(check_tables(self, t))
    }

    pub fn is_cocycle(&self) -> Result<bool> {
        Ok(self.check()?.is_none())
    }

    /// Error out unless this is a cocycle.
    pub fn require_cocycle(&self) -> Result<()> {
        match self.check()? {
            None => Ok(()),
            Some(v) => Err(v.into()),
        }
    }
}

/// `sum c_i v_i == 0` coordinatewise in `A`.
fn vanishes(moduli: &[u64], terms: &[(i64, &[u64])]) -> bool {
    moduli.iter().enumerate().all(|(k, &m)| {
        let mut acc = 0u64;
        for &(c, v) in terms {
            acc = add_mod(acc, mul_mod(reduce_i128(c as i128, m), v[k], m), m);
        }
        acc == 0
    })
}

fn check_tables(c: &Cocycle, t: &Tables) -> Option<Violation> {
    let n = c.n;
    let moduli = c.coeff.moduli();
    let (f, g) = (|x, y| c.f(x, y), |x, y| c.g(x, y));
    let add = |x, y| t.add(x, y);
    let br = |x, y| t.bracket(x, y);

    let one = |x: usize, y: usize, z: usize| {
        vanishes(
            moduli,
            &[
                (1, f(add(x, y), z)),
                (-1, f(x, z)),
                (-1, f(y, z)),
                (-1, g(br(x, z), br(y, z))),
            ],
        ) && vanishes(
            moduli,
            &[
                (1, f(x, add(y, z))),
                (-1, f(x, y)),
                (-1, f(x, z)),
                (-1, g(br(x, y), br(x, z))),
            ],
        )
    };
    let three = |x: usize, y: usize, z: usize| {
        let yz = br(y, z);
        let xy = br(x, y);
        let zx = br(z, x);
        let y_zx = br(y, zx);
        vanishes(
            moduli,
            &[
                (1, f(x, yz)),
                (1, f(z, xy)),
                (1, f(y, zx)),
                (1, g(br(x, yz), br(z, xy))),
                (1, g(t.neg(y_zx), y_zx)),
            ],
        )
    };
    let four = |x: usize, y: usize, z: usize| {
        vanishes(
            moduli,
            &[
                (1, g(add(x, y), z)),
                (1, g(x, y)),
                (-1, g(x, add(y, z))),
                (-1, g(y, z)),
            ],
        )
    };

    let triple = |cond: u8, ok: &(dyn Fn(usize, usize, usize) -> bool + Sync)| {
        let x = par::find_first(n as u64, |x| {
            let x = x as usize;
            (0..n).any(|y| (0..n).any(|z| !ok(x, y, z)))
        })? as usize;
        for y in 0..n {
            for z in 0..n {
                if !ok(x, y, z) {
                    return Some(Violation {
                        condition: cond,
                        witness: (x, y, z),
                    });
                }
            }
        }
        unreachable!("row flagged by the parallel scan")
    };

    if let Some(v) = triple(1, &one) {
        return Some(v);
    }
    if let Some(x) = (0..n).find(|&x| f(x, x).iter().any(|&v| v != 0)) {
        return Some(Violation {
            condition: 2,
            witness: (x, 0, 0),
        });
    }
    if let Some(v) = triple(3, &three) {
        return Some(v);
    }
    if let Some(v) = triple(4, &four) {
        return Some(v);
    }
    for x in 0..n {
        for y in 0..n {
            if g(x, y) != g(y, x) {
                return Some(Violation {
                    condition: 5,
                    witness: (x, y, 0),
                });
            }
        }
    }
    None
}

/// The coboundary `f(x,y) = -t([x,y])`, `g(x,y) = t(x) + t(y) - t(x+y)` of a
/// pointed map `t` given as one coefficient vector per element.
pub fn coboundary_from(ring: &LieRing, coeff: &FinAbGroup, t: &[Vec<i64>]) -> Result<Cocycle> {
    let tables = ring.tables()?;
    let n = tables.n;
    if t.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: t.len(),
        });
    }
    let mut vals = Vec::with_capacity(n);
    for v in t {
        if v.len() != coeff.rank() {
            return Err(Error::DimensionMismatch {
                expected: coeff.rank(),
                found: v.len(),
            });
        }
        vals.push(coeff.reduce_signed(v));
    }
    if vals.first().is_some_and(|v| v.iter().any(|&x| x != 0)) {
        return Err(Error::NotPointed);
    }
    let r = coeff.rank();
    let mut c = Cocycle::zero(ring, coeff)?;
    for x in 0..n {
        for y in 0..n {
            let at = (x * n + y) * r;
            c.data[at..at + r].copy_from_slice(&coeff.neg_raw(&vals[tables.bracket(x, y)]));
            let at = (n * n + x * n + y) * r;
            let s = coeff.sub_raw(&coeff.add_raw(&vals[x], &vals[y]), &vals[tables.add(x, y)]);
            c.data[at..at + r].copy_from_slice(&s);
        }
    }
    Ok(c)
}

/// One integer equation over the `2 |L|^2` scalar unknowns `f(x,y)`, `g(x,y)`.
type Row = Vec<(u32, i64)>;

/// Per-ring cache of the assembled equations and of their solution and
/// coboundary generators for each scalar modulus.
#[derive(Default)]
pub struct SystemCache {
    rows: OnceLock<Arc<Vec<Row>>>,
    solved: Mutex<HashMap<u64, Arc<Scalar>>>,
}

impl fmt::Debug for SystemCache {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SystemCache")
    }
}

/// Cocycles and coboundaries with coefficients in `Z/m`.
struct Scalar {
    z2: Vec<Vec<u64>>,
    b2: Vec<Vec<u64>>,
}

fn normalize(mut terms: Vec<(u32, i64)>) -> Option<Row> {
    terms.sort_unstable_by_key(|&(v, _)| v);
    let mut out: Row = Vec::with_capacity(terms.len());
    for (v, c) in terms {
        match out.last_mut() {
            Some((w, d)) if *w == v => *d += c,
            _ => out.push((v, c)),
        }
    }
    out.retain(|&(_, c)| c != 0);
    if out.first()?.1 < 0 {
        out.iter_mut().for_each(|(_, c)| *c = -*c);
    }
    Some(out)
}

fn assemble(t: &Tables) -> Vec<Row> {
    let n = t.n;
    let fv = |x: usize, y: usize| (x * n + y) as u32;
    let gv = |x: usize, y: usize| (n * n + x * n + y) as u32;
    let blocks = par::map_range(n, |x| {
        let mut rows = Vec::new();
        let mut push = |terms: Vec<(u32, i64)>| {
            if let Some(r) = normalize(terms) {
                rows.push(r);
            }
        };
        push(vec![(fv(x, x), 1)]);
        for y in 0..n {
            push(vec![(gv(x, y), 1), (gv(y, x), -1)]);
            for z in 0..n {
                push(vec![
                    (fv(t.add(x, y), z), 1),
                    (fv(x, z), -1),
                    (fv(y, z), -1),
                    (gv(t.bracket(x, z), t.bracket(y, z)), -1),
                ]);
                push(vec![
                    (fv(x, t.add(y, z)), 1),
                    (fv(x, y), -1),
                    (fv(x, z), -1),
                    (gv(t.bracket(x, y), t.bracket(x, z)), -1),
                ]);
                let (yz, xy, zx) = (t.bracket(y, z), t.bracket(x, y), t.bracket(z, x));
                let y_zx = t.bracket(y, zx);
                push(vec![
                    (fv(x, yz), 1),
                    (fv(z, xy), 1),
                    (fv(y, zx), 1),
                    (gv(t.bracket(x, yz), t.bracket(z, xy)), 1),
                    (gv(t.neg(y_zx), y_zx), 1),
                ]);
                push(vec![
                    (gv(t.add(x, y), z), 1),
                    (gv(x, y), 1),
                    (gv(x, t.add(y, z)), -1),
                    (gv(y, z), -1),
                ]);
            }
        }
        rows
    });
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for r in blocks.into_iter().flatten() {
        if seen.insert(r.clone()) {
            out.push(r);
        }
    }
    out
}

fn indicator_coboundaries(t: &Tables, m: u64) -> Vec<Vec<u64>> {
    let n = t.n;
    let one = 1 % m;
    par::map_range(n.saturating_sub(1), |l| {
        let l = l + 1;
        let mut v = vec![0u64; 2 * n * n];
        for x in 0..n {
            for y in 0..n {
                if t.bracket(x, y) == l {
                    v[x * n + y] = neg_mod(one, m);
                }
                let mut s = 0i64;
                s += i64::from(x == l);
                s += i64::from(y == l);
                s -= i64::from(t.add(x, y) == l);
                v[n * n + x * n + y] = reduce_i128(s as i128, m);
            }
        }
        v
    })
}

fn satisfies(rows: &[Row], v: &[u64], m: u64) -> bool {
    rows.iter().all(|r| {
        r.iter().fold(0u64, |acc, &(j, c)| {
            add_mod(acc, mul_mod(reduce_i128(c as i128, m), v[j as usize], m), m)
        }) == 0
    })
}

fn scalar_system(ring: &LieRing, m: u64) -> Result<Arc<Scalar>> {
    let cache = ring.system_cache();
    if let Some(s) = cache.solved.lock().expect("cache lock").get(&m) {
        return Ok(s.clone());
    }
    let t = ring.tables()?;
    let rows = cache.rows.get_or_init(|| Arc::new(assemble(t))).clone();
    let width = 2 * t.n * t.n;
    let mut h = Howell::new(width, m);
    for r in rows.iter() {
        let sparse: Vec<(usize, i64)> = r.iter().map(|&(j, c)| (j as usize, c)).collect();
        h.insert_sparse(&sparse);
    }
    let z2 = h.kernel();
    let b2 = indicator_coboundaries(t, m);
    if let Some(bad) = b2.iter().position(|b| !satisfies(&rows, b, m)) {
        return Err(Error::Internal(format!(
            "coboundary of the indicator at element {} violates the cocycle equations",
            bad + 1
        )));
    }
    let s = Arc::new(Scalar { z2, b2 });
    cache
        .solved
        .lock()
        .expect("cache lock")
        .insert(m, s.clone());
    Ok(s)
}

/// Place per-coordinate scalar vectors into the table layout.
fn scatter(n: usize, r: usize, k: usize, v: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; 2 * n * n * r];
    for (j, &x) in v.iter().enumerate() {
        out[j * r + k] = x;
    }
    out
}

fn lattice(
    ring: &LieRing,
    coeff: &FinAbGroup,
    limits: &Limits,
    pick: impl Fn(&Scalar) -> &Vec<Vec<u64>>,
) -> Result<Subgroup> {
    let n = limits.check_ring(ring)?;
    let r = coeff.rank();
    let mut gens = Vec::new();
    for (k, &m) in coeff.moduli().iter().enumerate() {
        let s = scalar_system(ring, m)?;
        gens.extend(pick(&s).iter().map(|v| scatter(n, r, k, v)));
    }
    Ok(Subgroup::from_raw(table_group(n, coeff), gens))
}

/// `Z^2(L, A)` as a subgroup of the table group.
pub fn z2(ring: &LieRing, coeff: &FinAbGroup) -> Result<Subgroup> {
    z2_with(ring, coeff, &Limits::default())
}

pub fn z2_with(ring: &LieRing, coeff: &FinAbGroup, limits: &Limits) -> Result<Subgroup> {
    lattice(ring, coeff, limits, |s| &s.z2)
}

/// `B^2(L, A)`, generated by the coboundaries of indicator maps.
pub fn b2(ring: &LieRing, coeff: &FinAbGroup) -> Result<Subgroup> {
    b2_with(ring, coeff, &Limits::default())
}

pub fn b2_with(ring: &LieRing, coeff: &FinAbGroup, limits: &Limits) -> Result<Subgroup> {
    lattice(ring, coeff, limits, |s| &s.b2)
}

/// A pointed map `t` (one coefficient vector per element) whose coboundary
/// is `c`, or `None` when `c` is not a coboundary.
pub fn coboundary_preimage(c: &Cocycle) -> Result<Option<Vec<Vec<u64>>>> {
    let b = b2_with(
        c.ring(),
        c.coeff(),
        &Limits {
            max_order: c.n,
            ..Limits::default()
        },
    )?;
    let combiner = Combiner::new(b.parent(), b.generators().to_vec(), &[])?;
    let Some(w) = combiner.combination(&c.data) else {
        return Ok(None);
    };
    let (n, r) = (c.n, c.coeff.rank());
    let mut t = vec![vec![0u64; r]; n];
    // generators come per coordinate k, then per nonzero element l
    for k in 0..r {
        let m = c.coeff.moduli()[k];
        for l in 1..n {
            t[l][k] = w[k * (n - 1) + l - 1] % m;
        }
    }
    Ok(Some(t))
}

/// `H^2(L, A) = Z^2 / B^2` in invariant-factor form.
#[derive(Debug, Clone)]
pub struct H2Group {
    ring: LieRing,
    coeff: FinAbGroup,
    reps: Vec<Cocycle>,
    z2: Subgroup,
    b2: Subgroup,
    presentation: SubgroupQuotient,
}

pub fn h2(ring: &LieRing, coeff: &FinAbGroup) -> Result<H2Group> {
    h2_with(ring, coeff, &Limits::default())
}

pub fn h2_with(ring: &LieRing, coeff: &FinAbGroup, limits: &Limits) -> Result<H2Group> {
    let z = z2_with(ring, coeff, limits)?;
    let b = b2_with(ring, coeff, limits)?;
    let presentation =
        SubgroupQuotient::new(z.parent(), z.generators().to_vec(), b.generators().to_vec())?;
    let reps = presentation
        .lifts()
        .iter()
        .map(|v| Cocycle::from_vector(ring, coeff, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(H2Group {
        ring: ring.clone(),
        coeff: coeff.clone(),
        reps,
        z2: z,
        b2: b,
        presentation,
    })
}

impl H2Group {
    pub fn group(&self) -> &FinAbGroup {
        self.presentation.group()
    }

    pub fn ring(&self) -> &LieRing {
        &self.ring
    }

    pub fn coeff(&self) -> &FinAbGroup {
        &self.coeff
    }

    /// One representative cocycle per generator of [`H2Group::group`].
    pub fn reps(&self) -> &[Cocycle] {
        &self.reps
    }

    pub fn z2(&self) -> &Subgroup {
        &self.z2
    }

    pub fn b2(&self) -> &Subgroup {
        &self.b2
    }

    pub fn z2_order(&self) -> BigUint {
        self.z2.order()
    }

    pub fn b2_order(&self) -> BigUint {
        self.b2.order()
    }

    /// Coordinates of the class of `c` in [`H2Group::group`].
    pub fn class_of(&self, c: &Cocycle) -> Result<Vec<u64>> {
        if c.ring != self.ring || c.coeff != self.coeff {
            return Err(Error::ParentMismatch);
        }
        c.require_cocycle()?;
        self.presentation
            .coords(&c.data)
            .ok_or_else(|| Error::Internal("cocycle outside the solved lattice".into()))
    }

    /// A representative cocycle for a class given in coordinates.
    pub fn representative(&self, class: &[u64]) -> Result<Cocycle> {
        if class.len() != self.group().rank() {
            return Err(Error::DimensionMismatch {
                expected: self.group().rank(),
                found: class.len(),
            });
        }
        Cocycle::from_vector(
            &self.ring,
            &self.coeff,
            &self.presentation.lift_coords(class),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> LieRing {
        LieRing::abelian(&[2]).unwrap()
    }

    #[test]
    fn small_cocycle_checks() {
        let l = c2();
        let a = FinAbGroup::cyclic(2);
        let zero = Cocycle::zero(&l, &a).unwrap();
        assert!(zero.is_cocycle().unwrap());

        let f = vec![vec![0]; 4];
        let mut g = vec![vec![0]; 4];
        g[3] = vec![1];
        assert!(Cocycle::from_tables(&l, &a, &f, &g)
            .unwrap()
            .is_cocycle()
            .unwrap());

        let mut g = vec![vec![0]; 4];
        g[1] = vec![1];
        let v = Cocycle::from_tables(&l, &a, &f, &g)
            .unwrap()
            .check()
            .unwrap()
            .unwrap();
        assert_eq!(v.condition, 4);
        assert_eq!(v.witness.0, 0);

        assert!(Cocycle::from_tables(&l, &a, &f[..3], &g).is_err());
    }

    #[test]
    fn coboundaries() {
        let l = c2();
        let a = FinAbGroup::cyclic(2);
        assert!(coboundary_from(&l, &a, &[vec![0], vec![1]])
            .unwrap()
            .is_zero());
        assert_eq!(
            coboundary_from(&l, &a, &[vec![1], vec![1]]),
            Err(Error::NotPointed)
        );

        let l3 = LieRing::abelian(&[3]).unwrap();
        let a3 = FinAbGroup::cyclic(3);
        let c = coboundary_from(&l3, &a3, &[vec![0], vec![1], vec![0]]).unwrap();
        assert_eq!(c.g(1, 1), &[2]);
        assert_eq!(c.g(1, 2), &[1]);
        assert_eq!(c.g(2, 1), &[1]);
        assert_eq!(c.g(2, 2), &[2]);
        assert!(c.f_table().iter().all(|v| v == &[0]));
        assert!(c.is_cocycle().unwrap());
    }

    #[test]
    fn cyclic_groups() {
        let l = c2();
        let z = z2(&l, &FinAbGroup::cyclic(2)).unwrap();
        assert_eq!(z.order(), BigUint::from(2u32));
        assert_eq!(
            z2(&l, &FinAbGroup::cyclic(4)).unwrap().order(),
            BigUint::from(4u32)
        );
        assert!(b2(&l, &FinAbGroup::cyclic(2)).unwrap().is_trivial());
        // the indicators at 1 and 2 are dependent: t = (1, 2) is additive
        let l3 = LieRing::abelian(&[3]).unwrap();
        assert_eq!(
            b2(&l3, &FinAbGroup::cyclic(3)).unwrap().order(),
            BigUint::from(3u32)
        );
        for p in [2u64, 3, 5] {
            let l = LieRing::abelian(&[p as i64]).unwrap();
            let h = h2(&l, &FinAbGroup::cyclic(p)).unwrap();
            assert_eq!(h.group().moduli(), &[p]);
            assert_eq!(h.z2_order(), h.b2_order() * BigUint::from(p));
        }
        let triv = LieRing::abelian(&[]).unwrap();
        assert!(h2(&triv, &FinAbGroup::cyclic(6))
            .unwrap()
            .group()
            .is_trivial());
        assert!(h2(&c2(), &FinAbGroup::trivial())
            .unwrap()
            .group()
            .is_trivial());
    }

    #[test]
    fn classes() {
        let l = c2();
        let a = FinAbGroup::cyclic(2);
        let h = h2(&l, &a).unwrap();
        let f = vec![vec![0]; 4];
        let mut g = vec![vec![0]; 4];
        g[3] = vec![1];
        let c = Cocycle::from_tables(&l, &a, &f, &g).unwrap();
        assert_eq!(h.class_of(&c).unwrap(), vec![1]);
        assert_eq!(h.class_of(&h.reps()[0]).unwrap(), vec![1]);
        assert_eq!(h.representative(&[0]).unwrap().is_cocycle(), Ok(true));

        let l4 = LieRing::abelian(&[4]).unwrap();
        let a4 = FinAbGroup::cyclic(4);
        let h = h2(&l4, &a4).unwrap();
        let rep = &h.reps()[0];
        let b = coboundary_from(&l4, &a4, &[vec![0], vec![3], vec![1], vec![2]]).unwrap();
        assert_eq!(
            h.class_of(&rep.add(&b).unwrap()).unwrap(),
            h.class_of(rep).unwrap()
        );
        assert_eq!(h.class_of(&b).unwrap(), vec![0]);
        let t = coboundary_preimage(&b).unwrap().unwrap();
        let signed: Vec<Vec<i64>> = t.iter().map(|v| vec![v[0] as i64]).collect();
        assert_eq!(coboundary_from(&l4, &a4, &signed).unwrap(), b);
        assert_eq!(coboundary_preimage(rep).unwrap(), None);
    }

    #[test]
    fn heisenberg_reps_are_cocycles() {
        let l = LieRing::heisenberg(2).unwrap();
        let a = FinAbGroup::cyclic(2);
        let h = h2(&l, &a).unwrap();
        for (i, rep) in h.reps().iter().enumerate() {
            assert!(rep.is_cocycle().unwrap());
            let mut e = vec![0; h.group().rank()];
            e[i] = 1;
            assert_eq!(h.class_of(rep).unwrap(), e);
        }
        for gen in h.z2().generators() {
            assert!(Cocycle::from_vector(&l, &a, gen)
                .unwrap()
                .is_cocycle()
                .unwrap());
        }
    }

    #[test]
    fn size_guard() {
        let l = LieRing::abelian(&[2, 2, 2, 2, 2, 2]).unwrap();
        let err = h2(&l, &FinAbGroup::cyclic(2)).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }
}
