use super::subgroup::{killed_by, solve_congruences, Combiner};
use super::{FinAbGroup, GroupElement, Subgroup};
use crate::arith::gcd;
use crate::error::{Error, Result};

/// A homomorphism of finite abelian groups, stored as the images of the
/// domain generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbHom {
    domain: FinAbGroup,
    codomain: FinAbGroup,
    images: Vec<Vec<u64>>,
}

impl AbHom {
    /// Validates shapes and well-definedness (`d_i * image_i = 0`).
    pub fn new(domain: FinAbGroup, codomain: FinAbGroup, images: Vec<Vec<u64>>) -> Result<Self> {
        if images.len() != domain.rank() {
            return Err(Error::DimensionMismatch {
                expected: domain.rank(),
                found: images.len(),
            });
        }
        let mut reduced = Vec::with_capacity(images.len());
        for (i, img) in images.iter().enumerate() {
            if img.len() != codomain.rank() {
                return Err(Error::DimensionMismatch {
                    expected: codomain.rank(),
                    found: img.len(),
                });
            }
            let img = codomain.reduce(img);
            let d = domain.moduli()[i];
            if !killed_by(&codomain, &img, d) {
                return Err(Error::NotWellDefined {
                    generator: i,
                    order: d,
                });
            }
            reduced.push(img);
        }
        Ok(AbHom {
            domain,
            codomain,
            images: reduced,
        })
    }

    /// From signed integer images.
    pub fn from_signed(
        domain: FinAbGroup,
        codomain: FinAbGroup,
        images: &[Vec<i64>],
    ) -> Result<Self> {
        let mut raw = Vec::with_capacity(images.len());
        for img in images {
            if img.len() != codomain.rank() {
                return Err(Error::DimensionMismatch {
                    expected: codomain.rank(),
                    found: img.len(),
                });
            }
            raw.push(codomain.reduce_signed(img));
        }
        Self::new(domain, codomain, raw)
    }

    pub fn zero(domain: &FinAbGroup, codomain: &FinAbGroup) -> Self {
        AbHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            images: vec![vec![0; codomain.rank()]; domain.rank()],
        }
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        let images = (0..g.rank())
            .map(|i| g.generator(i).into_coeffs())
            .collect();
        AbHom {
            domain: g.clone(),
            codomain: g.clone(),
            images,
        }
    }

    pub fn domain(&self) -> &FinAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FinAbGroup {
        &self.codomain
    }

    pub fn images(&self) -> &[Vec<u64>] {
        &self.images
    }

    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        let mut acc = vec![0u64; self.codomain.rank()];
        for (&c, img) in x.iter().zip(&self.images) {
            if c != 0 {
                self.codomain
                    .add_assign_raw(&mut acc, &self.codomain.scale_raw(img, c));
            }
        }
        acc
    }

    pub fn apply_element(&self, x: &GroupElement) -> Result<GroupElement> {
        if x.group() != &self.domain {
            return Err(Error::ParentMismatch);
        }
        self.codomain.element_raw(self.apply(x.coeffs()))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AbHom) -> Result<AbHom> {
        if inner.codomain != self.domain {
            return Err(Error::ParentMismatch);
        }
        let images = inner.images.iter().map(|x| self.apply(x)).collect();
        Ok(AbHom {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            images,
        })
    }

    /// Pointwise sum.
    pub fn add(&self, other: &AbHom) -> Result<AbHom> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::ParentMismatch);
        }
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(a, b)| self.codomain.add_raw(a, b))
            .collect();
        Ok(AbHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            images,
        })
    }

    pub fn kernel(&self) -> Subgroup {
        let rows: Vec<Vec<i64>> = (0..self.codomain.rank())
            .map(|j| self.images.iter().map(|img| img[j] as i64).collect())
            .collect();
        solve_congruences(&rows, self.codomain.moduli(), self.domain.moduli())
            .expect("validated hom gives a well-defined system")
    }

    pub fn image(&self) -> Subgroup {
        Subgroup::from_raw(self.codomain.clone(), self.images.clone())
    }

    /// `(ker, im)`.
    pub fn kernel_image(&self) -> (Subgroup, Subgroup) {
        (self.kernel(), self.image())
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.image() == Subgroup::whole(&self.codomain)
    }

    /// Solver for preimages under this map.
    pub fn preimage_solver(&self) -> Result<PreimageSolver> {
        Ok(PreimageSolver {
            domain: self.domain.clone(),
            combiner: Combiner::new(&self.codomain, self.images.clone(), &[])?,
        })
    }

    /// Some `x` with `self(x) = y`, if one exists.
    pub fn preimage(&self, y: &[u64]) -> Option<Vec<u64>> {
        self.preimage_solver().ok()?.solve(y)
    }
}

/// Reusable preimage computation for a fixed [`AbHom`].
#[derive(Debug, Clone)]
pub struct PreimageSolver {
    domain: FinAbGroup,
    combiner: Combiner,
}

impl PreimageSolver {
    pub fn solve(&self, y: &[u64]) -> Option<Vec<u64>> {
        self.combiner.combination(y).map(|c| self.domain.reduce(&c))
    }
}

/// `Hom(A, B)` presented as `(+)_{i,j} Z/gcd(a_i, b_j)`: the `(i, j)`
/// coordinate counts multiples of `b_j / gcd(a_i, b_j)` in the `j`-th entry
/// of the image of the `i`-th generator of `A`. Pairs with gcd 1 are
/// omitted.
#[derive(Debug, Clone)]
pub struct HomGroup {
    domain: FinAbGroup,
    codomain: FinAbGroup,
    group: FinAbGroup,
    slots: Vec<(usize, usize, u64)>,
}

impl HomGroup {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn domain(&self) -> &FinAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FinAbGroup {
        &self.codomain
    }

    pub fn to_hom(&self, element: &[u64]) -> AbHom {
        let mut images = vec![vec![0u64; self.codomain.rank()]; self.domain.rank()];
        for (&(i, j, step), &c) in self.slots.iter().zip(element) {
            images[i][j] = (c * step) % self.codomain.moduli()[j];
        }
        AbHom {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            images,
        }
    }

    pub fn from_hom(&self, h: &AbHom) -> Result<Vec<u64>> {
        if h.domain != self.domain || h.codomain != self.codomain {
            return Err(Error::ParentMismatch);
        }
        let mut out = Vec::with_capacity(self.slots.len());
        for &(i, j, step) in &self.slots {
            let v = h.images[i][j];
            if !v.is_multiple_of(step) {
                return Err(Error::NotWellDefined {
                    generator: i,
                    order: self.domain.moduli()[i],
                });
            }
            out.push(v / step);
        }
        // entries outside the slots must vanish (gcd 1 pairs)
        for (i, img) in h.images.iter().enumerate() {
            for (j, &v) in img.iter().enumerate() {
                if v != 0 && !self.slots.iter().any(|&(a, b, _)| a == i && b == j) {
                    return Err(Error::NotWellDefined {
                        generator: i,
                        order: self.domain.moduli()[i],
                    });
                }
            }
        }
        Ok(out)
    }
}

pub fn hom_group(a: &FinAbGroup, b: &FinAbGroup) -> HomGroup {
    let mut slots = Vec::new();
    for (i, &ai) in a.moduli().iter().enumerate() {
        for (j, &bj) in b.moduli().iter().enumerate() {
            let g = gcd(ai, bj);
            if g > 1 {
                slots.push((i, j, bj / g));
            }
        }
    }
    let group = FinAbGroup::from_moduli(
        slots
            .iter()
            .map(|&(i, j, _)| gcd(a.moduli()[i], b.moduli()[j]))
            .collect(),
    )
    .expect("gcds are valid moduli");
    HomGroup {
        domain: a.clone(),
        codomain: b.clone(),
        group,
        slots,
    }
}
