//! The five-term sequence
//! `0 -> Hom(L/H, A) -> Hom(L, A) -> Hom(H, A) -> H^2(L/H, A) -> H^2(L, A)`
//! for a central ideal `H`, and left exactness of `Hom`.

use crate::abgroup::{hom_group, AbHom, FinAbGroup, HomGroup, Subgroup, SubgroupQuotient};
use crate::cohomology::{h2_with, Cocycle, H2Group, Limits};
use crate::error::{Error, Result};
use crate::extensions::{cocycle_from_extension, CentralExtension, Section};
use crate::liering::{LieHom, LieHomGroup, LieIdeal, LieQuotient, LieRing};

/// All the data of the sequence for one `(L, H, A)`.
#[derive(Debug, Clone)]
pub struct FiveTerm {
    ring: LieRing,
    ideal: Subgroup,
    coeff: FinAbGroup,
    quotient: LieQuotient,
    ideal_group: SubgroupQuotient,
    hom_q: LieHomGroup,
    hom_l: LieHomGroup,
    hom_h: HomGroup,
    h2_q: H2Group,
    h2_l: H2Group,
    /// `0 -> H -> L -> L/H -> 0` with `H` in its own coordinates.
    extension: CentralExtension,
    /// `H`-valued cocycle of that extension for the coset-least section.
    transgression: Cocycle,
}

/// Verdicts and maps of the sequence.
#[derive(Debug, Clone)]
pub struct FiveTermReport {
    pub ring: LieRing,
    pub ideal: Subgroup,
    pub coeff: FinAbGroup,
    /// `Hom(L/H,A)`, `Hom(L,A)`, `Hom(H,A)`, `H^2(L/H,A)`, `H^2(L,A)`.
    pub groups: [FinAbGroup; 5],
    pub inf_hom: AbHom,
    pub res: AbHom,
    pub tra: AbHom,
    pub inf_h2: AbHom,
    pub inf_injective: bool,
    pub exact_at_hom_l: bool,
    pub exact_at_hom_h: bool,
    pub exact_at_h2_quotient: bool,
}

impl FiveTermReport {
    pub fn all_exact(&self) -> bool {
        self.inf_injective
            && self.exact_at_hom_l
            && self.exact_at_hom_h
            && self.exact_at_h2_quotient
    }

    /// Recompute the four verdicts from the stored maps.
    pub fn recheck(&self) -> [bool; 4] {
        verdicts(&self.inf_hom, &self.res, &self.tra, &self.inf_h2)
    }
}

fn verdicts(inf_hom: &AbHom, res: &AbHom, tra: &AbHom, inf_h2: &AbHom) -> [bool; 4] {
    [
        inf_hom.is_injective(),
        res.kernel() == inf_hom.image(),
        tra.kernel() == res.image(),
        inf_h2.kernel() == tra.image(),
    ]
}

fn unit(rank: usize, i: usize) -> Vec<u64> {
    let mut e = vec![0u64; rank];
    e[i] = 1;
    e
}

impl FiveTerm {
    pub fn new(
        ring: &LieRing,
        ideal: &LieIdeal,
        coeff: &FinAbGroup,
        limits: &Limits,
    ) -> Result<Self> {
        let h = ring.central_ideal(ideal.subgroup.clone())?;
        let quotient = ring.quotient(&h)?;
        let ideal_group = h.subgroup.as_group()?;
        let h_abs = ideal_group.group().clone();
        let hom_q = quotient.ring.hom_to_abelian(coeff);
        let hom_l = ring.hom_to_abelian(coeff);
        let hom_h = hom_group(&h_abs, coeff);
        let h2_q = h2_with(&quotient.ring, coeff, limits)?;
        let h2_l = h2_with(ring, coeff, limits)?;

        let extension = CentralExtension::new(
            h_abs,
            ring.clone(),
            quotient.ring.clone(),
            ideal_group.inclusion()?,
            quotient.projection.clone(),
        )?;
        let mu = coset_least_section(&extension)?;
        let transgression = cocycle_from_extension(&extension, &mu)?;
        Ok(FiveTerm {
            ring: ring.clone(),
            ideal: h.subgroup,
            coeff: coeff.clone(),
            quotient,
            ideal_group,
            hom_q,
            hom_l,
            hom_h,
            h2_q,
            h2_l,
            extension,
            transgression,
        })
    }

    pub fn quotient(&self) -> &LieQuotient {
        &self.quotient
    }

    /// `H` as an abstract group with its inclusion into `L`.
    pub fn ideal_group(&self) -> &SubgroupQuotient {
        &self.ideal_group
    }

    pub fn hom_quotient(&self) -> &LieHomGroup {
        &self.hom_q
    }

    pub fn hom_ring(&self) -> &LieHomGroup {
        &self.hom_l
    }

    pub fn hom_ideal(&self) -> &HomGroup {
        &self.hom_h
    }

    pub fn h2_quotient(&self) -> &H2Group {
        &self.h2_q
    }

    pub fn h2_ring(&self) -> &H2Group {
        &self.h2_l
    }

    pub fn extension(&self) -> &CentralExtension {
        &self.extension
    }

    /// Restriction of a Lie homomorphism `L -> A` to `H`.
    pub fn res(&self, chi: &AbHom) -> Result<AbHom> {
        self.hom_l.from_hom(chi)?;
        chi.compose(&self.ideal_group.inclusion()?)
    }

    /// `chi o pi` for a Lie homomorphism `L/H -> A`.
    pub fn inf_hom(&self, chi: &AbHom) -> Result<AbHom> {
        self.hom_q.from_hom(chi)?;
        chi.compose(self.quotient.projection.map())
    }

    /// Inflation of a class of `H^2(L/H, A)` to `H^2(L, A)`.
    pub fn inf_h2(&self, class: &[u64]) -> Result<Vec<u64>> {
        let rep = self.h2_q.representative(class)?;
        self.h2_l
            .class_of(&rep.pull_back(&self.quotient.projection)?)
    }

    /// Transgression of `chi : H -> A`, using the coset-least section.
    pub fn tra(&self, chi: &AbHom) -> Result<Vec<u64>> {
        self.h2_q.class_of(&self.transgression.push_forward(chi)?)
    }

    /// Transgression computed with an arbitrary section of `L -> L/H`.
    pub fn tra_with_section(&self, chi: &AbHom, mu: &Section) -> Result<Vec<u64>> {
        let c = cocycle_from_extension(&self.extension, mu)?;
        self.h2_q.class_of(&c.push_forward(chi)?)
    }

    /// Build the four group-level maps and decide exactness.
    pub fn report(&self) -> Result<FiveTermReport> {
        let g1 = self.hom_q.group();
        let g2 = self.hom_l.group();
        let g3 = self.hom_h.group();
        let g4 = self.h2_q.group();
        let g5 = self.h2_l.group();

        let mut inf_images = Vec::with_capacity(g1.rank());
        for i in 0..g1.rank() {
            let chi = self.hom_q.to_hom(&unit(g1.rank(), i));
            inf_images.push(self.hom_l.from_hom(&self.inf_hom(&chi)?)?);
        }
        let inf_hom = AbHom::new(g1.clone(), g2.clone(), inf_images)?;

        let mut res_images = Vec::with_capacity(g2.rank());
        for i in 0..g2.rank() {
            let chi = self.hom_l.to_hom(&unit(g2.rank(), i));
            res_images.push(self.hom_h.from_hom(&self.res(&chi)?)?);
        }
        let res = AbHom::new(g2.clone(), g3.clone(), res_images)?;

        let mut tra_images = Vec::with_capacity(g3.rank());
        for i in 0..g3.rank() {
            tra_images.push(self.tra(&self.hom_h.to_hom(&unit(g3.rank(), i)))?);
        }
        let tra = AbHom::new(g3.clone(), g4.clone(), tra_images)?;

        let mut inf2_images = Vec::with_capacity(g4.rank());
        for i in 0..g4.rank() {
            inf2_images.push(self.inf_h2(&unit(g4.rank(), i))?);
        }
        let inf_h2 = AbHom::new(g4.clone(), g5.clone(), inf2_images)?;

        let [a, b, c, d] = verdicts(&inf_hom, &res, &tra, &inf_h2);
        Ok(FiveTermReport {
            ring: self.ring.clone(),
            ideal: self.ideal.clone(),
            coeff: self.coeff.clone(),
            groups: [g1.clone(), g2.clone(), g3.clone(), g4.clone(), g5.clone()],
            inf_hom,
            res,
            tra,
            inf_h2,
            inf_injective: a,
            exact_at_hom_l: b,
            exact_at_hom_h: c,
            exact_at_h2_quotient: d,
        })
    }
}

/// For each coset of `H`, its enumeration-least element of `L`.
pub fn coset_least_section(ext: &CentralExtension) -> Result<Section> {
    crate::extensions::section_of(ext)
}

pub fn check_five_term(
    ring: &LieRing,
    ideal: &LieIdeal,
    coeff: &FinAbGroup,
) -> Result<FiveTermReport> {
    check_five_term_with(ring, ideal, coeff, &Limits::default())
}

pub fn check_five_term_with(
    ring: &LieRing,
    ideal: &LieIdeal,
    coeff: &FinAbGroup,
    limits: &Limits,
) -> Result<FiveTermReport> {
    FiveTerm::new(ring, ideal, coeff, limits)?.report()
}

/// A short exact sequence together with the functor `Hom` is applied in.
#[derive(Debug, Clone)]
pub enum HomSequence {
    /// `0 -> L1 -> L2 -> L3 -> 0` of Lie rings, mapped into `A`.
    Contravariant {
        alpha: LieHom,
        beta: LieHom,
        coeff: FinAbGroup,
    },
    /// `0 -> A1 -> A2 -> A3 -> 0` of abelian groups, receiving maps from `L`.
    Covariant {
        ring: LieRing,
        alpha: AbHom,
        beta: AbHom,
    },
}

/// Verdicts for `0 -> X -> Y -> Z` after applying `Hom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeftExactness {
    pub injective: bool,
    pub exact_middle: bool,
}

fn short_exact(alpha: &AbHom, beta: &AbHom) -> Result<()> {
    if alpha.codomain() != beta.domain() {
        return Err(Error::ParentMismatch);
    }
    if !alpha.is_injective() {
        return Err(Error::NotExact("first map is not injective".into()));
    }
    if !beta.is_surjective() {
        return Err(Error::NotExact("second map is not surjective".into()));
    }
    if alpha.image() != beta.kernel() {
        return Err(Error::NotExact(
            "image and kernel differ in the middle".into(),
        ));
    }
    Ok(())
}

fn induced(
    src: &LieHomGroup,
    dst: &LieHomGroup,
    f: impl Fn(&AbHom) -> Result<AbHom>,
) -> Result<AbHom> {
    let g = src.group();
    let mut images = Vec::with_capacity(g.rank());
    for i in 0..g.rank() {
        images.push(dst.from_hom(&f(&src.to_hom(&unit(g.rank(), i)))?)?);
    }
    AbHom::new(g.clone(), dst.group().clone(), images)
}

pub fn check_hom_left_exact(seq: &HomSequence) -> Result<LeftExactness> {
    let (first, second) = match seq {
        HomSequence::Contravariant { alpha, beta, coeff } => {
            if alpha.codomain() != beta.domain() {
                return Err(Error::ParentMismatch);
            }
            short_exact(alpha.map(), beta.map())?;
            let h1 = alpha.domain().hom_to_abelian(coeff);
            let h2 = alpha.codomain().hom_to_abelian(coeff);
            let h3 = beta.codomain().hom_to_abelian(coeff);
            let beta_star = induced(&h3, &h2, |chi| chi.compose(beta.map()))?;
            let alpha_star = induced(&h2, &h1, |chi| chi.compose(alpha.map()))?;
            (beta_star, alpha_star)
        }
        HomSequence::Covariant { ring, alpha, beta } => {
            short_exact(alpha, beta)?;
            let h1 = ring.hom_to_abelian(alpha.domain());
            let h2 = ring.hom_to_abelian(alpha.codomain());
            let h3 = ring.hom_to_abelian(beta.codomain());
            let alpha_star = induced(&h1, &h2, |chi| alpha.compose(chi))?;
            let beta_star = induced(&h2, &h3, |chi| beta.compose(chi))?;
            (alpha_star, beta_star)
        }
    };
    Ok(LeftExactness {
        injective: first.is_injective(),
        exact_middle: second.kernel() == first.image(),
    })
}
