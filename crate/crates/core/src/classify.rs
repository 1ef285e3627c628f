//! Positivity verdicts, closed-form criteria and the deformation-count
//! formulas.
//!
//! Nefness and ampleness are decided numerically against the cone
//! generators a [`Space`] carries: ample means every curve pairing is
//! strictly positive, nef means every surface pairing is nonnegative. Each
//! record keeps the pairings so a verdict can be audited, and any pairing
//! that is exactly zero raises the boundary flag.

use num::{BigInt, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{precondition, Result};
use crate::ring::{rational, GradedClass, Rational};
use crate::spaces::{CompleteIntersectionSpec, Construction, GrassmannianSpec, Space};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairingKind {
    /// `c₁(T)` against a curve generator.
    C1Curve,
    /// `ch₂(T)` against a surface generator.
    Ch2Surface,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: PairingKind,
    pub generator: String,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub label: String,
    pub dimension: usize,
    pub is_fano: bool,
    pub is_two_fano: bool,
    pub is_ch2_strictly_positive: bool,
    pub fano_index: Option<Rational>,
    pub witness_pairings: Vec<Witness>,
    pub boundary_flag: bool,
}

impl ClassificationRecord {
    pub fn surface_pairings(&self) -> impl Iterator<Item = &Witness> {
        self.witness_pairings.iter().filter(|w| w.kind == PairingKind::Ch2Surface)
    }

    pub fn curve_pairings(&self) -> impl Iterator<Item = &Witness> {
        self.witness_pairings.iter().filter(|w| w.kind == PairingKind::C1Curve)
    }
}

/// Fano, 2-Fano and strict `ch₂`-positivity of `space`.
///
/// 2-Fano requires Fano; a space without surface generators (a curve) has
/// nef `ch₂` vacuously.
pub fn classify(space: &Space) -> Result<ClassificationRecord> {
    let tangent = space.tangent();
    let c1 = tangent.c1();
    let ch2 = tangent.chern_character(2).piece(2);
    let mut witness_pairings = Vec::new();
    for (generator, value) in space.pairings(&c1, space.curve_cone())? {
        witness_pairings.push(Witness { kind: PairingKind::C1Curve, generator, value });
    }
    for (generator, value) in space.pairings(&ch2, space.surface_cone())? {
        witness_pairings.push(Witness { kind: PairingKind::Ch2Surface, generator, value });
    }
    let curve = || witness_pairings.iter().filter(|w| w.kind == PairingKind::C1Curve);
    let surface = || witness_pairings.iter().filter(|w| w.kind == PairingKind::Ch2Surface);
    let is_fano = curve().all(|w| w.value.is_positive());
    let nef = surface().all(|w| !w.value.is_negative());
    let strict = surface().all(|w| w.value.is_positive());
    let boundary_flag = witness_pairings.iter().any(|w| w.value.is_zero());
    Ok(ClassificationRecord {
        label: space.label().to_string(),
        dimension: space.dimension(),
        is_fano,
        is_two_fano: is_fano && nef,
        is_ch2_strictly_positive: is_fano && strict,
        fano_index: fano_index(space)?,
        witness_pairings,
        boundary_flag,
    })
}

/// Computable lower bound for the pseudo-index.
///
/// For Picard rank one this is `r` in `c₁(T) = r·g` with `g` the ample
/// generator. Otherwise it is the smallest anticanonical degree among the
/// curve generators. `None` when the value is not positive.
pub fn fano_index(space: &Space) -> Result<Option<Rational>> {
    let c1 = space.tangent().c1();
    let value = if space.is_picard_rank_one() {
        let g = &space.picard_generators()[0];
        &c1.component(1)[0] / &g.component(1)[0]
    } else {
        match space
            .pairings(&c1, space.curve_cone())?
            .into_iter()
            .map(|(_, v)| v)
            .min()
        {
            Some(v) => v,
            None => return Ok(None),
        }
    };
    Ok(value.is_positive().then_some(value))
}

/// Closed-form Fano criterion for complete intersections: `Σ d_j ≤ n`.
pub fn oracle_ci_fano(spec: &CompleteIntersectionSpec) -> bool {
    spec.degrees().iter().sum::<u64>() <= spec.ambient_dimension() as u64
}

/// Closed-form 2-Fano criterion for complete intersections: `Σ d_j² ≤ n`.
pub fn oracle_ci_two_fano(spec: &CompleteIntersectionSpec) -> bool {
    spec.degrees().iter().map(|d| d * d).sum::<u64>() <= spec.ambient_dimension() as u64
}

/// Closed-form 2-Fano criterion for `G(k, n)`, `n ≥ 2k`:
/// `k = 1`, `n = 2k` or `n = 2k + 1`.
pub fn oracle_grassmannian_two_fano(spec: &GrassmannianSpec) -> bool {
    let (k, n) = (spec.k(), spec.n());
    k == 1 || n == 2 * k || n == 2 * k + 1
}

/// `P(O ⊕ L^∨)` is Fano iff `c₁(T_X) − c₁(L)` is ample on the base.
pub fn oracle_bundle_fano(base: &Space, c1l: &GradedClass) -> Result<bool> {
    let class = base.tangent().c1().sub(c1l)?;
    Ok(base
        .pairings(&class, base.curve_cone())?
        .iter()
        .all(|(_, v)| v.is_positive()))
}

/// A Fano `P(O ⊕ L^∨)` is 2-Fano iff `ch₂(T_X) + c₁(L)²/2` is nef on the base.
pub fn oracle_bundle_two_fano(base: &Space, c1l: &GradedClass) -> Result<bool> {
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let class = base.ch2().add(&c1l.mul(c1l)?.scale(&half))?;
    Ok(base
        .pairings(&class, base.surface_cone())?
        .iter()
        .all(|(_, v)| !v.is_negative()))
}

/// The closed-form 2-Fano verdict for `space`, where one is known.
///
/// Products carry a verdict only when both factors are 2-Fano by their own
/// criteria.
pub fn oracle_two_fano(space: &Space) -> Result<Option<bool>> {
    Ok(match space.construction() {
        Construction::CompleteIntersection(spec) => Some(oracle_ci_two_fano(spec)),
        Construction::Grassmannian(spec) => Some(oracle_grassmannian_two_fano(spec)),
        Construction::Product(a, b) => match (oracle_two_fano(a)?, oracle_two_fano(b)?) {
            (Some(true), Some(true)) => Some(true),
            _ => None,
        },
        Construction::P1Bundle { base, c1l } => {
            let base_fano = classify(base)?.is_fano;
            Some(base_fano && oracle_bundle_fano(base, c1l)? && oracle_bundle_two_fano(base, c1l)?)
        }
    })
}

/// Inputs to the lower bound on `dim Hom(C, M; ζ|_B)` at a family of stable
/// maps `F: Σ → X` over a curve `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBoundInput {
    /// `deg(ch₂(T_X)|_{F(Σ)})`
    pub ch2_deg: Rational,
    /// `deg(c₁(T_X)²|_{F(Σ)})`
    pub c1sq_deg: Rational,
    /// anticanonical degree of the curve class, at least 1
    pub e: u64,
    pub dim_x: u64,
    pub genus: u64,
    /// number of fixed points `#B`
    pub marked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBound {
    pub ch2_term: Rational,
    pub c1sq_term: Rational,
    pub deformation_term: Rational,
    pub total: Rational,
}

/// `deg ch₂ + deg c₁² / 2e + (e + dim X − 3)(1 − g − #B)`, exactly.
pub fn hom_dimension_bound(input: &HomBoundInput) -> Result<HomBound> {
    if input.e < 1 {
        return precondition("the curve degree e must be at least 1");
    }
    let e = rational(input.e as i64);
    let ch2_term = input.ch2_deg.clone();
    let c1sq_term = &input.c1sq_deg / (e.clone() * rational(2));
    let weight = &e + rational(input.dim_x as i64) - rational(3);
    let genus_factor = rational(1) - rational(input.genus as i64) - rational(input.marked as i64);
    let deformation_term = weight * genus_factor;
    let total = &ch2_term + &c1sq_term + &deformation_term;
    Ok(HomBound { ch2_term, c1sq_term, deformation_term, total })
}

/// Anticanonical degree of the curve traced in moduli by a family sweeping
/// out `surface_class`: `∫ ch₂(T)·S + (1/2e) ∫ c₁(T)²·S`.
pub fn bend_and_break_degree(space: &Space, surface_class: &GradedClass, e: u64) -> Result<Rational> {
    if e < 1 {
        return precondition("the curve degree e must be at least 1");
    }
    if space.dimension() < 2 {
        return precondition(format!("{} has no surfaces", space.label()));
    }
    surface_class.expect_degree(space.dimension() - 2)?;
    let tangent = space.tangent();
    let c1 = tangent.c1();
    let ch2 = tangent.chern_character(2).piece(2);
    let ch2_part = ch2.mul(surface_class)?.integrate();
    let c1sq_part = c1.mul(&c1)?.mul(surface_class)?.integrate();
    Ok(ch2_part + c1sq_part / rational(2 * e as i64))
}
