//! Catalog constructors: each [`Space`] bundles a Chow ring, the tangent
//! bundle as a [`FormalBundle`], and finite generator lists for effective
//! curves and surfaces used by the positivity tests.

use std::fmt::Write as _;
use std::sync::Arc;

use num::{Signed, Zero};

use crate::chern::{bundle_quotient, tensor, whitney_sum, FormalBundle};
use crate::error::{precondition, Error, Result};
use crate::ring::{rational, GradedClass, Rational, Ring};

/// A labelled cone generator, stored as the class it pairs against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeGenerator {
    pub label: String,
    pub class: GradedClass,
}

/// Smooth complete intersection of type `(d_1, …, d_r)` in `P(w_0, …, w_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompleteIntersectionSpec {
    weights: Vec<u64>,
    degrees: Vec<u64>,
}

impl CompleteIntersectionSpec {
    pub fn new(weights: Vec<u64>, degrees: Vec<u64>) -> Result<Self> {
        if weights.len() < 2 {
            return precondition("a positive-dimensional ambient space needs at least two weights");
        }
        if weights.iter().chain(&degrees).any(|&x| x == 0) {
            return precondition("weights and degrees must be positive");
        }
        if degrees.len() >= weights.len() - 1 {
            return precondition(format!(
                "{} equations in a {}-dimensional space leave no positive-dimensional variety",
                degrees.len(),
                weights.len() - 1
            ));
        }
        Ok(Self { weights, degrees })
    }

    /// Complete intersection in ordinary `P^n`.
    pub fn unweighted(n: usize, degrees: Vec<u64>) -> Result<Self> {
        Self::new(vec![1; n + 1], degrees)
    }

    pub fn ambient_dimension(&self) -> usize {
        self.weights.len() - 1
    }

    pub fn dimension(&self) -> usize {
        self.ambient_dimension() - self.degrees.len()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.iter().any(|&w| w != 1)
    }

    /// Canonical text form, e.g. `ci n=5 d=3`.
    pub fn label(&self) -> String {
        let mut s = format!("ci n={}", self.ambient_dimension());
        if self.is_weighted() {
            let _ = write!(s, " w={}", join(&self.weights));
        }
        if !self.degrees.is_empty() {
            let _ = write!(s, " d={}", join(&self.degrees));
        }
        s
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

/// `Grass(k, n)`, normalized so that `n ≥ 2k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannianSpec {
    k: usize,
    n: usize,
}

impl GrassmannianSpec {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if n < 2 || k < 1 || k > n - 1 {
            return precondition(format!("Grass({k},{n}) needs n >= 2 and 1 <= k <= n-1"));
        }
        let k = k.min(n - k);
        Ok(Self { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> String {
        format!("grass k={} n={}", self.k, self.n)
    }
}

/// Base space and `c_1(L)` for `P(O ⊕ L^∨)`.
#[derive(Clone, Debug)]
pub struct BundleSpec {
    pub base: Space,
    pub c1l: GradedClass,
}

/// How a space was built; the oracles dispatch on this.
#[derive(Clone, Debug)]
pub enum Construction {
    CompleteIntersection(CompleteIntersectionSpec),
    Grassmannian(GrassmannianSpec),
    Product(Arc<Space>, Arc<Space>),
    P1Bundle { base: Arc<Space>, c1l: GradedClass },
}

#[derive(Clone, Debug)]
pub struct Space {
    label: String,
    dimension: usize,
    ring: Arc<Ring>,
    tangent: FormalBundle,
    curve_cone: Vec<ConeGenerator>,
    surface_cone: Vec<ConeGenerator>,
    picard_generators: Vec<GradedClass>,
    construction: Construction,
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label
            && self.dimension == other.dimension
            && self.ring.id() == other.ring.id()
            && self.tangent == other.tangent
            && self.curve_cone == other.curve_cone
            && self.surface_cone == other.surface_cone
            && self.picard_generators == other.picard_generators
    }
}

impl Space {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn tangent(&self) -> &FormalBundle {
        &self.tangent
    }

    pub fn curve_cone(&self) -> &[ConeGenerator] {
        &self.curve_cone
    }

    pub fn surface_cone(&self) -> &[ConeGenerator] {
        &self.surface_cone
    }

    pub fn picard_generators(&self) -> &[GradedClass] {
        &self.picard_generators
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    /// `ch_2(T)`.
    pub fn ch2(&self) -> GradedClass {
        self.tangent.chern_character(2).piece(2)
    }

    /// Multi-line text description: label, ring, characteristic classes and
    /// cone generators.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "label: {}", self.label);
        let _ = writeln!(s, "dimension: {}", self.dimension);
        let _ = writeln!(s, "ring: {}", self.ring.id());
        let _ = writeln!(s, "c1(T): {}", self.tangent.c1());
        let _ = writeln!(s, "ch2(T): {}", self.ch2());
        for g in &self.curve_cone {
            let _ = writeln!(s, "curve {}: {}", g.label, g.class);
        }
        for g in &self.surface_cone {
            let _ = writeln!(s, "surface {}: {}", g.label, g.class);
        }
        s
    }
}

/// `⊕ O(a_i H) ⊖ O ⊖ ⊕ O(b_j H)`, the Euler sequence plus adjunction.
fn euler_tangent(ring: &Arc<Ring>, weights: &[u64], degrees: &[u64]) -> Result<FormalBundle> {
    let h = GradedClass::hyperplane(ring)?;
    let lines = |xs: &[u64]| -> Result<FormalBundle> {
        xs.iter().try_fold(FormalBundle::trivial(ring, 0), |acc, &x| {
            whitney_sum(&acc, &FormalBundle::line(&h.scale(&rational(x as i64)))?)
        })
    };
    let ambient = bundle_quotient(&lines(weights)?, &FormalBundle::trivial(ring, 1))?;
    bundle_quotient(&ambient, &lines(degrees)?)
}

fn power_generator(ring: &Arc<Ring>, exponent: usize) -> ConeGenerator {
    let class = GradedClass::basis(ring, exponent, 0).expect("power within dimension");
    let label = ring.basis_label(exponent, 0);
    ConeGenerator { label, class }
}

fn hypersurface_family_space(spec: CompleteIntersectionSpec) -> Result<Space> {
    let m = spec.dimension();
    let num: u64 = spec.degrees.iter().product();
    let den: u64 = spec.weights.iter().product();
    let fundamental = Rational::new(num.into(), den.into());
    let ring = Ring::truncated_polynomial(m, fundamental)?;
    let tangent = euler_tangent(&ring, &spec.weights, &spec.degrees)?;
    let curve_cone = vec![power_generator(&ring, m - 1)];
    let surface_cone = if m >= 2 { vec![power_generator(&ring, m - 2)] } else { Vec::new() };
    Ok(Space {
        label: spec.label(),
        dimension: m,
        picard_generators: vec![GradedClass::hyperplane(&ring)?],
        ring,
        tangent,
        curve_cone,
        surface_cone,
        construction: Construction::CompleteIntersection(spec),
    })
}

/// `P^n` with `∫H^n = 1` and tangent from the Euler sequence.
pub fn make_projective(n: usize) -> Result<Space> {
    if n < 1 {
        return precondition("projective space needs n >= 1");
    }
    make_weighted_projective(&vec![1; n + 1])
}

/// `P(w_0, …, w_n)` with rational Chow ring `Q[H]/(H^{n+1})`, `∫H^n = 1/Πw`.
pub fn make_weighted_projective(weights: &[u64]) -> Result<Space> {
    if weights.is_empty() {
        return precondition("empty weight list");
    }
    hypersurface_family_space(CompleteIntersectionSpec::new(weights.to_vec(), Vec::new())?)
}

/// Complete intersection via adjunction; smoothness is the caller's claim.
pub fn make_complete_intersection(spec: &CompleteIntersectionSpec) -> Result<Space> {
    if spec.degrees.is_empty() {
        return make_weighted_projective(&spec.weights);
    }
    hypersurface_family_space(spec.clone())
}

/// `G(k, n)` in the Schubert basis with `T = S^∨ ⊗ Q`.
pub fn make_grassmannian(spec: &GrassmannianSpec) -> Result<Space> {
    let (k, n) = (spec.k, spec.n);
    let ring = Ring::grassmannian(k, n)?;
    let column = |i: usize| vec![1; i];
    let dual_sub_classes: Vec<GradedClass> = (1..=k)
        .map(|i| GradedClass::schubert(&ring, &column(i)))
        .collect::<Result<_>>()?;
    let quotient_classes: Vec<GradedClass> = (1..=n - k)
        .map(|i| GradedClass::schubert(&ring, &[i]))
        .collect::<Result<_>>()?;
    let dual_sub = FormalBundle::new(k, &dual_sub_classes)?;
    let quotient = FormalBundle::new(n - k, &quotient_classes)?;
    let tangent = tensor(&dual_sub, &quotient)?;

    let dual_generator = |parts: &[usize]| -> Result<ConeGenerator> {
        let p = crate::ring::Partition::new(parts, k, n - k)?;
        let class = GradedClass::schubert(&ring, p.complement().parts())?;
        Ok(ConeGenerator { label: format!("σ{p}^c"), class })
    };
    let curve_cone = vec![dual_generator(&[1])?];
    let mut surface_cone = Vec::new();
    if n - k >= 2 {
        surface_cone.push(dual_generator(&[2])?);
    }
    if k >= 2 {
        surface_cone.push(dual_generator(&[1, 1])?);
    }
    Ok(Space {
        label: spec.label(),
        dimension: k * (n - k),
        picard_generators: vec![GradedClass::schubert(&ring, &[1])?],
        ring,
        tangent,
        curve_cone,
        surface_cone,
        construction: Construction::Grassmannian(*spec),
    })
}

fn embed_bundle(e: &FormalBundle, f: impl Fn(&GradedClass) -> Result<GradedClass>) -> Result<FormalBundle> {
    FormalBundle::from_total(e.rank(), f(e.total_chern())?)
}

/// `A × B` with Künneth ring and `T = pr_A^*T_A ⊕ pr_B^*T_B`.
pub fn make_product(a: &Space, b: &Space) -> Result<Space> {
    let ring = Ring::product(&a.ring, &b.ring);
    let left = |c: &GradedClass| c.embed_left(&ring);
    let right = |c: &GradedClass| c.embed_right(&ring);
    let tangent = whitney_sum(&embed_bundle(&a.tangent, left)?, &embed_bundle(&b.tangent, right)?)?;
    let pt_a = GradedClass::point(&a.ring);
    let pt_b = GradedClass::point(&b.ring);

    let mut curve_cone = Vec::new();
    for g in &a.curve_cone {
        curve_cone.push(ConeGenerator {
            label: format!("[{}]×pt", g.label),
            class: g.class.tensor(&pt_b, &ring)?,
        });
    }
    for g in &b.curve_cone {
        curve_cone.push(ConeGenerator {
            label: format!("pt×[{}]", g.label),
            class: pt_a.tensor(&g.class, &ring)?,
        });
    }
    let mut surface_cone = Vec::new();
    for g in &a.surface_cone {
        surface_cone.push(ConeGenerator {
            label: format!("[{}]×pt", g.label),
            class: g.class.tensor(&pt_b, &ring)?,
        });
    }
    for g in &b.surface_cone {
        surface_cone.push(ConeGenerator {
            label: format!("pt×[{}]", g.label),
            class: pt_a.tensor(&g.class, &ring)?,
        });
    }
    for ga in &a.curve_cone {
        for gb in &b.curve_cone {
            surface_cone.push(ConeGenerator {
                label: format!("[{}]×[{}]", ga.label, gb.label),
                class: ga.class.tensor(&gb.class, &ring)?,
            });
        }
    }
    let picard_generators = a
        .picard_generators
        .iter()
        .map(left)
        .chain(b.picard_generators.iter().map(right))
        .collect::<Result<_>>()?;
    Ok(Space {
        label: format!("product ({}) ({})", a.label, b.label),
        dimension: a.dimension + b.dimension,
        ring,
        tangent,
        curve_cone,
        surface_cone,
        picard_generators,
        construction: Construction::Product(Arc::new(a.clone()), Arc::new(b.clone())),
    })
}

/// Integer `m` with `c = m·g` for the first Picard generator `g`, if any.
pub(crate) fn picard_multiple(space: &Space, class: &GradedClass) -> Option<i64> {
    let g = space.picard_generators.first()?;
    let (gc, cc) = (g.component(1), class.component(1));
    let pivot = gc.iter().position(|c| !c.is_zero())?;
    let m = &cc[pivot] / &gc[pivot];
    if !m.is_integer() || g.scale(&m) != *class {
        return None;
    }
    i64::try_from(m.to_integer()).ok()
}

/// `Y = P(O_X ⊕ L^∨)` with `ξ² = c₁(L)·ξ` and `c₁(T_{Y/X}) = 2ξ − c₁(L)`.
pub fn make_p1_bundle(spec: &BundleSpec) -> Result<Space> {
    let base = &spec.base;
    let c1l = &spec.c1l;
    if c1l.ring_id() != base.ring.id() {
        return Err(Error::RingMismatch { left: base.ring.id().into(), right: c1l.ring_id().into() });
    }
    c1l.expect_degree(1)?;
    for g in &base.curve_cone {
        let pairing = c1l.mul(&g.class)?.integrate();
        if pairing.is_negative() {
            return precondition(format!(
                "L is not nef: c1(L)·[{}] = {pairing} on {}",
                g.label, base.label
            ));
        }
    }
    let ring = Ring::bundle_extension(c1l)?;
    let xi = GradedClass::xi(&ring)?;
    let pull = |c: &GradedClass| c.pullback_to_bundle(&ring);
    let pulled_l = pull(c1l)?;
    let relative = FormalBundle::line(&xi.scale(&rational(2)).sub(&pulled_l)?)?;
    let tangent = whitney_sum(&embed_bundle(&base.tangent, pull)?, &relative)?;
    // section from the O summand has class ξ − π*c₁(L); the L^∨ summand gives ξ
    let zero_section = xi.sub(&pulled_l)?;
    let infinity_section = xi.clone();

    let mut curve_cone = vec![ConeGenerator {
        label: "fiber".into(),
        class: pull(&GradedClass::point(&base.ring))?,
    }];
    let mut surface_cone = Vec::new();
    for g in &base.curve_cone {
        let lifted = pull(&g.class)?;
        curve_cone.push(ConeGenerator { label: format!("s0[{}]", g.label), class: lifted.mul(&zero_section)? });
        curve_cone.push(ConeGenerator { label: format!("s∞[{}]", g.label), class: lifted.mul(&infinity_section)? });
        surface_cone.push(ConeGenerator { label: format!("π*[{}]", g.label), class: lifted });
    }
    for g in &base.surface_cone {
        let lifted = pull(&g.class)?;
        surface_cone.push(ConeGenerator { label: format!("s0[{}]", g.label), class: lifted.mul(&zero_section)? });
        surface_cone.push(ConeGenerator { label: format!("s∞[{}]", g.label), class: lifted.mul(&infinity_section)? });
    }
    let mut picard_generators = base.picard_generators.iter().map(pull).collect::<Result<Vec<_>>>()?;
    picard_generators.push(xi);

    let c1l_text = match picard_multiple(base, c1l) {
        Some(m) => m.to_string(),
        None => format!("[{c1l}]"),
    };
    Ok(Space {
        label: format!("bundle base=({}) c1L={c1l_text}", base.label),
        dimension: base.dimension + 1,
        ring,
        tangent,
        curve_cone,
        surface_cone,
        picard_generators,
        construction: Construction::P1Bundle { base: Arc::new(base.clone()), c1l: c1l.clone() },
    })
}

/// `P(O ⊕ L^∨)` with `c₁(L) = multiple · (first Picard generator of base)`.
pub fn make_p1_bundle_multiple(base: &Space, multiple: i64) -> Result<Space> {
    let g = base
        .picard_generators
        .first()
        .ok_or_else(|| Error::Precondition(format!("{} has no Picard generator", base.label)))?;
    make_p1_bundle(&BundleSpec { base: base.clone(), c1l: g.scale(&rational(multiple)) })
}

/// A fixed sample of catalog spaces spanning every constructor.
pub fn catalog() -> Result<Vec<Space>> {
    let ci = |n: usize, d: Vec<u64>| make_complete_intersection(&CompleteIntersectionSpec::unweighted(n, d)?);
    let grass = |k: usize, n: usize| make_grassmannian(&GrassmannianSpec::new(k, n)?);
    let p1 = make_projective(1)?;
    let p2 = make_projective(2)?;
    let cubic4 = ci(5, vec![3])?;
    let g24 = grass(2, 4)?;
    Ok(vec![
        p1.clone(),
        p2.clone(),
        make_projective(3)?,
        make_projective(5)?,
        make_weighted_projective(&[1, 1, 2])?,
        make_weighted_projective(&[1, 1, 1, 2])?,
        ci(3, vec![2])?,
        ci(4, vec![2])?,
        cubic4.clone(),
        ci(6, vec![2, 2])?,
        g24.clone(),
        grass(2, 5)?,
        grass(3, 6)?,
        make_product(&p1, &p1)?,
        make_product(&p2, &g24)?,
        make_p1_bundle_multiple(&p2, 1)?,
        make_p1_bundle_multiple(&cubic4, 2)?,
    ])
}

impl Space {
    /// `∫ c·g` for each generator of the chosen cone.
    pub fn pairings(&self, class: &GradedClass, cone: &[ConeGenerator]) -> Result<Vec<(String, Rational)>> {
        cone.iter()
            .map(|g| Ok((g.label.clone(), class.mul(&g.class)?.integrate())))
            .collect()
    }

    pub(crate) fn is_picard_rank_one(&self) -> bool {
        self.picard_generators.len() == 1 && self.ring.basis_len(1) == 1
    }
}
