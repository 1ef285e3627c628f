//! Exact graded commutative algebra over `Q`.
//!
//! Every ring here is a finite-dimensional graded algebra with an explicit
//! basis in each degree and a one-dimensional top degree. Four presentations
//! are supported: truncated polynomial rings `Q[H]/(H^{d+1})`, Grassmannian
//! cohomology in the Schubert basis, tensor products (Künneth basis), and the
//! extension `R[ξ]/(ξ² − c·ξ)` of a split `P¹`-bundle.

mod schubert;

pub use schubert::{partitions_in_box, pieri_multiply, Partition};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{precondition, Error, Result};
use schubert::SchubertTable;

pub type Rational = BigRational;

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    PolynomialQuotient,
    SchubertBasis,
    Product,
    BundleExtension,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
}

enum Layout {
    Powers,
    Schubert(SchubertTable),
    Product {
        left: Arc<Ring>,
        right: Arc<Ring>,
        /// per total degree: `(left degree, first index of the block)`
        blocks: Vec<Vec<(usize, usize)>>,
    },
    Bundle {
        base: Arc<Ring>,
        c1l: GradedClass,
    },
}

type Structure = Arc<[(usize, Rational)]>;

/// A ring presentation together with its basis and integration functional.
pub struct Ring {
    id: String,
    kind: RingKind,
    dimension: usize,
    fundamental_degree: Rational,
    generators: Vec<Generator>,
    relations: Vec<String>,
    basis_len: Vec<usize>,
    offsets: Vec<usize>,
    layout: Layout,
    products: RwLock<HashMap<(usize, usize), Structure>>,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("id", &self.id)
            .field("dimension", &self.dimension)
            .field("fundamental_degree", &self.fundamental_degree.to_string())
            .finish()
    }
}

fn offsets_of(basis_len: &[usize]) -> Vec<usize> {
    basis_len
        .iter()
        .scan(0, |acc, &n| {
            let start = *acc;
            *acc += n;
            Some(start)
        })
        .collect()
}

impl Ring {
    #[allow(clippy::too_many_arguments)]
    fn assemble(
        id: String,
        kind: RingKind,
        dimension: usize,
        fundamental_degree: Rational,
        generators: Vec<Generator>,
        relations: Vec<String>,
        basis_len: Vec<usize>,
        layout: Layout,
    ) -> Arc<Ring> {
        debug_assert_eq!(basis_len.len(), dimension + 1);
        debug_assert_eq!(basis_len[0], 1);
        debug_assert_eq!(basis_len[dimension], 1);
        let offsets = offsets_of(&basis_len);
        Arc::new(Ring {
            id,
            kind,
            dimension,
            fundamental_degree,
            generators,
            relations,
            basis_len,
            offsets,
            layout,
            products: RwLock::new(HashMap::new()),
        })
    }

    /// `Q[H]/(H^{dimension+1})` with `∫ H^dimension = fundamental_degree`.
    pub fn truncated_polynomial(dimension: usize, fundamental_degree: Rational) -> Result<Arc<Ring>> {
        if !fundamental_degree.is_positive() {
            return precondition("fundamental degree must be positive");
        }
        Ok(Self::assemble(
            format!("Q[H]/(H^{})|{}", dimension + 1, fundamental_degree),
            RingKind::PolynomialQuotient,
            dimension,
            fundamental_degree,
            vec![Generator { name: "H".into(), degree: 1 }],
            vec![format!("H^{} = 0", dimension + 1)],
            vec![1; dimension + 1],
            Layout::Powers,
        ))
    }

    /// Cohomology of `G(k, n)` in the Schubert basis of the `k × (n−k)` box.
    pub fn grassmannian(k: usize, n: usize) -> Result<Arc<Ring>> {
        if k == 0 || k >= n {
            return precondition(format!("G({k},{n}) needs 1 <= k <= n-1"));
        }
        let table = SchubertTable::new(k, n - k);
        let basis_len = table.by_degree.iter().map(Vec::len).collect();
        let generators = (1..=n - k)
            .map(|i| Generator { name: format!("σ({i})"), degree: i })
            .collect();
        Ok(Self::assemble(
            format!("G({k},{n})"),
            RingKind::SchubertBasis,
            k * (n - k),
            Rational::one(),
            generators,
            vec![format!("Pieri rule in the {}x{} box", k, n - k)],
            basis_len,
            Layout::Schubert(table),
        ))
    }

    /// Tensor product `A ⊗ B` with basis `{a ⊗ b}`.
    pub fn product(left: &Arc<Ring>, right: &Arc<Ring>) -> Arc<Ring> {
        let dimension = left.dimension + right.dimension;
        let mut basis_len = Vec::with_capacity(dimension + 1);
        let mut blocks = Vec::with_capacity(dimension + 1);
        for d in 0..=dimension {
            let mut start = 0;
            let mut row = Vec::new();
            for i in d.saturating_sub(right.dimension)..=d.min(left.dimension) {
                row.push((i, start));
                start += left.basis_len[i] * right.basis_len[d - i];
            }
            basis_len.push(start);
            blocks.push(row);
        }
        let generators = left
            .generators
            .iter()
            .map(|g| Generator { name: format!("{}⊗1", g.name), degree: g.degree })
            .chain(
                right
                    .generators
                    .iter()
                    .map(|g| Generator { name: format!("1⊗{}", g.name), degree: g.degree }),
            )
            .collect();
        let relations = left
            .relations
            .iter()
            .map(|r| format!("left: {r}"))
            .chain(right.relations.iter().map(|r| format!("right: {r}")))
            .collect();
        Self::assemble(
            format!("({})⊗({})", left.id, right.id),
            RingKind::Product,
            dimension,
            &left.fundamental_degree * &right.fundamental_degree,
            generators,
            relations,
            basis_len,
            Layout::Product { left: left.clone(), right: right.clone(), blocks },
        )
    }

    /// `R[ξ]/(ξ² − c·ξ)` where `c` is a degree-one class on the base `R`.
    /// Integration pushes forward along the fiber: `∫(a + b·ξ) = ∫_R b`.
    pub fn bundle_extension(c1l: &GradedClass) -> Result<Arc<Ring>> {
        if !c1l.is_homogeneous_of(1) {
            return Err(Error::Degree { expected: 1, found: c1l.degree_summary() });
        }
        let base = c1l.ring.clone();
        let dimension = base.dimension + 1;
        let basis_len = (0..=dimension)
            .map(|d| base.len_or_zero(d) + if d >= 1 { base.len_or_zero(d - 1) } else { 0 })
            .collect();
        let mut generators = base.generators.clone();
        generators.push(Generator { name: "ξ".into(), degree: 1 });
        let mut relations = base.relations.clone();
        relations.push(format!("ξ^2 = ({c1l})·ξ"));
        Ok(Self::assemble(
            format!("({})[ξ]/(ξ^2-({c1l})ξ)", base.id),
            RingKind::BundleExtension,
            dimension,
            base.fundamental_degree.clone(),
            generators,
            relations,
            basis_len,
            Layout::Bundle { base, c1l: c1l.clone() },
        ))
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// `∫` of the top-degree basis element.
    pub fn fundamental_degree(&self) -> &Rational {
        &self.fundamental_degree
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[String] {
        &self.relations
    }

    pub fn basis_len(&self, degree: usize) -> usize {
        self.len_or_zero(degree)
    }

    fn len_or_zero(&self, degree: usize) -> usize {
        self.basis_len.get(degree).copied().unwrap_or(0)
    }

    pub fn total_basis_len(&self) -> usize {
        self.basis_len.iter().sum()
    }

    /// Schubert box `(k, n−k)` when this is a Grassmannian ring.
    pub fn schubert_box(&self) -> Option<(usize, usize)> {
        match &self.layout {
            Layout::Schubert(t) => Some((t.rows, t.cols)),
            _ => None,
        }
    }

    /// Partitions indexing the degree-`d` basis of a Schubert ring.
    pub fn schubert_basis(&self, degree: usize) -> Option<&[Partition]> {
        match &self.layout {
            Layout::Schubert(t) => t.by_degree.get(degree).map(Vec::as_slice),
            _ => None,
        }
    }

    pub fn basis_label(&self, degree: usize, index: usize) -> String {
        match &self.layout {
            Layout::Powers => match degree {
                0 => "1".into(),
                1 => "H".into(),
                d => format!("H^{d}"),
            },
            Layout::Schubert(t) => {
                let p = &t.by_degree[degree][index];
                if p.parts().is_empty() {
                    "1".into()
                } else {
                    format!("σ{p}")
                }
            }
            Layout::Product { left, right, .. } => {
                let (i, a, j, b) = self.split_product(degree, index);
                let (la, lb) = (left.basis_label(i, a), right.basis_label(j, b));
                if la == "1" && lb == "1" {
                    "1".into()
                } else {
                    format!("{la}⊗{lb}")
                }
            }
            Layout::Bundle { base, .. } => {
                let (d, i, xi) = self.split_bundle(degree, index);
                let l = base.basis_label(d, i);
                match (xi, l.as_str()) {
                    (false, _) => l,
                    (true, "1") => "ξ".into(),
                    (true, _) => format!("{l}·ξ"),
                }
            }
        }
    }

    fn split_product(&self, degree: usize, index: usize) -> (usize, usize, usize, usize) {
        let Layout::Product { right, blocks, .. } = &self.layout else {
            unreachable!("split_product on a non-product ring")
        };
        let &(i, start) = blocks[degree]
            .iter()
            .rev()
            .find(|(_, start)| *start <= index)
            .expect("product index out of range");
        let j = degree - i;
        let width = right.basis_len[j];
        let local = index - start;
        (i, local / width, j, local % width)
    }

    fn product_index(&self, i: usize, a: usize, j: usize, b: usize) -> usize {
        let Layout::Product { right, blocks, .. } = &self.layout else {
            unreachable!("product_index on a non-product ring")
        };
        let &(_, start) = blocks[i + j]
            .iter()
            .find(|(li, _)| *li == i)
            .expect("product block missing");
        start + a * right.basis_len[j] + b
    }

    /// `(base degree, base index, carries ξ)`.
    fn split_bundle(&self, degree: usize, index: usize) -> (usize, usize, bool) {
        let Layout::Bundle { base, .. } = &self.layout else {
            unreachable!("split_bundle on a non-bundle ring")
        };
        let plain = base.len_or_zero(degree);
        if index < plain {
            (degree, index, false)
        } else {
            (degree - 1, index - plain, true)
        }
    }

    /// Structure constants of `e_a · e_b` in degree `a.0 + b.0`.
    fn mul_basis(&self, a: (usize, usize), b: (usize, usize)) -> Structure {
        let degree = a.0 + b.0;
        if degree > self.dimension {
            return Arc::from(Vec::new());
        }
        if matches!(self.layout, Layout::Powers) {
            return Arc::from(vec![(0, Rational::one())]);
        }
        let (ga, gb) = (self.offsets[a.0] + a.1, self.offsets[b.0] + b.1);
        let key = if ga <= gb { (ga, gb) } else { (gb, ga) };
        if let Some(hit) = self.products.read().expect("product cache poisoned").get(&key) {
            return hit.clone();
        }
        let computed: Structure = Arc::from(self.compute_mul_basis(a, b));
        self.products
            .write()
            .expect("product cache poisoned")
            .insert(key, computed.clone());
        computed
    }

    fn compute_mul_basis(&self, a: (usize, usize), b: (usize, usize)) -> Vec<(usize, Rational)> {
        let degree = a.0 + b.0;
        match &self.layout {
            Layout::Powers => vec![(0, Rational::one())],
            Layout::Schubert(t) => t
                .multiply(a, b)
                .into_iter()
                .map(|(i, c)| (i, rational(c)))
                .collect(),
            Layout::Product { left, right, .. } => {
                let (ai, aa, aj, ab) = self.split_product(a.0, a.1);
                let (bi, ba, bj, bb) = self.split_product(b.0, b.1);
                let l = left.mul_basis((ai, aa), (bi, ba));
                let r = right.mul_basis((aj, ab), (bj, bb));
                let mut out = Vec::with_capacity(l.len() * r.len());
                for (x, cx) in l.iter() {
                    for (y, cy) in r.iter() {
                        out.push((self.product_index(ai + bi, *x, aj + bj, *y), cx * cy));
                    }
                }
                out
            }
            Layout::Bundle { base, c1l } => {
                let (da, ia, xa) = self.split_bundle(a.0, a.1);
                let (db, ib, xb) = self.split_bundle(b.0, b.1);
                let prod = base.mul_basis((da, ia), (db, ib));
                match (xa, xb) {
                    (false, false) => prod.to_vec(),
                    (true, false) | (false, true) => {
                        let shift = base.len_or_zero(degree);
                        prod.iter().map(|(t, c)| (shift + t, c.clone())).collect()
                    }
                    (true, true) => {
                        // ξ·ξ = c₁(L)·ξ
                        let shift = base.len_or_zero(degree);
                        let mut acc = vec![Rational::zero(); base.len_or_zero(degree - 1)];
                        for (t, c) in prod.iter() {
                            for (u, cu) in c1l.parts[1].iter().enumerate() {
                                if cu.is_zero() {
                                    continue;
                                }
                                for (v, s) in base.mul_basis((degree - 2, *t), (1, u)).iter() {
                                    acc[*v] += c * cu * s;
                                }
                            }
                        }
                        acc.into_iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(v, c)| (shift + v, c))
                            .collect()
                    }
                }
            }
        }
    }

    /// Product of a degree-`p` component with a degree-`q` component.
    ///
    /// Accumulates over a common denominator so the inner loop is integer
    /// arithmetic.
    fn mul_components(&self, p: usize, x: &[Rational], q: usize, y: &[Rational]) -> Vec<Rational> {
        let degree = p + q;
        if degree > self.dimension {
            return Vec::new();
        }
        let nx: Vec<(usize, &Rational)> = x.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let ny: Vec<(usize, &Rational)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let len = self.basis_len[degree];
        if nx.is_empty() || ny.is_empty() {
            return vec![Rational::zero(); len];
        }
        let mut acc: Vec<Rational> = vec![Rational::zero(); len];
        if matches!(self.layout, Layout::Schubert(_)) {
            // integer structure constants: clear denominators once
            let dx = nx.iter().fold(BigInt::one(), |l, (_, c)| num::integer::lcm(l, c.denom().clone()));
            let dy = ny.iter().fold(BigInt::one(), |l, (_, c)| num::integer::lcm(l, c.denom().clone()));
            let ix: Vec<(usize, BigInt)> =
                nx.iter().map(|(i, c)| (*i, c.numer() * (&dx / c.denom()))).collect();
            let iy: Vec<(usize, BigInt)> =
                ny.iter().map(|(i, c)| (*i, c.numer() * (&dy / c.denom()))).collect();
            let mut int_acc = vec![BigInt::zero(); len];
            for (i, a) in &ix {
                for (j, b) in &iy {
                    let ab = a * b;
                    for (t, s) in self.mul_basis((p, *i), (q, *j)).iter() {
                        int_acc[*t] += &ab * s.numer();
                    }
                }
            }
            let denom = dx * dy;
            for (slot, v) in acc.iter_mut().zip(int_acc) {
                *slot = Rational::new(v, denom.clone());
            }
            return acc;
        }
        for (i, a) in &nx {
            for (j, b) in &ny {
                let ab = *a * *b;
                for (t, s) in self.mul_basis((p, *i), (q, *j)).iter() {
                    acc[*t] += &ab * s;
                }
            }
        }
        acc
    }
}

/// An element of a graded ring, stored as one dense coefficient vector per
/// degree `0..=dimension`.
#[derive(Clone)]
pub struct GradedClass {
    ring: Arc<Ring>,
    parts: Vec<Vec<Rational>>,
}

impl PartialEq for GradedClass {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id == other.ring.id && self.parts == other.parts
    }
}

impl Eq for GradedClass {}

impl fmt::Debug for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ring.id)
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, part) in self.parts.iter().enumerate() {
            for (i, c) in part.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let label = self.ring.basis_label(d, i);
                let negative = c.is_negative();
                let mag = c.abs();
                if first {
                    if negative {
                        write!(f, "-")?;
                    }
                } else {
                    write!(f, " {} ", if negative { "-" } else { "+" })?;
                }
                first = false;
                if label == "1" {
                    write!(f, "{mag}")?;
                } else if mag.is_one() {
                    write!(f, "{label}")?;
                } else {
                    write!(f, "{mag}·{label}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

pub(crate) fn check_same_ring(a: &Ring, b: &Ring) -> Result<()> {
    if a.id == b.id {
        Ok(())
    } else {
        Err(Error::RingMismatch { left: a.id.clone(), right: b.id.clone() })
    }
}

impl GradedClass {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        let parts = ring.basis_len.iter().map(|&n| vec![Rational::zero(); n]).collect();
        Self { ring: ring.clone(), parts }
    }

    pub fn scalar(ring: &Arc<Ring>, value: Rational) -> Self {
        let mut z = Self::zero(ring);
        z.parts[0][0] = value;
        z
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::scalar(ring, Rational::one())
    }

    pub fn basis(ring: &Arc<Ring>, degree: usize, index: usize) -> Result<Self> {
        if index >= ring.len_or_zero(degree) {
            return precondition(format!("no basis element {index} in degree {degree} of {}", ring.id));
        }
        let mut z = Self::zero(ring);
        z.parts[degree][index] = Rational::one();
        Ok(z)
    }

    /// Homogeneous class of the given degree from a coefficient vector.
    pub fn homogeneous(ring: &Arc<Ring>, degree: usize, coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.len() != ring.len_or_zero(degree) {
            return precondition(format!(
                "degree {degree} of {} has {} basis elements, got {} coefficients",
                ring.id,
                ring.len_or_zero(degree),
                coefficients.len()
            ));
        }
        let mut z = Self::zero(ring);
        z.parts[degree] = coefficients;
        Ok(z)
    }

    /// First generator of a truncated polynomial ring.
    pub fn hyperplane(ring: &Arc<Ring>) -> Result<Self> {
        if ring.kind != RingKind::PolynomialQuotient || ring.dimension == 0 {
            return precondition(format!("{} has no hyperplane generator", ring.id));
        }
        Self::basis(ring, 1, 0)
    }

    /// Schubert class `σ_λ`.
    pub fn schubert(ring: &Arc<Ring>, parts: &[usize]) -> Result<Self> {
        let Layout::Schubert(t) = &ring.layout else {
            return precondition(format!("{} is not a Schubert ring", ring.id));
        };
        let trimmed: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
        match t.locate(&trimmed) {
            Some((d, i)) => Self::basis(ring, d, i),
            None => Ok(Self::zero(ring)),
        }
    }

    /// The relative hyperplane class `ξ` of a bundle ring.
    pub fn xi(ring: &Arc<Ring>) -> Result<Self> {
        let Layout::Bundle { base, .. } = &ring.layout else {
            return precondition(format!("{} is not a bundle ring", ring.id));
        };
        Self::basis(ring, 1, base.len_or_zero(1))
    }

    /// Top-degree class with integral one.
    pub fn point(ring: &Arc<Ring>) -> Self {
        let mut z = Self::zero(ring);
        z.parts[ring.dimension][0] = ring.fundamental_degree.recip();
        z
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn ring_id(&self) -> &str {
        &self.ring.id
    }

    pub fn component(&self, degree: usize) -> &[Rational] {
        self.parts.get(degree).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The degree-`d` piece as a class (zero above the dimension).
    pub fn part(&self, degree: usize) -> Self {
        let mut z = Self::zero(&self.ring);
        if degree <= self.ring.dimension {
            z.parts[degree] = self.parts[degree].clone();
        }
        z
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().flatten().all(Zero::is_zero)
    }

    fn degree_is_zero(&self, d: usize) -> bool {
        self.parts[d].iter().all(Zero::is_zero)
    }

    pub fn is_homogeneous_of(&self, degree: usize) -> bool {
        (0..=self.ring.dimension).all(|d| d == degree || self.degree_is_zero(d))
            && (degree <= self.ring.dimension || self.is_zero())
    }

    /// Highest degree with a nonzero component.
    pub fn top_degree(&self) -> Option<usize> {
        (0..=self.ring.dimension).rev().find(|&d| !self.degree_is_zero(d))
    }

    fn degree_summary(&self) -> String {
        let degrees: Vec<String> = (0..=self.ring.dimension)
            .filter(|&d| !self.degree_is_zero(d))
            .map(|d| d.to_string())
            .collect();
        if degrees.is_empty() {
            "the zero class".into()
        } else {
            format!("components in degrees {}", degrees.join(","))
        }
    }

    pub(crate) fn expect_degree(&self, degree: usize) -> Result<()> {
        if self.is_homogeneous_of(degree) {
            Ok(())
        } else {
            Err(Error::Degree { expected: degree, found: self.degree_summary() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (a, b) in out.parts.iter_mut().zip(&other.parts) {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let parts = self
            .parts
            .iter()
            .map(|p| p.iter().map(|c| c * factor).collect())
            .collect();
        Self { ring: self.ring.clone(), parts }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same_ring(&self.ring, &other.ring)?;
        let dim = self.ring.dimension;
        let mut out = Self::zero(&self.ring);
        for p in 0..=dim {
            if self.degree_is_zero(p) {
                continue;
            }
            for q in 0..=dim - p {
                if other.degree_is_zero(q) {
                    continue;
                }
                let prod = self.ring.mul_components(p, &self.parts[p], q, &other.parts[q]);
                for (slot, v) in out.parts[p + q].iter_mut().zip(prod) {
                    *slot += v;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exponent: u32) -> Result<Self> {
        let mut out = Self::one(&self.ring);
        for _ in 0..exponent {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Truncated exponential `Σ aᵏ/k!`; requires a vanishing degree-0 part.
    pub fn exp(&self) -> Result<Self> {
        if !self.degree_is_zero(0) {
            return precondition("exp needs a class with zero degree-0 part");
        }
        // d·e_d = Σ_{i=1}^{d} i·a_i·e_{d−i}
        let dim = self.ring.dimension;
        let mut out = Self::one(&self.ring);
        for d in 1..=dim {
            let mut acc = vec![Rational::zero(); self.ring.basis_len[d]];
            for i in 1..=d {
                if self.degree_is_zero(i) || out.degree_is_zero(d - i) {
                    continue;
                }
                let weight = rational(i as i64);
                let prod = self.ring.mul_components(i, &self.parts[i], d - i, &out.parts[d - i]);
                for (slot, v) in acc.iter_mut().zip(prod) {
                    *slot += v * &weight;
                }
            }
            let inv = ratio(1, d as i64);
            out.parts[d] = acc.into_iter().map(|v| v * &inv).collect();
        }
        Ok(out)
    }

    /// Top-degree coefficient times the fundamental degree.
    pub fn integrate(&self) -> Rational {
        &self.parts[self.ring.dimension][0] * &self.ring.fundamental_degree
    }

    /// `a ↦ a ⊗ 1` into a product ring whose left factor is `self`'s ring.
    pub fn embed_left(&self, product: &Arc<Ring>) -> Result<Self> {
        let Layout::Product { left, .. } = &product.layout else {
            return precondition(format!("{} is not a product ring", product.id));
        };
        check_same_ring(left, &self.ring)?;
        let mut out = Self::zero(product);
        for (d, part) in self.parts.iter().enumerate() {
            for (i, c) in part.iter().enumerate() {
                out.parts[d][product.product_index(d, i, 0, 0)] = c.clone();
            }
        }
        Ok(out)
    }

    /// `b ↦ 1 ⊗ b` into a product ring whose right factor is `self`'s ring.
    pub fn embed_right(&self, product: &Arc<Ring>) -> Result<Self> {
        let Layout::Product { right, .. } = &product.layout else {
            return precondition(format!("{} is not a product ring", product.id));
        };
        check_same_ring(right, &self.ring)?;
        let mut out = Self::zero(product);
        for (d, part) in self.parts.iter().enumerate() {
            for (i, c) in part.iter().enumerate() {
                out.parts[d][product.product_index(0, 0, d, i)] = c.clone();
            }
        }
        Ok(out)
    }

    /// `a ⊗ b` in a product ring.
    pub fn tensor(&self, other: &Self, product: &Arc<Ring>) -> Result<Self> {
        self.embed_left(product)?.mul(&other.embed_right(product)?)
    }

    /// `π*` from the base of a bundle ring.
    pub fn pullback_to_bundle(&self, bundle: &Arc<Ring>) -> Result<Self> {
        let Layout::Bundle { base, .. } = &bundle.layout else {
            return precondition(format!("{} is not a bundle ring", bundle.id));
        };
        check_same_ring(base, &self.ring)?;
        let mut out = Self::zero(bundle);
        for (d, part) in self.parts.iter().enumerate() {
            out.parts[d][..part.len()].clone_from_slice(part);
        }
        Ok(out)
    }
}
