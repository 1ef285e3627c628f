//! Formal vector bundles and their characteristic classes.
//!
//! A [`FormalBundle`] is a rank together with a total Chern class in some
//! ring. Nothing checks that the data is realized by an actual bundle; the
//! operations are the formal consequences of exact sequences and the
//! splitting principle.

use std::sync::Arc;

use num::{One, Zero};

use crate::error::{precondition, Error, Result};
use crate::ring::{check_same_ring, rational, ratio, GradedClass, Rational, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalBundle {
    rank: usize,
    total: GradedClass,
}

/// Graded pieces `ch_0, …, ch_top` of a Chern character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernCharacter {
    pieces: Vec<GradedClass>,
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(Rational::one(), |acc, i| acc * rational(i))
}

fn sign(i: usize) -> Rational {
    if i % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    (0..k).fold(Rational::one(), |acc, i| acc * ratio((n - i) as i64, (i + 1) as i64))
}

impl FormalBundle {
    /// Bundle with `chern[i-1] = c_i`; classes above the list are zero.
    pub fn new(rank: usize, chern: &[GradedClass]) -> Result<Self> {
        let ring = match chern.first() {
            Some(c) => c.ring().clone(),
            None => return precondition("FormalBundle::new needs at least one class; use trivial()"),
        };
        let mut total = GradedClass::one(&ring);
        for (i, c) in chern.iter().enumerate() {
            check_same_ring(&ring, c.ring())?;
            c.expect_degree(i + 1)?;
            total = total.add(c)?;
        }
        Self::from_total(rank, total)
    }

    /// Bundle from a total Chern class `1 + c_1 + c_2 + …`.
    pub fn from_total(rank: usize, total: GradedClass) -> Result<Self> {
        if total.component(0)[0] != Rational::one() {
            return Err(Error::InconsistentData("total Chern class must start with 1".into()));
        }
        if let Some(top) = total.top_degree() {
            if top > rank {
                return Err(Error::InconsistentData(format!(
                    "rank {rank} bundle with nonzero c_{top}"
                )));
            }
        }
        Ok(Self { rank, total })
    }

    pub fn trivial(ring: &Arc<Ring>, rank: usize) -> Self {
        Self { rank, total: GradedClass::one(ring) }
    }

    /// Line bundle with first Chern class `c1`.
    pub fn line(c1: &GradedClass) -> Result<Self> {
        c1.expect_degree(1)?;
        Ok(Self { rank: 1, total: GradedClass::one(c1.ring()).add(c1)? })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.total.ring()
    }

    pub fn total_chern(&self) -> &GradedClass {
        &self.total
    }

    /// `c_i`, homogeneous of degree `i` (zero beyond rank or dimension).
    pub fn chern_class(&self, i: usize) -> GradedClass {
        self.total.part(i)
    }

    /// `[c_1, …, c_min(rank, dim)]`.
    pub fn chern_classes(&self) -> Vec<GradedClass> {
        let top = self.rank.min(self.ring().dimension());
        (1..=top).map(|i| self.chern_class(i)).collect()
    }

    pub fn c1(&self) -> GradedClass {
        self.chern_class(1)
    }

    pub fn c2(&self) -> GradedClass {
        self.chern_class(2)
    }

    /// `c_i(E^∨) = (−1)^i c_i(E)`.
    pub fn dual(&self) -> Self {
        let mut total = GradedClass::zero(self.ring());
        for i in 0..=self.ring().dimension() {
            total = total
                .add(&self.chern_class(i).scale(&sign(i)))
                .expect("same ring");
        }
        Self { rank: self.rank, total }
    }

    /// Chern character through degree `top` via Newton's identities
    /// `p_k = Σ_{i<k} (−1)^{i−1} c_i p_{k−i} + (−1)^{k−1} k c_k`, `ch_k = p_k / k!`.
    pub fn chern_character(&self, top: usize) -> ChernCharacter {
        let ring = self.ring();
        let dim = ring.dimension();
        let mut power_sums = vec![GradedClass::scalar(ring, rational(self.rank as i64))];
        for k in 1..=top {
            if k > dim {
                power_sums.push(GradedClass::zero(ring));
                continue;
            }
            let mut p = self.chern_class(k).scale(&(sign(k - 1) * rational(k as i64)));
            for i in 1..k {
                let ci = self.chern_class(i);
                if ci.is_zero() {
                    continue;
                }
                let term = ci.mul(&power_sums[k - i]).expect("same ring").scale(&sign(i - 1));
                p = p.add(&term).expect("same ring");
            }
            power_sums.push(p);
        }
        let pieces = power_sums
            .into_iter()
            .enumerate()
            .map(|(k, p)| p.scale(&factorial(k).recip()))
            .collect();
        ChernCharacter { pieces }
    }

    /// Inverse of [`chern_character`](Self::chern_character): needs pieces
    /// through the ring dimension. Uses `k c_k = Σ_{i=1}^{k} (−1)^{i−1} p_i c_{k−i}`.
    pub fn from_chern_character(ch: &ChernCharacter) -> Result<Self> {
        let ring = ch.ring().clone();
        let dim = ring.dimension();
        if ch.top() < dim {
            return precondition(format!(
                "Chern character known through degree {} but the ring has dimension {dim}",
                ch.top()
            ));
        }
        let rank_q = &ch.pieces[0].component(0)[0];
        if !rank_q.is_integer() || rank_q < &Rational::zero() {
            return Err(Error::InconsistentData(format!("ch_0 = {rank_q} is not a rank")));
        }
        let rank = rank_q.to_integer().try_into().map_err(|_| {
            Error::InconsistentData(format!("rank {rank_q} out of range"))
        })?;
        let power_sums: Vec<GradedClass> = ch
            .pieces
            .iter()
            .enumerate()
            .map(|(k, piece)| piece.scale(&factorial(k)))
            .collect();
        let mut classes = vec![GradedClass::one(&ring)];
        for k in 1..=dim {
            let mut acc = GradedClass::zero(&ring);
            for i in 1..=k {
                if power_sums[i].is_zero() || classes[k - i].is_zero() {
                    continue;
                }
                let term = power_sums[i].mul(&classes[k - i])?.scale(&sign(i - 1));
                acc = acc.add(&term)?;
            }
            classes.push(acc.scale(&ratio(1, k as i64)));
        }
        let total = classes
            .iter()
            .try_fold(GradedClass::zero(&ring), |acc, c| acc.add(c))?;
        Self::from_total(rank, total)
    }
}

impl ChernCharacter {
    pub fn ring(&self) -> &Arc<Ring> {
        self.pieces[0].ring()
    }

    /// Highest degree carried.
    pub fn top(&self) -> usize {
        self.pieces.len() - 1
    }

    /// `ch_k`; zero when `k` exceeds what was computed or the dimension.
    pub fn piece(&self, k: usize) -> GradedClass {
        self.pieces
            .get(k)
            .cloned()
            .unwrap_or_else(|| GradedClass::zero(self.ring()))
    }

    pub fn pieces(&self) -> &[GradedClass] {
        &self.pieces
    }

    pub fn total(&self) -> GradedClass {
        self.pieces
            .iter()
            .fold(GradedClass::zero(self.ring()), |acc, p| acc.add(p).expect("same ring"))
    }

    /// Degreewise sum, truncated at the shorter of the two.
    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same_ring(self.ring(), other.ring())?;
        let pieces = self
            .pieces
            .iter()
            .zip(&other.pieces)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(Self { pieces })
    }

    /// Product `ch(E)·ch(F) = ch(E ⊗ F)`, truncated at the shorter top.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_same_ring(self.ring(), other.ring())?;
        let top = self.top().min(other.top());
        let mut pieces = Vec::with_capacity(top + 1);
        for k in 0..=top {
            let mut acc = GradedClass::zero(self.ring());
            for i in 0..=k {
                let (a, b) = (&self.pieces[i], &other.pieces[k - i]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b)?)?;
            }
            pieces.push(acc);
        }
        Ok(Self { pieces })
    }
}

/// `E ⊕ F`: ranks add and total Chern classes multiply.
pub fn whitney_sum(e: &FormalBundle, f: &FormalBundle) -> Result<FormalBundle> {
    let total = e.total.mul(&f.total)?;
    FormalBundle::from_total(e.rank + f.rank, total)
}

/// The formal `Q` in `0 → S → E → Q → 0`, with `c(Q) = c(E)/c(S)`.
///
/// Division runs degree by degree; any nonzero class above `rank(Q)` means
/// `c(S)` does not divide `c(E)` and is reported rather than truncated.
pub fn bundle_quotient(e: &FormalBundle, s: &FormalBundle) -> Result<FormalBundle> {
    check_same_ring(e.ring(), s.ring())?;
    if s.rank > e.rank {
        return precondition(format!("sub-bundle rank {} exceeds rank {}", s.rank, e.rank));
    }
    let ring = e.ring().clone();
    let rank = e.rank - s.rank;
    let mut q = vec![GradedClass::one(&ring)];
    for d in 1..=ring.dimension() {
        let mut qd = e.chern_class(d);
        for i in 1..=d {
            let si = s.chern_class(i);
            if si.is_zero() || q[d - i].is_zero() {
                continue;
            }
            qd = qd.sub(&si.mul(&q[d - i])?)?;
        }
        if d > rank && !qd.is_zero() {
            return Err(Error::InconsistentData(format!(
                "c(S) does not divide c(E): quotient of rank {rank} would have c_{d} = {qd}"
            )));
        }
        q.push(qd);
    }
    let total = q.iter().try_fold(GradedClass::zero(&ring), |acc, c| acc.add(c))?;
    FormalBundle::from_total(rank, total)
}

/// `E ⊗ L` for a line bundle with `c_1(L) = c1l`:
/// `c_k(E ⊗ L) = Σ_i C(r−i, k−i) c_i(E) c1l^{k−i}`.
pub fn tensor_line(e: &FormalBundle, c1l: &GradedClass) -> Result<FormalBundle> {
    check_same_ring(e.ring(), c1l.ring())?;
    c1l.expect_degree(1)?;
    let ring = e.ring().clone();
    let r = e.rank;
    let top = r.min(ring.dimension());
    let powers: Vec<GradedClass> = (0..=top)
        .scan(GradedClass::one(&ring), |acc, _| {
            let current = acc.clone();
            *acc = acc.mul(c1l).expect("same ring");
            Some(current)
        })
        .collect();
    let mut total = GradedClass::zero(&ring);
    for k in 0..=top {
        for i in 0..=k {
            let ci = e.chern_class(i);
            if ci.is_zero() {
                continue;
            }
            let coeff = binomial(r - i, k - i);
            total = total.add(&ci.mul(&powers[k - i])?.scale(&coeff))?;
        }
    }
    FormalBundle::from_total(r, total)
}

/// `E ⊗ F` through `ch(E)·ch(F)`, converted back to Chern classes.
pub fn tensor(e: &FormalBundle, f: &FormalBundle) -> Result<FormalBundle> {
    check_same_ring(e.ring(), f.ring())?;
    let dim = e.ring().dimension();
    let ch = e.chern_character(dim).mul(&f.chern_character(dim))?;
    FormalBundle::from_chern_character(&ch)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> (Arc<Ring>, GradedClass) {
        let r = Ring::truncated_polynomial(n, Rational::one()).unwrap();
        let h = GradedClass::hyperplane(&r).unwrap();
        (r, h)
    }

    #[test]
    fn line_bundle_character_is_exponential() {
        let (_, h) = p(4);
        let ch = FormalBundle::line(&h).unwrap().chern_character(4);
        assert_eq!(ch.total(), h.exp().unwrap());
    }

    #[test]
    fn trivial_bundle_character() {
        let (r, _) = p(3);
        let ch = FormalBundle::trivial(&r, 5).chern_character(3);
        assert_eq!(ch.piece(0), GradedClass::scalar(&r, rational(5)));
        assert!(ch.piece(1).is_zero() && ch.piece(2).is_zero() && ch.piece(3).is_zero());
    }

    #[test]
    fn rank_two_with_c2_only() {
        let (_, h) = p(3);
        let e = FormalBundle::new(2, &[GradedClass::zero(h.ring()), h.pow(2).unwrap()]).unwrap();
        assert_eq!(e.chern_character(2).piece(2), h.pow(2).unwrap().neg());
    }

    #[test]
    fn whitney_sum_of_lines() {
        let (_, h) = p(3);
        let a = h.clone();
        let b = h.scale(&rational(3));
        let e = whitney_sum(&FormalBundle::line(&a).unwrap(), &FormalBundle::line(&b).unwrap()).unwrap();
        assert_eq!(e.rank(), 2);
        assert_eq!(e.c1(), a.add(&b).unwrap());
        assert_eq!(e.c2(), a.mul(&b).unwrap());
    }

    #[test]
    fn whitney_with_trivial_only_changes_rank() {
        let (r, h) = p(3);
        let l = FormalBundle::line(&h).unwrap();
        let e = whitney_sum(&l, &FormalBundle::trivial(&r, 2)).unwrap();
        assert_eq!(e.rank(), 3);
        assert_eq!(e.total_chern(), l.total_chern());
    }

    #[test]
    fn euler_sequence_first_chern_class() {
        for n in 1..=6 {
            let (r, h) = p(n);
            let mut sum = FormalBundle::trivial(&r, 0);
            for _ in 0..=n {
                sum = whitney_sum(&sum, &FormalBundle::line(&h).unwrap()).unwrap();
            }
            assert_eq!(sum.c1(), h.scale(&rational(n as i64 + 1)));
            let t = bundle_quotient(&sum, &FormalBundle::trivial(&r, 1)).unwrap();
            assert_eq!(t.rank(), n);
            assert_eq!(t.c1(), h.scale(&rational(n as i64 + 1)));
        }
    }

    #[test]
    fn hypersurface_adjunction() {
        // computed in the fourfold's own ring Q[H]/(H^5)
        let (n, d) = (5usize, 3i64);
        let (r, h) = p(n - 1);
        let mut amb = FormalBundle::trivial(&r, 0);
        for _ in 0..=n {
            amb = whitney_sum(&amb, &FormalBundle::line(&h).unwrap()).unwrap();
        }
        let t = bundle_quotient(&amb, &FormalBundle::trivial(&r, 1)).unwrap();
        let x = bundle_quotient(&t, &FormalBundle::line(&h.scale(&rational(d))).unwrap()).unwrap();
        assert_eq!(x.c1(), h.scale(&rational(n as i64 + 1 - d)));
    }

    #[test]
    fn quotient_detects_non_divisibility() {
        let (r, h) = p(3);
        let e = FormalBundle::line(&h).unwrap();
        let s = FormalBundle::line(&h.scale(&rational(2))).unwrap();
        let err = bundle_quotient(&whitney_sum(&e, &FormalBundle::trivial(&r, 0)).unwrap(), &s);
        assert!(matches!(err, Err(Error::InconsistentData(_))));
        let big = FormalBundle::trivial(&r, 3);
        assert!(bundle_quotient(&e, &big).is_err());
    }

    #[test]
    fn quotient_by_trivial_is_identity() {
        let (r, h) = p(3);
        let e = FormalBundle::new(3, &[h.clone(), h.pow(2).unwrap().scale(&rational(4))]).unwrap();
        let q = bundle_quotient(&whitney_sum(&e, &FormalBundle::trivial(&r, 2)).unwrap(), &FormalBundle::trivial(&r, 2)).unwrap();
        assert_eq!(q, e);
    }

    #[test]
    fn twist_rank_two() {
        let (_, h) = p(4);
        let a = h.scale(&rational(2));
        let qc = h.pow(2).unwrap().scale(&rational(5));
        let b = h.scale(&rational(-3));
        let e = FormalBundle::new(2, &[a.clone(), qc.clone()]).unwrap();
        let t = tensor_line(&e, &b).unwrap();
        assert_eq!(t.c1(), a.add(&b.scale(&rational(2))).unwrap());
        let expected_c2 = qc.add(&a.mul(&b).unwrap()).unwrap().add(&b.pow(2).unwrap()).unwrap();
        assert_eq!(t.c2(), expected_c2);
        assert_eq!(tensor_line(&e, &GradedClass::zero(h.ring())).unwrap(), e);
        assert!(tensor_line(&e, &h.pow(2).unwrap()).is_err());
    }

    #[test]
    fn character_round_trip() {
        let (_, h) = p(5);
        let e = FormalBundle::new(3, &[h.scale(&rational(2)), h.pow(2).unwrap().scale(&ratio(-1, 3)), h.pow(3).unwrap()]).unwrap();
        let back = FormalBundle::from_chern_character(&e.chern_character(5)).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn tensor_of_lines_adds_first_chern_classes() {
        let (_, h) = p(3);
        let a = FormalBundle::line(&h).unwrap();
        let b = FormalBundle::line(&h.scale(&rational(2))).unwrap();
        assert_eq!(tensor(&a, &b).unwrap(), FormalBundle::line(&h.scale(&rational(3))).unwrap());
    }

    #[test]
    fn dual_flips_odd_classes() {
        let (_, h) = p(3);
        let e = FormalBundle::new(2, &[h.clone(), h.pow(2).unwrap()]).unwrap();
        let d = e.dual();
        assert_eq!(d.c1(), h.neg());
        assert_eq!(d.c2(), h.pow(2).unwrap());
        assert_eq!(d.dual(), e);
    }
}
