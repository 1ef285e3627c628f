use std::collections::BTreeSet;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twofano::ring::{partitions_in_box, pieri_multiply, rational};
use twofano::{GradedClass, Partition, Ring};

/// Coefficients of the Gaussian binomial `[n choose k]_q`, by the q-Pascal
/// recurrence `[n,k] = [n-1,k-1] + q^k [n-1,k]`.
fn gaussian_binomial(n: usize, k: usize) -> Vec<u64> {
    if k == 0 || k == n {
        return vec![1];
    }
    let left = gaussian_binomial(n - 1, k - 1);
    let right = gaussian_binomial(n - 1, k);
    let mut out = vec![0; (k * (n - k) + 1).max(left.len()).max(right.len() + k)];
    for (i, c) in left.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in right.iter().enumerate() {
        out[i + k] += c;
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// All weakly decreasing sequences of length `rows` bounded by `cols`.
fn all_partitions(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn go(rows: usize, ceiling: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == rows {
            out.push(prefix.clone());
            return;
        }
        for v in 0..=ceiling {
            prefix.push(v);
            go(rows, v, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cols, &mut Vec::new(), &mut out);
    out
}

fn padded(p: &Partition, rows: usize) -> Vec<usize> {
    (0..rows).map(|i| p.part(i)).collect()
}

#[test]
fn basis_counts_are_gaussian_binomials() {
    assert_eq!(gaussian_binomial(4, 2), vec![1, 1, 2, 1, 1]);
    for n in 2..=12 {
        for k in 1..=4.min(n - 1) {
            let ring = Ring::grassmannian(k, n).unwrap();
            let k = k.min(n - k);
            let expected = gaussian_binomial(n, k);
            assert_eq!(ring.dimension() + 1, expected.len());
            for (d, count) in expected.iter().enumerate() {
                assert_eq!(ring.basis_len(d) as u64, *count, "G({k},{n}) degree {d}");
                assert_eq!(partitions_in_box(d, k, n - k).len() as u64, *count);
            }
        }
    }
}

#[test]
fn schubert_duality_pairings() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd0a1);
    let mut checked = 0;
    for n in 2..=12 {
        for k in 1..=4.min(n / 2) {
            let ring = Ring::grassmannian(k, n).unwrap();
            let dim = ring.dimension();
            for _ in 0..20 {
                let d = rng.gen_range(0..=dim);
                let basis = ring.schubert_basis(d).unwrap();
                let dual_basis = ring.schubert_basis(dim - d).unwrap();
                let lambda = &basis[rng.gen_range(0..basis.len())];
                let mu = &dual_basis[rng.gen_range(0..dual_basis.len())];
                let a = GradedClass::schubert(&ring, lambda.parts()).unwrap();
                let b = GradedClass::schubert(&ring, mu.parts()).unwrap();
                let expected = if *mu == lambda.complement() { rational(1) } else { rational(0) };
                assert_eq!(a.mul(&b).unwrap().integrate(), expected, "G({k},{n}) σ{lambda}·σ{mu}");
                let c = GradedClass::schubert(&ring, lambda.complement().parts()).unwrap();
                assert_eq!(a.mul(&c).unwrap().integrate(), rational(1));
                checked += 1;
            }
        }
    }
    assert!(checked >= 500, "only {checked} pairs");
}

#[test]
fn pieri_matches_horizontal_strip_enumeration() {
    for rows in 1..=4 {
        for cols in 1..=5 {
            let shapes = all_partitions(rows, cols);
            for lambda in &shapes {
                let p = Partition::new(lambda, rows, cols).unwrap();
                for m in 1..=cols {
                    let got: BTreeSet<Vec<usize>> =
                        pieri_multiply(&p, m).unwrap().iter().map(|q| padded(q, rows)).collect();
                    let weight = lambda.iter().sum::<usize>() + m;
                    let expected: BTreeSet<Vec<usize>> = shapes
                        .iter()
                        .filter(|nu| nu.iter().sum::<usize>() == weight)
                        .filter(|nu| {
                            (0..rows).all(|i| nu[i] >= lambda[i] && (i == 0 || lambda[i - 1] >= nu[i]))
                        })
                        .cloned()
                        .collect();
                    assert_eq!(got, expected, "σ{p}·σ{m} in a {rows}x{cols} box");
                }
            }
        }
    }
}

#[test]
fn ring_product_with_special_classes_is_pieri() {
    for (k, n) in [(2, 5), (3, 6), (3, 7), (4, 8)] {
        let ring = Ring::grassmannian(k, n).unwrap();
        for d in 0..=ring.dimension() {
            for lambda in ring.schubert_basis(d).unwrap() {
                let a = GradedClass::schubert(&ring, lambda.parts()).unwrap();
                for m in 1..=n - k {
                    let special = GradedClass::schubert(&ring, &[m]).unwrap();
                    let expected = pieri_multiply(lambda, m)
                        .unwrap()
                        .iter()
                        .map(|nu| GradedClass::schubert(&ring, nu.parts()).unwrap())
                        .fold(GradedClass::zero(&ring), |acc, c| acc.add(&c).unwrap());
                    assert_eq!(a.mul(&special).unwrap(), expected);
                }
            }
        }
    }
}

#[test]
fn degree_of_the_grassmannian() {
    // ∫σ₁^{k(n−k)} counts standard Young tableaux of the k×(n−k) rectangle
    fn rectangle_tableaux(k: usize, m: usize) -> u128 {
        let cells = k * m;
        let factorial: u128 = (1..=cells as u128).product();
        let hooks: u128 = (0..k)
            .flat_map(|i| (0..m).map(move |j| ((k - i) + (m - j) - 1) as u128))
            .product();
        factorial / hooks
    }
    for (k, n) in [(2, 4), (2, 5), (3, 6), (2, 7), (3, 7)] {
        let ring = Ring::grassmannian(k, n).unwrap();
        let s1 = GradedClass::schubert(&ring, &[1]).unwrap();
        let degree = s1.pow(ring.dimension() as u32).unwrap().integrate();
        assert_eq!(degree, rational(rectangle_tableaux(k, n - k) as i64), "G({k},{n})");
    }
}
