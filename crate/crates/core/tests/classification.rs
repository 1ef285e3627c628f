use num::{Signed, Zero};
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twofano::classify::*;
use twofano::report::{run_sweep, Family, SweepConfig};
use twofano::ring::{rational, ratio};
use twofano::spaces::*;
use twofano::Rational;

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-200..=200), rng.gen_range(1..=12))
}

fn random_input(rng: &mut ChaCha8Rng) -> HomBoundInput {
    HomBoundInput {
        ch2_deg: random_rational(rng),
        c1sq_deg: random_rational(rng),
        e: rng.gen_range(1..=30),
        dim_x: rng.gen_range(1..=12),
        genus: rng.gen_range(0..=4),
        marked: rng.gen_range(0..=5),
    }
}

fn total(input: &HomBoundInput) -> Rational {
    hom_dimension_bound(input).unwrap().total
}

#[test]
fn hom_bound_is_affine_in_each_argument() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e3a);
    for _ in 0..200 {
        let base = random_input(&mut rng);
        let h = random_rational(&mut rng);
        let f0 = total(&base);

        let shifted = |f: &dyn Fn(&mut HomBoundInput)| {
            let mut x = base.clone();
            f(&mut x);
            total(&x)
        };
        // slope 1 in the ch₂ degree, second differences zero
        let f1 = shifted(&|x| x.ch2_deg += h.clone());
        let f2 = shifted(&|x| x.ch2_deg += h.clone() * rational(2));
        assert_eq!(&f1 - &f0, h);
        assert_eq!(&f2 - &f1 * rational(2) + &f0, Rational::zero());
        // slope 1/2e in the c₁² degree
        let f1 = shifted(&|x| x.c1sq_deg += h.clone());
        let f2 = shifted(&|x| x.c1sq_deg += h.clone() * rational(2));
        assert_eq!(&f1 - &f0, &h / rational(2 * base.e as i64));
        assert_eq!(&f2 - &f1 * rational(2) + &f0, Rational::zero());
        // slope −(e + dim − 3) in g and in #B
        let slope = -rational(base.e as i64 + base.dim_x as i64 - 3);
        let g1 = shifted(&|x| x.genus += 1);
        let g2 = shifted(&|x| x.genus += 2);
        let b1 = shifted(&|x| x.marked += 1);
        assert_eq!(&g1 - &f0, slope);
        assert_eq!(&b1 - &f0, slope);
        assert_eq!(&g2 - &g1 * rational(2) + &f0, Rational::zero());

        let parts = hom_dimension_bound(&base).unwrap();
        assert_eq!(parts.ch2_term + parts.c1sq_term + parts.deformation_term, parts.total);
    }
}

#[test]
fn verdicts_are_nested_and_deterministic() {
    let mut spaces = catalog().unwrap();
    let p2 = make_projective(2).unwrap();
    let q3 = make_complete_intersection(&CompleteIntersectionSpec::unweighted(3, vec![2]).unwrap()).unwrap();
    spaces.push(make_product(&q3, &p2).unwrap());
    spaces.push(make_p1_bundle_multiple(&q3, 1).unwrap());
    for space in &spaces {
        let record = classify(space).unwrap();
        assert_eq!(record, classify(space).unwrap());
        if record.is_ch2_strictly_positive {
            assert!(record.is_two_fano, "{}", record.label);
        }
        if record.is_two_fano {
            assert!(record.is_fano, "{}", record.label);
        }
        assert_eq!(record.boundary_flag, record.witness_pairings.iter().any(|w| w.value.is_zero()));
        assert_eq!(
            record.witness_pairings.len(),
            space.curve_cone().len() + space.surface_cone().len()
        );
    }
}

#[test]
fn engine_fano_verdict_matches_the_degree_sum_criterion() {
    for n in 1..=9usize {
        for r in 0..n.min(4) {
            let mut degrees = vec![2u64; r];
            loop {
                let spec = CompleteIntersectionSpec::unweighted(n, degrees.clone()).unwrap();
                let record = classify(&make_complete_intersection(&spec).unwrap()).unwrap();
                assert_eq!(record.is_fano, oracle_ci_fano(&spec), "{}", spec.label());
                let index = n as i64 + 1 - degrees.iter().sum::<u64>() as i64;
                let expected = (index > 0).then(|| rational(index));
                assert_eq!(record.fano_index, expected, "{}", spec.label());
                // next nondecreasing degree tuple in 2..=5
                match degrees.iter().rposition(|&d| d < 5) {
                    Some(i) => {
                        let v = degrees[i] + 1;
                        degrees[i..].iter_mut().for_each(|d| *d = v);
                    }
                    None => break,
                }
            }
        }
    }
}

#[test]
fn bundle_verdicts_match_the_twisted_criteria() {
    let bases = [
        make_projective(2).unwrap(),
        make_projective(3).unwrap(),
        make_complete_intersection(&CompleteIntersectionSpec::unweighted(4, vec![2]).unwrap()).unwrap(),
        make_complete_intersection(&CompleteIntersectionSpec::unweighted(5, vec![3]).unwrap()).unwrap(),
        make_complete_intersection(&CompleteIntersectionSpec::unweighted(6, vec![2, 2]).unwrap()).unwrap(),
        make_grassmannian(&GrassmannianSpec::new(2, 5).unwrap()).unwrap(),
    ];
    for base in &bases {
        let h = base.picard_generators()[0].clone();
        for m in 0..=5 {
            let c1l = h.scale(&rational(m));
            let y = make_p1_bundle_multiple(base, m).unwrap();
            let record = classify(&y).unwrap();
            let fano = oracle_bundle_fano(base, &c1l).unwrap();
            assert_eq!(record.is_fano, fano, "{}", y.label());
            if fano {
                assert_eq!(record.is_two_fano, oracle_bundle_two_fano(base, &c1l).unwrap(), "{}", y.label());
            }
            // ch₂(T_Y) pairs to zero with the preimage of every base curve
            assert!(record.surface_pairings().filter(|w| w.generator.starts_with("π*")).all(|w| w.value.is_zero()));
            assert!(record.boundary_flag);
        }
    }
}

#[test]
fn bend_and_break_degree_decreases_to_the_ch2_pairing() {
    for space in catalog().unwrap() {
        let tangent = space.tangent();
        let c1 = tangent.c1();
        for g in space.surface_cone() {
            let ch2_part = space.ch2().mul(&g.class).unwrap().integrate();
            let c1sq_part = c1.mul(&c1).unwrap().mul(&g.class).unwrap().integrate();
            let mut previous: Option<Rational> = None;
            for e in 1..=20u64 {
                let value = bend_and_break_degree(&space, &g.class, e).unwrap();
                assert_eq!(value, &ch2_part + &c1sq_part / rational(2 * e as i64));
                if let Some(p) = &previous {
                    if c1sq_part.is_positive() {
                        assert!(value < *p);
                    }
                }
                previous = Some(value);
            }
        }
    }
}

#[test]
fn sweeps_never_disagree_without_an_explanation() {
    for family in [Family::CompleteIntersection, Family::Grassmannian, Family::Product, Family::P1Bundle] {
        let mut config = SweepConfig::new(family);
        config.max_n = 4;
        config.max_k = 2;
        config.max_w = 2;
        let report = run_sweep(&config).unwrap();
        for row in &report.rows {
            assert_ne!(row.discrepancy_class(), Some("unexplained"), "{}", row.spec);
        }
    }
}
