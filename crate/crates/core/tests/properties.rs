use jcoker::brauer::{act_twisted, multiply, BrauerDiagram, BrauerElement};
use jcoker::combinatorics::{hook_length_dimension, kw_multiplicity, partitions};
use jcoker::free_lie::{theta, Family};
use jcoker::random::random_tensor;
use jcoker::rational::int;
use jcoker::tensor::{act_perm, cyclic_project, omega, PermAlgebraElement, Permutation, SparseTensor, SymplecticSpace};
use jcoker::weights::{raising_operators, word_weight, Mode};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn tensor(seed: u64, g: usize, degree: usize, terms: usize) -> SparseTensor {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tensor(&mut rng, SymplecticSpace::new(g).unwrap(), degree, terms)
}

fn random_perm(rng: &mut ChaCha8Rng, m: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=m).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).unwrap()
}

fn random_algebra(rng: &mut ChaCha8Rng, m: usize) -> PermAlgebraElement {
    let terms = (0..3).map(|_| (random_perm(rng, m), int(rng.gen_range(-2..=2))));
    PermAlgebraElement::from_terms(m, terms.collect::<Vec<_>>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn act_perm_is_a_right_action(seed in any::<u64>(), m in 1usize..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_tensor(&mut rng, SymplecticSpace::new(2).unwrap(), m, 5);
        let (a, b) = (random_algebra(&mut rng, m), random_algebra(&mut rng, m));
        let lhs = act_perm(&act_perm(&t, &a).unwrap(), &b).unwrap();
        prop_assert_eq!(lhs, act_perm(&t, &(&a * &b)).unwrap());
    }

    #[test]
    fn cyclic_projection_ignores_rotation(seed in any::<u64>(), m in 1usize..=7, g in 1usize..=3) {
        let t = tensor(seed, g, m, 6);
        let rotated = t.permuted(&Permutation::sigma(m, m)).unwrap();
        prop_assert_eq!(cyclic_project(&rotated), cyclic_project(&t));
    }

    #[test]
    fn no_stored_zeros(seed in any::<u64>(), m in 1usize..=5) {
        let t = tensor(seed, 2, m, 8);
        let u = tensor(seed ^ 1, 2, m, 8);
        let sum = t.try_add(&u).unwrap().try_sub(&u).unwrap();
        prop_assert!(sum.iter().all(|(_, c)| *c != int(0)));
        prop_assert_eq!(&sum, &t);
        prop_assert!(t.try_sub(&t).unwrap().is_zero());
        prop_assert!(t.scale(&int(0)).is_zero());
    }

    #[test]
    fn omega_is_antisymmetric(g in 1usize..=8) {
        let w = omega(SymplecticSpace::new(g).unwrap());
        prop_assert_eq!(w.permuted(&Permutation::s(2, 1)).unwrap(), -&w);
    }

    #[test]
    fn dsw_projection_is_idempotent(seed in any::<u64>(), m in 1usize..=6) {
        let t = tensor(seed, 2, m, 5);
        let th = theta(m).unwrap();
        let once = th.apply(&t).unwrap();
        let twice = th.apply(&once).unwrap();
        prop_assert_eq!(twice, once.scale(&int(m as i64)));
    }

    #[test]
    fn brauer_composition_is_associative(seed in any::<u64>(), k in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all = BrauerDiagram::all(k);
        let g = rng.gen_range(1..=4);
        let mut pick = || BrauerElement::from_diagram(all.choose(&mut rng).unwrap().clone(), g);
        let (a, b, c) = (pick(), pick(), pick());
        let left = multiply(&multiply(&a, &b).unwrap(), &c).unwrap();
        let right = multiply(&a, &multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn twisted_action_is_a_right_action(seed in any::<u64>(), k in 1usize..=4, g in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all = BrauerDiagram::all(k);
        let t = random_tensor(&mut rng, SymplecticSpace::new(g).unwrap(), k, 5);
        let mut element = || {
            let mut e = BrauerElement::zero(k, g);
            for _ in 0..2 {
                e.add_term(all.choose(&mut rng).unwrap().clone(), int(rng.gen_range(1..=3)));
            }
            e
        };
        let (a, b) = (element(), element());
        let lhs = act_twisted(&t, &multiply(&a, &b).unwrap()).unwrap();
        let rhs = act_twisted(&act_twisted(&t, &a).unwrap(), &b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn permutations_act_with_sign_twist(seed in any::<u64>(), k in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_tensor(&mut rng, SymplecticSpace::new(2).unwrap(), k, 5);
        let p = random_perm(&mut rng, k);
        let twisted = act_twisted(&t, &BrauerElement::from_diagram(BrauerDiagram::from_permutation(&p), 2)).unwrap();
        prop_assert_eq!(twisted, t.permuted(&p).unwrap().scale(&int(p.sign())));
    }

    #[test]
    fn raising_is_a_derivation(seed in any::<u64>(), m in 1usize..=3, n in 1usize..=3) {
        let space = SymplecticSpace::new(2).unwrap();
        let (t, u) = (tensor(seed, 2, m, 4), tensor(seed.wrapping_add(7), 2, n, 4));
        for mode in [Mode::Gl, Mode::Sp] {
            for x in raising_operators(space, mode) {
                let lhs = x.apply(&t.tensor(&u).unwrap()).unwrap();
                let rhs = x.apply(&t).unwrap().tensor(&u).unwrap().try_add(&t.tensor(&x.apply(&u).unwrap()).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn raising_shifts_weight_by_root(seed in any::<u64>(), m in 1usize..=4) {
        let space = SymplecticSpace::new(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let letters: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=space.dim())).collect();
        let t = SparseTensor::basis(space, &letters).unwrap();
        for mode in [Mode::Gl, Mode::Sp] {
            let mu = word_weight(space, t.iter().next().unwrap().0, mode);
            for x in raising_operators(space, mode) {
                let target = mu.shifted(x.root());
                for (w, _) in x.apply(&t).unwrap().iter() {
                    prop_assert_eq!(word_weight(space, w, mode), target.clone());
                }
            }
        }
    }
}

#[test]
fn kw_multiplicities_sum_to_dimension() {
    for n in 1..=8 {
        for lam in partitions(n) {
            let total: u64 = (0..n).map(|j| kw_multiplicity(&lam, j).unwrap()).sum();
            assert_eq!(total as u128, hook_length_dimension(&lam), "{lam}");
        }
    }
}

#[test]
fn detection_scalars_are_proportional() {
    for (family, k, g) in [(Family::Power, 3, 5), (Family::Power, 3, 6), (Family::Power, 5, 7), (Family::Wedge, 5, 7), (Family::Wedge, 5, 8)] {
        let r = jcoker::detector::detect(family, k, g).unwrap();
        assert!(r.scalar.is_some(), "{family} k={k} g={g}");
    }
}
