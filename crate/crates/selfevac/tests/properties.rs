//! Randomized structural properties, driven by proptest over seeds.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use selfevac::involutions::Involution;
use selfevac::tableaux::{
    biword_of_tableau, evacuate_standard, inverse_rsk, rsk_biword, rsk_involution,
    GeneralizedInvolution,
};

/// A uniform-ish random involution built by pairing free positions.
fn involution_from_seed(n: usize, seed: u64) -> Involution {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = vec![0usize; n];
    for p in 0..n {
        if values[p] != 0 {
            continue;
        }
        let free: Vec<usize> = (p + 1..n).filter(|&v| values[v] == 0).collect();
        // Index 0 keeps p fixed, anything else picks a partner.
        let choice = rng.gen_range(0..=free.len());
        if choice == 0 {
            values[p] = p + 1;
        } else {
            let v = free[choice - 1];
            values[p] = v + 1;
            values[v] = p + 1;
        }
    }
    Involution::new(values).expect("pairing construction yields involutions")
}

fn biword_from_seed(max_len: usize, max_m: usize, seed: u64) -> GeneralizedInvolution {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = rng.gen_range(1..=max_m);
    let n = rng.gen_range(0..=max_len);
    let mut matrix = vec![vec![0usize; m]; m];
    let mut remaining = n;
    while remaining > 0 {
        let i = rng.gen_range(0..m);
        if remaining == 1 {
            matrix[i][i] += 1;
            remaining -= 1;
            continue;
        }
        let j = rng.gen_range(0..m);
        if i == j {
            matrix[i][i] += 1;
            remaining -= 1;
        } else {
            matrix[i][j] += 1;
            matrix[j][i] += 1;
            remaining -= 2;
        }
    }
    GeneralizedInvolution::from_matrix(matrix).unwrap()
}

proptest! {
    #[test]
    fn rsk_round_trips(n in 0usize..=12, seed in any::<u64>()) {
        let sigma = involution_from_seed(n, seed);
        prop_assert_eq!(inverse_rsk(&rsk_involution(&sigma)), sigma);
    }

    #[test]
    fn evacuation_squares_to_identity(n in 0usize..=12, seed in any::<u64>()) {
        let sigma = involution_from_seed(n, seed);
        let t = rsk_involution(&sigma);
        prop_assert_eq!(evacuate_standard(&evacuate_standard(&t)), t);
    }

    #[test]
    fn sliding_matches_complement_conjugation(n in 0usize..=12, seed in any::<u64>()) {
        let sigma = involution_from_seed(n, seed);
        prop_assert_eq!(
            evacuate_standard(&rsk_involution(&sigma)),
            rsk_involution(&sigma.complement_conjugate())
        );
    }

    #[test]
    fn descent_sets_mirror_under_evacuation(n in 0usize..=12, seed in any::<u64>()) {
        let sigma = involution_from_seed(n, seed);
        prop_assert_eq!(
            sigma.complement_conjugate().descent_set(),
            sigma.descent_set().mirrored(n)
        );
    }

    #[test]
    fn descents_and_rises_partition_positions(n in 0usize..=12, seed in any::<u64>()) {
        let sigma = involution_from_seed(n, seed);
        let d = sigma.descent_set().len();
        let r = sigma.rise_set().len();
        prop_assert_eq!(d + r, n.saturating_sub(1));
    }

    #[test]
    fn text_form_round_trips(n in 0usize..=15, seed in any::<u64>()) {
        let sigma = involution_from_seed(n, seed);
        prop_assert_eq!(sigma.to_string().parse::<Involution>().unwrap(), sigma);
    }

    #[test]
    fn biword_rsk_round_trips(seed in any::<u64>()) {
        let alpha = biword_from_seed(10, 6, seed);
        prop_assert_eq!(biword_of_tableau(&rsk_biword(&alpha)), alpha);
    }

    #[test]
    fn biword_evacuation_squares_to_identity(seed in any::<u64>()) {
        let alpha = biword_from_seed(10, 6, seed);
        prop_assert_eq!(alpha.evacuate().evacuate(), alpha.clone());
    }

    #[test]
    fn polarization_commutes_with_evacuation(seed in any::<u64>()) {
        let alpha = biword_from_seed(10, 6, seed);
        prop_assert_eq!(
            alpha.evacuate().polarize(),
            alpha.polarize().complement_conjugate()
        );
    }

    #[test]
    fn polarization_preserves_rsk_shape(seed in any::<u64>()) {
        let alpha = biword_from_seed(8, 5, seed);
        let semistandard_shape = rsk_biword(&alpha).shape();
        let standard_shape = rsk_involution(&alpha.polarize()).shape();
        prop_assert_eq!(
            semistandard_shape.row_lengths(),
            standard_shape.row_lengths()
        );
    }
}
