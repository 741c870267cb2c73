use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinchain::linalg::hermitian_eig;
use spinchain::model::{hamiltonian_block, spectrum_closed_form, ModelParams, Sector};

#[test]
fn closed_form_spectrum_matches_numeric_on_random_draws() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let mut u = || rng.gen_range(-3.0..3.0);
        let p = ModelParams {
            j: u(),
            jz: u(),
            eta: u(),
            j0: u(),
            b_uniform: u(),
            b_nonuniform: u(),
            gamma: 0.2,
            mu: Sector::try_from(rng.gen_range(-1..=1)).unwrap(),
            theta: 0.0,
        };
        let h = hamiltonian_block(&p);
        for (r, c) in [(0, 1), (0, 2), (3, 1), (3, 2)] {
            assert_eq!(h[(r, c)].norm(), 0.0);
        }
        let numeric = hermitian_eig(&h).unwrap().values;
        let closed = spectrum_closed_form(&p).sorted();
        for (a, b) in numeric.iter().zip(closed) {
            worst = worst.max((a - b).abs());
        }
    }
    assert!(worst < 1e-9, "max spectrum deviation {worst:e}");
}
