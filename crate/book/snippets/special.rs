use ramseries::special::{beta_f, digamma, gamma, hurwitz_zeta, lerch_phi};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pi = std::f64::consts::PI;

    assert!((gamma(0.5)? - pi.sqrt()).abs() < 1e-14);
    assert!((digamma(1.0)? + 0.577_215_664_901_532_9).abs() < 1e-14);
    assert!((hurwitz_zeta(2.0, 1.0)? - pi * pi / 6.0).abs() < 1e-12);

    // Φ(z, 1, 1) = −log(1 − z) / z
    let z = 0.5;
    assert!((lerch_phi(z, 1.0, 1.0)? + (1.0 - z).ln() / z).abs() < 1e-12);

    // Γ(4) Γ(3) / Γ(7) = 1/60
    assert!((beta_f(1.0, 2.0, 3.0)? - 1.0 / 60.0).abs() < 1e-14);
    Ok(())
}
