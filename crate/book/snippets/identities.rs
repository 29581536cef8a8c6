use ramseries::identities::{master_shift, trig_lambda};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rec = master_shift(-0.5, 1.25, 0.5, 1.0, 3)?;
    assert!(rec.passed(), "{rec:?}");

    // ∫₀^∞ sin x cos 2x dx = −1/3 in the Abel sense
    let t = trig_lambda(1, 2.0, 0.0)?;
    assert!((t.lambda_c + 1.0 / 3.0).abs() < 1e-12);
    Ok(())
}
