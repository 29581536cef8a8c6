use ramseries::quadrature::IntegralSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // ∫₀¹ log(1 − t) dt = −1
    let spec = IntegralSpec::F2 { a: 0.0, b: 1.0, n: 1 };
    assert!((spec.series_value()? + 1.0).abs() < 1e-12);
    assert!((spec.oracle_value()?.value + 1.0).abs() < 1e-9);

    let rec = IntegralSpec::F1 { a: -0.5, b: 0.25, alpha: 1.5 }.verify()?;
    assert!(rec.passed(), "{rec:?}");
    Ok(())
}
