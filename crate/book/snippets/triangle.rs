use ramseries::triangle::{corner_coefficient, rhs_series, CoeffTriangle};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (p, b) = (0.5, 1.5);
    let tri = CoeffTriangle::build(p, b, 6)?;
    assert_eq!(tri.row(2), &[b, -p]);
    assert_eq!(tri.get(5, 5), corner_coefficient(p, 5));

    let t = 0.3;
    let lhs = tri.lhs_poly(3, t)?;
    let rhs = rhs_series(p, b, 3, t)?;
    assert!((lhs - rhs.value).abs() < 1e-10 * (1.0 + rhs.value.abs()));
    Ok(())
}
