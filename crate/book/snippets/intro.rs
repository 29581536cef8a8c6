use ramseries::series::eval_phi;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // φ(−1/2, 1, 0) = B(1, 1/2) = 2
    let r = eval_phi(-0.5, 1.0, 0.0)?;
    assert!((r.value - 2.0).abs() <= r.abs_error_bound.max(1e-12));
    println!("{} ± {:e} after {} terms", r.value, r.abs_error_bound, r.terms_used);
    Ok(())
}
