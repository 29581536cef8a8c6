use ramseries::series::{convergence_report, eval_phi_tilde, eval_psi_general, Regime, SeriesParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a = 1 leaves two terms: 1 + 1/2
    let r = eval_phi_tilde(1.0, 1.0, 0.0)?;
    assert_eq!(r.value, 1.5);
    assert!(matches!(convergence_report(SeriesParams::phi_tilde(1.0, 1.0, 0.0)), Regime::Finite { terms: 2 }));

    // |β| > 1 with a non-integer a has no sum
    let wild = SeriesParams::new(0.5, 1.0, 2.0, 0.0);
    assert!(matches!(convergence_report(wild), Regime::Divergent));
    assert!(eval_psi_general(wild).is_err());
    Ok(())
}
