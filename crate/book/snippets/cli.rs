use ramseries::cli::run;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["ramseries", "--format", "csv", "coeffs", "--p", "0.5", "--b", "1", "--m", "2"];
    assert_eq!(run(args, &mut out, &mut err), 0);
    let text = String::from_utf8(out)?;
    assert!(text.starts_with("m,k,A"));
    print!("{text}");
    Ok(())
}
