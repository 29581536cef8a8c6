use ramseries::errata::{errata_entry, errata_keys};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for key in errata_keys() {
        let entry = errata_entry(key).expect("listed key")?;
        assert!(entry.reproduces(), "{key}");
    }
    Ok(())
}
