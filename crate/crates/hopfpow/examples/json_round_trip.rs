//! Canonical JSON persistence: any algebra the library builds can be saved
//! to a single JSON file with reduced rational structure constants, loaded
//! back with full structural validation, and re-encoded byte-for-byte
//! identically -- which is what makes cached builds reproducible.
//!
//! Run with: `cargo run --example json_round_trip`

use hopfpow::instances::{InstanceKind, InstanceSpec};
use hopfpow::io::{from_json_str, to_json_string};
use hopfpow::ssym::build_ssym;

fn main() -> hopfpow::Result<()> {
    let h = InstanceSpec::new(InstanceKind::Shuffle, vec![1, 2], 3)?.build()?;
    let text = to_json_string(&h);
    println!("shuffle instance serialized to {} bytes of JSON", text.len());
    println!("first lines:");
    for line in text.lines().take(12) {
        println!("  {line}");
    }

    // Round trip: load, validate, re-encode; the bytes are identical.
    let (back, warnings) = from_json_str(&h.name, &text)?;
    assert!(warnings.is_empty());
    assert_eq!(to_json_string(&back), text);
    println!("\nround trip is byte-identical and warning-free");

    // Non-canonical scalars load fine but are reported and normalized.
    // (Pick the first scalar inside the product section; labels contain no
    // digits, so this is always a coefficient.)
    let pidx = text.find("\"product\"").unwrap();
    let sidx = pidx + text[pidx..].find("\"1\"").unwrap();
    let sloppy = format!("{}\"2/2\"{}", &text[..sidx], &text[sidx + 3..]);
    let (fixed, warnings) = from_json_str(&h.name, &sloppy)?;
    println!("loading a file with one unreduced fraction:");
    for w in &warnings {
        println!("  warning: {w}");
    }
    assert_eq!(to_json_string(&fixed), text);
    println!("re-encoding restored the canonical bytes");

    // Structural validation points at the offending location.
    let ssym = build_ssym(3)?;
    let broken = to_json_string(&ssym).replacen("F:213", "F:999", 1);
    match from_json_str("broken", &broken) {
        Err(e) => println!("\nvalidation rejects a corrupted file:\n  {e}"),
        Ok(_) => unreachable!("corrupted file must not load"),
    }
    Ok(())
}
