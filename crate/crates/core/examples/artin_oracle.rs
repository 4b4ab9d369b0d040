use vbraid::{artin_action, classical_equal, BraidWord};

fn main() -> vbraid::Result<()> {
    let w = BraidWord::parse("s1 S2", 3)?;
    println!("action of {w}:");
    for line in artin_action(&w)?.lines() {
        println!("  {line}");
    }

    let pairs = [
        ("s1 s2 s1", "s2 s1 s2"),
        ("s1 s3", "s3 s1"),
        ("s1 s2", "s2 s1"),
        ("s1 S1 s2", "s2"),
        ("s1 s1", ""),
    ];
    for (a, b) in pairs {
        let (a, b) = (BraidWord::parse(a, 4)?, BraidWord::parse(b, 4)?);
        println!("[{a}] = [{b}]: {}", classical_equal(&a, &b)?);
    }
    Ok(())
}
