use vbraid::{classicalize, gauss_project, BraidWord};

fn main() -> vbraid::Result<()> {
    for (text, n) in [
        ("t1 s2 S2 t1", 3),
        ("t1 s1 t1 s1", 2),
        ("t2 t1 s2 t1 t2", 3),
        ("s1 t2 s1 t2 S1 t1 s2", 3),
    ] {
        let w = BraidWord::parse(text, n)?;
        let trace = gauss_project(&w);
        println!("{w}");
        for (k, round) in trace.rounds.iter().enumerate() {
            let letters: Vec<String> = round
                .virtualized
                .iter()
                .map(|i| (i + 1).to_string())
                .collect();
            println!(
                "  round {}: virtualize letters {}",
                k + 1,
                letters.join(",")
            );
        }
        println!("  projection    {}", trace.result);
        match classicalize(&trace.result) {
            Ok(c) if c.is_empty() => println!("  classical     identity"),
            Ok(c) => println!("  classical     {c}"),
            Err(e) => println!("  classical     not defined: {e}"),
        }
    }
    Ok(())
}
