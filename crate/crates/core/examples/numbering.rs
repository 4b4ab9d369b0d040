use vbraid::{integer_numbering, is_almost_classical, smooth, BraidWord};

fn main() -> vbraid::Result<()> {
    for (text, n) in [("s1 s2 S1", 3), ("t1 s2 S2 t1", 3), ("t1 s1 t1 s1", 2)] {
        let w = BraidWord::parse(text, n)?;
        let numbering = integer_numbering(&w);
        println!("{w}  (almost classical: {})", is_almost_classical(&w));
        for c in &numbering.crossings {
            let (lambda, mu) = c.numbers().unwrap_or_default();
            match c.parity() {
                Some(p) => println!(
                    "  letter {}: lambda {lambda}, mu {mu}, {p:?}",
                    c.word_index + 1
                ),
                None => println!("  letter {}: virtual", c.word_index + 1),
            }
        }
        println!("  top numbers {:?}", numbering.top_numbers);
    }

    let w = BraidWord::parse("t1 s1 t1 s1", 2)?;
    println!("smoothing letter 2 of {w}: {}", smooth(&w, 1)?);
    let report = serde_json::to_string_pretty(&integer_numbering(&w).report()).unwrap();
    println!("{report}");
    Ok(())
}
