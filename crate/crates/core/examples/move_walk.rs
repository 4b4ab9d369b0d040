use vbraid::moves::walk_log;
use vbraid::{apply_move, enumerate_moves, random_walk, BraidWord, WalkPolicy};

fn main() -> vbraid::Result<()> {
    let w = BraidWord::parse("s1 s2 s1", 3)?;
    println!("moves applicable to {w}:");
    for m in enumerate_moves(&w) {
        println!("  {m:<12} -> {}", apply_move(&w, &m)?);
    }

    let walk = random_walk(&w, 8, 7, WalkPolicy::default());
    println!("\nseeded walk:");
    for step in &walk {
        println!(
            "  {:>2}. {:<12} {}",
            step.step,
            step.mv.to_string(),
            step.word
        );
    }
    let undo = walk.iter().rev().try_fold(
        walk.last().map_or(w.clone(), |s| s.word.clone()),
        |cur, s| apply_move(&cur, &s.mv.reversed()),
    )?;
    println!("undoing every move returns to {undo}");

    println!("\nJSON log:");
    for entry in walk_log(&w, &walk) {
        println!("{}", serde_json::to_string(&entry).unwrap());
    }
    Ok(())
}
