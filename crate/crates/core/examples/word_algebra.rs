use vbraid::BraidWord;

fn main() -> vbraid::Result<()> {
    let w = BraidWord::parse("s1 t2 S2 s2 S1 t1", 3)?;
    println!("word         {w}");
    println!("inverse      {}", w.inverse());
    println!("reduced      {}", w.free_reduce());
    let product = w.concat(&w.inverse())?.free_reduce();
    println!(
        "w * w^-1     {}",
        if product.is_empty() {
            "identity".into()
        } else {
            product.to_string()
        }
    );
    println!("permutation  {}", w.permutation());

    let t = BraidWord::parse("t1.s2", 3)?;
    println!(
        "{t}: bottom strand i ends at top position {}",
        t.permutation()
    );
    Ok(())
}
