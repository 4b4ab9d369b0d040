use vbraid::moves::walk_chain;
use vbraid::{classical_equal, injectivity_pipeline, random_walk, BraidWord, WalkPolicy};

fn main() -> vbraid::Result<()> {
    let start = BraidWord::parse("s1 S2 s3 s1", 4)?;
    let policy = WalkPolicy {
        insertion_weight: 2,
        pattern_weight: 1,
    };
    let mut certified = 0;
    for seed in 0..50 {
        let walk = random_walk(&start, 40, seed, policy);
        let report = injectivity_pipeline(&walk_chain(&start, &walk))?;
        assert!(
            report.equal,
            "seed {seed} failed at {:?}",
            report.first_failure
        );
        certified += 1;
        if seed == 0 {
            for ((w, p), c) in report
                .input_chain
                .iter()
                .zip(&report.projected_chain)
                .zip(&report.classical_chain)
                .filter(|((w, p), _)| w != p)
                .take(3)
            {
                println!("virtual    {w}\nprojected  {p}\nclassical  {c}\n");
            }
        }
        let end = report.classical_chain.last().unwrap();
        assert!(classical_equal(end, &start)?);
    }
    println!("{certified} walks of 40 moves from {start}: every classical chain certified equal");
    Ok(())
}
