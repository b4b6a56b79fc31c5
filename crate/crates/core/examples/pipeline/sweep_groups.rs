//! Exhaustive and sampled sweeps over `k`-subsets.
//!
//! ```bash
//! cargo run --release -p weak-freiman --example sweep_groups
//! ```

use weak_freiman::groups::Group;
use weak_freiman::pipeline::{colex_unrank, sweep, SweepMode, SweepOptions};

fn main() {
    println!("first colex 2-subsets of 5 ranks: {:?}", (0..4).map(|r| colex_unrank(r, 5, 2)).collect::<Vec<_>>());

    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let runs = [
        (Group::cyclic(13).unwrap(), 4, SweepMode::Exhaustive),
        (Group::dihedral(29).unwrap(), 3, SweepMode::Exhaustive),
        (Group::dicyclic(29).unwrap(), 2, SweepMode::Exhaustive),
        (Group::dihedral(127).unwrap(), 5, SweepMode::Sample { count: 2000, seed: 1 }),
        (Group::dihedral(4).unwrap(), 4, SweepMode::Exhaustive),
        (Group::dicyclic(3).unwrap(), 5, SweepMode::Exhaustive),
    ];
    for (g, k, mode) in runs {
        let r = sweep(&g, k, &SweepOptions { mode, workers, ..Default::default() }).unwrap();
        println!(
            "{:<10} k={k}  {:>6} subsets  all sequenced: {:<5}  fallbacks {:>4}  failures {}  ({} ms)",
            g.spec().to_string(),
            r.subsets_tested,
            r.all_sequenced,
            r.fallbacks,
            r.failures.len(),
            r.wall_time.as_millis()
        );
        if let Some(f) = r.failures.first() {
            println!("    first failure #{}: {}", f.index, f.diagnostics);
        }
    }
}
