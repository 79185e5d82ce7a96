use std::time::Instant;
use spreadpoly_core::sequences::{z_sequence, ZMethod};

fn main() {
    let max: u32 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(200);
    for m in ZMethod::ALL {
        let t = Instant::now();
        let seq = z_sequence(max, *m);
        println!("{m:>12}: {:?} ({} terms at n={max})", t.elapsed(), seq[max as usize].len());
    }
}
