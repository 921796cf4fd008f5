//! Orders of groups generated by induced bijections, by Schreier-Sims and
//! by breadth-first closure.

use automimic::experiments::{group_order, BRUTE_FORCE_LIMIT};
use automimic::fields::Field;

fn main() -> automimic::Result<()> {
    for (p, r, n, m, spec) in [
        (2u64, 1u32, 3usize, 1u32, "linear"),
        (2, 1, 3, 1, "affine"),
        (2, 1, 3, 1, "tame"),
        (2, 1, 3, 1, "derksen"),
        (2, 2, 2, 1, "tame"),
        (3, 1, 2, 1, "tame"),
        (2, 1, 2, 2, "tame-deg3"),
    ] {
        let f = Field::new(p, r)?;
        let rep = group_order(&f, n, m, spec)?;
        let cross = if rep.checks.is_empty() {
            format!("larger than {BRUTE_FORCE_LIMIT}, no closure check")
        } else {
            format!("closure agrees: {}", rep.pass)
        };
        println!(
            "{spec:>9} over F_{} on F_{}^{n}: order {} = {} ({cross})",
            f.q(),
            f.q().pow(m),
            rep.quantities["order"].as_str().unwrap_or("?"),
            rep.quantities["order_factored"].as_str().unwrap_or("?"),
        );
    }
    Ok(())
}
