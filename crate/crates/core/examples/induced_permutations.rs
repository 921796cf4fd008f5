//! Bijections induced on F_{q^m}^n: signs, cycles and the homomorphism property.

use automimic::fields::Field;
use automimic::maps::parse_map;
use automimic::perms::{induced_map, Domain};

fn main() -> automimic::Result<()> {
    let f2 = Field::new(2, 1)?;
    for (n, text) in [
        (2, "(x1 + x2, x2)"),
        (3, "(x1 + x2, x2, x3)"),
        (3, "(x1 + x2*x3, x2, x3)"),
    ] {
        let map = parse_map(text, &f2, n)?;
        for m in 1..=2 {
            let dom = Domain::new(&f2, m, n)?;
            let p = induced_map(&map, &dom)?;
            println!(
                "{text} on F_{}^{n}: {} cycles, sign {:+}",
                2u32.pow(m),
                p.cycles().len(),
                p.sign()
            );
        }
    }

    // x^2 and x agree on F_2 but not on F_4
    let a = parse_map("(x1 + x2^2, x2)", &f2, 2)?;
    let b = parse_map("(x1 + x2, x2)", &f2, 2)?;
    for m in 1..=2 {
        let dom = Domain::new(&f2, m, 2)?;
        let same = induced_map(&a, &dom)? == induced_map(&b, &dom)?;
        println!(
            "(x1 + x2^2, x2) and (x1 + x2, x2) agree on F_{}^2: {same}",
            2u32.pow(m)
        );
    }

    let f = a.compose(&b)?;
    let dom = Domain::new(&f2, 2, 2)?;
    let lhs = induced_map(&f, &dom)?;
    let rhs = induced_map(&a, &dom)?.compose(&induced_map(&b, &dom)?);
    println!("pi(A o B) = pi(A) pi(B): {}", lhs == rhs);
    Ok(())
}
