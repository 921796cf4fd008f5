//! Arithmetic in F_9 and the embedding F_3 -> F_9.

use automimic::fields::{Embedding, Field};

fn main() -> automimic::Result<()> {
    let f3 = Field::new(3, 1)?;
    let f9 = Field::new(3, 2)?;
    println!(
        "F_9 = F_3[x]/({:?}), primitive element {}",
        f9.modulus(),
        f9.render(f9.primitive())
    );
    let a = f9.parse_element("12")?;
    let b = f9.parse_element("21")?;
    println!("a = {}, b = {}", f9.render(a), f9.render(b));
    println!("a + b = {}", f9.render(f9.add(a, b)));
    println!("a * b = {}", f9.render(f9.mul(a, b)));
    println!("a / b = {}", f9.render(f9.div(a, b)?));
    println!(
        "a^3 = {}, a^9 = {}",
        f9.render(f9.pow(a, 3)),
        f9.render(f9.pow(a, 9))
    );
    let emb = Embedding::new(&f3, &f9)?;
    for c in f3.elements() {
        println!(
            "{} in F_3 maps to {} in F_9",
            f3.render(c),
            f9.render(emb.map(c))
        );
    }
    Ok(())
}
