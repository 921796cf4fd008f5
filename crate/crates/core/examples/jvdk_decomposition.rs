//! Decomposing a plane automorphism into affine and triangular letters.

use automimic::fields::Field;
use automimic::maps::{parse_map, render_word};
use automimic::mimicry::jvdk_decompose_dim2;

fn main() -> automimic::Result<()> {
    let f5 = Field::new(5, 1)?;
    let map = parse_map("(x1 + (x2 + x1^2)^3, 2*x2 + 2*x1^2 + 1)", &f5, 2)?;
    let w = jvdk_decompose_dim2(&map)?;
    println!("F = {}", map.render());
    println!("{}", render_word(&w));
    println!("recomposes: {}", w.to_map() == map);
    Ok(())
}
