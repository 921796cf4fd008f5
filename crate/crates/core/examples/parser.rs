//! Parsing maps and words, composing them and printing the results.

use automimic::fields::Field;
use automimic::maps::{parse_map, parse_word, render_map, render_word};

fn main() -> automimic::Result<()> {
    let f5 = Field::new(5, 1)?;
    let f = parse_map("(x1 + 3*x2^2*x3, x2 + x3, x3)", &f5, 3)?;
    let g = parse_map("(x2, x1, x3 + 4)", &f5, 3)?;
    println!("F = {}", render_map(&f));
    println!("G = {}", render_map(&g));
    println!("F o G = {}", render_map(&f.compose(&g)?));
    println!(
        "Jacobian of F o G = {}",
        automimic::maps::render_poly(&f.compose(&g)?.jacobian_det(), &f5)
    );

    let text = "// the word T_{1,1} R_{1,2} E_{1,(2,0)}\nT 1 1\nR 1 2\nE 1 2,0 3\n";
    let w = parse_word(text, &f5, 3)?;
    println!("word:\n{}", render_word(&w));
    println!("as a map: {}", render_map(&w.to_map()));
    println!("inverse:  {}", render_map(&w.inverse().to_map()));
    Ok(())
}
