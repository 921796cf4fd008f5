//! A plane automorphism over F_3[Z] whose natural word needs 1/Z, replaced
//! by a word over F_3[Z] that agrees with it at every Z = c in F_9.

use automimic::fields::{Field, ZPoly};
use automimic::mimicry::{mimic_fixed_variable, nagata_family};

fn main() -> automimic::Result<()> {
    let f3 = Field::new(3, 1)?;
    let (map, word) = nagata_family(&ZPoly::one(), &ZPoly::z(), &f3)?;
    println!("F = {}", map.render());
    println!("word over F_3(Z): {}", word.render());
    for m in 1..=2 {
        let res = mimic_fixed_variable(&word, m)?;
        let passed = res.certificate.iter().filter(|e| e.pass).count();
        println!(
            "m = {m}: denominators vanish on g = {}, {} letters, certificate {passed}/{}",
            res.g,
            res.t.len(),
            res.certificate.len()
        );
    }
    Ok(())
}
