//! The scaling gadget T_m over the Derksen alphabet and its action
//! (u_1, u_2, ..., u_n) -> (u_1/u_n, u_2 u_n, ..., u_n) where u_n != 0.

use automimic::constructions::{agrees_with_psi, build_tm_word};
use automimic::fields::Field;
use automimic::perms::Domain;

fn main() -> automimic::Result<()> {
    for (p, r, m) in [(2u64, 1u32, 1u32), (2, 1, 2), (2, 2, 1), (3, 1, 1)] {
        let f = Field::new(p, r)?;
        let w = build_tm_word(&f, 3, m)?;
        let dom = Domain::new(&f, m, 3)?;
        println!(
            "q = {}, m = {m}: {} letters, Derksen alphabet: {}, agrees with psi: {}",
            f.q(),
            w.len(),
            w.is_derksen(),
            agrees_with_psi(&w, &dom)?
        );
    }
    let f3 = Field::new(3, 1)?;
    println!(
        "T_1 over F_3 = {}",
        build_tm_word(&f3, 3, 1)?.to_map().render()
    );
    Ok(())
}
