//! Words in affine maps and ε = E_{1,(p-1,...,p-1)} that induce the same
//! bijection of F_{q^m}^n as E_{1,α}.

use automimic::constructions::DerksenMimic;
use automimic::fields::{Field, Fq};
use automimic::maps::{build, Word};
use automimic::perms::{induced_word, Domain};

fn main() -> automimic::Result<()> {
    let f2 = Field::new(2, 1)?;
    let m = 2;
    let dom = Domain::new(&f2, m, 3)?;
    let mut mimic = DerksenMimic::new(&f2, 3, m)?;
    for a in 0..4u32 {
        for b in 0..4u32 {
            let w = mimic.word(&[a as u64, b as u64])?;
            let target = Word::from_gen(&f2, 3, build::e(3, 0, &[a, b], Fq::ONE))?;
            let same = induced_word(&w, &dom)? == induced_word(&target, &dom)?;
            println!(
                "alpha = ({a}, {b}): {:>4} letters, Derksen alphabet {}, same bijection of F_4^3 {same}",
                w.len(),
                w.is_derksen()
            );
        }
    }
    Ok(())
}
