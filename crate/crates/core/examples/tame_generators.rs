//! Elementary maps rewritten over affine maps and the reduced family
//! (x_1 + x_2^{k_2 p - 1} ... x_n^{k_n p - 1}, x_2, ..., x_n).

use automimic::constructions::tame::is_tame_alphabet_word;
use automimic::constructions::tame_generators_word;
use automimic::fields::{Field, Fq};
use automimic::maps::{build, render_word, Word};

fn main() -> automimic::Result<()> {
    let f3 = Field::new(3, 1)?;
    for v in [vec![2u32, 5], vec![1, 1], vec![4, 0], vec![3, 2]] {
        let w = tame_generators_word(&f3, 3, &v)?;
        let target = Word::from_gen(&f3, 3, build::e(3, 0, &v, Fq::ONE))?;
        println!(
            "v = {v:?}: {} letters, allowed alphabet {}, recomposes {}",
            w.len(),
            is_tame_alphabet_word(&w),
            w.to_map() == target.to_map()
        );
    }
    println!(
        "word for v = [3, 2]:\n{}",
        render_word(&tame_generators_word(&f3, 3, &[3, 2])?)
    );
    Ok(())
}
