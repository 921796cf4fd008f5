//! The normal closure of the linear group has index 2 in the tame group,
//! both acting on F_4^2 through maps with F_2 coefficients.

use automimic::experiments::glin_index;

fn main() -> automimic::Result<()> {
    let rep = glin_index()?;
    println!(
        "{}",
        serde_json::to_string_pretty(&rep).expect("report serializes")
    );
    Ok(())
}
