//! Incident-link reliability grid for 4x4 tori with growing hypercubes.

use teh_net::{reliability_table, table3_grid, unreliability_percent, NetworkSpec};

fn main() -> teh_net::Result<()> {
    print!("{}", table3_grid().render_text());

    let bigger: Vec<NetworkSpec> = [128, 256]
        .iter()
        .map(|&n| NetworkSpec::teh(4, 4, n))
        .collect::<Result<_, _>>()?;
    println!();
    print!("{}", reliability_table(&bigger, 12)?.render_text());

    let spec = NetworkSpec::teh(4, 4, 8)?;
    if let Some(u) = unreliability_percent(&spec, 1) {
        println!("\nunreliability of {spec} with one failed link: {u}%");
    }
    Ok(())
}
