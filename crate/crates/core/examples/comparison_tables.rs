//! Link and cost comparison tables from 512 to 16384 processors, plus the
//! long-form dataset for plotting.

use teh_net::tables::{render_comparison_text, render_figure_csv};
use teh_net::{figure_data, table1_rows, table2_rows, DiameterConvention, Figure};

fn main() {
    println!("Total links");
    print!("{}", render_comparison_text(&table1_rows()));

    println!("\nTopological cost (square-torus diameter)");
    print!(
        "{}",
        render_comparison_text(&table2_rows(DiameterConvention::PaperSquareApprox))
    );

    println!("\nTopological cost (exact diameter of near-square tori)");
    print!(
        "{}",
        render_comparison_text(&table2_rows(DiameterConvention::Exact))
    );
    println!("* value differs between the two conventions");

    println!("\nCost dataset");
    print!("{}", render_figure_csv(&figure_data(Figure::CostVsP)));
}
