//! The WZ pair: point values, the difference equation and its telescoped sums.

use supercong::wz::{
    alpha, check_full_telescope, check_half_telescope, check_row_telescope, check_wz_equation, f_half_closed_form,
    g_closed_form, run_checks, wz_F, wz_G,
};

fn main() -> supercong::error::Result<()> {
    println!("alpha(1,0) = {}, alpha(1,1) = {}", alpha(1, 0), alpha(1, 1));
    println!("F(1,0) = {}, F(2,1) = {}", wz_F(1, 0)?, wz_F(2, 1)?);
    println!("G(1,0) = {} = {}", wz_G(1, 0)?, g_closed_form(1)?);
    println!("F(5,4) = {} = {}", wz_F(5, 4)?, f_half_closed_form(11, 4)?);
    println!("WZ equation at (3,1): {}", check_wz_equation(3, 1)?);
    println!("row telescope (6, 20): {}", check_row_telescope(6, 20)?);
    println!("half telescope at 13: {}", check_half_telescope(13)?);
    println!("full telescope at 11: {}", check_full_telescope(11)?);

    let summary = run_checks(10, 12, 13);
    println!(
        "grid: {} points, {} closed forms, {} telescopes, {} failures",
        summary.equation_points,
        summary.closed_form_checks,
        summary.telescope_checks,
        summary.failures.len()
    );
    Ok(())
}
