//! Reproduction of the two published price-ratio tables from the
//! closed-form approximations. Ratios not shown in a panel sit at their
//! default values: L_S/L_N = 3.7 and w_N/w_S = 3.2 (both panels), equal
//! cost curvatures in the inequality/growth panels.

use carbonweights::dynamic_solver::ratio_approx_dynamic;
use carbonweights::static_solver::ratio_approx_static;

use crate::report::{fmt2, text_table, OutputContext};
use crate::CliResult;

pub const L_RATIO_SN: f64 = 3.7;
pub const W_RATIO_NS_DEFAULT: f64 = 3.2;
pub const ETAS: [f64; 2] = [1.0, 1.5];

pub const TABLE1_D_RATIOS: [f64; 3] = [0.5, 1.0, 2.0];
pub const TABLE1_C_ROWS: [f64; 3] = [0.5, 1.0, 2.0];
pub const TABLE1_W_ROWS: [f64; 3] = [1.0, 3.2, 6.4];

/// All static table cells in long form: (panel, row parameter, eta,
/// d ratio, value).
pub fn table1_cells() -> Vec<(char, f64, f64, f64, f64)> {
    let mut cells = Vec::new();
    for &c_ratio in &TABLE1_C_ROWS {
        for &eta in &ETAS {
            for &d_ratio in &TABLE1_D_RATIOS {
                let v = ratio_approx_static(
                    L_RATIO_SN,
                    1.0 / W_RATIO_NS_DEFAULT,
                    d_ratio,
                    c_ratio,
                    eta,
                );
                cells.push(('A', c_ratio, eta, d_ratio, v));
            }
        }
    }
    for &w_ratio_ns in &TABLE1_W_ROWS {
        for &eta in &ETAS {
            for &d_ratio in &TABLE1_D_RATIOS {
                let v = ratio_approx_static(L_RATIO_SN, 1.0 / w_ratio_ns, d_ratio, 1.0, eta);
                cells.push(('B', w_ratio_ns, eta, d_ratio, v));
            }
        }
    }
    cells
}

pub const TABLE2_D_RATIOS: [f64; 2] = [1.0, 2.0];
/// Panel A rows: South population growth (North's zero, equal endowment
/// growth). Panel B rows: South endowment growth (North's 2%, population
/// rows fixed at 2%/0%).
pub const TABLE2_GL_ROWS: [f64; 3] = [0.0, 0.01, 0.02];
pub const TABLE2_GW_ROWS: [f64; 3] = [0.02, 0.03, 0.04];
pub const TABLE2_YEARS: f64 = 50.0;

pub fn table2_cells() -> Vec<(char, f64, f64, f64, f64)> {
    let w_sn = 1.0 / W_RATIO_NS_DEFAULT;
    let mut cells = Vec::new();
    for &g_l_s in &TABLE2_GL_ROWS {
        for &eta in &ETAS {
            for &d_ratio in &TABLE2_D_RATIOS {
                let v = ratio_approx_dynamic(
                    L_RATIO_SN,
                    w_sn,
                    d_ratio,
                    1.0,
                    g_l_s,
                    0.0,
                    0.0,
                    0.0,
                    TABLE2_YEARS,
                    eta,
                );
                cells.push(('A', g_l_s, eta, d_ratio, v));
            }
        }
    }
    for &g_w_s in &TABLE2_GW_ROWS {
        for &eta in &ETAS {
            for &d_ratio in &TABLE2_D_RATIOS {
                let v = ratio_approx_dynamic(
                    L_RATIO_SN,
                    w_sn,
                    d_ratio,
                    1.0,
                    0.02,
                    0.0,
                    g_w_s,
                    0.02,
                    TABLE2_YEARS,
                    eta,
                );
                cells.push(('B', g_w_s, eta, d_ratio, v));
            }
        }
    }
    cells
}

fn emit(
    ctx: &OutputContext,
    file: &str,
    title: &str,
    row_labels: [(&str, &str); 2],
    d_ratios: &[f64],
    cells: &[(char, f64, f64, f64, f64)],
) -> CliResult {
    let mut csv = String::from("panel,row_param,row_value,eta,d_ratio,ratio\n");
    for (panel, row, eta, d, v) in cells {
        csv.push_str(&format!(
            "{panel},{},{row},{eta},{d},{}\n",
            if *panel == 'A' {
                row_labels[0].1
            } else {
                row_labels[1].1
            },
            fmt2(*v)
        ));
    }
    ctx.write(file, &csv)?;

    println!("{title}");
    for (panel, (label, key)) in ['A', 'B'].iter().zip(row_labels) {
        let mut header: Vec<String> = vec![key.to_owned()];
        for eta in ETAS {
            for d in d_ratios {
                header.push(format!("eta={eta} d'={d}"));
            }
        }
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut current_row: Vec<String> = Vec::new();
        let mut current_key = f64::NAN;
        for (p, row, _eta, _d, v) in cells.iter().filter(|c| c.0 == *panel) {
            debug_assert_eq!(p, panel);
            if *row != current_key {
                if !current_row.is_empty() {
                    rows.push(current_row.clone());
                }
                current_row = vec![format!("{row}")];
                current_key = *row;
            }
            current_row.push(fmt2(*v));
        }
        if !current_row.is_empty() {
            rows.push(current_row);
        }
        println!("Panel {panel}) {label}");
        println!("{}", text_table(&header, &rows));
    }
    Ok(())
}

pub fn table1(ctx: &OutputContext) -> CliResult {
    emit(
        ctx,
        "table1.csv",
        "Utilitarian-to-Negishi uniform carbon price ratio, static model",
        [
            ("abatement cost curvature", "c''N/c''S"),
            ("inequality", "wN/wS"),
        ],
        &TABLE1_D_RATIOS,
        &table1_cells(),
    )
}

pub fn table2(ctx: &OutputContext) -> CliResult {
    emit(
        ctx,
        "table2.csv",
        "Utilitarian-to-Negishi uniform carbon price ratio, dynamic model",
        [
            ("population growth (South, annual)", "gL_S"),
            ("endowment growth (South, annual)", "gw_S"),
        ],
        &TABLE2_D_RATIOS,
        &table2_cells(),
    )
}
