//! The `tabulate` subcommand: plot-ready CSV columns for kernels, moving
//! basis states, and the classical action.

use num_complex::Complex64 as C64;

use qframes::hamilton_jacobi::{GeneratingFunction, QuantumAction};
use qframes::kernels::{
    kernel, moving_coherent_state, moving_momentum_state, moving_number_state, KernelSpec,
};
use qframes::Representation;

use crate::config::{ConfigError, RunConfig};

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn header(config: &RunConfig, what: &str, extra: &[(&str, String)]) -> String {
    let mut s = format!("# tabulation = {what}\n");
    for (k, v) in config.echo_pairs() {
        s.push_str(&format!("# {k} = {v}\n"));
    }
    for (k, v) in extra {
        s.push_str(&format!("# {k} = {v}\n"));
    }
    s
}

pub fn run(config: &RunConfig, what: &str) -> Result<(), ConfigError> {
    let params = config.params()?;
    let t = *config.times.first().unwrap_or(&0.5);
    let err = |e: qframes::Error| ConfigError(e.to_string());

    let body = match what {
        "kernel" => {
            let spec = KernelSpec::position(params);
            spec.check_time(t).map_err(err)?;
            let qs = linspace(config.grid.0, config.grid.1, 201);
            let mut s = header(config, what, &[("t", format!("{t}")), ("columns", "q,Q,re,im".into())]);
            s.push_str("q,Q,re,im\n");
            for &q in &qs {
                for &qq in &qs {
                    let v = kernel(&spec, q, qq, t).map_err(err)?;
                    s.push_str(&format!("{q:.16e},{qq:.16e},{:.16e},{:.16e}\n", v.re, v.im));
                }
            }
            s
        }
        "moving_number" => {
            let qs = linspace(-5.0, 5.0, 201);
            let mut s = header(config, what, &[("t", format!("{t}")), ("n", "0..=4".into())]);
            s.push_str("Q,n0_re,n0_im,n1_re,n1_im,n2_re,n2_im,n3_re,n3_im,n4_re,n4_im\n");
            for &q in &qs {
                s.push_str(&format!("{q:.16e}"));
                for n in 0..=4usize {
                    let v = moving_number_state(&params, q, n, t).map_err(err)?;
                    s.push_str(&format!(",{:.16e},{:.16e}", v.re, v.im));
                }
                s.push('\n');
            }
            s
        }
        "moving_coherent" => {
            let z = C64::new(1.0, 0.5);
            let qs = linspace(-5.0, 5.0, 201);
            let mut s = header(
                config,
                what,
                &[("t", format!("{t}")), ("z", format!("{}+{}i", z.re, z.im))],
            );
            s.push_str("Q,re,im\n");
            for &q in &qs {
                let v = moving_coherent_state(&params, q, z, t).map_err(err)?;
                s.push_str(&format!("{q:.16e},{:.16e},{:.16e}\n", v.re, v.im));
            }
            s
        }
        "moving_momentum" => {
            let p = 1.0;
            let qs = linspace(config.grid.0, config.grid.1, 201);
            let mut s = header(config, what, &[("t", format!("{t}")), ("p", format!("{p}"))]);
            s.push_str("Q,re,im\n");
            for &q in &qs {
                let v = moving_momentum_state(&params, q, p, t).map_err(err)?;
                s.push_str(&format!("{q:.16e},{:.16e},{:.16e}\n", v.re, v.im));
            }
            s
        }
        "action" => {
            let gf = GeneratingFunction::new(Representation::PositionQ, params);
            let action = QuantumAction::new(gf);
            gf.check_time(t).map_err(err)?;
            let b = 0.0;
            let qs = linspace(-5.0, 5.0, 201);
            let mut s = header(
                config,
                what,
                &[("t", format!("{t}")), ("Q", format!("{b}")), ("columns", "q,W,F,ReS,ImS".into())],
            );
            s.push_str("q,W,F,ReS,ImS\n");
            for &q in &qs {
                let w = gf.w(q, b, t).map_err(err)?;
                let f = action.f_value(t).map_err(err)?;
                let sv = action.action(q, b, t).map_err(err)?;
                s.push_str(&format!(
                    "{q:.16e},{w:.16e},{f:.16e},{:.16e},{:.16e}\n",
                    sv.re, sv.im
                ));
            }
            s
        }
        other => {
            return Err(ConfigError(format!(
                "unknown tabulation '{other}' (use kernel, moving_number, moving_coherent, moving_momentum, action)"
            )))
        }
    };

    match &config.out {
        Some(path) => std::fs::write(path, &body)
            .map_err(|e| ConfigError(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{body}"),
    }
    Ok(())
}
