//! Run configuration. Everything comes from flags; nothing is read from the
//! environment, so a command line fully determines its output.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Human,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub tol: f64,
    pub eps: f64,
    pub restarts: u64,
    pub seed: u64,
    pub output: OutputMode,
}

impl Config {
    pub fn new(
        tol: f64,
        eps: f64,
        restarts: u64,
        seed: u64,
        output: OutputMode,
    ) -> Result<Self, String> {
        if !(tol.is_finite() && tol > 0.0) {
            return Err(format!("error: --tol must be positive, got {tol}"));
        }
        if !(eps.is_finite() && eps > 0.0) {
            return Err(format!("error: --eps must be positive, got {eps}"));
        }
        if restarts == 0 {
            return Err("error: --restarts must be at least 1".into());
        }
        Ok(Config {
            tol,
            eps,
            restarts,
            seed,
            output,
        })
    }
}
