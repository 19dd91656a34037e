//! Minimal library walkthrough: one fuzzy solve at membership level 0.5.

use fsde::{
    fuzzy_euler_maruyama, BrownianPath, FuzzyModelParams, ModelKind, TriangularFuzzyNumber,
};

fn main() -> fsde::Result<()> {
    let params = FuzzyModelParams::new(
        ModelKind::Gbm,
        TriangularFuzzyNumber::new(0.65, 0.75, 0.85)?,
        TriangularFuzzyNumber::new(0.25, 0.30, 0.35)?,
        TriangularFuzzyNumber::crisp(1.0)?,
    )?;
    let path = BrownianPath::generate(0.0, 2f64.powi(-8), 256, 42)?;
    let band = fuzzy_euler_maruyama(&params, &path, 4, 0.5)?;
    let (lo, hi) = band.terminal_bounds();
    println!("X(T) in [{lo}, {hi}]");
    Ok(())
}
