//! The scalar kernels: Gamma function, Lambert W, bisection and the cubic root finder.
//!
//! ```text
//! cargo run --example numerics
//! ```

use secrecy_core::numerics::{
    bisect, cardano_principal_root, cubic, cubic_root_in_interval, gamma_fn, lambert_w0, Bracket, DEFAULT_TOL,
};

fn main() -> secrecy_core::Result<()> {
    for x in [0.5, 1.5, 1.25] {
        println!("Gamma({x}) = {:.15}", gamma_fn(x)?);
    }
    for y in [0.0, 1.0, 10.0, 1e6] {
        let w = lambert_w0(y)?;
        println!("W({y:e}) = {w:.15}, w e^w - y = {:.1e}", w * w.exp() - y);
    }
    let f = |x: f64| x.cos() - x;
    let root = bisect(f, Bracket::new(f, 0.0, 1.0)?, DEFAULT_TOL)?;
    println!("cos(x) = x at {root:.12}");
    // (x - 1)(x - 2)(x - 3): three real roots, the principal Cardano branch gives the largest
    let (a, b, c) = (-6.0, 11.0, -6.0);
    println!("principal root {:.15}", cardano_principal_root(a, b, c));
    let top = cubic_root_in_interval(a, b, c, 2.5, 3.5)?;
    println!("root in [2.5, 3.5] = {top:.15}, residual {:.1e}", cubic(a, b, c, top));
    Ok(())
}
