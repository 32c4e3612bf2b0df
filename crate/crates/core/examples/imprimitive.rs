//! Groups of monomial 3x3 matrices: diagonal roots of unity with a 3-cycle.
//!
//! cargo run --release --example imprimitive

use minfaith::cyclotomic::Cyclotomic;
use minfaith::error::Result;
use minfaith::repdim::{is_minimally_faithful, rdim_value};
use minfaith::repmodel::{determinant_check, imprimitive_model, is_faithful, CycloMatrix};

fn main() -> Result<()> {
    let w = |k| Cyclotomic::zeta(3, k);
    let one = Cyclotomic::one(3);
    // diag(w, w^2, 1) with the cyclic shift: the Heisenberg group of order 27
    let d = CycloMatrix::diagonal(&[w(1), w(2), one.clone()])?;
    let (g, rho) = imprimitive_model(&[d], true)?;
    println!(
        "order {}, faithful {}, det check {}",
        g.order(),
        is_faithful(&rho),
        determinant_check(&rho)
    );
    println!(
        "rdim {}, report {:?}",
        rdim_value(&g)?,
        is_minimally_faithful(&g)?.degree
    );

    // diag(-1, -1, 1) with the cyclic shift gives A4
    let m = Cyclotomic::from_int(1, -1);
    let d = CycloMatrix::diagonal(&[m.clone(), m, Cyclotomic::one(1)])?;
    let (a4, _) = imprimitive_model(&[d], true)?;
    println!(
        "order {}, minimally faithful degree {:?}",
        a4.order(),
        is_minimally_faithful(&a4)?.degree
    );

    let bad = CycloMatrix::diagonal(&[Cyclotomic::from_int(1, 2), one.clone(), one])?;
    println!(
        "non-root entry: {}",
        imprimitive_model(&[bad], true).unwrap_err()
    );
    Ok(())
}
