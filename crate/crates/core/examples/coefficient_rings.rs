//! Laurent polynomials, Gaussian binomials and their values at `v = sqrt q`,
//! plus an exact kernel over `Q(v)`.

use quiverhall::qring::{evaluate_at_sqrt_q, gaussian_binomial, ExactMatrix, Prime, RationalFunction};

fn main() -> quiverhall::Result<()> {
    let b = gaussian_binomial(4, 2)?;
    println!("[4 choose 2]_v = {b}");
    println!("bar-invariant: {}", b.bar() == b);
    for p in [2, 3] {
        let q = Prime::new(p)?;
        // times v^(k(n-k)) it counts 2-planes in F_q^4
        let planes = &evaluate_at_sqrt_q(&b, q) * &quiverhall::qring::QuadraticFieldElement::sqrt_q_pow(4, q);
        println!("2-planes in F_{p}^4: {planes}");
    }

    let v = RationalFunction::v_pow(1);
    let one = RationalFunction::one();
    let m = ExactMatrix::from_rows(vec![vec![one.clone(), v.clone()], vec![v.clone(), &v * &v]], 2, &one)?;
    println!("rank {} with kernel {:?}", m.rank(), m.kernel().iter().map(|k| k.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    Ok(())
}
