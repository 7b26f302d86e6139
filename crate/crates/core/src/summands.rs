//! Hypergeometric summands shared by the WZ checks and the catalog.

use crate::engine::Engine;
use crate::error::Result;

/// `(92k^2+61k+9) / ((2k+1) 64^k) * C(2k,k) C(3k,k) C(4k,2k)`.
pub fn t_term<E: Engine>(e: &E, k: i64) -> Result<E::Value> {
    let poly = e.int(92 * k * k + 61 * k + 9);
    Ok(poly / (e.int(2 * k + 1) * e.pow(64, k))
        * e.binomial(2 * k, k)?
        * e.binomial(3 * k, k)?
        * e.binomial(4 * k, 2 * k)?)
}

/// `sum_{k=0}^{upper} t_term(k)`.
pub fn t_sum<E: Engine>(e: &E, upper: i64) -> Result<E::Value> {
    e.sum((0..=upper).map(|k| t_term(e, k)))
}

/// The `k`-th term of the sum `B` obtained by telescoping the WZ pair at `n = p`.
pub fn b_term<E: Engine>(e: &E, k: i64) -> Result<E::Value> {
    let p = e.prime() as i64;
    let num = e.int((6 * p - 4 * k - 3) * (p - k))
        * e.pow(4, k)
        * e.binomial(2 * k, k)?
        * e.binomial(2 * p - 2 * k, p - k)?
        * e.binomial(4 * p - 2 * k - 2, 2 * p - k - 1)?;
    let den = e.int(2 * (3 * p - k - 1) * (2 * p - 2 * k - 1)) * e.binomial(3 * p - 1, k)?;
    Ok(num / den)
}

/// `B = sum_{k=0}^{p-1} b_term(k)`.
pub fn b_sum<E: Engine>(e: &E) -> Result<E::Value> {
    let p = e.prime() as i64;
    e.sum((0..p).map(|k| b_term(e, k)))
}

/// `192 p C(3p-1, 2p) / 64^p`, the factor relating `B` to the full `t_term` sum.
pub fn bridge_factor<E: Engine>(e: &E) -> Result<E::Value> {
    let p = e.prime() as i64;
    Ok(e.int(192 * p) * e.binomial(3 * p - 1, 2 * p)? / e.pow(64, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::engine::ExactEngine;

    #[test]
    fn first_terms() {
        let e = ExactEngine::new(3).unwrap();
        assert_eq!(t_term(&e, 0).unwrap(), ratio(9, 1));
        assert_eq!(t_term(&e, 1).unwrap(), ratio(243, 8));
        assert_eq!(t_sum(&e, 2).unwrap(), ratio(9 * 1024 + 243 * 128 + 157185, 1024));
    }
}
