// SPDX-License-Identifier: Apache-2.0

use num_bigint::BigInt;
use num_traits::Zero;

use super::CombinatError;

pub const PERMANENT_MAX_ORDER: usize = 30;

/// Permanent of a square 0/1 matrix by Ryser's formula
///
/// `per(A) = (−1)^n Σ_{S ⊆ cols} (−1)^{|S|} Π_i Σ_{j∈S} a_ij`,
///
/// visiting the column subsets in Gray-code order so each step updates the
/// row sums by a single column. Accumulates in `i128` and spills into a
/// `BigInt` on overflow.
pub fn ryser_permanent(a: &[Vec<u8>]) -> Result<BigInt, CombinatError> {
    let n = a.len();
    if n > PERMANENT_MAX_ORDER {
        return Err(CombinatError::TooLarge { what: "ryser_permanent", n, cap: PERMANENT_MAX_ORDER });
    }
    for (row, r) in a.iter().enumerate() {
        if r.len() != n {
            return Err(CombinatError::NotSquare { row, len: r.len(), n });
        }
        if let Some((col, &value)) = r.iter().enumerate().find(|(_, &x)| x > 1) {
            return Err(CombinatError::NotBinary { row, col, value });
        }
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }

    let mut row_sums = vec![0i64; n];
    let mut gray: u64 = 0;
    let mut acc = Accumulator::default();
    for step in 1u64..(1u64 << n) {
        let col = step.trailing_zeros() as usize;
        gray ^= 1 << col;
        let delta = if gray >> col & 1 == 1 { 1 } else { -1 };
        for (sum, row) in row_sums.iter_mut().zip(a) {
            *sum += delta * i64::from(row[col]);
        }
        if row_sums.contains(&0) {
            continue;
        }
        let negative = gray.count_ones() % 2 == 1;
        acc.add_product(&row_sums, negative);
    }
    let total = acc.finish();
    Ok(if n % 2 == 1 { -total } else { total })
}

#[derive(Default)]
struct Accumulator {
    small: i128,
    big: BigInt,
}

impl Accumulator {
    fn add_product(&mut self, factors: &[i64], negative: bool) {
        let product = factors.iter().try_fold(1i128, |p, &f| p.checked_mul(i128::from(f)));
        match product {
            Some(p) => {
                let p = if negative { -p } else { p };
                match self.small.checked_add(p) {
                    Some(s) => self.small = s,
                    None => {
                        self.big += BigInt::from(self.small) + BigInt::from(p);
                        self.small = 0;
                    }
                }
            }
            None => {
                let p: BigInt = factors.iter().map(|&f| BigInt::from(f)).product();
                if negative {
                    self.big -= p;
                } else {
                    self.big += p;
                }
            }
        }
    }

    fn finish(self) -> BigInt {
        let total = self.big + BigInt::from(self.small);
        if total.is_zero() {
            BigInt::zero()
        } else {
            total
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let id: Vec<Vec<u8>> = (0..5).map(|i| (0..5).map(|j| u8::from(i == j)).collect()).collect();
        assert_eq!(ryser_permanent(&id).unwrap(), BigInt::from(1));
        assert_eq!(ryser_permanent(&vec![vec![1; 3]; 3]).unwrap(), BigInt::from(6));
        assert_eq!(ryser_permanent(&[]).unwrap(), BigInt::from(1));
        assert_eq!(ryser_permanent(&[vec![0]]).unwrap(), BigInt::from(0));
    }

    #[test]
    fn large_all_ones_overflows_into_bigint() {
        // per(J_n) = n!; the row-sum products reach 22^22 > i128::MAX
        let j = vec![vec![1u8; 22]; 22];
        let factorial: BigInt = (1..=22u32).map(BigInt::from).product();
        assert_eq!(ryser_permanent(&j).unwrap(), factorial);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(ryser_permanent(&vec![vec![0u8; 31]; 31]), Err(CombinatError::TooLarge { .. })));
        assert!(matches!(ryser_permanent(&[vec![1, 0], vec![1]]), Err(CombinatError::NotSquare { .. })));
        assert!(matches!(ryser_permanent(&[vec![2]]), Err(CombinatError::NotBinary { .. })));
    }
}
