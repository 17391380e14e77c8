use std::collections::BTreeSet;

use super::Permutation;
use crate::{Error, Result};

/// Size of the descent block immediately left of the ascent `j`, i.e.
/// `j - 1 - j'` where `j'` is the previous ascent (or 0).
pub fn tau_offset(sigma: &Permutation, j: usize) -> Result<usize> {
    let asc = sigma.ascents();
    if !asc.contains(&j) {
        return Err(Error::NotAnAscent(j));
    }
    let prev = asc.range(..j).next_back().copied().unwrap_or(0);
    Ok(j - 1 - prev)
}

/// The unique 231-avoiding permutation of length `n` with descent set `des`
/// and inverse descent set `ides`.
///
/// Values on descents are `{i' + 1 : i' ∈ ides}`; the remaining values go to
/// the ascents in increasing order. Descents are then filled right to left,
/// each with the smallest unused value exceeding its right neighbour.
pub fn reconstruct_231(n: usize, des: &BTreeSet<usize>, ides: &BTreeSet<usize>) -> Result<Permutation> {
    if n == 0 {
        return Err(Error::InvalidPermutation("length must be positive".into()));
    }
    let in_range = |s: &BTreeSet<usize>| s.iter().all(|&i| (1..n).contains(&i));
    if !in_range(des) || !in_range(ides) {
        return Err(Error::InconsistentDescentData(format!("sets must lie in 1..{n}")));
    }
    if des.len() != ides.len() {
        return Err(Error::InconsistentDescentData(format!(
            "|Des| = {} differs from |iDes| = {}",
            des.len(),
            ides.len()
        )));
    }
    if let Some((i, i2)) = des.iter().zip(ides).find(|(i, i2)| i > i2) {
        return Err(Error::InconsistentDescentData(format!(
            "descent {i} exceeds its paired inverse descent {i2}"
        )));
    }

    let descent_values: BTreeSet<usize> = ides.iter().map(|i| i + 1).collect();
    let mut word = vec![0usize; n + 1];
    let mut assigned = vec![false; n + 1];
    let ascent_values = (1..=n).filter(|v| !descent_values.contains(v));
    let ascent_positions = (1..=n).filter(|i| !des.contains(i));
    for (pos, v) in ascent_positions.zip(ascent_values) {
        word[pos] = v;
        assigned[v] = true;
    }
    for &m in des.iter().rev() {
        let floor = word[m + 1];
        let v = (floor + 1..=n)
            .find(|&v| !assigned[v])
            .ok_or_else(|| Error::Internal(format!("no value left for descent {m}")))?;
        word[m] = v;
        assigned[v] = true;
    }
    word.remove(0);
    let sigma = Permutation::new(word).map_err(|e| Error::Internal(e.to_string()))?;
    if sigma.descents() != *des || sigma.inverse_descents() != *ides {
        return Err(Error::Internal(format!(
            "reconstruction produced {sigma} with mismatched descent data"
        )));
    }
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::{all_permutations, Pattern};

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let sigma = reconstruct_231(6, &set(&[1, 2, 4, 5]), &set(&[1, 3, 4, 5])).unwrap();
        assert_eq!(sigma, p("[6,2,1,5,4,3]"));
        assert_eq!(
            reconstruct_231(5, &set(&[]), &set(&[])).unwrap(),
            Permutation::identity(5)
        );
    }

    #[test]
    fn matches_brute_force_scan() {
        // brute-force oracle: search S_4(231) for the descent data
        let found: Vec<_> = all_permutations(4)
            .filter(|s| Pattern::P231.is_avoided_by(s))
            .filter(|s| s.descents() == set(&[1]) && s.inverse_descents() == set(&[3]))
            .collect();
        assert_eq!(found, vec![p("[4,1,2,3]")]);
        assert_eq!(reconstruct_231(4, &set(&[1]), &set(&[3])).unwrap(), p("[4,1,2,3]"));
    }

    #[test]
    fn rejects_impossible_data() {
        assert!(matches!(
            reconstruct_231(4, &set(&[1, 2]), &set(&[3])),
            Err(Error::InconsistentDescentData(_))
        ));
        assert!(matches!(
            reconstruct_231(4, &set(&[3]), &set(&[1])),
            Err(Error::InconsistentDescentData(_))
        ));
        assert!(matches!(
            reconstruct_231(4, &set(&[4]), &set(&[4])),
            Err(Error::InconsistentDescentData(_))
        ));
    }

    #[test]
    fn tau_offset_examples() {
        let s = p("[6,2,1,5,4,3]");
        assert_eq!(tau_offset(&s, 3).unwrap(), 2);
        assert_eq!(tau_offset(&s, 6).unwrap(), 2);
        assert_eq!(tau_offset(&s, 1), Err(Error::NotAnAscent(1)));
        let id = Permutation::identity(5);
        for j in 1..=5 {
            assert_eq!(tau_offset(&id, j).unwrap(), 0);
        }
    }
}
