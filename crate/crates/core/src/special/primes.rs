/// Primes `<= limit` by the sieve of Eratosthenes.
pub fn sieve(limit: usize) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for p in 2..=limit {
        if composite[p] {
            continue;
        }
        primes.push(p as u64);
        let mut q = p * p;
        while q <= limit {
            composite[q] = true;
            q += p;
        }
    }
    primes
}

/// The first `count` primes congruent to 1 mod 4, in increasing order.
pub fn primes_one_mod_four(count: usize) -> Vec<u64> {
    let mut limit = 64usize;
    loop {
        let found: Vec<u64> = sieve(limit)
            .into_iter()
            .filter(|p| p % 4 == 1)
            .take(count)
            .collect();
        if found.len() == count {
            return found;
        }
        limit *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sieve() {
        assert_eq!(sieve(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(sieve(1).is_empty());
    }

    #[test]
    fn one_mod_four() {
        assert_eq!(primes_one_mod_four(8), vec![5, 13, 17, 29, 37, 41, 53, 61]);
        assert_eq!(primes_one_mod_four(100).len(), 100);
        assert_eq!(primes_one_mod_four(0), Vec::<u64>::new());
    }
}
