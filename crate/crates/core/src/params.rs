//! Parameter sets and their derived quantities.
//!
//! The production set (`supertubos`) targets 128-bit classical security.
//! The toy sets keep every structural relation intact at a size where
//! tests run in milliseconds; their rejection sampling runs in an
//! always-accept mode, so they are INSECURE and flagged as such.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;

/// Salt length in bytes, fixed across parameter sets so wire formats stay
/// size-stable.
pub const SALT_BYTES: usize = 32;

/// Seed length in bytes for compressed secret keys, likewise fixed.
pub const SEED_BYTES: usize = 32;

/// A random salt.
pub type Salt = [u8; SALT_BYTES];

/// A key-generation seed.
pub type Seed = [u8; SEED_BYTES];

/// One parameter set. The field size is always 3.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ParamSet {
    /// Registry identifier carried in wire headers.
    pub id: u8,
    pub name: &'static str,
    /// Classical security parameter; digests are `2 * lambda` bits.
    pub lambda: usize,
    /// Code length (even).
    pub n: usize,
    /// Signature weight.
    pub w: usize,
    /// Code dimension, `k = k_u + k_v`.
    pub k: usize,
    pub k_u: usize,
    pub k_v: usize,
    /// Free-column slack absorbed by the decoder's uniform buffer.
    pub d: usize,
    /// Decoder bounds on the V-stage weight statistic.
    pub t_min: usize,
    pub t_max: usize,
    /// Set for toy parameters: always-accept rejection sampling, no
    /// security claim.
    pub insecure_toy: bool,
}

impl ParamSet {
    #[inline]
    pub fn half_n(&self) -> usize {
        self.n / 2
    }

    /// Syndrome length `n - k`.
    #[inline]
    pub fn nk(&self) -> usize {
        self.n - self.k
    }

    /// Row count of the U-code parity check, `n/2 - k_u`.
    #[inline]
    pub fn rows_u(&self) -> usize {
        self.half_n() - self.k_u
    }

    /// Row count of the V-code parity check, `n/2 - k_v`.
    #[inline]
    pub fn rows_v(&self) -> usize {
        self.half_n() - self.k_v
    }

    /// `k_u - d`.
    #[inline]
    pub fn ku_prime(&self) -> usize {
        self.k_u - self.d
    }

    /// `k_v - d`.
    #[inline]
    pub fn kv_prime(&self) -> usize {
        self.k_v - self.d
    }

    /// Digest length in bytes (`2 * lambda` bits).
    #[inline]
    pub fn digest_bytes(&self) -> usize {
        self.lambda / 4
    }

    /// Number of leading syndrome trits carried by exact digest
    /// transcoding: the largest `mu` with `3^mu <= 2^(2*lambda)`, capped
    /// at the syndrome length for small sets.
    pub fn mu(&self) -> usize {
        mu_of_digest_bits(2 * self.lambda).min(self.nk())
    }

    /// Structural invariants. Checked by the registry test suite and at
    /// key generation.
    pub fn validate(&self) -> Result<(), String> {
        if self.n % 2 != 0 {
            return Err(format!("{}: n must be even", self.name));
        }
        if self.k != self.k_u + self.k_v {
            return Err(format!("{}: k != k_u + k_v", self.name));
        }
        if self.w >= self.n {
            return Err(format!("{}: w must be below n", self.name));
        }
        if self.w % 2 != 0 {
            return Err(format!("{}: decoder statistics assume even w", self.name));
        }
        if self.k_u <= self.d || self.k_v <= self.d {
            return Err(format!("{}: d must be below k_u and k_v", self.name));
        }
        if self.t_max > self.half_n() || self.t_min > self.t_max {
            return Err(format!("{}: bad t range", self.name));
        }
        if self.insecure_toy {
            // Exact decoder-success weight relation, integer form of
            // w = 2 k_u + (2/3)(n - 2 k_u). The production set does not
            // satisfy it verbatim (its w also reflects the rejection
            // sampling trimming), so it is enforced for toys only.
            if 3 * self.w != 6 * self.k_u + 2 * (self.n - 2 * self.k_u) {
                return Err(format!("{}: toy weight relation violated", self.name));
            }
        }
        if self.lambda % 8 != 0 {
            return Err(format!("{}: lambda must be a whole number of bytes", self.name));
        }
        Ok(())
    }
}

/// Largest `mu` with `3^mu <= 2^bits`.
pub fn mu_of_digest_bits(bits: usize) -> usize {
    let bound = BigUint::one() << bits;
    let mut p = BigUint::one();
    let mut mu = 0;
    loop {
        p *= 3u32;
        if p > bound {
            return mu;
        }
        mu += 1;
    }
}

/// The 128-bit-security production parameter set.
pub const SUPERTUBOS: ParamSet = ParamSet {
    id: 0x01,
    name: "supertubos",
    lambda: 128,
    n: 8492,
    w: 7980,
    k: 5605,
    k_u: 3558,
    k_v: 2047,
    d: 81,
    t_min: 1953,
    t_max: 2745,
    insecure_toy: false,
};

/// Tiny insecure set for fast end-to-end tests.
pub const TOY48: ParamSet = ParamSet {
    id: 0x81,
    name: "toy48",
    lambda: 16,
    n: 48,
    w: 44,
    k: 30,
    k_u: 18,
    k_v: 12,
    d: 2,
    t_min: 0,
    t_max: 24,
    insecure_toy: true,
};

/// Mid-size insecure set, still fast, for statistics smoke tests.
pub const TOY96: ParamSet = ParamSet {
    id: 0x82,
    name: "toy96",
    lambda: 16,
    n: 96,
    w: 88,
    k: 60,
    k_u: 36,
    k_v: 24,
    d: 4,
    t_min: 0,
    t_max: 48,
    insecure_toy: true,
};

const REGISTRY: [&ParamSet; 3] = [&SUPERTUBOS, &TOY48, &TOY96];

/// All registered parameter sets.
pub fn all() -> impl Iterator<Item = &'static ParamSet> {
    REGISTRY.into_iter()
}

/// The production parameter set.
pub fn supertubos() -> &'static ParamSet {
    &SUPERTUBOS
}

/// Looks up a registered toy set by name.
pub fn toy(name: &str) -> Result<&'static ParamSet, Error> {
    match by_name(name) {
        Ok(p) if p.insecure_toy => Ok(p),
        _ => Err(Error::UnknownParamSet),
    }
}

/// Registry lookup by wire identifier.
pub fn by_id(id: u8) -> Result<&'static ParamSet, Error> {
    REGISTRY
        .into_iter()
        .find(|p| p.id == id)
        .ok_or(Error::UnknownParamSet)
}

/// Registry lookup by name.
pub fn by_name(name: &str) -> Result<&'static ParamSet, Error> {
    REGISTRY
        .into_iter()
        .find(|p| p.name == name)
        .ok_or(Error::UnknownParamSet)
}

/// Default rejection-table file for a parameter set: `$WAVELET_TABLES`
/// when set, else `data/<name>.tables` relative to the working directory.
pub fn default_tables_path(params: &ParamSet) -> std::path::PathBuf {
    if let Ok(dir) = std::env::var("WAVELET_TABLES") {
        return std::path::Path::new(&dir).join(format!("{}.tables", params.name));
    }
    std::path::Path::new("data").join(format!("{}.tables", params.name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_valid_and_ids_unique() {
        let mut ids = std::collections::HashSet::new();
        let mut names = std::collections::HashSet::new();
        for p in all() {
            p.validate().unwrap();
            assert!(ids.insert(p.id), "duplicate id {}", p.id);
            assert!(names.insert(p.name), "duplicate name {}", p.name);
            assert_eq!(by_id(p.id).unwrap().name, p.name);
            assert_eq!(by_name(p.name).unwrap().id, p.id);
        }
    }

    #[test]
    fn supertubos_constants() {
        let p = supertubos();
        assert_eq!(p.k_u + p.k_v, 5605);
        assert_eq!(p.nk(), 2887);
        assert_eq!(p.half_n(), 4246);
        assert_eq!(p.rows_u(), 688);
        assert_eq!(p.rows_v(), 2199);
        assert_eq!((p.t_min, p.t_max), (1953, 2745));
        // The toy weight relation deliberately fails here: the published
        // weight already accounts for the rejection-sampling trimming.
        assert_ne!(3 * p.w, 6 * p.k_u + 2 * (p.n - 2 * p.k_u));
    }

    #[test]
    fn toy48_satisfies_weight_relation() {
        let p = toy("toy48").unwrap();
        assert_eq!(3 * p.w, 6 * p.k_u + 2 * (p.n - 2 * p.k_u));
        assert_eq!(3 * 44, 108 + 24);
        assert!(p.insecure_toy);
        assert_eq!((p.k, p.nk()), (30, 18));
    }

    #[test]
    fn mu_for_lambda_128_is_161() {
        assert_eq!(mu_of_digest_bits(256), 161);
        // Exact inequality 3^161 <= 2^256 < 3^162.
        let p161 = BigUint::from(3u32).pow(161);
        let p162 = BigUint::from(3u32).pow(162);
        let b256 = BigUint::one() << 256;
        assert!(p161 <= b256 && b256 < p162);
        assert_eq!(supertubos().mu(), 161);
    }

    #[test]
    fn toy_mu_is_capped_by_syndrome_length() {
        // 2*lambda = 32 bits would carry 20 trits, but toy48 syndromes
        // only have 18.
        assert_eq!(mu_of_digest_bits(32), 20);
        assert_eq!(TOY48.mu(), 18);
    }

    #[test]
    fn lookups_reject_unknown() {
        assert!(by_id(0xff).is_err());
        assert!(by_name("nope").is_err());
        assert!(toy("supertubos").is_err());
    }
}
