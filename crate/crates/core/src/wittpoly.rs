//! Universal integral Witt polynomials: ghost components and the sum,
//! product, negation and Frobenius polynomials solved from the ghost
//! identities, plus a line-oriented on-disk cache.
//!
//! For a prime p and level n the ghost components are
//! `w_k = sum_{i=0..k} p^i X_i^(p^(k-i))`, and the structure polynomials are
//! characterized by the exact integer identities
//! `w_k(S) = w_k(X) + w_k(Y)`, `w_k(P) = w_k(X) w_k(Y)`,
//! `w_k(N) = -w_k(X)`, `w_k(F) = w_(k+1)(X)`.
//! Every division by p^k in the solving recursion is exact; an inexact
//! division is an internal bug and is reported as such.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Trial-division primality check; inputs are desk scale.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Variable list X_0..X_{n-1}, Y_0..Y_{n-1} shared by all polynomials of a
/// level-n set.
pub fn witt_vars(n: usize) -> Vec<String> {
    let mut vars = Vec::with_capacity(2 * n);
    for i in 0..n {
        vars.push(format!("X_{}", i));
    }
    for i in 0..n {
        vars.push(format!("Y_{}", i));
    }
    vars
}

use crate::intpoly::IntPoly;

/// Ghost polynomial w_k in the 2n-variable list, over the block starting at
/// `offset` (0 for the X block, n for the Y block).
fn ghost_at(p: u64, n: usize, k: usize, offset: usize) -> IntPoly {
    let vars = witt_vars(n);
    let mut acc = IntPoly::zero(vars.clone());
    let mut p_pow = BigInt::one();
    for i in 0..=k {
        let exp = (p as u128).pow((k - i) as u32);
        assert!(exp <= u32::MAX as u128, "exponent overflow");
        let term = IntPoly::variable(vars.clone(), offset + i)
            .pow(exp as u32)
            .scalar_mul(&p_pow);
        acc = acc.add(&term);
        p_pow *= p;
    }
    acc
}

/// w_0..w_{n-1} over the X block.
pub fn ghost_polys(p: u64, n: usize) -> Result<Vec<IntPoly>> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::LevelOutOfRange(0, "n >= 1"));
    }
    Ok((0..n).map(|k| ghost_at(p, n, k, 0)).collect())
}

/// Solve `w_k(Z_0..Z_k) = rhs_k` for Z_k, given Z_0..Z_{k-1}.
/// This is `Z_k = (rhs_k - sum_{i<k} p^i Z_i^(p^(k-i))) / p^k`.
fn solve_ghost_level(p: u64, k: usize, rhs: &IntPoly, lower: &[IntPoly]) -> Result<IntPoly> {
    let mut acc = rhs.clone();
    let mut p_pow = BigInt::one();
    for (i, z) in lower.iter().enumerate() {
        let exp = (p as u128).pow((k - i) as u32);
        acc = acc.sub(&z.pow(exp as u32).scalar_mul(&p_pow));
        p_pow *= p;
    }
    // p_pow is now p^k
    acc.exact_div_int(&p_pow)
}

fn gen_family(
    p: u64,
    n: usize,
    count: usize,
    rhs: impl Fn(usize) -> IntPoly,
) -> Result<Vec<IntPoly>> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::LevelOutOfRange(0, "n >= 1"));
    }
    let mut out: Vec<IntPoly> = Vec::with_capacity(count);
    for k in 0..count {
        let z = solve_ghost_level(p, k, &rhs(k), &out)?;
        out.push(z);
    }
    Ok(out)
}

/// S_0..S_{n-1} with w_k(S) = w_k(X) + w_k(Y).
pub fn gen_sum_polys(p: u64, n: usize) -> Result<Vec<IntPoly>> {
    gen_family(p, n, n, |k| {
        ghost_at(p, n, k, 0).add(&ghost_at(p, n, k, n))
    })
}

/// P_0..P_{n-1} with w_k(P) = w_k(X) * w_k(Y).
pub fn gen_prod_polys(p: u64, n: usize) -> Result<Vec<IntPoly>> {
    gen_family(p, n, n, |k| {
        ghost_at(p, n, k, 0).mul(&ghost_at(p, n, k, n))
    })
}

/// N_0..N_{n-1} with w_k(N) = -w_k(X).
pub fn gen_neg_polys(p: u64, n: usize) -> Result<Vec<IntPoly>> {
    gen_family(p, n, n, |k| ghost_at(p, n, k, 0).neg())
}

/// F_0..F_{n-2} with w_k(F) = w_{k+1}(X). Needs n >= 2.
pub fn gen_frob_polys(p: u64, n: usize) -> Result<Vec<IntPoly>> {
    if n < 2 {
        return Err(Error::LevelOutOfRange(n, "n >= 2 for Frobenius"));
    }
    gen_family(p, n, n - 1, |k| ghost_at(p, n, k + 1, 0))
}

/// A complete generated set at (p, n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittPolySet {
    pub prime: u64,
    pub level: usize,
    pub ghost: Vec<IntPoly>,
    pub sum: Vec<IntPoly>,
    pub product: Vec<IntPoly>,
    pub negation: Vec<IntPoly>,
    /// Empty at level 1 (F maps W_1 to W_0 = 0).
    pub frobenius: Vec<IntPoly>,
}

impl WittPolySet {
    pub fn generate(p: u64, n: usize) -> Result<WittPolySet> {
        Ok(WittPolySet {
            prime: p,
            level: n,
            ghost: ghost_polys(p, n)?,
            sum: gen_sum_polys(p, n)?,
            product: gen_prod_polys(p, n)?,
            negation: gen_neg_polys(p, n)?,
            frobenius: if n >= 2 {
                gen_frob_polys(p, n)?
            } else {
                Vec::new()
            },
        })
    }

    /// Re-check the four ghost identities by exact expansion. The X+Y
    /// variable list is shared, so composition is plain substitution.
    pub fn verify_ghost_identities(&self) -> Result<()> {
        let n = self.level;
        let p = self.prime;
        let vars = witt_vars(n);
        let zero = IntPoly::zero(vars.clone());
        // arguments: X block replaced by the family, Y block left alone
        let with_x_block = |family: &[IntPoly]| -> Vec<IntPoly> {
            let mut args: Vec<IntPoly> = Vec::with_capacity(2 * n);
            for k in 0..n {
                args.push(family.get(k).cloned().unwrap_or_else(|| zero.clone()));
            }
            for j in 0..n {
                args.push(IntPoly::variable(vars.clone(), n + j));
            }
            args
        };
        for k in 0..n {
            let wk = ghost_at(p, n, k, 0);
            let lhs_sum = wk.compose(&with_x_block(&self.sum));
            let rhs_sum = ghost_at(p, n, k, 0).add(&ghost_at(p, n, k, n));
            if lhs_sum != rhs_sum {
                return Err(Error::Internal(format!("sum ghost identity fails at k={}", k)));
            }
            let lhs_prod = wk.compose(&with_x_block(&self.product));
            let rhs_prod = ghost_at(p, n, k, 0).mul(&ghost_at(p, n, k, n));
            if lhs_prod != rhs_prod {
                return Err(Error::Internal(format!("product ghost identity fails at k={}", k)));
            }
            let lhs_neg = wk.compose(&with_x_block(&self.negation));
            if lhs_neg != ghost_at(p, n, k, 0).neg() {
                return Err(Error::Internal(format!("negation ghost identity fails at k={}", k)));
            }
            if k < n - 1 {
                let lhs_frob = wk.compose(&with_x_block(&self.frobenius));
                if lhs_frob != ghost_at(p, n, k + 1, 0) {
                    return Err(Error::Internal(format!(
                        "frobenius ghost identity fails at k={}",
                        k
                    )));
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// On-disk cache: line-oriented text, one monomial per line.
// ---------------------------------------------------------------------------

pub const CACHE_FORMAT_VERSION: &str = "wpoly/1";

pub fn cache_file_name(p: u64, n: usize) -> String {
    format!("witt_p{}_n{}.wpoly", p, n)
}

const FAMILIES: [&str; 5] = ["ghost", "sum", "product", "negation", "frobenius"];

fn family_of<'a>(set: &'a WittPolySet, name: &str) -> &'a [IntPoly] {
    match name {
        "ghost" => &set.ghost,
        "sum" => &set.sum,
        "product" => &set.product,
        "negation" => &set.negation,
        "frobenius" => &set.frobenius,
        _ => unreachable!(),
    }
}

fn encode(set: &WittPolySet) -> String {
    let mut out = String::new();
    let vars = witt_vars(set.level);
    writeln!(out, "{}", CACHE_FORMAT_VERSION).unwrap();
    writeln!(out, "p {}", set.prime).unwrap();
    writeln!(out, "n {}", set.level).unwrap();
    writeln!(out, "vars {}", vars.join(" ")).unwrap();
    for name in FAMILIES {
        for (idx, poly) in family_of(set, name).iter().enumerate() {
            writeln!(out, "poly {} {}", name, idx).unwrap();
            for (exps, coeff) in poly.terms() {
                let exp_str: Vec<String> = exps.iter().map(|e| e.to_string()).collect();
                writeln!(out, "term {} {}", coeff, exp_str.join(" ")).unwrap();
            }
            writeln!(out, "end").unwrap();
        }
    }
    out
}

fn corrupt(path: &Path, reason: impl Into<String>) -> Error {
    Error::CacheCorrupt {
        path: path.to_path_buf(),
        reason: reason.into(),
    }
}

fn decode(path: &Path, text: &str) -> Result<WittPolySet> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| corrupt(path, "empty file"))?;
    if header != CACHE_FORMAT_VERSION {
        return Err(corrupt(path, format!("unknown format version {:?}", header)));
    }
    let parse_kv = |line: Option<&str>, key: &str| -> Result<String> {
        let line = line.ok_or_else(|| corrupt(path, format!("missing {} line", key)))?;
        line.strip_prefix(&format!("{} ", key))
            .map(|v| v.to_string())
            .ok_or_else(|| corrupt(path, format!("expected {} line, got {:?}", key, line)))
    };
    let p: u64 = parse_kv(lines.next(), "p")?
        .parse()
        .map_err(|_| corrupt(path, "bad prime"))?;
    let n: usize = parse_kv(lines.next(), "n")?
        .parse()
        .map_err(|_| corrupt(path, "bad level"))?;
    if n == 0 {
        return Err(corrupt(path, "level 0"));
    }
    let vars_line = parse_kv(lines.next(), "vars")?;
    let vars: Vec<String> = vars_line.split_whitespace().map(|s| s.to_string()).collect();
    if vars != witt_vars(n) {
        return Err(corrupt(path, "variable list mismatch"));
    }

    let mut families: HashMap<String, Vec<IntPoly>> = HashMap::new();
    let mut current: Option<(String, usize, Vec<(Vec<u32>, BigInt)>)> = None;
    for line in lines {
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("poly ") {
            if current.is_some() {
                return Err(corrupt(path, "poly without end"));
            }
            let mut parts = rest.split_whitespace();
            let name = parts
                .next()
                .ok_or_else(|| corrupt(path, "poly missing family"))?
                .to_string();
            if !FAMILIES.contains(&name.as_str()) {
                return Err(corrupt(path, format!("unknown family {:?}", name)));
            }
            let idx: usize = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| corrupt(path, "poly missing index"))?;
            let expected = families.get(&name).map(|v| v.len()).unwrap_or(0);
            if idx != expected {
                return Err(corrupt(path, format!("family {} index {} out of order", name, idx)));
            }
            current = Some((name, idx, Vec::new()));
        } else if let Some(rest) = line.strip_prefix("term ") {
            let cur = current
                .as_mut()
                .ok_or_else(|| corrupt(path, "term outside poly"))?;
            let mut parts = rest.split_whitespace();
            let coeff: BigInt = parts
                .next()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| corrupt(path, "bad coefficient"))?;
            let exps: Option<Vec<u32>> = parts.map(|s| s.parse().ok()).collect();
            let exps = exps.ok_or_else(|| corrupt(path, "bad exponent"))?;
            if exps.len() != 2 * n {
                return Err(corrupt(path, "exponent vector length mismatch"));
            }
            if coeff.is_zero() {
                return Err(corrupt(path, "stored zero coefficient"));
            }
            cur.2.push((exps, coeff));
        } else if line == "end" {
            let (name, _, terms) = current
                .take()
                .ok_or_else(|| corrupt(path, "end outside poly"))?;
            families
                .entry(name)
                .or_default()
                .push(IntPoly::from_terms(witt_vars(n), terms));
        } else {
            return Err(corrupt(path, format!("unrecognized line {:?}", line)));
        }
    }
    if current.is_some() {
        return Err(corrupt(path, "truncated file"));
    }

    let take = |name: &str, want: usize| -> Result<Vec<IntPoly>> {
        let polys = families.remove(name).unwrap_or_default();
        if polys.len() != want {
            return Err(corrupt(
                path,
                format!("family {} has {} polys, expected {}", name, polys.len(), want),
            ));
        }
        Ok(polys)
    };
    Ok(WittPolySet {
        prime: p,
        level: n,
        ghost: take("ghost", n)?,
        sum: take("sum", n)?,
        product: take("product", n)?,
        negation: take("negation", n)?,
        frobenius: take("frobenius", if n >= 2 { n - 1 } else { 0 })?,
    })
}

/// Store a set under `dir`, writing to a temporary file in the same
/// directory and renaming into place so concurrent writers never expose a
/// torn file.
pub fn cache_store(set: &WittPolySet, dir: &Path) -> Result<PathBuf> {
    std::fs::create_dir_all(dir).map_err(|e| Error::CacheIo {
        path: dir.to_path_buf(),
        source: e,
    })?;
    let final_path = dir.join(cache_file_name(set.prime, set.level));
    let tmp_path = dir.join(format!(
        ".{}.tmp.{}.{}",
        cache_file_name(set.prime, set.level),
        std::process::id(),
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_nanos())
            .unwrap_or(0)
    ));
    std::fs::write(&tmp_path, encode(set)).map_err(|e| Error::CacheIo {
        path: tmp_path.clone(),
        source: e,
    })?;
    std::fs::rename(&tmp_path, &final_path).map_err(|e| Error::CacheIo {
        path: final_path.clone(),
        source: e,
    })?;
    Ok(final_path)
}

/// Load a set from `dir`, `Ok(None)` when absent. Corrupt files are
/// reported with their path so the caller can fall back to regeneration.
pub fn cache_load(p: u64, n: usize, dir: &Path) -> Result<Option<WittPolySet>> {
    let path = dir.join(cache_file_name(p, n));
    let text = match std::fs::read_to_string(&path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => {
            return Err(Error::CacheIo {
                path,
                source: e,
            })
        }
    };
    let set = decode(&path, &text)?;
    if set.prime != p || set.level != n {
        return Err(corrupt(&path, "p/n header does not match file name"));
    }
    Ok(Some(set))
}

// ---------------------------------------------------------------------------
// In-process registry so each (p, n) is generated once per process.
// ---------------------------------------------------------------------------

static REGISTRY: OnceLock<Mutex<HashMap<(u64, usize), Arc<WittPolySet>>>> = OnceLock::new();

/// Fetch (or generate) the universal polynomial set for (p, n), consulting
/// the on-disk cache in `cache_dir` when given. Corrupt cache entries fall
/// back to regeneration; failures to write the cache are non-fatal.
pub fn universal_polys(p: u64, n: usize, cache_dir: Option<&Path>) -> Result<Arc<WittPolySet>> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::LevelOutOfRange(0, "n >= 1"));
    }
    let registry = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(set) = registry.lock().unwrap().get(&(p, n)) {
        return Ok(set.clone());
    }
    let mut from_disk = None;
    if let Some(dir) = cache_dir {
        match cache_load(p, n, dir) {
            Ok(found) => from_disk = found,
            // Corrupt or unreadable cache: regenerate.
            Err(_) => from_disk = None,
        }
    }
    let set = match from_disk {
        Some(set) => Arc::new(set),
        None => {
            let set = Arc::new(WittPolySet::generate(p, n)?);
            if let Some(dir) = cache_dir {
                let _ = cache_store(&set, dir);
            }
            set
        }
    };
    registry
        .lock()
        .unwrap()
        .entry((p, n))
        .or_insert_with(|| set.clone());
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn poly_str(p: &IntPoly) -> String {
        format!("{}", p)
    }

    #[test]
    fn rejects_non_prime() {
        assert!(matches!(ghost_polys(4, 2), Err(Error::NotPrime(4))));
        assert!(matches!(gen_sum_polys(1, 2), Err(Error::NotPrime(1))));
    }

    #[test]
    fn ghost_small_cases() {
        let g = ghost_polys(2, 2).unwrap();
        assert_eq!(poly_str(&g[0]), "X_0");
        assert_eq!(poly_str(&g[1]), "2*X_1 + X_0^2");
        let g3 = ghost_polys(3, 2).unwrap();
        assert_eq!(poly_str(&g3[1]), "3*X_1 + X_0^3");
    }

    #[test]
    fn sum_polys_hand_solved() {
        // S_1 = X_1 + Y_1 - X_0*Y_0 at p = 2, from solving
        // w_1(S) = w_1(X) + w_1(Y) by hand:
        // S_1 = X_1 + Y_1 + (X_0^2 + Y_0^2 - (X_0+Y_0)^2)/2.
        let s = gen_sum_polys(2, 2).unwrap();
        assert_eq!(poly_str(&s[0]), "X_0 + Y_0");
        let vars = witt_vars(2);
        let expected = IntPoly::variable(vars.clone(), 1)
            .add(&IntPoly::variable(vars.clone(), 3))
            .sub(&IntPoly::variable(vars.clone(), 0).mul(&IntPoly::variable(vars.clone(), 2)));
        assert_eq!(s[1], expected);

        // p = 3: S_1 = X_1 + Y_1 - X_0^2 Y_0 - X_0 Y_0^2
        let s3 = gen_sum_polys(3, 2).unwrap();
        let x0 = IntPoly::variable(vars.clone(), 0);
        let y0 = IntPoly::variable(vars.clone(), 2);
        let expected3 = IntPoly::variable(vars.clone(), 1)
            .add(&IntPoly::variable(vars.clone(), 3))
            .sub(&x0.pow(2).mul(&y0))
            .sub(&x0.mul(&y0.pow(2)));
        assert_eq!(s3[1], expected3);
    }

    #[test]
    fn prod_polys_hand_solved() {
        let p = gen_prod_polys(2, 2).unwrap();
        assert_eq!(poly_str(&p[0]), "X_0*Y_0");
        // P_1 = X_0^2*Y_1 + Y_0^2*X_1 + 2*X_1*Y_1
        let vars = witt_vars(2);
        let x0 = IntPoly::variable(vars.clone(), 0);
        let x1 = IntPoly::variable(vars.clone(), 1);
        let y0 = IntPoly::variable(vars.clone(), 2);
        let y1 = IntPoly::variable(vars.clone(), 3);
        let expected = x0
            .pow(2)
            .mul(&y1)
            .add(&y0.pow(2).mul(&x1))
            .add(&x1.mul(&y1).scalar_mul(&BigInt::from(2)));
        assert_eq!(p[1], expected);
        let p3 = gen_prod_polys(3, 1).unwrap();
        assert_eq!(poly_str(&p3[0]), "X_0*Y_0");
    }

    #[test]
    fn neg_polys_hand_solved() {
        let n3 = gen_neg_polys(3, 1).unwrap();
        assert_eq!(poly_str(&n3[0]), "-1*X_0");
        let n2 = gen_neg_polys(2, 2).unwrap();
        assert_eq!(poly_str(&n2[0]), "-1*X_0");
        // N_1 = -X_1 - X_0^2 from w_1(N) = -w_1(X)
        let vars = witt_vars(2);
        let expected = IntPoly::variable(vars.clone(), 1)
            .neg()
            .sub(&IntPoly::variable(vars, 0).pow(2));
        assert_eq!(n2[1], expected);
    }

    #[test]
    fn frob_polys_hand_solved() {
        // F_0 = X_0^2 + 2 X_1 at p = 2 (w_0(F) = w_1(X))
        let f2 = gen_frob_polys(2, 2).unwrap();
        assert_eq!(poly_str(&f2[0]), "2*X_1 + X_0^2");
        let f3 = gen_frob_polys(3, 2).unwrap();
        assert_eq!(poly_str(&f3[0]), "3*X_1 + X_0^3");
        assert!(gen_frob_polys(2, 1).is_err());
    }

    #[test]
    fn frobenius_reduces_to_pth_power_mod_p() {
        // Over a characteristic-p coefficient ring all p-multiples vanish,
        // so F_k collapses to X_k^p.
        for p in [2u64, 3] {
            let f = gen_frob_polys(p, 3).unwrap();
            for (k, poly) in f.iter().enumerate() {
                let reduced = poly.reduce_mod(p);
                let expected =
                    IntPoly::variable(witt_vars(3), k).pow(p as u32);
                assert_eq!(reduced, expected, "p={} k={}", p, k);
            }
        }
    }

    #[test]
    fn ghost_identities_hold() {
        for (p, n) in [(2u64, 3usize), (3, 2), (5, 2)] {
            let set = WittPolySet::generate(p, n).unwrap();
            set.verify_ghost_identities().unwrap();
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = WittPolySet::generate(2, 4).unwrap();
        let b = WittPolySet::generate(2, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(encode(&a), encode(&b));
    }

    #[test]
    fn ghost_eval_matches_p_adic_motivation() {
        // p = (0, 1, 0, ...) should have ghost entry p at every level >= 1.
        let set = WittPolySet::generate(2, 3).unwrap();
        let mut args = vec![BigInt::zero(); 6];
        args[1] = BigInt::one();
        assert_eq!(set.ghost[0].eval_int(&args).to_i64(), Some(0));
        assert_eq!(set.ghost[1].eval_int(&args).to_i64(), Some(2));
        assert_eq!(set.ghost[2].eval_int(&args).to_i64(), Some(2));
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("wpoly-test-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let set = WittPolySet::generate(2, 4).unwrap();
        cache_store(&set, &dir).unwrap();
        let loaded = cache_load(2, 4, &dir).unwrap().expect("present");
        assert_eq!(set, loaded);
        // absent entry
        assert!(cache_load(2, 9, &dir).unwrap().is_none());
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn cache_detects_corruption() {
        let dir = std::env::temp_dir().join(format!("wpoly-corrupt-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let set = WittPolySet::generate(2, 2).unwrap();
        let path = cache_store(&set, &dir).unwrap();
        let mut text = std::fs::read_to_string(&path).unwrap();
        text = text.replace(CACHE_FORMAT_VERSION, "wpoly/9");
        std::fs::write(&path, text).unwrap();
        match cache_load(2, 2, &dir) {
            Err(Error::CacheCorrupt { path: p, .. }) => assert_eq!(p, path),
            other => panic!("expected corrupt cache, got {:?}", other),
        }
        let _ = std::fs::remove_dir_all(&dir);
    }

    #[test]
    fn concurrent_store_load_no_torn_file() {
        let dir = std::env::temp_dir().join(format!("wpoly-conc-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let set = WittPolySet::generate(2, 3).unwrap();
        let handles: Vec<_> = (0..8)
            .map(|_| {
                let set = set.clone();
                let dir = dir.clone();
                std::thread::spawn(move || {
                    for _ in 0..10 {
                        cache_store(&set, &dir).unwrap();
                        if let Some(loaded) = cache_load(2, 3, &dir).unwrap() {
                            assert_eq!(loaded, set);
                        }
                    }
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        let _ = std::fs::remove_dir_all(&dir);
    }
}
