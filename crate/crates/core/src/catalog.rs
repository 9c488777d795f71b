//! Built-in groups and readers for user-supplied ones.
//!
//! Names: `C<n>` cyclic, `D<2n>` dihedral of order `2n`, `Q<2^t>` generalized
//! quaternion, `S<k>`/`A<k>` symmetric/alternating on `k <= 6` points, `V4`
//! Klein four-group, `F<pq>` the affine group `x -> ux + b` over `Z_p` with
//! `u` of multiplicative order `q`, and products joined by `x` (`S3xC3`).

use std::path::Path;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Elem, Group, Limits, Perm};

pub use crate::group::{parse_cycle_notation, print_cycle_notation};

/// Largest point count for the symmetric and alternating recipes.
pub const MAX_SYMMETRIC_DEGREE: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Recipe {
    Cyclic(usize),
    /// Dihedral group of the given (even) order.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    /// Generalized quaternion group of order `2^t`, `t >= 3`.
    Quaternion(usize),
    Klein,
    FrobeniusMetacyclic {
        p: u64,
        q: u64,
    },
    Product(Vec<Recipe>),
}

impl Recipe {
    pub fn name(&self) -> String {
        match self {
            Recipe::Cyclic(n) => format!("C{n}"),
            Recipe::Dihedral(n) => format!("D{n}"),
            Recipe::Symmetric(k) => format!("S{k}"),
            Recipe::Alternating(k) => format!("A{k}"),
            Recipe::Quaternion(n) => format!("Q{n}"),
            Recipe::Klein => "V4".into(),
            Recipe::FrobeniusMetacyclic { p, q } => format!("F{}", p * q),
            Recipe::Product(parts) => parts.iter().map(Recipe::name).collect::<Vec<_>>().join("x"),
        }
    }

    pub fn expected_order(&self) -> usize {
        match self {
            Recipe::Cyclic(n) | Recipe::Dihedral(n) | Recipe::Quaternion(n) => *n,
            Recipe::Symmetric(k) => (1..=*k).product(),
            Recipe::Alternating(k) => ((1..=*k).product::<usize>() / 2).max(1),
            Recipe::Klein => 4,
            Recipe::FrobeniusMetacyclic { p, q } => (p * q) as usize,
            Recipe::Product(parts) => parts.iter().map(Recipe::expected_order).product(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub recipe: Recipe,
    pub expected_order: usize,
}

impl CatalogEntry {
    pub fn new(recipe: Recipe) -> Self {
        CatalogEntry {
            name: recipe.name(),
            expected_order: recipe.expected_order(),
            recipe,
        }
    }

    pub fn build(&self) -> Result<Group> {
        build_recipe(&self.recipe)
    }
}

/// Builds a catalog group from its name, e.g. `"S4"`, `"F20"` or `"S3xC3"`.
pub fn build(name: &str) -> Result<Group> {
    build_recipe(&parse_name(name)?)
}

/// Parses a catalog name into its recipe, validating parameters.
pub fn parse_name(name: &str) -> Result<Recipe> {
    let parts: Vec<&str> = name.trim().split('x').collect();
    if parts.len() > 1 {
        return parts
            .iter()
            .map(|p| parse_atom(p, name))
            .collect::<Result<Vec<_>>>()
            .map(Recipe::Product);
    }
    parse_atom(parts[0], name)
}

fn parse_atom(atom: &str, full: &str) -> Result<Recipe> {
    let unknown = || Error::UnknownName(full.to_string());
    if atom == "V4" {
        return Ok(Recipe::Klein);
    }
    let mut chars = atom.chars();
    let family = chars.next().ok_or_else(unknown)?;
    let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
    let recipe = match family {
        'C' => Recipe::Cyclic(n),
        'D' => Recipe::Dihedral(n),
        'S' => Recipe::Symmetric(n),
        'A' => Recipe::Alternating(n),
        'Q' => Recipe::Quaternion(n),
        'F' => {
            // the kernel prime is the largest prime factor since q < p
            let p = *arith::prime_divisors(n as u64).last().ok_or_else(unknown)?;
            Recipe::FrobeniusMetacyclic { p, q: n as u64 / p }
        }
        _ => return Err(unknown()),
    };
    check_params(&recipe)?;
    Ok(recipe)
}

fn check_params(recipe: &Recipe) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidParams(msg));
    match *recipe {
        Recipe::Cyclic(0) => bad("cyclic order must be positive".into()),
        Recipe::Dihedral(n) if n < 2 || n % 2 == 1 => bad(format!(
            "dihedral order must be even and at least 2, got {n}"
        )),
        Recipe::Symmetric(k) | Recipe::Alternating(k) if k == 0 || k > MAX_SYMMETRIC_DEGREE => bad(
            format!("degree must be in 1..={MAX_SYMMETRIC_DEGREE}, got {k}"),
        ),
        Recipe::Quaternion(n) if n < 8 || !n.is_power_of_two() => bad(format!(
            "generalized quaternion order must be 2^t with t >= 3, got {n}"
        )),
        Recipe::FrobeniusMetacyclic { p, q } => {
            if !arith::is_prime(p) {
                bad(format!("{p} is not prime"))
            } else if q < 2 || (p - 1) % q != 0 {
                bad(format!(
                    "q = {q} must be at least 2 and divide p - 1 = {}",
                    p - 1
                ))
            } else {
                Ok(())
            }
        }
        Recipe::Product(ref parts) if parts.is_empty() => bad("empty product".into()),
        Recipe::Product(ref parts) => parts.iter().try_for_each(check_params),
        _ => Ok(()),
    }
}

pub fn build_recipe(recipe: &Recipe) -> Result<Group> {
    check_params(recipe)?;
    let g = match *recipe {
        Recipe::Cyclic(n) => cyclic(n),
        Recipe::Dihedral(n) => dihedral(n / 2),
        Recipe::Quaternion(n) => quaternion(n / 4),
        Recipe::Klein => cyclic(2)
            .with_name("C2")
            .direct_product(&cyclic(2).with_name("C2"), 4)?,
        Recipe::Symmetric(k) => {
            let gens = match k {
                1 => vec![],
                2 => vec![Perm::from_cycles(2, &[vec![0, 1]])?],
                _ => vec![
                    Perm::from_cycles(k, &[(0..k).collect()])?,
                    Perm::from_cycles(k, &[vec![0, 1]])?,
                ],
            };
            Group::from_permutations(&gens, Limits::default().max_order)?
        }
        Recipe::Alternating(k) => {
            let gens = (2..k)
                .map(|i| Perm::from_cycles(k, &[vec![0, 1, i]]))
                .collect::<Result<Vec<_>>>()?;
            Group::from_permutations(&gens, Limits::default().max_order)?
        }
        Recipe::FrobeniusMetacyclic { p, q } => affine(p, q),
        Recipe::Product(ref parts) => {
            let mut acc = build_recipe(&parts[0])?;
            for part in &parts[1..] {
                acc = acc.direct_product(&build_recipe(part)?, Limits::default().max_order)?;
            }
            acc
        }
    };
    let name = recipe.name();
    Ok(g.with_source(format!("catalog:{name}")).with_name(name))
}

fn power_label(base: &str, i: usize) -> String {
    match i {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{i}"),
    }
}

fn join_label(parts: &[String]) -> String {
    let parts: Vec<&str> = parts
        .iter()
        .map(String::as_str)
        .filter(|s| !s.is_empty())
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn cyclic(n: usize) -> Group {
    let table = (0..n * n).map(|k| ((k / n + k % n) % n) as Elem).collect();
    let labels = (0..n).map(|i| join_label(&[power_label("a", i)])).collect();
    Group::from_trusted_table(table, 0, labels)
}

/// `r^i s^j` has id `i + n j`; `s r s^-1 = r^-1`.
fn dihedral(n: usize) -> Group {
    let order = 2 * n;
    let mut table = vec![0; order * order];
    for x in 0..order {
        let (i, a) = (x % n, x / n);
        for y in 0..order {
            let (k, b) = (y % n, y / n);
            let r = if a == 0 { (i + k) % n } else { (i + n - k) % n };
            table[x * order + y] = (r + n * ((a + b) % 2)) as Elem;
        }
    }
    let labels = (0..order)
        .map(|x| join_label(&[power_label("r", x % n), power_label("s", x / n)]))
        .collect();
    Group::from_trusted_table(table, 0, labels)
}

/// `a^i b^j` has id `i + 2n j` with `a` of order `2n`, `b^2 = a^n`,
/// `b a b^-1 = a^-1`.
fn quaternion(n: usize) -> Group {
    let m = 2 * n;
    let order = 2 * m;
    let mut table = vec![0; order * order];
    for x in 0..order {
        let (i, a) = (x % m, x / m);
        for y in 0..order {
            let (k, b) = (y % m, y / m);
            let (mut r, mut s) = if a == 0 {
                ((i + k) % m, b)
            } else {
                ((i + m - k) % m, 1 + b)
            };
            if s == 2 {
                r = (r + n) % m;
                s = 0;
            }
            table[x * order + y] = (r + m * s) as Elem;
        }
    }
    let labels = (0..order)
        .map(|x| join_label(&[power_label("a", x % m), power_label("b", x / m)]))
        .collect();
    Group::from_trusted_table(table, 0, labels)
}

/// Maps `x -> u x + b` over `Z_p` with `u` in the order-`q` subgroup of the
/// units. `(b, u^j)` has id `b + p j`; the product `f g` is `x -> f(g(x))`.
fn affine(p: u64, q: u64) -> Group {
    let root = primitive_root(p);
    let step = pow_mod(root, (p - 1) / q, p);
    let units: Vec<u64> = (0..q).map(|j| pow_mod(step, j, p)).collect();
    let unit_index = |u: u64| {
        units
            .iter()
            .position(|&v| v == u)
            .expect("closed under products")
    };
    let (p_us, order) = (p as usize, (p * q) as usize);
    let mut table = vec![0; order * order];
    for x in 0..order {
        let (b1, u1) = ((x % p_us) as u64, units[x / p_us]);
        for y in 0..order {
            let (b2, u2) = ((y % p_us) as u64, units[y / p_us]);
            let b = (u1 * b2 + b1) % p;
            let u = u1 * u2 % p;
            table[x * order + y] = (b as usize + p_us * unit_index(u)) as Elem;
        }
    }
    let labels = (0..order)
        .map(|x| format!("x->{}x+{}", units[x / p_us], x % p_us))
        .collect();
    Group::from_trusted_table(table, 0, labels)
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

fn primitive_root(p: u64) -> u64 {
    let factors = arith::prime_divisors(p - 1);
    (1..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, (p - 1) / f, p) != 1))
        .expect("every prime has a primitive root")
}

/// Every built-in entry of order at most `max_order`, sorted by order then name.
pub fn standard_corpus(max_order: usize) -> Vec<CatalogEntry> {
    let mut recipes: Vec<Recipe> = Vec::new();
    recipes.extend((1..=32).map(Recipe::Cyclic));
    // D6 is S3 under another name
    recipes.extend((4..=30).map(|n| Recipe::Dihedral(2 * n)));
    recipes.extend([8, 16, 32, 64, 128].map(Recipe::Quaternion));
    recipes.extend([3, 4, 5].map(Recipe::Symmetric));
    recipes.extend([4, 5].map(Recipe::Alternating));
    recipes.push(Recipe::Klein);
    for p in (3..=max_order as u64).filter(|&p| arith::is_prime(p)) {
        for q in arith::divisors(p - 1).into_iter().filter(|&q| q >= 3) {
            recipes.push(Recipe::FrobeniusMetacyclic { p, q });
        }
    }
    for name in [
        "S3xS3", "S3xC3", "S3xC5", "A4xC2", "A4xC3", "S4xC2", "S4xC3", "Q8xC3", "D8xC3", "F20xC3",
        "F21xC2", "C2xC2xC2", "C3xC3", "C2xC4", "A5xC2",
    ] {
        recipes.push(parse_name(name).expect("built-in name"));
    }
    let mut entries: Vec<CatalogEntry> = recipes
        .into_iter()
        .map(CatalogEntry::new)
        .filter(|e| e.expected_order <= max_order)
        .collect();
    entries.sort_by(|a, b| (a.expected_order, &a.name).cmp(&(b.expected_order, &b.name)));
    entries.dedup_by(|a, b| a.name == b.name);
    entries
}

/// Reads a Cayley table: one row per line, comma-separated 0-based ids,
/// row `i` column `j` holding `i * j`. LF or CRLF line endings, no header.
pub fn load_cayley_csv(path: impl AsRef<Path>) -> Result<Group> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    let g = parse_cayley_csv(&text)?;
    Ok(g.with_source(format!("cayley:{}", path.display())))
}

pub fn parse_cayley_csv(text: &str) -> Result<Group> {
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    let end = lines
        .iter()
        .rposition(|l| !l.is_empty())
        .map_or(0, |i| i + 1);
    let lines = &lines[..end];
    let n = lines.len();
    let mut table = Vec::with_capacity(n);
    for (row, line) in lines.iter().enumerate() {
        let cells = line
            .split(',')
            .map(|c| {
                c.trim().parse::<usize>().map_err(|_| Error::Parse {
                    row,
                    msg: format!("{:?} is not a non-negative integer", c.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if cells.len() != n {
            return Err(Error::Parse {
                row,
                msg: format!("expected {n} entries, found {}", cells.len()),
            });
        }
        table.push(cells);
    }
    if n == 0 {
        return Err(Error::Parse {
            row: 0,
            msg: "empty table".into(),
        });
    }
    Group::from_cayley_table(&table)
}
