//! Property classification of an algebra's multiplication.
//!
//! Identities that are multilinear are decided exactly on basis tuples in
//! integer arithmetic. Power-associativity and reversibility additionally use
//! seeded random samples, so the report records the seed.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::idempotent::{
    find_idempotents, random_element, structured_starts, zero_divisor_partner,
};
use crate::algebra::{AlgebraSpec, Element};

pub const SAMPLES: usize = 1000;
const SAMPLE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    NoWithWitness,
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Yes
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.holds() { "yes" } else { "no" })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub property: &'static str,
    pub elements: Vec<Element>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub algebra: String,
    pub seed: u64,
    pub distributive: Verdict,
    pub associative: Verdict,
    pub alternative: Verdict,
    pub flexible: Verdict,
    pub power_associative: Verdict,
    pub commutative: Verdict,
    pub reversible: Verdict,
    pub witnesses: Vec<Witness>,
}

impl PropertyReport {
    /// `(name, verdict)` pairs in lexicographic order of the name.
    pub fn properties(&self) -> [(&'static str, Verdict); 7] {
        [
            ("alternative", self.alternative),
            ("associative", self.associative),
            ("commutative", self.commutative),
            ("distributive", self.distributive),
            ("flexible", self.flexible),
            ("power_associative", self.power_associative),
            ("reversible", self.reversible),
        ]
    }

    pub fn get(&self, name: &str) -> Option<Verdict> {
        self.properties()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| v)
    }

    /// Plain-text form: a `#` header naming algebra and seed, then one
    /// `property=yes|no` line per property.
    pub fn to_text(&self) -> String {
        let mut out = format!("# algebra={} seed={}\n", self.algebra, self.seed);
        for (name, v) in self.properties() {
            let _ = writeln!(out, "{name}={v}");
        }
        out
    }
}

type Coords = Vec<i64>;

struct Exact<'a> {
    spec: &'a AlgebraSpec,
}

impl Exact<'_> {
    fn unit(&self, r: usize) -> Coords {
        let mut v = vec![0; self.spec.dim()];
        v[r] = 1;
        v
    }

    fn mul(&self, a: &Coords, b: &Coords) -> Coords {
        self.spec.mul_coords(a, b)
    }

    /// `[a, b, c] = (ab)c - a(bc)` on basis units.
    fn associator(&self, r: usize, s: usize, t: usize) -> Coords {
        let (a, b, c) = (self.unit(r), self.unit(s), self.unit(t));
        let left = self.mul(&self.mul(&a, &b), &c);
        let right = self.mul(&a, &self.mul(&b, &c));
        left.iter().zip(&right).map(|(x, y)| x - y).collect()
    }
}

fn add(a: Coords, b: Coords) -> Coords {
    a.iter().zip(&b).map(|(x, y)| x + y).collect()
}

fn is_zero(v: &Coords) -> bool {
    v.iter().all(|c| *c == 0)
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |r| (0..n).flat_map(move |s| (0..n).map(move |t| (r, s, t))))
}

pub fn classify(spec: &Arc<AlgebraSpec>, seed: u64) -> PropertyReport {
    let n = spec.dim();
    let exact = Exact { spec };
    let basis = |r: usize| Element::basis(spec, r);
    let mut witnesses = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut verdict = |property: &'static str, failure: Option<Vec<Element>>| match failure {
        None => Verdict::Yes,
        Some(elements) => {
            witnesses.push(Witness { property, elements });
            Verdict::NoWithWitness
        }
    };

    // distributivity is built into the bilinear product; sampled as a sanity check
    let mut distributive_failure = None;
    for _ in 0..100 {
        let (a, b, c) = (
            random_element(spec, &mut rng),
            random_element(spec, &mut rng),
            random_element(spec, &mut rng),
        );
        let left = &a * &(&b + &c);
        let right = &(&b + &c) * &a;
        if !left.approx_eq(&(&(&a * &b) + &(&a * &c)), 1e-12)
            || !right.approx_eq(&(&(&b * &a) + &(&c * &a)), 1e-12)
        {
            distributive_failure = Some(vec![a, b, c]);
            break;
        }
    }
    let distributive = verdict("distributive", distributive_failure);

    let commutative_failure = (0..n)
        .flat_map(|r| (0..n).map(move |s| (r, s)))
        .find(|&(r, s)| spec.product(r, s) != spec.product(s, r))
        .map(|(r, s)| vec![basis(r), basis(s)]);
    let commutative = verdict("commutative", commutative_failure);

    let associative_failure = triples(n)
        .find(|&(r, s, t)| !is_zero(&exact.associator(r, s, t)))
        .map(|(r, s, t)| vec![basis(r), basis(s), basis(t)]);
    let associative = verdict("associative", associative_failure);

    let alternative_failure = triples(n)
        .find(|&(r, s, t)| !is_zero(&add(exact.associator(r, s, t), exact.associator(s, r, t))))
        .map(|(r, s, t)| vec![basis(r), basis(s), basis(t)]);
    let alternative = verdict("alternative", alternative_failure);

    let flexible_failure = triples(n)
        .find(|&(r, s, t)| !is_zero(&add(exact.associator(r, s, t), exact.associator(t, s, r))))
        .map(|(r, s, t)| vec![basis(r), basis(s), basis(t)]);
    let flexible = verdict("flexible", flexible_failure);

    // full linearization of [a, a, a] = 0
    let linearized_failure = triples(n)
        .find(|&(r, s, t)| {
            let perms = [
                (r, s, t),
                (r, t, s),
                (s, r, t),
                (s, t, r),
                (t, r, s),
                (t, s, r),
            ];
            let sum = perms
                .iter()
                .map(|&(x, y, z)| exact.associator(x, y, z))
                .fold(vec![0; n], add);
            !is_zero(&sum)
        })
        .map(|(r, s, t)| vec![basis(r), basis(s), basis(t)]);
    let mut power_failure = linearized_failure;
    if power_failure.is_none() {
        for _ in 0..SAMPLES {
            let a = random_element(spec, &mut rng);
            let a2 = &a * &a;
            let a3 = &a2 * &a;
            if !(&a2 * &a2).approx_eq(&(&a3 * &a), SAMPLE_TOL) {
                power_failure = Some(vec![a]);
                break;
            }
        }
    }
    let power_associative = verdict("power_associative", power_failure);

    let reversible_failure = find_zero_divisor(spec, seed, &mut rng);
    let reversible = verdict("reversible", reversible_failure);

    PropertyReport {
        algebra: spec.name().to_string(),
        seed,
        distributive,
        associative,
        alternative,
        flexible,
        power_associative,
        commutative,
        reversible,
        witnesses,
    }
}

/// A pair `(q, x)` with `q x = 0`, from structured candidates, seeded random
/// samples and non-trivial idempotents.
fn find_zero_divisor(
    spec: &Arc<AlgebraSpec>,
    seed: u64,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Element>> {
    let mut candidates = structured_starts(spec);
    candidates.extend((0..SAMPLES).map(|_| random_element(spec, rng)));
    candidates.extend(find_idempotents(spec, seed).into_iter().skip(2));
    candidates
        .into_iter()
        .filter(|q| !q.is_zero(0.0))
        .find_map(|q| {
            zero_divisor_partner(&q)
                .ok()
                .flatten()
                .map(|partner| vec![q, partner])
        })
}
