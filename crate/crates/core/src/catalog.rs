//! Built-in matroids.

use crate::error::{Error, Result};
use crate::matroid::Matroid;

const FIXTURES: [(&str, &str); 5] = [
    ("braid-K4", include_str!("../fixtures/braid-K4.json")),
    ("nonfano", include_str!("../fixtures/nonfano.json")),
    ("deletedB3", include_str!("../fixtures/deletedB3.json")),
    ("olive-samansky", include_str!("../fixtures/olive-samansky.json")),
    ("hessian", include_str!("../fixtures/hessian.json")),
];

/// Names accepted by [`catalog`]; `pencil-<n>` is generated for any `n >= 2`.
pub fn names() -> Vec<&'static str> {
    let mut v: Vec<&str> = FIXTURES.iter().map(|(n, _)| *n).collect();
    v.push("pencil-<n>");
    v
}

pub fn catalog(name: &str) -> Result<Matroid> {
    if let Some(rest) = name.strip_prefix("pencil-") {
        let n: usize = rest.parse().map_err(|_| Error::UnknownFixture(name.to_string()))?;
        if n < 2 {
            return Err(Error::UnknownFixture(name.to_string()));
        }
        return Matroid::pencil(n);
    }
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    Matroid::from_json(text)
}
