//! Shared `name[:key=value,...]` descriptor parsing for measures and
//! model specs. Unknown keys are rejected by `finish`.

use crate::error::{Error, Result};

pub(crate) struct Params<'a> {
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> Params<'a> {
    pub fn parse(spec: Option<&'a str>) -> Result<Params<'a>> {
        let mut pairs = Vec::new();
        if let Some(spec) = spec {
            for item in spec.split(',') {
                let (k, v) = item.split_once('=').ok_or_else(|| {
                    Error::InvalidParameter(format!("expected key=value, got {item:?}"))
                })?;
                pairs.push((k.trim(), v.trim()));
            }
        }
        Ok(Params { pairs })
    }

    pub fn take(&mut self, key: &str) -> Option<&'a str> {
        let idx = self.pairs.iter().position(|(k, _)| *k == key)?;
        Some(self.pairs.remove(idx).1)
    }

    pub fn take_f64(&mut self, key: &str) -> Result<Option<f64>> {
        self.take(key)
            .map(|v| {
                v.parse::<f64>()
                    .map_err(|_| Error::InvalidParameter(format!("{key}={v:?} is not a number")))
            })
            .transpose()
    }

    pub fn take_usize(&mut self, key: &str) -> Result<Option<usize>> {
        self.take(key)
            .map(|v| {
                v.parse::<usize>()
                    .map_err(|_| Error::InvalidParameter(format!("{key}={v:?} is not an integer")))
            })
            .transpose()
    }

    pub fn take_u64(&mut self, key: &str) -> Result<Option<u64>> {
        self.take(key)
            .map(|v| {
                v.parse::<u64>()
                    .map_err(|_| Error::InvalidParameter(format!("{key}={v:?} is not an integer")))
            })
            .transpose()
    }

    pub fn finish(self, name: &str) -> Result<()> {
        if let Some((k, _)) = self.pairs.first() {
            return Err(Error::InvalidParameter(format!(
                "unknown parameter {k:?} for {name:?}"
            )));
        }
        Ok(())
    }
}

/// Splits `name[:params]`.
pub(crate) fn split_descriptor(s: &str) -> (&str, Option<&str>) {
    match s.split_once(':') {
        Some((n, p)) => (n.trim(), Some(p)),
        None => (s.trim(), None),
    }
}
