use std::collections::BTreeSet;

use super::{syntax, NCPoly};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A connected graded algebra generated in degree one: generators plus
/// homogeneous relations of degree at least two.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation<S> {
    names: Vec<String>,
    relations: Vec<NCPoly<S>>,
}

impl<S: Scalar> Presentation<S> {
    pub fn new(names: Vec<String>, relations: Vec<NCPoly<S>>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidPresentation("no generators".into()));
        }
        let distinct: BTreeSet<&String> = names.iter().collect();
        if distinct.len() != names.len() {
            return Err(Error::InvalidPresentation("generator names must be distinct".into()));
        }
        for (i, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(Error::InvalidPresentation(format!("relation {i} is zero")));
            }
            let Some(d) = r.homogeneous_degree() else {
                return Err(Error::InvalidPresentation(format!("relation {i} is not homogeneous")));
            };
            if d < 2 {
                return Err(Error::InvalidPresentation(format!(
                    "relation {i} has degree {d}; relations must have degree at least 2"
                )));
            }
            if let Some(g) = r.max_letter() {
                if g >= names.len() {
                    return Err(Error::GeneratorOutOfRange {
                        index: g,
                        count: names.len(),
                    });
                }
            }
        }
        Ok(Self { names, relations })
    }

    /// Free algebra on the given generators.
    pub fn free(names: Vec<String>) -> Result<Self> {
        Self::new(names, Vec::new())
    }

    /// Parses relations written in relation syntax.
    pub fn parse(names: &[&str], relations: &[&str]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let rels = relations
            .iter()
            .map(|r| syntax::parse_poly(r, &names))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, rels)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn relations(&self) -> &[NCPoly<S>] {
        &self.relations
    }

    pub fn max_relation_degree(&self) -> usize {
        self.relations
            .iter()
            .filter_map(NCPoly::homogeneous_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Parses an element in relation syntax against these generator names.
    pub fn parse_element(&self, text: &str) -> Result<NCPoly<S>> {
        syntax::parse_poly(text, &self.names)
    }

    pub fn format(&self, p: &NCPoly<S>) -> String {
        p.to_string_with(&self.names)
    }

    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Presentation<T> {
        Presentation {
            names: self.names.clone(),
            relations: self.relations.iter().map(|r| r.map_scalars(&f)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn rejects_bad_relations() {
        let names = vec!["x".to_string(), "y".to_string()];
        let deg1 = NCPoly::<Rational>::generator(0);
        assert!(Presentation::new(names.clone(), vec![deg1]).is_err());
        let mixed = &NCPoly::<Rational>::word(&[0, 1]) + &NCPoly::word(&[0]);
        assert!(Presentation::new(names.clone(), vec![mixed]).is_err());
        assert!(Presentation::new(names.clone(), vec![NCPoly::<Rational>::zero()]).is_err());
        assert!(Presentation::new(names, vec![NCPoly::<Rational>::word(&[0, 2])]).is_err());
        assert!(Presentation::<Rational>::free(vec!["x".into(), "x".into()]).is_err());
    }

    #[test]
    fn parses_down_up_relations() {
        let p = Presentation::<Rational>::parse(
            &["x", "y"],
            &["x*x*y - 4*x*y*x + 4*y*x*x", "x*y*y - 4*y*x*y + 4*y*y*x"],
        )
        .unwrap();
        assert_eq!(p.max_relation_degree(), 3);
        assert_eq!(p.format(&p.relations()[0]), "x*x*y - 4*x*y*x + 4*y*x*x");
    }
}
