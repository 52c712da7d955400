//! Squarefree monomial ideals and the combinatorial operations on them.
//!
//! Text format: the first non-comment line is the number of variables `n`,
//! then one generator per line as space-separated 0-based variable indices.
//! Blank lines and `#` comments are ignored.

use std::fmt;

use crate::error::{invalid, parse_err, Error, Result};
use crate::mask::{minimalize, VertexMask, MAX_VERTICES};
use crate::simplicial::SimplicialComplex;

/// Squarefree monomial ideal given by its minimal generators, in ascending
/// mask order. The zero ideal has no generators; the unit ideal is not
/// representable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    ground_size: usize,
    generators: Vec<VertexMask>,
}

impl SquarefreeIdeal {
    pub fn new<I: IntoIterator<Item = VertexMask>>(
        ground_size: usize,
        generators: I,
    ) -> Result<Self> {
        if ground_size > MAX_VERTICES {
            return Err(Error::GroundTooLarge(ground_size));
        }
        let ground = VertexMask::full(ground_size);
        let generators = minimalize(generators);
        for g in &generators {
            if g.is_empty() {
                return Err(invalid("the constant monomial 1 cannot be a generator"));
            }
            if !g.is_subset_of(ground) {
                return Err(invalid(format!(
                    "generator {g} outside {ground_size} variables"
                )));
            }
        }
        Ok(SquarefreeIdeal {
            ground_size,
            generators,
        })
    }

    pub fn zero(ground_size: usize) -> Self {
        SquarefreeIdeal {
            ground_size,
            generators: Vec::new(),
        }
    }

    /// The ideal generated by the variables in `vars`.
    pub fn variables(ground_size: usize, vars: VertexMask) -> Result<Self> {
        Self::new(ground_size, vars.iter().map(VertexMask::singleton))
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn generators(&self) -> &[VertexMask] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Union of all generator supports.
    pub fn support(&self) -> VertexMask {
        self.generators
            .iter()
            .fold(VertexMask::EMPTY, |a, &g| a | g)
    }

    /// Whether the squarefree monomial `x_m` lies in the ideal.
    pub fn contains_monomial(&self, m: VertexMask) -> bool {
        self.generators.iter().any(|g| g.is_subset_of(m))
    }

    /// Largest generator degree, zero for the zero ideal.
    pub fn max_degree(&self) -> usize {
        self.generators.iter().map(|g| g.len()).max().unwrap_or(0)
    }

    /// The complex whose minimal non-faces are the generators.
    pub fn stanley_reisner_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_antichain(self.ground_size, self.generators.clone())
    }

    /// Inverse of [`stanley_reisner_complex`](Self::stanley_reisner_complex);
    /// fails only for the void complex, whose ideal is the unit ideal.
    pub fn from_complex(c: &SimplicialComplex) -> Result<Self> {
        Self::new(c.ground_size(), c.nonface_generators().iter().copied())
    }

    /// `(I : x_m)`. Errors if the colon is the unit ideal, i.e. `x_m ∈ I`.
    pub fn colon_by_monomial(&self, m: VertexMask) -> Result<Self> {
        if self.contains_monomial(m) {
            return Err(Error::Precondition(format!(
                "x_{m} lies in the ideal, the colon is the unit ideal"
            )));
        }
        Ok(SquarefreeIdeal {
            ground_size: self.ground_size,
            generators: minimalize(self.generators.iter().map(|&g| g - m)),
        })
    }

    /// `I + J` on a shared ground set.
    pub fn sum(&self, other: &SquarefreeIdeal) -> Result<Self> {
        if self.ground_size != other.ground_size {
            return Err(invalid(format!(
                "ground sets differ ({} vs {}); embed both first",
                self.ground_size, other.ground_size
            )));
        }
        Ok(SquarefreeIdeal {
            ground_size: self.ground_size,
            generators: minimalize(self.generators.iter().chain(&other.generators).copied()),
        })
    }

    /// Whether the generators of the two ideals use disjoint variables.
    pub fn supports_disjoint(&self, other: &SquarefreeIdeal) -> bool {
        self.support().is_disjoint(other.support())
    }

    /// Same generators on `ground_size` variables shifted up by `offset`.
    pub fn embed(&self, ground_size: usize, offset: usize) -> Result<Self> {
        if offset + self.ground_size > ground_size {
            return Err(invalid(format!(
                "cannot place {} variables at offset {offset} inside {ground_size}",
                self.ground_size
            )));
        }
        Self::new(
            ground_size,
            self.generators.iter().map(|g| g.shifted(offset)),
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing variable count"))?;
        let n: usize = header
            .parse()
            .map_err(|_| parse_err(first, format!("expected variable count, found `{header}`")))?;
        if n > MAX_VERTICES {
            return Err(parse_err(
                first,
                format!("{n} variables exceeds the limit of {MAX_VERTICES}"),
            ));
        }
        let mut gens = Vec::new();
        for (line, body) in lines {
            let mut g = VertexMask::EMPTY;
            for tok in body.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| {
                    parse_err(line, format!("expected variable index, found `{tok}`"))
                })?;
                if v >= n {
                    return Err(parse_err(
                        line,
                        format!("variable {v} out of range for {n} variables"),
                    ));
                }
                if g.contains(v) {
                    return Err(parse_err(
                        line,
                        format!("variable {v} repeated; only squarefree generators are supported"),
                    ));
                }
                g = g.with(v);
            }
            gens.push(g);
        }
        Self::new(n, gens)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.ground_size);
        for g in &self.generators {
            let vs: Vec<String> = g.iter().map(|v| v.to_string()).collect();
            s.push_str(&vs.join(" "));
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            let vs: Vec<String> = g.iter().map(|v| format!("x{v}")).collect();
            f.write_str(&vs.join(""))?;
        }
        f.write_str(")")
    }
}
