//! Cycle-derivative and helm graph families, and evaluators for the printed
//! closed-form ζ values of each family.
//!
//! The evaluators are plain exact-rational arithmetic. They never look at a
//! graph and never round, so a non-integral result is reported as such.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn require_at_least(what: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::Domain(format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// Cycle `0-1-…-(n-1)-0`.
pub fn gen_cycle(n: usize) -> Result<Graph> {
    require_at_least("cycle", n, 3)?;
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn gen_path(n: usize) -> Result<Graph> {
    require_at_least("path", n, 1)?;
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    require_at_least("complete graph", n, 1)?;
    Graph::new(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
}

/// Parts occupy consecutive vertex ranges in the given order.
pub fn gen_complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::Domain(
            "multipartite parts must be a non-empty list of positive sizes".into(),
        ));
    }
    let mut part_of = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(p));
    }
    let n = part_of.len();
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .collect();
    Graph::new(n, pairs)
}

/// Cycle `0..n` with pendant `n + i` on cycle vertex `i`.
pub fn gen_sunlet(n: usize) -> Result<Graph> {
    require_at_least("sunlet", n, 3)?;
    let cycle = (0..n).map(|i| (i, (i + 1) % n));
    let pendants = (0..n).map(|i| (i, n + i));
    Graph::new(2 * n, cycle.chain(pendants))
}

/// Rim cycle `0..n` and hub `n`.
pub fn gen_wheel(n: usize) -> Result<Graph> {
    require_at_least("wheel", n, 3)?;
    Ok(gen_cycle(n)?.join_vertex())
}

/// Core `K_n` on `0..n`; outer vertex `n + i` adjacent to `i` and `(i + 1) mod n`.
pub fn gen_sun(n: usize) -> Result<Graph> {
    require_at_least("sun", n, 3)?;
    let core = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    let outer = (0..n).flat_map(|i| [(n + i, i), (n + i, (i + 1) % n)]);
    Graph::new(2 * n, core.chain(outer))
}

/// Wheel (rim `0..n`, hub `n`) with pendant `n + 1 + i` on rim vertex `i`.
pub fn gen_helm(n: usize) -> Result<Graph> {
    require_at_least("helm", n, 3)?;
    let wheel = gen_wheel(n)?;
    let pendants = (0..n).map(|i| (i, n + 1 + i));
    Graph::new(2 * n + 1, wheel.edges().chain(pendants))
}

/// `K_1 + (K_1 + … + (K_1 + base))`, `depth` times.
pub fn gen_nested_join(base: &Graph, depth: usize) -> Result<Graph> {
    require_at_least("nested join depth", depth, 1)?;
    let mut g = base.clone();
    for _ in 0..depth {
        g = g.join_vertex();
    }
    Ok(g)
}

/// Exact value of a printed formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaValue(Ratio<i64>);

impl FormulaValue {
    pub fn new(numer: i64, denom: i64) -> Self {
        Self(Ratio::new(numer, denom))
    }

    pub fn integer(v: i64) -> Self {
        Self(Ratio::from_integer(v))
    }

    pub fn value(&self) -> Ratio<i64> {
        self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integral().then(|| self.0.to_integer())
    }
}

impl From<Ratio<i64>> for FormulaValue {
    fn from(r: Ratio<i64>) -> Self {
        Self(r)
    }
}

impl fmt::Display for FormulaValue {
    /// `p` when integral, otherwise the reduced fraction `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

fn q(v: i64) -> Ratio<i64> {
    Ratio::from_integer(v)
}

/// Odd cycles use the three-case residue formula; even cycles `n(n-4)/4`.
pub fn formula_zeta_cycle(n: usize) -> Result<FormulaValue> {
    require_at_least("cycle formula", n, 3)?;
    let m = n as i64;
    let value = if m % 2 == 0 {
        q(m) * q(m - 4) / q(4)
    } else {
        match m % 3 {
            0 => q(m) * (q(m) / q(3) - q(1)),
            2 => q(m - 2) * q(m - 5) / q(3) + (q(m - 2) / q(2)).ceil() + q(1),
            _ => q(m - 1) * q(m - 4) / q(3) + (q(2) / q(3) * q(m - 5)).ceil() + q(1),
        }
    };
    Ok(value.into())
}

/// `3·ζ(C_n) + n`, using the cycle formula above.
pub fn formula_zeta_sunlet(n: usize) -> Result<FormulaValue> {
    let cycle = formula_zeta_cycle(n)?;
    Ok((q(3) * cycle.value() + q(n as i64)).into())
}

/// Whether `n` lies in the odd-cycle premise under which the sunlet formula was stated.
pub fn sunlet_formula_in_stated_domain(n: usize) -> bool {
    n % 2 == 1
}

/// Even rim: `n²/4`; odd rim: the cycle formula.
pub fn formula_zeta_wheel(n: usize) -> Result<FormulaValue> {
    require_at_least("wheel formula", n, 3)?;
    if n % 2 == 0 {
        let m = n as i64;
        Ok((q(m * m) / q(4)).into())
    } else {
        formula_zeta_cycle(n)
    }
}

/// `n(3n-4)/2`.
pub fn formula_zeta_sun(n: usize) -> Result<FormulaValue> {
    require_at_least("sun formula", n, 3)?;
    let m = n as i64;
    Ok((q(m) * q(3 * m - 4) / q(2)).into())
}

/// Even `n` dispatches on `n mod 6` (4, 0, 2); odd `n` is 9 at `n = 3`, else `3n(n-1)/2`.
pub fn formula_zeta_helm(n: usize) -> Result<FormulaValue> {
    require_at_least("helm formula", n, 3)?;
    let m = n as i64;
    let value = if m % 2 == 1 {
        if m == 3 {
            q(9)
        } else {
            q(3 * m * (m - 1)) / q(2)
        }
    } else {
        match m % 6 {
            4 => q((4 * m - 1) * (m - 1)) / q(3),
            0 => q(m * (12 * m - 19)) / q(9),
            _ => q(12 * m * m - 27 * m - 4) / q(9),
        }
    };
    Ok(value.into())
}

/// Family names as accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cycle,
    Path,
    Sunlet,
    Wheel,
    Sun,
    Helm,
    Complete,
    Multipartite,
    NestedJoin,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Cycle,
        Family::Path,
        Family::Sunlet,
        Family::Wheel,
        Family::Sun,
        Family::Helm,
        Family::Complete,
        Family::Multipartite,
        Family::NestedJoin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Sunlet => "sunlet",
            Family::Wheel => "wheel",
            Family::Sun => "sun",
            Family::Helm => "helm",
            Family::Complete => "complete",
            Family::Multipartite => "multipartite",
            Family::NestedJoin => "nested-join",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown family '{s}'")))
    }
}

/// A concrete family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Sunlet(usize),
    Wheel(usize),
    Sun(usize),
    Helm(usize),
    Complete(usize),
    Multipartite(Vec<usize>),
    NestedJoin { base: Box<FamilySpec>, depth: usize },
}

impl FamilySpec {
    /// Member of a single-parameter family.
    pub fn simple(family: Family, n: usize) -> Result<Self> {
        Ok(match family {
            Family::Cycle => FamilySpec::Cycle(n),
            Family::Path => FamilySpec::Path(n),
            Family::Sunlet => FamilySpec::Sunlet(n),
            Family::Wheel => FamilySpec::Wheel(n),
            Family::Sun => FamilySpec::Sun(n),
            Family::Helm => FamilySpec::Helm(n),
            Family::Complete => FamilySpec::Complete(n),
            Family::Multipartite | Family::NestedJoin => {
                return Err(Error::Domain(format!(
                    "family '{family}' needs more than a single parameter"
                )))
            }
        })
    }

    pub fn family(&self) -> Family {
        match self {
            FamilySpec::Cycle(_) => Family::Cycle,
            FamilySpec::Path(_) => Family::Path,
            FamilySpec::Sunlet(_) => Family::Sunlet,
            FamilySpec::Wheel(_) => Family::Wheel,
            FamilySpec::Sun(_) => Family::Sun,
            FamilySpec::Helm(_) => Family::Helm,
            FamilySpec::Complete(_) => Family::Complete,
            FamilySpec::Multipartite(_) => Family::Multipartite,
            FamilySpec::NestedJoin { .. } => Family::NestedJoin,
        }
    }

    /// The size parameter `n` (total vertex count for multipartite, base parameter for joins).
    pub fn parameter(&self) -> usize {
        match self {
            FamilySpec::Cycle(n)
            | FamilySpec::Path(n)
            | FamilySpec::Sunlet(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Sun(n)
            | FamilySpec::Helm(n)
            | FamilySpec::Complete(n) => *n,
            FamilySpec::Multipartite(parts) => parts.iter().sum(),
            FamilySpec::NestedJoin { base, .. } => base.parameter(),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Cycle(n) => gen_cycle(*n),
            FamilySpec::Path(n) => gen_path(*n),
            FamilySpec::Sunlet(n) => gen_sunlet(*n),
            FamilySpec::Wheel(n) => gen_wheel(*n),
            FamilySpec::Sun(n) => gen_sun(*n),
            FamilySpec::Helm(n) => gen_helm(*n),
            FamilySpec::Complete(n) => gen_complete(*n),
            FamilySpec::Multipartite(parts) => gen_complete_multipartite(parts),
            FamilySpec::NestedJoin { base, depth } => gen_nested_join(&base.build()?, *depth),
        }
    }

    /// Printed closed form for this member, if the family has one.
    ///
    /// Complete and complete multipartite graphs have ζ = 0 by definition.
    pub fn formula(&self) -> Option<Result<FormulaValue>> {
        match self {
            FamilySpec::Cycle(n) => Some(formula_zeta_cycle(*n)),
            FamilySpec::Sunlet(n) => Some(formula_zeta_sunlet(*n)),
            FamilySpec::Wheel(n) => Some(formula_zeta_wheel(*n)),
            FamilySpec::Sun(n) => Some(formula_zeta_sun(*n)),
            FamilySpec::Helm(n) => Some(formula_zeta_helm(*n)),
            FamilySpec::Complete(_) | FamilySpec::Multipartite(_) => {
                Some(Ok(FormulaValue::integer(0)))
            }
            FamilySpec::Path(_) | FamilySpec::NestedJoin { .. } => None,
        }
    }

    /// A note when the formula is evaluated outside the premise it was stated under.
    pub fn domain_note(&self) -> Option<&'static str> {
        match self {
            FamilySpec::Sunlet(n) if !sunlet_formula_in_stated_domain(*n) => {
                Some("outside stated domain (even sunlet)")
            }
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Multipartite(parts) => {
                let list: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "multipartite({})", list.join(","))
            }
            FamilySpec::NestedJoin { base, depth } => write!(f, "nested-join({base}, {depth})"),
            other => write!(f, "{}({})", other.family(), other.parameter()),
        }
    }
}
