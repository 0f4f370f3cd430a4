use std::fmt;
use std::str::FromStr;

use super::{CircleArrangement, GinError};

/// Value `f(i, j)` of a diagram. `Finite(0)` is drawn as a bullet and
/// `Infinite` as a circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Finite(u32),
    Infinite,
}

impl Cell {
    pub const BULLET: Cell = Cell::Finite(0);

    pub fn is_circle(self) -> bool {
        self == Cell::Infinite
    }

    /// Value of a numeric entry, i.e. a finite nonzero cell.
    pub fn numeric(self) -> Option<u32> {
        match self {
            Cell::Finite(k) if k > 0 => Some(k),
            _ => None,
        }
    }

    /// Token used by the text format.
    pub fn token(self) -> String {
        match self {
            Cell::Finite(0) => "*".to_string(),
            Cell::Finite(k) => k.to_string(),
            Cell::Infinite => "o".to_string(),
        }
    }

    fn parse_token(tok: &str) -> Result<Cell, String> {
        match tok {
            "*" => Ok(Cell::BULLET),
            "o" => Ok(Cell::Infinite),
            _ => {
                let k: u32 = tok.parse().map_err(|_| format!("unknown token '{tok}'"))?;
                if k == 0 {
                    return Err("zero entries are written '*'".to_string());
                }
                if k.to_string() != tok {
                    return Err(format!("non-canonical integer '{tok}'"));
                }
                Ok(Cell::Finite(k))
            }
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Finite(0) => write!(f, "•"),
            Cell::Finite(k) => write!(f, "{k}"),
            Cell::Infinite => write!(f, "∘"),
        }
    }
}

/// First failing condition found by [`Diagram::validate`]. Cells are `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `f(left) > f(right)` for horizontal neighbours, `left = (i + 1, j - 1)`.
    RowMonotone {
        left: (usize, usize),
        right: (usize, usize),
    },
    /// `f(below) > f(above)` with `below` one of `(i + 1, j)`, `(i, j + 1)`.
    Diagonal {
        above: (usize, usize),
        below: (usize, usize),
    },
    /// `f(below) = f(above)` for a numeric entry `f(above)`.
    DiagonalStrict {
        above: (usize, usize),
        below: (usize, usize),
    },
    /// The last stored row contains something other than bullets.
    LastRow { cell: (usize, usize) },
}

impl Violation {
    /// The cells involved, in the order they are compared.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        match *self {
            Violation::RowMonotone { left, right } => vec![left, right],
            Violation::Diagonal { above, below } | Violation::DiagonalStrict { above, below } => {
                vec![above, below]
            }
            Violation::LastRow { cell } => vec![cell],
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RowMonotone { left, right } => {
                write!(f, "row not weakly increasing: f{left:?} > f{right:?}")
            }
            Violation::Diagonal { above, below } => {
                write!(f, "diagonal not weakly decreasing: f{below:?} > f{above:?}")
            }
            Violation::DiagonalStrict { above, below } => write!(
                f,
                "diagonal not strictly decreasing after numeric entry: f{below:?} = f{above:?}"
            ),
            Violation::LastRow { cell } => {
                write!(f, "last row must consist of bullets, found f{cell:?}")
            }
        }
    }
}

/// A diagram stored up to its support bound `R`: cells with `i + j <= R`.
/// Cells beyond the bound are bullets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Diagram {
    // rows[r][j] = f(r - j, j)
    rows: Vec<Vec<Cell>>,
}

impl Diagram {
    pub fn new(rows: Vec<Vec<Cell>>) -> Result<Diagram, GinError> {
        if rows.is_empty() {
            return Err(GinError::Shape {
                row: 0,
                found: 0,
                expected: 1,
            });
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != r + 1 {
                return Err(GinError::Shape {
                    row: r,
                    found: row.len(),
                    expected: r + 1,
                });
            }
        }
        Ok(Diagram { rows })
    }

    pub fn from_fn(support: usize, f: impl Fn(usize, usize) -> Cell) -> Diagram {
        let rows = (0..=support)
            .map(|r| (0..=r).map(|j| f(r - j, j)).collect())
            .collect();
        Diagram { rows }
    }

    /// The diagram of the empty scheme: a single bullet.
    pub fn all_bullets() -> Diagram {
        Diagram {
            rows: vec![vec![Cell::BULLET]],
        }
    }

    /// Support bound `R`.
    pub fn support(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> Cell {
        self.rows.get(i + j).map_or(Cell::BULLET, |row| row[j])
    }

    fn cells(&self) -> impl Iterator<Item = ((usize, usize), Cell)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(j, &c)| ((r - j, j), c)))
    }

    pub fn validate(&self) -> Result<(), Violation> {
        for r in 0..self.rows.len() {
            for j in 0..=r {
                let i = r - j;
                let here = self.get(i, j);
                if i > 0 && here > self.get(i - 1, j + 1) {
                    return Err(Violation::RowMonotone {
                        left: (i, j),
                        right: (i - 1, j + 1),
                    });
                }
                for below in [(i + 1, j), (i, j + 1)] {
                    let next = self.get(below.0, below.1);
                    if next > here {
                        return Err(Violation::Diagonal {
                            above: (i, j),
                            below,
                        });
                    }
                    if here.numeric().is_some() && next == here {
                        return Err(Violation::DiagonalStrict {
                            above: (i, j),
                            below,
                        });
                    }
                }
            }
        }
        let last = self.support();
        if let Some(j) = self.rows[last].iter().position(|&c| c != Cell::BULLET) {
            return Err(Violation::LastRow {
                cell: (last - j, j),
            });
        }
        Ok(())
    }

    fn checked(&self) -> Result<(), GinError> {
        self.validate().map_err(GinError::Invalid)
    }

    /// Number of circles.
    pub fn degree(&self) -> Result<usize, GinError> {
        self.checked()?;
        Ok(self.cells().filter(|(_, c)| c.is_circle()).count())
    }

    /// Circles in row `r` count `r - 1` (rows 0 and 1 count nothing), minus
    /// the sum of the numeric entries.
    pub fn genus(&self) -> Result<i64, GinError> {
        self.checked()?;
        let circles: i64 = self
            .cells()
            .filter(|(_, c)| c.is_circle())
            .map(|((i, j), _)| (i + j).saturating_sub(1) as i64)
            .sum();
        Ok(circles - self.numeric_sum() as i64)
    }

    /// Sum of the numeric entries.
    pub fn numeric_sum(&self) -> u64 {
        self.cells()
            .filter_map(|(_, c)| c.numeric())
            .map(u64::from)
            .sum()
    }

    /// `λ_i = min { j : f(i, j) != ∞ }`, listing the positive values.
    pub fn lambda_sequence(&self) -> Result<CircleArrangement, GinError> {
        self.checked()?;
        let mut parts = Vec::new();
        for i in 0..=self.support() {
            let lambda = (0..)
                .find(|&j| !self.get(i, j).is_circle())
                .expect("finite support");
            if lambda == 0 {
                break;
            }
            parts.push(lambda as u32);
        }
        CircleArrangement::new(parts)
    }

    /// Diagram of a generic hyperplane section: numeric entries become
    /// bullets.
    pub fn hyperplane_section(&self) -> Diagram {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&c| {
                        if c.numeric().is_some() {
                            Cell::BULLET
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        Diagram { rows }
    }

    /// Degrees `i + j + k` of the minimal generators `x0^i x1^j x2^k` of
    /// the monomial ideal `{x0^i x1^j x2^k : k >= f(i, j)}`, sorted.
    /// Every such degree is the degree of a hypersurface containing the
    /// scheme.
    pub fn min_hypersurface_degrees(&self) -> Result<Vec<u32>, GinError> {
        self.checked()?;
        let mut out = Vec::new();
        // generators live in the support: below it every cell has a bullet
        // directly above
        for ((i, j), c) in self.cells() {
            let Cell::Finite(k) = c else { continue };
            let up_i = i == 0 || self.get(i - 1, j) > c;
            let up_j = j == 0 || self.get(i, j - 1) > c;
            if up_i && up_j {
                out.push((i + j) as u32 + k);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn min_hypersurface_degree(&self) -> Result<u32, GinError> {
        Ok(self.min_hypersurface_degrees()?[0])
    }

    /// Text format: one row per line, tokens `*`, `o` or a positive integer.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let toks: Vec<String> = row.iter().map(|c| c.token()).collect();
            s.push_str(&toks.join(" "));
            s.push('\n');
        }
        s
    }
}

impl FromStr for Diagram {
    type Err = GinError;

    fn from_str(s: &str) -> Result<Diagram, GinError> {
        let mut lines: Vec<&str> = s.lines().collect();
        while lines.last().is_some_and(|l| l.trim().is_empty()) {
            lines.pop();
        }
        if lines.is_empty() {
            return Err(GinError::Parse {
                line: 1,
                message: "empty diagram".to_string(),
            });
        }
        let mut rows = Vec::with_capacity(lines.len());
        for (r, line) in lines.iter().enumerate() {
            let row = line
                .split_whitespace()
                .map(Cell::parse_token)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|message| GinError::Parse {
                    line: r + 1,
                    message,
                })?;
            rows.push(row);
        }
        Diagram::new(rows)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Elementary moves under which a Borel-fixed ideal in `x0, x1, x2` is
/// closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BorelMove {
    /// `x1 -> x0`
    OneToZero,
    /// `x2 -> x0`
    TwoToZero,
    /// `x2 -> x1`
    TwoToOne,
}

impl fmt::Display for BorelMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BorelMove::OneToZero => "(i)",
            BorelMove::TwoToZero => "(ii)",
            BorelMove::TwoToOne => "(iii)",
        };
        f.write_str(s)
    }
}

fn fmt_monomial(m: [u32; 3]) -> String {
    let factors: Vec<String> = m
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| {
            if e == 1 {
                format!("x{v}")
            } else {
                format!("x{v}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Diagram `f(i, j) = min { k : x0^i x1^j x2^k ∈ J }` of the monomial ideal
/// `J` generated by exponent vectors in `x0, x1, x2`.
pub fn gin_to_diagram(generators: &[[u32; 3]]) -> Result<Diagram, GinError> {
    let contains = |m: [u32; 3]| generators.iter().any(|g| (0..3).all(|v| g[v] <= m[v]));
    for &g in generators {
        let mut moves = Vec::new();
        if g[1] > 0 {
            moves.push((BorelMove::OneToZero, [g[0] + 1, g[1] - 1, g[2]]));
        }
        if g[2] > 0 {
            moves.push((BorelMove::TwoToZero, [g[0] + 1, g[1], g[2] - 1]));
            moves.push((BorelMove::TwoToOne, [g[0], g[1] + 1, g[2] - 1]));
        }
        for (mv, m) in moves {
            if !contains(m) {
                return Err(GinError::NotBorelFixed {
                    mv,
                    from: fmt_monomial(g),
                    to: fmt_monomial(m),
                });
            }
        }
    }
    // row R is all bullets exactly when x1^R ∈ J
    let support = generators
        .iter()
        .filter(|g| g[0] == 0 && g[2] == 0)
        .map(|g| g[1] as usize)
        .min()
        .ok_or(GinError::UnboundedSupport)?;
    Ok(Diagram::from_fn(support, |i, j| {
        generators
            .iter()
            .filter(|g| g[0] as usize <= i && g[1] as usize <= j)
            .map(|g| Cell::Finite(g[2]))
            .min()
            .unwrap_or(Cell::Infinite)
    }))
}
