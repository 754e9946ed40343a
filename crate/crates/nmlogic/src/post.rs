//! Boolean clone classification.
//!
//! Clones are identified through the properties that define each named row
//! of the clone table (reproducing, separating of a degree, monotone,
//! self-dual, affine, essentially unary, conjunction/disjunction/projection
//! shaped), all decided exhaustively on truth tables of arity at most 8.
//! The lattice order is derived from the definitions: `A <= B` holds iff
//! every base function of `A` satisfies the defining properties of `B`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::formula::parse_formula;
use crate::func::{BooleanFunction, FunctionLibrary, ARITY_CAP};
use crate::theory::Assignment;

/// Largest `m` such that a function is `c`-separating of degree `m`.
///
/// Degrees below 2 are not distinguished (`None`); a fully `c`-separating
/// function has degree `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SepDegree {
    None,
    Finite(u32),
    Infinite,
}

impl SepDegree {
    pub fn at_least(self, m: u32) -> bool {
        match self {
            SepDegree::None => false,
            SepDegree::Finite(d) => d >= m,
            SepDegree::Infinite => true,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, SepDegree::Infinite)
    }

    fn min(self, other: SepDegree) -> SepDegree {
        match (self, other) {
            (SepDegree::None, _) | (_, SepDegree::None) => SepDegree::None,
            (SepDegree::Infinite, d) | (d, SepDegree::Infinite) => d,
            (SepDegree::Finite(a), SepDegree::Finite(b)) => SepDegree::Finite(a.min(b)),
        }
    }
}

impl fmt::Display for SepDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SepDegree::None => write!(f, "none"),
            SepDegree::Finite(d) => write!(f, "{d}"),
            SepDegree::Infinite => write!(f, "inf"),
        }
    }
}

/// All clone-relevant properties of a single function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyProfile {
    pub reproducing0: bool,
    pub reproducing1: bool,
    pub monotone: bool,
    pub self_dual: bool,
    pub affine: bool,
    pub essentially_unary: bool,
    pub conjunction_or_constant: bool,
    pub disjunction_or_constant: bool,
    pub constant_or_projection: bool,
    pub sep0_degree: SepDegree,
    pub sep1_degree: SepDegree,
}

fn check_arity(f: &BooleanFunction) -> Result<()> {
    if f.arity() > ARITY_CAP {
        return Err(Error::CapExceeded {
            what: "function arity",
            size: f.arity(),
            cap: ARITY_CAP,
        });
    }
    Ok(())
}

/// dual(f)(x1,...,xn) = !f(!x1,...,!xn)
pub fn dual(f: &BooleanFunction) -> BooleanFunction {
    let n = f.arity();
    let size = 1usize << n;
    let table: Vec<bool> = (0..size).map(|i| !f.table()[(size - 1) ^ i]).collect();
    BooleanFunction::new(&format!("dual_{}", f.name()), n, table).unwrap()
}

pub fn is_reproducing(f: &BooleanFunction, c: bool) -> bool {
    let idx = if c { (1usize << f.arity()) - 1 } else { 0 };
    f.table()[idx] == c
}

pub fn is_monotone(f: &BooleanFunction) -> bool {
    let n = f.arity();
    for i in 0..1usize << n {
        for b in 0..n {
            if i & (1 << b) == 0 && f.table()[i] && !f.table()[i | (1 << b)] {
                return false;
            }
        }
    }
    true
}

pub fn is_self_dual(f: &BooleanFunction) -> bool {
    dual(f).equivalent(f)
}

pub fn is_affine(f: &BooleanFunction) -> bool {
    let n = f.arity();
    let c = f.table()[0];
    let coeff: Vec<bool> = (0..n).map(|b| f.table()[1 << b] ^ c).collect();
    (0..1usize << n).all(|i| {
        let mut v = c;
        for (b, &a) in coeff.iter().enumerate() {
            if a && (i >> b) & 1 == 1 {
                v = !v;
            }
        }
        v == f.table()[i]
    })
}

pub fn is_essentially_unary(f: &BooleanFunction) -> bool {
    let n = f.arity();
    let depends = (0..n)
        .filter(|&b| (0..1usize << n).any(|i| f.table()[i] != f.table()[i ^ (1 << b)]))
        .count();
    depends <= 1
}

fn is_constant(f: &BooleanFunction) -> bool {
    f.table().iter().all(|&v| v) || f.table().iter().all(|&v| !v)
}

/// Constant, or a conjunction of a nonempty subset of the inputs.
pub fn is_conjunction_or_constant(f: &BooleanFunction) -> bool {
    if is_constant(f) {
        return true;
    }
    // the common ones of all satisfying inputs give the conjoined subset
    let mut t = (1usize << f.arity()) - 1;
    for (i, &v) in f.table().iter().enumerate() {
        if v {
            t &= i;
        }
    }
    t != 0 && (0..1usize << f.arity()).all(|i| f.table()[i] == (i & t == t))
}

/// Constant, or a disjunction of a nonempty subset of the inputs.
pub fn is_disjunction_or_constant(f: &BooleanFunction) -> bool {
    if is_constant(f) {
        return true;
    }
    let mut zeros = 0usize;
    for (i, &v) in f.table().iter().enumerate() {
        if !v {
            zeros |= i;
        }
    }
    let t = !zeros & ((1usize << f.arity()) - 1);
    t != 0 && (0..1usize << f.arity()).all(|i| f.table()[i] == (i & t != 0))
}

pub fn is_constant_or_projection(f: &BooleanFunction) -> bool {
    if is_constant(f) {
        return true;
    }
    let n = f.arity();
    (0..n).any(|b| (0..1usize << n).all(|i| f.table()[i] == ((i >> b) & 1 == 1)))
}

/// Exact maximal separating degree of `f` for value `c`.
///
/// A set of tuples is `c`-separating when some coordinate is `c` on all of
/// them (the empty set vacuously so). The returned degree is the largest `m`
/// such that every subset of `f^-1(c)` of size at most `m` is separating;
/// when `f^-1(c)` itself is separating the degree is infinite.
pub fn separating_degree(f: &BooleanFunction, c: bool) -> Result<SepDegree> {
    check_arity(f)?;
    let n = f.arity();
    let preimage: Vec<usize> = (0..1usize << n)
        .filter(|&i| f.table()[i] == c)
        .collect();
    if preimage.is_empty() {
        return Ok(SepDegree::Infinite);
    }
    // A subset fails to separate exactly when every coordinate sees a member
    // differing from c. The smallest non-separating subset is a minimum cover
    // of the coordinates, where a tuple covers the coordinates on which it
    // differs from c.
    let full = (1usize << n) - 1;
    let covers: Vec<usize> = preimage
        .iter()
        .map(|&i| if c { !i & full } else { i })
        .collect();
    let reachable = covers.iter().fold(0usize, |a, &b| a | b);
    if reachable != full {
        // some coordinate equals c on the whole preimage
        return Ok(SepDegree::Infinite);
    }
    // BFS over coordinate subsets for the minimum cover size.
    let mut dist = vec![u32::MAX; 1 << n];
    dist[0] = 0;
    let mut frontier = vec![0usize];
    let mut step = 0u32;
    while !frontier.is_empty() {
        step += 1;
        let mut next = Vec::new();
        for &state in &frontier {
            for &cov in &covers {
                let to = state | cov;
                if dist[to] == u32::MAX {
                    dist[to] = step;
                    next.push(to);
                }
            }
        }
        if dist[full] != u32::MAX {
            break;
        }
        frontier = next;
    }
    // a non-separating subset is nonempty, so arity 0 still needs one tuple
    let smallest_violation = dist[full].max(1);
    if smallest_violation >= 3 {
        Ok(SepDegree::Finite(smallest_violation - 1))
    } else {
        Ok(SepDegree::None)
    }
}

pub fn property_profile(f: &BooleanFunction) -> Result<PropertyProfile> {
    check_arity(f)?;
    Ok(PropertyProfile {
        reproducing0: is_reproducing(f, false),
        reproducing1: is_reproducing(f, true),
        monotone: is_monotone(f),
        self_dual: is_self_dual(f),
        affine: is_affine(f),
        essentially_unary: is_essentially_unary(f),
        conjunction_or_constant: is_conjunction_or_constant(f),
        disjunction_or_constant: is_disjunction_or_constant(f),
        constant_or_projection: is_constant_or_projection(f),
        sep0_degree: separating_degree(f, false)?,
        sep1_degree: separating_degree(f, true)?,
    })
}

// ---------------------------------------------------------------------------
// Clone names
// ---------------------------------------------------------------------------

/// A row of the clone table. Parameterized rows carry their degree (>= 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CloneName {
    Bf,
    R0,
    R1,
    R2,
    M,
    M0,
    M1,
    M2,
    S0,
    S0n(u32),
    S1,
    S1n(u32),
    S02,
    S02n(u32),
    S01,
    S01n(u32),
    S00,
    S00n(u32),
    S12,
    S12n(u32),
    S11,
    S11n(u32),
    S10,
    S10n(u32),
    D,
    D1,
    D2,
    L,
    L0,
    L1,
    L2,
    L3,
    E,
    E0,
    E1,
    E2,
    V,
    V0,
    V1,
    V2,
    N,
    N2,
    I,
    I0,
    I1,
    I2,
}

impl CloneName {
    /// The 37 named rows.
    pub fn named() -> Vec<CloneName> {
        use CloneName::*;
        vec![
            Bf, R0, R1, R2, M, M0, M1, M2, S0, S1, S02, S01, S00, S12, S11, S10, D, D1, D2, L,
            L0, L1, L2, L3, E, E0, E1, E2, V, V0, V1, V2, N, N2, I, I0, I1, I2,
        ]
    }

    /// All rows, with the parameterized families instantiated at `degrees`.
    pub fn all_instances(degrees: &[u32]) -> Vec<CloneName> {
        use CloneName::*;
        let mut out = CloneName::named();
        for &m in degrees {
            out.extend([
                S0n(m),
                S1n(m),
                S02n(m),
                S01n(m),
                S00n(m),
                S12n(m),
                S11n(m),
                S10n(m),
            ]);
        }
        out
    }

    pub fn degree(&self) -> Option<u32> {
        use CloneName::*;
        match *self {
            S0n(m) | S1n(m) | S02n(m) | S01n(m) | S00n(m) | S12n(m) | S11n(m) | S10n(m) => {
                Some(m)
            }
            _ => None,
        }
    }
}

impl fmt::Display for CloneName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CloneName::*;
        match self {
            Bf => write!(f, "BF"),
            R0 => write!(f, "R0"),
            R1 => write!(f, "R1"),
            R2 => write!(f, "R2"),
            M => write!(f, "M"),
            M0 => write!(f, "M0"),
            M1 => write!(f, "M1"),
            M2 => write!(f, "M2"),
            S0 => write!(f, "S0"),
            S0n(m) => write!(f, "S0^{m}"),
            S1 => write!(f, "S1"),
            S1n(m) => write!(f, "S1^{m}"),
            S02 => write!(f, "S02"),
            S02n(m) => write!(f, "S02^{m}"),
            S01 => write!(f, "S01"),
            S01n(m) => write!(f, "S01^{m}"),
            S00 => write!(f, "S00"),
            S00n(m) => write!(f, "S00^{m}"),
            S12 => write!(f, "S12"),
            S12n(m) => write!(f, "S12^{m}"),
            S11 => write!(f, "S11"),
            S11n(m) => write!(f, "S11^{m}"),
            S10 => write!(f, "S10"),
            S10n(m) => write!(f, "S10^{m}"),
            D => write!(f, "D"),
            D1 => write!(f, "D1"),
            D2 => write!(f, "D2"),
            L => write!(f, "L"),
            L0 => write!(f, "L0"),
            L1 => write!(f, "L1"),
            L2 => write!(f, "L2"),
            L3 => write!(f, "L3"),
            E => write!(f, "E"),
            E0 => write!(f, "E0"),
            E1 => write!(f, "E1"),
            E2 => write!(f, "E2"),
            V => write!(f, "V"),
            V0 => write!(f, "V0"),
            V1 => write!(f, "V1"),
            V2 => write!(f, "V2"),
            N => write!(f, "N"),
            N2 => write!(f, "N2"),
            I => write!(f, "I"),
            I0 => write!(f, "I0"),
            I1 => write!(f, "I1"),
            I2 => write!(f, "I2"),
        }
    }
}

impl FromStr for CloneName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use CloneName::*;
        let (head, degree) = match s.split_once('^') {
            Some((h, d)) => {
                let m: u32 = d
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad clone degree in `{s}`")))?;
                if m < 2 {
                    return Err(Error::Invalid(format!(
                        "clone degree must be at least 2 in `{s}`"
                    )));
                }
                (h, Some(m))
            }
            None => (s, None),
        };
        let plain = |c: CloneName| match degree {
            None => Ok(c),
            Some(_) => Err(Error::Invalid(format!("clone `{head}` takes no degree"))),
        };
        match head {
            "BF" => plain(Bf),
            "R0" => plain(R0),
            "R1" => plain(R1),
            "R2" => plain(R2),
            "M" => plain(M),
            "M0" => plain(M0),
            "M1" => plain(M1),
            "M2" => plain(M2),
            "S0" => Ok(degree.map_or(S0, S0n)),
            "S1" => Ok(degree.map_or(S1, S1n)),
            "S02" => Ok(degree.map_or(S02, S02n)),
            "S01" => Ok(degree.map_or(S01, S01n)),
            "S00" => Ok(degree.map_or(S00, S00n)),
            "S12" => Ok(degree.map_or(S12, S12n)),
            "S11" => Ok(degree.map_or(S11, S11n)),
            "S10" => Ok(degree.map_or(S10, S10n)),
            "D" => plain(D),
            "D1" => plain(D1),
            "D2" => plain(D2),
            "L" => plain(L),
            "L0" => plain(L0),
            "L1" => plain(L1),
            "L2" => plain(L2),
            "L3" => plain(L3),
            "E" => plain(E),
            "E0" => plain(E0),
            "E1" => plain(E1),
            "E2" => plain(E2),
            "V" => plain(V),
            "V0" => plain(V0),
            "V1" => plain(V1),
            "V2" => plain(V2),
            "N" => plain(N),
            "N2" => plain(N2),
            "I" => plain(I),
            "I0" => plain(I0),
            "I1" => plain(I1),
            "I2" => plain(I2),
            _ => Err(Error::Invalid(format!("unknown clone name `{s}`"))),
        }
    }
}

// ---------------------------------------------------------------------------
// Membership, bases, generation, order
// ---------------------------------------------------------------------------

fn profile_in_clone(c: &CloneName, p: &PropertyProfile) -> bool {
    use CloneName::*;
    match *c {
        Bf => true,
        R0 => p.reproducing0,
        R1 => p.reproducing1,
        R2 => p.reproducing0 && p.reproducing1,
        M => p.monotone,
        M0 => p.monotone && p.reproducing0,
        M1 => p.monotone && p.reproducing1,
        M2 => p.monotone && p.reproducing0 && p.reproducing1,
        S0 => p.sep0_degree.is_infinite(),
        S0n(m) => p.sep0_degree.at_least(m),
        S1 => p.sep1_degree.is_infinite(),
        S1n(m) => p.sep1_degree.at_least(m),
        S02 => p.sep0_degree.is_infinite() && p.reproducing0 && p.reproducing1,
        S02n(m) => p.sep0_degree.at_least(m) && p.reproducing0 && p.reproducing1,
        S01 => p.sep0_degree.is_infinite() && p.monotone,
        S01n(m) => p.sep0_degree.at_least(m) && p.monotone,
        S00 => {
            p.sep0_degree.is_infinite() && p.reproducing0 && p.reproducing1 && p.monotone
        }
        S00n(m) => p.sep0_degree.at_least(m) && p.reproducing0 && p.reproducing1 && p.monotone,
        S12 => p.sep1_degree.is_infinite() && p.reproducing0 && p.reproducing1,
        S12n(m) => p.sep1_degree.at_least(m) && p.reproducing0 && p.reproducing1,
        S11 => p.sep1_degree.is_infinite() && p.monotone,
        S11n(m) => p.sep1_degree.at_least(m) && p.monotone,
        S10 => {
            p.sep1_degree.is_infinite() && p.reproducing0 && p.reproducing1 && p.monotone
        }
        S10n(m) => p.sep1_degree.at_least(m) && p.reproducing0 && p.reproducing1 && p.monotone,
        D => p.self_dual,
        D1 => p.self_dual && p.reproducing0 && p.reproducing1,
        D2 => p.self_dual && p.monotone,
        L => p.affine,
        L0 => p.affine && p.reproducing0,
        L1 => p.affine && p.reproducing1,
        L2 => p.affine && p.reproducing0 && p.reproducing1,
        L3 => p.affine && p.self_dual,
        E => p.conjunction_or_constant,
        E0 => p.conjunction_or_constant && p.reproducing0,
        E1 => p.conjunction_or_constant && p.reproducing1,
        E2 => p.conjunction_or_constant && p.reproducing0 && p.reproducing1,
        V => p.disjunction_or_constant,
        V0 => p.disjunction_or_constant && p.reproducing0,
        V1 => p.disjunction_or_constant && p.reproducing1,
        V2 => p.disjunction_or_constant && p.reproducing0 && p.reproducing1,
        N => p.essentially_unary,
        N2 => p.essentially_unary && p.self_dual,
        I => p.constant_or_projection,
        I0 => p.constant_or_projection && p.reproducing0,
        I1 => p.constant_or_projection && p.reproducing1,
        I2 => p.constant_or_projection && p.reproducing0 && p.reproducing1,
    }
}

/// Membership per the defining property conjunction of the row.
pub fn clone_contains(c: &CloneName, f: &BooleanFunction) -> Result<bool> {
    Ok(profile_in_clone(c, &property_profile(f)?))
}

fn synth(name: &str, arity: usize, expr: &str) -> BooleanFunction {
    let lib = FunctionLibrary::standard();
    let formula = parse_formula(expr, &lib).unwrap();
    let vars = ["x", "y", "z"];
    let table = (0..1usize << arity)
        .map(|i| {
            let sigma = Assignment::from_pairs(
                (0..arity).map(|j| (vars[j], (i >> (arity - 1 - j)) & 1 == 1)),
            );
            formula.evaluate(&sigma).unwrap()
        })
        .collect();
    BooleanFunction::new(name, arity, table).unwrap()
}

fn std_fn(name: &str) -> BooleanFunction {
    (*FunctionLibrary::standard().lookup(name).unwrap()).clone()
}

fn threshold(m: u32) -> Result<BooleanFunction> {
    BooleanFunction::threshold(m as usize)
}

fn dual_threshold(m: u32) -> Result<BooleanFunction> {
    let t = threshold(m)?;
    let d = dual(&t);
    BooleanFunction::new(&format!("dthr{}_{}", m + 1, m), d.arity(), d.table().to_vec())
}

/// The base listed for the row, thresholds synthesized on demand.
pub fn base_of(c: &CloneName) -> Result<Vec<BooleanFunction>> {
    use CloneName::*;
    Ok(match *c {
        Bf => vec![std_fn("and"), std_fn("not")],
        R0 => vec![std_fn("and"), std_fn("xor")],
        R1 => vec![std_fn("or"), std_fn("eq")],
        R2 => vec![std_fn("or"), synth("andeq3", 3, "x & (y <-> z)")],
        M => vec![std_fn("and"), std_fn("or"), std_fn("const0"), std_fn("const1")],
        M0 => vec![std_fn("and"), std_fn("or"), std_fn("const0")],
        M1 => vec![std_fn("and"), std_fn("or"), std_fn("const1")],
        M2 => vec![std_fn("and"), std_fn("or")],
        S0 => vec![std_fn("imp")],
        S0n(m) => vec![std_fn("imp"), dual_threshold(m)?],
        S1 => vec![std_fn("nimp")],
        S1n(m) => vec![std_fn("nimp"), threshold(m)?],
        S02 => vec![synth("orandnot3", 3, "x | (y & !z)")],
        S02n(m) => vec![synth("orandnot3", 3, "x | (y & !z)"), dual_threshold(m)?],
        S01 => vec![synth("orand3", 3, "x | (y & z)"), std_fn("const1")],
        S01n(m) => vec![dual_threshold(m)?, std_fn("const1")],
        S00 => vec![synth("orand3", 3, "x | (y & z)")],
        S00n(m) => vec![synth("orand3", 3, "x | (y & z)"), dual_threshold(m)?],
        S12 => vec![synth("andornot3", 3, "x & (y | !z)")],
        S12n(m) => vec![synth("andornot3", 3, "x & (y | !z)"), threshold(m)?],
        S11 => vec![synth("andor3", 3, "x & (y | z)"), std_fn("const0")],
        S11n(m) => vec![threshold(m)?, std_fn("const0")],
        S10 => vec![synth("andor3", 3, "x & (y | z)")],
        S10n(m) => vec![synth("andor3", 3, "x & (y | z)"), threshold(m)?],
        D => vec![synth("dbase3", 3, "(x & !y) | (x & !z) | (!y & !z)")],
        D1 => vec![synth("d1base3", 3, "(x & y) | (x & !z) | (y & !z)")],
        D2 => vec![std_fn("maj")],
        L => vec![std_fn("xor"), std_fn("const1")],
        L0 => vec![std_fn("xor")],
        L1 => vec![std_fn("eq")],
        L2 => vec![synth("xor3", 3, "x ^ y ^ z")],
        L3 => vec![synth("xor3c", 3, "x ^ y ^ z ^ 1")],
        E => vec![std_fn("and"), std_fn("const0"), std_fn("const1")],
        E0 => vec![std_fn("and"), std_fn("const0")],
        E1 => vec![std_fn("and"), std_fn("const1")],
        E2 => vec![std_fn("and")],
        V => vec![std_fn("or"), std_fn("const0"), std_fn("const1")],
        V0 => vec![std_fn("or"), std_fn("const0")],
        V1 => vec![std_fn("or"), std_fn("const1")],
        V2 => vec![std_fn("or")],
        N => vec![std_fn("not"), std_fn("const0"), std_fn("const1")],
        N2 => vec![std_fn("not")],
        I => vec![std_fn("id"), std_fn("const0"), std_fn("const1")],
        I0 => vec![std_fn("id"), std_fn("const0")],
        I1 => vec![std_fn("id"), std_fn("const1")],
        I2 => vec![std_fn("id")],
    })
}

/// Lattice order, derived from the definitions: `a <= b` iff every base
/// function of `a` lies in `b`.
pub fn clone_leq(a: &CloneName, b: &CloneName) -> Result<bool> {
    for f in base_of(a)? {
        if !clone_contains(b, &f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The least clone containing every function of `b`; the empty set
/// generates the projections.
pub fn clone_of(b: &[BooleanFunction]) -> Result<CloneName> {
    if b.is_empty() {
        return Ok(CloneName::I2);
    }
    let profiles: Vec<PropertyProfile> = b
        .iter()
        .map(property_profile)
        .collect::<Result<Vec<_>>>()?;

    let sep0 = profiles
        .iter()
        .fold(SepDegree::Infinite, |acc, p| acc.min(p.sep0_degree));
    let sep1 = profiles
        .iter()
        .fold(SepDegree::Infinite, |acc, p| acc.min(p.sep1_degree));

    let mut candidates = CloneName::named();
    if let SepDegree::Finite(m) = sep0 {
        candidates.extend([
            CloneName::S0n(m),
            CloneName::S02n(m),
            CloneName::S01n(m),
            CloneName::S00n(m),
        ]);
    }
    if let SepDegree::Finite(m) = sep1 {
        candidates.extend([
            CloneName::S1n(m),
            CloneName::S12n(m),
            CloneName::S11n(m),
            CloneName::S10n(m),
        ]);
    }

    let containing: Vec<CloneName> = candidates
        .into_iter()
        .filter(|c| profiles.iter().all(|p| profile_in_clone(c, p)))
        .collect();

    let mut minimal = Vec::new();
    for c in &containing {
        let mut is_min = true;
        for other in &containing {
            if !clone_leq(c, other)? {
                is_min = false;
                break;
            }
        }
        if is_min {
            minimal.push(*c);
        }
    }
    match minimal.as_slice() {
        [one] => Ok(*one),
        _ => Err(Error::Invalid(format!(
            "no unique least clone for the given functions (candidates: {minimal:?})"
        ))),
    }
}

/// Lattice join: the least clone containing both rows' bases.
pub fn clone_join(a: &CloneName, b: &CloneName) -> Result<CloneName> {
    let mut fns = base_of(a)?;
    fns.extend(base_of(b)?);
    clone_of(&fns)
}

/// Image of a row under duality, computed from its base.
pub fn dual_clone(c: &CloneName) -> Result<CloneName> {
    let duals: Vec<BooleanFunction> = base_of(c)?.iter().map(dual).collect();
    clone_of(&duals)
}
