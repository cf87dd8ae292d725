use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// A computable commutative ring supported by the matrix layer.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    Rationals,
    /// Residues modulo `n`, `n >= 2`.
    IntegersMod(BigInt),
}

/// A ring element. Integers and residues use [`Elem::Int`], rationals use
/// [`Elem::Rat`]; the owning [`Ring`] decides which one is valid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    Int(BigInt),
    Rat(BigRational),
}

impl Elem {
    pub fn as_int(&self) -> &BigInt {
        match self {
            Elem::Int(v) => v,
            Elem::Rat(_) => panic!("rational element where an integer was expected"),
        }
    }

    pub fn as_rat(&self) -> &BigRational {
        match self {
            Elem::Rat(v) => v,
            Elem::Int(_) => panic!("integer element where a rational was expected"),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Int(v) => write!(f, "{v}"),
            Elem::Rat(v) if v.denom().is_one() => write!(f, "{}", v.numer()),
            Elem::Rat(v) => write!(f, "{}/{}", v.numer(), v.denom()),
        }
    }
}

impl Ring {
    pub fn integers_mod(n: impl Into<BigInt>) -> Result<Ring, ArithError> {
        let n = n.into();
        if n < BigInt::from(2) {
            return Err(ArithError::InvalidModulus(n.to_string()));
        }
        Ok(Ring::IntegersMod(n))
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            Ring::IntegersMod(n) => Some(n),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        match self {
            Ring::Rationals => Elem::Rat(BigRational::zero()),
            _ => Elem::Int(BigInt::zero()),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_int(BigInt::one())
    }

    /// The image of an integer under the canonical map `Z -> R`.
    pub fn from_int(&self, v: BigInt) -> Elem {
        match self {
            Ring::Integers => Elem::Int(v),
            Ring::Rationals => Elem::Rat(BigRational::from_integer(v)),
            Ring::IntegersMod(n) => Elem::Int(v.mod_floor(n)),
        }
    }

    pub fn from_i64(&self, v: i64) -> Elem {
        self.from_int(BigInt::from(v))
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(v) => v.is_zero(),
            Elem::Rat(v) => v.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(v) => v.is_one(),
            Elem::Rat(v) => v.is_one(),
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => self.reduce(x + y),
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x + y),
            _ => panic!("mixed element kinds in {self}"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => self.reduce(x - y),
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x - y),
            _ => panic!("mixed element kinds in {self}"),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::Int(x), Elem::Int(y)) => self.reduce(x * y),
            (Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x * y),
            _ => panic!("mixed element kinds in {self}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::Int(x) => self.reduce(-x),
            Elem::Rat(x) => Elem::Rat(-x),
        }
    }

    fn reduce(&self, v: BigInt) -> Elem {
        match self {
            Ring::IntegersMod(n) => Elem::Int(v.mod_floor(n)),
            _ => Elem::Int(v),
        }
    }

    /// Checks that an element is a valid canonical representative for this ring.
    pub fn contains(&self, a: &Elem) -> bool {
        match (self, a) {
            (Ring::Integers, Elem::Int(_)) => true,
            (Ring::Rationals, Elem::Rat(_)) => true,
            (Ring::IntegersMod(n), Elem::Int(v)) => !v.is_negative() && v < n,
            _ => false,
        }
    }

    /// Parses an element literal: an integer, or `p/q` over the rationals.
    pub fn parse_elem(&self, text: &str) -> Result<Elem, ArithError> {
        let bad = || ArithError::InvalidLiteral {
            literal: text.to_string(),
            ring: self.to_string(),
        };
        match self {
            Ring::Rationals => {
                let value = match text.split_once('/') {
                    Some((p, q)) => {
                        let p = BigInt::from_str(p).map_err(|_| bad())?;
                        let q = BigInt::from_str(q).map_err(|_| bad())?;
                        if q.is_zero() {
                            return Err(bad());
                        }
                        BigRational::new(p, q)
                    }
                    None => BigRational::from_integer(BigInt::from_str(text).map_err(|_| bad())?),
                };
                Ok(Elem::Rat(value))
            }
            _ => {
                if text.contains('/') {
                    return Err(bad());
                }
                Ok(self.from_int(BigInt::from_str(text).map_err(|_| bad())?))
            }
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::Rationals => write!(f, "Q"),
            Ring::IntegersMod(n) => write!(f, "Z/{n}"),
        }
    }
}

impl FromStr for Ring {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Z" => Ok(Ring::Integers),
            "Q" => Ok(Ring::Rationals),
            _ => match s.strip_prefix("Z/") {
                Some(n) => {
                    let n = BigInt::from_str(n)
                        .map_err(|_| ArithError::UnknownRing(s.to_string()))?;
                    Ring::integers_mod(n)
                }
                None => Err(ArithError::UnknownRing(s.to_string())),
            },
        }
    }
}
