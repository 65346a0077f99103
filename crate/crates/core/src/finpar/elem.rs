//! Elements of finite objects.

use std::fmt;

/// An element of a finite object.
///
/// Elements of constructed objects are built canonically from the elements
/// of the parts: product elements are ordered pairs, coproduct elements carry
/// the index of the summand they come from. The printed grammar round-trips:
/// `x0`, `*`, `(x0,y0)`, `1:x0`, `2:(x0,y0)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Elem {
    /// A named element of an atom.
    Label(String),
    /// The sole element of the terminal object, printed `*`.
    Unit,
    /// An element of a product.
    Pair(Box<Elem>, Box<Elem>),
    /// An element of a coproduct, tagged with its summand index.
    In(usize, Box<Elem>),
}

impl Elem {
    pub fn label(s: &str) -> Elem {
        Elem::Label(s.to_string())
    }

    pub fn pair(a: Elem, b: Elem) -> Elem {
        Elem::Pair(Box::new(a), Box::new(b))
    }

    pub fn tagged(summand: usize, e: Elem) -> Elem {
        Elem::In(summand, Box::new(e))
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Label(s) => write!(f, "{s}"),
            Elem::Unit => write!(f, "*"),
            Elem::Pair(a, b) => write!(f, "({a},{b})"),
            Elem::In(j, e) => write!(f, "{j}:{e}"),
        }
    }
}
