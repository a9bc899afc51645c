//! Text form of manifolds.
//!
//! ```text
//! expr    := summand ("#" summand)*
//! summand := "S3" | "S2xS1" | "RP3" | "L(" int "," int ")"
//!          | "SFS(S2;" pair {"," pair} ")"
//! pair    := "(" int "," int ")"
//! int     := ["-"] digit+
//! ```
//!
//! Whitespace between tokens is ignored. Parsed manifolds are canonicalized,
//! so `L(7,9)` comes back as `L(7,2)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::manifold::{lens_canonical, sum_normalize, CanonicalManifold};
use crate::seifert::{Fiber, SeifertData};

impl fmt::Display for CanonicalManifold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalManifold::Sphere => f.write_str("S3"),
            CanonicalManifold::S2xS1 => f.write_str("S2xS1"),
            CanonicalManifold::RP3 => f.write_str("RP3"),
            CanonicalManifold::Lens(l) => write!(f, "L({},{})", l.p(), l.q()),
            CanonicalManifold::SeifertOverS2(s) => write!(f, "SFS(S2; {})", FiberList(s.data().fibers())),
            CanonicalManifold::ConnectedSum(sum) => {
                for (i, m) in sum.summands().iter().enumerate() {
                    if i > 0 {
                        f.write_str(" # ")?;
                    }
                    write!(f, "{m}")?;
                }
                Ok(())
            }
        }
    }
}

/// `(a,b),(c,d),...`
pub struct FiberList<'a>(pub &'a [Fiber]);

impl fmt::Display for FiberList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fib) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", fib.alpha, fib.beta)?;
        }
        Ok(())
    }
}

pub fn parse_manifold(text: &str) -> Result<CanonicalManifold> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut summands = vec![p.summand()?];
    loop {
        p.skip_ws();
        if p.at_end() {
            break;
        }
        p.expect("#")?;
        summands.push(p.summand()?);
    }
    Ok(sum_normalize(summands))
}

impl std::str::FromStr for CanonicalManifold {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_manifold(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{tok}'")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        text.parse().map_err(|_| Error::Parse {
            pos: start,
            message: format!("integer {text} out of range"),
        })
    }

    fn pair(&mut self) -> Result<(i64, i64)> {
        self.expect("(")?;
        let a = self.int()?;
        self.expect(",")?;
        let b = self.int()?;
        self.expect(")")?;
        Ok((a, b))
    }

    fn summand(&mut self) -> Result<CanonicalManifold> {
        // longest keywords first: "SFS" before "S2xS1" before "S3"
        if self.eat("SFS") {
            self.expect("(")?;
            self.expect("S2")?;
            self.expect(";")?;
            let mut pairs = vec![self.pair()?];
            while self.eat(",") {
                pairs.push(self.pair()?);
            }
            self.expect(")")?;
            let data = SeifertData::new(pairs)?;
            return CanonicalManifold::seifert(&data);
        }
        if self.eat("S2xS1") {
            return Ok(CanonicalManifold::S2xS1);
        }
        if self.eat("S3") {
            return Ok(CanonicalManifold::Sphere);
        }
        if self.eat("RP3") {
            return Ok(CanonicalManifold::RP3);
        }
        if self.eat("L") {
            let (p, q) = self.pair()?;
            return lens_canonical(p, q);
        }
        Err(self.error("expected S3, S2xS1, RP3, L(p,q) or SFS(S2; ...)"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifold::CanonicalManifold::*;

    fn parse(s: &str) -> CanonicalManifold {
        parse_manifold(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse("L(7,9)"), lens_canonical(7, 2).unwrap());
        assert_eq!(parse("S3 # RP3"), RP3);
        let s = parse("SFS(S2; (2,1),(3,1),(5,2))");
        assert_eq!(s.to_string(), "SFS(S2; (2,1),(3,1),(5,2))");
        assert_eq!(parse("  L ( -7 , 9 )#RP3 "), parse("L(7,2) # RP3"));
        assert_eq!(parse("S3"), Sphere);
        assert_eq!(parse("S2xS1"), S2xS1);
        assert_eq!(parse("L(2,1)"), RP3);
        assert_eq!(parse("SFS(S2; (1,0))"), S2xS1);
    }

    #[test]
    fn render_examples() {
        assert_eq!(parse("RP3 # L(5,2)").to_string(), "L(5,2) # RP3");
        assert_eq!(parse("RP3 # S2xS1").to_string(), "S2xS1 # RP3");
        assert_eq!(parse("SFS(S2; (5,-2))").to_string(), "SFS(S2; (1,-1),(5,3))");
        assert_eq!(parse("S3 # S3").to_string(), "S3");
    }

    #[test]
    fn syntax_errors_carry_position() {
        assert!(matches!(parse_manifold("L(7,"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_manifold("RP3 #"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_manifold("X"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_manifold("RP3 RP3"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(parse_manifold("SFS(S2; )"), Err(Error::Parse { .. })));
        assert!(matches!(parse_manifold(""), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(
            parse_manifold("L(99999999999999999999,1)"),
            Err(Error::Parse { pos: 2, .. })
        ));
    }

    #[test]
    fn invalid_parameters_are_not_syntax_errors() {
        assert_eq!(
            parse_manifold("L(6,4)"),
            Err(Error::InvalidLensParameters { p: 6, q: 4 })
        );
        assert_eq!(
            parse_manifold("SFS(S2; (4,2))"),
            Err(Error::InvalidFiber { alpha: 4, beta: 2 })
        );
    }
}
