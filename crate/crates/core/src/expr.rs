//! Group expressions such as `C2 x C2 x C3`, `CP(SL(2,3),Q8)` or
//! `Quo(Q8,Cyc)`.
//!
//! ```text
//! expr := term ("x" term)*
//! term := atom | "CP(" expr "," expr ")" | "Quo(" expr ",Cyc)" | "(" expr ")"
//! atom := "C"n | "E"p"^"k | "D"n | "Q8" | "A"n | "S"n | "SL(n,q)" | "PSL(n,q)"
//!       | "PSU(3,q)" | "Sz(q)" | "M11" | "M12" | "M22" | "J1" | "K_A7"
//! ```
//!
//! Whitespace is ignored everywhere. `D`n is the dihedral group of order n.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{is_prime, prime_power};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupExpr {
    Cyclic(u32),
    Elementary { p: u32, k: u32 },
    Dihedral(u32),
    Q8,
    Alternating(u32),
    Symmetric(u32),
    SL { n: u32, q: u32 },
    PSL { n: u32, q: u32 },
    PSU { q: u32 },
    Suzuki(u32),
    M11,
    M12,
    M22,
    J1,
    KA7,
    Direct(Box<GroupExpr>, Box<GroupExpr>),
    Central(Box<GroupExpr>, Box<GroupExpr>),
    QuoCyc(Box<GroupExpr>),
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupExpr::*;
        match self {
            Cyclic(n) => write!(f, "C{n}"),
            Elementary { p, k } => write!(f, "E{p}^{k}"),
            Dihedral(n) => write!(f, "D{n}"),
            Q8 => write!(f, "Q8"),
            Alternating(n) => write!(f, "A{n}"),
            Symmetric(n) => write!(f, "S{n}"),
            SL { n, q } => write!(f, "SL({n},{q})"),
            PSL { n, q } => write!(f, "PSL({n},{q})"),
            PSU { q } => write!(f, "PSU(3,{q})"),
            Suzuki(q) => write!(f, "Sz({q})"),
            M11 => write!(f, "M11"),
            M12 => write!(f, "M12"),
            M22 => write!(f, "M22"),
            J1 => write!(f, "J1"),
            KA7 => write!(f, "K_A7"),
            Direct(a, b) => {
                write!(f, "{a} x ")?;
                if matches!(**b, Direct(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            Central(a, b) => write!(f, "CP({a},{b})"),
            QuoCyc(a) => write!(f, "Quo({a},Cyc)"),
        }
    }
}

impl std::str::FromStr for GroupExpr {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

pub fn parse(text: &str) -> Result<GroupExpr> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn syntax(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.syntax(&format!("expected `{lit}`")))
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Syntax {
                offset: start,
                message: "number out of range".into(),
            })
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut left = self.term()?;
        while self.peek() == Some(b'x') {
            self.pos += 1;
            let right = self.term()?;
            left = GroupExpr::Direct(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn pair(&mut self) -> Result<(u32, u32, usize)> {
        self.expect("(")?;
        let at = self.pos;
        let a = self.number()?;
        self.expect(",")?;
        let b = self.number()?;
        self.expect(")")?;
        Ok((a, b, at))
    }

    fn prime_power_arg(&self, q: u32, at: usize) -> Result<()> {
        if prime_power(q as u64).is_none() {
            return Err(Error::Semantic(format!(
                "q = {q} at byte {at} is not a prime power"
            )));
        }
        Ok(())
    }

    fn term(&mut self) -> Result<GroupExpr> {
        use GroupExpr::*;
        self.skip_ws();
        let start = self.pos;
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        if self.eat("CP(") {
            let a = self.expr()?;
            self.expect(",")?;
            let b = self.expr()?;
            self.expect(")")?;
            return Ok(Central(Box::new(a), Box::new(b)));
        }
        if self.eat("Quo(") {
            let a = self.expr()?;
            self.expect(",")?;
            self.expect("Cyc")?;
            self.expect(")")?;
            return Ok(QuoCyc(Box::new(a)));
        }
        for (lit, e) in [
            ("Q8", Q8),
            ("M11", M11),
            ("M12", M12),
            ("M22", M22),
            ("J1", J1),
            ("K_A7", KA7),
        ] {
            if self.eat(lit) {
                return Ok(e);
            }
        }
        if self.eat("PSL") {
            let (n, q, at) = self.pair()?;
            self.prime_power_arg(q, at)?;
            if n < 2 {
                return Err(Error::Semantic(format!("PSL needs n >= 2, got {n}")));
            }
            return Ok(PSL { n, q });
        }
        if self.eat("SL") {
            let (n, q, at) = self.pair()?;
            self.prime_power_arg(q, at)?;
            if n < 1 {
                return Err(Error::Semantic("SL needs n >= 1".into()));
            }
            return Ok(SL { n, q });
        }
        if self.eat("PSU") {
            let (n, q, at) = self.pair()?;
            if n != 3 {
                return Err(Error::Semantic(format!("only PSU(3,q) is supported, got n = {n}")));
            }
            self.prime_power_arg(q, at)?;
            return Ok(PSU { q });
        }
        if self.eat("Sz(") {
            let q = self.number()?;
            self.expect(")")?;
            let ok = matches!(prime_power(q as u64), Some((2, f)) if f % 2 == 1 && f >= 3);
            if !ok {
                return Err(Error::Semantic(format!("Sz(q) needs q = 2^(2m+1) >= 8, got {q}")));
            }
            return Ok(Suzuki(q));
        }
        let Some(c) = self.peek() else {
            return Err(self.syntax("expected a group"));
        };
        self.pos += 1;
        let e = match c {
            b'C' => {
                let n = self.number()?;
                if n == 0 {
                    return Err(Error::Semantic("C0 is not a group".into()));
                }
                Cyclic(n)
            }
            b'E' => {
                let p = self.number()?;
                self.expect("^")?;
                let k = self.number()?;
                if !is_prime(p as u64) || k == 0 {
                    return Err(Error::Semantic(format!("E{p}^{k}: need p prime and k >= 1")));
                }
                Elementary { p, k }
            }
            b'D' => {
                let n = self.number()?;
                if n < 4 || n % 2 == 1 {
                    return Err(Error::Semantic(format!(
                        "D{n}: dihedral order must be even and at least 4"
                    )));
                }
                Dihedral(n)
            }
            b'A' => Alternating(self.number()?.max(1)),
            b'S' => Symmetric(self.number()?.max(1)),
            _ => {
                self.pos = start;
                return Err(self.syntax("expected a group"));
            }
        };
        Ok(e)
    }
}
