//! Text formats for ideals, univariate polynomials, field changes and abelian groups.
//!
//! Ideal text is two lines, `ring: x,y,z` and `ideal: x^2*y, y^3`, where a newline,
//! `;` or `/` separates lines and whitespace is ignored. The ring line is optional;
//! without it the variables are taken in order of first appearance. Each format has a
//! canonical rendering that parses back to the same objects.

use crate::abelian::FiniteAbelianGroup;
use crate::error::{Error, Result};
use crate::monomial::{minimalize, Monomial, MonomialIdeal, RingContext, MAX_EXPONENT};
use crate::univariate::field::prime_power;
use crate::univariate::{FiniteField, PolyRing, UniPoly};

/// A piece of input text with its position in the original.
#[derive(Debug, Clone, Copy)]
struct Segment<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

fn segments<'a>(text: &'a str, separators: &[char]) -> Vec<Segment<'a>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let mut start = 0;
        for (pos, c) in line.char_indices() {
            if separators.contains(&c) {
                out.push(Segment {
                    line: i + 1,
                    column: start + 1,
                    text: &line[start..pos],
                });
                start = pos + c.len_utf8();
            }
        }
        out.push(Segment {
            line: i + 1,
            column: start + 1,
            text: &line[start..],
        });
    }
    out.retain(|s| !s.text.trim().is_empty());
    out
}

impl<'a> Segment<'a> {
    /// The rest of the segment after `key:`, if the segment starts with it.
    fn strip_key(&self, key: &str) -> Option<Segment<'a>> {
        let lead = self.text.len() - self.text.trim_start().len();
        let body = &self.text[lead..];
        let rest = body.strip_prefix(key)?;
        let rest_lead = rest.len() - rest.trim_start().len();
        let rest = rest.trim_start().strip_prefix(':')?;
        Some(Segment {
            line: self.line,
            column: self.column + lead + key.len() + rest_lead + 1,
            text: rest,
        })
    }

    fn cursor(&self) -> Cursor {
        Cursor {
            line: self.line,
            chars: self
                .text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .map(|(i, c)| (self.column + i, c))
                .collect(),
            end_column: self.column + self.text.len(),
            pos: 0,
        }
    }
}

/// Character cursor that skips whitespace and remembers source columns.
struct Cursor {
    line: usize,
    chars: Vec<(usize, char)>,
    end_column: usize,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.end_column, |&(col, _)| col)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column(), message)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value.saturating_mul(10).saturating_add(u64::from(d));
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        Ok(value)
    }

    fn identifier(&mut self) -> Option<String> {
        let first = self.peek()?;
        if !(first.is_ascii_alphabetic() || first == '_') {
            return None;
        }
        let mut name = String::new();
        while let Some(c) = self
            .peek()
            .filter(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            name.push(c);
            self.pos += 1;
        }
        Some(name)
    }

    fn keyword(&mut self, word: &str) -> bool {
        let save = self.pos;
        for expected in word.chars() {
            if self.bump() != Some(expected) {
                self.pos = save;
                return false;
            }
        }
        true
    }
}

/// A monomial ideal together with the names of its ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealInput {
    pub ring: RingContext,
    pub ideal: MonomialIdeal,
}

impl IdealInput {
    /// `ring: x, y` and `ideal: x^2, x*y` on two lines.
    pub fn canonical(&self) -> String {
        let gens: Vec<String> = self
            .ideal
            .generators()
            .iter()
            .map(|g| self.ring.fmt_monomial(g))
            .collect();
        format!(
            "ring: {}\nideal: {}",
            self.ring.names().join(", "),
            gens.join(", ")
        )
        .trim_end()
        .to_string()
    }
}

/// Factors as (name, exponent, line, column).
type RawMonomial = Vec<(String, u32, usize, usize)>;

fn parse_raw_monomial(cur: &mut Cursor) -> Result<RawMonomial> {
    let mut factors = Vec::new();
    loop {
        let column = cur.column();
        if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
            if cur.number()? != 1 {
                return Err(Error::parse(
                    cur.line,
                    column,
                    "coefficients are not allowed",
                ));
            }
        } else {
            let name = cur
                .identifier()
                .ok_or_else(|| cur.error("expected a variable or 1"))?;
            let exp = if cur.eat('^') {
                let e = cur.number()?;
                if e > u64::from(MAX_EXPONENT) {
                    return Err(Error::ExponentTooLarge(e));
                }
                e as u32
            } else {
                1
            };
            factors.push((name, exp, cur.line, column));
        }
        if !cur.eat('*') {
            return Ok(factors);
        }
    }
}

fn parse_generator_list(seg: &Segment) -> Result<Vec<RawMonomial>> {
    let mut cur = seg.cursor();
    let mut gens = Vec::new();
    if cur.at_end() {
        return Ok(gens);
    }
    loop {
        gens.push(parse_raw_monomial(&mut cur)?);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect_end()?;
    Ok(gens)
}

fn parse_ring_line(seg: &Segment) -> Result<RingContext> {
    let mut cur = seg.cursor();
    let mut names = Vec::new();
    loop {
        let column = cur.column();
        let name = cur
            .identifier()
            .ok_or_else(|| cur.error("expected a variable name"))?;
        if names.contains(&name) {
            return Err(Error::parse(
                cur.line,
                column,
                format!("duplicate variable {name}"),
            ));
        }
        names.push(name);
        if !cur.eat(',') {
            break;
        }
    }
    cur.expect_end()?;
    RingContext::new(names)
}

/// Parses ideal text; see the module documentation for the grammar.
pub fn parse_ideal(text: &str) -> Result<IdealInput> {
    let mut ring = None;
    let mut gens = None;
    for seg in segments(text, &['\n', ';', '/']) {
        if let Some(rest) = seg.strip_key("ring") {
            if ring.is_some() || gens.is_some() {
                return Err(Error::parse(
                    seg.line,
                    seg.column,
                    "the ring line must come first",
                ));
            }
            ring = Some(parse_ring_line(&rest)?);
        } else if gens.is_none() {
            let body = seg.strip_key("ideal").unwrap_or(seg);
            gens = Some(parse_generator_list(&body)?);
        } else {
            return Err(Error::parse(seg.line, seg.column, "unexpected extra line"));
        }
    }
    let gens = gens.unwrap_or_default();
    let ring = match ring {
        Some(r) => r,
        None => {
            let mut names: Vec<String> = Vec::new();
            for (name, ..) in gens.iter().flatten() {
                if !names.contains(name) {
                    names.push(name.clone());
                }
            }
            if names.is_empty() {
                names.push("x".to_string());
            }
            RingContext::new(names)?
        }
    };
    let n = ring.var_count();
    let mut monomials = Vec::with_capacity(gens.len());
    for raw in &gens {
        let mut exps = vec![0u32; n];
        for (name, e, line, column) in raw {
            let i = ring
                .index_of(name)
                .ok_or_else(|| Error::parse(*line, *column, format!("unknown variable {name}")))?;
            exps[i] = exps[i]
                .checked_add(*e)
                .filter(|&v| v <= MAX_EXPONENT)
                .ok_or(Error::ExponentTooLarge(u64::from(exps[i]) + u64::from(*e)))?;
        }
        monomials.push(Monomial::new(exps)?);
    }
    let ideal = minimalize(n, monomials)?;
    Ok(IdealInput { ring, ideal })
}

/// Parses `GF(q)` at the cursor and returns `q`.
fn parse_gf(cur: &mut Cursor) -> Result<u32> {
    let column = cur.column();
    if !cur.keyword("GF") {
        return Err(cur.error("expected GF(q)"));
    }
    cur.expect('(')?;
    let q = cur.number()?;
    cur.expect(')')?;
    if q > u64::from(crate::univariate::MAX_FIELD_SIZE) {
        return Err(Error::FieldTooLarge(q));
    }
    let q = q as u32;
    if prime_power(q).is_none() {
        return Err(Error::parse(
            cur.line,
            column,
            format!("{q} is not a prime power"),
        ));
    }
    Ok(q)
}

/// Recursive-descent reader for polynomial expressions in `x` with coefficients that
/// may involve the field generator `t`.
struct PolyParser<'a> {
    cur: Cursor,
    ring: PolyRing<'a>,
    /// The letter standing for the polynomial variable.
    var: char,
}

impl PolyParser<'_> {
    fn expr(&mut self) -> Result<UniPoly> {
        let mut acc = if self.cur.eat('-') {
            let t = self.term()?;
            self.ring.neg(&t)
        } else {
            self.term()?
        };
        loop {
            if self.cur.eat('+') {
                let t = self.term()?;
                acc = self.ring.add(&acc, &t);
            } else if self.cur.eat('-') {
                let t = self.term()?;
                acc = self.ring.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<UniPoly> {
        let mut acc = self.factor()?;
        loop {
            self.cur.eat('*');
            match self.cur.peek() {
                Some(c) if c == '(' || c == self.var || c == 't' || c.is_ascii_digit() => {
                    let f = self.factor()?;
                    acc = self.ring.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<UniPoly> {
        let field = self.ring.field();
        let column = self.cur.column();
        let base = match self.cur.peek() {
            Some('(') => {
                self.cur.bump();
                let inner = self.expr()?;
                self.cur.expect(')')?;
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.cur.number()?;
                UniPoly::constant(field.from_int((n % u64::from(field.characteristic())) as i64))
            }
            Some(c) if c == self.var => {
                self.cur.bump();
                UniPoly::x()
            }
            Some('t') => {
                self.cur.bump();
                let g = field.generator().ok_or_else(|| {
                    Error::parse(
                        self.cur.line,
                        column,
                        "t is only defined in an extension field",
                    )
                })?;
                UniPoly::constant(g)
            }
            Some(c) => return Err(self.cur.error(format!("unexpected '{c}'"))),
            None => return Err(self.cur.error("unexpected end of input")),
        };
        if self.cur.eat('^') {
            let e = self.cur.number()?;
            if e > 64 {
                return Err(Error::DegreeTooLarge(e as usize));
            }
            Ok(self.ring.pow(&base, e as u32))
        } else {
            Ok(base)
        }
    }
}

fn parse_poly_expr(
    seg: &Segment,
    field: &FiniteField,
    var: char,
    until: Option<&str>,
) -> Result<(UniPoly, Cursor)> {
    let mut parser = PolyParser {
        cur: seg.cursor(),
        ring: PolyRing::new(field),
        var,
    };
    let poly = parser.expr()?;
    if until.is_none() {
        parser.cur.expect_end()?;
    }
    Ok((poly, parser.cur))
}

/// A univariate polynomial with its coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialInput {
    pub field: FiniteField,
    pub poly: UniPoly,
    /// An extension field declared with `ext:`, used by field base changes.
    pub extension: Option<FiniteField>,
}

impl PolynomialInput {
    /// `f: ... over GF(q)`, preceded by the `ext:` line when an extension is involved.
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        if let Some(ext) = &self.extension {
            out.push_str(&format!(
                "ext: GF({})={}\n",
                ext.size(),
                ext.modulus_string()
            ));
        }
        out.push_str(&format!(
            "f: {} over GF({})",
            PolyRing::new(&self.field).display(&self.poly),
            self.field.size()
        ));
        out
    }
}

fn parse_ext_line(seg: &Segment) -> Result<FiniteField> {
    let mut cur = seg.cursor();
    let q = parse_gf(&mut cur)?;
    let (p, k) = prime_power(q).expect("checked by parse_gf");
    if k == 1 {
        return Err(cur.error("ext needs a proper extension"));
    }
    cur.expect('=')?;
    let rest = Segment {
        line: seg.line,
        column: cur.column(),
        text: &seg.text[cur.column() - seg.column..],
    };
    let prime = FiniteField::prime(p)?;
    let (modulus, _) = parse_poly_expr(&rest, &prime, 't', None)?;
    if modulus.degree() != Some(k as usize) || !modulus.is_monic() {
        return Err(Error::parse(
            seg.line,
            rest.column,
            format!("modulus must be monic of degree {k}"),
        ));
    }
    FiniteField::extension(p, modulus.coeffs())
}

/// Parses `f: x^2+x+1 over GF(2)`, optionally with an `ext: GF(4)=t^2+t+1` line.
pub fn parse_polynomial(text: &str) -> Result<PolynomialInput> {
    let mut extension = None;
    let mut f_line = None;
    for seg in segments(text, &['\n', ';']) {
        if let Some(rest) = seg.strip_key("ext") {
            if extension.is_some() {
                return Err(Error::parse(seg.line, seg.column, "duplicate ext line"));
            }
            extension = Some(parse_ext_line(&rest)?);
        } else if f_line.is_none() {
            f_line = Some(seg.strip_key("f").unwrap_or(seg));
        } else {
            return Err(Error::parse(seg.line, seg.column, "unexpected extra line"));
        }
    }
    let f_line = f_line.ok_or_else(|| Error::parse(1, 1, "missing polynomial"))?;
    let Some(over) = f_line.text.rfind("over") else {
        return Err(Error::parse(
            f_line.line,
            f_line.column,
            "expected 'over GF(q)'",
        ));
    };
    let tail = Segment {
        line: f_line.line,
        column: f_line.column + over + 4,
        text: &f_line.text[over + 4..],
    };
    let mut cur = tail.cursor();
    let q = parse_gf(&mut cur)?;
    cur.expect_end()?;
    let field = match &extension {
        Some(ext) if ext.size() == q => ext.clone(),
        _ => FiniteField::of_size(q)?,
    };
    let head = Segment {
        line: f_line.line,
        column: f_line.column,
        text: &f_line.text[..over],
    };
    if head.text.trim().is_empty() {
        return Err(Error::parse(head.line, head.column, "missing polynomial"));
    }
    let (poly, _) = parse_poly_expr(&head, &field, 'x', None)?;
    Ok(PolynomialInput {
        field,
        poly,
        extension,
    })
}

/// `field:GF(2)->GF(4)` or `field:->GF(4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldChange {
    pub base: Option<u32>,
    pub target: u32,
}

impl FieldChange {
    /// The base field and the target field for `input`. A declared `ext:` of the right
    /// size supplies the target modulus.
    pub fn resolve(&self, input: &PolynomialInput) -> Result<(FiniteField, FiniteField)> {
        if let Some(b) = self.base {
            if b != input.field.size() {
                return Err(Error::FieldMismatch(format!(
                    "polynomial is over GF({}), descriptor says GF({b})",
                    input.field.size()
                )));
            }
        }
        let target = match &input.extension {
            Some(ext) if ext.size() == self.target => ext.clone(),
            _ => FiniteField::of_size(self.target)?,
        };
        Ok((input.field.clone(), target))
    }
}

pub fn parse_field_change(descriptor: &str) -> Result<FieldChange> {
    let seg = Segment {
        line: 1,
        column: 1,
        text: descriptor,
    };
    let body = seg
        .strip_key("field")
        .ok_or_else(|| Error::parse(1, 1, "expected field:GF(p)->GF(q)"))?;
    let mut cur = body.cursor();
    let base = if cur.peek() == Some('-') {
        None
    } else {
        Some(parse_gf(&mut cur)?)
    };
    cur.expect('-')?;
    cur.expect('>')?;
    let target = parse_gf(&mut cur)?;
    cur.expect_end()?;
    Ok(FieldChange { base, target })
}

/// Parses `group: Z/4 + Z/2 + Z/9`; `Z/n` with composite `n` is split into primary parts.
pub fn parse_group(text: &str) -> Result<FiniteAbelianGroup> {
    let segs = segments(text, &['\n', ';']);
    let [seg] = segs.as_slice() else {
        return Err(Error::parse(1, 1, "expected a single group line"));
    };
    let body = seg.strip_key("group").unwrap_or(*seg);
    let mut cur = body.cursor();
    if cur.eat('0') {
        cur.expect_end()?;
        return Ok(FiniteAbelianGroup::trivial());
    }
    let mut orders = Vec::new();
    loop {
        let column = cur.column();
        if !cur.keyword("Z/") {
            return Err(cur.error("expected Z/n"));
        }
        let n = cur.number()?;
        if n == 0 {
            return Err(Error::parse(cur.line, column, "Z/0 is not finite"));
        }
        orders.push(n);
        if !cur.eat('+') {
            break;
        }
    }
    cur.expect_end()?;
    FiniteAbelianGroup::from_cyclic_orders(orders)
}

/// `group: Z/4 + Z/2`.
pub fn canonical_group(group: &FiniteAbelianGroup) -> String {
    format!("group: {group}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_with_ring() {
        let input = parse_ideal("ring: x,y / ideal: x^2, x*y, y^3").unwrap();
        assert_eq!(input.ring.names(), ["x", "y"]);
        assert_eq!(
            input.ideal,
            MonomialIdeal::from_exponents(2, &[&[2, 0], &[1, 1], &[0, 3]]).unwrap()
        );
        assert_eq!(input.canonical(), "ring: x, y\nideal: x^2, x*y, y^3");
        assert_eq!(parse_ideal(&input.canonical()).unwrap(), input);
    }

    #[test]
    fn ideal_inferred_ring() {
        let input = parse_ideal("ideal: x").unwrap();
        assert_eq!(input.ring.names(), ["x"]);
        let input = parse_ideal("y*x^2, x*z").unwrap();
        assert_eq!(input.ring.names(), ["y", "x", "z"]);
        let input = parse_ideal("ideal: 1").unwrap();
        assert!(input.ideal.is_unit());
        let input = parse_ideal("ring: x,y\nideal:").unwrap();
        assert!(input.ideal.is_zero());
        assert_eq!(parse_ideal(&input.canonical()).unwrap(), input);
    }

    #[test]
    fn ideal_errors_have_positions() {
        match parse_ideal("ring: x,y\nideal: x^2, w") {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 13),
            other => panic!("{other:?}"),
        }
        match parse_ideal("ring: x,y\nideal: x^2,, y") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 12)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_ideal("ideal: 3*x"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_ideal("ideal: x^2000000"),
            Err(Error::ExponentTooLarge(_))
        ));
    }

    #[test]
    fn polynomial_round_trip() {
        let input = parse_polynomial("f: x^2+x+1 over GF(2)").unwrap();
        assert_eq!(input.poly, UniPoly::new(vec![1, 1, 1]));
        assert_eq!(input.canonical(), "f: x^2 + x + 1 over GF(2)");
        assert_eq!(parse_polynomial(&input.canonical()).unwrap(), input);

        let input =
            parse_polynomial("ext: GF(4)=t^2+t+1\nf: x^2 + t*x + (t+1) over GF(4)").unwrap();
        assert_eq!(input.field.size(), 4);
        assert_eq!(parse_polynomial(&input.canonical()).unwrap(), input);

        let input = parse_polynomial("f: 2x^3 - 1 over GF(5)").unwrap();
        assert_eq!(input.poly, UniPoly::new(vec![4, 0, 0, 2]));
    }

    #[test]
    fn polynomial_errors() {
        assert!(parse_polynomial("f: x^2 + t over GF(2)").is_err());
        assert!(parse_polynomial("f: x^2 + 1").is_err());
        assert!(parse_polynomial("f: x + 1 over GF(6)").is_err());
        assert!(matches!(
            parse_polynomial("f: x + 1 over GF(4096)"),
            Err(Error::FieldTooLarge(4096))
        ));
    }

    #[test]
    fn field_descriptors() {
        assert_eq!(
            parse_field_change("field:->GF(4)").unwrap(),
            FieldChange {
                base: None,
                target: 4
            }
        );
        assert_eq!(
            parse_field_change("field:GF(2)->GF(8)").unwrap(),
            FieldChange {
                base: Some(2),
                target: 8
            }
        );
        assert!(parse_field_change("field:GF(2)").is_err());
    }

    #[test]
    fn groups() {
        let g = parse_group("group: Z/4 + Z/2 + Z/9").unwrap();
        assert_eq!(g.orders(), [4, 2, 9]);
        assert_eq!(parse_group(&canonical_group(&g)).unwrap(), g);
        assert_eq!(parse_group("Z/12").unwrap().orders(), [4, 3]);
        assert!(parse_group("group: Z/4 + 3").is_err());
        assert!(parse_group("group: Z/0").is_err());
    }
}
