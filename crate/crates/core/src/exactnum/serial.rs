use super::{parse_rational, rational_to_string, MPoly, Monomial, RatFrac, Var};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum SerialError {
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("exponent vector of length {got}, expected {expected}")]
    ExponentLength { got: usize, expected: usize },
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exp: Vec<u16>,
    pub coef: String,
}

/// `{"vars": [...], "terms": [{"exp": [...], "coef": "p/q"}]}`. Only the
/// variables that occur are listed, in universe order; terms ascend in
/// monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub vars: Vec<String>,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracRecord {
    pub num: PolyRecord,
    pub den: PolyRecord,
}

impl PolyRecord {
    pub fn from_poly(p: &MPoly) -> PolyRecord {
        let vars = p.variables();
        let terms = p
            .terms()
            .map(|(m, c)| TermRecord {
                exp: vars.iter().map(|v| m.exp(*v)).collect(),
                coef: rational_to_string(c),
            })
            .collect();
        PolyRecord { vars: vars.iter().map(|v| v.name()).collect(), terms }
    }

    pub fn to_poly(&self) -> Result<MPoly, SerialError> {
        let vars: Vec<Var> = self
            .vars
            .iter()
            .map(|s| Var::parse(s).ok_or_else(|| SerialError::UnknownVariable(s.clone())))
            .collect::<Result<_, _>>()?;
        let mut p = MPoly::zero();
        for t in &self.terms {
            if t.exp.len() != vars.len() {
                return Err(SerialError::ExponentLength { got: t.exp.len(), expected: vars.len() });
            }
            let mut m = Monomial::ONE;
            for (v, e) in vars.iter().zip(&t.exp) {
                m = m.with(*v, m.exp(*v) + e);
            }
            let c = parse_rational(&t.coef).ok_or_else(|| SerialError::BadRational(t.coef.clone()))?;
            p.add_term(m, c);
        }
        Ok(p)
    }
}

impl FracRecord {
    pub fn from_frac(f: &RatFrac) -> FracRecord {
        FracRecord { num: PolyRecord::from_poly(f.num()), den: PolyRecord::from_poly(f.den()) }
    }

    pub fn to_frac(&self) -> Result<RatFrac, SerialError> {
        RatFrac::new(self.num.to_poly()?, self.den.to_poly()?).map_err(|_| SerialError::ZeroDenominator)
    }
}

impl MPoly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolyRecord::from_poly(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<MPoly, SerialError> {
        serde_json::from_str::<PolyRecord>(s)?.to_poly()
    }
}

impl RatFrac {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&FracRecord::from_frac(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<RatFrac, SerialError> {
        serde_json::from_str::<FracRecord>(s)?.to_frac()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn round_trip_is_bit_exact() {
        let p = &MPoly::var(Var::B).scale(&ratio(-3, 7)) + &(&MPoly::var(Var::P(3)) * &MPoly::var(Var::N));
        let s = p.to_json();
        assert_eq!(s, r#"{"vars":["b","N","p_3"],"terms":[{"exp":[0,1,1],"coef":"1/1"},{"exp":[1,0,0],"coef":"-3/7"}]}"#);
        let q = MPoly::from_json(&s).unwrap();
        assert_eq!(q, p);
        assert_eq!(q.to_json(), s);
    }
}
