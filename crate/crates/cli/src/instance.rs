//! Instance files.
//!
//! ```json
//! {"roots": ["0", "2"], "leading": "1", "C": "0", "X": ["2"]}
//! {"g": ["0", "1"], "C": "0", "X": ["-1"], "p": ["0", "1"], "lambda": "0"}
//! ```
//!
//! The algebra comes from exactly one of `g`, `u` (coefficient arrays) or
//! `roots` with `leading` (the factored `u + C`). `p`, `lambda` and `dual`
//! make it a rank-n instance, in which case `Xsub` (or `X`) is the
//! submultiset of `R \ {lambda}`.

use serde_json::Value;
use smithmod_core::serial::{multiset_from_json, object, poly_from_json, rational_from_json};
use smithmod_core::{Error, ExpModule, Poly, RankOneModule, Rational, RootMultiset, SmithAlgebra};

use crate::CliError;

pub struct Instance {
    pub roots: RootMultiset,
    pub leading: Rational,
    pub c: Rational,
    pub x: RootMultiset,
    pub xi: Rational,
    pub rank_n: Option<RankN>,
    pub oracle: bool,
    pub cap: Option<usize>,
}

pub struct RankN {
    pub p: Poly,
    pub lambda: Rational,
    pub dual: bool,
}

impl Instance {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let v: Value =
            serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("bad JSON: {e}")))?;
        let obj = object(&v)?;
        let get = |k: &str| obj.get(k);
        let c = get("C")
            .map(rational_from_json)
            .transpose()?
            .unwrap_or_else(|| Rational::from_integer(0.into()));

        let sources = ["g", "u", "roots"]
            .iter()
            .filter(|k| get(k).is_some())
            .count();
        if sources != 1 {
            return Err(CliError::Invalid(
                "give exactly one of \"g\", \"u\" or \"roots\"".into(),
            ));
        }
        let (roots, leading) = if let Some(r) = get("roots") {
            let leading = get("leading")
                .ok_or_else(|| CliError::Invalid("\"roots\" needs \"leading\"".into()))?;
            (multiset_from_json(r)?, rational_from_json(leading)?)
        } else {
            let alg = match (get("g"), get("u")) {
                (Some(g), _) => SmithAlgebra::from_g(poly_from_json(g)?)?,
                (_, Some(u)) => SmithAlgebra::from_u(poly_from_json(u)?)?,
                _ => unreachable!(),
            };
            let data = alg.central_data(&c)?;
            (data.roots, data.leading)
        };
        if roots.is_empty() {
            return Err(Error::ConstantU.into());
        }

        let x = get("Xsub")
            .or_else(|| get("X"))
            .map(multiset_from_json)
            .transpose()?
            .unwrap_or_default();
        let xi = get("xi")
            .map(rational_from_json)
            .transpose()?
            .unwrap_or_else(|| Rational::from_integer(1.into()));
        let rank_n = match get("p") {
            Some(p) => Some(RankN {
                p: poly_from_json(p)?,
                lambda: rational_from_json(
                    get("lambda")
                        .ok_or_else(|| CliError::Invalid("\"p\" needs \"lambda\"".into()))?,
                )?,
                dual: get("dual").and_then(Value::as_bool).unwrap_or(false),
            }),
            None => None,
        };
        let inst = Instance {
            roots,
            leading,
            c,
            x,
            xi,
            rank_n,
            oracle: get("oracle").and_then(Value::as_bool).unwrap_or(false),
            cap: get("cap").and_then(Value::as_u64).map(|n| n as usize),
        };
        // validate the multisets at load
        match &inst.rank_n {
            None => {
                inst.rank_one()?;
            }
            Some(_) => {
                inst.exp_module()?;
            }
        }
        Ok(inst)
    }

    pub fn rank_one(&self) -> Result<RankOneModule, CliError> {
        if self.rank_n.is_some() {
            return Err(CliError::Invalid(
                "this command needs a rank-one instance (no \"p\")".into(),
            ));
        }
        Ok(RankOneModule::build(&self.roots, &self.leading, &self.c, &self.x)?.twist(&self.xi)?)
    }

    pub fn exp_module(&self) -> Result<ExpModule, CliError> {
        let r = self
            .rank_n
            .as_ref()
            .ok_or_else(|| CliError::Invalid("this command needs \"p\" and \"lambda\"".into()))?;
        Ok(ExpModule::build(
            &r.p,
            &self.roots,
            &self.leading,
            &self.c,
            &r.lambda,
            &self.x,
            r.dual,
        )?)
    }
}
