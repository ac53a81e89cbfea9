//! Shorthand-flag grammar for function handles.
//!
//! `--handle {rawzeta|dh}`;
//! `--handle {z|p|y|o|q|x|selbergev|selbergod} --a r/q`;
//! `--handle {rawl|fchi|gchi|vplus|vminus} --q Q --chi-label L`;
//! `--handle zk --d D`;
//! `--handle zd --l l1,...,l6 --a1 r/q … --a6 r/q --q Q --chi-label L
//!    --chi-odd-q Q' --chi-odd-label L' [--n N]`.
//!
//! A `--handle` value starting with `{` is parsed as the JSON wire spec
//! instead.

use clap::Args;

use zetalab_core::composed::{ChiSpec, FunctionHandle, HandleSpec, Rational};
use zetalab_core::EvalError;

#[derive(Args, Debug)]
pub struct HandleArgs {
    /// Handle kind (or a full JSON handle spec).
    #[arg(long)]
    pub handle: String,
    /// Rational shift a = r/q (decimals rejected).
    #[arg(long)]
    pub a: Option<String>,
    /// Character modulus.
    #[arg(long)]
    pub q: Option<u64>,
    /// Canonical character label.
    #[arg(long)]
    pub chi_label: Option<u64>,
    /// Fundamental discriminant for the quadratic-field product.
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<i64>,
    /// Exponents l1,...,l6 of the composite product.
    #[arg(long)]
    pub l: Option<String>,
    #[arg(long)]
    pub a1: Option<String>,
    #[arg(long)]
    pub a2: Option<String>,
    #[arg(long)]
    pub a3: Option<String>,
    #[arg(long)]
    pub a4: Option<String>,
    #[arg(long)]
    pub a5: Option<String>,
    #[arg(long)]
    pub a6: Option<String>,
    /// Odd-character modulus for the composite product.
    #[arg(long)]
    pub chi_odd_q: Option<u64>,
    #[arg(long)]
    pub chi_odd_label: Option<u64>,
    /// Prefactor constant N (defaults to the squared series normalizer).
    #[arg(long)]
    pub n: Option<u64>,
}

impl HandleArgs {
    pub fn build(&self) -> Result<FunctionHandle, EvalError> {
        if self.handle.trim_start().starts_with('{') {
            let spec: HandleSpec = serde_json::from_str(&self.handle)
                .map_err(|e| EvalError::Domain(format!("bad handle JSON: {e}")))?;
            return spec.build();
        }
        let a = match &self.a {
            Some(text) => Some(Rational::parse(text)?),
            None => None,
        };
        let chi = match (self.q, self.chi_label) {
            (Some(q), Some(label)) => Some(ChiSpec { q, label }),
            (Some(q), None) => {
                return Err(EvalError::Domain(format!(
                    "--q {q} needs --chi-label (labels are listed by `relations --q {q}` order)"
                )))
            }
            _ => None,
        };
        let chi_odd = match (self.chi_odd_q, self.chi_odd_label) {
            (Some(q), Some(label)) => Some(ChiSpec { q, label }),
            (None, None) => None,
            _ => {
                return Err(EvalError::Domain(
                    "--chi-odd-q and --chi-odd-label go together".into(),
                ))
            }
        };
        let l = match &self.l {
            Some(text) => Some(
                text.split(',')
                    .map(|p| p.trim().parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| EvalError::Domain(format!("bad exponent list {text:?}")))?,
            ),
            None => None,
        };
        let slots = [&self.a1, &self.a2, &self.a3, &self.a4, &self.a5, &self.a6];
        let a_slots = if slots.iter().any(|s| s.is_some()) {
            let mut v = Vec::with_capacity(6);
            for (i, slot) in slots.iter().enumerate() {
                match slot {
                    Some(text) => v.push(Rational::parse(text)?),
                    None => {
                        return Err(EvalError::Domain(format!(
                            "composite product needs all six shifts; --a{} missing",
                            i + 1
                        )))
                    }
                }
            }
            Some(v)
        } else {
            None
        };
        let spec = HandleSpec {
            kind: self.handle.clone(),
            a,
            chi,
            chi_odd,
            l,
            a_slots,
            n: self.n,
            d: self.d,
        };
        spec.build()
    }
}
